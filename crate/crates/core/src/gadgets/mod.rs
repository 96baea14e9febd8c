//! The Tutte fragment and plane graphs built from it whose duals have
//! robust chromatic number 3.

mod counterexample;
pub mod export;
mod fragment;
mod verify;

pub use counterexample::{
    build_counterexample, build_with, family, AttachmentPattern, Counterexample, Facing, FragmentCopy, RingLink,
    ATTACHMENT_PATTERN,
};
pub use fragment::{tutte_fragment, verify_claim_two_factor, ClaimReport, Fragment, PathCounts, Port, Trace, FRAGMENT_ORDER};
pub use verify::{
    verify_counterexample, ClaimCheck, CutCheck, LowerBound, PigeonholeReport, StructuralChecks, VerificationReport,
};
