use std::cell::Cell;

/// Node-expansion allowance shared by nested searches.
///
/// `None` limit means unbounded. Expansions are counted even when unbounded so
/// reports can quote the work done.
#[derive(Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn unlimited() -> Self {
        Self::new(None)
    }

    pub fn limited(nodes: u64) -> Self {
        Self::new(Some(nodes))
    }

    /// Charges one expansion. Returns false once the allowance is spent.
    pub fn tick(&self) -> bool {
        let used = self.used.get();
        if let Some(limit) = self.limit {
            if used >= limit {
                return false;
            }
        }
        self.used.set(used + 1);
        true
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        matches!(self.limit, Some(l) if self.used.get() >= l)
    }
}

/// Three-valued answer of a budgeted decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Yes(W),
    No,
    Unknown,
}

impl<W> Verdict<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No)
    }

    pub fn map<U>(self, f: impl FnOnce(W) -> U) -> Verdict<U> {
        match self {
            Verdict::Yes(w) => Verdict::Yes(f(w)),
            Verdict::No => Verdict::No,
            Verdict::Unknown => Verdict::Unknown,
        }
    }
}
