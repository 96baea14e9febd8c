//! Adjacency-list JSON: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for AdjacencyJson {
    fn from(g: &Graph) -> Self {
        AdjacencyJson { n: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<AdjacencyJson> for Graph {
    type Error = Error;

    fn try_from(j: AdjacencyJson) -> Result<Graph> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let j: AdjacencyJson = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    j.try_into()
}

pub fn emit_json(g: &Graph) -> String {
    serde_json::to_string(&AdjacencyJson::from(g)).expect("serialisable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_errors() {
        let g = parse_json(r#"{"n":3,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(emit_json(&g), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(parse_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(parse_json("[]").is_err());
    }
}
