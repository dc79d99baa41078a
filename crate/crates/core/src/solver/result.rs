use serde::{Deserialize, Serialize};

use super::GameValue;
use crate::game::FireTrace;

/// Serialised form of a solver run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    /// Input file name or a description of a generated graph.
    pub graph: String,
    pub f: usize,
    /// `fixed` for a given orientation, `best` for the orientation search.
    pub mode: String,
    pub beta: usize,
    pub exact: bool,
    pub witness_start: usize,
    pub n: usize,
    pub orientation: Vec<[usize; 2]>,
    pub trace: FireTrace,
    pub nodes_explored: u64,
    pub wall_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl SolveReport {
    pub fn new(graph: impl Into<String>, f: usize, mode: &str, v: &GameValue, seed: Option<u64>) -> Self {
        SolveReport {
            graph: graph.into(),
            f,
            mode: mode.to_string(),
            beta: v.beta,
            exact: v.exact,
            witness_start: v.witness_start,
            n: v.orientation.n(),
            orientation: v.orientation.arcs().into_iter().map(|(t, h)| [t, h]).collect(),
            trace: v.trace.clone(),
            nodes_explored: v.nodes_explored,
            wall_ms: v.wall_ms,
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
