//! Result records: one JSON object per line, appendable to a log file.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use bandred::solve::{SearchOutcome, Witness};
use serde::{Deserialize, Serialize};

use crate::source::GraphSpec;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    pub input: GraphSpec,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub budget_nodes: u64,
    pub value: usize,
    pub lower_bound: usize,
    pub status: String,
    pub nodes_expanded: u64,
    pub elapsed_us: u64,
    /// Label of each vertex (1-based), in vertex order.
    pub witness_labels: Option<Vec<usize>>,
    /// Deleted edges as 1-based vertex pairs.
    pub deleted_edges: Option<Vec<(usize, usize)>>,
    /// Witness as board text, for grid inputs.
    pub witness_board: Option<String>,
}

impl ResultRecord {
    pub fn new(command: &str, input: GraphSpec, budget_nodes: u64, out: &SearchOutcome) -> Self {
        let (labels, deleted) = match &out.witness {
            None => (None, None),
            Some(Witness::Numbering(nu)) => (Some(nu.labels().to_vec()), None),
            Some(Witness::Deletion { edges, numbering }) => (
                Some(numbering.labels().to_vec()),
                Some(edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()),
            ),
        };
        ResultRecord {
            command: command.to_string(),
            input,
            k: None,
            t: None,
            budget_nodes,
            value: out.value,
            lower_bound: out.lower_bound,
            status: out.status.as_str().to_string(),
            nodes_expanded: out.nodes_expanded,
            elapsed_us: out.elapsed.as_micros().try_into().unwrap_or(u64::MAX),
            witness_labels: labels,
            deleted_edges: deleted,
            witness_board: None,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn append_to(&self, path: &Path) -> Result<(), CliError> {
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        writeln!(f, "{}", self.to_line()).map_err(|e| CliError::Io(e.to_string()))
    }
}
