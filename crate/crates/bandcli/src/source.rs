//! Graph families named on the command line, and graph files.

use std::fmt;
use std::path::PathBuf;

use bandred::edgelist::read_edge_list;
use bandred::families::{
    complete, complete_bipartite, cycle, double_wheel_axis, grid, path, wheel,
};
use bandred::Graph;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Grid,
    Path,
    Cycle,
    Complete,
    Wheel,
    Bipartite,
    DoubleWheel,
}

impl Family {
    fn arity(self) -> usize {
        match self {
            Family::Grid | Family::Bipartite => 2,
            Family::DoubleWheel => 0,
            _ => 1,
        }
    }
}

/// Where a graph came from, as recorded in result records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSpec {
    Family { family: Family, params: Vec<usize> },
    File { path: PathBuf },
}

impl GraphSpec {
    pub fn family(family: Family, params: Vec<usize>) -> Result<Self, CliError> {
        if params.len() != family.arity() {
            return Err(CliError::Usage(format!(
                "{family} takes {} parameter(s), got {}",
                family.arity(),
                params.len()
            )));
        }
        Ok(GraphSpec::Family { family, params })
    }

    pub fn build(&self) -> Result<Graph, CliError> {
        let (family, params) = match self {
            GraphSpec::Family { family, params } => (family, params),
            GraphSpec::File { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                return Ok(read_edge_list(&text)?);
            }
        };
        let p = |i: usize| params[i];
        Ok(match family {
            Family::Grid => grid(p(0), p(1))?,
            Family::Path => path(p(0))?,
            Family::Cycle => cycle(p(0))?,
            Family::Complete => complete(p(0))?,
            Family::Wheel => wheel(p(0))?,
            Family::Bipartite => complete_bipartite(p(0), p(1))?,
            Family::DoubleWheel => double_wheel_axis(),
        })
    }

    /// Columns and rows, when the graph is a grid.
    pub fn grid_shape(&self) -> Option<(usize, usize)> {
        match self {
            GraphSpec::Family {
                family: Family::Grid,
                params,
            } => Some((params[0], params[1])),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use clap::ValueEnum;
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}
