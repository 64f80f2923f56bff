//! Batch verification, reports and the command implementations behind the
//! `edd` binary.
//!
//! Every command returns a serializable value; the binary only parses
//! flags, reads input and writes output.  [`HarnessError::exit_code`] maps
//! failures onto the process exit codes.

mod bench;
mod cache;
mod compute;
mod conjecture;
mod generate;
mod report;
mod verify;

use thiserror::Error;

pub use bench::{cmd_bench, random_tree, BenchRow, BenchTable, BENCH_SIZE_LIMIT};
pub use cache::{CacheKey, ResultsCache};
pub use compute::{cmd_compute, ComputeReport, Method};
pub use conjecture::{cmd_scan_conjectures, ConjectureReport, ConjectureScan, SCAN_LIMIT};
pub use generate::{cmd_generate, FamilySpec, Generated};
pub use report::{Corpus, Timing, TheoremVerdict, TreeRecord, VerificationReport};
pub use verify::{cmd_verify, record_for, Theorem, VerifyOptions};

use crate::domination::DominationError;
use crate::error::{GraphError, ParseError};
use crate::families::FamilyError;
use crate::graph::{io, Graph};
use crate::oracle::OracleError;

/// Version stamped into every JSON document the harness writes.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Input(String),
    /// A size or resource guard refused the request.
    #[error("refused: {0}")]
    Guard(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Guard(_) => EXIT_GUARD,
            HarnessError::Family(FamilyError::EnumerationLimit { .. }) => EXIT_GUARD,
            _ => EXIT_INPUT,
        }
    }
}

impl From<OracleError> for HarnessError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::LimitExceeded { .. } | OracleError::Domination(_) => {
                HarnessError::Guard(e.to_string())
            }
            other => HarnessError::Input(other.to_string()),
        }
    }
}

impl From<DominationError> for HarnessError {
    fn from(e: DominationError) -> Self {
        HarnessError::Guard(e.to_string())
    }
}

/// Graph serialization formats understood by the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "graph6" => Ok(Format::Graph6),
            other => Err(HarnessError::Input(format!("unknown format {other:?}"))),
        }
    }
}

/// Parses one graph.  `#` lines are comments in both formats; graph6 input
/// takes the first remaining line.
pub fn read_graph(text: &str, format: Option<Format>) -> Result<Graph, HarnessError> {
    match format {
        None => Ok(io::parse_any(text)?),
        Some(Format::EdgeList) => Ok(io::parse_edge_list(text)?),
        Some(Format::Graph6) => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .ok_or(ParseError::Truncated)?;
            Ok(io::parse_graph6(line)?)
        }
    }
}

/// Writes a graph, with every header line turned into a `#` comment.
pub fn write_graph(g: &Graph, format: Format, header: &[String]) -> String {
    let mut out: String = header.iter().map(|h| format!("# {h}\n")).collect();
    match format {
        Format::EdgeList => out.push_str(&io::emit_edge_list(g)),
        Format::Graph6 => {
            out.push_str(&io::emit_graph6(g));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_io_with_headers() {
        let g = Graph::path(4);
        for format in [Format::EdgeList, Format::Graph6] {
            let text = write_graph(&g, format, &["family=path".into()]);
            assert!(text.starts_with("# family=path\n"));
            assert_eq!(read_graph(&text, Some(format)).unwrap(), g);
            assert_eq!(read_graph(&text, None).unwrap(), g);
        }
        assert!(matches!(
            read_graph("0 1\n1 1\n", Some(Format::EdgeList)),
            Err(HarnessError::Parse(_))
        ));
        assert!("dot".parse::<Format>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(HarnessError::Guard("x".into()).exit_code(), EXIT_GUARD);
        assert_eq!(HarnessError::Input("x".into()).exit_code(), EXIT_INPUT);
        let limit = OracleError::LimitExceeded {
            what: "n",
            value: 20,
            limit: 12,
        };
        assert_eq!(HarnessError::from(limit).exit_code(), EXIT_GUARD);
        assert_eq!(HarnessError::from(OracleError::Disconnected).exit_code(), EXIT_INPUT);
    }
}
