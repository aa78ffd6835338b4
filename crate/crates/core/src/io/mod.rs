//! File formats and the corpus survey.

mod edge_list;
mod planar_code;
mod survey;

use thiserror::Error;

use crate::graph::GraphError;

pub use edge_list::{edge_list_string, read_edge_list, write_edge_list};
pub use planar_code::{parse_planar_code, read_planar_code, write_planar_code, PLANAR_CODE_HEADER};
pub use survey::{survey, survey_csv, survey_table, SurveyOptions, SurveyRow, SURVEY_CSV_HEADER};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were listed")]
    InconsistentCounts { declared: usize, found: usize },
    #[error("unrecognised planar_code header {0:?}")]
    BadHeader(String),
    #[error("stream ends inside graph {graph}")]
    TruncatedStream { graph: usize },
    #[error("graph {graph}: vertex {u} lists {v} but not vice versa")]
    AsymmetricAdjacency { graph: usize, u: usize, v: usize },
    #[error("graph {graph}: neighbor {neighbor} out of range 1..={n}")]
    BadNeighbor { graph: usize, neighbor: usize, n: usize },
    #[error("graph {graph}: only graphs with 1..=255 vertices are supported")]
    UnsupportedSize { graph: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
