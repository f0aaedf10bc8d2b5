//! Exact adjacency null spaces of trees and unicyclic graphs, their null
//! decomposition into support, core and N-vertices, and closed formulas for
//! the independence and matching numbers, cross-checked against brute force.

pub mod campaign;
pub mod checks;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod tree;
pub mod unicyclic;

pub use campaign::{run_campaign, CampaignSpec, Execution};
pub use checks::{run_checks, CheckConfig, CheckOutcome};
pub use decomp::{analyze, AnalysisReport, Case, Decomposition, GraphClass};
pub use error::{GenerateError, GraphError, NullError, OracleError, ParseError};
pub use generate::{generate, ClassBias, GeneratorSpec};
pub use graph::{parse_edge_list, CycleInfo, Graph, VertexSet};
pub use linalg::{Rational, RationalMatrix, RationalVector};
pub use oracle::OracleBudget;
pub use unicyclic::{classify, NullBasis, Provenance, UnicyclicClass, UnicyclicType};
