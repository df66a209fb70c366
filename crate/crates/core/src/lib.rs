//! Recognition of unigraphs, bounded clique-width expressions for them, and
//! linear-time solvers that run on those expressions.
//!
//! A unigraph is a graph determined up to isomorphism by its degree
//! sequence. Every unigraph splits into a chain of small split components
//! and one optional nonsplit tail; each piece comes from a short catalog of
//! families, and each family has a clique-width expression with at most
//! four labels. Gluing the pieces back together costs at most five labels.

pub mod catalog;
pub mod cli;
pub mod decomp;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod iso;
pub mod kexpr;
pub mod oracle;
pub mod report;
pub mod solve;
pub mod synth;

pub use error::{CatalogError, ExprError, GraphError, OracleError, ParseError, SynthError};
pub use graph::{DegreeSequence, Graph, Side, SplittedGraph};
pub use kexpr::{KExpr, Label, LabeledGraph};
pub use solve::{Problem, Solution};
