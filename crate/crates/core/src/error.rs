use thiserror::Error;

/// Errors raised while building or transforming graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid vertex name {0:?}: names must be non-empty and contain no whitespace, '(', ')' or '#'")]
    InvalidName(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("vertex name collision: {0}")]
    NameCollision(String),
    #[error("not a split partition: {0}")]
    NotSplitPartition(String),
}

/// A syntax error with a 1-based source position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Errors raised by k-expression construction and evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("join labels must differ (got {0} and {0})")]
    JoinSameLabel(u32),
    #[error("labels must be positive integers")]
    ZeroLabel,
    #[error("union needs at least two operands")]
    ShortUnion,
    #[error("vertex {0} is introduced more than once")]
    DuplicateVertex(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the component catalog.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("parameter bound violated: {0}")]
    ParameterBound(String),
    #[error("variant {0} does not apply to nonsplit graphs")]
    IllegalVariant(&'static str),
}

/// Errors raised by expression synthesis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("graph is not a cograph (it has an induced P4)")]
    NotCograph,
    #[error("component {index} is not in the unigraph catalog: {description}")]
    NotUnigraph { index: usize, description: String },
    #[error("match does not describe a {0} component")]
    WrongKind(&'static str),
    #[error("the empty graph has no expression")]
    EmptyGraph,
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the brute-force oracles and solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("size guard exceeded: {what} needs n <= {limit}, got {n}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("expression uses {0} labels; the solvers support at most 32")]
    TooManyLabels(usize),
    #[error(transparent)]
    Expr(#[from] ExprError),
}
