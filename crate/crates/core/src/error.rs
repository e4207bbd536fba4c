use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    NonPositiveWeight { u: usize, v: usize, weight: f64 },
    InvalidMotif(&'static str),
    UnknownMotif,
    KindMismatch,
    /// An instance refers to an edge that is not in the graph.
    StaleInstance { u: usize, v: usize },
    InvalidCut,
    CutLimit { n: usize, limit: usize },
    EnumerationLimit { limit: usize },
    MotifTooLarge { r: usize, limit: usize },
    /// The tuple graph used for enumeration-free motif weights would exceed the memory budget.
    BudgetExceeded { required: usize, budget: usize },
    ExactLimit { n: usize, limit: usize },
    InvalidConfig(&'static str),
    InvalidArgument(&'static str),
    /// A runtime check of a proven bound failed.
    BoundViolated { what: &'static str, value: f64, bound: f64 },
}

impl Error {
    /// True for errors caused by a configured size or memory limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CutLimit { .. }
                | Error::EnumerationLimit { .. }
                | Error::MotifTooLarge { .. }
                | Error::BudgetExceeded { .. }
                | Error::ExactLimit { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::NonPositiveWeight { u, v, weight } => {
                write!(f, "edge ({u}, {v}) has non-positive weight {weight}")
            }
            Error::InvalidMotif(why) => write!(f, "invalid motif: {why}"),
            Error::UnknownMotif => write!(f, "unknown motif"),
            Error::KindMismatch => write!(f, "graph and motif kinds do not match"),
            Error::StaleInstance { u, v } => {
                write!(f, "instance edge ({u}, {v}) is missing from the graph")
            }
            Error::InvalidCut => write!(f, "cut side must be a nonempty proper vertex subset"),
            Error::CutLimit { n, limit } => {
                write!(f, "{n} vertices exceed the exhaustive cut limit of {limit}")
            }
            Error::EnumerationLimit { limit } => {
                write!(f, "more than {limit} motif instances")
            }
            Error::MotifTooLarge { r, limit } => {
                write!(f, "motif with {r} vertices exceeds the limit of {limit}")
            }
            Error::BudgetExceeded { required, budget } => {
                write!(f, "tuple graph needs {required} entries, budget is {budget}")
            }
            Error::ExactLimit { n, limit } => {
                write!(f, "{n} vertices exceed the exact computation limit of {limit}")
            }
            Error::InvalidConfig(why) => write!(f, "invalid configuration: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::BoundViolated { what, value, bound } => {
                write!(f, "{what}: {value} exceeds bound {bound}")
            }
        }
    }
}

impl core::error::Error for Error {}
