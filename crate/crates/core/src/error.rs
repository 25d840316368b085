use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph contains a triangle; the per-edge formula requires a triangle-free graph")]
    NotTriangleFree,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("construction audit failed: {0}")]
    Audit(String),

    #[error("exhaustive enumeration on {n} vertices ({edges} edge slots) refused without an explicit override (limit {limit})")]
    SearchRefused { n: usize, edges: usize, limit: usize },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
