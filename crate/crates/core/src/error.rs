use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid two column shape: n = {n}, k = {k} (need 1 <= k <= n/2)")]
    InvalidShape { n: usize, k: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape with n = {n}, k = {k} is not a two column rectangle")]
    NonRectangularShape { n: usize, k: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("{0} is not the lower endpoint of a short edge")]
    NotAShortEdge(usize),

    #[error("matching on {n} vertices is too small to build a web (need k >= 2)")]
    DegenerateMatching { n: usize },

    #[error("invalid web: {0}")]
    InvalidWeb(String),

    #[error("the component is singular")]
    SingularComponent,

    #[error("the web is not a forest")]
    NonForestWeb,
}
