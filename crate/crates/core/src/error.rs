use std::fmt;

use crate::linalg::LinalgError;

/// Structural layers a [`crate::vcat::VCatData`] may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Category,
    Opcategory,
    LocalComonoid,
    LocalMonoid,
    Antipode,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Layer::Category => "category",
            Layer::Opcategory => "opcategory",
            Layer::LocalComonoid => "local comonoid",
            Layer::LocalMonoid => "local monoid",
            Layer::Antipode => "antipode",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("required {0} layer is missing")]
    MissingLayer(Layer),
    #[error("{what} at {index:?} has shape {found:?}, expected {expected:?}")]
    DimensionMismatch { what: String, index: Vec<usize>, expected: (usize, usize), found: (usize, usize) },
    #[error("no antipode exists (hom {pair:?} has no convolution inverse)")]
    NoAntipode { pair: (usize, usize) },
    #[error("antipode component {pair:?} is not invertible")]
    NotInvertibleAntipode { pair: (usize, usize) },
    #[error("integral family is singular: {map} at object {object} is not invertible")]
    SingularIntegral { map: &'static str, object: usize },
    #[error("data does not satisfy the {0} axioms")]
    AxiomsFailed(String),
    #[error("data is not a Hopf category: {0}")]
    NotHopf(String),
    #[error("family is not a Casimir family")]
    NotCasimir,
    #[error("invalid Frobenius system: {0}")]
    InvalidFrobeniusSystem(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("invalid graded Hopf algebra: {0}")]
    InvalidGAlgebra(String),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
