//! Hopf and Frobenius structure on categories enriched in finite-dimensional
//! rational vector spaces, with exact arithmetic throughout.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod gallery;
pub mod hopf;
pub mod hopf_modules;
pub mod integrals;
pub mod io;
pub mod larson_sweedler;
pub mod linalg;
pub mod report;
pub mod vcat;

pub use error::{Error, Layer, Result};
pub use linalg::{Matrix, Rational};
pub use report::AxiomReport;
