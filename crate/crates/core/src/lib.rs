//! Adjacency eigenvalues of outerplanar graphs: the extremal constructions,
//! outerplanarity certificates, a dense symmetric eigensolver, two-hub
//! characteristic series with certified tails, exhaustive and structured
//! searches for `λ_k` maximizers, and a verification harness.
//!
//! Numeric code is generic over the scalar. Exact series work in
//! [`Exact`]; the eigensolver takes any [`scalar::Real`].

pub mod constructions;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod outerplanar;
pub mod report;
pub mod scalar;
pub mod search;
pub mod series;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

/// Exact rational scalar.
pub type Exact = num_rational::BigRational;

pub type Spectrum64 = eigen::Spectrum<f64>;
pub type Spectrum32 = eigen::Spectrum<f32>;
pub type EigenPair64 = eigen::EigenPair<f64>;

pub type ExactSeries = series::SeriesEquation<Exact>;
pub type Series64 = series::SeriesEquation<f64>;
pub type Series32 = series::SeriesEquation<f32>;
pub type ExactSplit = series::SplitSeries<Exact>;
pub type ExactExpansion = series::RootExpansion<Exact>;
