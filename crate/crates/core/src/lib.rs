//! Random tilings of Aztec diamonds, skew-Aztec rectangles and cut hexagons,
//! together with the determinantal machinery that describes them: exact
//! counting and enumeration oracles, exact and Monte Carlo samplers,
//! correlation kernels (finite-size and asymptotic), contour-integral
//! quadrature, and cross-validation studies.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! domains -> tilings -> enumerate (exact oracle)
//!                    -> sample    (shuffling / MCMC / sequential)
//! quadrature -> kernels -> laws -> verify
//! ```
//!
//! Everything exact is carried out in big-integer / big-rational arithmetic;
//! everything asymptotic goes through [`quadrature`] and reports an error
//! estimate next to each value.

pub mod domains;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod kernels;
pub mod laws;
pub mod linalg;
pub mod quadrature;
pub mod render;
pub mod sample;
pub mod tilings;
pub mod verify;

pub use domains::{DomainSpec, Frame, LatticePoint, StripParams, TilabilityCase};
pub use error::Error;
pub use tilings::{DotFamily, DotProcess, HeightField, InterlacingReport, Tiling};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
