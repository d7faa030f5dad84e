//! G1 Hermite interpolation with a single clothoid segment.
//!
//! The fit reduces to one scalar root-find whose function and derivative are
//! generalized Fresnel integrals; [`gfresnel`] evaluates those accurately for
//! every parameter regime on top of the Fresnel integrals in [`fresnel`].

pub mod cli;
pub mod clothoid;
pub mod error;
pub mod fitter;
pub mod fresnel;
pub mod gfresnel;

pub use clothoid::{ClothoidCurve, SampleRow};
pub use error::{Error, Result};
pub use fitter::{build_clothoid, FitConfig, FitResult, GuessVariant, HermiteData};
