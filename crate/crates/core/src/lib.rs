//! arfinsler: an exact symbolic engine for Finsler geometry.
//!
//! The engine represents a metric's square F^2 inside the algebraic
//! extension K = Q(x,y)[theta]/(theta^m - A) of a multivariate rational
//! function field, computes the classical tensors (spray, Barthel and
//! Berwald connections, Douglas, Landsberg, Riemann, Weyl, chi, S- and
//! E-curvature) with exact arithmetic, detects the almost-rational
//! factorization g_ij = eta * a_ij, and mechanically checks rationality
//! and consequence claims on a catalog of metric families.

pub mod algext;
pub mod ar;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod numeric;
pub mod ratfield;

pub use error::{Error, Result};
