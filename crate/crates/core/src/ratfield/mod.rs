//! Exact arithmetic over Q(x1..xn, y1..yn): multivariate polynomials and
//! canonically normalized rational functions. All values are immutable and
//! every operation is pure.

pub mod gcd;
pub mod poly;
pub mod ratfn;

pub use gcd::gcd;
pub use poly::{cmp_mono, var_x, var_y, Coef, MPoly, Mono};
pub use ratfn::RatFn;
