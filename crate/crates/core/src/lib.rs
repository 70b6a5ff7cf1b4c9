//! Exact computations around stable omalous bundles.
//!
//! * [`exactmath`]: rationals, sparse multivariate polynomials, Gröbner bases,
//!   rational functions and exact matrix rank.
//! * [`surface`]: numeric invariants of polarized surfaces, in particular smooth
//!   hypersurfaces of degree `d` in `P^3`.
//! * [`liqin`]: the Li–Qin existence bound, goodness certificates and the
//!   degree threshold `d0` beyond which every hypersurface is good.
//! * [`cayley_bacharach`]: exact Cayley–Bacharach checks for reduced 0-cycles
//!   and certificates for the extensions built from them.
//! * [`qsc`]: quotient-ring presentations of quantum cohomology, including the
//!   deformed quadric family.

pub mod cayley_bacharach;
pub mod error;
pub mod exactmath;
pub mod liqin;
pub mod qsc;
pub mod surface;

pub use error::{Error, Result};
