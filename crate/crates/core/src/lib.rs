//! Exact verification of alternating binomial and q-binomial sum identities.
//!
//! The crate evaluates both sides of a family of identities of the shape
//!
//! ```text
//! sum_k (-1)^k q^{e(k)} [2n+m, n+dk]  =  closed form,   d in {2, 3}
//! ```
//!
//! together with their q -> 1 shadows and the m, n -> infinity limits,
//! using arbitrary-precision integers throughout. The sign-reversing
//! involutions that explain the identities are available as checkable
//! objects over explicit subset families.
//!
//! Module map:
//! - [`exact`]: big integers, rationals, Z[i] and Z[zeta], closed-form cosines
//!   and roots-of-unity filters.
//! - [`qpoly`]: Laurent polynomials in `q^{1/2}` and truncated power series.
//! - [`qseries`]: q-Pochhammer symbols, Gaussian binomials, weighted prefactors.
//! - [`partitions`]: partitions into distinct parts from a bounded range.
//! - [`combinat`]: weighted ground sets, subset families and involutions.
//! - [`identities`]: the case registry, grid runner and JSON report.

pub mod combinat;
pub mod error;
pub mod exact;
pub mod identities;
pub mod partitions;
pub mod qpoly;
pub mod qseries;

pub use error::{Error, Result};
pub use exact::{EisenInt, GaussInt, Integer, Rational};
pub use qpoly::{QPoly, TruncSeries};

/// Tool version recorded in verification reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
