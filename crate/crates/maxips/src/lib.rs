//! Exact-arithmetic toolkit for maximal integral point sets over the integer
//! grid: plane point sets with pairwise integral distances that cannot be
//! extended by any further grid point.
//!
//! The crate provides
//!
//! - big-integer number-theoretic kernels ([`exactmath`]),
//! - exact plane geometry over the grid ([`geometry`]),
//! - normal forms under the grid isometry group ([`canon`]),
//! - Heronian triangle enumeration and grid embeddings ([`heronian`]),
//! - the two-hyperbola extension solver and maximality tests ([`extension`]),
//! - maximal clique enumeration over extension graphs ([`cliques`]),
//! - direct constructions: rectangles, rhombi, crabs, semi-crabs and circle
//!   sets ([`constructions`]),
//! - exhaustive minimum-diameter search drivers ([`search`]),
//! - point-set file I/O and SVG rendering ([`fileio`], [`svg`]).
//!
//! Everything is computed exactly; there is no floating point anywhere.
//!
//! With the default `parallel` feature the inner sweeps run on rayon; without
//! it every entry point falls back to the equivalent sequential loop.

pub mod canon;
pub mod cliques;
pub mod constructions;
pub mod exactmath;
pub mod extension;
pub mod fileio;
pub mod geometry;
pub mod heronian;
pub mod search;
pub mod svg;

mod algebra;
mod error;

pub use error::Error;

/// Arbitrary-precision signed integer; every quantity in the crate is exact.
pub type Int = num_bigint::BigInt;
/// Reduced arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

pub type Result<T> = std::result::Result<T, Error>;
