//! Exact generating functions for compositions of an integer with parts in
//! an arbitrary alphabet, tracking the number of parts, rises, levels and
//! drops.
//!
//! The crate has three layers:
//!
//! - [`polyseries`] is the arithmetic substrate: truncated power series in
//!   `x` whose coefficients are sparse integer polynomials in the marker
//!   variables `y` (parts), `r` (rises), `l` (levels) and `d` (drops).
//! - [`engine`] builds the tracked series for compositions, palindromic
//!   compositions, Carlitz compositions, Carlitz palindromes and partitions
//!   over any [`partsets::PartSet`], twice: from the closed formula and by
//!   solving the defining linear system. Totals and second factorial
//!   moments come out by marker differentiation.
//! - [`oracle`] enumerates the same objects by brute force and [`catalog`]
//!   holds every specialized closed form, so [`checks`] can confront the
//!   engine with ground truth and audit the closed forms (two of which are
//!   misprints and are expected to fail).
//!
//! Everything is exact: coefficients are arbitrary-precision integers and
//! no floating point appears anywhere.

pub mod catalog;
pub mod checks;
pub mod engine;
mod error;
pub mod oracle;
pub mod partsets;
pub mod polyseries;

pub use error::{Error, Result};
