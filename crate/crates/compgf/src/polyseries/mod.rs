//! Truncated power series in `x` over the ring of integer polynomials in the
//! four marker variables `y`, `r`, `l`, `d`.
//!
//! A counting series stores, at each x-degree `n`, a [`MarkerPoly`] whose
//! term `y^m r^i l^j d^h -> c` says that `c` objects of size `n` have `m`
//! parts, `i` rises, `j` levels and `h` drops. All arithmetic is exact;
//! coefficients are arbitrary-precision integers.

mod marker_poly;
mod series;

pub use marker_poly::MarkerPoly;
pub use series::TruncatedSeries;

/// One of the four marker variables.
///
/// The index order (parts, rises, levels, drops) is also the canonical
/// exponent-vector order used for display and for comparison with oracle
/// joint distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    Parts,
    Rises,
    Levels,
    Drops,
}

impl Marker {
    pub const ALL: [Marker; 4] = [Marker::Parts, Marker::Rises, Marker::Levels, Marker::Drops];

    pub(crate) fn index(self) -> usize {
        match self {
            Marker::Parts => 0,
            Marker::Rises => 1,
            Marker::Levels => 2,
            Marker::Drops => 3,
        }
    }

    /// Single-letter variable name used in printed series.
    pub fn symbol(self) -> char {
        match self {
            Marker::Parts => 'y',
            Marker::Rises => 'r',
            Marker::Levels => 'l',
            Marker::Drops => 'd',
        }
    }
}

/// Exponent vector of a marker term, ordered (parts, rises, levels, drops).
pub type Exponents = [u32; 4];
