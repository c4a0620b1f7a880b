//! Construction of the tracked generating functions and extraction of
//! statistic totals.
//!
//! `comp_gf` evaluates the closed five-variable formula for compositions
//! directly; `comp_gf_via_system` solves the defining linear system over the
//! series ring instead and must agree with it, which is the crate's main
//! differential test. The remaining classes are fixed marker substitutions
//! of these two base families and are built that way, not re-derived.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partsets::PartSet;
use crate::polyseries::{Marker, MarkerPoly, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CompositionClass {
    Compositions,
    Palindromes,
    Carlitz,
    CarlitzPalindromes,
    Partitions,
}

impl CompositionClass {
    pub const ALL: [CompositionClass; 5] = [
        CompositionClass::Compositions,
        CompositionClass::Palindromes,
        CompositionClass::Carlitz,
        CompositionClass::CarlitzPalindromes,
        CompositionClass::Partitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompositionClass::Compositions => "compositions",
            CompositionClass::Palindromes => "palindromes",
            CompositionClass::Carlitz => "carlitz",
            CompositionClass::CarlitzPalindromes => "carlitz-palindromes",
            CompositionClass::Partitions => "partitions",
        }
    }
}

impl fmt::Display for CompositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StatisticName {
    Parts,
    Rises,
    Levels,
    Drops,
}

impl StatisticName {
    pub const ALL: [StatisticName; 4] = [
        StatisticName::Parts,
        StatisticName::Rises,
        StatisticName::Levels,
        StatisticName::Drops,
    ];

    /// The marker variable whose exponent records this statistic.
    pub fn marker(self) -> Marker {
        match self {
            StatisticName::Parts => Marker::Parts,
            StatisticName::Rises => Marker::Rises,
            StatisticName::Levels => Marker::Levels,
            StatisticName::Drops => Marker::Drops,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StatisticName::Parts => "parts",
            StatisticName::Rises => "rises",
            StatisticName::Levels => "levels",
            StatisticName::Drops => "drops",
        }
    }
}

impl fmt::Display for StatisticName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn marker(m: Marker) -> MarkerPoly {
    MarkerPoly::marker(m)
}

fn ok(r: Result<TruncatedSeries>) -> TruncatedSeries {
    r.expect("engine arithmetic stays at one truncation order")
}

/// The five-variable generating function for compositions with parts in
/// `a`: the coefficient of `x^n y^m r^i l^j d^h` counts compositions of `n`
/// with `m` parts, `i` rises, `j` levels and `h` drops, for all `n` up to
/// `order`.
///
/// Evaluates, with `b_j = x^{a_j} y`,
///
/// ```text
///           1 + (1-d) * S
///   C_A  =  -------------          S = sum_j  b_j/(1 - b_j(l-d)) * prod_{i<j} (1 - b_i(l-r))/(1 - b_i(l-d))
///             1 - d * S
/// ```
///
/// The running product over `i < j` is updated incrementally, so the whole
/// construction costs O(k) series multiplications for k materialized parts.
pub fn comp_gf(a: &PartSet, order: usize) -> TruncatedSeries {
    let l_minus_d = &marker(Marker::Levels) - &marker(Marker::Drops);
    let l_minus_r = &marker(Marker::Levels) - &marker(Marker::Rises);
    let d = marker(Marker::Drops);
    let one = TruncatedSeries::one(order);

    let mut sum = TruncatedSeries::zero(order);
    let mut running = one.clone();
    for &part in &a.materialize(order) {
        let b = TruncatedSeries::monomial(order, part as usize, marker(Marker::Parts));
        let inv_ld = ok(ok(one.sub(&b.scale(&l_minus_d))).recip());
        let term = ok(ok(b.mul(&inv_ld)).mul(&running));
        sum = ok(sum.add(&term));
        running = ok(ok(running.mul(&ok(one.sub(&b.scale(&l_minus_r))))).mul(&inv_ld));
    }

    let numerator = ok(one.add(&sum.scale(&(&MarkerPoly::one() - &d))));
    let denominator = ok(one.sub(&sum.scale(&d)));
    ok(numerator.mul(&ok(denominator.recip())))
}

/// Same series as [`comp_gf`], computed by assembling the defining
/// `(k+1) x (k+1)` linear system in the unknowns
/// `t_0 = C_A, t_i = C_A(a_i | ...)` and solving it by forward elimination
/// in natural order over the series ring.
///
/// Row 0 is `t_0 - t_1 - ... - t_k = 1`; row i has `-b_i d` left of the
/// diagonal, `1 - b_i l` on it, `-b_i r` right of it, and right-hand side
/// `b_i`. Every pivot keeps constant term 1 because all off-diagonal
/// entries have a positive power of `x`.
#[allow(clippy::needless_range_loop)] // elimination reads two rows by index
pub fn comp_gf_via_system(a: &PartSet, order: usize) -> TruncatedSeries {
    let parts = a.materialize(order);
    let k = parts.len();
    let one = TruncatedSeries::one(order);
    let zero = TruncatedSeries::zero(order);

    let mut matrix = vec![vec![zero.clone(); k + 1]; k + 1];
    let mut rhs = vec![zero.clone(); k + 1];
    matrix[0][0] = one.clone();
    for col in 1..=k {
        matrix[0][col] = one.neg();
    }
    rhs[0] = one.clone();
    for (i, &part) in parts.iter().enumerate() {
        let row = i + 1;
        let b = TruncatedSeries::monomial(order, part as usize, marker(Marker::Parts));
        for col in 1..=k {
            matrix[row][col] = match col.cmp(&row) {
                std::cmp::Ordering::Less => b.scale(&marker(Marker::Drops)).neg(),
                std::cmp::Ordering::Equal => ok(one.sub(&b.scale(&marker(Marker::Levels)))),
                std::cmp::Ordering::Greater => b.scale(&marker(Marker::Rises)).neg(),
            };
        }
        rhs[row] = b;
    }

    // forward elimination, no pivoting
    for col in 0..=k {
        assert!(
            matrix[col][col].coeff(0).expect("degree 0").is_one(),
            "pivot lost its unit constant term"
        );
        let pivot_inv = ok(matrix[col][col].recip());
        for row in col + 1..=k {
            if matrix[row][col].is_zero() {
                continue;
            }
            let factor = ok(matrix[row][col].mul(&pivot_inv));
            for j in col..=k {
                if matrix[col][j].is_zero() {
                    continue;
                }
                let delta = ok(factor.mul(&matrix[col][j]));
                matrix[row][j] = ok(matrix[row][j].sub(&delta));
            }
            let delta = ok(factor.mul(&rhs[col]));
            rhs[row] = ok(rhs[row].sub(&delta));
        }
    }

    // back substitution
    let mut solution = vec![zero; k + 1];
    for row in (0..=k).rev() {
        let mut value = rhs[row].clone();
        for j in row + 1..=k {
            if matrix[row][j].is_zero() || solution[j].is_zero() {
                continue;
            }
            value = ok(value.sub(&ok(matrix[row][j].mul(&solution[j]))));
        }
        solution[row] = ok(value.mul(&ok(matrix[row][row].recip())));
    }
    solution.swap_remove(0)
}

/// The five-variable generating function for palindromic compositions:
///
/// ```text
///          1 + sum_i (x^{a_i} y + x^{2 a_i} y^2 (l - d r)) / (1 - x^{2 a_i} y^2 (l^2 - d r))
///   P_A =  ------------------------------------------------------------------------------
///              1 - sum_i (x^{2 a_i} y^2 d r) / (1 - x^{2 a_i} y^2 (l^2 - d r))
/// ```
pub fn pal_gf(a: &PartSet, order: usize) -> TruncatedSeries {
    let y = marker(Marker::Parts);
    let y2 = &y * &y;
    let l = marker(Marker::Levels);
    let dr = &marker(Marker::Drops) * &marker(Marker::Rises);
    let l2_minus_dr = &(&l * &l) - &dr;
    let l_minus_dr = &l - &dr;
    let one = TruncatedSeries::one(order);

    let mut num_sum = TruncatedSeries::zero(order);
    let mut den_sum = TruncatedSeries::zero(order);
    for &part in &a.materialize(order) {
        let single = TruncatedSeries::monomial(order, part as usize, y.clone());
        let double = TruncatedSeries::monomial(order, 2 * part as usize, y2.clone());
        let q = ok(ok(one.sub(&double.scale(&l2_minus_dr))).recip());
        num_sum = ok(num_sum.add(&ok(ok(single.add(&double.scale(&l_minus_dr))).mul(&q))));
        den_sum = ok(den_sum.add(&ok(double.scale(&dr).mul(&q))));
    }

    let numerator = ok(one.add(&num_sum));
    let denominator = ok(one.sub(&den_sum));
    ok(numerator.mul(&ok(denominator.recip())))
}

/// Carlitz compositions: compositions with no levels, so the composition
/// series with `l` substituted by 0.
pub fn carlitz_gf(a: &PartSet, order: usize) -> TruncatedSeries {
    comp_gf(a, order).eval_marker(Marker::Levels, 0)
}

/// Carlitz palindromic compositions: the palindrome series at `l = 0`,
/// `d = 1` (rises alone determine drops in a palindrome).
pub fn carlitz_pal_gf(a: &PartSet, order: usize) -> TruncatedSeries {
    pal_gf(a, order)
        .eval_marker(Marker::Levels, 0)
        .eval_marker(Marker::Drops, 1)
}

/// Partitions, encoded as weakly decreasing compositions: the composition
/// series with `r` substituted by 0.
pub fn partition_gf(a: &PartSet, order: usize) -> TruncatedSeries {
    comp_gf(a, order).eval_marker(Marker::Rises, 0)
}

/// The class's generating function in its standard form, including any
/// marker substitutions that are part of the definition (`d = 1` for
/// Carlitz palindromes).
pub fn class_gf(class: CompositionClass, a: &PartSet, order: usize) -> TruncatedSeries {
    match class {
        CompositionClass::Compositions => comp_gf(a, order),
        CompositionClass::Palindromes => pal_gf(a, order),
        CompositionClass::Carlitz => carlitz_gf(a, order),
        CompositionClass::CarlitzPalindromes => carlitz_pal_gf(a, order),
        CompositionClass::Partitions => partition_gf(a, order),
    }
}

/// The class's joint-statistics view: only the zero substitutions that
/// define the class are applied, so every statistic that can vary on the
/// class keeps its marker. This is the series that matches the oracle's
/// joint distributions key for key.
pub fn joint_gf(class: CompositionClass, a: &PartSet, order: usize) -> TruncatedSeries {
    match class {
        CompositionClass::Compositions => comp_gf(a, order),
        CompositionClass::Palindromes => pal_gf(a, order),
        CompositionClass::Carlitz => carlitz_gf(a, order),
        CompositionClass::CarlitzPalindromes => pal_gf(a, order).eval_marker(Marker::Levels, 0),
        CompositionClass::Partitions => partition_gf(a, order),
    }
}

fn check_compatible(class: CompositionClass, stat: StatisticName) -> Result<()> {
    let zero_by_definition = matches!(
        (class, stat),
        (
            CompositionClass::Carlitz | CompositionClass::CarlitzPalindromes,
            StatisticName::Levels
        ) | (CompositionClass::Partitions, StatisticName::Rises)
    );
    if zero_by_definition {
        Err(Error::IncompatibleStatistic { class, stat })
    } else {
        Ok(())
    }
}

fn collapse_markers(series: TruncatedSeries, keep_parts: bool) -> TruncatedSeries {
    let mut out = series
        .eval_marker(Marker::Rises, 1)
        .eval_marker(Marker::Levels, 1)
        .eval_marker(Marker::Drops, 1);
    if !keep_parts {
        out = out.eval_marker(Marker::Parts, 1);
    }
    out
}

/// Series whose coefficient of `x^n` is the total of `stat` over all
/// objects of the class of size `n`, obtained by differentiating the
/// tracked series with respect to the statistic's marker and then setting
/// every statistic marker to 1. With `keep_parts` the `y` marker survives,
/// so per-parts slices can be taken afterwards.
///
/// Statistics that are identically zero on the class (levels on Carlitz
/// classes, rises on partitions) are rejected rather than answered with a
/// zero series.
pub fn statistic_total(
    class: CompositionClass,
    a: &PartSet,
    stat: StatisticName,
    order: usize,
    keep_parts: bool,
) -> Result<TruncatedSeries> {
    check_compatible(class, stat)?;
    let tracked = joint_gf(class, a, order);
    Ok(collapse_markers(
        tracked.diff_marker(stat.marker()),
        keep_parts,
    ))
}

/// Second factorial moment: the coefficient of `x^n` is
/// `sum stat(o) (stat(o) - 1)` over the class's objects of size `n`, via
/// double differentiation.
pub fn moment_total(
    class: CompositionClass,
    a: &PartSet,
    stat: StatisticName,
    order: usize,
) -> Result<TruncatedSeries> {
    check_compatible(class, stat)?;
    let tracked = joint_gf(class, a, order);
    let m = stat.marker();
    Ok(collapse_markers(
        tracked.diff_marker(m).diff_marker(m),
        false,
    ))
}

/// Extract the `y^m` layer of a series whose only remaining marker is `y`,
/// leaving a series over plain integers.
pub fn per_parts_slice(series: &TruncatedSeries, m: u32) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(series.order() + 1);
    for poly in series.coeffs() {
        let mut layer = BigInt::from(0);
        for (expos, coeff) in poly.iter() {
            if expos[1] != 0 || expos[2] != 0 || expos[3] != 0 {
                return Err(Error::ResidualMarkers);
            }
            if expos[0] == m {
                layer += coeff;
            }
        }
        coeffs.push(MarkerPoly::constant(layer));
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}
