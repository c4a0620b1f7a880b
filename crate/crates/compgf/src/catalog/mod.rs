//! Ledger of the specialized closed forms: every displayed rational
//! function and counting formula, each tagged with its source anchor and
//! expandable to a series for comparison against the engine.
//!
//! The catalog is data, not a computation path: the engine never reads it.
//! It exists to audit the closed forms. Two entries ship pre-flagged as
//! suspect; the audit expects exactly those to mismatch and records the
//! first differing degree.

mod entries;
mod poly;

pub use entries::standard_catalog;
pub use poly::{Poly, RationalGf};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::engine::{self, CompositionClass, StatisticName};
use crate::error::Result;
use crate::partsets::PartSet;
use crate::polyseries::{Marker, TruncatedSeries};

/// What an entry's series counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// Number of objects per size.
    Count,
    /// Number of objects with no levels per size (distinct adjacent parts).
    LevelFreeCount,
    /// Total of a statistic over all objects per size.
    Total(StatisticName),
    /// Second factorial moment of a statistic per size.
    SecondFactorialMoment(StatisticName),
}

impl Quantity {
    pub fn label(&self) -> String {
        match self {
            Quantity::Count => "count".to_string(),
            Quantity::LevelFreeCount => "count-distinct-adjacent".to_string(),
            Quantity::Total(s) => s.name().to_string(),
            Quantity::SecondFactorialMoment(s) => format!("{}-2nd-moment", s.name()),
        }
    }
}

/// Closed form for one coefficient sequence.
pub enum ClosedForm {
    Rational(RationalGf),
    /// Explicit counting formula, asserted for `n >= min_n` only.
    Count {
        min_n: usize,
        f: Box<dyn Fn(usize) -> BigInt + Send + Sync>,
    },
}

pub struct CatalogEntry {
    /// Stable identifier, e.g. `comp.rises.one-k.gf[k=3]`.
    pub id: String,
    pub class: CompositionClass,
    pub set: PartSet,
    pub quantity: Quantity,
    /// Fixed parts count when the form is a per-parts slice.
    pub parts: Option<u32>,
    /// The source formula, quoted as displayed.
    pub anchor: &'static str,
    /// Present when the displayed formula is expected not to match; the
    /// audit then demands a mismatch.
    pub suspect: Option<&'static str>,
    /// Commentary on the stored form, e.g. how a misprint was resolved.
    pub note: Option<&'static str>,
    pub form: ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch { first_degree: usize },
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Match => write!(f, "match"),
            Verdict::Mismatch { first_degree } => {
                write!(f, "mismatch(first degree {first_degree})")
            }
        }
    }
}

/// The engine series an entry claims to equal, as plain integer
/// coefficients.
pub fn engine_series(entry: &CatalogEntry, order: usize) -> Result<TruncatedSeries> {
    let keep_parts = entry.parts.is_some();
    let series = match entry.quantity {
        Quantity::Count => collapse(engine::class_gf(entry.class, &entry.set, order), keep_parts),
        Quantity::LevelFreeCount => collapse(
            engine::joint_gf(entry.class, &entry.set, order).eval_marker(Marker::Levels, 0),
            keep_parts,
        ),
        Quantity::Total(stat) => {
            engine::statistic_total(entry.class, &entry.set, stat, order, keep_parts)?
        }
        Quantity::SecondFactorialMoment(stat) => {
            engine::moment_total(entry.class, &entry.set, stat, order)?
        }
    };
    match entry.parts {
        Some(m) => engine::per_parts_slice(&series, m),
        None => Ok(series),
    }
}

fn collapse(series: TruncatedSeries, keep_parts: bool) -> TruncatedSeries {
    let mut out = series
        .eval_marker(Marker::Rises, 1)
        .eval_marker(Marker::Levels, 1)
        .eval_marker(Marker::Drops, 1);
    if !keep_parts {
        out = out.eval_marker(Marker::Parts, 1);
    }
    out
}

/// Compare an entry's closed form against an engine-computed series,
/// coefficient by coefficient up to `order`.
pub fn verify_entry(
    entry: &CatalogEntry,
    engine_result: &TruncatedSeries,
    order: usize,
) -> Result<Verdict> {
    debug_assert!(engine_result.order() >= order);
    match &entry.form {
        ClosedForm::Rational(r) => {
            let expected = r.expand(order)?;
            for n in 0..=order {
                if expected.coeff(n)? != engine_result.coeff(n)? {
                    return Ok(Verdict::Mismatch { first_degree: n });
                }
            }
            Ok(Verdict::Match)
        }
        ClosedForm::Count { min_n, f } => {
            for n in *min_n..=order {
                let got = engine_result.coeff(n)?.coeff(&[0; 4]);
                if f(n) != got {
                    return Ok(Verdict::Mismatch { first_degree: n });
                }
            }
            Ok(Verdict::Match)
        }
    }
}

/// Run the whole audit: every entry against the engine at `order`.
pub fn audit(order: usize) -> Vec<AuditRecord> {
    standard_catalog()
        .iter()
        .map(|entry| {
            let series = engine_series(entry, order).expect("catalog entries are well-formed");
            let verdict = verify_entry(entry, &series, order).expect("expansion succeeds");
            let as_expected = matches!(
                (&entry.suspect, &verdict),
                (None, Verdict::Match) | (Some(_), Verdict::Mismatch { .. })
            );
            AuditRecord {
                id: entry.id.clone(),
                anchor: entry.anchor,
                suspect: entry.suspect,
                verdict,
                as_expected,
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct AuditRecord {
    pub id: String,
    pub anchor: &'static str,
    pub suspect: Option<&'static str>,
    pub verdict: Verdict,
    /// Match for ordinary entries, mismatch for suspect ones.
    pub as_expected: bool,
}

/// Helper for tests and reports: the marker-free coefficients of a series
/// as `i64`, panicking if one does not fit.
pub fn plain_coefficients(series: &TruncatedSeries) -> Vec<i64> {
    series
        .coeffs()
        .iter()
        .map(|p| p.coeff(&[0; 4]).to_i64().expect("coefficient fits i64"))
        .collect()
}
