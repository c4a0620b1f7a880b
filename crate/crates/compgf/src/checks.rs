//! The verification suites behind `check`: engine vs oracle, direct vs
//! linear-system path, catalog audit, and the algebraic identities.
//!
//! Every suite returns a [`CheckReport`] whose items carry a stable name
//! and a detail string, so reports are byte-deterministic for a given
//! input. Randomized items use a fixed seed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog;
use crate::engine::{self, CompositionClass, StatisticName};
use crate::oracle;
use crate::partsets::PartSet;
use crate::polyseries::{Marker, MarkerPoly, TruncatedSeries};

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    fn new(suite: &str) -> Self {
        CheckReport {
            suite: suite.to_string(),
            items: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// The alphabets every sweep runs over.
pub fn standard_sets() -> Vec<PartSet> {
    vec![
        PartSet::naturals(),
        PartSet::explicit(&[1, 2]),
        PartSet::explicit(&[1, 3]),
        PartSet::explicit(&[2, 3]),
        PartSet::explicit(&[2, 5]),
        PartSet::naturals_without(1),
        PartSet::naturals_without(2),
        PartSet::odds(),
    ]
}

/// Engine joint coefficients against brute-force joint distributions, for
/// every class, every standard set, every size up to `n_max`.
pub fn oracle_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("oracle");
    for class in CompositionClass::ALL {
        for set in standard_sets() {
            let series = engine::joint_gf(class, &set, n_max);
            let mut first_bad: Option<String> = None;
            for n in 0..=n_max {
                let expected = distribution_poly(class, &set, n);
                let got = series.coeff(n).expect("within order");
                if got != &expected {
                    first_bad = Some(format!("first differs at n={n}"));
                    break;
                }
            }
            report.push(
                format!("joint[{class},{}]", set.spec()),
                first_bad.is_none(),
                first_bad.unwrap_or_else(|| format!("n <= {n_max} exact")),
            );
        }
    }
    report
}

/// The oracle tally as a marker polynomial, keyed exactly like the engine's
/// coefficients.
pub fn distribution_poly(class: CompositionClass, set: &PartSet, n: usize) -> MarkerPoly {
    let mut poly = MarkerPoly::zero();
    for (key, count) in oracle::joint_distribution(class, set, n).counts {
        poly = &poly + &MarkerPoly::monomial(key, BigInt::from(count));
    }
    poly
}

/// Direct formula against linear-system elimination for every standard set.
pub fn paths_suite(order: usize) -> CheckReport {
    let mut report = CheckReport::new("paths");
    for set in standard_sets() {
        let direct = engine::comp_gf(&set, order);
        let solved = engine::comp_gf_via_system(&set, order);
        report.push(
            format!("system[{}]", set.spec()),
            direct == solved,
            format!("order {order}"),
        );
    }
    report
}

/// Every catalog entry against the engine; suspect entries must mismatch,
/// all others must match.
pub fn catalog_suite(order: usize) -> CheckReport {
    let mut report = CheckReport::new("catalog");
    for record in catalog::audit(order) {
        let expectation = if record.suspect.is_some() {
            "expected mismatch"
        } else {
            "expected match"
        };
        report.push(
            record.id.clone(),
            record.as_expected,
            format!("{} [{expectation}] anchor: {}", record.verdict, record.anchor),
        );
    }
    report
}

/// The algebraic identity battery.
pub fn identities_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("identities");
    let sets = standard_sets();

    // rises and drops are equidistributed totals on reversal-closed classes
    for class in [
        CompositionClass::Compositions,
        CompositionClass::Palindromes,
        CompositionClass::Carlitz,
        CompositionClass::CarlitzPalindromes,
    ] {
        for set in &sets {
            let rises =
                engine::statistic_total(class, set, StatisticName::Rises, n_max, true).unwrap();
            let drops =
                engine::statistic_total(class, set, StatisticName::Drops, n_max, true).unwrap();
            report.push(
                format!("rises-eq-drops[{class},{}]", set.spec()),
                rises == drops,
                format!("order {n_max}, parts kept"),
            );
        }
    }

    // partitions carry no rise marker at all
    for set in &sets {
        let joint = engine::joint_gf(CompositionClass::Partitions, set, n_max);
        let clean = joint
            .coeffs()
            .iter()
            .all(|p| p.iter().all(|(e, _)| e[1] == 0));
        report.push(
            format!("partitions-no-rises[{}]", set.spec()),
            clean,
            "rise exponent is always zero",
        );
    }

    // every palindrome key has equally many rises and drops
    for set in &sets {
        let joint = engine::joint_gf(CompositionClass::Palindromes, set, n_max);
        let symmetric = joint
            .coeffs()
            .iter()
            .all(|p| p.iter().all(|(e, _)| e[1] == e[3]));
        report.push(
            format!("palindrome-key-parity[{}]", set.spec()),
            symmetric,
            "coefficient vanishes whenever rise and drop exponents differ",
        );
    }

    // each adjacency is a rise, level or drop: i + j + h = m - 1, and a
    // composition of n has at most n parts
    for class in CompositionClass::ALL {
        for set in &sets {
            let joint = engine::joint_gf(class, set, n_max);
            let mut ok = true;
            for (n, poly) in joint.coeffs().iter().enumerate() {
                for (e, _) in poly.iter() {
                    let adjacencies = e[1] + e[2] + e[3];
                    let key_ok = match e[0] {
                        0 => adjacencies == 0,
                        m => adjacencies == m - 1,
                    };
                    ok &= key_ok && e[0] as usize <= n;
                }
            }
            report.push(
                format!("adjacency[{class},{}]", set.spec()),
                ok,
                "rises + levels + drops = parts - 1 on every key",
            );
        }
    }

    // counting with all statistic markers at 1 equals the parts-only form
    // 1/(1 - y sum_j x^a_j)
    for set in &sets {
        let collapsed = engine::comp_gf(set, n_max)
            .eval_marker(Marker::Rises, 1)
            .eval_marker(Marker::Levels, 1)
            .eval_marker(Marker::Drops, 1);
        let expected = parts_only_comp_gf(set, n_max);
        report.push(
            format!("marker-sum[{}]", set.spec()),
            collapsed == expected,
            "collapses to 1/(1 - y sum x^a_j)",
        );
    }

    // palindrome analogue: (1 + y sum x^a)/(1 - y^2 sum x^2a)
    for set in &sets {
        let collapsed = engine::pal_gf(set, n_max)
            .eval_marker(Marker::Rises, 1)
            .eval_marker(Marker::Levels, 1)
            .eval_marker(Marker::Drops, 1);
        let expected = parts_only_pal_gf(set, n_max);
        report.push(
            format!("pal-marker-sum[{}]", set.spec()),
            collapsed == expected,
            "collapses to (1 + y sum x^a)/(1 - y^2 sum x^2a)",
        );
    }

    // Carlitz count in parts-only form: 1/(1 - sum_j b_j/(1+b_j))
    for set in &sets {
        let collapsed = engine::carlitz_gf(set, n_max)
            .eval_marker(Marker::Rises, 1)
            .eval_marker(Marker::Drops, 1);
        let expected = parts_only_carlitz_gf(set, n_max);
        report.push(
            format!("carlitz-marker-sum[{}]", set.spec()),
            collapsed == expected,
            "collapses to 1/(1 - sum b_j/(1+b_j))",
        );
    }

    // Carlitz rises over the naturals, as the double-sum expression
    {
        let got = engine::statistic_total(
            CompositionClass::Carlitz,
            &PartSet::naturals(),
            StatisticName::Rises,
            n_max,
            false,
        )
        .unwrap();
        let expected = carlitz_rises_naturals_sum(n_max);
        report.push(
            "carlitz-rises-double-sum[N]",
            got == expected,
            "sum_j (f_j sum_{i<j} f_i) / (1 - sum_j f_j)^2 with f_j = x^j/(1+x^j)",
        );
    }

    // partitions over the naturals: product forms for both the plain and
    // the distinct-adjacent count
    {
        let set = PartSet::naturals();
        let counted = engine::partition_gf(&set, n_max)
            .eval_marker(Marker::Levels, 1)
            .eval_marker(Marker::Drops, 1);
        let expected = partition_product(&set, n_max, false);
        report.push(
            "partition-product[N]",
            counted == expected,
            "equals prod_j 1/(1 - x^j y)",
        );

        let distinct = engine::partition_gf(&set, n_max)
            .eval_marker(Marker::Levels, 0)
            .eval_marker(Marker::Drops, 1);
        let expected = partition_product(&set, n_max, true);
        report.push(
            "distinct-partition-product[N]",
            distinct == expected,
            "equals prod_j (1 + x^j y)",
        );
    }

    // telescoping: 1 - a sum_j x^a_j prod_{i<j}(1 - x^a_i a)
    //            = prod_j (1 - x^a_j a), with the marker y standing in for a
    {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let order = 12;
        let mut all_ok = true;
        for _ in 0..50 {
            let size = rng.gen_range(1..=6);
            let mut parts: Vec<u32> = (0..size).map(|_| rng.gen_range(1..=10)).collect();
            parts.sort_unstable();
            parts.dedup();
            let set = PartSet::explicit(&parts);
            if !telescoping_holds(&set, order) {
                all_ok = false;
                report.push(
                    format!("telescoping[{}]", set.spec()),
                    false,
                    "left and right sides differ",
                );
            }
        }
        report.push(
            "telescoping[50 random explicit sets]",
            all_ok,
            format!("order {order}, seed 42"),
        );
    }

    // truncation independence for the infinite alphabets: computing at
    // order N+10 and truncating equals computing at order N
    for set in [
        PartSet::naturals(),
        PartSet::naturals_without(1),
        PartSet::naturals_without(2),
        PartSet::odds(),
    ] {
        type Constructor = (&'static str, fn(&PartSet, usize) -> TruncatedSeries);
        let constructors: [Constructor; 5] = [
            ("comp", engine::comp_gf),
            ("pal", engine::pal_gf),
            ("carlitz", engine::carlitz_gf),
            ("carlitz-pal", engine::carlitz_pal_gf),
            ("partition", engine::partition_gf),
        ];
        for (name, f) in constructors {
            let wide = f(&set, n_max + 10).truncate(n_max).unwrap();
            let narrow = f(&set, n_max);
            report.push(
                format!("truncation-independence[{name},{}]", set.spec()),
                wide == narrow,
                format!("orders {} and {n_max} agree", n_max + 10),
            );
        }
    }

    // the collapsed classes really are marker substitutions of the base
    // families, recomputed here from scratch
    for set in &sets {
        let comp = engine::comp_gf(set, n_max);
        let pal = engine::pal_gf(set, n_max);
        let ok = engine::carlitz_gf(set, n_max) == comp.eval_marker(Marker::Levels, 0)
            && engine::partition_gf(set, n_max) == comp.eval_marker(Marker::Rises, 0)
            && engine::carlitz_pal_gf(set, n_max)
                == pal.eval_marker(Marker::Levels, 0).eval_marker(Marker::Drops, 1);
        report.push(
            format!("class-projections[{}]", set.spec()),
            ok,
            "carlitz, partition and carlitz-palindrome series are substitutions",
        );
    }

    report
}

fn sum_of_monomials(set: &PartSet, order: usize, stretch: usize, marker_power: u32) -> TruncatedSeries {
    let y = MarkerPoly::marker(Marker::Parts);
    let mut poly_y = MarkerPoly::one();
    for _ in 0..marker_power {
        poly_y = &poly_y * &y;
    }
    let mut sum = TruncatedSeries::zero(order);
    for &a in &set.materialize(order) {
        let term = TruncatedSeries::monomial(order, stretch * a as usize, poly_y.clone());
        sum = sum.add(&term).unwrap();
    }
    sum
}

/// `1/(1 - y sum_j x^a_j)`
fn parts_only_comp_gf(set: &PartSet, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    one.sub(&sum_of_monomials(set, order, 1, 1))
        .unwrap()
        .recip()
        .unwrap()
}

/// `(1 + y sum_i x^a_i) / (1 - y^2 sum_i x^(2 a_i))`
fn parts_only_pal_gf(set: &PartSet, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let num = one.add(&sum_of_monomials(set, order, 1, 1)).unwrap();
    let den = one.sub(&sum_of_monomials(set, order, 2, 2)).unwrap();
    num.mul(&den.recip().unwrap()).unwrap()
}

/// `1/(1 - sum_j b_j/(1 + b_j))` with `b_j = x^a_j y`
fn parts_only_carlitz_gf(set: &PartSet, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let mut sum = TruncatedSeries::zero(order);
    for &a in &set.materialize(order) {
        let b = TruncatedSeries::monomial(order, a as usize, MarkerPoly::marker(Marker::Parts));
        let frac = b.mul(&one.add(&b).unwrap().recip().unwrap()).unwrap();
        sum = sum.add(&frac).unwrap();
    }
    one.sub(&sum).unwrap().recip().unwrap()
}

/// `sum_j (f_j sum_{i<j} f_i) / (1 - sum_j f_j)^2` with `f_j = x^j/(1+x^j)`,
/// markers collapsed.
fn carlitz_rises_naturals_sum(order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let mut total = TruncatedSeries::zero(order);
    let mut partial = TruncatedSeries::zero(order);
    let mut sum_all = TruncatedSeries::zero(order);
    for j in 1..=order {
        let xj = TruncatedSeries::monomial(order, j, MarkerPoly::one());
        let f = xj.mul(&one.add(&xj).unwrap().recip().unwrap()).unwrap();
        total = total.add(&f.mul(&partial).unwrap()).unwrap();
        partial = partial.add(&f).unwrap();
        sum_all = sum_all.add(&f).unwrap();
    }
    let den_inv = one.sub(&sum_all).unwrap().recip().unwrap();
    total.mul(&den_inv).unwrap().mul(&den_inv).unwrap()
}

/// `prod_j 1/(1 - x^j y)` or, for distinct adjacent parts,
/// `prod_j (1 + x^j y)`, over the materialized alphabet.
fn partition_product(set: &PartSet, order: usize, distinct: bool) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let mut product = one.clone();
    for &a in &set.materialize(order) {
        let term = TruncatedSeries::monomial(order, a as usize, MarkerPoly::marker(Marker::Parts));
        let factor = if distinct {
            one.add(&term).unwrap()
        } else {
            one.sub(&term).unwrap().recip().unwrap()
        };
        product = product.mul(&factor).unwrap();
    }
    product
}

/// `1 - a sum_j x^a_j prod_{i<j}(1 - x^a_i a) == prod_j (1 - x^a_j a)`
/// with the marker `y` standing in for the formal variable `a`.
fn telescoping_holds(set: &PartSet, order: usize) -> bool {
    let one = TruncatedSeries::one(order);
    let alpha = MarkerPoly::marker(Marker::Parts);
    let mut running = one.clone();
    let mut sum = TruncatedSeries::zero(order);
    let mut product = one.clone();
    for &a in &set.materialize(order) {
        let xa = TruncatedSeries::monomial(order, a as usize, MarkerPoly::one());
        sum = sum.add(&xa.mul(&running).unwrap()).unwrap();
        let factor = one.sub(&xa.scale(&alpha)).unwrap();
        running = running.mul(&factor).unwrap();
        product = product.mul(&factor).unwrap();
    }
    let left = one.sub(&sum.scale(&alpha)).unwrap();
    left == product
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_suite_passes_at_small_order() {
        let report = oracle_suite(8);
        assert_eq!(report.items.len(), 40);
        for item in &report.items {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }

    #[test]
    fn paths_suite_passes() {
        let report = paths_suite(8);
        assert!(report.passed());
    }

    #[test]
    fn catalog_suite_passes() {
        let report = catalog_suite(12);
        for item in &report.items {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }

    #[test]
    fn identities_suite_passes() {
        let report = identities_suite(8);
        for item in &report.items {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }

    #[test]
    fn telescoping_on_a_known_set() {
        assert!(telescoping_holds(&PartSet::explicit(&[1, 2, 5]), 12));
        assert!(telescoping_holds(&PartSet::explicit(&[3]), 12));
    }
}
