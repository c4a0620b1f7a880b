//! Acceptance suite: one test per criterion, each printing a PASS line once
//! its assertions hold. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.
//!
//! All comparisons are exact; there are no tolerances anywhere.

use compgf::catalog::{self, plain_coefficients, Verdict};
use compgf::checks;
use compgf::engine::{self, CompositionClass, StatisticName};
use compgf::partsets::PartSet;
use compgf::polyseries::Marker;
use num_bigint::BigInt;

fn pass(n: usize, what: &str) {
    println!("criterion {n:2} ({what}): PASS");
}

fn counts(class: CompositionClass, set: &PartSet, order: usize) -> Vec<BigInt> {
    let series = engine::class_gf(class, set, order)
        .eval_marker(Marker::Parts, 1)
        .eval_marker(Marker::Rises, 1)
        .eval_marker(Marker::Levels, 1)
        .eval_marker(Marker::Drops, 1);
    series
        .coeffs()
        .iter()
        .map(|p| p.coeff(&[0; 4]))
        .collect()
}

fn totals(class: CompositionClass, set: &PartSet, stat: StatisticName, order: usize) -> Vec<BigInt> {
    engine::statistic_total(class, set, stat, order, false)
        .unwrap()
        .coeffs()
        .iter()
        .map(|p| p.coeff(&[0; 4]))
        .collect()
}

#[test]
fn criterion_01_oracle_equivalence() {
    let report = checks::oracle_suite(18);
    for item in &report.items {
        assert!(item.passed, "{}: {}", item.name, item.detail);
    }
    assert_eq!(report.items.len(), 40, "5 classes x 8 sets");
    pass(1, "engine joint coefficients equal oracle tallies, n <= 18");
}

#[test]
fn criterion_02_path_equivalence() {
    let report = checks::paths_suite(14);
    for item in &report.items {
        assert!(item.passed, "{}: {}", item.name, item.detail);
    }
    pass(2, "direct formula equals linear-system elimination at order 14");
}

#[test]
fn criterion_03_composition_counts() {
    let got = counts(CompositionClass::Compositions, &PartSet::naturals(), 20);
    assert_eq!(got[0], BigInt::from(1));
    for (n, value) in got.iter().enumerate().skip(1) {
        assert_eq!(value, &BigInt::from(2).pow(n as u32 - 1), "n = {n}");
    }
    pass(3, "compositions of n over N number 2^(n-1), n <= 20");
}

#[test]
fn criterion_04_rises_closed_form() {
    let got = totals(
        CompositionClass::Compositions,
        &PartSet::naturals(),
        StatisticName::Rises,
        20,
    );
    for (n, value) in got.iter().enumerate().skip(3) {
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let expected = (BigInt::from(2).pow(n as u32 - 2) * (3 * n as i64 - 5) + sign)
            / BigInt::from(9);
        assert_eq!(value, &expected, "n = {n}");
    }
    pass(4, "rises over N follow (2^(n-2)(3n-5)+(-1)^(n+1))/9, 3 <= n <= 20");
}

#[test]
fn criterion_05_levels_closed_form() {
    let got = totals(
        CompositionClass::Compositions,
        &PartSet::naturals(),
        StatisticName::Levels,
        20,
    );
    for (n, value) in got.iter().enumerate().skip(1) {
        let sign = if n % 2 == 0 { 8 } else { -8 };
        let expected = (BigInt::from(2).pow(n as u32) * (3 * n as i64 + 1) + sign)
            / BigInt::from(36);
        assert_eq!(value, &expected, "n = {n}");
    }
    pass(5, "levels over N follow (2^(n-2)(3n+1)+2(-1)^n)/9, 1 <= n <= 20");
}

#[test]
fn criterion_06_palindrome_counts() {
    let got = counts(CompositionClass::Palindromes, &PartSet::naturals(), 24);
    for (n, value) in got.iter().enumerate() {
        assert_eq!(value, &BigInt::from(2).pow(n as u32 / 2), "n = {n}");
    }
    pass(6, "palindromic compositions of n over N number 2^floor(n/2), n <= 24");
}

#[test]
fn criterion_07_carlitz_two_letter_alphabets() {
    for (a, b) in [(1usize, 2usize), (2, 3), (2, 5)] {
        let set = PartSet::explicit(&[a as u32, b as u32]);
        let period = a + b;
        let count = counts(CompositionClass::Carlitz, &set, 30);
        let rises = totals(CompositionClass::Carlitz, &set, StatisticName::Rises, 30);
        for n in 0..=30usize {
            let r = n % period;
            let expected_count = if n == 0 {
                1
            } else if r == 0 {
                2
            } else if r == a || r == b {
                1
            } else {
                0
            };
            assert_eq!(count[n], BigInt::from(expected_count), "count {a},{b} n={n}");

            let q = (n / period) as i64;
            let expected_rises = if n == 0 {
                0
            } else if r == 0 {
                2 * q - 1
            } else if r == a || r == b {
                q
            } else {
                0
            };
            assert_eq!(rises[n], BigInt::from(expected_rises), "rises {a},{b} n={n}");
        }
    }
    pass(7, "Carlitz counts and rise totals over {a,b} follow the residue cases, n <= 30");
}

#[test]
fn criterion_08_partition_floor_formulas() {
    for k in [2usize, 3, 4] {
        let set = PartSet::explicit(&[1, k as u32]);
        let count = counts(CompositionClass::Partitions, &set, 30);
        let drops = totals(CompositionClass::Partitions, &set, StatisticName::Drops, 30);
        for n in 0..=30usize {
            assert_eq!(count[n], BigInt::from(((n + k) / k) as i64), "count k={k} n={n}");
            let expected_drops = if n == 0 { 0 } else { ((n - 1) / k) as i64 };
            assert_eq!(drops[n], BigInt::from(expected_drops), "drops k={k} n={n}");
        }
    }
    pass(8, "partition counts floor((n+k)/k) and drop totals floor((n-1)/k), n <= 30");
}

#[test]
fn criterion_09_fibonacci_convolution() {
    let got = engine::moment_total(
        CompositionClass::Compositions,
        &PartSet::explicit(&[1, 2]),
        StatisticName::Drops,
        20,
    )
    .unwrap();
    let expected = catalog::RationalGf::new(
        catalog::Poly::monomial(6, 2),
        catalog::Poly::from_coeffs(&[1, -1, -1]).pow(3),
    )
    .expand(20)
    .unwrap();
    assert_eq!(
        plain_coefficients(&got),
        plain_coefficients(&expected),
        "second factorial moment of drops over {{1,2}}"
    );
    pass(9, "drops(drops-1) totals over {1,2} expand 2x^6/(1-x-x^2)^3, n <= 20");
}

#[test]
fn criterion_10_catalog_audit() {
    let records = catalog::audit(20);
    let mut mismatched: Vec<(&str, &Verdict)> = Vec::new();
    for record in &records {
        match record.suspect {
            None => assert_eq!(
                record.verdict,
                Verdict::Match,
                "{} should match: {}",
                record.id,
                record.anchor
            ),
            Some(_) => {
                assert!(
                    matches!(record.verdict, Verdict::Mismatch { .. }),
                    "{} is flagged suspect and must mismatch",
                    record.id
                );
                mismatched.push((record.id.as_str(), &record.verdict));
            }
        }
    }
    assert_eq!(mismatched.len(), 2, "exactly two suspect entries");
    for (id, verdict) in &mismatched {
        println!("    suspect {id}: {verdict}");
    }
    assert_eq!(mismatched[0].1, &Verdict::Mismatch { first_degree: 6 });
    assert_eq!(mismatched[1].1, &Verdict::Mismatch { first_degree: 3 });
    pass(10, "catalog audit at order 20: all sound entries match, both suspects mismatch");
}

#[test]
fn criterion_11_property_suite() {
    let report = checks::identities_suite(14);
    for item in &report.items {
        assert!(item.passed, "{}: {}", item.name, item.detail);
    }
    pass(11, "identity battery at order 14 (symmetry, parity, adjacency, telescoping, truncation)");
}

#[test]
fn criterion_12_per_parts_slices() {
    let naturals = PartSet::naturals();
    let order = 20;
    let rises = engine::statistic_total(
        CompositionClass::Compositions,
        &naturals,
        StatisticName::Rises,
        order,
        true,
    )
    .unwrap();
    let levels = engine::statistic_total(
        CompositionClass::Compositions,
        &naturals,
        StatisticName::Levels,
        order,
        true,
    )
    .unwrap();
    let pal_levels = engine::statistic_total(
        CompositionClass::Palindromes,
        &naturals,
        StatisticName::Levels,
        order,
        true,
    )
    .unwrap();

    let one_plus_x = catalog::Poly::from_coeffs(&[1, 1]);
    let one_minus_x = catalog::Poly::from_coeffs(&[1, -1]);
    for m in [2u32, 3, 4] {
        let mi = m as usize;
        // (m-1) x^(m+1) / ((1+x)(1-x)^m)
        let slice = engine::per_parts_slice(&rises, m).unwrap();
        let expected = catalog::RationalGf::new(
            catalog::Poly::monomial(mi + 1, m as i64 - 1),
            &one_plus_x * &one_minus_x.pow(mi),
        )
        .expand(order)
        .unwrap();
        assert_eq!(
            plain_coefficients(&slice),
            plain_coefficients(&expected),
            "rises slice m={m}"
        );

        // (m-1) x^m / ((1+x)(1-x)^(m-1))
        let slice = engine::per_parts_slice(&levels, m).unwrap();
        let expected = catalog::RationalGf::new(
            catalog::Poly::monomial(mi, m as i64 - 1),
            &one_plus_x * &one_minus_x.pow(mi - 1),
        )
        .expand(order)
        .unwrap();
        assert_eq!(
            plain_coefficients(&slice),
            plain_coefficients(&expected),
            "levels slice m={m}"
        );

        // palindromic level slices l_m
        let slice = engine::per_parts_slice(&pal_levels, m).unwrap();
        let expected = match m {
            2 => catalog::RationalGf::new(
                catalog::Poly::monomial(2, 1),
                catalog::Poly::from_coeffs(&[1, 0, -1]),
            ),
            3 => catalog::RationalGf::new(
                &(&catalog::Poly::monomial(3, 2) * &one_plus_x)
                    * &catalog::Poly::from_coeffs(&[1, 0, 1]),
                &(&catalog::Poly::from_coeffs(&[1, 0, 1])
                    * &catalog::Poly::from_coeffs(&[1, 1, 1]))
                    * &catalog::Poly::from_coeffs(&[1, 0, -1]),
            ),
            4 => catalog::RationalGf::new(
                &catalog::Poly::monomial(4, 1) * &catalog::Poly::from_coeffs(&[3, 0, -1]),
                &catalog::Poly::from_coeffs(&[1, 0, 1])
                    * &catalog::Poly::from_coeffs(&[1, 0, -1]).pow(2),
            ),
            _ => unreachable!(),
        }
        .expand(order)
        .unwrap();
        assert_eq!(
            plain_coefficients(&slice),
            plain_coefficients(&expected),
            "palindromic levels slice m={m}"
        );
    }
    pass(12, "per-parts slices m=2..4 match the per-m closed forms at order 20");
}
