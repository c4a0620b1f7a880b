//! Brute-force ground truth: enumerate the objects of each class and tally
//! their joint statistics.
//!
//! Everything here is deliberately independent of the series engine; the
//! engine is tested against these tallies, never the other way around.

use std::collections::BTreeMap;

use crate::engine::CompositionClass;
use crate::partsets::PartSet;
use crate::polyseries::Exponents;

/// An ordered sequence of positive parts. The empty sequence is the single
/// object of size 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

/// (parts, rises, levels, drops) of a composition.
pub fn statistics(c: &Composition) -> (usize, usize, usize, usize) {
    let mut rises = 0;
    let mut levels = 0;
    let mut drops = 0;
    for w in c.parts.windows(2) {
        match w[0].cmp(&w[1]) {
            std::cmp::Ordering::Less => rises += 1,
            std::cmp::Ordering::Equal => levels += 1,
            std::cmp::Ordering::Greater => drops += 1,
        }
    }
    (c.parts.len(), rises, levels, drops)
}

pub fn is_palindrome(parts: &[u32]) -> bool {
    parts.iter().eq(parts.iter().rev())
}

pub fn is_carlitz(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] != w[1])
}

/// Weakly decreasing, the paper's encoding of a partition.
pub fn is_partition(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Every object of the class of size `n`, each exactly once, in
/// lexicographic order of the part sequence.
pub fn enumerate(
    class: CompositionClass,
    a: &PartSet,
    n: usize,
) -> Box<dyn Iterator<Item = Composition>> {
    match class {
        CompositionClass::Compositions => Box::new(SequentialIter::new(a, n, Constraint::None)),
        CompositionClass::Carlitz => Box::new(SequentialIter::new(a, n, Constraint::Carlitz)),
        CompositionClass::Partitions => Box::new(SequentialIter::new(a, n, Constraint::Partition)),
        CompositionClass::Palindromes => Box::new(palindromes(a, n).into_iter()),
        CompositionClass::CarlitzPalindromes => Box::new(
            palindromes(a, n)
                .into_iter()
                .filter(|c| is_carlitz(c.parts())),
        ),
    }
}

/// Exact tally of `statistics` over `enumerate`. Keys are exponent vectors
/// (parts, rises, levels, drops) so the result compares directly against a
/// series coefficient.
pub fn joint_distribution(class: CompositionClass, a: &PartSet, n: usize) -> JointDistribution {
    let mut counts = BTreeMap::new();
    for c in enumerate(class, a, n) {
        let (m, i, j, h) = statistics(&c);
        let key = [m as u32, i as u32, j as u32, h as u32];
        *counts.entry(key).or_insert(0u64) += 1;
    }
    JointDistribution { n, counts }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDistribution {
    pub n: usize,
    pub counts: BTreeMap<Exponents, u64>,
}

impl JointDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Constraint {
    None,
    Carlitz,
    Partition,
}

impl Constraint {
    fn allows(self, last: Option<u32>, next: u32) -> bool {
        match (self, last) {
            (Constraint::None, _) | (_, None) => true,
            (Constraint::Carlitz, Some(p)) => next != p,
            (Constraint::Partition, Some(p)) => next <= p,
        }
    }
}

/// Depth-first enumeration over the first part, with the remaining-sum
/// bound as pruning. Trying parts in ascending order at every position
/// yields the part sequences in lexicographic order.
struct SequentialIter {
    pool: Vec<u32>,
    constraint: Constraint,
    prefix: Vec<u32>,
    remaining: usize,
    /// Index into `pool` of the next part to try at the current depth.
    next_idx: Vec<usize>,
    done: bool,
    emit_empty: bool,
}

impl SequentialIter {
    fn new(a: &PartSet, n: usize, constraint: Constraint) -> Self {
        SequentialIter {
            pool: a.materialize(n),
            constraint,
            prefix: Vec::new(),
            remaining: n,
            next_idx: vec![0],
            done: false,
            emit_empty: n == 0,
        }
    }
}

impl Iterator for SequentialIter {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.emit_empty {
            self.emit_empty = false;
            self.done = true;
            return Some(Composition::new(Vec::new()));
        }
        while !self.done {
            let depth = self.prefix.len();
            let idx = self.next_idx[depth];
            if idx >= self.pool.len() || self.pool[idx] as usize > self.remaining {
                // exhausted this depth; backtrack
                self.next_idx.pop();
                match self.prefix.pop() {
                    Some(p) => self.remaining += p as usize,
                    None => self.done = true,
                }
                continue;
            }
            self.next_idx[depth] = idx + 1;
            let part = self.pool[idx];
            if !self.constraint.allows(self.prefix.last().copied(), part) {
                continue;
            }
            self.prefix.push(part);
            self.remaining -= part as usize;
            if self.remaining == 0 {
                let out = Composition::new(self.prefix.clone());
                self.remaining += part as usize;
                self.prefix.pop();
                return Some(out);
            }
            self.next_idx.push(0);
        }
        None
    }
}

/// Palindromes of `n` built directly from their left halves: a palindrome
/// is `h ++ reverse(h)` with `2 sum(h) = n`, or `h ++ [c] ++ reverse(h)`
/// with `c` in the alphabet and `2 sum(h) + c = n`. This keeps the cost
/// proportional to the number of palindromes rather than the number of
/// compositions. Results are sorted into lexicographic order.
fn palindromes(a: &PartSet, n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Composition::new(Vec::new()));
        return out;
    }
    let mut halves: Vec<(Vec<u32>, usize)> = Vec::new();
    collect_bounded(&a.materialize(n / 2), n / 2, &mut Vec::new(), &mut halves);
    for (half, sum) in halves {
        if 2 * sum == n && !half.is_empty() {
            let mut parts = half.clone();
            parts.extend(half.iter().rev());
            out.push(Composition::new(parts));
        }
        let center = n - 2 * sum;
        if center > 0 && u32::try_from(center).is_ok_and(|c| a.contains(c)) {
            let mut parts = half.clone();
            parts.push(center as u32);
            parts.extend(half.iter().rev());
            out.push(Composition::new(parts));
        }
    }
    out.sort();
    out
}

/// All part sequences (including the empty one) with sum at most `bound`.
fn collect_bounded(
    pool: &[u32],
    bound: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<(Vec<u32>, usize)>,
) {
    let sum = bound_sum(prefix);
    out.push((prefix.clone(), sum));
    for &p in pool {
        if sum + p as usize > bound {
            break;
        }
        prefix.push(p);
        collect_bounded(pool, bound, prefix, out);
        prefix.pop();
    }
}

fn bound_sum(parts: &[u32]) -> usize {
    parts.iter().map(|&p| p as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partsets::parse_set;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn listed(class: CompositionClass, set: &str, n: usize) -> Vec<Vec<u32>> {
        enumerate(class, &parse_set(set).unwrap(), n)
            .map(|c| c.parts().to_vec())
            .collect()
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(statistics(&comp(&[1, 2, 1])), (3, 1, 0, 1));
        assert_eq!(statistics(&comp(&[2, 2, 2])), (3, 0, 2, 0));
        assert_eq!(statistics(&comp(&[1, 1, 2])), (3, 1, 1, 0));
        assert_eq!(statistics(&comp(&[])), (0, 0, 0, 0));
    }

    #[test]
    fn enumerates_compositions_of_three() {
        assert_eq!(
            listed(CompositionClass::Compositions, "N", 3),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
    }

    #[test]
    fn enumerates_palindromes_of_four() {
        assert_eq!(
            listed(CompositionClass::Palindromes, "N", 4),
            vec![vec![1, 1, 1, 1], vec![1, 2, 1], vec![2, 2], vec![4]]
        );
    }

    #[test]
    fn enumerates_carlitz_examples() {
        assert_eq!(
            listed(CompositionClass::Carlitz, "2,3", 5),
            vec![vec![2, 3], vec![3, 2]]
        );
        assert_eq!(
            listed(CompositionClass::CarlitzPalindromes, "1,2", 4),
            vec![vec![1, 2, 1]]
        );
    }

    #[test]
    fn size_zero_has_one_empty_object() {
        for class in CompositionClass::ALL {
            assert_eq!(listed(class, "1,2", 0), vec![Vec::<u32>::new()]);
        }
    }

    #[test]
    fn joint_distribution_examples() {
        let d = joint_distribution(
            CompositionClass::Compositions,
            &parse_set("1,2").unwrap(),
            3,
        );
        let expected: BTreeMap<Exponents, u64> =
            [([3, 0, 2, 0], 1), ([2, 1, 0, 0], 1), ([2, 0, 0, 1], 1)]
                .into_iter()
                .collect();
        assert_eq!(d.counts, expected);

        let d = joint_distribution(CompositionClass::Compositions, &parse_set("1").unwrap(), 6);
        assert_eq!(d.counts, [([6, 0, 5, 0], 1)].into_iter().collect());

        let d = joint_distribution(CompositionClass::Partitions, &parse_set("1,2").unwrap(), 5);
        let expected: BTreeMap<Exponents, u64> =
            [([3, 0, 1, 1], 1), ([4, 0, 2, 1], 1), ([5, 0, 4, 0], 1)]
                .into_iter()
                .collect();
        assert_eq!(d.counts, expected);
    }

    #[test]
    fn composition_counts_are_powers_of_two() {
        let naturals = parse_set("N").unwrap();
        for n in 1..=14 {
            let count = enumerate(CompositionClass::Compositions, &naturals, n).count();
            assert_eq!(count, 1 << (n - 1));
        }
    }

    #[test]
    fn palindrome_counts_follow_half_rule() {
        let naturals = parse_set("N").unwrap();
        for n in 0..=16 {
            let count = enumerate(CompositionClass::Palindromes, &naturals, n).count();
            assert_eq!(count, 1 << (n / 2));
        }
    }

    #[test]
    fn direct_palindromes_match_filtered_compositions() {
        for spec in ["N", "1,2", "2,3", "odd", "N\\{2}"] {
            let set = parse_set(spec).unwrap();
            for n in 0..=14 {
                let direct: Vec<_> = enumerate(CompositionClass::Palindromes, &set, n).collect();
                let filtered: Vec<_> = enumerate(CompositionClass::Compositions, &set, n)
                    .filter(|c| is_palindrome(c.parts()))
                    .collect();
                assert_eq!(direct, filtered, "set {spec}, n {n}");
            }
        }
    }

    #[test]
    fn carlitz_palindromes_are_carlitz_intersect_palindromes() {
        for spec in ["N", "1,2", "2,5"] {
            let set = parse_set(spec).unwrap();
            for n in 0..=14 {
                let both: Vec<_> =
                    enumerate(CompositionClass::CarlitzPalindromes, &set, n).collect();
                let filtered: Vec<_> = enumerate(CompositionClass::Compositions, &set, n)
                    .filter(|c| is_carlitz(c.parts()) && is_palindrome(c.parts()))
                    .collect();
                assert_eq!(both, filtered, "set {spec}, n {n}");
            }
        }
    }

    #[test]
    fn reversal_swaps_rises_and_drops() {
        let set = parse_set("N").unwrap();
        for n in 0..=12 {
            let d = joint_distribution(CompositionClass::Compositions, &set, n);
            for (key, count) in &d.counts {
                let swapped = [key[0], key[3], key[2], key[1]];
                assert_eq!(d.counts.get(&swapped), Some(count), "n {n}, key {key:?}");
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        for class in CompositionClass::ALL {
            for spec in ["N", "1,2", "odd"] {
                let set = parse_set(spec).unwrap();
                for n in 0..=12 {
                    let items: Vec<_> = enumerate(class, &set, n).collect();
                    assert!(
                        items.windows(2).all(|w| w[0] < w[1]),
                        "{class} {spec} n={n} not strictly increasing"
                    );
                }
            }
        }
    }
}
