//! Cross-validation of the canonical search against naive enumeration.
//!
//! The canonical search prunes by isomorph rejection and stratum bounds;
//! the reference here does neither: it walks every subset of the candidate
//! generators and compares closures directly. On every instance small
//! enough for that, the two must agree exactly.

use std::collections::BTreeSet;

use oseq::classify::Verdict;
use oseq::monomial::Monomial;
use oseq::order_ideal::{GeneratorSet, HVector, OrderIdeal};
use oseq::search::{decide_pure_o_sequence, enumerate_pure_hvectors, SearchLimits};

/// All monomials of total degree `degree` on variables `1..=nvars`.
fn monomials_of_degree(nvars: u32, degree: u64) -> Vec<Monomial> {
    fn rec(var: u32, nvars: u32, left: u64, stack: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_pairs(stack.iter().copied()));
            return;
        }
        if var > nvars {
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                stack.push((var, e as u32));
            }
            rec(var + 1, nvars, left - e, stack, out);
            if e > 0 {
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Bitmask closure machinery over a fixed universe of degree-`n` monomials
/// on `nvars` variables; bit `i` of a stratum mask marks poset member `i`.
struct NaiveSpace {
    universe_masks: Vec<u128>,
    poset_degrees: Vec<u64>,
    universe_len: usize,
}

impl NaiveSpace {
    fn build(nvars: u32, n: u64) -> NaiveSpace {
        let universe = monomials_of_degree(nvars, n);
        let mut poset: Vec<Monomial> = Vec::new();
        let mut universe_masks = Vec::with_capacity(universe.len());
        for u in &universe {
            let mut mask = 0u128;
            for d in u.divisors() {
                if d.is_one() {
                    continue;
                }
                let idx = match poset.iter().position(|m| m == &d) {
                    Some(i) => i,
                    None => {
                        poset.push(d.clone());
                        poset.len() - 1
                    }
                };
                mask |= 1 << idx;
            }
            universe_masks.push(mask);
        }
        assert!(poset.len() <= 128);
        NaiveSpace {
            universe_masks,
            poset_degrees: poset.iter().map(|m| m.degree()).collect(),
            universe_len: universe.len(),
        }
    }

    fn h_of(&self, mask: u128) -> Vec<u64> {
        let n = *self.poset_degrees.iter().max().unwrap() as usize;
        let mut h = vec![0u64; n + 1];
        h[0] = 1;
        for (i, &d) in self.poset_degrees.iter().enumerate() {
            if mask & (1 << i) != 0 {
                h[d as usize] += 1;
            }
        }
        h
    }

    /// True iff some set of exactly `b` generators realizes `target`.
    fn any_subset_realizes(&self, b: usize, target: &[u64]) -> bool {
        if b > self.universe_len {
            return false;
        }
        let mut combo: Vec<usize> = (0..b).collect();
        loop {
            let mask = combo.iter().fold(0u128, |m, &i| m | self.universe_masks[i]);
            if self.h_of(mask) == target {
                return true;
            }
            // Next lexicographic combination.
            let mut i = b;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if combo[i] != i + self.universe_len - b {
                    break;
                }
            }
            combo[i] += 1;
            for j in i + 1..b {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
}

#[test]
fn decide_agrees_with_naive_enumeration() {
    let limits = SearchLimits::default();
    let mut checked = 0usize;
    let mut pure = 0usize;

    // Socle degree 2: all positive (1, a, b) with a <= 4, b <= 10.
    for a in 1..=4u64 {
        let space = NaiveSpace::build(a as u32, 2);
        for b in 1..=10u64 {
            let h = HVector::new(vec![1, a, b]).unwrap();
            let naive = space.any_subset_realizes(b as usize, h.entries());
            let decision = decide_pure_o_sequence(&h, &limits);
            assert_ne!(decision.verdict, Verdict::Inconclusive, "{h}");
            assert_eq!(
                decision.verdict == Verdict::Pure,
                naive,
                "canonical search and naive enumeration disagree on {h}"
            );
            checked += 1;
            pure += naive as usize;
        }
    }

    // Socle degree 3: all positive (1, a, b, c) with a <= 4, b <= 8, c <= 6.
    for a in 1..=4u64 {
        let space = NaiveSpace::build(a as u32, 3);
        for b in 1..=8u64 {
            for c in 1..=6u64 {
                let h = HVector::new(vec![1, a, b, c]).unwrap();
                let naive = space.any_subset_realizes(c as usize, h.entries());
                let decision = decide_pure_o_sequence(&h, &limits);
                assert_ne!(decision.verdict, Verdict::Inconclusive, "{h}");
                assert_eq!(
                    decision.verdict == Verdict::Pure,
                    naive,
                    "canonical search and naive enumeration disagree on {h}"
                );
                checked += 1;
                pure += naive as usize;
            }
        }
    }

    // Socle degree 4, the regime of the flat-family classification: all
    // positive (1, a, b, c, d) with a <= 4, b, c <= 6, d <= 4.
    for a in 1..=4u64 {
        let space = NaiveSpace::build(a as u32, 4);
        for b in 1..=6u64 {
            for c in 1..=6u64 {
                for d in 1..=4u64 {
                    let h = HVector::new(vec![1, a, b, c, d]).unwrap();
                    let naive = space.any_subset_realizes(d as usize, h.entries());
                    let decision = decide_pure_o_sequence(&h, &limits);
                    assert_ne!(decision.verdict, Verdict::Inconclusive, "{h}");
                    assert_eq!(
                        decision.verdict == Verdict::Pure,
                        naive,
                        "canonical search and naive enumeration disagree on {h}"
                    );
                    checked += 1;
                    pure += naive as usize;
                }
            }
        }
    }

    println!("cross-check: {checked} sequences compared, {pure} pure");
    assert!(pure > 0);
}

/// The catalog must contain exactly the h-vectors that naive subset
/// enumeration produces, one entry each.
#[test]
fn enumerate_agrees_with_naive_subsets() {
    for (s, n, g) in [(2u32, 2u32, 3u32), (3, 2, 4), (4, 3, 3), (3, 4, 3)] {
        let universe = monomials_of_degree(s, n as u64);
        let mut expected: BTreeSet<Vec<u64>> = BTreeSet::new();
        let count = universe.len();
        for set in 1u32..(1 << count) {
            if set.count_ones() > g {
                continue;
            }
            let gens = GeneratorSet::new(
                (0..count)
                    .filter(|i| set & (1 << i) != 0)
                    .map(|i| universe[i].clone()),
            )
            .unwrap();
            expected.insert(OrderIdeal::closure(&gens).h_vector().entries().to_vec());
        }

        let entries = enumerate_pure_hvectors(s, n, g).unwrap();
        let got: BTreeSet<Vec<u64>> = entries.iter().map(|e| e.h.entries().to_vec()).collect();
        assert_eq!(got, expected, "catalog mismatch at (s={s}, n={n}, g={g})");
        assert_eq!(entries.len(), got.len(), "duplicate h-vectors in catalog");

        // Every witness revalidates and stays within the declared bounds.
        for e in &entries {
            let ideal = OrderIdeal::closure(&e.witness);
            assert_eq!(ideal.h_vector(), e.h);
            assert!(ideal.is_pure());
            assert!(e.vars <= s && e.gens <= g);
            assert_eq!(u64::from(e.vars), e.h.get(1).unwrap());
            assert_eq!(u64::from(e.gens), e.h.get(e.h.socle_degree()).unwrap());
        }
    }
}

/// Frozen example: the four pure h-vectors reachable from at most three
/// degree-2 generators on two variables.
#[test]
fn enumerate_2_2_3_frozen() {
    let entries = enumerate_pure_hvectors(2, 2, 3).unwrap();
    let hs: Vec<String> = entries.iter().map(|e| e.h.to_string()).collect();
    assert_eq!(hs, vec!["1,1,1", "1,2,1", "1,2,2", "1,2,3"]);
}
