//! Macaulay binomial representations and the O-sequence membership test.
//!
//! Every positive integer `v` has a unique greedy decomposition at index
//! `i`: `v = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)` with
//! `a_i > a_{i-1} > ... > a_j >= j >= 1`. The growth bound obtained by
//! bumping both binomial arguments is the largest value the next entry of
//! an h-vector may take.

use thiserror::Error;

use crate::order_ideal::HVector;

/// Greedy binomial decomposition of `value` at index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub value: u64,
    pub index: u32,
    /// Pairs `(a_k, k)` in decreasing `k`, so `value = sum C(a_k, k)`.
    pub terms: Vec<(u64, u32)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacaulayError {
    #[error("binomial growth bound overflows 64-bit arithmetic")]
    Overflow,
}

/// Exact binomial coefficient, `None` on u64 overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc.checked_mul((n - j) as u128)?;
        acc /= (j + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Largest `a` with `C(a, k) <= value`, by exponential climb plus binary
/// search. `value >= 1`, so `a = k` always works as a floor; an
/// overflowing binomial counts as "larger than value".
fn greedy_top(value: u64, k: u32) -> u64 {
    debug_assert!(value >= 1);
    let k = u64::from(k);
    let fits = |a: u64| binomial(a, k).is_some_and(|b| b <= value);
    let mut lo = k;
    let mut hi = k.saturating_add(1);
    while fits(hi) {
        lo = hi;
        if hi == u64::MAX {
            break;
        }
        hi = hi.saturating_mul(2);
    }
    while lo.saturating_add(1) < hi {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy Macaulay decomposition of `value` at index `i`.
///
/// `value >= 1` and `i >= 1`; the recursion always terminates because
/// `C(a, 1) = a` absorbs any remainder at index 1.
pub fn macaulay_rep(value: u64, i: u32) -> MacaulayRep {
    assert!(value >= 1, "value must be positive");
    assert!(i >= 1, "index must be positive");
    let mut terms = Vec::new();
    let mut remaining = value;
    let mut k = i;
    while remaining > 0 {
        debug_assert!(k >= 1);
        let a = greedy_top(remaining, k);
        remaining -= binomial(a, u64::from(k)).expect("greedy term fits in u64");
        terms.push((a, k));
        k -= 1;
    }
    debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
    MacaulayRep {
        value,
        index: i,
        terms,
    }
}

/// Maximum value of `h_{i+1}` given `h_i = value`: each term `C(a_k, k)`
/// of the decomposition becomes `C(a_k + 1, k + 1)`.
pub fn macaulay_growth(value: u64, i: u32) -> Result<u64, MacaulayError> {
    let rep = macaulay_rep(value, i);
    let mut total: u64 = 0;
    for &(a, k) in &rep.terms {
        let term = a
            .checked_add(1)
            .and_then(|a1| binomial(a1, u64::from(k) + 1))
            .ok_or(MacaulayError::Overflow)?;
        total = total.checked_add(term).ok_or(MacaulayError::Overflow)?;
    }
    Ok(total)
}

/// Macaulay's membership test: `h` is an O-sequence iff
/// `h_{i+1} <= macaulay_growth(h_i, i)` for `1 <= i <= n-1`. The step
/// from `h_0` to `h_1` is unconstrained.
///
/// A growth bound that overflows u64 is above any representable entry, so
/// that step passes; no wraparound can produce a wrong answer.
pub fn is_o_sequence(h: &HVector) -> bool {
    let entries = h.entries();
    for i in 1..entries.len().saturating_sub(1) {
        match macaulay_growth(entries[i], i as u32) {
            Ok(bound) if entries[i + 1] > bound => return false,
            _ => {}
        }
    }
    true
}
