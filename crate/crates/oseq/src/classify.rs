//! Closed-form decisions and explicit witnesses for the flat families
//! `(1, a, a, ..., a, b)`, plus the p/q counting profile and the
//! generator-shape test.
//!
//! The decision table:
//! - `n >= 4`: pure iff `b <= a <= 2b`
//! - `n = 3`:  pure iff `ceil(a/3) <= b <= a`
//! - `n = 2`:  pure iff `ceil(a/2) <= b <= C(a+1, 2)`
//! - `n = 1`:  the sequence `(1, a)` read with `b = a`; pure iff `b = a`
//!
//! Pure verdicts carry an explicit generator-set witness whose closure
//! realizes the target sequence; the constructions are deterministic, so
//! equal queries produce byte-identical witnesses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::macaulay::binomial;
use crate::monomial::Monomial;
use crate::order_ideal::{GeneratorSet, HVector};

/// Query for the flat family: socle degree `n`, `h_1 = ... = h_{n-1} = a`,
/// `h_n = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlatQuery {
    pub n: u32,
    pub a: u64,
    pub b: u64,
}

/// Upper bound on `a` and `b` in queries that may have to materialize a
/// witness; a witness for larger parameters would not fit in memory
/// anyway.
pub const MAX_FLAT_PARAM: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("flat query requires 1 <= n and 1 <= a, b <= {MAX_FLAT_PARAM}")]
    InvalidQuery,
    #[error("parameters out of range ({reason:?}): {detail}")]
    OutOfRange { reason: Reason, detail: String },
    #[error("generators must all have degree {expected}, found degree {found}")]
    MixedDegree { expected: u64, found: u64 },
}

impl FlatQuery {
    pub fn new(n: u32, a: u64, b: u64) -> Result<Self, ClassifyError> {
        if n < 1 || a < 1 || b < 1 || a > MAX_FLAT_PARAM || b > MAX_FLAT_PARAM {
            return Err(ClassifyError::InvalidQuery);
        }
        Ok(FlatQuery { n, a, b })
    }

    /// The h-vector this query describes. At `n = 1` the sequence is
    /// `(1, a)`; `b` is compared against `a` by the decision procedure.
    pub fn h_vector(&self) -> HVector {
        if self.n == 1 {
            HVector::new(vec![1, self.a]).expect("a >= 1")
        } else {
            HVector::flat(self.n as usize, self.a, self.b).expect("entries positive")
        }
    }
}

/// Outcome of a membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pure,
    NotPure,
    /// Only the search oracle produces this: a budget ran out before the
    /// search completed.
    Inconclusive,
}

/// Why a query was rejected (or could not be settled).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    BelowLowerBound,
    AboveUpperBound,
    ExceedsTwiceSocle,
    MacaulayViolation,
    /// The exhaustive search completed without finding a witness.
    SearchExhausted,
    NodeBudgetExceeded,
    TimeBudgetExceeded,
    MaxVariablesExceeded,
    MaxGeneratorsExceeded,
}

/// Citation tag of the applied result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "theorem-flat")]
    TheoremFlat,
    #[serde(rename = "prop-2.1-i")]
    Prop21i,
    #[serde(rename = "prop-2.1-ii")]
    Prop21ii,
    #[serde(rename = "lemma-1.1")]
    Lemma11,
    #[serde(rename = "lemma-1.3")]
    Lemma13,
    #[serde(rename = "n1-convention")]
    N1Convention,
    #[serde(rename = "macaulay")]
    Macaulay,
    #[serde(rename = "search")]
    Search,
}

/// The query a decision answers, serialized either as the `(n, a, b)`
/// triple or as the raw sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Query {
    Flat(FlatQuery),
    Sequence(HVector),
}

/// A settled membership query: verdict, the rule that settled it, an
/// optional rejection reason, and a witness for pure verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub query: Query,
    pub verdict: Verdict,
    pub rule: Rule,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<GeneratorSet>,
}

impl Decision {
    /// Copy with the witness dropped from serialization.
    pub fn without_witness(&self) -> Decision {
        Decision {
            witness: None,
            ..self.clone()
        }
    }
}

/// Partition plan behind a witness construction: either `a = 2*s1 + s2`
/// with `s1 + s2 = b` (socle-degree >= 2 family) or `a = 3*t1 + 2*t2 + t3`
/// with `t1 + t2 + t3 = b` (socle degree 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionPlan {
    Pairs { s1: u64, s2: u64 },
    Triples { t1: u64, t2: u64, t3: u64 },
}

impl PartitionPlan {
    /// Partition of `a` into exactly `b` parts of size at most 2; forced
    /// to `s1 = a - b` pairs and `s2 = 2b - a` singletons. Requires
    /// `ceil(a/2) <= b <= a`.
    pub fn pairs(a: u64, b: u64) -> PartitionPlan {
        assert!(b <= a && 2 * b >= a, "b must lie in [ceil(a/2), a]");
        PartitionPlan::Pairs {
            s1: a - b,
            s2: 2 * b - a,
        }
    }

    /// Partition of `a` into exactly `b` parts of size at most 3,
    /// maximizing the number of 3-parts and then of 2-parts, which forces
    /// `t2 = (a - b) mod 2`. Requires `ceil(a/3) <= b <= a`.
    pub fn triples(a: u64, b: u64) -> PartitionPlan {
        assert!(b <= a && 3 * b >= a, "b must lie in [ceil(a/3), a]");
        let t1 = (a - b) / 2;
        let t2 = (a - b) - 2 * t1;
        let t3 = b - t1 - t2;
        debug_assert_eq!(3 * t1 + 2 * t2 + t3, a);
        debug_assert_eq!(t1 + t2 + t3, b);
        PartitionPlan::Triples { t1, t2, t3 }
    }
}

/// Decides whether `(1, a, ..., a, b)` of socle degree `n` is a pure
/// O-sequence, from the classification table alone. Pure verdicts carry
/// the matching constructor's witness.
pub fn decide_flat(query: FlatQuery) -> Decision {
    let FlatQuery { n, a, b } = query;
    let q = Query::Flat(query);
    let pure = |rule: Rule, witness: GeneratorSet| Decision {
        query: q.clone(),
        verdict: Verdict::Pure,
        rule,
        reason: None,
        witness: Some(witness),
    };
    let not_pure = |rule: Rule, reason: Reason| Decision {
        query: q.clone(),
        verdict: Verdict::NotPure,
        rule,
        reason: Some(reason),
        witness: None,
    };

    match n {
        1 => {
            // (1, a) is always pure; the query convention reads it with b = a.
            if b == a {
                let gens = GeneratorSet::new((1..=a as u32).map(Monomial::variable))
                    .expect("a >= 1 distinct variables");
                pure(Rule::N1Convention, gens)
            } else if b > a {
                not_pure(Rule::N1Convention, Reason::AboveUpperBound)
            } else {
                not_pure(Rule::N1Convention, Reason::BelowLowerBound)
            }
        }
        2 => {
            let upper = binomial(a + 1, 2);
            if b < a.div_ceil(2) {
                not_pure(Rule::Prop21i, Reason::BelowLowerBound)
            } else if upper.is_some_and(|u| b > u) {
                not_pure(Rule::Prop21i, Reason::AboveUpperBound)
            } else {
                pure(Rule::Prop21i, witness_socle2(a, b).expect("in range"))
            }
        }
        3 => {
            if b > a {
                not_pure(Rule::Lemma11, Reason::AboveUpperBound)
            } else if b < a.div_ceil(3) {
                not_pure(Rule::Prop21ii, Reason::BelowLowerBound)
            } else {
                pure(Rule::Prop21ii, witness_socle3(a, b).expect("in range"))
            }
        }
        _ => {
            if 2 * b < a {
                not_pure(Rule::Lemma13, Reason::ExceedsTwiceSocle)
            } else if b > a {
                not_pure(Rule::Lemma11, Reason::AboveUpperBound)
            } else {
                pure(Rule::TheoremFlat, witness_flat(n, a, b).expect("in range"))
            }
        }
    }
}

/// Witness for `(1, a, ..., a, b)` of socle degree `n >= 2`, valid for
/// `ceil(a/2) <= b <= a`: partition `a` into exactly `b` parts of size at
/// most 2, i.e. `s1 = a - b` pairs and `s2 = 2b - a` singletons, and place
/// `x*y^(n-1)` on each pair and an n-th power on each singleton, all on
/// disjoint variables.
pub fn witness_flat(n: u32, a: u64, b: u64) -> Result<GeneratorSet, ClassifyError> {
    if n < 2 || a < 1 || b < 1 || a > MAX_FLAT_PARAM {
        return Err(ClassifyError::InvalidQuery);
    }
    if b > a {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::AboveUpperBound,
            detail: format!("b = {b} exceeds a = {a}"),
        });
    }
    if b < a.div_ceil(2) {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::BelowLowerBound,
            detail: format!("b = {b} below ceil(a/2) = {}", a.div_ceil(2)),
        });
    }
    let PartitionPlan::Pairs { s1, s2 } = PartitionPlan::pairs(a, b) else {
        unreachable!()
    };
    let mut gens = Vec::new();
    for i in 0..s1 {
        let x = (2 * i + 1) as u32;
        let y = (2 * i + 2) as u32;
        gens.push(Monomial::from_pairs([(x, 1), (y, n - 1)]));
    }
    for j in 0..s2 {
        let z = (2 * s1 + j + 1) as u32;
        gens.push(Monomial::power(z, n));
    }
    Ok(GeneratorSet::new(gens).expect("b >= 1 disjoint generators"))
}

/// Witness for `(1, a, a, b)`, valid for `ceil(a/3) <= b <= a`: partition
/// `a` into exactly `b` parts of size at most 3, greedily taking as many
/// 3-parts as possible, then place a square-free triple / `y1*y2^2` /
/// a cube on each part, all on disjoint variables.
pub fn witness_socle3(a: u64, b: u64) -> Result<GeneratorSet, ClassifyError> {
    if a < 1 || b < 1 || a > MAX_FLAT_PARAM {
        return Err(ClassifyError::InvalidQuery);
    }
    if b > a {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::AboveUpperBound,
            detail: format!("b = {b} exceeds a = {a}"),
        });
    }
    if b < a.div_ceil(3) {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::BelowLowerBound,
            detail: format!("b = {b} below ceil(a/3) = {}", a.div_ceil(3)),
        });
    }
    let PartitionPlan::Triples { t1, t2, t3 } = PartitionPlan::triples(a, b) else {
        unreachable!()
    };
    let mut gens = Vec::new();
    let mut next: u32 = 1;
    for _ in 0..t1 {
        gens.push(Monomial::from_pairs([
            (next, 1),
            (next + 1, 1),
            (next + 2, 1),
        ]));
        next += 3;
    }
    for _ in 0..t2 {
        gens.push(Monomial::from_pairs([(next, 1), (next + 1, 2)]));
        next += 2;
    }
    for _ in 0..t3 {
        gens.push(Monomial::power(next, 3));
        next += 1;
    }
    Ok(GeneratorSet::new(gens).expect("b >= 1 disjoint generators"))
}

/// Witness for `(1, a, b)`, valid for `ceil(a/2) <= b <= C(a+1, 2)`:
/// start with `floor(a/2)` disjoint pairs plus, for odd `a`, the square
/// `x_a^2`, so the first `ceil(a/2)` generators already touch all `a`
/// variables; then append further distinct quadratics in `x_i*x_j` order
/// (`i <= j`, lexicographic) until `b` generators are placed.
pub fn witness_socle2(a: u64, b: u64) -> Result<GeneratorSet, ClassifyError> {
    if a < 1 || b < 1 || a > MAX_FLAT_PARAM || b > MAX_FLAT_PARAM {
        return Err(ClassifyError::InvalidQuery);
    }
    let lower = a.div_ceil(2);
    if b < lower {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::BelowLowerBound,
            detail: format!("b = {b} below ceil(a/2) = {lower}"),
        });
    }
    let upper = binomial(a + 1, 2).ok_or_else(|| ClassifyError::OutOfRange {
        reason: Reason::AboveUpperBound,
        detail: format!("C({}+1, 2) overflows", a),
    })?;
    if b > upper {
        return Err(ClassifyError::OutOfRange {
            reason: Reason::AboveUpperBound,
            detail: format!("b = {b} exceeds C(a+1, 2) = {upper}"),
        });
    }
    let quad = |i: u64, j: u64| {
        if i == j {
            Monomial::power(i as u32, 2)
        } else {
            Monomial::from_pairs([(i as u32, 1), (j as u32, 1)])
        }
    };
    let mut gens = Vec::new();
    let mut present = std::collections::BTreeSet::new();
    let mut place = |gens: &mut Vec<Monomial>, m: Monomial| {
        if present.insert(m.clone()) {
            gens.push(m);
            true
        } else {
            false
        }
    };
    for i in 0..a / 2 {
        place(&mut gens, quad(2 * i + 1, 2 * i + 2));
    }
    if a % 2 == 1 {
        place(&mut gens, quad(a, a));
    }
    let mut remaining = b - lower;
    'fill: for i in 1..=a {
        for j in i..=a {
            if remaining == 0 {
                break 'fill;
            }
            if place(&mut gens, quad(i, j)) {
                remaining -= 1;
            }
        }
    }
    debug_assert_eq!(remaining, 0);
    Ok(GeneratorSet::new(gens).expect("distinct quadratics"))
}

/// Per-generator counts from the ordered set `u_1, ..., u_b`:
/// `p_j` = variables of `u_j` dividing none of `u_1, ..., u_{j-1}`,
/// `q_j` = degree-2 divisors of `u_j` dividing none of `u_1, ..., u_{j-1}`.
/// The sums recover `h_1` and (for generators of degree >= 2) `h_2` of the
/// generated ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PQProfile {
    pub generators: GeneratorSet,
    pub p: Vec<u64>,
    pub q: Vec<u64>,
    pub sum_p: u64,
    pub sum_q: u64,
}

/// Computes the p/q profile of an ordered generator set.
pub fn pq_profile(gens: &GeneratorSet) -> PQProfile {
    let mut seen_vars = std::collections::BTreeSet::new();
    let mut seen_quads = std::collections::BTreeSet::new();
    let mut p = Vec::with_capacity(gens.len());
    let mut q = Vec::with_capacity(gens.len());
    for g in gens.iter() {
        let mut new_vars = 0u64;
        for v in g.support() {
            if seen_vars.insert(v) {
                new_vars += 1;
            }
        }
        p.push(new_vars);
        let mut new_quads = 0u64;
        if g.degree() >= 2 {
            for d in g.divisors_of_degree(2).expect("degree checked") {
                if seen_quads.insert(d) {
                    new_quads += 1;
                }
            }
        }
        q.push(new_quads);
    }
    PQProfile {
        generators: gens.clone(),
        sum_p: p.iter().sum(),
        sum_q: q.iter().sum(),
        p,
        q,
    }
}

/// True iff every generator is a pure power `x^n` or of the form
/// `x*y^(n-1)` with `x != y`. All generators must have degree `n`.
pub fn check_generator_shape(gens: &GeneratorSet, n: u64) -> Result<bool, ClassifyError> {
    for g in gens.iter() {
        if g.degree() != n {
            return Err(ClassifyError::MixedDegree {
                expected: n,
                found: g.degree(),
            });
        }
    }
    Ok(gens.iter().all(|g| {
        let exps: Vec<u32> = g.iter().map(|(_, e)| e).collect();
        match exps.as_slice() {
            [e] => u64::from(*e) == n,
            [e1, e2] => {
                let (lo, hi) = (*e1.min(e2), *e1.max(e2));
                lo == 1 && u64::from(hi) == n - 1
            }
            _ => false,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order_ideal::OrderIdeal;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn gens(items: &[&str]) -> GeneratorSet {
        GeneratorSet::new(items.iter().map(|s| m(s))).unwrap()
    }

    fn assert_witness(d: &Decision, target: &HVector) {
        let w = d.witness.as_ref().expect("pure verdicts carry a witness");
        let ideal = OrderIdeal::closure(w);
        assert_eq!(&ideal.h_vector(), target);
        assert!(ideal.is_pure());
    }

    #[test]
    fn decide_examples() {
        let d = decide_flat(FlatQuery::new(4, 4, 2).unwrap());
        assert_eq!(d.verdict, Verdict::Pure);
        assert_eq!(d.rule, Rule::TheoremFlat);
        assert_witness(&d, &HVector::flat(4, 4, 2).unwrap());

        let d = decide_flat(FlatQuery::new(4, 5, 2).unwrap());
        assert_eq!(d.verdict, Verdict::NotPure);
        assert_eq!(d.reason, Some(Reason::ExceedsTwiceSocle));
        assert_eq!(d.rule, Rule::Lemma13);

        let d = decide_flat(FlatQuery::new(3, 4, 5).unwrap());
        assert_eq!(d.verdict, Verdict::NotPure);
        assert_eq!(d.reason, Some(Reason::AboveUpperBound));
        assert_eq!(d.rule, Rule::Lemma11);

        let d = decide_flat(FlatQuery::new(2, 3, 6).unwrap());
        assert_eq!(d.verdict, Verdict::Pure);
        assert_eq!(d.rule, Rule::Prop21i);
        assert_witness(&d, &"1,3,6".parse().unwrap());
    }

    #[test]
    fn decide_n1_convention() {
        assert_eq!(
            decide_flat(FlatQuery::new(1, 3, 3).unwrap()).verdict,
            Verdict::Pure
        );
        let d = decide_flat(FlatQuery::new(1, 3, 2).unwrap());
        assert_eq!(d.verdict, Verdict::NotPure);
        assert_eq!(d.rule, Rule::N1Convention);
    }

    #[test]
    fn witness_flat_examples() {
        let w = witness_flat(4, 5, 3).unwrap();
        assert!(w.same_set(&gens(&["x1*x2^3", "x3*x4^3", "x5^4"])));
        assert_eq!(
            OrderIdeal::closure(&w).h_vector(),
            "1,5,5,5,3".parse().unwrap()
        );

        let w = witness_flat(4, 3, 3).unwrap();
        assert!(w.same_set(&gens(&["x1^4", "x2^4", "x3^4"])));

        let w = witness_flat(2, 4, 2).unwrap();
        assert!(w.same_set(&gens(&["x1*x2", "x3*x4"])));
        assert_eq!(OrderIdeal::closure(&w).h_vector(), "1,4,2".parse().unwrap());

        assert!(witness_flat(4, 5, 2).is_err());
        assert!(witness_flat(4, 5, 6).is_err());
    }

    #[test]
    fn witness_socle3_examples() {
        let w = witness_socle3(7, 3).unwrap();
        assert!(w.same_set(&gens(&["x1*x2*x3", "x4*x5*x6", "x7^3"])));
        assert_eq!(
            OrderIdeal::closure(&w).h_vector(),
            "1,7,7,3".parse().unwrap()
        );

        let w = witness_socle3(4, 3).unwrap();
        assert!(w.same_set(&gens(&["x1*x2^2", "x3^3", "x4^3"])));

        let w = witness_socle3(3, 1).unwrap();
        assert!(w.same_set(&gens(&["x1*x2*x3"])));

        assert!(witness_socle3(7, 2).is_err());
        assert!(witness_socle3(3, 4).is_err());
    }

    #[test]
    fn witness_socle2_examples() {
        let w = witness_socle2(5, 3).unwrap();
        assert!(w.same_set(&gens(&["x1*x2", "x3*x4", "x5^2"])));
        assert_eq!(OrderIdeal::closure(&w).h_vector(), "1,5,3".parse().unwrap());

        let w = witness_socle2(3, 6).unwrap();
        assert!(w.same_set(&gens(&["x1*x2", "x3^2", "x1^2", "x1*x3", "x2^2", "x2*x3"])));

        let err = witness_socle2(4, 1).unwrap_err();
        assert!(matches!(
            err,
            ClassifyError::OutOfRange {
                reason: Reason::BelowLowerBound,
                ..
            }
        ));
    }

    #[test]
    fn witnesses_reject_degenerate_parameters() {
        assert!(witness_flat(1, 3, 2).is_err());
        assert!(witness_flat(4, 0, 0).is_err());
        assert!(witness_socle2(0, 0).is_err());
        assert!(witness_socle3(0, 1).is_err());
        assert!(FlatQuery::new(4, 2_000_000, 3).is_err());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let w1 = witness_flat(5, 9, 6).unwrap();
        let w2 = witness_flat(5, 9, 6).unwrap();
        assert_eq!(w1.to_text(), w2.to_text());
        assert_eq!(
            serde_json::to_string(&w1).unwrap(),
            serde_json::to_string(&w2).unwrap()
        );
    }

    #[test]
    fn pq_examples() {
        let profile = pq_profile(&gens(&["x1*x2^3", "x3*x4^3", "x5^4"]));
        assert_eq!(profile.p, vec![2, 2, 1]);
        assert_eq!(profile.q, vec![2, 2, 1]);
        assert_eq!(profile.sum_p, 5);
        assert_eq!(profile.sum_q, 5);

        let profile = pq_profile(&gens(&["x1*x2*x3*x4"]));
        assert_eq!(profile.p, vec![4]);
        assert_eq!(profile.q, vec![6]);

        let profile = pq_profile(&gens(&["x1^3"]));
        assert_eq!(profile.p, vec![1]);
        assert_eq!(profile.q, vec![1]);
    }

    #[test]
    fn pq_sums_match_ideal_strata() {
        let g = gens(&["x1*x2^3", "x2*x3^3", "x1^2*x4^2", "x4^4"]);
        let profile = pq_profile(&g);
        let h = OrderIdeal::closure(&g).h_vector();
        assert_eq!(profile.sum_p, h.get(1).unwrap());
        assert_eq!(profile.sum_q, h.get(2).unwrap());
    }

    #[test]
    fn shape_examples() {
        assert!(check_generator_shape(&gens(&["x1*x2^3", "x3^4"]), 4).unwrap());
        assert!(!check_generator_shape(&gens(&["x1*x2*x3^2"]), 4).unwrap());
        assert!(!check_generator_shape(&gens(&["x1^2*x2^2"]), 4).unwrap());
        assert!(check_generator_shape(&gens(&["x1*x2"]), 2).unwrap());
        assert!(matches!(
            check_generator_shape(&gens(&["x1*x2^3", "x3^2"]), 4),
            Err(ClassifyError::MixedDegree { .. })
        ));
    }

    #[test]
    fn decision_json_shape() {
        let d = decide_flat(FlatQuery::new(4, 5, 2).unwrap());
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"query":{"n":4,"a":5,"b":2},"verdict":"NotPure","rule":"lemma-1.3","reason":"ExceedsTwiceSocle"}"#
        );

        let d = decide_flat(FlatQuery::new(2, 2, 2).unwrap());
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"query":{"n":2,"a":2,"b":2},"verdict":"Pure","rule":"prop-2.1-i","witness":["x1*x2","x1^2"]}"#
        );
    }
}
