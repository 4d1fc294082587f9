//! Monomials over indexed variables: text grammar, divisibility, divisor
//! enumeration.
//!
//! A monomial is a finite product `x_{i1}^{e1} * x_{i2}^{e2} * ...` of
//! distinct indexed variables with positive exponents. The unit monomial `1`
//! has an empty exponent map and degree 0. Variable indices are arbitrary
//! positive integers; nothing downstream depends on them being contiguous.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A monomial stored as a sparse exponent map. Zero exponents are never
/// stored, so structural equality coincides with mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exponents: BTreeMap<u32, u32>,
}

/// Error produced by the monomial parser. Positions are byte offsets into
/// the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("variable index 0 at byte {pos} (indices start at 1)")]
    ZeroVariable { pos: usize },
    #[error("exponent 0 at byte {pos} (exponents must be positive)")]
    ZeroExponent { pos: usize },
    #[error("integer at byte {pos} is too large")]
    IntTooLarge { pos: usize },
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// A single variable `x_index`.
    ///
    /// Panics if `index` is 0; variable indices start at 1.
    pub fn variable(index: u32) -> Self {
        Self::power(index, 1)
    }

    /// The pure power `x_index^exponent`.
    pub fn power(index: u32, exponent: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        assert!(exponent >= 1, "exponents must be positive");
        let mut exponents = BTreeMap::new();
        exponents.insert(index, exponent);
        Monomial { exponents }
    }

    /// Builds a monomial from `(variable index, exponent)` pairs; repeated
    /// indices accumulate.
    ///
    /// Panics on a zero index or zero exponent.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (index, exponent) in pairs {
            assert!(index >= 1, "variable indices start at 1");
            assert!(exponent >= 1, "exponents must be positive");
            *m.exponents.entry(index).or_insert(0) += exponent;
        }
        m
    }

    /// True for the unit monomial.
    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    /// Exponent of `x_index` (0 when the variable does not occur).
    pub fn exponent(&self, index: u32) -> u32 {
        self.exponents.get(&index).copied().unwrap_or(0)
    }

    /// Iterates over `(variable index, exponent)` pairs in increasing index
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exponents.iter().map(|(&i, &e)| (i, e))
    }

    /// The set of variable indices with exponent >= 1.
    pub fn support(&self) -> BTreeSet<u32> {
        self.exponents.keys().copied().collect()
    }

    /// True iff `self` divides `other`, i.e. every exponent of `self` is at
    /// most the matching exponent of `other`. The unit divides everything.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().all(|(&i, &e)| e <= other.exponent(i))
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&i, &e) in &other.exponents {
            *exponents.entry(i).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    /// All divisors of `self` having total degree exactly `d`.
    ///
    /// Returns an error when `d > degree(self)`; the unit is the sole
    /// degree-0 divisor. Enumeration is a direct product over exponent
    /// ranges with degree pruning, which is fine at the degrees in scope.
    pub fn divisors_of_degree(&self, d: u64) -> Result<BTreeSet<Monomial>, DegreeRangeError> {
        if d > self.degree() {
            return Err(DegreeRangeError {
                requested: d,
                degree: self.degree(),
            });
        }
        let vars: Vec<(u32, u32)> = self.iter().collect();
        let mut out = BTreeSet::new();
        let mut stack: Vec<(u32, u32)> = Vec::with_capacity(vars.len());
        collect_divisors(&vars, 0, d, &mut stack, &mut out);
        Ok(out)
    }

    /// All divisors of `self`, the unit included.
    pub fn divisors(&self) -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for d in 0..=self.degree() {
            // Degree bound checked above, so unwrap is fine.
            out.extend(self.divisors_of_degree(d).unwrap());
        }
        out
    }

    /// Applies a variable relabeling. `map` must be injective on the
    /// support; exponents are carried over unchanged.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .map(|(&i, &e)| (*map.get(&i).expect("relabeling must cover the support"), e))
            .collect();
        Monomial { exponents }
    }
}

/// Requested divisor degree exceeds the degree of the monomial.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("requested divisor degree {requested} exceeds monomial degree {degree}")]
pub struct DegreeRangeError {
    pub requested: u64,
    pub degree: u64,
}

fn collect_divisors(
    vars: &[(u32, u32)],
    from: usize,
    remaining: u64,
    stack: &mut Vec<(u32, u32)>,
    out: &mut BTreeSet<Monomial>,
) {
    if remaining == 0 {
        out.insert(Monomial::from_pairs(stack.iter().copied()));
        return;
    }
    // Degree still available in the tail; prune dead branches.
    let tail: u64 = vars[from..].iter().map(|&(_, e)| u64::from(e)).sum();
    if tail < remaining {
        return;
    }
    let (index, max_e) = vars[from];
    let cap = u64::from(max_e).min(remaining) as u32;
    for e in 0..=cap {
        if e > 0 {
            stack.push((index, e));
        }
        collect_divisors(vars, from + 1, remaining - u64::from(e), stack, out);
        if e > 0 {
            stack.pop();
        }
    }
}

impl fmt::Display for Monomial {
    /// Canonical printing: factors in increasing variable index, `^1`
    /// omitted, `1` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = ParseError;

    /// Parses the grammar `monomial := "1" | factor ("*" factor)*`,
    /// `factor := "x" INT ("^" INT)?`. No whitespace; repeated variables
    /// accumulate exponents.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bytes = s.as_bytes();
        if bytes == b"1" {
            return Ok(Monomial::one());
        }
        let mut pos = 0usize;
        let mut m = Monomial::one();
        loop {
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "'x'",
                });
            }
            pos += 1;
            let (index, next) = parse_int(bytes, pos)?;
            if index == 0 {
                return Err(ParseError::ZeroVariable { pos });
            }
            pos = next;
            let exponent = if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let (e, next) = parse_int(bytes, pos)?;
                if e == 0 {
                    return Err(ParseError::ZeroExponent { pos });
                }
                pos = next;
                e
            } else {
                1
            };
            *m.exponents.entry(index).or_insert(0) += exponent;
            if pos == bytes.len() {
                return Ok(m);
            }
            if bytes[pos] != b'*' {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "'*' or end of input",
                });
            }
            pos += 1;
        }
    }
}

fn parse_int(bytes: &[u8], pos: usize) -> Result<(u32, usize), ParseError> {
    let mut end = pos;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == pos {
        return Err(ParseError::Syntax {
            pos,
            expected: "a digit",
        });
    }
    let mut value: u32 = 0;
    for &b in &bytes[pos..end] {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(u32::from(b - b'0')))
            .ok_or(ParseError::IntTooLarge { pos })?;
    }
    Ok((value, end))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_basic() {
        assert_eq!(m("x1*x2^3"), Monomial::from_pairs([(1, 1), (2, 3)]));
        assert_eq!(m("1"), Monomial::one());
        assert_eq!(m("1").degree(), 0);
        // Factors accumulate.
        assert_eq!(m("x1*x1^2"), Monomial::from_pairs([(1, 3)]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "x0".parse::<Monomial>(),
            Err(ParseError::ZeroVariable { pos: 1 })
        ));
        assert!(matches!(
            "x1^0".parse::<Monomial>(),
            Err(ParseError::ZeroExponent { pos: 3 })
        ));
        assert!(matches!(
            "x1**x2".parse::<Monomial>(),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            "y1".parse::<Monomial>(),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
        // "1" is a complete monomial, not a factor.
        assert!("1*x1".parse::<Monomial>().is_err());
        assert!("".parse::<Monomial>().is_err());
        assert!("x1*".parse::<Monomial>().is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Monomial::one().degree(), 0);
        assert_eq!(m("x1*x2^3").degree(), 4);
        assert_eq!(m("x1*x2*x3").degree(), 3);
    }

    #[test]
    fn divides_examples() {
        assert!(m("x2^2").divides(&m("x1*x2^3")));
        assert!(!m("x3").divides(&m("x1*x2^3")));
        assert!(Monomial::one().divides(&m("x1*x2^3")));
        assert!(Monomial::one().divides(&Monomial::one()));
    }

    #[test]
    fn divisors_of_degree_examples() {
        let u = m("x1*x2^3");
        let d2 = u.divisors_of_degree(2).unwrap();
        assert_eq!(
            d2,
            [m("x1*x2"), m("x2^2")].into_iter().collect::<BTreeSet<_>>()
        );
        // All pairs from a square-free degree-4 monomial.
        let sq = m("x1*x2*x3*x4");
        assert_eq!(sq.divisors_of_degree(2).unwrap().len(), 6);
        assert_eq!(
            u.divisors_of_degree(0).unwrap(),
            [Monomial::one()].into_iter().collect::<BTreeSet<_>>()
        );
        assert!(u.divisors_of_degree(5).is_err());
    }

    #[test]
    fn divisors_of_degree_matches_brute_force() {
        // Independent oracle: filter all exponent vectors below u.
        let u = m("x1^2*x3*x5^3");
        let vars: Vec<(u32, u32)> = u.iter().collect();
        for d in 0..=u.degree() {
            let fast = u.divisors_of_degree(d).unwrap();
            let mut slow = BTreeSet::new();
            let total: u64 = vars.iter().map(|&(_, e)| u64::from(e) + 1).product();
            for code in 0..total {
                let mut c = code;
                let mut pairs = Vec::new();
                for &(i, e) in &vars {
                    let choice = (c % (u64::from(e) + 1)) as u32;
                    c /= u64::from(e) + 1;
                    if choice > 0 {
                        pairs.push((i, choice));
                    }
                }
                let v = Monomial::from_pairs(pairs);
                if v.degree() == d {
                    slow.insert(v);
                }
            }
            assert_eq!(fast, slow, "degree {d}");
        }
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            m("x1*x2^3").support(),
            [1, 2].into_iter().collect::<BTreeSet<_>>()
        );
        assert!(Monomial::one().support().is_empty());
        assert_eq!(
            m("x5^4").support(),
            [5].into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn display_canonical() {
        assert_eq!(m("x2^3*x1").to_string(), "x1*x2^3");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(m("x7").to_string(), "x7");
    }
}
