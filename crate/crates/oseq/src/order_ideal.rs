//! Order ideals of monomials: downward closure, h-vectors, maximal
//! elements, purity.
//!
//! An order ideal is a finite set of monomials closed under divisibility;
//! it always contains the unit. Its h-vector counts members degree by
//! degree. The ideal is pure when all maximal elements share one degree.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::monomial::{Monomial, ParseError};

/// A finite, nonempty list of distinct monomials. Insertion order is kept
/// because some derived quantities (the p/q profile) read the generators in
/// a declared order; closure and h-vector ignore it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Monomial>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorSetError {
    #[error("generator set must be nonempty")]
    Empty,
    #[error("duplicate generator {0}")]
    Duplicate(String),
}

impl GeneratorSet {
    /// Builds a generator set, rejecting duplicates and emptiness.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Result<Self, GeneratorSetError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in gens {
            if !seen.insert(g.clone()) {
                return Err(GeneratorSetError::Duplicate(g.to_string()));
            }
            out.push(g);
        }
        if out.is_empty() {
            return Err(GeneratorSetError::Empty);
        }
        Ok(GeneratorSet { gens: out })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sets
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter()
    }

    pub fn as_slice(&self) -> &[Monomial] {
        &self.gens
    }

    /// All variable indices appearing in some generator.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    /// Set equality, ignoring generator order.
    pub fn same_set(&self, other: &GeneratorSet) -> bool {
        let a: BTreeSet<_> = self.gens.iter().collect();
        let b: BTreeSet<_> = other.gens.iter().collect();
        a == b
    }

    /// Parses the text format: one monomial per line, blank lines and `#`
    /// comments ignored. Duplicate lines are an error because they would
    /// silently change the top h-vector entry.
    pub fn parse_text(text: &str) -> Result<Self, GenSetParseError> {
        let mut gens: Vec<Monomial> = Vec::new();
        let mut seen = BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let m: Monomial = line.parse().map_err(|e: ParseError| GenSetParseError {
                line: lineno + 1,
                kind: GenSetParseErrorKind::Monomial(e),
            })?;
            if !seen.insert(m.clone()) {
                return Err(GenSetParseError {
                    line: lineno + 1,
                    kind: GenSetParseErrorKind::Duplicate(m.to_string()),
                });
            }
            gens.push(m);
        }
        if gens.is_empty() {
            return Err(GenSetParseError {
                line: 0,
                kind: GenSetParseErrorKind::Empty,
            });
        }
        Ok(GeneratorSet { gens })
    }

    /// Renders the text format, one canonical monomial per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.gens.iter().map(|g| g.to_string()))
    }
}

impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let gens = strings
            .iter()
            .map(|s| s.parse::<Monomial>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        GeneratorSet::new(gens).map_err(D::Error::custom)
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// Parse error for the generator-set text format, with a 1-based line
/// number (0 for whole-file errors).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct GenSetParseError {
    pub line: usize,
    pub kind: GenSetParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenSetParseErrorKind {
    #[error("{0}")]
    Monomial(ParseError),
    #[error("duplicate monomial {0}")]
    Duplicate(String),
    #[error("no generators found")]
    Empty,
}

/// A downward-closed set of monomials, stratified by degree.
/// `strata[d]` holds the members of degree `d`; `strata[0]` is `{1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    strata: Vec<BTreeSet<Monomial>>,
}

impl OrderIdeal {
    /// Smallest downward-closed set containing the generators: the union
    /// of all divisors of all generators.
    pub fn closure(gens: &GeneratorSet) -> OrderIdeal {
        let socle = gens.iter().map(|g| g.degree()).max().unwrap_or(0) as usize;
        let mut strata = vec![BTreeSet::new(); socle + 1];
        for g in gens.iter() {
            for v in g.divisors() {
                let d = v.degree() as usize;
                strata[d].insert(v);
            }
        }
        OrderIdeal { strata }
    }

    /// Largest member degree (the socle degree).
    pub fn socle_degree(&self) -> usize {
        self.strata.len() - 1
    }

    pub fn members(&self) -> impl Iterator<Item = &Monomial> {
        self.strata.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.strata.iter().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        false // closure always contains the unit
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.strata
            .get(m.degree() as usize)
            .is_some_and(|s| s.contains(m))
    }

    pub fn stratum(&self, degree: usize) -> Option<&BTreeSet<Monomial>> {
        self.strata.get(degree)
    }

    /// Degree-wise member counts `(h_0, ..., h_n)`.
    pub fn h_vector(&self) -> HVector {
        HVector {
            entries: self.strata.iter().map(|s| s.len() as u64).collect(),
        }
    }

    /// Members that strictly divide no other member. Their closure
    /// regenerates the ideal.
    pub fn maximal_elements(&self) -> GeneratorSet {
        let mut out = Vec::new();
        for d in 0..self.strata.len() {
            let above = self.strata.get(d + 1);
            for m in &self.strata[d] {
                let dominated = above
                    .map(|s| s.iter().any(|u| m.divides(u)))
                    .unwrap_or(false);
                if !dominated {
                    out.push(m.clone());
                }
            }
        }
        GeneratorSet::new(out).expect("an order ideal has at least one maximal element")
    }

    /// True iff all maximal elements share one degree.
    pub fn is_pure(&self) -> bool {
        let maximal = self.maximal_elements();
        let mut degrees = maximal.iter().map(|m| m.degree());
        let first = degrees.next().expect("nonempty");
        degrees.all(|d| d == first)
    }
}

/// An h-vector `(h_0, ..., h_n)` with `h_0 = 1` and all entries positive.
/// Zero entries are rejected outright: the classification setting works in
/// strictly positive sequences, and a zero would make the socle degree
/// ambiguous.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HVector {
    entries: Vec<u64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HVectorError {
    #[error("h-vector must be nonempty")]
    Empty,
    #[error("h_0 must be 1, got {0}")]
    LeadingEntry(u64),
    #[error("entry h_{index} is zero; positive entries required")]
    ZeroEntry { index: usize },
    #[error("entry {index} ({text:?}) is not a positive integer")]
    Token { index: usize, text: String },
}

impl HVector {
    /// Validates `h_0 = 1` and positivity of every entry.
    pub fn new(entries: Vec<u64>) -> Result<Self, HVectorError> {
        match entries.first() {
            None => return Err(HVectorError::Empty),
            Some(&h0) if h0 != 1 => return Err(HVectorError::LeadingEntry(h0)),
            _ => {}
        }
        if let Some(index) = entries.iter().position(|&e| e == 0) {
            return Err(HVectorError::ZeroEntry { index });
        }
        Ok(HVector { entries })
    }

    /// The flat sequence `(1, a, a, ..., a, b)` of socle degree `n`.
    pub fn flat(n: usize, a: u64, b: u64) -> Result<Self, HVectorError> {
        assert!(n >= 1);
        let mut entries = vec![1];
        entries.extend(std::iter::repeat_n(a, n - 1));
        entries.push(b);
        HVector::new(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.entries.get(i).copied()
    }

    /// Socle degree `n`; the sequence has `n + 1` entries.
    pub fn socle_degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// True when the sequence is `(1, a, ..., a, b)`, i.e. all non-end
    /// entries equal `h_1`.
    pub fn is_flat(&self) -> bool {
        let n = self.socle_degree();
        if n < 1 {
            return true;
        }
        let a = self.entries[1];
        (1..n).all(|i| self.entries[i] == a)
    }
}

impl fmt::Display for HVector {
    /// Text format: comma-separated entries, e.g. `1,5,5,5,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for HVector {
    type Err = HVectorError;

    fn from_str(s: &str) -> Result<Self, HVectorError> {
        let mut entries = Vec::new();
        for (index, token) in s.split(',').enumerate() {
            let token = token.trim();
            let value: u64 = token.parse().map_err(|_| HVectorError::Token {
                index,
                text: token.to_string(),
            })?;
            entries.push(value);
        }
        HVector::new(entries)
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter())
    }
}

impl<'de> Deserialize<'de> for HVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<u64>::deserialize(deserializer)?;
        HVector::new(entries).map_err(D::Error::custom)
    }
}
