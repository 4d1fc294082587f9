//! Exhaustive search oracle: decides pure-O-sequence membership for small
//! sequences by isomorph-free enumeration of generator sets, enumerates
//! catalogs of pure h-vectors, and sweeps grids against the closed-form
//! classification.
//!
//! A pure order ideal with h-vector `h` of socle degree `n` is exactly the
//! closure of `h_n` distinct degree-`n` monomials on `h_1` variables, so the
//! search walks ascending chains of such monomials. Variable relabelings
//! produce equal h-vectors, so only canonical representatives are expanded:
//! a generator list is grown only while it is the minimum of its orbit under
//! variable permutations (generators sorted ascending, lists compared
//! lexicographically). Removing the largest generator of a canonical set
//! leaves a canonical set, so every orbit is reached exactly once.
//!
//! Outcomes are deterministic for any worker count: the node budget is split
//! over top-level branches up front, each branch is explored sequentially,
//! and results are merged in branch order.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{decide_flat, Decision, FlatQuery, Query, Reason, Rule, Verdict};
use crate::macaulay::{binomial, is_o_sequence};
use crate::monomial::Monomial;
use crate::order_ideal::{GeneratorSet, HVector};

/// Budgets and guardrails for a search run. Exceeding the node or time
/// budget yields an explicit `Inconclusive` decision, never a silent wrong
/// answer.
///
/// The node budget is divided evenly across top-level search branches, so
/// node-budget outcomes do not depend on the worker count. Time-budget
/// outcomes are checked against the wall clock and can vary from run to run
/// near the limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest ambient variable count the search will attempt. Canonicity
    /// testing is factorial in this in the worst case; the default keeps
    /// runs at desk scale.
    pub max_variables: u32,
    /// Largest generator count the search will attempt.
    pub max_generators: u32,
    /// Total canonical nodes the search may expand.
    pub node_budget: u64,
    /// Wall-clock budget for one decision.
    pub time_budget: Duration,
    /// Worker cap; `None` uses the global thread pool.
    pub jobs: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_variables: 8,
            max_generators: 32,
            node_budget: 10_000_000,
            time_budget: Duration::from_secs(60),
            jobs: None,
        }
    }
}

impl SearchLimits {
    pub fn with_jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("guardrail exceeded: {0}")]
    Guardrail(String),
}

/// One enumerated pure h-vector with a canonical witness and search
/// statistics. `nodes` is the expansion count at which the witness was
/// first discovered, numbered as in a single-threaded run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub h: HVector,
    pub witness: GeneratorSet,
    pub vars: u32,
    pub gens: u32,
    pub nodes: u64,
}

// ---------------------------------------------------------------------------
// Dense rows
// ---------------------------------------------------------------------------
//
// Inside the search a monomial on `a` ambient variables is a length-`a`
// exponent vector; `Vec<u16>` ordering is the lexicographic total order used
// both for chain extension and for canonical comparison.

type Row = Vec<u16>;

/// All exponent vectors of length `nvars` summing to `degree`, sorted.
fn universe_rows(nvars: usize, degree: u32) -> Vec<Row> {
    let mut out = Vec::new();
    let mut row = vec![0u16; nvars];
    fill_rows(&mut row, 0, degree, &mut out);
    out.sort_unstable();
    out
}

fn fill_rows(row: &mut Row, pos: usize, remaining: u32, out: &mut Vec<Row>) {
    if pos + 1 == row.len() {
        row[pos] = remaining as u16;
        out.push(row.clone());
        row[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        row[pos] = e as u16;
        fill_rows(row, pos + 1, remaining - e, out);
    }
    row[pos] = 0;
}

/// All divisors of `row` with degree >= 1, `row` itself included.
fn row_divisors(row: &[u16]) -> Vec<Row> {
    let mut out = Vec::new();
    let mut current = vec![0u16; row.len()];
    fn rec(row: &[u16], pos: usize, current: &mut Row, out: &mut Vec<Row>) {
        if pos == row.len() {
            if current.iter().any(|&e| e > 0) {
                out.push(current.clone());
            }
            return;
        }
        for e in 0..=row[pos] {
            current[pos] = e;
            rec(row, pos + 1, current, out);
        }
        current[pos] = 0;
    }
    rec(row, 0, &mut current, &mut out);
    out
}

fn row_degree(row: &[u16]) -> usize {
    row.iter().map(|&e| e as usize).sum()
}

fn row_to_monomial(row: &[u16]) -> Monomial {
    Monomial::from_pairs(
        row.iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(c, &e)| (c as u32 + 1, u32::from(e))),
    )
}

fn rows_to_generators(rows: &[Row]) -> GeneratorSet {
    GeneratorSet::new(rows.iter().map(|r| row_to_monomial(r))).expect("distinct nonempty rows")
}

// ---------------------------------------------------------------------------
// Canonicity under variable permutations
// ---------------------------------------------------------------------------

/// True iff some column permutation makes the sorted row list strictly
/// smaller, i.e. `rows` is not its orbit's canonical representative.
/// `rows` must be sorted ascending and duplicate-free.
///
/// Columns are assigned one position at a time; only the rows still tied
/// for sorted position 0 matter until the assignment completes, at which
/// point full matrices are compared. Identical columns lead to identical
/// subtrees and are tried once.
fn exists_smaller_relabeling(rows: &[Row]) -> bool {
    let ncols = rows[0].len();
    if ncols <= 1 {
        return false;
    }
    // The first row of a canonical list is the minimum over all rows of the
    // ascending-sorted exponent vector; bail out cheaply when it is not.
    let min_asc = rows
        .iter()
        .map(|r| {
            let mut s = r.clone();
            s.sort_unstable();
            s
        })
        .min()
        .expect("nonempty");
    if rows[0] != min_asc {
        return true;
    }

    let all: Vec<usize> = (0..rows.len()).collect();
    let mut used = vec![false; ncols];
    let mut perm: Vec<usize> = Vec::with_capacity(ncols);
    smaller_dfs(rows, &mut used, &mut perm, &all)
}

fn smaller_dfs(rows: &[Row], used: &mut Vec<bool>, perm: &mut Vec<usize>, block: &[usize]) -> bool {
    let ncols = rows[0].len();
    let t = perm.len();
    if t == ncols {
        let mut mat: Vec<Row> = rows
            .iter()
            .map(|r| perm.iter().map(|&c| r[c]).collect())
            .collect();
        mat.sort_unstable();
        return mat.as_slice() < rows;
    }
    let tval = rows[0][t];
    let mut seen_cols: Vec<Vec<u16>> = Vec::new();
    for c in 0..ncols {
        if used[c] {
            continue;
        }
        let v = block.iter().map(|&r| rows[r][c]).min().expect("nonempty");
        if v < tval {
            // Completing this assignment arbitrarily already yields a
            // strictly smaller first row.
            return true;
        }
        if v > tval {
            continue;
        }
        let col: Vec<u16> = rows.iter().map(|r| r[c]).collect();
        if seen_cols.contains(&col) {
            continue;
        }
        seen_cols.push(col);
        let next_block: Vec<usize> = block.iter().copied().filter(|&r| rows[r][c] == v).collect();
        used[c] = true;
        perm.push(c);
        let smaller = smaller_dfs(rows, used, perm, &next_block);
        perm.pop();
        used[c] = false;
        if smaller {
            return true;
        }
    }
    false
}

/// The minimum of the orbit of `rows` under column permutations: the
/// relabeling whose ascending-sorted row list is lexicographically least.
/// Exponential in the column count for highly symmetric inputs; intended
/// for desk-scale generator sets.
fn min_relabeling(rows_sorted: &[Row]) -> Vec<Row> {
    let ncols = rows_sorted[0].len();
    if ncols <= 1 {
        return rows_sorted.to_vec();
    }
    let mut best: Vec<Row> = rows_sorted.to_vec();
    let all: Vec<usize> = (0..rows_sorted.len()).collect();
    let mut used = vec![false; ncols];
    let mut perm: Vec<usize> = Vec::with_capacity(ncols);
    let mut prefix: Vec<u16> = Vec::with_capacity(ncols);
    min_dfs(
        rows_sorted,
        &mut used,
        &mut perm,
        &mut prefix,
        &all,
        &mut best,
    );
    best
}

fn min_dfs(
    rows: &[Row],
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    prefix: &mut Vec<u16>,
    block: &[usize],
    best: &mut Vec<Row>,
) {
    let ncols = rows[0].len();
    let t = perm.len();
    // `best` changes as leaves are found; compare the committed prefix
    // honestly on every entry.
    if prefix.as_slice() > &best[0][..t] {
        return;
    }
    let tied = prefix.as_slice() == &best[0][..t];
    if t == ncols {
        let mut mat: Vec<Row> = rows
            .iter()
            .map(|r| perm.iter().map(|&c| r[c]).collect())
            .collect();
        mat.sort_unstable();
        if mat < *best {
            *best = mat;
        }
        return;
    }
    // Only minimal next values can lead to the orbit minimum.
    let mut vmin = u16::MAX;
    for c in 0..ncols {
        if !used[c] {
            let v = block.iter().map(|&r| rows[r][c]).min().expect("nonempty");
            vmin = vmin.min(v);
        }
    }
    if tied && vmin > best[0][t] {
        return;
    }
    let mut seen_cols: Vec<Vec<u16>> = Vec::new();
    for c in 0..ncols {
        if used[c] {
            continue;
        }
        let v = block.iter().map(|&r| rows[r][c]).min().expect("nonempty");
        if v != vmin {
            continue;
        }
        let col: Vec<u16> = rows.iter().map(|r| r[c]).collect();
        if seen_cols.contains(&col) {
            continue;
        }
        seen_cols.push(col);
        let next_block: Vec<usize> = block.iter().copied().filter(|&r| rows[r][c] == v).collect();
        used[c] = true;
        perm.push(c);
        prefix.push(v);
        min_dfs(rows, used, perm, prefix, &next_block, best);
        prefix.pop();
        perm.pop();
        used[c] = false;
    }
}

/// The canonical representative of the variable-permutation orbit of a
/// generator set, with variables renumbered contiguously to `x1..xs`.
/// Idempotent, and equal inputs up to relabeling map to equal outputs.
///
/// Intended for desk-scale sets: exponents up to 65535, and worst-case
/// cost factorial in the variable count for highly symmetric inputs.
pub fn canonical_form(gens: &GeneratorSet) -> GeneratorSet {
    let vars: Vec<u32> = gens.variables().into_iter().collect();
    if vars.is_empty() {
        // Only the unit monomial appears.
        return gens.clone();
    }
    let col_of: HashMap<u32, usize> = vars.iter().enumerate().map(|(c, &v)| (v, c)).collect();
    let mut rows: Vec<Row> = gens
        .iter()
        .map(|g| {
            let mut row = vec![0u16; vars.len()];
            for (v, e) in g.iter() {
                row[col_of[&v]] = e.try_into().expect("exponents above 65535 are unsupported");
            }
            row
        })
        .collect();
    rows.sort_unstable();
    let min = min_relabeling(&rows);
    rows_to_generators(&min)
}

// ---------------------------------------------------------------------------
// Orderly DFS over canonical generator chains
// ---------------------------------------------------------------------------

/// Immutable data shared by all branches of one search.
struct SearchSpace {
    universe: Vec<Row>,
    /// Divisor indices (into `poset`) per universe element.
    divisor_ids: Vec<Vec<u32>>,
    /// Degree per poset index.
    poset_degree: Vec<u16>,
    nvars: usize,
    degree: u32,
    /// `C(degree, d)`: the most degree-`d` divisors one generator can add.
    max_new: Vec<u64>,
}

impl SearchSpace {
    fn build(nvars: usize, degree: u32) -> SearchSpace {
        let universe = universe_rows(nvars, degree);
        let mut poset_index: HashMap<Row, u32> = HashMap::new();
        let mut poset_degree: Vec<u16> = Vec::new();
        let mut divisor_ids = Vec::with_capacity(universe.len());
        for row in &universe {
            let ids = row_divisors(row)
                .into_iter()
                .map(|d| {
                    let deg = row_degree(&d) as u16;
                    *poset_index.entry(d).or_insert_with(|| {
                        poset_degree.push(deg);
                        (poset_degree.len() - 1) as u32
                    })
                })
                .collect();
            divisor_ids.push(ids);
        }
        let max_new = (0..=degree as u64)
            .map(|d| binomial(u64::from(degree), d).unwrap_or(u64::MAX))
            .collect();
        SearchSpace {
            universe,
            divisor_ids,
            poset_degree,
            nvars,
            degree,
            max_new,
        }
    }

    /// Top-level branch roots: singletons are canonical exactly when the
    /// exponent vector is ascending.
    fn branch_roots(&self) -> Vec<usize> {
        (0..self.universe.len())
            .filter(|&i| {
                let row = &self.universe[i];
                row.windows(2).all(|w| w[0] <= w[1])
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BudgetKind {
    Node,
    Time,
}

/// Mutable per-branch state for the chain DFS.
struct BranchState<'a> {
    space: &'a SearchSpace,
    /// Target strata (`target[d]` for degrees `0..=n`); `None` in catalog
    /// mode.
    target: Option<&'a [u64]>,
    max_size: usize,
    node_cap: u64,
    start: Instant,
    time_budget: Duration,
    counts: Vec<u32>,
    strata: Vec<u64>,
    chosen_idx: Vec<usize>,
    chosen_rows: Vec<Row>,
    nodes: u64,
    budget_hit: Option<BudgetKind>,
    found: Option<(Vec<Row>, u64)>,
    catalog: Vec<CatalogHit>,
    collect_catalog: bool,
}

struct CatalogHit {
    h: Vec<u64>,
    rows: Vec<Row>,
    vars: u32,
    gens: u32,
    seq: u64,
}

struct BranchOutcome {
    found: Option<(Vec<Row>, u64)>,
    catalog: Vec<CatalogHit>,
    nodes: u64,
    budget_hit: Option<BudgetKind>,
}

impl<'a> BranchState<'a> {
    fn new(
        space: &'a SearchSpace,
        target: Option<&'a [u64]>,
        max_size: usize,
        node_cap: u64,
        start: Instant,
        time_budget: Duration,
        collect_catalog: bool,
    ) -> Self {
        BranchState {
            space,
            target,
            max_size,
            node_cap,
            start,
            time_budget,
            counts: vec![0; space.poset_degree.len()],
            strata: vec![0; space.degree as usize + 1],
            chosen_idx: Vec::new(),
            chosen_rows: Vec::new(),
            nodes: 0,
            budget_hit: None,
            found: None,
            catalog: Vec::new(),
            collect_catalog,
        }
    }

    fn run(mut self, root: usize) -> BranchOutcome {
        self.push(root);
        if self.strata_ok() && !exists_smaller_relabeling(&self.chosen_rows) {
            self.expand();
        }
        self.pop(root);
        BranchOutcome {
            found: self.found,
            catalog: self.catalog,
            nodes: self.nodes,
            budget_hit: self.budget_hit,
        }
    }

    fn push(&mut self, idx: usize) {
        for &di in &self.space.divisor_ids[idx] {
            let c = &mut self.counts[di as usize];
            *c += 1;
            if *c == 1 {
                self.strata[self.space.poset_degree[di as usize] as usize] += 1;
            }
        }
        self.chosen_idx.push(idx);
        self.chosen_rows.push(self.space.universe[idx].clone());
    }

    fn pop(&mut self, idx: usize) {
        self.chosen_rows.pop();
        self.chosen_idx.pop();
        for &di in &self.space.divisor_ids[idx] {
            let c = &mut self.counts[di as usize];
            *c -= 1;
            if *c == 0 {
                self.strata[self.space.poset_degree[di as usize] as usize] -= 1;
            }
        }
    }

    fn strata_ok(&self) -> bool {
        match self.target {
            None => true,
            Some(t) => (1..t.len()).all(|d| self.strata[d] <= t[d]),
        }
    }

    fn target_met(&self) -> bool {
        match self.target {
            None => false,
            Some(t) => (1..t.len()).all(|d| self.strata[d] == t[d]),
        }
    }

    /// Remaining generators each contribute at most `C(n, d)` new members
    /// in degree `d`; prune when a target stratum is out of reach.
    fn target_reachable(&self) -> bool {
        let Some(t) = self.target else { return true };
        let slots = (self.max_size - self.chosen_idx.len()) as u64;
        (1..t.len()).all(|d| {
            self.strata[d].saturating_add(slots.saturating_mul(self.space.max_new[d])) >= t[d]
        })
    }

    /// Visits the current canonical node: counts it, records or tests it,
    /// and extends the chain with every larger generator that stays
    /// canonical and within the target strata.
    fn expand(&mut self) {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.budget_hit = Some(BudgetKind::Node);
            return;
        }
        if self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.time_budget {
            self.budget_hit = Some(BudgetKind::Time);
            return;
        }
        let k = self.chosen_idx.len();
        if self.collect_catalog {
            let n = self.space.degree as usize;
            let mut h = Vec::with_capacity(n + 1);
            h.push(1);
            h.extend_from_slice(&self.strata[1..=n]);
            let vars = (0..self.space.nvars)
                .filter(|&c| self.chosen_rows.iter().any(|r| r[c] > 0))
                .count() as u32;
            self.catalog.push(CatalogHit {
                h,
                rows: self.chosen_rows.clone(),
                vars,
                gens: k as u32,
                seq: self.nodes,
            });
        }
        if self.target.is_some() && k == self.max_size {
            if self.target_met() {
                self.found = Some((self.chosen_rows.clone(), self.nodes));
            }
            return;
        }
        if k == self.max_size || !self.target_reachable() {
            return;
        }
        let next_start = self.chosen_idx.last().map_or(0, |&i| i + 1);
        for idx in next_start..self.space.universe.len() {
            if self.found.is_some() || self.budget_hit.is_some() {
                return;
            }
            self.push(idx);
            if self.strata_ok() && !exists_smaller_relabeling(&self.chosen_rows) {
                self.expand();
            }
            self.pop(idx);
        }
    }
}

/// Runs one branch per root, in parallel when a pool is available, and
/// returns outcomes in root order.
fn run_branches(
    space: &SearchSpace,
    roots: &[usize],
    jobs: Option<usize>,
    make_state: impl Fn() -> BranchOutcomeConfig + Sync,
) -> Vec<BranchOutcome> {
    let run_one = |&root: &usize| -> BranchOutcome {
        let cfg = make_state();
        BranchState::new(
            space,
            cfg.target.as_deref(),
            cfg.max_size,
            cfg.node_cap,
            cfg.start,
            cfg.time_budget,
            cfg.collect_catalog,
        )
        .run(root)
    };
    match jobs {
        Some(1) => roots.iter().map(run_one).collect(),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool");
            pool.install(|| roots.par_iter().map(run_one).collect())
        }
        None => roots.par_iter().map(run_one).collect(),
    }
}

struct BranchOutcomeConfig {
    target: Option<Vec<u64>>,
    max_size: usize,
    node_cap: u64,
    start: Instant,
    time_budget: Duration,
    collect_catalog: bool,
}

// ---------------------------------------------------------------------------
// decide_pure_o_sequence
// ---------------------------------------------------------------------------

/// Decides whether `h` is a pure O-sequence.
///
/// Pre-filters give an immediate answer where a closed-form argument
/// applies: the Macaulay membership test, the variable-coverage bound
/// (`h_n` generators of degree `n` touch at most `n * h_n` variables), and
/// the p/q counting bound (`n >= 4`, `h_1 = h_2`, `2 h_n < h_1` is
/// impossible). Otherwise every canonical set of `h_n` degree-`n`
/// monomials on `h_1` variables is tried; a completed search with no
/// witness is a definite `NotPure`, and budget exhaustion is reported as
/// `Inconclusive`.
pub fn decide_pure_o_sequence(h: &HVector, limits: &SearchLimits) -> Decision {
    let query = Query::Sequence(h.clone());
    let decision = |verdict, rule, reason, witness| Decision {
        query: query.clone(),
        verdict,
        rule,
        reason,
        witness,
    };

    let n = h.socle_degree();
    if n == 0 {
        let unit = GeneratorSet::new([Monomial::one()]).expect("nonempty");
        return decision(Verdict::Pure, Rule::Search, None, Some(unit));
    }
    if !is_o_sequence(h) {
        return decision(
            Verdict::NotPure,
            Rule::Macaulay,
            Some(Reason::MacaulayViolation),
            None,
        );
    }
    let a = h.get(1).expect("n >= 1");
    let b = h.get(n).expect("socle entry");
    if n == 1 {
        // (1, a) is realized by a distinct variables; refuse only when the
        // witness itself would be unreasonably large.
        if a > crate::classify::MAX_FLAT_PARAM {
            return decision(
                Verdict::Inconclusive,
                Rule::Search,
                Some(Reason::MaxVariablesExceeded),
                None,
            );
        }
        let gens = GeneratorSet::new((1..=a as u32).map(Monomial::variable)).expect("a >= 1");
        return decision(Verdict::Pure, Rule::N1Convention, None, Some(gens));
    }
    if a == 1 {
        // One variable: passing the Macaulay filter forces h = (1,1,...,1),
        // the chain generated by x1^n.
        debug_assert!(h.entries().iter().all(|&e| e == 1));
        let gens = GeneratorSet::new([Monomial::power(1, n as u32)]).expect("nonempty");
        return decision(Verdict::Pure, Rule::Search, None, Some(gens));
    }
    if a > (n as u64).saturating_mul(b) {
        return decision(
            Verdict::NotPure,
            Rule::Search,
            Some(Reason::BelowLowerBound),
            None,
        );
    }
    if n >= 4 && h.get(2) == Some(a) && b.saturating_mul(2) < a {
        return decision(
            Verdict::NotPure,
            Rule::Lemma13,
            Some(Reason::ExceedsTwiceSocle),
            None,
        );
    }
    if a > u64::from(limits.max_variables) {
        return decision(
            Verdict::Inconclusive,
            Rule::Search,
            Some(Reason::MaxVariablesExceeded),
            None,
        );
    }
    if b > u64::from(limits.max_generators) {
        return decision(
            Verdict::Inconclusive,
            Rule::Search,
            Some(Reason::MaxGeneratorsExceeded),
            None,
        );
    }
    // The divisor index alone holds C(n + a, a) - 1 entries; refuse runs
    // where building it would already exceed the node budget (or the
    // in-memory cap on the index).
    const INDEX_CAP: u64 = 10_000_000;
    let index_entries = binomial(a + n as u64, a);
    if index_entries.is_none_or(|e| e - 1 > limits.node_budget.min(INDEX_CAP)) {
        return decision(
            Verdict::Inconclusive,
            Rule::Search,
            Some(Reason::NodeBudgetExceeded),
            None,
        );
    }

    let space = SearchSpace::build(a as usize, n as u32);
    let roots = space.branch_roots();
    let node_cap = (limits.node_budget / roots.len().max(1) as u64).max(1);
    let start = Instant::now();
    let target: Vec<u64> = h.entries().to_vec();
    let time_budget = limits.time_budget;
    let outcomes = run_branches(&space, &roots, limits.jobs, || BranchOutcomeConfig {
        target: Some(target.clone()),
        max_size: b as usize,
        node_cap,
        start,
        time_budget,
        collect_catalog: false,
    });

    for outcome in &outcomes {
        if let Some((rows, _)) = &outcome.found {
            let witness = canonical_form(&rows_to_generators(rows));
            return decision(Verdict::Pure, Rule::Search, None, Some(witness));
        }
    }
    if let Some(kind) = outcomes.iter().find_map(|o| o.budget_hit) {
        let reason = match kind {
            BudgetKind::Node => Reason::NodeBudgetExceeded,
            BudgetKind::Time => Reason::TimeBudgetExceeded,
        };
        return decision(Verdict::Inconclusive, Rule::Search, Some(reason), None);
    }
    decision(
        Verdict::NotPure,
        Rule::Search,
        Some(Reason::SearchExhausted),
        None,
    )
}

// ---------------------------------------------------------------------------
// enumerate_pure_hvectors
// ---------------------------------------------------------------------------

const ENUM_MAX_VARS: u32 = 8;
const ENUM_MAX_DEGREE: u32 = 8;
const ENUM_MAX_GENS: u32 = 24;

/// Enumerates every h-vector of a pure order ideal generated in degree `n`
/// by at most `g` monomials on at most `s` variables, with one canonical
/// witness each (the first found in canonical expansion order), sorted
/// lexicographically by h-vector.
pub fn enumerate_pure_hvectors(s: u32, n: u32, g: u32) -> Result<Vec<CatalogEntry>, SearchError> {
    enumerate_pure_hvectors_with_jobs(s, n, g, None)
}

/// As [`enumerate_pure_hvectors`], with an explicit worker cap. The result
/// is identical for every worker count.
pub fn enumerate_pure_hvectors_with_jobs(
    s: u32,
    n: u32,
    g: u32,
    jobs: Option<usize>,
) -> Result<Vec<CatalogEntry>, SearchError> {
    if s < 1 || n < 1 || g < 1 {
        return Err(SearchError::Guardrail(
            "s, n, g must all be at least 1".into(),
        ));
    }
    if s > ENUM_MAX_VARS || n > ENUM_MAX_DEGREE || g > ENUM_MAX_GENS {
        return Err(SearchError::Guardrail(format!(
            "enumeration is capped at s <= {ENUM_MAX_VARS}, n <= {ENUM_MAX_DEGREE}, g <= {ENUM_MAX_GENS}"
        )));
    }

    let space = SearchSpace::build(s as usize, n);
    let roots = space.branch_roots();
    let start = Instant::now();
    let outcomes = run_branches(&space, &roots, jobs, || BranchOutcomeConfig {
        target: None,
        max_size: g as usize,
        node_cap: u64::MAX,
        start,
        time_budget: Duration::MAX,
        collect_catalog: true,
    });

    // Keep the first hit per h-vector in branch-then-discovery order, and
    // renumber discovery indices as a single sequential run would.
    let mut offset = 0u64;
    let mut best: std::collections::BTreeMap<Vec<u64>, CatalogEntry> =
        std::collections::BTreeMap::new();
    for outcome in &outcomes {
        for hit in &outcome.catalog {
            if !best.contains_key(&hit.h) {
                let witness = canonical_form(&rows_to_generators(&hit.rows));
                best.insert(
                    hit.h.clone(),
                    CatalogEntry {
                        h: HVector::new(hit.h.clone()).expect("strata are positive"),
                        witness,
                        vars: hit.vars,
                        gens: hit.gens,
                        nodes: offset + hit.seq,
                    },
                );
            }
        }
        offset += outcome.nodes;
    }
    Ok(best.into_values().collect())
}

// ---------------------------------------------------------------------------
// verify_theorem_range
// ---------------------------------------------------------------------------

/// One grid cell on which the oracle and the closed-form decision agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellAgreement {
    pub a: u64,
    pub b: u64,
    pub pure: bool,
}

/// A cell where the oracle contradicts the closed-form decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDisagreement {
    pub a: u64,
    pub b: u64,
    pub expected_pure: bool,
    pub oracle: Verdict,
}

/// A cell the oracle could not settle within its budgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRef {
    pub a: u64,
    pub b: u64,
}

/// Outcome of sweeping the `(a, b)` grid at socle degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub a_max: u64,
    pub b_max: u64,
    pub agreements: Vec<CellAgreement>,
    pub disagreements: Vec<CellDisagreement>,
    pub inconclusive: Vec<CellRef>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.inconclusive.is_empty()
    }
}

/// Compares the search oracle against the closed-form classification on
/// every cell `1 <= a <= a_max`, `1 <= b <= b_max` of the flat family at
/// socle degree `n >= 2`. The expected outcome is full agreement.
pub fn verify_theorem_range(n: u32, a_max: u64, b_max: u64, limits: &SearchLimits) -> VerifyReport {
    assert!(n >= 2, "the flat-family sweep needs socle degree >= 2");
    let mut report = VerifyReport {
        n,
        a_max,
        b_max,
        agreements: Vec::new(),
        disagreements: Vec::new(),
        inconclusive: Vec::new(),
    };
    for a in 1..=a_max {
        for b in 1..=b_max {
            let expected = decide_flat(FlatQuery::new(n, a, b).expect("positive"));
            let expected_pure = expected.verdict == Verdict::Pure;
            let h = HVector::flat(n as usize, a, b).expect("positive entries");
            let oracle = decide_pure_o_sequence(&h, limits);
            match oracle.verdict {
                Verdict::Inconclusive => report.inconclusive.push(CellRef { a, b }),
                v if (v == Verdict::Pure) == expected_pure => {
                    report.agreements.push(CellAgreement {
                        a,
                        b,
                        pure: expected_pure,
                    });
                }
                v => report.disagreements.push(CellDisagreement {
                    a,
                    b,
                    expected_pure,
                    oracle: v,
                }),
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Catalog persistence
// ---------------------------------------------------------------------------

#[derive(Debug, Error)]
pub enum CatalogIoError {
    #[error("catalog i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog line {line}: {source}")]
    Parse {
        line: usize,
        source: serde_json::Error,
    },
}

/// Appends entries to a line-JSON catalog file, one object per line.
pub fn append_catalog(
    path: &std::path::Path,
    entries: &[CatalogEntry],
) -> Result<(), CatalogIoError> {
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let mut w = std::io::BufWriter::new(file);
    for entry in entries {
        serde_json::to_writer(&mut w, entry).map_err(std::io::Error::from)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

/// Loads a line-JSON catalog, re-sorting by h-vector. Blank lines are
/// skipped.
pub fn load_catalog(path: &std::path::Path) -> Result<Vec<CatalogEntry>, CatalogIoError> {
    let file = std::fs::File::open(path)?;
    let mut entries = Vec::new();
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CatalogEntry =
            serde_json::from_str(&line).map_err(|e| CatalogIoError::Parse {
                line: lineno + 1,
                source: e,
            })?;
        entries.push(entry);
    }
    entries.sort_by(|x, y| x.h.cmp(&y.h));
    Ok(entries)
}
