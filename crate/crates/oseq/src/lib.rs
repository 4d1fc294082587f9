//! Deciding and witnessing pure O-sequences.
//!
//! An order ideal of monomials is a finite set closed under taking
//! divisors; it is pure when its maximal elements all have one degree. The
//! h-vector of an ideal counts members degree by degree, and a sequence
//! realized this way is a (pure) O-sequence. This crate provides:
//!
//! - [`monomial`]: monomial arithmetic and the text grammar
//!   (`x1*x2^3`, `1`);
//! - [`order_ideal`]: downward closure, h-vectors, maximal elements,
//!   purity;
//! - [`macaulay`]: binomial representations and the O-sequence membership
//!   test;
//! - [`classify`]: closed-form decisions for the flat families
//!   `(1, a, a, ..., a, b)` with explicit witness constructions, the p/q
//!   counting profile, and the generator-shape test;
//! - [`search`]: an independent exhaustive oracle deciding membership for
//!   arbitrary small sequences by isomorph-free enumeration, plus catalog
//!   enumeration and grid sweeps that cross-check the closed forms;
//! - [`cli`]: the `oseq` command-line front end with machine-readable JSON
//!   output.
//!
//! The classification implemented in closed form: for socle degree
//! `n >= 4`, `(1, a, ..., a, b)` is a pure O-sequence iff `b <= a <= 2b`;
//! for `n = 3` iff `ceil(a/3) <= b <= a`; for `n = 2` iff
//! `ceil(a/2) <= b <= C(a+1, 2)`. The search oracle rediscovers these
//! facts by brute force; see `examples/verify_theorem.rs`.
//!
//! ```
//! use oseq::classify::{decide_flat, FlatQuery, Verdict};
//! use oseq::order_ideal::OrderIdeal;
//!
//! let decision = decide_flat(FlatQuery::new(4, 5, 3).unwrap());
//! assert_eq!(decision.verdict, Verdict::Pure);
//! let witness = decision.witness.unwrap();
//! assert_eq!(
//!     OrderIdeal::closure(&witness).h_vector().to_string(),
//!     "1,5,5,5,3"
//! );
//! ```

pub mod classify;
pub mod cli;
pub mod macaulay;
pub mod monomial;
pub mod order_ideal;
pub mod search;

pub use classify::{decide_flat, Decision, FlatQuery, Verdict};
pub use macaulay::is_o_sequence;
pub use monomial::Monomial;
pub use order_ideal::{GeneratorSet, HVector, OrderIdeal};
pub use search::{decide_pure_o_sequence, enumerate_pure_hvectors, SearchLimits};
