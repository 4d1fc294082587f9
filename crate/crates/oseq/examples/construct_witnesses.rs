//! The explicit witness constructions, revalidated through closure: pairs
//! and powers for the flat family, triples for socle degree 3, and the
//! quadratic fill for socle degree 2.
//!
//! Run with `cargo run --example construct_witnesses`.

use oseq::classify::{witness_flat, witness_socle2, witness_socle3};
use oseq::order_ideal::OrderIdeal;

fn main() {
    println!("flat family, socle degree 4:");
    for (a, b) in [(5, 3), (3, 3), (6, 4)] {
        let w = witness_flat(4, a, b).unwrap();
        let ideal = OrderIdeal::closure(&w);
        println!(
            "  (1,{a},{a},{a},{b})  <-  {w}   [closure: {} monomials, h = {}]",
            ideal.len(),
            ideal.h_vector()
        );
    }

    println!("\nsocle degree 3 (parts of size <= 3):");
    for (a, b) in [(7, 3), (4, 3), (3, 1)] {
        let w = witness_socle3(a, b).unwrap();
        println!(
            "  (1,{a},{a},{b})  <-  {w}   [h = {}]",
            OrderIdeal::closure(&w).h_vector()
        );
    }

    println!("\nsocle degree 2 (pairs plus quadratic fill):");
    for (a, b) in [(5, 3), (3, 6), (4, 7)] {
        let w = witness_socle2(a, b).unwrap();
        println!(
            "  (1,{a},{b})  <-  {w}   [h = {}]",
            OrderIdeal::closure(&w).h_vector()
        );
    }

    // Out-of-range queries are rejected with the violated bound.
    println!(
        "\n(1,4,1) has no witness: {}",
        witness_socle2(4, 1).unwrap_err()
    );
}
