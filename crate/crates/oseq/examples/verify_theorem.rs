//! Cross-checks the closed-form classification against the independent
//! search oracle on a full grid: the oracle re-derives `b <= a <= 2b` at
//! socle degree 4 by brute force, with no appeal to the formula.
//!
//! Run with `cargo run --release --example verify_theorem`.

use oseq::search::{verify_theorem_range, SearchLimits};

fn main() {
    let limits = SearchLimits::default();
    for (n, a_max, b_max) in [(4u32, 6u64, 8u64), (3, 6, 8), (2, 6, 12)] {
        let report = verify_theorem_range(n, a_max, b_max, &limits);
        println!(
            "n={n}: {} cells, {} agreements, {} disagreements, {} inconclusive",
            report.agreements.len() + report.disagreements.len() + report.inconclusive.len(),
            report.agreements.len(),
            report.disagreements.len(),
            report.inconclusive.len(),
        );
        for d in &report.disagreements {
            println!(
                "  DISAGREES at a={} b={}: closed form says {}, oracle says {:?}",
                d.a,
                d.b,
                if d.expected_pure { "pure" } else { "not pure" },
                d.oracle
            );
        }
        assert!(report.is_clean(), "the sweep should agree everywhere");
    }
    println!("\nall sweeps agree with the classification");
}
