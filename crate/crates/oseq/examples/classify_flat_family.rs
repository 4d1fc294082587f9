//! The closed-form classification of (1, a, ..., a, b): prints the
//! decision table for socle degree 4 and a few edge queries.
//!
//! Run with `cargo run --example classify_flat_family`.

use oseq::classify::{decide_flat, FlatQuery, Verdict};

fn main() {
    let n = 4;
    println!("pure O-sequences (1,a,a,a,b)  [# = pure, . = not]");
    print!("      ");
    for b in 1..=8 {
        print!("b={b} ");
    }
    println!();
    for a in 1..=8u64 {
        print!("a={a}   ");
        for b in 1..=8u64 {
            let d = decide_flat(FlatQuery::new(n, a, b).unwrap());
            print!("{}   ", if d.verdict == Verdict::Pure { '#' } else { '.' });
        }
        println!();
    }

    println!("\nselected decisions:");
    for (n, a, b) in [(4, 5, 2), (4, 5, 3), (3, 4, 5), (2, 3, 6), (1, 3, 3)] {
        let d = decide_flat(FlatQuery::new(n, a, b).unwrap());
        let verdict = match d.verdict {
            Verdict::Pure => "pure".to_string(),
            _ => format!("not pure ({:?})", d.reason.unwrap()),
        };
        println!("  n={n} a={a} b={b}: {verdict} [{:?}]", d.rule);
        if let Some(w) = d.witness {
            println!("    witness: {w}");
        }
    }
}
