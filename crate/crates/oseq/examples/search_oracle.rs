//! The exhaustive search oracle on arbitrary small sequences, including
//! ones the closed forms do not cover.
//!
//! Run with `cargo run --example search_oracle`.

use oseq::classify::Verdict;
use oseq::order_ideal::{HVector, OrderIdeal};
use oseq::search::{decide_pure_o_sequence, SearchLimits};

fn main() {
    let limits = SearchLimits::default();
    for text in [
        "1,3,3,3,1", // flat, 2b < a: impossible for n = 4
        "1,4,4,3",   // flat, in range
        "1,2,3",     // the full quadratic stratum on two variables
        "1,3,5,4",   // not flat; only the search can answer
        "1,4,6,6,2", // not flat
        "1,1,2",     // fails Macaulay already
    ] {
        let h: HVector = text.parse().unwrap();
        let d = decide_pure_o_sequence(&h, &limits);
        match d.verdict {
            Verdict::Pure => {
                let w = d.witness.expect("pure answers carry a witness");
                assert_eq!(OrderIdeal::closure(&w).h_vector(), h);
                println!("{h}: pure, witness {w}");
            }
            Verdict::NotPure => {
                println!("{h}: not pure ({:?} via {:?})", d.reason.unwrap(), d.rule);
            }
            Verdict::Inconclusive => {
                println!("{h}: inconclusive ({:?})", d.reason.unwrap());
            }
        }
    }
}
