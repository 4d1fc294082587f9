//! Macaulay's membership test: which sequences are h-vectors of order
//! ideals at all?
//!
//! Run with `cargo run --example check_o_sequence`.

use oseq::macaulay::{is_o_sequence, macaulay_growth, macaulay_rep};
use oseq::order_ideal::HVector;

fn main() {
    for text in ["1,3,6,10", "1,4,8,12", "1,2,4", "1,2,3,4,5", "1,1,2"] {
        let h: HVector = text.parse().expect("well-formed sequence");
        println!(
            "{h}: {}",
            if is_o_sequence(&h) {
                "O-sequence"
            } else {
                "not an O-sequence"
            }
        );
    }

    // The growth bound behind the test: h_2 = 4 allows h_3 up to 5.
    let rep = macaulay_rep(4, 2);
    let terms: Vec<String> = rep
        .terms
        .iter()
        .map(|(a, k)| format!("C({a},{k})"))
        .collect();
    println!(
        "\n4 at index 2 decomposes as {} so h_3 <= {}",
        terms.join(" + "),
        macaulay_growth(4, 2).unwrap()
    );
}
