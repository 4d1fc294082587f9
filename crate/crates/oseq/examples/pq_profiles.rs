//! The p/q counting profile: per generator, the fresh variables and the
//! fresh quadratic divisors. Summed over an ordered generator set these
//! recover h_1 and h_2 of the generated ideal, which is the counting
//! argument that rules out flat sequences with 2b < a at socle degree 4.
//!
//! Run with `cargo run --example pq_profiles`.

use oseq::classify::{check_generator_shape, pq_profile};
use oseq::order_ideal::{GeneratorSet, OrderIdeal};

fn show(items: &[&str]) {
    let gens = GeneratorSet::new(items.iter().map(|s| s.parse().unwrap())).unwrap();
    let profile = pq_profile(&gens);
    let h = OrderIdeal::closure(&gens).h_vector();
    println!("{gens}");
    println!("  p = {:?}  (sum {} = h_1)", profile.p, profile.sum_p);
    println!("  q = {:?}  (sum {} = h_2)", profile.q, profile.sum_q);
    assert_eq!(profile.sum_p, h.get(1).unwrap());
    assert_eq!(profile.sum_q, h.get(2).unwrap());
}

fn main() {
    show(&["x1*x2^3", "x3*x4^3", "x5^4"]);
    show(&["x1*x2*x3*x4"]); // q_1 = 6 > 4 = p_1: a wide generator wastes quadratics
    show(&["x1^3"]);

    // Generator shapes: a generator set built only from x^n and x*y^(n-1)
    // never lets q_j outrun p_j.
    let narrow = GeneratorSet::new(["x1*x2^3", "x3^4"].iter().map(|s| s.parse().unwrap())).unwrap();
    println!(
        "\n{narrow} uses only the two narrow shapes: {}",
        check_generator_shape(&narrow, 4).unwrap()
    );
}
