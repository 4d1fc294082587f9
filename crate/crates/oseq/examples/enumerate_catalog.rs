//! Catalog enumeration: every pure h-vector generated in degree 3 by at
//! most three monomials on at most four variables, each with one canonical
//! witness. Also demonstrates the line-JSON persistence format.
//!
//! Run with `cargo run --example enumerate_catalog`.

use oseq::search::{append_catalog, enumerate_pure_hvectors, load_catalog};

fn main() {
    let entries = enumerate_pure_hvectors(4, 3, 3).expect("within guardrails");
    println!("{} pure h-vectors from (s=4, n=3, g=3):", entries.len());
    for e in &entries {
        println!(
            "  h = {:<10} vars = {}  gens = {}  witness = {}",
            e.h.to_string(),
            e.vars,
            e.gens,
            e.witness
        );
    }

    let path = std::env::temp_dir().join("oseq_example_catalog.jsonl");
    let _ = std::fs::remove_file(&path);
    append_catalog(&path, &entries).expect("writable temp dir");
    let reloaded = load_catalog(&path).expect("roundtrip");
    assert_eq!(reloaded, entries);
    println!(
        "\nwrote and reloaded {} entries at {}",
        reloaded.len(),
        path.display()
    );
    let _ = std::fs::remove_file(&path);
}
