//! Draw a seeded uniform sample from a paraphrase pair stream.
//!
//! The sample is a reservoir sample restored to input order, so the same
//! seed always reproduces the same subset.
//!
//! Run with: cargo run -p simplicorpus --example sample_pairs

use std::io::Cursor;

use simplicorpus::corpus::{sample, PairReader};

fn main() {
    // a tiny in-memory TSV corpus; real runs stream from files
    let tsv: String = (0..20)
        .map(|i| format!("complex sentence number {i}\tsimple sentence {i}\n"))
        .collect();

    let mut reader = PairReader::new(Cursor::new(tsv.into_bytes()));
    let pairs: Vec<_> = reader.by_ref().map(|p| p.expect("in-memory read")).collect();
    println!("corpus: {} pairs", reader.report().read);

    for seed in [7, 7, 99] {
        let picked = sample(pairs.clone(), 5, seed);
        let ordinals: Vec<u64> = picked.iter().map(|p| p.ordinal).collect();
        println!("seed {seed:>2} -> ordinals {ordinals:?}");
    }
}
