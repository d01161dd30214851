//! Compute vocabulary sizes, average sentence lengths, and pair counts
//! for a parallel corpus, and print them as JSON.
//!
//! Run with: cargo run -p simplicorpus --example corpus_stats

use simplicorpus::corpus::compute_stats;

fn main() {
    let pairs = vec![
        ("The committee reached a decision.", "The committee decided."),
        ("He acquired a vehicle.", "He bought a car."),
        ("The inclement weather persisted.", "The bad weather went on."),
    ];
    let stats = compute_stats(pairs).expect("corpus is non-empty");
    println!("{}", serde_json::to_string_pretty(&stats).unwrap());
}
