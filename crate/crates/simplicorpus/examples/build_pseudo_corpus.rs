//! Turn a paraphrase corpus into a pseudo simplification corpus: orient
//! each pair complex→simple by readability and keep pairs whose score
//! difference clears the threshold (default 10.0, one school grade).
//!
//! Run with: cargo run -p simplicorpus --example build_pseudo_corpus

use simplicorpus::corpus::SentencePair;
use simplicorpus::selector::{filter_pairs, SelectorConfig};

fn main() {
    let raw = [
        (
            "The committee has not yet arrived at a determination on the matter.",
            "The committee has not decided yet.",
        ),
        (
            "He fixed the clock.",
            "He repaired the chronometer.",
        ),
        (
            "Precipitation is anticipated throughout the subsequent twenty-four hours.",
            "Rain is expected all day tomorrow.",
        ),
        (
            "The dog ran.",
            "The dog ran fast.",
        ),
    ];
    let pairs: Vec<SentencePair> = raw
        .iter()
        .enumerate()
        .map(|(i, (source, target))| SentencePair {
            source: source.to_string(),
            target: target.to_string(),
            ordinal: i as u64,
        })
        .collect();

    let config = SelectorConfig::default();
    let (kept, report) = filter_pairs(pairs, &config);

    println!(
        "read {} pairs, kept {}, below threshold {}, unscoreable {}",
        report.read, report.kept, report.dropped_below_threshold, report.dropped_unscoreable
    );
    for pair in kept {
        println!();
        println!("complex ({:7.2}): {}", pair.fres_complex, pair.complex);
        println!("simple  ({:7.2}): {}", pair.fres_simple, pair.simple);
        println!("delta: {:.2}", pair.delta);
    }
}
