//! Tokenize a few sentences and print their Flesch Reading Ease scores.
//!
//! Run with: cargo run -p simplicorpus --example score_readability

use simplicorpus::textmetrics::{fres, tokenize};

fn main() {
    let sentences = [
        "The cat sat.",
        "The cat sat on the mat near the door.",
        "Notwithstanding considerable institutional opposition, the committee ratified the amendment.",
        "He fixed the old clock.",
    ];
    println!("{:>8}  {:>5}  {:>9}  sentence", "FRES", "words", "syllables");
    for sentence in sentences {
        let tokens = tokenize(sentence);
        let score = fres(&tokens).expect("sentence has words");
        println!(
            "{:>8.2}  {:>5}  {:>9}  {}",
            score.value, tokens.word_count, tokens.syllable_count, sentence
        );
    }
}
