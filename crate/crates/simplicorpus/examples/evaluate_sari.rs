//! Score simplification system outputs with SARI against the original
//! sentences and multiple references.
//!
//! Run with: cargo run -p simplicorpus --example evaluate_sari

use simplicorpus::sari::{sari_corpus, SariInstance, SariOptions};

fn main() {
    let originals = [
        "the cat perched upon the mat",
        "he purchased a new automobile yesterday",
    ];
    let system = ["the cat sat on the mat", "he bought a new car yesterday"];
    // two references per sentence, line-aligned with the originals
    let refs = [
        ["the cat sat on the mat", "a cat sat on the mat"],
        ["he bought a car yesterday", "he got a new car yesterday"],
    ];

    let instances: Vec<SariInstance> = originals
        .iter()
        .zip(&system)
        .zip(&refs)
        .map(|((orig, sys), rs)| {
            SariInstance::from_lines(orig, sys, rs.as_slice())
        })
        .collect();

    let score = sari_corpus(&instances, SariOptions::default()).unwrap();
    println!(
        "SARI {:.2} (keep {:.2} / add {:.2} / del {:.2})",
        score.overall, score.keep_f1, score.add_f1, score.del_score
    );
    for (i, n) in score.per_n.iter().enumerate() {
        println!(
            "  {}-gram: keep {:.2}, add {:.2}, del {:.2}",
            i + 1,
            n.keep,
            n.add,
            n.del
        );
    }
}
