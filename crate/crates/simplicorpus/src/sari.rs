//! SARI: n-gram keep/add/delete scoring of a simplification system output
//! against the original sentence and multiple references.
//!
//! Counts use multiset semantics with fractional reference counts (the sum
//! over references divided by the number of references). Keep and add are
//! F1 scores; delete defaults to precision only, with an option to use F1
//! instead. Per n-gram order, a ratio with a zero denominator is 0 unless
//! both the candidate-side and reference-side totals are zero, in which
//! case that operation scores 1 for that order (vacuous agreement).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

pub const MAX_N: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SariError {
    #[error("instance has no references")]
    EmptyReferences,
    #[error("corpus has no instances")]
    EmptyCorpus,
    #[error("instances disagree on reference count ({0} vs {1})")]
    RaggedReferences(usize, usize),
}

/// One sentence to score: the original, the system output, and at least
/// one reference simplification, all as token lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SariInstance {
    pub original: Vec<String>,
    pub system: Vec<String>,
    pub references: Vec<Vec<String>>,
}

impl SariInstance {
    /// Builds an instance from raw lines: whitespace-split and lowercased.
    pub fn from_lines(original: &str, system: &str, references: &[&str]) -> Self {
        let split = |line: &str| {
            line.split_whitespace()
                .map(|t| t.to_lowercase())
                .collect::<Vec<_>>()
        };
        SariInstance {
            original: split(original),
            system: split(system),
            references: references.iter().map(|r| split(r)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq)]
pub struct SariNgramScores {
    pub keep: f64,
    pub add: f64,
    pub del: f64,
}

/// SARI result, all values scaled to [0, 100]. `overall` is the mean of
/// the three components; each component is the mean of its per-n values.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SariScore {
    pub overall: f64,
    pub keep_f1: f64,
    pub add_f1: f64,
    pub del_score: f64,
    pub per_n: [SariNgramScores; MAX_N],
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SariOptions {
    /// Score delete as F1 instead of precision only.
    pub delete_f1: bool,
}

/// Sliding-window n-grams with multiplicity. Fewer than `n` tokens yields
/// an empty multiset.
pub fn ngram_counts(tokens: &[String], n: usize) -> HashMap<Vec<String>, u64> {
    assert!(n >= 1);
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window.to_vec()).or_insert(0) += 1;
        }
    }
    counts
}

fn f1(numerator: f64, cand_total: f64, ref_total: f64) -> f64 {
    if cand_total == 0.0 && ref_total == 0.0 {
        return 1.0;
    }
    let p = if cand_total > 0.0 { numerator / cand_total } else { 0.0 };
    let r = if ref_total > 0.0 { numerator / ref_total } else { 0.0 };
    if p + r > 0.0 {
        2.0 * p * r / (p + r)
    } else {
        0.0
    }
}

fn precision(numerator: f64, cand_total: f64, ref_total: f64) -> f64 {
    if cand_total == 0.0 && ref_total == 0.0 {
        return 1.0;
    }
    if cand_total > 0.0 {
        numerator / cand_total
    } else {
        0.0
    }
}

fn ngram_scores(inst: &SariInstance, n: usize, opts: SariOptions) -> SariNgramScores {
    let original = ngram_counts(&inst.original, n);
    let system = ngram_counts(&inst.system, n);
    let num_refs = inst.references.len() as f64;
    let mut ref_avg: HashMap<Vec<String>, f64> = HashMap::new();
    for reference in &inst.references {
        for (gram, count) in ngram_counts(reference, n) {
            *ref_avg.entry(gram).or_insert(0.0) += count as f64;
        }
    }
    for count in ref_avg.values_mut() {
        *count /= num_refs;
    }

    let mut grams: Vec<&Vec<String>> = original
        .keys()
        .chain(system.keys())
        .chain(ref_avg.keys())
        .collect();
    grams.sort();
    grams.dedup();

    let mut keep = (0.0, 0.0, 0.0); // (numerator, candidate total, reference total)
    let mut add = (0.0, 0.0, 0.0);
    let mut del = (0.0, 0.0, 0.0);
    for gram in grams {
        let o = *original.get(gram).unwrap_or(&0) as f64;
        let s = *system.get(gram).unwrap_or(&0) as f64;
        let r = *ref_avg.get(gram).unwrap_or(&0.0);

        let keep_cand = o.min(s);
        let keep_ref = o.min(r);
        keep.0 += keep_cand.min(keep_ref);
        keep.1 += keep_cand;
        keep.2 += keep_ref;

        let add_cand = (s - o).max(0.0);
        let add_ref = (r - o).max(0.0);
        add.0 += add_cand.min(add_ref);
        add.1 += add_cand;
        add.2 += add_ref;

        let del_cand = (o - s).max(0.0);
        let del_ref = (o - r).max(0.0);
        del.0 += del_cand.min(del_ref);
        del.1 += del_cand;
        del.2 += del_ref;
    }

    SariNgramScores {
        keep: f1(keep.0, keep.1, keep.2),
        add: f1(add.0, add.1, add.2),
        del: if opts.delete_f1 {
            f1(del.0, del.1, del.2)
        } else {
            precision(del.0, del.1, del.2)
        },
    }
}

/// Scores a single sentence.
pub fn sari_sentence(inst: &SariInstance, opts: SariOptions) -> Result<SariScore, SariError> {
    if inst.references.is_empty() {
        return Err(SariError::EmptyReferences);
    }
    let mut per_n = [SariNgramScores::default(); MAX_N];
    for (i, scores) in per_n.iter_mut().enumerate() {
        *scores = ngram_scores(inst, i + 1, opts);
    }
    Ok(assemble(per_n))
}

fn assemble(raw: [SariNgramScores; MAX_N]) -> SariScore {
    let mean = |f: fn(&SariNgramScores) -> f64| {
        raw.iter().map(f).sum::<f64>() / MAX_N as f64
    };
    let keep_f1 = 100.0 * mean(|s| s.keep);
    let add_f1 = 100.0 * mean(|s| s.add);
    let del_score = 100.0 * mean(|s| s.del);
    let mut per_n = raw;
    for s in &mut per_n {
        s.keep *= 100.0;
        s.add *= 100.0;
        s.del *= 100.0;
    }
    SariScore {
        overall: (keep_f1 + add_f1 + del_score) / 3.0,
        keep_f1,
        add_f1,
        del_score,
        per_n,
    }
}

/// Macro-averages sentence scores over a corpus. All instances must carry
/// the same number of references.
pub fn sari_corpus(
    instances: &[SariInstance],
    opts: SariOptions,
) -> Result<SariScore, SariError> {
    let first = instances.first().ok_or(SariError::EmptyCorpus)?;
    let ref_count = first.references.len();
    let mut sum_per_n = [SariNgramScores::default(); MAX_N];
    let mut sums = (0.0, 0.0, 0.0, 0.0); // overall, keep, add, del
    for inst in instances {
        if inst.references.len() != ref_count {
            return Err(SariError::RaggedReferences(ref_count, inst.references.len()));
        }
        let score = sari_sentence(inst, opts)?;
        sums.0 += score.overall;
        sums.1 += score.keep_f1;
        sums.2 += score.add_f1;
        sums.3 += score.del_score;
        for (acc, s) in sum_per_n.iter_mut().zip(score.per_n.iter()) {
            acc.keep += s.keep;
            acc.add += s.add;
            acc.del += s.del;
        }
    }
    let count = instances.len() as f64;
    for s in &mut sum_per_n {
        s.keep /= count;
        s.add /= count;
        s.del /= count;
    }
    Ok(SariScore {
        overall: sums.0 / count,
        keep_f1: sums.1 / count,
        add_f1: sums.2 / count,
        del_score: sums.3 / count,
        per_n: sum_per_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn ngram_counting() {
        let t = toks("a b a");
        let uni = ngram_counts(&t, 1);
        assert_eq!(uni[&vec!["a".to_string()]], 2);
        assert_eq!(uni[&vec!["b".to_string()]], 1);
        let bi = ngram_counts(&t, 2);
        assert_eq!(bi.len(), 2);
        assert_eq!(bi[&toks("a b")], 1);
        assert_eq!(bi[&toks("b a")], 1);
        assert!(ngram_counts(&toks("a"), 2).is_empty());
    }

    #[test]
    fn identity_scores_100() {
        let inst = SariInstance {
            original: toks("a b c"),
            system: toks("a b c"),
            references: vec![toks("a b c")],
        };
        let score = sari_sentence(&inst, SariOptions::default()).unwrap();
        assert!((score.overall - 100.0).abs() < 1e-9);
        assert!((score.keep_f1 - 100.0).abs() < 1e-9);
        assert!((score.add_f1 - 100.0).abs() < 1e-9);
        assert!((score.del_score - 100.0).abs() < 1e-9);
    }

    #[test]
    fn ignoring_a_required_deletion_zeroes_delete() {
        let inst = SariInstance {
            original: toks("a b c d"),
            system: toks("a b c d"),
            references: vec![toks("a b c")],
        };
        let score = sari_sentence(&inst, SariOptions::default()).unwrap();
        // system deletes nothing while references demand a deletion
        assert!(score.del_score.abs() < 1e-9);
        assert!(score.overall < 100.0 - 1e-9);
        assert!(score.keep_f1 > 0.0);
    }

    #[test]
    fn empty_references_is_an_error() {
        let inst = SariInstance {
            original: toks("a"),
            system: toks("a"),
            references: vec![],
        };
        assert_eq!(
            sari_sentence(&inst, SariOptions::default()),
            Err(SariError::EmptyReferences)
        );
    }

    #[test]
    fn reference_order_does_not_matter() {
        let mut inst = SariInstance {
            original: toks("the big cat sat"),
            system: toks("the cat sat"),
            references: vec![toks("the cat sat"), toks("a cat sat down"), toks("big cat")],
        };
        let a = sari_sentence(&inst, SariOptions::default()).unwrap();
        inst.references.rotate_left(1);
        let b = sari_sentence(&inst, SariOptions::default()).unwrap();
        assert!((a.overall - b.overall).abs() < 1e-12);
        assert_eq!(a.per_n, b.per_n);
    }

    #[test]
    fn corpus_is_mean_of_sentences() {
        let one = SariInstance::from_lines("a b c", "a b", &["a b"]);
        let two = SariInstance::from_lines("x y", "x y z", &["x y z"]);
        let s1 = sari_sentence(&one, SariOptions::default()).unwrap();
        let s2 = sari_sentence(&two, SariOptions::default()).unwrap();
        let corpus = sari_corpus(&[one.clone(), two.clone()], SariOptions::default()).unwrap();
        assert!((corpus.overall - (s1.overall + s2.overall) / 2.0).abs() < 1e-12);

        let single = sari_corpus(std::slice::from_ref(&one), SariOptions::default()).unwrap();
        assert_eq!(single, s1);

        let doubled =
            sari_corpus(&[one.clone(), two.clone(), one, two], SariOptions::default()).unwrap();
        assert!((doubled.overall - corpus.overall).abs() < 1e-9);
    }

    #[test]
    fn corpus_errors() {
        assert_eq!(
            sari_corpus(&[], SariOptions::default()),
            Err(SariError::EmptyCorpus)
        );
        let one = SariInstance::from_lines("a", "a", &["a"]);
        let two = SariInstance::from_lines("b", "b", &["b", "b c"]);
        assert_eq!(
            sari_corpus(&[one, two], SariOptions::default()),
            Err(SariError::RaggedReferences(1, 2))
        );
    }

    #[test]
    fn delete_f1_mode_penalizes_missed_deletions() {
        // system deletes only one of the three tokens the reference drops:
        // delete precision is perfect, recall is not, so F1 < precision
        let inst = SariInstance {
            original: toks("a b c d"),
            system: toks("a b c"),
            references: vec![toks("a")],
        };
        let prec = sari_sentence(&inst, SariOptions::default()).unwrap();
        let f1 = sari_sentence(&inst, SariOptions { delete_f1: true }).unwrap();
        assert!(f1.del_score < prec.del_score);
    }

    #[test]
    fn scores_stay_in_range() {
        let inst = SariInstance::from_lines(
            "the quick brown fox jumps",
            "a quick fox leaps high",
            &["the fast fox jumps", "quick brown fox"],
        );
        let s = sari_sentence(&inst, SariOptions::default()).unwrap();
        for v in [s.overall, s.keep_f1, s.add_f1, s.del_score] {
            assert!((0.0..=100.0).contains(&v));
        }
        assert!((s.overall - (s.keep_f1 + s.add_f1 + s.del_score) / 3.0).abs() < 1e-12);
    }
}
