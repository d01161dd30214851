//! Pseudo simplification corpus construction: orient each paraphrase pair
//! complex→simple by readability and keep pairs whose score difference
//! clears the threshold.

use std::io;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::corpus::SentencePair;
use crate::textmetrics::{fres_of_line, MetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectorError {
    /// One side has no word tokens, so no readability score exists for it.
    #[error("pair has an unscoreable side")]
    Unscoreable,
}

/// How to assign the complex and simple roles within a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationPolicy {
    /// Lower-scoring side becomes complex; ties keep input order.
    Auto,
    /// Source stays complex, target stays simple, scores notwithstanding.
    KeepOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    StrictGreater,
    GreaterEqual,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SelectorConfig {
    pub threshold: f64,
    pub orientation: OrientationPolicy,
    pub comparison: Comparison,
}

impl Default for SelectorConfig {
    fn default() -> Self {
        SelectorConfig {
            threshold: 10.0,
            orientation: OrientationPolicy::Auto,
            comparison: Comparison::StrictGreater,
        }
    }
}

/// A pair oriented complex→simple, with both readability scores and their
/// difference (`delta = fres_simple − fres_complex`).
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedPair {
    pub complex: String,
    pub simple: String,
    pub fres_complex: f64,
    pub fres_simple: f64,
    pub delta: f64,
}

/// Per-pair accounting for one selector pass. `read` always equals the sum
/// of the other three.
#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct SelectorReport {
    pub read: u64,
    pub kept: u64,
    pub dropped_below_threshold: u64,
    pub dropped_unscoreable: u64,
}

/// Scores both sides and assigns the complex/simple roles.
pub fn orient(pair: &SentencePair, policy: OrientationPolicy) -> Result<OrientedPair, SelectorError> {
    let score = |line: &str| {
        fres_of_line(line).map(|s| s.value).map_err(|e| match e {
            MetricError::EmptySentence => SelectorError::Unscoreable,
        })
    };
    let fres_source = score(&pair.source)?;
    let fres_target = score(&pair.target)?;
    let swap = matches!(policy, OrientationPolicy::Auto) && fres_source > fres_target;
    let (complex, simple, fres_complex, fres_simple) = if swap {
        (pair.target.clone(), pair.source.clone(), fres_target, fres_source)
    } else {
        (pair.source.clone(), pair.target.clone(), fres_source, fres_target)
    };
    Ok(OrientedPair {
        complex,
        simple,
        fres_complex,
        fres_simple,
        delta: fres_simple - fres_complex,
    })
}

/// The threshold test on an already-oriented pair.
pub fn select(pair: &OrientedPair, config: &SelectorConfig) -> bool {
    match config.comparison {
        Comparison::StrictGreater => pair.delta > config.threshold,
        Comparison::GreaterEqual => pair.delta >= config.threshold,
    }
}

enum Decision {
    Kept(OrientedPair),
    BelowThreshold,
    Unscoreable,
}

fn decide(pair: &SentencePair, config: &SelectorConfig) -> Decision {
    match orient(pair, config.orientation) {
        Ok(oriented) => {
            if select(&oriented, config) {
                Decision::Kept(oriented)
            } else {
                Decision::BelowThreshold
            }
        }
        Err(SelectorError::Unscoreable) => Decision::Unscoreable,
    }
}

const BATCH: usize = 8192;

/// Runs the full orient-and-filter pass over a pair stream, emitting kept
/// pairs in input order. Per-pair scoring fans out over `threads` workers;
/// batching keeps memory flat and emission ordered, so the output is
/// byte-identical for any worker count.
pub fn build_pseudo_corpus<I, F>(
    pairs: I,
    config: &SelectorConfig,
    threads: usize,
    mut emit: F,
) -> io::Result<SelectorReport>
where
    I: Iterator<Item = io::Result<SentencePair>>,
    F: FnMut(&OrientedPair) -> io::Result<()>,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(io::Error::other)?;
    let mut report = SelectorReport::default();
    let mut pairs = pairs;
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        for pair in pairs.by_ref().take(BATCH) {
            batch.push(pair?);
        }
        if batch.is_empty() {
            break;
        }
        let decisions: Vec<Decision> =
            pool.install(|| batch.par_iter().map(|p| decide(p, config)).collect());
        for decision in &decisions {
            report.read += 1;
            match decision {
                Decision::Kept(oriented) => {
                    report.kept += 1;
                    emit(oriented)?;
                }
                Decision::BelowThreshold => report.dropped_below_threshold += 1,
                Decision::Unscoreable => report.dropped_unscoreable += 1,
            }
        }
    }
    Ok(report)
}

/// Convenience wrapper collecting the kept pairs in memory.
pub fn filter_pairs(
    pairs: Vec<SentencePair>,
    config: &SelectorConfig,
) -> (Vec<OrientedPair>, SelectorReport) {
    let mut kept = Vec::new();
    let report = build_pseudo_corpus(pairs.into_iter().map(Ok), config, 1, |p| {
        kept.push(p.clone());
        Ok(())
    })
    .expect("in-memory pass cannot fail on I/O");
    (kept, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textmetrics::fres_of_line;

    fn pair(source: &str, target: &str, ordinal: u64) -> SentencePair {
        SentencePair {
            source: source.into(),
            target: target.into(),
            ordinal,
        }
    }

    // all-monosyllabic sentences score 122.235 − 1.015·words, so the delta
    // between two of them is 1.015·(word difference)
    fn mono(words: usize) -> String {
        std::iter::repeat_n("cat", words).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn auto_orientation_puts_lower_score_first() {
        let p = pair(&mono(20), &mono(8), 0);
        let o = orient(&p, OrientationPolicy::Auto).unwrap();
        assert_eq!(o.complex, mono(20));
        assert_eq!(o.simple, mono(8));
        assert!((o.delta - 1.015 * 12.0).abs() < 1e-9);

        let swapped = pair(&mono(8), &mono(20), 1);
        let o2 = orient(&swapped, OrientationPolicy::Auto).unwrap();
        assert_eq!(o2.complex, mono(20));
        assert!((o2.delta - o.delta).abs() < 1e-12);
    }

    #[test]
    fn keep_order_allows_negative_delta() {
        let p = pair(&mono(8), &mono(20), 0);
        let o = orient(&p, OrientationPolicy::KeepOrder).unwrap();
        assert_eq!(o.complex, mono(8));
        assert!((o.delta + 1.015 * 12.0).abs() < 1e-9);
    }

    #[test]
    fn orientation_tie_keeps_input_order() {
        let p = pair("cat sat", "dog ran", 0);
        let o = orient(&p, OrientationPolicy::Auto).unwrap();
        assert_eq!(o.complex, "cat sat");
        assert_eq!(o.delta, 0.0);
    }

    #[test]
    fn unscoreable_side_is_an_error() {
        let p = pair("...", "the cat", 0);
        assert_eq!(
            orient(&p, OrientationPolicy::Auto),
            Err(SelectorError::Unscoreable)
        );
    }

    #[test]
    fn select_boundary_cases() {
        let config = SelectorConfig::default();
        let mut p = orient(&pair(&mono(20), &mono(5), 0), OrientationPolicy::Auto).unwrap();
        p.delta = 15.0;
        assert!(select(&p, &config));
        p.delta = 10.0;
        assert!(!select(&p, &config));
        assert!(select(
            &p,
            &SelectorConfig {
                comparison: Comparison::GreaterEqual,
                ..config
            }
        ));
        p.delta = 0.0;
        assert!(!select(&p, &config));
    }

    // word-count gaps 12, 9, 15, −3 give deltas 12.18, 9.135, 15.225, −3.045
    fn fixture() -> Vec<SentencePair> {
        vec![
            pair(&mono(20), &mono(8), 0),
            pair(&mono(15), &mono(6), 1),
            pair(&mono(20), &mono(5), 2),
            pair(&mono(5), &mono(8), 3),
        ]
    }

    #[test]
    fn fixture_filter_keeps_two() {
        let (kept, report) = filter_pairs(fixture(), &SelectorConfig::default());
        assert_eq!(kept.len(), 2);
        assert_eq!(kept[0].complex, mono(20));
        assert_eq!(kept[0].simple, mono(8));
        assert_eq!(kept[1].simple, mono(5));
        assert_eq!(
            report,
            SelectorReport {
                read: 4,
                kept: 2,
                dropped_below_threshold: 2,
                dropped_unscoreable: 0,
            }
        );
    }

    #[test]
    fn empty_stream_gives_zero_report() {
        let (kept, report) = filter_pairs(vec![], &SelectorConfig::default());
        assert!(kept.is_empty());
        assert_eq!(report, SelectorReport::default());
    }

    #[test]
    fn zero_threshold_ge_auto_keeps_everything_scoreable() {
        let config = SelectorConfig {
            threshold: 0.0,
            orientation: OrientationPolicy::Auto,
            comparison: Comparison::GreaterEqual,
        };
        let (kept, report) = filter_pairs(fixture(), &config);
        assert_eq!(kept.len(), 4);
        assert_eq!(report.kept, 4);
    }

    #[test]
    fn unscoreable_pairs_are_counted_not_fatal() {
        let mut input = fixture();
        input.push(pair("123 456", &mono(3), 4));
        let (_, report) = filter_pairs(input, &SelectorConfig::default());
        assert_eq!(report.dropped_unscoreable, 1);
        assert_eq!(
            report.read,
            report.kept + report.dropped_below_threshold + report.dropped_unscoreable
        );
    }

    #[test]
    fn kept_pairs_satisfy_threshold_when_rescored() {
        let (kept, _) = filter_pairs(fixture(), &SelectorConfig::default());
        for p in kept {
            let delta = fres_of_line(&p.simple).unwrap().value
                - fres_of_line(&p.complex).unwrap().value;
            assert!(delta > 10.0);
            assert!((delta - p.delta).abs() < 1e-12);
        }
    }

    #[test]
    fn selector_is_idempotent_on_its_own_output() {
        let config = SelectorConfig::default();
        let (kept, _) = filter_pairs(fixture(), &config);
        let again: Vec<SentencePair> = kept
            .iter()
            .enumerate()
            .map(|(i, p)| pair(&p.complex, &p.simple, i as u64))
            .collect();
        let (kept2, report2) = filter_pairs(again, &config);
        assert_eq!(kept2.len(), kept.len());
        assert_eq!(report2.kept, report2.read);
    }

    #[test]
    fn output_is_independent_of_thread_count() {
        let input = fixture();
        let run = |threads: usize| {
            let mut kept = Vec::new();
            let report = build_pseudo_corpus(
                input.clone().into_iter().map(Ok),
                &SelectorConfig::default(),
                threads,
                |p| {
                    kept.push(p.clone());
                    Ok(())
                },
            )
            .unwrap();
            (kept, report)
        };
        assert_eq!(run(1), run(4));
    }
}
