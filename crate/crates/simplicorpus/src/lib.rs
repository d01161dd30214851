//! Tools for turning paraphrase corpora into pseudo sentence-simplification
//! training data, plus SARI evaluation of simplification outputs.
//!
//! The pipeline has three stages, each usable on its own:
//!
//! 1. [`corpus`] — streaming TSV I/O, seeded reservoir sampling, and
//!    corpus statistics.
//! 2. [`selector`] — orient each pair complex→simple by Flesch Reading
//!    Ease and keep pairs whose score difference clears a threshold
//!    (default 10.0, one school grade level).
//! 3. [`sari`] — score system outputs against the original sentences and
//!    multiple references.
//!
//! [`textmetrics`] supplies the tokenizer, syllable heuristic, and the
//! readability formula the selector runs on.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run -p simplicorpus --example score_readability
//! cargo run -p simplicorpus --example sample_pairs
//! cargo run -p simplicorpus --example build_pseudo_corpus
//! cargo run -p simplicorpus --example corpus_stats
//! cargo run -p simplicorpus --example evaluate_sari
//! ```
//!
//! The same operations are available as subcommands of the `simplicorpus`
//! binary for shell pipelines.

pub mod cli;
pub mod corpus;
pub mod sari;
pub mod selector;
pub mod textmetrics;

pub use corpus::{CorpusStats, SentencePair};
pub use sari::{SariInstance, SariOptions, SariScore};
pub use selector::{OrientedPair, SelectorConfig, SelectorReport};
pub use textmetrics::{FresScore, TokenizedSentence};
