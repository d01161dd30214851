//! Streaming TSV corpus I/O, seeded reservoir sampling, and corpus
//! statistics.
//!
//! Everything here works line by line: memory stays proportional to the
//! vocabulary (stats) or the sample size (sampling), never to the corpus.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::textmetrics::tokenize;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus contains no valid pairs")]
    EmptyCorpus,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One paraphrase record: two tab-separated sentences plus its 0-based
/// position in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentencePair {
    pub source: String,
    pub target: String,
    pub ordinal: u64,
}

/// Line-level accounting for a pass over a TSV stream.
#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct ReadReport {
    /// Total lines seen, valid or not.
    pub read: u64,
    /// Lines skipped: wrong tab count, empty field, or invalid UTF-8.
    pub malformed: u64,
}

/// Streaming reader over a two-column TSV. Malformed lines are counted and
/// skipped, never abort the stream; only real I/O errors surface.
pub struct PairReader<R> {
    inner: R,
    buf: Vec<u8>,
    report: ReadReport,
    next_ordinal: u64,
}

impl<R: BufRead> PairReader<R> {
    pub fn new(inner: R) -> Self {
        PairReader {
            inner,
            buf: Vec::new(),
            report: ReadReport::default(),
            next_ordinal: 0,
        }
    }

    /// Counts accumulated so far; call after the iterator is exhausted for
    /// the final tally.
    pub fn report(&self) -> ReadReport {
        self.report
    }
}

impl<R: BufRead> Iterator for PairReader<R> {
    type Item = io::Result<SentencePair>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            if self.buf.last() == Some(&b'\n') {
                self.buf.pop();
            }
            if self.buf.last() == Some(&b'\r') {
                self.buf.pop();
            }
            self.report.read += 1;
            let ordinal = self.next_ordinal;
            self.next_ordinal += 1;
            match parse_line(&self.buf) {
                Some((source, target)) => {
                    return Some(Ok(SentencePair {
                        source,
                        target,
                        ordinal,
                    }))
                }
                None => self.report.malformed += 1,
            }
        }
    }
}

fn parse_line(line: &[u8]) -> Option<(String, String)> {
    let text = std::str::from_utf8(line).ok()?;
    let mut fields = text.split('\t');
    let source = fields.next()?;
    let target = fields.next()?;
    if fields.next().is_some() || source.is_empty() || target.is_empty() {
        return None;
    }
    Some((source.to_string(), target.to_string()))
}

/// Single-pass uniform reservoir sampler holding at most `n` pairs.
/// Feeding the same pairs in the same order with the same seed always
/// produces the same sample.
pub struct Reservoir {
    capacity: usize,
    rng: ChaCha8Rng,
    seen: u64,
    held: Vec<SentencePair>,
}

impl Reservoir {
    pub fn new(n: usize, seed: u64) -> Self {
        assert!(n >= 1, "sample size must be at least 1");
        Reservoir {
            capacity: n,
            rng: ChaCha8Rng::seed_from_u64(seed),
            seen: 0,
            held: Vec::new(),
        }
    }

    pub fn push(&mut self, pair: SentencePair) {
        self.seen += 1;
        if self.held.len() < self.capacity {
            self.held.push(pair);
        } else {
            let slot = self.rng.gen_range(0..self.seen);
            if (slot as usize) < self.capacity {
                self.held[slot as usize] = pair;
            }
        }
    }

    /// The sample, restored to input order.
    pub fn finish(mut self) -> Vec<SentencePair> {
        self.held.sort_by_key(|p| p.ordinal);
        self.held
    }
}

/// Uniform reservoir sample of `min(n, input size)` pairs, restored to
/// input order. The same `(input, n, seed)` always yields the same sample.
pub fn sample<I>(pairs: I, n: usize, seed: u64) -> Vec<SentencePair>
where
    I: IntoIterator<Item = SentencePair>,
{
    let mut reservoir = Reservoir::new(n, seed);
    for pair in pairs {
        reservoir.push(pair);
    }
    reservoir.finish()
}

/// Corpus statistics with the same semantics as the usual parallel-corpus
/// tables: distinct lowercased tokens per side, mean word counts, totals.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CorpusStats {
    pub vocab_complex: usize,
    pub vocab_simple: usize,
    pub avg_complex: f64,
    pub avg_simple: f64,
    pub total_pairs: u64,
}

/// Incremental accumulator behind [`compute_stats`]. Shards may each keep
/// their own accumulator and `merge` at the end; merging is associative
/// and commutative.
#[derive(Debug, Default)]
pub struct StatsAccumulator {
    vocab_complex: HashSet<String>,
    vocab_simple: HashSet<String>,
    words_complex: u64,
    words_simple: u64,
    total_pairs: u64,
}

impl StatsAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, complex: &str, simple: &str) {
        let c = tokenize(complex);
        let s = tokenize(simple);
        for t in &c.tokens {
            self.vocab_complex.insert(t.to_lowercase());
        }
        for t in &s.tokens {
            self.vocab_simple.insert(t.to_lowercase());
        }
        self.words_complex += c.word_count as u64;
        self.words_simple += s.word_count as u64;
        self.total_pairs += 1;
    }

    pub fn merge(&mut self, other: StatsAccumulator) {
        self.vocab_complex.extend(other.vocab_complex);
        self.vocab_simple.extend(other.vocab_simple);
        self.words_complex += other.words_complex;
        self.words_simple += other.words_simple;
        self.total_pairs += other.total_pairs;
    }

    pub fn finish(self) -> Result<CorpusStats, CorpusError> {
        if self.total_pairs == 0 {
            return Err(CorpusError::EmptyCorpus);
        }
        let total = self.total_pairs as f64;
        Ok(CorpusStats {
            vocab_complex: self.vocab_complex.len(),
            vocab_simple: self.vocab_simple.len(),
            avg_complex: self.words_complex as f64 / total,
            avg_simple: self.words_simple as f64 / total,
            total_pairs: self.total_pairs,
        })
    }
}

/// Statistics over `(complex, simple)` line pairs. For raw pairs the source
/// column is the complex side.
pub fn compute_stats<'a, I>(pairs: I) -> Result<CorpusStats, CorpusError>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut acc = StatsAccumulator::new();
    for (complex, simple) in pairs {
        acc.add(complex, simple);
    }
    acc.finish()
}

/// Writes pairs back out as two-column TSV.
pub fn write_tsv<W: Write>(mut out: W, pairs: &[SentencePair]) -> io::Result<()> {
    for pair in pairs {
        writeln!(out, "{}\t{}", pair.source, pair.target)?;
    }
    Ok(())
}
