//! Tokenization, syllable estimation, and Flesch Reading Ease scoring
//! for single line-aligned sentences.
//!
//! All functions here are pure; callers may run them from any number of
//! workers without coordination.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    /// The sentence contains no word tokens, so the FRES denominator is zero.
    #[error("sentence has no word tokens")]
    EmptySentence,
}

/// A sentence after tokenization, with the counts feeding the FRES formula.
///
/// `sentence_count` is always 1: the corpora are line-aligned, one sentence
/// per line, and no sentence segmenter is involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedSentence {
    pub tokens: Vec<String>,
    /// Tokens containing at least one alphabetic character.
    pub word_count: usize,
    /// Sum of `count_syllables` over word tokens.
    pub syllable_count: usize,
    pub sentence_count: usize,
}

/// Flesch Reading Ease score. Higher means easier to read.
///
/// The value is deliberately not clamped to [0, 100]: very short simple
/// sentences legitimately score above 100, and clamping would corrupt
/// score-difference thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresScore {
    pub value: f64,
}

/// Splits a line into tokens: whitespace first, then punctuation detached
/// from token edges. A leading apostrophe that introduces a clitic (as in
/// a pre-tokenized `'s`) stays attached.
pub fn tokenize(line: &str) -> TokenizedSentence {
    let mut tokens = Vec::new();
    for chunk in line.split_whitespace() {
        split_chunk(chunk, &mut tokens);
    }
    let mut word_count = 0;
    let mut syllable_count = 0;
    for token in &tokens {
        if is_word(token) {
            word_count += 1;
            syllable_count += count_syllables(token);
        }
    }
    TokenizedSentence {
        tokens,
        word_count,
        syllable_count,
        sentence_count: 1,
    }
}

fn is_word(token: &str) -> bool {
    token.chars().any(|c| c.is_alphabetic())
}

fn split_chunk(chunk: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = chunk.chars().collect();
    let mut start = 0;
    let mut end = chars.len();
    while start < end {
        let c = chars[start];
        if c.is_alphanumeric() {
            break;
        }
        // keep clitic apostrophes ("'s", "'ll") glued to their letters
        if c == '\'' && start + 1 < end && chars[start + 1].is_alphabetic() {
            break;
        }
        out.push(c.to_string());
        start += 1;
    }
    let mut trailing = Vec::new();
    while end > start {
        let c = chars[end - 1];
        if c.is_alphanumeric() {
            break;
        }
        trailing.push(c.to_string());
        end -= 1;
    }
    if start < end {
        out.push(chars[start..end].iter().collect());
    }
    out.extend(trailing.into_iter().rev());
}

/// Estimates syllables by counting maximal vowel groups (a, e, i, o, u, y),
/// with a trailing silent-e adjustment. Always at least 1.
///
/// Tokens without any alphabetic character also return 1.
pub fn count_syllables(word: &str) -> usize {
    let lower = word.to_lowercase();
    let chars: Vec<char> = lower.chars().collect();
    if !chars.iter().any(|c| c.is_alphabetic()) {
        return 1;
    }
    let is_vowel = |c: char| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y');
    let mut groups = 0usize;
    let mut in_group = false;
    for &c in &chars {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
                in_group = true;
            }
        } else {
            in_group = false;
        }
    }
    let n = chars.len();
    // silent trailing "e", but not a consonant-"le" ending ("table")
    let consonant_le = n >= 3
        && chars[n - 2] == 'l'
        && chars[n - 3].is_alphabetic()
        && !is_vowel(chars[n - 3]);
    if groups >= 2 && chars[n - 1] == 'e' && !consonant_le {
        groups -= 1;
    }
    groups.max(1)
}

/// Flesch Reading Ease:
/// `206.835 − 1.015·(words/sentences) − 84.6·(syllables/words)`.
pub fn fres(sentence: &TokenizedSentence) -> Result<FresScore, MetricError> {
    if sentence.word_count == 0 {
        return Err(MetricError::EmptySentence);
    }
    let words = sentence.word_count as f64;
    let sentences = sentence.sentence_count as f64;
    let syllables = sentence.syllable_count as f64;
    Ok(FresScore {
        value: 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words),
    })
}

/// FRES of target minus FRES of source. Positive means the target reads easier.
pub fn fres_delta(
    source: &TokenizedSentence,
    target: &TokenizedSentence,
) -> Result<f64, MetricError> {
    Ok(fres(target)?.value - fres(source)?.value)
}

/// Tokenizes and scores a line in one step.
pub fn fres_of_line(line: &str) -> Result<FresScore, MetricError> {
    fres(&tokenize(line))
}
