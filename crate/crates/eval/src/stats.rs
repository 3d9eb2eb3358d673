//! Corpus statistics.

use std::collections::HashSet;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grammeme::{TagSet, G};
use crate::lexicon::{CorpusLexeme, CorpusPos, Lexicon};

/// How the forms of a lexeme are counted.
///
/// The forms in scope depend on the part of speech. For adjectives (ADJF)
/// they are the full forms of the positive degree in standard spelling:
/// superlative forms and the `-ою`/`-ею` instrumental variants are left
/// out. For every other part of speech all forms of the lexeme are in
/// scope; a verb lexeme includes its gerunds and participles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Counting {
    /// Distinct surface strings.
    DistinctStrings,
    /// Distinct grammeme sets.
    TaggedSlots,
}

impl FromStr for Counting {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "distinct-strings" | "strings" => Ok(Counting::DistinctStrings),
            "tagged-slots" | "slots" => Ok(Counting::TaggedSlots),
            _ => Err(format!("unknown counting mode {s:?}")),
        }
    }
}

fn in_scope(pos: CorpusPos, tags: TagSet) -> bool {
    match pos {
        CorpusPos::Adjf => tags.has(G::ADJF) && !tags.has(G::SUPR) && !tags.has(G::V_OY) && !tags.has(G::V_EY),
        _ => true,
    }
}

/// Form count of one lexeme.
pub fn form_count(lexeme: &CorpusLexeme, counting: Counting) -> usize {
    let forms = lexeme.forms.iter().filter(|f| in_scope(lexeme.pos, f.tags));
    match counting {
        Counting::DistinctStrings => forms.map(|f| &*f.text).collect::<HashSet<_>>().len(),
        Counting::TaggedSlots => forms.map(|f| f.tags).collect::<HashSet<_>>().len(),
    }
}

/// Mean form count over the lexemes of `pos`.
pub fn avg_form_count(lexicon: &Lexicon, pos: CorpusPos, counting: Counting) -> Result<f64> {
    let (n, total) = lexicon
        .with_pos(pos)
        .fold((0usize, 0usize), |(n, t), lx| (n + 1, t + form_count(lx, counting)));
    if n == 0 {
        return Err(Error::Empty(pos.tag().to_string()));
    }
    Ok(total as f64 / n as f64)
}

/// Lexeme counts that correspond to the paper's per-part-of-speech word
/// counts: common nouns (anthroponyms excluded) and infinitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LexemeCounts {
    pub nouns: usize,
    pub verbs: usize,
    pub adjectives: usize,
}

pub fn lexeme_counts(lexicon: &Lexicon) -> LexemeCounts {
    LexemeCounts {
        nouns: lexicon.with_pos(CorpusPos::Noun).filter(|l| !l.is_anthroponym()).count(),
        verbs: lexicon.with_pos(CorpusPos::Infn).count(),
        adjectives: lexicon.with_pos(CorpusPos::Adjf).count(),
    }
}
