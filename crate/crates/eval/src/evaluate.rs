//! Agreement of engine paradigms with the corpus.
//!
//! Each corpus form is mapped to at most one engine slot (the mapping is a
//! function of its grammemes), so no corpus form is compared twice. A slot
//! with several corpus forms (spelling variants) matches when the engine
//! form equals any of them. Slots without corpus forms are left out of the
//! denominator.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rumorph::{Animacy, Case, Engine, FeatureBundle, GenderOrPlural, Number, ParticipleKind, Pos, Tense};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grammeme::{TagSet, G};
use crate::lexicon::{CorpusLexeme, CorpusPos, Lexicon};

/// Which lexemes to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sample {
    All,
    /// `size` lexemes drawn without replacement with a seeded generator.
    Random { size: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub lexeme_id: u32,
    pub lemma: String,
    pub slot: String,
    /// Corpus variants for the slot.
    pub expected: Vec<String>,
    /// Engine output; `None` when the engine gave no form or failed.
    pub produced: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgreementReport {
    pub pos: Pos,
    pub words: usize,
    pub forms_compared: usize,
    pub matches: usize,
    /// Percentage of compared forms that match; 100 when nothing was compared.
    pub rate: f64,
    pub wall_ms: f64,
    pub per_word_ms: f64,
    pub discrepancies: Vec<Discrepancy>,
}

impl AgreementReport {
    pub fn empty(pos: Pos) -> Self {
        AgreementReport {
            pos,
            words: 0,
            forms_compared: 0,
            matches: 0,
            rate: 100.0,
            wall_ms: 0.0,
            per_word_ms: 0.0,
            discrepancies: Vec::new(),
        }
    }

    fn recompute(&mut self) {
        self.rate = if self.forms_compared == 0 {
            100.0
        } else {
            100.0 * self.matches as f64 / self.forms_compared as f64
        };
        self.per_word_ms = if self.words == 0 { 0.0 } else { self.wall_ms / self.words as f64 };
    }

    /// Combines reports over disjoint lexeme sets by summing counts.
    pub fn merge(mut self, other: AgreementReport) -> AgreementReport {
        self.words += other.words;
        self.forms_compared += other.forms_compared;
        self.matches += other.matches;
        self.wall_ms = self.wall_ms.max(other.wall_ms);
        self.discrepancies.extend(other.discrepancies);
        self.recompute();
        self
    }

    /// Forms per word: engine slot count for the part of speech.
    pub fn forms_per_word(&self) -> usize {
        self.pos.slot_count()
    }

    /// One row in the layout of the paper's results table.
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<22} {:>8} {:>10} {:>14} {:>10}",
            "part of speech", "words", "forms/word", "ms/word", "agreement"
        );
        let _ = writeln!(
            s,
            "{:<22} {:>8} {:>10} {:>14.4} {:>9.3}%",
            self.pos.tag(),
            self.words,
            self.forms_per_word(),
            self.per_word_ms,
            self.rate
        );
        s
    }

    /// Discrepancy list as CSV: lemma, slot-tag, expected, produced.
    pub fn write_discrepancies<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["lemma", "slot", "expected", "produced"])?;
        for d in &self.discrepancies {
            w.write_record([
                d.lemma.as_str(),
                d.slot.as_str(),
                &d.expected.join("|"),
                d.produced.as_deref().unwrap_or(""),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Corpus part of speech whose lexemes feed an engine part of speech.
pub fn corpus_pos(pos: Pos) -> Result<CorpusPos> {
    match pos {
        Pos::Noun => Ok(CorpusPos::Noun),
        Pos::Adjective => Ok(CorpusPos::Adjf),
        Pos::Verb | Pos::Imperative | Pos::Gerund | Pos::Participle(_) => Ok(CorpusPos::Infn),
        Pos::Adverb | Pos::Ordinal | Pos::Cardinal => Err(Error::Unsupported(pos.tag().to_string())),
    }
}

fn agreement(tags: TagSet) -> Option<GenderOrPlural> {
    match tags.number() {
        Some(Number::Plural) => Some(GenderOrPlural::Plural),
        _ => tags.gender().map(|g| GenderOrPlural::from_parts(g, Number::Singular)),
    }
}

fn bundle_agreement(b: &FeatureBundle) -> Option<GenderOrPlural> {
    match b.number {
        Some(Number::Plural) => Some(GenderOrPlural::Plural),
        _ => b.gender.map(|g| GenderOrPlural::from_parts(g, Number::Singular)),
    }
}

/// Long or short declined form (adjectives and participles).
fn declined_slot(table: &[FeatureBundle], tags: TagSet, short: bool) -> Option<usize> {
    let target = agreement(tags)?;
    if short {
        return table
            .iter()
            .position(|b| b.case.is_none() && bundle_agreement(b) == Some(target));
    }
    let case = tags.case()?;
    // the engine's accusative slot is the inanimate reading
    if case == Case::Accusative && tags.animacy() == Some(Animacy::Animate) {
        return None;
    }
    table
        .iter()
        .position(|b| b.case == Some(case) && bundle_agreement(b) == Some(target))
}

/// The engine slot a corpus form is compared with, if any.
pub fn slot_of(pos: Pos, table: &[FeatureBundle], tags: TagSet, citation: TagSet) -> Option<usize> {
    if tags.is_excluded() {
        return None;
    }
    match pos {
        Pos::Noun => {
            if !tags.has(G::NOUN) {
                return None;
            }
            let (case, number) = (tags.case()?, tags.number()?);
            table.iter().position(|b| b.case == Some(case) && b.number == Some(number))
        }
        Pos::Adjective => {
            if tags.has(G::SUPR) != citation.has(G::SUPR) {
                return None;
            }
            if tags.has(G::ADJF) {
                declined_slot(table, tags, false)
            } else if tags.has(G::ADJS) {
                declined_slot(table, tags, true)
            } else {
                None
            }
        }
        Pos::Participle(kind) => {
            let voice_ok = match kind {
                ParticipleKind::PresentActive => tags.has(G::ACTV) && tags.has(G::PRES),
                ParticipleKind::PastActive => tags.has(G::ACTV) && tags.has(G::PAST),
                ParticipleKind::PastPassive => tags.has(G::PSSV) && tags.has(G::PAST),
            };
            if !voice_ok {
                return None;
            }
            if tags.has(G::PRTF) {
                declined_slot(table, tags, false)
            } else if tags.has(G::PRTS) {
                declined_slot(table, tags, true)
            } else {
                None
            }
        }
        Pos::Verb => {
            if !tags.has(G::VERB) || !tags.has(G::INDC) {
                return None;
            }
            let tense = tags.tense()?;
            let number = tags.number()?;
            match tense {
                Tense::Present | Tense::Future => {
                    let person = tags.person()?;
                    table.iter().position(|b| {
                        b.tense == Some(tense) && b.person == Some(person) && b.number == Some(number)
                    })
                }
                Tense::Past => {
                    // past forms do not inflect for person; compare them
                    // with the third-person slots only
                    let gender = if number == Number::Singular { Some(tags.gender()?) } else { None };
                    table.iter().position(|b| {
                        b.tense == Some(Tense::Past)
                            && b.person == Some(rumorph::Person::Third)
                            && b.number == Some(number)
                            && b.gender == gender
                    })
                }
            }
        }
        Pos::Imperative => {
            if !tags.has(G::VERB) || !tags.has(G::IMPR) || !tags.has(G::EXCL) {
                return None;
            }
            let number = tags.number()?;
            table.iter().position(|b| b.number == Some(number))
        }
        Pos::Gerund => {
            if !tags.has(G::GRND) {
                return None;
            }
            let aspect = match tags.tense()? {
                Tense::Past => rumorph::Aspect::Perfective,
                Tense::Present => rumorph::Aspect::Imperfective,
                Tense::Future => return None,
            };
            table.iter().position(|b| b.aspect == Some(aspect))
        }
        Pos::Adverb | Pos::Ordinal | Pos::Cardinal => None,
    }
}

/// Corpus variants per engine slot.
pub fn align(pos: Pos, table: &[FeatureBundle], lexeme: &CorpusLexeme) -> BTreeMap<usize, Vec<String>> {
    let citation = lexeme.citation_tags();
    let mut slots: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for f in &lexeme.forms {
        if let Some(i) = slot_of(pos, table, f.tags, citation) {
            let v = slots.entry(i).or_default();
            if !v.iter().any(|t| **t == *f.text) {
                v.push(f.text.to_string());
            }
        }
    }
    slots
}

/// Lexemes eligible for evaluation as `pos`, in id order.
pub fn population(lexicon: &Lexicon, pos: Pos) -> Result<Vec<&CorpusLexeme>> {
    let cpos = corpus_pos(pos)?;
    let table = pos.slot_table();
    Ok(lexicon
        .with_pos(cpos)
        .filter(|lx| {
            let c = lx.citation_tags();
            !c.is_excluded() && !lx.is_anthroponym() && !c.has(G::APRO)
        })
        .filter(|lx| {
            let c = lx.citation_tags();
            lx.forms.iter().any(|f| slot_of(pos, &table, f.tags, c).is_some())
        })
        .collect())
}

/// Seeded sample of `items`, kept in their original order.
pub fn sample<T: Copy>(items: &[T], sample: Sample) -> Vec<T> {
    match sample {
        Sample::All => items.to_vec(),
        Sample::Random { size, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = index::sample(&mut rng, items.len(), size.min(items.len())).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| items[i]).collect()
        }
    }
}

fn evaluate_lexemes(engine: &Engine, pos: Pos, table: &[FeatureBundle], lexemes: &[&CorpusLexeme]) -> AgreementReport {
    let mut report = AgreementReport::empty(pos);
    for lx in lexemes {
        let expected = align(pos, table, lx);
        let paradigm = engine.paradigm(pos, &lx.lemma);
        report.words += 1;
        for (i, variants) in expected {
            let produced = paradigm.as_ref().ok().and_then(|p| p.slots[i].form.clone());
            report.forms_compared += 1;
            if produced.as_ref().is_some_and(|p| variants.contains(p)) {
                report.matches += 1;
            } else {
                report.discrepancies.push(Discrepancy {
                    lexeme_id: lx.id,
                    lemma: lx.lemma.clone(),
                    slot: table[i].to_string(),
                    expected: variants,
                    produced,
                });
            }
        }
    }
    report
}

/// Generates the engine paradigm of every sampled lexeme and compares it
/// with the corpus. Work is split across threads; the partial reports are
/// merged by summing counts.
pub fn evaluate_pos(engine: &Engine, lexicon: &Lexicon, pos: Pos, spec: Sample) -> Result<AgreementReport> {
    let pool = population(lexicon, pos)?;
    let chosen = sample(&pool, spec);
    let table = pos.slot_table();
    let start = Instant::now();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = chosen.len().div_ceil(threads).max(1);
    let mut report = std::thread::scope(|s| {
        let handles: Vec<_> = chosen
            .chunks(chunk)
            .map(|part| {
                let table = &table;
                s.spawn(move || evaluate_lexemes(engine, pos, table, part))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation thread panicked"))
            .fold(AgreementReport::empty(pos), AgreementReport::merge)
    });
    report.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    report.recompute();
    Ok(report)
}

/// Known-bad corpus entries, by lexeme id or lemma.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Errata {
    pub ids: HashSet<u32>,
    pub lemmas: HashSet<String>,
}

const BUILTIN_ERRATA: &str = include_str!("../data/errata.txt");

impl Errata {
    /// One lexeme id or lemma per line; `#` starts a comment.
    pub fn parse(text: &str) -> Self {
        let mut errata = Errata::default();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Ok(id) = line.parse() {
                errata.ids.insert(id);
            } else if let Ok(w) = rumorph::normalize(line) {
                errata.lemmas.insert(w.into_string());
            }
        }
        errata
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(Self::parse(&std::fs::read_to_string(path)?))
    }

    /// The entries shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_ERRATA)
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty() && self.lemmas.is_empty()
    }

    pub fn contains(&self, id: u32, lemma: &str) -> bool {
        self.ids.contains(&id) || self.lemmas.contains(lemma)
    }
}

/// Drops the discrepancies of errata lexemes from the report; each dropped
/// discrepancy also leaves the denominator.
pub fn errata_filter(report: &AgreementReport, errata: &Errata) -> AgreementReport {
    let mut out = report.clone();
    let before = out.discrepancies.len();
    out.discrepancies.retain(|d| !errata.contains(d.lexeme_id, &d.lemma));
    out.forms_compared -= before - out.discrepancies.len();
    out.recompute();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(discrepancies: Vec<Discrepancy>, compared: usize) -> AgreementReport {
        let mut r = AgreementReport::empty(Pos::Verb);
        r.words = 3;
        r.matches = compared - discrepancies.len();
        r.forms_compared = compared;
        r.discrepancies = discrepancies;
        r.recompute();
        r
    }

    fn miss(id: u32, lemma: &str) -> Discrepancy {
        Discrepancy {
            lexeme_id: id,
            lemma: lemma.into(),
            slot: "tense=pres".into(),
            expected: vec!["x".into()],
            produced: None,
        }
    }

    #[test]
    fn errata_removes_listed_mismatches() {
        let r = report(vec![miss(1, "застелить"), miss(2, "решать")], 10);
        let f = errata_filter(&r, &Errata::builtin());
        assert_eq!(f.discrepancies.len(), 1);
        assert_eq!(f.forms_compared, 9);
        assert!(f.rate > r.rate);
        assert_eq!(f.forms_compared - f.matches, f.discrepancies.len());
    }

    #[test]
    fn empty_errata_is_identity() {
        let r = report(vec![miss(1, "застелить")], 4);
        assert_eq!(errata_filter(&r, &Errata::default()), r);
    }

    #[test]
    fn errata_covering_all_gives_full_rate() {
        let r = report(vec![miss(1, "а"), miss(2, "б")], 2);
        let f = errata_filter(&r, &Errata::parse("1\n# comment\nб\n"));
        assert_eq!(f.rate, 100.0);
    }

    #[test]
    fn builtin_errata_seeded() {
        let e = Errata::builtin();
        for w in ["застелить", "выместить", "напечь", "перекиснуть"] {
            assert!(e.lemmas.contains(w), "{w}");
        }
    }

    #[test]
    fn sampling_is_seeded_and_ordered() {
        let items: Vec<u32> = (0..500).collect();
        let a = sample(&items, Sample::Random { size: 50, seed: 7 });
        let b = sample(&items, Sample::Random { size: 50, seed: 7 });
        let c = sample(&items, Sample::Random { size: 50, seed: 8 });
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(sample(&items, Sample::Random { size: 900, seed: 1 }).len(), 500);
    }
}
