//! Morphological variability: the summed edit distance between the forms
//! of a word.
//!
//! Pairs are unordered (`i < j`). Reading the sum over ordered pairs would
//! double every score and leave every ranking unchanged.

use std::io::Write;

use rumorph::{Engine, Paradigm, Person, Pos, Tense};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evaluate::corpus_pos;
use crate::lexicon::Lexicon;

/// Edit distance with unit costs, over characters.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Sum of distances over all unordered pairs of forms.
pub fn variability_score<S: AsRef<str>>(forms: &[S]) -> Result<u64> {
    if forms.is_empty() {
        return Err(Error::Empty("forms".into()));
    }
    let mut total = 0u64;
    for (i, a) in forms.iter().enumerate() {
        for b in &forms[i + 1..] {
            total += levenshtein(a.as_ref(), b.as_ref()) as u64;
        }
    }
    Ok(total)
}

/// The forms a paradigm contributes, in slot order. Absent slots are
/// skipped; a verb's past forms are taken once, from the third-person
/// slots, since the person axis is not realized in the past.
pub fn paradigm_forms(p: &Paradigm) -> Vec<String> {
    p.slots
        .iter()
        .filter(|s| {
            !(p.pos == Pos::Verb
                && s.bundle.tense == Some(Tense::Past)
                && s.bundle.person != Some(Person::Third))
        })
        .filter_map(|s| s.form.clone())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariabilityRecord {
    pub lemma: String,
    pub pos: Pos,
    pub form_count: usize,
    pub score: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Curve {
    /// Ascending by score, ties by lemma.
    pub records: Vec<VariabilityRecord>,
    /// Lexemes the engine could not inflect.
    pub failed: usize,
}

/// Scores every lemma and sorts the records.
pub fn curve_from_lemmas<'a>(engine: &Engine, pos: Pos, lemmas: impl IntoIterator<Item = &'a str>) -> Curve {
    let mut curve = Curve::default();
    for lemma in lemmas {
        let record = engine.paradigm(pos, lemma).ok().and_then(|p| {
            let forms = paradigm_forms(&p);
            let score = variability_score(&forms).ok()?;
            Some(VariabilityRecord { lemma: lemma.to_string(), pos, form_count: forms.len(), score })
        });
        match record {
            Some(r) => curve.records.push(r),
            None => curve.failed += 1,
        }
    }
    curve.records.sort_by(|a, b| a.score.cmp(&b.score).then_with(|| a.lemma.cmp(&b.lemma)));
    curve
}

/// The variability curve over the lexemes of a lexicon.
pub fn variability_curve(engine: &Engine, lexicon: &Lexicon, pos: Pos) -> Result<Curve> {
    let cpos = corpus_pos(pos)?;
    let lemmas: Vec<&str> = lexicon.with_pos(cpos).map(|l| l.lemma.as_str()).collect();
    Ok(curve_from_lemmas(engine, pos, lemmas))
}

impl Curve {
    /// CSV with header `lemma,pos,form_count,score`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["lemma", "pos", "form_count", "score"])?;
        for r in &self.records {
            w.write_record([r.lemma.as_str(), r.pos.tag(), &r.form_count.to_string(), &r.score.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(levenshtein("решать", "решать"), 0);
        assert_eq!(levenshtein("решать", "решаю"), 2);
        assert_eq!(levenshtein("", "абв"), 3);
        assert_eq!(levenshtein("абв", ""), 3);
        assert_eq!(variability_score(&["a", "a", "a"]).unwrap(), 0);
        assert_eq!(variability_score(&["a", "ab"]).unwrap(), 1);
        assert!(variability_score::<&str>(&[]).is_err());
    }

    #[test]
    fn curve_sorted_and_csv() {
        let e = Engine::builtin();
        let curve = curve_from_lemmas(e, Pos::Noun, ["стол", "кофе", "книга", "qq"]);
        assert_eq!(curve.failed, 1);
        assert_eq!(curve.records[0].lemma, "кофе");
        assert_eq!(curve.records[0].score, 0);
        assert!(curve.records.windows(2).all(|w| w[0].score <= w[1].score));
        let mut out = Vec::new();
        curve.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("lemma,pos,form_count,score\nкофе,noun,12,0\n"));
    }

    #[test]
    fn verb_past_counted_once() {
        let p = Engine::builtin().paradigm(Pos::Verb, "решать").unwrap();
        let forms = paradigm_forms(&p);
        assert_eq!(forms.len(), 6 + 6 + 4);
    }
}
