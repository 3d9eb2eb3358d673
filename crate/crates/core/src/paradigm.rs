//! Parts of speech, their fixed slot tables and the [`Paradigm`] container.
//!
//! Slot tables (forms per word):
//!
//! | part of speech | slots | composition |
//! |---|---|---|
//! | noun | 12 | 2 numbers × 6 cases |
//! | adjective | 28 | {m, f, n, pl} × 6 cases (accusative = inanimate reading) + 4 short forms |
//! | adverb | 2 | comparative, superlative |
//! | verb | 24 | present 3 persons × 2 numbers, future likewise, past 3 persons × {m, f, n} singular + 3 persons plural |
//! | imperative | 2 | singular, plural |
//! | gerund | 2 | perfective, imperfective |
//! | participle (each kind) | 28 | {m, f, n, pl} × 6 cases + 4 short forms |
//! | ordinal | 18 | {m, f, n} × 6 cases |
//! | cardinal | 24 | {m, f, n} × 6 cases + masculine animate × 6 cases |
//!
//! A verb realizes past forms identically for every person; the person
//! axis is kept so that every `(tense, person, number, gender)` request has
//! a slot. Slots a lexeme cannot realize hold no form.

use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grammar::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    Noun,
    Adjective,
    Adverb,
    Verb,
    Imperative,
    Gerund,
    Participle(ParticipleKind),
    Ordinal,
    Cardinal,
}

impl Pos {
    pub const ALL: [Pos; 11] = [
        Pos::Noun,
        Pos::Adjective,
        Pos::Adverb,
        Pos::Verb,
        Pos::Imperative,
        Pos::Gerund,
        Pos::Participle(ParticipleKind::PresentActive),
        Pos::Participle(ParticipleKind::PastActive),
        Pos::Participle(ParticipleKind::PastPassive),
        Pos::Ordinal,
        Pos::Cardinal,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Pos::Noun => "noun",
            Pos::Adjective => "adj",
            Pos::Adverb => "adv",
            Pos::Verb => "verb",
            Pos::Imperative => "imperative",
            Pos::Gerund => "gerund",
            Pos::Participle(ParticipleKind::PresentActive) => "participle-pres-act",
            Pos::Participle(ParticipleKind::PastActive) => "participle-past-act",
            Pos::Participle(ParticipleKind::PastPassive) => "participle-past-pass",
            Pos::Ordinal => "ordinal",
            Pos::Cardinal => "cardinal",
        }
    }

    /// The slot table: every valid bundle for this part of speech, in
    /// canonical order.
    pub fn slot_table(self) -> Vec<FeatureBundle> {
        self.slots().to_vec()
    }

    /// The slot table, computed once.
    pub fn slots(self) -> &'static [FeatureBundle] {
        static TABLES: Lazy<Vec<Vec<FeatureBundle>>> =
            Lazy::new(|| Pos::ALL.iter().map(|p| p.build_slot_table()).collect());
        let i = Pos::ALL.iter().position(|&p| p == self).expect("every Pos is in Pos::ALL");
        &TABLES[i]
    }

    fn build_slot_table(self) -> Vec<FeatureBundle> {
        let base = FeatureBundle::new();
        match self {
            Pos::Noun => Number::ALL
                .iter()
                .flat_map(|&n| Case::ALL.iter().map(move |&c| base.with_number(n).with_case(c)))
                .collect(),
            Pos::Adjective => declension_slots(base, true),
            Pos::Participle(kind) => {
                let base = base.with_participle(kind).with_voice(kind.voice());
                declension_slots(base, true)
            }
            Pos::Adverb => vec![
                base.with_degree(Degree::Comparative),
                base.with_degree(Degree::Superlative),
            ],
            Pos::Verb => {
                let mut slots = Vec::with_capacity(24);
                for tense in [Tense::Present, Tense::Future] {
                    for &number in Number::ALL {
                        for &person in Person::ALL {
                            slots.push(
                                base.with_tense(tense).with_person(person).with_number(number),
                            );
                        }
                    }
                }
                for &person in Person::ALL {
                    for &gender in Gender::ALL {
                        slots.push(
                            base.with_tense(Tense::Past)
                                .with_person(person)
                                .with_number(Number::Singular)
                                .with_gender(gender),
                        );
                    }
                }
                for &person in Person::ALL {
                    slots.push(
                        base.with_tense(Tense::Past)
                            .with_person(person)
                            .with_number(Number::Plural),
                    );
                }
                slots
            }
            Pos::Imperative => Number::ALL.iter().map(|&n| base.with_number(n)).collect(),
            Pos::Gerund => vec![
                base.with_aspect(Aspect::Perfective),
                base.with_aspect(Aspect::Imperfective),
            ],
            Pos::Ordinal => Gender::ALL
                .iter()
                .flat_map(|&g| Case::ALL.iter().map(move |&c| base.with_gender(g).with_case(c)))
                .collect(),
            Pos::Cardinal => {
                let mut slots: Vec<_> = Gender::ALL
                    .iter()
                    .flat_map(|&g| Case::ALL.iter().map(move |&c| base.with_gender(g).with_case(c)))
                    .collect();
                slots.extend(Case::ALL.iter().map(|&c| {
                    base.with_gender(Gender::Masculine)
                        .with_animacy(Animacy::Animate)
                        .with_case(c)
                }));
                slots
            }
        }
    }

    /// Number of forms per word.
    pub fn slot_count(self) -> usize {
        match self {
            Pos::Noun => 12,
            Pos::Adjective | Pos::Participle(_) => 28,
            Pos::Adverb | Pos::Imperative | Pos::Gerund => 2,
            Pos::Verb | Pos::Cardinal => 24,
            Pos::Ordinal => 18,
        }
    }
}

/// 24 long forms ({m, f, n, pl} × cases) followed by 4 short forms.
fn declension_slots(base: FeatureBundle, with_short: bool) -> Vec<FeatureBundle> {
    let mut slots: Vec<_> = GenderOrPlural::ALL
        .iter()
        .flat_map(|&t| Case::ALL.iter().map(move |&c| base.with_agreement(t).with_case(c)))
        .collect();
    if with_short {
        slots.extend(GenderOrPlural::ALL.iter().map(|&t| base.with_agreement(t)));
    }
    slots
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Pos {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pos = match s.trim().to_lowercase().as_str() {
            "noun" => Pos::Noun,
            "adj" | "adjective" => Pos::Adjective,
            "adv" | "adverb" => Pos::Adverb,
            "verb" => Pos::Verb,
            "imperative" | "imper" => Pos::Imperative,
            "gerund" | "gerunds" => Pos::Gerund,
            "participle-pres-act" | "prtf-pres-act" => {
                Pos::Participle(ParticipleKind::PresentActive)
            }
            "participle-past-act" | "prtf-past-act" => Pos::Participle(ParticipleKind::PastActive),
            "participle-past-pass" | "prtf-past-pass" | "ppp" => {
                Pos::Participle(ParticipleKind::PastPassive)
            }
            "ordinal" => Pos::Ordinal,
            "cardinal" => Pos::Cardinal,
            _ => return Err(Error::UnknownFeature(s.to_string())),
        };
        Ok(pos)
    }
}

impl Serialize for Pos {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Pos {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

/// One paradigm cell. `form` is `None` when the lexeme cannot realize the
/// slot (for instance the present tense of a perfective verb). Analytic
/// forms such as `буду решать` are space-joined normalized words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub bundle: FeatureBundle,
    pub form: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Paradigm {
    /// Normalized lemma; numerals have multi-word lemmas.
    pub lemma: String,
    pub pos: Pos,
    pub slots: Vec<Slot>,
}

impl Paradigm {
    /// Fills the slot table of `pos`. The closure returns `Ok(None)` for
    /// slots the lexeme cannot realize.
    pub fn build(
        lemma: impl Into<String>,
        pos: Pos,
        mut fill: impl FnMut(&FeatureBundle) -> Result<Option<String>>,
    ) -> Result<Self> {
        let slots = pos
            .slots()
            .iter()
            .map(|&bundle| {
                let form = fill(&bundle)?;
                Ok(Slot { bundle, form })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Paradigm { lemma: lemma.into(), pos, slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn get(&self, bundle: &FeatureBundle) -> Option<&str> {
        self.slots
            .iter()
            .find(|s| s.bundle == *bundle)
            .and_then(|s| s.form.as_deref())
    }

    /// Realized forms in slot order, absent slots skipped.
    pub fn forms(&self) -> impl Iterator<Item = &str> {
        self.slots.iter().filter_map(|s| s.form.as_deref())
    }

    pub fn absent_count(&self) -> usize {
        self.slots.iter().filter(|s| s.form.is_none()).count()
    }
}
