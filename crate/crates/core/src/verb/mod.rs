//! Verb conjugation, imperatives, gerunds and participles.
//!
//! Every function works on the non-reflexive base: `-ся`/`-сь` is stripped
//! from the infinitive, the form is built, and the particle is re-attached
//! (`сь` after a vowel, `ся` otherwise; participles always take `ся`).
//!
//! Future tense is synthetic for perfective and biaspectual verbs and
//! analytic (`буду решать`) for imperfectives, so the future slots of an
//! imperfective verb hold two-word strings.

pub(crate) mod aspect;
mod stems;

pub use stems::ConjugationClass;

use crate::adjective::{long_forms_with, participle_short_forms, LongForms};
use crate::error::{no_form, Error, Result};
use crate::grammar::*;
use crate::paradigm::{Paradigm, Pos};
use crate::word::{cut, is_vowel, last_char, CyrillicWord};
use crate::Engine;
use stems::Forms;

const ANALYTIC_FUTURE: [&str; 6] = ["буду", "будешь", "будет", "будем", "будете", "будут"];

/// Which construction the perfective gerund uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicForm {
    /// Vowel-final past stem: `реша` → `решав`.
    Vowel,
    /// Consonant-final stem: `принес` → `принесши`.
    Consonant,
    /// Listed in the irregular-verb table.
    Exception,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbProfile {
    pub nf: CyrillicWord,
    pub perf: Aspect,
    pub ret: bool,
    pub class: ConjugationClass,
    pub bf: String,
    pub bf_kind: BasicForm,
}

/// Splits `учиться` into (`учить`, true).
pub(crate) fn split_reflexive(nf: &str) -> (&str, bool) {
    match nf.strip_suffix("ся").or_else(|| nf.strip_suffix("сь")) {
        Some(base) if is_infinitive(base) => (base, true),
        _ => (nf, false),
    }
}

fn is_infinitive(base: &str) -> bool {
    base.chars().count() > 2 && (base.ends_with("ть") || base.ends_with("ти") || base.ends_with("чь"))
}

fn reflexive(form: &str, ret: bool) -> String {
    if !ret {
        form.to_string()
    } else if last_char(form).is_some_and(is_vowel) {
        format!("{form}сь")
    } else {
        format!("{form}ся")
    }
}

fn person_index(person: Person, number: Number) -> usize {
    let p = Person::ALL.iter().position(|&x| x == person).unwrap_or(0);
    match number {
        Number::Singular => p,
        Number::Plural => 3 + p,
    }
}

/// Everything computed for one verb; the public functions read from it.
struct Verb {
    nf: String,
    base: String,
    ret: bool,
    aspect: Aspect,
    forms: Forms,
    exception_gerund: bool,
}

impl Verb {
    fn new(e: &Engine, nf: &str) -> Result<Self> {
        let (base, ret) = split_reflexive(nf);
        if !is_infinitive(base) {
            return Err(Error::NotInfinitive(nf.to_string()));
        }
        let t = e.tables();
        let forms = stems::forms(t, base);
        let exception_gerund = t
            .table("irregular-verbs.tsv")
            .lookup_with(base, stems::is_prefix_chain)
            .is_some_and(|(_, row)| row.get(12).is_some_and(|c| c != "*" && !c.is_empty()));
        Ok(Verb {
            nf: nf.to_string(),
            base: base.to_string(),
            ret,
            aspect: aspect::perfectness(t, base),
            forms,
            exception_gerund,
        })
    }

    fn finite(&self, bundle: &FeatureBundle) -> Result<Option<String>> {
        let invalid = || Error::InvalidSlot {
            pos: "verb".to_string(),
            slot: bundle.to_string(),
        };
        let Some(tense) = bundle.tense else {
            return if bundle.is_empty() { Ok(Some(self.nf.clone())) } else { Err(invalid()) };
        };
        if bundle.case.is_some() || bundle.participle.is_some() || bundle.degree.is_some() {
            return Err(invalid());
        }
        match tense {
            Tense::Present | Tense::Future => {
                let (Some(person), Some(number)) = (bundle.person, bundle.number) else {
                    return Err(invalid());
                };
                if bundle.gender.is_some() {
                    return Err(invalid());
                }
                let i = person_index(person, number);
                let synthetic = reflexive(&self.forms.nonpast[i], self.ret);
                if self.base == "быть" {
                    // future буду; the present survives only as есть/суть
                    return Ok(match (tense, i) {
                        (Tense::Future, _) => Some(synthetic),
                        (_, 2) => Some("есть".to_string()),
                        (_, 5) => Some("суть".to_string()),
                        _ => None,
                    });
                }
                Ok(match (tense, self.aspect) {
                    (Tense::Present, Aspect::Perfective) => None,
                    (Tense::Future, Aspect::Imperfective) => Some(format!("{} {}", ANALYTIC_FUTURE[i], self.nf)),
                    _ => Some(synthetic),
                })
            }
            Tense::Past => {
                let target = bundle.agreement().ok_or_else(invalid)?;
                let i = GenderOrPlural::ALL.iter().position(|&x| x == target).unwrap_or(0);
                Ok(Some(reflexive(&self.forms.past[i], self.ret)))
            }
        }
    }

    fn imperative_sg(&self, e: &Engine) -> Option<String> {
        if e.tables().list("no-imperative.txt").matches(&self.base) {
            return None;
        }
        self.forms.imperative.as_deref().map(|f| reflexive(f, self.ret))
    }

    fn imperative(&self, e: &Engine, number: Number) -> Option<String> {
        let sg = self.forms.imperative.as_deref()?;
        self.imperative_sg(e)?;
        Some(match number {
            Number::Singular => reflexive(sg, self.ret),
            Number::Plural => reflexive(&format!("{sg}те"), self.ret),
        })
    }

    fn basic_form(&self) -> (String, BasicForm) {
        if self.exception_gerund {
            let bf = self.forms.gerund_perf.clone().unwrap_or_default();
            (bf, BasicForm::Exception)
        } else if self.forms.vowel_basic_form {
            (cut(&self.base, 2).to_string(), BasicForm::Vowel)
        } else {
            (self.forms.basic_form.clone(), BasicForm::Consonant)
        }
    }

    fn perfective_gerund(&self) -> Option<String> {
        let (bf, kind) = self.basic_form();
        match kind {
            BasicForm::Exception => self.forms.gerund_perf.as_deref().map(|g| {
                if !self.ret {
                    g.to_string()
                } else if g.ends_with('в') {
                    format!("{g}шись")
                } else {
                    reflexive(g, true)
                }
            }),
            BasicForm::Vowel if self.ret => Some(format!("{bf}вшись")),
            BasicForm::Vowel => Some(format!("{bf}в")),
            BasicForm::Consonant if self.ret => Some(format!("{bf}шись")),
            BasicForm::Consonant => Some(format!("{bf}ши")),
        }
    }

    fn imperfective_gerund(&self, e: &Engine) -> Option<String> {
        if self.aspect == Aspect::Perfective || e.tables().list("no-gerund.txt").matches(&self.base) {
            return None;
        }
        self.forms.gerund_impf.as_deref().map(|g| reflexive(g, self.ret))
    }

    fn participle_lemma(&self, kind: ParticipleKind) -> Option<String> {
        let with_particle = |s: String| if self.ret { format!("{s}ся") } else { s };
        match kind {
            ParticipleKind::PresentActive => {
                if self.aspect == Aspect::Perfective {
                    return None;
                }
                let stem = cut(&self.forms.nonpast[5], 1);
                Some(with_particle(format!("{stem}щий")))
            }
            ParticipleKind::PastActive => self.forms.past_active.clone().map(with_particle),
            ParticipleKind::PastPassive => {
                if self.ret {
                    None
                } else {
                    self.forms.past_passive.clone()
                }
            }
        }
    }

    fn participle_forms(&self, e: &Engine, kind: ParticipleKind) -> Result<Option<ParticipleForms>> {
        let Some(lemma) = self.participle_lemma(kind) else {
            return Ok(None);
        };
        let bare = if self.ret { cut(&lemma, 2) } else { lemma.as_str() };
        let long = long_forms_with(Some(e.tables()), bare)?;
        let short = match kind {
            ParticipleKind::PastPassive => participle_short_forms(bare),
            _ => None,
        };
        Ok(Some(ParticipleForms { long, short, ret: self.ret }))
    }
}

struct ParticipleForms {
    long: LongForms,
    short: Option<[String; 4]>,
    ret: bool,
}

impl ParticipleForms {
    fn get(&self, target: GenderOrPlural, case: Option<Case>, animacy: Animacy) -> Option<String> {
        let form = match case {
            Some(case) => self.long.get(target, case, animacy).to_string(),
            None => {
                let i = GenderOrPlural::ALL.iter().position(|&x| x == target).unwrap_or(0);
                self.short.as_ref()?[i].clone()
            }
        };
        Some(if self.ret { format!("{form}ся") } else { form })
    }
}

fn word(s: String) -> CyrillicWord {
    CyrillicWord::from_normalized(s)
}

impl Engine {
    /// Aspect of an infinitive, reflexive or not.
    pub fn get_perfectness(&self, nf: &CyrillicWord) -> Aspect {
        let (base, _) = split_reflexive(nf);
        aspect::perfectness(self.tables(), base)
    }

    pub fn verb_profile(&self, nf: &CyrillicWord) -> Result<VerbProfile> {
        let verb = Verb::new(self, nf)?;
        let (bf, bf_kind) = verb.basic_form();
        Ok(VerbProfile {
            nf: nf.clone(),
            perf: verb.aspect,
            ret: verb.ret,
            class: verb.forms.class,
            bf,
            bf_kind,
        })
    }

    /// One finite form. The empty bundle selects the infinitive; past
    /// slots ignore person. Imperfective future forms are two words.
    pub fn conjugate(&self, nf: &CyrillicWord, bundle: &FeatureBundle) -> Result<String> {
        let verb = Verb::new(self, nf)?;
        verb.finite(bundle)?
            .ok_or_else(|| no_form(nf, &format!("{bundle}")))
    }

    /// The 24-slot conjugation paradigm.
    pub fn verb_paradigm(&self, nf: &CyrillicWord) -> Result<Paradigm> {
        let verb = Verb::new(self, nf)?;
        Paradigm::build(nf.as_str(), Pos::Verb, |b| verb.finite(b))
    }

    pub fn imperative(&self, nf: &CyrillicWord, number: Number) -> Result<CyrillicWord> {
        let verb = Verb::new(self, nf)?;
        verb.imperative(self, number)
            .map(word)
            .ok_or_else(|| no_form(nf, "imperative"))
    }

    pub fn imperative_paradigm(&self, nf: &CyrillicWord) -> Result<Paradigm> {
        let verb = Verb::new(self, nf)?;
        Paradigm::build(nf.as_str(), Pos::Imperative, |b| {
            Ok(b.number.and_then(|n| verb.imperative(self, n)))
        })
    }

    /// Perfective gerund built from one of three basic forms.
    pub fn perfective_gerund(&self, nf: &CyrillicWord) -> Result<CyrillicWord> {
        let verb = Verb::new(self, nf)?;
        verb.perfective_gerund()
            .map(word)
            .ok_or_else(|| no_form(nf, "perfective gerund"))
    }

    pub fn imperfective_gerund(&self, nf: &CyrillicWord) -> Result<CyrillicWord> {
        let verb = Verb::new(self, nf)?;
        verb.imperfective_gerund(self)
            .map(word)
            .ok_or_else(|| no_form(nf, "imperfective gerund"))
    }

    pub fn gerund_paradigm(&self, nf: &CyrillicWord) -> Result<Paradigm> {
        let verb = Verb::new(self, nf)?;
        Paradigm::build(nf.as_str(), Pos::Gerund, |b| {
            Ok(match b.aspect {
                Some(Aspect::Perfective) => verb.perfective_gerund(),
                _ => verb.imperfective_gerund(self),
            })
        })
    }

    /// One participle form. `case: None` selects the short form, which
    /// only passive participles have.
    pub fn participle(
        &self,
        nf: &CyrillicWord,
        kind: ParticipleKind,
        target: GenderOrPlural,
        case: Option<Case>,
        animacy: Animacy,
    ) -> Result<CyrillicWord> {
        let verb = Verb::new(self, nf)?;
        let what = format!("{} participle", kind.tag());
        verb.participle_forms(self, kind)?
            .and_then(|p| p.get(target, case, animacy))
            .map(word)
            .ok_or_else(|| no_form(nf, &what))
    }

    /// 28 slots: 24 long forms then 4 short forms (absent for active kinds).
    pub fn participle_paradigm(&self, nf: &CyrillicWord, kind: ParticipleKind) -> Result<Paradigm> {
        let verb = Verb::new(self, nf)?;
        let forms = verb.participle_forms(self, kind)?;
        Paradigm::build(nf.as_str(), Pos::Participle(kind), |b| {
            let target = b.agreement().expect("participle slot has agreement");
            Ok(forms.as_ref().and_then(|p| p.get(target, b.case, Animacy::Inanimate)))
        })
    }
}
