//! Adjective declension (long and short forms) and adverb comparison.
//!
//! The long-form table is chosen by [`AdjectiveStemType`]; endings are
//! attached through [`attach`], which is where the spelling constraints
//! after velars, hushing consonants and `ц` are enforced.

use crate::error::{Error, Result};
use crate::exceptions::ExceptionTables;
use crate::grammar::{Animacy, Case, Degree, GenderOrPlural};
use crate::paradigm::{Paradigm, Pos};
use crate::word::{attach, char_from_end, cut, is_consonant, is_hushing, is_velar, is_vowel, last_char, vowel_count, CyrillicWord};
use crate::Engine;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjectiveStemType {
    Hard,
    Soft,
    Velar,
    /// `большой`, `чужой`
    SibilantStressed,
    /// `хороший`, `горячий`
    SibilantUnstressed,
    /// `лисий` (`лисьего`) and `мамин` (`маминого`)
    Possessive,
}

/// The 24 long forms of one adjective plus the animate accusatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongForms {
    pub stem_type: AdjectiveStemType,
    /// `GenderOrPlural::ALL` × `Case::ALL`, accusative in the inanimate reading.
    forms: [String; 24],
}

impl LongForms {
    pub fn get(&self, target: GenderOrPlural, case: Case, animacy: Animacy) -> &str {
        let case = match (case, animacy, target) {
            (Case::Accusative, Animacy::Animate, GenderOrPlural::Masculine | GenderOrPlural::Plural) => {
                Case::Genitive
            }
            _ => case,
        };
        &self.forms[index(target, case)]
    }

    fn uniform(word: &str, stem_type: AdjectiveStemType) -> Self {
        LongForms {
            stem_type,
            forms: std::array::from_fn(|_| word.to_string()),
        }
    }
}

fn index(target: GenderOrPlural, case: Case) -> usize {
    let t = GenderOrPlural::ALL.iter().position(|&x| x == target).unwrap_or(0);
    let c = Case::ALL.iter().position(|&x| x == case).unwrap_or(0);
    t * 6 + c
}

/// Long-form endings per stem type, `GenderOrPlural::ALL` × `Case::ALL`,
/// masculine nominative and accusative replaced by the lemma.
const HARD: [&str; 24] = [
    "ый", "ого", "ому", "ый", "ым", "ом", //
    "ая", "ой", "ой", "ую", "ой", "ой", //
    "ое", "ого", "ому", "ое", "ым", "ом", //
    "ые", "ых", "ым", "ые", "ыми", "ых",
];

const SOFT: [&str; 24] = [
    "ий", "его", "ему", "ий", "им", "ем", //
    "яя", "ей", "ей", "юю", "ей", "ей", //
    "ее", "его", "ему", "ее", "им", "ем", //
    "ие", "их", "им", "ие", "ими", "их",
];

/// `-ий` possessives; attached after a soft sign (`лис` + `ь` + `его`).
const POSSESSIVE_IJ: [&str; 24] = [
    "ий", "его", "ему", "ий", "им", "ем", //
    "я", "ей", "ей", "ю", "ей", "ей", //
    "е", "его", "ему", "е", "им", "ем", //
    "и", "их", "им", "и", "ими", "их",
];

/// `-ин`/`-ов` possessives; attached to the whole lemma.
const POSSESSIVE_IN: [&str; 24] = [
    "", "ого", "ому", "", "ым", "ом", //
    "а", "ой", "ой", "у", "ой", "ой", //
    "о", "ого", "ому", "о", "ым", "ом", //
    "ы", "ых", "ым", "ы", "ыми", "ых",
];

/// Classifies a masculine nominative-singular long form.
pub(crate) fn stem_type(t: Option<&ExceptionTables>, lemma: &str) -> Result<(AdjectiveStemType, String)> {
    let n = lemma.chars().count();
    let not_shaped = || Error::NotAdjectiveShaped(lemma.to_string());
    if n < 3 {
        return Err(not_shaped());
    }
    let ending: String = lemma.chars().skip(n - 2).collect();
    let stem = cut(lemma, 2).to_string();
    let before = last_char(&stem).ok_or_else(not_shaped)?;
    if !is_consonant(before) && before != 'ь' {
        if matches!(ending.as_str(), "ин" | "ов" | "ев") {
            return Ok((AdjectiveStemType::Possessive, lemma.to_string()));
        }
        return Err(not_shaped());
    }
    let listed_possessive = t.is_some_and(|t| t.list("possessive-adjectives.txt").matches(lemma));
    let ty = match ending.as_str() {
        "ый" => AdjectiveStemType::Hard,
        "ой" if is_velar(before) => AdjectiveStemType::Velar,
        "ой" if is_hushing(before) => AdjectiveStemType::SibilantStressed,
        "ой" => AdjectiveStemType::Hard,
        "ий" if listed_possessive => AdjectiveStemType::Possessive,
        "ий" if is_velar(before) => AdjectiveStemType::Velar,
        "ий" if is_hushing(before) => AdjectiveStemType::SibilantUnstressed,
        "ий" if before == 'н' || before == 'ь' => AdjectiveStemType::Soft,
        "ий" => AdjectiveStemType::Possessive,
        "ин" | "ов" | "ев" if vowel_count(lemma) >= 2 => AdjectiveStemType::Possessive,
        _ => return Err(not_shaped()),
    };
    Ok((ty, stem))
}

/// Declines a long-form adjective (or any word declined like one:
/// participles, ordinals, substantivized adjectives).
pub(crate) fn long_forms_with(t: Option<&ExceptionTables>, lemma: &str) -> Result<LongForms> {
    let (stem_type, stem) = stem_type(t, lemma)?;
    let (table, base): (&[&str; 24], String) = match stem_type {
        AdjectiveStemType::Hard | AdjectiveStemType::Velar | AdjectiveStemType::SibilantStressed => {
            (&HARD, stem)
        }
        AdjectiveStemType::Soft | AdjectiveStemType::SibilantUnstressed => (&SOFT, stem),
        AdjectiveStemType::Possessive if lemma.ends_with("ий") => {
            let base = if stem.ends_with('ь') { stem } else { format!("{stem}ь") };
            (&POSSESSIVE_IJ, base)
        }
        AdjectiveStemType::Possessive => (&POSSESSIVE_IN, lemma.to_string()),
    };
    let mut forms: [String; 24] = std::array::from_fn(|i| attach(&base, table[i]));
    forms[0] = lemma.to_string();
    forms[3] = lemma.to_string();
    if stem_type == AdjectiveStemType::Possessive && lemma.ends_with("ий") {
        // the soft sign only appears before a vowel ending
        let plain = cut(&base, 1);
        forms[0] = format!("{plain}ий");
        forms[3] = forms[0].clone();
    }
    Ok(LongForms { stem_type, forms })
}

/// Masculine short form of an adjective stem: inserts the fleeting vowel
/// into a final consonant cluster (`красн` → `красен`, `крепк` → `крепок`).
fn short_masculine(stem: &str, soft: bool) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n < 2 {
        return stem.to_string();
    }
    let c2 = chars[n - 1];
    let c1 = chars[n - 2];
    let head: String = chars[..n - 2].iter().collect();
    if soft {
        return format!("{stem}ь");
    }
    if c1 == 'н' && c2 == 'н' {
        // определенный -> определен, ценный -> ценен
        if vowel_count(stem) >= 3 || head.ends_with('е') && vowel_count(stem) >= 2 && head.chars().count() > 3 {
            return format!("{head}н");
        }
        return format!("{head}нен");
    }
    if !is_consonant(c2) {
        return stem.to_string();
    }
    match c2 {
        'н' if c1 == 'й' || c1 == 'ь' => format!("{head}ен"),
        'н' if is_consonant(c1) && !matches!(c1, 'р' | 'л') || matches!(c1, 'л' | 'р') && head.ends_with(is_vowel) => {
            format!("{head}{c1}ен")
        }
        'к' if c1 == 'ь' || c1 == 'й' => format!("{head}ек"),
        'к' if is_hushing(c1) => format!("{head}{c1}ек"),
        'к' if is_consonant(c1) => format!("{head}{c1}ок"),
        'л' if matches!(c1, 'т' | 'п' | 'к') => format!("{head}{c1}ел"),
        _ => stem.to_string(),
    }
}

/// The four short forms (m, f, n, pl) or `None` when the adjective has
/// no short form.
/// Base of a reflexive adjective: `приевшийся` → `приевший`.
fn reflexive_base(lemma: &str) -> Option<&str> {
    let base = lemma.strip_suffix("ся")?;
    (base.ends_with("ий") || base.ends_with("ый")).then_some(base)
}

pub(crate) fn short_forms(t: &ExceptionTables, lemma: &str) -> Result<Option<[String; 4]>> {
    if let Some([m, f, n, pl]) = t.table("irregular-short.tsv").get(lemma) {
        return Ok(Some([m.clone(), f.clone(), n.clone(), pl.clone()]));
    }
    if reflexive_base(lemma).is_some() || t.list("short-form-skip.txt").matches(lemma) {
        return Ok(None);
    }
    let (ty, stem) = stem_type(Some(t), lemma)?;
    let soft = match ty {
        AdjectiveStemType::Possessive => return Ok(None),
        AdjectiveStemType::Soft => true,
        _ => false,
    };
    if lemma.ends_with("ой") && !matches!(ty, AdjectiveStemType::Velar | AdjectiveStemType::SibilantStressed) && vowel_count(lemma) < 2 {
        return Ok(None);
    }
    let masc = short_masculine(&stem, soft);
    let (f, n, pl) = if soft {
        (attach(&stem, "я"), attach(&stem, "е"), attach(&stem, "и"))
    } else {
        let neuter = if is_hushing(last_char(&stem).unwrap_or('т')) && lemma.ends_with("ий") {
            "е"
        } else {
            "о"
        };
        (attach(&stem, "а"), attach(&stem, neuter), attach(&stem, "ы"))
    };
    Ok(Some([masc, f, n, pl]))
}

/// Short forms of a past passive participle: one `н` of `-нн-` is dropped.
pub(crate) fn participle_short_forms(long: &str) -> Option<[String; 4]> {
    let stem = cut(long, 2);
    let base = if stem.ends_with("нн") { cut(stem, 1) } else { stem };
    if base.is_empty() {
        return None;
    }
    Some([
        base.to_string(),
        attach(base, "а"),
        attach(base, "о"),
        attach(base, "ы"),
    ])
}

fn is_indeclinable(t: &ExceptionTables, lemma: &str) -> bool {
    t.list("indeclinable-adjectives.txt").contains(lemma)
}

impl Engine {
    /// Inflects a masculine nominative-singular long-form adjective.
    pub fn inflect_adjective(
        &self,
        lemma: &CyrillicWord,
        target: GenderOrPlural,
        case: Case,
        animacy: Animacy,
    ) -> Result<CyrillicWord> {
        let forms = self.adjective_long_forms(lemma)?;
        Ok(CyrillicWord::from_normalized(forms.get(target, case, animacy).to_string()))
    }

    pub fn adjective_long_forms(&self, lemma: &CyrillicWord) -> Result<LongForms> {
        let t = self.tables();
        if is_indeclinable(t, lemma) {
            return Ok(LongForms::uniform(lemma, AdjectiveStemType::Hard));
        }
        if let Some(row) = t.table("irregular-adjectives.tsv").get(lemma) {
            if row.len() == 24 {
                return Ok(LongForms {
                    stem_type: AdjectiveStemType::Hard,
                    forms: std::array::from_fn(|i| row[i].clone()),
                });
            }
        }
        if let Some(base) = reflexive_base(lemma) {
            let mut forms = long_forms_with(Some(t), base)?;
            for f in forms.forms.iter_mut() {
                f.push_str("ся");
            }
            return Ok(forms);
        }
        long_forms_with(Some(t), lemma)
    }

    /// Short form for the given gender or plural.
    pub fn short_adjective(&self, lemma: &CyrillicWord, target: GenderOrPlural) -> Result<CyrillicWord> {
        let t = self.tables();
        if is_indeclinable(t, lemma) {
            return Err(crate::error::no_form(lemma, "short form"));
        }
        let forms = short_forms(t, lemma)?.ok_or_else(|| crate::error::no_form(lemma, "short form"))?;
        let i = GenderOrPlural::ALL.iter().position(|&x| x == target).unwrap_or(0);
        Ok(CyrillicWord::from_normalized(forms[i].clone()))
    }

    /// The 28-slot adjective paradigm: 24 long forms then 4 short forms.
    pub fn adjective_paradigm(&self, lemma: &CyrillicWord) -> Result<Paradigm> {
        let t = self.tables();
        let mut long = self.adjective_long_forms(lemma)?.forms;
        let mut short = if is_indeclinable(t, lemma) {
            None
        } else {
            short_forms(t, lemma)?
        };
        // every slot reads a distinct cell, so the forms can be moved out
        Paradigm::build(lemma.as_str(), Pos::Adjective, |b| {
            let target = b.agreement().expect("adjective slot has agreement");
            Ok(match b.case {
                Some(case) => Some(std::mem::take(&mut long[index(target, case)])),
                None => short.as_mut().map(|s| {
                    let i = GenderOrPlural::ALL.iter().position(|&x| x == target).unwrap_or(0);
                    std::mem::take(&mut s[i])
                }),
            })
        })
    }

    /// Comparative and analytic superlative of an adverb.
    /// Either may be analytic (`более` + lemma), hence plain strings.
    pub fn adverb_degrees(&self, lemma: &CyrillicWord) -> Result<(String, String)> {
        let comparative = comparative(self.tables(), lemma);
        let superlative = format!("{comparative} всего");
        Ok((comparative, superlative))
    }

    pub fn adverb_paradigm(&self, lemma: &CyrillicWord) -> Result<Paradigm> {
        let (comp, sup) = self.adverb_degrees(lemma)?;
        Paradigm::build(lemma.as_str(), Pos::Adverb, |b| {
            Ok(match b.degree {
                Some(Degree::Comparative) => Some(comp.clone()),
                Some(Degree::Superlative) => Some(sup.clone()),
                _ => None,
            })
        })
    }
}

/// Synthetic comparative, or `более` + lemma when the adverb has no
/// `-о`/`-е` shape to build one from.
fn comparative(t: &ExceptionTables, lemma: &str) -> String {
    if let Some((prefix, row)) = t.table("suppletive-adverbs.txt").lookup(lemma) {
        return format!("{prefix}{}", row[0]);
    }
    let last = last_char(lemma);
    if !matches!(last, Some('о' | 'е')) || vowel_count(lemma) < 2 {
        return format!("более {lemma}");
    }
    let stem = cut(lemma, 1);
    let c1 = last_char(stem).unwrap_or('т');
    let c0 = char_from_end(stem, 1);
    let head = cut(stem, 1);
    let mutated = match (c0, c1) {
        (Some('с'), 'т') => Some(format!("{}щ", cut(stem, 2))),
        (Some('с'), 'к') => Some(format!("{}щ", cut(stem, 2))),
        (Some(p), 'к') if is_consonant(p) || p == 'й' => Some(format!("{head}ч")),
        (_, 'г') => Some(format!("{head}ж")),
        (_, 'х') => Some(format!("{head}ш")),
        _ => None,
    };
    match mutated {
        Some(m) => format!("{m}е"),
        None => format!("{stem}ее"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::GenderOrPlural as G;
    use crate::word::normalize;

    fn adj(lemma: &str, g: G, c: Case, a: Animacy) -> String {
        Engine::builtin()
            .inflect_adjective(&normalize(lemma).unwrap(), g, c, a)
            .unwrap()
            .into_string()
    }

    #[test]
    fn red_and_blue() {
        assert_eq!(adj("красный", G::Feminine, Case::Nominative, Animacy::Inanimate), "красная");
        assert_eq!(adj("красный", G::Masculine, Case::Nominative, Animacy::Inanimate), "красный");
        assert_eq!(adj("синий", G::Plural, Case::Genitive, Animacy::Inanimate), "синих");
        assert_eq!(adj("синий", G::Feminine, Case::Accusative, Animacy::Inanimate), "синюю");
    }

    #[test]
    fn stem_types() {
        let cases = [
            ("хороший", G::Feminine, Case::Nominative, "хорошая"),
            ("хороший", G::Masculine, Case::Genitive, "хорошего"),
            ("большой", G::Masculine, Case::Genitive, "большого"),
            ("большой", G::Plural, Case::Nominative, "большие"),
            ("русский", G::Plural, Case::Instrumental, "русскими"),
            ("дорогой", G::Masculine, Case::Instrumental, "дорогим"),
            ("лисий", G::Masculine, Case::Genitive, "лисьего"),
            ("лисий", G::Feminine, Case::Nominative, "лисья"),
            ("мамин", G::Masculine, Case::Genitive, "маминого"),
            ("мамин", G::Feminine, Case::Accusative, "мамину"),
            ("горячий", G::Neuter, Case::Nominative, "горячее"),
        ];
        for (lemma, g, c, expected) in cases {
            assert_eq!(adj(lemma, g, c, Animacy::Inanimate), expected, "{lemma}");
        }
    }

    #[test]
    fn animate_accusative() {
        assert_eq!(adj("красный", G::Masculine, Case::Accusative, Animacy::Animate), "красного");
        assert_eq!(adj("красный", G::Plural, Case::Accusative, Animacy::Animate), "красных");
        assert_eq!(adj("красный", G::Feminine, Case::Accusative, Animacy::Animate), "красную");
    }

    #[test]
    fn paradigm_and_short_forms() {
        let e = Engine::builtin();
        let p = e.adjective_paradigm(&normalize("красный").unwrap()).unwrap();
        assert_eq!(p.len(), 28);
        let short: Vec<_> = p.slots[24..].iter().map(|s| s.form.clone().unwrap()).collect();
        assert_eq!(short, ["красен", "красна", "красно", "красны"]);
        for (lemma, m) in [("крепкий", "крепок"), ("хороший", "хорош"), ("спокойный", "спокоен"), ("светлый", "светел")] {
            assert_eq!(
                e.short_adjective(&normalize(lemma).unwrap(), G::Masculine).unwrap(),
                m
            );
        }
    }

    #[test]
    fn indeclinable_beige() {
        let p = Engine::builtin().adjective_paradigm(&normalize("беж").unwrap()).unwrap();
        assert_eq!(p.len(), 28);
        assert!(p.slots[..24].iter().all(|s| s.form.as_deref() == Some("беж")));
    }

    #[test]
    fn not_adjective_shaped() {
        let err = Engine::builtin()
            .inflect_adjective(&normalize("стол").unwrap(), G::Masculine, Case::Genitive, Animacy::Inanimate)
            .unwrap_err();
        assert_eq!(err.code(), "not-adjective-shaped");
    }

    #[test]
    fn adverbs() {
        let e = Engine::builtin();
        let degrees = |w: &str| e.adverb_degrees(&normalize(w).unwrap()).unwrap();
        assert_eq!(degrees("быстро").0, "быстрее");
        assert_eq!(degrees("быстро").1, "быстрее всего");
        assert_eq!(degrees("хорошо").0, "лучше");
        assert_eq!(degrees("громко").0, "громче");
        assert_eq!(degrees("тихо").0, "тише");
        assert_eq!(degrees("просто").0, "проще");
        assert_eq!(degrees("дорого").0, "дороже");
        assert_eq!(e.adverb_paradigm(&normalize("быстро").unwrap()).unwrap().len(), 2);
        assert_eq!(degrees("абруццки").0, "более абруццки");
    }

    #[test]
    fn reflexive_adjectives() {
        let e = Engine::builtin();
        let w = normalize("приевшийся").unwrap();
        let f = |g, c| e.inflect_adjective(&w, g, c, Animacy::Inanimate).unwrap();
        assert_eq!(f(GenderOrPlural::Masculine, Case::Genitive), "приевшегося");
        assert_eq!(f(GenderOrPlural::Feminine, Case::Nominative), "приевшаяся");
        assert_eq!(f(GenderOrPlural::Plural, Case::Instrumental), "приевшимися");
        let p = e.adjective_paradigm(&w).unwrap();
        assert_eq!(p.len(), 28);
        assert_eq!(p.slots.iter().filter(|s| s.form.is_none()).count(), 4);
    }
}
