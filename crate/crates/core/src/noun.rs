//! Noun declension by case and number.
//!
//! Rules run in a fixed order:
//!
//! 1. irregular table (`irregular-nouns.tsv`, prefixed derivatives included);
//! 2. hyphenated compounds: only the last segment inflects;
//! 3. indeclinables (`indeclinable.txt` plus foreign-shape endings);
//! 4. pluralia tantum (`pluralia.txt` plus plural-shape lemmas);
//! 5. substantivized adjectives (`столовая`, `рабочий`);
//! 6. stem-class dispatch. Within a class the oblique stem is computed
//!    first (fleeting vowels: `день` → `дн-`), then endings are attached
//!    through the junction spelling filter, then the zero genitive plural
//!    gets its inserted vowel (`ручка` → `ручек`).
//!
//! Animacy is inferred, never passed in: suffix and list heuristics decide,
//! inanimate being the default. It only affects the accusative.

use crate::adjective;
use crate::error::Result;
use crate::exceptions::ExceptionTables;
use crate::grammar::{Animacy, Case, Gender, Number};
use crate::paradigm::{Paradigm, Pos};
use crate::word::{
    attach, char_from_end, cut, is_consonant, is_hushing, is_velar, is_vowel, last_char,
    vowel_count, CyrillicWord,
};
use crate::Engine;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Declension {
    /// `-а/-я` nouns of any gender.
    First,
    /// Masculine consonant stems and neuters in `-о/-е`.
    Second,
    /// Feminine soft-sign stems.
    Third,
    Indeclinable,
    Irregular,
    /// Nouns declined like adjectives.
    Adjectival,
    PluraleTantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StemType {
    Hard,
    Soft,
    Velar,
    Sibilant,
    /// `-ий`
    Ij,
    /// `-ие`
    Ie,
    /// `-ия`
    Iya,
    /// `-мя`
    Mya,
    None,
}

/// Dispatch result for one lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NounClass {
    pub declension: Declension,
    pub stem: StemType,
    pub gender: Gender,
    pub animacy: Animacy,
}

/// All twelve forms, singular cases then plural cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounForms {
    pub class: NounClass,
    pub forms: [String; 12],
}

impl NounForms {
    pub fn get(&self, case: Case, number: Number) -> &str {
        &self.forms[slot_index(case, number)]
    }
}

fn slot_index(case: Case, number: Number) -> usize {
    let c = Case::ALL.iter().position(|&x| x == case).unwrap_or(0);
    match number {
        Number::Singular => c,
        Number::Plural => 6 + c,
    }
}

impl Engine {
    /// Inflects a noun lemma for case and number.
    pub fn inflect_noun(&self, lemma: &CyrillicWord, case: Case, number: Number) -> Result<CyrillicWord> {
        let forms = self.decline_noun(lemma);
        Ok(CyrillicWord::from_normalized(forms.get(case, number).to_string()))
    }

    /// The 12-slot noun paradigm.
    pub fn noun_paradigm(&self, lemma: &CyrillicWord) -> Result<Paradigm> {
        let mut forms = self.decline_noun(lemma).forms;
        Paradigm::build(lemma.as_str(), Pos::Noun, |b| {
            let case = b.case.expect("noun slot has case");
            let number = b.number.expect("noun slot has number");
            Ok(Some(std::mem::take(&mut forms[slot_index(case, number)])))
        })
    }

    /// Gender and animacy the engine infers for a noun.
    pub fn noun_class(&self, lemma: &CyrillicWord) -> NounClass {
        self.decline_noun(lemma).class
    }

    pub fn decline_noun(&self, lemma: &CyrillicWord) -> NounForms {
        decline(self.tables(), lemma.as_str())
    }
}

pub(crate) fn decline(t: &ExceptionTables, lemma: &str) -> NounForms {
    if let Some(forms) = irregular(t, lemma) {
        return forms;
    }
    if let Some((head, tail)) = lemma.rsplit_once('-') {
        if !tail.is_empty() && !t.list("indeclinable.txt").contains(lemma) {
            let mut inner = decline(t, tail);
            for f in inner.forms.iter_mut() {
                *f = format!("{head}-{f}");
            }
            return inner;
        }
    }
    let animacy = infer_animacy(t, lemma);
    if is_indeclinable(t, lemma) {
        let class = NounClass {
            declension: Declension::Indeclinable,
            stem: StemType::None,
            gender: indeclinable_gender(lemma),
            animacy,
        };
        return NounForms {
            class,
            forms: std::array::from_fn(|_| lemma.to_string()),
        };
    }
    if is_plurale_tantum(t, lemma) {
        return plurale_tantum(lemma, animacy);
    }
    if let Some(forms) = adjectival(t, lemma, animacy) {
        return forms;
    }
    regular(t, lemma, animacy)
}

fn irregular(t: &ExceptionTables, lemma: &str) -> Option<NounForms> {
    let (prefix, row) = t.table("irregular-nouns.tsv").lookup(lemma)?;
    // columns: gender, animacy, 6 singular forms, 6 plural forms
    if row.len() < 14 {
        return None;
    }
    let gender = row[0].parse().unwrap_or(Gender::Masculine);
    let animacy = row[1].parse().unwrap_or(Animacy::Inanimate);
    let forms = std::array::from_fn(|i| format!("{prefix}{}", row[2 + i]));
    Some(NounForms {
        class: NounClass {
            declension: Declension::Irregular,
            stem: StemType::None,
            gender,
            animacy,
        },
        forms,
    })
}

fn is_indeclinable(t: &ExceptionTables, lemma: &str) -> bool {
    if t.list("indeclinable.txt").matches(lemma) {
        return true;
    }
    let last = match last_char(lemma) {
        Some(c) => c,
        None => return true,
    };
    let prev = char_from_end(lemma, 1);
    match last {
        'у' | 'ю' | 'э' => true,
        'и' => !is_plural_shape(lemma),
        // радио, трио, какао
        'о' => prev.is_some_and(is_vowel),
        'е' => {
            // native neuters: -ие, -ье, -це, -ще, -же, -че, -ле, -ре
            !matches!(prev, Some('и' | 'ь' | 'ц' | 'щ' | 'ж' | 'ч' | 'ш' | 'л' | 'р' | 'ъ'))
                && !lemma.ends_with("ое")
                && !lemma.ends_with("ее")
        }
        _ => false,
    }
}

fn indeclinable_gender(lemma: &str) -> Gender {
    match last_char(lemma) {
        Some('о' | 'е' | 'и' | 'у' | 'ю' | 'э') => Gender::Neuter,
        Some('а' | 'я') => Gender::Feminine,
        _ => Gender::Masculine,
    }
}

/// Nominative-plural look: `-ы`, or `-и` after a velar or hushing consonant.
fn is_plural_shape(lemma: &str) -> bool {
    match (last_char(lemma), char_from_end(lemma, 1)) {
        (Some('ы'), _) => true,
        (Some('и'), Some(p)) => is_velar(p) || is_hushing(p),
        _ => false,
    }
}

fn is_plurale_tantum(t: &ExceptionTables, lemma: &str) -> bool {
    t.list("pluralia.txt").matches(lemma) || is_plural_shape(lemma)
}

fn plurale_tantum(lemma: &str, animacy: Animacy) -> NounForms {
    let last = last_char(lemma).unwrap_or('ы');
    let stem = cut(lemma, 1);
    let soft = last == 'и' && !stem.chars().next_back().is_some_and(|c| is_velar(c) || is_hushing(c));
    let gen = match last {
        'а' | 'я' => {
            if last == 'я' {
                format!("{stem}ь")
            } else {
                stem.to_string()
            }
        }
        'и' if soft || stem.chars().next_back().is_some_and(is_hushing) => attach(stem, "ей"),
        'и' => insert_fleeting(stem, false),
        _ if stem.ends_with('ц') => stem.to_string(),
        _ => attach(stem, "ов"),
    };
    let (dat, ins, loc) = if soft || last == 'я' {
        ("ям", "ями", "ях")
    } else {
        ("ам", "ами", "ах")
    };
    let acc = match animacy {
        Animacy::Animate => gen.clone(),
        Animacy::Inanimate => lemma.to_string(),
    };
    let plural = [
        lemma.to_string(),
        gen,
        attach(stem, dat),
        acc,
        attach(stem, ins),
        attach(stem, loc),
    ];
    NounForms {
        class: NounClass {
            declension: Declension::PluraleTantum,
            stem: if soft { StemType::Soft } else { StemType::Hard },
            gender: Gender::Masculine,
            animacy,
        },
        forms: std::array::from_fn(|i| plural[i % 6].clone()),
    }
}

fn adjectival(t: &ExceptionTables, lemma: &str, animacy: Animacy) -> Option<NounForms> {
    let n = lemma.chars().count();
    if n < 4 {
        return None;
    }
    let ending: String = lemma.chars().skip(n - 2).collect();
    let before = char_from_end(lemma, 2)?;
    let syllables = vowel_count(lemma);
    let gender = match ending.as_str() {
        "ый" => Gender::Masculine,
        "ий" if is_hushing(before) || is_velar(before) => Gender::Masculine,
        "ой" if syllables >= 3 && t.list("animate.txt").contains(lemma) => Gender::Masculine,
        "ая" | "яя" if syllables >= 3 && is_consonant(before) => Gender::Feminine,
        "ое" | "ее" if is_consonant(before) => Gender::Neuter,
        _ => return None,
    };
    // the adjective decliner wants the masculine lemma
    let masculine = match ending.as_str() {
        "ая" | "ое" => attach(cut(lemma, 2), "ый"),
        "яя" | "ее" => format!("{}ий", cut(lemma, 2)),
        _ => lemma.to_string(),
    };
    let forms = adjective::long_forms_with(Some(t), &masculine).ok()?;
    let target = crate::grammar::GenderOrPlural::from_parts(gender, Number::Singular);
    let sg: Vec<String> = Case::ALL
        .iter()
        .map(|&c| forms.get(target, c, animacy).to_string())
        .collect();
    let pl: Vec<String> = Case::ALL
        .iter()
        .map(|&c| {
            forms
                .get(crate::grammar::GenderOrPlural::Plural, c, animacy)
                .to_string()
        })
        .collect();
    Some(NounForms {
        class: NounClass {
            declension: Declension::Adjectival,
            stem: StemType::Hard,
            gender,
            animacy,
        },
        forms: std::array::from_fn(|i| if i < 6 { sg[i].clone() } else { pl[i - 6].clone() }),
    })
}

/// Builds the 12 forms from nominative singular, the singular oblique
/// stem and per-class ending tables.
struct Builder<'a> {
    lemma: &'a str,
    stem: String,
    animacy: Animacy,
}

impl Builder<'_> {
    fn at(&self, ending: &str) -> String {
        attach(&self.stem, ending)
    }
}

fn regular(t: &ExceptionTables, lemma: &str, animacy: Animacy) -> NounForms {
    let last = last_char(lemma).unwrap_or('а');
    let before = char_from_end(lemma, 1);
    let b = Builder {
        lemma,
        stem: cut(lemma, 1).to_string(),
        animacy,
    };
    match last {
        'а' | 'я' if lemma.ends_with("мя") && vowel_count(lemma) >= 2 => mya(b),
        'я' if before == Some('и') => iya(b),
        'а' | 'я' => first(t, b),
        'о' => neuter(b),
        'е' if before == Some('и') => ie(b),
        'е' => neuter(b),
        'ь' => soft_sign(t, b),
        'й' if before == Some('и') => ij(b),
        _ => masculine(t, b),
    }
}

fn forms_from(class: NounClass, sg: [String; 6], pl: [String; 6]) -> NounForms {
    let [a, b, c, d, e, f] = sg;
    let [g, h, i, j, k, l] = pl;
    NounForms {
        class,
        forms: [a, b, c, d, e, f, g, h, i, j, k, l],
    }
}

fn plural_acc(b: &Builder<'_>, nom: &str, gen: &str) -> String {
    match b.animacy {
        Animacy::Animate => gen.to_string(),
        Animacy::Inanimate => nom.to_string(),
    }
}

fn first(t: &ExceptionTables, b: Builder<'_>) -> NounForms {
    let lemma = b.lemma;
    let soft = lemma.ends_with('я');
    let stem = b.stem.as_str();
    let before = last_char(stem);
    let gender = if t.list("masculine-soft.txt").contains(lemma) {
        Gender::Masculine
    } else {
        Gender::Feminine
    };
    let class = NounClass {
        declension: Declension::First,
        stem: match before {
            _ if soft => StemType::Soft,
            Some(c) if is_velar(c) => StemType::Velar,
            Some(c) if is_hushing(c) || c == 'ц' => StemType::Sibilant,
            _ => StemType::Hard,
        },
        gender,
        animacy: b.animacy,
    };
    let vowel_stem = before.is_some_and(|c| is_vowel(c) || c == 'ь');
    let sg;
    let mut pl;
    if soft {
        sg = [
            lemma.to_string(),
            b.at("и"),
            b.at("е"),
            b.at("ю"),
            b.at("ей"),
            b.at("е"),
        ];
        let gen = if vowel_stem {
            // статья -> статей, идея -> идей
            if before == Some('ь') {
                format!("{}ей", cut(stem, 1))
            } else {
                format!("{stem}й")
            }
        } else {
            gen_pl_zero(stem, true)
        };
        pl = [b.at("и"), gen, b.at("ям"), String::new(), b.at("ями"), b.at("ях")];
    } else {
        sg = [
            lemma.to_string(),
            b.at("ы"),
            b.at("е"),
            b.at("у"),
            b.at(if before.is_some_and(|c| is_hushing(c) || c == 'ц') {
                "ей"
            } else {
                "ой"
            }),
            b.at("е"),
        ];
        let gen = gen_pl_zero(stem, false);
        pl = [b.at("ы"), gen, b.at("ам"), String::new(), b.at("ами"), b.at("ах")];
    }
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn iya(b: Builder<'_>) -> NounForms {
    let stem = cut(b.lemma, 2);
    let class = NounClass {
        declension: Declension::First,
        stem: StemType::Iya,
        gender: Gender::Feminine,
        animacy: b.animacy,
    };
    let at = |e: &str| format!("{stem}{e}");
    let sg = [b.lemma.to_string(), at("ии"), at("ии"), at("ию"), at("ией"), at("ии")];
    let mut pl = [at("ии"), at("ий"), at("иям"), String::new(), at("иями"), at("иях")];
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn mya(b: Builder<'_>) -> NounForms {
    let stem = cut(b.lemma, 1);
    let at = |e: &str| format!("{stem}{e}");
    let class = NounClass {
        declension: Declension::Irregular,
        stem: StemType::Mya,
        gender: Gender::Neuter,
        animacy: b.animacy,
    };
    let sg = [
        b.lemma.to_string(),
        at("ени"),
        at("ени"),
        b.lemma.to_string(),
        at("енем"),
        at("ени"),
    ];
    let mut pl = [at("ена"), at("ен"), at("енам"), String::new(), at("енами"), at("енах")];
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn neuter(b: Builder<'_>) -> NounForms {
    let lemma = b.lemma;
    let stem = b.stem.as_str();
    let before = last_char(stem);
    let hard = lemma.ends_with('о') || before.is_some_and(|c| is_hushing(c) || c == 'ц');
    let class = NounClass {
        declension: Declension::Second,
        stem: if hard { StemType::Hard } else { StemType::Soft },
        gender: Gender::Neuter,
        animacy: b.animacy,
    };
    let sg;
    let mut pl;
    if before == Some('ь') {
        // платье, ущелье, ружье
        let base = cut(stem, 1);
        sg = [
            lemma.to_string(),
            b.at("я"),
            b.at("ю"),
            lemma.to_string(),
            b.at("ем"),
            b.at("е"),
        ];
        pl = [b.at("я"), format!("{base}ий"), b.at("ям"), String::new(), b.at("ями"), b.at("ях")];
    } else if hard {
        let e = if lemma.ends_with('е') { "ем" } else { "ом" };
        sg = [
            lemma.to_string(),
            b.at("а"),
            b.at("у"),
            lemma.to_string(),
            b.at(e),
            b.at("е"),
        ];
        let nom_pl = if before.is_some_and(is_velar) && lemma.ends_with("ко") {
            // яблоко -> яблоки, облако is listed
            b.at("и")
        } else {
            b.at("а")
        };
        pl = [nom_pl, gen_pl_zero(stem, false), b.at("ам"), String::new(), b.at("ами"), b.at("ах")];
    } else {
        sg = [
            lemma.to_string(),
            b.at("я"),
            b.at("ю"),
            lemma.to_string(),
            b.at("ем"),
            b.at("е"),
        ];
        pl = [b.at("я"), b.at("ей"), b.at("ям"), String::new(), b.at("ями"), b.at("ях")];
    }
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn ie(b: Builder<'_>) -> NounForms {
    let stem = cut(b.lemma, 2);
    let at = |e: &str| format!("{stem}{e}");
    let class = NounClass {
        declension: Declension::Second,
        stem: StemType::Ie,
        gender: Gender::Neuter,
        animacy: b.animacy,
    };
    let sg = [b.lemma.to_string(), at("ия"), at("ию"), b.lemma.to_string(), at("ием"), at("ии")];
    let mut pl = [at("ия"), at("ий"), at("иям"), String::new(), at("иями"), at("иях")];
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn ij(b: Builder<'_>) -> NounForms {
    let stem = cut(b.lemma, 2);
    let at = |e: &str| format!("{stem}{e}");
    let class = NounClass {
        declension: Declension::Second,
        stem: StemType::Ij,
        gender: Gender::Masculine,
        animacy: b.animacy,
    };
    let gen = at("ия");
    let acc = match b.animacy {
        Animacy::Animate => gen.clone(),
        Animacy::Inanimate => b.lemma.to_string(),
    };
    let sg = [b.lemma.to_string(), gen, at("ию"), acc, at("ием"), at("ии")];
    let mut pl = [at("ии"), at("иев"), at("иям"), String::new(), at("иями"), at("иях")];
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn soft_sign(t: &ExceptionTables, b: Builder<'_>) -> NounForms {
    if is_masculine_soft(t, b.lemma) {
        return masculine(t, b);
    }
    let stem = b.stem.as_str();
    let stem = match fleeting_stem(t, b.lemma) {
        Some(s) => s,
        None => stem.to_string(),
    };
    let lemma = b.lemma;
    let at = |e: &str| attach(&stem, e);
    let class = NounClass {
        declension: Declension::Third,
        stem: if last_char(&stem).is_some_and(is_hushing) {
            StemType::Sibilant
        } else {
            StemType::Soft
        },
        gender: Gender::Feminine,
        animacy: b.animacy,
    };
    // instrumental keeps the lemma stem: любовь -> любовью
    let ins = format!("{}ью", cut(lemma, 1));
    let sg = [lemma.to_string(), at("и"), at("и"), lemma.to_string(), ins, at("и")];
    let mut pl = [at("и"), at("ей"), at("ям"), String::new(), at("ями"), at("ях")];
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

fn is_masculine_soft(t: &ExceptionTables, lemma: &str) -> bool {
    if t.list("feminine-soft.txt").contains(lemma) {
        return false;
    }
    if t.list("masculine-soft.txt").matches(lemma) {
        return !t.list("feminine-soft.txt").matches(lemma)
            || t.list("masculine-soft.txt").contains(lemma);
    }
    if t.list("feminine-soft.txt").matches(lemma) {
        return false;
    }
    let before = char_from_end(lemma, 1);
    if before.is_some_and(is_hushing) {
        return false;
    }
    lemma.ends_with("тель") || lemma.ends_with("арь") || lemma.ends_with("ырь")
}

fn masculine(t: &ExceptionTables, b: Builder<'_>) -> NounForms {
    let lemma = b.lemma;
    let soft_sign = lemma.ends_with('ь');
    let yot = lemma.ends_with('й');
    let oblique = match fleeting_stem(t, lemma) {
        Some(s) => s,
        None if soft_sign || yot => cut(lemma, 1).to_string(),
        None => lemma.to_string(),
    };
    let last = last_char(&oblique).unwrap_or('т');
    let hushing = is_hushing(last);
    let class = NounClass {
        declension: Declension::Second,
        stem: match last {
            _ if soft_sign || yot => StemType::Soft,
            c if is_velar(c) => StemType::Velar,
            c if is_hushing(c) || c == 'ц' => StemType::Sibilant,
            _ => StemType::Hard,
        },
        gender: Gender::Masculine,
        animacy: b.animacy,
    };
    let soft = soft_sign || yot;
    let at = |e: &str| {
        let e = if soft {
            match e {
                "а" => "я",
                "у" => "ю",
                "ом" => "ем",
                "ы" => "и",
                "ам" => "ям",
                "ами" => "ями",
                "ах" => "ях",
                other => other,
            }
        } else {
            e
        };
        let stem = if yot { format!("{oblique}й") } else { oblique.clone() };
        // й + vowel letters: героя, геройю is spelled героев/героем
        if yot {
            yot_attach(&oblique, e)
        } else {
            attach(&stem, e)
        }
    };
    let ins = if soft {
        at("ом")
    } else if hushing && unstressed_hushing(lemma) {
        attach(&oblique, "ем")
    } else if last == 'ц' && unstressed_ts(lemma) {
        attach(&oblique, "ем")
    } else {
        at("ом")
    };
    let gen = at("а");
    let acc = match b.animacy {
        Animacy::Animate => gen.clone(),
        Animacy::Inanimate => lemma.to_string(),
    };
    let sg = [lemma.to_string(), gen, at("у"), acc, ins, at("е")];

    let plural_a = t.list("plural-a.txt").matches(lemma) && !t.list("stable-vowel.txt").contains(lemma);
    let gen_pl = if soft_sign || hushing {
        at("ей")
    } else if yot {
        yot_attach(&oblique, "ев")
    } else if last == 'ц' && unstressed_ts(lemma) {
        attach(&oblique, "ев")
    } else if lemma.ends_with("анин") || lemma.ends_with("янин") {
        cut(lemma, 2).to_string()
    } else if t.list("zero-genitive-plural.txt").matches(lemma) {
        lemma.to_string()
    } else {
        at("ов")
    };
    let (nom_pl, pl_stem_special) = if lemma.ends_with("анин") || lemma.ends_with("янин") {
        (format!("{}е", cut(lemma, 2)), Some(cut(lemma, 2).to_string()))
    } else if plural_a {
        (at("а"), None)
    } else {
        (at("ы"), None)
    };
    let mut pl = match &pl_stem_special {
        Some(s) => [
            nom_pl,
            gen_pl,
            format!("{s}ам"),
            String::new(),
            format!("{s}ами"),
            format!("{s}ах"),
        ],
        None => [nom_pl, gen_pl, at("ам"), String::new(), at("ами"), at("ах")],
    };
    pl[3] = plural_acc(&b, &pl[0], &pl[1]);
    forms_from(class, sg, pl)
}

/// Attaches an ending to a stem whose nominative ended in `й`.
fn yot_attach(stem: &str, ending: &str) -> String {
    let ending = match ending {
        "а" => "я",
        "у" => "ю",
        "ом" => "ем",
        "ы" => "и",
        "ам" => "ям",
        "ами" => "ями",
        "ах" => "ях",
        e => e,
    };
    format!("{stem}{ending}")
}

fn unstressed_hushing(lemma: &str) -> bool {
    lemma.ends_with("ищ") || (vowel_count(lemma) >= 2 && lemma.ends_with("еж"))
}

fn unstressed_ts(lemma: &str) -> bool {
    if vowel_count(lemma) < 3 {
        return false;
    }
    ["анец", "инец", "енец", "янец", "онец"]
        .iter()
        .any(|s| lemma.ends_with(s))
        || lemma.ends_with("яц")
}

/// Oblique stem with the fleeting vowel dropped, if the lemma has one.
fn fleeting_stem(t: &ExceptionTables, lemma: &str) -> Option<String> {
    if t.list("stable-vowel.txt").contains(lemma) {
        return None;
    }
    let listed = t.list("fleeting-vowel.txt").matches(lemma);
    let soft = lemma.ends_with('ь');
    let core = if soft || lemma.ends_with('й') { cut(lemma, 1) } else { lemma };
    let n = core.chars().count();
    if n < 3 {
        return None;
    }
    let vowel = char_from_end(core, 1)?;
    let final_c = last_char(core)?;
    let pre = char_from_end(core, 2)?;
    let pattern = vowel_count(lemma) >= 2
        && match (vowel, final_c) {
            ('о', 'к') | ('е', 'к') | ('е', 'ц') => !t.list("stable-vowel.txt").matches(lemma),
            ('е', 'н') if soft => !t.list("stable-vowel.txt").matches(lemma),
            _ => false,
        };
    if !(listed || pattern) {
        return None;
    }
    if !matches!(vowel, 'о' | 'е') {
        return None;
    }
    let head = cut(core, 2);
    let mut stem = String::from(head);
    if is_vowel(pre) {
        // боец -> бойц-, паек -> пайк-
        stem.push('й');
    } else if (pre == 'л' && final_c != 'к') || (vowel == 'е' && final_c == 'к' && matches!(pre, 'л' | 'н')) {
        // палец -> пальц-, огонек -> огоньк-
        stem.push('ь');
    }
    stem.push(final_c);
    Some(stem)
}

/// Zero-ending genitive plural with the inserted vowel of consonant
/// clusters: `ручк` → `ручек`, `окн` → `окон`, `земл` → `земель`.
fn gen_pl_zero(stem: &str, soft: bool) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n < 2 {
        return if soft { format!("{stem}ь") } else { stem.to_string() };
    }
    let c2 = chars[n - 1];
    let c1 = chars[n - 2];
    let head: String = chars[..n - 2].iter().collect();
    let mut inserted = false;
    let mut out = if c1 == 'й' || c1 == 'ь' {
        if is_consonant(c2) {
            inserted = true;
            format!("{head}е{c2}")
        } else {
            stem.to_string()
        }
    } else if is_consonant(c1) && is_consonant(c2) && needs_insertion(c1, c2, &head) {
        inserted = true;
        let v = if is_velar(c1) || (c2 == 'к' && !is_hushing(c1) && c1 != 'ц') {
            'о'
        } else {
            'е'
        };
        format!("{head}{c1}{v}{c2}")
    } else {
        stem.to_string()
    };
    if soft {
        let keep_soft = !(inserted && c2 == 'н' && !matches!(c1, 'р' | 'х' | 'в'));
        if keep_soft {
            out.push('ь');
        }
    }
    out
}

fn needs_insertion(c1: char, c2: char, head: &str) -> bool {
    if c1 == c2 {
        return false;
    }
    match c2 {
        'к' => !matches!(c1, 'н' | 'р') || head.chars().count() > 1 && matches!(c1, 'н'),
        'н' => !matches!(c1, 'р' | 'л' | 'м'),
        'л' => matches!(c1, 'к' | 'г' | 'с' | 'т' | 'д' | 'п' | 'б' | 'м' | 'з'),
        'р' => matches!(c1, 'с' | 'т' | 'д' | 'б' | 'п' | 'к' | 'г' | 'з'),
        'м' => matches!(c1, 'с' | 'з'),
        'ц' => matches!(c1, 'р' | 'д' | 'т' | 'н' | 'л'),
        _ => false,
    }
}

fn insert_fleeting(stem: &str, soft: bool) -> String {
    gen_pl_zero(stem, soft)
}

/// Animacy policy: inanimate unless listed or matched by an animate
/// suffix pattern, with `inanimate.txt` overriding the patterns.
pub(crate) fn infer_animacy(t: &ExceptionTables, lemma: &str) -> Animacy {
    let animate = t.list("animate.txt");
    let inanimate = t.list("inanimate.txt");
    if animate.contains(lemma) {
        return Animacy::Animate;
    }
    if inanimate.contains(lemma) {
        return Animacy::Inanimate;
    }
    if animate.matches(lemma) && !inanimate.matches(lemma) {
        Animacy::Animate
    } else {
        Animacy::Inanimate
    }
}
