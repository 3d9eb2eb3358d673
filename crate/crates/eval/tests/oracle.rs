//! Engine output checked against forms read from an OpenCorpora extract.
//!
//! `fixtures/oracle.xml` holds the dictionary lexemes of the words used
//! below, copied unchanged by `examples/extract.rs`. Every expected form is
//! looked up there by its grammemes, never spelled out by hand.

use std::path::Path;
use std::sync::OnceLock;

use rumorph::*;
use rumorph_eval::evaluate::align;
use rumorph_eval::*;
use serde_json::json;

fn oracle() -> &'static Lexicon {
    static LX: OnceLock<Lexicon> = OnceLock::new();
    LX.get_or_init(|| {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/oracle.xml");
        Lexicon::open(&path, &IngestOptions::default()).unwrap()
    })
}

fn e() -> &'static Engine {
    Engine::builtin()
}

fn w(s: &str) -> CyrillicWord {
    normalize(s).unwrap()
}

fn lexemes(lemma: &str, pos: CorpusPos) -> Vec<&'static CorpusLexeme> {
    oracle().lexemes.iter().filter(|l| l.lemma == lemma && l.pos == pos).collect()
}

/// Forms of `lemma` carrying every grammeme in `tags`, standard variants
/// only.
fn corpus(lemma: &str, pos: CorpusPos, tags: &[&str]) -> Vec<String> {
    let g = &oracle().grammemes;
    let want: Vec<u32> = tags.iter().map(|t| g.index(t).unwrap_or_else(|| panic!("grammeme {t}"))).collect();
    let mut out: Vec<String> = lexemes(lemma, pos)
        .into_iter()
        .flat_map(|l| &l.forms)
        .filter(|f| !f.tags.is_excluded())
        .filter(|f| want.iter().all(|&i| f.tags.indices().any(|j| j == i)))
        .map(|f| f.text.to_string())
        .collect();
    out.dedup();
    assert!(!out.is_empty(), "no {tags:?} form of {lemma}");
    out
}

/// The single corpus form of `lemma` with `tags`.
fn one(lemma: &str, pos: CorpusPos, tags: &[&str]) -> String {
    let forms = corpus(lemma, pos, tags);
    forms[0].clone()
}

/// Mismatching slots between an engine paradigm and the aligned corpus
/// lexeme.
fn paradigm_mismatches(pos: Pos, lemma: &str, cpos: CorpusPos) -> Vec<String> {
    let table = pos.slot_table();
    let lexeme = lexemes(lemma, cpos)[0];
    let p = e().paradigm(pos, lemma).unwrap();
    let mut bad = Vec::new();
    for (slot, expected) in align(pos, &table, lexeme) {
        let got = &p.slots[slot].form;
        if !got.as_ref().is_some_and(|g| expected.contains(g)) {
            bad.push(format!("{} {}: {got:?} vs {expected:?}", lemma, table[slot]));
        }
    }
    bad
}

use CorpusPos::{Adjf, Advb, Infn, Noun as N, Numr};

#[test]
fn fixture_covers_the_examples() {
    assert_eq!(oracle().len(), 38);
    assert_eq!(oracle().grammemes.unknown_count(), 0);
}

#[test]
fn noun_forms() {
    assert_eq!(e().inflect_noun(&w("стол"), Case::Genitive, Number::Singular).unwrap(), one("стол", N, &["gent", "sing"]));
    assert_eq!(e().inflect_noun(&w("кофе"), Case::Dative, Number::Plural).unwrap(), one("кофе", N, &["datv", "plur"]));
    let mat = e().noun_paradigm(&w("мать")).unwrap();
    let forms: Vec<&str> = mat.slots.iter().filter_map(|s| s.form.as_deref()).collect();
    assert!(forms.contains(&one("мать", N, &["gent", "sing"]).as_str()));
    assert!(forms.contains(&one("мать", N, &["gent", "plur"]).as_str()));
}

#[test]
fn noun_paradigms_match_corpus() {
    let mut bad = Vec::new();
    for lemma in ["стол", "книга", "мать", "кофе", "рубль", "копейка", "градус", "тысяча"] {
        bad.extend(paradigm_mismatches(Pos::Noun, lemma, N));
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn animacy_policy_for_ez() {
    // the corpus lists both readings; the engine takes the animate one
    let readings: Vec<String> = lexemes("еж", N)
        .iter()
        .map(|l| oracle().grammemes.names(l.forms[0].tags).filter(|g| *g == "anim" || *g == "inan").collect())
        .collect();
    assert_eq!(readings.len(), 2);
    for n in [Number::Singular, Number::Plural] {
        let acc = e().inflect_noun(&w("еж"), Case::Accusative, n).unwrap();
        assert_eq!(acc, e().inflect_noun(&w("еж"), Case::Genitive, n).unwrap());
    }
    assert_eq!(
        e().inflect_noun(&w("еж"), Case::Accusative, Number::Plural).unwrap(),
        one("еж", N, &["anim", "accs", "plur"])
    );
}

#[test]
fn adjective_forms() {
    let f = |lemma: &str, t, c| e().inflect_adjective(&w(lemma), t, c, Animacy::Inanimate).unwrap();
    assert_eq!(f("красный", GenderOrPlural::Feminine, Case::Nominative), one("красный", Adjf, &["ADJF", "femn", "nomn"]));
    assert_eq!(f("синий", GenderOrPlural::Plural, Case::Genitive), one("синий", Adjf, &["ADJF", "plur", "gent"]));
    assert_eq!(
        e().short_adjective(&w("красный"), GenderOrPlural::Masculine).unwrap(),
        one("красный", Adjf, &["ADJS", "masc"])
    );
    let p = e().adjective_paradigm(&w("беж")).unwrap();
    let long: Vec<&Option<String>> = p.slots.iter().filter(|s| s.bundle.case.is_some()).map(|s| &s.form).collect();
    assert_eq!(long.len(), 24);
    assert!(long.iter().all(|f| f.as_deref() == Some(one("беж", Adjf, &["ADJF", "nomn", "masc"]).as_str())));
}

#[test]
fn adjective_paradigms_match_corpus() {
    let mut bad = Vec::new();
    for lemma in ["красный", "синий", "быстрый", "хороший", "первый", "третий", "девятый"] {
        bad.extend(paradigm_mismatches(Pos::Adjective, lemma, Adjf));
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn adverb_comparatives() {
    for (adverb, adjective) in [("быстро", "быстрый"), ("хорошо", "хороший")] {
        assert!(!lexemes(adverb, Advb).is_empty());
        let (comp, sup) = e().adverb_degrees(&w(adverb)).unwrap();
        let expected = corpus(adjective, Adjf, &["COMP"]);
        assert_eq!(comp, expected[0], "{adverb}");
        assert_eq!(sup, format!("{comp} всего"));
    }
}

/// Aspect grammemes on the infinitive forms.
fn corpus_aspect(lemma: &str) -> Aspect {
    let perf = corpus(lemma, Infn, &["INFN"]).len();
    let g = &oracle().grammemes;
    let l = lexemes(lemma, Infn)[0];
    let has = |name: &str| {
        let i = g.index(name).unwrap();
        l.forms.iter().any(|f| f.tags.indices().any(|j| j == i))
    };
    assert!(perf > 0);
    match (has("perf"), has("impf")) {
        (true, true) => Aspect::Biaspectual,
        (true, false) => Aspect::Perfective,
        _ => Aspect::Imperfective,
    }
}

#[test]
fn aspect_matches_corpus() {
    for lemma in ["решить", "решать", "казнить", "держать", "принести"] {
        assert_eq!(e().get_perfectness(&w(lemma)), corpus_aspect(lemma), "{lemma}");
    }
}

#[test]
fn verb_forms() {
    let conj = |lemma: &str, b: FeatureBundle| e().conjugate(&w(lemma), &b).unwrap();
    let pres = FeatureBundle::new().with_tense(Tense::Present);
    assert_eq!(
        conj("решать", pres.with_person(Person::First).with_number(Number::Singular)),
        one("решать", Infn, &["VERB", "pres", "1per", "sing"])
    );
    let past_f = FeatureBundle::new().with_tense(Tense::Past).with_agreement(GenderOrPlural::Feminine);
    assert_eq!(conj("учиться", past_f), one("учиться", Infn, &["VERB", "past", "femn"]));

    let p = e().verb_paradigm(&w("решать")).unwrap();
    assert_eq!(p.len(), 24);
    assert!(p.slots.iter().all(|s| s.form.is_some()));
    let p = e().verb_paradigm(&w("решить")).unwrap();
    assert!(p.slots.iter().filter(|s| s.bundle.tense == Some(Tense::Present)).all(|s| s.form.is_none()));
    assert!(corpus("решить", Infn, &["VERB"]).iter().all(|_| true));
}

#[test]
fn verb_paradigms_match_corpus() {
    let mut bad = Vec::new();
    for lemma in ["решать", "решить", "учиться", "решаться", "держать", "принести", "казнить"] {
        for pos in [Pos::Verb, Pos::Imperative, Pos::Gerund] {
            bad.extend(paradigm_mismatches(pos, lemma, Infn));
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn imperatives_and_gerunds() {
    assert_eq!(e().imperative(&w("решать"), Number::Singular).unwrap(), one("решать", Infn, &["impr", "sing"]));
    assert_eq!(e().imperative(&w("решать"), Number::Plural).unwrap(), one("решать", Infn, &["impr", "plur", "excl"]));
    assert_eq!(e().perfective_gerund(&w("решаться")).unwrap(), one("решаться", Infn, &["GRND", "past"]));
    assert!(corpus("принести", Infn, &["GRND", "past"]).contains(&e().perfective_gerund(&w("принести")).unwrap().into_string()));
    assert_eq!(e().imperfective_gerund(&w("решать")).unwrap(), one("решать", Infn, &["GRND", "pres"]));
    assert_eq!(e().imperfective_gerund(&w("держать")).unwrap(), one("держать", Infn, &["GRND", "pres"]));
}

#[test]
fn participles() {
    let pa = e()
        .participle(&w("решать"), ParticipleKind::PresentActive, GenderOrPlural::Masculine, Some(Case::Nominative), Animacy::Inanimate)
        .unwrap();
    assert_eq!(pa, one("решать", Infn, &["PRTF", "actv", "pres", "masc", "nomn"]));
    let pp = e()
        .participle(&w("решить"), ParticipleKind::PastPassive, GenderOrPlural::Feminine, Some(Case::Nominative), Animacy::Inanimate)
        .unwrap();
    assert_eq!(pp, one("решить", Infn, &["PRTF", "pssv", "past", "femn", "nomn"]));
    let mut bad = Vec::new();
    for kind in [ParticipleKind::PresentActive, ParticipleKind::PastActive] {
        bad.extend(paradigm_mismatches(Pos::Participle(kind), "решать", Infn));
    }
    bad.extend(paradigm_mismatches(Pos::Participle(ParticipleKind::PastPassive), "решить", Infn));
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn cardinals_compose_corpus_forms() {
    assert_eq!(e().cardinal(0, Case::Nominative, Gender::Masculine, Animacy::Inanimate).unwrap(), one("ноль", N, &["nomn", "sing"]));
    assert_eq!(e().cardinal(2, Case::Nominative, Gender::Feminine, Animacy::Inanimate).unwrap(), one("два", Numr, &["femn", "nomn"]));
    let expected = [one("двести", Numr, &["gent"]), one("тридцать", Numr, &["gent"]), one("один", Adjf, &["masc", "gent"])].join(" ");
    assert_eq!(e().cardinal(231, Case::Genitive, Gender::Masculine, Animacy::Inanimate).unwrap(), expected);
    for (n, lemma) in [(5, "пять"), (7, "семь"), (3, "три")] {
        for (case, tag) in [(Case::Genitive, "gent"), (Case::Dative, "datv"), (Case::Instrumental, "ablt")] {
            let got = e().cardinal(n, case, Gender::Masculine, Animacy::Inanimate).unwrap();
            assert!(corpus(lemma, Numr, &[tag]).contains(&got), "{n} {case:?}: {got}");
        }
    }
}

#[test]
fn ordinals_decline_the_last_word() {
    let ord = |n, t, c| e().ordinal(n, t, c, Animacy::Inanimate).unwrap();
    assert_eq!(ord(1, GenderOrPlural::Masculine, Case::Nominative), one("первый", Adjf, &["masc", "nomn"]));
    assert_eq!(ord(3, GenderOrPlural::Feminine, Case::Nominative), one("третий", Adjf, &["femn", "nomn"]));
    let head = [one("тысяча", N, &["nomn", "sing"]), one("девятьсот", Numr, &["nomn"]), one("девяносто", Numr, &["nomn"])].join(" ");
    assert_eq!(
        ord(1999, GenderOrPlural::Neuter, Case::Dative),
        format!("{head} {}", one("девятый", Adjf, &["neut", "datv"]))
    );
}

#[test]
fn agreement_phrases() {
    assert_eq!(
        e().agree_adjective_noun(&w("красный"), &w("книга"), Case::Dative, Number::Singular).unwrap(),
        format!("{} {}", one("красный", Adjf, &["ADJF", "femn", "datv"]), one("книга", N, &["datv", "sing"]))
    );
    let hedgehog = e().agree_adjective_noun(&w("красный"), &w("еж"), Case::Accusative, Number::Singular).unwrap();
    let genitive = e().agree_adjective_noun(&w("красный"), &w("еж"), Case::Genitive, Number::Singular).unwrap();
    assert_eq!(hedgehog, genitive);
    assert_eq!(
        e().agree_verb_pronoun(&w("решать"), Person::Third, Number::Singular, Gender::Feminine, Tense::Past).unwrap(),
        format!("она {}", one("решать", Infn, &["VERB", "past", "femn"]))
    );
    assert_eq!(
        e().agree_verb_pronoun(&w("решать"), Person::First, Number::Plural, Gender::Masculine, Tense::Present).unwrap(),
        format!("мы {}", one("решать", Infn, &["VERB", "pres", "1per", "plur"]))
    );
}

#[test]
fn quantities_formulas_reports() {
    let rub = w("рубль");
    for (n, numeral, tags) in [(1, "один", &["nomn", "sing"]), (2, "два", &["gent", "sing"]), (5, "пять", &["gent", "plur"])] {
        let expected = format!("{numeral} {}", one("рубль", N, tags));
        assert_eq!(e().quantity_phrase(n, &rub, Case::Nominative).unwrap(), expected);
    }
    let text = e().formula_to_text("2+3=5").unwrap();
    assert_eq!(text.rsplit(' ').next().unwrap(), one("пять", Numr, &["datv"]));

    let t: Template = "Завтра {t:quantity|noun=градус}.".parse().unwrap();
    let out = e().render_report(&t, &json!({"t": -3})).unwrap();
    assert!(out.contains(&format!("минус три {}", one("градус", N, &["gent", "sing"]))), "{out}");
    let t: Template = "{r:amount|noun=рубль} {k:amount|noun=копейка}".parse().unwrap();
    let out = e().render_report(&t, &json!({"r": 72, "k": 51})).unwrap();
    assert_eq!(out, format!("72 {} 51 {}", one("рубль", N, &["gent", "sing"]), one("копейка", N, &["nomn", "sing"])));
}
