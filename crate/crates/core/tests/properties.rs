use proptest::prelude::*;
use rumorph::*;

fn e() -> &'static Engine {
    Engine::builtin()
}

fn w(s: &str) -> CyrillicWord {
    normalize(s).unwrap()
}

fn russian_word() -> impl Strategy<Value = String> {
    "[а-яё]{1,14}"
}

/// Nominative masculine cardinal spelled from scratch.
fn spell(n: u32) -> String {
    const UNITS: [&str; 10] = ["", "один", "два", "три", "четыре", "пять", "шесть", "семь", "восемь", "девять"];
    const TEENS: [&str; 10] = [
        "десять", "одиннадцать", "двенадцать", "тринадцать", "четырнадцать", "пятнадцать", "шестнадцать",
        "семнадцать", "восемнадцать", "девятнадцать",
    ];
    const TENS: [&str; 10] = ["", "", "двадцать", "тридцать", "сорок", "пятьдесят", "шестьдесят", "семьдесят", "восемьдесят", "девяносто"];
    const HUNDREDS: [&str; 10] = ["", "сто", "двести", "триста", "четыреста", "пятьсот", "шестьсот", "семьсот", "восемьсот", "девятьсот"];
    if n == 0 {
        return "ноль".into();
    }
    let mut words: Vec<&str> = Vec::new();
    let thousands = n / 1000;
    if thousands > 0 {
        // a lone thousand is written without "одна"
        words.push(match thousands {
            1 => "",
            2 => "две",
            t => UNITS[t as usize],
        });
        words.push(match thousands {
            1 => "тысяча",
            2..=4 => "тысячи",
            _ => "тысяч",
        });
    }
    let rest = n % 1000;
    words.push(HUNDREDS[(rest / 100) as usize]);
    let (tens, units) = ((rest % 100) / 10, rest % 10);
    if tens == 1 {
        words.push(TEENS[units as usize]);
    } else {
        words.push(TENS[tens as usize]);
        words.push(UNITS[units as usize]);
    }
    words.retain(|w| !w.is_empty());
    words.join(" ")
}

#[test]
fn cardinal_nominative_exhaustive() {
    for n in 0..=9999u32 {
        let got = e().cardinal(n.into(), Case::Nominative, Gender::Masculine, Animacy::Inanimate).unwrap();
        assert_eq!(got, spell(n), "{n}");
    }
    assert_eq!(e().cardinal(10_000, Case::Nominative, Gender::Masculine, Animacy::Inanimate).unwrap_err().code(), "range");
}

#[test]
fn government_matches_last_two_digits() {
    for n in 0..=10_000u64 {
        let expected = match (n % 10, n % 100) {
            (_, 11..=14) => Government::Plural,
            (1, _) => Government::Singular,
            (2..=4, _) => Government::Paucal,
            _ => Government::Plural,
        };
        assert_eq!(government(n), expected, "{n}");
    }
}

#[test]
fn slot_tables_have_fixed_sizes() {
    let sizes: Vec<(Pos, usize)> = Pos::ALL.iter().map(|&p| (p, p.slots().len())).collect();
    let expected = [12, 28, 2, 24, 2, 2, 28, 28, 28, 18, 24];
    assert_eq!(sizes.iter().map(|s| s.1).collect::<Vec<_>>(), expected);
    for (pos, _) in sizes {
        let tags: std::collections::HashSet<String> = pos.slots().iter().map(|b| b.to_string()).collect();
        assert_eq!(tags.len(), pos.slots().len(), "{pos} slots are distinct");
    }
}

#[test]
fn indeclinables_never_change() {
    for lemma in e().tables().list("indeclinable.txt").iter() {
        let p = e().noun_paradigm(&w(lemma)).unwrap();
        assert!(p.slots.iter().all(|s| s.form.as_deref() == Some(lemma)), "{lemma}");
    }
    for lemma in e().tables().list("indeclinable-adjectives.txt").iter() {
        let p = e().adjective_paradigm(&w(lemma)).unwrap();
        assert!(p.slots.iter().filter(|s| s.bundle.case.is_some()).all(|s| s.form.as_deref() == Some(lemma)), "{lemma}");
    }
}

#[test]
fn perfective_gap_and_imperfective_fullness() {
    for lemma in ["решить", "сделать", "написать", "прочитать", "дать"] {
        let p = e().verb_paradigm(&w(lemma)).unwrap();
        for s in &p.slots {
            assert_eq!(s.form.is_none(), s.bundle.tense == Some(Tense::Present), "{lemma} {}", s.bundle);
        }
    }
    for lemma in ["решать", "делать", "писать", "читать", "давать"] {
        let p = e().verb_paradigm(&w(lemma)).unwrap();
        assert!(p.slots.iter().all(|s| s.form.is_some()), "{lemma}");
    }
}

proptest! {
    #[test]
    fn normalize_is_idempotent(s in russian_word()) {
        let once = normalize(&s).unwrap();
        prop_assert!(!once.contains('ё'));
        prop_assert_eq!(normalize(&once).unwrap(), once.clone());
        prop_assert_eq!(normalize(&s.to_uppercase()).unwrap(), once);
    }

    #[test]
    fn latin_is_rejected(s in "[a-z]{1,10}") {
        prop_assert_eq!(normalize(&s).unwrap_err().code(), "not-russian");
    }

    #[test]
    fn till_drops_characters(s in russian_word(), n in 0usize..16) {
        let len = s.chars().count();
        match till(&s, n) {
            Ok(rest) => {
                prop_assert!(n <= len);
                prop_assert_eq!(rest.chars().count(), len - n);
                prop_assert!(s.starts_with(rest));
            }
            Err(_) => prop_assert!(n > len),
        }
    }

    #[test]
    fn noun_paradigm_shape(stem in "[бвгдзклмнпрст][аоуие][бвгдзклмнпрст]{1,2}", ending in prop::sample::select(vec!["", "а", "о", "ь", "я", "е"])) {
        let lemma = format!("{stem}{ending}");
        let p = e().noun_paradigm(&w(&lemma)).unwrap();
        prop_assert_eq!(p.len(), 12);
        prop_assert!(p.slots.iter().all(|s| s.form.is_some()));
        let nom = e().inflect_noun(&w(&lemma), Case::Nominative, Number::Singular).unwrap();
        prop_assert_eq!(nom.as_str(), lemma.as_str());
    }

    #[test]
    fn adjective_paradigm_shape(stem in "[бвдзлмнпрст][аоуие][бвдзлмнпрст]", ending in prop::sample::select(vec!["ый", "ий", "ой"])) {
        let lemma = format!("{stem}{ending}");
        let p = e().adjective_paradigm(&w(&lemma)).unwrap();
        prop_assert_eq!(p.len(), 28);
        let nom = e().inflect_adjective(&w(&lemma), GenderOrPlural::Masculine, Case::Nominative, Animacy::Inanimate).unwrap();
        prop_assert_eq!(nom.as_str(), lemma.as_str());
        prop_assert!(p.slots.iter().filter(|s| s.bundle.case.is_some()).all(|s| s.form.is_some()));
    }

    #[test]
    fn ordinal_keeps_cardinal_head(n in 1i64..=9999) {
        let ord = e().ordinal(n, GenderOrPlural::Masculine, Case::Nominative, Animacy::Inanimate).unwrap();
        let words: Vec<&str> = ord.split(' ').collect();
        let card = e().cardinal(n, Case::Nominative, Gender::Masculine, Animacy::Inanimate).unwrap();
        let card_words: Vec<&str> = card.split(' ').collect();
        // the head words stay cardinal; only the last one is an ordinal
        prop_assert!(card_words.starts_with(&words[..words.len() - 1]));
        prop_assert!(words.last().unwrap().ends_with("ый") || words.last().unwrap().ends_with("ой") || words.last().unwrap().ends_with("ий"));
    }

    #[test]
    fn numerals_are_deterministic_and_russian(n in 0i64..=9999, case in prop::sample::select(Case::ALL.to_vec())) {
        let a = e().cardinal(n, case, Gender::Feminine, Animacy::Animate).unwrap();
        prop_assert_eq!(&a, &e().cardinal(n, case, Gender::Feminine, Animacy::Animate).unwrap());
        prop_assert!(a.split(' ').all(|word| normalize(word).map(|x| x == word).unwrap_or(false)));
    }

    #[test]
    fn formula_text_is_stable(a in 0i64..1000, b in 0i64..1000, op in prop::sample::select(vec!["+", "-", "*"])) {
        let tight = e().formula_to_text(&format!("{a}{op}{b}")).unwrap();
        let spaced = e().formula_to_text(&format!(" {a} {op} {b} ")).unwrap();
        prop_assert_eq!(tight, spaced);
    }
}
