//! Cardinal and ordinal numerals for 0..=9999.
//!
//! A number is split into thousands, hundreds, tens and units; each
//! component is a fixed word with its own six-case row. `тысяча` is a noun
//! governed like any counted noun (`две тысячи`, `пять тысяч`). An ordinal
//! keeps the leading components in the cardinal nominative and turns the
//! last non-zero component into an adjective declined by the adjective
//! engine.

use crate::adjective::long_forms_with;
use crate::error::{Error, Result};
use crate::grammar::{Animacy, Case, Gender, GenderOrPlural, Number};
use crate::paradigm::{Paradigm, Pos};
use crate::Engine;

pub const MAX: i64 = 9999;

type Row = [&'static str; 6];

const ZERO: Row = ["ноль", "ноля", "нолю", "ноль", "нолем", "ноле"];

const ONE_M: Row = ["один", "одного", "одному", "один", "одним", "одном"];
const ONE_F: Row = ["одна", "одной", "одной", "одну", "одной", "одной"];
const ONE_N: Row = ["одно", "одного", "одному", "одно", "одним", "одном"];
const TWO_MN: Row = ["два", "двух", "двум", "два", "двумя", "двух"];
const TWO_F: Row = ["две", "двух", "двум", "две", "двумя", "двух"];

const UNITS: [Row; 10] = [
    ZERO,
    ONE_M,
    TWO_MN,
    ["три", "трех", "трем", "три", "тремя", "трех"],
    ["четыре", "четырех", "четырем", "четыре", "четырьмя", "четырех"],
    ["пять", "пяти", "пяти", "пять", "пятью", "пяти"],
    ["шесть", "шести", "шести", "шесть", "шестью", "шести"],
    ["семь", "семи", "семи", "семь", "семью", "семи"],
    ["восемь", "восьми", "восьми", "восемь", "восемью", "восьми"],
    ["девять", "девяти", "девяти", "девять", "девятью", "девяти"],
];

const TEENS: [Row; 10] = [
    ["десять", "десяти", "десяти", "десять", "десятью", "десяти"],
    ["одиннадцать", "одиннадцати", "одиннадцати", "одиннадцать", "одиннадцатью", "одиннадцати"],
    ["двенадцать", "двенадцати", "двенадцати", "двенадцать", "двенадцатью", "двенадцати"],
    ["тринадцать", "тринадцати", "тринадцати", "тринадцать", "тринадцатью", "тринадцати"],
    ["четырнадцать", "четырнадцати", "четырнадцати", "четырнадцать", "четырнадцатью", "четырнадцати"],
    ["пятнадцать", "пятнадцати", "пятнадцати", "пятнадцать", "пятнадцатью", "пятнадцати"],
    ["шестнадцать", "шестнадцати", "шестнадцати", "шестнадцать", "шестнадцатью", "шестнадцати"],
    ["семнадцать", "семнадцати", "семнадцати", "семнадцать", "семнадцатью", "семнадцати"],
    ["восемнадцать", "восемнадцати", "восемнадцати", "восемнадцать", "восемнадцатью", "восемнадцати"],
    ["девятнадцать", "девятнадцати", "девятнадцати", "девятнадцать", "девятнадцатью", "девятнадцати"],
];

const TENS: [Row; 10] = [
    ZERO,
    TEENS[0],
    ["двадцать", "двадцати", "двадцати", "двадцать", "двадцатью", "двадцати"],
    ["тридцать", "тридцати", "тридцати", "тридцать", "тридцатью", "тридцати"],
    ["сорок", "сорока", "сорока", "сорок", "сорока", "сорока"],
    ["пятьдесят", "пятидесяти", "пятидесяти", "пятьдесят", "пятьюдесятью", "пятидесяти"],
    ["шестьдесят", "шестидесяти", "шестидесяти", "шестьдесят", "шестьюдесятью", "шестидесяти"],
    ["семьдесят", "семидесяти", "семидесяти", "семьдесят", "семьюдесятью", "семидесяти"],
    ["восемьдесят", "восьмидесяти", "восьмидесяти", "восемьдесят", "восемьюдесятью", "восьмидесяти"],
    ["девяносто", "девяноста", "девяноста", "девяносто", "девяноста", "девяноста"],
];

const HUNDREDS: [Row; 10] = [
    ZERO,
    ["сто", "ста", "ста", "сто", "ста", "ста"],
    ["двести", "двухсот", "двумстам", "двести", "двумястами", "двухстах"],
    ["триста", "трехсот", "тремстам", "триста", "тремястами", "трехстах"],
    ["четыреста", "четырехсот", "четыремстам", "четыреста", "четырьмястами", "четырехстах"],
    ["пятьсот", "пятисот", "пятистам", "пятьсот", "пятьюстами", "пятистах"],
    ["шестьсот", "шестисот", "шестистам", "шестьсот", "шестьюстами", "шестистах"],
    ["семьсот", "семисот", "семистам", "семьсот", "семьюстами", "семистах"],
    ["восемьсот", "восьмисот", "восьмистам", "восемьсот", "восемьюстами", "восьмистах"],
    ["девятьсот", "девятисот", "девятистам", "девятьсот", "девятьюстами", "девятистах"],
];

const THOUSAND_SG: Row = ["тысяча", "тысячи", "тысяче", "тысячу", "тысячей", "тысяче"];
const THOUSAND_PL: Row = ["тысячи", "тысяч", "тысячам", "тысячи", "тысячами", "тысячах"];

const ORDINAL_UNITS: [&str; 10] = [
    "нулевой", "первый", "второй", "третий", "четвертый", "пятый", "шестой", "седьмой", "восьмой",
    "девятый",
];
const ORDINAL_TEENS: [&str; 10] = [
    "десятый", "одиннадцатый", "двенадцатый", "тринадцатый", "четырнадцатый", "пятнадцатый",
    "шестнадцатый", "семнадцатый", "восемнадцатый", "девятнадцатый",
];
const ORDINAL_TENS: [&str; 10] = [
    "", "десятый", "двадцатый", "тридцатый", "сороковой", "пятидесятый", "шестидесятый",
    "семидесятый", "восьмидесятый", "девяностый",
];
const ORDINAL_HUNDREDS: [&str; 10] = [
    "", "сотый", "двухсотый", "трехсотый", "четырехсотый", "пятисотый", "шестисотый", "семисотый",
    "восьмисотый", "девятисотый",
];
/// Combining forms before `-тысячный`.
const THOUSAND_PREFIX: [&str; 10] = [
    "", "", "двух", "трех", "четырех", "пяти", "шести", "семи", "восьми", "девяти",
];

fn ci(case: Case) -> usize {
    Case::ALL.iter().position(|&c| c == case).unwrap_or(0)
}

pub(crate) fn check_range(value: i64) -> Result<usize> {
    if (0..=MAX).contains(&value) {
        Ok(value as usize)
    } else {
        Err(Error::Range(value))
    }
}

/// Case-form of one numeral word, with the animate accusative of 1..4
/// resolved to the genitive.
fn word(row: &Row, case: Case, animate_acc: bool) -> &'static str {
    if case == Case::Accusative && animate_acc {
        row[ci(Case::Genitive)]
    } else {
        row[ci(case)]
    }
}

fn unit_row(u: usize, gender: Gender) -> &'static Row {
    match (u, gender) {
        (1, Gender::Feminine) => &ONE_F,
        (1, Gender::Neuter) => &ONE_N,
        (2, Gender::Feminine) => &TWO_F,
        _ => &UNITS[u],
    }
}

/// Words for 1..=999 in `case`. `whole` is the complete number, used for
/// the animate accusative (only `один` and a bare 2..4 take it).
fn below_thousand(n: usize, case: Case, gender: Gender, animacy: Animacy, whole: usize, out: &mut Vec<&'static str>) {
    let (h, t, u) = (n / 100, n / 10 % 10, n % 10);
    if h > 0 {
        out.push(word(&HUNDREDS[h], case, false));
    }
    if t == 1 {
        out.push(word(&TEENS[u], case, false));
        return;
    }
    if t > 1 {
        out.push(word(&TENS[t], case, false));
    }
    if u > 0 {
        let animate = animacy == Animacy::Animate
            && (gender == Gender::Masculine || u != 1)
            && (u == 1 || whole < 5);
        out.push(word(unit_row(u, gender), case, animate));
    }
}

fn thousands(k: usize, case: Case, out: &mut Vec<&'static str>) {
    if k == 1 {
        out.push(THOUSAND_SG[ci(case)]);
        return;
    }
    below_thousand(k, case, Gender::Feminine, Animacy::Inanimate, k * 1000, out);
    let last = k % 10;
    let teen = k % 100 / 10 == 1;
    let row = match case {
        Case::Nominative | Case::Accusative if !teen && last == 1 => &THOUSAND_SG,
        Case::Nominative | Case::Accusative if !teen && (2..=4).contains(&last) => {
            out.push(THOUSAND_SG[ci(Case::Genitive)]);
            return;
        }
        Case::Nominative | Case::Accusative => {
            out.push(THOUSAND_PL[ci(Case::Genitive)]);
            return;
        }
        _ if !teen && last == 1 => &THOUSAND_SG,
        _ => &THOUSAND_PL,
    };
    out.push(row[ci(case)]);
}

/// Cardinal numeral phrase.
pub fn cardinal(value: i64, case: Case, gender: Gender, animacy: Animacy) -> Result<String> {
    let n = check_range(value)?;
    if n == 0 {
        return Ok(ZERO[ci(case)].to_string());
    }
    let mut out = Vec::new();
    if n >= 1000 {
        thousands(n / 1000, case, &mut out);
    }
    if n % 1000 > 0 {
        below_thousand(n % 1000, case, gender, animacy, n, &mut out);
    }
    Ok(out.join(" "))
}

/// Nominative masculine lemma of the ordinal for `n`, and the cardinal
/// words that precede it.
fn ordinal_parts(n: usize) -> (Vec<&'static str>, String) {
    let (k, h, t, u) = (n / 1000, n / 100 % 10, n / 10 % 10, n % 10);
    let mut head = Vec::new();
    let push_cardinal = |m: usize, head: &mut Vec<&'static str>| {
        if m > 0 {
            let mut words = Vec::new();
            if m >= 1000 {
                thousands(m / 1000, Case::Nominative, &mut words);
            }
            if m % 1000 > 0 {
                below_thousand(m % 1000, Case::Nominative, Gender::Masculine, Animacy::Inanimate, m, &mut words);
            }
            head.extend(words);
        }
    };
    let last = if n == 0 {
        ORDINAL_UNITS[0].to_string()
    } else if n % 1000 == 0 {
        format!("{}тысячный", THOUSAND_PREFIX[k])
    } else if n % 100 == 0 {
        push_cardinal(k * 1000, &mut head);
        ORDINAL_HUNDREDS[h].to_string()
    } else if t == 1 {
        push_cardinal(n - n % 100, &mut head);
        ORDINAL_TEENS[u].to_string()
    } else if u == 0 {
        push_cardinal(n - n % 100, &mut head);
        ORDINAL_TENS[t].to_string()
    } else {
        push_cardinal(n - u, &mut head);
        ORDINAL_UNITS[u].to_string()
    };
    (head, last)
}

/// Nominative masculine ordinal phrase, the lemma of [`ordinal`].
pub fn ordinal_lemma(value: i64) -> Result<String> {
    let (mut head, last) = ordinal_parts(check_range(value)?);
    let last: &str = &last;
    head.push(last);
    Ok(head.join(" "))
}

impl Engine {
    pub fn cardinal(&self, value: i64, case: Case, gender: Gender, animacy: Animacy) -> Result<String> {
        cardinal(value, case, gender, animacy)
    }

    /// Ordinal phrase; only the last word declines.
    pub fn ordinal(&self, value: i64, target: GenderOrPlural, case: Case, animacy: Animacy) -> Result<String> {
        let (head, last) = ordinal_parts(check_range(value)?);
        let forms = long_forms_with(Some(self.tables()), &last)?;
        let mut words: Vec<String> = head.iter().map(|s| s.to_string()).collect();
        words.push(forms.get(target, case, animacy).to_string());
        Ok(words.join(" "))
    }

    /// 24 slots: {m, f, n} × cases, then masculine animate × cases.
    pub fn cardinal_paradigm(&self, value: i64) -> Result<Paradigm> {
        let lemma = cardinal(value, Case::Nominative, Gender::Masculine, Animacy::Inanimate)?;
        Paradigm::build(lemma, Pos::Cardinal, |b| {
            let case = b.case.unwrap_or(Case::Nominative);
            let gender = b.gender.unwrap_or(Gender::Masculine);
            let animacy = b.animacy.unwrap_or(Animacy::Inanimate);
            cardinal(value, case, gender, animacy).map(Some)
        })
    }

    /// 18 slots: {m, f, n} × cases.
    pub fn ordinal_paradigm(&self, value: i64) -> Result<Paradigm> {
        let lemma = ordinal_lemma(value)?;
        Paradigm::build(lemma, Pos::Ordinal, |b| {
            let case = b.case.unwrap_or(Case::Nominative);
            let target = GenderOrPlural::from_parts(b.gender.unwrap_or(Gender::Masculine), Number::Singular);
            self.ordinal(value, target, case, Animacy::Inanimate).map(Some)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const M: Gender = Gender::Masculine;
    const I: Animacy = Animacy::Inanimate;

    #[test]
    fn cardinals() {
        assert_eq!(cardinal(0, Case::Nominative, M, I).unwrap(), "ноль");
        assert_eq!(cardinal(2, Case::Nominative, Gender::Feminine, I).unwrap(), "две");
        assert_eq!(cardinal(231, Case::Genitive, M, I).unwrap(), "двухсот тридцати одного");
        assert_eq!(cardinal(1000, Case::Nominative, M, I).unwrap(), "тысяча");
        assert_eq!(cardinal(2000, Case::Nominative, M, I).unwrap(), "две тысячи");
        assert_eq!(cardinal(5000, Case::Nominative, M, I).unwrap(), "пять тысяч");
        assert_eq!(cardinal(5000, Case::Instrumental, M, I).unwrap(), "пятью тысячами");
        assert_eq!(cardinal(21000, Case::Nominative, M, I), Err(Error::Range(21000)));
        assert_eq!(cardinal(-1, Case::Nominative, M, I), Err(Error::Range(-1)));
        assert_eq!(cardinal(9999, Case::Dative, M, I).unwrap(), "девяти тысячам девятистам девяноста девяти");
    }

    #[test]
    fn animate_accusative() {
        let a = Animacy::Animate;
        assert_eq!(cardinal(2, Case::Accusative, M, a).unwrap(), "двух");
        assert_eq!(cardinal(22, Case::Accusative, M, a).unwrap(), "двадцать два");
        assert_eq!(cardinal(21, Case::Accusative, M, a).unwrap(), "двадцать одного");
        assert_eq!(cardinal(1, Case::Accusative, Gender::Feminine, a).unwrap(), "одну");
    }

    #[test]
    fn ordinals() {
        let e = Engine::builtin();
        let g = GenderOrPlural::Masculine;
        assert_eq!(e.ordinal(1, g, Case::Nominative, I).unwrap(), "первый");
        assert_eq!(e.ordinal(3, GenderOrPlural::Feminine, Case::Nominative, I).unwrap(), "третья");
        assert_eq!(
            e.ordinal(1999, GenderOrPlural::Neuter, Case::Dative, I).unwrap(),
            "тысяча девятьсот девяносто девятому"
        );
        assert_eq!(e.ordinal(2000, g, Case::Genitive, I).unwrap(), "двухтысячного");
        assert_eq!(e.ordinal(1200, g, Case::Nominative, I).unwrap(), "тысяча двухсотый");
        assert_eq!(e.ordinal(40, g, Case::Nominative, I).unwrap(), "сороковой");
        assert_eq!(e.ordinal(0, g, Case::Nominative, I).unwrap(), "нулевой");
    }

    #[test]
    fn paradigm_sizes() {
        let e = Engine::builtin();
        assert_eq!(e.cardinal_paradigm(231).unwrap().len(), 24);
        assert_eq!(e.ordinal_paradigm(231).unwrap().len(), 18);
    }
}
