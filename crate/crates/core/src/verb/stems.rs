//! Principal forms of a non-reflexive infinitive.
//!
//! `irregular-verbs.tsv` is consulted first. Its keys are root patterns
//! (`-нести`); a match only counts when the unmatched head splits into
//! verbal prefixes, so `принести` inherits from `нести` but `страдать`
//! does not inherit from `дать`. Columns, `*` meaning "derive by rule" and
//! `-` meaning "no such form":
//!
//! `1sg 2sg 3sg 1pl 2pl 3pl | past m f n pl | imperative | gerund-impf |
//! gerund-perf | past-active | past-passive`
//!
//! Otherwise the class comes from `verb-roots.tsv` (suffix → class, with an
//! optional explicit present stem) or from the infinitive ending.

use crate::exceptions::ExceptionTables;
use crate::word::{attach, cut, is_consonant, is_hushing, is_vowel, last_char};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugationClass {
    First,
    Second,
    Irregular,
    /// `-чь`
    Ch,
    /// `-ти`, `-сть`, `-зть`
    Ti,
    /// `-нуть`
    Nut,
    /// `-овать`/`-евать`
    Ovat,
    /// `-авать`
    Avat,
    Suppletive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Forms {
    pub class: ConjugationClass,
    pub infinitive: String,
    /// 1sg 2sg 3sg 1pl 2pl 3pl
    pub nonpast: [String; 6],
    /// m f n pl
    pub past: [String; 4],
    pub imperative: Option<String>,
    pub gerund_impf: Option<String>,
    pub gerund_perf: Option<String>,
    pub past_active: Option<String>,
    pub past_passive: Option<String>,
    /// Basic form for the perfective gerund and whether it ends in a vowel.
    pub basic_form: String,
    pub vowel_basic_form: bool,
}

const VERB_PREFIXES: &[&str] = &[
    "без", "бес", "в", "вз", "взо", "вс", "во", "воз", "возо", "вос", "вы", "до", "за", "из",
    "изо", "ис", "на", "над", "надо", "не", "недо", "низ", "нис", "о", "об", "обо", "от", "ото",
    "пере", "по", "под", "подо", "пре", "пред", "предо", "при", "про", "раз", "разо", "рас",
    "роз", "рос", "с", "со", "у", "через", "сверх", "въ", "взъ", "изъ", "объ", "отъ", "подъ",
    "предъ", "разъ", "съ", "сверхъ",
];

/// True when `head` is a (possibly empty) chain of verbal prefixes.
pub(crate) fn is_prefix_chain(head: &str) -> bool {
    if head.is_empty() {
        return true;
    }
    VERB_PREFIXES
        .iter()
        .any(|p| head.strip_prefix(p).is_some_and(is_prefix_chain))
}

/// Joins a prefix to an irregular form, inserting the `о` that appears
/// before consonant clusters (`с` + `бью` → `собью`, `с` + `тру` → `сотру`).
pub(crate) fn join_prefix(prefix: &str, form: &str) -> String {
    let ends_consonant = last_char(prefix).is_some_and(is_consonant);
    let mut chars = form.chars();
    let (a, b) = (chars.next(), chars.next());
    let cluster = match (a, b) {
        (Some(a), Some('ь')) => is_consonant(a),
        (Some(a), Some(b)) => matches!((a, b), ('ж', 'г') | ('ж', 'м') | ('ж', 'н') | ('м', 'н') | ('т', 'р')),
        _ => false,
    };
    if ends_consonant && cluster {
        format!("{prefix}о{form}")
    } else {
        format!("{prefix}{form}")
    }
}

/// Consonant alternation of the first-person singular and related stems.
pub(crate) fn mutate(stem: &str, t_to_shch: bool) -> String {
    let n = stem.chars().count();
    if n == 0 {
        return String::new();
    }
    for (from, to) in [("ст", "щ"), ("ск", "щ"), ("зд", "зж")] {
        if let Some(head) = stem.strip_suffix(from) {
            return format!("{head}{to}");
        }
    }
    let last = last_char(stem).unwrap_or('а');
    let head = cut(stem, 1);
    match last {
        'б' | 'п' | 'в' | 'ф' | 'м' => format!("{stem}л"),
        'д' | 'з' | 'г' => format!("{head}ж"),
        'т' if t_to_shch => format!("{head}щ"),
        'т' | 'к' => format!("{head}ч"),
        'с' | 'х' => format!("{head}ш"),
        _ => stem.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// `решать`: vowel stem, `-ю/-ешь`
    Aj,
    /// `любить`, `держать`, `видеть`
    Second { t_to_shch: bool },
    /// `писать` → `пишу`
    AMut,
    Nu,
    /// `мокнуть` → `мок`
    Nu0,
    Ovat,
    Avat,
    /// `колоть` → `колю`
    Ot,
    Ti,
    Ch,
    /// `тереть` → `тру`
    Eret,
}

fn default_rule(base: &str) -> Rule {
    let before = |suffix: &str| base.strip_suffix(suffix).and_then(last_char);
    if base.ends_with("овать") {
        Rule::Ovat
    } else if base.ends_with("евать") {
        Rule::Ovat
    } else if base.ends_with("авать") && (base.ends_with("давать") || base.ends_with("знавать") || base.ends_with("ставать")) {
        Rule::Avat
    } else if base.ends_with("нуть") && before("нуть").is_some() {
        Rule::Nu
    } else if base.ends_with("ереть") && base.chars().count() > 5 {
        Rule::Eret
    } else if base.ends_with("ить") {
        Rule::Second { t_to_shch: false }
    } else if base.ends_with("оть") {
        Rule::Ot
    } else if base.ends_with("ти") || base.ends_with("сть") || base.ends_with("зть") {
        Rule::Ti
    } else if base.ends_with("чь") {
        Rule::Ch
    } else {
        Rule::Aj
    }
}

fn parse_rule(tag: &str) -> Option<Rule> {
    Some(match tag {
        "1" | "aj" => Rule::Aj,
        "2" => Rule::Second { t_to_shch: false },
        "2щ" => Rule::Second { t_to_shch: true },
        "amut" => Rule::AMut,
        "nu" => Rule::Nu,
        "nu0" => Rule::Nu0,
        "ova" => Rule::Ovat,
        "ava" => Rule::Avat,
        "ot" => Rule::Ot,
        "ti" => Rule::Ti,
        "ch" => Rule::Ch,
        "eret" => Rule::Eret,
        _ => return None,
    })
}

fn six(stem: &str, first: &str, rest: &str, third_pl: &str) -> [String; 6] {
    [
        attach(stem, first),
        attach(stem, &format!("{rest}шь")),
        attach(stem, &format!("{rest}т")),
        attach(stem, &format!("{rest}м")),
        attach(stem, &format!("{rest}те")),
        attach(stem, third_pl),
    ]
}

fn past_from(m: &str) -> [String; 4] {
    let f_stem = if m.ends_with('л') { m.to_string() } else { format!("{m}л") };
    [
        m.to_string(),
        format!("{f_stem}а"),
        format!("{f_stem}о"),
        format!("{f_stem}и"),
    ]
}

fn l_past(base: &str) -> [String; 4] {
    past_from(&format!("{}л", cut(base, 2)))
}

/// Second-person stem of a first-conjugation consonant stem: `пек` → `печ`.
fn soften_velar(stem: &str) -> String {
    match last_char(stem) {
        Some('к') => format!("{}ч", cut(stem, 1)),
        Some('г') => format!("{}ж", cut(stem, 1)),
        _ => stem.to_string(),
    }
}

fn consonant_stem_forms(stem: &str) -> [String; 6] {
    let soft = soften_velar(stem);
    [
        attach(stem, "у"),
        format!("{soft}ешь"),
        format!("{soft}ет"),
        format!("{soft}ем"),
        format!("{soft}ете"),
        attach(stem, "ут"),
    ]
}

fn imperative_from(t: &ExceptionTables, base: &str, stem: &str) -> String {
    if last_char(stem).is_some_and(|c| is_vowel(c)) {
        return format!("{stem}й");
    }
    if t.list("soft-imperative.txt").matches(base) {
        let stem = match stem.strip_suffix('л') {
            Some(s) if s.ends_with(['б', 'п', 'м', 'в']) => s,
            _ => stem,
        };
        format!("{stem}ь")
    } else {
        format!("{stem}и")
    }
}

fn derive(t: &ExceptionTables, base: &str) -> Forms {
    let (rule, stem_override) = match t.table("verb-roots.tsv").lookup(base) {
        Some((head, row)) => match parse_rule(&row[0]) {
            Some(rule) => (rule, row.get(1).filter(|s| !s.is_empty()).map(|s| format!("{head}{s}"))),
            None => (default_rule(base), None),
        },
        None => (default_rule(base), None),
    };
    let inf = base.to_string();
    let vowel_past = cut(base, 2).to_string();
    match rule {
        Rule::Aj => {
            // сеять -> се-ю, решать -> реша-ю
            let np = match base.strip_suffix("ять") {
                Some(h) if last_char(h).is_some_and(|c| matches!(c, 'а' | 'е' | 'у')) => h.to_string(),
                _ => vowel_past.clone(),
            };
            let np = stem_override.unwrap_or(np);
            let consonant = !last_char(&np).is_some_and(is_vowel);
            let nonpast = if consonant {
                consonant_stem_forms(&np)
            } else {
                six(&np, "ю", "е", "ют")
            };
            let ppp = if vowel_past.ends_with(['а', 'я']) {
                Some(format!("{vowel_past}нный"))
            } else if vowel_past.ends_with('е') {
                Some(format!("{}енный", cut(&vowel_past, 1)))
            } else {
                Some(format!("{vowel_past}тый"))
            };
            Forms {
                class: ConjugationClass::First,
                nonpast,
                past: l_past(base),
                imperative: Some(imperative_from(t, base, &np)),
                gerund_impf: Some(attach(&np, "я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: ppp,
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Second { t_to_shch } => {
            let s = stem_override.unwrap_or_else(|| cut(base, 3).to_string());
            let m = mutate(&s, t_to_shch);
            let mut nonpast = six(&s, "ю", "и", "ят");
            nonpast[0] = attach(&m, "ю");
            let ppp = if base.ends_with("ить") {
                if last_char(&s).is_some_and(is_vowel) {
                    format!("{s}енный")
                } else if s.ends_with('д') && t.list("ppp-zhd.txt").matches(base) {
                    format!("{}жденный", cut(&s, 1))
                } else {
                    format!("{m}енный")
                }
            } else if base.ends_with("еть") {
                let m = if s.ends_with('т') { mutate(&s, false) } else { s.clone() };
                format!("{m}енный")
            } else {
                format!("{vowel_past}нный")
            };
            Forms {
                class: ConjugationClass::Second,
                nonpast,
                past: l_past(base),
                imperative: Some(imperative_from(t, base, &s)),
                gerund_impf: Some(attach(&s, "я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: Some(ppp),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::AMut => {
            let s = stem_override.unwrap_or_else(|| mutate(cut(base, 3), false));
            let soft = s.ends_with('л');
            let nonpast = if soft {
                six(&s, "ю", "е", "ют")
            } else {
                six(&s, "у", "е", "ут")
            };
            Forms {
                class: ConjugationClass::First,
                nonpast,
                past: l_past(base),
                imperative: Some(imperative_from(t, base, &s)),
                gerund_impf: Some(attach(&s, "я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: Some(format!("{vowel_past}нный")),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Nu | Rule::Nu0 => {
            let s = stem_override.unwrap_or_else(|| cut(base, 3).to_string());
            let nonpast = six(&s, "у", "е", "ут");
            let (past, past_active) = if rule == Rule::Nu0 {
                let root = cut(base, 4);
                let m = if last_char(root).is_some_and(is_vowel) {
                    format!("{root}л")
                } else {
                    root.to_string()
                };
                let active = if m.ends_with('л') {
                    format!("{}вший", cut(&m, 1))
                } else {
                    format!("{m}ший")
                };
                (past_from(&m), active)
            } else {
                (l_past(base), format!("{vowel_past}вший"))
            };
            Forms {
                class: ConjugationClass::Nut,
                nonpast,
                past,
                imperative: Some(imperative_from(t, base, &s)),
                gerund_impf: Some(attach(&s, "я")),
                gerund_perf: None,
                past_active: Some(past_active),
                past_passive: Some(format!("{}ый", cut(base, 1))),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Ovat => {
            let s = cut(base, 5);
            let np = stem_override.unwrap_or_else(|| {
                let after_hard = base.ends_with("овать") || last_char(s).is_some_and(|c| is_hushing(c) || c == 'ц');
                if after_hard { format!("{s}у") } else { format!("{s}ю") }
            });
            Forms {
                class: ConjugationClass::Ovat,
                nonpast: six(&np, "ю", "е", "ют"),
                past: l_past(base),
                imperative: Some(format!("{np}й")),
                gerund_impf: Some(format!("{np}я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: Some(format!("{vowel_past}нный")),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Avat => {
            let np = stem_override.unwrap_or_else(|| cut(base, 4).to_string());
            Forms {
                class: ConjugationClass::Avat,
                nonpast: six(&np, "ю", "е", "ют"),
                past: l_past(base),
                imperative: Some(format!("{vowel_past}й")),
                gerund_impf: Some(format!("{vowel_past}я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: Some(format!("{vowel_past}нный")),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Ot => {
            let s = stem_override.unwrap_or_else(|| cut(base, 3).to_string());
            Forms {
                class: ConjugationClass::First,
                nonpast: six(&s, "ю", "е", "ют"),
                past: l_past(base),
                imperative: Some(format!("{s}и")),
                gerund_impf: Some(attach(&s, "я")),
                gerund_perf: None,
                past_active: Some(format!("{vowel_past}вший")),
                past_passive: Some(format!("{}ый", cut(base, 1))),
                basic_form: vowel_past.clone(),
                vowel_basic_form: true,
                infinitive: inf,
            }
        }
        Rule::Ti => {
            let s = stem_override.unwrap_or_else(|| cut(base, 2).to_string());
            let m = if s.ends_with(['д', 'т']) {
                format!("{}л", cut(&s, 1))
            } else {
                s.clone()
            };
            Forms {
                class: ConjugationClass::Ti,
                nonpast: consonant_stem_forms(&s),
                past: past_from(&m),
                imperative: Some(imperative_from(t, base, &s)),
                gerund_impf: Some(attach(&s, "я")),
                gerund_perf: None,
                past_active: Some(format!("{s}ший")),
                past_passive: Some(format!("{s}енный")),
                basic_form: s.clone(),
                vowel_basic_form: false,
                infinitive: inf,
            }
        }
        Rule::Ch => {
            let s = stem_override.unwrap_or_else(|| format!("{}к", cut(base, 2)));
            Forms {
                class: ConjugationClass::Ch,
                nonpast: consonant_stem_forms(&s),
                past: past_from(&s),
                imperative: Some(imperative_from(t, base, &s)),
                gerund_impf: None,
                gerund_perf: None,
                past_active: Some(format!("{s}ший")),
                past_passive: Some(format!("{}енный", soften_velar(&s))),
                basic_form: s.clone(),
                vowel_basic_form: false,
                infinitive: inf,
            }
        }
        Rule::Eret => {
            let head = cut(base, 5);
            // стереть -> сотру
            let np = stem_override.unwrap_or_else(|| {
                let prefix = cut(head, 1);
                let root = &head[prefix.len()..];
                if last_char(prefix).is_some_and(is_consonant) {
                    format!("{prefix}о{root}р")
                } else {
                    format!("{head}р")
                }
            });
            let m = cut(base, 3).to_string();
            Forms {
                class: ConjugationClass::First,
                nonpast: consonant_stem_forms(&np),
                past: past_from(&m),
                imperative: Some(format!("{np}и")),
                gerund_impf: None,
                gerund_perf: None,
                past_active: Some(format!("{m}ший")),
                past_passive: Some(format!("{m}тый")),
                basic_form: m.clone(),
                vowel_basic_form: false,
                infinitive: inf,
            }
        }
    }
}

/// `решают` → `решая`, `держат` → `держа`.
pub(crate) fn gerund_from_third_plural(form: &str) -> Option<String> {
    let stem = cut(form, 2);
    (!stem.is_empty()).then(|| attach(stem, "я"))
}

fn column(row: &[String], i: usize, prefix: &str) -> Option<Option<String>> {
    match row.get(i).map(String::as_str) {
        None | Some("*") | Some("") => None,
        Some("-") => Some(None),
        Some(form) => Some(Some(join_prefix(prefix, form))),
    }
}

const SUPPLETIVE: &[&str] = &["быть", "дать", "есть", "хотеть", "бежать", "идти", "йти", "ехать"];

/// `-нять` after a prefix: `понять` → `пойму`, `снять` → `сниму`.
fn prefixed_nyat(base: &str) -> Option<Forms> {
    let head = base.strip_suffix("нять")?;
    if head.is_empty() || !is_prefix_chain(head) {
        return None;
    }
    let stem = if head == "при" {
        "прим".to_string()
    } else if last_char(head).is_some_and(is_vowel) {
        format!("{head}йм")
    } else {
        format!("{head}ним")
    };
    let vowel_past = cut(base, 2).to_string();
    Some(Forms {
        class: ConjugationClass::Irregular,
        infinitive: base.to_string(),
        nonpast: consonant_stem_forms(&stem),
        past: l_past(base),
        imperative: Some(format!("{stem}и")),
        gerund_impf: None,
        gerund_perf: None,
        past_active: Some(format!("{vowel_past}вший")),
        past_passive: Some(format!("{vowel_past}тый")),
        basic_form: vowel_past,
        vowel_basic_form: true,
    })
}

/// Principal forms of a non-reflexive infinitive.
pub(crate) fn forms(t: &ExceptionTables, base: &str) -> Forms {
    if let Some(forms) = prefixed_nyat(base) {
        return forms;
    }
    let mut forms = derive(t, base);
    let table = t.table("irregular-verbs.tsv");
    let Some((prefix, row)) = table.lookup_with(base, is_prefix_chain) else {
        return forms;
    };
    if row.first().map(String::as_str) == Some("regular") {
        return forms;
    }
    let key = &base[prefix.len()..];
    forms.class = if SUPPLETIVE.contains(&key) {
        ConjugationClass::Suppletive
    } else {
        ConjugationClass::Irregular
    };
    let mut new_present = false;
    for i in 0..6 {
        if let Some(Some(f)) = column(row, i, prefix) {
            forms.nonpast[i] = f;
            new_present = true;
        }
    }
    if new_present {
        forms.gerund_impf = gerund_from_third_plural(&forms.nonpast[5]);
    }
    for i in 0..4 {
        if let Some(Some(f)) = column(row, 6 + i, prefix) {
            forms.past[i] = f;
        }
    }
    if let Some(v) = column(row, 10, prefix) {
        forms.imperative = v;
    }
    if let Some(v) = column(row, 11, prefix) {
        forms.gerund_impf = v;
    }
    if let Some(v) = column(row, 12, prefix) {
        forms.gerund_perf = v;
    }
    if let Some(v) = column(row, 13, prefix) {
        forms.past_active = v;
    }
    if let Some(v) = column(row, 14, prefix) {
        forms.past_passive = v;
    }
    if !forms.past[0].ends_with('л') {
        forms.basic_form = forms.past[0].clone();
        forms.vowel_basic_form = false;
    }
    forms
}
