//! Agreement helpers and data-to-text functions: quantity phrases,
//! arithmetic formulas and templated reports.
//!
//! Template placeholders look like `{name:type|key=value,key=value}`.
//! Types:
//!
//! | type | data value | keys |
//! |---|---|---|
//! | `text` | string | none |
//! | `noun` | noun lemma | `case`, `num` |
//! | `adj` | adjective lemma | `link` (a noun placeholder), `case`, `num`, `gen`, `anim` |
//! | `verb` | infinitive | `tense`, `pers`, `num`, `gen`, `link` (a noun placeholder, third person) |
//! | `number` | integer | `case`, `gen` |
//! | `ordinal` | integer | `case`, `gen`, `num` |
//! | `quantity` | integer, may be negative | `noun` (required), `case` |
//! | `amount` | integer | `noun` (required), `case` |
//!
//! `quantity` spells the number out (`минус три градуса`); `amount` keeps
//! digits and only inflects the noun (`72 рубля`). A literal brace is
//! written `{{` or `}}`.

use std::collections::HashMap;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::grammar::*;
use crate::numerals::{cardinal, check_range};
use crate::word::{normalize, CyrillicWord};
use crate::Engine;

/// Noun form required after a number in nominative/accusative contexts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Government {
    /// `один рубль`
    Singular,
    /// `два рубля`
    Paucal,
    /// `пять рублей`
    Plural,
}

/// The mod-10/mod-100 rule.
pub fn government(n: u64) -> Government {
    let (last, last_two) = (n % 10, n % 100);
    if (11..=14).contains(&last_two) {
        Government::Plural
    } else if last == 1 {
        Government::Singular
    } else if (2..=4).contains(&last) {
        Government::Paucal
    } else {
        Government::Plural
    }
}

/// Person, number and gender of a personal pronoun. `я`, `ты`, `мы`, `вы`
/// and `они` carry no gender and report masculine.
pub fn pronoun_features(word: &str) -> Option<(Person, Number, Gender)> {
    let m = Gender::Masculine;
    Some(match word {
        "я" => (Person::First, Number::Singular, m),
        "ты" => (Person::Second, Number::Singular, m),
        "он" => (Person::Third, Number::Singular, m),
        "она" => (Person::Third, Number::Singular, Gender::Feminine),
        "оно" => (Person::Third, Number::Singular, Gender::Neuter),
        "мы" => (Person::First, Number::Plural, m),
        "вы" => (Person::Second, Number::Plural, m),
        "они" => (Person::Third, Number::Plural, m),
        _ => return None,
    })
}

fn pronoun(person: Person, number: Number, gender: Gender) -> &'static str {
    match (person, number, gender) {
        (Person::First, Number::Singular, _) => "я",
        (Person::Second, Number::Singular, _) => "ты",
        (Person::Third, Number::Singular, Gender::Masculine) => "он",
        (Person::Third, Number::Singular, Gender::Feminine) => "она",
        (Person::Third, Number::Singular, Gender::Neuter) => "оно",
        (Person::First, Number::Plural, _) => "мы",
        (Person::Second, Number::Plural, _) => "вы",
        (Person::Third, Number::Plural, _) => "они",
    }
}

impl Engine {
    /// Adjective + noun, the adjective agreeing in the noun's gender and
    /// animacy.
    pub fn agree_adjective_noun(
        &self,
        adj: &CyrillicWord,
        noun: &CyrillicWord,
        case: Case,
        number: Number,
    ) -> Result<String> {
        let forms = self.decline_noun(noun);
        let target = GenderOrPlural::from_parts(forms.class.gender, number);
        let a = self.inflect_adjective(adj, target, case, forms.class.animacy)?;
        Ok(format!("{a} {}", forms.get(case, number)))
    }

    /// Personal pronoun + verb form. Past tense agrees in gender and
    /// number, the other tenses in person and number.
    pub fn agree_verb_pronoun(
        &self,
        verb: &CyrillicWord,
        person: Person,
        number: Number,
        gender: Gender,
        tense: Tense,
    ) -> Result<String> {
        let bundle = match tense {
            Tense::Past => FeatureBundle::new()
                .with_tense(tense)
                .with_agreement(GenderOrPlural::from_parts(gender, number)),
            _ => FeatureBundle::new()
                .with_tense(tense)
                .with_person(person)
                .with_number(number),
        };
        let form = self.conjugate(verb, &bundle)?;
        Ok(format!("{} {form}", pronoun(person, number, gender)))
    }

    /// Noun form governed by `n` in `case`.
    fn counted_noun(&self, n: u64, noun: &CyrillicWord, case: Case) -> String {
        let forms = self.decline_noun(noun);
        let direct = matches!(case, Case::Nominative | Case::Accusative);
        let (c, num) = match (n, government(n), direct) {
            (0, _, _) => (Case::Genitive, Number::Plural),
            (_, Government::Singular, _) => (case, Number::Singular),
            (_, Government::Paucal, true) => (Case::Genitive, Number::Singular),
            (_, _, true) => (Case::Genitive, Number::Plural),
            (_, _, false) => (case, Number::Plural),
        };
        forms.get(c, num).to_string()
    }

    /// Number in words + counted noun.
    pub fn quantity_phrase(&self, n: i64, noun: &CyrillicWord, case: Case) -> Result<String> {
        let value = check_range(n)? as u64;
        let class = self.noun_class(noun);
        let animacy = if government(value) == Government::Singular { class.animacy } else { Animacy::Inanimate };
        let numeral = cardinal(n, case, class.gender, animacy)?;
        Ok(format!("{numeral} {}", self.counted_noun(value, noun, case)))
    }

    /// Digits + counted noun: `72 рубля`.
    pub fn amount_phrase(&self, n: i64, noun: &CyrillicWord, case: Case) -> Result<String> {
        let value = n.unsigned_abs();
        Ok(format!("{n} {}", self.counted_noun(value, noun, case)))
    }

    /// Reads an arithmetic formula aloud.
    pub fn formula_to_text(&self, expr: &str) -> Result<String> {
        let tokens = tokenize(expr)?;
        let mut p = Parser { tokens, pos: 0 };
        let formula = p.formula()?;
        if p.pos != p.tokens.len() {
            return Err(Error::MalformedExpression(expr.to_string()));
        }
        let mut words = Vec::new();
        verbalize(&formula.left, Case::Nominative, &mut words)?;
        if let Some(right) = &formula.right {
            words.push("равно".to_string());
            verbalize(right, Case::Dative, &mut words)?;
        }
        Ok(words.join(" "))
    }

    pub fn render_report(&self, template: &Template, data: &Value) -> Result<String> {
        template.render(self, data)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Num(i64),
    Plus,
    Minus,
    Times,
    Divide,
    Equals,
    Open,
    Close,
}

fn tokenize(expr: &str) -> Result<Vec<Token>> {
    let bad = || Error::MalformedExpression(expr.to_string());
    let mut tokens = Vec::new();
    let mut chars = expr.chars().peekable();
    while let Some(c) = chars.next() {
        let t = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = c.to_string();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                let n: i64 = digits.parse().map_err(|_| Error::Range(i64::MAX))?;
                check_range(n)?;
                Token::Num(n)
            }
            '+' => Token::Plus,
            '-' | '−' | '–' => Token::Minus,
            '*' | '×' | '·' => Token::Times,
            '/' | '÷' | ':' => Token::Divide,
            '=' => Token::Equals,
            '(' => Token::Open,
            ')' => Token::Close,
            _ => return Err(bad()),
        };
        tokens.push(t);
    }
    if tokens.is_empty() {
        return Err(bad());
    }
    Ok(tokens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Num(i64),
    Group(Box<Expr>),
    Binary(Box<Expr>, Token, Box<Expr>),
}

struct Formula {
    left: Expr,
    right: Option<Expr>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn error(&self) -> Error {
        Error::MalformedExpression(format!("unexpected token at position {}", self.pos))
    }

    fn formula(&mut self) -> Result<Formula> {
        let left = self.expr()?;
        let right = if self.peek() == Some(Token::Equals) {
            self.pos += 1;
            Some(self.expr()?)
        } else {
            None
        };
        Ok(Formula { left, right })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        while let Some(op @ (Token::Plus | Token::Minus)) = self.peek() {
            self.pos += 1;
            let right = self.term()?;
            left = Expr::Binary(Box::new(left), op, Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        while let Some(op @ (Token::Times | Token::Divide)) = self.peek() {
            self.pos += 1;
            let right = self.factor()?;
            left = Expr::Binary(Box::new(left), op, Box::new(right));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(Expr::Group(Box::new(inner)))
            }
            _ => Err(self.error()),
        }
    }
}

/// Operands of `+`/`-` share the surrounding case; the right operand of
/// `умножить на`/`разделить на` is accusative.
fn verbalize(e: &Expr, case: Case, out: &mut Vec<String>) -> Result<()> {
    match e {
        Expr::Num(n) => out.push(cardinal(*n, case, Gender::Masculine, Animacy::Inanimate)?),
        Expr::Group(inner) => {
            out.push("открыть скобку".to_string());
            verbalize(inner, case, out)?;
            out.push("закрыть скобку".to_string());
        }
        Expr::Binary(l, op, r) => {
            verbalize(l, case, out)?;
            let (word, right_case) = match op {
                Token::Plus => ("плюс", case),
                Token::Minus => ("минус", case),
                Token::Times => ("умножить на", Case::Accusative),
                _ => ("разделить на", Case::Accusative),
            };
            out.push(word.to_string());
            verbalize(r, right_case, out)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaceholderKind {
    Text,
    Noun,
    Adjective,
    Verb,
    Number,
    Ordinal,
    Quantity,
    Amount,
}

impl FromStr for PlaceholderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "text" => Self::Text,
            "noun" => Self::Noun,
            "adj" => Self::Adjective,
            "verb" => Self::Verb,
            "number" => Self::Number,
            "ordinal" => Self::Ordinal,
            "quantity" => Self::Quantity,
            "amount" => Self::Amount,
            _ => return Err(Error::MalformedTemplate(format!("unknown placeholder type {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placeholder {
    pub name: String,
    pub kind: PlaceholderKind,
    pub features: Vec<(String, String)>,
}

impl Placeholder {
    fn feature(&self, key: &str) -> Option<&str> {
        self.features.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.feature(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| Error::UnknownFeature(format!("{key}={v}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Piece {
    Literal(String),
    Slot(Placeholder),
}

/// A parsed report template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pieces: Vec<Piece>,
}

const FEATURE_KEYS: &[&str] = &["case", "num", "gen", "pers", "tense", "anim", "link", "noun"];

impl FromStr for Template {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut literal = String::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '{' if chars.peek() == Some(&'{') => {
                    chars.next();
                    literal.push('{');
                }
                '}' if chars.peek() == Some(&'}') => {
                    chars.next();
                    literal.push('}');
                }
                '}' => return Err(Error::MalformedTemplate("unmatched '}'".to_string())),
                '{' => {
                    let mut body = String::new();
                    loop {
                        match chars.next() {
                            Some('}') => break,
                            Some('{') | None => {
                                return Err(Error::MalformedTemplate("unterminated placeholder".to_string()))
                            }
                            Some(ch) => body.push(ch),
                        }
                    }
                    if !literal.is_empty() {
                        pieces.push(Piece::Literal(std::mem::take(&mut literal)));
                    }
                    pieces.push(Piece::Slot(parse_placeholder(&body)?));
                }
                _ => literal.push(c),
            }
        }
        if !literal.is_empty() {
            pieces.push(Piece::Literal(literal));
        }
        let template = Template { pieces };
        template.check_links()?;
        Ok(template)
    }
}

fn parse_placeholder(body: &str) -> Result<Placeholder> {
    let bad = |why: &str| Error::MalformedTemplate(format!("{{{body}}}: {why}"));
    let (head, features) = match body.split_once('|') {
        Some((h, f)) => (h, Some(f)),
        None => (body, None),
    };
    let (name, kind) = head.split_once(':').ok_or_else(|| bad("missing type"))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '.') {
        return Err(bad("bad name"));
    }
    let kind: PlaceholderKind = kind.trim().parse()?;
    let mut pairs = Vec::new();
    for pair in features.into_iter().flat_map(|f| f.split(',')) {
        let (k, v) = pair.split_once('=').ok_or_else(|| bad("feature without '='"))?;
        let (k, v) = (k.trim(), v.trim());
        if !FEATURE_KEYS.contains(&k) {
            return Err(Error::UnknownFeature(k.to_string()));
        }
        pairs.push((k.to_string(), v.to_string()));
    }
    if matches!(kind, PlaceholderKind::Quantity | PlaceholderKind::Amount) && !pairs.iter().any(|(k, _)| k == "noun") {
        return Err(bad("needs noun="));
    }
    Ok(Placeholder { name: name.to_string(), kind, features: pairs })
}

fn lookup<'v>(data: &'v Value, name: &str) -> Option<&'v Value> {
    name.split('.').try_fold(data, |v, key| v.get(key))
}

impl Template {
    pub fn placeholders(&self) -> impl Iterator<Item = &Placeholder> {
        self.pieces.iter().filter_map(|p| match p {
            Piece::Slot(s) => Some(s),
            Piece::Literal(_) => None,
        })
    }

    fn find(&self, name: &str) -> Option<&Placeholder> {
        self.placeholders().find(|p| p.name == name)
    }

    fn check_links(&self) -> Result<()> {
        for p in self.placeholders() {
            if let Some(link) = p.feature("link") {
                match self.find(link) {
                    Some(target) if target.kind == PlaceholderKind::Noun => {}
                    _ => return Err(Error::MalformedTemplate(format!("{}: link to unknown noun {link:?}", p.name))),
                }
            }
        }
        Ok(())
    }

    pub fn render(&self, e: &Engine, data: &Value) -> Result<String> {
        let mut out = String::new();
        let mut nouns: HashMap<&str, (Gender, Animacy, Case, Number)> = HashMap::new();
        for p in self.placeholders().filter(|p| p.kind == PlaceholderKind::Noun) {
            let lemma = word_field(data, &p.name)?;
            let class = e.noun_class(&lemma);
            let case = p.parsed("case")?.unwrap_or(Case::Nominative);
            let number = p.parsed("num")?.unwrap_or(Number::Singular);
            nouns.insert(&p.name, (class.gender, class.animacy, case, number));
        }
        for piece in &self.pieces {
            match piece {
                Piece::Literal(s) => out.push_str(s),
                Piece::Slot(p) => out.push_str(&self.resolve(e, data, p, &nouns)?),
            }
        }
        Ok(out)
    }

    fn resolve(
        &self,
        e: &Engine,
        data: &Value,
        p: &Placeholder,
        nouns: &HashMap<&str, (Gender, Animacy, Case, Number)>,
    ) -> Result<String> {
        let linked = p.feature("link").and_then(|l| nouns.get(l)).copied();
        let case = p.parsed::<Case>("case")?;
        let number = p.parsed::<Number>("num")?;
        let gender = p.parsed::<Gender>("gen")?;
        Ok(match p.kind {
            PlaceholderKind::Text => match lookup(data, &p.name) {
                Some(Value::String(s)) => s.clone(),
                Some(Value::Number(n)) => n.to_string(),
                Some(_) => return Err(bad_field(&p.name, "expected a string")),
                None => return Err(Error::MissingField(p.name.clone())),
            },
            PlaceholderKind::Noun => {
                let (_, _, c, n) = nouns[p.name.as_str()];
                e.inflect_noun(&word_field(data, &p.name)?, c, n)?.into_string()
            }
            PlaceholderKind::Adjective => {
                let lemma = word_field(data, &p.name)?;
                let (lg, la, lc, ln) = linked.unwrap_or((Gender::Masculine, Animacy::Inanimate, Case::Nominative, Number::Singular));
                let target = GenderOrPlural::from_parts(gender.unwrap_or(lg), number.unwrap_or(ln));
                let animacy = p.parsed::<Animacy>("anim")?.unwrap_or(la);
                e.inflect_adjective(&lemma, target, case.unwrap_or(lc), animacy)?.into_string()
            }
            PlaceholderKind::Verb => {
                let lemma = word_field(data, &p.name)?;
                let tense = p.parsed::<Tense>("tense")?.unwrap_or(Tense::Present);
                let (lg, ln) = linked.map(|(g, _, _, n)| (g, n)).unwrap_or((Gender::Masculine, Number::Singular));
                let person = p.parsed::<Person>("pers")?.unwrap_or(Person::Third);
                let number = number.unwrap_or(ln);
                let bundle = match tense {
                    Tense::Past => FeatureBundle::new()
                        .with_tense(tense)
                        .with_agreement(GenderOrPlural::from_parts(gender.unwrap_or(lg), number)),
                    _ => FeatureBundle::new().with_tense(tense).with_person(person).with_number(number),
                };
                e.conjugate(&lemma, &bundle)?
            }
            PlaceholderKind::Number => {
                let n = int_field(data, &p.name)?;
                cardinal(n, case.unwrap_or(Case::Nominative), gender.unwrap_or(Gender::Masculine), Animacy::Inanimate)?
            }
            PlaceholderKind::Ordinal => {
                let n = int_field(data, &p.name)?;
                let target = GenderOrPlural::from_parts(gender.unwrap_or(Gender::Masculine), number.unwrap_or(Number::Singular));
                e.ordinal(n, target, case.unwrap_or(Case::Nominative), Animacy::Inanimate)?
            }
            PlaceholderKind::Quantity | PlaceholderKind::Amount => {
                let n = int_field(data, &p.name)?;
                let noun = normalize(p.feature("noun").unwrap_or_default())?;
                let case = case.unwrap_or(Case::Nominative);
                if p.kind == PlaceholderKind::Amount {
                    e.amount_phrase(n, &noun, case)?
                } else if n < 0 {
                    format!("минус {}", e.quantity_phrase(-n, &noun, case)?)
                } else {
                    e.quantity_phrase(n, &noun, case)?
                }
            }
        })
    }
}

fn bad_field(name: &str, reason: &str) -> Error {
    Error::BadField { field: name.to_string(), reason: reason.to_string() }
}

fn word_field(data: &Value, name: &str) -> Result<CyrillicWord> {
    match lookup(data, name) {
        Some(Value::String(s)) => normalize(s).map_err(|e| bad_field(name, &e.to_string())),
        Some(_) => Err(bad_field(name, "expected a word")),
        None => Err(Error::MissingField(name.to_string())),
    }
}

fn int_field(data: &Value, name: &str) -> Result<i64> {
    match lookup(data, name) {
        Some(Value::Number(n)) => n.as_i64().ok_or_else(|| bad_field(name, "expected an integer")),
        Some(Value::String(s)) => s.trim().parse().map_err(|_| bad_field(name, "expected an integer")),
        Some(_) => Err(bad_field(name, "expected an integer")),
        None => Err(Error::MissingField(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn w(s: &str) -> CyrillicWord {
        normalize(s).unwrap()
    }

    fn e() -> &'static Engine {
        Engine::builtin()
    }

    #[test]
    fn pronouns_round_trip() {
        for p in ["я", "ты", "он", "она", "оно", "мы", "вы", "они"] {
            let (a, b, c) = pronoun_features(p).unwrap();
            assert_eq!(pronoun(a, b, c), p);
        }
        assert_eq!(pronoun_features("стол"), None);
    }

    #[test]
    fn adjective_noun() {
        assert_eq!(e().agree_adjective_noun(&w("красный"), &w("стол"), Case::Nominative, Number::Singular).unwrap(), "красный стол");
        assert_eq!(e().agree_adjective_noun(&w("красный"), &w("книга"), Case::Dative, Number::Singular).unwrap(), "красной книге");
        assert_eq!(e().agree_adjective_noun(&w("красный"), &w("еж"), Case::Accusative, Number::Singular).unwrap(), "красного ежа");
    }

    #[test]
    fn verb_pronoun() {
        let f = e().agree_verb_pronoun(&w("решать"), Person::Third, Number::Singular, Gender::Feminine, Tense::Past);
        assert_eq!(f.unwrap(), "она решала");
        let f = e().agree_verb_pronoun(&w("решать"), Person::First, Number::Plural, Gender::Masculine, Tense::Present);
        assert_eq!(f.unwrap(), "мы решаем");
        let f = e().agree_verb_pronoun(&w("решить"), Person::First, Number::Plural, Gender::Masculine, Tense::Present);
        assert!(matches!(f, Err(Error::NoSuchForm(_))));
    }

    #[test]
    fn quantities() {
        let r = w("рубль");
        assert_eq!(e().quantity_phrase(1, &r, Case::Nominative).unwrap(), "один рубль");
        assert_eq!(e().quantity_phrase(2, &r, Case::Nominative).unwrap(), "два рубля");
        assert_eq!(e().quantity_phrase(5, &r, Case::Nominative).unwrap(), "пять рублей");
        assert_eq!(e().quantity_phrase(12, &r, Case::Nominative).unwrap(), "двенадцать рублей");
        assert_eq!(e().quantity_phrase(5, &r, Case::Dative).unwrap(), "пяти рублям");
        assert_eq!(e().quantity_phrase(21, &w("копейка"), Case::Nominative).unwrap(), "двадцать одна копейка");
    }

    #[test]
    fn formulas() {
        assert_eq!(e().formula_to_text("2+3=5").unwrap(), "два плюс три равно пяти");
        assert_eq!(e().formula_to_text("7").unwrap(), "семь");
        assert!(matches!(e().formula_to_text("2+*3"), Err(Error::MalformedExpression(_))));
        assert!(matches!(e().formula_to_text("2+10000"), Err(Error::Range(_))));
        assert_eq!(
            e().formula_to_text("(1+2)×3").unwrap(),
            "открыть скобку один плюс два закрыть скобку умножить на три"
        );
    }

    #[test]
    fn reports() {
        let t: Template = "Завтра {temp:quantity|noun=градус}.".parse().unwrap();
        assert_eq!(e().render_report(&t, &json!({"temp": -3})).unwrap(), "Завтра минус три градуса.");
        let t: Template = "Курс: {rub:amount|noun=рубль} {kop:amount|noun=копейка}".parse().unwrap();
        assert_eq!(
            e().render_report(&t, &json!({"rub": 72, "kop": 51})).unwrap(),
            "Курс: 72 рубля 51 копейка"
        );
        let t: Template = "без подстановок".parse().unwrap();
        assert_eq!(e().render_report(&t, &json!({})).unwrap(), "без подстановок");
        let t: Template = "{a:adj|link=n} {n:noun|case=dat} {v:verb|tense=past,link=n}".parse().unwrap();
        let out = e().render_report(&t, &json!({"a": "новый", "n": "книга", "v": "выйти"})).unwrap();
        assert_eq!(out, "новой книге вышла");
        let missing = e().render_report(&t, &json!({"a": "новый", "n": "книга"}));
        assert!(matches!(missing, Err(Error::MissingField(_))));
        let bad = e().render_report(&t, &json!({"a": 3, "n": "книга", "v": "выйти"}));
        assert!(matches!(bad, Err(Error::BadField { .. })));
        assert!("{x:adj|link=y}".parse::<Template>().is_err());
        assert!("{x".parse::<Template>().is_err());
    }
}
