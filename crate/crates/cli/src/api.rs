//! Single-word operations shared by the command line and the HTTP service.
//!
//! Both front ends turn their input into an [`Op`] and a flat parameter
//! map, so equivalent requests produce identical results.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rumorph::{
    normalize, pronoun_features, Animacy, Aspect, Case, CyrillicWord, Engine, FeatureBundle, Gender,
    GenderOrPlural, Number, ParticipleKind, Person, Pos, Tense,
};
use serde::Serialize;
use serde_json::{json, Value};

pub type Params = BTreeMap<String, String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Noun,
    Adjective,
    Verb,
    Participle,
    Gerund,
    Imperative,
    Cardinal,
    Ordinal,
    AgreeAdjNoun,
    AgreeVerbPronoun,
    Formula,
    Paradigm,
}

impl Op {
    pub const ALL: [Op; 12] = [
        Op::Noun,
        Op::Adjective,
        Op::Verb,
        Op::Participle,
        Op::Gerund,
        Op::Imperative,
        Op::Cardinal,
        Op::Ordinal,
        Op::AgreeAdjNoun,
        Op::AgreeVerbPronoun,
        Op::Formula,
        Op::Paradigm,
    ];

    /// Name used in batch requests and the URL path after `/v1/`.
    pub fn name(self) -> &'static str {
        match self {
            Op::Noun => "noun",
            Op::Adjective => "adjective",
            Op::Verb => "verb",
            Op::Participle => "participle",
            Op::Gerund => "gerund",
            Op::Imperative => "imperative",
            Op::Cardinal => "cardinal",
            Op::Ordinal => "ordinal",
            Op::AgreeAdjNoun => "agree/adj-noun",
            Op::AgreeVerbPronoun => "agree/verb-pronoun",
            Op::Formula => "formula",
            Op::Paradigm => "paradigm",
        }
    }
}

impl FromStr for Op {
    type Err = ApiError;

    fn from_str(s: &str) -> Result<Self, ApiError> {
        let s = match s {
            "adj" => "adjective",
            "adj-noun" => "agree/adj-noun",
            "verb-pronoun" => "agree/verb-pronoun",
            other => other,
        };
        Op::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| ApiError::usage("unknown-op", format!("unknown operation {s:?}")))
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: u16,
    pub code: String,
    pub message: String,
}

impl ApiError {
    /// A malformed request: HTTP 400, CLI exit code 1.
    pub fn usage(code: &str, message: impl Into<String>) -> Self {
        ApiError { status: 400, code: code.to_string(), message: message.into() }
    }

    /// True when the request itself was malformed rather than the data.
    pub fn is_usage(&self) -> bool {
        matches!(self.code.as_str(), "unknown-op" | "missing-param" | "bad-param")
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

impl From<rumorph::Error> for ApiError {
    fn from(e: rumorph::Error) -> Self {
        let status = if matches!(e, rumorph::Error::NoSuchForm(_)) { 422 } else { 400 };
        ApiError { status, code: e.code().to_string(), message: e.to_string() }
    }
}

impl fmt::Display for ApiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

struct Args<'a>(&'a Params);

impl Args<'_> {
    fn raw(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(|s| s.trim()).filter(|s| !s.is_empty())
    }

    fn required(&self, key: &str) -> Result<&str, ApiError> {
        self.raw(key)
            .ok_or_else(|| ApiError::usage("missing-param", format!("missing parameter {key:?}")))
    }

    fn parse<T: FromStr>(&self, key: &str) -> Result<Option<T>, ApiError> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| ApiError::usage("bad-param", format!("invalid value {v:?} for {key:?}"))),
        }
    }

    fn word(&self, key: &str) -> Result<CyrillicWord, ApiError> {
        Ok(normalize(self.required(key)?)?)
    }

    fn integer(&self, key: &str) -> Result<i64, ApiError> {
        let raw = self.required(key)?;
        raw.parse()
            .map_err(|_| ApiError::usage("bad-param", format!("invalid integer {raw:?} for {key:?}")))
    }

    fn case(&self) -> Result<Option<Case>, ApiError> {
        self.parse("case")
    }

    fn number(&self) -> Result<Option<Number>, ApiError> {
        self.parse("number")
    }

    fn animacy(&self) -> Result<Animacy, ApiError> {
        Ok(self.parse("animacy")?.unwrap_or(Animacy::Inanimate))
    }

    /// Gender-or-plural target from `gender` and `number`.
    fn target(&self) -> Result<GenderOrPlural, ApiError> {
        let gender = self.parse("gender")?.unwrap_or(Gender::Masculine);
        let number = self.number()?.unwrap_or(Number::Singular);
        Ok(GenderOrPlural::from_parts(gender, number))
    }
}

fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}

/// Runs one operation.
pub fn execute(engine: &Engine, op: Op, params: &Params) -> Result<Value, ApiError> {
    let a = Args(params);
    match op {
        Op::Noun => {
            let w = a.word("word")?;
            let case = a.case()?.unwrap_or(Case::Nominative);
            let number = a.number()?.unwrap_or(Number::Singular);
            Ok(text(engine.inflect_noun(&w, case, number)?.into_string()))
        }
        Op::Adjective => {
            let w = a.word("word")?;
            let target = a.target()?;
            match a.case()? {
                Some(case) => Ok(text(engine.inflect_adjective(&w, target, case, a.animacy()?)?.into_string())),
                None => Ok(text(engine.short_adjective(&w, target)?.into_string())),
            }
        }
        Op::Verb => {
            let w = a.word("word")?;
            let mut b = FeatureBundle::new();
            if let Some(t) = a.parse::<Tense>("tense")? {
                b = b.with_tense(t);
            }
            if let Some(p) = a.parse::<Person>("person")? {
                b = b.with_person(p);
            }
            if let Some(n) = a.number()? {
                b = b.with_number(n);
            }
            if let Some(g) = a.parse::<Gender>("gender")? {
                b = match b.tense {
                    Some(Tense::Past) => b.with_agreement(GenderOrPlural::from_parts(g, b.number.unwrap_or(Number::Singular))),
                    _ => b.with_gender(g),
                };
            }
            Ok(text(engine.conjugate(&w, &b)?))
        }
        Op::Participle => {
            let w = a.word("word")?;
            let kind: ParticipleKind = a
                .parse("kind")?
                .ok_or_else(|| ApiError::usage("missing-param", "missing parameter \"kind\""))?;
            let form = engine.participle(&w, kind, a.target()?, a.case()?, a.animacy()?)?;
            Ok(text(form.into_string()))
        }
        Op::Gerund => {
            let w = a.word("word")?;
            let form = match a.parse("aspect")?.unwrap_or(Aspect::Perfective) {
                Aspect::Imperfective => engine.imperfective_gerund(&w)?,
                _ => engine.perfective_gerund(&w)?,
            };
            Ok(text(form.into_string()))
        }
        Op::Imperative => {
            let w = a.word("word")?;
            Ok(text(engine.imperative(&w, a.number()?.unwrap_or(Number::Singular))?.into_string()))
        }
        Op::Cardinal => {
            let n = a.integer("n")?;
            let case = a.case()?.unwrap_or(Case::Nominative);
            let gender = a.parse("gender")?.unwrap_or(Gender::Masculine);
            Ok(text(engine.cardinal(n, case, gender, a.animacy()?)?))
        }
        Op::Ordinal => {
            let n = a.integer("n")?;
            let case = a.case()?.unwrap_or(Case::Nominative);
            Ok(text(engine.ordinal(n, a.target()?, case, a.animacy()?)?))
        }
        Op::AgreeAdjNoun => {
            let adj = a.word("adj")?;
            let noun = a.word("noun")?;
            let case = a.case()?.unwrap_or(Case::Nominative);
            let number = a.number()?.unwrap_or(Number::Singular);
            Ok(text(engine.agree_adjective_noun(&adj, &noun, case, number)?))
        }
        Op::AgreeVerbPronoun => {
            let verb = a.word("verb")?;
            let raw = a.word("pronoun")?;
            let (person, number, gender) = pronoun_features(&raw)
                .ok_or_else(|| ApiError::usage("bad-param", format!("{:?} is not a personal pronoun", raw.as_str())))?;
            let gender = a.parse("gender")?.unwrap_or(gender);
            let tense = a.parse("tense")?.unwrap_or(Tense::Present);
            Ok(text(engine.agree_verb_pronoun(&verb, person, number, gender, tense)?))
        }
        Op::Formula => Ok(text(engine.formula_to_text(a.required("expr")?)?)),
        Op::Paradigm => {
            let pos: Pos = a
                .parse("pos")?
                .ok_or_else(|| ApiError::usage("missing-param", "missing parameter \"pos\""))?;
            let p = engine.paradigm(pos, a.required("word")?)?;
            Ok(paradigm_json(&p))
        }
    }
}

/// Paradigm as `{lemma, pos, slots: [{slot, form}]}` with canonical slot
/// strings.
pub fn paradigm_json(p: &rumorph::Paradigm) -> Value {
    let slots: Vec<Value> = p
        .slots
        .iter()
        .map(|s| json!({ "slot": s.bundle.to_string(), "form": s.form }))
        .collect();
    json!({ "lemma": p.lemma, "pos": p.pos.tag(), "slots": slots })
}

/// The text the command line prints for a result: strings as they are,
/// anything else as compact JSON.
pub fn render_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens a JSON object into parameters; the `op` field names the
/// operation.
pub fn batch_item(item: &Value) -> Result<(Op, Params), ApiError> {
    let obj = item
        .as_object()
        .ok_or_else(|| ApiError::usage("bad-param", "batch items must be JSON objects"))?;
    let mut params = Params::new();
    let mut op = None;
    for (k, v) in obj {
        let value = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            _ => return Err(ApiError::usage("bad-param", format!("parameter {k:?} must be a scalar"))),
        };
        if k == "op" {
            op = Some(value.parse::<Op>()?);
        } else {
            params.insert(k.clone(), value);
        }
    }
    let op = op.ok_or_else(|| ApiError::usage("missing-param", "batch item without \"op\""))?;
    Ok((op, params))
}

/// Runs a batch; results align with the items.
pub fn execute_batch(engine: &Engine, items: &[Value]) -> Vec<Value> {
    items
        .iter()
        .map(|item| {
            match batch_item(item).and_then(|(op, params)| execute(engine, op, &params)) {
                Ok(v) => json!({ "result": v }),
                Err(e) => e.to_json(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(op: Op, kv: &[(&str, &str)]) -> Result<Value, ApiError> {
        let params = kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        execute(Engine::builtin(), op, &params)
    }

    #[test]
    fn reference_answers() {
        assert_eq!(run(Op::Noun, &[("word", "стол"), ("case", "gen"), ("number", "sg")]).unwrap(), "стола");
        assert_eq!(run(Op::Gerund, &[("word", "решать"), ("aspect", "perf")]).unwrap(), "решав");
        assert_eq!(run(Op::Cardinal, &[("n", "5"), ("case", "nom")]).unwrap(), "пять");
        assert_eq!(run(Op::AgreeVerbPronoun, &[("verb", "решать"), ("pronoun", "она"), ("tense", "past")]).unwrap(), "она решала");
    }

    #[test]
    fn perfective_present_is_unprocessable() {
        let e = run(Op::Verb, &[("word", "решить"), ("tense", "present"), ("person", "1"), ("number", "sg")]).unwrap_err();
        assert_eq!(e.status, 422);
        assert_eq!(e.code, "no-such-form");
    }

    #[test]
    fn bad_parameters() {
        let e = run(Op::Noun, &[("word", "стол"), ("case", "xx")]).unwrap_err();
        assert_eq!((e.status, e.is_usage()), (400, true));
        let e = run(Op::Noun, &[]).unwrap_err();
        assert_eq!(e.code, "missing-param");
        let e = run(Op::Noun, &[("word", "table")]).unwrap_err();
        assert_eq!((e.status, e.is_usage()), (400, false));
    }

    #[test]
    fn batch_aligns() {
        let items = vec![
            json!({"op": "noun", "word": "книга", "case": "gen", "number": "pl"}),
            json!({"op": "cardinal", "n": 21, "gender": "f"}),
            json!({"op": "nope"}),
        ];
        let out = execute_batch(Engine::builtin(), &items);
        assert_eq!(out.len(), 3);
        assert_eq!(out[0]["result"], "книг");
        assert_eq!(out[1]["result"], "двадцать одна");
        assert_eq!(out[2]["error"]["code"], "unknown-op");
    }
}
