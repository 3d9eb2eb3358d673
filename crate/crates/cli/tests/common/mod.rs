//! Request corpus and helpers shared by the integration tests.
#![allow(dead_code)]

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tower::ServiceExt;

/// One equivalent request in both shapes.
#[derive(Debug, Clone)]
pub struct Case {
    pub argv: Vec<String>,
    pub path: String,
    pub query: Vec<(String, String)>,
}

impl Case {
    pub fn uri(&self) -> String {
        let q: Vec<String> = self
            .query
            .iter()
            .map(|(k, v)| format!("{k}={}", urlencode(v)))
            .collect();
        format!("{}?{}", self.path, q.join("&"))
    }
}

fn urlencode(s: &str) -> String {
    s.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'_' | b'.' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}

fn pick<'a>(rng: &mut ChaCha8Rng, items: &[&'a str]) -> &'a str {
    items.choose(rng).unwrap()
}

/// Builds a case from CLI words and flags; the HTTP side gets the same
/// values under the parameter names of the endpoint.
fn case(path: &str, argv: &[&str], positional: &[(&str, &str)], flags: &[(&str, &str)]) -> Case {
    let mut a: Vec<String> = std::iter::once("--json").chain(argv.iter().copied()).map(String::from).collect();
    a.extend(positional.iter().map(|(_, v)| v.to_string()));
    let mut query: Vec<(String, String)> = positional.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    for (k, v) in flags {
        a.push(format!("--{k}"));
        a.push(v.to_string());
        query.push((k.to_string(), v.to_string()));
    }
    Case { argv: a, path: format!("/v1/{path}"), query }
}

/// `n` pseudo-random requests over every single-word operation, including
/// some that fail.
pub fn request_corpus(n: usize, seed: u64) -> Vec<Case> {
    const NOUNS: &[&str] = &["стол", "книга", "окно", "день", "кофе", "время", "армия", "ночь", "мама", "столовая"];
    const ADJS: &[&str] = &["новый", "синий", "большой", "хороший", "беж", "третий"];
    const VERBS: &[&str] = &["решать", "решить", "читать", "писать", "любить", "идти", "дать", "мочь"];
    const CASES: &[&str] = &["nom", "gen", "dat", "acc", "ins", "prep"];
    const NUMBERS: &[&str] = &["sg", "pl"];
    const GENDERS: &[&str] = &["m", "f", "n"];
    const TENSES: &[&str] = &["past", "pres", "fut"];
    const PERSONS: &[&str] = &["1", "2", "3"];
    const KINDS: &[&str] = &["pres-act", "past-act", "past-pass"];
    const PRONOUNS: &[&str] = &["я", "ты", "он", "она", "оно", "мы", "вы", "они"];
    const FORMULAS: &[&str] = &["2 + 2 = 4", "10 - 3 = 7", "5 * 6 = 30", "1 + 1", "(2 + 3) * 4 = 20"];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let r = &mut rng;
            match i % 12 {
                0 => case("noun", &["inflect", "noun"], &[("word", pick(r, NOUNS))], &[("case", pick(r, CASES)), ("number", pick(r, NUMBERS))]),
                1 => case("adjective", &["inflect", "adj"], &[("word", pick(r, ADJS))], &[("case", pick(r, CASES)), ("gender", pick(r, GENDERS)), ("number", pick(r, NUMBERS))]),
                2 => case("verb", &["inflect", "verb"], &[("word", pick(r, VERBS))], &[("tense", pick(r, TENSES)), ("person", pick(r, PERSONS)), ("number", pick(r, NUMBERS))]),
                3 => case("participle", &["inflect", "participle"], &[("word", pick(r, VERBS))], &[("kind", pick(r, KINDS)), ("case", pick(r, CASES)), ("gender", pick(r, GENDERS))]),
                4 => case("gerund", &["gerund"], &[("word", pick(r, VERBS))], &[("aspect", pick(r, &["perf", "impf"]))]),
                5 => case("imperative", &["imperative"], &[("word", pick(r, VERBS))], &[("number", pick(r, NUMBERS))]),
                6 => {
                    let n = r.gen_range(0..3000).to_string();
                    case("cardinal", &["number", "cardinal"], &[("n", &n)], &[("case", pick(r, CASES)), ("gender", pick(r, GENDERS))])
                }
                7 => {
                    let n = r.gen_range(1..3000).to_string();
                    case("ordinal", &["number", "ordinal"], &[("n", &n)], &[("case", pick(r, CASES)), ("gender", pick(r, GENDERS))])
                }
                8 => case("agree/adj-noun", &["agree", "adj-noun"], &[("adj", pick(r, ADJS)), ("noun", pick(r, NOUNS))], &[("case", pick(r, CASES)), ("number", pick(r, NUMBERS))]),
                9 => case("agree/verb-pronoun", &["agree", "verb-pronoun"], &[("verb", pick(r, VERBS)), ("pronoun", pick(r, PRONOUNS))], &[("tense", pick(r, TENSES))]),
                10 => case("formula", &["formula"], &[("expr", pick(r, FORMULAS))], &[]),
                _ => case("paradigm", &["paradigm"], &[("pos", pick(r, &["noun", "adj", "verb"])), ("word", pick(r, NOUNS))], &[]),
            }
        })
        .collect()
}

/// CLI run: exit code and standard output.
pub fn cli(argv: &[String]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = rumorph_cli::run_cli(std::iter::once("rumorph".to_string()).chain(argv.iter().cloned()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

pub fn app() -> axum::Router {
    let state = rumorph_cli::AppState::new(rumorph::Engine::builtin().clone(), None);
    rumorph_cli::router(std::sync::Arc::new(state))
}

/// One in-process HTTP exchange: status and body.
pub async fn http(app: &axum::Router, req: Request<Body>) -> (StatusCode, String) {
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

pub async fn get(app: &axum::Router, uri: &str) -> (StatusCode, String) {
    http(app, Request::get(uri).body(Body::empty()).unwrap()).await
}

pub async fn post_json(app: &axum::Router, uri: &str, body: &str) -> (StatusCode, String) {
    let req = Request::post(uri).header("content-type", "application/json").body(Body::from(body.to_string())).unwrap();
    http(app, req).await
}
