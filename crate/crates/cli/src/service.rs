//! JSON-over-HTTP service.
//!
//! Every single-word operation is a GET endpoint under `/v1/` taking its
//! parameters from the query string. Responses are `{"result": …}` or
//! `{"error": {"code", "message"}}`.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Query, Request, State};
use axum::http::StatusCode;
use axum::middleware::{self, Next};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use rumorph::{Engine, Pos};
use rumorph_eval::{errata_filter, evaluate_pos, Errata, IngestOptions, Lexicon, Sample};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::api::{self, ApiError, Op, Params};

pub const ENV_ADDR: &str = "RUMORPH_ADDR";
pub const ENV_PORT: &str = "RUMORPH_PORT";
pub const ENV_CORPUS: &str = "RUMORPH_CORPUS";
pub const ENV_TABLES: &str = "RUMORPH_TABLES";
pub const ENV_LOG: &str = "RUMORPH_LOG";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceConfig {
    pub addr: IpAddr,
    pub port: u16,
    /// OpenCorpora dictionary; enables `/v1/evaluate`.
    pub corpus: Option<PathBuf>,
    /// Exception tables overriding the builtin ones.
    pub tables: Option<PathBuf>,
    /// Request log, appended to.
    pub log: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig { addr: IpAddr::from([127, 0, 0, 1]), port: 8080, corpus: None, tables: None, log: None }
    }
}

/// Values from the command line; they win over both the file and the
/// environment.
#[derive(Debug, Clone, Default)]
pub struct ConfigOverrides {
    pub addr: Option<String>,
    pub port: Option<u16>,
    pub corpus: Option<PathBuf>,
    pub tables: Option<PathBuf>,
    pub log: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    addr: Option<String>,
    port: Option<i64>,
    corpus: Option<PathBuf>,
    tables: Option<PathBuf>,
    log: Option<PathBuf>,
}

/// The `RUMORPH_*` variables of the process environment.
pub fn env_vars() -> BTreeMap<String, String> {
    std::env::vars().filter(|(k, _)| k.starts_with("RUMORPH_")).collect()
}

/// Builds the configuration from defaults, then `env`, then the TOML file
/// at `file`, then `overrides`, and validates it.
pub fn resolve_config(
    file: Option<&Path>,
    env: &BTreeMap<String, String>,
    overrides: ConfigOverrides,
) -> Result<ServiceConfig, String> {
    let mut c = ServiceConfig::default();
    let mut port: i64 = c.port.into();
    let mut addr = c.addr.to_string();

    if let Some(v) = env.get(ENV_ADDR) {
        addr = v.clone();
    }
    if let Some(v) = env.get(ENV_PORT) {
        port = v.trim().parse().map_err(|_| format!("{ENV_PORT}: invalid port {v:?}"))?;
    }
    if let Some(v) = env.get(ENV_CORPUS) {
        c.corpus = Some(v.into());
    }
    if let Some(v) = env.get(ENV_TABLES) {
        c.tables = Some(v.into());
    }
    if let Some(v) = env.get(ENV_LOG) {
        c.log = Some(v.into());
    }

    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let f: FileConfig = toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        addr = f.addr.unwrap_or(addr);
        port = f.port.unwrap_or(port);
        c.corpus = f.corpus.or(c.corpus);
        c.tables = f.tables.or(c.tables);
        c.log = f.log.or(c.log);
    }

    addr = overrides.addr.unwrap_or(addr);
    port = overrides.port.map_or(port, i64::from);
    c.corpus = overrides.corpus.or(c.corpus);
    c.tables = overrides.tables.or(c.tables);
    c.log = overrides.log.or(c.log);

    c.addr = addr.parse().map_err(|_| format!("invalid listen address {addr:?}"))?;
    c.port = u16::try_from(port)
        .ok()
        .filter(|&p| p > 0)
        .ok_or_else(|| format!("port {port} outside 1..=65535"))?;
    for (what, path) in [("corpus", &c.corpus), ("tables", &c.tables)] {
        if let Some(p) = path {
            if !p.exists() {
                return Err(format!("{what} path {} does not exist", p.display()));
            }
        }
    }
    if let Some(log) = &c.log {
        let dir = log.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        if !dir.is_dir() {
            return Err(format!("log directory {} does not exist", dir.display()));
        }
    }
    Ok(c)
}

/// Shared, immutable request state.
pub struct AppState {
    pub engine: Engine,
    pub lexicon: Option<Lexicon>,
    log: Option<Mutex<File>>,
}

impl AppState {
    pub fn new(engine: Engine, lexicon: Option<Lexicon>) -> Self {
        AppState { engine, lexicon, log: None }
    }

    pub fn with_log(mut self, file: File) -> Self {
        self.log = Some(Mutex::new(file));
        self
    }

    /// Loads the tables, corpus and log named by `config`.
    pub fn from_config(config: &ServiceConfig) -> Result<Self, String> {
        let engine = match &config.tables {
            Some(dir) => Engine::load_dir(dir).map_err(|e| e.to_string())?,
            None => Engine::builtin().clone(),
        };
        let lexicon = config
            .corpus
            .as_deref()
            .map(|p| Lexicon::open(p, &IngestOptions::default()))
            .transpose()
            .map_err(|e| e.to_string())?;
        let mut state = AppState::new(engine, lexicon);
        if let Some(path) = &config.log {
            let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| e.to_string())?;
            state = state.with_log(file);
        }
        Ok(state)
    }
}

fn status(code: u16) -> StatusCode {
    StatusCode::from_u16(code).unwrap_or(StatusCode::BAD_REQUEST)
}

fn reply(result: Result<Value, ApiError>) -> Response {
    match result {
        Ok(v) => (StatusCode::OK, Json(json!({ "result": v }))).into_response(),
        Err(e) => (status(e.status), Json(e.to_json())).into_response(),
    }
}

async fn single(state: Arc<AppState>, op: Op, query: Result<Query<Params>, QueryRejection>) -> Response {
    match query {
        Ok(Query(params)) => reply(api::execute(&state.engine, op, &params)),
        Err(e) => reply(Err(ApiError::usage("bad-param", e.body_text()))),
    }
}

async fn batch(State(state): State<Arc<AppState>>, body: Result<Json<Value>, JsonRejection>) -> Response {
    let items = match body {
        Ok(Json(Value::Array(items))) => items,
        Ok(_) => return reply(Err(ApiError::usage("bad-param", "batch body must be a JSON array"))),
        Err(e) => return reply(Err(ApiError::usage("bad-param", e.body_text()))),
    };
    Json(Value::Array(api::execute_batch(&state.engine, &items))).into_response()
}

async fn health(State(state): State<Arc<AppState>>) -> Response {
    Json(json!({
        "name": "rumorph",
        "version": env!("CARGO_PKG_VERSION"),
        "engine": rumorph::VERSION,
        "corpus": state.lexicon.as_ref().map(|l| l.len()),
    }))
    .into_response()
}

#[derive(Debug, Deserialize)]
struct EvaluateQuery {
    pos: String,
    sample: Option<usize>,
    #[serde(default)]
    seed: u64,
    #[serde(default)]
    errata: bool,
}

async fn evaluate(State(state): State<Arc<AppState>>, query: Result<Query<EvaluateQuery>, QueryRejection>) -> Response {
    if state.lexicon.is_none() {
        return reply(Err(ApiError { status: 404, code: "no-corpus".into(), message: "no corpus configured".into() }));
    }
    let q = match query {
        Ok(Query(q)) => q,
        Err(e) => return reply(Err(ApiError::usage("bad-param", e.body_text()))),
    };
    let Ok(pos) = q.pos.parse::<Pos>() else {
        return reply(Err(ApiError::usage("bad-param", format!("unknown part of speech {:?}", q.pos))));
    };
    let spec = q.sample.map_or(Sample::All, |size| Sample::Random { size, seed: q.seed });
    let state = state.clone();
    let task = tokio::task::spawn_blocking(move || {
        let lexicon = state.lexicon.as_ref().expect("checked above");
        evaluate_pos(&state.engine, lexicon, pos, spec).map(|r| {
            if q.errata {
                errata_filter(&r, &Errata::builtin())
            } else {
                r
            }
        })
    });
    match task.await {
        Ok(Ok(r)) => reply(Ok(json!({
            "pos": r.pos.tag(),
            "words": r.words,
            "forms_compared": r.forms_compared,
            "matches": r.matches,
            "rate": r.rate,
            "per_word_ms": r.per_word_ms,
        }))),
        Ok(Err(e)) => reply(Err(ApiError::usage("bad-param", e.to_string()))),
        Err(e) => reply(Err(ApiError { status: 500, code: "internal".into(), message: e.to_string() })),
    }
}

async fn log_requests(State(state): State<Arc<AppState>>, req: Request, next: Next) -> Response {
    let Some(log) = &state.log else {
        return next.run(req).await;
    };
    let method = req.method().clone();
    let uri = req.uri().clone();
    let start = Instant::now();
    let response = next.run(req).await;
    let ts = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    let line = format!(
        "{ts}\t{method}\t{uri}\t{}\t{:.3}ms\n",
        response.status().as_u16(),
        start.elapsed().as_secs_f64() * 1e3
    );
    if let Ok(mut f) = log.lock() {
        let _ = f.write_all(line.as_bytes());
    }
    response
}

/// The service routes over `state`.
pub fn router(state: Arc<AppState>) -> Router {
    let mut router = Router::new();
    for op in Op::ALL {
        let s = state.clone();
        router = router.route(&format!("/v1/{}", op.name()), get(move |q| single(s, op, q)));
    }
    router
        .route("/v1/batch", post(batch))
        .route("/v1/health", get(health))
        .route("/v1/evaluate", get(evaluate))
        .layer(middleware::from_fn_with_state(state.clone(), log_requests))
        .with_state(state)
}

/// Serves until the process is terminated.
pub fn serve(config: ServiceConfig) -> Result<(), String> {
    let state = Arc::new(AppState::from_config(&config)?);
    let runtime = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(SocketAddr::new(config.addr, config.port))
            .await
            .map_err(|e| e.to_string())?;
        eprintln!("rumorph: listening on http://{}", listener.local_addr().map_err(|e| e.to_string())?);
        axum::serve(listener, router(state)).await.map_err(|e| e.to_string())
    })
}
