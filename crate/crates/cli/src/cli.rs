//! The `rumorph` command line.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rumorph::{Engine, Pos, Template};
use rumorph_eval::{errata_filter, evaluate_pos, variability_curve, Errata, IngestOptions, Lexicon, Sample};
use serde_json::{json, Value};

use crate::api::{self, ApiError, Op, Params};
use crate::service::{self, ConfigOverrides};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage errors: bad subcommands, flags or parameter values.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for data errors: words the engine rejects, unreadable files.
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rumorph", version, about = "Rule-based Russian inflection and text synthesis")]
struct Cli {
    /// Directory of exception tables overriding the builtin ones.
    #[arg(long, global = true, value_name = "DIR")]
    tables: Option<PathBuf>,
    /// Print results as the JSON bodies the HTTP service returns.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inflect a noun, adjective, verb or participle.
    Inflect {
        #[arg(value_enum)]
        pos: InflectPos,
        lemma: String,
        #[command(flatten)]
        features: Features,
    },
    /// Gerund of a verb.
    Gerund {
        verb: String,
        #[arg(long)]
        aspect: Option<String>,
    },
    /// Imperative of a verb.
    Imperative {
        verb: String,
        #[arg(long)]
        number: Option<String>,
    },
    /// Cardinal or ordinal numeral in words.
    Number {
        #[arg(value_enum, value_name = "KIND")]
        which: NumberKind,
        #[arg(allow_negative_numbers = true)]
        n: String,
        #[command(flatten)]
        features: Features,
    },
    /// Agreed word pairs.
    Agree {
        #[command(subcommand)]
        pair: AgreePair,
    },
    /// Spell out an arithmetic formula.
    Formula { expr: String },
    /// Fill a report template from a JSON data file.
    Report { template: PathBuf, data: PathBuf },
    /// Full paradigm of a lemma as JSON.
    Paradigm { pos: String, lemma: String },
    /// Agreement rate against an OpenCorpora dictionary.
    Evaluate {
        corpus: PathBuf,
        #[command(flatten)]
        pos: PosList,
        /// Random sample size per part of speech; all lexemes when absent.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lemma list of known dictionary errors to discount.
        #[arg(long)]
        errata: Option<PathBuf>,
        /// Write the mismatches as CSV.
        #[arg(long, value_name = "CSV")]
        discrepancies: Option<PathBuf>,
    },
    /// Variability curve over the lemmas of an OpenCorpora dictionary.
    Variability {
        corpus: PathBuf,
        #[command(flatten)]
        pos: PosList,
        #[arg(long, value_name = "CSV")]
        out: PathBuf,
    },
    /// Run the HTTP service.
    Serve {
        /// TOML configuration file; its values win over the environment.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        addr: Option<String>,
        #[arg(long)]
        port: Option<u16>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InflectPos {
    Noun,
    Adj,
    Verb,
    Participle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NumberKind {
    Cardinal,
    Ordinal,
}

#[derive(Debug, Subcommand)]
enum AgreePair {
    /// Adjective agreeing with a noun.
    AdjNoun {
        adj: String,
        noun: String,
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        number: Option<String>,
    },
    /// Verb agreeing with a personal pronoun.
    VerbPronoun {
        verb: String,
        pronoun: String,
        #[arg(long)]
        tense: Option<String>,
        #[arg(long)]
        gender: Option<String>,
    },
}

/// Grammatical flags; their values are checked by the operation.
#[derive(Debug, Default, Args)]
struct Features {
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    number: Option<String>,
    #[arg(long)]
    gender: Option<String>,
    #[arg(long)]
    animacy: Option<String>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    tense: Option<String>,
    #[arg(long)]
    person: Option<String>,
}

#[derive(Debug, Args)]
struct PosList {
    /// Parts of speech, repeated or comma separated.
    #[arg(long, required = true, value_delimiter = ',')]
    pos: Vec<String>,
}

impl PosList {
    fn parse(&self) -> Result<Vec<Pos>, Failure> {
        self.pos
            .iter()
            .map(|p| p.parse::<Pos>().map_err(|_| Failure::usage(format!("unknown part of speech {p:?}"))))
            .collect()
    }
}

fn params(pairs: &[(&str, &Option<String>)]) -> Params {
    pairs
        .iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
        .collect()
}

impl Features {
    fn params(&self) -> Params {
        params(&[
            ("case", &self.case),
            ("number", &self.number),
            ("gender", &self.gender),
            ("animacy", &self.animacy),
            ("kind", &self.kind),
            ("tense", &self.tense),
            ("person", &self.person),
        ])
    }
}

/// The single-word request a subcommand stands for, if it is one.
fn request(command: &Command) -> Option<(Op, Params)> {
    let with = |mut p: Params, k: &str, v: &str| {
        p.insert(k.to_string(), v.to_string());
        p
    };
    Some(match command {
        Command::Inflect { pos, lemma, features } => {
            let op = match pos {
                InflectPos::Noun => Op::Noun,
                InflectPos::Adj => Op::Adjective,
                InflectPos::Verb => Op::Verb,
                InflectPos::Participle => Op::Participle,
            };
            (op, with(features.params(), "word", lemma))
        }
        Command::Gerund { verb, aspect } => (Op::Gerund, with(params(&[("aspect", aspect)]), "word", verb)),
        Command::Imperative { verb, number } => {
            (Op::Imperative, with(params(&[("number", number)]), "word", verb))
        }
        Command::Number { which, n, features } => {
            let op = match which {
                NumberKind::Cardinal => Op::Cardinal,
                NumberKind::Ordinal => Op::Ordinal,
            };
            (op, with(features.params(), "n", n))
        }
        Command::Agree { pair: AgreePair::AdjNoun { adj, noun, case, number } } => {
            let p = params(&[("case", case), ("number", number)]);
            (Op::AgreeAdjNoun, with(with(p, "adj", adj), "noun", noun))
        }
        Command::Agree { pair: AgreePair::VerbPronoun { verb, pronoun, tense, gender } } => {
            let p = params(&[("tense", tense), ("gender", gender)]);
            (Op::AgreeVerbPronoun, with(with(p, "verb", verb), "pronoun", pronoun))
        }
        Command::Formula { expr } => (Op::Formula, with(Params::new(), "expr", expr)),
        Command::Paradigm { pos, lemma } => (Op::Paradigm, with(with(Params::new(), "pos", pos), "word", lemma)),
        _ => return None,
    })
}

/// A failed command: message and exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn data(message: impl ToString) -> Self {
        Failure { code: EXIT_DATA, message: message.to_string() }
    }
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        let code = if e.is_usage() { EXIT_USAGE } else { EXIT_DATA };
        Failure { code, message: e.to_string() }
    }
}

impl From<rumorph_eval::Error> for Failure {
    fn from(e: rumorph_eval::Error) -> Self {
        Failure::data(e)
    }
}

impl From<rumorph::Error> for Failure {
    fn from(e: rumorph::Error) -> Self {
        Failure::data(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::data(e)
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match run(cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "rumorph: {}", f.message);
            f.code
        }
    }
}

fn engine(tables: Option<&Path>) -> Result<Engine, Failure> {
    match tables {
        Some(dir) => Engine::load_dir(dir).map_err(Failure::data),
        None => Ok(Engine::builtin().clone()),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if let Command::Serve { config, addr, port, corpus, log } = cli.command {
        let overrides = ConfigOverrides { addr, port, corpus, tables: cli.tables, log };
        let config = service::resolve_config(config.as_deref(), &service::env_vars(), overrides)
            .map_err(Failure::usage)?;
        return service::serve(config).map_err(Failure::data);
    }
    let engine = engine(cli.tables.as_deref())?;
    if let Some((op, params)) = request(&cli.command) {
        let result = api::execute(&engine, op, &params);
        if cli.json {
            let body = match &result {
                Ok(v) => json!({ "result": v }),
                Err(e) => e.to_json(),
            };
            writeln!(out, "{body}")?;
        }
        let value = result?;
        if !cli.json {
            writeln!(out, "{}", api::render_text(&value))?;
        }
        return Ok(());
    }
    match cli.command {
        Command::Report { template, data } => {
            let template: Template = std::fs::read_to_string(&template)?.parse()?;
            let data: Value = serde_json::from_slice(&std::fs::read(&data)?).map_err(Failure::data)?;
            writeln!(out, "{}", engine.render_report(&template, &data)?)?;
        }
        Command::Evaluate { corpus, pos, sample, seed, errata, discrepancies } => {
            let pos = pos.parse()?;
            let lexicon = open_corpus(&corpus, &pos)?;
            let errata = errata.as_deref().map(Errata::load).transpose()?;
            let spec = match sample {
                Some(size) => Sample::Random { size, seed },
                None => Sample::All,
            };
            let mut mismatches = discrepancies.map(File::create).transpose()?.map(BufWriter::new);
            for p in pos {
                let mut report = evaluate_pos(&engine, &lexicon, p, spec)?;
                if let Some(errata) = &errata {
                    report = errata_filter(&report, errata);
                }
                write!(out, "{}", report.table())?;
                if let Some(w) = mismatches.as_mut() {
                    report.write_discrepancies(w)?;
                }
            }
        }
        Command::Variability { corpus, pos, out: path } => {
            let pos = pos.parse()?;
            let lexicon = open_corpus(&corpus, &pos)?;
            let mut w = BufWriter::new(File::create(&path)?);
            for (i, p) in pos.into_iter().enumerate() {
                let curve = variability_curve(&engine, &lexicon, p)?;
                if i == 0 {
                    curve.write_csv(&mut w)?;
                } else {
                    // one header for the whole file
                    let mut buf = Vec::new();
                    curve.write_csv(&mut buf)?;
                    let body = buf.iter().position(|&b| b == b'\n').map_or(&buf[..], |i| &buf[i + 1..]);
                    w.write_all(body)?;
                }
                writeln!(out, "{}\t{} lemmas\t{} failed", p.tag(), curve.records.len(), curve.failed)?;
            }
            w.flush()?;
        }
        _ => unreachable!("single-word commands are handled above"),
    }
    Ok(())
}

fn open_corpus(path: &Path, pos: &[Pos]) -> Result<Lexicon, Failure> {
    let wanted = pos
        .iter()
        .map(|&p| rumorph_eval::evaluate::corpus_pos(p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Lexicon::open(path, &IngestOptions::only(&wanted))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(std::iter::once("rumorph").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn reference_commands() {
        assert_eq!(run(&["inflect", "noun", "стол", "--case", "gen", "--number", "sg"]), (0, "стола\n".into(), String::new()));
        assert_eq!(run(&["gerund", "решать", "--aspect", "perf"]).1, "решав\n");
        assert_eq!(run(&["number", "cardinal", "5", "--case", "nom"]).1, "пять\n");
        assert_eq!(run(&["number", "cardinal", "-2"]).0, EXIT_DATA);
        assert_eq!(run(&["number", "ordinal", "21", "--gender", "f"]).1, "двадцать первая\n");
        assert_eq!(run(&["agree", "verb-pronoun", "решать", "мы", "--tense", "pres"]).1, "мы решаем\n");
    }

    #[test]
    fn json_output_matches_service_body() {
        let (code, out, _) = run(&["--json", "inflect", "noun", "стол", "--case", "gen"]);
        assert_eq!((code, out.as_str()), (0, "{\"result\":\"стола\"}\n"));
        let (code, out, _) = run(&["--json", "inflect", "verb", "решить", "--tense", "pres", "--person", "1", "--number", "sg"]);
        assert_eq!(code, EXIT_DATA);
        assert!(out.starts_with("{\"error\":{\"code\":\"no-such-form\""));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["inflect", "noun", "стол", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run(&["inflect", "noun", "стол", "--case", "xx"]).0, EXIT_USAGE);
        assert_eq!(run(&["paradigm", "xx", "стол"]).0, EXIT_USAGE);
        let (code, _, err) = run(&["inflect", "noun", "table"]);
        assert_eq!(code, EXIT_DATA);
        assert!(err.contains("not-russian"));
        assert_eq!(run(&["report", "/nonexistent/t.txt", "/nonexistent/d.json"]).0, EXIT_DATA);
        assert_eq!(run(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn paradigm_is_json() {
        let (code, out, _) = run(&["paradigm", "noun", "стол"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["slots"].as_array().unwrap().len(), 12);
    }
}
