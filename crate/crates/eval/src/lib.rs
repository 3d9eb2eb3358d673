//! Evaluation of the rumorph engine against an OpenCorpora-format
//! morphological dictionary, and morphological-variability analytics.
//!
//! ```no_run
//! use std::path::Path;
//! use rumorph::{Engine, Pos};
//! use rumorph_eval::{evaluate_pos, IngestOptions, Lexicon, Sample};
//!
//! let lexicon = Lexicon::open(Path::new("dict.opcorpora.xml"), &IngestOptions::default())?;
//! let report = evaluate_pos(Engine::builtin(), &lexicon, Pos::Noun, Sample::Random { size: 1000, seed: 1 })?;
//! println!("{}", report.table());
//! # Ok::<(), rumorph_eval::Error>(())
//! ```

pub mod error;
pub mod evaluate;
pub mod grammeme;
pub mod lexicon;
pub mod stats;
pub mod variability;

pub use error::{Error, Result};
pub use evaluate::{errata_filter, evaluate_pos, AgreementReport, Discrepancy, Errata, Sample};
pub use grammeme::{Grammemes, TagSet, G};
pub use lexicon::{ingest_opencorpora, ingest_reader, CorpusForm, CorpusLexeme, CorpusPos, IngestOptions, IngestWarnings, Lexicon};
pub use stats::{avg_form_count, form_count, lexeme_counts, Counting, LexemeCounts};
pub use variability::{levenshtein, variability_curve, variability_score, Curve, VariabilityRecord};
