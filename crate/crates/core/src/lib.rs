//! Rule-based inflection and text synthesis for Russian, without a
//! dictionary.
//!
//! All inflection goes through an [`Engine`], which owns the exception
//! tables. [`Engine::builtin`] uses the compiled-in tables; an engine built
//! with [`Engine::with_tables`] can use edited ones.
//!
//! ```
//! use rumorph::{normalize, Case, Engine, Number};
//!
//! let e = Engine::builtin();
//! let form = e.inflect_noun(&normalize("книга").unwrap(), Case::Genitive, Number::Plural).unwrap();
//! assert_eq!(form, "книг");
//! ```

pub mod adjective;
pub mod error;
pub mod exceptions;
pub mod grammar;
pub mod noun;
pub mod numerals;
pub mod paradigm;
pub mod synthesis;
pub mod verb;
pub mod word;

use std::path::Path;

use once_cell::sync::Lazy;

pub use adjective::{AdjectiveStemType, LongForms};
pub use error::{Error, Result};
pub use exceptions::ExceptionTables;
pub use grammar::*;
pub use noun::{Declension, NounClass, NounForms, StemType};
pub use paradigm::{Paradigm, Pos, Slot};
pub use synthesis::{government, pronoun_features, Government, Template};
pub use verb::{BasicForm, ConjugationClass, VerbProfile};
pub use word::{is_vowel, normalize, normalize_phrase, till, CyrillicWord};

/// Version of this crate.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

static BUILTIN: Lazy<Engine> =
    Lazy::new(|| Engine::with_tables(ExceptionTables::builtin().expect("builtin tables parse")));

/// The inflection engine. Immutable once built; share it freely between
/// threads.
#[derive(Debug, Clone)]
pub struct Engine {
    pub(crate) tables: ExceptionTables,
}

impl Engine {
    /// The engine with the compiled-in exception tables.
    pub fn builtin() -> &'static Engine {
        &BUILTIN
    }

    pub fn with_tables(tables: ExceptionTables) -> Self {
        Engine { tables }
    }

    /// Builtin tables overridden by same-named files in `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        ExceptionTables::load_dir(dir).map(Self::with_tables)
    }

    pub fn tables(&self) -> &ExceptionTables {
        &self.tables
    }

    /// Full paradigm of `lemma` as a `pos`. Numerals take the number in
    /// digits; other parts of speech take a word.
    pub fn paradigm(&self, pos: Pos, lemma: &str) -> Result<Paradigm> {
        let number = || -> Result<i64> {
            lemma.trim().parse().map_err(|_| Error::BadField {
                field: "lemma".into(),
                reason: format!("{lemma:?} is not an integer"),
            })
        };
        match pos {
            Pos::Cardinal => return self.cardinal_paradigm(number()?),
            Pos::Ordinal => return self.ordinal_paradigm(number()?),
            _ => {}
        }
        let w = normalize(lemma)?;
        match pos {
            Pos::Noun => self.noun_paradigm(&w),
            Pos::Adjective => self.adjective_paradigm(&w),
            Pos::Adverb => self.adverb_paradigm(&w),
            Pos::Verb => self.verb_paradigm(&w),
            Pos::Imperative => self.imperative_paradigm(&w),
            Pos::Gerund => self.gerund_paradigm(&w),
            Pos::Participle(kind) => self.participle_paradigm(&w, kind),
            Pos::Cardinal | Pos::Ordinal => unreachable!(),
        }
    }
}
