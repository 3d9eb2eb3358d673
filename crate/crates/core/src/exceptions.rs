//! Exception tables: plain-text word lists and TSV tables.
//!
//! Lists hold one normalized lemma per line; `#` starts a comment. An entry
//! starting with `-` is a suffix pattern (`-тель` matches `учитель`).
//! TSV tables map a key (same conventions) to tab-separated columns.
//!
//! The default tables are compiled in; [`ExceptionTables::load_dir`]
//! replaces any of them with a same-named file from a directory.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::word::normalize;

macro_rules! builtin_files {
    ($($name:literal),+ $(,)?) => {
        const BUILTIN: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../data/", $name)))),+
        ];
    };
}

builtin_files!(
    "indeclinable.txt",
    "animate.txt",
    "inanimate.txt",
    "pluralia.txt",
    "feminine-soft.txt",
    "masculine-soft.txt",
    "fleeting-vowel.txt",
    "stable-vowel.txt",
    "plural-a.txt",
    "zero-genitive-plural.txt",
    "irregular-nouns.tsv",
    "indeclinable-adjectives.txt",
    "short-form-skip.txt",
    "irregular-adjectives.tsv",
    "irregular-short.tsv",
    "suppletive-adverbs.txt",
    "possessive-adjectives.txt",
    "irregular-verbs.tsv",
    "verb-roots.tsv",
    "no-gerund.txt",
    "biaspectual.txt",
    "perfective.txt",
    "imperfective.txt",
    "no-imperative.txt",
    "soft-imperative.txt",
    "ppp-zhd.txt",
    "aspect-prefixed.tsv",
    "aspect-plain.tsv",
);

/// `.txt` files whose lines carry a tab-separated value after the key.
const TABULAR_LISTS: &[&str] = &["suppletive-adverbs.txt"];

/// A set of lemmas plus suffix patterns.
#[derive(Debug, Clone, Default)]
pub struct WordList {
    exact: HashSet<String>,
    suffixes: Vec<String>,
}

impl WordList {
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut list = WordList::default();
        for line in content_lines(text) {
            let (key, is_suffix) = parse_key(name, line)?;
            if is_suffix {
                list.suffixes.push(key);
            } else {
                list.exact.insert(key);
            }
        }
        list.suffixes.sort_by_key(|s| std::cmp::Reverse(s.chars().count()));
        Ok(list)
    }

    /// Exact membership.
    pub fn contains(&self, word: &str) -> bool {
        self.exact.contains(word)
    }

    /// Exact membership or a matching suffix pattern.
    pub fn matches(&self, word: &str) -> bool {
        self.exact.contains(word) || self.suffixes.iter().any(|s| word.ends_with(s.as_str()))
    }

    pub fn len(&self) -> usize {
        self.exact.len() + self.suffixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.exact.iter().map(String::as_str)
    }
}

/// Rows keyed by lemma or suffix pattern.
#[derive(Debug, Clone, Default)]
pub struct Table {
    exact: HashMap<String, Vec<String>>,
    suffixes: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut table = Table::default();
        for line in content_lines(text) {
            let mut cols = line.split('\t').map(str::trim);
            let key = cols.next().unwrap_or_default();
            let (key, is_suffix) = parse_key(name, key)?;
            let row: Vec<String> = cols.map(str::to_string).collect();
            if row.is_empty() {
                return Err(Error::Table {
                    name: name.to_string(),
                    reason: format!("row {key:?} has no columns"),
                });
            }
            if is_suffix {
                table.suffixes.push((key, row));
            } else {
                table.exact.insert(key, row);
            }
        }
        table
            .suffixes
            .sort_by_key(|(s, _)| std::cmp::Reverse(s.chars().count()));
        Ok(table)
    }

    pub fn get(&self, word: &str) -> Option<&[String]> {
        self.exact.get(word).map(Vec::as_slice)
    }

    /// Exact row, or the row of the longest suffix pattern `word` ends
    /// with. Returns the unmatched prefix of `word` alongside the row.
    pub fn lookup<'w>(&self, word: &'w str) -> Option<(&'w str, &[String])> {
        if let Some(row) = self.exact.get(word) {
            return Some(("", row));
        }
        self.suffixes
            .iter()
            .find(|(s, _)| word.ends_with(s.as_str()))
            .map(|(s, row)| (&word[..word.len() - s.len()], row.as_slice()))
    }

    /// Like [`Table::lookup`] but only accepts suffix matches whose
    /// remainder satisfies `accept_prefix`; exact keys always match.
    pub fn lookup_with<'w>(
        &self,
        word: &'w str,
        accept_prefix: impl Fn(&str) -> bool,
    ) -> Option<(&'w str, &[String])> {
        if let Some(row) = self.exact.get(word) {
            return Some(("", row));
        }
        self.suffixes
            .iter()
            .filter(|(s, _)| word.ends_with(s.as_str()))
            .map(|(s, row)| (&word[..word.len() - s.len()], row.as_slice()))
            .find(|(prefix, _)| accept_prefix(prefix))
    }

    pub fn len(&self) -> usize {
        self.exact.len() + self.suffixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or_default().trim_end())
        .filter(|l| !l.trim().is_empty())
}

fn parse_key(name: &str, raw: &str) -> Result<(String, bool)> {
    let raw = raw.trim();
    let (body, is_suffix) = match raw.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (raw, false),
    };
    let word = normalize(body).map_err(|_| Error::Table {
        name: name.to_string(),
        reason: format!("entry {raw:?} is not a normalized Russian word"),
    })?;
    Ok((word.into_string(), is_suffix))
}

/// All exception tables used by the engine, keyed by file name.
#[derive(Debug, Clone)]
pub struct ExceptionTables {
    lists: BTreeMap<&'static str, WordList>,
    tables: BTreeMap<&'static str, Table>,
}

impl ExceptionTables {
    /// The compiled-in tables.
    pub fn builtin() -> Result<Self> {
        Self::from_sources(|_| Ok(None))
    }

    /// Builtin tables, with any same-named file in `dir` taking precedence.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        if !dir.is_dir() {
            return Err(Error::Table {
                name: dir.display().to_string(),
                reason: "not a directory".to_string(),
            });
        }
        Self::from_sources(|name| {
            let path = dir.join(name);
            if path.is_file() {
                fs::read_to_string(&path).map(Some).map_err(|e| Error::Table {
                    name: name.to_string(),
                    reason: e.to_string(),
                })
            } else {
                Ok(None)
            }
        })
    }

    fn from_sources(mut read: impl FnMut(&str) -> Result<Option<String>>) -> Result<Self> {
        let mut lists = BTreeMap::new();
        let mut tables = BTreeMap::new();
        for &(name, builtin) in BUILTIN {
            let text = read(name)?;
            let text = text.as_deref().unwrap_or(builtin);
            if name.ends_with(".tsv") || TABULAR_LISTS.contains(&name) {
                tables.insert(name, Table::parse(name, text)?);
            } else {
                lists.insert(name, WordList::parse(name, text)?);
            }
        }
        Ok(ExceptionTables { lists, tables })
    }

    /// Names of every table file the engine reads.
    pub fn file_names() -> impl Iterator<Item = &'static str> {
        BUILTIN.iter().map(|(name, _)| *name)
    }

    pub fn list(&self, name: &str) -> &WordList {
        self.lists
            .get(name)
            .unwrap_or_else(|| panic!("unknown exception list {name}"))
    }

    pub fn table(&self, name: &str) -> &Table {
        self.tables
            .get(name)
            .unwrap_or_else(|| panic!("unknown exception table {name}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_parse() {
        let tables = ExceptionTables::builtin().unwrap();
        assert!(tables.list("indeclinable.txt").contains("кофе"));
        assert!(!tables.table("irregular-verbs.tsv").is_empty());
    }

    #[test]
    fn list_suffix_patterns() {
        let list = WordList::parse("t", "# comment\nкофе\n-тель # agent\n").unwrap();
        assert!(list.contains("кофе"));
        assert!(list.matches("учитель"));
        assert!(!list.contains("учитель"));
        assert!(!list.matches("стол"));
    }

    #[test]
    fn table_longest_suffix_wins() {
        let t = Table::parse("t", "-есть\ta\n-сесть\tb\n").unwrap();
        assert_eq!(t.lookup("съесть").unwrap().1[0], "a");
        assert_eq!(t.lookup("пересесть").unwrap(), ("пере", &["b".to_string()][..]));
        assert!(t.lookup("стол").is_none());
    }

    #[test]
    fn rejects_latin_entries() {
        assert!(WordList::parse("bad.txt", "coffee\n").is_err());
    }

    #[test]
    fn load_dir_overrides_builtin() {
        let dir = std::env::temp_dir().join(format!("rumorph-tables-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join("indeclinable.txt"), "зебу\n").unwrap();
        let tables = ExceptionTables::load_dir(&dir).unwrap();
        assert!(tables.list("indeclinable.txt").contains("зебу"));
        assert!(!tables.list("indeclinable.txt").contains("кофе"));
        assert!(tables.list("animate.txt").len() > 0);
        fs::remove_dir_all(&dir).unwrap();
    }
}
