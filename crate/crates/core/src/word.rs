//! Normalized Cyrillic words and the character-level helpers the rules share.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A lowercase Russian word with `ё` folded into `е` and stress marks removed.
///
/// Only `а`–`я` and inner hyphens are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyrillicWord(String);

impl CyrillicWord {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Length in characters.
    pub fn char_len(&self) -> usize {
        self.0.chars().count()
    }

    /// Wraps a string that is already known to be normalized.
    pub(crate) fn from_normalized(s: String) -> Self {
        debug_assert!(is_normalized(&s), "{s:?} is not normalized");
        CyrillicWord(s)
    }
}

impl Deref for CyrillicWord {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for CyrillicWord {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CyrillicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for CyrillicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        normalize(s)
    }
}

impl TryFrom<&str> for CyrillicWord {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        normalize(s)
    }
}

impl PartialEq<str> for CyrillicWord {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for CyrillicWord {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

impl PartialEq<String> for CyrillicWord {
    fn eq(&self, other: &String) -> bool {
        self.0 == *other
    }
}

impl Serialize for CyrillicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for CyrillicWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        normalize(&raw).map_err(serde::de::Error::custom)
    }
}

fn is_combining_mark(c: char) -> bool {
    matches!(c, '\u{0300}'..='\u{036F}')
}

fn is_normalized(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with('-')
        && !s.ends_with('-')
        && s.chars().all(|c| matches!(c, 'а'..='я' | '-'))
}

/// Normalizes raw input into a [`CyrillicWord`].
///
/// Lowercases, folds `ё` into `е`, strips combining accents (stress marks,
/// a decomposed diaeresis) and rejects anything that is not a Cyrillic
/// letter or an inner hyphen.
pub fn normalize(raw: &str) -> Result<CyrillicWord> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err(Error::NotRussian(raw.to_string()));
    }
    let mut out = String::with_capacity(trimmed.len());
    for c in trimmed.chars().filter(|c| !is_combining_mark(*c)) {
        for lower in c.to_lowercase() {
            match lower {
                'ё' => out.push('е'),
                'а'..='я' | '-' => out.push(lower),
                _ => return Err(Error::NotRussian(raw.to_string())),
            }
        }
    }
    if !is_normalized(&out) || !out.chars().any(|c| c != '-') {
        return Err(Error::NotRussian(raw.to_string()));
    }
    Ok(CyrillicWord(out))
}

/// Normalizes a phrase of space-separated words.
pub fn normalize_phrase(raw: &str) -> Result<String> {
    let words = raw
        .split_whitespace()
        .map(|w| normalize(w).map(CyrillicWord::into_string))
        .collect::<Result<Vec<_>>>()?;
    if words.is_empty() {
        return Err(Error::NotRussian(raw.to_string()));
    }
    Ok(words.join(" "))
}

/// Removes the last `n` characters of `word`.
pub fn till(word: &str, n: usize) -> Result<&str> {
    if n == 0 {
        return Ok(word);
    }
    match word.char_indices().rev().nth(n - 1) {
        Some((idx, _)) => Ok(&word[..idx]),
        None => Err(Error::Underflow {
            word: word.to_string(),
            n,
        }),
    }
}

/// `till` for callers that have already checked the suffix.
pub(crate) fn cut(word: &str, n: usize) -> &str {
    till(word, n).unwrap_or("")
}

pub const VOWELS: &[char] = &['а', 'е', 'и', 'о', 'у', 'ы', 'э', 'ю', 'я'];

pub fn is_vowel(ch: char) -> bool {
    VOWELS.contains(&ch)
}

pub(crate) fn is_consonant(ch: char) -> bool {
    matches!(ch, 'а'..='я') && !is_vowel(ch) && ch != 'ь' && ch != 'ъ' && ch != 'й'
}

/// ж ш ч щ
pub(crate) fn is_hushing(ch: char) -> bool {
    matches!(ch, 'ж' | 'ш' | 'ч' | 'щ')
}

/// г к х
pub(crate) fn is_velar(ch: char) -> bool {
    matches!(ch, 'г' | 'к' | 'х')
}

pub(crate) fn last_char(s: &str) -> Option<char> {
    s.chars().next_back()
}

/// Character `k` positions from the end (0 = last).
pub(crate) fn char_from_end(s: &str, k: usize) -> Option<char> {
    s.chars().rev().nth(k)
}

pub(crate) fn vowel_count(s: &str) -> usize {
    s.chars().filter(|c| is_vowel(*c)).count()
}

/// Joins a stem and an ending, applying the spelling rules that apply at
/// the junction: no `ы` after velars and hushing consonants, no `я`/`ю`
/// after hushing consonants and `ц`.
pub(crate) fn attach(stem: &str, ending: &str) -> String {
    let mut out = String::with_capacity(stem.len() + ending.len());
    out.push_str(stem);
    let mut rest = ending.chars();
    if let (Some(last), Some(first)) = (last_char(stem), ending.chars().next()) {
        let replaced = match first {
            'ы' if is_velar(last) || is_hushing(last) => Some('и'),
            'я' if is_hushing(last) || last == 'ц' => Some('а'),
            'ю' if is_hushing(last) || last == 'ц' => Some('у'),
            _ => None,
        };
        if let Some(r) = replaced {
            out.push(r);
            rest.next();
        }
    }
    out.extend(rest);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize("Ёж").unwrap(), "еж");
        assert_eq!(normalize("стол").unwrap(), "стол");
        assert_eq!(normalize("  Стол ").unwrap(), "стол");
        assert!(matches!(normalize("table"), Err(Error::NotRussian(_))));
        assert!(normalize("").is_err());
        assert!(normalize("-").is_err());
        assert!(normalize("-то").is_err());
        assert!(normalize("два слова").is_err());
    }

    #[test]
    fn normalize_strips_stress_and_decomposed_yo() {
        assert_eq!(normalize("реша\u{0301}ть").unwrap(), "решать");
        assert_eq!(normalize("е\u{0308}ж").unwrap(), "еж");
        assert_eq!(normalize("кто-нибудь").unwrap(), "кто-нибудь");
    }

    #[test]
    fn till_examples() {
        assert_eq!(till("решать", 2).unwrap(), "реша");
        assert_eq!(till("решать", 0).unwrap(), "решать");
        assert_eq!(till("ть", 2).unwrap(), "");
        assert!(matches!(till("ть", 3), Err(Error::Underflow { .. })));
    }

    #[test]
    fn vowel_examples() {
        assert!(is_vowel('а'));
        assert!(!is_vowel('т'));
        assert!(!is_vowel('ь'));
        assert!(!is_vowel('ё'));
        assert!(!is_vowel('a'));
    }

    #[test]
    fn junction_spelling() {
        assert_eq!(attach("книг", "ы"), "книги");
        assert_eq!(attach("стол", "ы"), "столы");
        assert_eq!(attach("леч", "ят"), "лечат");
        assert_eq!(attach("", "ы"), "ы");
    }

    fn cyrillic_word() -> impl Strategy<Value = String> {
        "[а-яё]{1,12}"
    }

    proptest! {
        #[test]
        fn normalize_idempotent(raw in "[А-ЯЁа-яё]{1,12}") {
            let once = normalize(&raw).unwrap();
            let twice = normalize(once.as_str()).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(!once.contains('ё'));
        }

        #[test]
        fn till_counts_characters(w in cyrillic_word(), n in 0usize..14) {
            let len = w.chars().count();
            match till(&w, n) {
                Ok(rest) => {
                    prop_assert!(n <= len);
                    prop_assert_eq!(rest.chars().count(), len - n);
                    prop_assert!(w.starts_with(rest));
                }
                Err(_) => prop_assert!(n > len),
            }
        }
    }
}
