//! Perfectiveness detection without a dictionary.
//!
//! Order: `biaspectual.txt`, then the exact lists `perfective.txt` and
//! `imperfective.txt`, then the suffix tables. A verb that starts with a
//! verbal prefix defaults to perfective and consults
//! `aspect-prefixed.tsv` for imperfectivizing suffixes (`-ывать`,
//! secondary `-ять`); any other verb defaults to imperfective and consults
//! `aspect-plain.tsv` (semelfactive `-нуть`).

use crate::exceptions::ExceptionTables;
use crate::grammar::Aspect;

/// Prefixes recognized when deciding whether a verb is prefixed; longer
/// alternatives come first.
const ASPECT_PREFIXES: &[&str] = &[
    "пере", "недо", "пред", "разо", "рас", "раз", "без", "бес", "воз", "вос", "вз", "вс", "изо",
    "из", "ис", "обо", "об", "ото", "от", "подо", "под", "надо", "над", "про", "при", "пре", "вы",
    "до", "за", "на", "по", "со", "во", "о", "у", "с", "в",
];

/// The remainder must keep at least this many characters for a prefix to count.
const MIN_ROOT: usize = 3;

pub(crate) fn has_prefix(base: &str) -> bool {
    let len = base.chars().count();
    ASPECT_PREFIXES
        .iter()
        .any(|p| base.starts_with(p) && len - p.chars().count() >= MIN_ROOT)
}

fn parse_aspect(tag: &str) -> Option<Aspect> {
    tag.parse().ok()
}

/// Aspect of a non-reflexive infinitive.
pub(crate) fn perfectness(t: &ExceptionTables, base: &str) -> Aspect {
    if t.list("biaspectual.txt").matches(base) {
        return Aspect::Biaspectual;
    }
    if t.list("perfective.txt").contains(base) {
        return Aspect::Perfective;
    }
    if t.list("imperfective.txt").contains(base) {
        return Aspect::Imperfective;
    }
    let (table, default) = if has_prefix(base) {
        ("aspect-prefixed.tsv", Aspect::Perfective)
    } else {
        ("aspect-plain.tsv", Aspect::Imperfective)
    };
    let by_suffix = t
        .table(table)
        .lookup(base)
        .and_then(|(_, row)| parse_aspect(&row[0]));
    let guess = by_suffix.unwrap_or(default);
    // suffix patterns in the exact lists refine the table guess
    if guess != Aspect::Imperfective && t.list("imperfective.txt").matches(base) {
        return Aspect::Imperfective;
    }
    if guess != Aspect::Perfective && t.list("perfective.txt").matches(base) {
        return Aspect::Perfective;
    }
    guess
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Engine;

    fn aspect(w: &str) -> Aspect {
        perfectness(Engine::builtin().tables(), w)
    }

    #[test]
    fn reference_verbs() {
        assert_eq!(aspect("решить"), Aspect::Perfective);
        assert_eq!(aspect("решать"), Aspect::Imperfective);
        assert_eq!(aspect("казнить"), Aspect::Biaspectual);
        assert_eq!(aspect("сделать"), Aspect::Perfective);
        assert_eq!(aspect("делать"), Aspect::Imperfective);
        assert_eq!(aspect("рассказывать"), Aspect::Imperfective);
        assert_eq!(aspect("крикнуть"), Aspect::Perfective);
    }

    #[test]
    fn prefix_detection() {
        assert!(has_prefix("переписать"));
        assert!(has_prefix("сделать"));
        assert!(!has_prefix("решать"));
        assert!(!has_prefix("читать"));
    }
}
