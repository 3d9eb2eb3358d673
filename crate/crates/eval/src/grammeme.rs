//! Grammeme inventory and compact tag sets.
//!
//! Every corpus form carries a [`TagSet`], a bitset over the grammemes of
//! the [`Lexicon`](crate::Lexicon) it belongs to. The OpenCorpora inventory
//! is pre-seeded in a fixed order so that the grammemes used for slot
//! alignment have constant bit positions; grammemes outside the inventory
//! are interned after them.

use std::fmt;

use rumorph::{Animacy, Case, Gender, Number, Person, Tense};

use crate::error::{Error, Result};

/// The OpenCorpora grammeme inventory, in bit order.
const INVENTORY: &[&str] = &[
    // parts of speech
    "NOUN", "ADJF", "ADJS", "COMP", "VERB", "INFN", "PRTF", "PRTS", "GRND", "NUMR", "ADVB",
    "NPRO", "PRED", "PREP", "CONJ", "PRCL", "INTJ",
    // cases
    "nomn", "gent", "datv", "accs", "ablt", "loct", "voct", "gen1", "gen2", "acc2", "loc1", "loc2",
    // number, gender, animacy
    "sing", "plur", "masc", "femn", "neut", "anim", "inan",
    // verbal categories
    "perf", "impf", "1per", "2per", "3per", "pres", "past", "futr", "indc", "impr", "incl", "excl",
    "actv", "pssv",
    // lexical and variant flags
    "Sgtm", "Pltm", "Fixd", "ms-f", "Ms-f", "GNdr", "Inmx", "Qual", "Apro", "Anum", "Poss", "Supr",
    "Cmp2", "V-ey", "V-oy", "V-ej", "V-be", "V-en", "V-ie", "V-bi", "V-sh", "Fimp", "tran", "intr",
    "Impe", "Impx", "Mult", "Refl", "Subx", "Prdx", "Coun", "Coll", "Af-p", "Vpre", "Anph", "Adjx",
    "Hypo", "Ques", "Dmns", "Prnt",
    // proper names, abbreviations, stylistic and erroneous entries
    "Abbr", "Name", "Surn", "Patr", "Geox", "Orgn", "Trad", "Init", "Infr", "Slng", "Arch", "Litr",
    "Erro", "Dist",
];

/// Grammemes that take a form out of comparison: non-standard cases,
/// proper names, abbreviations and stylistically marked or erroneous
/// variants.
const EXCLUDING: &[&str] = &[
    "voct", "gen1", "gen2", "acc2", "loc1", "loc2", "Abbr", "Name", "Surn", "Patr", "Geox", "Orgn",
    "Trad", "Init", "Infr", "Slng", "Arch", "Litr", "Erro", "Dist",
];

/// Bit index of an inventory grammeme.
const fn bit(name: &str) -> u32 {
    let mut i = 0;
    while i < INVENTORY.len() {
        if const_eq(INVENTORY[i], name) {
            return i as u32;
        }
        i += 1;
    }
    panic!("grammeme not in inventory");
}

const fn const_eq(a: &str, b: &str) -> bool {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    if a.len() != b.len() {
        return false;
    }
    let mut i = 0;
    while i < a.len() {
        if a[i] != b[i] {
            return false;
        }
        i += 1;
    }
    true
}

/// A set of grammemes, relative to a [`Grammemes`] table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TagSet(u128);

impl TagSet {
    pub const EMPTY: TagSet = TagSet(0);

    pub const fn has(self, g: G) -> bool {
        self.0 & (1 << g.0) != 0
    }

    pub fn has_any(self, other: TagSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn insert(&mut self, index: u32) {
        self.0 |= 1 << index;
    }

    pub fn with(mut self, g: G) -> Self {
        self.0 |= 1 << g.0;
        self
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Bit indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        (0..128).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// True when the form is taken out of comparison.
    pub fn is_excluded(self) -> bool {
        self.has_any(excluding_mask()) || self.0 >> INVENTORY.len() != 0
    }

    pub fn case(self) -> Option<Case> {
        const CASES: [(G, Case); 6] = [
            (G::NOMN, Case::Nominative),
            (G::GENT, Case::Genitive),
            (G::DATV, Case::Dative),
            (G::ACCS, Case::Accusative),
            (G::ABLT, Case::Instrumental),
            (G::LOCT, Case::Prepositional),
        ];
        CASES.iter().find(|(g, _)| self.has(*g)).map(|&(_, c)| c)
    }

    pub fn number(self) -> Option<Number> {
        if self.has(G::SING) {
            Some(Number::Singular)
        } else if self.has(G::PLUR) {
            Some(Number::Plural)
        } else {
            None
        }
    }

    pub fn gender(self) -> Option<Gender> {
        if self.has(G::MASC) {
            Some(Gender::Masculine)
        } else if self.has(G::FEMN) {
            Some(Gender::Feminine)
        } else if self.has(G::NEUT) {
            Some(Gender::Neuter)
        } else {
            None
        }
    }

    pub fn person(self) -> Option<Person> {
        if self.has(G::PER1) {
            Some(Person::First)
        } else if self.has(G::PER2) {
            Some(Person::Second)
        } else if self.has(G::PER3) {
            Some(Person::Third)
        } else {
            None
        }
    }

    pub fn tense(self) -> Option<Tense> {
        if self.has(G::PRES) {
            Some(Tense::Present)
        } else if self.has(G::PAST) {
            Some(Tense::Past)
        } else if self.has(G::FUTR) {
            Some(Tense::Future)
        } else {
            None
        }
    }

    pub fn animacy(self) -> Option<Animacy> {
        if self.has(G::ANIM) {
            Some(Animacy::Animate)
        } else if self.has(G::INAN) {
            Some(Animacy::Inanimate)
        } else {
            None
        }
    }
}

impl fmt::Debug for TagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .indices()
            .map(|i| INVENTORY.get(i as usize).copied().unwrap_or("?"))
            .collect();
        write!(f, "TagSet({})", names.join(","))
    }
}

fn excluding_mask() -> TagSet {
    let mut set = TagSet::EMPTY;
    for g in EXCLUDING {
        set.insert(bit(g));
    }
    set
}

/// An inventory grammeme with a fixed bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct G(u32);

impl G {
    pub const NOUN: G = G(bit("NOUN"));
    pub const ADJF: G = G(bit("ADJF"));
    pub const ADJS: G = G(bit("ADJS"));
    pub const VERB: G = G(bit("VERB"));
    pub const INFN: G = G(bit("INFN"));
    pub const PRTF: G = G(bit("PRTF"));
    pub const PRTS: G = G(bit("PRTS"));
    pub const GRND: G = G(bit("GRND"));
    pub const NOMN: G = G(bit("nomn"));
    pub const GENT: G = G(bit("gent"));
    pub const DATV: G = G(bit("datv"));
    pub const ACCS: G = G(bit("accs"));
    pub const ABLT: G = G(bit("ablt"));
    pub const LOCT: G = G(bit("loct"));
    pub const SING: G = G(bit("sing"));
    pub const PLUR: G = G(bit("plur"));
    pub const MASC: G = G(bit("masc"));
    pub const FEMN: G = G(bit("femn"));
    pub const NEUT: G = G(bit("neut"));
    pub const ANIM: G = G(bit("anim"));
    pub const INAN: G = G(bit("inan"));
    pub const PERF: G = G(bit("perf"));
    pub const IMPF: G = G(bit("impf"));
    pub const PER1: G = G(bit("1per"));
    pub const PER2: G = G(bit("2per"));
    pub const PER3: G = G(bit("3per"));
    pub const PRES: G = G(bit("pres"));
    pub const PAST: G = G(bit("past"));
    pub const FUTR: G = G(bit("futr"));
    pub const INDC: G = G(bit("indc"));
    pub const IMPR: G = G(bit("impr"));
    pub const EXCL: G = G(bit("excl"));
    pub const ACTV: G = G(bit("actv"));
    pub const PSSV: G = G(bit("pssv"));
    pub const APRO: G = G(bit("Apro"));
    pub const SUPR: G = G(bit("Supr"));
    pub const V_OY: G = G(bit("V-oy"));
    pub const V_EY: G = G(bit("V-ey"));
    pub const NAME: G = G(bit("Name"));
    pub const SURN: G = G(bit("Surn"));
    pub const PATR: G = G(bit("Patr"));
}

/// Grammeme names of one lexicon: the inventory followed by any grammemes
/// met during ingestion that it does not list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammemes {
    names: Vec<String>,
}

impl Default for Grammemes {
    fn default() -> Self {
        Grammemes { names: INVENTORY.iter().map(|s| s.to_string()).collect() }
    }
}

impl Grammemes {
    pub fn index(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    /// Index of `name`, interning it when new.
    pub fn intern(&mut self, name: &str) -> Result<u32> {
        if let Some(i) = self.index(name) {
            return Ok(i);
        }
        if self.names.len() == 128 {
            return Err(Error::TooManyGrammemes(name.to_string()));
        }
        self.names.push(name.to_string());
        Ok(self.names.len() as u32 - 1)
    }

    pub fn name(&self, index: u32) -> &str {
        &self.names[index as usize]
    }

    /// Names of the grammemes in `set`, in bit order.
    pub fn names<'a>(&'a self, set: TagSet) -> impl Iterator<Item = &'a str> + 'a {
        set.indices().map(move |i| self.name(i))
    }

    /// Number of grammemes outside the inventory.
    pub fn unknown_count(&self) -> usize {
        self.names.len() - INVENTORY.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inventory_fits_and_is_unique() {
        assert!(INVENTORY.len() < 128);
        let mut sorted = INVENTORY.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), INVENTORY.len());
        for g in EXCLUDING {
            assert!(INVENTORY.contains(g));
        }
    }

    #[test]
    fn unknown_grammemes_exclude() {
        let mut g = Grammemes::default();
        let i = g.intern("Xyzw").unwrap();
        let mut set = TagSet::EMPTY.with(G::NOUN);
        assert!(!set.is_excluded());
        set.insert(i);
        assert!(set.is_excluded());
        assert_eq!(g.unknown_count(), 1);
    }

    #[test]
    fn feature_readers() {
        let set = TagSet::EMPTY.with(G::GENT).with(G::PLUR).with(G::FEMN).with(G::PER2).with(G::FUTR);
        assert_eq!(set.case(), Some(Case::Genitive));
        assert_eq!(set.number(), Some(Number::Plural));
        assert_eq!(set.gender(), Some(Gender::Feminine));
        assert_eq!(set.person(), Some(Person::Second));
        assert_eq!(set.tense(), Some(Tense::Future));
        assert_eq!(set.animacy(), None);
        let mut g = Grammemes::default();
        assert_eq!(g.intern("loc2").unwrap(), bit("loc2"));
        assert!(TagSet::EMPTY.with(G(bit("loc2"))).is_excluded());
    }
}
