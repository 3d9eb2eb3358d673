//! Grammatical categories and feature bundles.
//!
//! Every category is a closed enumeration with a stable canonical order
//! (the order of `ALL`). Paradigm slot tables are built from these orders,
//! so reordering a variant changes every serialized paradigm.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

macro_rules! category {
    (
        $(#[$meta:meta])*
        $name:ident {
            $($variant:ident => $tag:literal $(| $alias:literal)*),+ $(,)?
        }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            /// Short tag used in bundle strings, CLI flags and JSON.
            pub fn tag(self) -> &'static str {
                match self {
                    $($name::$variant => $tag),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.tag())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                let lower = s.trim().to_lowercase();
                $(
                    if lower == $tag
                        || lower.eq_ignore_ascii_case(stringify!($variant))
                        $(|| lower == $alias)*
                    {
                        return Ok($name::$variant);
                    }
                )+
                Err(Error::UnknownFeature(s.to_string()))
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(self.tag())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let raw = String::deserialize(deserializer)?;
                raw.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

category! {
    /// The six Russian cases.
    Case {
        Nominative => "nom" | "nomn" | "и",
        Genitive => "gen" | "gent" | "р",
        Dative => "dat" | "datv" | "д",
        Accusative => "acc" | "accs" | "в",
        Instrumental => "ins" | "ablt" | "inst" | "т",
        Prepositional => "prep" | "loct" | "loc" | "п",
    }
}

category! {
    Number {
        Singular => "sg" | "sing",
        Plural => "pl" | "plur",
    }
}

category! {
    Gender {
        Masculine => "m" | "masc",
        Feminine => "f" | "femn" | "fem",
        Neuter => "n" | "neut",
    }
}

category! {
    Person {
        First => "1" | "1per" | "1st",
        Second => "2" | "2per" | "2nd",
        Third => "3" | "3per" | "3rd",
    }
}

category! {
    Tense {
        Past => "past",
        Present => "pres" | "present",
        Future => "fut" | "futr" | "future",
    }
}

category! {
    Voice {
        Active => "act" | "actv",
        Passive => "pass" | "pssv",
    }
}

category! {
    Animacy {
        Animate => "anim",
        Inanimate => "inan",
    }
}

category! {
    Aspect {
        Perfective => "perf",
        Imperfective => "impf",
        Biaspectual => "biasp" | "both",
    }
}

category! {
    Degree {
        Positive => "pos",
        Comparative => "comp",
        Superlative => "sup" | "supr",
    }
}

category! {
    ParticipleKind {
        PresentActive => "pres-act" | "presentactive",
        PastActive => "past-act" | "pastactive",
        PastPassive => "past-pass" | "pastpassive",
    }
}

category! {
    /// Agreement target of adjectives and participles: a singular gender
    /// or the (genderless) plural.
    GenderOrPlural {
        Masculine => "m" | "masc",
        Feminine => "f" | "femn" | "fem",
        Neuter => "n" | "neut",
        Plural => "pl" | "plur",
    }
}

impl GenderOrPlural {
    pub fn from_parts(gender: Gender, number: Number) -> Self {
        match (number, gender) {
            (Number::Plural, _) => GenderOrPlural::Plural,
            (Number::Singular, Gender::Masculine) => GenderOrPlural::Masculine,
            (Number::Singular, Gender::Feminine) => GenderOrPlural::Feminine,
            (Number::Singular, Gender::Neuter) => GenderOrPlural::Neuter,
        }
    }

    pub fn gender(self) -> Option<Gender> {
        match self {
            GenderOrPlural::Masculine => Some(Gender::Masculine),
            GenderOrPlural::Feminine => Some(Gender::Feminine),
            GenderOrPlural::Neuter => Some(Gender::Neuter),
            GenderOrPlural::Plural => None,
        }
    }

    pub fn number(self) -> Number {
        match self {
            GenderOrPlural::Plural => Number::Plural,
            _ => Number::Singular,
        }
    }
}

impl ParticipleKind {
    pub fn voice(self) -> Voice {
        match self {
            ParticipleKind::PastPassive => Voice::Passive,
            _ => Voice::Active,
        }
    }

    pub fn tense(self) -> Tense {
        match self {
            ParticipleKind::PresentActive => Tense::Present,
            _ => Tense::Past,
        }
    }
}

/// One paradigm slot: the set of grammatical features that select a form.
///
/// Absent features are simply unset; equality compares every field.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FeatureBundle {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<Case>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub number: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gender: Option<Gender>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub person: Option<Person>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tense: Option<Tense>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub voice: Option<Voice>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub animacy: Option<Animacy>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<Degree>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub participle: Option<ParticipleKind>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub aspect: Option<Aspect>,
}

impl FeatureBundle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_case(mut self, case: Case) -> Self {
        self.case = Some(case);
        self
    }

    pub fn with_number(mut self, number: Number) -> Self {
        self.number = Some(number);
        self
    }

    pub fn with_gender(mut self, gender: Gender) -> Self {
        self.gender = Some(gender);
        self
    }

    /// Sets number and (for singular) gender from an agreement target.
    pub fn with_agreement(mut self, target: GenderOrPlural) -> Self {
        self.number = Some(target.number());
        self.gender = target.gender();
        self
    }

    pub fn with_person(mut self, person: Person) -> Self {
        self.person = Some(person);
        self
    }

    pub fn with_tense(mut self, tense: Tense) -> Self {
        self.tense = Some(tense);
        self
    }

    pub fn with_voice(mut self, voice: Voice) -> Self {
        self.voice = Some(voice);
        self
    }

    pub fn with_animacy(mut self, animacy: Animacy) -> Self {
        self.animacy = Some(animacy);
        self
    }

    pub fn with_degree(mut self, degree: Degree) -> Self {
        self.degree = Some(degree);
        self
    }

    pub fn with_participle(mut self, kind: ParticipleKind) -> Self {
        self.participle = Some(kind);
        self
    }

    pub fn with_aspect(mut self, aspect: Aspect) -> Self {
        self.aspect = Some(aspect);
        self
    }

    /// Agreement target implied by number and gender, if both are usable.
    pub fn agreement(&self) -> Option<GenderOrPlural> {
        match (self.number, self.gender) {
            (Some(Number::Plural), _) => Some(GenderOrPlural::Plural),
            (Some(Number::Singular), Some(g)) | (None, Some(g)) => {
                Some(GenderOrPlural::from_parts(g, Number::Singular))
            }
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }

    fn fields(&self) -> [(&'static str, Option<&'static str>); 10] {
        [
            ("case", self.case.map(Case::tag)),
            ("num", self.number.map(Number::tag)),
            ("gen", self.gender.map(Gender::tag)),
            ("pers", self.person.map(Person::tag)),
            ("tense", self.tense.map(Tense::tag)),
            ("voice", self.voice.map(Voice::tag)),
            ("anim", self.animacy.map(Animacy::tag)),
            ("degree", self.degree.map(Degree::tag)),
            ("part", self.participle.map(ParticipleKind::tag)),
            ("aspect", self.aspect.map(Aspect::tag)),
        ]
    }
}

/// Canonical tag string, e.g. `case=gen;num=sg`. The empty bundle renders
/// as the empty string.
impl fmt::Display for FeatureBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, value) in self.fields() {
            if let Some(value) = value {
                if !first {
                    f.write_str(";")?;
                }
                write!(f, "{name}={value}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for FeatureBundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut bundle = FeatureBundle::new();
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (name, value) = field
                .split_once('=')
                .ok_or_else(|| Error::UnknownFeature(field.to_string()))?;
            match name.trim() {
                "case" => bundle.case = Some(value.parse()?),
                "num" => bundle.number = Some(value.parse()?),
                "gen" => bundle.gender = Some(value.parse()?),
                "pers" => bundle.person = Some(value.parse()?),
                "tense" => bundle.tense = Some(value.parse()?),
                "voice" => bundle.voice = Some(value.parse()?),
                "anim" => bundle.animacy = Some(value.parse()?),
                "degree" => bundle.degree = Some(value.parse()?),
                "part" => bundle.participle = Some(value.parse()?),
                "aspect" => bundle.aspect = Some(value.parse()?),
                _ => return Err(Error::UnknownFeature(field.to_string())),
            }
        }
        Ok(bundle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        assert_eq!(Case::ALL.len(), 6);
        assert_eq!(Number::ALL.len(), 2);
        assert_eq!(Gender::ALL.len(), 3);
        assert_eq!(Person::ALL.len(), 3);
        assert_eq!(Tense::ALL.len(), 3);
        assert_eq!(Voice::ALL.len(), 2);
        assert_eq!(Animacy::ALL.len(), 2);
        assert_eq!(Aspect::ALL.len(), 3);
        assert_eq!(Degree::ALL.len(), 3);
        assert_eq!(ParticipleKind::ALL.len(), 3);
    }

    #[test]
    fn case_order_is_canonical() {
        assert_eq!(
            Case::ALL,
            &[
                Case::Nominative,
                Case::Genitive,
                Case::Dative,
                Case::Accusative,
                Case::Instrumental,
                Case::Prepositional
            ]
        );
    }

    #[test]
    fn tag_string_format() {
        let b = FeatureBundle::new()
            .with_case(Case::Genitive)
            .with_number(Number::Singular);
        assert_eq!(b.to_string(), "case=gen;num=sg");
        assert_eq!("case=gen;num=sg".parse::<FeatureBundle>().unwrap(), b);
        assert_eq!(FeatureBundle::new().to_string(), "");
    }

    #[test]
    fn parse_aliases() {
        assert_eq!("gent".parse::<Case>().unwrap(), Case::Genitive);
        assert_eq!("Genitive".parse::<Case>().unwrap(), Case::Genitive);
        assert_eq!("1".parse::<Person>().unwrap(), Person::First);
        assert!("vocative".parse::<Case>().is_err());
    }

    #[test]
    fn serde_uses_tags() {
        let b = FeatureBundle::new()
            .with_tense(Tense::Past)
            .with_agreement(GenderOrPlural::Feminine);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"number":"sg","gender":"f","tense":"past"}"#);
        assert_eq!(serde_json::from_str::<FeatureBundle>(&json).unwrap(), b);
    }
}
