//! OpenCorpora dictionary ingestion.
//!
//! The dictionary is a sequence of `<lemma id=…>` elements, each holding an
//! `<l t=…>` lemma element and `<f t=…>` form elements with `<g v=…/>`
//! grammemes. Parsing is streaming; a gzip-compressed export is detected by
//! its magic bytes.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;
use std::str::FromStr;

use flate2::read::GzDecoder;
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grammeme::{Grammemes, TagSet, G};

/// Part-of-speech tags the ingester keeps. Lexemes whose lemma carries any
/// other tag are skipped and counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CorpusPos {
    #[serde(rename = "NOUN")]
    Noun,
    #[serde(rename = "ADJF")]
    Adjf,
    #[serde(rename = "ADJS")]
    Adjs,
    #[serde(rename = "COMP")]
    Comp,
    #[serde(rename = "VERB")]
    Verb,
    #[serde(rename = "INFN")]
    Infn,
    #[serde(rename = "PRTF")]
    Prtf,
    #[serde(rename = "PRTS")]
    Prts,
    #[serde(rename = "GRND")]
    Grnd,
    #[serde(rename = "NUMR")]
    Numr,
    #[serde(rename = "ADVB")]
    Advb,
}

impl CorpusPos {
    pub const ALL: [CorpusPos; 11] = [
        CorpusPos::Noun,
        CorpusPos::Adjf,
        CorpusPos::Adjs,
        CorpusPos::Comp,
        CorpusPos::Verb,
        CorpusPos::Infn,
        CorpusPos::Prtf,
        CorpusPos::Prts,
        CorpusPos::Grnd,
        CorpusPos::Numr,
        CorpusPos::Advb,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CorpusPos::Noun => "NOUN",
            CorpusPos::Adjf => "ADJF",
            CorpusPos::Adjs => "ADJS",
            CorpusPos::Comp => "COMP",
            CorpusPos::Verb => "VERB",
            CorpusPos::Infn => "INFN",
            CorpusPos::Prtf => "PRTF",
            CorpusPos::Prts => "PRTS",
            CorpusPos::Grnd => "GRND",
            CorpusPos::Numr => "NUMR",
            CorpusPos::Advb => "ADVB",
        }
    }
}

impl fmt::Display for CorpusPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CorpusPos {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        CorpusPos::ALL.into_iter().find(|p| p.tag() == s).ok_or(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusForm {
    pub text: Box<str>,
    pub tags: TagSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusLexeme {
    pub id: u32,
    pub lemma: String,
    pub pos: CorpusPos,
    /// Grammemes on the `<l>` element.
    pub lemma_tags: TagSet,
    pub forms: Vec<CorpusForm>,
}

impl CorpusLexeme {
    /// Tags of the citation form: the first form, or the lemma tags.
    pub fn citation_tags(&self) -> TagSet {
        self.forms.first().map_or(self.lemma_tags, |f| f.tags)
    }

    /// Anthroponyms: first names, surnames and patronymics.
    pub fn is_anthroponym(&self) -> bool {
        let t = self.citation_tags();
        t.has(G::NAME) || t.has(G::SURN) || t.has(G::PATR)
    }
}

/// Counted problems met during ingestion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IngestWarnings {
    /// Lexemes skipped because their part of speech is not mapped.
    pub unknown_pos: usize,
    /// Lexemes skipped because the lemma is not a Cyrillic word.
    pub bad_lemma: usize,
    /// Forms dropped because they are not Cyrillic words.
    pub bad_forms: usize,
}

/// Which lexemes to keep while ingesting.
#[derive(Debug, Clone, Default)]
pub struct IngestOptions {
    /// Keep only lexemes whose lemma has one of these parts of speech.
    pub pos: Option<Vec<CorpusPos>>,
}

impl IngestOptions {
    pub fn only(pos: &[CorpusPos]) -> Self {
        IngestOptions { pos: Some(pos.to_vec()) }
    }
}

/// An ingested dictionary.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    pub grammemes: Grammemes,
    pub lexemes: Vec<CorpusLexeme>,
    pub warnings: IngestWarnings,
}

impl PartialEq for Lexicon {
    /// Equal lexemes with equally named grammemes; warnings are ignored.
    fn eq(&self, other: &Self) -> bool {
        let names = |lx: &Lexicon, set: TagSet| {
            let mut v: Vec<&str> = lx.grammemes.names(set).collect();
            v.sort_unstable();
            v.join(",")
        };
        self.lexemes.len() == other.lexemes.len()
            && self.lexemes.iter().zip(&other.lexemes).all(|(a, b)| {
                a.id == b.id
                    && a.lemma == b.lemma
                    && a.pos == b.pos
                    && names(self, a.lemma_tags) == names(other, b.lemma_tags)
                    && a.forms.len() == b.forms.len()
                    && a.forms.iter().zip(&b.forms).all(|(x, y)| {
                        x.text == y.text && names(self, x.tags) == names(other, y.tags)
                    })
            })
    }
}

impl Lexicon {
    pub fn len(&self) -> usize {
        self.lexemes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lexemes.is_empty()
    }

    pub fn with_pos(&self, pos: CorpusPos) -> impl Iterator<Item = &CorpusLexeme> {
        self.lexemes.iter().filter(move |l| l.pos == pos)
    }

    pub fn get(&self, id: u32) -> Option<&CorpusLexeme> {
        self.lexemes
            .binary_search_by_key(&id, |l| l.id)
            .ok()
            .map(|i| &self.lexemes[i])
            .or_else(|| self.lexemes.iter().find(|l| l.id == id))
    }

    /// Opens a dictionary file, plain or gzip-compressed.
    pub fn open(path: &Path, options: &IngestOptions) -> Result<Self> {
        let mut file = BufReader::with_capacity(1 << 20, File::open(path)?);
        let gzip = file.fill_buf()?.starts_with(&[0x1f, 0x8b]);
        if gzip {
            let inner = BufReader::with_capacity(1 << 20, GzDecoder::new(file));
            ingest_opencorpora(inner, options)
        } else {
            ingest_opencorpora(file, options)
        }
    }

    /// Writes the lexicon back as dictionary XML.
    pub fn write_xml<W: Write>(&self, mut out: W) -> Result<()> {
        use quick_xml::escape::escape;
        writeln!(out, r#"<?xml version="1.0" encoding="utf-8" standalone="yes"?>"#)?;
        writeln!(out, "<dictionary>\n<lemmata>")?;
        let tags = |set: TagSet| -> String {
            self.grammemes.names(set).map(|g| format!(r#"<g v="{}"/>"#, escape(g))).collect()
        };
        for lx in &self.lexemes {
            write!(
                out,
                r#"<lemma id="{}"><l t="{}"><g v="{}"/>{}</l>"#,
                lx.id,
                escape(lx.lemma.as_str()),
                lx.pos.tag(),
                tags(without_pos(lx.lemma_tags, &self.grammemes, lx.pos)),
            )?;
            for f in &lx.forms {
                write!(out, r#"<f t="{}">{}</f>"#, escape(&*f.text), tags(f.tags))?;
            }
            writeln!(out, "</lemma>")?;
        }
        writeln!(out, "</lemmata>\n</dictionary>")?;
        Ok(())
    }
}

fn without_pos(set: TagSet, g: &Grammemes, pos: CorpusPos) -> TagSet {
    let pos_bit = g.index(pos.tag());
    let mut out = TagSet::EMPTY;
    for i in set.indices().filter(|&i| Some(i) != pos_bit) {
        out.insert(i);
    }
    out
}

#[derive(Default)]
struct Pending {
    id: u32,
    lemma: Option<String>,
    lemma_tags: TagSet,
    pos: Option<CorpusPos>,
    unknown_pos: bool,
    forms: Vec<CorpusForm>,
    /// Text of the open `<f>`, `None` when it failed normalization.
    form: Option<Option<Box<str>>>,
    form_tags: TagSet,
    in_lemma_tag: bool,
}

fn normalized(raw: &str) -> Option<String> {
    rumorph::normalize(raw).ok().map(|w| w.into_string())
}

fn attr(e: &BytesStart<'_>, name: &[u8], offset: u64) -> Result<Option<String>> {
    let bad = |reason: String| Error::Parse { offset, reason };
    match e.try_get_attribute(name).map_err(|err| bad(err.to_string()))? {
        Some(a) => Ok(Some(a.unescape_value().map_err(|err| bad(err.to_string()))?.into_owned())),
        None => Ok(None),
    }
}

/// Streams an OpenCorpora dictionary into a [`Lexicon`].
pub fn ingest_opencorpora<R: BufRead>(source: R, options: &IngestOptions) -> Result<Lexicon> {
    let mut reader = Reader::from_reader(source);
    let mut buf = Vec::with_capacity(4096);
    let mut lexicon = Lexicon::default();
    let mut cur: Option<Pending> = None;
    let mut depth = 0usize;
    loop {
        let offset = reader.buffer_position() as u64;
        let event = reader
            .read_event_into(&mut buf)
            .map_err(|e| Error::Parse { offset, reason: e.to_string() })?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let empty = matches!(event, Event::Empty(_));
                if !empty {
                    depth += 1;
                }
                match e.name().as_ref() {
                    b"lemma" => {
                        let id = attr(e, b"id", offset)?
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| Error::Parse { offset, reason: "lemma without numeric id".into() })?;
                        cur = Some(Pending { id, ..Pending::default() });
                    }
                    b"l" => {
                        let p = cur.as_mut().ok_or_else(|| Error::Parse { offset, reason: "<l> outside <lemma>".into() })?;
                        let t = attr(e, b"t", offset)?.unwrap_or_default();
                        p.lemma = Some(t);
                        p.in_lemma_tag = !empty;
                    }
                    b"f" => {
                        let p = cur.as_mut().ok_or_else(|| Error::Parse { offset, reason: "<f> outside <lemma>".into() })?;
                        let t = attr(e, b"t", offset)?.unwrap_or_default();
                        p.form = Some(normalized(&t).map(String::into_boxed_str));
                        p.form_tags = TagSet::EMPTY;
                        if empty {
                            finish_form(p, &mut lexicon.warnings);
                        }
                    }
                    b"g" => {
                        let Some(p) = cur.as_mut() else { continue };
                        let v = attr(e, b"v", offset)?.unwrap_or_default();
                        if p.in_lemma_tag {
                            if p.pos.is_none() && !p.unknown_pos {
                                match v.parse::<CorpusPos>() {
                                    Ok(pos) => p.pos = Some(pos),
                                    Err(()) => p.unknown_pos = true,
                                }
                                continue;
                            }
                            let i = lexicon.grammemes.intern(&v)?;
                            p.lemma_tags.insert(i);
                        } else if p.form.is_some() {
                            let i = lexicon.grammemes.intern(&v)?;
                            p.form_tags.insert(i);
                        }
                    }
                    _ => {}
                }
            }
            Event::End(ref e) => {
                depth = depth.saturating_sub(1);
                match e.name().as_ref() {
                    b"l" => {
                        if let Some(p) = cur.as_mut() {
                            p.in_lemma_tag = false;
                        }
                    }
                    b"f" => {
                        if let Some(p) = cur.as_mut() {
                            finish_form(p, &mut lexicon.warnings);
                        }
                    }
                    b"lemma" => {
                        if let Some(p) = cur.take() {
                            finish_lexeme(p, options, &mut lexicon);
                        }
                    }
                    _ => {}
                }
            }
            Event::Eof => break,
            _ => {}
        }
        buf.clear();
    }
    if depth != 0 || cur.is_some() {
        return Err(Error::Parse {
            offset: reader.buffer_position() as u64,
            reason: "unexpected end of input".into(),
        });
    }
    lexicon.lexemes.sort_by_key(|l| l.id);
    Ok(lexicon)
}

fn finish_form(p: &mut Pending, warnings: &mut IngestWarnings) {
    match p.form.take() {
        Some(Some(text)) => p.forms.push(CorpusForm { text, tags: p.form_tags }),
        Some(None) => warnings.bad_forms += 1,
        None => {}
    }
}

fn finish_lexeme(p: Pending, options: &IngestOptions, lexicon: &mut Lexicon) {
    let Some(pos) = p.pos else {
        lexicon.warnings.unknown_pos += 1;
        return;
    };
    if options.pos.as_ref().is_some_and(|keep| !keep.contains(&pos)) {
        return;
    }
    let Some(lemma) = p.lemma.as_deref().and_then(normalized) else {
        lexicon.warnings.bad_lemma += 1;
        return;
    };
    lexicon.lexemes.push(CorpusLexeme {
        id: p.id,
        lemma,
        pos,
        lemma_tags: p.lemma_tags,
        forms: p.forms,
    });
}

/// Reads a dictionary from any byte stream (plain XML).
pub fn ingest_reader<R: Read>(source: R, options: &IngestOptions) -> Result<Lexicon> {
    ingest_opencorpora(BufReader::new(source), options)
}
