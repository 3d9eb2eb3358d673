//! Copies the lexemes of the given lemmas out of a dictionary.
//!
//! cargo run --release -p rumorph-eval --example extract -- DICT OUT LEMMA...

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use rumorph_eval::{IngestOptions, Lexicon};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [dict, out, lemmas @ ..] = args.as_slice() else {
        eprintln!("usage: extract DICT OUT LEMMA...");
        std::process::exit(1);
    };
    let mut lexicon = Lexicon::open(Path::new(dict), &IngestOptions::default()).expect("dictionary ingests");
    lexicon.lexemes.retain(|l| lemmas.contains(&l.lemma));
    let w = BufWriter::new(File::create(out).expect("output file"));
    lexicon.write_xml(w).expect("written");
    eprintln!("{} lexemes", lexicon.len());
}
