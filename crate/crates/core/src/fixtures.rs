//! Small framed networks shipped with the crate, as network documents.

use crate::error::Result;
use crate::io::{parse_network, prepare, AugmentMode, NetworkDocument, Prepared};

pub const SQUARE: &str = include_str!("../../../fixtures/square.json");
pub const CONS: &str = include_str!("../../../fixtures/cons.json");
pub const K33: &str = include_str!("../../../fixtures/k33.json");
pub const TWO_SOURCES_ONE_SINK: &str = include_str!("../../../fixtures/2s1t.json");
pub const PLANAR: &str = include_str!("../../../fixtures/planar.json");

pub const ALL: [(&str, &str); 5] = [
    ("square", SQUARE),
    ("cons", CONS),
    ("k33", K33),
    ("2s1t", TWO_SOURCES_ONE_SINK),
    ("planar", PLANAR),
];

pub fn document(text: &str) -> NetworkDocument {
    parse_network(text).expect("bundled fixture parses")
}

pub fn load(text: &str) -> Result<Prepared> {
    prepare(&document(text), AugmentMode::Auto)
}
