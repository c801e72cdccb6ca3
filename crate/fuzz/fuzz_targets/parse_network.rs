#![no_main]

use flowtri::io::{parse_network, prepare, AugmentMode};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_network(text) else { return };
    let _ = doc.validate();
    // Keep preparation cheap; route enumeration is exponential.
    if doc.vertices.len() <= 8 && doc.edges.len() <= 12 {
        let _ = prepare(&doc, AugmentMode::Auto);
    }
});
