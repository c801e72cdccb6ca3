#![no_main]

//! Input is a network document and a flow document separated by a NUL byte.

use flowtri::error::Error;
use flowtri::io::{flow_values, parse_flow, parse_network, prepare, AugmentMode};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some(split) = data.iter().position(|&b| b == 0) else { return };
    let (Ok(network), Ok(flow)) = (std::str::from_utf8(&data[..split]), std::str::from_utf8(&data[split + 1..])) else {
        return;
    };
    let Ok(doc) = parse_network(network) else { return };
    if doc.vertices.len() > 8 || doc.edges.len() > 12 {
        return;
    }
    let (Ok(p), Ok(entries)) = (prepare(&doc, AugmentMode::Auto), parse_flow(flow)) else { return };
    let Ok(values) = flow_values(&p.base, &entries) else { return };
    let Ok(lifted) = p.core.from_base(&values) else { return };
    let Some(net) = p.network() else { return };
    // Both decompositions check reconstruction themselves and report a
    // mismatch as an internal error.
    for result in [net.route_clique_decompose(&lifted).err(), net.layering_simplex_decompose(&lifted).err()] {
        if let Some(e @ Error::Internal(_)) = result {
            panic!("{e}");
        }
    }
});
