//! Reads a JSON configuration and prints the text report.

use brauer_pinch::cli::{render_document, Format};
use brauer_pinch::oracle::OracleCaps;

const CONFIG: &str = r#"{
  "schemaVersion": 1,
  "field": { "kind": "p-adic-local", "p": 3 },
  "cover": { "coverKind": "ch0-trivial", "smoothNormalization": true },
  "points": [
    { "label": "y", "residueDegree": 1, "fibers": [{ "degree": 2 }, { "degree": 4 }] }
  ]
}"#;

fn main() {
    let path = std::env::args().nth(1);
    let bytes = match &path {
        Some(p) => std::fs::read(p).expect("readable file"),
        None => CONFIG.as_bytes().to_vec(),
    };
    match render_document(&bytes, Format::Text, true, &OracleCaps::default()) {
        Ok(r) => print!("{}", r.text),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.class());
            std::process::exit(1);
        }
    }
}
