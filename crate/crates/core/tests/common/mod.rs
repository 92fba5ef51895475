#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use cliffklein::catalog::parse_algebra;

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests").join("golden").join(name)
}

pub fn candidate_file() -> PathBuf {
    manifest_dir().join("../../data/e6_6_candidates.json")
}

/// Rows `(g, h)` of a tab-separated table transcription, in file order.
pub fn table(name: &str) -> Vec<(String, String)> {
    let text = std::fs::read_to_string(golden_path(name)).expect("golden table");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (g, h) = l.split_once('\t').expect("two columns");
            (g.trim().to_string(), h.trim().to_string())
        })
        .collect()
}

/// Canonical names of the table rows for ambient `g`.
pub fn table_block(name: &str, g: &str) -> BTreeSet<String> {
    table(name)
        .into_iter()
        .filter(|(a, _)| a == g)
        .map(|(_, h)| canonical(&h))
        .collect()
}

pub fn canonical(name: &str) -> String {
    parse_algebra(name)
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .to_string()
}

/// Row-level difference between two name sets, empty when they agree.
pub fn row_diff(expected: &BTreeSet<String>, got: &BTreeSet<String>) -> String {
    let mut out = String::new();
    for m in expected.difference(got) {
        out.push_str(&format!("- {m}\n"));
    }
    for x in got.difference(expected) {
        out.push_str(&format!("+ {x}\n"));
    }
    out
}
