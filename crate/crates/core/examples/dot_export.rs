//! Writes Graphviz renderings of the reference rules into a directory.
//!
//!     cargo run --example dot_export -- /tmp/diagrams
//!     dot -Tsvg /tmp/diagrams/upward.dot > upward.svg

use std::fs;
use std::path::PathBuf;

use fsrx::dot::to_dot;
use fsrx::fst::minimize;
use fsrx::regex::compile_str;

fn main() -> fsrx::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    fs::create_dir_all(&dir)?;
    let rules = [
        ("two_alternatives", "a b | c -> x ;"),
        ("overlapping", "a b | b c -> x ;"),
        ("composed", "a b -> x .o. b c -> x ;"),
        ("upward", "a b -> x || a b _ a ;"),
        ("rightward", "a b -> x // a b _ a ;"),
        ("leftward", "a b -> x \\\\ a b _ a ;"),
        ("downward", "a b -> x \\/ a b _ a ;"),
    ];
    for (name, rule) in rules {
        let net = minimize(&compile_str(rule)?);
        let path = dir.join(format!("{name}.dot"));
        fs::write(&path, to_dot(&net))?;
        println!("{:<40} {rule}", path.display());
    }
    Ok(())
}
