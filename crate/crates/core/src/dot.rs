//! Graphviz export. Final states are double circles, identity pairs print as
//! one symbol, and all labels between the same two states share one edge.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::fst::Fst;
use crate::symbol::Label;

fn quote(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(n: &Fst) -> String {
    let mut edges: BTreeMap<(usize, usize), Vec<&Label>> = BTreeMap::new();
    for (src, t) in n.transitions() {
        edges.entry((src, t.target)).or_default().push(&t.label);
    }

    let mut out = String::from("digraph fst {\n  rankdir=LR;\n");
    for s in 0..n.num_states() {
        let shape = if n.is_final(s) { "doublecircle" } else { "circle" };
        writeln!(out, "  {s} [shape={shape}];").unwrap();
    }
    for ((src, dst), mut labels) in edges {
        labels.sort();
        labels.dedup();
        let text: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        writeln!(out, "  {src} -> {dst} [label=\"{}\"];", quote(&text.join(", "))).unwrap();
    }
    out.push_str("}\n");
    out
}
