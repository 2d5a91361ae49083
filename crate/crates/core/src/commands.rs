//! The operations behind the `fsrx` command-line tool, returning text so
//! they can be driven from tests as well as from `main`.

use std::fmt::Write as _;

use crate::apply::{apply, split_input, ApplyConfig};
use crate::error::Result;
use crate::fst::{equivalent, minimize, Fst};
use crate::regex::compile_str;
use crate::script::format_applied;

pub fn summary(n: &Fst) -> String {
    let mut out = String::new();
    writeln!(out, "states: {}", n.num_states()).unwrap();
    writeln!(out, "arcs: {}", n.num_arcs()).unwrap();
    writeln!(out, "finals: {}", n.finals().count()).unwrap();
    let sigma: Vec<String> = n.sigma().iter().map(ToString::to_string).collect();
    writeln!(out, "sigma: {}", sigma.join(" ")).unwrap();
    writeln!(out, "kind: {}", if n.is_acceptor() { "acceptor" } else { "relation" }).unwrap();
    out
}

/// Compiles and minimizes an expression.
pub fn compile(expr: &str) -> Result<Fst> {
    Ok(minimize(&compile_str(expr)?))
}

/// One `input<TAB>{outputs}` line per input.
pub fn apply_lines<S: AsRef<str>>(net: &Fst, inputs: &[S], cfg: &ApplyConfig, chars: bool) -> String {
    let sep = if chars { "" } else { " " };
    let mut out = String::new();
    for input in inputs {
        let input = input.as_ref();
        let result = apply(net, &split_input(input, chars), cfg);
        out.push_str(&format_applied(input, &result, sep));
        out.push('\n');
    }
    out
}

/// Compares two expressions; the report names the verdict.
pub fn equiv(a: &str, b: &str) -> Result<(bool, String)> {
    let same = equivalent(&compile(a)?, &compile(b)?);
    let report = if same { "equivalent\n" } else { "not equivalent\n" };
    Ok((same, report.to_string()))
}
