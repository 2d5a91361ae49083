//! Plain-text network format.
//!
//! ```text
//! fst <nstates> <start> <nfinals>
//! final <id>            (one line per final state)
//! sigma <sym> <sym> ... (the known alphabet, possibly empty)
//! <src> <dst> <upper> <lower>
//! ```
//!
//! `@0@` stands for epsilon and `@?@` for the unknown symbol. Writing a
//! minimized network, reading it back, and writing it again reproduces the
//! same bytes.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fst::{Fst, Transition};
use crate::symbol::{Label, Symbol};

const EPSILON: &str = "@0@";
const UNKNOWN: &str = "@?@";

fn token(sym: &Symbol) -> &str {
    match sym {
        Symbol::Epsilon => EPSILON,
        Symbol::Unknown => UNKNOWN,
        Symbol::Concrete(name) => name,
    }
}

fn symbol(tok: &str) -> Symbol {
    match tok {
        EPSILON => Symbol::Epsilon,
        UNKNOWN => Symbol::Unknown,
        name => Symbol::new(name),
    }
}

pub fn write_text(n: &Fst) -> String {
    let mut out = String::new();
    let finals: Vec<usize> = n.finals().collect();
    writeln!(out, "fst {} {} {}", n.num_states(), n.start(), finals.len()).unwrap();
    for f in finals {
        writeln!(out, "final {f}").unwrap();
    }
    out.push_str("sigma");
    for s in n.sigma() {
        write!(out, " {}", token(s)).unwrap();
    }
    out.push('\n');
    for (src, t) in n.transitions() {
        writeln!(out, "{} {} {} {}", src, t.target, token(&t.label.upper), token(&t.label.lower)).unwrap();
    }
    out
}

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Format { line, message: message.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| bad(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| bad(line, format!("{what} is not a number")))
}

pub fn read_text(text: &str) -> Result<Fst> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());

    let (lno, header) = lines.next().ok_or_else(|| bad(1, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("fst") {
        return Err(bad(lno, "expected `fst` header"));
    }
    let nstates = number(toks.next(), lno, "state count")?;
    let start = number(toks.next(), lno, "start state")?;
    let nfinals = number(toks.next(), lno, "final count")?;
    if toks.next().is_some() {
        return Err(bad(lno, "trailing tokens in header"));
    }
    if nstates == 0 || start >= nstates {
        return Err(bad(lno, "start state out of range"));
    }

    let mut finals = vec![false; nstates];
    let mut arcs: Vec<Vec<Transition>> = vec![Vec::new(); nstates];
    let mut sigma = BTreeSet::new();
    let mut seen_finals = 0;
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["final", id] => {
                let id = number(Some(id), lno, "final state")?;
                if id >= nstates {
                    return Err(bad(lno, "final state out of range"));
                }
                finals[id] = true;
                seen_finals += 1;
            }
            ["sigma", syms @ ..] => {
                for s in syms {
                    match symbol(s) {
                        sym @ Symbol::Concrete(_) => {
                            sigma.insert(sym);
                        }
                        _ => return Err(bad(lno, "sigma lists only named symbols")),
                    }
                }
            }
            [src, dst, upper, lower] => {
                let src = number(Some(src), lno, "source state")?;
                let dst = number(Some(dst), lno, "target state")?;
                if src >= nstates || dst >= nstates {
                    return Err(bad(lno, "arc endpoint out of range"));
                }
                let label = Label::new(symbol(upper), symbol(lower));
                for s in [&label.upper, &label.lower] {
                    if matches!(s, Symbol::Concrete(_)) {
                        sigma.insert(s.clone());
                    }
                }
                arcs[src].push(Transition { label, target: dst });
            }
            _ => return Err(bad(lno, format!("unrecognized line `{line}`"))),
        }
    }
    if seen_finals != nfinals {
        return Err(bad(1, format!("header declares {nfinals} finals, found {seen_finals}")));
    }
    Ok(Fst::from_parts(start, finals, arcs, sigma))
}
