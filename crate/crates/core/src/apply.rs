//! Running a network over strings.

use std::collections::BTreeSet;

use crate::fst::{epsilon_remove, Fst, StateId};
use crate::symbol::{Label, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Input on the upper side, outputs read off the lower side.
    Down,
    /// Input on the lower side, outputs read off the upper side.
    Up,
}

#[derive(Clone, Debug)]
pub struct ApplyConfig {
    pub max_outputs: usize,
    /// Epsilon-input arcs allowed between two consumed input symbols.
    pub max_epsilon_insertions: usize,
    pub side: Side,
}

impl Default for ApplyConfig {
    fn default() -> Self {
        ApplyConfig { max_outputs: 1000, max_epsilon_insertions: 3, side: Side::Down }
    }
}

impl ApplyConfig {
    pub fn up() -> Self {
        ApplyConfig { side: Side::Up, ..Default::default() }
    }
}

/// Outputs of one application, sorted, plus whether a bound cut the
/// enumeration short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Applied {
    pub outputs: Vec<Vec<String>>,
    pub truncated: bool,
}

impl Applied {
    /// Outputs with their symbols joined by `sep`.
    pub fn joined(&self, sep: &str) -> Vec<String> {
        self.outputs.iter().map(|o| o.join(sep)).collect()
    }
}

/// Splits input text into symbols: one per character, or whitespace-separated
/// tokens.
pub fn split_input(text: &str, chars: bool) -> Vec<String> {
    if chars {
        text.chars().filter(|c| !c.is_whitespace()).map(String::from).collect()
    } else {
        text.split_whitespace().map(String::from).collect()
    }
}

struct Search<'a> {
    net: &'a Fst,
    input: Vec<Symbol>,
    cfg: &'a ApplyConfig,
    outputs: BTreeSet<Vec<String>>,
    truncated: bool,
    done: bool,
}

impl Search<'_> {
    fn sides<'l>(&self, label: &'l Label) -> (&'l Symbol, &'l Symbol) {
        match self.cfg.side {
            Side::Down => (&label.upper, &label.lower),
            Side::Up => (&label.lower, &label.upper),
        }
    }

    fn matches(&self, sym: &Symbol, pos: usize) -> bool {
        match (sym, self.input.get(pos)) {
            (Symbol::Unknown, Some(c)) => !self.net.sigma().contains(c),
            (Symbol::Concrete(_), Some(c)) => sym == c,
            _ => false,
        }
    }

    fn walk(&mut self, state: StateId, pos: usize, inserted: usize, out: &mut Vec<String>) {
        if self.done {
            return;
        }
        if pos == self.input.len() && self.net.is_final(state) && !self.outputs.contains(out.as_slice()) {
            if self.outputs.len() >= self.cfg.max_outputs {
                self.truncated = true;
                self.done = true;
                return;
            }
            self.outputs.insert(out.clone());
        }
        for t in self.net.arcs(state) {
            let (read, write) = self.sides(&t.label);
            let (next_pos, next_inserted) = if read.is_epsilon() {
                if inserted >= self.cfg.max_epsilon_insertions {
                    self.truncated = true;
                    continue;
                }
                (pos, inserted + 1)
            } else if self.matches(read, pos) {
                (pos + 1, 0)
            } else {
                continue;
            };
            let pushed = match write {
                Symbol::Epsilon => false,
                Symbol::Unknown if read.is_unknown() => {
                    out.push(self.input[pos].to_string());
                    true
                }
                other => {
                    out.push(other.to_string());
                    true
                }
            };
            self.walk(t.target, next_pos, next_inserted, out);
            if pushed {
                out.pop();
            }
        }
    }
}

/// All strings the network pairs with `input` on the configured side.
///
/// Input symbols outside the network's sigma are matched by `?` arcs. When
/// epsilon-input loops make the output set infinite, enumeration stops at the
/// configured bounds and `truncated` is set.
pub fn apply<S: AsRef<str>>(net: &Fst, input: &[S], cfg: &ApplyConfig) -> Applied {
    let mut search = Search {
        net,
        input: input.iter().map(|s| Symbol::new(s.as_ref())).collect(),
        cfg,
        outputs: BTreeSet::new(),
        truncated: false,
        done: false,
    };
    search.walk(net.start(), 0, 0, &mut Vec::new());
    Applied { outputs: search.outputs.into_iter().collect(), truncated: search.truncated }
}

/// Apply down with default bounds, one symbol per character.
pub fn apply_down(net: &Fst, word: &str) -> BTreeSet<String> {
    apply(net, &split_input(word, true), &ApplyConfig::default()).joined("").into_iter().collect()
}

/// Apply up with default bounds, one symbol per character.
pub fn apply_up(net: &Fst, word: &str) -> BTreeSet<String> {
    apply(net, &split_input(word, true), &ApplyConfig::up()).joined("").into_iter().collect()
}

/// Relation pairs with both sides at most `max_len` symbols long, joined
/// into strings. Arcs over `?` contribute no pairs.
pub fn pairs(net: &Fst, max_len: usize) -> BTreeSet<(String, String)> {
    pairs_over(net, max_len, &[])
}

/// Like [`pairs`], but `?` is instantiated with each symbol of `extra` that
/// is outside the network's sigma.
pub fn pairs_over(net: &Fst, max_len: usize, extra: &[&str]) -> BTreeSet<(String, String)> {
    let net = epsilon_remove(net);
    let unknowns: Vec<Symbol> =
        extra.iter().map(|s| Symbol::new(s)).filter(|s| !net.sigma().contains(s)).collect();
    let mut found = BTreeSet::new();
    let mut stack = vec![(net.start(), Vec::<Symbol>::new(), Vec::<Symbol>::new())];
    while let Some((state, up, low)) = stack.pop() {
        if net.is_final(state) {
            found.insert((render(&up), render(&low)));
        }
        for t in net.arcs(state) {
            for label in instantiate(&t.label, &unknowns) {
                let mut up = up.clone();
                let mut low = low.clone();
                if !label.upper.is_epsilon() {
                    up.push(label.upper.clone());
                }
                if !label.lower.is_epsilon() {
                    low.push(label.lower.clone());
                }
                if up.len() <= max_len && low.len() <= max_len {
                    stack.push((t.target, up, low));
                }
            }
        }
    }
    found
}

fn instantiate(label: &Label, unknowns: &[Symbol]) -> Vec<Label> {
    match (label.upper.is_unknown(), label.lower.is_unknown()) {
        (false, false) => vec![label.clone()],
        (true, true) => unknowns.iter().cloned().map(Label::identity).collect(),
        (true, false) => unknowns.iter().map(|u| Label::new(u.clone(), label.lower.clone())).collect(),
        (false, true) => unknowns.iter().map(|u| Label::new(label.upper.clone(), u.clone())).collect(),
    }
}

fn render(syms: &[Symbol]) -> String {
    syms.iter().map(Symbol::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::crossproduct;

    #[test]
    fn pair_enumeration_basics() {
        let ab = crossproduct(&Fst::symbol("a".into()), &Fst::symbol("b".into())).unwrap();
        assert_eq!(pairs(&ab, 1), BTreeSet::from([("a".to_string(), "b".to_string())]));
        assert!(pairs(&Fst::null(), 3).is_empty());
    }

    #[test]
    fn unknown_input_passes_through() {
        let n = Fst::sigma_star();
        assert_eq!(apply_down(&n, "zq"), BTreeSet::from(["zq".to_string()]));
    }

    #[test]
    fn output_bound_is_reported() {
        // 0:a loop at a final start state: infinitely many outputs
        let mut n = Fst::empty_string();
        n.add_arc(0, Label::new(Symbol::Epsilon, "a".into()), 0);
        let cfg = ApplyConfig { max_outputs: 2, max_epsilon_insertions: 10, side: Side::Down };
        let r = apply(&n, &Vec::<String>::new(), &cfg);
        assert_eq!(r.outputs.len(), 2);
        assert!(r.truncated);
    }

    #[test]
    fn split_modes() {
        assert_eq!(split_input("abc", true), vec!["a", "b", "c"]);
        assert_eq!(split_input("ab c", false), vec!["ab", "c"]);
    }
}
