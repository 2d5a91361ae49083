//! The regular-expression operators over networks.
//!
//! Every binary operation harmonizes its operands first, and every result is
//! returned minimized. Boolean operators (complement, intersection, minus)
//! and the language-forming operators (contains, ignore, crossproduct,
//! term complement) accept only acceptors.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::fst::{determinize, epsilon_remove, harmonize, minimize, Fst, StateId};
use crate::symbol::{Label, Symbol};

fn require_acceptor(op: &'static str, n: &Fst) -> Result<()> {
    if n.is_acceptor() {
        Ok(())
    } else {
        Err(Error::NonLanguageOperand { op, position: None })
    }
}

pub fn concat(a: &Fst, b: &Fst) -> Fst {
    let (mut out, b) = harmonize(a, b);
    let a_finals: Vec<StateId> = out.finals().collect();
    let offset = out.splice(&b);
    for f in a_finals {
        out.set_final(f, false);
        out.add_arc(f, Label::epsilon(), offset + b.start());
    }
    minimize(&out)
}

pub fn union(a: &Fst, b: &Fst) -> Fst {
    let (a, b) = harmonize(a, b);
    let mut out = Fst::null();
    let oa = out.splice(&a);
    let ob = out.splice(&b);
    out.add_arc(0, Label::epsilon(), oa + a.start());
    out.add_arc(0, Label::epsilon(), ob + b.start());
    minimize(&out)
}

pub fn star(a: &Fst) -> Fst {
    let mut out = Fst::empty_string();
    let offset = out.splice(a);
    out.add_arc(0, Label::epsilon(), offset + a.start());
    for f in a.finals() {
        out.add_arc(offset + f, Label::epsilon(), 0);
    }
    minimize(&out)
}

pub fn plus(a: &Fst) -> Fst {
    concat(a, &star(a))
}

/// `(A)`: A or the empty string.
pub fn option(a: &Fst) -> Fst {
    union(a, &Fst::empty_string())
}

pub fn inverse(a: &Fst) -> Fst {
    minimize(&a.map_labels(Label::inverted))
}

/// Product of two acceptors over equal labels.
pub fn intersect(a: &Fst, b: &Fst) -> Result<Fst> {
    require_acceptor("intersection", a)?;
    require_acceptor("intersection", b)?;
    let (a, b) = harmonize(a, b);
    let (a, b) = (epsilon_remove(&a), epsilon_remove(&b));

    let mut out = Fst::null();
    out.extend_sigma(a.sigma().iter().cloned());
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::from([((a.start(), b.start()), 0)]);
    let mut queue = VecDeque::from([(a.start(), b.start())]);
    while let Some((p, q)) = queue.pop_front() {
        let src = ids[&(p, q)];
        out.set_final(src, a.is_final(p) && b.is_final(q));
        for ta in a.arcs(p) {
            for tb in b.arcs(q).iter().filter(|tb| tb.label == ta.label) {
                let key = (ta.target, tb.target);
                let dst = *ids.entry(key).or_insert_with(|| {
                    queue.push_back(key);
                    out.add_state()
                });
                out.add_arc(src, ta.label.clone(), dst);
            }
        }
    }
    Ok(minimize(&out))
}

/// All strings over the open alphabet that are not in `a`.
pub fn complement(a: &Fst) -> Result<Fst> {
    require_acceptor("complement", a)?;
    let dfa = determinize(&epsilon_remove(a));
    let alphabet: Vec<Label> = std::iter::once(Symbol::Unknown)
        .chain(dfa.sigma().iter().cloned())
        .map(Label::identity)
        .collect();

    let mut out = dfa.clone();
    let sink = out.add_state();
    for s in 0..out.num_states() {
        let missing: Vec<Label> = alphabet
            .iter()
            .filter(|l| !out.arcs(s).iter().any(|t| &t.label == *l))
            .cloned()
            .collect();
        for l in missing {
            out.add_arc(s, l, sink);
        }
        let flipped = !out.is_final(s);
        out.set_final(s, flipped);
    }
    Ok(minimize(&out))
}

pub fn minus(a: &Fst, b: &Fst) -> Result<Fst> {
    require_acceptor("minus", a)?;
    require_acceptor("minus", b)?;
    let (a, b) = harmonize(a, b);
    intersect(&a, &complement(&b)?)
}

/// `\A`: any single symbol that is not a string of A.
pub fn term_complement(a: &Fst) -> Result<Fst> {
    require_acceptor("term complement", a)?;
    minus(&Fst::any(), a)
}

/// `$A`: strings containing at least one string of A.
pub fn contains(a: &Fst) -> Result<Fst> {
    require_acceptor("contains", a)?;
    Ok(concat(&concat(&Fst::sigma_star(), a), &Fst::sigma_star()))
}

/// `A/B`: strings of A with strings of B freely interspersed. Each state of A
/// gets its own copy of B as a detour loop.
pub fn ignore(a: &Fst, b: &Fst) -> Result<Fst> {
    require_acceptor("ignore", a)?;
    require_acceptor("ignore", b)?;
    let (a, b) = harmonize(a, b);
    let b = minimize(&b);
    if b.is_null() {
        return Ok(minimize(&a));
    }
    let mut out = epsilon_remove(&a);
    for p in 0..out.num_states() {
        let offset = out.splice(&b);
        for f in b.finals() {
            out.set_final(offset + f, false);
            out.add_arc(offset + f, Label::epsilon(), p);
        }
        out.add_arc(p, Label::epsilon(), offset + b.start());
    }
    Ok(minimize(&out))
}

/// `A .x. B`: pairs every string of A with every string of B. When lengths
/// differ, the shorter side is padded with trailing epsilons.
pub fn crossproduct(a: &Fst, b: &Fst) -> Result<Fst> {
    require_acceptor("crossproduct", a)?;
    require_acceptor("crossproduct", b)?;
    let (a, b) = harmonize(a, b);
    let (a, b) = (epsilon_remove(&a), epsilon_remove(&b));

    // None on one side means that side has finished and only the other
    // side still advances.
    type Key = (Option<StateId>, Option<StateId>);
    let mut out = Fst::null();
    out.extend_sigma(a.sigma().iter().cloned());
    let start: Key = (Some(a.start()), Some(b.start()));
    let mut ids: HashMap<Key, StateId> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(key) = queue.pop_front() {
        let src = ids[&key];
        let mut moves: Vec<(Label, Key)> = Vec::new();
        match key {
            (Some(p), Some(q)) => {
                out.set_final(src, a.is_final(p) && b.is_final(q));
                for ta in a.arcs(p) {
                    for tb in b.arcs(q) {
                        let label = Label::new(ta.label.upper.clone(), tb.label.upper.clone());
                        moves.push((label, (Some(ta.target), Some(tb.target))));
                    }
                }
                if b.is_final(q) {
                    for ta in a.arcs(p) {
                        let label = Label::new(ta.label.upper.clone(), Symbol::Epsilon);
                        moves.push((label, (Some(ta.target), None)));
                    }
                }
                if a.is_final(p) {
                    for tb in b.arcs(q) {
                        let label = Label::new(Symbol::Epsilon, tb.label.upper.clone());
                        moves.push((label, (None, Some(tb.target))));
                    }
                }
            }
            (Some(p), None) => {
                out.set_final(src, a.is_final(p));
                for ta in a.arcs(p) {
                    let label = Label::new(ta.label.upper.clone(), Symbol::Epsilon);
                    moves.push((label, (Some(ta.target), None)));
                }
            }
            (None, Some(q)) => {
                out.set_final(src, b.is_final(q));
                for tb in b.arcs(q) {
                    let label = Label::new(Symbol::Epsilon, tb.label.upper.clone());
                    moves.push((label, (None, Some(tb.target))));
                }
            }
            (None, None) => unreachable!(),
        }
        for (label, next) in moves {
            let dst = *ids.entry(next).or_insert_with(|| {
                queue.push_back(next);
                out.add_state()
            });
            out.add_arc(src, label, dst);
        }
    }
    Ok(minimize(&out))
}

/// `A .o. B`: relational composition, matching A's lower side against B's
/// upper side.
///
/// One-sided epsilon moves are sequenced: between two matched moves, all of
/// A's `x:0` moves come before B's `0:y` moves, so each pair of paths is
/// realized once.
pub fn compose(a: &Fst, b: &Fst) -> Fst {
    let (a, b) = harmonize(a, b);
    let (a, b) = (epsilon_remove(&a), epsilon_remove(&b));

    // The flag is set after a move of B alone; A may not move alone then.
    type Key = (StateId, StateId, bool);
    let mut out = Fst::null();
    out.extend_sigma(a.sigma().iter().cloned());
    let start: Key = (a.start(), b.start(), false);
    let mut ids: HashMap<Key, StateId> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(key @ (p, q, b_moved)) = queue.pop_front() {
        let src = ids[&key];
        out.set_final(src, a.is_final(p) && b.is_final(q));
        let mut moves: Vec<(Label, Key)> = Vec::new();
        for ta in a.arcs(p) {
            if ta.label.lower.is_epsilon() {
                if !b_moved {
                    moves.push((ta.label.clone(), (ta.target, q, false)));
                }
                continue;
            }
            for tb in b.arcs(q).iter().filter(|tb| tb.label.upper == ta.label.lower) {
                let label = Label::new(ta.label.upper.clone(), tb.label.lower.clone());
                moves.push((label, (ta.target, tb.target, false)));
            }
        }
        for tb in b.arcs(q).iter().filter(|tb| tb.label.upper.is_epsilon()) {
            moves.push((tb.label.clone(), (p, tb.target, true)));
        }
        for (label, next) in moves {
            let dst = *ids.entry(next).or_insert_with(|| {
                queue.push_back(next);
                out.add_state()
            });
            out.add_arc(src, label, dst);
        }
    }
    minimize(&out)
}

/// Upper-side projection as an acceptor.
pub fn upper(a: &Fst) -> Fst {
    minimize(&a.map_labels(|l| Label::identity(l.upper.clone())))
}

/// Lower-side projection as an acceptor.
pub fn lower(a: &Fst) -> Fst {
    minimize(&a.map_labels(|l| Label::identity(l.lower.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::equivalent;

    fn s(name: &str) -> Fst {
        Fst::symbol(Symbol::new(name))
    }

    fn w(names: &[&str]) -> Fst {
        Fst::word(names.iter().copied())
    }

    #[test]
    fn concat_and_union_basics() {
        assert!(equivalent(&concat(&s("a"), &s("b")), &w(&["a", "b"])));
        assert!(equivalent(&concat(&Fst::empty_string(), &s("a")), &s("a")));
        assert!(equivalent(&union(&s("a"), &Fst::null()), &s("a")));
        assert_eq!(union(&s("a"), &s("a")), minimize(&s("a")));
    }

    #[test]
    fn intersect_and_minus() {
        let aa = intersect(&star(&s("a")), &w(&["a", "a"])).unwrap();
        assert!(equivalent(&aa, &w(&["a", "a"])));
        assert!(intersect(&s("a"), &s("b")).unwrap().is_null());
        assert!(equivalent(&minus(&union(&s("a"), &s("b")), &s("b")).unwrap(), &s("a")));
        assert!(minus(&star(&s("a")), &star(&s("a"))).unwrap().is_null());
    }

    #[test]
    fn complement_of_extremes() {
        assert!(equivalent(&complement(&Fst::null()).unwrap(), &Fst::sigma_star()));
        assert!(complement(&Fst::sigma_star()).unwrap().is_null());
    }

    #[test]
    fn relations_are_rejected_by_boolean_operators() {
        let rel = crossproduct(&s("a"), &s("b")).unwrap();
        for r in [
            complement(&rel),
            intersect(&rel, &s("a")),
            minus(&s("a"), &rel),
            contains(&rel),
            term_complement(&rel),
            ignore(&rel, &s("a")),
            crossproduct(&rel, &s("a")),
        ] {
            assert!(matches!(r, Err(Error::NonLanguageOperand { .. })));
        }
    }

    #[test]
    fn crossproduct_pads_with_trailing_epsilons() {
        let x = crossproduct(&w(&["a", "b"]), &s("x")).unwrap();
        let labels: Vec<String> = x.transitions().map(|(_, t)| t.label.to_string()).collect();
        assert_eq!(labels, vec!["a:x", "b:0"]);
        let ab = crossproduct(&s("a"), &s("b")).unwrap();
        assert_eq!(ab.num_arcs(), 1);
    }

    #[test]
    fn compose_and_inverse() {
        let ab = crossproduct(&s("a"), &s("b")).unwrap();
        let bc = crossproduct(&s("b"), &s("c")).unwrap();
        let ac = crossproduct(&s("a"), &s("c")).unwrap();
        assert!(equivalent(&compose(&ab, &bc), &ac));
        assert!(equivalent(&compose(&s("a"), &ab), &ab));
        let ba = crossproduct(&s("b"), &s("a")).unwrap();
        assert!(equivalent(&inverse(&ab), &ba));
        assert!(equivalent(&inverse(&s("a")), &s("a")));
    }

    #[test]
    fn closures() {
        assert!(equivalent(&star(&Fst::null()), &Fst::empty_string()));
        let p = plus(&s("a"));
        assert!(equivalent(&intersect(&p, &Fst::empty_string()).unwrap(), &Fst::null()));
        assert!(equivalent(&option(&s("a")), &union(&s("a"), &Fst::empty_string())));
    }

    #[test]
    fn ignore_with_null_is_identity() {
        let ab = w(&["a", "b"]);
        assert!(equivalent(&ignore(&ab, &Fst::null()).unwrap(), &ab));
    }
}
