//! Worked examples checked against brute-force enumeration.

use std::collections::BTreeSet;

use fsrx::algebra::inverse;
use fsrx::apply::{apply, apply_down, apply_up, pairs_over, ApplyConfig, Side};
use fsrx::fst::{equivalent, minimize};
use fsrx::regex::compile_str;
use fsrx::replace::{left_context, right_context, BracketSymbols};
use fsrx::Fst;

fn strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut all = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w| alphabet.iter().map(move |ch| format!("{w}{ch}")))
            .collect();
        all.extend(frontier.iter().cloned());
    }
    all
}

fn accepts(n: &Fst, w: &str) -> bool {
    apply_down(n, w).contains(w)
}

fn check_language(expr: &str, alphabet: &[char], max_len: usize, oracle: impl Fn(&str) -> bool) {
    let n = compile_str(expr).unwrap();
    for w in strings(alphabet, max_len) {
        assert_eq!(accepts(&n, &w), oracle(&w), "`{expr}` on {w:?}");
    }
}

#[test]
fn ignore_accepts_ab_with_any_x() {
    check_language("[a b]/x ;", &['a', 'b', 'x', 'z'], 6, |w| w.replace('x', "") == "ab");
}

#[test]
fn term_complement_is_every_other_single_symbol() {
    // `\[a a]`: single symbols, since no single symbol is the string aa
    check_language("\\[a a] ;", &['a', 'b', 'z'], 3, |w| w.chars().count() == 1);
    check_language("\\a ;", &['a', 'b', 'z'], 3, |w| w.chars().count() == 1 && w != "a");
}

#[test]
fn no_substring_ab() {
    check_language("~$[a b] ;", &['a', 'b', 'c', 'z'], 5, |w| !w.contains("ab"));
}

#[test]
fn shared_prefix_minimizes_to_three_states() {
    let m = minimize(&compile_str("[a b] | [a c] ;").unwrap());
    assert_eq!(m.num_states(), 3);
    check_language("[a b] | [a c] ;", &['a', 'b', 'c'], 3, |w| w == "ab" || w == "ac");
}

#[test]
fn pairs_of_simple_replacement() {
    let n = compile_str("a -> x ;").unwrap();
    let want: BTreeSet<(String, String)> = strings(&['a', 'b', 'x'], 2)
        .into_iter()
        .map(|u| {
            let l = u.replace('a', "x");
            (u, l)
        })
        .collect();
    assert_eq!(pairs_over(&n, 2, &["b"]), want);
}

fn strip(w: &str) -> String {
    w.chars().filter(|c| *c != '<' && *c != '>').collect()
}

/// Left context: at every split, the prefix ends in LEFT (brackets ignored,
/// not ending in `<`) exactly when the suffix starts with `<` (after any `>`).
fn left_oracle(w: &str, left: &[&str]) -> bool {
    (0..=w.len()).all(|i| {
        let (x, y) = w.split_at(i);
        let ends = left.iter().any(|l| strip(x).ends_with(l)) && !x.ends_with('<');
        let starts = y.trim_start_matches('>').starts_with('<');
        ends == starts
    })
}

/// The mirror image for the right context.
fn right_oracle(w: &str, right: &[&str]) -> bool {
    (0..=w.len()).all(|i| {
        let (x, y) = w.split_at(i);
        let ends = x.trim_end_matches('<').ends_with('>');
        let starts = right.iter().any(|r| strip(y).starts_with(r)) && !y.starts_with('>');
        ends == starts
    })
}

#[test]
fn context_constraints_match_definition() {
    let b = BracketSymbols::default();
    let alphabet = ['a', 'b', '<', '>'];
    let left = left_context(&compile_str("a b ;").unwrap(), &b).unwrap();
    let right = right_context(&compile_str("a ;").unwrap(), &b).unwrap();
    for w in strings(&alphabet, 5) {
        assert_eq!(accepts(&left, &w), left_oracle(&w, &["ab"]), "left on {w:?}");
        assert_eq!(accepts(&right, &w), right_oracle(&w, &["a"]), "right on {w:?}");
    }
}

#[test]
fn inverse_arrows_undo_forward_rules() {
    let forward = compile_str("a -> x ;").unwrap();
    assert!(equivalent(&compile_str("x <- a ;").unwrap(), &inverse(&forward)));

    // down through `x (<-) a` reaches every u that `a (->) x` sends to w
    let optional = compile_str("a (->) x ;").unwrap();
    let backward = compile_str("x (<-) a ;").unwrap();
    let words = strings(&['a', 'b', 'x'], 3);
    for w in &words {
        let want: BTreeSet<String> = words
            .iter()
            .filter(|u| apply_down(&optional, u).contains(w))
            .cloned()
            .collect();
        assert_eq!(apply_down(&backward, w), want, "down on {w:?}");
        assert_eq!(apply_up(&optional, w), want, "up on {w:?}");
    }
    assert_eq!(apply_down(&backward, "x"), BTreeSet::from(["a".to_string(), "x".to_string()]));
}

#[test]
fn bounded_insertion_on_empty_input() {
    let net = compile_str("[] -> a | b ;").unwrap();
    let cfg = |budget| ApplyConfig { max_outputs: 1000, max_epsilon_insertions: budget, side: Side::Down };
    let empty: [&str; 0] = [];
    for budget in 1..=3 {
        let r = apply(&net, &empty, &cfg(budget));
        // every string over {a, b} up to the budget that the relation pairs with ""
        let want: BTreeSet<String> = strings(&['a', 'b'], budget)
            .into_iter()
            .filter(|w| apply_up(&net, w).contains(""))
            .collect();
        assert!(want.contains("a") && want.contains("b"));
        assert_eq!(r.joined("").into_iter().collect::<BTreeSet<_>>(), want, "budget {budget}");
        assert!(r.truncated);
    }
}

#[test]
fn repeated_application_is_stable() {
    let net = compile_str("a b -> x \\/ a b _ a ;").unwrap();
    let first = apply_down(&net, "abababa");
    for _ in 0..5 {
        assert_eq!(apply_down(&compile_str("a b -> x \\/ a b _ a ;").unwrap(), "abababa"), first);
        assert_eq!(apply_down(&net, "abababa"), first);
    }
}
