use fsrx::algebra::{compose, crossproduct, lower, upper};
use fsrx::apply::pairs_over;
use fsrx::fst::{determinize, epsilon_remove, equivalent, harmonize, minimize, trim};
use fsrx::regex::compile_str;
use fsrx::Fst;
use proptest::prelude::*;

/// Random acceptor expressions over a, b, c and the unknown symbol.
fn acceptor() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("a".to_string()),
        Just("b".to_string()),
        Just("c".to_string()),
        Just("?".to_string()),
        Just("[]".to_string()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} {y}]")),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} | {y}]")),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} & {y}]")),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} - {y}]")),
            inner.clone().prop_map(|x| format!("[{x}]*")),
            inner.clone().prop_map(|x| format!("~[{x}]")),
            inner.clone().prop_map(|x| format!("$[{x}]")),
            inner.prop_map(|x| format!("({x})")),
        ]
    })
}

/// Random relations: pair labels, one-sided epsilons and products.
fn relation() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("a".to_string()),
        Just("a:b".to_string()),
        Just("b:0".to_string()),
        Just("0:c".to_string()),
        Just("?".to_string()),
        Just("c:?".to_string()),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} {y}]")),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| format!("[{x} | {y}]")),
            inner.prop_map(|x| format!("[{x}]*")),
        ]
    })
}

fn net(text: &str) -> Fst {
    compile_str(text).unwrap()
}

/// Pairs up to length 3, with `z` standing in for symbols nobody mentions.
fn behavior(n: &Fst) -> std::collections::BTreeSet<(String, String)> {
    pairs_over(n, 3, &["a", "b", "c", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normalization_preserves_pairs(e in relation()) {
        let n = net(&e);
        let want = behavior(&n);
        prop_assert_eq!(&behavior(&epsilon_remove(&n)), &want);
        prop_assert_eq!(&behavior(&trim(&n)), &want);
        prop_assert_eq!(&behavior(&determinize(&n)), &want);
        prop_assert_eq!(&behavior(&minimize(&n)), &want);
    }

    #[test]
    fn determinize_and_minimize_are_idempotent(e in acceptor()) {
        let d = determinize(&net(&e));
        let dd = determinize(&d);
        prop_assert_eq!(d.num_states(), dd.num_states());
        prop_assert!(equivalent(&d, &dd));
        let m = minimize(&d);
        prop_assert_eq!(&minimize(&m), &m);
    }

    #[test]
    fn de_morgan(x in acceptor(), y in acceptor()) {
        let lhs = net(&format!("~[{x} | {y}] ;"));
        let rhs = net(&format!("~[{x}] & ~[{y}] ;"));
        prop_assert!(equivalent(&lhs, &rhs));
        let lhs = net(&format!("~[{x} & {y}] ;"));
        let rhs = net(&format!("~[{x}] | ~[{y}] ;"));
        prop_assert!(equivalent(&lhs, &rhs));
    }

    #[test]
    fn contains_is_sigma_star_sandwich(x in acceptor()) {
        let dollar = net(&format!("$[{x}] ;"));
        let sandwich = net(&format!("?* [{x}] ?* ;"));
        prop_assert!(equivalent(&dollar, &sandwich));
    }

    #[test]
    fn crossproduct_projections(x in acceptor(), y in acceptor()) {
        let (a, b) = (net(&x), net(&y));
        prop_assume!(!a.is_null() && !b.is_null());
        let p = crossproduct(&a, &b).unwrap();
        prop_assert!(equivalent(&upper(&p), &a));
        prop_assert!(equivalent(&lower(&p), &b));
    }

    #[test]
    fn composition_is_associative(x in relation(), y in relation(), z in relation()) {
        let (a, b, c) = (net(&x), net(&y), net(&z));
        let left = compose(&compose(&a, &b), &c);
        let right = compose(&a, &compose(&b, &c));
        prop_assert!(equivalent(&left, &right));
    }

    #[test]
    fn harmonization_preserves_membership(e in relation()) {
        let n = net(&e);
        let other = net("d e ;");
        let (h, _) = harmonize(&n, &other);
        prop_assert_eq!(
            pairs_over(&n, 3, &["d", "e", "z"]),
            pairs_over(&h, 3, &["d", "e", "z"])
        );
    }

    #[test]
    fn inverse_swaps_pairs(e in relation()) {
        let n = net(&e);
        let swapped: std::collections::BTreeSet<_> =
            behavior(&n).into_iter().map(|(u, l)| (l, u)).collect();
        prop_assert_eq!(behavior(&fsrx::algebra::inverse(&n)), swapped);
    }
}
