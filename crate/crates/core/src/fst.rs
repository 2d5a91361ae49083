//! The network representation and the structural algorithms on it:
//! epsilon removal, trimming, subset construction, minimization,
//! alphabet harmonization, and equivalence.
//!
//! Determinization and minimization treat each `upper:lower` label as one
//! atomic symbol, so two networks are [`equivalent`] when they accept the
//! same label strings. That is stronger than equality of the relations they
//! denote (`a:0 0:b` and `a:b` denote the same pair but differ here).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::symbol::{Label, Symbol};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub label: Label,
    pub target: StateId,
}

/// A finite-state network over `upper:lower` labels.
///
/// `sigma` records the concrete symbols the network knows about. An arc over
/// the unknown symbol `?` matches only symbols outside `sigma`, which is why
/// two networks must be [`harmonize`]d before they are combined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fst {
    start: StateId,
    finals: Vec<bool>,
    arcs: Vec<Vec<Transition>>,
    sigma: BTreeSet<Symbol>,
}

impl Default for Fst {
    fn default() -> Self {
        Fst::null()
    }
}

impl Fst {
    /// The null-set network: one non-final state, no arcs.
    pub fn null() -> Fst {
        Fst { start: 0, finals: vec![false], arcs: vec![Vec::new()], sigma: BTreeSet::new() }
    }

    /// The language containing only the empty string.
    pub fn empty_string() -> Fst {
        let mut n = Fst::null();
        n.set_final(0, true);
        n
    }

    /// A two-state network with one arc.
    pub fn from_label(label: Label) -> Fst {
        let mut n = Fst::null();
        let end = n.add_state();
        n.set_final(end, true);
        n.add_arc(0, label, end);
        n
    }

    pub fn symbol(sym: Symbol) -> Fst {
        Fst::from_label(Label::identity(sym))
    }

    /// `?`: any single symbol.
    pub fn any() -> Fst {
        Fst::symbol(Symbol::Unknown)
    }

    /// `?*`: every string over the open alphabet.
    pub fn sigma_star() -> Fst {
        let mut n = Fst::empty_string();
        n.add_arc(0, Label::identity(Symbol::Unknown), 0);
        n
    }

    /// The identity acceptor for one string of symbols.
    pub fn word<I, S>(symbols: I) -> Fst
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        let mut n = Fst::null();
        let mut cur = 0;
        for s in symbols {
            let next = n.add_state();
            n.add_arc(cur, Label::identity(s.into()), next);
            cur = next;
        }
        n.set_final(cur, true);
        n
    }

    pub fn add_state(&mut self) -> StateId {
        self.finals.push(false);
        self.arcs.push(Vec::new());
        self.finals.len() - 1
    }

    pub fn set_start(&mut self, s: StateId) {
        assert!(s < self.num_states());
        self.start = s;
    }

    pub fn set_final(&mut self, s: StateId, is_final: bool) {
        self.finals[s] = is_final;
    }

    /// Adds an arc; concrete symbols on the label join `sigma`.
    pub fn add_arc(&mut self, src: StateId, label: Label, target: StateId) {
        assert!(src < self.num_states() && target < self.num_states());
        for s in [&label.upper, &label.lower] {
            if let Symbol::Concrete(_) = s {
                self.sigma.insert(s.clone());
            }
        }
        self.arcs[src].push(Transition { label, target });
    }

    /// Declares concrete symbols as known without adding arcs for them.
    pub fn extend_sigma<I: IntoIterator<Item = Symbol>>(&mut self, syms: I) {
        self.sigma.extend(syms.into_iter().filter(|s| matches!(s, Symbol::Concrete(_))));
    }

    /// Removes symbols from `sigma`. They must not occur on any arc; after
    /// removal the unknown symbol covers them.
    pub fn forget_symbols(&mut self, syms: &[Symbol]) {
        for s in syms {
            debug_assert!(
                self.transitions().all(|(_, t)| t.label.upper != *s && t.label.lower != *s),
                "cannot forget `{s}`: it labels an arc"
            );
            self.sigma.remove(s);
        }
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.iter().map(Vec::len).sum()
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|(_, f)| **f).map(|(s, _)| s)
    }

    pub fn arcs(&self, s: StateId) -> &[Transition] {
        &self.arcs[s]
    }

    /// All arcs as `(source, transition)` pairs.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &Transition)> + '_ {
        self.arcs.iter().enumerate().flat_map(|(s, ts)| ts.iter().map(move |t| (s, t)))
    }

    pub fn sigma(&self) -> &BTreeSet<Symbol> {
        &self.sigma
    }

    /// True when every label is an identity pair, i.e. the network denotes a
    /// language.
    pub fn is_acceptor(&self) -> bool {
        self.transitions().all(|(_, t)| t.label.is_identity())
    }

    /// True for the canonical null network (no final state reachable).
    pub fn is_null(&self) -> bool {
        let t = trim(self);
        t.num_states() == 1 && !t.is_final(0) && t.num_arcs() == 0
    }

    /// Copies all states of `other` into `self`, returning the offset of the
    /// copied state ids. Sigma is merged; the caller wires the copy in.
    pub(crate) fn splice(&mut self, other: &Fst) -> StateId {
        let offset = self.num_states();
        for s in 0..other.num_states() {
            self.add_state();
            self.finals[offset + s] = other.finals[s];
        }
        for (s, t) in other.transitions() {
            self.arcs[offset + s].push(Transition { label: t.label.clone(), target: t.target + offset });
        }
        self.sigma.extend(other.sigma.iter().cloned());
        offset
    }

    pub(crate) fn map_labels(&self, f: impl Fn(&Label) -> Label) -> Fst {
        let mut out = self.clone();
        for ts in &mut out.arcs {
            for t in ts.iter_mut() {
                t.label = f(&t.label);
            }
        }
        out
    }

    pub(crate) fn from_parts(
        start: StateId,
        finals: Vec<bool>,
        arcs: Vec<Vec<Transition>>,
        sigma: BTreeSet<Symbol>,
    ) -> Fst {
        let n = Fst { start, finals, arcs, sigma };
        debug_assert!(n.start < n.num_states());
        n
    }
}

/// States reachable from `s` over `(epsilon, epsilon)` arcs, `s` included.
fn epsilon_closure(n: &Fst, s: StateId) -> BTreeSet<StateId> {
    let mut seen = BTreeSet::from([s]);
    let mut stack = vec![s];
    while let Some(q) = stack.pop() {
        for t in n.arcs(q) {
            if t.label.is_epsilon() && seen.insert(t.target) {
                stack.push(t.target);
            }
        }
    }
    seen
}

/// Removes `0:0` arcs. One-sided epsilon labels such as `a:0` are kept.
pub fn epsilon_remove(n: &Fst) -> Fst {
    if n.transitions().all(|(_, t)| !t.label.is_epsilon()) {
        return trim(n);
    }
    let mut finals = vec![false; n.num_states()];
    let mut arcs = vec![Vec::new(); n.num_states()];
    for s in 0..n.num_states() {
        let closure = epsilon_closure(n, s);
        finals[s] = closure.iter().any(|&q| n.is_final(q));
        let mut seen = BTreeSet::new();
        for &q in &closure {
            for t in n.arcs(q) {
                if !t.label.is_epsilon() && seen.insert(t.clone()) {
                    arcs[s].push(t.clone());
                }
            }
        }
    }
    trim(&Fst::from_parts(n.start, finals, arcs, n.sigma.clone()))
}

/// Drops states that are not both accessible and co-accessible.
pub fn trim(n: &Fst) -> Fst {
    let count = n.num_states();
    let mut forward = vec![false; count];
    forward[n.start] = true;
    let mut stack = vec![n.start];
    while let Some(s) = stack.pop() {
        for t in n.arcs(s) {
            if !forward[t.target] {
                forward[t.target] = true;
                stack.push(t.target);
            }
        }
    }

    let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); count];
    for (s, t) in n.transitions() {
        reverse[t.target].push(s);
    }
    let mut backward = vec![false; count];
    let mut stack: Vec<StateId> = n.finals().collect();
    for &f in &stack {
        backward[f] = true;
    }
    while let Some(s) = stack.pop() {
        for &p in &reverse[s] {
            if !backward[p] {
                backward[p] = true;
                stack.push(p);
            }
        }
    }

    if !backward[n.start] {
        let mut null = Fst::null();
        null.sigma = n.sigma.clone();
        return null;
    }

    let mut remap = vec![usize::MAX; count];
    let mut next = 0;
    for s in 0..count {
        if forward[s] && backward[s] {
            remap[s] = next;
            next += 1;
        }
    }
    let mut finals = vec![false; next];
    let mut arcs = vec![Vec::new(); next];
    for s in 0..count {
        if remap[s] == usize::MAX {
            continue;
        }
        finals[remap[s]] = n.is_final(s);
        for t in n.arcs(s) {
            if remap[t.target] != usize::MAX {
                arcs[remap[s]].push(Transition { label: t.label.clone(), target: remap[t.target] });
            }
        }
    }
    Fst::from_parts(remap[n.start], finals, arcs, n.sigma.clone())
}

/// Subset construction over atomic labels. The input must be epsilon-free;
/// `0:0` arcs are removed first if present.
pub fn determinize(n: &Fst) -> Fst {
    let n = if n.transitions().any(|(_, t)| t.label.is_epsilon()) { epsilon_remove(n) } else { n.clone() };
    let mut ids: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
    let mut queue = VecDeque::new();

    let initial = BTreeSet::from([n.start]);
    ids.insert(initial.clone(), 0);
    subsets.push(initial);
    queue.push_back(0);

    let mut finals = Vec::new();
    let mut arcs: Vec<Vec<Transition>> = Vec::new();
    while let Some(id) = queue.pop_front() {
        let subset = subsets[id].clone();
        let mut moves: BTreeMap<&Label, BTreeSet<StateId>> = BTreeMap::new();
        for &q in &subset {
            for t in n.arcs(q) {
                moves.entry(&t.label).or_default().insert(t.target);
            }
        }
        let mut out = Vec::with_capacity(moves.len());
        for (label, targets) in moves {
            let target = match ids.get(&targets) {
                Some(&t) => t,
                None => {
                    let t = subsets.len();
                    ids.insert(targets.clone(), t);
                    subsets.push(targets);
                    queue.push_back(t);
                    t
                }
            };
            out.push(Transition { label: label.clone(), target });
        }
        if arcs.len() <= id {
            arcs.resize(id + 1, Vec::new());
            finals.resize(id + 1, false);
        }
        finals[id] = subset.iter().any(|&q| n.is_final(q));
        arcs[id] = out;
    }
    arcs.resize(subsets.len(), Vec::new());
    finals.resize(subsets.len(), false);
    Fst::from_parts(0, finals, arcs, n.sigma.clone())
}

/// The minimal deterministic network over pair labels, with states numbered
/// breadth-first from a start state 0.
pub fn minimize(n: &Fst) -> Fst {
    type Signature<'a> = Vec<(&'a Label, usize)>;
    let dfa = determinize(&epsilon_remove(n));
    if dfa.is_null() {
        let mut null = Fst::null();
        null.sigma = dfa.sigma.clone();
        return null;
    }
    let dfa = trim(&dfa);

    // Moore refinement. The DFA is trim, so no state is equivalent to the
    // implicit dead state and missing arcs can be left out of signatures.
    let count = dfa.num_states();
    let mut class: Vec<usize> = (0..count).map(|s| usize::from(dfa.is_final(s))).collect();
    let mut num_classes = class.iter().collect::<BTreeSet<_>>().len();
    loop {
        let mut sigs: HashMap<(usize, Signature), usize> = HashMap::new();
        let mut next = vec![0; count];
        for s in 0..count {
            let mut sig: Signature =
                dfa.arcs(s).iter().map(|t| (&t.label, class[t.target])).collect();
            sig.sort();
            let fresh = sigs.len();
            next[s] = *sigs.entry((class[s], sig)).or_insert(fresh);
        }
        let refined = sigs.len();
        class = next;
        if refined == num_classes {
            break;
        }
        num_classes = refined;
    }

    let mut finals = vec![false; num_classes];
    let mut arcs: Vec<BTreeSet<Transition>> = vec![BTreeSet::new(); num_classes];
    for s in 0..count {
        finals[class[s]] = dfa.is_final(s);
        for t in dfa.arcs(s) {
            arcs[class[s]].insert(Transition { label: t.label.clone(), target: class[t.target] });
        }
    }
    let quotient = Fst::from_parts(
        class[dfa.start],
        finals,
        arcs.into_iter().map(|a| a.into_iter().collect()).collect(),
        dfa.sigma.clone(),
    );
    canonical_order(&quotient)
}

/// Renumbers states breadth-first from the start, visiting arcs in label
/// order. For a deterministic network this is a canonical form.
fn canonical_order(n: &Fst) -> Fst {
    let mut remap = vec![usize::MAX; n.num_states()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([n.start]);
    remap[n.start] = 0;
    order.push(n.start);
    while let Some(s) = queue.pop_front() {
        let mut ts: Vec<&Transition> = n.arcs(s).iter().collect();
        ts.sort();
        for t in ts {
            if remap[t.target] == usize::MAX {
                remap[t.target] = order.len();
                order.push(t.target);
                queue.push_back(t.target);
            }
        }
    }
    let finals = order.iter().map(|&s| n.is_final(s)).collect();
    let arcs = order
        .iter()
        .map(|&s| {
            let mut ts: Vec<Transition> = n
                .arcs(s)
                .iter()
                .map(|t| Transition { label: t.label.clone(), target: remap[t.target] })
                .collect();
            ts.sort();
            ts
        })
        .collect();
    Fst::from_parts(0, finals, arcs, n.sigma.clone())
}

/// Spells out what `?` covers in `n` for the symbols of `extra` that `n`
/// did not know about, then adds them to its sigma.
fn expand_unknowns(n: &Fst, extra: &BTreeSet<Symbol>) -> Fst {
    if extra.is_empty() {
        return n.clone();
    }
    let mut out = n.clone();
    for ts in &mut out.arcs {
        let mut added = Vec::new();
        for t in ts.iter() {
            let Label { upper, lower } = &t.label;
            let labels: Vec<Label> = match (upper.is_unknown(), lower.is_unknown()) {
                (true, true) => extra.iter().map(|s| Label::identity(s.clone())).collect(),
                (true, false) => extra.iter().map(|s| Label::new(s.clone(), lower.clone())).collect(),
                (false, true) => extra.iter().map(|s| Label::new(upper.clone(), s.clone())).collect(),
                (false, false) => continue,
            };
            added.extend(labels.into_iter().map(|label| Transition { label, target: t.target }));
        }
        ts.extend(added);
    }
    out.sigma.extend(extra.iter().cloned());
    out
}

/// Rewrites both networks over the union of their alphabets, so that `?`
/// means the same thing in each.
pub fn harmonize(a: &Fst, b: &Fst) -> (Fst, Fst) {
    if a.sigma == b.sigma {
        return (a.clone(), b.clone());
    }
    let only_b: BTreeSet<Symbol> = b.sigma.difference(&a.sigma).cloned().collect();
    let only_a: BTreeSet<Symbol> = a.sigma.difference(&b.sigma).cloned().collect();
    (expand_unknowns(a, &only_b), expand_unknowns(b, &only_a))
}

/// Extends `n` to a given alphabet (a superset of its own is expected).
pub fn harmonize_to(n: &Fst, sigma: &BTreeSet<Symbol>) -> Fst {
    let extra: BTreeSet<Symbol> = sigma.difference(&n.sigma).cloned().collect();
    expand_unknowns(n, &extra)
}

/// Label-string equivalence after harmonization.
pub fn equivalent(a: &Fst, b: &Fst) -> bool {
    let (a, b) = harmonize(a, b);
    minimize(&a) == minimize(&b)
}
