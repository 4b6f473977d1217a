//! Nondeterministic finite automata with ε-transitions over [`Letter`]s.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::semilinear::{CoordSpace, LinearSet, SemilinearSet};

/// Default state cap for path–cycle Parikh images.
pub const DEFAULT_MAX_PARIKH_STATES: usize = 12;

const MAX_CYCLES: usize = 64;
const MAX_CYCLE_SETS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub from: usize,
    /// `None` is ε.
    pub label: Option<Letter>,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nfa {
    states: usize,
    initial: usize,
    accepting: BTreeSet<usize>,
    transitions: Vec<Transition>,
}

impl Nfa {
    pub fn new(
        states: usize,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
        transitions: Vec<Transition>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::input("automaton needs at least one state"));
        }
        let accepting: BTreeSet<usize> = accepting.into_iter().collect();
        let bad = |s: usize| s >= states;
        if bad(initial)
            || accepting.iter().any(|&s| bad(s))
            || transitions.iter().any(|t| bad(t.from) || bad(t.to))
        {
            return Err(Error::input("state id out of range"));
        }
        Ok(Self::from_parts(states, initial, accepting, transitions))
    }

    pub(crate) fn from_parts(
        states: usize,
        initial: usize,
        accepting: BTreeSet<usize>,
        mut transitions: Vec<Transition>,
    ) -> Self {
        transitions.sort();
        transitions.dedup();
        Nfa {
            states,
            initial,
            accepting,
            transitions,
        }
    }

    /// Accepts nothing.
    pub fn empty_language() -> Self {
        Self::from_parts(1, 0, BTreeSet::new(), Vec::new())
    }

    /// Accepts exactly `word`.
    pub fn from_word(word: &[Letter]) -> Self {
        let n = word.len();
        let transitions = word
            .iter()
            .enumerate()
            .map(|(i, l)| Transition {
                from: i,
                label: Some(l.clone()),
                to: i + 1,
            })
            .collect();
        Self::from_parts(n + 1, 0, BTreeSet::from([n]), transitions)
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Letters appearing on transitions.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.transitions
            .iter()
            .filter_map(|t| t.label.clone())
            .collect()
    }

    fn shifted(&self, by: usize) -> impl Iterator<Item = Transition> + '_ {
        self.transitions.iter().map(move |t| Transition {
            from: t.from + by,
            label: t.label.clone(),
            to: t.to + by,
        })
    }

    pub fn union(&self, other: &Nfa) -> Nfa {
        let a = 1;
        let b = 1 + self.states;
        let mut ts: Vec<Transition> = self.shifted(a).chain(other.shifted(b)).collect();
        ts.push(eps(0, self.initial + a));
        ts.push(eps(0, other.initial + b));
        let accepting = self
            .accepting
            .iter()
            .map(|s| s + a)
            .chain(other.accepting.iter().map(|s| s + b))
            .collect();
        Self::from_parts(1 + self.states + other.states, 0, accepting, ts)
    }

    pub fn concat(&self, other: &Nfa) -> Nfa {
        let b = self.states;
        let mut ts: Vec<Transition> = self.shifted(0).chain(other.shifted(b)).collect();
        for &f in &self.accepting {
            ts.push(eps(f, other.initial + b));
        }
        let accepting = other.accepting.iter().map(|s| s + b).collect();
        Self::from_parts(self.states + other.states, self.initial, accepting, ts)
    }

    /// Kleene star: a fresh accepting initial state that loops through `self`.
    pub fn star(&self) -> Nfa {
        let mut ts: Vec<Transition> = self.shifted(1).collect();
        ts.push(eps(0, self.initial + 1));
        for &f in &self.accepting {
            ts.push(eps(f + 1, 0));
        }
        Self::from_parts(self.states + 1, 0, BTreeSet::from([0]), ts)
    }

    /// Automaton for `word · L(self)`.
    pub fn prepend_word(&self, word: &[Letter]) -> Nfa {
        if word.is_empty() {
            return self.clone();
        }
        let n = word.len();
        let mut ts: Vec<Transition> = self.shifted(n).collect();
        for (i, l) in word.iter().enumerate() {
            ts.push(Transition {
                from: i,
                label: Some(l.clone()),
                to: if i + 1 == n { self.initial + n } else { i + 1 },
            });
        }
        let accepting = self.accepting.iter().map(|s| s + n).collect();
        Self::from_parts(self.states + n, 0, accepting, ts)
    }

    /// Drops every lettered transition whose letter is outside `keep`.
    pub fn restrict_alphabet(&self, keep: &BTreeSet<Letter>) -> Nfa {
        let ts = self
            .transitions
            .iter()
            .filter(|t| t.label.as_ref().map_or(true, |l| keep.contains(l)))
            .cloned()
            .collect();
        Self::from_parts(self.states, self.initial, self.accepting.clone(), ts)
    }

    /// Replaces each letter by `f(letter)`; `None` turns it into ε.
    pub fn map_letters(&self, f: impl Fn(&Letter) -> Option<Letter>) -> Nfa {
        let ts = self
            .transitions
            .iter()
            .map(|t| Transition {
                from: t.from,
                label: t.label.as_ref().and_then(&f),
                to: t.to,
            })
            .collect();
        Self::from_parts(self.states, self.initial, self.accepting.clone(), ts)
    }

    pub fn epsilon_closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = set.clone();
        let mut stack: Vec<usize> = set.iter().copied().collect();
        let eps_out = self.eps_adjacency();
        while let Some(s) = stack.pop() {
            for &t in &eps_out[s] {
                if out.insert(t) {
                    stack.push(t);
                }
            }
        }
        out
    }

    fn eps_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.states];
        for t in &self.transitions {
            if t.label.is_none() {
                adj[t.from].push(t.to);
            }
        }
        adj
    }

    fn step(&self, set: &BTreeSet<usize>, letter: &Letter) -> BTreeSet<usize> {
        let next: BTreeSet<usize> = self
            .transitions
            .iter()
            .filter(|t| set.contains(&t.from) && t.label.as_ref() == Some(letter))
            .map(|t| t.to)
            .collect();
        self.epsilon_closure(&next)
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        let mut cur = self.epsilon_closure(&BTreeSet::from([self.initial]));
        for l in word {
            if cur.is_empty() {
                return false;
            }
            cur = self.step(&cur, l);
        }
        cur.iter().any(|s| self.accepting.contains(s))
    }

    /// All accepted words of length at most `max_len`.
    pub fn enumerate_upto(&self, max_len: usize) -> BTreeSet<Vec<Letter>> {
        let alphabet: Vec<Letter> = self.alphabet().into_iter().collect();
        let mut out = BTreeSet::new();
        let start = self.epsilon_closure(&BTreeSet::from([self.initial]));
        let mut layer = vec![(Vec::new(), start)];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, set) in layer {
                if set.iter().any(|s| self.accepting.contains(s)) {
                    out.insert(w.clone());
                }
                if len == max_len {
                    continue;
                }
                for l in &alphabet {
                    let s2 = self.step(&set, l);
                    if !s2.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(l.clone());
                        next.push((w2, s2));
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Keeps states that are reachable from the initial state and can reach
    /// an accepting state. The initial state always survives (as state 0).
    pub fn trim(&self) -> Nfa {
        let mut fwd = vec![Vec::new(); self.states];
        let mut bwd = vec![Vec::new(); self.states];
        for t in &self.transitions {
            fwd[t.from].push(t.to);
            bwd[t.to].push(t.from);
        }
        let reach = |adj: &Vec<Vec<usize>>, seeds: Vec<usize>| {
            let mut seen = vec![false; self.states];
            let mut stack = seeds;
            for &s in &stack {
                seen[s] = true;
            }
            while let Some(s) = stack.pop() {
                for &t in &adj[s] {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
            seen
        };
        let from_init = reach(&fwd, vec![self.initial]);
        let to_acc = reach(&bwd, self.accepting.iter().copied().collect());
        if !to_acc[self.initial] {
            return Nfa::empty_language();
        }
        let mut map = vec![usize::MAX; self.states];
        let mut next = 0;
        map[self.initial] = 0;
        next += 1;
        for s in 0..self.states {
            if s != self.initial && from_init[s] && to_acc[s] {
                map[s] = next;
                next += 1;
            }
        }
        let ts = self
            .transitions
            .iter()
            .filter(|t| map[t.from] != usize::MAX && map[t.to] != usize::MAX)
            .map(|t| Transition {
                from: map[t.from],
                label: t.label.clone(),
                to: map[t.to],
            })
            .collect();
        let accepting = self
            .accepting
            .iter()
            .filter(|&&s| map[s] != usize::MAX)
            .map(|&s| map[s])
            .collect();
        Self::from_parts(next, 0, accepting, ts)
    }

    pub fn is_empty_language(&self) -> bool {
        let t = self.trim();
        t.accepting.is_empty()
    }

    pub fn from_json(text: &str) -> Result<Nfa> {
        let raw: AutomatonFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("automaton: {e}")))?;
        raw.into_nfa()
    }

    pub fn to_json(&self) -> String {
        let raw = AutomatonFile {
            states: self.states,
            initial: self.initial,
            accepting: self.accepting.iter().copied().collect(),
            transitions: self
                .transitions
                .iter()
                .map(|t| {
                    let label = t.label.as_ref().map_or(String::new(), |l| l.to_string());
                    (t.from, label, t.to)
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("serializable")
    }
}

fn eps(from: usize, to: usize) -> Transition {
    Transition {
        from,
        label: None,
        to,
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct AutomatonFile {
    states: usize,
    initial: usize,
    accepting: Vec<usize>,
    transitions: Vec<(usize, String, usize)>,
}

impl AutomatonFile {
    pub(crate) fn into_nfa(self) -> Result<Nfa> {
        let mut ts = Vec::with_capacity(self.transitions.len());
        for (from, label, to) in self.transitions {
            let label = if label.is_empty() {
                None
            } else {
                Some(
                    Letter::parse_gen(&label)
                        .ok_or_else(|| Error::input(format!("bad transition label {label:?}")))?,
                )
            };
            ts.push(Transition { from, label, to });
        }
        Nfa::new(self.states, self.initial, self.accepting, ts)
    }
}

/// How [`parikh_image`] computes its result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParikhStrategy {
    /// Simple accepting paths woven with connected sets of simple cycles.
    /// Exponential; refused above `max_states` states after trimming.
    PathCycle { max_states: usize },
    /// State elimination with semilinear edge labels.
    Elimination,
}

/// Parikh image over the automaton's own alphabet in canonical order, by
/// path–cycle decomposition with the default state cap.
pub fn nfa_parikh(a: &Nfa) -> Result<SemilinearSet> {
    let space = CoordSpace::canonical(a.alphabet());
    parikh_image(
        a,
        &space,
        ParikhStrategy::PathCycle {
            max_states: DEFAULT_MAX_PARIKH_STATES,
        },
    )
}

/// Parikh image restricted to the coordinates of `space`: letters outside the
/// space are erased before counting.
pub fn parikh_image(a: &Nfa, space: &CoordSpace, strategy: ParikhStrategy) -> Result<SemilinearSet> {
    let a = a.trim();
    if a.accepting.is_empty() {
        return Ok(SemilinearSet::empty(space.clone()));
    }
    match strategy {
        ParikhStrategy::PathCycle { max_states } => path_cycle(&a, space, max_states),
        ParikhStrategy::Elimination => Ok(eliminate(&a, space)),
    }
}

fn letter_vector(space: &CoordSpace, label: &Option<Letter>) -> Vec<u64> {
    let mut v = vec![0; space.dim()];
    if let Some(i) = label.as_ref().and_then(|l| space.index_of(l)) {
        v[i] = 1;
    }
    v
}

fn path_cycle(a: &Nfa, space: &CoordSpace, max_states: usize) -> Result<SemilinearSet> {
    if a.states > max_states {
        return Err(Error::resource(
            "nfa_parikh",
            format!("{} states exceed the path-cycle limit {max_states}", a.states),
        ));
    }
    let d = space.dim();
    let vecs: Vec<Vec<u64>> = a
        .transitions
        .iter()
        .map(|t| letter_vector(space, &t.label))
        .collect();
    let mut out_edges = vec![Vec::new(); a.states];
    for (i, t) in a.transitions.iter().enumerate() {
        out_edges[t.from].push(i);
    }

    // simple cycles, each rooted at its least state
    let mut cycles: Vec<(u64, Vec<u64>)> = Vec::new();
    for root in 0..a.states {
        let mut stack = vec![(root, 1u64 << root, vec![0u64; d], 0usize)];
        while let Some((s, mask, v, _)) = stack.pop() {
            for &e in &out_edges[s] {
                let t = a.transitions[e].to;
                let v2: Vec<u64> = v.iter().zip(&vecs[e]).map(|(x, y)| x + y).collect();
                if t == root {
                    cycles.push((mask, v2));
                    if cycles.len() > MAX_CYCLES {
                        return Err(Error::resource(
                            "nfa_parikh",
                            format!("more than {MAX_CYCLES} simple cycles"),
                        ));
                    }
                } else if t > root && mask & (1 << t) == 0 {
                    stack.push((t, mask | (1 << t), v2, 0));
                }
            }
        }
    }

    // simple accepting paths
    let mut paths: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut stack = vec![(a.initial, 1u64 << a.initial, vec![0u64; d])];
    while let Some((s, mask, v)) = stack.pop() {
        if a.accepting.contains(&s) {
            paths.push((mask, v.clone()));
        }
        for &e in &out_edges[s] {
            let t = a.transitions[e].to;
            if mask & (1 << t) == 0 {
                let v2: Vec<u64> = v.iter().zip(&vecs[e]).map(|(x, y)| x + y).collect();
                stack.push((t, mask | (1 << t), v2));
            }
        }
    }

    let mut comps: HashSet<LinearSet> = HashSet::new();
    let mut budget = MAX_CYCLE_SETS;
    for (pmask, pvec) in &paths {
        // grow connected cycle sets; each set is visited once
        let mut seen: HashSet<u64> = HashSet::new();
        let mut work = vec![(0u64, *pmask)];
        seen.insert(0);
        while let Some((chosen, mask)) = work.pop() {
            if budget == 0 {
                return Err(Error::resource(
                    "nfa_parikh",
                    "too many connected cycle sets".to_string(),
                ));
            }
            budget -= 1;
            let mut constant = pvec.clone();
            let mut periods = Vec::new();
            for (i, (_, cv)) in cycles.iter().enumerate() {
                if chosen & (1 << i) != 0 {
                    for (x, y) in constant.iter_mut().zip(cv) {
                        *x += y;
                    }
                    periods.push(cv.clone());
                }
            }
            comps.insert(LinearSet::new(constant, periods));
            for (i, (cmask, _)) in cycles.iter().enumerate() {
                if chosen & (1 << i) == 0 && cmask & mask != 0 {
                    let c2 = chosen | (1 << i);
                    if seen.insert(c2) {
                        work.push((c2, mask | cmask));
                    }
                }
            }
        }
    }
    Ok(SemilinearSet::from_parts(space.clone(), comps.into_iter().collect()).simplified())
}

/// Generalized-automaton state elimination with semilinear labels.
fn eliminate(a: &Nfa, space: &CoordSpace) -> SemilinearSet {
    let n = a.states;
    let (src, dst) = (n, n + 1);
    let mut edges: Vec<BTreeMap<usize, SemilinearSet>> = vec![BTreeMap::new(); n + 2];
    let mut preds: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 2];
    let add = |edges: &mut Vec<BTreeMap<usize, SemilinearSet>>,
                   preds: &mut Vec<BTreeSet<usize>>,
                   i: usize,
                   j: usize,
                   s: SemilinearSet| {
        preds[j].insert(i);
        match edges[i].remove(&j) {
            Some(old) => {
                let u = old.union(&s).expect("same space").simplified();
                edges[i].insert(j, u);
            }
            None => {
                edges[i].insert(j, s);
            }
        }
    };
    let zero = SemilinearSet::zero(space.clone());
    // group parallel edges into a single label first
    let mut grouped: HashMap<(usize, usize), Vec<LinearSet>> = HashMap::new();
    for t in &a.transitions {
        grouped
            .entry((t.from, t.to))
            .or_default()
            .push(LinearSet::point(letter_vector(space, &t.label)));
    }
    let mut keys: Vec<_> = grouped.keys().copied().collect();
    keys.sort();
    for k in keys {
        let comps = grouped.remove(&k).expect("present");
        add(
            &mut edges,
            &mut preds,
            k.0,
            k.1,
            SemilinearSet::from_parts(space.clone(), comps),
        );
    }
    add(&mut edges, &mut preds, src, a.initial, zero.clone());
    for &f in &a.accepting {
        add(&mut edges, &mut preds, f, dst, zero.clone());
    }

    let mut alive: BTreeSet<usize> = (0..n).collect();
    while !alive.is_empty() {
        // cheapest state: fewest new edges
        let k = *alive
            .iter()
            .min_by_key(|&&k| {
                let ins = preds[k].iter().filter(|&&p| p != k).count();
                let outs = edges[k].keys().filter(|&&s| s != k).count();
                (ins * outs, k)
            })
            .expect("nonempty");
        alive.remove(&k);
        let self_loop = edges[k].remove(&k).map(|l| l.star());
        preds[k].remove(&k);
        let outs: Vec<(usize, SemilinearSet)> =
            std::mem::take(&mut edges[k]).into_iter().collect();
        let ins: Vec<usize> = std::mem::take(&mut preds[k]).into_iter().collect();
        for &(j, _) in &outs {
            preds[j].remove(&k);
        }
        for i in ins {
            let Some(lik) = edges[i].remove(&k) else { continue };
            let head = match &self_loop {
                Some(l) => lik.sum(l).expect("same space").simplified(),
                None => lik,
            };
            for (j, lkj) in &outs {
                let s = head.sum(lkj).expect("same space").simplified();
                if !s.is_empty() {
                    add(&mut edges, &mut preds, i, *j, s);
                }
            }
        }
    }
    edges[src]
        .remove(&dst)
        .unwrap_or_else(|| SemilinearSet::empty(space.clone()))
}

/// Automaton for `⋃ w_c (w_p1)* ⋯ (w_pm)*` over the components of `s`, where
/// `w_v` spells `v` with letters in coordinate order.
pub fn sl_realize(s: &SemilinearSet) -> Nfa {
    let names = s.space().names();
    let spell = |v: &[u64]| -> Vec<Letter> {
        v.iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat(names[i].clone()).take(k as usize))
            .collect()
    };
    let mut ts = Vec::new();
    let mut accepting = BTreeSet::new();
    let mut states = 1;
    for c in s.components() {
        let mut cur = states;
        states += 1;
        ts.push(eps(0, cur));
        for l in spell(c.constant()) {
            ts.push(Transition {
                from: cur,
                label: Some(l),
                to: states,
            });
            cur = states;
            states += 1;
        }
        for p in c.periods() {
            let w = spell(p);
            let mut from = cur;
            for (i, l) in w.iter().enumerate() {
                let to = if i + 1 == w.len() {
                    cur
                } else {
                    states += 1;
                    states - 1
                };
                ts.push(Transition {
                    from,
                    label: Some(l.clone()),
                    to,
                });
                from = to;
            }
        }
        accepting.insert(cur);
    }
    Nfa::from_parts(states, 0, accepting, ts)
}

/// Block automaton for `L[p,q]`: runs of `a` through letters of
/// `child_letters` (and ε), interleaved with at least one jump labelled by a
/// pair letter `(level:p',q')` from `p'` to `q'`.
///
/// States are `s + n·flag` where the flag records that a jump happened.
pub fn build_block_nfa(
    a: &Nfa,
    p: usize,
    q: usize,
    child_letters: &BTreeSet<Letter>,
    level: u32,
) -> Result<Nfa> {
    let n = a.states;
    if p >= n || q >= n {
        return Err(Error::input("block endpoints out of range"));
    }
    let mut ts = Vec::new();
    for t in &a.transitions {
        if t.label.as_ref().map_or(true, |l| child_letters.contains(l)) {
            for flag in 0..2 {
                ts.push(Transition {
                    from: t.from + flag * n,
                    label: t.label.clone(),
                    to: t.to + flag * n,
                });
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            for flag in 0..2 {
                ts.push(Transition {
                    from: s + flag * n,
                    label: Some(Letter::pair(level, s, t)),
                    to: t + n,
                });
            }
        }
    }
    Ok(Nfa::from_parts(2 * n, p, BTreeSet::from([q + n]), ts))
}
