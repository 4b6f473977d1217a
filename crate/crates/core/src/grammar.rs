//! Context-free grammars with regular right-hand sides and their Parikh
//! images.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Deserialize;

use crate::automata::{parikh_image, AutomatonFile, Nfa, ParikhStrategy, Transition};
use crate::error::{Error, Result};
use crate::fixpoint::{least_solution, Expr, System};
use crate::letter::Letter;
use crate::semilinear::{CoordSpace, SemilinearSet, VectorN};

/// Default cap on multiset-automaton states.
pub const DEFAULT_MAX_MULTISET_STATES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rhs {
    Word(Vec<Letter>),
    Regular(Nfa),
}

/// Grammar whose symbols are [`Letter`]s: declared nonterminals, every other
/// letter on a right-hand side is a terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCfg {
    start: Letter,
    nonterminals: BTreeSet<Letter>,
    productions: Vec<(Letter, Rhs)>,
}

impl ExtendedCfg {
    pub fn new(
        start: Letter,
        nonterminals: BTreeSet<Letter>,
        productions: Vec<(Letter, Rhs)>,
    ) -> Result<Self> {
        if !nonterminals.contains(&start) {
            return Err(Error::input("start symbol is not a nonterminal"));
        }
        if let Some((lhs, _)) = productions.iter().find(|(l, _)| !nonterminals.contains(l)) {
            return Err(Error::input(format!("production for undeclared symbol {lhs}")));
        }
        Ok(ExtendedCfg {
            start,
            nonterminals,
            productions,
        })
    }

    pub fn start(&self) -> &Letter {
        &self.start
    }

    pub fn nonterminals(&self) -> &BTreeSet<Letter> {
        &self.nonterminals
    }

    pub fn productions(&self) -> &[(Letter, Rhs)] {
        &self.productions
    }

    pub fn terminals(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        for (_, rhs) in &self.productions {
            match rhs {
                Rhs::Word(w) => out.extend(w.iter().cloned()),
                Rhs::Regular(a) => out.extend(a.alphabet()),
            }
        }
        out.retain(|l| !self.nonterminals.contains(l));
        out
    }

    /// Grammar file: `{"start": "S", "productions": [["S", ["a","S","b"]],
    /// ["S", {"automaton": …}]]}`. Symbols with a production are
    /// nonterminals (kept apart from generators as marker letters); every
    /// other symbol must be a generator token.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GrammarFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("grammar: {e}")))?;
        let mut names: BTreeSet<String> = raw.productions.iter().map(|(l, _)| l.clone()).collect();
        names.insert(raw.start.clone());
        let nt = |s: &str| Letter::marker(s);
        let symbol = |s: &str| -> Result<Letter> {
            if names.contains(s) {
                Ok(nt(s))
            } else {
                Letter::parse_gen(s).ok_or_else(|| Error::input(format!("bad grammar symbol {s:?}")))
            }
        };
        let mut prods = Vec::new();
        for (lhs, rhs) in raw.productions {
            let rhs = match rhs {
                RawRhs::Word(w) => Rhs::Word(w.iter().map(|s| symbol(s)).collect::<Result<_>>()?),
                RawRhs::Automaton { automaton } => {
                    let a = automaton.into_nfa()?;
                    // automaton labels parse as generators; re-tag nonterminals
                    Rhs::Regular(a.map_letters(|l| match l {
                        Letter::Gen(g) if !g.inverse && names.contains(&*g.name) => Some(nt(&g.name)),
                        other => Some(other.clone()),
                    }))
                }
            };
            prods.push((nt(&lhs), rhs));
        }
        ExtendedCfg::new(nt(&raw.start), names.iter().map(|n| nt(n)).collect(), prods)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GrammarFile {
    start: String,
    productions: Vec<(String, RawRhs)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRhs {
    Word(Vec<String>),
    Automaton { automaton: AutomatonFile },
}

/// Grammar with right-hand sides of length at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinCfg {
    start: Letter,
    nonterminals: BTreeSet<Letter>,
    productions: Vec<(Letter, Vec<Letter>)>,
}

impl BinCfg {
    pub fn new(
        start: Letter,
        nonterminals: BTreeSet<Letter>,
        mut productions: Vec<(Letter, Vec<Letter>)>,
    ) -> Result<Self> {
        if !nonterminals.contains(&start) {
            return Err(Error::input("start symbol is not a nonterminal"));
        }
        for (lhs, rhs) in &productions {
            if !nonterminals.contains(lhs) {
                return Err(Error::input(format!("production for undeclared symbol {lhs}")));
            }
            if rhs.len() > 2 {
                return Err(Error::input("right-hand side longer than two symbols"));
            }
        }
        productions.sort();
        productions.dedup();
        Ok(BinCfg {
            start,
            nonterminals,
            productions,
        })
    }

    pub fn start(&self) -> &Letter {
        &self.start
    }

    pub fn nonterminals(&self) -> &BTreeSet<Letter> {
        &self.nonterminals
    }

    pub fn productions(&self) -> &[(Letter, Vec<Letter>)] {
        &self.productions
    }

    pub fn terminals(&self) -> BTreeSet<Letter> {
        self.productions
            .iter()
            .flat_map(|(_, r)| r.iter())
            .filter(|l| !self.nonterminals.contains(l))
            .cloned()
            .collect()
    }

    fn is_nt(&self, l: &Letter) -> bool {
        self.nonterminals.contains(l)
    }

    /// Removes nonterminals that derive no terminal word or are unreachable
    /// from the start symbol. The start symbol is always kept.
    pub fn pruned(&self) -> BinCfg {
        let mut productive: BTreeSet<Letter> = BTreeSet::new();
        loop {
            let before = productive.len();
            for (lhs, rhs) in &self.productions {
                if rhs.iter().all(|s| !self.is_nt(s) || productive.contains(s)) {
                    productive.insert(lhs.clone());
                }
            }
            if productive.len() == before {
                break;
            }
        }
        let useful_prods: Vec<&(Letter, Vec<Letter>)> = self
            .productions
            .iter()
            .filter(|(l, r)| {
                productive.contains(l) && r.iter().all(|s| !self.is_nt(s) || productive.contains(s))
            })
            .collect();
        let mut reach = BTreeSet::from([self.start.clone()]);
        let mut queue = VecDeque::from([self.start.clone()]);
        while let Some(a) = queue.pop_front() {
            for (l, r) in &useful_prods {
                if *l == a {
                    for s in r {
                        if self.is_nt(s) && reach.insert(s.clone()) {
                            queue.push_back(s.clone());
                        }
                    }
                }
            }
        }
        let prods = useful_prods
            .into_iter()
            .filter(|(l, _)| reach.contains(l))
            .cloned()
            .collect();
        BinCfg::new(self.start.clone(), reach, prods).expect("subgrammar of a valid grammar")
    }

    pub fn from_json(text: &str) -> Result<BinCfg> {
        cfg_normalize(&ExtendedCfg::from_json(text)?)
    }
}

/// Fresh nonterminal names that avoid every existing symbol.
struct Fresh<'a> {
    taken: &'a BTreeSet<Letter>,
    next: usize,
}

impl Fresh<'_> {
    fn make(&mut self, base: &Letter) -> Letter {
        loop {
            self.next += 1;
            let l = Letter::marker(&format!("{}'{}", base.to_string().trim_matches(['[', ']']), self.next));
            if !self.taken.contains(&l) {
                return l;
            }
        }
    }
}

/// Replaces regular right-hand sides by right-linear nonterminals (one per
/// automaton state) and splits long right-hand sides into chains.
pub fn cfg_normalize(g: &ExtendedCfg) -> Result<BinCfg> {
    let mut taken: BTreeSet<Letter> = g.nonterminals.clone();
    taken.extend(g.terminals());
    let mut fresh = Fresh {
        taken: &taken,
        next: 0,
    };
    let mut nts = g.nonterminals.clone();
    let mut words: Vec<(Letter, Vec<Letter>)> = Vec::new();
    for (lhs, rhs) in &g.productions {
        match rhs {
            Rhs::Word(w) => words.push((lhs.clone(), w.clone())),
            Rhs::Regular(a) => {
                let st: Vec<Letter> = (0..a.states()).map(|_| fresh.make(lhs)).collect();
                nts.extend(st.iter().cloned());
                words.push((lhs.clone(), vec![st[a.initial()].clone()]));
                for t in a.transitions() {
                    let mut r: Vec<Letter> = t.label.iter().cloned().collect();
                    r.push(st[t.to].clone());
                    words.push((st[t.from].clone(), r));
                }
                for &f in a.accepting() {
                    words.push((st[f].clone(), Vec::new()));
                }
            }
        }
    }
    let mut prods = Vec::new();
    for (lhs, mut w) in words {
        let mut cur = lhs;
        while w.len() > 2 {
            let head = w.remove(0);
            let next = fresh.make(&cur);
            nts.insert(next.clone());
            prods.push((cur, vec![head, next.clone()]));
            cur = next;
        }
        prods.push((cur, w));
    }
    BinCfg::new(g.start.clone(), nts, prods)
}

/// How [`cfg_parikh_with`] computes the image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfgParikhStrategy {
    /// Bounded-multiset automaton of the given capacity (default: number of
    /// nonterminals plus one), read by state elimination.
    MultisetAutomaton {
        capacity: Option<usize>,
        max_states: usize,
    },
    /// Least solution of the grammar's equation system.
    Newton,
}

impl Default for CfgParikhStrategy {
    fn default() -> Self {
        CfgParikhStrategy::MultisetAutomaton {
            capacity: None,
            max_states: DEFAULT_MAX_MULTISET_STATES,
        }
    }
}

/// Parikh image over the grammar's terminals in canonical order, through the
/// bounded-multiset automaton.
pub fn cfg_parikh(g: &BinCfg) -> Result<SemilinearSet> {
    let space = CoordSpace::canonical(g.terminals());
    cfg_parikh_with(g, &space, CfgParikhStrategy::default())
}

/// Parikh image restricted to `space`; terminals outside it are erased.
pub fn cfg_parikh_with(
    g: &BinCfg,
    space: &CoordSpace,
    strategy: CfgParikhStrategy,
) -> Result<SemilinearSet> {
    let g = g.pruned();
    match strategy {
        CfgParikhStrategy::Newton => Ok(newton_parikh(&g, space)),
        CfgParikhStrategy::MultisetAutomaton {
            capacity,
            max_states,
        } => {
            let k = capacity.unwrap_or(g.nonterminals.len() + 1);
            let a = multiset_automaton(&g, k, max_states)?;
            parikh_image(&a, space, ParikhStrategy::Elimination)
        }
    }
}

fn newton_parikh(g: &BinCfg, space: &CoordSpace) -> SemilinearSet {
    let nts: Vec<&Letter> = g.nonterminals.iter().collect();
    let idx: HashMap<&Letter, usize> = nts.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut alts: Vec<Vec<Expr>> = vec![Vec::new(); nts.len()];
    for (lhs, rhs) in &g.productions {
        let terms: Vec<Letter> = rhs.iter().filter(|s| !g.is_nt(s)).cloned().collect();
        let mut parts = vec![Expr::Const(SemilinearSet::singleton(&VectorN::parikh(
            space.clone(),
            &terms,
        )))];
        parts.extend(rhs.iter().filter(|s| g.is_nt(s)).map(|s| Expr::Var(idx[s])));
        alts[idx[lhs]].push(Expr::Sum(parts));
    }
    let sys = System {
        space: space.clone(),
        eqs: alts.into_iter().map(Expr::Union).collect(),
    };
    least_solution(&sys).swap_remove(idx[&g.start])
}

/// Automaton whose states are multisets of pending nonterminals of size at
/// most `k`; a move expands one pending nonterminal by a production and emits
/// the production's terminals. Accepts at the empty multiset.
pub fn multiset_automaton(g: &BinCfg, k: usize, max_states: usize) -> Result<Nfa> {
    let nts: Vec<&Letter> = g.nonterminals.iter().collect();
    let idx: HashMap<&Letter, usize> = nts.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut by_lhs: Vec<Vec<(Vec<usize>, Vec<Letter>)>> = vec![Vec::new(); nts.len()];
    for (lhs, rhs) in &g.productions {
        let pushes = rhs.iter().filter_map(|s| idx.get(s).copied()).collect();
        let emits = rhs.iter().filter(|s| !g.is_nt(s)).cloned().collect();
        by_lhs[idx[lhs]].push((pushes, emits));
    }
    let overflow = || {
        Error::resource(
            "cfg_parikh",
            format!("multiset automaton with capacity k={k} exceeds {max_states} states"),
        )
    };
    let mut ids: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut start = vec![0u32; nts.len()];
    start[idx[&g.start]] = 1;
    ids.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    let mut ts: Vec<Transition> = Vec::new();
    let mut extra = 0usize;
    let mut pending_chain: Vec<(usize, Vec<Letter>, usize)> = Vec::new();
    while let Some(m) = queue.pop_front() {
        let from = ids[&m];
        for (a, prods) in by_lhs.iter().enumerate() {
            if m[a] == 0 {
                continue;
            }
            for (pushes, emits) in prods {
                let mut next = m.clone();
                next[a] -= 1;
                for &b in pushes {
                    next[b] += 1;
                }
                if next.iter().sum::<u32>() as usize > k {
                    continue;
                }
                let to = match ids.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = ids.len();
                        if t >= max_states {
                            return Err(overflow());
                        }
                        ids.insert(next.clone(), t);
                        queue.push_back(next);
                        t
                    }
                };
                pending_chain.push((from, emits.clone(), to));
            }
        }
    }
    let base = ids.len();
    for (from, emits, to) in pending_chain {
        if emits.len() <= 1 {
            ts.push(Transition {
                from,
                label: emits.into_iter().next(),
                to,
            });
        } else {
            let mut cur = from;
            for (i, l) in emits.iter().enumerate() {
                let nxt = if i + 1 == emits.len() {
                    to
                } else {
                    extra += 1;
                    base + extra - 1
                };
                ts.push(Transition {
                    from: cur,
                    label: Some(l.clone()),
                    to: nxt,
                });
                cur = nxt;
            }
        }
    }
    let accepting: Vec<usize> = ids.get(&vec![0u32; nts.len()]).into_iter().copied().collect();
    Nfa::new(base + extra, 0, accepting, ts)
}

/// Every terminal word of length at most `max_len` derivable from the start
/// symbol, as the least fixpoint of length-bounded word sets per nonterminal.
pub fn cfg_enumerate(g: &BinCfg, max_len: usize) -> BTreeSet<Vec<Letter>> {
    let mut lang: HashMap<&Letter, BTreeSet<Vec<Letter>>> =
        g.nonterminals.iter().map(|n| (n, BTreeSet::new())).collect();
    loop {
        let mut changed = false;
        for (lhs, rhs) in &g.productions {
            let mut acc: BTreeSet<Vec<Letter>> = BTreeSet::from([Vec::new()]);
            for s in rhs {
                let options: BTreeSet<Vec<Letter>> = if g.is_nt(s) {
                    lang[s].clone()
                } else {
                    BTreeSet::from([vec![s.clone()]])
                };
                let mut next = BTreeSet::new();
                for x in &acc {
                    for y in &options {
                        if x.len() + y.len() <= max_len {
                            next.insert(x.iter().chain(y).cloned().collect());
                        }
                    }
                }
                acc = next;
            }
            let entry = lang.get_mut(lhs).expect("declared");
            for w in acc {
                changed |= entry.insert(w);
            }
        }
        if !changed {
            break;
        }
    }
    lang.remove(&g.start).unwrap_or_default()
}
