//! Semilinear images of trivial-word-problem slices, and the membership
//! deciders built on them.
//!
//! For a decomposition tree `T` with vertex letters `Θ`, a set `Γ` of extra
//! coordinates and an automaton over `Θ ∪ Γ`, [`sli`] computes the Parikh
//! image over `Γ` of the accepted words whose `Θ`-projection is trivial in
//! the group of `T`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::automata::{build_block_nfa, parikh_image, sl_realize, Nfa, ParikhStrategy, Transition};
use crate::error::{Error, Result};
use crate::fixpoint::{included, least_solution, solve_linear, Expr, System};
use crate::grammar::{cfg_normalize, cfg_parikh_with, CfgParikhStrategy, ExtendedCfg, Rhs};
use crate::letter::Letter;
use crate::semilinear::{CoordSpace, LinearSet, SemilinearSet};
use crate::traces::{ia_decompose, trace_nf, DecompositionTree, GroupWord, IndependenceAlphabet};

pub const DEFAULT_MAX_STATES: usize = 24;
pub const DEFAULT_MAX_VERTICES: usize = 4;
pub const DEFAULT_MAX_COMPONENTS: usize = 50_000;

/// How block languages of a free product are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockRoute {
    /// One child query per child covering every state pair at once through
    /// start/end marker letters; only productive pair letters are offered.
    Marked,
    /// One block automaton per state pair and child, with every pair letter.
    PerPair,
}

/// How the pair grammar of a free product is turned into a semilinear set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrammarRoute {
    /// Substitute the pair variables into the block images and solve the
    /// resulting equation system directly.
    Substitution,
    /// Realize block images as automata, build the extended grammar,
    /// normalize it and take its Parikh image.
    Grammar(CfgParikhStrategy),
}

#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Cap on the automaton handed to the recursion by the deciders, counted
    /// after prepending the target word and trimming.
    pub max_states: usize,
    pub max_vertices: usize,
    /// Cap on semilinear components in any intermediate result.
    pub max_components: usize,
    pub parikh: ParikhStrategy,
    pub blocks: BlockRoute,
    pub grammar: GrammarRoute,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_states: DEFAULT_MAX_STATES,
            max_vertices: DEFAULT_MAX_VERTICES,
            max_components: DEFAULT_MAX_COMPONENTS,
            parikh: ParikhStrategy::Elimination,
            blocks: BlockRoute::Marked,
            grammar: GrammarRoute::Substitution,
        }
    }
}

impl EngineOptions {
    /// One block automaton per pair, and the pair grammar realized,
    /// normalized and passed to the grammar Parikh routine. Only usable on
    /// very small inputs.
    pub fn reference() -> Self {
        EngineOptions {
            blocks: BlockRoute::PerPair,
            grammar: GrammarRoute::Grammar(CfgParikhStrategy::Newton),
            ..EngineOptions::default()
        }
    }
}

/// A group (as a decomposition tree), extra coordinates `Γ` and an automaton
/// over the tree's letters and `Γ`.
#[derive(Clone, Debug)]
pub struct SliQuery {
    pub tree: DecompositionTree,
    pub gamma: CoordSpace,
    pub automaton: Nfa,
}

/// Parikh image over `Γ` of the accepted words that are trivial in the group.
pub fn sli(q: &SliQuery, opts: &EngineOptions) -> Result<SemilinearSet> {
    let theta = q.tree.letters();
    if let Some(l) = q.gamma.names().iter().find(|l| theta.contains(l)) {
        return Err(Error::input(format!("coordinate {l} is also a group letter")));
    }
    if let Some(l) = q
        .automaton
        .alphabet()
        .into_iter()
        .find(|l| !theta.contains(l) && !q.gamma.contains(l))
    {
        return Err(Error::input(format!("automaton letter {l} is neither a group letter nor a coordinate")));
    }
    let gamma = CoordSpace::canonical(q.gamma.names().iter().cloned());
    let r = Engine::new(opts).run(&q.tree, &gamma, &q.automaton, 0)?;
    if gamma == q.gamma {
        Ok(r)
    } else {
        r.embed(&q.gamma)
    }
}

struct Engine<'a> {
    opts: &'a EngineOptions,
    memo: HashMap<(String, CoordSpace, Nfa), SemilinearSet>,
}

/// Marker `[{kind}{level}.{state}]`: `s`/`e` for block start and end,
/// `j`/`k` around the distinguished jump.
fn marker(kind: char, level: u32, state: usize) -> Letter {
    Letter::marker(&format!("{kind}{level}.{state}"))
}

impl<'a> Engine<'a> {
    fn new(opts: &'a EngineOptions) -> Self {
        Engine {
            opts,
            memo: HashMap::new(),
        }
    }

    /// `gamma` is canonical; `level` counts enclosing free products.
    fn run(
        &mut self,
        tree: &DecompositionTree,
        gamma: &CoordSpace,
        a: &Nfa,
        level: u32,
    ) -> Result<SemilinearSet> {
        let a = a.trim();
        if a.accepting().is_empty() {
            return Ok(SemilinearSet::empty(gamma.clone()));
        }
        let key = (tree.to_sexpr(), gamma.clone(), a.clone());
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.clone());
        }
        let r = self.dispatch(tree, gamma, &a, level)?.simplified();
        if r.components().len() > self.opts.max_components {
            return Err(Error::resource(
                format!("sli {} over {} coordinates", key.0, gamma.dim()),
                format!(
                    "{} semilinear components exceed limit {}",
                    r.components().len(),
                    self.opts.max_components
                ),
            ));
        }
        self.memo.insert(key, r.clone());
        Ok(r)
    }

    fn dispatch(
        &mut self,
        tree: &DecompositionTree,
        gamma: &CoordSpace,
        a: &Nfa,
        level: u32,
    ) -> Result<SemilinearSet> {
        let used = a.alphabet();
        match tree {
            DecompositionTree::Trivial => parikh_image(a, gamma, self.opts.parikh),
            DecompositionTree::DirectZ { vertex, child } => {
                let (x, xi) = (Letter::gen(vertex), Letter::gen_inv(vertex));
                if !used.contains(&x) && !used.contains(&xi) {
                    return self.run(child, gamma, a, level);
                }
                let wide = gamma.join(&CoordSpace::canonical([x.clone(), xi.clone()]));
                let r = self.run(child, &wide, a, level)?;
                r.constrain_equal(&x, &xi)?.project(gamma.names())
            }
            DecompositionTree::FreeProduct(children) => {
                let present: Vec<usize> = (0..children.len())
                    .filter(|&i| children[i].letters().iter().any(|l| used.contains(l)))
                    .collect();
                match present.as_slice() {
                    [] => parikh_image(a, gamma, self.opts.parikh),
                    [i] => self.run(&children[*i], gamma, a, level),
                    _ => self.free_product(children, gamma, a, level + 1),
                }
            }
        }
    }

    fn free_product(
        &mut self,
        children: &[DecompositionTree],
        gamma: &CoordSpace,
        a: &Nfa,
        level: u32,
    ) -> Result<SemilinearSet> {
        match self.opts.blocks {
            BlockRoute::Marked => self.free_product_marked(children, gamma, a, level),
            BlockRoute::PerPair => self.free_product_per_pair(children, gamma, a, level),
        }
    }

    /// Automaton for all blocks of one child at once. A fresh source reads
    /// `s.p` and enters `p`; `e.q` leaves from `q` once some jump was taken.
    /// A jump from `p'` to `q'` is an ε-move (`None`) or passes through a copy
    /// of the given automaton. With `derivative`, exactly one extra jump reads
    /// `j.p'` then `k.q'`, and the end marker needs it to have happened.
    fn block_automaton(
        a: &Nfa,
        child_letters: &BTreeSet<Letter>,
        gamma: &CoordSpace,
        keep_gamma: bool,
        jumps: &[((usize, usize), Option<&Nfa>)],
        derivative: bool,
        level: u32,
    ) -> Nfa {
        let n = a.states();
        // layers: 0 no jump yet, 1 jumped, 2 jumped through the marked jump
        let layers = if derivative { 3 } else { 2 };
        let at = |s: usize, layer: usize| s + layer * n;
        let mut ts = Vec::new();
        for t in a.transitions() {
            let label = match &t.label {
                None => None,
                Some(l) if child_letters.contains(l) => Some(l.clone()),
                Some(l) if gamma.contains(l) => keep_gamma.then(|| l.clone()),
                Some(_) => continue,
            };
            for layer in 0..layers {
                ts.push(Transition {
                    from: at(t.from, layer),
                    label: label.clone(),
                    to: at(t.to, layer),
                });
            }
        }
        let mut states = layers * n;
        let eps = |from, to| Transition { from, label: None, to };
        // (source layers, target layer) for ordinary jumps
        let classes: &[(&[usize], usize)] = if derivative {
            &[(&[0, 1], 1), (&[2], 2)]
        } else {
            &[(&[0, 1], 1)]
        };
        for &((p, q), value) in jumps {
            for &(sources, target) in classes {
                match value {
                    None => {
                        for &l in sources {
                            ts.push(eps(at(p, l), at(q, target)));
                        }
                    }
                    Some(r) => {
                        let off = states;
                        states += r.states();
                        for &l in sources {
                            ts.push(eps(at(p, l), off + r.initial()));
                        }
                        for t in r.transitions() {
                            ts.push(Transition {
                                from: off + t.from,
                                label: t.label.clone(),
                                to: off + t.to,
                            });
                        }
                        for &f in r.accepting() {
                            ts.push(eps(off + f, at(q, target)));
                        }
                    }
                }
            }
        }
        if derivative {
            let mid = states;
            states += 1;
            for s in 0..n {
                for l in [0, 1] {
                    ts.push(Transition {
                        from: at(s, l),
                        label: Some(marker('j', level, s)),
                        to: mid,
                    });
                }
                ts.push(Transition {
                    from: mid,
                    label: Some(marker('k', level, s)),
                    to: at(s, 2),
                });
            }
        }
        let (src, dst) = (states, states + 1);
        for s in 0..n {
            ts.push(Transition {
                from: src,
                label: Some(marker('s', level, s)),
                to: at(s, 0),
            });
            ts.push(Transition {
                from: at(s, layers - 1),
                label: Some(marker('e', level, s)),
                to: dst,
            });
        }
        Nfa::from_parts(states + 2, src, BTreeSet::from([dst]), ts)
    }

    /// Groups the components of `r` by which marker of each kind they carry
    /// and projects the groups onto `keep`.
    fn split_by_markers(
        r: &SemilinearSet,
        kinds: &[char],
        n: usize,
        level: u32,
        keep: &CoordSpace,
    ) -> Result<BTreeMap<Vec<usize>, SemilinearSet>> {
        let sp = r.space();
        let idx: Vec<Vec<Option<usize>>> = kinds
            .iter()
            .map(|&k| (0..n).map(|s| sp.index_of(&marker(k, level, s))).collect())
            .collect();
        let mut grouped: BTreeMap<Vec<usize>, Vec<LinearSet>> = BTreeMap::new();
        'comps: for c in r.components() {
            let k = c.constant();
            let mut key = Vec::with_capacity(kinds.len());
            for row in &idx {
                match (0..n).find(|&s| row[s].map_or(false, |i| k[i] == 1)) {
                    Some(s) => key.push(s),
                    None => continue 'comps,
                }
            }
            grouped.entry(key).or_default().push(c.clone());
        }
        let mut out = BTreeMap::new();
        for (key, comps) in grouped {
            let s = SemilinearSet::new(sp.clone(), comps)?;
            out.insert(key, s.project(keep.names())?.simplified());
        }
        Ok(out)
    }

    /// Block images over Γ for every pair, summed over the children, where
    /// jump `(p',q')` contributes `values[(p',q')]`.
    fn block_images(
        &mut self,
        children: &[DecompositionTree],
        child_letters: &[BTreeSet<Letter>],
        gamma: &CoordSpace,
        a: &Nfa,
        values: &BTreeMap<(usize, usize), SemilinearSet>,
        derivative: bool,
        level: u32,
    ) -> Result<BTreeMap<Vec<usize>, SemilinearSet>> {
        let n = a.states();
        let kinds: &[char] = if derivative { &['s', 'e', 'j', 'k'] } else { &['s', 'e'] };
        let markers = CoordSpace::canonical(
            kinds.iter().flat_map(|&k| (0..n).map(move |s| marker(k, level, s))),
        );
        let wide = gamma.join(&markers);
        let realized: Vec<((usize, usize), Nfa)> = values
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&pq, v)| (pq, sl_realize(v)))
            .collect();
        let jumps: Vec<((usize, usize), Option<&Nfa>)> =
            realized.iter().map(|(pq, r)| (*pq, Some(r))).collect();
        let mut out: BTreeMap<Vec<usize>, SemilinearSet> = BTreeMap::new();
        for (i, child) in children.iter().enumerate() {
            let m = Self::block_automaton(a, &child_letters[i], gamma, true, &jumps, derivative, level);
            let r = self.run(child, &wide, &m, level)?;
            for (key, s) in Self::split_by_markers(&r, kinds, n, level, gamma)? {
                let merged = match out.remove(&key) {
                    Some(old) => old.union(&s)?.simplified(),
                    None => s,
                };
                out.insert(key, merged);
            }
        }
        Ok(out)
    }

    fn free_product_marked(
        &mut self,
        children: &[DecompositionTree],
        gamma: &CoordSpace,
        a: &Nfa,
        level: u32,
    ) -> Result<SemilinearSet> {
        let n = a.states();
        let child_letters: Vec<BTreeSet<Letter>> = children.iter().map(|c| c.letters()).collect();
        let se = CoordSpace::canonical((0..n).flat_map(|s| [marker('s', level, s), marker('e', level, s)]));

        // productive pairs, with Γ letters and jumps read as ε
        let mut productive: BTreeSet<(usize, usize)> = (0..n).map(|s| (s, s)).collect();
        loop {
            let before = productive.len();
            let jumps: Vec<((usize, usize), Option<&Nfa>)> = productive.iter().map(|&pq| (pq, None)).collect();
            let mut found = Vec::new();
            for (i, child) in children.iter().enumerate() {
                let m = Self::block_automaton(a, &child_letters[i], gamma, false, &jumps, false, level);
                let r = self.run(child, &se, &m, level)?;
                found.extend(
                    Self::split_by_markers(&r, &['s', 'e'], n, level, &CoordSpace::empty())?
                        .into_keys()
                        .map(|k| (k[0], k[1])),
                );
            }
            productive.extend(found);
            if productive.len() == before {
                break;
            }
        }
        let q0 = a.initial();
        let finals: Vec<(usize, usize)> = a
            .accepting()
            .iter()
            .map(|&f| (q0, f))
            .filter(|pq| productive.contains(pq))
            .collect();
        if finals.is_empty() {
            return Ok(SemilinearSet::empty(gamma.clone()));
        }
        if gamma.dim() == 0 {
            return Ok(SemilinearSet::unit());
        }

        // Newton iteration on X_pq = [p=q]{0} ∪ K_pq(X) over the productive pairs
        let vars: Vec<(usize, usize)> = productive.iter().copied().collect();
        let index: BTreeMap<(usize, usize), usize> = vars.iter().enumerate().map(|(i, &pq)| (pq, i)).collect();
        let zero = SemilinearSet::zero(gamma.clone());
        let empty = SemilinearSet::empty(gamma.clone());
        let apply = |images: &BTreeMap<Vec<usize>, SemilinearSet>| -> Result<Vec<SemilinearSet>> {
            let mut out: Vec<SemilinearSet> = vars
                .iter()
                .map(|&(p, q)| if p == q { zero.clone() } else { empty.clone() })
                .collect();
            for (key, s) in images {
                if let Some(&v) = index.get(&(key[0], key[1])) {
                    out[v] = out[v].union(s)?.simplified();
                }
            }
            Ok(out)
        };
        let mut nu: Vec<SemilinearSet> = apply(&BTreeMap::new())?;
        for _ in 0..=vars.len() {
            let values: BTreeMap<(usize, usize), SemilinearSet> =
                vars.iter().copied().zip(nu.iter().cloned()).collect();
            let f = apply(&self.block_images(children, &child_letters, gamma, a, &values, false, level)?)?;
            if f.iter().zip(&nu).all(|(x, y)| included(x, y)) {
                break;
            }
            let mut coeffs: Vec<BTreeMap<usize, SemilinearSet>> = vec![BTreeMap::new(); vars.len()];
            for (key, s) in self.block_images(children, &child_letters, gamma, a, &values, true, level)? {
                if let (Some(&v), Some(&u)) = (index.get(&(key[0], key[1])), index.get(&(key[2], key[3]))) {
                    coeffs[v].insert(u, s);
                }
            }
            nu = solve_linear(gamma, f, coeffs);
        }
        let mut out = SemilinearSet::empty(gamma.clone());
        for pq in &finals {
            out = out.union(&nu[index[pq]])?;
        }
        Ok(out)
    }

    fn free_product_per_pair(
        &mut self,
        children: &[DecompositionTree],
        gamma: &CoordSpace,
        a: &Nfa,
        level: u32,
    ) -> Result<SemilinearSet> {
        let n = a.states();
        let all_pairs = CoordSpace::canonical(
            (0..n).flat_map(|p| (0..n).map(move |q| Letter::pair(level, p, q))),
        );
        let inner = gamma.join(&all_pairs);
        let mut blocks: BTreeMap<(usize, usize), SemilinearSet> = BTreeMap::new();
        for p in 0..n {
            for q in 0..n {
                let mut k = SemilinearSet::empty(inner.clone());
                for child in children {
                    let mut letters = child.letters();
                    letters.extend(gamma.names().iter().cloned());
                    let b = build_block_nfa(a, p, q, &letters, level)?;
                    let r = self.run(child, &inner, &b, level)?;
                    k = k.union(&r)?;
                }
                blocks.insert((p, q), k);
            }
        }
        let finals: Vec<(usize, usize)> = a.accepting().iter().map(|&f| (a.initial(), f)).collect();
        self.solve_pairs(gamma, &inner, &blocks, &finals, n, level)
    }

    /// Image over Γ of the grammar `S → (q0,f)`, `(p,q) → K[p,q]`,
    /// `(q,q) → ε`, whose pair letters act as nonterminals.
    fn solve_pairs(
        &mut self,
        gamma: &CoordSpace,
        inner: &CoordSpace,
        blocks: &BTreeMap<(usize, usize), SemilinearSet>,
        finals: &[(usize, usize)],
        n: usize,
        level: u32,
    ) -> Result<SemilinearSet> {
        match self.opts.grammar {
            GrammarRoute::Substitution => Ok(substitution(gamma, inner, blocks, finals, level)),
            GrammarRoute::Grammar(strategy) => {
                let s = Letter::marker(&format!("S{level}"));
                let mut nts: BTreeSet<Letter> = BTreeSet::from([s.clone()]);
                let mut prods = Vec::new();
                for &(p, q) in finals {
                    prods.push((s.clone(), Rhs::Word(vec![Letter::pair(level, p, q)])));
                }
                for p in 0..n {
                    for q in 0..n {
                        let x = Letter::pair(level, p, q);
                        nts.insert(x.clone());
                        if p == q {
                            prods.push((x.clone(), Rhs::Word(Vec::new())));
                        }
                        if let Some(k) = blocks.get(&(p, q)) {
                            prods.push((x, Rhs::Regular(sl_realize(k))));
                        }
                    }
                }
                let g = cfg_normalize(&ExtendedCfg::new(s, nts, prods)?)?;
                cfg_parikh_with(&g, gamma, strategy)
            }
        }
    }
}

/// Equation system `X_pq = [p=q]{0} ∪ K[p,q](X)` over Γ, where every pair
/// coordinate of a block image is replaced by its variable; variables not
/// needed by the start pairs are dropped.
fn substitution(
    gamma: &CoordSpace,
    inner: &CoordSpace,
    blocks: &BTreeMap<(usize, usize), SemilinearSet>,
    finals: &[(usize, usize)],
    level: u32,
) -> SemilinearSet {
    // coordinate roles in the inner space
    enum Role {
        Gamma(usize),
        Pair(usize, usize),
    }
    let roles: Vec<Role> = inner
        .names()
        .iter()
        .map(|l| match l {
            Letter::Pair { level: lv, from, to } if *lv == level => Role::Pair(*from as usize, *to as usize),
            other => Role::Gamma(gamma.index_of(other).expect("inner = gamma ∪ pairs")),
        })
        .collect();
    let pairs_of = |v: &[u64]| -> Vec<(usize, usize)> {
        v.iter()
            .zip(&roles)
            .filter_map(|(&k, r)| match r {
                Role::Pair(p, q) if k > 0 => Some((*p, *q)),
                _ => None,
            })
            .collect()
    };

    // variables reachable from the start pairs
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for &pq in finals {
        if !index.contains_key(&pq) {
            index.insert(pq, order.len());
            order.push(pq);
            queue.push_back(pq);
        }
    }
    while let Some(pq) = queue.pop_front() {
        if let Some(k) = blocks.get(&pq) {
            for c in k.components() {
                let mut used = pairs_of(c.constant());
                for p in c.periods() {
                    used.extend(pairs_of(p));
                }
                for u in used {
                    if !index.contains_key(&u) {
                        index.insert(u, order.len());
                        order.push(u);
                        queue.push_back(u);
                    }
                }
            }
        }
    }

    let project = |v: &[u64]| -> Vec<u64> {
        let mut out = vec![0; gamma.dim()];
        for (&k, r) in v.iter().zip(&roles) {
            if let Role::Gamma(i) = r {
                out[*i] = k;
            }
        }
        out
    };
    let konst = |v: Vec<u64>| Expr::Const(SemilinearSet::from_parts(gamma.clone(), vec![LinearSet::point(v)]));
    let monomial = |v: &[u64]| -> Vec<Expr> {
        let mut parts = vec![konst(project(v))];
        for (&k, r) in v.iter().zip(&roles) {
            if let Role::Pair(p, q) = r {
                for _ in 0..k {
                    parts.push(Expr::Var(index[&(*p, *q)]));
                }
            }
        }
        parts
    };
    let eqs: Vec<Expr> = order
        .iter()
        .map(|&(p, q)| {
            let mut alts = Vec::new();
            if p == q {
                alts.push(konst(vec![0; gamma.dim()]));
            }
            if let Some(k) = blocks.get(&(p, q)) {
                for c in k.components() {
                    let mut parts = monomial(c.constant());
                    for per in c.periods() {
                        parts.push(Expr::Star(Box::new(Expr::Sum(monomial(per)))));
                    }
                    alts.push(Expr::Sum(parts));
                }
            }
            Expr::Union(alts)
        })
        .collect();
    let sol = least_solution(&System {
        space: gamma.clone(),
        eqs,
    });
    let mut out = SemilinearSet::empty(gamma.clone());
    for pq in finals {
        out = out.union(&sol[index[pq]]).expect("same space");
    }
    out.simplified()
}

/// Whether `w` lies in the rational subset of the graph group given by `a`.
pub fn decide_rational(
    ia: &IndependenceAlphabet,
    a: &Nfa,
    w: &GroupWord,
    opts: &EngineOptions,
) -> Result<bool> {
    if ia.len() > opts.max_vertices {
        return Err(Error::resource(
            "decide_rational",
            format!("{} vertices exceed limit {}", ia.len(), opts.max_vertices),
        ));
    }
    let tree = ia_decompose(ia)?;
    let letters = ia.letters();
    if let Some(l) = a.alphabet().into_iter().find(|l| !letters.contains(l)) {
        return Err(Error::input(format!("automaton letter {l} is not a generator of the alphabet")));
    }
    let target = trace_nf(ia, w)?;
    let shifted = a.prepend_word(&target.inverse().letters()).trim();
    if shifted.states() > opts.max_states {
        return Err(Error::resource(
            "decide_rational",
            format!(
                "automaton has {} states after prepending the target, limit {}",
                shifted.states(),
                opts.max_states
            ),
        ));
    }
    let r = Engine::new(opts).run(&tree, &CoordSpace::empty(), &shifted, 0)?;
    Ok(!r.is_empty())
}

/// Automaton for the submonoid generated by `gens`: one hub state, initial
/// and accepting, with a loop spelling each generator.
pub fn generator_star(gens: &[GroupWord]) -> Nfa {
    let mut ts = Vec::new();
    let mut states = 1;
    for g in gens {
        let letters = g.letters();
        let mut from = 0;
        for (i, l) in letters.iter().enumerate() {
            let to = if i + 1 == letters.len() {
                0
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
    Nfa::from_parts(states, 0, BTreeSet::from([0]), ts)
}

/// Whether `w` lies in the submonoid generated by `gens`.
pub fn decide_submonoid(
    ia: &IndependenceAlphabet,
    gens: &[GroupWord],
    w: &GroupWord,
    opts: &EngineOptions,
) -> Result<bool> {
    let mut normal = Vec::new();
    for g in gens {
        let nf = trace_nf(ia, g)?;
        if !nf.is_empty() && !normal.contains(&nf) {
            normal.push(nf);
        }
    }
    decide_rational(ia, &generator_star(&normal), w, opts)
}

/// Whether `w` lies in the subgroup generated by `gens`.
pub fn decide_subgroup(
    ia: &IndependenceAlphabet,
    gens: &[GroupWord],
    w: &GroupWord,
    opts: &EngineOptions,
) -> Result<bool> {
    let mut all: Vec<GroupWord> = gens.to_vec();
    all.extend(gens.iter().map(GroupWord::inverse));
    decide_submonoid(ia, &all, w, opts)
}
