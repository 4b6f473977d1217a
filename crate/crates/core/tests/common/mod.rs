//! Helpers shared by the integration tests: random inputs and oracles that
//! do not go through the decision engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ggdec::automata::{parikh_image, Nfa, ParikhStrategy, Transition};
use ggdec::grammar::BinCfg;
use ggdec::hilbert::hilbert_basis;
use ggdec::letter::{Letter, SignedGen};
use ggdec::semilinear::{CoordSpace, LinearSet};
use ggdec::traces::{GroupWord, IndependenceAlphabet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Isomorphism types of transitive forests on one to three vertices.
pub fn small_forests() -> Vec<(&'static str, IndependenceAlphabet)> {
    let g = |vs: &[&str], es: &[(&str, &str)]| IndependenceAlphabet::new(vs, es).unwrap();
    vec![
        ("Z", g(&["a"], &[])),
        ("F2", g(&["a", "b"], &[])),
        ("Z^2", g(&["a", "b"], &[("a", "b")])),
        ("F3", g(&["a", "b", "c"], &[])),
        ("Z^2*Z", g(&["a", "b", "c"], &[("a", "b")])),
        ("ZxF2", g(&["a", "b", "c"], &[("a", "b"), ("a", "c")])),
        ("Z^3", g(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")])),
    ]
}

pub fn signed_letters(ia: &IndependenceAlphabet) -> Vec<SignedGen> {
    ia.vertices().flat_map(|v| [SignedGen::pos(v), SignedGen::neg(v)]).collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, ia: &IndependenceAlphabet, len: usize) -> GroupWord {
    let ls = signed_letters(ia);
    GroupWord((0..len).map(|_| ls[rng.gen_range(0..ls.len())].clone()).collect())
}

/// A word equal to the identity: cancelling pairs inserted at random places,
/// then random swaps of adjacent commuting letters.
pub fn random_trivial_word(rng: &mut ChaCha8Rng, ia: &IndependenceAlphabet, pairs: usize) -> GroupWord {
    let ls = signed_letters(ia);
    let mut w: Vec<SignedGen> = Vec::new();
    for _ in 0..pairs {
        let x = ls[rng.gen_range(0..ls.len())].clone();
        let at = rng.gen_range(0..=w.len());
        w.insert(at, x.inv());
        w.insert(at, x);
    }
    for _ in 0..2 * w.len() {
        if w.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..w.len() - 1);
        if w[i].name != w[i + 1].name && ia.independent(&w[i].name, &w[i + 1].name) {
            w.swap(i, i + 1);
        }
    }
    GroupWord(w)
}

pub fn random_nfa(rng: &mut ChaCha8Rng, ia: &IndependenceAlphabet, max_states: usize, max_transitions: usize) -> Nfa {
    let ls = signed_letters(ia);
    let n = rng.gen_range(1..=max_states);
    let ts = (0..rng.gen_range(1..=max_transitions))
        .map(|_| Transition {
            from: rng.gen_range(0..n),
            label: Some(Letter::Gen(ls[rng.gen_range(0..ls.len())].clone())),
            to: rng.gen_range(0..n),
        })
        .collect();
    let mut acc: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if acc.is_empty() {
        acc.push(rng.gen_range(0..n));
    }
    Nfa::new(n, 0, acc, ts).unwrap()
}

/// Signed letter count per vertex, computed from scratch.
fn exponents(ia: &IndependenceAlphabet, w: &GroupWord) -> Vec<i64> {
    ia.vertices()
        .map(|v| w.0.iter().filter(|g| &*g.name == v).map(|g| if g.inverse { -1 } else { 1 }).sum())
        .collect()
}

/// Whether some accepted word has the same exponent vector as `w`. Exact
/// membership for free abelian groups, a necessary condition otherwise.
pub fn abelian_member(ia: &IndependenceAlphabet, a: &Nfa, w: &GroupWord) -> bool {
    let letters: Vec<Letter> = signed_letters(ia).into_iter().map(Letter::Gen).collect();
    let space = CoordSpace::new(letters.clone()).unwrap();
    let strategy = ParikhStrategy::PathCycle { max_states: 64 };
    let image = parikh_image(a, &space, strategy).unwrap();
    let target = exponents(ia, w);
    let exp = |v: &[u64]| -> Vec<i64> { (0..ia.len()).map(|i| v[2 * i] as i64 - v[2 * i + 1] as i64).collect() };
    image.components().iter().any(|c: &LinearSet| {
        let rhs: Vec<i64> = exp(c.constant()).iter().zip(&target).map(|(x, t)| t - x).collect();
        if c.periods().is_empty() {
            return rhs.iter().all(|&x| x == 0);
        }
        let cols: Vec<Vec<i64>> = c.periods().iter().map(|p| exp(p)).collect();
        let rows: Vec<Vec<i64>> = (0..ia.len()).map(|i| cols.iter().map(|col| col[i]).collect()).collect();
        !hilbert_basis(&rows, &rhs).unwrap().inhomogeneous.is_empty()
    })
}

/// Induced C4 or P4 among four vertices of the graph on `0..n`: a path
/// `v0 v1 v2 v3` without the chords `v0 v2` and `v1 v3` (the edge `v0 v3`
/// decides which of the two it is).
pub fn has_induced_obstruction(n: usize, adj: &[Vec<bool>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if [a, b, c, d].iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    if adj[a][b] && adj[b][c] && adj[c][d] && !adj[a][c] && !adj[b][d] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Alphabet on the first `n` names with the edges selected by `mask` over
/// the pairs `i < j` in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u32) -> (IndependenceAlphabet, Vec<Vec<bool>>) {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
                edges.push((NAMES[i], NAMES[j]));
            }
            bit += 1;
        }
    }
    (IndependenceAlphabet::new(&NAMES[..n], &edges).unwrap(), adj)
}

pub fn nt(s: &str) -> Letter {
    Letter::marker(s)
}

/// Binarized grammar with up to three nonterminals, six productions and
/// two terminals.
pub fn random_bin_cfg(rng: &mut ChaCha8Rng) -> BinCfg {
    let nts = ["S", "A", "B"];
    let k = rng.gen_range(1..=3);
    let mut prods = Vec::new();
    for i in 0..rng.gen_range(1..=6) {
        let lhs = if i == 0 { "S" } else { nts[rng.gen_range(0..k)] };
        let rhs: Vec<Letter> = (0..rng.gen_range(0..=2))
            .map(|_| {
                if rng.gen_bool(0.5) {
                    nt(nts[rng.gen_range(0..k)])
                } else {
                    Letter::gen(["a", "b"][rng.gen_range(0..2)])
                }
            })
            .collect();
        prods.push((nt(lhs), rhs));
    }
    BinCfg::new(nt("S"), nts[..k].iter().map(|s| nt(s)).collect(), prods).unwrap()
}

/// All vectors of the given dimension with coordinate sum at most `max`.
pub fn vectors_upto(dim: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u64>| {
                let used: u64 = v.iter().sum();
                (0..=max - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
