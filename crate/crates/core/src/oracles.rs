//! Independent deciders used to cross-check the engine.

use std::collections::BTreeSet;

use crate::automata::{Nfa, Transition};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::traces::{trace_nf, GroupWord, IndependenceAlphabet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Yes(GroupWord),
    No,
    Unknown,
}

fn check_letters(ia: &IndependenceAlphabet, a: &Nfa) -> Result<()> {
    let letters = ia.letters();
    match a.alphabet().into_iter().find(|l| !letters.contains(l)) {
        Some(l) => Err(Error::input(format!("automaton letter {l} is not a generator of the alphabet"))),
        None => Ok(()),
    }
}

/// Adds `p -ε-> q` whenever `p -x-> r ⇒ε* s -x^-1-> q`, until nothing changes.
pub fn benois_saturate(a: &Nfa) -> Nfa {
    let n = a.states();
    let mut eps: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for t in a.transitions() {
        if t.label.is_none() {
            eps[t.from].insert(t.to);
        }
    }
    let lettered: Vec<&Transition> = a.transitions().iter().filter(|t| t.label.is_some()).collect();
    loop {
        // reflexive-transitive ε-closure of every state
        let closure: Vec<BTreeSet<usize>> = (0..n)
            .map(|s| {
                let mut seen = BTreeSet::from([s]);
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for &v in &eps[u] {
                        if seen.insert(v) {
                            stack.push(v);
                        }
                    }
                }
                seen
            })
            .collect();
        let mut added = false;
        for t in &lettered {
            let inv = t.label.as_ref().and_then(Letter::inverse);
            let Some(inv) = inv else { continue };
            for u in &lettered {
                if u.label.as_ref() == Some(&inv)
                    && closure[t.to].contains(&u.from)
                    && t.from != u.to
                    && eps[t.from].insert(u.to)
                {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut ts: Vec<Transition> = a.transitions().to_vec();
    for (p, qs) in eps.iter().enumerate() {
        for &q in qs {
            ts.push(Transition { from: p, label: None, to: q });
        }
    }
    Nfa::new(n, a.initial(), a.accepting().iter().copied(), ts).expect("same states")
}

/// Free-group rational membership by saturation.
pub fn benois_member(ia: &IndependenceAlphabet, a: &Nfa, w: &GroupWord) -> Result<bool> {
    if !ia.edges().is_empty() {
        return Err(Error::input("saturation oracle needs an alphabet without edges"));
    }
    check_letters(ia, a)?;
    trace_nf(ia, w)?;
    Ok(benois_saturate(a).accepts(&w.freely_reduced().letters()))
}

/// Bounded search for an accepted word equal to `w` in the group. Shortest
/// witnesses are found first, ties broken by letter order; never answers `No`.
pub fn bfs_member(
    ia: &IndependenceAlphabet,
    a: &Nfa,
    w: &GroupWord,
    max_len: usize,
) -> Result<OracleVerdict> {
    check_letters(ia, a)?;
    let target = trace_nf(ia, w)?;
    let mut words: Vec<Vec<Letter>> = a.enumerate_upto(max_len).into_iter().collect();
    words.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    for u in words {
        let u = GroupWord::from_letters(&u)?;
        if trace_nf(ia, &u)? == target {
            return Ok(OracleVerdict::Yes(u));
        }
    }
    Ok(OracleVerdict::Unknown)
}

/// Signed letter count per vertex, in vertex order.
pub fn exponent_sum(ia: &IndependenceAlphabet, w: &GroupWord) -> Result<Vec<i64>> {
    let mut out = vec![0; ia.len()];
    for g in &w.0 {
        let i = ia
            .index_of(&g.name)
            .ok_or_else(|| Error::input(format!("unknown vertex {}", g.name)))?;
        out[i] += g.sign();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sli::generator_star;
    use proptest::prelude::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s).unwrap()
    }

    fn f2() -> IndependenceAlphabet {
        IndependenceAlphabet::new(&["a", "b"], &[]).unwrap()
    }

    #[test]
    fn benois_examples() {
        let abs = Nfa::from_word(&w("a b").letters()).star();
        assert!(!benois_member(&f2(), &abs, &w("b a")).unwrap());
        assert!(benois_member(&f2(), &abs, &w("a b")).unwrap());
        let red = Nfa::from_word(&w("a a^-1 b").letters());
        assert!(benois_member(&f2(), &red, &w("b")).unwrap());
        let z2 = IndependenceAlphabet::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(benois_member(&z2, &abs, &w("a b")).is_err());
    }

    #[test]
    fn benois_nested_cancellation() {
        let a = Nfa::from_word(&w("a b b^-1 a^-1 b").letters());
        assert!(benois_member(&f2(), &a, &w("b")).unwrap());
        let g = generator_star(&[w("a b"), w("b^-1 a^-1")]);
        assert!(benois_member(&f2(), &g, &GroupWord::empty()).unwrap());
        assert!(benois_member(&f2(), &g, &w("a b a b")).unwrap());
        assert!(!benois_member(&f2(), &g, &w("a")).unwrap());
    }

    #[test]
    fn bfs_examples() {
        let g = generator_star(&[w("a b"), w("a^-1")]);
        assert_eq!(bfs_member(&f2(), &g, &w("b"), 4).unwrap(), OracleVerdict::Yes(w("a^-1 a b")));
        assert_eq!(bfs_member(&f2(), &g, &w("b^-1"), 6).unwrap(), OracleVerdict::Unknown);
        assert_eq!(
            bfs_member(&f2(), &g, &GroupWord::empty(), 0).unwrap(),
            OracleVerdict::Yes(GroupWord::empty())
        );
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(exponent_sum(&f2(), &w("a b a^-1 b^-1")).unwrap(), vec![0, 0]);
        assert_eq!(exponent_sum(&f2(), &w("a^2 b^-1")).unwrap(), vec![2, -1]);
        assert!(exponent_sum(&f2(), &w("c")).is_err());
    }

    fn word_strategy() -> impl Strategy<Value = GroupWord> {
        prop::collection::vec((0..2usize, any::<bool>()), 0..10).prop_map(|v| {
            GroupWord(
                v.into_iter()
                    .map(|(i, neg)| {
                        let name = ["a", "b"][i];
                        if neg {
                            crate::letter::SignedGen::neg(name)
                        } else {
                            crate::letter::SignedGen::pos(name)
                        }
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn benois_ignores_free_reduction(u in word_strategy(), v in word_strategy()) {
            let a = generator_star(&[u.clone()]);
            prop_assert_eq!(
                benois_member(&f2(), &a, &v).unwrap(),
                benois_member(&f2(), &a, &v.freely_reduced()).unwrap()
            );
        }

        #[test]
        fn bfs_witnesses_verify(u in word_strategy(), v in word_strategy()) {
            let a = generator_star(&[u, v.clone()]);
            if let OracleVerdict::Yes(x) = bfs_member(&f2(), &a, &v, 6).unwrap() {
                prop_assert!(a.accepts(&x.letters()));
                prop_assert_eq!(trace_nf(&f2(), &x).unwrap(), trace_nf(&f2(), &v).unwrap());
            }
        }

        #[test]
        fn exponent_sum_is_a_homomorphism(u in word_strategy(), v in word_strategy()) {
            let s = |x: &GroupWord| exponent_sum(&f2(), x).unwrap();
            let uv: Vec<i64> = s(&u).iter().zip(s(&v)).map(|(x, y)| x + y).collect();
            prop_assert_eq!(s(&u.concat(&v)), uv);
            let neg: Vec<i64> = s(&u).iter().map(|x| -x).collect();
            prop_assert_eq!(s(&u.inverse()), neg);
        }
    }
}
