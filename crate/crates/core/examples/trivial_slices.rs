//! Counting marker letters along words that are trivial in the group.
//!
//! The automaton reads a^i b^j a^-k b^-l and marks each a^-1 with m and each
//! b^-1 with n. In Z^2 every (k, l) survives; in F2 one of them must be 0.

use ggdec::automata::{Nfa, Transition};
use ggdec::letter::Letter;
use ggdec::semilinear::CoordSpace;
use ggdec::sli::{sli, EngineOptions, SliQuery};
use ggdec::traces::{ia_decompose, IndependenceAlphabet};

fn main() {
    let (m, n) = (Letter::marker("m"), Letter::marker("n"));
    let t = |from, label: Option<Letter>, to| Transition { from, label, to };
    let a = Nfa::new(
        6,
        0,
        [3],
        vec![
            t(0, Some(Letter::gen("a")), 0),
            t(0, None, 1),
            t(1, Some(Letter::gen("b")), 1),
            t(1, None, 2),
            t(2, Some(Letter::gen_inv("a")), 4),
            t(4, Some(m.clone()), 2),
            t(2, None, 3),
            t(3, Some(Letter::gen_inv("b")), 5),
            t(5, Some(n.clone()), 3),
        ],
    )
    .unwrap();
    for (label, es) in [("Z^2", &[("a", "b")][..]), ("F2", &[][..])] {
        let ia = IndependenceAlphabet::new(&["a", "b"], es).unwrap();
        let q = SliQuery {
            tree: ia_decompose(&ia).unwrap(),
            gamma: CoordSpace::canonical([m.clone(), n.clone()]),
            automaton: a.clone(),
        };
        println!("{label}: (m, n) counts\n{}", sli(&q, &EngineOptions::default()).unwrap().render());
    }
}
