//! Cross-checks the engine against the saturation oracle on random
//! free-group automata.

use ggdec::automata::{Nfa, Transition};
use ggdec::letter::{Letter, SignedGen};
use ggdec::oracles::{benois_member, bfs_member, OracleVerdict};
use ggdec::sli::{decide_rational, EngineOptions};
use ggdec::traces::{GroupWord, IndependenceAlphabet};
use rand::{Rng, SeedableRng};

fn main() {
    let ia = IndependenceAlphabet::new(&["a", "b"], &[]).unwrap();
    let gens = [SignedGen::pos("a"), SignedGen::neg("a"), SignedGen::pos("b"), SignedGen::neg("b")];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let (mut members, mut found) = (0, 0);
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let ts = (0..rng.gen_range(1..=6))
            .map(|_| Transition {
                from: rng.gen_range(0..n),
                label: Some(Letter::Gen(gens[rng.gen_range(0..4)].clone())),
                to: rng.gen_range(0..n),
            })
            .collect();
        let a = Nfa::new(n, 0, [n - 1], ts).unwrap();
        let w = GroupWord((0..rng.gen_range(0..4)).map(|_| gens[rng.gen_range(0..4)].clone()).collect());
        let engine = decide_rational(&ia, &a, &w, &EngineOptions::default()).unwrap();
        assert_eq!(engine, benois_member(&ia, &a, &w).unwrap());
        if let OracleVerdict::Yes(_) = bfs_member(&ia, &a, &w, 6).unwrap() {
            assert!(engine);
            found += 1;
        }
        members += engine as usize;
    }
    println!("40 queries agree with saturation; {members} members, {found} confirmed by search");
}
