//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails or overruns its time budget.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{graph_from_mask, has_induced_obstruction, random_bin_cfg, random_nfa, random_word, small_forests, vectors_upto};
use ggdec::automata::Nfa;
use ggdec::grammar::{cfg_enumerate, cfg_parikh, cfg_parikh_with, CfgParikhStrategy, DEFAULT_MAX_MULTISET_STATES};
use ggdec::letter::Letter;
use ggdec::oracles::benois_member;
use ggdec::semilinear::{CoordSpace, LinearSet, SemilinearSet};
use ggdec::sli::{decide_rational, decide_submonoid, EngineOptions};
use ggdec::traces::{ia_is_transitive_forest, trace_nf, wp, GroupWord, IndependenceAlphabet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(s: &str) -> GroupWord {
    GroupWord::parse(s).unwrap()
}

fn recognition() -> Result<String, String> {
    let mut graphs = 0;
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u32 << pairs {
            let (ia, adj) = graph_from_mask(n, mask);
            let forest = ia_is_transitive_forest(&ia).is_ok();
            ensure(forest != has_induced_obstruction(n, &adj), || format!("n={n} mask={mask:b}"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs"))
}

fn free_group_differential() -> Result<String, String> {
    let ia = IndependenceAlphabet::new(&["a", "b"], &[]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut members = 0;
    for _ in 0..200 {
        let a = random_nfa(&mut rng, &ia, 4, 16);
        let len = rng.gen_range(0..=6);
        let word = random_word(&mut rng, &ia, len);
        let engine = decide_rational(&ia, &a, &word, &EngineOptions::default()).map_err(|e| e.to_string())?;
        let oracle = benois_member(&ia, &a, &word).map_err(|e| e.to_string())?;
        ensure(engine == oracle, || format!("{} on {word}: engine {engine}, oracle {oracle}", a.to_json()))?;
        members += engine as usize;
    }
    Ok(format!("200 cases, {members} members"))
}

fn word_problem() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut trivial = 0;
    for (name, ia) in small_forests() {
        for _ in 0..100 {
            let len = rng.gen_range(0..=8);
            let word = random_word(&mut rng, &ia, len);
            let a = Nfa::from_word(&word.letters());
            let got = decide_rational(&ia, &a, &GroupWord::empty(), &EngineOptions::default())
                .map_err(|e| format!("{name} {word}: {e}"))?;
            let want = wp(&ia, &word).unwrap();
            ensure(got == want, || format!("{name} {word}: engine {got}, wp {want}"))?;
            trivial += want as usize;
        }
    }
    Ok(format!("700 words, {trivial} trivial"))
}

fn torsion_freeness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let opts = EngineOptions::default();
    for (name, ia) in small_forests() {
        let (mut nontrivial, mut trivial) = (0, 0);
        while nontrivial < 100 || trivial < 20 {
            let len = rng.gen_range(1..=8);
            let g = random_word(&mut rng, &ia, len);
            let is_trivial = trace_nf(&ia, &g).unwrap().is_empty();
            if is_trivial && trivial < 20 {
                trivial += 1;
                let got = decide_submonoid(&ia, &[g.clone()], &g.inverse(), &opts).map_err(|e| e.to_string())?;
                ensure(got, || format!("{name}: trivial {g} rejected"))?;
            } else if !is_trivial && nontrivial < 100 {
                nontrivial += 1;
                let got = decide_submonoid(&ia, &[g.clone()], &g.inverse(), &opts).map_err(|e| e.to_string())?;
                ensure(!got, || format!("{name}: inverse of {g} found in its submonoid"))?;
            }
        }
    }
    Ok("7 alphabets, 100 nontrivial and 20 trivial each".into())
}

fn parikh_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let space = CoordSpace::canonical([Letter::gen("a"), Letter::gen("b")]);
    for _ in 0..50 {
        let g = random_bin_cfg(&mut rng);
        let words: BTreeSet<Vec<u64>> = cfg_enumerate(&g, 8)
            .iter()
            .map(|u| space.names().iter().map(|l| u.iter().filter(|x| *x == l).count() as u64).collect())
            .collect();
        let image = cfg_parikh(&g).map_err(|e| e.to_string())?.embed(&space).map_err(|e| e.to_string())?;
        let k = g.pruned().nonterminals().len() + 1;
        let with = |c: usize| {
            let s = CfgParikhStrategy::MultisetAutomaton { capacity: Some(c), max_states: DEFAULT_MAX_MULTISET_STATES };
            cfg_parikh_with(&g, &space, s).map_err(|e| e.to_string())
        };
        let (mk, mk1) = (with(k)?, with(k + 1)?);
        for v in vectors_upto(2, 8) {
            let want = words.contains(&v);
            ensure(image.contains(&v) == want, || format!("{g:?} at {v:?}"))?;
            ensure(mk.contains(&v) == want && mk1.contains(&v) == want, || format!("capacities disagree on {g:?} at {v:?}"))?;
        }
    }
    Ok("50 grammars".into())
}

const BOX: u64 = 12;

fn random_linear(rng: &mut ChaCha8Rng, dim: usize) -> LinearSet {
    let constant = (0..dim).map(|_| rng.gen_range(0..=4)).collect();
    let periods = (0..rng.gen_range(0..=3)).map(|_| (0..dim).map(|_| rng.gen_range(0..=4)).collect()).collect();
    LinearSet::new(constant, periods)
}

fn random_semilinear(rng: &mut ChaCha8Rng, space: &CoordSpace) -> SemilinearSet {
    let comps = (0..rng.gen_range(1..=3)).map(|_| random_linear(rng, space.dim())).collect();
    SemilinearSet::new(space.clone(), comps).unwrap()
}

/// Points of the set whose coordinates in `bounded` stay within the box,
/// generated by adding periods that move at least one bounded coordinate.
fn generate(s: &SemilinearSet, bounded: &[usize]) -> BTreeSet<Vec<u64>> {
    let fits = |v: &[u64]| bounded.iter().all(|&i| v[i] <= BOX);
    let mut out = BTreeSet::new();
    for c in s.components() {
        let periods: Vec<&Vec<u64>> = c.periods().iter().filter(|p| bounded.iter().any(|&i| p[i] > 0)).collect();
        if !fits(c.constant()) {
            continue;
        }
        let mut seen = BTreeSet::from([c.constant().to_vec()]);
        let mut stack = vec![c.constant().to_vec()];
        while let Some(v) = stack.pop() {
            for p in &periods {
                let u: Vec<u64> = v.iter().zip(p.iter()).map(|(x, y)| x + y).collect();
                if fits(&u) && seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        out.extend(seen);
    }
    out
}

fn box_points(dim: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|v: Vec<u64>| (0..=BOX).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn semilinear_algebra() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let names = ["x", "y", "z"];
    for round in 0..50 {
        let dim = rng.gen_range(1..=3);
        let space = CoordSpace::new(names[..dim].iter().map(|n| Letter::gen(n)).collect()).unwrap();
        let all: Vec<usize> = (0..dim).collect();
        let s = random_semilinear(&mut rng, &space);
        let t = random_semilinear(&mut rng, &space);
        let (gs, gt) = (generate(&s, &all), generate(&t, &all));
        let st = s.intersect(&t).map_err(|e| e.to_string())?;
        for v in box_points(dim) {
            ensure(s.contains(&v) == gs.contains(&v), || format!("membership {round} at {v:?}"))?;
            ensure(st.contains(&v) == (gs.contains(&v) && gt.contains(&v)), || format!("intersection {round} at {v:?}"))?;
        }
        let keep: Vec<usize> = all.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        let labels: Vec<Letter> = keep.iter().map(|&i| space.names()[i].clone()).collect();
        let p = s.project(&labels).map_err(|e| e.to_string())?;
        let gp: BTreeSet<Vec<u64>> = generate(&s, &keep).into_iter().map(|v| keep.iter().map(|&i| v[i]).collect()).collect();
        for v in box_points(keep.len()) {
            ensure(p.contains(&v) == gp.contains(&v), || format!("projection {round} onto {keep:?} at {v:?}"))?;
        }
    }
    Ok("50 instances of each operation".into())
}

fn handcrafted() -> Result<String, String> {
    let star = IndependenceAlphabet::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
    let edge = IndependenceAlphabet::new(&["a", "b"], &[("a", "b")]).unwrap();
    let lang = |s: &str| Nfa::from_word(&w(s).letters()).star();
    let cases = [
        (&star, lang("a"), "b c b^-1 c^-1", false),
        (&star, lang("b c"), "c b", false),
        (&edge, lang("a b"), "b a", true),
    ];
    for (ia, a, word, want) in cases {
        let got = decide_rational(ia, &a, &w(word), &EngineOptions::default()).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{word}: got {got}"))?;
    }
    Ok("3 cases".into())
}

fn cli_contract() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let files = [
        ("alpha_edge_ab.json", r#"{"vertices": ["a", "b"], "edges": [["a", "b"]]}"#),
        ("p4.json", r#"{"vertices": ["a", "b", "c", "d"], "edges": [["a", "b"], ["b", "c"], ["c", "d"]]}"#),
        ("aut.json", r#"{"states": 1, "initial": 0, "accepting": [0], "transitions": [[0, "a", 0]]}"#),
    ];
    for (name, body) in files {
        std::fs::write(dir.path().join(name), body).map_err(|e| e.to_string())?;
    }
    let cases: [(&[&str], &str, i32); 3] = [
        (&["wp", "alpha_edge_ab.json", "a b a^-1 b^-1"], "TRIVIAL\n", 0),
        (&["forest", "p4.json"], "NOT-TRANSITIVE-FOREST witness=a,b,c,d\n", 0),
        (&["rational", "p4.json", "aut.json", "a"], "", 3),
    ];
    for (args, stdout, code) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_ggdec"))
            .current_dir(dir.path())
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        let got = (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned());
        ensure(got == (Some(code), stdout.to_string()), || format!("{args:?}: {got:?}"))?;
    }
    Ok("3 invocations".into())
}

fn main() {
    let criteria: [(&str, Check, u64); 8] = [
        ("forest recognition vs induced C4/P4 search, all graphs up to 6 vertices", recognition, 60),
        ("free group membership vs saturation, 200 random automata", free_group_differential, 900),
        ("word problem through rational membership, 7 forests x 100 words", word_problem, 600),
        ("torsion-freeness through submonoid membership", torsion_freeness, 600),
        ("grammar Parikh images vs enumeration, 50 grammars", parikh_oracle, 300),
        ("semilinear membership/intersection/projection vs box enumeration", semilinear_algebra, 120),
        ("handcrafted Z x F2 and Z^2 cases", handcrafted, 120),
        ("command-line contract", cli_contract, 10),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("over the {limit}s limit")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name} ({detail}, {:.2}s)", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({:.2}s)", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
}
