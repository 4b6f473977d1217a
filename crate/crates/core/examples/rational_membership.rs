//! Membership in rational subsets given by automata.

use ggdec::automata::Nfa;
use ggdec::sli::{decide_rational, EngineOptions};
use ggdec::traces::{GroupWord, IndependenceAlphabet};

fn main() {
    let opts = EngineOptions::default();
    let word = |s: &str| GroupWord::parse(s).unwrap();
    let ab_star = Nfa::from_word(&word("a b").letters()).star();
    let a_star = Nfa::from_word(&word("a").letters()).star();

    let z2 = IndependenceAlphabet::new(&["a", "b"], &[("a", "b")]).unwrap();
    let f2 = IndependenceAlphabet::new(&["a", "b"], &[]).unwrap();
    let z_x_f2 = IndependenceAlphabet::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();

    let queries = [
        ("Z^2", &z2, &ab_star, "(ab)*", "b a"),
        ("F2", &f2, &ab_star, "(ab)*", "b a"),
        ("F2", &f2, &ab_star, "(ab)*", "a b a b"),
        ("Z x F2", &z_x_f2, &a_star, "a*", "b c b^-1 c^-1"),
        ("Z x F2", &z_x_f2, &a_star, "a*", "c a^2 c^-1"),
    ];
    for (group, ia, lang, lang_name, target) in queries {
        let member = decide_rational(ia, lang, &word(target), &opts).unwrap();
        println!("{group:7} {target:14} in {lang_name:6} {member}");
    }
}
