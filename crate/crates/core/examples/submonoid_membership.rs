//! Finitely generated submonoids and subgroups.

use ggdec::sli::{decide_subgroup, decide_submonoid, EngineOptions};
use ggdec::traces::{GroupWord, IndependenceAlphabet};

fn main() {
    let opts = EngineOptions::default();
    let words = |ws: &[&str]| ws.iter().map(|s| GroupWord::parse(s).unwrap()).collect::<Vec<_>>();
    let f2 = IndependenceAlphabet::new(&["a", "b"], &[]).unwrap();
    let z_x_f2 = IndependenceAlphabet::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();

    let cases = [
        ("F2", &f2, &["a b", "a^-1"][..], "b"),
        ("F2", &f2, &["a b", "a^-1"][..], "b^-1"),
        ("Z x F2", &z_x_f2, &["a b", "c"][..], "b c a"),
        ("Z x F2", &z_x_f2, &["a b c"][..], "c^-1 b^-1 a^-1"),
    ];
    for (group, ia, gens, target) in cases {
        let w = GroupWord::parse(target).unwrap();
        let gens = words(gens);
        let monoid = decide_submonoid(ia, &gens, &w, &opts).unwrap();
        let group_member = decide_subgroup(ia, &gens, &w, &opts).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("{group:7} <{}> {target:16} monoid {monoid:5} group {group_member}", shown.join(", "));
    }
}
