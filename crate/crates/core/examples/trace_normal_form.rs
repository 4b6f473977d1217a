//! Normal forms and the word problem in a few graph groups.

use ggdec::traces::{trace_nf, wp, GroupWord, IndependenceAlphabet};

fn main() {
    let z_x_f2 = IndependenceAlphabet::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
    let f3 = IndependenceAlphabet::new(&["a", "b", "c"], &[]).unwrap();
    for text in ["b a c a^-1", "c a b a^-1 b^-1 c^-1", "a b c b^-1 c^-1", "b c b^-1 c^-1"] {
        let w = GroupWord::parse(text).unwrap();
        for (label, ia) in [("Z x F2", &z_x_f2), ("F3", &f3)] {
            let nf = trace_nf(ia, &w).unwrap();
            let trivial = wp(ia, &w).unwrap();
            println!("{label:7} {text:24} nf = {nf:16} trivial = {trivial}");
        }
    }
}
