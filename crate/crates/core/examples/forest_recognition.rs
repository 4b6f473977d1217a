//! Recognizes transitive forests and prints decompositions or obstructions.

use ggdec::traces::{ia_is_transitive_forest, IndependenceAlphabet};

fn main() {
    let graphs: [(&str, &[&str], &[(&str, &str)]); 5] = [
        ("free group F3", &["a", "b", "c"], &[]),
        ("Z x F2", &["a", "b", "c"], &[("a", "b"), ("a", "c")]),
        ("Z^3", &["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")]),
        ("path on four vertices", &["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]),
        ("square", &["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]),
    ];
    for (label, vs, es) in graphs {
        let ia = IndependenceAlphabet::new(vs, es).expect("valid alphabet");
        match ia_is_transitive_forest(&ia) {
            Ok(tree) => println!("{label}: {}", tree.to_component_sexpr()),
            Err(w) => println!("{label}: induced {:?} on {w}", w.kind),
        }
    }
}
