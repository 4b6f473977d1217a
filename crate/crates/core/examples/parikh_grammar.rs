//! Parikh images of context-free grammars.

use ggdec::grammar::{cfg_enumerate, cfg_parikh, cfg_parikh_with, BinCfg, CfgParikhStrategy};
use ggdec::letter::render_word;

fn main() {
    let text = r#"{"start": "S", "productions": [
        ["S", ["a", "S", "b", "S"]],
        ["S", ["c"]]]}"#;
    let g = BinCfg::from_json(text).unwrap();
    println!("binarized: {} nonterminals, {} productions", g.nonterminals().len(), g.productions().len());
    for w in cfg_enumerate(&g, 5) {
        println!("  {}", render_word(&w));
    }
    println!("multiset automaton:\n{}", cfg_parikh(&g).unwrap().render());
    let space = ggdec::semilinear::CoordSpace::canonical(g.terminals());
    println!("equation system:\n{}", cfg_parikh_with(&g, &space, CfgParikhStrategy::Newton).unwrap().render());
}
