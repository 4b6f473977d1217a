//! Parikh images of automata by both strategies, and realization back.

use ggdec::automata::{nfa_parikh, parikh_image, sl_realize, Nfa, ParikhStrategy};
use ggdec::letter::Letter;
use ggdec::semilinear::CoordSpace;

fn main() {
    let text = r#"{"states": 3, "initial": 0, "accepting": [2],
        "transitions": [[0, "a", 1], [1, "b", 0], [1, "c", 2], [2, "c", 2]]}"#;
    let a = Nfa::from_json(text).unwrap();
    let image = nfa_parikh(&a).unwrap();
    println!("path-cycle:\n{}", image.render());

    let space = CoordSpace::canonical(a.alphabet());
    println!("elimination:\n{}", parikh_image(&a, &space, ParikhStrategy::Elimination).unwrap().render());

    let only_c = CoordSpace::canonical([Letter::gen("c")]);
    println!("counting c only:\n{}", parikh_image(&a, &only_c, ParikhStrategy::Elimination).unwrap().render());

    let back = sl_realize(&image);
    println!("realized automaton has {} states; same image: {}", back.states(), nfa_parikh(&back).unwrap() == image);
}
