pub mod automata;
pub mod cli;
pub mod error;
pub mod fixpoint;
pub mod grammar;
pub mod hilbert;
pub mod letter;
pub mod oracles;
pub mod semilinear;
pub mod sli;
pub mod traces;
