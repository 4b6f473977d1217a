//! Letters shared by automata, grammars and coordinate spaces.
//!
//! Three kinds coexist: signed group generators, marker letters (auxiliary
//! terminals that the group never sees) and state-pair letters introduced by
//! the free-product step. The derived order puts every signed generator
//! before every marker and every marker before every pair letter.

use std::fmt;
use std::sync::Arc;

/// A generator or its formal inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedGen {
    pub name: Arc<str>,
    pub inverse: bool,
}

impl SignedGen {
    pub fn pos(name: &str) -> Self {
        SignedGen {
            name: Arc::from(name),
            inverse: false,
        }
    }

    pub fn neg(name: &str) -> Self {
        SignedGen {
            name: Arc::from(name),
            inverse: true,
        }
    }

    pub fn inv(&self) -> Self {
        SignedGen {
            name: self.name.clone(),
            inverse: !self.inverse,
        }
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for SignedGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Gen(SignedGen),
    /// Auxiliary terminal. Rendered in brackets so it cannot be confused with
    /// a generator.
    Marker(Arc<str>),
    /// State pair `(from, to)` of an automaton, tagged with the recursion level
    /// that introduced it.
    Pair { level: u32, from: u32, to: u32 },
}

impl Letter {
    pub fn gen(name: &str) -> Self {
        Letter::Gen(SignedGen::pos(name))
    }

    pub fn gen_inv(name: &str) -> Self {
        Letter::Gen(SignedGen::neg(name))
    }

    pub fn marker(label: &str) -> Self {
        Letter::Marker(Arc::from(label))
    }

    pub fn pair(level: u32, from: usize, to: usize) -> Self {
        Letter::Pair {
            level,
            from: from as u32,
            to: to as u32,
        }
    }

    pub fn as_gen(&self) -> Option<&SignedGen> {
        match self {
            Letter::Gen(g) => Some(g),
            _ => None,
        }
    }

    /// Formal inverse of a generator letter; other letters have none.
    pub fn inverse(&self) -> Option<Letter> {
        self.as_gen().map(|g| Letter::Gen(g.inv()))
    }

    /// Parses the file syntax `name` or `name^-1`.
    pub fn parse_gen(token: &str) -> Option<Letter> {
        let (name, inverse) = match token.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (token, false),
        };
        if !is_valid_name(name) {
            return None;
        }
        Some(Letter::Gen(SignedGen {
            name: Arc::from(name),
            inverse,
        }))
    }
}

impl From<SignedGen> for Letter {
    fn from(g: SignedGen) -> Self {
        Letter::Gen(g)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Gen(g) => write!(f, "{g}"),
            Letter::Marker(m) => write!(f, "[{m}]"),
            Letter::Pair { level, from, to } => write!(f, "({level}:{from},{to})"),
        }
    }
}

/// Generator names: nonempty, no whitespace, none of `^ [ ] ( ) ,`.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | '[' | ']' | '(' | ')' | ','))
}

/// Renders a word of letters separated by single spaces.
pub fn render_word(word: &[Letter]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
