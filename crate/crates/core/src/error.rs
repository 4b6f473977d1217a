use std::fmt;

use thiserror::Error;

/// Shape of a forbidden induced subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    C4,
    P4,
}

/// Four vertices inducing a C4 (in cycle order) or a P4 (in path order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestWitness {
    pub kind: ObstructionKind,
    pub vertices: [String; 4],
}

impl fmt::Display for ForestWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices.join(","))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Input(String),

    #[error("independence alphabet is not a transitive forest (induced {kind:?} on {witness})", kind = .0.kind, witness = .0)]
    NotTransitiveForest(ForestWitness),

    #[error("resource limit exceeded in {frame}: {detail}")]
    Resource { frame: String, detail: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(frame: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Resource {
            frame: frame.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
