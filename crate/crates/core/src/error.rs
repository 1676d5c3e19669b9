use thiserror::Error;

use crate::machine::Operation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a token could not be part of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermutationDefect {
    NotAnInteger,
    Zero,
    Duplicate,
    /// Value larger than the sequence length, so some smaller value is missing.
    Gap,
}

impl std::fmt::Display for PermutationDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PermutationDefect::NotAnInteger => "not a nonnegative integer",
            PermutationDefect::Zero => "zero",
            PermutationDefect::Duplicate => "duplicate",
            PermutationDefect::Gap => "out of range (leaves a gap)",
        })
    }
}

/// The rule an illegal operation broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    InputExhausted,
    NotNextInput,
    EmptyQueue,
    NotAtFront,
    NotInQueue,
    JumpFromFront,
    Locked,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Violation::InputExhausted => "input is exhausted",
            Violation::NotNextInput => "enqueued value is not the next input",
            Violation::EmptyQueue => "queue is empty",
            Violation::NotAtFront => "popped value is not at the front",
            Violation::NotInQueue => "value is not in the queue",
            Violation::JumpFromFront => "the front entry leaves by pop, not jump",
            Violation::Locked => "entry is locked and may not jump",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: token `{token}` is {defect}")]
    NotAPermutation {
        token: String,
        defect: PermutationDefect,
    },

    #[error("{what}: size {requested} exceeds the bound {limit}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("illegal operation {op}: {violation}")]
    IllegalOperation { op: Operation, violation: Violation },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
