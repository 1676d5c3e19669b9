//! Lock-based jump queues and the permutation classes they produce.
//!
//! A jump queue is a FIFO queue that also lets elements other than the front
//! one leave early ("jump"). Each jump locks the entries behind the jumper
//! until everything that was in front of it has been output. Two disciplines
//! are modelled:
//!
//! * [`Discipline::Loose`]: only entries behind the jumper are locked. The
//!   producible permutations are exactly the 4231-avoiders.
//! * [`Discipline::Strict`]: additionally, entries that arrive while locks are
//!   active start out locked. The producible permutations are exactly the
//!   {4231, 42513}-avoiders.
//!
//! The crate is split into
//!
//! * [`perm`]: permutations, pattern containment and stage decompositions,
//! * [`machine`]: executable queue semantics, the greedy recognizer and an
//!   exhaustive search oracle,
//! * [`enumeration`]: exact counting of Av(4231, 42513) by brute force, a
//!   two-index dynamic program, and the ternary-tree recurrence,
//! * [`cli`]: the `jumpq` command line front end.
//!
//! Counting routines are generic over the coefficient type (see
//! [`scalar::Counting`]); [`BigCount`] is the arbitrary-precision default.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod machine;
pub mod perm;
pub mod scalar;

pub use error::{Error, Result};
pub use machine::{init, Discipline, MachineState, Operation, RecognitionResult};
pub use perm::{PatternOccurrence, Permutation};

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Exact ratio of two counts.
pub type BigRatio = num_rational::Ratio<BigCount>;

/// Power series with arbitrary-precision coefficients.
pub type BigSeries = enumeration::SeriesTable<BigCount>;

/// `l`/`n` table with arbitrary-precision cells.
pub type BigDpTable = enumeration::DpTable<BigCount>;

/// Caps on the factorial-cost operations.
///
/// Every brute-force or exhaustive routine refuses sizes above its cap with
/// [`Error::BoundExceeded`]. Raise a field explicitly to go further.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all `n!` permutations are enumerated.
    pub brute_force: usize,
    /// Largest `n` for the depth-first search over every operation sequence.
    pub exhaustive: usize,
    /// Largest queue size for the frontal-segment search.
    pub frontal: usize,
}

impl Limits {
    pub const DEFAULT_BRUTE_FORCE: usize = 10;
    pub const DEFAULT_EXHAUSTIVE: usize = 6;
    pub const DEFAULT_FRONTAL: usize = 7;

    /// No caps at all. Costs are factorial; use with care.
    pub fn unbounded() -> Self {
        Limits {
            brute_force: usize::MAX,
            exhaustive: usize::MAX,
            frontal: usize::MAX,
        }
    }

    pub(crate) fn check(limit: usize, requested: usize, what: &'static str) -> Result<()> {
        if requested > limit {
            Err(Error::BoundExceeded {
                what,
                requested,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_force: Self::DEFAULT_BRUTE_FORCE,
            exhaustive: Self::DEFAULT_EXHAUSTIVE,
            frontal: Self::DEFAULT_FRONTAL,
        }
    }
}
