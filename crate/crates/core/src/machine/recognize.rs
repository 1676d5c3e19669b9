use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{init, Discipline, MachineState, Operation, Trace};
use crate::error::Result;
use crate::perm::{contains_pattern, permutations_of, PatternOccurrence, Permutation};
use crate::Limits;

pub const PATTERN_4231: [u32; 4] = [4, 2, 3, 1];
pub const PATTERN_42513: [u32; 5] = [4, 2, 5, 1, 3];

/// A forbidden pattern found in a permutation the queue cannot produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pattern: Permutation,
    pub occurrence: PatternOccurrence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct WitnessRecord {
    pattern: String,
    positions: Vec<usize>,
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WitnessRecord {
            pattern: self.pattern.to_digits(),
            positions: self.occurrence.positions.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let record = WitnessRecord::deserialize(deserializer)?;
        let pattern =
            Permutation::from_digits(&record.pattern).map_err(serde::de::Error::custom)?;
        Ok(Witness {
            pattern,
            occurrence: PatternOccurrence {
                positions: record.positions,
            },
        })
    }
}

/// Patterns whose avoidance characterizes what `discipline` can produce, in
/// the order witnesses are searched for.
pub fn forbidden_patterns(discipline: Discipline) -> Vec<Permutation> {
    let mut out = vec![Permutation::new(PATTERN_4231.to_vec()).expect("valid pattern")];
    if discipline == Discipline::Strict {
        out.push(Permutation::new(PATTERN_42513.to_vec()).expect("valid pattern"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionResult {
    Producible(Trace),
    NotProducible {
        /// 1-based output position whose value could not be emitted.
        blocked_at: usize,
        /// `None` only if no forbidden pattern occurs, which would contradict
        /// the characterization of the discipline.
        witness: Option<Witness>,
    },
}

impl RecognitionResult {
    pub fn is_producible(&self) -> bool {
        matches!(self, RecognitionResult::Producible(_))
    }
}

/// Greedy recognition: every target value is output as soon as it can be.
///
/// A value not yet enqueued is reached by enqueuing everything up to it. A
/// queued value leaves by pop if it is at the front and by jump if it is
/// unlocked; a locked interior value means the permutation is not producible.
pub fn recognize(perm: &Permutation, discipline: Discipline) -> RecognitionResult {
    let mut state = init(perm.len(), discipline);
    let mut trace = Trace::default();
    let mut advance = |state: &mut MachineState, op: Operation| {
        let (next, step) = state.step(op).expect("greedy move is legal");
        trace.steps.push(step);
        *state = next;
    };
    for (index, &target) in perm.values().iter().enumerate() {
        while state.next_input() <= target {
            let v = state.next_input();
            advance(&mut state, Operation::Enqueue(v));
        }
        let position = state
            .position_of(target)
            .expect("target is enqueued and not yet output");
        let op = if position == 0 {
            Operation::PopFront(target)
        } else if !state.is_locked(&state.queue()[position]) {
            Operation::Jump(target)
        } else {
            return RecognitionResult::NotProducible {
                blocked_at: index + 1,
                witness: find_witness(perm, discipline),
            };
        };
        advance(&mut state, op);
    }
    RecognitionResult::Producible(trace)
}

fn find_witness(perm: &Permutation, discipline: Discipline) -> Option<Witness> {
    forbidden_patterns(discipline)
        .into_iter()
        .find_map(|pattern| {
            contains_pattern(perm, &pattern).map(|occurrence| Witness {
                pattern,
                occurrence,
            })
        })
}

/// Every permutation of length `n` the greedy recognizer accepts.
pub fn producible_set(
    n: usize,
    discipline: Discipline,
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    let all: Vec<Permutation> = permutations_of(n, limits)?.collect();
    Ok(all
        .into_par_iter()
        .filter(|p| recognize(p, discipline).is_producible())
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}
