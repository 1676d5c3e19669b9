//! Exhaustive search over every legal operation sequence. Slow, but makes no
//! assumption about which moves are worth trying, so it serves as an oracle
//! for the greedy recognizer.

use std::collections::{BTreeSet, HashSet};

use super::{init, Discipline, MachineState, Operation};
use crate::error::Result;
use crate::perm::Permutation;
use crate::Limits;

type StateKey = (Vec<u32>, u32, Vec<(u32, BTreeSet<BTreeSet<u32>>)>);

fn key(state: &MachineState) -> StateKey {
    (
        state.output().to_vec(),
        state.next_input(),
        state.lock_shape(),
    )
}

/// Depth-first search from `start`, calling `visit` once per distinct state.
fn explore(start: MachineState, mut visit: impl FnMut(&MachineState)) {
    let mut seen = HashSet::new();
    let mut stack = vec![start];
    while let Some(state) = stack.pop() {
        if !seen.insert(key(&state)) {
            continue;
        }
        visit(&state);
        for op in state.legal_operations() {
            stack.push(state.apply_operation(op).expect("legal operation applies"));
        }
    }
}

fn terminal_outputs(start: MachineState) -> BTreeSet<Permutation> {
    let mut outputs = BTreeSet::new();
    explore(start, |s| {
        if s.is_terminal() {
            outputs
                .insert(Permutation::new(s.output().to_vec()).expect("outputs are permutations"));
        }
    });
    outputs
}

/// Every permutation of length `n` produced by some legal operation sequence.
pub fn producible_set_exhaustive(
    n: usize,
    discipline: Discipline,
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    Limits::check(limits.exhaustive, n, "exhaustive search")?;
    Ok(terminal_outputs(init(n, discipline)))
}

/// All distinct states reachable from `init(n, discipline)`.
pub fn reachable_states(
    n: usize,
    discipline: Discipline,
    limits: &Limits,
) -> Result<Vec<MachineState>> {
    Limits::check(limits.exhaustive, n, "exhaustive search")?;
    let mut states = Vec::new();
    explore(init(n, discipline), |s| states.push(s.clone()));
    Ok(states)
}

/// Output orders of a queue holding `1..=m` with no pending input and no
/// locks, using pops and jumps only.
pub fn frontal_outputs(m: usize, limits: &Limits) -> Result<BTreeSet<Permutation>> {
    frontal_outputs_with(m, Discipline::Loose, limits)
}

pub fn frontal_outputs_with(
    m: usize,
    discipline: Discipline,
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    Limits::check(limits.frontal, m, "frontal search")?;
    let loaded = (1..=m as u32).fold(init(m, discipline), |s, v| {
        s.apply_operation(Operation::Enqueue(v))
            .expect("enqueue into a fresh queue")
    });
    Ok(terminal_outputs(loaded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::producible_set;

    #[test]
    fn exhaustive_examples() {
        let limits = Limits::default();
        assert_eq!(
            producible_set_exhaustive(3, Discipline::Strict, &limits)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            producible_set_exhaustive(4, Discipline::Loose, &limits).unwrap(),
            producible_set(4, Discipline::Loose, &limits).unwrap()
        );
        for d in Discipline::ALL {
            let zero = producible_set_exhaustive(0, d, &limits).unwrap();
            assert_eq!(
                zero.into_iter().collect::<Vec<_>>(),
                vec![Permutation::identity(0)]
            );
        }
        assert!(producible_set_exhaustive(7, Discipline::Loose, &limits).is_err());
    }

    #[test]
    fn frontal_examples() {
        let limits = Limits::default();
        let three = frontal_outputs(3, &limits).unwrap();
        assert_eq!(three.len(), 5);
        assert!(!three.contains(&Permutation::from_digits("231").unwrap()));
        assert_eq!(frontal_outputs(0, &limits).unwrap().len(), 1);
        assert_eq!(
            frontal_outputs(1, &limits)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![Permutation::identity(1)]
        );
        assert!(frontal_outputs(8, &limits).is_err());
    }

    #[test]
    fn reachable_states_satisfy_invariants_and_legality_is_exact() {
        let limits = Limits::default();
        for d in Discipline::ALL {
            for n in 0..=4 {
                for state in reachable_states(n, d, &limits).unwrap() {
                    state.check_invariants().unwrap();
                    let legal = state.legal_operations();
                    // Every candidate operation with a value in 1..=n+1.
                    for v in 1..=n as u32 + 1 {
                        for op in [
                            Operation::Enqueue(v),
                            Operation::PopFront(v),
                            Operation::Jump(v),
                        ] {
                            let accepted = state.apply_operation(op).is_ok();
                            assert_eq!(accepted, legal.contains(&op), "{op} in {state:?}");
                        }
                    }
                }
            }
        }
    }
}
