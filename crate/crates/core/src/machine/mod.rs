//! Executable semantics of loosely and strictly locked jump queues.
//!
//! The input `1, 2, ..., n` is fed to the rear of the queue. Any entry may be
//! output: the front one by an ordinary pop, any other one by a jump. A jump
//! of `x` with entries both in front of and behind it creates a lock token
//! whose release set is the entries in front of `x`; every entry behind `x`
//! holds the token. A token stays active while any member of its release set
//! is still queued, and an entry holding an active token may not jump (it may
//! still be popped from the front). Under [`Discipline::Strict`] a new entrant
//! also picks up every active token.

mod explore;
mod recognize;
mod trace;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

pub use explore::{
    frontal_outputs, frontal_outputs_with, producible_set_exhaustive, reachable_states,
};
pub use recognize::{
    forbidden_patterns, producible_set, recognize, RecognitionResult, Witness, PATTERN_4231,
    PATTERN_42513,
};
pub use trace::{replay, Trace, TraceRecord, TraceStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Discipline {
    Loose,
    Strict,
}

impl Discipline {
    pub const ALL: [Discipline; 2] = [Discipline::Loose, Discipline::Strict];
}

impl fmt::Display for Discipline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Discipline::Loose => "loose",
            Discipline::Strict => "strict",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LockToken {
    pub id: TokenId,
    /// Values that were in front of the jumped element.
    pub release_set: BTreeSet<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub value: u32,
    pub tokens: BTreeSet<TokenId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operation {
    Enqueue(u32),
    PopFront(u32),
    Jump(u32),
}

impl Operation {
    pub fn value(self) -> u32 {
        match self {
            Operation::Enqueue(v) | Operation::PopFront(v) | Operation::Jump(v) => v,
        }
    }

    pub fn is_output(self) -> bool {
        !matches!(self, Operation::Enqueue(_))
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Enqueue(v) => write!(f, "E{v}"),
            Operation::PopFront(v) => write!(f, "Pop({v})"),
            Operation::Jump(v) => write!(f, "Jump({v})"),
        }
    }
}

/// A snapshot of a jump queue mid-run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineState {
    n: u32,
    next_input: u32,
    queue: Vec<Entry>,
    tokens: BTreeMap<TokenId, LockToken>,
    output: Vec<u32>,
    discipline: Discipline,
    next_token: u32,
}

/// Fresh machine over the input `1..=n`.
pub fn init(n: usize, discipline: Discipline) -> MachineState {
    MachineState {
        n: n as u32,
        next_input: 1,
        queue: Vec::new(),
        tokens: BTreeMap::new(),
        output: Vec::new(),
        discipline,
        next_token: 0,
    }
}

impl MachineState {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn discipline(&self) -> Discipline {
        self.discipline
    }

    pub fn next_input(&self) -> u32 {
        self.next_input
    }

    pub fn queue(&self) -> &[Entry] {
        &self.queue
    }

    pub fn queue_values(&self) -> Vec<u32> {
        self.queue.iter().map(|e| e.value).collect()
    }

    pub fn tokens(&self) -> &BTreeMap<TokenId, LockToken> {
        &self.tokens
    }

    pub fn output(&self) -> &[u32] {
        &self.output
    }

    /// Number of queued entries.
    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    /// Number of values not yet enqueued.
    pub fn remaining_input(&self) -> usize {
        (self.n + 1 - self.next_input) as usize
    }

    /// Queue empty and input exhausted.
    pub fn is_terminal(&self) -> bool {
        self.queue.is_empty() && self.next_input > self.n
    }

    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.queue.iter().position(|e| e.value == value)
    }

    pub fn is_token_active(&self, id: TokenId) -> bool {
        self.tokens
            .get(&id)
            .is_some_and(|t| self.queue.iter().any(|e| t.release_set.contains(&e.value)))
    }

    pub fn is_locked(&self, entry: &Entry) -> bool {
        entry.tokens.iter().any(|&id| self.is_token_active(id))
    }

    pub fn active_tokens(&self) -> Vec<TokenId> {
        self.tokens
            .keys()
            .copied()
            .filter(|&id| self.is_token_active(id))
            .collect()
    }

    pub fn legal_operations(&self) -> Vec<Operation> {
        let mut ops = Vec::new();
        if self.next_input <= self.n {
            ops.push(Operation::Enqueue(self.next_input));
        }
        if let Some(front) = self.queue.first() {
            ops.push(Operation::PopFront(front.value));
        }
        for entry in self.queue.iter().skip(1) {
            if !self.is_locked(entry) {
                ops.push(Operation::Jump(entry.value));
            }
        }
        ops
    }

    fn check(&self, op: Operation) -> std::result::Result<(), Violation> {
        match op {
            Operation::Enqueue(v) => {
                if self.next_input > self.n {
                    Err(Violation::InputExhausted)
                } else if v != self.next_input {
                    Err(Violation::NotNextInput)
                } else {
                    Ok(())
                }
            }
            Operation::PopFront(v) => match self.queue.first() {
                None => Err(Violation::EmptyQueue),
                Some(front) if front.value != v => Err(Violation::NotAtFront),
                Some(_) => Ok(()),
            },
            Operation::Jump(v) => match self.position_of(v) {
                _ if self.queue.is_empty() => Err(Violation::EmptyQueue),
                None => Err(Violation::NotInQueue),
                Some(0) => Err(Violation::JumpFromFront),
                Some(k) if self.is_locked(&self.queue[k]) => Err(Violation::Locked),
                Some(_) => Ok(()),
            },
        }
    }

    /// The state after `op`. `self` is left untouched.
    pub fn apply_operation(&self, op: Operation) -> Result<MachineState> {
        self.step(op).map(|(state, _)| state)
    }

    /// Like [`apply_operation`](Self::apply_operation), also reporting the
    /// values that became locked by this step.
    pub fn step(&self, op: Operation) -> Result<(MachineState, TraceStep)> {
        self.check(op)
            .map_err(|violation| Error::IllegalOperation { op, violation })?;
        let mut next = self.clone();
        let mut locks_created = None;
        match op {
            Operation::Enqueue(v) => {
                let tokens = match self.discipline {
                    Discipline::Strict => self.active_tokens().into_iter().collect(),
                    Discipline::Loose => BTreeSet::new(),
                };
                next.queue.push(Entry { value: v, tokens });
                next.next_input += 1;
            }
            Operation::PopFront(v) => {
                next.queue.remove(0);
                next.output.push(v);
            }
            Operation::Jump(v) => {
                let k = self.position_of(v).expect("checked");
                let removed = next.queue.remove(k);
                next.output.push(removed.value);
                // Rear jumps lock nobody.
                if k < next.queue.len() {
                    let id = TokenId(next.next_token);
                    next.next_token += 1;
                    let release_set = next.queue[..k].iter().map(|e| e.value).collect();
                    next.tokens.insert(id, LockToken { id, release_set });
                    let mut locked = Vec::new();
                    for entry in &mut next.queue[k..] {
                        entry.tokens.insert(id);
                        locked.push(entry.value);
                    }
                    locks_created = Some(locked);
                }
            }
        }
        next.collect_released();
        Ok((next, TraceStep { op, locks_created }))
    }

    /// Drops tokens that can never be active again. Release sets only shrink,
    /// so an inactive token stays inactive.
    fn collect_released(&mut self) {
        let dead: Vec<TokenId> = self
            .tokens
            .keys()
            .copied()
            .filter(|&id| !self.is_token_active(id))
            .collect();
        if dead.is_empty() {
            return;
        }
        for id in &dead {
            self.tokens.remove(id);
        }
        for entry in &mut self.queue {
            entry.tokens.retain(|id| !dead.contains(id));
        }
    }

    /// Id-free description of the lock structure: for every queued entry, the
    /// release sets of the tokens it holds.
    pub(crate) fn lock_shape(&self) -> Vec<(u32, BTreeSet<BTreeSet<u32>>)> {
        self.queue
            .iter()
            .map(|e| {
                let sets = e
                    .tokens
                    .iter()
                    .filter(|&&id| self.is_token_active(id))
                    .map(|id| self.tokens[id].release_set.clone())
                    .collect();
                (e.value, sets)
            })
            .collect()
    }

    /// Checks the structural invariants; returns a description of the first
    /// broken one.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.n as usize + 1];
        for v in self
            .queue
            .iter()
            .map(|e| e.value)
            .chain(self.output.iter().copied())
            .chain(self.next_input..=self.n)
        {
            if v == 0 || v > self.n || seen[v as usize] {
                return Err(format!("value {v} misplaced or repeated"));
            }
            seen[v as usize] = true;
        }
        if seen.iter().skip(1).any(|s| !s) {
            return Err("queue, output and pending input do not cover 1..n".into());
        }
        for entry in &self.queue {
            for id in &entry.tokens {
                if !self.tokens.contains_key(id) {
                    return Err(format!(
                        "entry {} holds unknown token {:?}",
                        entry.value, id
                    ));
                }
            }
        }
        for token in self.tokens.values() {
            if token.release_set.is_empty() {
                return Err(format!("token {:?} has an empty release set", token.id));
            }
            if self.is_token_active(token.id) {
                let holders = self.queue.iter().filter(|e| e.tokens.contains(&token.id));
                if holders.count() == 0 {
                    return Err(format!("active token {:?} has no queued holder", token.id));
                }
                // Release values always sit in front of every holder.
                let last_release = self
                    .queue
                    .iter()
                    .rposition(|e| token.release_set.contains(&e.value));
                let first_holder = self.queue.iter().position(|e| e.tokens.contains(&token.id));
                if last_release >= first_holder {
                    return Err(format!(
                        "token {:?} has a holder in front of its release set",
                        token.id
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(state: &MachineState, ops: &[Operation]) -> MachineState {
        ops.iter()
            .fold(state.clone(), |s, &op| s.apply_operation(op).unwrap())
    }

    use Operation::{Enqueue as E, Jump as J, PopFront as P};

    #[test]
    fn init_examples() {
        let s = init(0, Discipline::Loose);
        assert!(s.is_terminal());
        assert!(s.output().is_empty());
        assert!(s.legal_operations().is_empty());

        let s = init(5, Discipline::Strict);
        assert_eq!((s.queue_len(), s.remaining_input()), (0, 5));

        assert_eq!(init(1, Discipline::Loose).legal_operations(), vec![E(1)]);
        assert_eq!(init(2, Discipline::Loose).legal_operations(), vec![E(1)]);
    }

    #[test]
    fn unlocked_full_queue_offers_pop_and_jumps() {
        let s = run(&init(3, Discipline::Loose), &[E(1), E(2), E(3)]);
        assert_eq!(s.legal_operations(), vec![P(1), J(2), J(3)]);
    }

    #[test]
    fn rear_jump_creates_no_token() {
        let s = run(&init(4, Discipline::Loose), &[E(1), E(2), E(3), E(4)]);
        let (s, step) = s.step(J(4)).unwrap();
        assert_eq!(s.queue_values(), vec![1, 2, 3]);
        assert!(s.tokens().is_empty());
        assert_eq!(step.locks_created, None);
    }

    #[test]
    fn interior_jump_locks_entries_behind_until_front_is_output() {
        let s = run(&init(3, Discipline::Loose), &[E(1), E(2), E(3)]);
        let (s, step) = s.step(J(2)).unwrap();
        assert_eq!(s.queue_values(), vec![1, 3]);
        assert_eq!(step.locks_created, Some(vec![3]));
        let token = s.tokens().values().next().unwrap();
        assert_eq!(token.release_set, BTreeSet::from([1]));
        assert!(s.is_locked(&s.queue()[1]));
        assert_eq!(s.legal_operations(), vec![P(1)]);
        assert!(matches!(
            s.apply_operation(J(3)),
            Err(Error::IllegalOperation {
                violation: Violation::Locked,
                ..
            })
        ));

        let s = s.apply_operation(P(1)).unwrap();
        assert_eq!(s.queue_values(), vec![3]);
        assert!(!s.is_locked(&s.queue()[0]));
        assert!(s.tokens().is_empty());
        assert_eq!(s.legal_operations(), vec![P(3)]);
    }

    #[test]
    fn locked_front_entry_may_still_be_popped() {
        let s = run(&init(4, Discipline::Loose), &[E(1), E(2), E(3), E(4), J(2)]);
        // 3 and 4 locked by {1}; pop 1 releases them.
        let s = run(&s, &[P(1)]);
        assert!(s.tokens().is_empty());
        let s = run(&init(5, Discipline::Loose), &[E(1), E(2), E(3), E(4), J(3)]);
        // 4 locked by {1,2}; after popping 1 and 2 nothing remains locked.
        let s = run(&s, &[P(1)]);
        assert!(s.is_locked(&s.queue()[1]));
        let s = run(&s, &[P(2), E(5), J(5)]);
        assert!(s.tokens().is_empty());
    }

    #[test]
    fn strict_entrant_acquires_active_tokens() {
        let s = run(&init(5, Discipline::Strict), &[E(1), E(2), E(3), J(2)]);
        assert_eq!(s.queue_values(), vec![1, 3]);
        // Queue ⟨1, 3(locked)⟩ with 4 and 5 pending.
        assert_eq!(s.legal_operations(), vec![E(4), P(1)]);
        let s = s.apply_operation(E(4)).unwrap();
        assert!(s.is_locked(&s.queue()[2]));
        assert_eq!(s.legal_operations(), vec![E(5), P(1)]);

        let loose = run(&init(5, Discipline::Loose), &[E(1), E(2), E(3), J(2), E(4)]);
        assert!(!loose.is_locked(&loose.queue()[2]));
        assert_eq!(loose.legal_operations(), vec![E(5), P(1), J(4)]);
    }

    #[test]
    fn illegal_operations_name_the_rule() {
        let s = init(2, Discipline::Loose);
        let err = |s: &MachineState, op| match s.apply_operation(op) {
            Err(Error::IllegalOperation { violation, .. }) => violation,
            other => panic!("expected rejection, got {other:?}"),
        };
        assert_eq!(err(&s, E(2)), Violation::NotNextInput);
        assert_eq!(err(&s, P(1)), Violation::EmptyQueue);
        assert_eq!(err(&s, J(1)), Violation::EmptyQueue);
        let s = run(&s, &[E(1), E(2)]);
        assert_eq!(err(&s, E(3)), Violation::InputExhausted);
        assert_eq!(err(&s, P(2)), Violation::NotAtFront);
        assert_eq!(err(&s, J(1)), Violation::JumpFromFront);
        let s = run(&s, &[J(2)]);
        assert_eq!(err(&s, J(2)), Violation::NotInQueue);
    }

    #[test]
    fn apply_does_not_mutate_input() {
        let s = run(&init(3, Discipline::Strict), &[E(1), E(2), E(3)]);
        let before = s.clone();
        let _ = s.apply_operation(J(2)).unwrap();
        assert_eq!(s, before);
    }
}
