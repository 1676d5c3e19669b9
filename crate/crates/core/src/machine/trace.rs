use serde::{Deserialize, Serialize};

use super::{init, Discipline, MachineState, Operation};
use crate::error::{Error, Result};

/// One applied operation together with the entries it locked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub op: Operation,
    /// Values that received a fresh lock token; `None` unless the operation
    /// was an interior jump.
    pub locks_created: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn operations(&self) -> Vec<Operation> {
        self.steps.iter().map(|s| s.op).collect()
    }

    pub fn records(&self) -> Vec<TraceRecord> {
        self.steps.iter().map(TraceRecord::from).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Enqueue,
    PopFront,
    Jump,
}

/// Wire form of a trace step:
/// `{"op": "enqueue"|"pop_front"|"jump", "value": v, "locks_created": [...]}`
/// with `locks_created` omitted when nothing was locked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub op: OpKind,
    pub value: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locks_created: Option<Vec<u32>>,
}

impl TraceRecord {
    pub fn operation(&self) -> Operation {
        match self.op {
            OpKind::Enqueue => Operation::Enqueue(self.value),
            OpKind::PopFront => Operation::PopFront(self.value),
            OpKind::Jump => Operation::Jump(self.value),
        }
    }
}

impl From<&TraceStep> for TraceRecord {
    fn from(step: &TraceStep) -> Self {
        let (op, value) = match step.op {
            Operation::Enqueue(v) => (OpKind::Enqueue, v),
            Operation::PopFront(v) => (OpKind::PopFront, v),
            Operation::Jump(v) => (OpKind::Jump, v),
        };
        TraceRecord {
            op,
            value,
            locks_created: step.locks_created.clone(),
        }
    }
}

/// Replays serialized records from a fresh machine, checking every operation
/// is legal and every recorded lock matches what the machine actually locks.
pub fn replay(n: usize, discipline: Discipline, records: &[TraceRecord]) -> Result<MachineState> {
    let mut state = init(n, discipline);
    for (index, record) in records.iter().enumerate() {
        let (next, step) = state.step(record.operation())?;
        if step.locks_created != record.locks_created {
            return Err(Error::InvalidArgument(format!(
                "trace record {}: recorded locks {:?} but the machine locked {:?}",
                index + 1,
                record.locks_created,
                step.locks_created
            )));
        }
        state = next;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_json_shape() {
        let jump = TraceRecord {
            op: OpKind::Jump,
            value: 2,
            locks_created: Some(vec![3]),
        };
        assert_eq!(
            serde_json::to_string(&jump).unwrap(),
            r#"{"op":"jump","value":2,"locks_created":[3]}"#
        );
        let pop = TraceRecord {
            op: OpKind::PopFront,
            value: 1,
            locks_created: None,
        };
        assert_eq!(
            serde_json::to_string(&pop).unwrap(),
            r#"{"op":"pop_front","value":1}"#
        );
        let back: TraceRecord = serde_json::from_str(r#"{"op":"enqueue","value":4}"#).unwrap();
        assert_eq!(back.operation(), Operation::Enqueue(4));
    }

    #[test]
    fn replay_rejects_wrong_lock_annotation() {
        let records: Vec<TraceRecord> = serde_json::from_str(
            r#"[{"op":"enqueue","value":1},{"op":"enqueue","value":2},
                {"op":"enqueue","value":3},{"op":"jump","value":2}]"#,
        )
        .unwrap();
        assert!(matches!(
            replay(3, Discipline::Loose, &records),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn replay_rejects_illegal_operation() {
        let records = vec![TraceRecord {
            op: OpKind::PopFront,
            value: 1,
            locks_created: None,
        }];
        assert!(matches!(
            replay(1, Discipline::Strict, &records),
            Err(Error::IllegalOperation { .. })
        ));
    }
}
