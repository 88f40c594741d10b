//! Reconfiguration sequences and their validation.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::idset::IdSet;

/// `<H_0, H_1, ..., H_l>`: equal-size sets where neighbours differ by one
/// removed and one added element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReconfigSequence {
    steps: Vec<IdSet>,
}

impl ReconfigSequence {
    pub fn new(steps: Vec<IdSet>) -> Self {
        ReconfigSequence { steps }
    }

    pub fn single(start: IdSet) -> Self {
        ReconfigSequence { steps: vec![start] }
    }

    pub fn steps(&self) -> &[IdSet] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<IdSet> {
        self.steps
    }

    /// Number of exchanges, `l`.
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Option<&IdSet> {
        self.steps.first()
    }

    pub fn last(&self) -> Option<&IdSet> {
        self.steps.last()
    }

    pub fn push(&mut self, next: IdSet) {
        self.steps.push(next);
    }

    /// Appends `other`, dropping its first step when it repeats our last one.
    pub fn append(&mut self, other: ReconfigSequence) {
        let mut rest = other.steps.into_iter().peekable();
        if rest.peek().is_some() && rest.peek() == self.steps.last() {
            rest.next();
        }
        self.steps.extend(rest);
    }

    pub fn reversed(&self) -> ReconfigSequence {
        ReconfigSequence {
            steps: self.steps.iter().rev().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    WrongSource,
    WrongTarget,
    NotMember,
    SizeChanged,
    NotExchange,
}

/// First failing position of [`validate_sequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Empty => "sequence is empty",
            ViolationKind::WrongSource => "first step is not the source",
            ViolationKind::WrongTarget => "last step is not the target",
            ViolationKind::NotMember => "step is not a member of the family",
            ViolationKind::SizeChanged => "step has a different size than its predecessor",
            ViolationKind::NotExchange => "step is not a single exchange from its predecessor",
        };
        write!(f, "step {}: {}", self.index, what)
    }
}

/// Checks that `seq` runs from `source` to `target`, that every step is
/// accepted by `family`, and that consecutive steps differ by exactly one
/// exchange.
pub fn validate_sequence(
    seq: &ReconfigSequence,
    source: &IdSet,
    target: &IdSet,
    family: impl Fn(&IdSet) -> bool,
) -> Result<(), Violation> {
    let fail = |index, kind| Err(Violation { index, kind });
    let steps = seq.steps();
    let Some(first) = steps.first() else {
        return fail(0, ViolationKind::Empty);
    };
    if first != source {
        return fail(0, ViolationKind::WrongSource);
    }
    for (i, step) in steps.iter().enumerate() {
        if !family(step) {
            return fail(i, ViolationKind::NotMember);
        }
        if i > 0 {
            let prev = &steps[i - 1];
            if prev.len() != step.len() {
                return fail(i, ViolationKind::SizeChanged);
            }
            if prev.difference_len(step) != 1 {
                return fail(i, ViolationKind::NotExchange);
            }
        }
    }
    if steps.last() != Some(target) {
        return fail(steps.len() - 1, ViolationKind::WrongTarget);
    }
    Ok(())
}

/// Removes revisited states by splicing out the loop between two visits.
/// Endpoints are preserved and the result is never longer than the input.
pub fn compress(seq: &ReconfigSequence) -> ReconfigSequence {
    let mut out: Vec<IdSet> = Vec::with_capacity(seq.steps.len());
    let mut position: HashMap<IdSet, usize> = HashMap::new();
    for step in &seq.steps {
        if let Some(&at) = position.get(step) {
            for dropped in out.drain(at + 1..) {
                position.remove(&dropped);
            }
        } else {
            position.insert(step.clone(), out.len());
            out.push(step.clone());
        }
    }
    ReconfigSequence { steps: out }
}
