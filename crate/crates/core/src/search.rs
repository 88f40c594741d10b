//! Breadth-first search over implicit state spaces.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// Shortest path of states from `start` to `goal`, or `None` when `goal` is
/// unreachable. Fails once more than `guard` distinct states are discovered.
pub fn bfs_shortest<S, F, I>(
    start: S,
    goal: &S,
    guard: usize,
    mut neighbors: F,
) -> Result<Option<Vec<S>>>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S) -> I,
    I: IntoIterator<Item = S>,
{
    if &start == goal {
        return Ok(Some(vec![start]));
    }
    let mut states = vec![start.clone()];
    let mut parent = vec![usize::MAX];
    let mut index: HashMap<S, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        let current = states[at].clone();
        for next in neighbors(&current) {
            let Entry::Vacant(slot) = index.entry(next) else {
                continue;
            };
            let id = states.len();
            if id >= guard {
                return Err(Error::GuardExceeded(guard));
            }
            let found = slot.key() == goal;
            states.push(slot.key().clone());
            slot.insert(id);
            parent.push(at);
            if found {
                let mut path = Vec::new();
                let mut x = id;
                while x != usize::MAX {
                    path.push(states[x].clone());
                    x = parent[x];
                }
                path.reverse();
                return Ok(Some(path));
            }
            queue.push_back(id);
        }
    }
    Ok(None)
}
