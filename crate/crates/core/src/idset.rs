use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A set of arc or vertex identifiers kept in ascending order.
///
/// The ordered representation doubles as the canonical encoding used for
/// hashing reconfiguration states.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdSet(BTreeSet<usize>);

/// Arc identifiers of a [`crate::Digraph`].
pub type ArcSet = IdSet;
/// Vertex identifiers of a [`crate::Digraph`].
pub type VertexSet = IdSet;

impl IdSet {
    pub fn new() -> Self {
        IdSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: usize) -> bool {
        self.0.insert(id)
    }

    pub fn remove(&mut self, id: usize) -> bool {
        self.0.remove(&id)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    /// Elements of `self` absent from `other`, ascending.
    pub fn difference<'a>(&'a self, other: &'a IdSet) -> impl Iterator<Item = usize> + 'a {
        self.0.difference(&other.0).copied()
    }

    pub fn difference_len(&self, other: &IdSet) -> usize {
        self.0.difference(&other.0).count()
    }

    pub fn is_subset(&self, other: &IdSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `self - remove + add`.
    pub fn exchanged(&self, remove: usize, add: usize) -> IdSet {
        let mut next = self.clone();
        next.0.remove(&remove);
        next.0.insert(add);
        next
    }
}

impl FromIterator<usize> for IdSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IdSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for IdSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<Vec<usize>> for IdSet {
    fn from(ids: Vec<usize>) -> Self {
        ids.into_iter().collect()
    }
}

impl Extend<usize> for IdSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a IdSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}
