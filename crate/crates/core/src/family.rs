//! Set-valued maps: a vertex is sent to a finite set of natural labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::relation::{VertexId, VertexSet};

pub type Label = u32;

/// A finite set of labels, iterated in ascending order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(BTreeSet<Label>);

impl LabelSet {
    pub fn new() -> Self {
        LabelSet(BTreeSet::new())
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.contains(&label)
    }

    pub fn insert(&mut self, label: Label) -> bool {
        self.0.insert(label)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn is_superset(&self, other: &LabelSet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn is_disjoint(&self, other: &LabelSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &LabelSet) -> LabelSet {
        LabelSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &LabelSet) -> LabelSet {
        LabelSet(self.0.intersection(&other.0).copied().collect())
    }

    /// The sets intersect and neither contains the other.
    pub fn overlaps(&self, other: &LabelSet) -> bool {
        let common = self.intersection(other);
        !common.is_empty() && common != *self && common != *other
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        LabelSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Label; N]> for LabelSet {
    fn from(labels: [Label; N]) -> Self {
        labels.into_iter().collect()
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite map from vertices to label sets. One set per key, so the map is
/// a function by construction.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SetFamily {
    entries: BTreeMap<VertexId, LabelSet>,
}

impl SetFamily {
    pub fn new() -> Self {
        SetFamily::default()
    }

    /// Later duplicates of a key win.
    pub fn from_entries<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, S)>,
        S: Into<LabelSet>,
    {
        SetFamily {
            entries: entries.into_iter().map(|(k, s)| (k, s.into())).collect(),
        }
    }

    /// Total application: the empty set outside the key set.
    pub fn apply(&self, x: VertexId) -> LabelSet {
        self.entries.get(&x).cloned().unwrap_or_default()
    }

    /// Borrowing variant of [`apply`](Self::apply) for keys.
    pub fn get(&self, x: VertexId) -> Option<&LabelSet> {
        self.entries.get(&x)
    }

    pub fn contains_key(&self, x: VertexId) -> bool {
        self.entries.contains_key(&x)
    }

    pub fn keys(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.entries.keys().copied()
    }

    /// Key set as a [`VertexSet`]; keys must be below `MAX_UNIVERSE`.
    pub fn key_set(&self) -> VertexSet {
        self.keys().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &LabelSet)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `f` with `x` rebound to `set`; every other binding unchanged.
    pub fn paste(&self, x: VertexId, set: LabelSet) -> SetFamily {
        let mut entries = self.entries.clone();
        entries.insert(x, set);
        SetFamily { entries }
    }

    /// Pointwise union over the keys of `other`: `x ↦ f(x) ∪ other(x)` for
    /// `x ∈ keys(other)`, untouched elsewhere.
    pub fn point_union(&self, other: &SetFamily) -> SetFamily {
        let mut entries = self.entries.clone();
        for (x, extra) in other.iter() {
            let slot = entries.entry(x).or_default();
            *slot = slot.union(extra);
        }
        SetFamily { entries }
    }

    /// No two distinct keys share a set.
    pub fn is_injective(&self) -> bool {
        let values: BTreeSet<&LabelSet> = self.entries.values().collect();
        values.len() == self.entries.len()
    }

    pub fn has_empty_set(&self) -> bool {
        self.entries.values().any(LabelSet::is_empty)
    }

    pub fn union_of_range(&self) -> LabelSet {
        self.entries.values().flat_map(|s| s.iter()).collect()
    }

    /// Smallest label not used anywhere in the family.
    pub fn next_fresh_label(&self) -> Label {
        self.union_of_range().max_label().map_or(0, |m| m + 1)
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}
