//! Finite sets of variable symbols.
//!
//! Backed by a sorted set so that equality is extensional by construction
//! and iteration yields the canonical (lexicographic) order used for output.

use std::collections::BTreeSet;

use crate::term::VarSym;

/// A finite set of variables. Two sets are equal iff they have the same
/// members, regardless of how they were built.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VarSet(BTreeSet<VarSym>);

impl VarSet {
    pub fn new() -> Self {
        VarSet(BTreeSet::new())
    }

    pub fn member(&self, x: &VarSym) -> bool {
        self.0.contains(x)
    }

    pub fn insert(&mut self, x: VarSym) {
        self.0.insert(x);
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet(self.0.union(&other.0).cloned().collect())
    }

    /// Number of distinct members.
    pub fn card(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff every member of `self` is in `other` and the inclusion is
    /// strict.
    pub fn is_proper_subset(&self, other: &VarSet) -> bool {
        self.0.is_subset(&other.0) && self.card() < other.card()
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VarSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Members in ascending (canonical) order.
    pub fn iter(&self) -> impl Iterator<Item = &VarSym> {
        self.0.iter()
    }
}

impl FromIterator<VarSym> for VarSet {
    fn from_iter<I: IntoIterator<Item = VarSym>>(iter: I) -> Self {
        VarSet(iter.into_iter().collect())
    }
}
