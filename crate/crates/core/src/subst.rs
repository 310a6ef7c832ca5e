//! Substitutions as ordered association lists from variables to terms.
//!
//! The representation is a plain binding list in which the *earliest*
//! binding for a key wins; nothing is filtered at construction time. A
//! trivial binding `x -> x` and a shadowed later binding are both allowed
//! and are erased only semantically: [`Subst::equiv`] compares substitutions
//! by what they do to variables, and [`Subst::canonicalize`] produces the
//! unique sorted representative of that equivalence class. Keeping the
//! constructors free is what makes the two recursion equations of
//! [`Subst::then`] consistent.

use crate::term::{Term, VarSym};
use crate::var_set::VarSet;

/// One key/value pair of a substitution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binding {
    pub key: VarSym,
    pub value: Term,
}

/// A substitution: an ordered list of bindings, earliest match shadowing
/// later ones.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Subst {
    bindings: Vec<Binding>,
}

impl Subst {
    /// The empty substitution.
    pub fn empty() -> Self {
        Subst { bindings: Vec::new() }
    }

    pub fn singleton(key: VarSym, value: Term) -> Self {
        Subst { bindings: vec![Binding { key, value }] }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarSym, Term)>) -> Self {
        Subst {
            bindings: pairs
                .into_iter()
                .map(|(key, value)| Binding { key, value })
                .collect(),
        }
    }

    pub fn bindings(&self) -> &[Binding] {
        &self.bindings
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Value of the first binding for `key`, if any. Callers that need the
    /// lookup-with-default behaviour write `get(k).cloned().unwrap_or(dflt)`.
    pub fn get(&self, key: &VarSym) -> Option<&Term> {
        self.bindings.iter().find(|b| &b.key == key).map(|b| &b.value)
    }

    /// Apply the substitution to a term: constants unchanged, variables
    /// looked up (defaulting to themselves), combinations rebuilt from the
    /// substituted sons.
    pub fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Const(_) => t.clone(),
            Term::Var(v) => self.get(v).cloned().unwrap_or_else(|| t.clone()),
            Term::Comb(left, right) => Term::comb(self.apply(left), self.apply(right)),
        }
    }

    /// Composition: `r.then(s)` acts as "apply `r`, then `s`".
    ///
    /// Defined by mapping `s` over every value of `r` and appending `s`
    /// wholesale; shadowed keys are left in place and cleaned up only by
    /// [`Subst::canonicalize`]. Satisfies
    /// `r.then(s).apply(t) == s.apply(&r.apply(t))` for every term.
    pub fn then(&self, s: &Subst) -> Subst {
        let mut bindings: Vec<Binding> = self
            .bindings
            .iter()
            .map(|b| Binding { key: b.key.clone(), value: s.apply(&b.value) })
            .collect();
        bindings.extend(s.bindings.iter().cloned());
        Subst { bindings }
    }

    /// The set of variables the substitution actually moves. Trivial
    /// bindings (`x -> x`) and shadowed bindings do not contribute.
    pub fn domain(&self) -> VarSet {
        let mut out = VarSet::new();
        for b in &self.bindings {
            if out.member(&b.key) {
                continue;
            }
            if self.get(&b.key) != Some(&Term::Var(b.key.clone())) {
                out.insert(b.key.clone());
            }
        }
        out
    }

    /// The set of variables the substitution may introduce: all variables
    /// occurring in the image of the domain.
    pub fn range_vars(&self) -> VarSet {
        let mut out = VarSet::new();
        for v in self.domain().iter() {
            out = out.union(&self.apply(&Term::Var(v.clone())).vars());
        }
        out
    }

    /// Extensional equality: do the two substitutions agree on every
    /// variable (and hence on every term)?
    ///
    /// It suffices to compare on the union of the two domains, since both
    /// sides fix every other variable.
    pub fn equiv(&self, other: &Subst) -> bool {
        self.domain()
            .union(&other.domain())
            .iter()
            .all(|v| {
                let v = Term::Var(v.clone());
                self.apply(&v) == other.apply(&v)
            })
    }

    /// The canonical representative of this substitution's equivalence
    /// class: one binding per domain variable, sorted by key. Equivalent
    /// substitutions canonicalize to structurally identical lists.
    pub fn canonicalize(&self) -> Subst {
        Subst {
            bindings: self
                .domain()
                .iter()
                .map(|v| Binding {
                    key: v.clone(),
                    value: self.apply(&Term::Var(v.clone())),
                })
                .collect(),
        }
    }

    /// True iff composing the substitution with itself changes nothing.
    pub fn is_idempotent(&self) -> bool {
        self.then(self).equiv(self)
    }
}
