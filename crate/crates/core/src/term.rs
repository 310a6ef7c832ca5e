//! Terms: the binary-tree expression language that everything else operates on.
//!
//! A [`Term`] is a constant, a variable, or a combination of two terms.
//! Multi-argument applications are curried: what would informally be written
//! `G[A; x]` is represented as `Comb(Comb(G, A), x)`. Constant and variable
//! symbols are distinguished lexically: constants start with an uppercase
//! ASCII letter, variables with a lowercase one.
//!
//! All values are immutable and all operations are pure.

use std::collections::BTreeSet;
use std::fmt;

use crate::var_set::VarSet;

/// Error raised when constructing a symbol from a string that does not
/// satisfy the lexical rules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid {role} symbol {name:?}: must start with {expected} ASCII letter, remaining characters alphanumeric")]
pub struct InvalidSymbol {
    pub name: String,
    pub role: &'static str,
    pub expected: &'static str,
}

fn check_symbol(name: &str, uppercase: bool, role: &'static str) -> Result<(), InvalidSymbol> {
    let err = || InvalidSymbol {
        name: name.to_string(),
        role,
        expected: if uppercase { "an uppercase" } else { "a lowercase" },
    };
    let mut chars = name.chars();
    let first = chars.next().ok_or_else(err)?;
    let first_ok = if uppercase {
        first.is_ascii_uppercase()
    } else {
        first.is_ascii_lowercase()
    };
    if !first_ok || !chars.all(|c| c.is_ascii_alphanumeric()) {
        return Err(err());
    }
    Ok(())
}

/// A constant symbol, such as `A` or `F`. Uppercase-initial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstSym(String);

impl ConstSym {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidSymbol> {
        let name = name.into();
        check_symbol(&name, true, "constant")?;
        Ok(ConstSym(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ConstSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A variable symbol, such as `x` or `y`. Lowercase-initial.
///
/// The derived `Ord` (lexicographic on the name) is the canonical order used
/// for printing variable sets and substitutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSym(String);

impl VarSym {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidSymbol> {
        let name = name.into();
        check_symbol(&name, false, "variable")?;
        Ok(VarSym(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite term: constant, variable, or combination.
///
/// Structural equality (the derived `PartialEq`) is the equality used
/// everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Const(ConstSym),
    Var(VarSym),
    Comb(Box<Term>, Box<Term>),
}

impl Term {
    pub fn comb(left: Term, right: Term) -> Term {
        Term::Comb(Box::new(left), Box::new(right))
    }

    /// Reflexive occurs-in: `self` is equal to `other` or occurs strictly
    /// inside it.
    pub fn occurs_in_eq(&self, other: &Term) -> bool {
        self == other || self.occurs_in(other)
    }

    /// Strict occurs-in: `self` is a proper subterm of `other`.
    ///
    /// Constants and variables have no proper subterms; a combination has
    /// exactly the subterms-or-equals of its two sons. The relation is a
    /// strict partial order: anti-reflexive, anti-symmetric, transitive.
    pub fn occurs_in(&self, other: &Term) -> bool {
        match other {
            Term::Const(_) | Term::Var(_) => false,
            Term::Comb(left, right) => self.occurs_in_eq(left) || self.occurs_in_eq(right),
        }
    }

    /// The set of variables appearing anywhere in the term.
    pub fn vars(&self) -> VarSet {
        fn walk(t: &Term, acc: &mut VarSet) {
            match t {
                Term::Const(_) => {}
                Term::Var(v) => acc.insert(v.clone()),
                Term::Comb(left, right) => {
                    walk(left, acc);
                    walk(right, acc);
                }
            }
        }
        let mut acc = VarSet::new();
        walk(self, &mut acc);
        acc
    }

    /// The set of constants appearing anywhere in the term.
    pub fn consts(&self) -> BTreeSet<ConstSym> {
        fn walk(t: &Term, acc: &mut BTreeSet<ConstSym>) {
            match t {
                Term::Const(c) => {
                    acc.insert(c.clone());
                }
                Term::Var(_) => {}
                Term::Comb(left, right) => {
                    walk(left, acc);
                    walk(right, acc);
                }
            }
        }
        let mut acc = BTreeSet::new();
        walk(self, &mut acc);
        acc
    }

    /// Total number of nodes. Always at least 1.
    pub fn size(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::Comb(left, right) => 1 + left.size() + right.size(),
        }
    }

    /// Nesting depth of combinations: 0 for leaves.
    pub fn depth(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 0,
            Term::Comb(left, right) => 1 + left.depth().max(right.depth()),
        }
    }
}
