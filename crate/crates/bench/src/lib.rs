//! Shared input builders for the benchmarks.

use mgu_core::{ConstSym, Subst, Term, VarSym};

pub fn constant(name: &str) -> Term {
    Term::Const(ConstSym::new(name).unwrap())
}

pub fn variable(name: &str) -> Term {
    Term::Var(VarSym::new(name).unwrap())
}

pub fn var_sym(name: &str) -> VarSym {
    VarSym::new(name).unwrap()
}

/// `H[args...]` in curried form.
pub fn apply_chain(head: &str, args: Vec<Term>) -> Term {
    args.into_iter().fold(constant(head), Term::comb)
}

/// The classic exponential-growth pair: unifying
/// `H[v1; ...; vn]` with `H[F[v0; v0]; F[v1; v1]; ...; F[v(n-1); v(n-1)]]`
/// produces a unifier whose values double in size at every step.
pub fn exponential_pair(n: usize) -> (Term, Term) {
    let left = apply_chain("H", (1..=n).map(|i| variable(&format!("v{i}"))).collect());
    let right = apply_chain(
        "H",
        (1..=n)
            .map(|i| {
                let prev = variable(&format!("v{}", i - 1));
                Term::comb(Term::comb(constant("F"), prev.clone()), prev)
            })
            .collect(),
    );
    (left, right)
}

/// A ground pair of the given depth that unifies trivially.
pub fn ground_pair(depth: usize) -> (Term, Term) {
    fn build(depth: usize) -> Term {
        if depth == 0 {
            constant("A")
        } else {
            Term::comb(build(depth - 1), build(depth - 1))
        }
    }
    (build(depth), build(depth))
}

/// A substitution sending each of the first `n` pool variables to a small
/// ground term.
pub fn ground_subst(n: usize) -> Subst {
    Subst::from_pairs((0..n).map(|i| {
        (
            var_sym(&format!("v{i}")),
            Term::comb(constant("F"), constant("A")),
        )
    }))
}
