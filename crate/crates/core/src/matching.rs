//! First-order matching, and the generality comparison built on it.
//!
//! Matching is one-sided unification: only the pattern's variables may be
//! instantiated, targets are rigid. It is the engine that turns the
//! existential "is `s2` an instance of `s1`?" question into a decision
//! procedure, see [`more_gen`].

use crate::subst::Subst;
use crate::term::{Term, VarSym};

/// A simultaneous matching problem: find one substitution sending every
/// pattern to its target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchProblem {
    pub pairs: Vec<(Term, Term)>,
}

impl MatchProblem {
    pub fn new(pairs: Vec<(Term, Term)>) -> Self {
        MatchProblem { pairs }
    }
}

/// Solve a matching problem.
///
/// Returns a substitution `r` with `r.apply(pattern) == target` for every
/// pair, binding only variables that occur in some pattern, or `None` when
/// the targets conflict (the same variable would need two different values)
/// or the structures clash. On constrained variables the solution is forced,
/// so the returned substitution is the unique one up to trivial bindings.
pub fn match_terms(problem: &MatchProblem) -> Option<Subst> {
    let mut bound: Vec<(VarSym, Term)> = Vec::new();
    let mut work: Vec<(&Term, &Term)> = problem.pairs.iter().map(|(p, t)| (p, t)).collect();
    // Depth-first over the pending pairs; order does not affect the outcome
    // because each variable's first forced value must agree with the rest.
    while let Some((pattern, target)) = work.pop() {
        match (pattern, target) {
            (Term::Const(c), Term::Const(c2)) if c == c2 => {}
            (Term::Var(v), _) => match bound.iter().find(|(w, _)| w == v) {
                Some((_, value)) => {
                    if value != target {
                        return None;
                    }
                }
                None => bound.push((v.clone(), target.clone())),
            },
            (Term::Comb(p1, p2), Term::Comb(t1, t2)) => {
                work.push((p1, t1));
                work.push((p2, t2));
            }
            _ => return None,
        }
    }
    Some(Subst::from_pairs(bound))
}

/// Decide whether `s1` is more general than `s2`, returning a witness `r`
/// with `s2 ≈ s1.then(r)` when one exists.
///
/// Procedure: let `D` be the union of the two domains and match, for every
/// `v` in `D`, the pattern `s1(v)` against the target `s2(v)`. Variables
/// outside `D` are fixed by both substitutions, so any witness must leave
/// them alone; since matching only ever produces forced bindings, a forced
/// non-identity binding on a variable outside `D` certifies that no witness
/// exists at all. That post-check is what makes this a genuine decision
/// procedure rather than a heuristic.
pub fn more_gen(s1: &Subst, s2: &Subst) -> Option<Subst> {
    let domain = s1.domain().union(&s2.domain());
    let pairs = domain
        .iter()
        .map(|v| {
            let v = Term::Var(v.clone());
            (s1.apply(&v), s2.apply(&v))
        })
        .collect();
    let witness = match_terms(&MatchProblem::new(pairs))?;
    for b in witness.bindings() {
        if !domain.member(&b.key) && witness.apply(&Term::Var(b.key.clone())) != Term::Var(b.key.clone()) {
            return None;
        }
    }
    let witness = witness.canonicalize();
    assert!(
        s2.equiv(&s1.then(&witness)),
        "more_gen witness failed its defining equation"
    );
    Some(witness)
}
