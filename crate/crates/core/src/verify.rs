//! Executable correctness predicates and desk-scale enumeration oracles.
//!
//! The statements of correctness quantify over *all* substitutions, which is
//! not directly executable. This module replaces those quantifiers with
//! exhaustive enumeration over a finite [`Universe`]: a fixed alphabet of
//! constants and variables together with a depth bound. An [`Oracle`] built
//! from a universe can then decide, by brute force, whether a pair of terms
//! has no unifier within the universe, and whether a substitution is a most
//! general idempotent unifier relative to every enumerated competitor.
//!
//! The universe-bounded "cannot unify" check is an under-approximation: it
//! searches substitutions whose values have depth at most the universe's
//! `max_depth`. For term pairs of depth `d` drawn from the same alphabet, a
//! unifiable pair always has a ground unifier whose values are no deeper
//! than the unified common instance, so enumerating values to depth `2 * d`
//! is complete; runs configured with a smaller value depth trade that
//! completeness for speed.

use crate::matching::more_gen;
use crate::subst::Subst;
use crate::term::{ConstSym, Term, VarSym};
use crate::unify::{cardv, unify, Attempt, CallKind, TraceEvent};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("universe needs at least one constant and one variable")]
    EmptyUniverse,
    #[error("variable {0} falls outside the universe")]
    OutsideUniverse(VarSym),
    #[error("tail ordering precondition violated: not a best unifier of the left sons")]
    TailPrecondition,
}

/// A finite enumeration domain: every term buildable from the given
/// constants and variables up to the given combination depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    constants: Vec<ConstSym>,
    variables: Vec<VarSym>,
    max_depth: usize,
}

impl Universe {
    pub fn new(
        constants: Vec<ConstSym>,
        variables: Vec<VarSym>,
        max_depth: usize,
    ) -> Result<Self, VerifyError> {
        if constants.is_empty() || variables.is_empty() {
            return Err(VerifyError::EmptyUniverse);
        }
        Ok(Universe { constants, variables, max_depth })
    }

    pub fn constants(&self) -> &[ConstSym] {
        &self.constants
    }

    pub fn variables(&self) -> &[VarSym] {
        &self.variables
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn has_var(&self, v: &VarSym) -> bool {
        self.variables.contains(v)
    }

    fn check_pair_vars(&self, t: &Term, u: &Term) -> Result<(), VerifyError> {
        for v in t.vars().union(&u.vars()).iter() {
            if !self.has_var(v) {
                return Err(VerifyError::OutsideUniverse(v.clone()));
            }
        }
        Ok(())
    }

    /// Every term over the alphabet with combination depth at most
    /// `max_depth`, in a fixed order (by depth, then construction order),
    /// without duplicates.
    pub fn enumerate_terms(&self) -> Vec<Term> {
        let mut items: Vec<(Term, usize)> = Vec::new();
        for c in &self.constants {
            items.push((Term::Const(c.clone()), 0));
        }
        for v in &self.variables {
            items.push((Term::Var(v.clone()), 0));
        }
        for depth in 1..=self.max_depth {
            let mut layer = Vec::new();
            for (left, dl) in &items {
                for (right, dr) in &items {
                    if (*dl).max(*dr) == depth - 1 {
                        layer.push((Term::comb(left.clone(), right.clone()), depth));
                    }
                }
            }
            items.extend(layer);
        }
        items.into_iter().map(|(t, _)| t).collect()
    }

    /// Every substitution whose domain is drawn from the universe's
    /// variables and whose values are enumerated terms. One entry per
    /// key-to-value assignment; for `V` variables and `T` terms this yields
    /// `(T + 1)^V` substitutions.
    pub fn enumerate_substs(&self) -> Vec<Subst> {
        let values = self.enumerate_terms();
        let mut out: Vec<Vec<(VarSym, Term)>> = vec![Vec::new()];
        for v in &self.variables {
            let mut next = Vec::with_capacity(out.len() * (values.len() + 1));
            for pairs in &out {
                next.push(pairs.clone());
                for value in &values {
                    let mut extended = pairs.clone();
                    extended.push((v.clone(), value.clone()));
                    next.push(extended);
                }
            }
            out = next;
        }
        out.into_iter().map(Subst::from_pairs).collect()
    }
}

/// Does the substitution make the two terms identical?
pub fn unifies(s: &Subst, t: &Term, u: &Term) -> bool {
    s.apply(t) == s.apply(u)
}

fn cardv_comb_pair(t1: &Term, t2: &Term, u1: &Term, u2: &Term) -> usize {
    t1.vars()
        .union(&t2.vars())
        .union(&u1.vars())
        .union(&u2.vars())
        .card()
}

/// The ordering fact behind the first recursive call: unifying the left
/// sons never involves more variables than the whole pair. Returns the truth
/// of "equal or strictly fewer"; a `false` indicates a bug.
pub fn check_head_ordering(t1: &Term, t2: &Term, u1: &Term, u2: &Term) -> bool {
    let sons = cardv(t1, u1);
    let whole = cardv_comb_pair(t1, t2, u1, u2);
    sons <= whole
}

/// A universe together with its precomputed substitution space. Build one
/// of these once and reuse it: enumeration is the expensive part of every
/// predicate below.
///
/// The oracle also memoizes, per term pair, the verdict on the algorithm's
/// own attempt for that pair. Sweeps revisit the same son pairs constantly
/// (every tail-call check re-derives the head unifier), and the verdict is
/// a pure function of the pair, so the cache is transparent.
#[derive(Debug)]
pub struct Oracle {
    universe: Universe,
    substs: Vec<Subst>,
    verdicts: std::sync::RwLock<std::collections::HashMap<(Term, Term), Result<bool, VerifyError>>>,
}

impl Oracle {
    pub fn new(universe: Universe) -> Self {
        let substs = universe.enumerate_substs();
        Oracle { universe, substs, verdicts: Default::default() }
    }

    /// `best_unify_try` of the algorithm's own attempt on the pair,
    /// memoized. Success attempts are checked for most-generality and
    /// idempotence, failures for brute-force non-unifiability.
    pub fn verified_attempt(&self, t: &Term, u: &Term) -> Result<bool, VerifyError> {
        let key = (t.clone(), u.clone());
        if let Some(v) = self.verdicts.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = match unify(t, u) {
            Attempt::Failure => self.cant_unify_bruteforce(t, u),
            Attempt::Success(s) => self.is_best_unifier(&s, t, u),
        };
        let mut verdicts = self.verdicts.write().unwrap();
        if verdicts.len() < 1 << 19 {
            verdicts.insert(key, v.clone());
        }
        v
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// All substitutions the oracle quantifies over.
    pub fn substs(&self) -> &[Subst] {
        &self.substs
    }

    /// Brute-force non-unifiability: true iff no substitution in the
    /// universe unifies the pair. Inputs must draw their variables from the
    /// universe.
    pub fn cant_unify_bruteforce(&self, t: &Term, u: &Term) -> Result<bool, VerifyError> {
        self.universe.check_pair_vars(t, u)?;
        Ok(!self.substs.iter().any(|s| unifies(s, t, u)))
    }

    /// Is `s` a unifier of the pair that is idempotent and more general than
    /// every enumerated unifier?
    pub fn is_best_unifier(&self, s: &Subst, t: &Term, u: &Term) -> Result<bool, VerifyError> {
        self.universe.check_pair_vars(t, u)?;
        Ok(unifies(s, t, u)
            && s.is_idempotent()
            && self
                .substs
                .iter()
                .filter(|r| unifies(r, t, u))
                .all(|r| more_gen(s, r).is_some()))
    }

    /// The full per-pair correctness statement: a failed attempt must be
    /// backed by brute-force non-unifiability, a successful one must carry a
    /// best unifier.
    pub fn best_unify_try(&self, z: &Attempt, t: &Term, u: &Term) -> Result<bool, VerifyError> {
        match z {
            Attempt::Failure => self.cant_unify_bruteforce(t, u),
            Attempt::Success(s) => self.is_best_unifier(s, t, u),
        }
    }

    /// The ordering fact behind the second recursive call: given a best
    /// unifier `s` of the left sons, applying it to the right sons either
    /// leaves the left one untouched at unchanged measure, or strictly
    /// shrinks the measure.
    ///
    /// The precondition (that `s` really is a best unifier of `t1`, `u1`)
    /// is checked and reported as an error, distinct from the proposition
    /// being false.
    pub fn check_tail_ordering(
        &self,
        s: &Subst,
        t1: &Term,
        t2: &Term,
        u1: &Term,
        u2: &Term,
    ) -> Result<bool, VerifyError> {
        // When `s` is what the algorithm itself produces for the sons, the
        // memoized verdict answers the precondition.
        let precondition = match unify(t1, u1) {
            Attempt::Success(computed) if computed == *s => self.verified_attempt(t1, u1)?,
            _ => self.is_best_unifier(s, t1, u1)?,
        };
        if !precondition {
            return Err(VerifyError::TailPrecondition);
        }
        let whole = cardv_comb_pair(t1, t2, u1, u2);
        let t2s = s.apply(t2);
        let u2s = s.apply(u2);
        Ok((t2s == *t2 && cardv(t2, &u2s) == whole) || cardv(&t2s, &u2s) < whole)
    }

    /// Validate one recorded recursive call of the traced unifier.
    ///
    /// Checks that the recorded measure values are faithful, that the callee
    /// really is the pair of (substituted) immediate sons of the caller, and
    /// that the head or tail ordering proposition holds. The substitution
    /// for a tail call is recomputed by re-unifying the left sons, which is
    /// deterministic.
    pub fn check_trace_event(&self, ev: &TraceEvent) -> Result<bool, VerifyError> {
        let (Term::Comb(t1, t2), Term::Comb(u1, u2)) = (&ev.caller.0, &ev.caller.1) else {
            return Ok(false);
        };
        if ev.cardv_caller != cardv(&ev.caller.0, &ev.caller.1)
            || ev.cardv_callee != cardv(&ev.callee.0, &ev.callee.1)
        {
            return Ok(false);
        }
        match ev.which {
            CallKind::Head => {
                // The lexicographic decrease for a head call: the callee is
                // the pair of immediate sons, at equal or smaller measure.
                Ok(ev.callee.0 == **t1
                    && ev.callee.1 == **u1
                    && ev.cardv_callee <= ev.cardv_caller
                    && check_head_ordering(t1, t2, u1, u2))
            }
            CallKind::Tail => {
                let Attempt::Success(s) = unify(t1, u1) else {
                    return Ok(false);
                };
                if ev.callee.0 != s.apply(t2) || ev.callee.1 != s.apply(u2) {
                    return Ok(false);
                }
                self.check_tail_ordering(&s, t1, t2, u1, u2)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unify::unify_traced;

    fn c(name: &str) -> Term {
        Term::Const(ConstSym::new(name).unwrap())
    }

    fn v(name: &str) -> Term {
        Term::Var(VarSym::new(name).unwrap())
    }

    fn sym(name: &str) -> VarSym {
        VarSym::new(name).unwrap()
    }

    fn app(left: Term, right: Term) -> Term {
        Term::comb(left, right)
    }

    fn sub(pairs: &[(&str, Term)]) -> Subst {
        Subst::from_pairs(pairs.iter().map(|(k, t)| (sym(k), t.clone())))
    }

    fn universe(consts: &[&str], vars: &[&str], depth: usize) -> Universe {
        Universe::new(
            consts.iter().map(|n| ConstSym::new(*n).unwrap()).collect(),
            vars.iter().map(|n| VarSym::new(*n).unwrap()).collect(),
            depth,
        )
        .unwrap()
    }

    #[test]
    fn universe_must_be_inhabited() {
        assert_eq!(
            Universe::new(vec![], vec![sym("x")], 1),
            Err(VerifyError::EmptyUniverse)
        );
    }

    #[test]
    fn unifies_cases() {
        let t = app(app(c("G"), c("A")), v("x"));
        let u = app(app(c("G"), v("y")), app(c("F"), v("y")));
        let s = sub(&[("x", app(c("F"), c("A"))), ("y", c("A"))]);
        assert!(unifies(&s, &t, &u));
        assert!(unifies(&Subst::empty(), &t, &t));
        assert!(!unifies(&Subst::empty(), &c("A"), &c("B")));
    }

    #[test]
    fn enumerate_terms_counts() {
        let uni = universe(&["A"], &["x"], 0);
        assert_eq!(uni.enumerate_terms(), vec![c("A"), v("x")]);
        assert_eq!(universe(&["A"], &["x"], 1).enumerate_terms().len(), 6);
        assert_eq!(universe(&["A", "B"], &["x", "y"], 1).enumerate_terms().len(), 20);
        assert_eq!(universe(&["A", "B"], &["x", "y"], 2).enumerate_terms().len(), 404);
    }

    #[test]
    fn enumerate_terms_no_duplicates() {
        let terms = universe(&["A", "B"], &["x", "y"], 2).enumerate_terms();
        let mut seen = std::collections::HashSet::new();
        for t in &terms {
            assert!(seen.insert(t.clone()), "duplicate term {t:?}");
        }
    }

    #[test]
    fn enumerate_substs_counts() {
        // (T + 1)^V with T = 6 terms and V = 1 variable.
        assert_eq!(universe(&["A"], &["x"], 1).enumerate_substs().len(), 7);
        assert_eq!(universe(&["A", "B"], &["x", "y"], 1).enumerate_substs().len(), 441);
    }

    #[test]
    fn cant_unify_ground_cases() {
        let oracle = Oracle::new(universe(&["A", "B"], &["x", "y"], 1));
        assert_eq!(oracle.cant_unify_bruteforce(&c("A"), &c("B")), Ok(true));
        assert_eq!(
            oracle.cant_unify_bruteforce(&c("A"), &app(c("F"), v("x"))),
            Ok(true)
        );
        assert_eq!(oracle.cant_unify_bruteforce(&v("x"), &c("A")), Ok(false));
    }

    #[test]
    fn universe_violation_is_an_error() {
        let oracle = Oracle::new(universe(&["A"], &["x"], 1));
        assert_eq!(
            oracle.cant_unify_bruteforce(&v("z"), &c("A")),
            Err(VerifyError::OutsideUniverse(sym("z")))
        );
    }

    #[test]
    fn best_unifier_cases() {
        let oracle = Oracle::new(universe(&["A", "B"], &["x", "y"], 1));

        // The worked example's unifier is best.
        let t = app(app(c("G"), c("A")), v("x"));
        let u = app(app(c("G"), v("y")), app(c("F"), v("y")));
        let Attempt::Success(s) = unify(&t, &u) else { panic!("expected success") };
        assert_eq!(oracle.is_best_unifier(&s, &t, &u), Ok(true));

        // The empty substitution is best for identical ground terms.
        assert_eq!(
            oracle.is_best_unifier(&Subst::empty(), &c("A"), &c("A")),
            Ok(true)
        );

        // A unifier that needlessly grounds both variables is not best:
        // x -> y also unifies and is not an instance of it.
        let grounding = sub(&[("x", c("A")), ("y", c("A"))]);
        assert_eq!(oracle.is_best_unifier(&grounding, &v("x"), &v("y")), Ok(false));
    }

    #[test]
    fn best_unify_try_cases() {
        let oracle = Oracle::new(universe(&["A", "B"], &["x", "y"], 1));
        assert_eq!(
            oracle.best_unify_try(&unify(&c("A"), &c("B")), &c("A"), &c("B")),
            Ok(true)
        );
        assert_eq!(
            oracle.best_unify_try(&Attempt::Success(Subst::empty()), &c("A"), &c("B")),
            Ok(false)
        );
    }

    #[test]
    fn cardv_cases() {
        assert_eq!(cardv(&c("A"), &c("B")), 0);
        let t = app(app(c("G"), c("A")), v("x"));
        let u = app(app(c("G"), v("y")), app(c("F"), v("y")));
        assert_eq!(cardv(&t, &u), 2);
        assert_eq!(cardv(&v("x"), &v("x")), 1);
    }

    #[test]
    fn head_ordering_cases() {
        assert!(check_head_ordering(&c("A"), &c("B"), &c("A"), &c("B")));
        assert!(check_head_ordering(&v("x"), &v("y"), &v("x"), &v("y")));
        // Left sons of the worked example.
        assert!(check_head_ordering(
            &app(c("G"), c("A")),
            &v("x"),
            &app(c("G"), v("y")),
            &app(c("F"), v("y"))
        ));
    }

    #[test]
    fn tail_ordering_cases() {
        let oracle = Oracle::new(universe(&["A", "B"], &["x", "y"], 1));

        // Identity head unifier: first disjunct.
        assert_eq!(
            oracle.check_tail_ordering(&Subst::empty(), &c("A"), &v("x"), &c("A"), &v("x")),
            Ok(true)
        );

        // Worked example: s = {y -> A} on sons t2 = x, u2 = F[y]; the
        // measure drops from 2 to 1.
        let s = sub(&[("y", c("A"))]);
        assert_eq!(
            oracle.check_tail_ordering(&s, &app(c("G"), c("A")), &v("x"), &app(c("G"), v("y")), &app(c("F"), v("y"))),
            Ok(true)
        );

        // A substitution that is not a best unifier of the left sons is a
        // precondition violation, not a false answer.
        let not_best = sub(&[("x", c("A")), ("y", c("A"))]);
        assert_eq!(
            oracle.check_tail_ordering(&not_best, &v("x"), &v("x"), &v("y"), &v("y")),
            Err(VerifyError::TailPrecondition)
        );
    }

    #[test]
    fn trace_events_validate() {
        let oracle = Oracle::new(universe(&["A", "B"], &["x", "y"], 1));
        let t = app(app(c("G"), c("A")), v("x"));
        let u = app(app(c("G"), v("y")), app(c("F"), v("y")));
        let (_, events) = unify_traced(&t, &u);
        assert!(!events.is_empty());
        for ev in &events {
            assert_eq!(oracle.check_trace_event(ev), Ok(true), "event {ev:?}");
        }
    }
}
