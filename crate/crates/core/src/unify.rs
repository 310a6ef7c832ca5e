//! The unification algorithm, with explicit failure values.
//!
//! [`unify`] follows a fixed case table: constants unify with equal
//! constants, a variable unifies with any term not containing it, and
//! combinations unify left son first, then the right sons under the left
//! unifier, composing the two results. Failure is an ordinary value of
//! [`Attempt`], not an error.
//!
//! Two instrumented variants exist alongside the plain algorithm:
//! [`unify_bounded`] threads a fuel counter through the recursion and gives
//! up with [`BoundedAttempt::OutOfFuel`] instead of looping (a totality
//! oracle), and [`unify_traced`] records every recursive call together with
//! the variable-count measure, as evidence for the termination argument.

use std::fmt;

use crate::subst::Subst;
use crate::term::{Term, VarSym};

/// Result of a unification attempt: failure, or success carrying the
/// unifying substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attempt {
    Failure,
    Success(Subst),
}

impl Attempt {
    /// Branch on the outcome: failure yields `on_fail`, success feeds the
    /// substitution to `on_success`.
    pub fn attempt_then(self, on_fail: Attempt, on_success: impl FnOnce(Subst) -> Attempt) -> Attempt {
        match self {
            Attempt::Failure => on_fail,
            Attempt::Success(s) => on_success(s),
        }
    }

    pub fn success(&self) -> Option<&Subst> {
        match self {
            Attempt::Failure => None,
            Attempt::Success(s) => Some(s),
        }
    }
}

/// Result of the fuel-bounded variant: as [`Attempt`], plus a distinguished
/// token for fuel exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedAttempt {
    Failure,
    Success(Subst),
    OutOfFuel,
}

/// Which of the two recursive call sites an event came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CallKind {
    /// Descent into the left sons.
    Head,
    /// Descent into the substituted right sons, after the head succeeded.
    Tail,
}

impl fmt::Display for CallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CallKind::Head => "head",
            CallKind::Tail => "tail",
        })
    }
}

/// Record of one recursive call of the traced unifier, with the measure
/// value (number of distinct variables in the pair) on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub caller: (Term, Term),
    pub callee: (Term, Term),
    pub which: CallKind,
    pub cardv_caller: usize,
    pub cardv_callee: usize,
}

/// The termination measure: the number of distinct variables in the pair.
pub fn cardv(t: &Term, u: &Term) -> usize {
    t.vars().union(&u.vars()).card()
}

/// Try to unify a variable with a term: fails exactly when the variable
/// occurs in the term (the occurs check), otherwise binds it.
///
/// The occurs check is strict, so `assign(v, Var v)` succeeds with the
/// trivial binding `v -> v`, which is extensionally the empty substitution.
pub fn assign(v: &VarSym, t: &Term) -> Attempt {
    if Term::Var(v.clone()).occurs_in(t) {
        Attempt::Failure
    } else {
        Attempt::Success(Subst::singleton(v.clone(), t.clone()))
    }
}

/// Unify two terms, producing a most general idempotent unifier on success
/// and `Failure` exactly when no unifier exists.
pub fn unify(t: &Term, u: &Term) -> Attempt {
    match (t, u) {
        (Term::Const(c), Term::Const(c2)) => {
            if c == c2 {
                Attempt::Success(Subst::empty())
            } else {
                Attempt::Failure
            }
        }
        (Term::Const(_), Term::Var(v)) => assign(v, t),
        (Term::Const(_), Term::Comb(_, _)) => Attempt::Failure,
        (Term::Var(v), _) => assign(v, u),
        (Term::Comb(_, _), Term::Const(_)) => Attempt::Failure,
        (Term::Comb(_, _), Term::Var(v)) => assign(v, t),
        (Term::Comb(t1, t2), Term::Comb(u1, u2)) => unify(t1, u1).attempt_then(Attempt::Failure, |s1| {
            unify(&s1.apply(t2), &s1.apply(u2))
                .attempt_then(Attempt::Failure, |s2| Attempt::Success(s1.then(&s2)))
        }),
    }
}

/// Fuel-bounded unification: the same recursion as [`unify`], except that
/// every recursive call first checks and then decrements `fuel`. An
/// exhausted counter yields `OutOfFuel`, which propagates outward.
///
/// For sufficiently large fuel this agrees with [`unify`]; the verification
/// sweep confirms that `2 * (t.size() + u.size())` is sufficient on the
/// whole corpus, which is how this function serves as a termination oracle.
pub fn unify_bounded(t: &Term, u: &Term, fuel: u64) -> BoundedAttempt {
    match (t, u) {
        (Term::Const(c), Term::Const(c2)) => {
            if c == c2 {
                BoundedAttempt::Success(Subst::empty())
            } else {
                BoundedAttempt::Failure
            }
        }
        (Term::Const(_), Term::Var(v)) => lift(assign(v, t)),
        (Term::Const(_), Term::Comb(_, _)) => BoundedAttempt::Failure,
        (Term::Var(v), _) => lift(assign(v, u)),
        (Term::Comb(_, _), Term::Const(_)) => BoundedAttempt::Failure,
        (Term::Comb(_, _), Term::Var(v)) => lift(assign(v, t)),
        (Term::Comb(t1, t2), Term::Comb(u1, u2)) => {
            if fuel == 0 {
                return BoundedAttempt::OutOfFuel;
            }
            match unify_bounded(t1, u1, fuel - 1) {
                BoundedAttempt::OutOfFuel => BoundedAttempt::OutOfFuel,
                BoundedAttempt::Failure => BoundedAttempt::Failure,
                BoundedAttempt::Success(s1) => {
                    match unify_bounded(&s1.apply(t2), &s1.apply(u2), fuel - 1) {
                        BoundedAttempt::OutOfFuel => BoundedAttempt::OutOfFuel,
                        BoundedAttempt::Failure => BoundedAttempt::Failure,
                        BoundedAttempt::Success(s2) => BoundedAttempt::Success(s1.then(&s2)),
                    }
                }
            }
        }
    }
}

fn lift(a: Attempt) -> BoundedAttempt {
    match a {
        Attempt::Failure => BoundedAttempt::Failure,
        Attempt::Success(s) => BoundedAttempt::Success(s),
    }
}

/// Unify while recording one [`TraceEvent`] per recursive call.
///
/// The attempt returned is identical to [`unify`]'s. Each event is also
/// checked on the spot: the measure must not increase on a head call, and a
/// tail call must either leave the left son untouched at equal measure or
/// strictly shrink the measure. A violation is a bug in the algorithm and
/// aborts via `assert!`, so a measure regression cannot pass silently.
pub fn unify_traced(t: &Term, u: &Term) -> (Attempt, Vec<TraceEvent>) {
    let mut trace = Vec::new();
    let attempt = traced_inner(t, u, &mut trace);
    (attempt, trace)
}

fn traced_inner(t: &Term, u: &Term, trace: &mut Vec<TraceEvent>) -> Attempt {
    match (t, u) {
        (Term::Comb(t1, t2), Term::Comb(u1, u2)) => {
            let cardv_caller = cardv(t, u);
            let cardv_head = cardv(t1, u1);
            assert!(
                cardv_head <= cardv_caller,
                "head call increased the variable measure: {cardv_head} > {cardv_caller}"
            );
            trace.push(TraceEvent {
                caller: (t.clone(), u.clone()),
                callee: ((**t1).clone(), (**u1).clone()),
                which: CallKind::Head,
                cardv_caller,
                cardv_callee: cardv_head,
            });
            match traced_inner(t1, u1, trace) {
                Attempt::Failure => Attempt::Failure,
                Attempt::Success(s1) => {
                    let t2s = s1.apply(t2);
                    let u2s = s1.apply(u2);
                    let cardv_tail = cardv(&t2s, &u2s);
                    assert!(
                        (t2s == **t2 && cardv(t2, &u2s) == cardv_caller) || cardv_tail < cardv_caller,
                        "tail call violated the measure ordering"
                    );
                    trace.push(TraceEvent {
                        caller: (t.clone(), u.clone()),
                        callee: (t2s.clone(), u2s.clone()),
                        which: CallKind::Tail,
                        cardv_caller,
                        cardv_callee: cardv_tail,
                    });
                    match traced_inner(&t2s, &u2s, trace) {
                        Attempt::Failure => Attempt::Failure,
                        Attempt::Success(s2) => Attempt::Success(s1.then(&s2)),
                    }
                }
            }
        }
        _ => unify(t, u),
    }
}
