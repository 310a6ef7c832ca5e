//! First-order unification over binary combination terms, with its
//! correctness theory made executable.
//!
//! The crate provides the term and substitution types, the unification
//! algorithm with its occurs check, and — unusually — the statements that
//! make the algorithm correct (most-generality, idempotence, failure
//! soundness, and the termination measure) as runnable predicates. The
//! [`verify`] and [`sweep`] modules exhaustively check those statements over
//! finite enumeration universes, so the library carries its own test oracle.
//!
//! Everything is a total function over finite immutable data: failure is a
//! value ([`Attempt::Failure`]), non-termination is ruled out by the measure
//! that [`unify_traced`] records and asserts, and [`unify_bounded`] gives an
//! independently fuel-limited variant for cross-checking.

pub mod matching;
pub mod subst;
pub mod sweep;
pub mod term;
pub mod unify;
pub mod var_set;
pub mod verify;

pub use matching::{match_terms, more_gen, MatchProblem};
pub use subst::{Binding, Subst};
pub use term::{ConstSym, InvalidSymbol, Term, VarSym};
pub use unify::{
    assign, cardv, unify, unify_bounded, unify_traced, Attempt, BoundedAttempt, CallKind,
    TraceEvent,
};
pub use var_set::VarSet;
pub use verify::{check_head_ordering, unifies, Oracle, Universe, VerifyError};
