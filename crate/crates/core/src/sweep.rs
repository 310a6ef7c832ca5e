//! Corpus sweeps: run every correctness predicate over an enumerated
//! universe, plus randomized checks for the properties that do not need an
//! enumeration oracle.
//!
//! Pairs are independent, so the sweeps partition the pair list across
//! threads; all counters are order-independent.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::matching::more_gen;
use crate::subst::Subst;
use crate::term::{ConstSym, Term, VarSym};
use crate::unify::{assign, unify, unify_bounded, unify_traced, Attempt, BoundedAttempt, CallKind};
use crate::verify::{unifies, Oracle, Universe};

/// Fuel budget for the bounded unifier: twice the combined node count.
pub fn fuel_for(t: &Term, u: &Term) -> u64 {
    2 * (t.size() + u.size()) as u64
}

const MAX_EXAMPLES: usize = 8;

/// Outcome counters for a corpus sweep. `violations()` sums every counter
/// that must be zero for a correct implementation.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub terms: usize,
    pub pairs: usize,
    pub successes: usize,
    pub failures: usize,
    pub trace_events: usize,
    /// Tail calls that kept the measure equal (and so relied on the left
    /// son being untouched by the substitution).
    pub equal_measure_tail_events: usize,
    pub best_unify_try_violations: usize,
    pub mgu_corollary_violations: usize,
    pub idempotence_violations: usize,
    pub trace_violations: usize,
    pub bounded_mismatches: usize,
    pub oracle_errors: usize,
    /// Up to a handful of violating inputs, for debugging.
    pub examples: Vec<String>,
}

impl SweepReport {
    pub fn violations(&self) -> usize {
        self.best_unify_try_violations
            + self.mgu_corollary_violations
            + self.idempotence_violations
            + self.trace_violations
            + self.bounded_mismatches
            + self.oracle_errors
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0
    }

    fn absorb(&mut self, other: SweepReport) {
        self.terms += other.terms;
        self.pairs += other.pairs;
        self.successes += other.successes;
        self.failures += other.failures;
        self.trace_events += other.trace_events;
        self.equal_measure_tail_events += other.equal_measure_tail_events;
        self.best_unify_try_violations += other.best_unify_try_violations;
        self.mgu_corollary_violations += other.mgu_corollary_violations;
        self.idempotence_violations += other.idempotence_violations;
        self.trace_violations += other.trace_violations;
        self.bounded_mismatches += other.bounded_mismatches;
        self.oracle_errors += other.oracle_errors;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
    }

    fn note(&mut self, what: &str, t: &Term, u: &Term) {
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(format!("{what}: {t:?} vs {u:?}"));
        }
    }
}

/// Check one ordered pair against everything the sweep verifies:
/// best-unify-try, the unifier/instance correspondence, idempotence of
/// produced unifiers, the trace discipline, and agreement of the bounded
/// unifier.
pub fn check_pair(t: &Term, u: &Term, oracle: &Oracle) -> SweepReport {
    let mut report = SweepReport { pairs: 1, ..Default::default() };
    let z = unify(t, u);

    match oracle.best_unify_try(&z, t, u) {
        Ok(true) => {}
        Ok(false) => {
            report.best_unify_try_violations += 1;
            report.note("best_unify_try", t, u);
        }
        Err(_) => {
            report.oracle_errors += 1;
            report.note("oracle error", t, u);
        }
    }

    match &z {
        Attempt::Failure => report.failures += 1,
        Attempt::Success(s) => {
            report.successes += 1;
            if !s.is_idempotent() {
                report.idempotence_violations += 1;
                report.note("idempotence", t, u);
            }
            // A substitution unifies the pair iff it is an instance of the
            // produced unifier.
            for r in oracle.substs() {
                if unifies(r, t, u) != more_gen(s, r).is_some() {
                    report.mgu_corollary_violations += 1;
                    report.note("unifier/instance correspondence", t, u);
                    break;
                }
            }
        }
    }

    let (traced, events) = unify_traced(t, u);
    if traced != z {
        report.trace_violations += 1;
        report.note("traced attempt differs", t, u);
    }
    for ev in &events {
        report.trace_events += 1;
        if ev.which == CallKind::Tail && ev.cardv_callee == ev.cardv_caller {
            report.equal_measure_tail_events += 1;
        }
        match oracle.check_trace_event(ev) {
            Ok(true) => {}
            Ok(false) => {
                report.trace_violations += 1;
                report.note("trace ordering", t, u);
            }
            Err(_) => {
                report.oracle_errors += 1;
                report.note("trace oracle error", t, u);
            }
        }
    }

    let bounded = unify_bounded(t, u, fuel_for(t, u));
    let agree = match (&z, &bounded) {
        (Attempt::Failure, BoundedAttempt::Failure) => true,
        (Attempt::Success(a), BoundedAttempt::Success(b)) => a == b,
        _ => false,
    };
    if !agree {
        report.bounded_mismatches += 1;
        report.note("bounded unifier", t, u);
    }

    report
}

/// Run [`check_pair`] over every ordered pair of terms from `term_universe`.
/// The oracle's own universe bounds the substitutions enumerated for the
/// most-generality and non-unifiability checks.
pub fn sweep(term_universe: &Universe, oracle: &Oracle) -> SweepReport {
    let terms = term_universe.enumerate_terms();
    let n = terms.len();
    let mut report = (0..n * n)
        .into_par_iter()
        .map(|k| check_pair(&terms[k / n], &terms[k % n], oracle))
        .reduce(SweepReport::default, |mut a, b| {
            a.absorb(b);
            a
        });
    report.terms = n;
    report
}

/// Counters for the structural lemma checks.
#[derive(Debug, Clone, Default)]
pub struct LemmaReport {
    pub assign_instances: usize,
    pub assign_violations: usize,
    pub constant_instances: usize,
    pub constant_violations: usize,
    pub head_failure_instances: usize,
    pub head_failure_violations: usize,
    pub tail_failure_instances: usize,
    pub tail_failure_violations: usize,
    pub composition_instances: usize,
    pub composition_violations: usize,
    pub oracle_errors: usize,
}

impl LemmaReport {
    pub fn violations(&self) -> usize {
        self.assign_violations
            + self.constant_violations
            + self.head_failure_violations
            + self.tail_failure_violations
            + self.composition_violations
            + self.oracle_errors
    }

    fn absorb(&mut self, other: LemmaReport) {
        self.assign_instances += other.assign_instances;
        self.assign_violations += other.assign_violations;
        self.constant_instances += other.constant_instances;
        self.constant_violations += other.constant_violations;
        self.head_failure_instances += other.head_failure_instances;
        self.head_failure_violations += other.head_failure_violations;
        self.tail_failure_instances += other.tail_failure_instances;
        self.tail_failure_violations += other.tail_failure_violations;
        self.composition_instances += other.composition_instances;
        self.composition_violations += other.composition_violations;
        self.oracle_errors += other.oracle_errors;
    }
}

/// Check the special-case unification lemmas on enumerated instances.
///
/// The per-symbol lemmas (distinct constants cannot unify, a constant never
/// unifies with a combination, assigning a variable is a best try) run over
/// the whole term space of `son_universe`. The three lemmas about unifying
/// one combination with another quantify over four son terms; they run over
/// every quadruple from `son_universe`, with the head and tail unifiers
/// taken from the algorithm after the oracle has certified them best.
pub fn check_lemmas(son_universe: &Universe, oracle: &Oracle) -> LemmaReport {
    let sons = son_universe.enumerate_terms();

    let mut report = LemmaReport::default();

    // Distinct constants cannot be unified; nor can a constant and a
    // combination.
    for c1 in son_universe.constants() {
        for c2 in son_universe.constants() {
            if c1 == c2 {
                continue;
            }
            report.constant_instances += 1;
            match oracle.cant_unify_bruteforce(&Term::Const(c1.clone()), &Term::Const(c2.clone())) {
                Ok(true) => {}
                Ok(false) => report.constant_violations += 1,
                Err(_) => report.oracle_errors += 1,
            }
        }
        for t in &sons {
            if matches!(t, Term::Comb(_, _)) {
                report.constant_instances += 1;
                match oracle.cant_unify_bruteforce(&Term::Const(c1.clone()), t) {
                    Ok(true) => {}
                    Ok(false) => report.constant_violations += 1,
                    Err(_) => report.oracle_errors += 1,
                }
            }
        }
    }

    // Assigning a variable to any term is a best try at unifying them.
    for v in son_universe.variables() {
        for t in &sons {
            report.assign_instances += 1;
            match oracle.best_unify_try(&assign(v, t), &Term::Var(v.clone()), t) {
                Ok(true) => {}
                Ok(false) => report.assign_violations += 1,
                Err(_) => report.oracle_errors += 1,
            }
        }
    }

    // The combination lemmas, over quadruples of son terms.
    let quads = sons.len() * sons.len();
    let quad_report = (0..quads)
        .into_par_iter()
        .map(|k| {
            let t1 = &sons[k / sons.len()];
            let u1 = &sons[k % sons.len()];
            let mut r = LemmaReport::default();
            let head = unify(t1, u1);
            for t2 in &sons {
                for u2 in &sons {
                    check_comb_lemmas(t1, t2, u1, u2, &head, oracle, &mut r);
                }
            }
            r
        })
        .reduce(LemmaReport::default, |mut a, b| {
            a.absorb(b);
            a
        });
    report.absorb(quad_report);
    report
}

fn check_comb_lemmas(
    t1: &Term,
    t2: &Term,
    u1: &Term,
    u2: &Term,
    head: &Attempt,
    oracle: &Oracle,
    report: &mut LemmaReport,
) {
    let whole_t = Term::comb(t1.clone(), t2.clone());
    let whole_u = Term::comb(u1.clone(), u2.clone());
    match head {
        Attempt::Failure => {
            // Sons that cannot be unified doom the whole combination.
            report.head_failure_instances += 1;
            match oracle.cant_unify_bruteforce(&whole_t, &whole_u) {
                Ok(true) => {}
                Ok(false) => report.head_failure_violations += 1,
                Err(_) => report.oracle_errors += 1,
            }
        }
        Attempt::Success(s1) => {
            let t2s = s1.apply(t2);
            let u2s = s1.apply(u2);
            match unify(&t2s, &u2s) {
                Attempt::Failure => {
                    // A best head unifier that leaves non-unifiable right
                    // sons dooms the whole combination.
                    report.tail_failure_instances += 1;
                    let ok = matches!(oracle.verified_attempt(t1, u1), Ok(true))
                        && matches!(oracle.verified_attempt(&t2s, &u2s), Ok(true));
                    if !ok {
                        report.oracle_errors += 1;
                        return;
                    }
                    match oracle.cant_unify_bruteforce(&whole_t, &whole_u) {
                        Ok(true) => {}
                        Ok(false) => report.tail_failure_violations += 1,
                        Err(_) => report.oracle_errors += 1,
                    }
                }
                Attempt::Success(s2) => {
                    // Best unifiers of both son pairs compose to a best
                    // unifier of the combinations.
                    report.composition_instances += 1;
                    let pre = matches!(oracle.verified_attempt(t1, u1), Ok(true))
                        && matches!(oracle.verified_attempt(&t2s, &u2s), Ok(true));
                    if !pre {
                        report.oracle_errors += 1;
                        return;
                    }
                    match oracle.is_best_unifier(&s1.then(&s2), &whole_t, &whole_u) {
                        Ok(true) => {}
                        Ok(false) => report.composition_violations += 1,
                        Err(_) => report.oracle_errors += 1,
                    }
                }
            }
        }
    }
}

/// Configuration for the randomized checks.
#[derive(Debug, Clone)]
pub struct RandomConfig {
    pub constants: Vec<ConstSym>,
    pub variables: Vec<VarSym>,
    /// Depth bound for the generated terms.
    pub max_depth: usize,
    pub seed: u64,
    pub cases: usize,
}

/// Counters for the randomized checks.
#[derive(Debug, Clone, Default)]
pub struct RandomReport {
    pub cases: usize,
    pub monotonicity_violations: usize,
    pub composition_violations: usize,
    pub transitivity_violations: usize,
    pub soundness_violations: usize,
    pub bounded_mismatches: usize,
}

impl RandomReport {
    pub fn violations(&self) -> usize {
        self.monotonicity_violations
            + self.composition_violations
            + self.transitivity_violations
            + self.soundness_violations
            + self.bounded_mismatches
    }
}

/// Draw a term of depth at most `depth`, biased towards combinations so
/// that generated terms have some body to them.
pub fn random_term(rng: &mut impl Rng, cfg: &RandomConfig, depth: usize) -> Term {
    if depth > 0 && rng.random_bool(0.7) {
        let left = random_term(rng, cfg, depth - 1);
        let right = random_term(rng, cfg, depth - 1);
        return Term::comb(left, right);
    }
    if rng.random_bool(0.5) {
        let i = rng.random_range(0..cfg.constants.len());
        Term::Const(cfg.constants[i].clone())
    } else {
        let i = rng.random_range(0..cfg.variables.len());
        Term::Var(cfg.variables[i].clone())
    }
}

/// Draw a substitution binding a random subset of the variables to random
/// terms of depth at most `depth`.
pub fn random_subst(rng: &mut impl Rng, cfg: &RandomConfig, depth: usize) -> Subst {
    let mut pairs = Vec::new();
    for v in &cfg.variables {
        if rng.random_bool(0.5) {
            pairs.push((v.clone(), random_term(rng, cfg, depth)));
        }
    }
    Subst::from_pairs(pairs)
}

fn proper_subterms(t: &Term) -> Vec<&Term> {
    fn walk<'a>(t: &'a Term, acc: &mut Vec<&'a Term>) {
        if let Term::Comb(left, right) = t {
            acc.push(left);
            walk(left, acc);
            acc.push(right);
            walk(right, acc);
        }
    }
    let mut acc = Vec::new();
    walk(t, &mut acc);
    acc
}

/// Randomized spot checks of the properties that hold for arbitrary terms:
/// monotonicity of substitution along the occurs-in relation, the defining
/// equation of composition, transitivity of occurs-in, soundness and
/// idempotence of produced unifiers, and agreement of the bounded unifier.
/// Deterministic for a given seed.
pub fn random_checks(cfg: &RandomConfig) -> RandomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = RandomReport { cases: cfg.cases, ..Default::default() };

    for _ in 0..cfg.cases {
        // Monotonicity: pick t strictly inside u, apply any s to both.
        let u = random_term(&mut rng, cfg, cfg.max_depth);
        let inner = proper_subterms(&u);
        if !inner.is_empty() {
            let t = inner[rng.random_range(0..inner.len())].clone();
            let s = random_subst(&mut rng, cfg, cfg.max_depth / 2);
            if t.occurs_in(&u) && !s.apply(&t).occurs_in(&s.apply(&u)) {
                report.monotonicity_violations += 1;
            }
        }

        // Composition: applying r then s equals applying r.then(s).
        let t = random_term(&mut rng, cfg, cfg.max_depth);
        let r = random_subst(&mut rng, cfg, cfg.max_depth / 2);
        let s = random_subst(&mut rng, cfg, cfg.max_depth / 2);
        if r.then(&s).apply(&t) != s.apply(&r.apply(&t)) {
            report.composition_violations += 1;
        }

        // Transitivity along a chain of proper subterms.
        let w = random_term(&mut rng, cfg, cfg.max_depth.min(3));
        let mids = proper_subterms(&w);
        if !mids.is_empty() {
            let mid = mids[rng.random_range(0..mids.len())];
            let inner = proper_subterms(mid);
            if !inner.is_empty() {
                let t = inner[rng.random_range(0..inner.len())];
                if t.occurs_in(mid) && mid.occurs_in(&w) && !t.occurs_in(&w) {
                    report.transitivity_violations += 1;
                }
            }
        }

        // Unifier soundness on a random pair.
        let a = random_term(&mut rng, cfg, cfg.max_depth);
        let b = random_term(&mut rng, cfg, cfg.max_depth);
        let z = unify(&a, &b);
        if let Attempt::Success(s) = &z {
            let sound = unifies(s, &a, &b)
                && s.is_idempotent()
                && s.domain()
                    .union(&s.range_vars())
                    .is_subset(&a.vars().union(&b.vars()));
            if !sound {
                report.soundness_violations += 1;
            }
        }
        let (traced, _) = unify_traced(&a, &b);
        if traced != z {
            report.soundness_violations += 1;
        }
        let bounded = unify_bounded(&a, &b, fuel_for(&a, &b));
        let agree = match (&z, &bounded) {
            (Attempt::Failure, BoundedAttempt::Failure) => true,
            (Attempt::Success(x), BoundedAttempt::Success(y)) => x == y,
            _ => false,
        };
        if !agree {
            report.bounded_mismatches += 1;
        }
    }
    report
}
