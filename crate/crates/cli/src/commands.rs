//! Command dispatch for the `mgu` binary.
//!
//! Exit codes partition the outcomes: 0 for success, 1 for a unification
//! failure (or a verification sweep that found violations), 2 for usage and
//! parse errors. Results go to stdout, diagnostics to stderr.

use std::collections::BTreeSet;

use clap::{Parser, Subcommand};

use mgu_core::sweep::{check_lemmas, random_checks, sweep, RandomConfig};
use mgu_core::{unify, unify_traced, Attempt, ConstSym, Oracle, Term, Universe, VarSym};

use crate::syntax::{parse_subst, parse_term, print_subst, print_term, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_UNIFIER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "mgu",
    about = "First-order unification with executable correctness checks",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Unify two terms, printing the most general unifier or FAILURE
    Unify { term1: String, term2: String },
    /// Apply a substitution to a term
    Apply { term: String, subst: String },
    /// Compose two substitutions (apply the first, then the second)
    Compose { subst1: String, subst2: String },
    /// Report whether the first term occurs strictly inside the second
    Occurs { term1: String, term2: String },
    /// List the variables of a term in sorted order
    Vars { term: String },
    /// Unify while printing one line per recursive call with its
    /// termination-measure check
    Trace { term1: String, term2: String },
    /// Exhaustively verify the correctness statements over an enumerated
    /// universe, plus optional randomized larger cases
    Check {
        /// Number of constants in the universe
        #[arg(long, default_value_t = 2)]
        consts: usize,
        /// Number of variables in the universe
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Combination depth of the enumerated terms
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Seed for the randomized cases
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized larger cases to run
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

/// Parse arguments and run. Returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            eprint!("{e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, ParseError> {
    match cli.command {
        Command::Unify { term1, term2 } => {
            let t = parse_term(&term1)?;
            let u = parse_term(&term2)?;
            match unify(&t, &u) {
                Attempt::Success(s) => {
                    println!("SUCCESS {}", print_subst(&s));
                    Ok(EXIT_OK)
                }
                Attempt::Failure => {
                    println!("FAILURE");
                    Ok(EXIT_NO_UNIFIER)
                }
            }
        }
        Command::Apply { term, subst } => {
            let t = parse_term(&term)?;
            let s = parse_subst(&subst)?;
            println!("{}", print_term(&s.apply(&t)));
            Ok(EXIT_OK)
        }
        Command::Compose { subst1, subst2 } => {
            let s1 = parse_subst(&subst1)?;
            let s2 = parse_subst(&subst2)?;
            println!("{}", print_subst(&s1.then(&s2)));
            Ok(EXIT_OK)
        }
        Command::Occurs { term1, term2 } => {
            let t = parse_term(&term1)?;
            let u = parse_term(&term2)?;
            println!("{}", t.occurs_in(&u));
            Ok(EXIT_OK)
        }
        Command::Vars { term } => {
            let t = parse_term(&term)?;
            let vars = t.vars();
            let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
            println!("{}", names.join(" "));
            Ok(EXIT_OK)
        }
        Command::Trace { term1, term2 } => {
            let t = parse_term(&term1)?;
            let u = parse_term(&term2)?;
            Ok(run_trace(&t, &u))
        }
        Command::Check { consts, vars, depth, seed, random } => Ok(run_check(consts, vars, depth, seed, random)),
    }
}

/// Universe for checking a trace of the given pair: the pair's own alphabet
/// (padded to stay inhabited), with substitution values one level deep.
/// The substitution space is `(terms + 1)^variables`, so the value depth
/// drops to zero when a pair carries enough variables to make that blow up.
fn trace_universe(t: &Term, u: &Term) -> Universe {
    let mut constants: BTreeSet<ConstSym> = t.consts();
    constants.extend(u.consts());
    if constants.is_empty() {
        constants.insert(ConstSym::new("A").unwrap());
    }
    let mut variables: BTreeSet<VarSym> = t.vars().iter().cloned().collect();
    variables.extend(u.vars().iter().cloned());
    if variables.is_empty() {
        variables.insert(VarSym::new("x").unwrap());
    }
    let leaves = constants.len() + variables.len();
    let depth1_terms = leaves + leaves * leaves;
    let space = (depth1_terms as f64 + 1.0).powi(variables.len() as i32);
    let depth = if space <= 250_000.0 { 1 } else { 0 };
    Universe::new(constants.into_iter().collect(), variables.into_iter().collect(), depth)
        .expect("padded alphabet is inhabited")
}

fn run_trace(t: &Term, u: &Term) -> i32 {
    let (attempt, events) = unify_traced(t, u);
    let oracle = Oracle::new(trace_universe(t, u));
    for ev in &events {
        let verdict = match oracle.check_trace_event(ev) {
            Ok(true) => "PASS",
            Ok(false) => "FAIL",
            Err(_) => "FAIL",
        };
        println!("{} {} -> {} {}", ev.which, ev.cardv_caller, ev.cardv_callee, verdict);
    }
    match attempt {
        Attempt::Success(s) => {
            println!("SUCCESS {}", print_subst(&s));
            EXIT_OK
        }
        Attempt::Failure => {
            println!("FAILURE");
            EXIT_NO_UNIFIER
        }
    }
}

fn const_names(n: usize) -> Vec<ConstSym> {
    (0..n)
        .map(|i| {
            let name = if i < 26 {
                ((b'A' + i as u8) as char).to_string()
            } else {
                format!("C{i}")
            };
            ConstSym::new(name).expect("generated constant name is valid")
        })
        .collect()
}

fn var_names(n: usize) -> Vec<VarSym> {
    const POOL: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    (0..n)
        .map(|i| {
            let name = if i < POOL.len() { POOL[i].to_string() } else { format!("v{i}") };
            VarSym::new(name).expect("generated variable name is valid")
        })
        .collect()
}

fn run_check(consts: usize, vars: usize, depth: usize, seed: u64, random: usize) -> i32 {
    let constants = const_names(consts);
    let variables = var_names(vars);
    let term_universe = match Universe::new(constants.clone(), variables.clone(), depth) {
        Ok(uni) => uni,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    // Substitution values for the most-generality and non-unifiability
    // oracles are enumerated one level deep; see the library documentation
    // for what that trades away.
    let oracle = Oracle::new(
        Universe::new(constants.clone(), variables.clone(), 1).expect("same alphabet"),
    );
    println!("universe: {consts} constants, {vars} variables, depth {depth}");

    let report = sweep(&term_universe, &oracle);
    println!("terms: {}", report.terms);
    println!("ordered pairs: {}", report.pairs);
    println!("successes: {}", report.successes);
    println!("failures: {}", report.failures);
    println!("trace events: {}", report.trace_events);
    println!("equal-measure tail events: {}", report.equal_measure_tail_events);
    println!("best-unify-try violations: {}", report.best_unify_try_violations);
    println!("unifier-instance violations: {}", report.mgu_corollary_violations);
    println!("idempotence violations: {}", report.idempotence_violations);
    println!("trace violations: {}", report.trace_violations);
    println!("bounded mismatches: {}", report.bounded_mismatches);
    println!("oracle errors: {}", report.oracle_errors);
    for e in &report.examples {
        eprintln!("violation: {e}");
    }

    let son_universe = Universe::new(
        constants.clone(),
        variables.clone(),
        depth.saturating_sub(1).min(1),
    )
    .expect("same alphabet");
    let lemmas = check_lemmas(&son_universe, &oracle);
    println!(
        "lemma instances: {}",
        lemmas.assign_instances
            + lemmas.constant_instances
            + lemmas.head_failure_instances
            + lemmas.tail_failure_instances
            + lemmas.composition_instances
    );
    println!("lemma violations: {}", lemmas.violations());

    let mut total = report.violations() + lemmas.violations();

    if random > 0 {
        let cfg = RandomConfig {
            constants,
            variables,
            max_depth: 6,
            seed,
            cases: random,
        };
        let rand_report = random_checks(&cfg);
        println!("random cases: {} (seed {seed})", rand_report.cases);
        println!("random violations: {}", rand_report.violations());
        total += rand_report.violations();
    }

    if total == 0 {
        println!("result: PASS");
        EXIT_OK
    } else {
        println!("result: FAIL ({total} violations)");
        EXIT_NO_UNIFIER
    }
}
