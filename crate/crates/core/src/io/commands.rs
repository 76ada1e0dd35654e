//! The operations behind the command-line tool, returning reports.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finiteness::{is_finite, Env, DEFAULT_MAX_NU};
use crate::nilpotent::{has_finite_order, is_finite_nilpotent};
use crate::oracle::{closure_oracle, infinite_order_certificate, ClosureOutcome};
use crate::order::{size_finite, SizeOptions};
use crate::trace::Trace;

use super::{Group, Report};

/// Word length searched for an infinite-order element by the oracle command.
pub const CERTIFICATE_WORD_LENGTH: usize = 4;

#[derive(Clone, Debug)]
pub struct IsFiniteOptions {
    pub nilpotent: bool,
    pub seed: u64,
    pub max_nu: usize,
    pub trace: bool,
}

impl Default for IsFiniteOptions {
    fn default() -> Self {
        IsFiniteOptions { nilpotent: false, seed: 0, max_nu: DEFAULT_MAX_NU, trace: false }
    }
}

#[derive(Clone, Debug)]
pub struct OrderOptions {
    pub seed: u64,
    pub cr_shortcut: bool,
    pub budget: usize,
    pub max_nu: usize,
    pub trace: bool,
}

impl Default for OrderOptions {
    fn default() -> Self {
        OrderOptions { seed: 0, cr_shortcut: false, budget: SizeOptions::default().budget, max_nu: 6, trace: false }
    }
}

fn finish(mut report: Report, trace: Trace) -> Report {
    if trace.enabled() {
        report.trace = Some(trace.into_events());
    }
    report
}

pub fn is_finite_report(group: &Group, opts: &IsFiniteOptions) -> Result<Report> {
    let env = Env::new(group.ff.clone()).with_max_nu(opts.max_nu);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trace = Trace::new(opts.trace);
    let verdict = if opts.nilpotent {
        is_finite_nilpotent(&env, &group.gens, Some(&mut rng), &mut trace)?
    } else {
        is_finite(&env, &group.gens, Some(&mut rng), &mut trace)?
    };
    Ok(finish(Report::from_verdict(&verdict), trace))
}

/// Order of a group the caller asserts to be finite.
pub fn order_report(group: &Group, opts: &OrderOptions) -> Result<Report> {
    let env = Env::new(group.ff.clone()).with_max_nu(opts.max_nu);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trace = Trace::new(opts.trace);
    let size_opts = SizeOptions { cr_shortcut: opts.cr_shortcut, budget: opts.budget, ..SizeOptions::default() };
    let result = size_finite(&env, &group.gens, &mut rng, &size_opts, &mut trace)?;
    Ok(finish(Report::from_size(&result), trace))
}

/// Finite-order test for the single generator of `group`.
pub fn element_order_report(group: &Group) -> Result<Report> {
    if group.gens.len() != 1 {
        return Err(Error::InvalidInput(format!("expected one generator, found {}", group.gens.len())));
    }
    let env = Env::new(group.ff.clone());
    let verdict = has_finite_order(&env, &group.gens[0], None, &mut Trace::default())?;
    Ok(Report::from_verdict(&verdict))
}

/// Searches short words for an element of infinite order, then enumerates
/// the closure up to `cap` elements. The flag is false when neither settles
/// the question.
pub fn oracle_report(group: &Group, cap: usize) -> (Report, bool) {
    if infinite_order_certificate(&group.ff, &group.gens, CERTIFICATE_WORD_LENGTH).is_some() {
        return (Report::from_oracle(Some(false), None, "InfiniteOrderElement"), true);
    }
    match closure_oracle(&group.ff, &group.gens, cap) {
        ClosureOutcome::Order(n) => (Report::from_oracle(Some(true), Some(n.to_string()), "Closure"), true),
        ClosureOutcome::ExceededCap => (Report::from_oracle(None, None, "ExceededCap"), false),
    }
}
