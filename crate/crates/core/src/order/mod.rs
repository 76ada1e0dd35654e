//! Orders of finite matrix groups.

mod dimino;
mod schreier;

use num_bigint::BigUint;
use rand::RngCore;
use serde_json::json;

pub use dimino::dimino;
pub use schreier::StabilizerChain;

use crate::error::{Error, Result};
use crate::finiteness::{
    dedup_generators, sample_admissible, is_isomorphism_env_algebras, specialized_over, AdmissiblePoint, Env,
    Exclusions,
};
use crate::funcfield::RatFunc;
use crate::gf::{Gf, GfElem};
use crate::linalg::Mat;
use crate::trace::Trace;

/// Orders up to this size are found by closure under `Engine::Auto`.
pub const CLOSURE_THRESHOLD: usize = 4096;
pub const DEFAULT_MAX_ORBIT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    StabilizerChain,
    Dimino,
    /// Closure when the group is small, stabilizer chain otherwise.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrder {
    pub value: BigUint,
    pub engine: Engine,
    /// Orbit lengths along the chain, or the element count of the closure.
    pub transcript: Vec<u64>,
}

/// Order of a group of invertible matrices over a finite field. `limit`
/// bounds orbit lengths for the chain and the element count for closure.
pub fn group_order_ff(gens: &[Mat<GfElem>], n: usize, f: &Gf, engine: Engine, limit: usize) -> Result<GroupOrder> {
    let by_chain = || -> Result<GroupOrder> {
        let chain = StabilizerChain::new(gens, n, f, limit)?;
        let sizes = chain.orbit_sizes();
        let value = sizes.iter().map(|&s| BigUint::from(s)).product();
        Ok(GroupOrder { value, engine: Engine::StabilizerChain, transcript: sizes })
    };
    let by_closure = |cap: usize| {
        dimino(gens, n, f, cap).map(|els| GroupOrder {
            value: BigUint::from(els.len()),
            engine: Engine::Dimino,
            transcript: vec![els.len() as u64],
        })
    };
    match engine {
        Engine::StabilizerChain => by_chain(),
        Engine::Dimino => by_closure(limit).ok_or(Error::BudgetExhausted { budget: limit }),
        Engine::Auto => match by_closure(CLOSURE_THRESHOLD.min(limit)) {
            Some(o) => Ok(o),
            None => by_chain(),
        },
    }
}

#[derive(Clone, Debug)]
pub struct SizeOptions {
    /// Test injectivity over `F_{q^nu}` instead of `F_q`; only valid for
    /// cyclic or completely reducible groups.
    pub cr_shortcut: bool,
    /// Points tried before giving up.
    pub budget: usize,
    pub engine: Engine,
    pub limit: usize,
}

impl Default for SizeOptions {
    fn default() -> Self {
        SizeOptions { cr_shortcut: false, budget: 64, engine: Engine::Auto, limit: DEFAULT_MAX_ORBIT }
    }
}

#[derive(Clone, Debug)]
pub struct SizeResult {
    pub order: GroupOrder,
    pub point: AdmissiblePoint,
    /// Points rejected before `point` was accepted.
    pub rejected: usize,
}

/// Order of a finite group (the caller vouches for finiteness): draws random
/// admissible points until specialization is injective on the enveloping
/// algebra, then counts the specialized group.
pub fn size_finite(
    env: &Env,
    gens: &[Mat<RatFunc>],
    rng: &mut dyn RngCore,
    opts: &SizeOptions,
    trace: &mut Trace,
) -> Result<SizeResult> {
    let gens = dedup_generators(gens);
    let n = gens[0].rows();
    let mut exclude = Exclusions::new();
    for attempt in 0..opts.budget {
        let pt = sample_admissible(env, &gens, &exclude, rng)?;
        let mu = if opts.cr_shortcut { pt.nu } else { 1 };
        let outcome = is_isomorphism_env_algebras(env, &gens, &pt, mu)?;
        trace.event(|| {
            json!({"step": "candidate", "attempt": attempt, "nu": pt.nu, "alpha": pt.alpha_coeffs(),
                   "accepted": outcome.is_isomorphism()})
        });
        if outcome.is_isomorphism() {
            let (spec, _) = specialized_over(env, &gens, &pt, pt.nu)?;
            let order = group_order_ff(&spec, n, pt.field(), opts.engine, opts.limit)?;
            trace.event(|| json!({"step": "order", "value": order.value.to_string(), "transcript": order.transcript}));
            return Ok(SizeResult { order, point: pt, rejected: attempt });
        }
        exclude.insert(pt.key());
    }
    Err(Error::BudgetExhausted { budget: opts.budget })
}
