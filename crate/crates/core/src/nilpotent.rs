//! Finiteness of nilpotent groups and of single elements.

use rand::RngCore;

use crate::error::Result;
use crate::finiteness::{is_finite_cr, Env, Verdict};
use crate::funcfield::RatFunc;
use crate::linalg::Mat;
use crate::trace::Trace;

/// Least `gamma` with `n <= p^gamma`.
pub fn gamma(n: usize, p: u64) -> u32 {
    let mut g = 0;
    let mut pg = 1u64;
    while pg < n as u64 {
        pg *= p;
        g += 1;
    }
    g
}

/// Finiteness of a nilpotent group (the caller vouches for nilpotency),
/// decided on the `p^gamma`-th powers of the generators.
pub fn is_finite_nilpotent(
    env: &Env,
    gens: &[Mat<RatFunc>],
    rng: Option<&mut dyn RngCore>,
    trace: &mut Trace,
) -> Result<Verdict> {
    let ff = env.ff();
    let n = gens[0].rows();
    let p = ff.coeff_field().p();
    let e = p.pow(gamma(n, p));
    let powered: Vec<Mat<RatFunc>> = gens.iter().map(|g| g.pow(e, ff)).collect();
    is_finite_cr(env, &powered, rng, trace)
}

pub fn has_finite_order(
    env: &Env,
    g: &Mat<RatFunc>,
    rng: Option<&mut dyn RngCore>,
    trace: &mut Trace,
) -> Result<Verdict> {
    is_finite_nilpotent(env, std::slice::from_ref(g), rng, trace)
}
