//! Finiteness decisions for matrix groups over `F_q(X_1, ..., X_m)`.

mod admissible;
mod descent;
mod iso;

use std::collections::VecDeque;

use rand::RngCore;
use serde_json::json;

pub use admissible::{admissibility_poly, find_admissible, sample_admissible, specialize, AdmissiblePoint, Exclusions};
pub use descent::module_via_nullspace;
pub use iso::{first_duplicate, is_isomorphism_env_algebras, radical_witness, specialized_over, Defect, IsoOutcome};

use crate::error::Result;
use crate::funcfield::{FuncField, RatFunc};
use crate::gf::{GfElem, Tower};
use crate::linalg::{induced_actions, Mat};
use crate::trace::Trace;

pub const DEFAULT_MAX_NU: usize = 8;

/// The function field together with its finite-field tower.
#[derive(Debug)]
pub struct Env {
    ff: FuncField,
    tower: Tower,
    max_nu: usize,
}

impl Env {
    pub fn new(ff: FuncField) -> Self {
        let tower = Tower::new(ff.coeff_field().clone());
        Env { ff, tower, max_nu: DEFAULT_MAX_NU }
    }

    /// Ceiling on the extension degree searched for admissible points.
    pub fn with_max_nu(mut self, max_nu: usize) -> Self {
        self.max_nu = max_nu.max(1);
        self
    }

    pub fn ff(&self) -> &FuncField {
        &self.ff
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn max_nu(&self) -> usize {
        self.max_nu
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Specialization is injective on the enveloping algebra of dimension `dim`.
    IsoBasis { dim: usize },
    DuplicateCollapse { i: usize, j: usize },
    SpanDefect { i: usize, j: usize, coeffs: Vec<GfElem> },
    ZeroInvariantModule,
    /// Verdicts of the constituents, in worklist order.
    ConstituentChain(Vec<Verdict>),
}

impl Evidence {
    pub fn name(&self) -> &'static str {
        match self {
            Evidence::IsoBasis { .. } => "IsoBasis",
            Evidence::DuplicateCollapse { .. } => "DuplicateCollapse",
            Evidence::SpanDefect { .. } => "SpanDefect",
            Evidence::ZeroInvariantModule => "ZeroInvariantModule",
            Evidence::ConstituentChain(_) => "ConstituentChain",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub finite: bool,
    pub evidence: Evidence,
    /// Point used at the top level.
    pub point: Option<AdmissiblePoint>,
}

/// Drops repeated generators, keeping first occurrences.
pub fn dedup_generators(gens: &[Mat<RatFunc>]) -> Vec<Mat<RatFunc>> {
    let mut out: Vec<Mat<RatFunc>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.contains(g) {
            out.push(g.clone());
        }
    }
    out
}

/// Shortens the trait-object lifetime so the generator can be lent out
/// repeatedly.
pub(crate) fn reborrow<'a>(rng: &'a mut Option<&mut dyn RngCore>) -> Option<&'a mut dyn RngCore> {
    match rng {
        Some(r) => Some(&mut **r),
        None => None,
    }
}

fn point_json(pt: &AdmissiblePoint) -> serde_json::Value {
    json!({"nu": pt.nu, "alpha": pt.alpha_coeffs()})
}

/// Finiteness test for completely reducible groups; the caller vouches for
/// complete reducibility. `rng` selects random rather than scanned points.
pub fn is_finite_cr(
    env: &Env,
    gens: &[Mat<RatFunc>],
    rng: Option<&mut dyn RngCore>,
    trace: &mut Trace,
) -> Result<Verdict> {
    let gens = dedup_generators(gens);
    let pt = find_admissible(env, &gens, false, &Exclusions::new(), rng)?;
    trace.event(|| json!({"step": "admissible", "point": point_json(&pt)}));
    let outcome = is_isomorphism_env_algebras(env, &gens, &pt, pt.nu)?;
    let (finite, evidence) = match outcome {
        IsoOutcome::Isomorphism(b) => (true, Evidence::IsoBasis { dim: b.dim() }),
        IsoOutcome::Duplicate(i, j) => (false, Evidence::DuplicateCollapse { i, j }),
        IsoOutcome::Defect(_, d, _) => (false, Evidence::SpanDefect { i: d.i, j: d.j, coeffs: d.coeffs }),
    };
    trace.event(|| json!({"step": "verdict", "finite": finite, "evidence": evidence.name()}));
    Ok(Verdict { finite, evidence, point: Some(pt) })
}

/// General finiteness test: specialize, look for a defect, and descend into
/// the constituents of an invariant subspace found through the radical.
pub fn is_finite(
    env: &Env,
    gens: &[Mat<RatFunc>],
    mut rng: Option<&mut dyn RngCore>,
    trace: &mut Trace,
) -> Result<Verdict> {
    let ff = env.ff();
    let mut worklist = VecDeque::from([dedup_generators(gens)]);
    let mut leaves = Vec::new();
    let mut root_point = None;
    while let Some(gens) = worklist.pop_front() {
        let n = gens[0].rows();
        let index = trace.worklist_iterations;
        trace.worklist_iterations += 1;
        trace.constituent_degrees.push(n);
        let pt = find_admissible(env, &gens, true, &Exclusions::new(), reborrow(&mut rng))?;
        trace.event(|| json!({"step": "admissible", "constituent": index, "degree": n, "point": point_json(&pt)}));
        if root_point.is_none() {
            root_point = Some(pt.clone());
        }
        let e = match is_isomorphism_env_algebras(env, &gens, &pt, pt.nu)? {
            IsoOutcome::Isomorphism(b) => {
                trace.event(|| json!({"step": "basis", "constituent": index, "dim": b.dim(), "finite": true}));
                leaves.push(Verdict { finite: true, evidence: Evidence::IsoBasis { dim: b.dim() }, point: Some(pt) });
                continue;
            }
            IsoOutcome::Duplicate(i, j) => {
                trace.event(|| json!({"step": "duplicate", "constituent": index, "i": i, "j": j}));
                gens[i].sub(&gens[j], ff)
            }
            IsoOutcome::Defect(basis, d, mut pre) => {
                trace.event(|| json!({"step": "defect", "constituent": index, "dim": basis.dim(), "i": d.i, "j": d.j}));
                let e = radical_witness(env, &basis, &mut pre, &gens, &d, pt.nu)?;
                if e.is_zero(ff) {
                    // A genuine defect of a finite group gives a nonzero witness.
                    trace.event(|| json!({"step": "zero_witness", "constituent": index}));
                    let evidence = Evidence::SpanDefect { i: d.i, j: d.j, coeffs: d.coeffs };
                    return Ok(Verdict { finite: false, evidence, point: root_point });
                }
                e
            }
        };
        let (u, steps) = module_via_nullspace(ff, &gens, &e);
        trace.nullspace_iterations.push(steps);
        trace.event(|| json!({"step": "module", "constituent": index, "dim": u.dim(), "iterations": steps}));
        if u.dim() == 0 {
            return Ok(Verdict { finite: false, evidence: Evidence::ZeroInvariantModule, point: root_point });
        }
        let actions = induced_actions(&gens, &[], &u, ff)?;
        trace.event(|| json!({"step": "split", "constituent": index, "sub": u.dim(), "quotient": n - u.dim()}));
        worklist.push_back(dedup_generators(&actions.on_sub));
        worklist.push_back(dedup_generators(&actions.on_quotient));
    }
    let evidence = if leaves.len() == 1 { leaves.pop().unwrap().evidence } else { Evidence::ConstituentChain(leaves) };
    trace.event(|| json!({"step": "verdict", "finite": true, "evidence": evidence.name()}));
    Ok(Verdict { finite: true, evidence, point: root_point })
}
