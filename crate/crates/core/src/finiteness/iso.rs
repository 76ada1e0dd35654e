use crate::error::{Error, Result};
use crate::envalg::{basis_env_algebra, AlgebraBasis, PreImages};
use crate::field::Field;
use crate::funcfield::{FuncField, RatFunc};
use crate::gf::{GfElem, RelativeBasis};
use crate::linalg::Mat;

use super::admissible::{specialize, AdmissiblePoint};
use super::Env;

/// A product `A_i S_j` whose pre-image differs from the combination of
/// pre-images predicted by its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub i: usize,
    pub j: usize,
    /// Coordinates of `A_i(alpha) S_j(alpha)` over `F_{q^mu}`.
    pub coeffs: Vec<GfElem>,
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphism(AlgebraBasis),
    Duplicate(usize, usize),
    /// Carries the pre-images computed so far for reuse by the witness.
    Defect(AlgebraBasis, Defect, PreImages),
}

impl IsoOutcome {
    pub fn is_isomorphism(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphism(_))
    }
}

/// Least pair `i < j` with equal matrices.
pub fn first_duplicate<E: PartialEq>(mats: &[Mat<E>]) -> Option<(usize, usize)> {
    (0..mats.len()).flat_map(|j| (0..j).map(move |i| (i, j))).find(|&(i, j)| mats[i] == mats[j])
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Specialized generators lifted into `F_{q^lambda}`, `lambda = lcm(mu, nu)`,
/// with `F_{q^mu}` inside it.
pub fn specialized_over(
    env: &Env,
    gens: &[Mat<RatFunc>],
    pt: &AdmissiblePoint,
    mu: usize,
) -> Result<(Vec<Mat<GfElem>>, std::sync::Arc<RelativeBasis>)> {
    let lambda = mu / gcd(mu, pt.nu) * pt.nu;
    let lift = env.tower().relative(pt.nu, lambda)?;
    let rel = env.tower().relative(mu, lambda)?;
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let s = specialize(env.ff(), g, pt)?;
        out.push(if lambda == pt.nu { s } else { s.map(|&e| lift.embed(e)) });
    }
    Ok((out, rel))
}

/// `target == sum_k a_k pre[k]` over the function field, where each `a_k`
/// is given by its coordinates `c[k]` over `F_q`; compared entry by entry.
fn combination_matches(ff: &FuncField, target: &Mat<RatFunc>, pre: &[Mat<RatFunc>], c: &[Vec<GfElem>]) -> bool {
    let mu = c.first().map_or(1, Vec::len);
    let n = target.rows();
    for r in 0..n {
        for col in 0..n {
            for l in 0..mu {
                let mut acc = ff.zero();
                for (k, a) in pre.iter().enumerate() {
                    if c[k][l] != 0 {
                        acc = ff.add(&acc, &ff.mul(&ff.constant(c[k][l]), a.get(r, col)));
                    }
                }
                let want = if l == 0 { target.get(r, col).clone() } else { ff.zero() };
                if acc != want {
                    return false;
                }
            }
        }
    }
    true
}

/// Decides whether specialization at `pt` is injective on the
/// `F_{q^mu}`-enveloping algebra of `gens`.
pub fn is_isomorphism_env_algebras(
    env: &Env,
    gens: &[Mat<RatFunc>],
    pt: &AdmissiblePoint,
    mu: usize,
) -> Result<IsoOutcome> {
    let ff = env.ff();
    let (spec, rel) = specialized_over(env, gens, pt, mu)?;
    if let Some((i, j)) = first_duplicate(&spec) {
        return Ok(IsoOutcome::Duplicate(i, j));
    }
    let basis = basis_env_algebra(&spec, &rel);
    let l = rel.ext();
    let down = env.tower().relative(1, mu)?;
    let d = basis.dim();
    let mut pre = PreImages::new();
    let mut pre_all: Option<Vec<Mat<RatFunc>>> = None;
    for i in 0..d {
        for (j, s) in spec.iter().enumerate() {
            if basis.accepted_product(i, j).is_some() {
                continue;
            }
            let prod = basis.elements()[i].mul(s, l);
            let a = basis.coordinates(&prod).expect("basis is closed under the generators");
            let pre_all = pre_all.get_or_insert_with(|| (0..d).map(|k| pre.get(&basis, k, gens, ff)).collect());
            let target = pre_all[i].mul(&gens[j], ff);
            let c: Vec<Vec<GfElem>> = a.iter().map(|&x| down.coords(x)).collect();
            if !combination_matches(ff, &target, pre_all, &c) {
                return Ok(IsoOutcome::Defect(basis, Defect { i, j, coeffs: a }, pre));
            }
        }
    }
    Ok(IsoOutcome::Isomorphism(basis))
}

/// `nu A_i S_j - sum_k tr(a_k) A_k` for a defect found with `mu = nu`.
pub fn radical_witness(
    env: &Env,
    basis: &AlgebraBasis,
    pre: &mut PreImages,
    gens: &[Mat<RatFunc>],
    defect: &Defect,
    nu: usize,
) -> Result<Mat<RatFunc>> {
    let ff = env.ff();
    let p = ff.coeff_field().p() as usize;
    if nu % p == 0 {
        return Err(Error::Usage(format!("extension degree {nu} is divisible by the characteristic")));
    }
    let over_base = env.tower().relative(1, nu)?;
    if basis.subfield() != over_base.ext() {
        return Err(Error::Usage("basis was not computed over the point's field".into()));
    }
    let ai = pre.get(basis, defect.i, gens, ff);
    let nu_c = ff.from_int(nu as i64);
    let mut e = ai.mul(&gens[defect.j], ff).scale(&nu_c, ff);
    for (k, &a) in defect.coeffs.iter().enumerate() {
        let tr = over_base.trace(a);
        if tr != 0 {
            let ak = pre.get(basis, k, gens, ff);
            e = e.sub(&ak.scale(&ff.constant(tr), ff), ff);
        }
    }
    Ok(e)
}
