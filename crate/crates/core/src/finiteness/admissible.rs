use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::funcfield::{FuncField, MultiPoly, PointEvaluator, RatFunc};
use crate::gf::{Extension, Gf, GfElem, RelativeBasis, MAX_FIELD_SIZE};
use crate::linalg::Mat;

use super::Env;

/// Points tried per extension degree in the deterministic scan.
const SCAN_LIMIT: u64 = 1 << 16;
/// Random draws per extension degree before moving to the next.
const RANDOM_DRAWS_PER_DEGREE: u64 = 512;
/// Draws made by the scheduled random search before giving up.
const RANDOM_ATTEMPTS: usize = 1 << 14;

/// A point of `F_{q^nu}^m` at which every generator and inverse specializes.
#[derive(Clone)]
pub struct AdmissiblePoint {
    pub alpha: Vec<GfElem>,
    pub nu: usize,
    ext: Arc<Extension>,
}

impl AdmissiblePoint {
    pub fn field(&self) -> &Gf {
        self.ext.field()
    }

    /// `F_{q^nu}` over the coefficient field.
    pub fn over_base(&self) -> &RelativeBasis {
        &self.ext.over_base
    }

    /// Each coordinate as its digits over the prime field, low degree first.
    pub fn alpha_coeffs(&self) -> Vec<Vec<u64>> {
        self.alpha.iter().map(|&a| self.field().coeffs(a)).collect()
    }

    pub fn key(&self) -> (usize, Vec<GfElem>) {
        (self.nu, self.alpha.clone())
    }
}

impl fmt::Debug for AdmissiblePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdmissiblePoint(nu={}, alpha={:?})", self.nu, self.alpha)
    }
}

impl PartialEq for AdmissiblePoint {
    fn eq(&self, other: &Self) -> bool {
        self.nu == other.nu && self.alpha == other.alpha
    }
}

impl Eq for AdmissiblePoint {}

/// Points already rejected, as `(nu, alpha)`.
pub type Exclusions = HashSet<(usize, Vec<GfElem>)>;

/// Lcm of the denominators of all entries of the generators and their inverses.
pub fn admissibility_poly(ff: &FuncField, gens: &[Mat<RatFunc>]) -> Result<MultiPoly> {
    let mut all = gens.to_vec();
    for g in gens {
        all.push(g.inverse(ff)?);
    }
    Ok(ff.denominator_lcm(&all))
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True when the coordinates of `alpha` generate all of `F_{q^nu}`.
fn generates(field: &Gf, q: u64, nu: usize, alpha: &[GfElem]) -> bool {
    prime_factors(nu).into_iter().all(|r| {
        let qd = q.pow((nu / r) as u32);
        alpha.iter().any(|&a| field.frobenius(a, qd) != a)
    })
}

/// Extension degrees allowed by `max_nu`, the field-size cap and the
/// coprimality requirement, ascending.
pub(crate) fn allowed_degrees(env: &Env, require_p_coprime: bool) -> Vec<usize> {
    let q = env.tower().q();
    let p = env.ff().coeff_field().p() as usize;
    (1..=env.max_nu())
        .filter(|&nu| !(require_p_coprime && nu % p == 0))
        .filter(|&nu| q.checked_pow(nu as u32).is_some_and(|s| s <= MAX_FIELD_SIZE))
        .collect()
}

/// Finds an admissible point, trying extension degrees in ascending order.
/// Without `rng`, points of each `F_{q^nu}^m` are scanned in index order;
/// with it, a bounded number are drawn at random before moving on. Points
/// whose coordinates lie in a proper subfield are skipped.
pub fn find_admissible(
    env: &Env,
    gens: &[Mat<RatFunc>],
    require_p_coprime: bool,
    exclude: &Exclusions,
    mut rng: Option<&mut dyn RngCore>,
) -> Result<AdmissiblePoint> {
    let test = Tester::new(env, gens, exclude)?;
    let m = env.ff().nvars();
    for nu in allowed_degrees(env, require_p_coprime) {
        let ext = env.tower().extension(nu)?;
        let size = ext.field().size();
        let total = size.checked_pow(m as u32).unwrap_or(u64::MAX);
        let mut alpha = vec![0; m];
        match rng.as_deref_mut() {
            None => {
                for idx in 0..total.min(SCAN_LIMIT) {
                    let mut x = idx;
                    for a in alpha.iter_mut() {
                        *a = (x % size) as GfElem;
                        x /= size;
                    }
                    if test.ok(&ext, &alpha) {
                        return Ok(AdmissiblePoint { alpha, nu, ext });
                    }
                }
            }
            Some(rng) => {
                for _ in 0..total.saturating_mul(2).min(RANDOM_DRAWS_PER_DEGREE) {
                    for a in alpha.iter_mut() {
                        *a = ext.field().random(rng);
                    }
                    if test.ok(&ext, &alpha) {
                        return Ok(AdmissiblePoint { alpha, nu, ext });
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted { max_nu: env.max_nu() as u32 })
}

/// Draws admissible points uniformly from `F_{q^nu}^m`, the degree itself
/// drawn uniformly from the allowed range on each attempt.
pub fn sample_admissible(
    env: &Env,
    gens: &[Mat<RatFunc>],
    exclude: &Exclusions,
    rng: &mut dyn RngCore,
) -> Result<AdmissiblePoint> {
    let test = Tester::new(env, gens, exclude)?;
    let m = env.ff().nvars();
    let degrees = allowed_degrees(env, false);
    if !degrees.is_empty() {
        for _ in 0..RANDOM_ATTEMPTS {
            let nu = degrees[rng.gen_range(0..degrees.len())];
            let ext = env.tower().extension(nu)?;
            let alpha: Vec<GfElem> = (0..m).map(|_| ext.field().random(rng)).collect();
            if test.ok(&ext, &alpha) {
                return Ok(AdmissiblePoint { alpha, nu, ext });
            }
        }
    }
    Err(Error::SearchExhausted { max_nu: env.max_nu() as u32 })
}

struct Tester<'a> {
    ff: &'a FuncField,
    f: MultiPoly,
    q: u64,
    exclude: &'a Exclusions,
}

impl<'a> Tester<'a> {
    fn new(env: &'a Env, gens: &[Mat<RatFunc>], exclude: &'a Exclusions) -> Result<Self> {
        Ok(Tester { ff: env.ff(), f: admissibility_poly(env.ff(), gens)?, q: env.tower().q(), exclude })
    }

    fn ok(&self, ext: &Extension, alpha: &[GfElem]) -> bool {
        if ext.nu > 1 && !generates(ext.field(), self.q, ext.nu, alpha) {
            return false;
        }
        if self.exclude.contains(&(ext.nu, alpha.to_vec())) {
            return false;
        }
        self.f.is_one() || PointEvaluator::new(self.ff, alpha, &ext.over_base).eval_poly(&self.f) != 0
    }
}

/// Entrywise substitution of the point.
pub fn specialize(ff: &FuncField, m: &Mat<RatFunc>, pt: &AdmissiblePoint) -> Result<Mat<GfElem>> {
    let mut ev = PointEvaluator::new(ff, &pt.alpha, pt.over_base());
    m.try_map(|e| ev.eval(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::gf::Gf;

    fn env(p: u64) -> Env {
        Env::new(FuncField::new(Gf::prime(p).unwrap(), vec!["X".into()]).unwrap())
    }

    fn diag(ff: &FuncField, a: RatFunc) -> Mat<RatFunc> {
        Mat::from_rows(vec![vec![a, ff.zero()], vec![ff.zero(), ff.one()]])
    }

    #[test]
    fn polynomial_generators_use_origin() {
        let e = env(2);
        let ff = e.ff().clone();
        let g = Mat::from_rows(vec![vec![ff.one(), ff.var(0)], vec![ff.zero(), ff.one()]]);
        let pt = find_admissible(&e, &[g], true, &Exclusions::new(), None).unwrap();
        assert_eq!((pt.nu, pt.alpha.clone()), (1, vec![0]));
    }

    #[test]
    fn roots_of_x_times_x_plus_one_force_degree_three() {
        let e = env(2);
        let ff = e.ff().clone();
        let x = ff.var(0);
        let g = diag(&ff, ff.mul(&x, &ff.add(&x, &ff.one())));
        let pt = find_admissible(&e, &[g], true, &Exclusions::new(), None).unwrap();
        assert_eq!(pt.nu, 3);
        let a = pt.alpha[0];
        assert!(pt.field().frobenius(a, 2) != a);
    }

    #[test]
    fn x_over_f3_uses_one() {
        let e = env(3);
        let ff = e.ff().clone();
        let g = diag(&ff, ff.var(0));
        let pt = find_admissible(&e, &[g], false, &Exclusions::new(), None).unwrap();
        assert_eq!((pt.nu, pt.alpha.clone()), (1, vec![1]));
    }

    #[test]
    fn specialization_is_multiplicative() {
        let e = env(2);
        let ff = e.ff().clone();
        let u = Mat::from_rows(vec![vec![ff.one(), ff.var(0)], vec![ff.zero(), ff.one()]]);
        let pt = find_admissible(&e, &[u.clone()], false, &Exclusions::new(), None).unwrap();
        let su = specialize(&ff, &u, &pt).unwrap();
        assert!(su.is_identity(pt.field()));
        let sq = specialize(&ff, &u.mul(&u, &ff), &pt).unwrap();
        assert_eq!(sq, su.mul(&su, pt.field()));
    }
}
