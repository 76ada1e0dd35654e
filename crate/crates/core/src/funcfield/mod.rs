//! Rational function fields `F_q(X_1, ..., X_m)` and specialization of their
//! elements at points of finite extensions of `F_q`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf::{Gf, GfElem, RelativeBasis};
use crate::linalg::Mat;

pub mod poly;

pub use poly::{gcd, lcm, Monomial, MultiPoly, MAX_VARS};

/// Reduced fraction with a monic denominator. Two fractions are equal as
/// field elements iff their stored forms are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GfElem> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }
}

/// `F_q(X_1, ..., X_m)` as a field object over its coefficient field.
#[derive(Clone)]
pub struct FuncField {
    coeff: Gf,
    vars: Arc<Vec<String>>,
}

impl fmt::Debug for FuncField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.coeff, self.vars.join(","))
    }
}

impl PartialEq for FuncField {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.vars == other.vars
    }
}

impl FuncField {
    pub fn new(coeff: Gf, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!("between 1 and {MAX_VARS} indeterminates required")));
        }
        Ok(FuncField { coeff, vars: Arc::new(vars) })
    }

    pub fn coeff_field(&self) -> &Gf {
        &self.coeff
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(i))
    }

    pub fn constant(&self, c: GfElem) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn poly(&self, p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    /// Reduces `num / den`. Fails when `den` is zero.
    pub fn fraction(&self, num: MultiPoly, den: MultiPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(num, den))
    }

    fn reduce(&self, num: MultiPoly, den: MultiPoly) -> RatFunc {
        let f = &self.coeff;
        if num.is_zero() {
            return RatFunc { num, den: MultiPoly::one() };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den, f);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g, f).expect("gcd divides"), den.div_exact(&g, f).expect("gcd divides"))
            }
        };
        self.normalize(num, den)
    }

    fn normalize(&self, num: MultiPoly, den: MultiPoly) -> RatFunc {
        let lc = den.lead().expect("nonzero denominator").1;
        if lc == 1 {
            return RatFunc { num, den };
        }
        let inv = self.coeff.inv(&lc).expect("nonzero");
        RatFunc { num: num.scale(inv, &self.coeff), den: den.scale(inv, &self.coeff) }
    }

    pub fn format(&self, r: &RatFunc) -> String {
        let num = r.num.format(&self.coeff, &self.vars);
        if r.den.is_one() {
            return num;
        }
        let den = r.den.format(&self.coeff, &self.vars);
        let wrap = |s: String, p: &MultiPoly| if p.terms().len() > 1 || s.contains('*') { format!("({s})") } else { s };
        format!("{}/{}", wrap(num, &r.num), wrap(den, &r.den))
    }

    /// `r` at `point`, with coefficients moved into the extension by `emb`.
    pub fn evaluate(&self, r: &RatFunc, point: &[GfElem], emb: &RelativeBasis) -> Result<GfElem> {
        PointEvaluator::new(self, point, emb).eval(r)
    }

    /// Monic least common multiple of the denominators of all entries.
    pub fn denominator_lcm<'a>(&self, mats: impl IntoIterator<Item = &'a Mat<RatFunc>>) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for m in mats {
            for e in m.entries() {
                if !e.den.is_one() {
                    acc = lcm(&acc, &e.den, &self.coeff);
                }
            }
        }
        acc
    }
}

impl Field for FuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero())
    }

    fn one(&self) -> RatFunc {
        RatFunc::from_poly(MultiPoly::one())
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }

    fn is_one(&self, a: &RatFunc) -> bool {
        a.num.is_one() && a.den.is_one()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let f = &self.coeff;
        if a.num.is_zero() {
            return b.clone();
        }
        if b.num.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            let num = a.num.add(&b.num, f);
            if a.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return self.reduce(num, a.den.clone());
        }
        let num = a.num.mul(&b.den, f).add(&b.num.mul(&a.den, f), f);
        self.reduce(num, a.den.mul(&b.den, f))
    }

    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: a.num.neg(&self.coeff), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let f = &self.coeff;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatFunc::from_poly(a.num.mul(&b.num, f));
        }
        // Cross-cancel; both inputs are already reduced.
        let g1 = gcd(&a.num, &b.den, f);
        let g2 = gcd(&b.num, &a.den, f);
        let an = a.num.div_exact(&g1, f).unwrap();
        let bd = b.den.div_exact(&g1, f).unwrap();
        let bn = b.num.div_exact(&g2, f).unwrap();
        let ad = a.den.div_exact(&g2, f).unwrap();
        self.normalize(an.mul(&bn, f), ad.mul(&bd, f))
    }

    fn inv(&self, a: &RatFunc) -> Result<RatFunc> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn characteristic(&self) -> u64 {
        self.coeff.p()
    }

    fn from_int(&self, n: i64) -> RatFunc {
        self.constant(self.coeff.from_int(n))
    }
}

/// Evaluates polynomials at a fixed point, caching powers of each coordinate.
pub struct PointEvaluator<'a> {
    ff: &'a FuncField,
    emb: &'a RelativeBasis,
    point: &'a [GfElem],
    powers: Vec<Vec<GfElem>>,
}

impl<'a> PointEvaluator<'a> {
    pub fn new(ff: &'a FuncField, point: &'a [GfElem], emb: &'a RelativeBasis) -> Self {
        assert_eq!(point.len(), ff.nvars(), "point has wrong length");
        PointEvaluator { ff, emb, point, powers: vec![vec![1]; point.len()] }
    }

    fn power(&mut self, v: usize, e: u32) -> GfElem {
        let field = self.emb.ext();
        let table = &mut self.powers[v];
        while table.len() <= e as usize {
            let next = field.mul(table.last().unwrap(), &self.point[v]);
            table.push(next);
        }
        table[e as usize]
    }

    pub fn eval_poly(&mut self, p: &MultiPoly) -> GfElem {
        let field = self.emb.ext().clone();
        let mut acc = 0;
        for (m, c) in p.terms() {
            let mut t = self.emb.embed(*c);
            for v in 0..self.point.len() {
                if m.exp(v) > 0 {
                    t = field.mul(&t, &self.power(v, m.exp(v)));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    pub fn eval(&mut self, r: &RatFunc) -> Result<GfElem> {
        let num = self.eval_poly(&r.num);
        let den = if r.den.is_one() { 1 } else { self.eval_poly(&r.den) };
        if den == 0 {
            return Err(Error::NotAdmissible { denominator: r.den.format(self.ff.coeff_field(), self.ff.var_names()) });
        }
        Ok(self.emb.ext().div(&num, &den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Tower;

    fn f2x() -> FuncField {
        FuncField::new(Gf::prime(2).unwrap(), vec!["X".into()]).unwrap()
    }

    #[test]
    fn fraction_sum_cancels() {
        let ff = f2x();
        let x = ff.var(0);
        let one = ff.one();
        let a = ff.div(&ff.add(&x, &one), &x).unwrap();
        let b = ff.div(&one, &x).unwrap();
        assert_eq!(ff.add(&a, &b), one);
        assert_eq!(ff.add(&a, &ff.zero()), a);
    }

    #[test]
    fn multiplication_commutes() {
        let ff = FuncField::new(Gf::prime(3).unwrap(), vec!["X".into(), "Y".into()]).unwrap();
        let (x, y) = (ff.var(0), ff.var(1));
        assert_eq!(ff.mul(&x, &y), ff.mul(&y, &x));
    }

    #[test]
    fn canonical_equality() {
        let ff = f2x();
        let x = ff.var(0);
        let one = ff.one();
        // (X^2 + X) / (X^2) == (X + 1) / X
        let a = ff.div(&ff.add(&ff.mul(&x, &x), &x), &ff.mul(&x, &x)).unwrap();
        let b = ff.div(&ff.add(&x, &one), &x).unwrap();
        assert_eq!(a, b);
        assert_eq!(ff.inv(&ff.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let ff = f2x();
        let tower = Tower::new(ff.coeff_field().clone());
        let x = ff.var(0);
        let one = ff.one();
        let den = ff.add(&ff.add(&ff.mul(&x, &x), &x), &one);
        let r = ff.div(&ff.add(&x, &one), &den).unwrap();
        let e1 = tower.extension(1).unwrap();
        assert_eq!(ff.evaluate(&r, &[1], &e1.over_base).unwrap(), 0);
        assert_eq!(ff.evaluate(&ff.constant(1), &[0], &e1.over_base).unwrap(), 1);
        let e2 = tower.extension(2).unwrap();
        let t = e2.field().generator();
        let inv = ff.inv(&den).unwrap();
        assert!(matches!(ff.evaluate(&inv, &[t], &e2.over_base), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn denominator_lcm_examples() {
        let ff = f2x();
        let x = ff.var(0);
        let one = ff.one();
        let a = ff.inv(&x).unwrap();
        let b = ff.inv(&ff.add(&x, &one)).unwrap();
        let c = ff.inv(&ff.mul(&x, &x)).unwrap();
        let m1 = Mat::from_rows(vec![vec![a.clone(), b]]);
        let f = ff.coeff_field();
        let expect = MultiPoly::var(0).mul(&MultiPoly::var(0), f).add(&MultiPoly::var(0), f);
        assert_eq!(ff.denominator_lcm([&m1]), expect);
        let m2 = Mat::from_rows(vec![vec![x.clone(), one]]);
        assert!(ff.denominator_lcm([&m2]).is_one());
        let m3 = Mat::from_rows(vec![vec![a, c]]);
        assert_eq!(ff.denominator_lcm([&m3]), MultiPoly::var(0).mul(&MultiPoly::var(0), f));
    }

    #[test]
    fn format_fraction() {
        let ff = f2x();
        let x = ff.var(0);
        let r = ff.inv(&ff.add(&ff.mul(&x, &x), &x)).unwrap();
        assert_eq!(ff.format(&r), "1/(X^2 + X)");
    }
}
