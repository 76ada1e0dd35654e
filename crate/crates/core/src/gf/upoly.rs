//! Dense univariate polynomials over a field, used for defining-polynomial
//! searches and root finding inside extension fields.

use crate::field::Field;

/// Coefficients low-to-high, no trailing zeros. The zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> UPoly<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| f.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        Self::new(f, vec![c])
    }

    /// The monomial `c * X^d`.
    pub fn monomial<F: Field<Elem = E>>(f: &F, c: E, d: usize) -> Self {
        let mut coeffs = vec![f.zero(); d + 1];
        coeffs[d] = c;
        Self::new(f, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(f, out)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, f: &F) -> Self {
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn divrem<F: Field<Elem = E>>(&self, d: &Self, f: &F) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv_lead = f.inv(d.lead().unwrap()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let c = f.mul(&rem[i], &inv_lead);
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, dc));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem<F: Field<Elem = E>>(&self, d: &Self, f: &F) -> Self {
        self.divrem(d, f).1
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let inv = f.inv(l).expect("nonzero leading coefficient");
                self.scale(&inv, f)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^e mod m`.
    pub fn powmod<F: Field<Elem = E>>(&self, mut e: u64, m: &Self, f: &F) -> Self {
        let mut base = self.rem(m, f);
        let mut acc = Self::constant(f, f.one()).rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f).rem(m, f);
            }
        }
        acc
    }

    pub fn eval<F: Field<Elem = E>>(&self, x: &E, f: &F) -> E {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    #[test]
    fn divrem_reconstructs() {
        let f = Gf::prime(5).unwrap();
        let a = UPoly::new(&f, vec![1, 2, 3, 4, 1]);
        let d = UPoly::new(&f, vec![2, 0, 1]);
        let (q, r) = a.divrem(&d, &f);
        assert!(r.degree().map_or(true, |x| x < 2));
        assert_eq!(q.mul(&d, &f).add(&r, &f), a);
    }

    #[test]
    fn gcd_of_multiples() {
        let f = Gf::prime(3).unwrap();
        let g = UPoly::new(&f, vec![1, 1]);
        let a = g.mul(&UPoly::new(&f, vec![2, 0, 1]), &f);
        let b = g.mul(&UPoly::new(&f, vec![0, 1]), &f);
        assert_eq!(a.gcd(&b, &f), g);
    }
}
