//! Finite fields `F_p[t]/(f)` and the towers built from them.
//!
//! An element is stored as its coefficient vector over `F_p` packed into a
//! single `u32`: the coefficient of `t^i` is the `i`-th base-`p` digit. The
//! packed value doubles as a canonical index in `[0, p^k)`, which gives a
//! total order used for deterministic enumeration.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

pub mod tower;
pub mod upoly;

pub use tower::{embed, embeddings, roots, Embedding, Extension, RelativeBasis, Tower};
pub use upoly::UPoly;

/// Packed element of a finite field. Only meaningful together with its [`Gf`].
pub type GfElem = u32;

/// Largest field size handled.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

const MAX_DEGREE: usize = 20;

#[derive(Clone)]
pub struct Gf {
    inner: Arc<GfInner>,
}

#[derive(PartialEq, Eq)]
struct GfInner {
    p: u64,
    k: usize,
    size: u64,
    /// Monic defining polynomial, low-to-high, length `k + 1`.
    modulus: Vec<u64>,
    /// Bit mask of the modulus below its leading term (characteristic 2 only).
    low_bits: u64,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.inner.p, self.inner.k, self.inner.modulus)
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    /// Field `F_p[t]/(modulus)`; `modulus` is monic, low-to-high.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidInput("defining polynomial must be monic of degree >= 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput("defining polynomial coefficients must lie in [0, p)".into()));
        }
        let k = modulus.len() - 1;
        let size = p.checked_pow(k as u32).filter(|&s| s <= MAX_FIELD_SIZE).ok_or_else(|| {
            Error::ResourceLimit(format!("field of size {p}^{k} exceeds {MAX_FIELD_SIZE}"))
        })?;
        if k > 1 && !is_irreducible(p, &modulus) {
            return Err(Error::InvalidInput(format!("{modulus:?} is reducible over F_{p}")));
        }
        let low_bits = if p == 2 {
            modulus[..k].iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        Ok(Gf { inner: Arc::new(GfInner { p, k, size, modulus, low_bits }) })
    }

    /// `F_{p^k}` with the deterministic smallest defining polynomial.
    pub fn with_degree(p: u64, k: usize) -> Result<Self> {
        if k == 1 {
            return Self::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if (p as f64).powi(k as i32) > MAX_FIELD_SIZE as f64 {
            return Err(Error::ResourceLimit(format!("field of size {p}^{k} exceeds {MAX_FIELD_SIZE}")));
        }
        Self::new(p, find_irreducible::<rand_chacha::ChaCha8Rng>(p, k, None))
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.inner.k
    }

    pub fn size(&self) -> u64 {
        self.inner.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn contains(&self, a: GfElem) -> bool {
        (a as u64) < self.inner.size
    }

    /// The class of `t`.
    pub fn generator(&self) -> GfElem {
        if self.inner.k == 1 {
            // F_p[t]/(t): the generator is 0.
            0
        } else {
            self.inner.p as GfElem
        }
    }

    pub fn coeffs(&self, a: GfElem) -> Vec<u64> {
        let p = self.inner.p;
        let mut x = a as u64;
        (0..self.inner.k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<GfElem> {
        if coeffs.len() > self.inner.k || coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(Error::InvalidInput(format!("{coeffs:?} is not an element of {self:?}")));
        }
        Ok(self.encode(coeffs))
    }

    fn encode(&self, digits: &[u64]) -> GfElem {
        let p = self.inner.p;
        digits.iter().rev().fold(0u64, |acc, &d| acc * p + d) as GfElem
    }

    fn decode(&self, a: GfElem, out: &mut [u64; MAX_DEGREE]) {
        let p = self.inner.p;
        let mut x = a as u64;
        for d in out.iter_mut().take(self.inner.k) {
            *d = x % p;
            x /= p;
        }
    }

    /// `a^q`; a field automorphism whenever `q` is a power of `p`.
    pub fn frobenius(&self, a: GfElem, q: u64) -> GfElem {
        self.pow(&a, q)
    }

    /// `a + a^q + ... + a^(q^(nu-1))`, which lies in the subfield of size `q`.
    pub fn trace_orbit(&self, a: GfElem, q: u64, nu: usize) -> GfElem {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..nu {
            acc = self.add(&acc, &x);
            x = self.frobenius(x, q);
        }
        acc
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> GfElem {
        rng.gen_range(0..self.inner.size) as GfElem
    }

    pub fn elements(&self) -> impl Iterator<Item = GfElem> {
        0..self.inner.size as GfElem
    }

    /// Characteristic-2 product: carry-less multiply then reduce.
    fn mul_char2(&self, a: u64, b: u64) -> GfElem {
        let k = self.inner.k;
        let mut prod = 0u64;
        let mut x = a;
        let mut i = 0;
        while x != 0 {
            if x & 1 == 1 {
                prod ^= b << i;
            }
            x >>= 1;
            i += 1;
        }
        let full = self.inner.low_bits | (1 << k);
        let mut bit = 2 * k;
        while bit >= k {
            if prod >> bit & 1 == 1 {
                prod ^= full << (bit - k);
            }
            if bit == 0 {
                break;
            }
            bit -= 1;
        }
        prod as GfElem
    }

    fn mul_general(&self, a: GfElem, b: GfElem) -> GfElem {
        let k = self.inner.k;
        let p = self.inner.p;
        let mut da = [0u64; MAX_DEGREE];
        let mut db = [0u64; MAX_DEGREE];
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let m = &self.inner.modulus;
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            // t^i = t^(i-k) * t^k and t^k = -sum m_j t^j.
            for (j, &mj) in m[..k].iter().enumerate() {
                let idx = i - k + j;
                prod[idx] = (prod[idx] + (p - mj) * c) % p;
            }
            prod[i] = 0;
        }
        self.encode(&prod[..k])
    }
}

impl Field for Gf {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        0
    }

    fn one(&self) -> GfElem {
        1
    }

    fn is_zero(&self, a: &GfElem) -> bool {
        *a == 0
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let p = self.inner.p;
        if p == 2 {
            return a ^ b;
        }
        if self.inner.k == 1 {
            return ((*a as u64 + *b as u64) % p) as GfElem;
        }
        let mut da = [0u64; MAX_DEGREE];
        let mut db = [0u64; MAX_DEGREE];
        self.decode(*a, &mut da);
        self.decode(*b, &mut db);
        for i in 0..self.inner.k {
            da[i] = (da[i] + db[i]) % p;
        }
        self.encode(&da[..self.inner.k])
    }

    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &GfElem) -> GfElem {
        let p = self.inner.p;
        if p == 2 {
            return *a;
        }
        if self.inner.k == 1 {
            return ((p - *a as u64) % p) as GfElem;
        }
        let mut da = [0u64; MAX_DEGREE];
        self.decode(*a, &mut da);
        for d in da.iter_mut().take(self.inner.k) {
            *d = (p - *d) % p;
        }
        self.encode(&da[..self.inner.k])
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if *a == 0 || *b == 0 {
            return 0;
        }
        if self.inner.k == 1 {
            return ((*a as u64 * *b as u64) % self.inner.p) as GfElem;
        }
        if self.inner.p == 2 {
            return self.mul_char2(*a as u64, *b as u64);
        }
        self.mul_general(*a, *b)
    }

    fn inv(&self, a: &GfElem) -> Result<GfElem> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.inner.size - 2))
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn from_int(&self, n: i64) -> GfElem {
        n.rem_euclid(self.inner.p as i64) as GfElem
    }
}

/// Irreducibility over `F_p` via `gcd(f, X^(p^i) - X) = 1` for `i <= deg/2`.
pub fn is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let fp = Gf::prime(p).expect("prime");
    let f = UPoly::new(&fp, coeffs.iter().map(|&c| c as GfElem).collect());
    let d = match f.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    let x = UPoly::monomial(&fp, 1, 1);
    let mut h = x.clone();
    for _ in 0..d / 2 {
        h = h.powmod(p, &f, &fp);
        let g = f.gcd(&h.sub(&x, &fp), &fp);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

/// A monic irreducible polynomial of degree `d` over `F_p`, low-to-high.
///
/// Without an RNG the result is the irreducible polynomial with the smallest
/// packed index (lower coefficients as base-`p` digits), so it is reproducible.
pub fn find_irreducible<R: Rng>(p: u64, d: usize, rng: Option<&mut R>) -> Vec<u64> {
    assert!(d >= 1, "degree must be positive");
    let total = p.pow(d as u32);
    let to_poly = |mut idx: u64| {
        let mut c: Vec<u64> = (0..d)
            .map(|_| {
                let r = idx % p;
                idx /= p;
                r
            })
            .collect();
        c.push(1);
        c
    };
    match rng {
        None => (0..total).map(to_poly).find(|c| is_irreducible(p, c)).expect("irreducibles exist"),
        Some(rng) => loop {
            let c = to_poly(rng.gen_range(0..total));
            if is_irreducible(p, &c) {
                return c;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f4() -> Gf {
        Gf::new(2, vec![1, 1, 1]).unwrap()
    }

    fn f9() -> Gf {
        Gf::new(3, vec![1, 0, 1]).unwrap()
    }

    #[test]
    fn f4_generator_squared() {
        let f = f4();
        let t = f.generator();
        assert_eq!(f.coeffs(f.mul(&t, &t)), vec![1, 1]);
    }

    #[test]
    fn f5_addition() {
        let f = Gf::prime(5).unwrap();
        assert_eq!(f.add(&2, &3), 0);
    }

    #[test]
    fn f9_inverse_of_t() {
        let f = f9();
        let t = f.generator();
        let inv = f.inv(&t).unwrap();
        assert_eq!(f.coeffs(inv), vec![0, 2]);
        assert_eq!(f.mul(&t, &inv), 1);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = f9();
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
        assert_eq!(f.div(&1, &0), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_examples() {
        let f = f4();
        let t = f.generator();
        assert_eq!(f.coeffs(f.frobenius(t, 2)), vec![1, 1]);
        assert_eq!(f.frobenius(1, 2), 1);
        let g = f9();
        let t = g.generator();
        assert_eq!(g.coeffs(g.frobenius(t, 3)), vec![0, 2]);
    }

    #[test]
    fn trace_examples() {
        let f = f4();
        assert_eq!(f.trace_orbit(f.generator(), 2, 2), 1);
        assert_eq!(f.trace_orbit(1, 2, 2), 0);
        assert_eq!(f.trace_orbit(f.generator(), 4, 1), f.generator());
    }

    #[test]
    fn irreducible_search_examples() {
        let none: Option<&mut ChaCha8Rng> = None;
        assert_eq!(find_irreducible(2, 1, none), vec![0, 1]);
        let none: Option<&mut ChaCha8Rng> = None;
        assert_eq!(find_irreducible(2, 2, none), vec![1, 1, 1]);
        // Enumeration oracle: degree-2 monics over F_3 without roots.
        let roots_free: Vec<Vec<u64>> = (0..9)
            .map(|i| vec![i % 3, i / 3, 1])
            .filter(|c| (0..3).all(|x| (c[0] + c[1] * x + x * x) % 3 != 0))
            .collect();
        assert_eq!(roots_free, vec![vec![1, 0, 1], vec![2, 1, 1], vec![2, 2, 1]]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let c = find_irreducible(3, 2, Some(&mut rng));
            assert!(roots_free.contains(&c));
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Gf::new(2, vec![1, 0, 1]).is_err());
        assert!(Gf::new(4, vec![0, 1]).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in [f4(), f9(), Gf::with_degree(5, 2).unwrap(), Gf::with_degree(2, 5).unwrap()] {
            for a in f.elements() {
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
                // a^|F| = a
                assert_eq!(f.pow(&a, f.size()), a);
            }
        }
    }

    #[test]
    fn char2_mul_matches_general_path() {
        let f = Gf::with_degree(2, 6).unwrap();
        for a in f.elements().step_by(3) {
            for b in f.elements().step_by(5) {
                assert_eq!(f.mul(&a, &b), if a == 0 || b == 0 { 0 } else { f.mul_general(a, b) });
            }
        }
    }
}
