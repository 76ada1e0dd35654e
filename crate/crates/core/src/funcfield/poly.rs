//! Sparse multivariate polynomials over a finite field, graded-lex ordered.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::field::Field;
use crate::gf::{Gf, GfElem};

pub const MAX_VARS: usize = 8;

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then exponent of `X_1`, then `X_2`, ...
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        m
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = a.checked_sub(b)?;
        }
        Some(m)
    }

    fn with_exp(&self, i: usize, e: u32) -> Self {
        let mut m = *self;
        m.exps[i] = e;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as terms sorted by strictly decreasing monomial, no zero
/// coefficients. The coefficient field is supplied to every operation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, GfElem)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn constant(c: GfElem) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn var(i: usize) -> Self {
        Self::term(1, Monomial::var(i))
    }

    pub fn term(c: GfElem, m: Monomial) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(f: &Gf, terms: impl IntoIterator<Item = (Monomial, GfElem)>) -> Self {
        let mut acc: BTreeMap<Monomial, GfElem> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(e, &c);
        }
        MultiPoly { terms: acc.into_iter().rev().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn terms(&self) -> &[(Monomial, GfElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GfElem> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    /// Leading term under graded-lex.
    pub fn lead(&self) -> Option<&(Monomial, GfElem)> {
        self.terms.first()
    }

    /// Total degree; `None` is the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn add(&self, other: &Self, f: &Gf) -> Self {
        self.merge(other, f, false)
    }

    pub fn sub(&self, other: &Self, f: &Gf) -> Self {
        self.merge(other, f, true)
    }

    fn merge(&self, other: &Self, f: &Gf, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &GfElem| if negate { f.neg(c) } else { *c };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((*ma, *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, conv(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, &conv(cb));
                    if c != 0 {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|(m, c)| (*m, conv(c))));
        MultiPoly { terms: out }
    }

    pub fn neg(&self, f: &Gf) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
    }

    pub fn scale(&self, c: GfElem, f: &Gf) -> Self {
        if c == 0 {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, &c))).collect() }
    }

    pub fn mul_term(&self, c: GfElem, mono: &Monomial, f: &Gf) -> Self {
        if c == 0 {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), f.mul(a, &c))).collect() }
    }

    pub fn mul(&self, other: &Self, f: &Gf) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(c, f);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c, f);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(c, &m, f);
        }
        let mut acc: BTreeMap<Monomial, GfElem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        MultiPoly { terms: acc.into_iter().rev().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn pow(&self, e: u32, f: &Gf) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, f: &Gf) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(f.inv(c).expect("nonzero"), f),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self, f: &Gf) -> Option<Self> {
        let (dm, dc) = *d.lead()?;
        if d.terms.len() == 1 {
            let inv = f.inv(&dc).ok()?;
            let terms: Option<Vec<_>> =
                self.terms.iter().map(|(m, c)| Some((m.div(&dm)?, f.mul(c, &inv)))).collect();
            return Some(MultiPoly { terms: terms? });
        }
        let inv = f.inv(&dc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(&(rm, rc)) = rem.lead() {
            let qm = rm.div(&dm)?;
            let qc = f.mul(&rc, &inv);
            rem = rem.sub(&d.mul_term(qc, &qm, f), f);
            quot.push((qm, qc));
        }
        Some(MultiPoly { terms: quot })
    }

    /// Coefficients with respect to variable `v`: entry `i` multiplies `v^i`
    /// and does not involve `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(); deg + 1];
        // Terms stay in decreasing order within each bucket: stripping one
        // variable preserves grlex order among monomials sharing its exponent.
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].terms.push((m.with_exp(v, 0), *c));
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[MultiPoly], f: &Gf) -> Self {
        let terms = coeffs.iter().enumerate().flat_map(|(i, c)| {
            c.terms.iter().map(move |(m, a)| (m.with_exp(v, m.exp(v) + i as u32), *a))
        });
        Self::from_terms(f, terms)
    }

    pub fn format(&self, f: &Gf, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let mono: Vec<String> = (0..vars.len())
                .filter(|&i| m.exp(i) > 0)
                .map(|i| if m.exp(i) == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], m.exp(i)) })
                .collect();
            let coeff = format_coeff(f, *c);
            match (mono.is_empty(), *c == 1) {
                (true, _) => s.push_str(&coeff),
                (false, true) => s.push_str(&mono.join("*")),
                (false, false) => {
                    let _ = write!(s, "{}*{}", coeff, mono.join("*"));
                }
            }
        }
        s
    }
}

/// Coefficient as an integer (prime field) or a parenthesized polynomial in `t`.
pub fn format_coeff(f: &Gf, c: GfElem) -> String {
    if f.degree() == 1 {
        return c.to_string();
    }
    let parts: Vec<String> = f
        .coeffs(c)
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| match (i, d) {
            (0, d) => d.to_string(),
            (1, 1) => "t".into(),
            (1, d) => format!("{d}*t"),
            (i, 1) => format!("t^{i}"),
            (i, d) => format!("{d}*t^{i}"),
        })
        .collect();
    match parts.len() {
        0 => "0".into(),
        1 if !parts[0].contains('+') => parts[0].clone(),
        _ => format!("({})", parts.join(" + ")),
    }
}

/// Monic gcd by recursive content / primitive-part reduction down to
/// univariate pseudo-remainder sequences.
pub fn gcd(a: &MultiPoly, b: &MultiPoly, f: &Gf) -> MultiPoly {
    if a.is_zero() {
        return b.monic(f);
    }
    if b.is_zero() || a == b {
        return a.monic(f);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let v = match (0..MAX_VARS).rev().find(|&v| a.uses_var(v) || b.uses_var(v)) {
        Some(v) => v,
        None => return MultiPoly::one(),
    };
    let ca = content(a, v, f);
    let cb = content(b, v, f);
    let c = gcd(&ca, &cb, f);
    let pa = a.div_exact(&ca, f).expect("content divides");
    let pb = b.div_exact(&cb, f).expect("content divides");
    let g = primitive_gcd(pa, pb, v, f);
    c.mul(&g, f).monic(f)
}

/// Gcd of the coefficients with respect to `v`.
pub fn content(a: &MultiPoly, v: usize, f: &Gf) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in a.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c, f);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part(a: &MultiPoly, v: usize, f: &Gf) -> MultiPoly {
    let c = content(a, v, f);
    a.div_exact(&c, f).expect("content divides")
}

fn primitive_gcd(mut a: MultiPoly, mut b: MultiPoly, v: usize, f: &Gf) -> MultiPoly {
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree_in(v) == Some(0) {
            return MultiPoly::one();
        }
        let r = pseudo_rem(&a, &b, v, f);
        if r.is_zero() {
            return b;
        }
        a = b;
        b = primitive_part(&r, v, f);
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, viewing both as polynomials in `v`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: usize, f: &Gf) -> MultiPoly {
    let mut ra = a.coeffs_in(v);
    let rb = b.coeffs_in(v);
    let db = rb.len() - 1;
    let lb = rb[db].clone();
    while ra.len() > db && !ra.is_empty() {
        let da = ra.len() - 1;
        let la = ra[da].clone();
        for c in ra.iter_mut() {
            *c = c.mul(&lb, f);
        }
        for (i, c) in rb.iter().enumerate() {
            let idx = da - db + i;
            ra[idx] = ra[idx].sub(&la.mul(c, f), f);
        }
        ra.pop();
        while ra.last().is_some_and(|c| c.is_zero()) {
            ra.pop();
        }
    }
    MultiPoly::from_coeffs_in(v, &ra, f)
}

pub fn lcm(a: &MultiPoly, b: &MultiPoly, f: &Gf) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let g = gcd(a, b, f);
    a.div_exact(&g, f).expect("gcd divides").mul(b, f).monic(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(0)
    }

    fn y() -> MultiPoly {
        MultiPoly::var(1)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exponents(&[2, 0]);
        let b = Monomial::from_exponents(&[1, 1]);
        let c = Monomial::from_exponents(&[0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn gcd_univariate_example() {
        let f = Gf::prime(2).unwrap();
        let a = x().mul(&x(), &f).add(&x(), &f);
        assert_eq!(gcd(&a, &x(), &f), x());
        assert_eq!(gcd(&a, &MultiPoly::one(), &f), MultiPoly::one());
    }

    #[test]
    fn gcd_with_content() {
        let f = Gf::prime(2).unwrap();
        let one = MultiPoly::one();
        let xy_y = x().mul(&y(), &f).add(&y(), &f);
        let x1 = x().add(&one, &f);
        assert_eq!(gcd(&xy_y, &x1, &f), x1);
    }

    #[test]
    fn exact_division() {
        let f = Gf::prime(3).unwrap();
        let a = x().add(&y(), &f);
        let b = x().sub(&y(), &f).add(&MultiPoly::one(), &f);
        let prod = a.mul(&b, &f);
        assert_eq!(prod.div_exact(&a, &f), Some(b.clone()));
        assert_eq!(prod.div_exact(&b, &f), Some(a));
        assert_eq!(x().div_exact(&y(), &f), None);
    }

    #[test]
    fn lcm_examples() {
        let f = Gf::prime(2).unwrap();
        let x1 = x().add(&MultiPoly::one(), &f);
        assert_eq!(lcm(&x(), &x1, &f), x().mul(&x(), &f).add(&x(), &f));
        let x2 = x().mul(&x(), &f);
        assert_eq!(lcm(&x(), &x2, &f), x2);
    }

    #[test]
    fn format_polynomial() {
        let f = Gf::new(2, vec![1, 1, 1]).unwrap();
        let vars = vec!["X".to_string()];
        let p = MultiPoly::from_terms(
            &f,
            [(Monomial::from_exponents(&[2]), 1), (Monomial::from_exponents(&[1]), 3), (Monomial::one(), 1)],
        );
        assert_eq!(p.format(&f, &vars), "X^2 + (t + 1)*X + 1");
    }
}
