//! Brute-force checks over the function field, used to validate the
//! decision procedures.

use std::collections::HashMap;

use crate::field::Field;
use crate::funcfield::{lcm, FuncField, Monomial, MultiPoly, RatFunc};
use crate::gf::GfElem;
use crate::linalg::{rank, Mat};
use crate::order::dimino;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureOutcome {
    Order(u64),
    /// More than `cap` elements; says nothing about finiteness.
    ExceededCap,
}

pub fn closure_oracle(ff: &FuncField, gens: &[Mat<RatFunc>], cap: usize) -> ClosureOutcome {
    closure_elements(ff, gens, cap).map_or(ClosureOutcome::ExceededCap, |els| ClosureOutcome::Order(els.len() as u64))
}

pub fn closure_elements(ff: &FuncField, gens: &[Mat<RatFunc>], cap: usize) -> Option<Vec<Mat<RatFunc>>> {
    dimino(gens, gens[0].rows(), ff, cap)
}

/// Coefficients `c_1, ..., c_n` of `det(x I - g) = x^n - c_1 x^(n-1) + ...`,
/// `c_k` being the sum of the principal `k x k` minors.
pub fn char_poly_coeffs<F: Field>(g: &Mat<F::Elem>, f: &F) -> Vec<F::Elem> {
    let n = g.rows();
    let mut out = vec![f.zero(); n];
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub = Mat::from_rows(idx.iter().map(|&r| idx.iter().map(|&c| g.get(r, c).clone()).collect()).collect());
        let k = idx.len() - 1;
        out[k] = f.add(&out[k], &sub.determinant(f));
    }
    out
}

/// An element of infinite order: its characteristic polynomial has a
/// coefficient outside `F_q`, which a root of unity's would not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfiniteOrderCertificate {
    pub word: Vec<usize>,
    /// Index `k` of the non-constant `c_(k+1)`.
    pub coefficient: usize,
}

/// Searches words in the generators of length at most `max_len`, shortest
/// first.
pub fn infinite_order_certificate(
    ff: &FuncField,
    gens: &[Mat<RatFunc>],
    max_len: usize,
) -> Option<InfiniteOrderCertificate> {
    let mut layer: Vec<(Vec<usize>, Mat<RatFunc>)> = vec![(Vec::new(), Mat::identity(ff, gens[0].rows()))];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * gens.len());
        for (w, m) in &layer {
            for (j, g) in gens.iter().enumerate() {
                let mut w2 = w.clone();
                w2.push(j);
                let m2 = m.mul(g, ff);
                let cs = char_poly_coeffs(&m2, ff);
                if let Some(k) = cs.iter().position(|c| c.as_constant().is_none()) {
                    return Some(InfiniteOrderCertificate { word: w2, coefficient: k });
                }
                next.push((w2, m2));
            }
        }
        layer = next;
    }
    None
}

/// Dimension over `F_q` of the `F_q`-span of matrices over `F_q(X)`; equal to
/// the dimension of their span over any finite extension of `F_q`.
pub fn span_dimension(ff: &FuncField, mats: &[Mat<RatFunc>]) -> usize {
    let f = ff.coeff_field();
    let mut den = MultiPoly::one();
    for m in mats {
        for e in m.entries() {
            den = lcm(&den, e.den(), f);
        }
    }
    let mut columns: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, GfElem)>> = Vec::new();
    for m in mats {
        let mut row = Vec::new();
        for (i, e) in m.entries().iter().enumerate() {
            let scaled = e.num().mul(&den.div_exact(e.den(), f).expect("lcm is a multiple"), f);
            for (mono, c) in scaled.terms() {
                let next = columns.len();
                let col = *columns.entry((i, *mono)).or_insert(next);
                row.push((col, *c));
            }
        }
        rows.push(row);
    }
    let width = columns.len();
    if width == 0 {
        return 0;
    }
    let dense: Vec<Vec<GfElem>> = rows
        .into_iter()
        .map(|r| {
            let mut v = vec![0; width];
            for (c, x) in r {
                v[c] = x;
            }
            v
        })
        .collect();
    rank(&Mat::from_rows(dense), f)
}

/// Multiplicative order of `g` by repeated multiplication, up to `cap`.
pub fn element_order<F: Field>(g: &Mat<F::Elem>, f: &F, cap: u64) -> Option<u64> {
    let mut x = g.clone();
    for k in 1..=cap {
        if x.is_identity(f) {
            return Some(k);
        }
        x = x.mul(g, f);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn f2x() -> FuncField {
        FuncField::new(Gf::prime(2).unwrap(), vec!["X".into()]).unwrap()
    }

    fn unipotent_pair(ff: &FuncField) -> Vec<Mat<RatFunc>> {
        vec![
            Mat::from_rows(vec![vec![ff.one(), ff.one()], vec![ff.zero(), ff.one()]]),
            Mat::from_rows(vec![vec![ff.one(), ff.var(0)], vec![ff.zero(), ff.one()]]),
        ]
    }

    #[test]
    fn closure_examples() {
        let ff = f2x();
        assert_eq!(closure_oracle(&ff, &[Mat::identity(&ff, 2)], 10), ClosureOutcome::Order(1));
        assert_eq!(closure_oracle(&ff, &unipotent_pair(&ff), 100), ClosureOutcome::Order(4));
        let d = Mat::from_rows(vec![vec![ff.var(0), ff.zero()], vec![ff.zero(), ff.one()]]);
        assert_eq!(closure_oracle(&ff, &[d.clone()], 100), ClosureOutcome::ExceededCap);
        let cert = infinite_order_certificate(&ff, &[d], 2).unwrap();
        assert_eq!(cert.word, vec![0]);
    }

    #[test]
    fn span_of_unipotent_pair_is_three() {
        let ff = f2x();
        let els = closure_elements(&ff, &unipotent_pair(&ff), 100).unwrap();
        assert_eq!(span_dimension(&ff, &els), 3);
    }

    #[test]
    fn char_poly_of_companion() {
        let f = Gf::prime(5).unwrap();
        // x^2 - 3x + 2 has c_1 = 3, c_2 = 2.
        let m = Mat::from_rows(vec![vec![0, 3], vec![1, 3]]);
        assert_eq!(char_poly_coeffs(&m, &f), vec![3, 2]);
    }
}
