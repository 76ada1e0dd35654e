use super::{rref, Mat};
use crate::error::{Error, Result};
use crate::field::Field;

/// Subspace of `K^n` stored as the nonzero rows of a reduced row echelon
/// matrix, so equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn from_vectors<F: Field<Elem = E>>(ambient: usize, vectors: Vec<Vec<E>>, f: &F) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Mat::from_rows(vectors);
        assert_eq!(m.cols(), ambient, "vector length mismatch");
        let r = rref(&m, f);
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots: r.pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full<F: Field<Elem = E>>(ambient: usize, f: &F) -> Self {
        Self::from_vectors(ambient, Mat::identity(f, ambient).transpose().row_vectors(), f)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains<F: Field<Elem = E>>(&self, v: &[E], f: &F) -> bool {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !f.is_zero(&c) {
                for (x, y) in w.iter_mut().zip(b) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        w.iter().all(|x| f.is_zero(x))
    }

    /// `g U`.
    pub fn image<F: Field<Elem = E>>(&self, g: &Mat<E>, f: &F) -> Self {
        let vs = self.basis.iter().map(|b| g.mul_vec(b, f)).collect();
        Self::from_vectors(self.ambient, vs, f)
    }

    pub fn sum<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let vs = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::from_vectors(self.ambient, vs, f)
    }

    /// Intersection by the Zassenhaus construction: reduce rows `[u | u]`
    /// and `[w | 0]`; rows with vanishing left half span `U ∩ W`.
    pub fn intersect<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let n = self.ambient;
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(n);
        }
        let mut rows = Vec::new();
        for u in &self.basis {
            rows.push(u.iter().chain(u).cloned().collect::<Vec<_>>());
        }
        for w in &other.basis {
            rows.push(w.iter().cloned().chain(std::iter::repeat(f.zero()).take(n)).collect());
        }
        let r = rref(&Mat::from_rows(rows), f);
        let vs = (0..r.rank)
            .filter(|&i| r.pivots[i] >= n)
            .map(|i| r.matrix.row(i)[n..].to_vec())
            .collect();
        Self::from_vectors(n, vs, f)
    }

    /// Basis of `U` followed by the standard vectors at non-pivot positions
    /// (ascending), as the columns of an invertible matrix.
    pub fn completed_basis<F: Field<Elem = E>>(&self, f: &F) -> Mat<E> {
        let n = self.ambient;
        let mut cols: Vec<Vec<E>> = self.basis.clone();
        for j in (0..n).filter(|j| !self.pivots.contains(j)) {
            let mut e = vec![f.zero(); n];
            e[j] = f.one();
            cols.push(e);
        }
        Mat::from_rows(cols).transpose()
    }
}

impl<E: Clone> Mat<E> {
    fn row_vectors(&self) -> Vec<Vec<E>> {
        (0..self.rows()).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Block-triangular decomposition along an invariant subspace.
#[derive(Clone, Debug)]
pub struct InducedActions<E> {
    /// Columns: basis of `U`, then complement vectors.
    pub basis_change: Mat<E>,
    pub basis_change_inv: Mat<E>,
    /// Action on `U` (`dim U` square), one per input matrix.
    pub on_sub: Vec<Mat<E>>,
    /// Action on `V/U`.
    pub on_quotient: Vec<Mat<E>>,
    /// Upper-right blocks.
    pub off_diagonal: Vec<Mat<E>>,
}

impl<E: Clone> InducedActions<E> {
    /// Reassembles the conjugated block-triangular form of matrix `i`.
    pub fn assembled<F: Field<Elem = E>>(&self, i: usize, f: &F) -> Mat<E> {
        let d = self.on_sub[i].rows();
        let n = d + self.on_quotient[i].rows();
        let mut m = Mat::zeros(f, n, n);
        for r in 0..n {
            for c in 0..n {
                let v = match (r < d, c < d) {
                    (true, true) => self.on_sub[i].get(r, c).clone(),
                    (true, false) => self.off_diagonal[i].get(r, c - d).clone(),
                    (false, false) => self.on_quotient[i].get(r - d, c - d).clone(),
                    (false, true) => continue,
                };
                m.set(r, c, v);
            }
        }
        m
    }
}

/// Actions of `gens` (which must leave `u` invariant) and of the further
/// matrices `extra` on `U` and `V/U`. Invariance of `u` under `extra` is
/// not required but its lower-left blocks must vanish too.
pub fn induced_actions<F: Field>(
    gens: &[Mat<F::Elem>],
    extra: &[Mat<F::Elem>],
    u: &Subspace<F::Elem>,
    f: &F,
) -> Result<InducedActions<F::Elem>> {
    let n = u.ambient();
    let d = u.dim();
    let b = u.completed_basis(f);
    let b_inv = b.inverse(f)?;
    let mut out = InducedActions {
        basis_change: b.clone(),
        basis_change_inv: b_inv.clone(),
        on_sub: Vec::new(),
        on_quotient: Vec::new(),
        off_diagonal: Vec::new(),
    };
    for (index, g) in gens.iter().chain(extra).enumerate() {
        let c = b_inv.mul(g, f).mul(&b, f);
        if !c.block(d, n, 0, d).is_zero(f) {
            return Err(Error::NotInvariant { index });
        }
        out.on_sub.push(c.block(0, d, 0, d));
        out.on_quotient.push(c.block(d, n, d, n));
        out.off_diagonal.push(c.block(0, d, d, n));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::FuncField;
    use crate::gf::Gf;

    #[test]
    fn coordinate_subspace_intersection() {
        let f = Gf::prime(5).unwrap();
        let e = |i: usize| {
            let mut v = vec![0u32; 3];
            v[i] = 1;
            v
        };
        let u = Subspace::from_vectors(3, vec![e(0), e(1)], &f);
        let w = Subspace::from_vectors(3, vec![e(1), e(2)], &f);
        assert_eq!(u.intersect(&w, &f), Subspace::from_vectors(3, vec![e(1)], &f));
        assert_eq!(u.intersect(&u, &f), u);
    }

    #[test]
    fn skew_lines_meet_in_zero() {
        let f = Gf::prime(2).unwrap();
        let u = Subspace::from_vectors(2, vec![vec![1, 1]], &f);
        let w = Subspace::from_vectors(2, vec![vec![1, 0]], &f);
        assert_eq!(u.intersect(&w, &f).dim(), 0);
    }

    #[test]
    fn induced_actions_examples() {
        let f = Gf::prime(2).unwrap();
        let s = Mat::from_rows(vec![vec![1, 1], vec![0, 1]]);
        let u = Subspace::from_vectors(2, vec![vec![1, 0]], &f);
        let ia = induced_actions(&[s.clone()], &[], &u, &f).unwrap();
        assert_eq!(ia.on_sub[0], Mat::from_rows(vec![vec![1]]));
        assert_eq!(ia.on_quotient[0], Mat::from_rows(vec![vec![1]]));
        let conj = ia.basis_change_inv.mul(&s, &f).mul(&ia.basis_change, &f);
        assert_eq!(ia.assembled(0, &f), conj);

        let full = Subspace::full(2, &f);
        let ia = induced_actions(&[s.clone()], &[], &full, &f).unwrap();
        assert_eq!(ia.on_sub[0], s);
        assert_eq!(ia.on_quotient[0].rows(), 0);

        let ff = FuncField::new(f.clone(), vec!["X".into()]).unwrap();
        let d = Mat::from_rows(vec![vec![ff.var(0), ff.zero()], vec![ff.zero(), ff.one()]]);
        let u2 = Subspace::from_vectors(2, vec![vec![ff.zero(), ff.one()]], &ff);
        let ia = induced_actions(&[d], &[], &u2, &ff).unwrap();
        assert_eq!(ia.on_sub[0], Mat::from_rows(vec![vec![ff.one()]]));
        assert_eq!(ia.on_quotient[0], Mat::from_rows(vec![vec![ff.var(0)]]));
    }

    #[test]
    fn non_invariant_subspace_rejected() {
        let f = Gf::prime(2).unwrap();
        let s = Mat::from_rows(vec![vec![1, 0], vec![1, 1]]);
        let u = Subspace::from_vectors(2, vec![vec![1, 0]], &f);
        assert_eq!(induced_actions(&[s], &[], &u, &f).unwrap_err(), Error::NotInvariant { index: 0 });
    }
}
