use crate::field::Field;

/// Echelon state grown one vector at a time. Each stored row remembers its
/// expression in the inserted vectors, so membership tests also return
/// coordinates.
#[derive(Clone, Debug)]
pub struct IncrementalEchelon<E> {
    len: usize,
    /// Rows with pivot entry 1; entries at earlier rows' pivots are zero.
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
    /// `rows[i] = sum combos[i][k] * inserted[k]`.
    combos: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq> IncrementalEchelon<E> {
    pub fn new(len: usize) -> Self {
        IncrementalEchelon { len, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// Reduces `v`; returns the residue and the multipliers used per row.
    fn reduce<F: Field<Elem = E>>(&self, v: &[E], f: &F) -> (Vec<E>, Vec<E>) {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut v = v.to_vec();
        let mut mult = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !f.is_zero(&c) {
                for (x, r) in v.iter_mut().zip(row).skip(p) {
                    if !f.is_zero(r) {
                        *x = f.sub(x, &f.mul(&c, r));
                    }
                }
            }
            mult.push(c);
        }
        (v, mult)
    }

    pub fn contains<F: Field<Elem = E>>(&self, v: &[E], f: &F) -> bool {
        self.reduce(v, f).0.iter().all(|x| f.is_zero(x))
    }

    /// Adds `v` if independent of the stored span; returns its index.
    pub fn insert<F: Field<Elem = E>>(&mut self, v: Vec<E>, f: &F) -> Option<usize> {
        let (res, mult) = self.reduce(&v, f);
        let p = res.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&res[p]).expect("nonzero pivot");
        let row: Vec<E> = res.iter().map(|x| f.mul(x, &inv)).collect();
        let idx = self.rows.len();
        // res = v - sum mult_i rows_i, so row = inv * (e_idx - sum mult_i combos_i).
        let mut combo = vec![f.zero(); idx + 1];
        combo[idx] = f.one();
        for (m, c) in mult.iter().zip(&self.combos) {
            if f.is_zero(m) {
                continue;
            }
            for (k, ck) in c.iter().enumerate() {
                combo[k] = f.sub(&combo[k], &f.mul(m, ck));
            }
        }
        let combo = combo.iter().map(|x| f.mul(x, &inv)).collect();
        for c in self.combos.iter_mut() {
            c.push(f.zero());
        }
        self.rows.push(row);
        self.pivots.push(p);
        self.combos.push(combo);
        Some(idx)
    }

    /// Coordinates of `v` in the inserted vectors, if it lies in their span.
    pub fn express<F: Field<Elem = E>>(&self, v: &[E], f: &F) -> Option<Vec<E>> {
        let (res, mult) = self.reduce(v, f);
        if !res.iter().all(|x| f.is_zero(x)) {
            return None;
        }
        let mut coords = vec![f.zero(); self.rows.len()];
        for (m, c) in mult.iter().zip(&self.combos) {
            if f.is_zero(m) {
                continue;
            }
            for (k, ck) in c.iter().enumerate() {
                coords[k] = f.add(&coords[k], &f.mul(m, ck));
            }
        }
        Some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    #[test]
    fn express_recovers_coefficients() {
        let f = Gf::prime(7).unwrap();
        let vs = [vec![1, 2, 0, 3], vec![0, 1, 1, 1], vec![2, 0, 5, 1]];
        let mut ech = IncrementalEchelon::new(4);
        for v in &vs {
            assert!(ech.insert(v.clone(), &f).is_some());
        }
        let coeffs = [3u32, 5, 6];
        let target: Vec<u32> = (0..4)
            .map(|j| vs.iter().zip(&coeffs).fold(0, |acc, (v, c)| f.add(&acc, &f.mul(&v[j], c))))
            .collect();
        assert_eq!(ech.express(&target, &f).unwrap(), coeffs.to_vec());
        assert!(ech.insert(target, &f).is_none());
        assert_eq!(ech.dim(), 3);
    }
}
