//! Bases of enveloping algebras of finite matrix sets, with the generator
//! word behind every basis element.

use std::collections::VecDeque;

use crate::funcfield::{FuncField, RatFunc};
use crate::gf::{Gf, GfElem, RelativeBasis};
use crate::linalg::{IncrementalEchelon, Mat};

/// K-basis of the K-algebra generated by matrices over L, K a subfield of L.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    rel: RelativeBasis,
    n: usize,
    elements: Vec<Mat<GfElem>>,
    words: Vec<Vec<usize>>,
    /// `(parent, letter)`; `None` for the identity.
    parents: Vec<Option<(usize, usize)>>,
    /// Product that produced each basis element, if any: `products[i][j] = k`
    /// when `elements[i] * T_j` was accepted as element `k`.
    accepted: Vec<Vec<Option<usize>>>,
    echelon: IncrementalEchelon<GfElem>,
}

impl AlgebraBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Mat<GfElem>] {
        &self.elements
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn parent(&self, j: usize) -> Option<(usize, usize)> {
        self.parents[j]
    }

    /// Index of the basis element created as `elements[i] * T_j`.
    pub fn accepted_product(&self, i: usize, j: usize) -> Option<usize> {
        self.accepted[i][j]
    }

    /// `L` over `K`.
    pub fn relative(&self) -> &RelativeBasis {
        &self.rel
    }

    pub fn subfield(&self) -> &Gf {
        self.rel.sub()
    }

    pub fn field(&self) -> &Gf {
        self.rel.ext()
    }

    /// Coordinates over K of `m` in the basis, if `m` lies in the K-span.
    pub fn coordinates(&self, m: &Mat<GfElem>) -> Option<Vec<GfElem>> {
        self.echelon.express(&flatten(m, &self.rel), self.rel.sub())
    }
}

fn flatten(m: &Mat<GfElem>, rel: &RelativeBasis) -> Vec<GfElem> {
    if rel.rank() == 1 {
        return m.entries().iter().map(|&e| rel.to_sub(e).expect("rank one")).collect();
    }
    m.entries().iter().flat_map(|&e| rel.coords(e)).collect()
}

/// Breadth-first closure of `{I}` under right multiplication by `gens`,
/// keeping every product that is K-independent of the elements so far.
pub fn basis_env_algebra(gens: &[Mat<GfElem>], rel: &RelativeBasis) -> AlgebraBasis {
    let l = rel.ext();
    let k = rel.sub();
    let n = gens.first().map_or(0, |g| g.rows());
    let id = Mat::identity(l, n);
    let mut basis = AlgebraBasis {
        rel: rel.clone(),
        n,
        elements: Vec::new(),
        words: Vec::new(),
        parents: Vec::new(),
        accepted: Vec::new(),
        echelon: IncrementalEchelon::new(n * n * rel.rank()),
    };
    basis.echelon.insert(flatten(&id, rel), k).expect("identity is nonzero");
    basis.elements.push(id);
    basis.words.push(Vec::new());
    basis.parents.push(None);
    basis.accepted.push(vec![None; gens.len()]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (j, t) in gens.iter().enumerate() {
            let prod = basis.elements[i].mul(t, l);
            if let Some(idx) = basis.echelon.insert(flatten(&prod, rel), k) {
                let mut word = basis.words[i].clone();
                word.push(j);
                basis.elements.push(prod);
                basis.words.push(word);
                basis.parents.push(Some((i, j)));
                basis.accepted.push(vec![None; gens.len()]);
                basis.accepted[i][j] = Some(idx);
                queue.push_back(idx);
            }
        }
    }
    debug_assert!(basis.dim() <= n * n * rel.rank());
    basis
}

/// Function-field products spelled by basis words, built on demand from the
/// parent element and one more letter.
#[derive(Clone, Debug, Default)]
pub struct PreImages {
    cache: Vec<Option<Mat<RatFunc>>>,
    multiplications: usize,
}

impl PreImages {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn multiplications(&self) -> usize {
        self.multiplications
    }

    pub fn get(&mut self, basis: &AlgebraBasis, j: usize, gens: &[Mat<RatFunc>], ff: &FuncField) -> Mat<RatFunc> {
        if self.cache.len() < basis.dim() {
            self.cache.resize(basis.dim(), None);
        }
        if let Some(m) = &self.cache[j] {
            return m.clone();
        }
        let m = match basis.parent(j) {
            None => Mat::identity(ff, basis.degree()),
            Some((i, letter)) => {
                let parent = self.get(basis, i, gens, ff);
                self.multiplications += 1;
                parent.mul(&gens[letter], ff)
            }
        };
        self.cache[j] = Some(m.clone());
        m
    }
}

/// Canonical pre-image of basis element `j` (uncached).
pub fn pre_image(basis: &AlgebraBasis, j: usize, gens: &[Mat<RatFunc>], ff: &FuncField) -> Mat<RatFunc> {
    PreImages::new().get(basis, j, gens, ff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::gf::Tower;

    #[test]
    fn identity_only() {
        let f = Gf::prime(3).unwrap();
        let rel = RelativeBasis::identity(&f);
        let b = basis_env_algebra(&[Mat::identity(&f, 3)], &rel);
        assert_eq!(b.dim(), 1);
        assert!(b.words()[0].is_empty());
    }

    #[test]
    fn unipotent_over_f2() {
        let f = Gf::prime(2).unwrap();
        let rel = RelativeBasis::identity(&f);
        let u = Mat::from_rows(vec![vec![1, 1], vec![0, 1]]);
        let b = basis_env_algebra(&[u.clone()], &rel);
        assert_eq!(b.dim(), 2);
        assert_eq!(b.elements()[1], u);
        assert_eq!(b.words()[1], vec![0]);
    }

    #[test]
    fn dimension_depends_on_subfield() {
        let tower = Tower::new(Gf::prime(2).unwrap());
        let f4 = tower.extension(2).unwrap().field().clone();
        let t = f4.generator();
        let gens = [Mat::from_rows(vec![vec![1, 1], vec![0, 1]]), Mat::from_rows(vec![vec![1, t], vec![0, 1]])];
        let over_f2 = basis_env_algebra(&gens, &tower.relative(1, 2).unwrap());
        let over_f4 = basis_env_algebra(&gens, &tower.relative(2, 2).unwrap());
        assert_eq!(over_f2.dim(), 3);
        assert_eq!(over_f4.dim(), 2);
        for b in [&over_f2, &over_f4] {
            for (m, w) in b.elements().iter().zip(b.words()) {
                let prod = w.iter().fold(Mat::identity(&f4, 2), |acc, &i| acc.mul(&gens[i], &f4));
                assert_eq!(&prod, m);
            }
            for a in b.elements() {
                for g in &gens {
                    assert!(b.coordinates(&a.mul(g, &f4)).is_some());
                }
            }
        }
    }

    #[test]
    fn pre_image_of_word() {
        let f = Gf::prime(2).unwrap();
        let ff = FuncField::new(f.clone(), vec!["X".into()]).unwrap();
        let x = ff.var(0);
        let s1 = Mat::from_rows(vec![vec![ff.one(), ff.one()], vec![ff.zero(), ff.one()]]);
        let s2 = Mat::from_rows(vec![vec![ff.one(), x.clone()], vec![ff.zero(), ff.one()]]);
        // Specialize at X = 0 over F_2 so that both generators are kept.
        let tower = Tower::new(f.clone());
        let f4 = tower.extension(2).unwrap().field().clone();
        let t = f4.generator();
        let g1 = Mat::from_rows(vec![vec![1, 1], vec![0, 1]]);
        let g2 = Mat::from_rows(vec![vec![1, t], vec![0, 1]]);
        let b = basis_env_algebra(&[g1, g2], &tower.relative(1, 2).unwrap());
        let gens = [s1, s2];
        let mut cache = PreImages::new();
        assert_eq!(cache.get(&b, 0, &gens, &ff), Mat::identity(&ff, 2));
        assert_eq!(cache.get(&b, 2, &gens, &ff), gens[1]);
        let x1 = ff.add(&x, &ff.one());
        let prod = gens[0].mul(&gens[1], &ff);
        assert_eq!(prod, Mat::from_rows(vec![vec![ff.one(), x1], vec![ff.zero(), ff.one()]]));
    }
}
