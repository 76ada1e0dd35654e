use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf::{Gf, GfElem};
use crate::linalg::Mat;

type Point = Vec<GfElem>;

struct Level {
    base: Point,
    gens: Vec<Mat<GfElem>>,
    gens_inv: Vec<Mat<GfElem>>,
    orbit: Vec<Point>,
    index: HashMap<Point, usize>,
    /// `trans[x] * base = orbit[x]`.
    trans: Vec<Mat<GfElem>>,
    trans_inv: Vec<Mat<GfElem>>,
}

impl Level {
    fn new(base: Point) -> Self {
        Level {
            base,
            gens: Vec::new(),
            gens_inv: Vec::new(),
            orbit: Vec::new(),
            index: HashMap::new(),
            trans: Vec::new(),
            trans_inv: Vec::new(),
        }
    }

    fn add_gen(&mut self, g: Mat<GfElem>, f: &Gf) -> Result<()> {
        self.gens_inv.push(g.inverse(f)?);
        self.gens.push(g);
        Ok(())
    }

    fn rebuild(&mut self, f: &Gf, n: usize, max_orbit: usize) -> Result<()> {
        let id = Mat::identity(f, n);
        self.orbit = vec![self.base.clone()];
        self.index = HashMap::from([(self.base.clone(), 0)]);
        self.trans = vec![id.clone()];
        self.trans_inv = vec![id];
        let mut x = 0;
        while x < self.orbit.len() {
            for (s, s_inv) in self.gens.iter().zip(&self.gens_inv) {
                let y = s.mul_vec(&self.orbit[x], f);
                if self.index.contains_key(&y) {
                    continue;
                }
                if self.orbit.len() >= max_orbit {
                    return Err(Error::ResourceLimit(format!("orbit exceeds {max_orbit} points")));
                }
                self.index.insert(y.clone(), self.orbit.len());
                self.orbit.push(y);
                self.trans.push(s.mul(&self.trans[x], f));
                self.trans_inv.push(self.trans_inv[x].mul(s_inv, f));
            }
            x += 1;
        }
        Ok(())
    }
}

/// Stabilizer chain of a matrix group acting on column vectors, with the
/// standard basis vectors as base.
pub struct StabilizerChain {
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Mat<GfElem>], n: usize, f: &Gf, max_orbit: usize) -> Result<Self> {
        let mut levels: Vec<Level> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                Level::new(e)
            })
            .collect();
        for g in gens.iter().filter(|g| !g.is_identity(f)) {
            // Level l holds the generators fixing the first l base points.
            for l in 0..n {
                if l > 0 && g.mul_vec(&levels[l - 1].base, f) != levels[l - 1].base {
                    break;
                }
                levels[l].add_gen(g.clone(), f)?;
            }
        }
        for level in levels.iter_mut() {
            level.rebuild(f, n, max_orbit)?;
        }
        let mut chain = StabilizerChain { levels };
        chain.complete(f, n, max_orbit)?;
        Ok(chain)
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`n` when the residue fixes every base point).
    fn strip(&self, mut g: Mat<GfElem>, from: usize, f: &Gf) -> (Mat<GfElem>, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.mul_vec(&level.base, f);
            match level.index.get(&b) {
                None => return (g, l),
                Some(&x) => g = level.trans_inv[x].mul(&g, f),
            }
        }
        (g, self.levels.len())
    }

    fn bad_schreier_generator(&self, i: usize, f: &Gf) -> Option<(Mat<GfElem>, usize)> {
        let level = &self.levels[i];
        for x in 0..level.orbit.len() {
            for s in &level.gens {
                let y = level.index[&s.mul_vec(&level.orbit[x], f)];
                let sg = level.trans_inv[y].mul(s, f).mul(&level.trans[x], f);
                if sg.is_identity(f) {
                    continue;
                }
                let (h, j) = self.strip(sg, i + 1, f);
                if j < self.levels.len() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn complete(&mut self, f: &Gf, n: usize, max_orbit: usize) -> Result<()> {
        let mut i = n;
        while i > 0 {
            let cur = i - 1;
            match self.bad_schreier_generator(cur, f) {
                None => i -= 1,
                Some((h, j)) => {
                    for l in cur + 1..=j {
                        self.levels[l].add_gen(h.clone(), f)?;
                        self.levels[l].rebuild(f, n, max_orbit)?;
                    }
                    i = j + 1;
                }
            }
        }
        Ok(())
    }

    pub fn orbit_sizes(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.orbit.len() as u64).collect()
    }

    pub fn contains(&self, g: &Mat<GfElem>, f: &Gf) -> bool {
        let (h, j) = self.strip(g.clone(), 0, f);
        j == self.levels.len() && h.is_identity(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_3_orbits() {
        let f = Gf::prime(3).unwrap();
        let a = Mat::from_rows(vec![vec![2, 0], vec![0, 1]]);
        let b = Mat::from_rows(vec![vec![2, 1], vec![2, 0]]);
        let chain = StabilizerChain::new(&[a, b], 2, &f, 1000).unwrap();
        assert_eq!(chain.orbit_sizes(), vec![8, 6]);
        assert!(chain.contains(&Mat::from_rows(vec![vec![0, 1], vec![1, 0]]), &f));
    }
}
