//! Subfield embeddings, relative coordinates and the extension tower over a
//! fixed coefficient field `F_q`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Gf, GfElem, UPoly};
use crate::error::{Error, Result};
use crate::field::Field;

/// Field homomorphism `source -> target`, fixed by the image of the
/// source generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Gf,
    target: Gf,
    /// Images of `1, t, ..., t^(k-1)`.
    powers: Vec<GfElem>,
}

impl Embedding {
    pub fn identity(f: &Gf) -> Self {
        Self::from_generator_image(f, f, f.generator())
    }

    fn from_generator_image(source: &Gf, target: &Gf, image: GfElem) -> Self {
        let powers = (0..source.degree()).map(|i| target.pow(&image, i as u64)).collect();
        Embedding { source: source.clone(), target: target.clone(), powers }
    }

    /// Embedding sending the source generator to `image`, which must be a
    /// root of the source's defining polynomial.
    pub fn new(source: &Gf, target: &Gf, image: GfElem) -> Result<Self> {
        if source.p() != target.p() || target.degree() % source.degree() != 0 {
            return Err(Error::Usage(format!("{source:?} is not a subfield of {target:?}")));
        }
        let m = modulus_in(source, target);
        if m.eval(&image, target) != 0 {
            return Err(Error::Usage("image is not a root of the defining polynomial".into()));
        }
        Ok(Self::from_generator_image(source, target, image))
    }

    pub fn source(&self) -> &Gf {
        &self.source
    }

    pub fn target(&self) -> &Gf {
        &self.target
    }

    pub fn generator_image(&self) -> GfElem {
        self.apply(self.source.generator())
    }

    pub fn apply(&self, a: GfElem) -> GfElem {
        debug_assert!(self.source.contains(a));
        let t = &self.target;
        self.source
            .coeffs(a)
            .iter()
            .zip(&self.powers)
            .filter(|(&c, _)| c != 0)
            .fold(0, |acc, (&c, pw)| t.add(&acc, &t.mul(&(c as GfElem), pw)))
    }
}

/// The source's defining polynomial with coefficients read in `target`.
fn modulus_in(source: &Gf, target: &Gf) -> UPoly<GfElem> {
    UPoly::new(target, source.modulus().iter().map(|&c| c as GfElem).collect())
}

/// All embeddings of `source` into `target`, ordered by generator image.
pub fn embeddings(source: &Gf, target: &Gf) -> Result<Vec<Embedding>> {
    if source.p() != target.p() || target.degree() % source.degree() != 0 {
        return Err(Error::Usage(format!("{source:?} is not a subfield of {target:?}")));
    }
    let f = modulus_in(source, target);
    Ok(roots(&f, target).into_iter().map(|r| Embedding::from_generator_image(source, target, r)).collect())
}

/// Image of `a` in `target` under the embedding with the smallest generator image.
pub fn embed(a: GfElem, source: &Gf, target: &Gf) -> Result<GfElem> {
    let e = embeddings(source, target)?;
    Ok(e[0].apply(a))
}

/// Sorted distinct roots in `field` of a polynomial that splits into distinct
/// linear factors there (Cantor-Zassenhaus equal-degree splitting).
pub fn roots(f: &UPoly<GfElem>, field: &Gf) -> Vec<GfElem> {
    // Restrict to the part of f that splits: gcd(f, X^Q - X).
    let x = UPoly::monomial(field, 1, 1);
    let xq = x.powmod(field.size(), f, field);
    let split = f.gcd(&xq.sub(&x, field), field);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(&split, field, &mut rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(f: &UPoly<GfElem>, field: &Gf, rng: &mut ChaCha8Rng, out: &mut Vec<GfElem>) {
    match f.degree() {
        None | Some(0) => return,
        Some(1) => {
            let c = f.coeffs();
            out.push(field.neg(&field.div(&c[0], &c[1]).unwrap()));
            return;
        }
        _ => {}
    }
    let q = field.size();
    loop {
        let delta = field.random(rng);
        let g = if field.p() == 2 {
            // Absolute trace of delta*X modulo f.
            let w = UPoly::monomial(field, delta, 1).rem(f, field);
            let mut acc = UPoly::zero();
            let mut cur = w;
            for _ in 0..field.degree() {
                acc = acc.add(&cur, field);
                cur = cur.mul(&cur, field).rem(f, field);
            }
            f.gcd(&acc, field)
        } else {
            let lin = UPoly::new(field, vec![delta, 1]);
            let h = lin.powmod((q - 1) / 2, f, field);
            f.gcd(&h.sub(&UPoly::constant(field, 1), field), field)
        };
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && Some(dg) < f.degree() {
            let (cofactor, _) = f.divrem(&g, field);
            split_linear(&g, field, rng, out);
            split_linear(&cofactor, field, rng, out);
            return;
        }
    }
}

/// `ext` viewed as a vector space over an embedded subfield, with
/// coordinates in the power basis `1, t, ..., t^(r-1)` of the ext generator.
#[derive(Clone, Debug)]
pub struct RelativeBasis {
    embedding: Embedding,
    /// `[ext : sub]`.
    rank: usize,
    /// Inverse over `F_p` of the coordinate map, row-major `k_ext x k_ext`.
    inverse: Vec<Vec<u64>>,
}

impl RelativeBasis {
    pub fn new(embedding: Embedding) -> Self {
        let sub = embedding.source().clone();
        let ext = embedding.target().clone();
        let ks = sub.degree();
        let ke = ext.degree();
        let rank = ke / ks;
        let p = ext.p();
        let t = ext.generator();
        // Column j*ks + i holds the digits of emb(s^i) * t^j.
        let mut cols = Vec::with_capacity(ke);
        for j in 0..rank {
            let tj = ext.pow(&t, j as u64);
            for i in 0..ks {
                cols.push(ext.coeffs(ext.mul(&embedding.powers[i], &tj)));
            }
        }
        let matrix: Vec<Vec<u64>> = (0..ke).map(|r| (0..ke).map(|c| cols[c][r]).collect()).collect();
        let inverse = invert_mod_p(matrix, p).expect("power basis is a basis");
        RelativeBasis { embedding, rank, inverse }
    }

    pub fn identity(f: &Gf) -> Self {
        Self::new(Embedding::identity(f))
    }

    pub fn sub(&self) -> &Gf {
        self.embedding.source()
    }

    pub fn ext(&self) -> &Gf {
        self.embedding.target()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn embed(&self, a: GfElem) -> GfElem {
        self.embedding.apply(a)
    }

    /// Coordinates of `a` over the subfield.
    pub fn coords(&self, a: GfElem) -> Vec<GfElem> {
        let ext = self.ext();
        let p = ext.p();
        let digits = ext.coeffs(a);
        let ks = self.sub().degree();
        let solved: Vec<u64> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&digits).fold(0u64, |acc, (&m, &d)| (acc + m * d) % p))
            .collect();
        solved.chunks(ks).map(|c| self.sub().encode(c)).collect()
    }

    pub fn from_coords(&self, cs: &[GfElem]) -> GfElem {
        let ext = self.ext();
        let t = ext.generator();
        let mut acc = 0;
        let mut tj = 1;
        for c in cs {
            acc = ext.add(&acc, &ext.mul(&self.embed(*c), &tj));
            tj = ext.mul(&tj, &t);
        }
        acc
    }

    /// Preimage of `a` when it lies in the embedded subfield.
    pub fn to_sub(&self, a: GfElem) -> Option<GfElem> {
        let c = self.coords(a);
        c[1..].iter().all(|&x| x == 0).then_some(c[0])
    }

    /// Relative trace `ext -> sub`.
    pub fn trace(&self, a: GfElem) -> GfElem {
        let t = self.ext().trace_orbit(a, self.sub().size(), self.rank);
        self.to_sub(t).expect("trace lies in the subfield")
    }
}

fn invert_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let inv_mod = |a: u64| -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut inv: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let s = inv_mod(m[col][col]);
        for j in 0..n {
            m[col][j] = m[col][j] * s % p;
            inv[col][j] = inv[col][j] * s % p;
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let c = m[r][col];
                for j in 0..n {
                    m[r][j] = (m[r][j] + (p - c) * m[col][j]) % p;
                    inv[r][j] = (inv[r][j] + (p - c) * inv[col][j]) % p;
                }
            }
        }
    }
    Some(inv)
}

/// `F_{q^nu}` together with its coordinates over `F_q`.
#[derive(Debug)]
pub struct Extension {
    pub nu: usize,
    pub over_base: RelativeBasis,
}

impl Extension {
    pub fn field(&self) -> &Gf {
        self.over_base.ext()
    }
}

/// Extensions `F_{q^nu}` of a coefficient field `F_q`, with mutually
/// compatible embeddings, built on demand and cached.
#[derive(Debug)]
pub struct Tower {
    base: Gf,
    extensions: Mutex<BTreeMap<usize, Arc<Extension>>>,
    relatives: Mutex<BTreeMap<(usize, usize), Arc<RelativeBasis>>>,
}

impl Tower {
    pub fn new(base: Gf) -> Self {
        Tower { base, extensions: Mutex::new(BTreeMap::new()), relatives: Mutex::new(BTreeMap::new()) }
    }

    pub fn base(&self) -> &Gf {
        &self.base
    }

    pub fn q(&self) -> u64 {
        self.base.size()
    }

    pub fn extension(&self, nu: usize) -> Result<Arc<Extension>> {
        assert!(nu >= 1);
        if let Some(e) = self.extensions.lock().unwrap().get(&nu) {
            return Ok(e.clone());
        }
        let ext = if nu == 1 {
            Extension { nu, over_base: RelativeBasis::identity(&self.base) }
        } else {
            let field = Gf::with_degree(self.base.p(), self.base.degree() * nu)?;
            let emb = embeddings(&self.base, &field)?.into_iter().next().expect("subfield embeds");
            Extension { nu, over_base: RelativeBasis::new(emb) }
        };
        let ext = Arc::new(ext);
        self.extensions.lock().unwrap().insert(nu, ext.clone());
        Ok(ext)
    }

    /// `F_{q^mu}` inside `F_{q^lambda}`, compatible with both embeddings of `F_q`.
    pub fn relative(&self, mu: usize, lambda: usize) -> Result<Arc<RelativeBasis>> {
        if lambda % mu != 0 {
            return Err(Error::Usage(format!("degree {mu} does not divide {lambda}")));
        }
        if let Some(r) = self.relatives.lock().unwrap().get(&(mu, lambda)) {
            return Ok(r.clone());
        }
        let big = self.extension(lambda)?;
        let rel = if mu == lambda {
            RelativeBasis::identity(big.field())
        } else if mu == 1 {
            big.over_base.clone()
        } else {
            let small = self.extension(mu)?;
            let t = self.base.generator();
            let want = big.over_base.embed(t);
            let small_t = small.over_base.embed(t);
            let emb = embeddings(small.field(), big.field())?
                .into_iter()
                .find(|e| e.apply(small_t) == want)
                .expect("a compatible embedding exists");
            RelativeBasis::new(emb)
        };
        let rel = Arc::new(rel);
        self.relatives.lock().unwrap().insert((mu, lambda), rel.clone());
        Ok(rel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_roots(f: &UPoly<GfElem>, field: &Gf) -> Vec<GfElem> {
        field.elements().filter(|x| f.eval(x, field) == 0).collect()
    }

    #[test]
    fn prime_subfield_embeds_identically() {
        let f2 = Gf::prime(2).unwrap();
        let f4 = Gf::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(embed(1, &f2, &f4).unwrap(), 1);
        assert_eq!(embed(0, &f2, &f4).unwrap(), 0);
    }

    #[test]
    fn f4_into_f16_maps_t_to_a_root() {
        let f4 = Gf::new(2, vec![1, 1, 1]).unwrap();
        let f16 = Gf::with_degree(2, 4).unwrap();
        let m = UPoly::new(&f16, vec![1, 1, 1]);
        let expected = brute_roots(&m, &f16);
        assert_eq!(expected.len(), 2);
        let img = embed(f4.generator(), &f4, &f16).unwrap();
        assert_eq!(img, expected[0]);
        assert!(embed(1, &f4, &f4).is_ok());
        assert!(embed(1, &f4, &Gf::with_degree(2, 3).unwrap()).is_err());
    }

    #[test]
    fn roots_match_brute_force() {
        for (p, ks, ke) in [(2, 2, 6), (3, 2, 4), (5, 1, 2), (2, 3, 6), (7, 2, 2), (3, 3, 6)] {
            let sub = Gf::with_degree(p, ks).unwrap();
            let ext = Gf::with_degree(p, ke).unwrap();
            let m = modulus_in(&sub, &ext);
            assert_eq!(roots(&m, &ext), brute_roots(&m, &ext), "p={p} {ks}->{ke}");
        }
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        let sub = Gf::with_degree(3, 2).unwrap();
        let ext = Gf::with_degree(3, 4).unwrap();
        for e in embeddings(&sub, &ext).unwrap() {
            for a in sub.elements() {
                for b in sub.elements() {
                    assert_eq!(e.apply(sub.mul(&a, &b)), ext.mul(&e.apply(a), &e.apply(b)));
                    assert_eq!(e.apply(sub.add(&a, &b)), ext.add(&e.apply(a), &e.apply(b)));
                }
            }
        }
    }

    #[test]
    fn relative_coordinates_round_trip() {
        let tower = Tower::new(Gf::with_degree(2, 2).unwrap());
        let rel = tower.relative(1, 3).unwrap();
        assert_eq!(rel.rank(), 3);
        for a in rel.ext().elements() {
            assert_eq!(rel.from_coords(&rel.coords(a)), a);
        }
        let tr = rel.trace(rel.ext().generator());
        assert!(rel.sub().contains(tr));
    }

    #[test]
    fn tower_embeddings_commute() {
        let tower = Tower::new(Gf::with_degree(2, 2).unwrap());
        let k = tower.extension(2).unwrap();
        let l = tower.extension(4).unwrap();
        let kl = tower.relative(2, 4).unwrap();
        for a in tower.base().elements() {
            assert_eq!(kl.embed(k.over_base.embed(a)), l.over_base.embed(a));
        }
    }

    #[test]
    fn relative_degree_must_divide() {
        let tower = Tower::new(Gf::prime(2).unwrap());
        assert!(tower.relative(2, 3).is_err());
    }
}
