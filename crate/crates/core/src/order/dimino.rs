use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::field::Field;
use crate::linalg::Mat;

/// Elements in insertion order, indexed by hash so each is stored once.
struct ElementSet<E> {
    elements: Vec<Mat<E>>,
    by_hash: HashMap<u64, Vec<usize>>,
}

impl<E: Clone + Eq + Hash> ElementSet<E> {
    fn hash_of(m: &Mat<E>) -> u64 {
        let mut h = DefaultHasher::new();
        m.hash(&mut h);
        h.finish()
    }

    fn contains(&self, m: &Mat<E>) -> bool {
        self.by_hash.get(&Self::hash_of(m)).is_some_and(|ix| ix.iter().any(|&i| self.elements[i] == *m))
    }

    fn push(&mut self, m: Mat<E>) {
        self.by_hash.entry(Self::hash_of(&m)).or_default().push(self.elements.len());
        self.elements.push(m);
    }
}

/// All elements of `<gens>` by Dimino's coset enumeration, or `None` once
/// more than `cap` elements have been found.
pub fn dimino<F: Field>(gens: &[Mat<F::Elem>], n: usize, f: &F, cap: usize) -> Option<Vec<Mat<F::Elem>>> {
    let mut set = ElementSet { elements: Vec::new(), by_hash: HashMap::new() };
    set.push(Mat::identity(f, n));
    let mut used: Vec<&Mat<F::Elem>> = Vec::new();
    for g in gens {
        if set.contains(g) {
            continue;
        }
        used.push(g);
        // Elements so far form the previous subgroup H; the group grows by
        // whole right cosets H x, whose first element is x itself.
        let h_len = set.elements.len();
        let add_coset = |x: &Mat<F::Elem>, set: &mut ElementSet<F::Elem>| {
            for k in 0..h_len {
                let y = set.elements[k].mul(x, f);
                set.push(y);
            }
            set.elements.len() <= cap
        };
        if !add_coset(g, &mut set) {
            return None;
        }
        let mut rep = h_len;
        while rep < set.elements.len() {
            let r = set.elements[rep].clone();
            for s in &used {
                let x = r.mul(s, f);
                if !set.contains(&x) && !add_coset(&x, &mut set) {
                    return None;
                }
            }
            rep += h_len;
        }
    }
    (set.elements.len() <= cap).then_some(set.elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    #[test]
    fn gl2_3() {
        let f = Gf::prime(3).unwrap();
        let a = Mat::from_rows(vec![vec![2, 0], vec![0, 1]]);
        let b = Mat::from_rows(vec![vec![2, 1], vec![2, 0]]);
        assert_eq!(dimino(&[a.clone(), b.clone()], 2, &f, 1000).unwrap().len(), 48);
        assert!(dimino(&[a, b], 2, &f, 47).is_none());
    }

    #[test]
    fn trivial_group() {
        let f = Gf::prime(5).unwrap();
        assert_eq!(dimino(&[Mat::identity(&f, 3)], 3, &f, 10).unwrap().len(), 1);
        assert_eq!(dimino::<Gf>(&[], 2, &f, 10).unwrap().len(), 1);
    }
}
