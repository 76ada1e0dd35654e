use matfin::field::Field;
use matfin::funcfield::{gcd, Monomial};
use matfin::gf::{embeddings, RelativeBasis};
use matfin::linalg::{induced_actions, nullspace, rank};
use matfin::{FuncField, Gf, GfElem, Mat, MultiPoly, RatFunc, Subspace, Tower};
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = Gf> {
    prop::sample::select(vec![(2u64, 1usize), (2, 3), (3, 1), (3, 2), (5, 1), (7, 2), (2, 4)])
        .prop_map(|(p, k)| Gf::with_degree(p, k).unwrap())
}

fn field_and_elems(count: usize) -> impl Strategy<Value = (Gf, Vec<GfElem>)> {
    small_field().prop_flat_map(move |f| {
        let size = f.size() as GfElem;
        (Just(f), prop::collection::vec(0..size, count))
    })
}

fn matrix(f: &Gf, rows: usize, cols: usize, seed: &[GfElem]) -> Mat<GfElem> {
    let size = f.size() as GfElem;
    Mat::new(rows, cols, (0..rows * cols).map(|i| seed[i % seed.len()].wrapping_mul(i as GfElem + 7) % size).collect())
}

proptest! {
    #[test]
    fn field_axioms((f, xs) in field_and_elems(3)) {
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if a != 0 {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
        // Frobenius is additive and multiplicative.
        let p = f.p();
        prop_assert_eq!(f.frobenius(f.add(&a, &b), p), f.add(&f.frobenius(a, p), &f.frobenius(b, p)));
        prop_assert_eq!(f.frobenius(f.mul(&a, &b), p), f.mul(&f.frobenius(a, p), &f.frobenius(b, p)));
        prop_assert_eq!(f.pow(&a, f.size()), a);
    }

    #[test]
    fn embeddings_are_homomorphisms(a in 0u32..16, b in 0u32..16, which in 0usize..2) {
        let tower = Tower::new(Gf::with_degree(2, 2).unwrap());
        let (src, dst) = if which == 0 { (2, 4) } else { (1, 2) };
        let small = tower.extension(src).unwrap().field().clone();
        let big = tower.extension(dst).unwrap().field().clone();
        let (a, b) = (a % small.size() as u32, b % small.size() as u32);
        for e in embeddings(&small, &big).unwrap() {
            prop_assert_eq!(e.apply(small.add(&a, &b)), big.add(&e.apply(a), &e.apply(b)));
            prop_assert_eq!(e.apply(small.mul(&a, &b)), big.mul(&e.apply(a), &e.apply(b)));
        }
        let rel = tower.relative(src, dst).unwrap();
        let x = rel.embed(a);
        prop_assert_eq!(rel.from_coords(&rel.coords(x)), x);
        prop_assert_eq!(rel.to_sub(x), Some(a));
    }

    #[test]
    fn relative_trace_is_linear_and_lands_in_subfield(a in 0u32..729, b in 0u32..729) {
        let tower = Tower::new(Gf::prime(3).unwrap());
        let big = tower.extension(6).unwrap().field().clone();
        let rel: std::sync::Arc<RelativeBasis> = tower.relative(2, 6).unwrap();
        let tr = |x| rel.trace(x);
        prop_assert_eq!(tr(big.add(&a, &b)), rel.sub().add(&tr(a), &tr(b)));
        let direct = big.trace_orbit(a, 9, 3);
        prop_assert_eq!(rel.embed(tr(a)), direct);
    }

    #[test]
    fn rank_nullity((f, seed) in field_and_elems(5), rows in 1usize..5, cols in 1usize..5) {
        let m = matrix(&f, rows, cols, &seed);
        let r = rank(&m, &f);
        prop_assert_eq!(r, rank(&m.transpose(), &f));
        let ns = nullspace(&m, &f);
        prop_assert_eq!(r + ns.dim(), cols);
        for v in ns.basis() {
            prop_assert!(m.mul_vec(v, &f).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn intersection_dimension_formula((f, seed) in field_and_elems(6), du in 0usize..4, dw in 0usize..4) {
        let n = 4;
        let a = matrix(&f, du.max(1), n, &seed);
        let b = matrix(&f, dw.max(1), n, &seed[2..]);
        let rows = |m: &Mat<GfElem>, d: usize| (0..d).map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
        let u = Subspace::from_vectors(n, rows(&a, du), &f);
        let w = Subspace::from_vectors(n, rows(&b, dw), &f);
        let cap = u.intersect(&w, &f);
        prop_assert_eq!(u.dim() + w.dim(), u.sum(&w, &f).dim() + cap.dim());
        for v in cap.basis() {
            prop_assert!(u.contains(v, &f) && w.contains(v, &f));
        }
    }

    #[test]
    fn induced_actions_reassemble(a in 0u32..5, b in 1u32..5, c in 0u32..5, d in 1u32..5) {
        // Upper block triangular matrices leave span{e1, e2} invariant.
        let f = Gf::prime(5).unwrap();
        let s = Mat::from_rows(vec![vec![b, a, c], vec![0, d, a], vec![0, 0, b]]);
        let t = Mat::from_rows(vec![vec![d, 0, a], vec![c, b, 1], vec![0, 0, 1]]);
        let u = Subspace::from_vectors(3, vec![vec![1, 0, 0], vec![0, 1, 0]], &f);
        if s.determinant(&f) == 0 || t.determinant(&f) == 0 {
            return Ok(());
        }
        let ia = induced_actions(&[s.clone(), t.clone()], &[], &u, &f).unwrap();
        for (i, g) in [s, t].iter().enumerate() {
            let conj = ia.basis_change_inv.mul(g, &f).mul(&ia.basis_change, &f);
            prop_assert_eq!(ia.assembled(i, &f), conj);
        }
    }
}

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        let f = Gf::prime(3).unwrap();
        MultiPoly::from_terms(&f, terms.into_iter().map(|(c, e0, e1)| (Monomial::from_exponents(&[e0, e1]), c)))
    })
}

fn ff3() -> FuncField {
    FuncField::new(Gf::prime(3).unwrap(), vec!["X".into(), "Y".into()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        let f = Gf::prime(3).unwrap();
        let (ac, bc) = (a.mul(&c, &f), b.mul(&c, &f));
        let g = gcd(&ac, &bc, &f);
        if !g.is_zero() {
            prop_assert!(ac.div_exact(&g, &f).is_some());
            prop_assert!(bc.div_exact(&g, &f).is_some());
            if !c.is_zero() {
                prop_assert!(g.div_exact(&c.monic(&f), &f).is_some());
            }
        }
    }

    #[test]
    fn rational_functions_form_a_field(a in poly_strategy(), b in poly_strategy(), c in poly_strategy(), d in poly_strategy()) {
        let ff = ff3();
        if b.is_zero() || d.is_zero() {
            return Ok(());
        }
        let x: RatFunc = ff.fraction(a, b).unwrap();
        let y: RatFunc = ff.fraction(c, d).unwrap();
        prop_assert_eq!(ff.sub(&ff.add(&x, &y), &y), x.clone());
        prop_assert_eq!(ff.mul(&x, &y), ff.mul(&y, &x));
        if !ff.is_zero(&y) {
            prop_assert_eq!(ff.mul(&ff.div(&x, &y).unwrap(), &y), x.clone());
        }
        // Canonical form: reparsing the printed form gives the same value.
        let text = ff.format(&x);
        prop_assert_eq!(matfin::io::parse_expr(&text, &ff).unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), x in 0u32..9, y in 0u32..9) {
        let ff = ff3();
        let tower = Tower::new(Gf::prime(3).unwrap());
        let ext = tower.extension(2).unwrap();
        let rel = &ext.over_base;
        let pa = ff.poly(a);
        let pb = ff.poly(b);
        let pt = [x, y];
        let l = ext.field();
        let ev = |r: &RatFunc| ff.evaluate(r, &pt, rel).unwrap();
        prop_assert_eq!(ev(&ff.mul(&pa, &pb)), l.mul(&ev(&pa), &ev(&pb)));
        prop_assert_eq!(ev(&ff.add(&pa, &pb)), l.add(&ev(&pa), &ev(&pb)));
    }
}
