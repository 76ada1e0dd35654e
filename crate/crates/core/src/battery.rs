//! Small groups with known finiteness, used by the test suites, the
//! benchmarks and the sample data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::{Group, GroupFile};

#[derive(Clone, Debug)]
pub struct BatteryGroup {
    pub name: String,
    pub file: GroupFile,
    /// Finiteness by construction.
    pub finite: bool,
    pub nilpotent: bool,
}

impl BatteryGroup {
    pub fn group(&self) -> Group {
        self.file.parse().expect("battery groups parse")
    }
}

/// Matrices written as `"a,b;c,d"`.
fn grid(m: &str) -> Vec<Vec<String>> {
    m.split(';').map(|row| row.split(',').map(|e| e.trim().to_string()).collect()).collect()
}

fn file(p: u64, k: usize, vars: &[&str], gens: &[&str]) -> GroupFile {
    GroupFile {
        p,
        k,
        defining_poly: None,
        vars: vars.iter().map(|v| v.to_string()).collect(),
        generators: gens.iter().map(|g| grid(g)).collect(),
    }
}

/// Replaces every generator `g` by `c g c^-1`.
fn conjugated(f: GroupFile, c: &str) -> GroupFile {
    let mut with_c = f.clone();
    with_c.generators.push(grid(c));
    let g = with_c.parse().expect("conjugator parses");
    let ff = g.ff.clone();
    let (c, gens) = g.gens.split_last().expect("nonempty");
    let c_inv = c.inverse(&ff).expect("conjugator is invertible");
    let gens = gens.iter().map(|s| c.mul(s, &ff).mul(&c_inv, &ff)).collect();
    let mut out = GroupFile::from_group(&Group { ff, gens });
    out.defining_poly = f.defining_poly;
    out
}

fn with_extra(mut f: GroupFile, extra: GroupFile) -> GroupFile {
    f.generators.extend(extra.generators);
    f
}

fn entry(name: &str, file: GroupFile, finite: bool, nilpotent: bool) -> BatteryGroup {
    BatteryGroup { name: name.to_string(), file, finite, nilpotent }
}

const GL23: [&str; 2] = ["2,0;0,1", "2,1;2,0"];
const MONOMIAL35: [&str; 3] = ["2,0,0;0,1,0;0,0,1", "0,0,1;1,0,0;0,1,0", "0,1,0;1,0,0;0,0,1"];
const MONOMIAL_CONJ: &str = "1,X,0;0,1,0;0,1/(X+1),1";
const SIGNED6: [&str; 2] = [
    "0,0,0,0,0,1;1,0,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0",
    "6,0,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,1",
];
const SIGNED6_CONJ: &str = "1,X,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,X^2;0,0,0,0,1,0;0,0,0,0,0,1";

pub fn unipotent_pair() -> GroupFile {
    file(2, 1, &["X"], &["1,1;0,1", "1,X;0,1"])
}

pub fn gl23_conjugate() -> GroupFile {
    conjugated(file(3, 1, &["X"], &GL23), "1,X;0,1")
}

pub fn monomial_gl35() -> GroupFile {
    conjugated(file(5, 1, &["X"], &MONOMIAL35), MONOMIAL_CONJ)
}

pub fn diag_t_f4() -> GroupFile {
    file(2, 2, &["X"], &["t,0;0,1"])
}

pub fn diag_x() -> GroupFile {
    file(2, 1, &["X"], &["X,0;0,1"])
}

/// Finite and infinite groups of degree at most 6 over fields of size at
/// most 81 in one or two indeterminates.
pub fn decision_battery() -> Vec<BatteryGroup> {
    vec![
        entry("unipotent-pair", unipotent_pair(), true, true),
        entry("gl23-conjugate", gl23_conjugate(), true, false),
        entry("monomial-gl35", monomial_gl35(), true, false),
        entry("diag-t-conjugate", conjugated(diag_t_f4(), "1,X;0,1"), true, true),
        entry("gl24-conjugate", conjugated(file(2, 2, &["X"], &["t,0;0,1", "1,1;1,0"]), "X,1;1,0"), true, false),
        entry("cyclic-f49", conjugated(file(7, 1, &["X", "Y"], &["0,3;1,0"]), "X,Y;0,1"), true, true),
        entry("unitriangular-3", file(3, 1, &["X", "Y"], &["1,X,Y;0,1,X;0,0,1", "1,1,0;0,1,Y;0,0,1"]), true, true),
        entry(
            "kronecker-unipotent-torus",
            file(2, 2, &["X"], &["1,0,X,0;0,t,0,t*X;0,0,1,0;0,0,0,t", "1,0,1,0;0,t^2,0,t^2;0,0,1,0;0,0,0,t^2"]),
            true,
            true,
        ),
        entry(
            "block-triangular",
            file(3, 1, &["X"], &["2,X,X^2;0,1,X+1;0,0,2", "1,0,X;0,2,0;0,0,1"]),
            true,
            false,
        ),
        entry(
            "sym4-conjugate",
            conjugated(
                file(2, 1, &["X", "Y"], &["0,0,0,1;1,0,0,0;0,1,0,0;0,0,1,0", "0,1,0,0;1,0,0,0;0,0,1,0;0,0,0,1"]),
                "1,X,0,0;0,1,0,0;0,0,1,Y;0,0,0,1",
            ),
            true,
            false,
        ),
        entry("dihedral-f9", conjugated(file(3, 2, &["X"], &["t,0;0,t^7", "0,1;1,0"]), "1,1/X;0,1"), true, false),
        entry("torus-f81", conjugated(file(3, 4, &["X"], &["t,0;0,1"]), "1,X;0,1"), true, true),
        entry("signed-permutations-6", conjugated(file(7, 1, &["X"], &SIGNED6), SIGNED6_CONJ), true, false),
        entry("scalar-unipotent", file(5, 1, &["X"], &["2,X;0,2"]), true, true),
        entry("gl32-constant", file(2, 1, &["X"], &["1,1,0;0,1,0;0,0,1", "0,0,1;1,0,0;0,1,0"]), true, false),
        entry("heisenberg-f4", file(2, 2, &["X", "Y"], &["1,t*X,Y;0,1,X;0,0,1", "1,0,1;0,1,t;0,0,1"]), true, true),
        entry("diag-x", diag_x(), false, true),
        entry("diag-x-inverse", file(3, 1, &["X"], &["X,0;0,1/X"]), false, true),
        entry("unipotent-pair-plus-torus", with_extra(unipotent_pair(), diag_x()), false, false),
        entry("opposite-unipotents", file(2, 1, &["X"], &["1,X;0,1", "1,0;X,1"]), false, false),
        entry(
            "gl23-plus-diagonal",
            conjugated(file(3, 1, &["X"], &["2,0;0,1", "2,1;2,0", "X,0;0,1"]), "1,X;0,1"),
            false,
            false,
        ),
        entry(
            "kronecker-transcendental",
            file(2, 2, &["X"], &["X,0,X^2,0;0,1,0,X;0,0,X,0;0,0,0,1", "1,0,1,0;0,t,0,t;0,0,1,0;0,0,0,t"]),
            false,
            true,
        ),
        entry(
            "block-triangular-transcendental",
            file(3, 1, &["X"], &["1,X,0;0,X+1,0;0,0,1", "2,0,1;0,1,0;0,0,1"]),
            false,
            false,
        ),
        entry("affine-xy", file(5, 1, &["X", "Y"], &["X,Y;0,1"]), false, true),
        entry("rational-f4", file(2, 2, &["X"], &["t,1/X;0,1", "1,0;0,X+t"]), false, false),
        entry(
            "monomial-plus-diagonal",
            conjugated(
                file(5, 1, &["X"], &[MONOMIAL35[0], MONOMIAL35[1], MONOMIAL35[2], "X,0,0;0,1,0;0,0,1"]),
                MONOMIAL_CONJ,
            ),
            false,
            false,
        ),
        entry("involutions", file(3, 1, &["X"], &["0,1;1,0", "0,X;1/X,0"]), false, false),
        entry(
            "signed-permutations-6-plus",
            file(7, 1, &["X"], &[SIGNED6[0], "X,0,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,1"]),
            false,
            false,
        ),
        entry("triangular-f81", file(3, 4, &["X"], &["t,X;0,X^2+1"]), false, true),
        entry("jordan-transcendental", file(2, 1, &["X"], &["X,1;0,X"]), false, true),
    ]
}

/// Nilpotent groups: the nilpotent members of the decision battery plus
/// further cyclic and abelian examples.
pub fn nilpotent_battery() -> Vec<BatteryGroup> {
    let mut out: Vec<BatteryGroup> = decision_battery().into_iter().filter(|g| g.nilpotent).collect();
    out.extend([
        entry("unipotent-x", file(2, 1, &["X"], &["1,X;0,1"]), true, true),
        entry("companion-f4", file(2, 2, &["X"], &["0,1;1,t"]), true, true),
        entry("affine-f4", file(2, 2, &["X"], &["t,X;0,1"]), true, true),
        entry("scalar-x", file(3, 1, &["X"], &["X,0;0,X"]), false, true),
        entry("diagonal-pair", conjugated(file(3, 1, &["X"], &["2,0,0;0,1,0;0,0,1", "1,0,0;0,2,0;0,0,1"]), "1,X,X;0,1,0;0,X,1"), true, true),
        entry("diag-x-square", file(5, 1, &["X"], &["X,0;0,X^2"]), false, true),
        entry("jordan-4", file(3, 1, &["X"], &["1,X,0,0;0,1,X,0;0,0,1,X;0,0,0,1"]), true, true),
    ]);
    out
}

/// Random finite group: a block upper triangular group whose diagonal blocks
/// are random elements of small constant groups and whose upper blocks are
/// random polynomials, conjugated by a random unitriangular matrix.
pub fn random_finite_group(seed: u64) -> BatteryGroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, k) = [(2u64, 1usize), (3, 1), (2, 2), (5, 1)][rng.gen_range(0..4)];
    let n = rng.gen_range(2..=3);
    let q = p.pow(k as u32);
    let coeff = |rng: &mut ChaCha8Rng| -> String {
        let c = rng.gen_range(0..q);
        if k == 1 || c < p {
            c.to_string()
        } else {
            format!("({}*t + {})", c / p, c % p)
        }
    };
    let nonzero = |rng: &mut ChaCha8Rng| -> String {
        let c = rng.gen_range(1..q);
        if k == 1 || c < p {
            c.to_string()
        } else {
            format!("({}*t + {})", c / p, c % p)
        }
    };
    let poly = |rng: &mut ChaCha8Rng| -> String {
        let terms: Vec<String> = (0..=rng.gen_range(0..=2)).map(|d| format!("{}*X^{d}", coeff(rng))).collect();
        terms.join(" + ")
    };
    let ngens = rng.gen_range(1..=2);
    let mut gens = Vec::new();
    for _ in 0..ngens {
        let mut rows = Vec::new();
        for r in 0..n {
            let mut row = Vec::new();
            for c in 0..n {
                row.push(match r.cmp(&c) {
                    std::cmp::Ordering::Equal => nonzero(&mut rng),
                    std::cmp::Ordering::Less => poly(&mut rng),
                    std::cmp::Ordering::Greater => "0".to_string(),
                });
            }
            rows.push(row.join(","));
        }
        gens.push(rows.join(";"));
    }
    let mut conj = Vec::new();
    for r in 0..n {
        let row: Vec<String> = (0..n)
            .map(|c| match r.cmp(&c) {
                std::cmp::Ordering::Equal => "1".to_string(),
                std::cmp::Ordering::Less => format!("X^{}", rng.gen_range(0..=1)),
                std::cmp::Ordering::Greater => "0".to_string(),
            })
            .collect();
        conj.push(row.join(","));
    }
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    let f = conjugated(file(p, k, &["X"], &gens), &conj.join(";"));
    entry(&format!("random-finite-{seed}"), f, true, false)
}
