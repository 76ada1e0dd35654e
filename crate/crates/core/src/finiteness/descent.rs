use crate::funcfield::{FuncField, RatFunc};
use crate::linalg::{nullspace, Mat, Subspace};

/// Largest subspace of the nullspace of `e` invariant under `gens`, and the
/// number of strict shrinking steps taken.
pub fn module_via_nullspace(ff: &FuncField, gens: &[Mat<RatFunc>], e: &Mat<RatFunc>) -> (Subspace<RatFunc>, usize) {
    let mut u = nullspace(e, ff);
    let mut steps = 0;
    loop {
        let mut shrunk = false;
        for s in gens {
            if u.dim() == 0 {
                return (u, steps);
            }
            let w = u.intersect(&u.image(s, ff), ff);
            if w.dim() < u.dim() {
                u = w;
                steps += 1;
                shrunk = true;
            }
        }
        if !shrunk {
            return (u, steps);
        }
    }
}
