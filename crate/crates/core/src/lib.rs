pub mod battery;
pub mod envalg;
pub mod error;
pub mod field;
pub mod finiteness;
pub mod funcfield;
pub mod gf;
pub mod io;
pub mod linalg;
pub mod nilpotent;
pub mod oracle;
pub mod order;
pub mod trace;

pub use error::{Error, Result};
pub use field::Field;
pub use finiteness::{AdmissiblePoint, Env, Evidence, Verdict};
pub use funcfield::{FuncField, MultiPoly, RatFunc};
pub use gf::{Gf, GfElem, Tower};
pub use io::{Group, GroupFile, Report};
pub use linalg::{Mat, Subspace};
pub use order::{Engine, GroupOrder};
pub use trace::Trace;
