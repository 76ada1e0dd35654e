use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::funcfield::{FuncField, RatFunc};
use crate::gf::Gf;
use crate::linalg::Mat;

use super::expr::parse_expr;

/// On-disk description of a finitely generated matrix group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub p: u64,
    #[serde(default = "one")]
    pub k: usize,
    /// Monic modulus of `F_q` over `F_p`, low degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_poly: Option<Vec<u64>>,
    pub vars: Vec<String>,
    pub generators: Vec<Vec<Vec<String>>>,
}

fn one() -> usize {
    1
}

/// Parsed generators together with their function field.
#[derive(Clone, Debug)]
pub struct Group {
    pub ff: FuncField,
    pub gens: Vec<Mat<RatFunc>>,
}

impl Group {
    pub fn degree(&self) -> usize {
        self.gens[0].rows()
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn valid_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_alphabetic() || c == '_') && cs.all(|c| c.is_alphanumeric() || c == '_')
}

impl GroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group files serialize")
    }

    fn coefficient_field(&self) -> Result<Gf> {
        if self.k == 0 {
            return Err(invalid("k must be at least 1"));
        }
        match &self.defining_poly {
            Some(poly) => {
                if poly.len() != self.k + 1 {
                    return Err(invalid(format!("defining_poly must have {} coefficients", self.k + 1)));
                }
                Gf::new(self.p, poly.clone())
            }
            None => Gf::with_degree(self.p, self.k),
        }
    }

    pub fn parse(&self) -> Result<Group> {
        let coeff = self.coefficient_field()?;
        for v in &self.vars {
            if !valid_identifier(v) {
                return Err(invalid(format!("'{v}' is not an identifier")));
            }
            if v == "t" && self.k > 1 {
                return Err(invalid("'t' is reserved for the coefficient-field generator"));
            }
        }
        let ff = FuncField::new(coeff, self.vars.clone())?;
        if self.generators.is_empty() {
            return Err(invalid("at least one generator is required"));
        }
        let n = self.generators[0].len();
        if n == 0 {
            return Err(invalid("generators must be nonempty"));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (g, grid) in self.generators.iter().enumerate() {
            if grid.len() != n || grid.iter().any(|row| row.len() != n) {
                return Err(invalid(format!("generator {} is not {n} x {n}", g + 1)));
            }
            let mut rows = Vec::with_capacity(n);
            for (r, row) in grid.iter().enumerate() {
                let mut out = Vec::with_capacity(n);
                for (c, src) in row.iter().enumerate() {
                    let v = parse_expr(src, &ff).map_err(|e| match e {
                        Error::Parse { column, message, .. } => Error::Parse {
                            line: 1,
                            column,
                            message: format!("generator {}, entry ({}, {}): {message}", g + 1, r + 1, c + 1),
                        },
                        other => other,
                    })?;
                    out.push(v);
                }
                rows.push(out);
            }
            let m = Mat::from_rows(rows);
            if ff.is_zero(&m.determinant(&ff)) {
                return Err(invalid(format!("generator {} is singular", g + 1)));
            }
            gens.push(m);
        }
        Ok(Group { ff, gens })
    }

    /// Writes a group back out with canonical entry strings.
    pub fn from_group(group: &Group) -> Self {
        let coeff = group.ff.coeff_field();
        let generators = group
            .gens
            .iter()
            .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|e| group.ff.format(e)).collect()).collect())
            .collect();
        GroupFile {
            p: coeff.p(),
            k: coeff.degree(),
            defining_poly: (coeff.degree() > 1).then(|| coeff.modulus().to_vec()),
            vars: group.ff.var_names().to_vec(),
            generators,
        }
    }
}

pub fn parse_group_file(text: &str) -> Result<Group> {
    GroupFile::from_json(text)?.parse()
}
