//! JSON formats for algebras and family parameters.
//!
//! Algebra: `{"n", "m", "table": [{"p", "q", "entries": [{"r", "c"}]}]}`,
//! rows sorted by `(p, q)`, entries by `r`, absent pairs are zero products.
//! Parameters: `{"kind", "n", "gamma"?, "betas": {"j": c}, "beta"?}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilyParams, FamilyParamsM1, FamilyParamsM2};
use crate::scalar::GaussianRational;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryJson {
    r: usize,
    c: GaussianRational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RowJson {
    p: usize,
    q: usize,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    n: usize,
    m: usize,
    table: Vec<RowJson>,
}

/// Largest `n + m` accepted when parsing an algebra.
pub const MAX_DIM: usize = 256;
/// Largest family `n` accepted when parsing parameters.
pub const MAX_FAMILY_N: usize = 64;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn algebra_to_value(a: &SuperAlgebra) -> serde_json::Value {
    let dim = a.dim();
    let mut table = Vec::new();
    for p in 0..dim {
        for q in 0..dim {
            let s = a.structure(p, q);
            if s.is_empty() {
                continue;
            }
            table.push(RowJson {
                p,
                q,
                entries: s
                    .iter()
                    .map(|(r, c)| EntryJson {
                        r: *r,
                        c: c.clone(),
                    })
                    .collect(),
            });
        }
    }
    serde_json::to_value(AlgebraJson {
        n: a.n(),
        m: a.m(),
        table,
    })
    .expect("serializable")
}

pub fn algebra_to_string(a: &SuperAlgebra) -> String {
    serde_json::to_string_pretty(&algebra_to_value(a)).expect("serializable")
}

/// Parses an algebra; repeated `(p, q)` rows or `r` entries are rejected.
pub fn algebra_from_str(s: &str) -> Result<SuperAlgebra> {
    let j: AlgebraJson = serde_json::from_str(s).map_err(parse_err)?;
    if j.n.saturating_add(j.m) > MAX_DIM {
        return Err(Error::Parse(format!(
            "dimension {} + {} exceeds {MAX_DIM}",
            j.n, j.m
        )));
    }
    let mut a = SuperAlgebra::zero(j.n, j.m);
    let mut rows = BTreeSet::new();
    for row in j.table {
        if !rows.insert((row.p, row.q)) {
            return Err(Error::Parse(format!(
                "duplicate row ({}, {})",
                row.p, row.q
            )));
        }
        let dim = a.dim();
        for index in [row.p, row.q] {
            if index >= dim {
                return Err(Error::IndexOutOfRange { index, dim });
            }
        }
        let mut rs = BTreeSet::new();
        for e in row.entries {
            if !rs.insert(e.r) {
                return Err(Error::Parse(format!(
                    "duplicate entry r = {} in row ({}, {})",
                    e.r, row.p, row.q
                )));
            }
            a.add_entry(row.p, row.q, e.r, &e.c)?;
        }
    }
    Ok(a)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsJson {
    kind: FamilyKind,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<GaussianRational>,
    #[serde(default)]
    betas: BTreeMap<usize, GaussianRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<GaussianRational>,
}

/// Every `β_j` in range is written, zeros included.
pub fn params_to_value(p: &FamilyParams) -> serde_json::Value {
    let betas = p
        .kind()
        .beta_range(p.n())
        .map(|j| (j, p.get(crate::families::Coord::BetaJ(j))))
        .collect();
    let j = match p {
        FamilyParams::M1(q) => ParamsJson {
            kind: FamilyKind::M1,
            n: q.n(),
            gamma: Some(q.gamma.clone()),
            betas,
            beta: Some(q.beta.clone()),
        },
        FamilyParams::M2(q) => ParamsJson {
            kind: FamilyKind::M2,
            n: q.n(),
            gamma: None,
            betas,
            beta: None,
        },
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn params_to_string(p: &FamilyParams) -> String {
    serde_json::to_string_pretty(&params_to_value(p)).expect("serializable")
}

pub fn params_from_value(v: serde_json::Value) -> Result<FamilyParams> {
    let j: ParamsJson = serde_json::from_value(v).map_err(parse_err)?;
    if j.n > MAX_FAMILY_N {
        return Err(Error::InvalidParams(format!(
            "n = {} exceeds {MAX_FAMILY_N}",
            j.n
        )));
    }
    match j.kind {
        FamilyKind::M1 => Ok(FamilyParamsM1::new(
            j.n,
            j.gamma.unwrap_or_else(GaussianRational::zero),
            j.betas,
            j.beta.unwrap_or_else(GaussianRational::zero),
        )?
        .into()),
        FamilyKind::M2 => {
            if j.gamma.is_some() || j.beta.is_some() {
                return Err(Error::InvalidParams(
                    "the m2 family has no gamma or beta".into(),
                ));
            }
            Ok(FamilyParamsM2::new(j.n, j.betas)?.into())
        }
    }
}

pub fn params_from_str(s: &str) -> Result<FamilyParams> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(parse_err)?;
    params_from_value(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_m1;

    #[test]
    fn algebra_round_trip() {
        let p = FamilyParamsM1::new(
            3,
            GaussianRational::one(),
            [(3, GaussianRational::from_int(2))],
            GaussianRational::from_int(5),
        )
        .unwrap();
        let a = build_m1(&p).unwrap();
        let s = algebra_to_string(&a);
        let b = algebra_from_str(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(algebra_to_string(&b), s);
    }

    #[test]
    fn params_round_trip() {
        let p: FamilyParams = FamilyParamsM2::new(3, [(4, GaussianRational::i())])
            .unwrap()
            .into();
        let s = params_to_string(&p);
        assert_eq!(params_from_str(&s).unwrap(), p);
        let q: FamilyParams =
            FamilyParamsM1::new(4, GaussianRational::one(), [], GaussianRational::zero())
                .unwrap()
                .into();
        assert_eq!(params_from_str(&params_to_string(&q)).unwrap(), q);
    }

    #[test]
    fn malformed_inputs() {
        assert!(algebra_from_str("{").is_err());
        assert!(algebra_from_str(
            r#"{"n":1,"m":0,"table":[{"p":0,"q":0,"entries":[{"r":3,"c":{"re":"1","im":"0"}}]}]}"#
        )
        .is_err());
        assert!(params_from_str(r#"{"kind":"m1","n":1,"betas":{}}"#).is_err());
        assert!(
            params_from_str(r#"{"kind":"m1","n":3,"betas":{"9":{"re":"1","im":"0"}}}"#).is_err()
        );
        assert!(params_from_str(r#"{"kind":"m2","n":3,"gamma":{"re":"1","im":"0"}}"#).is_err());
        assert!(params_from_str(r#"{"kind":"m2","n":100000000000}"#).is_err());
        assert!(algebra_from_str(r#"{"n":100000000000,"m":0,"table":[]}"#).is_err());
    }
}
