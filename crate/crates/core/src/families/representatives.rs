//! Descriptor-level representatives of the isomorphism classes.
//!
//! Odd `n = 2q − 1` (m1): `γ ≠ 0` with `β_{q+1} ≠ ±½`, `γ ≠ 0` with
//! `β_{q+1} = ±½`, `γ = 0` with `β_{q+1} = 1`, the two-normalization case
//! with `γ = β_{q+1} = 0`, and zero. Even `n = 2q` (m1): `γ ≠ 0`, `γ = 0`,
//! zero. m2: the two-normalization case and zero.
//!
//! A descriptor fixes which parameters vanish, which are normalized and
//! which are free (`free_slots`). Free values are determined up to the
//! residual finite group of order `torsion`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::orbit::{residual_action, ResidualGroup};
use crate::iso::weights::{beta_lo, character};
use crate::scalar::GaussianRational;

use super::{Coord, FamilyKind, FamilyParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// odd n: γ = 1, β_{q+1} ≠ ±½ free up to sign
    GammaGeneric,
    /// odd n: γ = 1, β_{q+1} = ½, β active
    GammaHalf,
    /// odd n: γ = 0, β_{q+1} = 1
    GammaZeroUnit,
    /// odd n: γ = β_{q+1} = 0
    OddW,
    /// even n: γ = 1
    EvenGamma,
    /// even n: γ = 0
    EvenW,
    /// m2: two normalizations
    M2W,
    Zero,
}

impl CaseTag {
    pub fn is_w(self) -> bool {
        matches!(self, CaseTag::OddW | CaseTag::EvenW | CaseTag::M2W)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TailDescriptor {
    pub kind: FamilyKind,
    pub n: usize,
    pub case_tag: CaseTag,
    /// First nonzero tail position (1-based); `k + 1` when the tail vanishes.
    pub j: Option<usize>,
    /// Offset from `j` to the second normalized position; `k + 1 − j` when
    /// there is none.
    pub s: Option<usize>,
    pub torsion: usize,
    pub free_slots: Vec<Coord>,
    /// Concrete free values, when known.
    pub free_tail: Option<Vec<GaussianRational>>,
}

/// Which coordinates a descriptor normalizes (with targets) and leaves free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub normalized: Vec<(Coord, GaussianRational)>,
    pub free: Vec<Coord>,
}

/// The tail coordinates a branch normalizes inside, in order.
pub fn tail_coords(kind: FamilyKind, n: usize, tag: CaseTag) -> Vec<Coord> {
    let betas: Vec<Coord> = kind.beta_range(n).map(Coord::BetaJ).collect();
    match tag {
        CaseTag::Zero => Vec::new(),
        CaseTag::M2W => betas,
        CaseTag::GammaGeneric | CaseTag::GammaZeroUnit => betas[1..].to_vec(),
        CaseTag::GammaHalf | CaseTag::OddW => {
            let mut t = betas[1..].to_vec();
            t.push(Coord::Beta);
            t
        }
        CaseTag::EvenGamma => betas,
        CaseTag::EvenW => {
            let mut t = betas;
            t.push(Coord::Beta);
            t
        }
    }
}

fn branches(kind: FamilyKind, n: usize) -> Vec<CaseTag> {
    match kind {
        FamilyKind::M2 => vec![CaseTag::M2W, CaseTag::Zero],
        FamilyKind::M1 if n % 2 == 1 => vec![
            CaseTag::GammaGeneric,
            CaseTag::GammaHalf,
            CaseTag::GammaZeroUnit,
            CaseTag::OddW,
            CaseTag::Zero,
        ],
        FamilyKind::M1 => vec![CaseTag::EvenGamma, CaseTag::EvenW, CaseTag::Zero],
    }
}

fn branch_allowed(kind: FamilyKind, n: usize, tag: CaseTag) -> bool {
    branches(kind, n).contains(&tag)
}

pub fn layout(
    kind: FamilyKind,
    n: usize,
    tag: CaseTag,
    j: Option<usize>,
    s: Option<usize>,
) -> Result<Layout> {
    if !branch_allowed(kind, n, tag) {
        return Err(Error::InvalidParams(format!(
            "branch {tag:?} does not occur for {} n={n}",
            kind.name()
        )));
    }
    let one = GaussianRational::one;
    let tail = tail_coords(kind, n, tag);
    let k = tail.len();
    let mut normalized = Vec::new();
    let mut free = Vec::new();
    let lo = Coord::BetaJ(beta_lo(kind, n));
    match tag {
        CaseTag::Zero => return Ok(Layout { normalized, free }),
        CaseTag::GammaGeneric => {
            normalized.push((Coord::Gamma, one()));
            free.push(lo);
        }
        CaseTag::GammaHalf => {
            normalized.push((Coord::Gamma, one()));
            normalized.push((lo, GaussianRational::from_ratio(1, 2)));
        }
        CaseTag::GammaZeroUnit => normalized.push((lo, one())),
        CaseTag::EvenGamma => normalized.push((Coord::Gamma, one())),
        CaseTag::OddW | CaseTag::EvenW | CaseTag::M2W => {}
    }
    let j = j.ok_or_else(|| Error::InvalidParams("descriptor needs j".into()))?;
    if tag.is_w() {
        let s = s.ok_or_else(|| Error::InvalidParams("descriptor needs s".into()))?;
        if j == 0 || j > k || s == 0 || j + s > k + 1 {
            return Err(Error::InvalidParams(format!(
                "(j, s) = ({j}, {s}) out of range for k = {k}"
            )));
        }
        normalized.push((tail[j - 1], one()));
        if j + s <= k {
            normalized.push((tail[j + s - 1], one()));
            free.extend_from_slice(&tail[j + s..]);
        }
    } else {
        if s.is_some() {
            return Err(Error::InvalidParams("this branch has no s index".into()));
        }
        if j == 0 || j > k + 1 {
            return Err(Error::InvalidParams(format!(
                "j = {j} out of range for k = {k}"
            )));
        }
        if j <= k {
            normalized.push((tail[j - 1], one()));
            free.extend_from_slice(&tail[j..]);
        }
    }
    Ok(Layout { normalized, free })
}

/// The residual group of a layout acting on its free slots.
pub fn layout_group(kind: FamilyKind, n: usize, l: &Layout) -> Result<ResidualGroup> {
    let rows: Vec<[i64; 2]> = l
        .normalized
        .iter()
        .map(|(c, _)| character(kind, n, *c))
        .collect();
    let free: Vec<[i64; 2]> = l.free.iter().map(|c| character(kind, n, *c)).collect();
    residual_action(&rows, &free)
}

pub fn descriptor(
    kind: FamilyKind,
    n: usize,
    tag: CaseTag,
    j: Option<usize>,
    s: Option<usize>,
    free_tail: Option<Vec<GaussianRational>>,
) -> Result<TailDescriptor> {
    let l = layout(kind, n, tag, j, s)?;
    let torsion = layout_group(kind, n, &l)?.order();
    if let Some(t) = &free_tail {
        if t.len() != l.free.len() {
            return Err(Error::DimensionMismatch {
                expected: l.free.len(),
                found: t.len(),
            });
        }
    }
    Ok(TailDescriptor {
        kind,
        n,
        case_tag: tag,
        j,
        s,
        torsion,
        free_slots: l.free,
        free_tail,
    })
}

/// Every branch with every admissible `(j, s)`, in branch order, then `j`,
/// then `s`; the zero descriptor comes last.
pub fn enumerate_representatives(n: usize, kind: FamilyKind) -> Result<Vec<TailDescriptor>> {
    if n < 2 {
        return Err(Error::InvalidParams("n must be at least 2".into()));
    }
    let mut out = Vec::new();
    for tag in branches(kind, n) {
        let k = tail_coords(kind, n, tag).len();
        match tag {
            CaseTag::Zero => out.push(descriptor(kind, n, tag, None, None, None)?),
            t if t.is_w() => {
                for j in 1..=k {
                    for s in 1..=k + 1 - j {
                        out.push(descriptor(kind, n, tag, Some(j), Some(s), None)?);
                    }
                }
            }
            _ => {
                for j in 1..=k + 1 {
                    out.push(descriptor(kind, n, tag, Some(j), None, None)?);
                }
            }
        }
    }
    Ok(out)
}

/// A parameter vector in the class of `d` with free slots `tail`, moved by
/// residual group element `member` (0 is the identity).
pub fn materialize(
    d: &TailDescriptor,
    tail: &[GaussianRational],
    member: usize,
) -> Result<FamilyParams> {
    let l = layout(d.kind, d.n, d.case_tag, d.j, d.s)?;
    if tail.len() != l.free.len() {
        return Err(Error::DimensionMismatch {
            expected: l.free.len(),
            found: tail.len(),
        });
    }
    let group = layout_group(d.kind, d.n, &l)?;
    if member >= group.order() {
        return Err(Error::IndexOutOfRange {
            index: member,
            dim: group.order(),
        });
    }
    let mult = if member == 0 {
        vec![GaussianRational::one(); tail.len()]
    } else {
        group.multipliers(member)?
    };
    let mut p = FamilyParams::zero(d.kind, d.n)?;
    for (c, v) in &l.normalized {
        p.set(*c, v.clone())?;
    }
    for ((c, v), m) in l.free.iter().zip(tail).zip(&mult) {
        p.set(*c, v * m)?;
    }
    if d.case_tag == CaseTag::GammaGeneric {
        let b = p.get(Coord::BetaJ(beta_lo(d.kind, d.n)));
        if (&b * &b) == GaussianRational::from_ratio(1, 4) {
            return Err(Error::InvalidParams(
                "β_{q+1} = ±1/2 belongs to the other γ ≠ 0 branch".into(),
            ));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(v: &[TailDescriptor]) -> Vec<(CaseTag, Option<usize>, Option<usize>)> {
        v.iter().map(|d| (d.case_tag, d.j, d.s)).collect()
    }

    #[test]
    fn odd_three() {
        let r = enumerate_representatives(3, FamilyKind::M1).unwrap();
        assert_eq!(
            keys(&r),
            vec![
                (CaseTag::GammaGeneric, Some(1), None),
                (CaseTag::GammaHalf, Some(1), None),
                (CaseTag::GammaHalf, Some(2), None),
                (CaseTag::GammaZeroUnit, Some(1), None),
                (CaseTag::OddW, Some(1), Some(1)),
                (CaseTag::Zero, None, None),
            ]
        );
        assert_eq!(r[0].torsion, 2);
    }

    #[test]
    fn even_two() {
        let r = enumerate_representatives(2, FamilyKind::M1).unwrap();
        assert_eq!(
            keys(&r),
            vec![
                (CaseTag::EvenGamma, Some(1), None),
                (CaseTag::EvenW, Some(1), Some(1)),
                (CaseTag::Zero, None, None),
            ]
        );
        let m2 = enumerate_representatives(2, FamilyKind::M2).unwrap();
        assert_eq!(
            keys(&m2),
            vec![
                (CaseTag::M2W, Some(1), Some(1)),
                (CaseTag::Zero, None, None)
            ]
        );
    }

    #[test]
    fn materialize_examples() {
        let r = enumerate_representatives(3, FamilyKind::M1).unwrap();
        let p = materialize(&r[0], &[GaussianRational::from_int(2)], 0).unwrap();
        let FamilyParams::M1(q) = &p else { panic!() };
        assert_eq!(q.gamma, GaussianRational::one());
        assert_eq!(q.beta_j(3), GaussianRational::from_int(2));
        assert!(q.beta.is_zero());
        let neg = materialize(&r[0], &[GaussianRational::from_int(2)], 1).unwrap();
        assert_eq!(neg.get(Coord::BetaJ(3)), GaussianRational::from_int(-2));
        assert!(materialize(&r[0], &[GaussianRational::from_ratio(1, 2)], 0).is_err());
        assert!(materialize(r.last().unwrap(), &[], 0).unwrap().is_zero());
    }
}
