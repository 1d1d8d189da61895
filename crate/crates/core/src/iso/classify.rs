use serde::Serialize;

use crate::error::Result;
use crate::families::{
    descriptor, layout, layout_group, tail_coords, CaseTag, Coord, FamilyKind, FamilyParams,
    TailDescriptor,
};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::scalar::{power_product, GaussianRational};

use super::monomial::{solve_in_qi, MonomialSystem};
use super::orbit::unit_from_angle;
use super::weights::{active_coords, beta_lo, character, eval_character, kappa};

/// A complete isomorphism invariant within one family and dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub kind: FamilyKind,
    pub n: usize,
    pub branch: CaseTag,
    /// Nonzero parameters among the active ones, over all coordinates.
    pub zero_pattern: Vec<bool>,
    /// `Π c^t` over a Smith-form basis `t` of the integer relations among
    /// the characters of the nonzero active parameters.
    pub invariant_monomials: Vec<GaussianRational>,
    /// Invariant factors of the same exponent matrix; the stabilizer of a
    /// point is finite of order equal to their product when there are two.
    pub stabilizer_orders: Vec<i64>,
}

pub fn branch_of(p: &FamilyParams) -> CaseTag {
    let (kind, n) = (p.kind(), p.n());
    if p.values().iter().all(GaussianRational::is_zero) {
        return CaseTag::Zero;
    }
    match p {
        FamilyParams::M2(_) => CaseTag::M2W,
        FamilyParams::M1(q) => {
            let lo = q.beta_j(beta_lo(kind, n));
            if n % 2 == 1 {
                match (q.gamma.is_zero(), kappa(q).is_zero(), lo.is_zero()) {
                    (false, false, _) => CaseTag::GammaGeneric,
                    (false, true, _) => CaseTag::GammaHalf,
                    (true, _, false) => CaseTag::GammaZeroUnit,
                    (true, _, true) => CaseTag::OddW,
                }
            } else if q.gamma.is_zero() {
                CaseTag::EvenW
            } else {
                CaseTag::EvenGamma
            }
        }
    }
}

fn nonzero_active(p: &FamilyParams) -> Vec<(Coord, GaussianRational)> {
    active_coords(p)
        .into_iter()
        .map(|c| (c, p.get(c)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

pub fn fingerprint(p: &FamilyParams) -> Result<Fingerprint> {
    let (kind, n) = (p.kind(), p.n());
    let active = active_coords(p);
    let zero_pattern = FamilyParams::coords(kind, n)
        .into_iter()
        .map(|c| active.contains(&c) && !p.get(c).is_zero())
        .collect();
    let nz = nonzero_active(p);
    let rows: Vec<Vec<i64>> = nz
        .iter()
        .map(|(c, _)| character(kind, n, *c).to_vec())
        .collect();
    let values: Vec<GaussianRational> = nz.iter().map(|(_, v)| v.clone()).collect();
    let snf = smith_normal_form(&IntMatrix::from_rows(2, &rows));
    let invariant_monomials = snf
        .left_kernel()
        .iter()
        .map(|t| power_product(&values, t))
        .collect::<Result<_>>()?;
    Ok(Fingerprint {
        kind,
        n,
        branch: branch_of(p),
        zero_pattern,
        invariant_monomials,
        stabilizer_orders: snf.invariant_factors(),
    })
}

/// `(j, s)` read from the zero pattern of the branch tail.
fn tail_indices(p: &FamilyParams, tag: CaseTag) -> (Option<usize>, Option<usize>) {
    if tag == CaseTag::Zero {
        return (None, None);
    }
    let tail = tail_coords(p.kind(), p.n(), tag);
    let k = tail.len();
    let nz: Vec<usize> = tail
        .iter()
        .enumerate()
        .filter(|(_, c)| !p.get(**c).is_zero())
        .map(|(i, _)| i + 1)
        .collect();
    let j = nz.first().copied().unwrap_or(k + 1);
    if tag.is_w() {
        let s = nz.get(1).map_or(k + 1 - j, |&second| second - j);
        (Some(j), Some(s))
    } else {
        (Some(j), None)
    }
}

/// The representative descriptor of `p`'s class. `free_tail` is the
/// normal form with the smallest value over the residual group members
/// expressible in `Q(i)`, or `None` when normalization leaves `Q(i)`.
pub fn classify(p: &FamilyParams) -> Result<TailDescriptor> {
    let (kind, n) = (p.kind(), p.n());
    let tag = branch_of(p);
    let (j, s) = tail_indices(p, tag);
    let l = layout(kind, n, tag, j, s)?;
    let mut sys = MonomialSystem::new(2);
    for (c, target) in &l.normalized {
        sys.push(
            character(kind, n, *c).to_vec(),
            target.checked_div(&p.get(*c))?,
        );
    }
    let free_tail = match solve_in_qi(&sys)? {
        None => None,
        Some(g) => {
            let mut base = Vec::with_capacity(l.free.len());
            for c in &l.free {
                base.push(&p.get(*c) * &eval_character(character(kind, n, *c), &g[0], &g[1])?);
            }
            let group = layout_group(kind, n, &l)?;
            let mut best: Option<Vec<GaussianRational>> = None;
            'members: for angles in &group.elements {
                let mut cand = Vec::with_capacity(base.len());
                for (v, a) in base.iter().zip(angles) {
                    if v.is_zero() {
                        cand.push(v.clone());
                        continue;
                    }
                    match unit_from_angle(*a) {
                        Some(u) => cand.push(v * &u),
                        None => continue 'members,
                    }
                }
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            best
        }
    };
    descriptor(kind, n, tag, j, s, free_tail)
}
