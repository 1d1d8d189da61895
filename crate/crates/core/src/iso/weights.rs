//! How the diagonal part of the isomorphism group acts on family parameters.
//!
//! For the generator change `y'_1 = a1·y_1 + a·y_top`, `y'_top = … + b·y_top`
//! with `a = 0`, every parameter `c` scales by a character
//! `c' = c · a1^e · b^f`; the exponent pairs are listed here and regenerated
//! from transport in the test suite.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Coord, FamilyKind, FamilyParams, FamilyParamsM1};
use crate::scalar::GaussianRational;

/// Character `c' = c · a1^{a1_exp} · b^{b_exp}` of one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub coord: Coord,
    pub a1_exp: i64,
    pub b_exp: i64,
}

impl Weight {
    pub fn row(&self) -> [i64; 2] {
        [self.a1_exp, self.b_exp]
    }
}

/// Offset in the m2 exponent `b·β_j = a1^{2j − M2_BETA_OFFSET}·β'_j`.
pub const M2_BETA_OFFSET: i64 = 3;

pub fn character(kind: FamilyKind, n: usize, coord: Coord) -> [i64; 2] {
    let n = n as i64;
    match (kind, coord) {
        (FamilyKind::M1, Coord::Gamma) => [-2 * n, 2],
        (FamilyKind::M1, Coord::BetaJ(j)) => [-(2 * j as i64 - 3), 1],
        (FamilyKind::M1, Coord::Beta) => [-(2 * n - 1), 1],
        (FamilyKind::M2, Coord::BetaJ(j)) => [-(2 * j as i64 - M2_BETA_OFFSET), 1],
        (FamilyKind::M2, _) => [0, 0],
    }
}

pub fn weight_table(kind: FamilyKind, n: usize) -> Vec<Weight> {
    FamilyParams::coords(kind, n)
        .into_iter()
        .map(|coord| {
            let [a1_exp, b_exp] = character(kind, n, coord);
            Weight {
                coord,
                a1_exp,
                b_exp,
            }
        })
        .collect()
}

/// Lowest `β` index: `⌊(n+4)/2⌋` or `⌊(n+5)/2⌋`.
pub fn beta_lo(kind: FamilyKind, n: usize) -> usize {
    *kind.beta_range(n).start()
}

/// Coefficient of `a` in the affine law for `β`:
/// `a1^{2n} β' = a·b·κ + a1·b·β`, with `κ = γ − 4β_lo²` for odd `n`
/// and `κ = γ` for even `n`.
pub fn kappa(p: &FamilyParamsM1) -> GaussianRational {
    let n = p.n();
    if n % 2 == 1 {
        let lo = p.beta_j(beta_lo(FamilyKind::M1, n));
        &p.gamma - &(&GaussianRational::from_int(4) * &(&lo * &lo))
    } else {
        p.gamma.clone()
    }
}

/// Coordinates that carry isomorphism information. In m1, `β` can be moved
/// freely by `a` unless `κ = 0`.
pub fn active_coords(p: &FamilyParams) -> Vec<Coord> {
    let all = FamilyParams::coords(p.kind(), p.n());
    match p {
        FamilyParams::M1(q) if !kappa(q).is_zero() => {
            all.into_iter().filter(|c| *c != Coord::Beta).collect()
        }
        _ => all,
    }
}

/// `χ(a1, b)` for a character row.
pub fn eval_character(
    row: [i64; 2],
    a1: &GaussianRational,
    b: &GaussianRational,
) -> Result<GaussianRational> {
    Ok(&a1.pow(row[0])? * &b.pow(row[1])?)
}

/// Parameters of the image of `p` under the generator change `(a1, a, b)`,
/// from the closed-form action. In m2 the `a` component must be zero.
pub fn act(
    p: &FamilyParams,
    a1: &GaussianRational,
    a: &GaussianRational,
    b: &GaussianRational,
) -> Result<FamilyParams> {
    if a1.is_zero() || b.is_zero() {
        return Err(Error::InvalidParams("a1 and b must be nonzero".into()));
    }
    let kind = p.kind();
    let n = p.n();
    let mut out = FamilyParams::zero(kind, n)?;
    for coord in FamilyParams::coords(kind, n) {
        let chi = eval_character(character(kind, n, coord), a1, b)?;
        out.set(coord, &p.get(coord) * &chi)?;
    }
    match p {
        FamilyParams::M1(q) => {
            // a1^{2n} β' = a·b·κ + a1·b·β
            let num = &(&(a * b) * &kappa(q)) + &(&(a1 * b) * &q.beta);
            let beta = num.checked_div(&a1.pow(2 * n as i64)?)?;
            out.set(Coord::Beta, beta)?;
        }
        FamilyParams::M2(_) => {
            if !a.is_zero() {
                return Err(Error::InvalidParams(
                    "the m2 action has no a component".into(),
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let t = weight_table(FamilyKind::M1, 3);
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].row(), [-6, 2]);
        assert_eq!(t[1].row(), [-3, 1]);
        assert_eq!(t[2].row(), [-5, 1]);
        let t = weight_table(FamilyKind::M2, 2);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].coord, Coord::BetaJ(3));
        assert_eq!(t[0].row(), [-3, 1]);
    }

    #[test]
    fn kappa_odd_and_even() {
        let p = FamilyParamsM1::new(
            3,
            GaussianRational::from_int(4),
            [(3, GaussianRational::one())],
            GaussianRational::zero(),
        )
        .unwrap();
        assert!(kappa(&p).is_zero());
        let q = FamilyParamsM1::new(
            4,
            GaussianRational::from_int(4),
            [],
            GaussianRational::zero(),
        )
        .unwrap();
        assert_eq!(kappa(&q), GaussianRational::from_int(4));
    }
}
