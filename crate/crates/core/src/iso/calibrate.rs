//! Recovers the parameter weights from transport alone.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Coord, FamilyKind, FamilyParams};
use crate::random::{random_nonzero_scalar, random_params, random_scalar};
use crate::scalar::GaussianRational;

use super::weights::{eval_character, kappa, Weight};
use super::witness::{apply_witness, IsoWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub kind: FamilyKind,
    pub n: usize,
    pub weights: Vec<Weight>,
    /// m1: whether `a1^{2n} β' = a·b·κ + a1·b·β` held on every sample.
    pub affine_beta: Option<bool>,
    /// m2: the `c` in `b·β_j = a1^{2j−c}·β'_j`, identical for all `j`.
    pub beta_exponent_offset: Option<i64>,
    pub samples: usize,
}

fn two_adic(v: &BigInt) -> Option<i64> {
    let mut v = v.clone();
    let mut e = 0;
    let two = BigInt::from(2);
    while !v.is_one() {
        if v.is_zero() || (&v % &two) != BigInt::zero() {
            return None;
        }
        v /= &two;
        e += 1;
    }
    Some(e)
}

/// `e` with `r = 2^e`, if any.
fn log2_exact(r: &GaussianRational) -> Option<i64> {
    if !r.im.is_zero() || !r.re.is_positive() {
        return None;
    }
    let num = two_adic(r.re.numer())?;
    let den = two_adic(r.re.denom())?;
    Some(num - den)
}

fn probe(p: &FamilyParams, a1: i64, b: i64) -> Result<FamilyParams> {
    let w = IsoWitness::new(
        p,
        GaussianRational::from_int(a1),
        GaussianRational::zero(),
        GaussianRational::from_int(b),
    )?;
    apply_witness(p, &w)
}

fn all_nonzero<R: rand::Rng>(rng: &mut R, kind: FamilyKind, n: usize) -> Result<FamilyParams> {
    random_params(rng, kind, n, 0.0)
}

/// Reads each parameter's weight from probes `(a1, b) = (2, 1)` and
/// `(1, 2)`, then checks the full action on `samples` random instances and
/// random `(a1, a_top, b_top)`.
pub fn calibrate_exponents(
    kind: FamilyKind,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<Calibration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = all_nonzero(&mut rng, kind, n)?;
    let pa = probe(&p, 2, 1)?;
    let pb = probe(&p, 1, 2)?;
    let mut weights = Vec::new();
    for c in FamilyParams::coords(kind, n) {
        let base = p.get(c);
        let ra = pa.get(c).checked_div(&base)?;
        let rb = pb.get(c).checked_div(&base)?;
        let (Some(a1_exp), Some(b_exp)) = (log2_exact(&ra), log2_exact(&rb)) else {
            return Err(Error::InconsistentExponents(format!(
                "{c} does not scale by a power of the probe"
            )));
        };
        weights.push(Weight {
            coord: c,
            a1_exp,
            b_exp,
        });
    }

    let mut affine_ok = true;
    for _ in 0..samples {
        let p = all_nonzero(&mut rng, kind, n)?;
        let a1 = random_nonzero_scalar(&mut rng);
        let b = random_nonzero_scalar(&mut rng);
        let a = match kind {
            FamilyKind::M1 => random_scalar(&mut rng),
            FamilyKind::M2 => GaussianRational::zero(),
        };
        let w = IsoWitness::new(&p, a1.clone(), a.clone(), b.clone())?;
        let q = apply_witness(&p, &w)?;
        for wt in &weights {
            let expected = match (&p, wt.coord) {
                (FamilyParams::M1(pp), Coord::Beta) => {
                    // measured a = 0 weight plus the affine term a·b·κ / a1^{2n}
                    let scaled = &pp.beta * &eval_character(wt.row(), &a1, &b)?;
                    let affine = (&(&a * &b) * &kappa(pp)).checked_div(&a1.pow(2 * n as i64)?)?;
                    let expected = &scaled + &affine;
                    if q.get(Coord::Beta) != expected {
                        affine_ok = false;
                    }
                    expected
                }
                _ => &p.get(wt.coord) * &eval_character(wt.row(), &a1, &b)?,
            };
            if q.get(wt.coord) != expected && !(wt.coord == Coord::Beta && kind == FamilyKind::M1) {
                return Err(Error::InconsistentExponents(format!(
                    "{} does not follow a1^{} b^{} on a random sample",
                    wt.coord, wt.a1_exp, wt.b_exp
                )));
            }
        }
    }

    let beta_exponent_offset = match kind {
        FamilyKind::M1 => None,
        FamilyKind::M2 => {
            let offsets: Vec<i64> = weights
                .iter()
                .filter_map(|w| match w.coord {
                    // a1_exp = −(2j − c)
                    Coord::BetaJ(j) => Some(2 * j as i64 + w.a1_exp),
                    _ => None,
                })
                .collect();
            if offsets.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InconsistentExponents(format!(
                    "m2 offsets disagree: {offsets:?}"
                )));
            }
            offsets.first().copied()
        }
    };

    if !affine_ok {
        return Err(Error::InconsistentExponents(
            "affine law for beta fails".into(),
        ));
    }
    Ok(Calibration {
        kind,
        n,
        weights,
        affine_beta: (kind == FamilyKind::M1).then_some(affine_ok),
        beta_exponent_offset,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log2_detects_powers() {
        assert_eq!(log2_exact(&GaussianRational::from_ratio(1, 8)), Some(-3));
        assert_eq!(log2_exact(&GaussianRational::from_int(4)), Some(2));
        assert_eq!(log2_exact(&GaussianRational::from_int(3)), None);
        assert_eq!(log2_exact(&GaussianRational::from_int(-2)), None);
    }
}
