//! Seeded random generation of scalars, matrices and base changes.

use rand::Rng;

use crate::algebra::BaseChange;
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

/// A Gaussian rational with small numerators and denominators; zero is possible.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    let re = rng.gen_range(-5i64..=5);
    let im = rng.gen_range(-5i64..=5);
    let dr = rng.gen_range(1i64..=3);
    let di = rng.gen_range(1i64..=3);
    GaussianRational::from_parts(re, dr, im, di)
}

pub fn random_nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> GaussianRational {
    loop {
        let c = random_scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Zero with probability `p_zero`, otherwise a nonzero random scalar.
pub fn sparse_scalar<R: Rng + ?Sized>(rng: &mut R, p_zero: f64) -> GaussianRational {
    if rng.gen_bool(p_zero) {
        GaussianRational::zero()
    } else {
        random_nonzero_scalar(rng)
    }
}

pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, size: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            for j in 0..size {
                m[(i, j)] = random_scalar(rng);
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_base_change<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> BaseChange {
    BaseChange::new(random_invertible(rng, n), random_invertible(rng, m)).expect("invertible")
}

/// Parameters with each coordinate zero with probability `p_zero`.
pub fn random_params<R: Rng + ?Sized>(
    rng: &mut R,
    kind: crate::families::FamilyKind,
    n: usize,
    p_zero: f64,
) -> crate::error::Result<crate::families::FamilyParams> {
    let mut p = crate::families::FamilyParams::zero(kind, n)?;
    for c in crate::families::FamilyParams::coords(kind, n) {
        p.set(c, sparse_scalar(rng, p_zero))?;
    }
    Ok(p)
}
