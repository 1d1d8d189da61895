#![allow(dead_code)]

use leibsuper_core::families::{FamilyKind, FamilyParams, FamilyParamsM1};
use leibsuper_core::iso::{apply_witness, IsoWitness};
use leibsuper_core::random::{random_nonzero_scalar, random_params, random_scalar};
use leibsuper_core::GaussianRational;
use rand::Rng;

pub fn g(v: i64) -> GaussianRational {
    GaussianRational::from_int(v)
}

pub fn m1(n: usize, gamma: i64, betas: &[(usize, i64)], beta: i64) -> FamilyParams {
    FamilyParamsM1::new(n, g(gamma), betas.iter().map(|&(j, c)| (j, g(c))), g(beta))
        .unwrap()
        .into()
}

pub const KINDS: [FamilyKind; 2] = [FamilyKind::M1, FamilyKind::M2];

pub fn random_witness<R: Rng + ?Sized>(rng: &mut R, p: &FamilyParams) -> IsoWitness {
    let a_top = match p.kind() {
        FamilyKind::M1 => random_scalar(rng),
        FamilyKind::M2 => GaussianRational::zero(),
    };
    IsoWitness::new(
        p,
        random_nonzero_scalar(rng),
        a_top,
        random_nonzero_scalar(rng),
    )
    .unwrap()
}

/// `p` pushed through a random generator change.
pub fn random_image<R: Rng + ?Sized>(rng: &mut R, p: &FamilyParams) -> FamilyParams {
    let w = random_witness(rng, p);
    apply_witness(p, &w).unwrap()
}

/// Half transported copies, half independent draws with frequent zeros.
pub fn random_pair<R: Rng + ?Sized>(
    rng: &mut R,
    kind: FamilyKind,
    n: usize,
) -> (FamilyParams, FamilyParams) {
    let p = random_params(rng, kind, n, 0.4).unwrap();
    let q = if rng.gen_bool(0.5) {
        random_image(rng, &p)
    } else {
        random_params(rng, kind, n, 0.4).unwrap()
    };
    (p, q)
}
