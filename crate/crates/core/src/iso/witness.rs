use serde::Serialize;

use crate::algebra::{transport, BaseChange, SuperAlgebra};
use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilyParams, FamilyParamsM1, FamilyParamsM2};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::GaussianRational;

/// Generator change `y'_1 = a1·y_1 + a_top·y_top`, `y'_top = b_{top−1}·y_{top−1} + b_top·y_top`,
/// with the rest of the basis generated from these, plus the resulting
/// base change.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub a1: GaussianRational,
    pub a_top: GaussianRational,
    pub b_top: GaussianRational,
    #[serde(skip)]
    pub induced: BaseChange,
}

/// New basis from the generator change, with `b_{top−1}` given explicitly.
///
/// `x'_1 = [y'_1, y'_1]`, `x'_{t+1} = [x'_t, x'_1]`, `y'_t = [y'_{t−1}, x'_1]`.
pub fn generator_basis(
    a: &SuperAlgebra,
    a1: &GaussianRational,
    a_top: &GaussianRational,
    b_prev: &GaussianRational,
    b_top: &GaussianRational,
) -> Result<Vec<Vector>> {
    let (n, m) = (a.n(), a.m());
    if n == 0 || m < 2 {
        return Err(Error::Precondition(
            "need at least one even and two odd basis vectors".into(),
        ));
    }
    let dim = a.dim();
    let mut y1 = zero_vector(dim);
    y1[a.y(1)] = a1.clone();
    y1[a.y(m)] += a_top;
    let mut ytop = zero_vector(dim);
    ytop[a.y(m - 1)] = b_prev.clone();
    ytop[a.y(m)] += b_top;
    let x1 = a.product(&y1, &y1)?;
    let mut basis = vec![x1.clone()];
    for _ in 1..n {
        let next = a.product(basis.last().expect("nonempty"), &x1)?;
        basis.push(next);
    }
    basis.push(y1);
    for _ in 2..m {
        let next = a.product(basis.last().expect("nonempty"), &x1)?;
        basis.push(next);
    }
    basis.push(ytop);
    Ok(basis)
}

impl IsoWitness {
    /// The witness for `(a1, a_top, b_top)` acting on the algebra of `p`. For
    /// m1, `b_n = −a_top·b_top·γ/a1`; for m2, `a_top` must be zero.
    pub fn new(
        p: &FamilyParams,
        a1: GaussianRational,
        a_top: GaussianRational,
        b_top: GaussianRational,
    ) -> Result<Self> {
        if a1.is_zero() || b_top.is_zero() {
            return Err(Error::InvalidParams("a1 and b_top must be nonzero".into()));
        }
        let b_prev = match p {
            FamilyParams::M1(q) => -&(&(&a_top * &b_top) * &q.gamma).checked_div(&a1)?,
            FamilyParams::M2(_) => {
                if !a_top.is_zero() {
                    return Err(Error::InvalidParams(
                        "a_top is unused in the m2 family and must be 0".into(),
                    ));
                }
                GaussianRational::zero()
            }
        };
        let alg = p.build()?;
        let basis = generator_basis(&alg, &a1, &a_top, &b_prev, &b_top)?;
        let induced = BaseChange::from_vectors(alg.n(), alg.m(), &basis)?;
        Ok(IsoWitness {
            a1,
            a_top,
            b_top,
            induced,
        })
    }

    pub fn identity(p: &FamilyParams) -> Result<Self> {
        IsoWitness::new(
            p,
            GaussianRational::one(),
            GaussianRational::zero(),
            GaussianRational::one(),
        )
    }
}

/// Reads `γ, β_j, β` off a table and checks that it is exactly the family
/// member with those parameters.
pub fn read_params(kind: FamilyKind, n: usize, a: &SuperAlgebra) -> Result<FamilyParams> {
    if a.n() != n || a.m() != kind.odd_dim(n) {
        return Err(Error::DimensionMismatch {
            expected: n + kind.odd_dim(n),
            found: a.dim(),
        });
    }
    let (x, y) = (|i: usize| i - 1, |j: usize| n + j - 1);
    let p: FamilyParams = match kind {
        FamilyKind::M1 => {
            let betas = kind
                .beta_range(n)
                .map(|k| (k, a.coefficient(x(1), y(n + 1), y(k))))
                .collect::<Vec<_>>();
            FamilyParamsM1::new(
                n,
                a.coefficient(y(n + 1), y(n + 1), x(n)),
                betas,
                a.coefficient(y(1), y(n + 1), x(n)),
            )?
            .into()
        }
        FamilyKind::M2 => {
            let betas = kind
                .beta_range(n)
                .map(|k| (k, a.coefficient(x(1), y(n + 2), y(k))))
                .collect::<Vec<_>>();
            FamilyParamsM2::new(n, betas)?.into()
        }
    };
    if p.build()? != *a {
        return Err(Error::NotInFamily(format!(
            "table is not a member of the {} family",
            kind.name()
        )));
    }
    Ok(p)
}

/// `transport(build(p), w.induced) == build(q)`, entry by entry.
pub fn verify_witness(p: &FamilyParams, q: &FamilyParams, w: &IsoWitness) -> bool {
    let (Ok(a), Ok(b)) = (p.build(), q.build()) else {
        return false;
    };
    match transport(&a, &w.induced) {
        Ok(t) => t == b,
        Err(_) => false,
    }
}

/// Parameters of `transport(build(p), w.induced)`.
pub fn apply_witness(p: &FamilyParams, w: &IsoWitness) -> Result<FamilyParams> {
    let t = transport(&p.build()?, &w.induced)?;
    read_params(p.kind(), p.n(), &t)
}
