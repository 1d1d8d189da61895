use serde::Serialize;

use crate::linalg::{is_zero_vector, zero_vector, Vector};
use crate::scalar::GaussianRational;

use super::{right_annihilator, SuperAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub ok: bool,
    /// `(p, q, r)` with `[b_p, b_q]` having a nonzero `b_r` of the wrong parity.
    pub violations: Vec<(usize, usize, usize)>,
}

pub fn check_graded_closure(a: &SuperAlgebra) -> ClosureReport {
    let mut violations = Vec::new();
    for e in a.entries() {
        if a.parity(e.p).add(a.parity(e.q)) != a.parity(e.r) {
            violations.push((e.p, e.q, e.r));
        }
    }
    ClosureReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeibnizViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// `[x,[y,z]] − [[x,y],z] + (−1)^{|y||z|} [[x,z],y]`
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeibnizReport {
    pub ok: bool,
    pub violations: Vec<LeibnizViolation>,
}

fn accumulate(
    out: &mut [GaussianRational],
    sign: &GaussianRational,
    coeff: &GaussianRational,
    a: &SuperAlgebra,
    p: usize,
    q: usize,
) {
    let s = a.structure(p, q);
    if s.is_empty() {
        return;
    }
    let f = sign * coeff;
    for (r, c) in s {
        out[*r] += &(&f * c);
    }
}

/// Evaluates the graded Leibniz identity on every basis triple.
pub fn check_leibniz(a: &SuperAlgebra) -> LeibnizReport {
    let dim = a.dim();
    let one = GaussianRational::one();
    let minus = GaussianRational::from_int(-1);
    let mut violations = Vec::new();
    let mut res = zero_vector(dim);
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                for c in res.iter_mut() {
                    if !c.is_zero() {
                        *c = GaussianRational::zero();
                    }
                }
                // [x, [y, z]]
                for (r, c) in a.structure(y, z) {
                    accumulate(&mut res, &one, c, a, x, *r);
                }
                // − [[x, y], z]
                for (r, c) in a.structure(x, y) {
                    accumulate(&mut res, &minus, c, a, *r, z);
                }
                // + (−1)^{αβ} [[x, z], y]
                let sign = a.parity(y).sign(a.parity(z));
                for (r, c) in a.structure(x, z) {
                    accumulate(&mut res, &sign, c, a, *r, y);
                }
                if !is_zero_vector(&res) {
                    violations.push(LeibnizViolation {
                        x,
                        y,
                        z,
                        residual: res.clone(),
                    });
                }
            }
        }
    }
    LeibnizReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizationReport {
    pub ok: bool,
    pub failing_pairs: Vec<(usize, usize)>,
}

/// Checks `[a, b] + (−1)^{|a||b|} [b, a] ∈ R(L)` on all basis pairs.
pub fn symmetrized_in_annihilator(a: &SuperAlgebra) -> SymmetrizationReport {
    let ann = right_annihilator(a);
    let dim = a.dim();
    let mut failing_pairs = Vec::new();
    for p in 0..dim {
        for q in p..dim {
            let mut v = a.basis_product(p, q);
            let sign = a.parity(p).sign(a.parity(q));
            for (r, c) in a.structure(q, p) {
                v[*r] += &(&sign * c);
            }
            if !ann.contains(&v) {
                failing_pairs.push((p, q));
            }
        }
    }
    SymmetrizationReport {
        ok: failing_pairs.is_empty(),
        failing_pairs,
    }
}
