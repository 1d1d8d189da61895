use serde::Serialize;

use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::scalar::GaussianRational;

use super::{right_mult_operator, Parity, SpanBuilder, SuperAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RightMultReport {
    /// Dimension of the span of the `R_{b_p}` before closing.
    pub operator_span: (usize, usize),
    /// Whether the initial span was already closed under the bracket.
    pub closed: bool,
    pub antisymmetry_ok: bool,
    pub jacobi_ok: bool,
}

impl RightMultReport {
    pub fn ok(&self) -> bool {
        self.antisymmetry_ok && self.jacobi_ok
    }
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn unflatten(size: usize, v: &[GaussianRational]) -> Matrix {
    Matrix::from_rows(v.chunks(size).map(<[_]>::to_vec).collect()).expect("square")
}

fn graded_commutator(a: &Matrix, b: &Matrix, sign: &GaussianRational) -> Matrix {
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    ab.sub(&ba.scaled(sign)).expect("same shape")
}

/// The span of the right multiplications `R_{b_p}` closed under
/// `⟨R_a, R_b⟩ = R_a R_b − (−1)^{|a||b|} R_b R_a`, as an algebra in the basis
/// of its echelon rows (even operators first), with an exact check of the
/// Lie superalgebra axioms.
pub fn right_mult_superalgebra(a: &SuperAlgebra) -> (SuperAlgebra, RightMultReport) {
    let dim = a.dim();
    let flat = dim * dim;
    let mut spans = [SpanBuilder::new(flat), SpanBuilder::new(flat)];
    for p in 0..dim {
        let r = right_mult_operator(a, &unit_vector(dim, p)).expect("dims");
        let k = usize::from(a.parity(p).is_odd());
        spans[k].insert(&flatten(&r));
    }
    let operator_span = (spans[0].dim(), spans[1].dim());

    let parity_of = |k: usize| if k == 0 { Parity::Even } else { Parity::Odd };
    let mut closed = true;
    loop {
        let ops: Vec<(usize, Matrix)> = (0..2)
            .flat_map(|k| spans[k].rows().iter().map(move |v| (k, v.clone())))
            .map(|(k, v)| (k, unflatten(dim, &v)))
            .collect();
        let mut grew = false;
        for (ka, ma) in &ops {
            for (kb, mb) in &ops {
                let sign = parity_of(*ka).sign(parity_of(*kb));
                let c = graded_commutator(ma, mb, &sign);
                if spans[(ka + kb) % 2].insert(&flatten(&c)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
        closed = false;
    }

    let ne = spans[0].dim();
    let no = spans[1].dim();
    let basis: Vec<(Parity, Matrix)> = (0..2)
        .flat_map(|k| spans[k].rows().iter().map(move |v| (k, v.clone())))
        .map(|(k, v)| (parity_of(k), unflatten(dim, &v)))
        .collect();
    let mut out = SuperAlgebra::zero(ne, no);
    for (i, (pa, ma)) in basis.iter().enumerate() {
        for (j, (pb, mb)) in basis.iter().enumerate() {
            let c = graded_commutator(ma, mb, &pa.sign(*pb));
            let k = usize::from(pa.add(*pb).is_odd());
            let coords = spans[k].coordinates(&flatten(&c)).expect("closed span");
            let offset = if k == 0 { 0 } else { ne };
            for (r, v) in coords.iter().enumerate() {
                out.add_entry(i, j, offset + r, v).expect("in range");
            }
        }
    }

    let total = ne + no;
    let mut antisymmetry_ok = true;
    for p in 0..total {
        for q in 0..total {
            let mut v = out.basis_product(p, q);
            let s = out.parity(p).sign(out.parity(q));
            add_scaled(&mut v, &s, &out.basis_product(q, p));
            if !is_zero_vector(&v) {
                antisymmetry_ok = false;
            }
        }
    }
    // (−1)^{|a||c|}[a,[b,c]] + (−1)^{|b||a|}[b,[c,a]] + (−1)^{|c||b|}[c,[a,b]] = 0
    let mut jacobi_ok = true;
    let triple = |x: usize, y: usize, z: usize| -> Vector {
        let inner = out.basis_product(y, z);
        out.product_basis_vec(x, &inner)
    };
    'outer: for p in 0..total {
        for q in 0..total {
            for r in 0..total {
                let (pp, pq, pr) = (out.parity(p), out.parity(q), out.parity(r));
                let mut v = zero_vector(total);
                add_scaled(&mut v, &pp.sign(pr), &triple(p, q, r));
                add_scaled(&mut v, &pq.sign(pp), &triple(q, r, p));
                add_scaled(&mut v, &pr.sign(pq), &triple(r, p, q));
                if !is_zero_vector(&v) {
                    jacobi_ok = false;
                    break 'outer;
                }
            }
        }
    }
    (
        out,
        RightMultReport {
            operator_span,
            closed,
            antisymmetry_ok,
            jacobi_ok,
        },
    )
}
