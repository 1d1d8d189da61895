use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::scalar::GaussianRational;

use super::{Parity, SpanBuilder, Subspace, SuperAlgebra};

/// `L^1 = L, L^{k+1} = [L^k, L]`, ending at the first zero or repeated term.
pub fn lower_central_series(a: &SuperAlgebra) -> Vec<Subspace> {
    let (n, m) = (a.n(), a.m());
    let dim = a.dim();
    let mut out = vec![Subspace::whole(n, m)];
    if dim == 0 {
        return out;
    }
    loop {
        let prev = out.last().expect("nonempty");
        let mut b = SpanBuilder::new(dim);
        for w in prev.basis() {
            for q in 0..dim {
                let v = a.product_vec_basis(w, q);
                b.insert(&v);
            }
        }
        let next = b.finish(n, m);
        let stop = next.is_zero() || next == *prev;
        out.push(next);
        if stop {
            return out;
        }
    }
}

pub fn series_dims(series: &[Subspace]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}

/// Minimal `s` with `L^s = 0`, or `None` when the series stabilizes.
pub fn nilindex(a: &SuperAlgebra) -> Option<usize> {
    let s = lower_central_series(a);
    let last = s.last().expect("nonempty");
    if last.is_zero() {
        Some(s.len())
    } else {
        None
    }
}

/// `{z : [b_p, z] = 0 for all p}`.
pub fn right_annihilator(a: &SuperAlgebra) -> Subspace {
    let dim = a.dim();
    if dim == 0 {
        return Subspace::zero(a.n(), a.m());
    }
    // row (p, r), column q: coefficient of b_r in [b_p, b_q]
    let mut rows: Vec<Vector> = Vec::new();
    for p in 0..dim {
        let mut block = vec![vec![GaussianRational::zero(); dim]; dim];
        let mut used = vec![false; dim];
        for q in 0..dim {
            for (r, c) in a.structure(p, q) {
                block[*r][q] = c.clone();
                used[*r] = true;
            }
        }
        rows.extend(
            block
                .into_iter()
                .zip(used)
                .filter(|(_, u)| *u)
                .map(|(b, _)| b),
        );
    }
    if rows.is_empty() {
        return Subspace::whole(a.n(), a.m());
    }
    let ns = Matrix::from_rows(rows).expect("uniform").nullspace();
    Subspace::from_vectors(a.n(), a.m(), ns)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generators {
    pub even: usize,
    pub odd: usize,
    /// Basis vectors whose classes form a basis of `L/L²`, even ones first.
    pub representatives: Vec<Vector>,
}

/// Graded dimensions of `L/L²` with representatives.
pub fn minimal_generators(a: &SuperAlgebra) -> Generators {
    let dim = a.dim();
    let mut b = SpanBuilder::new(dim);
    for p in 0..dim {
        for q in 0..dim {
            if !a.structure(p, q).is_empty() {
                b.insert(&a.basis_product(p, q));
            }
        }
    }
    let mut even = 0;
    let mut odd = 0;
    let mut representatives = Vec::new();
    for i in 0..dim {
        let e = unit_vector(dim, i);
        if b.insert(&e) {
            match a.parity(i) {
                Parity::Even => even += 1,
                Parity::Odd => odd += 1,
            }
            representatives.push(e);
        }
    }
    Generators {
        even,
        odd,
        representatives,
    }
}

/// Smallest product-closed subspace containing `gens`.
pub fn subalgebra_generated(a: &SuperAlgebra, gens: &[Vector]) -> Result<Subspace> {
    let dim = a.dim();
    for g in gens {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.len(),
            });
        }
    }
    let mut b = SpanBuilder::new(dim);
    for g in gens {
        b.insert(g);
    }
    loop {
        let basis: Vec<Vector> = b.rows().to_vec();
        let mut grew = false;
        for u in &basis {
            for v in &basis {
                let w = a.product(u, v)?;
                if b.insert(&w) {
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(b.finish(a.n(), a.m()));
        }
    }
}

/// The algebra structure on a graded, product-closed subspace, in the basis
/// of its echelon rows (even rows first).
pub fn restrict(a: &SuperAlgebra, s: &Subspace) -> Result<SuperAlgebra> {
    let parities = s.row_parities();
    if parities.iter().any(Option::is_none) {
        return Err(Error::Precondition(
            "subspace basis is not homogeneous".into(),
        ));
    }
    let mut order: Vec<usize> = (0..s.dim()).collect();
    order.sort_by_key(|&i| parities[i]);
    let n = parities
        .iter()
        .filter(|p| **p == Some(Parity::Even))
        .count();
    let m = s.dim() - n;
    // position of echelon row i in the new basis
    let mut slot = vec![0; s.dim()];
    for (new, &old) in order.iter().enumerate() {
        slot[old] = new;
    }
    let mut out = SuperAlgebra::zero(n, m);
    for (np, &op) in order.iter().enumerate() {
        for (nq, &oq) in order.iter().enumerate() {
            let w = a.product(&s.basis()[op], &s.basis()[oq])?;
            let coords = s.coordinates(&w).ok_or_else(|| {
                Error::Precondition("subspace is not closed under the product".into())
            })?;
            for (k, c) in coords.iter().enumerate() {
                out.add_entry(np, nq, slot[k], c)?;
            }
        }
    }
    Ok(out)
}
