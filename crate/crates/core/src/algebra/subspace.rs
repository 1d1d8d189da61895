use crate::linalg::{is_zero_vector, Matrix, Vector};
use crate::scalar::GaussianRational;

use super::Parity;

/// Incrementally maintained reduced echelon basis.
///
/// Rows are kept with a unit at their pivot and zeros at every other pivot,
/// so a single pass reduces a vector. Row order is insertion order.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    len: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(len: usize) -> Self {
        SpanBuilder {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, v: &[GaussianRational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (a, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` with respect to `rows()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for c in w.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&w) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn finish(self, n: usize, m: usize) -> Subspace {
        Subspace::from_vectors(n, m, self.rows)
    }
}

/// A subspace of the ambient space of dimensions `(n, m)`, stored as its
/// reduced row echelon basis. Equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    m: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize, m: usize) -> Self {
        Subspace {
            n,
            m,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn whole(n: usize, m: usize) -> Self {
        let dim = n + m;
        Subspace {
            n,
            m,
            basis: (0..dim)
                .map(|i| crate::linalg::unit_vector(dim, i))
                .collect(),
            pivots: (0..dim).collect(),
        }
    }

    pub fn from_vectors(n: usize, m: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n, m);
        }
        let mat = Matrix::from_rows(vectors).expect("uniform vector length");
        let (r, pivots) = mat.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            n,
            m,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &[GaussianRational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (a, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates with respect to `basis()`, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Parity of each basis row; `None` for rows with mixed support.
    pub fn row_parities(&self) -> Vec<Option<Parity>> {
        self.basis
            .iter()
            .map(|v| {
                let even = v[..self.n].iter().any(|c| !c.is_zero());
                let odd = v[self.n..].iter().any(|c| !c.is_zero());
                match (even, odd) {
                    (true, false) => Some(Parity::Even),
                    (false, true) => Some(Parity::Odd),
                    _ => None,
                }
            })
            .collect()
    }

    /// Dimensions of the even and odd parts: `dim(S ∩ L_0)` and the rank of
    /// the projection to `L_1`, which add up to `dim S`.
    pub fn graded_dims(&self) -> (usize, usize) {
        if self.basis.is_empty() {
            return (0, 0);
        }
        let odd_rows: Vec<Vector> = self.basis.iter().map(|v| v[self.n..].to_vec()).collect();
        let odd = if self.m == 0 {
            0
        } else {
            Matrix::from_rows(odd_rows).expect("uniform").rank()
        };
        (self.dim() - odd, odd)
    }

    /// Whether `S = (S ∩ L_0) ⊕ (S ∩ L_1)`.
    pub fn is_graded(&self) -> bool {
        self.row_parities().iter().all(Option::is_some)
    }

    pub fn intersect_even(&self) -> Subspace {
        let rows = self
            .basis
            .iter()
            .zip(self.row_parities())
            .filter(|(_, p)| *p == Some(Parity::Even))
            .map(|(v, _)| v.clone())
            .collect();
        Subspace::from_vectors(self.n, self.m, rows)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors(self.n, self.m, rows)
    }
}
