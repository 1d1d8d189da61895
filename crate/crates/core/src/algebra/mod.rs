//! Finite-dimensional `Z2`-graded algebras given by structure constants.
//!
//! Basis convention: indices `0..n` are the even basis `x_1..x_n`, indices
//! `n..n+m` are the odd basis `y_1..y_m`. Absent table entries are zero
//! products.

mod charseq;
mod checks;
mod operators;
mod series;
mod subspace;
mod transport;

pub use charseq::{
    char_sequence, jordan_blocks, right_mult_matrix, right_mult_operator, CharSequence,
    CharSequenceReport,
};
pub use checks::{
    check_graded_closure, check_leibniz, symmetrized_in_annihilator, ClosureReport, LeibnizReport,
    LeibnizViolation, SymmetrizationReport,
};
pub use operators::{right_mult_superalgebra, RightMultReport};
pub use series::{
    lower_central_series, minimal_generators, nilindex, restrict, right_annihilator, series_dims,
    subalgebra_generated, Generators,
};
pub use subspace::{SpanBuilder, Subspace};
pub use transport::{transport, BaseChange};

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^(self·other)` as a scalar.
    pub fn sign(self, other: Parity) -> GaussianRational {
        if self.is_odd() && other.is_odd() {
            GaussianRational::from_int(-1)
        } else {
            GaussianRational::one()
        }
    }
}

/// One structure constant `[b_p, b_q] ∋ c · b_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub c: GaussianRational,
}

/// Dimensions plus a sparse table `(p, q) -> Σ c_r b_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    n: usize,
    m: usize,
    table: Vec<Vec<(usize, GaussianRational)>>,
}

impl SuperAlgebra {
    /// The abelian (zero-product) algebra of dimensions `(n, m)`.
    pub fn zero(n: usize, m: usize) -> Self {
        let dim = n + m;
        SuperAlgebra {
            n,
            m,
            table: vec![Vec::new(); dim * dim],
        }
    }

    pub fn from_entries(
        n: usize,
        m: usize,
        entries: impl IntoIterator<Item = Entry>,
    ) -> Result<Self> {
        let mut a = SuperAlgebra::zero(n, m);
        for e in entries {
            a.add_entry(e.p, e.q, e.r, &e.c)?;
        }
        Ok(a)
    }

    /// Adds `c · b_r` to `[b_p, b_q]`.
    pub fn add_entry(&mut self, p: usize, q: usize, r: usize, c: &GaussianRational) -> Result<()> {
        let dim = self.dim();
        for index in [p, q, r] {
            if index >= dim {
                return Err(Error::IndexOutOfRange { index, dim });
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = &mut self.table[p * dim + q];
        match slot.binary_search_by_key(&r, |(k, _)| *k) {
            Ok(pos) => {
                slot[pos].1 += c;
                if slot[pos].1.is_zero() {
                    slot.remove(pos);
                }
            }
            Err(pos) => slot.insert(pos, (r, c.clone())),
        }
        Ok(())
    }

    /// Sets `[b_p, b_q] = v` (dense `v`).
    pub fn set_product(&mut self, p: usize, q: usize, v: &[GaussianRational]) -> Result<()> {
        let dim = self.dim();
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        self.table[p * dim + q] = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (r, c.clone()))
            .collect();
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.n + self.m
    }

    pub fn parity(&self, index: usize) -> Parity {
        if index < self.n {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Index of `x_i` (1-based `i`).
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        i - 1
    }

    /// Index of `y_j` (1-based `j`).
    pub fn y(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.m);
        self.n + j - 1
    }

    pub fn basis_vector(&self, index: usize) -> Vector {
        crate::linalg::unit_vector(self.dim(), index)
    }

    /// Sparse `[b_p, b_q]`.
    pub fn structure(&self, p: usize, q: usize) -> &[(usize, GaussianRational)] {
        &self.table[p * self.dim() + q]
    }

    /// Coefficient of `b_r` in `[b_p, b_q]`.
    pub fn coefficient(&self, p: usize, q: usize, r: usize) -> GaussianRational {
        self.structure(p, q)
            .iter()
            .find(|(k, _)| *k == r)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn basis_product(&self, p: usize, q: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (r, c) in self.structure(p, q) {
            out[*r] = c.clone();
        }
        out
    }

    /// Bilinear extension of the table.
    pub fn product(&self, u: &[GaussianRational], v: &[GaussianRational]) -> Result<Vector> {
        let dim = self.dim();
        for len in [u.len(), v.len()] {
            if len != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: len,
                });
            }
        }
        let mut out = zero_vector(dim);
        for (p, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let s = self.structure(p, q);
                if s.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (r, c) in s {
                    out[*r] += &(&ab * c);
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn product_vec_basis(&self, u: &[GaussianRational], q: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (p, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (r, c) in self.structure(p, q) {
                out[*r] += &(a * c);
            }
        }
        out
    }

    pub(crate) fn product_basis_vec(&self, p: usize, v: &[GaussianRational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (q, b) in v.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (r, c) in self.structure(p, q) {
                out[*r] += &(b * c);
            }
        }
        out
    }

    /// All nonzero structure constants in `(p, q, r)` order.
    pub fn entries(&self) -> Vec<Entry> {
        let dim = self.dim();
        let mut out = Vec::new();
        for p in 0..dim {
            for q in 0..dim {
                for (r, c) in self.structure(p, q) {
                    out.push(Entry {
                        p,
                        q,
                        r: *r,
                        c: c.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Parity of a vector, if it is homogeneous and nonzero.
    pub fn vector_parity(&self, v: &[GaussianRational]) -> Option<Parity> {
        let even = v[..self.n].iter().any(|c| !c.is_zero());
        let odd = v[self.n..].iter().any(|c| !c.is_zero());
        match (even, odd) {
            (true, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }
}
