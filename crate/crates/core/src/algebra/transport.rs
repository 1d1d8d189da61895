use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::GaussianRational;

use super::SuperAlgebra;

/// A degree-zero change of basis. Column `p` of each matrix holds the
/// coordinates of the new basis vector `p` in the old basis of that part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChange {
    pub even: Matrix,
    pub odd: Matrix,
}

impl BaseChange {
    pub fn new(even: Matrix, odd: Matrix) -> Result<Self> {
        if !even.is_invertible() || !odd.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(BaseChange { even, odd })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        BaseChange {
            even: Matrix::identity(n),
            odd: Matrix::identity(m),
        }
    }

    /// Builds from new basis vectors written in full ambient coordinates;
    /// each must be homogeneous of the right parity.
    pub fn from_vectors(n: usize, m: usize, new_basis: &[Vector]) -> Result<Self> {
        if new_basis.len() != n + m {
            return Err(Error::DimensionMismatch {
                expected: n + m,
                found: new_basis.len(),
            });
        }
        let mut even = Matrix::zeros(n, n);
        let mut odd = Matrix::zeros(m, m);
        for (p, v) in new_basis.iter().enumerate() {
            if v.len() != n + m {
                return Err(Error::DimensionMismatch {
                    expected: n + m,
                    found: v.len(),
                });
            }
            let (own, other) = if p < n {
                (0..n, n..n + m)
            } else {
                (n..n + m, 0..n)
            };
            if other.clone().any(|i| !v[i].is_zero()) {
                return Err(Error::Precondition(format!(
                    "basis vector {p} is not homogeneous"
                )));
            }
            for (k, i) in own.enumerate() {
                if p < n {
                    even[(k, p)] = v[i].clone();
                } else {
                    odd[(k, p - n)] = v[i].clone();
                }
            }
        }
        BaseChange::new(even, odd)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.rows(), self.odd.rows())
    }

    pub fn full_matrix(&self) -> Matrix {
        let (n, m) = self.dims();
        let mut t = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                t[(i, j)] = self.even[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                t[(n + i, n + j)] = self.odd[(i, j)].clone();
            }
        }
        t
    }

    /// New basis vector `p` in old coordinates.
    pub fn column(&self, p: usize) -> Vector {
        self.full_matrix().column(p)
    }

    pub fn inverse(&self) -> Result<BaseChange> {
        Ok(BaseChange {
            even: self.even.inverse()?,
            odd: self.odd.inverse()?,
        })
    }

    pub fn compose(&self, then: &BaseChange) -> Result<BaseChange> {
        Ok(BaseChange {
            even: self.even.mul(&then.even)?,
            odd: self.odd.mul(&then.odd)?,
        })
    }
}

/// Structure constants of the same product in the basis given by `t`,
/// found by solving `T · c = [T e_p, T e_q]` for all pairs at once.
pub fn transport(a: &SuperAlgebra, t: &BaseChange) -> Result<SuperAlgebra> {
    let (n, m) = t.dims();
    if (n, m) != (a.n(), a.m()) {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: n + m,
        });
    }
    let dim = a.dim();
    let full = t.full_matrix();
    let cols: Vec<Vector> = (0..dim).map(|p| full.column(p)).collect();
    let mut rhs = Matrix::zeros(dim, dim * dim);
    for p in 0..dim {
        for q in 0..dim {
            let w = a.product(&cols[p], &cols[q])?;
            for (r, c) in w.into_iter().enumerate() {
                if !c.is_zero() {
                    rhs[(r, p * dim + q)] = c;
                }
            }
        }
    }
    let sol = full.solve(&rhs)?;
    let mut out = SuperAlgebra::zero(n, m);
    for p in 0..dim {
        for q in 0..dim {
            let v: Vec<GaussianRational> =
                (0..dim).map(|r| sol[(r, p * dim + q)].clone()).collect();
            out.set_product(p, q, &v)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn identity_and_round_trip() {
        let mut a = SuperAlgebra::zero(2, 1);
        a.add_entry(0, 0, 1, &g(1)).unwrap();
        a.add_entry(2, 2, 0, &g(3)).unwrap();
        assert_eq!(transport(&a, &BaseChange::identity(2, 1)).unwrap(), a);
        let even = Matrix::from_rows(vec![vec![g(1), g(2)], vec![g(0), g(1)]]).unwrap();
        let odd = Matrix::from_rows(vec![vec![GaussianRational::i()]]).unwrap();
        let t = BaseChange::new(even, odd).unwrap();
        let b = transport(&a, &t).unwrap();
        assert_eq!(transport(&b, &t.inverse().unwrap()).unwrap(), a);
    }

    #[test]
    fn scaling_keeps_abelian() {
        let a = SuperAlgebra::zero(2, 2);
        let t = BaseChange::new(Matrix::identity(2).scaled(&g(2)), Matrix::identity(2)).unwrap();
        assert!(transport(&a, &t).unwrap().is_abelian());
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(
            BaseChange::new(Matrix::zeros(1, 1), Matrix::identity(1)),
            Err(Error::Singular)
        );
    }
}
