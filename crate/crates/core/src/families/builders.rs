use rand::Rng;

use crate::algebra::{check_graded_closure, check_leibniz, transport, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, unit_vector, Matrix, Vector};
use crate::random::random_base_change;
use crate::scalar::GaussianRational;

use super::{FamilyParamsM1, FamilyParamsM2};

fn one() -> GaussianRational {
    GaussianRational::one()
}

fn half() -> GaussianRational {
    GaussianRational::from_ratio(1, 2)
}

/// Even chain `[e_i, e_1] = e_{i+1}`, `1 ≤ i ≤ n−1`.
pub fn build_null_filiform(n: usize) -> Result<SuperAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    let mut a = SuperAlgebra::zero(n, 0);
    for i in 1..n {
        a.add_entry(i - 1, 0, i, &one())?;
    }
    Ok(a)
}

/// One-generated super chain on `(n | m)` with `m = n` or `m = n + 1`:
///
/// `[x_i, x_1] = x_{i+1}`, `[y_j, x_1] = y_{j+1}`, `[x_i, y_1] = ½ y_{i+1}`,
/// `[y_j, y_1] = x_j`, with every index running as far as the dimensions allow.
pub fn build_null_filiform_super(n: usize, m: usize) -> Result<SuperAlgebra> {
    if m == 0 || !(m == n || m == n + 1) {
        return Err(Error::InvalidParams(format!(
            "dimensions ({n}|{m}) need m = n or m = n + 1 with m > 0"
        )));
    }
    let mut a = SuperAlgebra::zero(n, m);
    let (x, y) = (|i: usize| i - 1, |j: usize| n + j - 1);
    for i in 1..n {
        a.add_entry(x(i), x(1), x(i + 1), &one())?;
    }
    for j in 1..m {
        a.add_entry(y(j), x(1), y(j + 1), &one())?;
    }
    for i in 1..=n.min(m - 1) {
        a.add_entry(x(i), y(1), y(i + 1), &half())?;
    }
    for j in 1..=n {
        a.add_entry(y(j), y(1), x(j), &one())?;
    }
    Ok(a)
}

/// The family with `m = n + 1`.
pub fn build_m1(p: &FamilyParamsM1) -> Result<SuperAlgebra> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidParams("n must be at least 2".into()));
    }
    let mut a = SuperAlgebra::zero(n, n + 1);
    let (x, y) = (|i: usize| i - 1, |j: usize| n + j - 1);
    let lo = (n + 4) / 2;
    let minus_two = GaussianRational::from_int(-2);
    for i in 1..n {
        a.add_entry(x(i), x(1), x(i + 1), &one())?;
        a.add_entry(y(i), x(1), y(i + 1), &one())?;
        a.add_entry(x(i), y(1), y(i + 1), &half())?;
    }
    for j in 1..=n {
        a.add_entry(y(j), y(1), x(j), &one())?;
    }
    a.add_entry(y(n + 1), y(n + 1), x(n), &p.gamma)?;
    for i in 1..=(n - 1) / 2 {
        for k in lo..=n + 1 - i {
            a.add_entry(x(i), y(n + 1), y(k - 1 + i), &p.beta_j(k))?;
        }
    }
    for k in lo..=n {
        a.add_entry(y(1), y(n + 1), x(k - 1), &(&minus_two * &p.beta_j(k)))?;
    }
    a.add_entry(y(1), y(n + 1), x(n), &p.beta)?;
    for j in 2..=(n + 1) / 2 {
        for k in lo..=n + 2 - j {
            a.add_entry(y(j), y(n + 1), x(k - 2 + j), &(&minus_two * &p.beta_j(k)))?;
        }
    }
    Ok(a)
}

/// The family with `m = n + 2`.
pub fn build_m2(p: &FamilyParamsM2) -> Result<SuperAlgebra> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidParams("n must be at least 2".into()));
    }
    let mut a = SuperAlgebra::zero(n, n + 2);
    let (x, y) = (|i: usize| i - 1, |j: usize| n + j - 1);
    let lo = (n + 5) / 2;
    let minus_two = GaussianRational::from_int(-2);
    for i in 1..n {
        a.add_entry(x(i), x(1), x(i + 1), &one())?;
    }
    for j in 1..=n {
        a.add_entry(y(j), x(1), y(j + 1), &one())?;
        a.add_entry(x(j), y(1), y(j + 1), &half())?;
        a.add_entry(y(j), y(1), x(j), &one())?;
    }
    for i in 1..=n / 2 {
        for k in lo..=n + 2 - i {
            a.add_entry(x(i), y(n + 2), y(k - 1 + i), &p.beta_j(k))?;
            a.add_entry(y(i), y(n + 2), x(k - 2 + i), &(&minus_two * &p.beta_j(k)))?;
        }
    }
    Ok(a)
}

fn matrix_is_even(d: &Matrix, n: usize) -> bool {
    let dim = d.rows();
    (0..dim).all(|i| (0..dim).all(|j| (i < n) == (j < n) || d[(i, j)].is_zero()))
}

/// `⟨a, b⟩ = a·D(b) − (−1)^{|a||b|} D(b)·a` on an associative superalgebra
/// with a degree-zero map `D` satisfying `D(a·Db) = Da·Db = D(Da·b)`.
///
/// `assoc` holds the associative product as a structure-constant table.
pub fn leibniz_from_associative(assoc: &SuperAlgebra, d: &Matrix) -> Result<SuperAlgebra> {
    let (n, m) = (assoc.n(), assoc.m());
    let dim = assoc.dim();
    if d.rows() != dim || d.cols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: d.rows(),
        });
    }
    let closure = check_graded_closure(assoc);
    if let Some(&(p, q, _)) = closure.violations.first() {
        return Err(Error::Precondition(format!(
            "product of basis pair ({p}, {q}) breaks the grading"
        )));
    }
    if !matrix_is_even(d, n) {
        return Err(Error::Precondition(
            "D does not preserve the grading".into(),
        ));
    }
    let e: Vec<Vector> = (0..dim).map(|i| unit_vector(dim, i)).collect();
    let prods: Vec<Vec<Vector>> = (0..dim)
        .map(|p| (0..dim).map(|q| assoc.basis_product(p, q)).collect())
        .collect();
    for p in 0..dim {
        for q in 0..dim {
            for r in 0..dim {
                let left = assoc.product(&prods[p][q], &e[r])?;
                let right = assoc.product(&e[p], &prods[q][r])?;
                if left != right {
                    return Err(Error::Precondition(format!(
                        "product is not associative on ({p}, {q}, {r})"
                    )));
                }
            }
        }
    }
    let de: Vec<Vector> = (0..dim).map(|i| d.column(i)).collect();
    for p in 0..dim {
        for q in 0..dim {
            let da_db = assoc.product(&de[p], &de[q])?;
            let d1 = d.mul_vec(&assoc.product(&e[p], &de[q])?)?;
            let d2 = d.mul_vec(&assoc.product(&de[p], &e[q])?)?;
            if d1 != da_db || d2 != da_db {
                return Err(Error::Precondition(format!(
                    "D-condition fails on pair ({p}, {q})"
                )));
            }
        }
    }
    let mut out = SuperAlgebra::zero(n, m);
    for p in 0..dim {
        for q in 0..dim {
            let mut v = assoc.product(&e[p], &de[q])?;
            let w = assoc.product(&de[q], &e[p])?;
            let s = assoc.parity(p).sign(assoc.parity(q));
            crate::linalg::add_scaled(&mut v, &(-&s), &w);
            if !is_zero_vector(&v) {
                out.set_product(p, q, &v)?;
            }
        }
    }
    if !check_leibniz(&out).ok {
        return Err(Error::Precondition(
            "derived bracket fails the Leibniz identity".into(),
        ));
    }
    Ok(out)
}

/// Small associative superalgebras used to seed random instances.
pub fn small_associative(which: usize) -> SuperAlgebra {
    let g = one;
    match which % 4 {
        // gl(1|1): even E11, E22; odd E12, E21
        0 => {
            let (e11, e22, e12, e21) = (0, 1, 2, 3);
            let unit = |r: usize, c: usize| match (r, c) {
                (0, 0) => e11,
                (1, 1) => e22,
                (0, 1) => e12,
                _ => e21,
            };
            let idx = [(0, 0), (1, 1), (0, 1), (1, 0)];
            let mut a = SuperAlgebra::zero(2, 2);
            for (p, &(i, j)) in idx.iter().enumerate() {
                for (q, &(k, l)) in idx.iter().enumerate() {
                    if j == k {
                        a.add_entry(p, q, unit(i, l), &g()).expect("in range");
                    }
                }
            }
            a
        }
        // upper triangular part: E11, E22 | E12
        1 => {
            let mut a = SuperAlgebra::zero(2, 1);
            a.add_entry(0, 0, 0, &g()).expect("in range");
            a.add_entry(1, 1, 1, &g()).expect("in range");
            a.add_entry(0, 2, 2, &g()).expect("in range");
            a.add_entry(2, 1, 2, &g()).expect("in range");
            a
        }
        // Grassmann algebra on two generators: 1, ξ1ξ2 | ξ1, ξ2
        2 => {
            let (u, w, x1, x2) = (0, 1, 2, 3);
            let mut a = SuperAlgebra::zero(2, 2);
            for b in 0..4 {
                a.add_entry(u, b, b, &g()).expect("in range");
                if b != u {
                    a.add_entry(b, u, b, &g()).expect("in range");
                }
            }
            a.add_entry(x1, x2, w, &g()).expect("in range");
            a.add_entry(x2, x1, w, &GaussianRational::from_int(-1))
                .expect("in range");
            a
        }
        // Grassmann algebra on one generator: 1 | ξ
        _ => {
            let mut a = SuperAlgebra::zero(1, 1);
            a.add_entry(0, 0, 0, &g()).expect("in range");
            a.add_entry(0, 1, 1, &g()).expect("in range");
            a.add_entry(1, 0, 1, &g()).expect("in range");
            a
        }
    }
}

/// `A = B × B` with the grading interleaved so that even parts come first.
fn square(b: &SuperAlgebra) -> (SuperAlgebra, Vec<usize>, Vec<usize>) {
    let (n, m) = (b.n(), b.m());
    // copy 0 and copy 1 of basis element k of B
    let place = |copy: usize, k: usize| {
        if k < n {
            copy * n + k
        } else {
            2 * n + copy * m + (k - n)
        }
    };
    let mut a = SuperAlgebra::zero(2 * n, 2 * m);
    for e in b.entries() {
        for copy in 0..2 {
            a.add_entry(place(copy, e.p), place(copy, e.q), place(copy, e.r), &e.c)
                .expect("in range");
        }
    }
    let first = (0..b.dim()).map(|k| place(0, k)).collect();
    let second = (0..b.dim()).map(|k| place(1, k)).collect();
    (a, first, second)
}

/// A random valid `(A, D)` pair: `A = B × B` for a small associative
/// superalgebra `B`, `D(b, b') = (b, b)`, both conjugated by a random
/// degree-zero base change.
pub fn random_associative_pair<R: Rng + ?Sized>(rng: &mut R) -> (SuperAlgebra, Matrix) {
    let b = small_associative(rng.gen_range(0..4));
    let (a, first, second) = square(&b);
    let dim = a.dim();
    let mut d = Matrix::zeros(dim, dim);
    for k in 0..b.dim() {
        // D(e_k, 0) = (e_k, e_k): column of copy-0 basis vector
        d[(first[k], first[k])] = one();
        d[(second[k], first[k])] = one();
    }
    let t = random_base_change(rng, a.n(), a.m());
    let ta = transport(&a, &t).expect("invertible");
    let full = t.full_matrix();
    // D in the new basis: T^{-1} D T
    let dt = full
        .solve(&d.mul(&full).expect("square"))
        .expect("invertible");
    (ta, dt)
}
