//! Smith normal form of small integer matrices.
//!
//! Exponent matrices here have one row per parameter and one column per
//! unknown of the scaling action, so they are tiny; entries are kept in
//! `i128` and every operation is checked.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            for (j, &v) in r.iter().enumerate() {
                m[(i, j)] = v as i128;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        (0..self.cols).map(|j| narrow(self[(i, j)])).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.checked_mul(other[(k, j)]).expect("lattice overflow");
                    out[(i, j)] = out[(i, j)].checked_add(p).expect("lattice overflow");
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= f * row[src]
    fn row_axpy(&mut self, target: usize, src: usize, f: i128) {
        for j in 0..self.cols {
            let d = f.checked_mul(self[(src, j)]).expect("lattice overflow");
            self[(target, j)] = self[(target, j)].checked_sub(d).expect("lattice overflow");
        }
    }

    fn col_axpy(&mut self, target: usize, src: usize, f: i128) {
        for i in 0..self.rows {
            let d = f.checked_mul(self[(i, src)]).expect("lattice overflow");
            self[(i, target)] = self[(i, target)].checked_sub(d).expect("lattice overflow");
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("lattice entry exceeds i64")
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// `left · A · right = diag(invariant_factors)` with unimodular `left`, `right`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.rank)
            .map(|i| narrow(self.diagonal[(i, i)]))
            .collect()
    }

    /// Integer basis of `{t : tᵀ A = 0}`: the last rows of `left`.
    pub fn left_kernel(&self) -> Vec<Vec<i64>> {
        (self.rank..self.left.rows())
            .map(|i| self.left.row(i))
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[(i, j)] != 0 && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)] != 0 {
                    let f = d[(i, t)].div_euclid(d[(t, t)]);
                    d.row_axpy(i, t, f);
                    left.row_axpy(i, t, f);
                    if d[(i, t)] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if d[(t, j)] != 0 {
                    let f = d[(t, j)].div_euclid(d[(t, t)]);
                    d.col_axpy(j, t, f);
                    right.col_axpy(j, t, f);
                    if d[(t, j)] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // a smaller remainder exists in row/column t; move it to the pivot
                let mut best = (t, t);
                for i in t..m {
                    if d[(i, t)] != 0 && d[(i, t)].abs() < d[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..n {
                    if d[(t, j)] != 0 && d[(t, j)].abs() < d[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    d.swap_rows(t, best.0);
                    left.swap_rows(t, best.0);
                } else if best.1 != t {
                    d.swap_cols(t, best.1);
                    right.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block
            let p = d[(t, t)];
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| d[(i, j)] % p != 0);
            match offender {
                Some((i, _)) => {
                    d.row_axpy(t, i, -1);
                    left.row_axpy(t, i, -1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let rank = (0..m.min(n)).take_while(|&i| d[(i, i)] != 0).count();
    SmithForm {
        left,
        diagonal: d,
        right,
        rank,
    }
}

/// Product of the nonzero invariant factors (the gcd of the maximal
/// nonvanishing minors) together with the rank.
pub fn lattice_volume(a: &IntMatrix) -> (usize, i128) {
    let s = smith_normal_form(a);
    let vol = (0..s.rank).map(|i| s.diagonal[(i, i)]).product();
    (s.rank, vol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det(m: &IntMatrix) -> i128 {
        // Bareiss fraction-free elimination
        let n = m.rows();
        let mut a = m.clone();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if a[(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[(i, k)] != 0) else {
                    return 0;
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[(i, j)] = (a[(i, j)] * a[(k, k)] - a[(i, k)] * a[(k, j)]) / prev;
                }
            }
            prev = a[(k, k)];
        }
        sign * a[(n - 1, n - 1)]
    }

    fn check(a: &IntMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(det(&s.left).abs(), 1);
        assert_eq!(det(&s.right).abs(), 1);
        assert_eq!(s.left.mul(a).mul(&s.right), s.diagonal);
        for i in 0..s.diagonal.rows() {
            for j in 0..s.diagonal.cols() {
                if i != j {
                    assert_eq!(s.diagonal[(i, j)], 0);
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        for t in s.left_kernel() {
            for j in 0..a.cols() {
                let dot: i128 = (0..a.rows()).map(|i| t[i] as i128 * a[(i, j)]).sum();
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn exponent_matrix_example() {
        // rows (2n, -2) and (2j-3, -1) for n = 5, j = 4 and 5
        let a = IntMatrix::from_rows(2, &[vec![-10, 2], vec![-5, 1], vec![-7, 1]]);
        check(&a);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), vec![1, 2]);
        assert_eq!(s.left_kernel().len(), 1);
    }

    #[test]
    fn zero_and_empty() {
        let z = IntMatrix::zeros(3, 2);
        let s = smith_normal_form(&z);
        assert_eq!(s.rank, 0);
        assert_eq!(s.left_kernel().len(), 3);
        let e = IntMatrix::zeros(0, 2);
        assert_eq!(smith_normal_form(&e).rank, 0);
    }

    #[test]
    fn volume() {
        let a = IntMatrix::from_rows(2, &[vec![6, 2], vec![3, 1]]);
        assert_eq!(lattice_volume(&a), (1, 1));
        let b = IntMatrix::from_rows(2, &[vec![4, 0], vec![0, 6]]);
        assert_eq!(lattice_volume(&b), (2, 24));
    }

    proptest! {
        #[test]
        fn smith_form_is_valid(rows in 1usize..5, cols in 1usize..4,
                               vals in proptest::collection::vec(-12i64..12, 20)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| vals[i * cols + j]).collect())
                .collect();
            check(&IntMatrix::from_rows(cols, &data));
        }
    }
}
