use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::random::random_scalar;

use super::{SpanBuilder, SuperAlgebra};

/// Matrix of `z ↦ [z, x]` on the whole space (column `q` is `[b_q, x]`).
pub fn right_mult_operator(
    a: &SuperAlgebra,
    x: &[crate::scalar::GaussianRational],
) -> Result<Matrix> {
    let dim = a.dim();
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: x.len(),
        });
    }
    let cols: Vec<Vector> = (0..dim).map(|q| a.product_basis_vec(q, x)).collect();
    Matrix::from_columns(dim, &cols)
}

/// The diagonal blocks of `R_x`: its action `L_0 → L_0` and `L_1 → L_1`.
pub fn right_mult_matrix(
    a: &SuperAlgebra,
    x: &[crate::scalar::GaussianRational],
) -> Result<(Matrix, Matrix)> {
    let full = right_mult_operator(a, x)?;
    let (n, m) = (a.n(), a.m());
    let mut even = Matrix::zeros(n, n);
    let mut odd = Matrix::zeros(m, m);
    for i in 0..n {
        for j in 0..n {
            even[(i, j)] = full[(i, j)].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            odd[(i, j)] = full[(n + i, n + j)].clone();
        }
    }
    Ok((even, odd))
}

/// Jordan block sizes of a nilpotent matrix, largest first.
pub fn jordan_blocks(mat: &Matrix) -> Result<Vec<usize>> {
    if !mat.is_square() {
        return Err(Error::DimensionMismatch {
            expected: mat.rows(),
            found: mat.cols(),
        });
    }
    let size = mat.rows();
    // ranks[k] = rank(M^k), tracked through images: Im M^{k+1} = M(Im M^k)
    let mut ranks = vec![size];
    let mut image: Vec<Vector> = (0..size).map(|j| mat.column(j)).collect();
    while *ranks.last().expect("nonempty") > 0 {
        let mut b = SpanBuilder::new(size);
        for v in &image {
            b.insert(v);
        }
        let r = b.dim();
        if r == *ranks.last().expect("nonempty") {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
        image = b
            .rows()
            .iter()
            .map(|v| mat.mul_vec(v))
            .collect::<Result<_>>()?;
    }
    // at_least[k] = #blocks of size ≥ k = rank(M^{k-1}) − rank(M^k)
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        blocks.extend(std::iter::repeat_n(k, exactly));
    }
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CharSequence {
    pub even_part: Vec<usize>,
    pub odd_part: Vec<usize>,
}

impl std::fmt::Display for CharSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.even_part), join(&self.odd_part))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharSequenceReport {
    pub sequence: CharSequence,
    pub even_witness: Vector,
    pub odd_witness: Vector,
    /// Size of the test set actually evaluated.
    pub tested: usize,
}

/// Lexicographic maxima of the Jordan types of `R_x` on `L_0` and `L_1`,
/// separately, over even `x ∉ [L_0, L_0]`: every such basis vector plus
/// `extra_samples` seeded random even vectors.
pub fn char_sequence(
    a: &SuperAlgebra,
    extra_samples: usize,
    seed: u64,
) -> Result<CharSequenceReport> {
    let (n, dim) = (a.n(), a.dim());
    let mut derived = SpanBuilder::new(dim);
    for p in 0..n {
        for q in 0..n {
            if !a.structure(p, q).is_empty() {
                derived.insert(&a.basis_product(p, q));
            }
        }
    }
    let mut candidates: Vec<Vector> = (0..n)
        .map(|i| unit_vector(dim, i))
        .filter(|v| !derived.contains(v))
        .collect();
    if candidates.is_empty() {
        return Err(Error::Precondition("L_0 \\ [L_0, L_0] is empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    let mut attempts = 0;
    while drawn < extra_samples && attempts < extra_samples * 8 + 8 {
        attempts += 1;
        let mut v = vec![crate::scalar::GaussianRational::zero(); dim];
        for c in v.iter_mut().take(n) {
            *c = random_scalar(&mut rng);
        }
        if !derived.contains(&v) {
            candidates.push(v);
            drawn += 1;
        }
    }
    let mut best: Option<(Vec<usize>, usize)> = None;
    let mut best_odd: Option<(Vec<usize>, usize)> = None;
    for (idx, x) in candidates.iter().enumerate() {
        let (even, odd) = right_mult_matrix(a, x)?;
        let e = jordan_blocks(&even)?;
        let o = jordan_blocks(&odd)?;
        if best.as_ref().is_none_or(|(b, _)| e > *b) {
            best = Some((e, idx));
        }
        if best_odd.as_ref().is_none_or(|(b, _)| o > *b) {
            best_odd = Some((o, idx));
        }
    }
    let (even_part, ei) = best.expect("nonempty test set");
    let (odd_part, oi) = best_odd.expect("nonempty test set");
    Ok(CharSequenceReport {
        sequence: CharSequence {
            even_part,
            odd_part,
        },
        even_witness: candidates[ei].clone(),
        odd_witness: candidates[oi].clone(),
        tested: candidates.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use proptest::prelude::*;

    fn jordan(sizes: &[usize]) -> Matrix {
        let n: usize = sizes.iter().sum();
        let mut m = Matrix::zeros(n, n);
        let mut start = 0;
        for &s in sizes {
            for k in 0..s - 1 {
                m[(start + k + 1, start + k)] = GaussianRational::one();
            }
            start += s;
        }
        m
    }

    #[test]
    fn simple_blocks() {
        assert_eq!(jordan_blocks(&Matrix::zeros(3, 3)).unwrap(), vec![1, 1, 1]);
        assert_eq!(jordan_blocks(&jordan(&[4])).unwrap(), vec![4]);
        assert_eq!(jordan_blocks(&jordan(&[3, 1])).unwrap(), vec![3, 1]);
        assert_eq!(
            jordan_blocks(&Matrix::identity(2)),
            Err(Error::NotNilpotent)
        );
        assert_eq!(
            jordan_blocks(&Matrix::zeros(0, 0)).unwrap(),
            Vec::<usize>::new()
        );
    }

    #[test]
    fn abelian_char_sequence() {
        let a = SuperAlgebra::zero(2, 2);
        let r = char_sequence(&a, 5, 1).unwrap();
        assert_eq!(r.sequence.even_part, vec![1, 1]);
        assert_eq!(r.sequence.odd_part, vec![1, 1]);
        assert_eq!(r.sequence.to_string(), "(1,1 | 1,1)");
    }

    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    proptest! {
        // conjugating a known Jordan form by a random invertible matrix
        #[test]
        fn recovers_conjugated_blocks(n in 1usize..7, pick in 0usize..64,
                                      vals in proptest::collection::vec(-3i64..4, 36)) {
            let parts = partitions(n, n);
            let sizes = &parts[pick % parts.len()];
            let mut p = Matrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        p[(i, j)] = GaussianRational::from_int(vals[i * 6 + j]);
                    }
                }
            }
            prop_assume!(p.is_invertible());
            let j = jordan(sizes);
            let m = p.mul(&j).unwrap().mul(&p.inverse().unwrap()).unwrap();
            let blocks = jordan_blocks(&m).unwrap();
            prop_assert_eq!(blocks.iter().sum::<usize>(), n);
            prop_assert_eq!(&blocks, sizes);
        }
    }
}
