//! The finite group left over after normalizing some parameters, and how it
//! moves the remaining ones.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::scalar::GaussianRational;

/// Elements are recorded by their action on the free slots: slot `f` is
/// multiplied by `exp(2πi·angle_f)`, angles in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualGroup {
    pub elements: Vec<Vec<Ratio<i64>>>,
}

impl ResidualGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Multipliers of element `index` when they all lie in `Q(i)`.
    pub fn multipliers(&self, index: usize) -> Result<Vec<GaussianRational>> {
        let angles = self.elements.get(index).ok_or(Error::IndexOutOfRange {
            index,
            dim: self.elements.len(),
        })?;
        angles
            .iter()
            .map(|a| {
                unit_from_angle(*a).ok_or_else(|| {
                    Error::NotRepresentable(format!(
                        "root of unity of order {} is not in Q(i)",
                        a.denom()
                    ))
                })
            })
            .collect()
    }
}

/// `exp(2πi·a)` when its order divides 4.
pub fn unit_from_angle(a: Ratio<i64>) -> Option<GaussianRational> {
    let quarter = a * Ratio::from_integer(4);
    if !quarter.is_integer() {
        return None;
    }
    Some(match quarter.to_integer().rem_euclid(4) {
        0 => GaussianRational::one(),
        1 => GaussianRational::i(),
        2 => GaussianRational::from_int(-1),
        _ => -GaussianRational::i(),
    })
}

fn frac(r: Ratio<i64>) -> Ratio<i64> {
    r - r.floor()
}

/// Characters are rows `[e_a1, e_b]`. The stabilizer of `normalized` is
/// `{θ : row·θ ∈ Z}` in `R²/Z²`; its image acting on `free` must be finite.
pub fn residual_action(normalized: &[[i64; 2]], free: &[[i64; 2]]) -> Result<ResidualGroup> {
    let rows: Vec<Vec<i64>> = normalized.iter().map(|r| r.to_vec()).collect();
    let snf = smith_normal_form(&IntMatrix::from_rows(2, &rows));
    let d = snf.invariant_factors();
    let v = &snf.right;
    // f·V, the free characters in Smith coordinates φ with θ = V φ
    let fv: Vec<[i64; 2]> = free
        .iter()
        .map(|f| {
            let c = |k: usize| f[0] * v.row(0)[k] + f[1] * v.row(1)[k];
            [c(0), c(1)]
        })
        .collect();
    for k in snf.rank..2 {
        if fv.iter().any(|x| x[k] != 0) {
            return Err(Error::Precondition(
                "free slots move under a continuous part of the stabilizer".into(),
            ));
        }
    }
    let mut seen = BTreeSet::new();
    let ranges: Vec<i64> = d.clone();
    let mut counter = vec![0i64; ranges.len()];
    loop {
        let angles: Vec<Ratio<i64>> = fv
            .iter()
            .map(|x| {
                let mut a = Ratio::from_integer(0);
                for (k, &dk) in ranges.iter().enumerate() {
                    a += Ratio::new(x[k] * counter[k], dk);
                }
                frac(a)
            })
            .collect();
        seen.insert(angles);
        // odometer over Π Z/d_k
        let mut k = 0;
        loop {
            if k == counter.len() {
                return Ok(ResidualGroup {
                    elements: seen.into_iter().collect(),
                });
            }
            counter[k] += 1;
            if counter[k] < ranges[k] {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lattice_volume;

    fn index(n: &[[i64; 2]], f: &[[i64; 2]]) -> i128 {
        let rows = |s: &[[i64; 2]]| s.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
        let all: Vec<[i64; 2]> = n.iter().chain(f).copied().collect();
        let (_, vn) = lattice_volume(&IntMatrix::from_rows(2, &rows(n)));
        let (_, va) = lattice_volume(&IntMatrix::from_rows(2, &rows(&all)));
        vn / va
    }

    #[test]
    fn sign_ambiguity_of_beta_lo() {
        // n = 3: γ normalized, β_3 free → ±1
        let g = residual_action(&[[-6, 2]], &[[-3, 1]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(
            g.multipliers(1).unwrap(),
            vec![GaussianRational::from_int(-1)]
        );
        assert_eq!(g.multipliers(0).unwrap(), vec![GaussianRational::one()]);
    }

    #[test]
    fn order_matches_lattice_index() {
        let cases: Vec<(Vec<[i64; 2]>, Vec<[i64; 2]>)> = vec![
            (vec![[-14, 2], [-9, 1]], vec![[-7, 1], [-11, 1]]),
            (vec![[-5, 1], [-9, 1]], vec![[-13, 1]]),
            (vec![[-3, 1], [-7, 1]], vec![[-9, 1], [-11, 1]]),
            (vec![[-10, 2], [-7, 1]], vec![[-5, 1], [-9, 1]]),
        ];
        for (n, f) in cases {
            let g = residual_action(&n, &f).unwrap();
            assert_eq!(g.order() as i128, index(&n, &f), "{n:?} {f:?}");
        }
    }

    #[test]
    fn continuous_part_rejected() {
        assert!(residual_action(&[[-3, 1]], &[[-5, 1]]).is_err());
        assert_eq!(residual_action(&[], &[]).unwrap().order(), 1);
    }
}
