//! Systems `Π u_k^{e_k} = c` over nonzero complex unknowns.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::scalar::{power_product, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSystem {
    pub unknowns: usize,
    /// `(exponents, rhs)`: `Π u_k^{exponents[k]} = rhs`.
    pub equations: Vec<(Vec<i64>, GaussianRational)>,
}

impl MonomialSystem {
    pub fn new(unknowns: usize) -> Self {
        MonomialSystem {
            unknowns,
            equations: Vec::new(),
        }
    }

    pub fn push(&mut self, exponents: Vec<i64>, rhs: GaussianRational) {
        self.equations.push((exponents, rhs));
    }

    fn validate(&self) -> Result<()> {
        for (i, (e, c)) in self.equations.iter().enumerate() {
            if e.len() != self.unknowns {
                return Err(Error::DimensionMismatch {
                    expected: self.unknowns,
                    found: e.len(),
                });
            }
            if c.is_zero() {
                return Err(Error::ZeroRhs(i));
            }
        }
        Ok(())
    }

    fn exponent_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.equations.iter().map(|(e, _)| e.clone()).collect();
        IntMatrix::from_rows(self.unknowns, &rows)
    }

    fn rhs(&self) -> Vec<GaussianRational> {
        self.equations.iter().map(|(_, c)| c.clone()).collect()
    }

    /// Whether `values` satisfies every equation exactly.
    pub fn is_solution(&self, values: &[GaussianRational]) -> Result<bool> {
        for (e, c) in &self.equations {
            if power_product(values, e)? != *c {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// What is left after reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Residual {
    /// Single unknown: the system reduced to `u^exponent = value`; for a
    /// failure, `value` is the mismatched pair's left side.
    Power {
        exponent: i64,
        value: GaussianRational,
    },
    /// The lattice relation `Π rhs^relation` and its value (`1` iff consistent).
    Relation {
        relation: Vec<i64>,
        value: GaussianRational,
    },
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialVerdict {
    pub solvable: bool,
    pub residual: Residual,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    // returns (g, u, v) with u·a + v·b = g ≥ 0
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Decides solvability over `C \ {0}`.
///
/// One unknown: equations `u^k = c` are folded pairwise through
/// `gcd(K, k) = g = sK + tk`, checking `C^{k/g} = c^{K/g}`. More unknowns:
/// solvable iff every generator `t` of the integer left kernel of the
/// exponent matrix has `Π rhs^t = 1`.
pub fn monomial_solvable(sys: &MonomialSystem) -> Result<MonomialVerdict> {
    sys.validate()?;
    if sys.equations.is_empty() {
        return Ok(MonomialVerdict {
            solvable: true,
            residual: Residual::Empty,
        });
    }
    if sys.unknowns == 1 {
        let (mut big_k, mut big_c) = (0i64, GaussianRational::one());
        for (e, c) in &sys.equations {
            let k = e[0];
            if k == 0 {
                if !c.is_one() {
                    return Ok(MonomialVerdict {
                        solvable: false,
                        residual: Residual::Power {
                            exponent: 0,
                            value: c.clone(),
                        },
                    });
                }
                continue;
            }
            let (g, s, t) = ext_gcd(big_k, k);
            let lhs = big_c.pow(k / g)?;
            let rhs = c.pow(big_k / g)?;
            if lhs != rhs {
                return Ok(MonomialVerdict {
                    solvable: false,
                    residual: Residual::Power {
                        exponent: g,
                        value: lhs.checked_div(&rhs)?,
                    },
                });
            }
            big_c = &big_c.pow(s)? * &c.pow(t)?;
            big_k = g;
        }
        return Ok(MonomialVerdict {
            solvable: true,
            residual: Residual::Power {
                exponent: big_k,
                value: big_c,
            },
        });
    }
    let snf = smith_normal_form(&sys.exponent_matrix());
    let rhs = sys.rhs();
    for t in snf.left_kernel() {
        let value = power_product(&rhs, &t)?;
        if !value.is_one() {
            return Ok(MonomialVerdict {
                solvable: false,
                residual: Residual::Relation { relation: t, value },
            });
        }
    }
    Ok(MonomialVerdict {
        solvable: true,
        residual: Residual::Empty,
    })
}

/// A solution with every unknown in `Q(i)`, when the Smith-form roots exist
/// there. `Ok(None)` covers both unsolvable systems and solutions outside
/// `Q(i)` along this construction.
pub fn solve_in_qi(sys: &MonomialSystem) -> Result<Option<Vec<GaussianRational>>> {
    sys.validate()?;
    let u = sys.unknowns;
    if sys.equations.is_empty() {
        return Ok(Some(vec![GaussianRational::one(); u]));
    }
    let snf = smith_normal_form(&sys.exponent_matrix());
    let rhs = sys.rhs();
    for t in snf.left_kernel() {
        if !power_product(&rhs, &t)?.is_one() {
            return Ok(None);
        }
    }
    // D φ = U·log(rhs): z_i^{d_i} = Π rhs^{U_i}
    let factors = snf.invariant_factors();
    let mut z = vec![GaussianRational::one(); u];
    for (i, &d) in factors.iter().enumerate() {
        let r = power_product(&rhs, &snf.left.row(i))?;
        let d = u32::try_from(d)
            .map_err(|_| Error::Precondition("invariant factor too large".into()))?;
        match r.exact_root(d) {
            Some(root) => z[i] = root,
            None => return Ok(None),
        }
    }
    // unknowns = V · φ
    let mut out = Vec::with_capacity(u);
    for j in 0..u {
        out.push(power_product(&z, &snf.right.row(j))?);
    }
    debug_assert!(sys.is_solution(&out)?);
    if !sys.is_solution(&out)? {
        return Ok(None);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    fn single(eqs: &[(i64, i64)]) -> MonomialSystem {
        let mut s = MonomialSystem::new(1);
        for &(k, c) in eqs {
            s.push(vec![k], g(c));
        }
        s
    }

    #[test]
    fn single_unknown_fold() {
        assert!(
            monomial_solvable(&single(&[(2, 4), (3, 8)]))
                .unwrap()
                .solvable
        );
        let v = monomial_solvable(&single(&[(2, 1), (4, 4)])).unwrap();
        assert!(!v.solvable);
        assert!(
            monomial_solvable(&single(&[(2, 4), (3, -8)]))
                .unwrap()
                .solvable
        );
        assert!(
            !monomial_solvable(&single(&[(2, 4), (3, 9)]))
                .unwrap()
                .solvable
        );
        assert!(!monomial_solvable(&single(&[(0, 2)])).unwrap().solvable);
    }

    #[test]
    fn zero_rhs_is_an_error() {
        assert_eq!(
            monomial_solvable(&single(&[(2, 0)])),
            Err(Error::ZeroRhs(0))
        );
    }

    #[test]
    fn two_unknowns() {
        // b^2 a^-6 = 4, b a^-3 = 2: consistent
        let mut s = MonomialSystem::new(2);
        s.push(vec![-6, 2], g(4));
        s.push(vec![-3, 1], g(2));
        assert!(monomial_solvable(&s).unwrap().solvable);
        let sol = solve_in_qi(&s).unwrap().unwrap();
        assert!(s.is_solution(&sol).unwrap());
        // b a^-3 = 2 and b a^-3 = 3: inconsistent
        let mut t = MonomialSystem::new(2);
        t.push(vec![-3, 1], g(2));
        t.push(vec![-3, 1], g(3));
        let v = monomial_solvable(&t).unwrap();
        assert!(!v.solvable);
        assert!(solve_in_qi(&t).unwrap().is_none());
    }

    #[test]
    fn agrees_with_fold_on_one_unknown() {
        for eqs in [
            vec![(2, 4), (3, 8)],
            vec![(2, 1), (4, 4)],
            vec![(4, 16), (6, -64)],
            vec![(4, 16), (6, 64)],
            vec![(3, -1), (5, 1)],
        ] {
            let s = single(&eqs);
            let fold = monomial_solvable(&s).unwrap().solvable;
            let snf = smith_normal_form(&s.exponent_matrix());
            let rhs = s.rhs();
            let lattice = snf
                .left_kernel()
                .iter()
                .all(|t| power_product(&rhs, t).unwrap().is_one());
            assert_eq!(fold, lattice, "{eqs:?}");
        }
    }

    #[test]
    fn non_qi_root() {
        // b^2 = 2 has no solution in Q(i)
        let mut s = MonomialSystem::new(2);
        s.push(vec![0, 2], g(2));
        assert!(monomial_solvable(&s).unwrap().solvable);
        assert!(solve_in_qi(&s).unwrap().is_none());
        let mut t = MonomialSystem::new(2);
        t.push(vec![0, 2], GaussianRational::from_parts(0, 1, 2, 1));
        let sol = solve_in_qi(&t).unwrap().unwrap();
        assert!(t.is_solution(&sol).unwrap());
    }
}
