use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

use super::{build_m1, build_m2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Odd dimension `n + 1`.
    M1,
    /// Odd dimension `n + 2`.
    M2,
}

impl FamilyKind {
    pub fn odd_dim(self, n: usize) -> usize {
        match self {
            FamilyKind::M1 => n + 1,
            FamilyKind::M2 => n + 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::M1 => "m1",
            FamilyKind::M2 => "m2",
        }
    }

    /// Index range of the `β_j` parameters.
    pub fn beta_range(self, n: usize) -> RangeInclusive<usize> {
        match self {
            FamilyKind::M1 => (n + 4) / 2..=n,
            FamilyKind::M2 => (n + 5) / 2..=n + 1,
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m1" => Ok(FamilyKind::M1),
            "m2" => Ok(FamilyKind::M2),
            _ => Err(Error::Parse(format!("unknown family kind {s:?}"))),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 2, got {n}"
        )));
    }
    Ok(())
}

fn insert_beta(
    betas: &mut BTreeMap<usize, GaussianRational>,
    range: RangeInclusive<usize>,
    j: usize,
    c: GaussianRational,
) -> Result<()> {
    if !range.contains(&j) {
        return Err(Error::InvalidParams(format!(
            "beta index {j} outside {}..={}",
            range.start(),
            range.end()
        )));
    }
    if c.is_zero() {
        betas.remove(&j);
    } else {
        betas.insert(j, c);
    }
    Ok(())
}

/// `L(γ, β_lo, …, β_n, β)` with odd dimension `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParamsM1 {
    n: usize,
    pub gamma: GaussianRational,
    betas: BTreeMap<usize, GaussianRational>,
    pub beta: GaussianRational,
}

impl FamilyParamsM1 {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(FamilyParamsM1 {
            n,
            gamma: GaussianRational::zero(),
            betas: BTreeMap::new(),
            beta: GaussianRational::zero(),
        })
    }

    pub fn new(
        n: usize,
        gamma: GaussianRational,
        betas: impl IntoIterator<Item = (usize, GaussianRational)>,
        beta: GaussianRational,
    ) -> Result<Self> {
        let mut p = FamilyParamsM1::zero(n)?;
        p.gamma = gamma;
        p.beta = beta;
        for (j, c) in betas {
            p.set_beta(j, c)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta_range(&self) -> RangeInclusive<usize> {
        FamilyKind::M1.beta_range(self.n)
    }

    /// `β_j`, zero when unset.
    pub fn beta_j(&self, j: usize) -> GaussianRational {
        self.betas
            .get(&j)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn set_beta(&mut self, j: usize, c: GaussianRational) -> Result<()> {
        let range = self.beta_range();
        insert_beta(&mut self.betas, range, j, c)
    }

    /// Nonzero `β_j` only.
    pub fn betas(&self) -> &BTreeMap<usize, GaussianRational> {
        &self.betas
    }
}

/// `L(β_lo, …, β_{n+1})` with odd dimension `n + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParamsM2 {
    n: usize,
    betas: BTreeMap<usize, GaussianRational>,
}

impl FamilyParamsM2 {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(FamilyParamsM2 {
            n,
            betas: BTreeMap::new(),
        })
    }

    pub fn new(
        n: usize,
        betas: impl IntoIterator<Item = (usize, GaussianRational)>,
    ) -> Result<Self> {
        let mut p = FamilyParamsM2::zero(n)?;
        for (j, c) in betas {
            p.set_beta(j, c)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta_range(&self) -> RangeInclusive<usize> {
        FamilyKind::M2.beta_range(self.n)
    }

    pub fn beta_j(&self, j: usize) -> GaussianRational {
        self.betas
            .get(&j)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn set_beta(&mut self, j: usize, c: GaussianRational) -> Result<()> {
        let range = self.beta_range();
        insert_beta(&mut self.betas, range, j, c)
    }

    pub fn betas(&self) -> &BTreeMap<usize, GaussianRational> {
        &self.betas
    }
}

/// A named parameter coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coord {
    Gamma,
    BetaJ(usize),
    Beta,
}

impl std::fmt::Display for Coord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coord::Gamma => write!(f, "gamma"),
            Coord::BetaJ(j) => write!(f, "beta_{j}"),
            Coord::Beta => write!(f, "beta"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    M1(FamilyParamsM1),
    M2(FamilyParamsM2),
}

impl FamilyParams {
    pub fn zero(kind: FamilyKind, n: usize) -> Result<Self> {
        Ok(match kind {
            FamilyKind::M1 => FamilyParams::M1(FamilyParamsM1::zero(n)?),
            FamilyKind::M2 => FamilyParams::M2(FamilyParamsM2::zero(n)?),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyParams::M1(_) => FamilyKind::M1,
            FamilyParams::M2(_) => FamilyKind::M2,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            FamilyParams::M1(p) => p.n(),
            FamilyParams::M2(p) => p.n(),
        }
    }

    pub fn build(&self) -> Result<SuperAlgebra> {
        match self {
            FamilyParams::M1(p) => build_m1(p),
            FamilyParams::M2(p) => build_m2(p),
        }
    }

    /// All coordinates in canonical order: `γ, β_lo.., β` or `β_lo..`.
    pub fn coords(kind: FamilyKind, n: usize) -> Vec<Coord> {
        let betas = kind.beta_range(n).map(Coord::BetaJ);
        match kind {
            FamilyKind::M1 => std::iter::once(Coord::Gamma)
                .chain(betas)
                .chain(std::iter::once(Coord::Beta))
                .collect(),
            FamilyKind::M2 => betas.collect(),
        }
    }

    pub fn get(&self, c: Coord) -> GaussianRational {
        match (self, c) {
            (FamilyParams::M1(p), Coord::Gamma) => p.gamma.clone(),
            (FamilyParams::M1(p), Coord::Beta) => p.beta.clone(),
            (FamilyParams::M1(p), Coord::BetaJ(j)) => p.beta_j(j),
            (FamilyParams::M2(p), Coord::BetaJ(j)) => p.beta_j(j),
            (FamilyParams::M2(_), _) => GaussianRational::zero(),
        }
    }

    pub fn set(&mut self, c: Coord, v: GaussianRational) -> Result<()> {
        match (self, c) {
            (FamilyParams::M1(p), Coord::Gamma) => p.gamma = v,
            (FamilyParams::M1(p), Coord::Beta) => p.beta = v,
            (FamilyParams::M1(p), Coord::BetaJ(j)) => p.set_beta(j, v)?,
            (FamilyParams::M2(p), Coord::BetaJ(j)) => p.set_beta(j, v)?,
            (FamilyParams::M2(_), c) => {
                return Err(Error::InvalidParams(format!(
                    "{c} is not a parameter of the m2 family"
                )))
            }
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<GaussianRational> {
        FamilyParams::coords(self.kind(), self.n())
            .into_iter()
            .map(|c| self.get(c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values().iter().all(GaussianRational::is_zero)
    }
}

impl From<FamilyParamsM1> for FamilyParams {
    fn from(p: FamilyParamsM1) -> Self {
        FamilyParams::M1(p)
    }
}

impl From<FamilyParamsM2> for FamilyParams {
    fn from(p: FamilyParamsM2) -> Self {
        FamilyParams::M2(p)
    }
}
