use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{Coord, FamilyKind, FamilyParams, FamilyParamsM1, FamilyParamsM2};
use crate::scalar::GaussianRational;

use super::monomial::{monomial_solvable, solve_in_qi, MonomialSystem, Residual};
use super::weights::{active_coords, beta_lo, character, kappa, M2_BETA_OFFSET};
use super::witness::{verify_witness, IsoWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub case: String,
    pub equation: String,
    pub verdict: String,
}

fn record(
    case: impl Into<String>,
    equation: impl Into<String>,
    verdict: impl Into<String>,
) -> TraceRecord {
    TraceRecord {
        case: case.into(),
        equation: equation.into(),
        verdict: verdict.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub witness: Option<IsoWitness>,
    /// Result of checking the witness by transport, when one was built.
    pub witness_verified: Option<bool>,
    pub trace: Vec<TraceRecord>,
}

fn equation_for(kind: FamilyKind, n: usize, c: Coord) -> String {
    match (kind, c) {
        (FamilyKind::M1, Coord::Gamma) => format!("b^2*gamma = gamma'*a1^{}", 2 * n),
        (FamilyKind::M1, Coord::BetaJ(j)) => format!("b*beta_{j} = a1^{}*beta'_{j}", 2 * j - 3),
        (FamilyKind::M1, Coord::Beta) => format!("a1*b*beta = a1^{}*beta' (kappa = 0)", 2 * n),
        (FamilyKind::M2, Coord::BetaJ(j)) => {
            format!(
                "b*beta_{j} = a1^{}*beta'_{j}",
                2 * j as i64 - M2_BETA_OFFSET
            )
        }
        (FamilyKind::M2, c) => format!("{c}"),
    }
}

fn pattern_verdict(p: &GaussianRational, q: &GaussianRational) -> (bool, &'static str) {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => (true, "both zero"),
        (false, false) => (true, "both nonzero"),
        _ => (false, "zero pattern differs: no"),
    }
}

fn no(trace: Vec<TraceRecord>) -> IsoDecision {
    IsoDecision {
        isomorphic: false,
        witness: None,
        witness_verified: None,
        trace,
    }
}

/// Decides whether `p` and `q` give isomorphic algebras.
pub fn decide_iso(p: &FamilyParams, q: &FamilyParams) -> Result<IsoDecision> {
    if p.kind() != q.kind() || p.n() != q.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            found: q.n(),
        });
    }
    let (kind, n) = (p.kind(), p.n());
    let mut trace = Vec::new();

    if let (FamilyParams::M1(pp), FamilyParams::M1(qq)) = (p, q) {
        let (kp, kq) = (kappa(pp), kappa(qq));
        let eq = if n % 2 == 1 {
            format!(
                "kappa = gamma - 4*beta_{}^2 scales like gamma",
                beta_lo(kind, n)
            )
        } else {
            "kappa = gamma".to_string()
        };
        let (ok, v) = pattern_verdict(&kp, &kq);
        trace.push(record("kappa", eq, v));
        if !ok {
            return Ok(no(trace));
        }
    }
    if kind == FamilyKind::M2 {
        trace.push(record(
            "exponent",
            format!("b*beta_j = a1^(2j-{M2_BETA_OFFSET})*beta'_j"),
            "calibrated by transport; the 2j-1 variant is rejected",
        ));
    }

    let active = active_coords(p);
    let mut sys = MonomialSystem::new(2);
    for c in FamilyParams::coords(kind, n) {
        if !active.contains(&c) {
            trace.push(record(
                c.to_string(),
                "a_top*b*kappa + a1*b*beta = a1^(2n)*beta'",
                "absorbed by a_top",
            ));
            continue;
        }
        let (cp, cq) = (p.get(c), q.get(c));
        let (ok, v) = pattern_verdict(&cp, &cq);
        trace.push(record(c.to_string(), equation_for(kind, n, c), v));
        if !ok {
            return Ok(no(trace));
        }
        if !cp.is_zero() {
            sys.push(character(kind, n, c).to_vec(), cq.checked_div(&cp)?);
        }
    }

    let verdict = monomial_solvable(&sys)?;
    if !verdict.solvable {
        let detail = match &verdict.residual {
            Residual::Relation { relation, value } => {
                format!("relation {relation:?} evaluates to {value}, not 1: no")
            }
            _ => "inconsistent: no".to_string(),
        };
        trace.push(record(
            "monomial system",
            format!("{} equations in (a1, b)", sys.equations.len()),
            detail,
        ));
        return Ok(no(trace));
    }
    trace.push(record(
        "monomial system",
        format!("{} equations in (a1, b)", sys.equations.len()),
        "solvable over C",
    ));

    let Some(sol) = solve_in_qi(&sys)? else {
        trace.push(record(
            "witness",
            "roots of the Smith-form equations",
            "decided, witness not Q(i)-expressible",
        ));
        return Ok(IsoDecision {
            isomorphic: true,
            witness: None,
            witness_verified: None,
            trace,
        });
    };
    let (a1, b) = (sol[0].clone(), sol[1].clone());
    let a_top = match (p, q) {
        (FamilyParams::M1(pp), FamilyParams::M1(qq)) => {
            let k = kappa(pp);
            if k.is_zero() {
                GaussianRational::zero()
            } else {
                // a = (a1^{2n} β' − a1 b β) / (b κ)
                let num = &(&a1.pow(2 * n as i64)? * &qq.beta) - &(&(&a1 * &b) * &pp.beta);
                num.checked_div(&(&b * &k))?
            }
        }
        _ => GaussianRational::zero(),
    };
    trace.push(record(
        "witness",
        "a_top from the affine beta equation",
        format!("a1 = {a1}, a_top = {a_top}, b_top = {b}"),
    ));
    let w = IsoWitness::new(p, a1, a_top, b)?;
    let ok = verify_witness(p, q, &w);
    trace.push(record(
        "verify",
        "transport(build(P), T) = build(Q)",
        if ok { "exact match" } else { "mismatch" },
    ));
    Ok(IsoDecision {
        isomorphic: true,
        witness: Some(w),
        witness_verified: Some(ok),
        trace,
    })
}

pub fn decide_iso_m1(p: &FamilyParamsM1, q: &FamilyParamsM1) -> Result<IsoDecision> {
    decide_iso(&p.clone().into(), &q.clone().into())
}

pub fn decide_iso_m2(p: &FamilyParamsM2, q: &FamilyParamsM2) -> Result<IsoDecision> {
    decide_iso(&p.clone().into(), &q.clone().into())
}
