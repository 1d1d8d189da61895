//! One line per acceptance criterion; exits nonzero when any fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::{g, m1, random_pair, random_witness, KINDS};
use leibsuper_core::algebra::{
    char_sequence, check_graded_closure, check_leibniz, jordan_blocks, lower_central_series,
    minimal_generators, nilindex, restrict, right_mult_matrix, right_mult_superalgebra,
    series_dims, subalgebra_generated, symmetrized_in_annihilator, CharSequence,
};
use leibsuper_core::families::{
    enumerate_representatives, leibniz_from_associative, materialize, random_associative_pair,
    FamilyKind, FamilyParams,
};
use leibsuper_core::iso::{
    apply_witness, calibrate_exponents, classify, decide_iso, fingerprint, verify_witness,
    weight_table,
};
use leibsuper_core::random::{random_nonzero_scalar, random_params};
use leibsuper_core::{GaussianRational, SuperAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn rng(tag: u64, a: usize, b: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(tag.wrapping_mul(1_000_003) ^ ((a as u64) << 20) ^ b as u64)
}

struct Instance {
    params: FamilyParams,
    alg: SuperAlgebra,
}

fn instances(kind: FamilyKind) -> Vec<Instance> {
    let jobs: Vec<(usize, usize)> = (2..=8).flat_map(|n| (0..50).map(move |i| (n, i))).collect();
    jobs.into_par_iter()
        .map(|(n, i)| {
            let mut r = rng(kind as u64 + 1, n, i);
            let params = random_params(&mut r, kind, n, 0.25).unwrap();
            let alg = params.build().unwrap();
            Instance { params, alg }
        })
        .collect()
}

#[derive(Default)]
struct Structural {
    closure: bool,
    leibniz: bool,
    nilindex: bool,
    series: bool,
    char_seq: bool,
    generators: bool,
    subalgebra: bool,
    sub_nilindex: usize,
    operators: bool,
}

fn structural(inst: &Instance, seed: u64) -> Structural {
    let a = &inst.alg;
    let (n, m) = (a.n(), a.m());
    let mut s = Structural {
        closure: check_graded_closure(a).ok,
        leibniz: check_leibniz(a).ok,
        ..Default::default()
    };
    s.nilindex = nilindex(a) == Some(n + m);
    let dims = series_dims(&lower_central_series(a));
    let steps: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
    s.series =
        dims.last() == Some(&0) && steps.first() == Some(&2) && steps[1..].iter().all(|&d| d == 1);

    let expected = CharSequence {
        even_part: vec![n],
        odd_part: vec![m - 1, 1],
    };
    let x1 = a.basis_vector(a.x(1));
    s.char_seq = match (char_sequence(a, 25, seed), right_mult_matrix(a, &x1)) {
        (Ok(rep), Ok((e, o))) => {
            rep.sequence == expected
                && rep.tested >= 25
                && jordan_blocks(&e).ok() == Some(expected.even_part.clone())
                && jordan_blocks(&o).ok() == Some(expected.odd_part.clone())
        }
        _ => false,
    };
    let gens = minimal_generators(a);
    s.generators = (gens.even, gens.odd) == (0, 2);

    let want = if inst.params.kind() == FamilyKind::M1 {
        (n, n)
    } else {
        (n, n + 1)
    };
    if let Ok(sub) = subalgebra_generated(a, &[a.basis_vector(a.y(1))]) {
        if let Ok(r) = restrict(a, &sub) {
            let gr = minimal_generators(&r);
            s.subalgebra = sub.graded_dims() == want && (gr.even, gr.odd) == (0, 1);
            s.sub_nilindex = nilindex(&r).unwrap_or(0);
        }
    }
    let (_, report) = right_mult_superalgebra(a);
    s.operators = report.ok() && symmetrized_in_annihilator(a).ok;
    s
}

fn count(v: &[Structural], f: impl Fn(&Structural) -> bool) -> usize {
    v.iter().filter(|s| !f(s)).count()
}

fn verdict(total: usize, bad: usize, what: &str) -> Outcome {
    if bad == 0 {
        Ok(format!("{total} {what}"))
    } else {
        Err(format!("{bad} of {total} {what} failed"))
    }
}

fn criterion_7() -> Outcome {
    let jobs: Vec<(FamilyKind, usize, usize)> = KINDS
        .iter()
        .flat_map(|&k| (2..=6).flat_map(move |n| (0..100).map(move |i| (k, n, i))))
        .collect();
    let results: Vec<(Option<String>, bool)> = jobs
        .into_par_iter()
        .map(|(kind, n, i)| {
            let mut r = rng(7, n * 2 + kind as usize, i);
            let p = random_params(&mut r, kind, n, 0.25).unwrap();
            let w = random_witness(&mut r, &p);
            let q = apply_witness(&p, &w).unwrap();
            let d = decide_iso(&p, &q).unwrap();
            let sound = d.witness.as_ref().is_none_or(|w| verify_witness(&p, &q, w));
            let fail = !(d.isomorphic && sound && d.witness_verified != Some(false));
            (
                fail.then(|| format!("{kind:?} n={n} #{i}")),
                d.witness.is_some(),
            )
        })
        .collect();
    let bad: Vec<String> = results.iter().filter_map(|r| r.0.clone()).collect();
    let witnesses = results.iter().filter(|r| r.1).count();
    if bad.is_empty() {
        Ok(format!(
            "1000 transported pairs decided yes, {witnesses} witnesses verified by transport"
        ))
    } else {
        Err(format!("failures: {}", bad.join(", ")))
    }
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    for n in 2..=8 {
        let p = m1(n, 1, &[], 0);
        let q = m1(n, 0, &[], 0);
        if decide_iso(&p, &q).unwrap().isomorphic {
            return Err(format!("gamma != 0 vs gamma = 0 answered yes at n={n}"));
        }
    }
    notes.push("gamma split at n=2..8");
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let half = GaussianRational::one().checked_div(&g(2)).unwrap();
    let mut checked = 0;
    for n in [3usize, 5, 7] {
        let lo = (n + 4) / 2;
        for _ in 0..20 {
            let (b, b2) = (random_nonzero_scalar(&mut r), random_nonzero_scalar(&mut r));
            let special = |x: &GaussianRational| *x == half || *x == -&half;
            if special(&b) || special(&b2) || b == b2 || b == -&b2 {
                continue;
            }
            let mk = |v: &GaussianRational| -> FamilyParams {
                let mut p = m1(n, 1, &[], 0);
                p.set(leibsuper_core::families::Coord::BetaJ(lo), v.clone())
                    .unwrap();
                p
            };
            if decide_iso(&mk(&b), &mk(&b2)).unwrap().isomorphic {
                return Err(format!("n={n}: beta {b} vs {b2} answered yes"));
            }
            let d = decide_iso(&mk(&b), &mk(&-&b)).unwrap();
            if !(d.isomorphic && d.witness_verified == Some(true)) {
                return Err(format!(
                    "n={n}: beta {b} vs its negative not shown isomorphic"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{}; {checked} beta pairs separated and sign pairs joined",
        notes.join("")
    ))
}

fn criterion_9() -> Outcome {
    let jobs: Vec<(FamilyKind, usize, usize)> = KINDS
        .iter()
        .flat_map(|&k| (2..=6).flat_map(move |n| (0..100).map(move |i| (k, n, i))))
        .collect();
    let results: Vec<(bool, bool)> = jobs
        .into_par_iter()
        .map(|(kind, n, i)| {
            let mut r = rng(9, n * 2 + kind as usize, i);
            let (p, q) = random_pair(&mut r, kind, n);
            let same = fingerprint(&p).unwrap() == fingerprint(&q).unwrap();
            let iso = decide_iso(&p, &q).unwrap().isomorphic;
            (same == iso, iso)
        })
        .collect();
    let bad = results.iter().filter(|r| !r.0).count();
    let yes = results.iter().filter(|r| r.1).count();
    if bad == 0 {
        Ok(format!("1000 pairs ({yes} isomorphic), zero disagreements"))
    } else {
        Err(format!("{bad} disagreements"))
    }
}

fn criterion_10() -> Outcome {
    let mut classified = 0;
    let mut pairs = 0;
    for n in 2..=5 {
        for kind in KINDS {
            let reps = enumerate_representatives(n, kind).unwrap();
            let shape = |d: &leibsuper_core::families::TailDescriptor| {
                (d.case_tag, d.j, d.s, d.torsion, d.free_slots.clone())
            };
            let known: BTreeSet<_> = reps.iter().map(|d| format!("{:?}", shape(d))).collect();
            let mut r = rng(10, n, kind as usize);
            for i in 0..60 {
                let p_zero = [0.2, 0.5, 0.8][i % 3];
                let p = random_params(&mut r, kind, n, p_zero).unwrap();
                let c = classify(&p).unwrap();
                if !known.contains(&format!("{:?}", shape(&c))) {
                    return Err(format!("{kind:?} n={n}: classify gave unlisted {c:?}"));
                }
                classified += 1;
            }
            let mut mats = Vec::new();
            for d in &reps {
                let made = (0..8).find_map(|_| {
                    let tail: Vec<GaussianRational> = d
                        .free_slots
                        .iter()
                        .map(|_| random_nonzero_scalar(&mut r))
                        .collect();
                    materialize(d, &tail, 0).ok()
                });
                match made {
                    Some(p) => mats.push((d, p)),
                    None => return Err(format!("{kind:?} n={n}: cannot materialize {d:?}")),
                }
            }
            for (i, (di, pi)) in mats.iter().enumerate() {
                for (dj, pj) in &mats[i + 1..] {
                    if decide_iso(pi, pj).unwrap().isomorphic {
                        return Err(format!(
                            "{:?} and {:?} are isomorphic",
                            di.case_tag, dj.case_tag
                        ));
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{classified} instances listed, {pairs} representative pairs non-isomorphic"
    ))
}

fn criterion_11() -> Outcome {
    let mut offsets = BTreeSet::new();
    for kind in KINDS {
        for n in 2..=8 {
            let c = calibrate_exponents(kind, n, 8, 1100 + n as u64)
                .map_err(|e| format!("{kind:?} n={n}: {e}"))?;
            if c.weights != weight_table(kind, n) {
                return Err(format!(
                    "{kind:?} n={n}: calibrated weights differ from the table"
                ));
            }
            if kind == FamilyKind::M1 {
                let gamma = c.weights.first().map(|w| w.row());
                if gamma != Some([-2 * n as i64, 2]) || c.affine_beta != Some(true) {
                    return Err(format!("m1 n={n}: gamma or affine beta law not reproduced"));
                }
                for w in &c.weights[1..c.weights.len() - 1] {
                    if let leibsuper_core::families::Coord::BetaJ(j) = w.coord {
                        if w.row() != [-(2 * j as i64 - 3), 1] {
                            return Err(format!("m1 n={n}: beta_{j} exponent {:?}", w.row()));
                        }
                    }
                }
            } else {
                offsets.insert(c.beta_exponent_offset);
            }
        }
    }
    match offsets.into_iter().collect::<Vec<_>>().as_slice() {
        [Some(3)] => Ok(
            "m1 weights reproduced for n=2..8; m2 exponent 2j-3 on every sample (2j-1 rejected)"
                .into(),
        ),
        other => Err(format!("m2 offsets {other:?}")),
    }
}

fn criterion_12_assoc() -> Result<usize, String> {
    let mut r = ChaCha8Rng::seed_from_u64(12);
    for i in 0..20 {
        let (a, d) = random_associative_pair(&mut r);
        let l = leibniz_from_associative(&a, &d).map_err(|e| format!("pair {i}: {e}"))?;
        if !check_leibniz(&l).ok {
            return Err(format!("pair {i} fails the Leibniz identity"));
        }
    }
    Ok(20)
}

fn main() {
    let t0 = Instant::now();
    let m1s = instances(FamilyKind::M1);
    let s1: Vec<Structural> = m1s
        .par_iter()
        .enumerate()
        .map(|(i, x)| structural(x, 100 + i as u64))
        .collect();
    let t1 = t0.elapsed().as_secs_f64();
    let m2s = instances(FamilyKind::M2);
    let s2: Vec<Structural> = m2s
        .par_iter()
        .enumerate()
        .map(|(i, x)| structural(x, 200 + i as u64))
        .collect();

    let (n1, n2) = (s1.len(), s2.len());
    let mut lines: Vec<(usize, &str, Outcome)> = Vec::new();

    let bad1 = count(&s1, |s| s.closure && s.leibniz);
    lines.push((
        1,
        "family validity (m1, n=2..8, 50 draws)",
        verdict(n1, bad1, "instances closed and Leibniz").and_then(|m| {
            if t1 < 60.0 {
                Ok(format!("{m} in {t1:.1}s with all m1 invariants"))
            } else {
                Err(format!("over budget: {t1:.1}s"))
            }
        }),
    ));
    lines.push((
        2,
        "nilindex n+m and series drops 2,1,1,...",
        verdict(n1, count(&s1, |s| s.nilindex && s.series), "instances"),
    ));
    lines.push((
        3,
        "char sequence (n | m-1, 1) attained by x_1",
        verdict(
            n1,
            count(&s1, |s| s.char_seq),
            "instances, 25 extra samples each",
        ),
    ));
    lines.push((
        4,
        "minimal generators (0, 2)",
        verdict(
            n1 + n2,
            count(&s1, |s| s.generators) + count(&s2, |s| s.generators),
            "instances",
        ),
    ));
    let sub_bad = count(&s1, |s| s.subalgebra) + count(&s2, |s| s.subalgebra);
    let sub_nil: BTreeSet<usize> = s1.iter().chain(&s2).map(|s| s.sub_nilindex).collect();
    lines.push((
        5,
        "<y_1> graded dims and one-generated",
        verdict(n1 + n2, sub_bad, "instances")
            .map(|m| format!("{m}; nilindices of <y_1> seen {sub_nil:?}")),
    ));
    let bad6 = count(&s2, |s| {
        s.closure && s.leibniz && s.nilindex && s.series && s.char_seq && s.generators
    });
    lines.push((
        6,
        "criteria 1-4 for m2 (nilindex 2n+2, (n | n+1, 1))",
        verdict(n2, bad6, "instances"),
    ));
    lines.push((
        7,
        "isomorphism soundness under random witnesses",
        criterion_7(),
    ));
    lines.push((8, "isomorphism separations", criterion_8()));
    lines.push((9, "fingerprint equality matches decide_iso", criterion_9()));
    lines.push((10, "classification coverage n=2..5", criterion_10()));
    lines.push((11, "exponent calibration", criterion_11()));
    let ops_bad = count(&s1, |s| s.operators) + count(&s2, |s| s.operators);
    lines.push((
        12,
        "right multiplications and symmetrizations",
        verdict(n1 + n2, ops_bad, "instances").and_then(|m| {
            criterion_12_assoc()
                .map(|k| format!("{m}; {k} associative pairs give Leibniz algebras"))
        }),
    ));

    let mut failed = false;
    for (k, name, out) in &lines {
        match out {
            Ok(msg) => println!("criterion {k:>2} PASS  {name}: {msg}"),
            Err(msg) => {
                failed = true;
                println!("criterion {k:>2} FAIL  {name}: {msg}");
            }
        }
    }
    if failed {
        std::process::exit(1);
    }
}
