//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ffhyper_core::classical::{
    check_integral_formula, check_ksum_formula, check_mr_reduction, ClassicalFdParams, QuadratureConfig,
    INTEGRAL_TOL, SERIES_TOL,
};
use ffhyper_core::identities::{
    list_identities, negative_control, verify, verify_descriptor, Mode, ReportSet, TheoremReport, VerifyOptions,
};
use ffhyper_core::{CycInt, CycloRing, Fq};

const DUAL_PATH_BUDGET: Duration = Duration::from_secs(300);
const CLASSICAL_BUDGET: Duration = Duration::from_secs(10);
const SAMPLED_QS: [u64; 5] = [7, 8, 9, 11, 13];
const SAMPLES: u64 = 500;

struct Outcome {
    pass: bool,
    detail: String,
}

fn totals(reports: &[TheoremReport]) -> (u64, u64) {
    (
        reports.iter().map(|r| r.tested).sum(),
        reports.iter().map(|r| r.failed).sum(),
    )
}

fn exhaustive(qs: &[u64], ns: &[usize]) -> VerifyOptions {
    VerifyOptions {
        qs: qs.to_vec(),
        ns: ns.to_vec(),
        ..VerifyOptions::default()
    }
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let reports = verify("t2.1", &exhaustive(&[3, 4, 5], &[1, 2])).unwrap();
    let elapsed = start.elapsed();
    let (tested, failed) = totals(&reports);
    Outcome {
        pass: failed == 0 && tested > 0 && elapsed < DUAL_PATH_BUDGET,
        detail: format!(
            "definition = character sum, q in {{3,4,5}}, n in {{1,2}}: {tested} assignments, {failed} failures, {:.2}s",
            elapsed.as_secs_f64()
        ),
    }
}

fn ac2() -> Outcome {
    let registry = list_identities();
    let mut tested = 0;
    let mut bad = Vec::new();
    let small = exhaustive(&[3, 4, 5], &[]);
    let sampled = VerifyOptions {
        qs: SAMPLED_QS.to_vec(),
        mode: Mode::Sampled {
            seed: 20_240_601,
            count: SAMPLES,
        },
        ..VerifyOptions::default()
    };
    for d in registry {
        for opts in [&small, &sampled] {
            for r in verify_descriptor(d, opts).unwrap() {
                tested += r.tested;
                let short = matches!(opts.mode, Mode::Sampled { .. }) && r.tested != SAMPLES;
                if !r.passed() || r.tested == 0 || short {
                    bad.push(r.text_line());
                }
            }
        }
    }
    let pass = bad.is_empty() && registry.len() >= 18;
    let mut detail = format!(
        "{} identities, exhaustive q in {{3,4,5}} + {SAMPLES} samples at q in {SAMPLED_QS:?}: {tested} assignments",
        registry.len()
    );
    for line in bad.iter().take(5) {
        detail.push_str(&format!("\n      {line}"));
    }
    Outcome { pass, detail }
}

fn ac3() -> Outcome {
    let mut problems = Vec::new();
    // {A choose ε} = -1 + (q-1)δ(A)
    for q in [5u64, 7, 9] {
        let f = Fq::of_order(q).unwrap();
        for a in f.all_chars() {
            let expect = -1 + (q as i64 - 1) * a.is_trivial() as i64;
            if f.binom(a, f.trivial()).unwrap() != f.int(expect) {
                problems.push(format!("binom q={q} A={a}"));
            }
        }
    }
    for (id, q, n) in [("gauss.at1", 5, 0), ("t4.eval-all1", 5, 2)] {
        let reports = verify(id, &exhaustive(&[q], &[n])).unwrap();
        let (tested, failed) = totals(&reports);
        if failed > 0 || tested == 0 {
            problems.push(format!("{id} q={q}: {failed} of {tested} fail"));
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            "{A choose ε} at q in {5,7,9}; 2F1 at x=1, q=5; F_D at all ones, q=5, n=2".into()
        } else {
            problems.join("; ")
        },
    }
}

fn ac4() -> Outcome {
    let cfg = QuadratureConfig::default();
    let timed = |f: &dyn Fn() -> f64| {
        let start = Instant::now();
        let r = f();
        (r, start.elapsed())
    };
    let checks: [(&str, f64, Box<dyn Fn() -> f64>); 3] = [
        (
            "integral",
            INTEGRAL_TOL,
            Box::new(|| {
                let p = ClassicalFdParams::real(0.5, &[1.5, 2.0], 2.5, &[0.3, 0.1]);
                check_integral_formula(&p, &cfg).unwrap().residual
            }),
        ),
        (
            "ksum",
            SERIES_TOL,
            Box::new(|| {
                let p = ClassicalFdParams::real(0.4, &[0.8, 1.2], 1.9, &[0.3, 0.2]);
                check_ksum_formula(&p).unwrap().residual
            }),
        ),
        (
            "mr",
            SERIES_TOL,
            Box::new(|| {
                let p = ClassicalFdParams::real(0.6, &[0.7, 0.9], 1.6, &[0.2, 0.4]);
                check_mr_reduction(&p).unwrap().residual
            }),
        ),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, tol, check) in &checks {
        let (residual, elapsed) = timed(check.as_ref());
        let ok = residual < *tol && elapsed < CLASSICAL_BUDGET;
        pass &= ok;
        parts.push(format!("{name} {residual:.2e} (< {tol:.0e}, {:.3}s)", elapsed.as_secs_f64()));
    }
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn random_element(ring: &std::sync::Arc<CycloRing>, rng: &mut ChaCha8Rng) -> CycInt {
    let counts: Vec<i64> = (0..ring.order()).map(|_| rng.gen_range(-5..=5)).collect();
    ring.from_group_ring(&counts)
}

fn ring_axioms() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [1u32, 2, 3, 4, 6, 8, 12] {
        let ring = CycloRing::get(n).unwrap();
        for _ in 0..200 {
            let (a, b, c) = (
                random_element(&ring, &mut rng),
                random_element(&ring, &mut rng),
                random_element(&ring, &mut rng),
            );
            let ok = &(&a + &b) + &c == &a + &(&b + &c)
                && &(&a * &b) * &c == &a * &(&b * &c)
                && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
                && &a * &b == &b * &a
                && &a + &ring.zero() == a
                && &a * &ring.one() == a
                && (&a - &a).is_zero();
            if !ok {
                return Err(format!("ring axioms fail at n={n}"));
            }
        }
        let roots: Vec<i64> = vec![1; n as usize];
        if n > 1 && !ring.from_group_ring(&roots).is_zero() {
            return Err(format!("sum of roots of unity nonzero at n={n}"));
        }
    }
    Ok(())
}

fn orthogonality() -> Result<u32, String> {
    let mut fields = 0;
    for q in 2u64..=64 {
        let Ok(f) = Fq::of_order(q) else { continue };
        fields += 1;
        for c in f.all_chars() {
            let mut sum = f.zero();
            for x in f.field().nonzero_elements() {
                sum += f.eval(c, x);
            }
            let expect = if c.is_trivial() { q as i64 - 1 } else { 0 };
            if sum != f.int(expect) {
                return Err(format!("orthogonality fails at q={q}, {c}"));
            }
        }
    }
    Ok(fields)
}

fn ac5() -> Outcome {
    let mut problems = Vec::new();
    if let Err(e) = ring_axioms() {
        problems.push(e);
    }
    let fields = orthogonality().unwrap_or_else(|e| {
        problems.push(e);
        0
    });
    let control = verify_descriptor(&negative_control(), &exhaustive(&[3, 4, 5], &[])).unwrap();
    let (tested, failed) = totals(&control);
    if failed == 0 {
        problems.push("negative control passed".into());
    }
    let opts = VerifyOptions {
        qs: vec![7, 9],
        mode: Mode::Sampled { seed: 42, count: 100 },
        ..VerifyOptions::default()
    };
    let run = || ReportSet::new(verify("t5.gf2", &opts).unwrap()).to_json();
    if run() != run() {
        problems.push("JSON differs between runs".into());
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "ring axioms n in {{1,2,3,4,6,8,12}}; orthogonality over {fields} fields q <= 64; \
                 negative control fails {failed}/{tested}; JSON reproducible"
            )
        } else {
            problems.join("; ")
        },
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 5] = [
        ("AC1 dual-path agreement", ac1),
        ("AC2 full registry", ac2),
        ("AC3 spot values", ac3),
        ("AC4 classical checks", ac4),
        ("AC5 infrastructure soundness", ac5),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let o = check();
        all &= o.pass;
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        std::process::exit(1);
    }
}
