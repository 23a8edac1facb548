//! Exhaustive and sampled verification.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chars::Fq;
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::field::{prime_power, DEFAULT_MAX_Q};

use super::report::{BoundaryReport, Failure, TheoremReport};
use super::{lookup, Assignment, IdentityDescriptor, Shape, DEFAULT_CAP};

/// How assignments are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every assignment in the domain.
    Exhaustive,
    /// `count` admitted assignments drawn uniformly from a seeded ChaCha8
    /// stream, rejecting those that violate the constraints.
    Sampled { seed: u64, count: u64 },
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub qs: Vec<u64>,
    pub mode: Mode,
    /// Values of n to check; empty means the identity's full range.
    pub ns: Vec<usize>,
    /// Largest exhaustive domain allowed.
    pub cap: u128,
    pub max_q: u64,
    /// Also evaluate the assignments excluded by the constraints.
    pub probe: bool,
    /// Record wall time in reports.
    pub timing: bool,
    /// Failures kept per report; the count is always exact.
    pub failure_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            qs: vec![3, 4, 5],
            mode: Mode::Exhaustive,
            ns: vec![],
            cap: DEFAULT_CAP,
            max_q: DEFAULT_MAX_Q,
            probe: false,
            timing: false,
            failure_limit: 1000,
        }
    }
}

/// Verifies a registered identity (or an erratum, or the negative control).
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    verify_descriptor(&lookup(id)?, opts)
}

/// Verifies a descriptor at every requested q and n.
///
/// Requested values of n outside the identity's range are skipped; if none
/// remain the call fails with [`Error::InvalidParameter`].
pub fn verify_descriptor(d: &IdentityDescriptor, opts: &VerifyOptions) -> Result<Vec<TheoremReport>> {
    let ns: Vec<usize> = match d.n_range {
        None => vec![0],
        Some(_) if opts.ns.is_empty() => d.ns(),
        Some(_) => opts.ns.iter().copied().filter(|&n| d.allows_n(n)).collect(),
    };
    if ns.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "{} is defined for n in {:?}, requested {:?}",
            d.id, d.n_range, opts.ns
        )));
    }
    let mut reports = Vec::new();
    for &q in &opts.qs {
        let (p, k) = prime_power(q)?;
        let fq = Fq::with_cap(p as u64, k, opts.max_q)?;
        for &n in &ns {
            reports.push(run(d, &fq, n, opts)?);
        }
    }
    Ok(reports)
}

enum Outcome {
    Agree,
    Differ(String, String),
}

fn evaluate(d: &IdentityDescriptor, fq: &Fq, a: &Assignment) -> Outcome {
    let show = |r: Result<CycInt>| match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    };
    match ((d.lhs)(fq, a), (d.rhs)(fq, a)) {
        (Ok(l), Ok(r)) if l == r => Outcome::Agree,
        (l, r) => Outcome::Differ(show(l), show(r)),
    }
}

#[derive(Default)]
struct Tally {
    tested: u64,
    excluded: u64,
    failures: Vec<(Assignment, String, String)>,
    probe_tested: u64,
    probe_agreed: u64,
    probe_undefined: u64,
    probe_mismatches: Vec<(Assignment, String, String)>,
}

impl Tally {
    fn merge(mut self, mut other: Tally) -> Tally {
        self.tested += other.tested;
        self.excluded += other.excluded;
        self.failures.append(&mut other.failures);
        self.probe_tested += other.probe_tested;
        self.probe_agreed += other.probe_agreed;
        self.probe_undefined += other.probe_undefined;
        self.probe_mismatches.append(&mut other.probe_mismatches);
        self
    }

    fn record(mut self, d: &IdentityDescriptor, fq: &Fq, a: Assignment, admitted: bool, probe: bool) -> Tally {
        if admitted {
            self.tested += 1;
            if let Outcome::Differ(l, r) = evaluate(d, fq, &a) {
                self.failures.push((a, l, r));
            }
        } else {
            self.excluded += 1;
            if probe {
                self.probe_tested += 1;
                match evaluate(d, fq, &a) {
                    Outcome::Agree => self.probe_agreed += 1,
                    Outcome::Differ(l, r) if l.starts_with("error") || r.starts_with("error") => {
                        self.probe_undefined += 1
                    }
                    Outcome::Differ(l, r) => self.probe_mismatches.push((a, l, r)),
                }
            }
        }
        self
    }
}

fn domain_size(fq: &Fq, shape: &Shape) -> u128 {
    (fq.order() as u128).pow(shape.chars.len() as u32) * (fq.q() as u128).pow(shape.points.len() as u32)
}

fn decode(fq: &Fq, n: usize, shape: &Shape, mut idx: u128) -> Assignment {
    let (r, q) = (fq.order() as u128, fq.q() as u128);
    let mut chars = Vec::with_capacity(shape.chars.len());
    for _ in &shape.chars {
        chars.push(fq.chr((idx % r) as i64));
        idx /= r;
    }
    let mut points = Vec::with_capacity(shape.points.len());
    for _ in &shape.points {
        points.push(fq.field().elem((idx % q) as u64).unwrap());
        idx /= q;
    }
    Assignment { n, chars, points }
}

fn draw(fq: &Fq, n: usize, shape: &Shape, rng: &mut ChaCha8Rng) -> Assignment {
    let chars = shape
        .chars
        .iter()
        .map(|_| fq.chr(rng.gen_range(0..fq.order()) as i64))
        .collect();
    let points = shape
        .points
        .iter()
        .map(|_| fq.field().elem(rng.gen_range(0..fq.q()) as u64).unwrap())
        .collect();
    Assignment { n, chars, points }
}

/// Command line that reproduces one assignment.
pub(crate) fn replay_command(id: &str, q: u32, a: &Assignment) -> String {
    let join = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut cmd = format!("ffhyper replay --id {id} --q {q}");
    if a.n > 0 {
        cmd.push_str(&format!(" --n {}", a.n));
    }
    cmd.push_str(&format!(" --chars {}", join(a.char_exponents())));
    if !a.points.is_empty() {
        cmd.push_str(&format!(" --points {}", join(a.point_indices())));
    }
    cmd
}

fn to_failures(
    d: &IdentityDescriptor,
    fq: &Fq,
    shape: &Shape,
    mut raw: Vec<(Assignment, String, String)>,
    limit: usize,
) -> Vec<Failure> {
    raw.sort_by(|x, y| x.0.cmp(&y.0));
    raw.into_iter()
        .take(limit)
        .map(|(a, lhs, rhs)| Failure {
            assignment: a.labelled(shape),
            chars: a.char_exponents(),
            points: a.point_indices(),
            replay: replay_command(d.id, fq.q(), &a),
            lhs,
            rhs,
        })
        .collect()
}

fn run(d: &IdentityDescriptor, fq: &Fq, n: usize, opts: &VerifyOptions) -> Result<TheoremReport> {
    let start = Instant::now();
    let shape = (d.shape)(n);
    // Build the binomial table once before the workers need it.
    let _ = fq.bin(fq.trivial(), fq.trivial());
    let (tally, mode, seed) = match opts.mode {
        Mode::Exhaustive => {
            let size = domain_size(fq, &shape);
            if size > opts.cap {
                return Err(Error::CapExceeded {
                    size,
                    cap: opts.cap,
                });
            }
            let tally = (0..size as u64)
                .into_par_iter()
                .fold(Tally::default, |t, i| {
                    let a = decode(fq, n, &shape, i as u128);
                    let admitted = (d.admits)(fq, &a);
                    t.record(d, fq, a, admitted, opts.probe)
                })
                .reduce(Tally::default, Tally::merge);
            (tally, "exhaustive", None)
        }
        Mode::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(((fq.q() as u64) << 16) | n as u64);
            let max_draws = count.saturating_mul(1000).max(10_000);
            let mut draws = Vec::new();
            let mut admitted = 0;
            let mut total = 0u64;
            while admitted < count && total < max_draws {
                let a = draw(fq, n, &shape, &mut rng);
                let ok = (d.admits)(fq, &a);
                admitted += ok as u64;
                total += 1;
                draws.push((a, ok));
            }
            let tally = draws
                .into_par_iter()
                .fold(Tally::default, |t, (a, ok)| t.record(d, fq, a, ok, opts.probe))
                .reduce(Tally::default, Tally::merge);
            (tally, "sampled", Some(seed))
        }
    };
    let failed = tally.failures.len() as u64;
    let boundary = opts.probe.then(|| BoundaryReport {
        tested: tally.probe_tested,
        agreed: tally.probe_agreed,
        mismatched: tally.probe_mismatches.len() as u64,
        undefined: tally.probe_undefined,
        examples: to_failures(d, fq, &shape, tally.probe_mismatches, 20),
    });
    Ok(TheoremReport {
        id: d.id.to_string(),
        q: fq.q(),
        n: d.n_range.map(|_| n),
        mode,
        seed,
        tested: tally.tested,
        excluded: tally.excluded,
        failed,
        failures: to_failures(d, fq, &shape, tally.failures, opts.failure_limit),
        failures_truncated: failed as usize > opts.failure_limit,
        boundary,
        ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Both sides of an identity at one assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayOutcome {
    pub lhs: CycInt,
    pub rhs: CycInt,
    pub equal: bool,
    /// Whether the assignment satisfies the domain constraints.
    pub admitted: bool,
}

/// Re-evaluates a registered identity at CLI-encoded values.
pub fn replay(
    id: &str,
    q: u64,
    n: usize,
    chars: &[u64],
    points: &[u64],
    max_q: u64,
) -> Result<ReplayOutcome> {
    let d = lookup(id)?;
    let (p, k) = prime_power(q)?;
    let fq = Fq::with_cap(p as u64, k, max_q)?;
    let n = if d.n_range.is_none() { 0 } else { n };
    if !d.allows_n(n) {
        return Err(Error::InvalidParameter(format!(
            "{id} is defined for n in {:?}, got {n}",
            d.n_range
        )));
    }
    let shape = (d.shape)(n);
    if chars.len() != shape.chars.len() || points.len() != shape.points.len() {
        return Err(Error::InvalidParameter(format!(
            "{id} at n={n} expects characters ({}) and points ({})",
            shape.chars.join(","),
            shape.points.join(",")
        )));
    }
    let a = Assignment::from_indices(&fq, n, chars, points)?;
    replay_descriptor(&d, &fq, &a)
}

/// Evaluates both sides of `d` at `a`.
pub fn replay_descriptor(d: &IdentityDescriptor, fq: &Fq, a: &Assignment) -> Result<ReplayOutcome> {
    let lhs = (d.lhs)(fq, a)?;
    let rhs = (d.rhs)(fq, a)?;
    Ok(ReplayOutcome {
        equal: lhs == rhs,
        admitted: (d.admits)(fq, a),
        lhs,
        rhs,
    })
}
