//! Exhaustive verification sweeps.
//!
//! Each sweep cuts its work into contiguous chunks whose boundaries do not
//! depend on the worker count, evaluates the chunks (serially or on a rayon
//! pool) and merges the partial tallies in chunk order. Serial and parallel
//! runs therefore produce identical reports apart from elapsed time.

mod enumerate;
mod report;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

pub use enumerate::{enumerate_positive_triples, enumerate_triples, is_primitive};
pub use report::{Failure, Mode, ReportRecord, VerificationReport, MAX_STORED_FAILURES};
use report::Tally;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::inverse::{preimage, preimage_positive, preimage_positive_16};
use crate::param::{
    build_symbolic_f, eval_f, eval_positive_16, eval_positive_at, satisfies_equation, sigma_raw, t_numerators,
    transcribe_displayed_f, AdmissibleABC, ParamPoint4, PythTriple, SymbolicTriple,
};

/// Triples per chunk in the surjectivity sweeps.
const TRIPLE_CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    /// In the image-box sweep, every `sample_every`-th point (by linear index)
    /// is also checked against the symbolic polynomials.
    pub sample_every: u64,
    pub budgets: Budgets,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            sample_every: 97,
            budgets: Budgets::default(),
        }
    }
}

struct Deadline {
    start: Instant,
    limit: Option<Duration>,
}

impl Deadline {
    fn new(limit: Option<Duration>) -> Self {
        Deadline {
            start: Instant::now(),
            limit,
        }
    }

    fn check(&self) -> Result<()> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Error::budget(
                "sweep time (ms)",
                self.start.elapsed().as_millis(),
                limit.as_millis(),
            )),
            _ => Ok(()),
        }
    }
}

fn run_chunks<C, F>(chunks: &[C], jobs: usize, work: F) -> Result<Tally>
where
    C: Sync,
    F: Fn(&C) -> Result<Tally> + Sync,
{
    let parts: Vec<Tally> = if jobs <= 1 {
        chunks.iter().map(&work).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
        pool.install(|| chunks.par_iter().map(&work).collect::<Result<_>>())?
    };
    Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
}

/// For every triple in the box, `eval_f(preimage(t)) == t`.
pub fn check_surjectivity(bound: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    let deadline = Deadline::new(opts.budgets.sweep_time);
    let triples = enumerate_triples(bound, opts.budgets.enumerate_bound)?;
    let chunks: Vec<&[PythTriple]> = triples.chunks(TRIPLE_CHUNK).collect();
    let tally = run_chunks(&chunks, opts.jobs, |chunk| {
        deadline.check()?;
        let mut tally = Tally::default();
        for t in chunk.iter() {
            let p = preimage(t);
            let got = eval_f(&p);
            if &got != t {
                tally.fail(format!("preimage {p}"), t, got);
            }
            tally.checked += 1;
        }
        tally.count("triples", chunk.len() as u64);
        Ok(tally)
    })?;
    Ok(VerificationReport::from_tally(
        Mode::Surjectivity,
        &[("bound", bound)],
        tally,
        deadline.start.elapsed(),
    ))
}

/// Every point of `[-radius, radius]^4` maps to an integral Pythagorean
/// triple; sampled points also agree with `eval_f` and the symbolic triple.
pub fn check_image_box(radius: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    if radius > opts.budgets.image_radius {
        return Err(Error::budget("image radius", radius, opts.budgets.image_radius));
    }
    if opts.sample_every == 0 {
        return Err(Error::Precondition("sample interval must be positive".into()));
    }
    let deadline = Deadline::new(opts.budgets.sweep_time);
    let symbolic = build_symbolic_f();
    let r = radius as i64;
    let side = 2 * radius + 1;
    let xs: Vec<i64> = (-r..=r).collect();
    let tally = run_chunks(&xs, opts.jobs, |&x| {
        let mut tally = Tally::default();
        let xi = (x + r) as u64;
        for y in -r..=r {
            deadline.check()?;
            let yi = (y + r) as u64;
            for z in -r..=r {
                let zi = (z + r) as u64;
                for w in -r..=r {
                    let wi = (w + r) as u64;
                    let index = ((xi * side + yi) * side + zi) * side + wi;
                    let point = ParamPoint4::new(x, y, z, w);
                    check_image_point(&point, index.is_multiple_of(opts.sample_every), &symbolic, &mut tally);
                }
            }
        }
        Ok(tally)
    })?;
    Ok(VerificationReport::from_tally(
        Mode::ImageBox,
        &[("radius", radius), ("sample_every", opts.sample_every)],
        tally,
        deadline.start.elapsed(),
    ))
}

fn check_image_point(point: &ParamPoint4, sampled: bool, symbolic: &SymbolicTriple, tally: &mut Tally) {
    tally.checked += 1;
    tally.count("points", 1);
    let (a, b, c) = sigma_raw(point);
    let abc = match AdmissibleABC::new(a, b, c) {
        Ok(abc) => abc,
        Err(e) => return tally.fail(point, "admissible (a, b, c)", e),
    };
    let (x2, y, z2) = t_numerators(abc.a(), abc.b(), abc.c());
    if x2.is_odd() || z2.is_odd() {
        return tally.fail(point, "integral triple", format!("({x2}/2, {y}, {z2}/2)"));
    }
    let (x, z) = (x2 >> 1, z2 >> 1);
    if !satisfies_equation(&x, &y, &z) {
        return tally.fail(point, "x^2 + y^2 = z^2", format!("({x}, {y}, {z})"));
    }
    if sampled {
        tally.count("symbolic_points", 1);
        let direct = format!("({x}, {y}, {z})");
        let numeric = eval_f(point);
        if numeric.to_string() != direct {
            return tally.fail(point, direct, format!("eval_f gave {numeric}"));
        }
        match symbolic.eval(&point.to_vec()).map(|v| v.to_integral()) {
            Ok(Some(s)) if s == numeric => {}
            other => tally.fail(point, direct, format!("symbolic gave {other:?}")),
        }
    }
}

/// For every positive triple with `z <= zbound`, both positive inverses round-trip.
pub fn check_positive_surjectivity(zbound: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    let deadline = Deadline::new(opts.budgets.sweep_time);
    let triples = enumerate_positive_triples(zbound, opts.budgets.enumerate_bound)?;
    let limit = opts.budgets.four_square;
    let chunks: Vec<_> = triples.chunks(TRIPLE_CHUNK).collect();
    let tally = run_chunks(&chunks, opts.jobs, |chunk| {
        deadline.check()?;
        let mut tally = Tally::default();
        for t in chunk.iter() {
            tally.checked += 1;
            tally.count("triples", 1);
            if is_primitive(t.triple()) {
                tally.count("primitive", 1);
                if t.triple().x() < t.triple().y() {
                    tally.count("primitive_unordered", 1);
                }
            }
            match preimage_positive(t) {
                Ok(p) => {
                    let got = eval_positive_at(&p);
                    if &got != t {
                        tally.fail(format!("positive preimage {p}"), t, got);
                    }
                }
                Err(e) => tally.fail(t, t, e),
            }
            let sixteen = preimage_positive_16(t, limit).map_err(|e| match e {
                Error::BudgetExceeded { .. } => Some(e),
                _ => None,
            });
            match sixteen {
                Ok(p16) => {
                    let got = eval_positive_16(&p16);
                    if &got != t {
                        tally.fail(format!("16-parameter preimage {p16}"), t, got);
                    }
                }
                Err(Some(budget)) => return Err(budget),
                Err(None) => tally.fail(t, t, "16-parameter preimage failed"),
            }
        }
        Ok(tally)
    })?;
    Ok(VerificationReport::from_tally(
        Mode::PositiveSurjectivity,
        &[("zbound", zbound)],
        tally,
        deadline.start.elapsed(),
    ))
}

/// Symbolic checks on the composed triple: the defect `f^2 + g^2 - h^2`
/// vanishes, each component is integer-valued with denominators (2, 1, 2),
/// and the composition equals the factor-by-factor transcription.
pub fn check_symbolic(budgets: &Budgets) -> Result<VerificationReport> {
    let start = Instant::now();
    let composed = build_symbolic_f();
    let transcribed = transcribe_displayed_f();
    let mut tally = Tally::default();
    let names = ["f", "g", "h"];

    tally.checked += 1;
    let defect = composed.defect();
    if !defect.is_zero() {
        tally.fail("f^2 + g^2 - h^2", "0", &defect);
    }

    let expected_lcm = [2, 1, 2];
    for ((name, p), want) in names.iter().zip(composed.components()).zip(expected_lcm) {
        tally.checked += 2;
        let d = p.denominator_lcm();
        if d != BigInt::from(want) {
            tally.fail(format!("denominator lcm of {name}"), want, &d);
        }
        let residues = num_traits::pow(d, p.arity());
        tally.count("residue_points", num_traits::ToPrimitive::to_u64(&residues).unwrap_or(u64::MAX));
        if let Some(witness) = p.non_integer_witness(budgets.residue_box)? {
            tally.fail(format!("integer-valuedness of {name}"), "integer at every point", format!("{witness:?}"));
        }
    }

    for ((name, got), want) in names.iter().zip(composed.components()).zip(transcribed.components()) {
        tally.checked += 1;
        if got != want {
            tally.fail(format!("transcription of {name}"), want, got);
        }
        tally.count("terms", got.num_terms() as u64);
    }

    Ok(VerificationReport::from_tally(Mode::Symbolic, &[], tally, start.elapsed()))
}
