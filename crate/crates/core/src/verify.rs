//! Cross-checks between the propagation methods.
//!
//! Every check records its worst discrepancy, pass or fail, together with the
//! frequency, sample index or Monte-Carlo draw where it occurred.

use std::fmt;
use std::ops::RangeInclusive;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::amplitude::{spectrum_bounds, Method};
use crate::error::Result;
use crate::geometry::{ConvexRegion, Point, RegionKind};
use crate::interval::IntervalSignal;
use crate::scalar::Scalar;
use crate::transforms::{
    bounding_box, brute_force, selective, selective_final, selective_prefix, twiddle_unchecked, FrequencyIndex,
};

/// Relative tolerance shared by the checks below.
pub const CHECK_TOLERANCE: f64 = 1e-9;

/// Where a discrepancy was observed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Locus {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub sample: Option<usize>,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(s) = self.sample {
            parts.push(format!("sample={s}"));
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Worst observed discrepancy, relative to the scale named by the check.
    pub discrepancy: f64,
    pub locus: Locus,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(seed: Option<u64>) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(check);
        self.checks
            .sort_by(|a, b| a.name.cmp(&b.name).then(a.locus.k.cmp(&b.locus.k)));
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.seed {
            Some(seed) => writeln!(f, "verification report (seed {seed})")?,
            None => writeln!(f, "verification report")?,
        }
        for c in &self.checks {
            writeln!(
                f,
                "{} {:<24} discrepancy {:>12.3e}  at {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.discrepancy,
                c.locus
            )?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

fn tol<T: Scalar>() -> T {
    T::lit(CHECK_TOLERANCE)
}

/// Largest distance from a vertex of one region to the nearest vertex of the
/// other, in both directions.
fn vertex_mismatch<T: Scalar>(a: &ConvexRegion<T>, b: &ConvexRegion<T>) -> T {
    let one_way = |from: &ConvexRegion<T>, to: &ConvexRegion<T>| {
        from.vertices()
            .iter()
            .map(|p| to.vertices().iter().map(|q| p.distance(q)).fold(T::infinity(), T::min))
            .fold(T::zero(), T::max)
    };
    one_way(a, b).max(one_way(b, a))
}

/// Compares the selective region with the hull of the full brute-force cloud.
///
/// The discrepancy is the vertex mismatch divided by `1 + |largest vertex|`;
/// the check also requires equal vertex counts.
pub fn verify_selective_vs_brute<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<Check> {
    verify_selective_vs_brute_prefix(signal, freq, signal.len())
}

/// As [`verify_selective_vs_brute`], over the first `limit` samples of a
/// possibly longer signal.
pub fn verify_selective_vs_brute_prefix<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
    limit: usize,
) -> Result<Check> {
    let cloud = brute_force(signal, freq, limit)?;
    let oracle = cloud.hull();
    let region = selective_prefix(signal, freq, limit)?;
    let scale = T::one() + crate::geometry::max_distance_to_origin(&oracle);
    let mismatch = vertex_mismatch(&region, &oracle) / scale;
    Ok(Check {
        name: "selective_vs_brute".into(),
        passed: region.len() == oracle.len() && mismatch < tol(),
        discrepancy: mismatch.to_f64_lossy(),
        locus: Locus {
            k: Some(freq.k()),
            ..Locus::default()
        },
    })
}

/// Signed distance by which `p` falls outside the box (negative inside).
fn box_excess<T: Scalar>(b: &crate::interval::ComplexInterval<T>, p: Point<T>) -> T {
    let (re, im) = (b.re(), b.im());
    (re.lo() - p.x)
        .max(p.x - re.hi())
        .max(im.lo() - p.y)
        .max(p.y - im.hi())
}

/// Checks that every selective region lies in the matching box and that the
/// last box is touched on all four sides by hull vertices.
///
/// Discrepancies are relative to `1 + box diagonal`.
pub fn verify_hull_in_box<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<Check> {
    let hulls = selective(signal, freq)?;
    let boxes = bounding_box(signal, freq)?;
    let mut worst = T::neg_infinity();
    let mut locus = Locus {
        k: Some(freq.k()),
        ..Locus::default()
    };
    for (n, (region, b)) in hulls.regions().iter().zip(boxes.boxes()).enumerate() {
        let scale = T::one() + b.diagonal();
        for v in region.vertices() {
            let excess = box_excess(b, *v) / scale;
            if excess > worst {
                worst = excess;
                locus.n = Some(n);
            }
        }
    }
    // Tightness: each side of the final box is reached by some vertex.
    let last_box = boxes.last();
    let last = hulls.last();
    let scale = T::one() + last_box.diagonal();
    let vs = last.vertices();
    let gap = |f: &dyn Fn(&Point<T>) -> T| vs.iter().map(f).fold(T::infinity(), T::min);
    let (re, im) = (last_box.re(), last_box.im());
    let touch = [
        gap(&|v| (v.x - re.lo()).abs()),
        gap(&|v| (re.hi() - v.x).abs()),
        gap(&|v| (v.y - im.lo()).abs()),
        gap(&|v| (im.hi() - v.y).abs()),
    ]
    .into_iter()
    .fold(T::zero(), T::max)
        / scale;
    if touch > worst {
        worst = touch;
        locus.n = Some(signal.len() - 1);
    }
    let passed = worst <= tol();
    Ok(Check {
        name: "hull_in_box".into(),
        passed,
        // Adding zero turns a -0 excess into 0.
        discrepancy: (worst + T::zero()).to_f64_lossy(),
        locus,
    })
}

/// Draws crisp signals uniformly inside the interval signal and checks that
/// their amplitudes stay within both the selective and the box bounds.
///
/// A violation is measured as `max(lo - |z|, |z| - hi) / (1 + hi)`; the check
/// passes while it stays at or below the tolerance. Deterministic in `seed`.
pub fn verify_mc_enclosure<T: Scalar>(
    signal: &IntervalSignal<T>,
    k_range: RangeInclusive<usize>,
    samples: usize,
    seed: u64,
) -> Result<Check> {
    let len = signal.len();
    let selective = spectrum_bounds(signal, Method::Selective, k_range.clone())?;
    let boxed = spectrum_bounds(signal, Method::Box, k_range)?;
    let freqs: Vec<FrequencyIndex> = selective
        .entries
        .iter()
        .map(|e| FrequencyIndex::new(e.k, len))
        .collect::<Result<_>>()?;
    let twiddles: Vec<Vec<Complex<T>>> = freqs
        .iter()
        .map(|&f| (0..len).map(|n| twiddle_unchecked(f, n)).collect())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = vec![T::zero(); len];
    let mut worst = T::neg_infinity();
    let mut locus = Locus::default();
    for sample in 0..samples {
        for (x, iv) in draw.iter_mut().zip(signal.samples()) {
            let u = T::lit(rng.random::<f64>());
            *x = (iv.lo() + u * iv.width()).min(iv.hi());
        }
        for (i, tw) in twiddles.iter().enumerate() {
            let z = draw
                .iter()
                .zip(tw)
                .fold(Complex::new(T::zero(), T::zero()), |acc, (&x, &w)| acc + w * x);
            let amp = z.norm();
            for bounds in [&selective.entries[i].bounds, &boxed.entries[i].bounds] {
                let v = (bounds.lo - amp).max(amp - bounds.hi) / (T::one() + bounds.hi);
                if v > worst {
                    worst = v;
                    locus = Locus {
                        k: Some(freqs[i].k()),
                        n: None,
                        sample: Some(sample),
                    };
                }
            }
        }
    }
    Ok(Check {
        name: "mc_enclosure".into(),
        passed: worst <= tol(),
        discrepancy: worst.to_f64_lossy(),
        locus,
    })
}

/// Final-region vertex count against the zonogon bound `2 N`.
pub fn verify_zonogon_bound<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<Check> {
    let region = selective_final(signal, freq)?;
    let bound = 2 * signal.len();
    let count = match region.kind() {
        RegionKind::Polygon => region.len(),
        _ => region.len().min(2),
    };
    Ok(Check {
        name: "zonogon_bound".into(),
        passed: count <= bound,
        discrepancy: count as f64 / bound as f64,
        locus: Locus {
            k: Some(freq.k()),
            ..Locus::default()
        },
    })
}
