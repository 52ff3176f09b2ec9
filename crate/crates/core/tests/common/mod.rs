#![allow(dead_code)]

use interval_dft::{ConvexRegion, IntervalSignal, Point};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Crisp base signal: three tones plus seeded uniform noise.
pub fn demo_signal(len: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = std::f64::consts::TAU;
    (0..len)
        .map(|n| {
            let t = n as f64 / len as f64;
            10.0 * (tau * 5.0 * t).sin() + 6.0 * (tau * 21.0 * t + 0.3).cos() + 3.0 * (tau * 9.0 * t).sin()
                + rng.random_range(-2.0..2.0)
        })
        .collect()
}

/// Interval signal with random lower endpoints and widths.
pub fn random_signal(len: usize, rng: &mut ChaCha8Rng) -> IntervalSignal<f64> {
    let bounds: Vec<(f64, f64)> = (0..len)
        .map(|_| {
            let lo: f64 = rng.random_range(-10.0..10.0);
            (lo, lo + rng.random_range(0.0..4.0))
        })
        .collect();
    IntervalSignal::from_bounds(&bounds).unwrap()
}

/// Reference DFT coefficient by direct summation with `f64` trig, no integer
/// phase reduction.
pub fn reference_dft(x: &[f64], k: usize) -> Complex<f64> {
    let len = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(n, &v)| {
            let theta = -std::f64::consts::TAU * (k * n) as f64 / len;
            Complex::new(theta.cos(), theta.sin()) * v
        })
        .sum()
}

/// Every endpoint combination of the full signal at frequency `k`, computed
/// mask by mask rather than level by level.
pub fn endpoint_combinations(signal: &IntervalSignal<f64>, k: usize) -> Vec<Point<f64>> {
    let len = signal.len();
    let samples = signal.samples();
    (0u64..1 << len)
        .map(|mask| {
            let crisp: Vec<f64> = (0..len)
                .map(|i| if mask >> i & 1 == 1 { samples[i].hi() } else { samples[i].lo() })
                .collect();
            reference_dft(&crisp, k).into()
        })
        .collect()
}

fn cross(o: Point<f64>, a: Point<f64>, b: Point<f64>) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Jarvis march, quadratic time, counter-clockwise from the lexicographically
/// smallest point; collinear and near-duplicate points are skipped.
pub fn gift_wrap(points: &[Point<f64>]) -> Vec<Point<f64>> {
    let scale = points.iter().fold(0.0f64, |m, q| m.max(q.x.abs()).max(q.y.abs()));
    let eps = 1e-12 * scale;
    // Leftmost within tolerance, then lowest.
    let min_x = points.iter().map(|q| q.x).fold(f64::INFINITY, f64::min);
    let start = *points
        .iter()
        .filter(|q| q.x <= min_x + eps)
        .min_by(|a, b| a.y.total_cmp(&b.y))
        .unwrap();
    let d2 = |a: Point<f64>, b: Point<f64>| (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
    let mut out = vec![start];
    let mut cur = start;
    loop {
        let mut cand: Option<Point<f64>> = None;
        for &r in points {
            if r.distance(&cur) <= eps {
                continue;
            }
            match cand {
                None => cand = Some(r),
                Some(q) => {
                    let c = cross(cur, q, r);
                    let tol = 1e-12 * d2(q, cur).max(d2(r, cur));
                    if c < -tol || (c.abs() <= tol && d2(r, cur) > d2(q, cur)) {
                        cand = Some(r);
                    }
                }
            }
        }
        let Some(next) = cand else { break };
        if next.distance(&start) <= eps {
            break;
        }
        out.push(next);
        cur = next;
        assert!(out.len() <= points.len(), "gift wrap did not terminate");
    }
    out
}

/// Symmetric nearest-vertex distance between two vertex lists.
pub fn vertex_mismatch(a: &[Point<f64>], b: &[Point<f64>]) -> f64 {
    let one_way = |from: &[Point<f64>], to: &[Point<f64>]| {
        from.iter()
            .map(|p| to.iter().map(|q| p.distance(q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

pub fn region_scale(r: &ConvexRegion<f64>) -> f64 {
    1.0 + r.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max)
}
