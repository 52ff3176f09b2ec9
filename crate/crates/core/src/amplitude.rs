//! Amplitude bounds per frequency and the assembled bounded spectrum.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    max_distance_to_origin, min_distance_to_origin, min_vertex_distance_to_origin, origin_in_region,
    ConvexRegion,
};
use crate::interval::{ComplexInterval, IntervalSignal};
use crate::scalar::Scalar;
use crate::transforms::{bounding_box_final, brute_force, selective_final, FrequencyIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Selective,
    Box,
    Brute,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Selective => "selective",
            Method::Box => "box",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "selective" => Ok(Method::Selective),
            "box" => Ok(Method::Box),
            "brute" => Ok(Method::Brute),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// How the lower amplitude bound is taken from a convex region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimumRule {
    /// Distance from the origin to the region, edges included.
    #[default]
    Exact,
    /// Smallest vertex magnitude, kept for compatibility with earlier
    /// results. Overstates the lower bound when the nearest point of the
    /// region lies inside an edge.
    VertexArgmin,
}

/// Bounds `[lo, hi]` on `|z_k|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmplitudeBounds<T> {
    pub lo: T,
    pub hi: T,
    pub method: Method,
    pub origin_enclosed: bool,
}

impl<T: Scalar> AmplitudeBounds<T> {
    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    /// True when `amplitude` lies in `[lo - slack, hi + slack]`.
    pub fn contains(&self, amplitude: T, slack: T) -> bool {
        self.lo - slack <= amplitude && amplitude <= self.hi + slack
    }
}

fn region_bounds<T: Scalar>(region: &ConvexRegion<T>, rule: MinimumRule, method: Method) -> AmplitudeBounds<T> {
    let origin_enclosed = origin_in_region(region);
    let lo = match rule {
        MinimumRule::Exact => min_distance_to_origin(region),
        MinimumRule::VertexArgmin => min_vertex_distance_to_origin(region),
    };
    AmplitudeBounds {
        lo,
        hi: max_distance_to_origin(region),
        method,
        origin_enclosed,
    }
}

/// Best-possible bounds from the selective method's region.
pub fn amplitude_bounds_selective<T: Scalar>(region: &ConvexRegion<T>, rule: MinimumRule) -> AmplitudeBounds<T> {
    region_bounds(region, rule, Method::Selective)
}

/// Rigorous bounds from an enclosing rectangle, evaluating
/// `sqrt(re^2 + im^2)` with tight interval squares.
///
/// The lower bound is the distance from the origin to the rectangle and the
/// upper bound the farthest corner.
pub fn amplitude_bounds_box<T: Scalar>(b: &ComplexInterval<T>) -> AmplitudeBounds<T> {
    let (re, im) = (b.re(), b.im());
    let amplitude = (re.square() + im.square())
        .sqrt()
        .expect("sum of squares is non-negative");
    AmplitudeBounds {
        lo: amplitude.lo(),
        hi: amplitude.hi(),
        method: Method::Box,
        origin_enclosed: re.contains(T::zero()) && im.contains(T::zero()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry<T> {
    pub k: usize,
    pub bounds: AmplitudeBounds<T>,
}

/// Amplitude bounds over a range of frequencies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundedSpectrum<T> {
    pub len: usize,
    pub method: Method,
    pub precision: Option<T>,
    pub entries: Vec<SpectrumEntry<T>>,
}

impl<T: Scalar> BoundedSpectrum<T> {
    pub fn get(&self, k: usize) -> Option<&AmplitudeBounds<T>> {
        self.entries.iter().find(|e| e.k == k).map(|e| &e.bounds)
    }
}

/// Bounds at a single frequency.
pub fn frequency_bounds<T: Scalar>(
    signal: &IntervalSignal<T>,
    method: Method,
    freq: FrequencyIndex,
    rule: MinimumRule,
) -> Result<AmplitudeBounds<T>> {
    match method {
        Method::Box => Ok(amplitude_bounds_box(&bounding_box_final(signal, freq)?)),
        Method::Selective => Ok(amplitude_bounds_selective(&selective_final(signal, freq)?, rule)),
        Method::Brute => {
            let cloud = brute_force(signal, freq, signal.len())?;
            Ok(region_bounds(&cloud.hull(), rule, Method::Brute))
        }
    }
}

/// Bounds for every `k` in `k_range` with the exact minimum rule.
pub fn spectrum_bounds<T: Scalar>(
    signal: &IntervalSignal<T>,
    method: Method,
    k_range: RangeInclusive<usize>,
) -> Result<BoundedSpectrum<T>> {
    spectrum_bounds_with(signal, method, k_range, MinimumRule::Exact)
}

/// Bounds for every `k` in `k_range`. Frequencies are evaluated in parallel
/// and assembled in increasing `k`.
pub fn spectrum_bounds_with<T: Scalar>(
    signal: &IntervalSignal<T>,
    method: Method,
    k_range: RangeInclusive<usize>,
    rule: MinimumRule,
) -> Result<BoundedSpectrum<T>> {
    let len = signal.len();
    let freqs = k_range
        .map(|k| FrequencyIndex::new(k, len))
        .collect::<Result<Vec<_>>>()?;
    if method == Method::Brute && len > crate::error::BRUTE_FORCE_CAP {
        return Err(Error::ResourceCap {
            requested: len,
            cap: crate::error::BRUTE_FORCE_CAP,
        });
    }
    let entries = freqs
        .par_iter()
        .map(|&f| {
            frequency_bounds(signal, method, f, rule).map(|bounds| SpectrumEntry { k: f.k(), bounds })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundedSpectrum {
        len,
        method,
        precision: signal.precision(),
        entries,
    })
}

/// One frequency of a box-versus-selective comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRow<T> {
    pub k: usize,
    pub box_lo: T,
    pub box_hi: T,
    pub selective_lo: T,
    pub selective_hi: T,
    pub box_width: T,
    pub hull_width: T,
    pub nested: bool,
}

/// Pairs two spectra by frequency. `nested` holds when the selective bounds
/// sit inside the box bounds within `slack * (1 + box_hi)`.
pub fn compare_spectra<T: Scalar>(
    selective: &BoundedSpectrum<T>,
    boxed: &BoundedSpectrum<T>,
    slack: T,
) -> Vec<ComparisonRow<T>> {
    selective
        .entries
        .iter()
        .filter_map(|s| {
            let b = boxed.get(s.k)?;
            let eps = slack * (T::one() + b.hi);
            Some(ComparisonRow {
                k: s.k,
                box_lo: b.lo,
                box_hi: b.hi,
                selective_lo: s.bounds.lo,
                selective_hi: s.bounds.hi,
                box_width: b.width(),
                hull_width: s.bounds.width(),
                nested: s.bounds.lo >= b.lo - eps && s.bounds.hi <= b.hi + eps,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{convex_hull, Point};
    use crate::interval::Interval;

    fn iv(lo: f64, hi: f64) -> Interval<f64> {
        Interval::new(lo, hi).unwrap()
    }

    fn rect(re: (f64, f64), im: (f64, f64)) -> ComplexInterval<f64> {
        ComplexInterval::new(iv(re.0, re.1), iv(im.0, im.1))
    }

    /// Minimum and maximum of |z| over a dense grid of the rectangle boundary.
    fn sampled_rect_extremes(b: &ComplexInterval<f64>) -> (f64, f64) {
        let (mut mn, mut mx) = (f64::INFINITY, 0.0f64);
        let steps = 100_000;
        let c = b.corners();
        for i in 0..4 {
            let (a, z) = (c[i], c[(i + 1) % 4]);
            for s in 0..=steps {
                let t = s as f64 / steps as f64;
                let p = a + (z - a) * t;
                mn = mn.min(p.norm());
                mx = mx.max(p.norm());
            }
        }
        (mn, mx)
    }

    #[test]
    fn selective_rectangle() {
        let b = rect((0.0, 2.0), (-2.0, -1.0));
        let region = ConvexRegion::from_box(&b);
        let a = amplitude_bounds_selective(&region, MinimumRule::Exact);
        let (mn, mx) = sampled_rect_extremes(&b);
        assert!((a.lo - mn).abs() < 1e-9 && (a.lo - 1.0).abs() < 1e-15);
        assert!((a.hi - mx).abs() < 1e-9 && (a.hi - 8f64.sqrt()).abs() < 1e-15);
        assert!(!a.origin_enclosed);
    }

    #[test]
    fn selective_enclosed_and_point() {
        let sq = ConvexRegion::from_box(&rect((-1.0, 1.0), (-1.0, 1.0)));
        let a = amplitude_bounds_selective(&sq, MinimumRule::Exact);
        assert_eq!(a.lo, 0.0);
        assert!(a.origin_enclosed);
        assert!((a.hi - 2f64.sqrt()).abs() < 1e-15);

        let pt = ConvexRegion::point(Point::new(3.0, 4.0));
        let a = amplitude_bounds_selective(&pt, MinimumRule::Exact);
        assert_eq!((a.lo, a.hi), (5.0, 5.0));
    }

    #[test]
    fn vertex_argmin_overstates_minimum() {
        let sq = convex_hull(&[
            Point::new(1.0f64, -1.0),
            Point::new(3.0, -1.0),
            Point::new(3.0, 1.0),
            Point::new(1.0, 1.0),
        ])
        .unwrap();
        let exact = amplitude_bounds_selective(&sq, MinimumRule::Exact);
        let compat = amplitude_bounds_selective(&sq, MinimumRule::VertexArgmin);
        assert!((exact.lo - 1.0).abs() < 1e-15);
        assert!((compat.lo - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(exact.hi, compat.hi);
    }

    #[test]
    fn box_examples() {
        let b = rect((0.0, 2.0), (-2.0, -1.0));
        let a = amplitude_bounds_box(&b);
        // Oracle: clamp the origin into the box; farthest of the four corners.
        let clamp = |lo: f64, hi: f64| 0.0f64.max(lo).min(hi);
        let nearest = clamp(b.re().lo(), b.re().hi()).hypot(clamp(b.im().lo(), b.im().hi()));
        let corners_max = b.corners().iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!((a.lo - nearest).abs() < 1e-15 && (a.lo - 1.0).abs() < 1e-15);
        assert!((a.hi - corners_max).abs() < 1e-15);

        let a = amplitude_bounds_box(&rect((-1.0, 1.0), (-1.0, 1.0)));
        assert_eq!(a.lo, 0.0);
        assert!(a.origin_enclosed);
        assert!((a.hi - 2f64.sqrt()).abs() < 1e-15);

        let a = amplitude_bounds_box(&rect((3.0, 3.0), (4.0, 4.0)));
        assert_eq!((a.lo, a.hi), (5.0, 5.0));
    }

    #[test]
    fn box_bounds_match_sampling() {
        for b in [
            rect((1.0, 3.0), (-1.0, 1.0)),
            rect((-4.0, -0.5), (2.0, 2.5)),
            rect((-3.0, 2.0), (0.25, 1.0)),
        ] {
            let a = amplitude_bounds_box(&b);
            let (mn, mx) = sampled_rect_extremes(&b);
            assert!((a.lo - mn).abs() < 1e-9, "{b}");
            assert!((a.hi - mx).abs() < 1e-9, "{b}");
        }
    }

    #[test]
    fn spectrum_rejects_bad_ranges() {
        let s = IntervalSignal::from_crisp(&[1.0, 2.0, 3.0, 4.0], 0.1).unwrap();
        assert!(matches!(
            spectrum_bounds(&s, Method::Box, 0..=3),
            Err(Error::FrequencyOutOfRange { .. })
        ));
        let long = IntervalSignal::from_crisp(&vec![0.0; 32], 0.1).unwrap();
        assert!(matches!(
            spectrum_bounds(&long, Method::Brute, 1..=2),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn spectrum_is_k_ordered() {
        let s = IntervalSignal::from_crisp(&[1.0f64, -2.0, 0.5, 3.0, 0.0, -1.0, 2.0, 1.0], 0.5).unwrap();
        let spec = spectrum_bounds(&s, Method::Selective, 0..=4).unwrap();
        let ks: Vec<usize> = spec.entries.iter().map(|e| e.k).collect();
        assert_eq!(ks, vec![0, 1, 2, 3, 4]);
        assert_eq!(spec.precision, Some(0.5));
        let brute = spectrum_bounds(&s, Method::Brute, 0..=4).unwrap();
        for (a, b) in spec.entries.iter().zip(&brute.entries) {
            assert!((a.bounds.lo - b.bounds.lo).abs() < 1e-9);
            assert!((a.bounds.hi - b.bounds.hi).abs() < 1e-9);
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Selective, Method::Box, Method::Brute] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("hull".parse::<Method>().is_err());
    }
}
