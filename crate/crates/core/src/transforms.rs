//! The crisp DFT and the three ways of propagating an interval signal
//! through one Fourier coefficient.
//!
//! * [`brute_force`] enumerates every endpoint combination. Exponential; an
//!   oracle for short signals only.
//! * [`selective`] adds one segment per sample to the current convex region
//!   and keeps only the hull vertices. The result is the exact reachable set.
//! * [`bounding_box`] adds one complex interval per sample. Linear time; the
//!   tightest axis-aligned rectangle around the reachable set.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result, BRUTE_FORCE_CAP};
use crate::geometry::{convex_hull, ConvexRegion, Point};
use crate::interval::{complex_scale_interval, ComplexInterval, Interval, IntervalSignal};
use crate::scalar::Scalar;

/// Frequency `k` of a length-`len` transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FrequencyIndex {
    k: usize,
    len: usize,
}

impl FrequencyIndex {
    /// Frequencies of the non-redundant half, `0..=len / 2`.
    pub fn new(k: usize, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySignal);
        }
        if k > len / 2 {
            return Err(Error::FrequencyOutOfRange { k, len, max: len / 2 });
        }
        Ok(Self { k, len })
    }

    /// Any bin `0..len`, including the upper half that mirrors `len - k`.
    pub fn any_bin(k: usize, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySignal);
        }
        if k >= len {
            return Err(Error::FrequencyOutOfRange { k, len, max: len - 1 });
        }
        Ok(Self { k, len })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The alias bin `len - k` (or 0 for `k = 0`).
    pub fn mirror(&self) -> Self {
        Self {
            k: (self.len - self.k) % self.len,
            len: self.len,
        }
    }

    /// `(k n) mod len`, in exact integer arithmetic.
    fn phase_index(&self, n: usize) -> usize {
        ((self.k as u128 * n as u128) % self.len as u128) as usize
    }

    /// Angle `2 pi ((k n) mod len) / len` in radians.
    pub fn angle<T: Scalar>(&self, n: usize) -> T {
        T::lit(2.0) * T::PI() * T::from_usize_lossy(self.phase_index(n)) / T::from_usize_lossy(self.len)
    }
}

fn check_length(freq: FrequencyIndex, len: usize) -> Result<()> {
    if freq.len() != len {
        return Err(Error::LengthMismatch {
            expected: freq.len(),
            actual: len,
        });
    }
    Ok(())
}

/// `e^{-i 2 pi k n / len}` for a sample index known to be in range.
pub(crate) fn twiddle_unchecked<T: Scalar>(freq: FrequencyIndex, n: usize) -> Complex<T> {
    let r = freq.phase_index(n);
    let len = freq.len();
    // Quarter turns are returned exactly so that k = 0 and the Nyquist bin
    // stay on the real axis.
    if (4 * r as u128).is_multiple_of(len as u128) {
        let (one, zero) = (T::one(), T::zero());
        return match (4 * r as u128) / len as u128 {
            0 => Complex::new(one, zero),
            1 => Complex::new(zero, -one),
            2 => Complex::new(-one, zero),
            _ => Complex::new(zero, one),
        };
    }
    let (sin, cos) = freq.angle::<T>(n).sin_cos();
    Complex::new(cos, -sin)
}

/// The twiddle factor `e^{-i 2 pi k n / N}`.
pub fn twiddle<T: Scalar>(freq: FrequencyIndex, n: usize) -> Result<Complex<T>> {
    if n >= freq.len() {
        return Err(Error::SampleOutOfRange { n, len: freq.len() });
    }
    Ok(twiddle_unchecked(freq, n))
}

/// Crisp Fourier coefficient at a single frequency.
pub fn dft_at<T: Scalar>(signal: &[T], freq: FrequencyIndex) -> Result<Complex<T>> {
    check_length(freq, signal.len())?;
    Ok(signal
        .iter()
        .enumerate()
        .fold(Complex::new(T::zero(), T::zero()), |acc, (n, &x)| {
            acc + twiddle_unchecked(freq, n) * x
        }))
}

/// Crisp DFT by direct summation for `k = 0..=k_max`.
pub fn dft_crisp<T: Scalar>(signal: &[T], k_max: usize) -> Result<Vec<Complex<T>>> {
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    (0..=k_max)
        .map(|k| dft_at(signal, FrequencyIndex::any_bin(k, signal.len())?))
        .collect()
}

/// Partial sums over every endpoint choice, one level per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EndpointCloud<T> {
    levels: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> EndpointCloud<T> {
    /// Level `n` holds the `2^(n+1)` partial sums through sample `n`.
    pub fn levels(&self) -> &[Vec<Complex<T>>] {
        &self.levels
    }

    pub fn last(&self) -> &[Complex<T>] {
        self.levels.last().expect("at least one level")
    }

    /// Convex hull of the last level.
    pub fn hull(&self) -> ConvexRegion<T> {
        let pts: Vec<Point<T>> = self.last().iter().map(|&z| z.into()).collect();
        convex_hull(&pts).expect("finite partial sums")
    }

    /// Componentwise extremes of the last level.
    pub fn bounds(&self) -> ComplexInterval<T> {
        let mut re = (T::infinity(), T::neg_infinity());
        let mut im = (T::infinity(), T::neg_infinity());
        for z in self.last() {
            re = (re.0.min(z.re), re.1.max(z.re));
            im = (im.0.min(z.im), im.1.max(z.im));
        }
        ComplexInterval::new(
            Interval::new(re.0, re.1).expect("finite partial sums"),
            Interval::new(im.0, im.1).expect("finite partial sums"),
        )
    }
}

/// Enumerates all endpoint combinations of the first `limit` samples.
///
/// `limit` is capped at [`BRUTE_FORCE_CAP`]; the last level holds `2^limit`
/// points.
pub fn brute_force<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
    limit: usize,
) -> Result<EndpointCloud<T>> {
    if limit > BRUTE_FORCE_CAP {
        return Err(Error::ResourceCap {
            requested: limit,
            cap: BRUTE_FORCE_CAP,
        });
    }
    check_length(freq, signal.len())?;
    if limit == 0 || limit > signal.len() {
        return Err(Error::InvalidLimit {
            limit,
            len: signal.len(),
        });
    }
    let samples = signal.samples();
    let mut levels: Vec<Vec<Complex<T>>> = Vec::with_capacity(limit);
    let first = complex_scale_interval(twiddle_unchecked(freq, 0), samples[0]);
    levels.push(vec![first.start, first.end]);
    for (n, &x) in samples.iter().enumerate().take(limit).skip(1) {
        let seg = complex_scale_interval(twiddle_unchecked(freq, n), x);
        let prev = levels.last().expect("non-empty");
        let mut next = Vec::with_capacity(prev.len() * 2);
        next.extend(prev.iter().map(|&p| seg.start + p));
        next.extend(prev.iter().map(|&p| seg.end + p));
        levels.push(next);
    }
    Ok(EndpointCloud { levels })
}

/// Per-sample convex regions of the selective method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullTrace<T> {
    regions: Vec<ConvexRegion<T>>,
}

impl<T: Scalar> HullTrace<T> {
    pub fn regions(&self) -> &[ConvexRegion<T>] {
        &self.regions
    }

    pub fn last(&self) -> &ConvexRegion<T> {
        self.regions.last().expect("at least one region")
    }

    pub fn into_last(mut self) -> ConvexRegion<T> {
        self.regions.pop().expect("at least one region")
    }
}

fn propagate_hull<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
    limit: usize,
    mut visit: impl FnMut(&ConvexRegion<T>),
) -> Result<ConvexRegion<T>> {
    check_length(freq, signal.len())?;
    if limit == 0 || limit > signal.len() {
        return Err(Error::InvalidLimit {
            limit,
            len: signal.len(),
        });
    }
    let samples = &signal.samples()[..limit];
    let first = complex_scale_interval(twiddle_unchecked(freq, 0), samples[0]);
    let mut region = convex_hull(&[first.start.into(), first.end.into()])?;
    let mut points: Vec<Point<T>> = Vec::new();
    for (n, &x) in samples.iter().enumerate().skip(1) {
        visit(&region);
        let seg = complex_scale_interval(twiddle_unchecked(freq, n), x);
        let (a, b): (Point<T>, Point<T>) = (seg.start.into(), seg.end.into());
        points.clear();
        points.extend(region.vertices().iter().map(|v| Point::new(a.x + v.x, a.y + v.y)));
        points.extend(region.vertices().iter().map(|v| Point::new(b.x + v.x, b.y + v.y)));
        region = convex_hull(&points)?;
    }
    Ok(region)
}

/// Selective method: Minkowski-adds each sample's segment to the running
/// region and re-hulls. Returns the region after every sample.
pub fn selective<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<HullTrace<T>> {
    let mut regions = Vec::with_capacity(signal.len());
    let last = propagate_hull(signal, freq, signal.len(), |r| regions.push(r.clone()))?;
    regions.push(last);
    Ok(HullTrace { regions })
}

/// Final region of the selective method without storing the trace.
pub fn selective_final<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<ConvexRegion<T>> {
    propagate_hull(signal, freq, signal.len(), |_| {})
}

/// Selective region after the first `limit` samples only.
pub fn selective_prefix<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
    limit: usize,
) -> Result<ConvexRegion<T>> {
    propagate_hull(signal, freq, limit, |_| {})
}

/// Per-sample enclosing rectangles of the bounding-box method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxTrace<T> {
    boxes: Vec<ComplexInterval<T>>,
}

impl<T: Scalar> BoxTrace<T> {
    pub fn boxes(&self) -> &[ComplexInterval<T>] {
        &self.boxes
    }

    pub fn last(&self) -> ComplexInterval<T> {
        *self.boxes.last().expect("at least one box")
    }
}

fn propagate_box<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
    mut visit: impl FnMut(ComplexInterval<T>),
) -> Result<ComplexInterval<T>> {
    check_length(freq, signal.len())?;
    let mut samples = signal.samples().iter().enumerate();
    let (_, &x0) = samples.next().expect("non-empty signal");
    let mut acc = complex_scale_interval(twiddle_unchecked(freq, 0), x0).bounds;
    for (n, &x) in samples {
        visit(acc);
        acc = acc + complex_scale_interval(twiddle_unchecked(freq, n), x).bounds;
    }
    Ok(acc)
}

/// Bounding-box method: complex interval addition of each scaled sample.
pub fn bounding_box<T: Scalar>(signal: &IntervalSignal<T>, freq: FrequencyIndex) -> Result<BoxTrace<T>> {
    let mut boxes = Vec::with_capacity(signal.len());
    let last = propagate_box(signal, freq, |b| boxes.push(b))?;
    boxes.push(last);
    Ok(BoxTrace { boxes })
}

/// Final rectangle of the bounding-box method, O(N), no trace.
pub fn bounding_box_final<T: Scalar>(
    signal: &IntervalSignal<T>,
    freq: FrequencyIndex,
) -> Result<ComplexInterval<T>> {
    propagate_box(signal, freq, |_| {})
}

/// A coefficient split into its crisp part and a zero-centred uncertainty set.
#[derive(Debug, Clone, PartialEq)]
pub struct CentredForm<T, S> {
    pub crisp: Complex<T>,
    pub uncertainty: S,
}

fn unit_signal<T: Scalar>(len: usize) -> Result<IntervalSignal<T>> {
    IntervalSignal::new(vec![Interval::unit(); len])
}

/// Reachable set of `sum_n [-1, 1] e^{-i 2 pi k n / N}`; depends only on
/// `(k, N)` and scales linearly with the precision.
pub fn unit_uncertainty_region<T: Scalar>(freq: FrequencyIndex) -> Result<ConvexRegion<T>> {
    selective_final(&unit_signal(freq.len())?, freq)
}

/// Enclosing rectangle of the unit uncertainty set.
pub fn unit_uncertainty_box<T: Scalar>(freq: FrequencyIndex) -> Result<ComplexInterval<T>> {
    bounding_box_final(&unit_signal(freq.len())?, freq)
}

fn check_precision<T: Scalar>(precision: T) -> Result<()> {
    if !precision.is_finite() || precision < T::zero() {
        return Err(Error::InvalidPrecision(precision.to_f64_lossy()));
    }
    Ok(())
}

/// Centred form with the exact (hull) uncertainty set.
pub fn centred_form_region<T: Scalar>(
    crisp: &[T],
    precision: T,
    freq: FrequencyIndex,
) -> Result<CentredForm<T, ConvexRegion<T>>> {
    check_precision(precision)?;
    Ok(CentredForm {
        crisp: dft_at(crisp, freq)?,
        uncertainty: unit_uncertainty_region(freq)?.scale(precision),
    })
}

/// Centred form with the rectangular uncertainty set.
pub fn centred_form_box<T: Scalar>(
    crisp: &[T],
    precision: T,
    freq: FrequencyIndex,
) -> Result<CentredForm<T, ComplexInterval<T>>> {
    check_precision(precision)?;
    let unit = unit_uncertainty_box(freq)?;
    Ok(CentredForm {
        crisp: dft_at(crisp, freq)?,
        uncertainty: ComplexInterval::new(unit.re().scale(precision), unit.im().scale(precision)),
    })
}

impl<T: Scalar> CentredForm<T, ConvexRegion<T>> {
    /// The crisp coefficient plus the uncertainty set.
    pub fn combined(&self) -> ConvexRegion<T> {
        self.uncertainty.translate(self.crisp.into())
    }
}

impl<T: Scalar> CentredForm<T, ComplexInterval<T>> {
    pub fn combined(&self) -> ComplexInterval<T> {
        let c = ComplexInterval::point(self.crisp).expect("finite coefficient");
        c + self.uncertainty
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RegionKind;

    fn sig(bounds: &[(f64, f64)]) -> IntervalSignal<f64> {
        IntervalSignal::from_bounds(bounds).unwrap()
    }

    fn freq(k: usize, len: usize) -> FrequencyIndex {
        FrequencyIndex::new(k, len).unwrap()
    }

    const RECT_CASE: [(f64, f64); 4] = [(0.0, 1.0), (1.0, 2.0), (-1.0, 0.0), (0.0, 0.0)];

    #[test]
    fn frequency_range_is_checked() {
        assert!(FrequencyIndex::new(4, 8).is_ok());
        assert!(matches!(
            FrequencyIndex::new(5, 8),
            Err(Error::FrequencyOutOfRange { max: 4, .. })
        ));
        assert!(FrequencyIndex::any_bin(7, 8).is_ok());
        assert!(FrequencyIndex::any_bin(8, 8).is_err());
        assert_eq!(freq(3, 8).mirror().k(), 5);
        assert_eq!(freq(0, 8).mirror().k(), 0);
    }

    #[test]
    fn twiddle_values() {
        for n in 0..5 {
            assert_eq!(twiddle::<f64>(freq(0, 5), n).unwrap(), Complex::new(1.0, 0.0));
        }
        let w = twiddle::<f64>(freq(1, 4), 1).unwrap();
        assert!((w - Complex::new(0.0, -1.0)).norm() < 1e-15);
        // k = 9 aliases to bin 1 on eight samples: 9 * 7 mod 8 = 1 * 7 mod 8 = 7.
        assert_eq!(9 * 7 % 8, 7);
        let w = twiddle::<f64>(FrequencyIndex::any_bin(1, 8).unwrap(), 7).unwrap();
        let theta = 7.0 * std::f64::consts::PI / 4.0;
        assert!((w - Complex::new(theta.cos(), -theta.sin())).norm() < 1e-15);
        assert!(twiddle::<f64>(freq(1, 4), 4).is_err());
    }

    #[test]
    fn twiddle_reduces_large_products() {
        let len = 1_000_003;
        let f = FrequencyIndex::any_bin(999_999, len).unwrap();
        let n = 999_998;
        let r = (999_999u64 * 999_998) % len as u64;
        let theta = 2.0 * std::f64::consts::PI * r as f64 / len as f64;
        let w = twiddle::<f64>(f, n).unwrap();
        assert!((w - Complex::new(theta.cos(), -theta.sin())).norm() < 1e-15);
    }

    #[test]
    fn crisp_dft_examples() {
        let z = dft_crisp(&[1.0, 0.0, 0.0, 0.0], 1).unwrap();
        assert_eq!(z, vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)]);
        let z = dft_crisp(&[1.0, 1.0, 1.0, 1.0], 1).unwrap();
        assert_eq!(z[0], Complex::new(4.0, 0.0));
        assert!(z[1].norm() < 1e-15);
        // Hand evaluation: 0 + 1(-i) + 0 + (-1)(i) = -2i.
        let z = dft_crisp(&[0.0, 1.0, 0.0, -1.0], 1).unwrap();
        assert!((z[1] - Complex::new(0.0, -2.0)).norm() < 1e-15);
        assert!(dft_crisp::<f64>(&[], 0).is_err());
    }

    #[test]
    fn brute_force_levels() {
        let s = IntervalSignal::crisp(&[1.0, -2.0, 0.5]).unwrap();
        let cloud = brute_force(&s, freq(1, 3), 3).unwrap();
        let crisp = [1.0, -2.0, 0.5];
        for (n, level) in cloud.levels().iter().enumerate() {
            assert_eq!(level.len(), 1 << (n + 1));
            let partial = (0..=n).fold(Complex::new(0.0, 0.0), |acc, m| {
                acc + twiddle_unchecked::<f64>(freq(1, 3), m) * crisp[m]
            });
            for z in level {
                assert!((z - partial).norm() < 1e-12);
            }
        }

        let cloud = brute_force(&sig(&[(0.0, 1.0), (0.0, 1.0)]), freq(0, 2), 2).unwrap();
        let mut re: Vec<f64> = cloud.last().iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert_eq!(re, vec![0.0, 1.0, 1.0, 2.0]);
        assert!(cloud.last().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn brute_force_rectangle_case() {
        // Enumerate the 16 combinations by hand as the oracle.
        let mut pts = Vec::new();
        for mask in 0..16u32 {
            let e: Vec<f64> = (0..4)
                .map(|i| if mask >> i & 1 == 1 { RECT_CASE[i].1 } else { RECT_CASE[i].0 })
                .collect();
            pts.push(Complex::new(e[0] - e[2], -e[1] + e[3]));
        }
        let cloud = brute_force(&sig(&RECT_CASE), freq(1, 4), 4).unwrap();
        assert_eq!(cloud.last().len(), 16);
        let b = cloud.bounds();
        assert_eq!((b.re().lo(), b.re().hi()), (0.0, 2.0));
        assert_eq!((b.im().lo(), b.im().hi()), (-2.0, -1.0));
        for p in &pts {
            assert!(cloud.last().iter().any(|z| (z - p).norm() < 1e-12));
        }
    }

    #[test]
    fn brute_force_limits() {
        let s = IntervalSignal::crisp(&vec![0.0; 32]).unwrap();
        assert!(matches!(
            brute_force(&s, freq(1, 32), 21),
            Err(Error::ResourceCap { requested: 21, cap: 20 })
        ));
        assert!(matches!(brute_force(&s, freq(1, 32), 0), Err(Error::InvalidLimit { .. })));
        let short = IntervalSignal::crisp(&[0.0; 4]).unwrap();
        assert!(matches!(brute_force(&short, freq(1, 4), 5), Err(Error::InvalidLimit { .. })));
        assert!(matches!(brute_force(&short, freq(1, 8), 2), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn selective_rectangle_case() {
        let r = selective_final(&sig(&RECT_CASE), freq(1, 4)).unwrap();
        assert_eq!(r.kind(), RegionKind::Polygon);
        let v: Vec<(f64, f64)> = r.vertices().iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(v, vec![(0.0, -2.0), (2.0, -2.0), (2.0, -1.0), (0.0, -1.0)]);
    }

    #[test]
    fn crisp_signal_traces_partial_sums() {
        let values = [0.3, -1.2, 2.5, 0.0, 4.0];
        let s = IntervalSignal::crisp(&values).unwrap();
        let f = freq(2, 5);
        let trace = selective(&s, f).unwrap();
        let boxes = bounding_box(&s, f).unwrap();
        let mut partial = Complex::new(0.0, 0.0);
        for (n, &v) in values.iter().enumerate() {
            partial += twiddle_unchecked::<f64>(f, n) * v;
            let r = &trace.regions()[n];
            assert_eq!(r.kind(), RegionKind::Point);
            assert!((r.vertices()[0].to_complex() - partial).norm() < 1e-12);
            let b = boxes.boxes()[n];
            assert_eq!(b.re().width(), 0.0);
            assert_eq!(b.im().width(), 0.0);
        }
    }

    #[test]
    fn bounding_box_examples() {
        let b = bounding_box_final(&sig(&RECT_CASE), freq(1, 4)).unwrap();
        assert_eq!((b.re().lo(), b.re().hi()), (0.0, 2.0));
        assert_eq!((b.im().lo(), b.im().hi()), (-2.0, -1.0));

        let n = 7;
        let s = IntervalSignal::new(vec![Interval::unit(); n]).unwrap();
        let b = bounding_box_final(&s, freq(0, n)).unwrap();
        assert_eq!((b.re().lo(), b.re().hi()), (-7.0, 7.0));
        assert_eq!((b.im().lo(), b.im().hi()), (0.0, 0.0));
    }

    #[test]
    fn trace_lengths_match_signal() {
        let s = IntervalSignal::from_crisp(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0], 0.5).unwrap();
        let f = freq(1, 6);
        assert_eq!(selective(&s, f).unwrap().regions().len(), 6);
        assert_eq!(bounding_box(&s, f).unwrap().boxes().len(), 6);
        assert_eq!(brute_force(&s, f, 6).unwrap().levels().len(), 6);
    }

    #[test]
    fn centred_form_examples() {
        let crisp = [1.0f64, -0.5, 2.0, 0.25, 3.0, -1.0, 0.0, 1.5];
        let f = freq(3, 8);
        let zero = centred_form_region(&crisp, 0.0, f).unwrap();
        assert_eq!(zero.uncertainty.kind(), RegionKind::Point);
        assert_eq!(zero.uncertainty.vertices()[0], Point::origin());

        let one = centred_form_region(&crisp, 1.0, f).unwrap();
        let two = centred_form_region(&crisp, 2.0, f).unwrap();
        assert_eq!(one.uncertainty.len(), two.uncertainty.len());
        for (a, b) in one.uncertainty.vertices().iter().zip(two.uncertainty.vertices()) {
            assert_eq!(a.x * 2.0, b.x);
            assert_eq!(a.y * 2.0, b.y);
        }

        let direct_box = bounding_box_final(&IntervalSignal::from_crisp(&crisp, 2.0).unwrap(), f).unwrap();
        let via = centred_form_box(&crisp, 2.0, f).unwrap().combined();
        for (a, b) in [
            (direct_box.re().lo(), via.re().lo()),
            (direct_box.re().hi(), via.re().hi()),
            (direct_box.im().lo(), via.im().lo()),
            (direct_box.im().hi(), via.im().hi()),
        ] {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(centred_form_region(&crisp, -1.0, f).is_err());
    }

    #[test]
    fn generic_over_single_precision() {
        let s = IntervalSignal::<f32>::from_bounds(&[(0.0, 1.0), (1.0, 2.0), (-1.0, 0.0), (0.0, 0.0)]).unwrap();
        let f = freq(1, 4);
        let r = selective_final(&s, f).unwrap();
        assert_eq!(r.len(), 4);
        let b = bounding_box_final(&s, f).unwrap();
        assert_eq!(b.re().hi(), 2.0f32);
    }
}
