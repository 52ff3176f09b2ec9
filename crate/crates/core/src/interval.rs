//! Real and complex interval values.
//!
//! Only the operations the interval Fourier sum needs are provided: addition,
//! multiplication by a crisp real or complex number, the tight square and the
//! square root. Arithmetic is plain round-to-nearest floating point; there is
//! no outward rounding.

use std::fmt;
use std::ops::Add;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A closed, bounded, non-empty real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

fn check_finite<T: Scalar>(v: T) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { value: v.to_f64_lossy() })
    }
}

impl<T: Scalar> Interval<T> {
    /// Builds `[lo, hi]`. Reversed or non-finite endpoints are rejected, never
    /// swapped.
    pub fn new(lo: T, hi: T) -> Result<Self> {
        let lo = check_finite(lo)?;
        let hi = check_finite(hi)?;
        if lo > hi {
            return Err(Error::ReversedInterval {
                lo: lo.to_f64_lossy(),
                hi: hi.to_f64_lossy(),
            });
        }
        Ok(Self { lo, hi })
    }

    /// Width-zero interval `[v, v]`.
    pub fn point(v: T) -> Result<Self> {
        Self::new(v, v)
    }

    /// `[value - half_width, value + half_width]`.
    pub fn centred(value: T, half_width: T) -> Result<Self> {
        let half_width = check_finite(half_width)?;
        if half_width < T::zero() {
            return Err(Error::InvalidPrecision(half_width.to_f64_lossy()));
        }
        Self::new(value - half_width, value + half_width)
    }

    /// The unitary interval `[-1, 1]`.
    pub fn unit() -> Self {
        Self {
            lo: -T::one(),
            hi: T::one(),
        }
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> T {
        self.lo + (self.hi - self.lo) / T::lit(2.0)
    }

    pub fn contains(&self, v: T) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Multiplication by a crisp real number.
    pub fn scale(&self, a: T) -> Self {
        if a > T::zero() {
            Self {
                lo: a * self.lo,
                hi: a * self.hi,
            }
        } else if a < T::zero() {
            Self {
                lo: a * self.hi,
                hi: a * self.lo,
            }
        } else {
            Self {
                lo: T::zero(),
                hi: T::zero(),
            }
        }
    }

    /// The exact range `{t^2 : t in self}`.
    pub fn square(&self) -> Self {
        let (l2, h2) = (self.lo * self.lo, self.hi * self.hi);
        if self.lo >= T::zero() {
            Self { lo: l2, hi: h2 }
        } else if self.hi < T::zero() {
            Self { lo: h2, hi: l2 }
        } else {
            Self {
                lo: T::zero(),
                hi: l2.max(h2),
            }
        }
    }

    /// Square root; the lower endpoint may be zero but not negative.
    pub fn sqrt(&self) -> Result<Self> {
        if self.lo < T::zero() {
            return Err(Error::SqrtDomain {
                lo: self.lo.to_f64_lossy(),
                hi: self.hi.to_f64_lossy(),
            });
        }
        Ok(Self {
            lo: self.lo.sqrt(),
            hi: self.hi.sqrt(),
        })
    }
}

impl<T: Scalar> Add for Interval<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            lo: self.lo + rhs.lo,
            hi: self.hi + rhs.hi,
        }
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// An axis-aligned rectangle of the complex plane: `re + i im`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexInterval<T> {
    re: Interval<T>,
    im: Interval<T>,
}

impl<T: Scalar> ComplexInterval<T> {
    pub fn new(re: Interval<T>, im: Interval<T>) -> Self {
        Self { re, im }
    }

    /// Degenerate rectangle holding a single complex number.
    pub fn point(z: Complex<T>) -> Result<Self> {
        Ok(Self {
            re: Interval::point(z.re)?,
            im: Interval::point(z.im)?,
        })
    }

    pub fn zero() -> Self {
        let z = Interval {
            lo: T::zero(),
            hi: T::zero(),
        };
        Self { re: z, im: z }
    }

    pub fn re(&self) -> Interval<T> {
        self.re
    }

    pub fn im(&self) -> Interval<T> {
        self.im
    }

    /// Corners in counter-clockwise order starting at `(re.lo, im.lo)`.
    pub fn corners(&self) -> [Complex<T>; 4] {
        [
            Complex::new(self.re.lo, self.im.lo),
            Complex::new(self.re.hi, self.im.lo),
            Complex::new(self.re.hi, self.im.hi),
            Complex::new(self.re.lo, self.im.hi),
        ]
    }

    pub fn contains(&self, z: Complex<T>) -> bool {
        self.re.contains(z.re) && self.im.contains(z.im)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.re.is_subset_of(&other.re) && self.im.is_subset_of(&other.im)
    }

    /// Length of the diagonal.
    pub fn diagonal(&self) -> T {
        self.re.width().hypot(self.im.width())
    }
}

impl<T: Scalar> Add for ComplexInterval<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<T: Scalar> fmt::Display for ComplexInterval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i{}", self.re, self.im)
    }
}

/// Image of an interval under multiplication by a crisp complex number.
///
/// The exact image is the segment `start..end`; `bounds` is its enclosing
/// rectangle, which is exact only when the multiplier is real or imaginary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledSegment<T> {
    pub start: Complex<T>,
    pub end: Complex<T>,
    pub bounds: ComplexInterval<T>,
}

/// Multiplies the interval `x` by the complex number `c`.
///
/// `start` is the image of `x.lo`, `end` the image of `x.hi`.
pub fn complex_scale_interval<T: Scalar>(c: Complex<T>, x: Interval<T>) -> ScaledSegment<T> {
    ScaledSegment {
        start: c * x.lo,
        end: c * x.hi,
        bounds: ComplexInterval::new(x.scale(c.re), x.scale(c.im)),
    }
}

/// An ordered sequence of interval samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalSignal<T> {
    samples: Vec<Interval<T>>,
    precision: Option<T>,
}

impl<T: Scalar> IntervalSignal<T> {
    pub fn new(samples: Vec<Interval<T>>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        Ok(Self {
            samples,
            precision: None,
        })
    }

    /// Builds `[lo, hi]` samples from endpoint pairs.
    pub fn from_bounds(bounds: &[(T, T)]) -> Result<Self> {
        let samples = bounds
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::new(samples)
    }

    /// Builds `[x_n - precision, x_n + precision]` from a crisp signal.
    pub fn from_crisp(values: &[T], precision: T) -> Result<Self> {
        if !precision.is_finite() || precision < T::zero() {
            return Err(Error::InvalidPrecision(precision.to_f64_lossy()));
        }
        let samples = values
            .iter()
            .map(|&v| Interval::centred(v, precision))
            .collect::<Result<Vec<_>>>()?;
        let mut signal = Self::new(samples)?;
        signal.precision = Some(precision);
        Ok(signal)
    }

    /// Width-zero signal.
    pub fn crisp(values: &[T]) -> Result<Self> {
        Self::from_crisp(values, T::zero())
    }

    pub fn samples(&self) -> &[Interval<T>] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Shared precision, when the signal was built from crisp values.
    pub fn precision(&self) -> Option<T> {
        self.precision
    }

    pub fn midpoints(&self) -> Vec<T> {
        self.samples.iter().map(Interval::midpoint).collect()
    }

    /// Multiplies every sample by `a`.
    pub fn scaled(&self, a: T) -> Self {
        Self {
            samples: self.samples.iter().map(|x| x.scale(a)).collect(),
            precision: self.precision.map(|p| p * a.abs()),
        }
    }
}
