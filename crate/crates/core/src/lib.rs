//! Guaranteed amplitude-spectrum bounds for interval-valued signals.
//!
//! An interval signal assigns each sample a closed interval instead of a
//! number. Every Fourier coefficient then ranges over a convex polygon of the
//! complex plane (a zonogon). Three propagation methods are provided:
//!
//! * brute force over all endpoint combinations (an oracle for short signals),
//! * the selective method, which keeps only convex hull vertices and yields
//!   best-possible amplitude bounds,
//! * the bounding-box method, complex interval arithmetic in O(N) per
//!   frequency, yielding rigorous but wider bounds.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

pub mod amplitude;
pub mod error;
pub mod geometry;
pub mod interval;
pub mod scalar;
pub mod transforms;
pub mod verify;

pub use amplitude::{
    amplitude_bounds_box, amplitude_bounds_selective, compare_spectra, frequency_bounds, spectrum_bounds,
    spectrum_bounds_with, AmplitudeBounds, BoundedSpectrum, ComparisonRow, Method, MinimumRule, SpectrumEntry,
};
pub use error::{Error, Result, BRUTE_FORCE_CAP};
pub use geometry::{
    convex_hull, max_distance_to_origin, min_distance_to_origin, min_vertex_distance_to_origin, origin_in_region,
    ConvexRegion, Point, RegionKind,
};
pub use interval::{complex_scale_interval, ComplexInterval, Interval, IntervalSignal, ScaledSegment};
pub use scalar::Scalar;
pub use transforms::{
    bounding_box, bounding_box_final, brute_force, centred_form_box, centred_form_region, dft_at, dft_crisp,
    selective, selective_final, selective_prefix, twiddle, unit_uncertainty_box, unit_uncertainty_region, BoxTrace, CentredForm,
    EndpointCloud, FrequencyIndex, HullTrace,
};
pub use verify::{
    verify_hull_in_box, verify_mc_enclosure, verify_selective_vs_brute, verify_selective_vs_brute_prefix,
    verify_zonogon_bound, Check, Locus,
    VerificationReport,
};

pub type Interval64 = Interval<f64>;
pub type ComplexInterval64 = ComplexInterval<f64>;
pub type IntervalSignal64 = IntervalSignal<f64>;
pub type Point64 = Point<f64>;
pub type ConvexRegion64 = ConvexRegion<f64>;
pub type AmplitudeBounds64 = AmplitudeBounds<f64>;
pub type BoundedSpectrum64 = BoundedSpectrum<f64>;

pub type Interval32 = Interval<f32>;
pub type IntervalSignal32 = IntervalSignal<f32>;
pub type ConvexRegion32 = ConvexRegion<f32>;
