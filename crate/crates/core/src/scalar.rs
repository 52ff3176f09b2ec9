use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the transforms are generic over: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative tolerance for geometric predicates (collinearity, duplicate
    /// merging). Scaled by the magnitude of the operands at each use site.
    fn geometric_tolerance() -> Self;

    /// Converts a literal constant. Panics only if `v` is not representable,
    /// which cannot happen for the finite constants used in this crate.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite constant")
    }

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize is representable as a float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn geometric_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn geometric_tolerance() -> Self {
        1e-5
    }
}
