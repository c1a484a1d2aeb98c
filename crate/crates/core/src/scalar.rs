//! Scalar abstraction shared by the numeric modules.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for closed-form trigonometric identities.
    ///
    /// 1e-12 in double precision, widened to a few ulps for narrower types.
    fn identity_tol() -> Self {
        let floor = Self::from_f64(1e-12).unwrap();
        let ulps = Self::epsilon() * Self::from_f64(64.0).unwrap();
        floor.max(ulps)
    }

    /// Tolerance for grid searches and accumulated matrix products.
    fn grid_tol() -> Self {
        let floor = Self::from_f64(1e-9).unwrap();
        let ulps = Self::epsilon() * Self::from_f64(4096.0).unwrap();
        floor.max(ulps)
    }

    fn lit(v: f64) -> Self {
        Self::from_f64(v).unwrap()
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerances() {
        assert_eq!(f64::identity_tol(), 1e-12);
        assert_eq!(f64::grid_tol(), 1e-9);
        assert!(f32::identity_tol() > 1e-6);
        assert!(f32::grid_tol() > f32::identity_tol());
    }
}
