use std::ops::{Add, Sub};

use crate::scalar::Real;

use super::InterpretationError;

/// A point `s` on the affine line of interpretations of `N` statements.
///
/// Only differences between points carry meaning, so the coordinate is not
/// exposed as a bare number: use [`InterpretationPoint::displacement`].
/// Generic over any scalar with subtraction so that exact rational
/// coordinates can be used as well as floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpretationPoint<T> {
    s: T,
    size: usize,
}

impl<T> InterpretationPoint<T>
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    pub fn new(s: T, size: usize) -> Result<Self, InterpretationError> {
        if size < 2 {
            return Err(InterpretationError::TooFewStatements(size));
        }
        Ok(InterpretationPoint { s, size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `θ = s′ − s`, the displacement taking `self` to `other`.
    pub fn displacement(&self, other: &Self) -> Result<T, InterpretationError> {
        if self.size != other.size {
            return Err(InterpretationError::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(other.s - self.s)
    }

    /// The point reached by displacing `self` by `theta`.
    pub fn translate(&self, theta: T) -> Self {
        InterpretationPoint {
            s: self.s + theta,
            size: self.size,
        }
    }
}

/// Admissible displacements `θ_min ≤ θ ≤ θ_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaInterval<T> {
    min: T,
    max: T,
}

impl<T: Real> ThetaInterval<T> {
    pub fn new(min: T, max: T) -> Result<Self, InterpretationError> {
        if !(min.is_finite() && max.is_finite() && min <= max) {
            return Err(InterpretationError::InvalidInterval);
        }
        Ok(ThetaInterval { min, max })
    }

    pub fn min(&self) -> T {
        self.min
    }

    pub fn max(&self) -> T {
        self.max
    }

    pub fn contains(&self, theta: T) -> bool {
        self.min <= theta && theta <= self.max
    }

    /// True when the interval admits a displacement other than zero, i.e.
    /// when not all interpretations are forced to coincide.
    pub fn admits_nonzero(&self) -> bool {
        self.min < self.max || !self.min.is_zero()
    }

    /// `points` evenly spaced values from `min` to `max` inclusive.
    pub fn grid(&self, points: usize) -> Vec<T> {
        match points {
            0 => Vec::new(),
            1 => vec![self.min],
            _ => {
                let span = self.max - self.min;
                let last = T::from_usize(points - 1).unwrap();
                (0..points)
                    .map(|i| self.min + span * T::from_usize(i).unwrap() / last)
                    .collect()
            }
        }
    }
}

impl<T: Real> Default for ThetaInterval<T> {
    /// `[−π, π]`.
    fn default() -> Self {
        ThetaInterval {
            min: -T::PI(),
            max: T::PI(),
        }
    }
}
