//! The degree cap `M` required on surfaces of nonpositive Euler
//! characteristic, `d/(2d − 1) · (10d − 8 + √((10d − 2)² − 24(2d − 1)ε)) + 1`,
//! and the constant `5d + 2` used for positive characteristic.

use alloc::format;

use crate::error::{Error, Result};
use crate::rational::Q128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    /// The radicand is a perfect square.
    Exact(Q128),
    /// The value lies strictly between the bounds, which are `2⁻⁴⁰·d/(2d − 1)`
    /// apart.
    Interval { lower: Q128, upper: Q128 },
}

impl Threshold {
    pub fn lower(&self) -> &Q128 {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &Q128 {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Interval { upper, .. } => upper,
        }
    }
}

/// Fractional bits kept for an irrational square root.
const SQRT_BITS: u32 = 40;

fn overflow() -> Error {
    Error::Precondition("threshold arithmetic overflows for these parameters".into())
}

fn check(d: u32, epsilon: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("d = {d} must be at least 2")));
    }
    if epsilon > 0 {
        return Err(Error::Precondition(format!(
            "epsilon = {epsilon} is positive; the constant 5d + 2 applies there"
        )));
    }
    Ok(())
}

/// `(10d − 2)² − 24(2d − 1)ε`.
pub fn radicand(d: u32, epsilon: i64) -> Result<i128> {
    let d = d as i128;
    let base = (10 * d - 2).checked_mul(10 * d - 2).ok_or_else(overflow)?;
    let tail = (24 * (2 * d - 1))
        .checked_mul(epsilon as i128)
        .ok_or_else(overflow)?;
    base.checked_sub(tail).ok_or_else(overflow)
}

pub fn threshold(d: u32, epsilon: i64) -> Result<Threshold> {
    check(d, epsilon)?;
    let r = radicand(d, epsilon)?;
    let di = d as i128;
    let scale = |sqrt_num: i128, sqrt_den: i128| -> Result<Q128> {
        // d (10d − 8 + s) / (2d − 1) + 1 with s = sqrt_num / sqrt_den
        let lead = (10 * di - 8).checked_mul(sqrt_den).ok_or_else(overflow)?;
        let num = di
            .checked_mul(lead.checked_add(sqrt_num).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
        let den = (2 * di - 1).checked_mul(sqrt_den).ok_or_else(overflow)?;
        Ok(Q128::new(num, den) + Q128::from_integer(1))
    };
    let s = (r as u128).isqrt() as i128;
    if s * s == r {
        return Ok(Threshold::Exact(scale(s, 1)?));
    }
    let shifted = (r as u128)
        .checked_mul(1u128 << (2 * SQRT_BITS))
        .ok_or_else(overflow)?;
    let lo = shifted.isqrt() as i128;
    let den = 1i128 << SQRT_BITS;
    Ok(Threshold::Interval {
        lower: scale(lo, den)?,
        upper: scale(lo + 1, den)?,
    })
}

/// Whether `M` reaches the threshold, decided in exact integer arithmetic:
/// `(M − 1)(2d − 1) − d(10d − 8) ≥ d√R`.
pub fn meets_threshold(m: usize, d: u32, epsilon: i64) -> Result<bool> {
    check(d, epsilon)?;
    let r = radicand(d, epsilon)?;
    let di = d as i128;
    let lhs = (m as i128 - 1)
        .checked_mul(2 * di - 1)
        .ok_or_else(overflow)?
        - di * (10 * di - 8);
    if lhs < 0 {
        return Ok(false);
    }
    let left = lhs.checked_mul(lhs).ok_or_else(overflow)?;
    let right = (di * di).checked_mul(r).ok_or_else(overflow)?;
    Ok(left >= right)
}

/// Degree cap constant for surfaces of positive Euler characteristic.
pub fn positive_characteristic_constant(d: u32) -> usize {
    5 * d as usize + 2
}
