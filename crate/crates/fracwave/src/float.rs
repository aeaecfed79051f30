//! Scalar math routed through `std` or `libm` depending on features.
//!
//! Also provides `sinpi`/`cospi` with exact argument reduction, which the
//! dispersion splits and the gamma reflection formula depend on: reducing
//! `x - round(x)` before multiplying by pi keeps the coefficients relatively
//! accurate near the zeros of `sin(pi x)`.

#![allow(dead_code)]

macro_rules! shim {
    ($name:ident, $std:ident, $libm:ident) => {
        #[cfg(feature = "std")]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            f64::$std(x)
        }
        #[cfg(not(feature = "std"))]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            libm::$libm(x)
        }
    };
}

shim!(sin, sin, sin);
shim!(cos, cos, cos);
shim!(exp, exp, exp);
shim!(ln, ln, log);
shim!(sqrt, sqrt, sqrt);
shim!(abs, abs, fabs);
shim!(round, round, round);
shim!(floor, floor, floor);

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    f64::powf(x, y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    f64::atan2(y, x)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    f64::hypot(x, y)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// Fused multiply-add, `x * y + z` with a single rounding.
#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn fma(x: f64, y: f64, z: f64) -> f64 {
    f64::mul_add(x, y, z)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn fma(x: f64, y: f64, z: f64) -> f64 {
    libm::fma(x, y, z)
}

#[cfg(feature = "std")]
#[inline(always)]
pub(crate) fn ldexp(x: f64, e: i32) -> f64 {
    // std has no ldexp; exponent scaling via powi keeps the value exact
    // because 2^e is a power of two.
    x * f64::powi(2.0, e)
}
#[cfg(not(feature = "std"))]
#[inline(always)]
pub(crate) fn ldexp(x: f64, e: i32) -> f64 {
    libm::ldexp(x, e)
}

use core::f64::consts::PI;

/// `sin(pi x)` with the reduction `r = x - round(x)` done exactly in f64.
///
/// Exact zeros: if `x` is an integer the result is exactly `0.0`.
pub(crate) fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = round(x);
    let r = x - n; // exact: |r| <= 0.5 and x, n share the exponent range
    let s = if r == 0.0 { 0.0 } else { sin(PI * r) };
    // n odd flips the sign; n may exceed i64 range only for |x| > 2^63 where
    // every f64 is an even integer.
    if abs(n) < 9.0e15 && (n as i64) & 1 == 1 {
        -s
    } else {
        s
    }
}

/// `cos(pi x)` with exact reduction; exact zero at half-integer `x`.
pub(crate) fn cospi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = round(x);
    let r = x - n;
    let c = if abs(r) == 0.5 { 0.0 } else { cos(PI * r) };
    if abs(n) < 9.0e15 && (n as i64) & 1 == 1 {
        -c
    } else {
        c
    }
}
