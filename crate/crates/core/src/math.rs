//! Scalar math routed through `libm`.
//!
//! The standard-library float methods are unavailable in `no_std`, and the
//! platform libm they bind to is not bit-stable across systems. Routing every
//! transcendental call through the pure-Rust `libm` crate keeps the whole
//! simulator deterministic: the same seed produces the same bits everywhere.

use num_complex::Complex64;

pub const PI: f64 = core::f64::consts::PI;
pub const TAU: f64 = core::f64::consts::TAU;
pub const LN_2: f64 = core::f64::consts::LN_2;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn log10(x: f64) -> f64 {
    libm::log10(x)
}

#[inline]
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub fn acos(x: f64) -> f64 {
    libm::acos(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub fn pow(base: f64, exponent: f64) -> f64 {
    libm::pow(base, exponent)
}

/// `e^{j theta}` as a unit-modulus complex number.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(cos(theta), sin(theta))
}

/// Modulus of a complex number, overflow-safe.
#[inline]
pub fn cabs(z: Complex64) -> f64 {
    hypot(z.re, z.im)
}

/// Principal argument in (-pi, pi]; zero for the origin.
#[inline]
pub fn carg(z: Complex64) -> f64 {
    atan2(z.im, z.re)
}

/// Linear power from a dB value (`10^(db/10)`).
#[inline]
pub fn db_to_linear(db: f64) -> f64 {
    pow(10.0, db / 10.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cis_is_unit_modulus() {
        for k in 0..100 {
            let theta = -8.0 + 0.16 * k as f64;
            assert!((cabs(cis(theta)) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn carg_of_origin_is_zero() {
        assert_eq!(carg(Complex64::new(0.0, 0.0)), 0.0);
    }

    #[test]
    fn db_round_trip() {
        assert!((db_to_linear(0.0) - 1.0).abs() < 1e-15);
        assert!((db_to_linear(10.0) - 10.0).abs() < 1e-12);
    }
}
