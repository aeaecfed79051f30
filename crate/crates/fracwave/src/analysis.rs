//! Structural features of the dispersion curves: orders with vanishing real
//! parts, phase/group velocity crossings, zeros of the classical curves.

use crate::dispersion::{
    group_velocity, phase_velocity, BranchMode, DispersionError, DispersionModel, FractionalOrder,
};
use crate::float;
use alloc::vec::Vec;
use num_complex::Complex64;

/// The orders `alpha = 1/(2(m+1))`, `m = 0..m_max`, at which every velocity
/// real part vanishes. Returned in decreasing order: `[1/2, 1/4, 1/6, ...]`.
pub fn purely_imaginary_orders(m_max: u32) -> Vec<f64> {
    (0..=m_max).map(|m| 1.0 / (2.0 * (m + 1) as f64)).collect()
}

/// True when `|cos((1/alpha - 1) pi/2)| <= tol`, i.e. the polar unit of the
/// dispersion branch is (numerically) purely imaginary.
pub fn is_purely_imaginary(alpha: FractionalOrder, tol: f64) -> bool {
    let h = (1.0 / alpha.get() - 1.0) / 2.0;
    float::abs(float::cospi(h)) <= tol
}

/// Result of a phase/group velocity crossing search.
#[derive(Clone, Copy, Debug)]
pub struct CrossingResult {
    /// the crossing wave number
    pub k_star: f64,
    /// common complex velocity at the crossing
    pub v_common: Complex64,
    /// the bracket the root was isolated in
    pub bracket: (f64, f64),
    /// `|v_p(k*) - v_g(k*)|`
    pub residual: f64,
}

/// Errors of the crossing search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CrossingError {
    /// `Re(v_p - v_g)` does not change sign on the bracket
    NoSignChange {
        /// the bracket searched
        bracket: (f64, f64),
    },
    /// all real parts vanish at this order; the crossing is degenerate
    Degenerate {
        /// the purely imaginary order
        alpha: f64,
    },
    /// bracket leaves the `kappa > 0` domain or is malformed
    Domain(DispersionError),
    /// polish did not reach the requested residual
    ResidualTooLarge {
        /// best residual achieved
        residual: f64,
        /// requested tolerance
        tol: f64,
    },
}

impl core::fmt::Display for CrossingError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            CrossingError::NoSignChange { bracket } => write!(
                f,
                "Re(v_p - v_g) does not change sign on [{}, {}]",
                bracket.0, bracket.1
            ),
            CrossingError::Degenerate { alpha } => write!(
                f,
                "alpha = {alpha} is a purely imaginary order; the real parts vanish identically"
            ),
            CrossingError::Domain(e) => write!(f, "{e}"),
            CrossingError::ResidualTooLarge { residual, tol } => {
                write!(f, "crossing residual {residual:.3e} exceeds tolerance {tol:.3e}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CrossingError {}

impl From<DispersionError> for CrossingError {
    fn from(e: DispersionError) -> Self {
        CrossingError::Domain(e)
    }
}

fn re_gap(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
) -> Result<f64, CrossingError> {
    let vp = phase_velocity(model, alpha, k, BranchMode::Strict)?;
    let vg = group_velocity(model, alpha, k, BranchMode::Strict)?;
    Ok(vp.value.re - vg.value.re)
}

/// Finds `k*` with `Re v_p(k*) = Re v_g(k*)` inside the bracket, by bisection
/// to a width of 1e-6 followed by secant polish. At the crossing the full
/// complex velocities coincide (both share the polar unit), so the reported
/// residual is `|v_p - v_g|` and the imaginary parts match as well.
pub fn find_velocity_crossing(
    model: &DispersionModel,
    alpha: FractionalOrder,
    bracket: (f64, f64),
    tol: f64,
) -> Result<CrossingResult, CrossingError> {
    let (lo, hi) = bracket;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(CrossingError::Domain(DispersionError::InvalidParameter {
            name: "bracket",
            value: hi - lo,
        }));
    }
    if is_purely_imaginary(alpha, 1e-12) {
        return Err(CrossingError::Degenerate {
            alpha: alpha.get(),
        });
    }

    let mut a = lo;
    let mut b = hi;
    let mut fa = re_gap(model, alpha, a)?;
    let fb = re_gap(model, alpha, b)?;
    if fa == 0.0 {
        return finish(model, alpha, a, bracket, tol);
    }
    if fb == 0.0 {
        return finish(model, alpha, b, bracket, tol);
    }
    if fa.signum() == fb.signum() {
        return Err(CrossingError::NoSignChange { bracket });
    }

    // bisection to 1e-6 bracket width
    while b - a > 1e-6 {
        let mid = 0.5 * (a + b);
        let fm = re_gap(model, alpha, mid)?;
        if fm == 0.0 {
            return finish(model, alpha, mid, bracket, tol);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }

    // secant polish from the bisection endpoints
    let mut x0 = a;
    let mut x1 = b;
    let mut f0 = re_gap(model, alpha, x0)?;
    let mut f1 = re_gap(model, alpha, x1)?;
    for _ in 0..20 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 <= lo || x2 >= hi {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = re_gap(model, alpha, x1)?;
        if f1 == 0.0 {
            break;
        }
    }
    let k_star = if float::abs(f1) <= float::abs(f0) { x1 } else { x0 };
    finish(model, alpha, k_star, bracket, tol)
}

fn finish(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k_star: f64,
    bracket: (f64, f64),
    tol: f64,
) -> Result<CrossingResult, CrossingError> {
    let vp = phase_velocity(model, alpha, k_star, BranchMode::Strict)?.value;
    let vg = group_velocity(model, alpha, k_star, BranchMode::Strict)?.value;
    let residual = (vp - vg).norm();
    if residual > tol {
        return Err(CrossingError::ResidualTooLarge { residual, tol });
    }
    Ok(CrossingResult {
        k_star,
        v_common: 0.5 * (vp + vg),
        bracket,
        residual,
    })
}

/// Zeros (for `k >= 0`) of the classical dispersion curves.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ClassicalZeros {
    /// zeros of `omega(k)`
    pub omega: Vec<f64>,
    /// zeros of `v_p(k)`
    pub phase_velocity: Vec<f64>,
    /// zeros of `v_g(k)`
    pub group_velocity: Vec<f64>,
}

/// Zeros of the classical (`alpha = 1`) curves: for KdV
/// `omega: {0, sqrt(c0/mu)}`, `v_p: {sqrt(c0/mu)}`, `v_g: {sqrt(c0/(3 mu))}`;
/// the kinematic model has none for `k > 0`.
pub fn classical_zeros(model: &DispersionModel) -> ClassicalZeros {
    match *model {
        DispersionModel::KinematicWave { .. } => ClassicalZeros::default(),
        DispersionModel::LinearisedKdv { c0, mu } => {
            let k_omega = float::sqrt(c0 / mu);
            ClassicalZeros {
                omega: alloc::vec![0.0, k_omega],
                phase_velocity: alloc::vec![k_omega],
                group_velocity: alloc::vec![float::sqrt(c0 / (3.0 * mu))],
            }
        }
    }
}
