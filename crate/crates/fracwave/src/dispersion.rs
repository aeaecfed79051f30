//! Closed-form dispersion relations of the time-fractional models.
//!
//! For the Caputo symbol `(i w)^a = i kappa(k)` with `kappa > 0` the
//! `k`-parameterised branch is
//!
//! ```text
//! w(k)   = u(a) kappa^(1/a),        u(a) = i^(-1 + 1/a) = exp(i theta),
//! v_p(k) = w(k) / k,                theta = (1/a - 1) pi/2,
//! v_g(k) = (u(a)/a) kappa^(1/a - 1) kappa'(k).
//! ```
//!
//! The unit `u(a)` is evaluated in polar form, never by repeated complex
//! exponentiation, so the Cartesian components reproduce the cos/sin split
//! formulas exactly. `alpha = 1` takes the classical paths (`w = kappa`,
//! `v_p = kappa/k`, `v_g = kappa'`) with no trigonometric round-off.

use crate::float;
use core::fmt;
use num_complex::Complex64;

/// Caputo order `alpha`, validated to `0 < alpha <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    /// Validates `0 < alpha <= 1`.
    pub fn new(alpha: f64) -> Result<Self, DispersionError> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(DispersionError::InvalidOrder { alpha })
        }
    }

    /// The classical limit `alpha = 1`.
    pub const fn classical() -> Self {
        FractionalOrder(1.0)
    }

    /// The raw order.
    pub fn get(self) -> f64 {
        self.0
    }

    /// True exactly at the classical limit.
    pub fn is_classical(self) -> bool {
        self.0 == 1.0
    }

    /// `theta/pi` where `u(a) = exp(i theta)`; kept as a multiple of pi so
    /// the trigonometry can use exact reduction.
    fn half_turns(self) -> f64 {
        (1.0 / self.0 - 1.0) / 2.0
    }
}

/// Which linear wave equation the dispersion relation comes from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DispersionModel {
    /// `D_t^a u + c0 u_x = 0`
    KinematicWave {
        /// advection speed, `> 0`
        c0: f64,
    },
    /// `D_t^a u + c0 u_x + mu u_xxx = 0`
    LinearisedKdv {
        /// advection speed, `> 0`
        c0: f64,
        /// dispersion coefficient, `> 0`
        mu: f64,
    },
}

impl DispersionModel {
    /// Kinematic wave equation with the normalisation `c0 = 1`.
    pub const fn kinematic_wave() -> Self {
        DispersionModel::KinematicWave { c0: 1.0 }
    }

    /// Linearised KdV equation with the normalisation `c0 = mu = 1`.
    pub const fn linearised_kdv() -> Self {
        DispersionModel::LinearisedKdv { c0: 1.0, mu: 1.0 }
    }

    /// Kinematic wave equation with a validated speed.
    pub fn kinematic_wave_with(c0: f64) -> Result<Self, DispersionError> {
        check_positive("c0", c0)?;
        Ok(DispersionModel::KinematicWave { c0 })
    }

    /// Linearised KdV with validated coefficients.
    pub fn linearised_kdv_with(c0: f64, mu: f64) -> Result<Self, DispersionError> {
        check_positive("c0", c0)?;
        check_positive("mu", mu)?;
        Ok(DispersionModel::LinearisedKdv { c0, mu })
    }

    /// The factored spatial symbol `kappa(k)`: the equation reads
    /// `(i w)^a = i kappa(k)` in Fourier space.
    ///
    /// `kappa = c0 k` for the kinematic wave, `c0 k - mu k^3` for KdV.
    pub fn spatial_symbol(&self, k: f64) -> f64 {
        match *self {
            DispersionModel::KinematicWave { c0 } => c0 * k,
            DispersionModel::LinearisedKdv { c0, mu } => c0 * k - mu * k * k * k,
        }
    }

    /// `d kappa / d k`.
    pub fn spatial_symbol_derivative(&self, k: f64) -> f64 {
        match *self {
            DispersionModel::KinematicWave { c0 } => c0,
            DispersionModel::LinearisedKdv { c0, mu } => c0 - 3.0 * mu * k * k,
        }
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<(), DispersionError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(DispersionError::InvalidParameter { name, value })
    }
}

/// How to treat wave numbers with `kappa(k) <= 0` at fractional order.
///
/// The splits assume `kappa > 0`; outside that domain the fractional power
/// is branch-dependent. Strict mode refuses, permissive mode returns the
/// principal-branch value with a warning flag set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BranchMode {
    /// Reject `kappa <= 0` with [`DispersionError::NonPositiveSymbol`].
    #[default]
    Strict,
    /// Evaluate the principal branch and flag the result.
    Permissive,
}

/// A complex value together with the branch warning of permissive mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Branched {
    /// principal-branch value
    pub value: Complex64,
    /// true when `kappa(k) <= 0` forced evaluation off the `kappa > 0` branch
    pub branch_warning: bool,
}

impl Branched {
    fn on_branch(value: Complex64) -> Self {
        Branched {
            value,
            branch_warning: false,
        }
    }

    fn off_branch(value: Complex64) -> Self {
        Branched {
            value,
            branch_warning: true,
        }
    }
}

/// Errors of the dispersion evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DispersionError {
    /// order outside `(0, 1]`
    InvalidOrder {
        /// offending value
        alpha: f64,
    },
    /// non-positive or non-finite model coefficient
    InvalidParameter {
        /// coefficient name
        name: &'static str,
        /// offending value
        value: f64,
    },
    /// phase velocity requested at `k = 0`
    ZeroWaveNumber,
    /// `kappa(k) <= 0` with `alpha < 1` in strict mode
    NonPositiveSymbol {
        /// offending wave number
        k: f64,
        /// value of the spatial symbol there
        kappa: f64,
    },
}

impl fmt::Display for DispersionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DispersionError::InvalidOrder { alpha } => {
                write!(f, "fractional order must lie in (0, 1], got {alpha}")
            }
            DispersionError::InvalidParameter { name, value } => {
                write!(f, "model coefficient {name} must be positive, got {value}")
            }
            DispersionError::ZeroWaveNumber => {
                write!(f, "phase velocity is undefined at k = 0")
            }
            DispersionError::NonPositiveSymbol { k, kappa } => {
                write!(
                    f,
                    "spatial symbol kappa({k}) = {kappa} <= 0: fractional powers are \
                     branch-dependent here (strict mode refuses; use permissive mode)"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DispersionError {}

/// The unit `i^(-1 + 1/alpha) = exp(i (1/alpha - 1) pi/2)`, in polar form.
///
/// Exact at the classical limit (`1 + 0i`) and exactly imaginary for the
/// orders `alpha = 1/(2(m+1))` representable in f64.
pub fn fractional_unit(alpha: FractionalOrder) -> Complex64 {
    if alpha.is_classical() {
        return Complex64::new(1.0, 0.0);
    }
    let h = alpha.half_turns();
    Complex64::new(float::cospi(h), float::sinpi(h))
}

/// `kappa^e` for the principal branch, splitting real from complex cases.
fn symbol_power(kappa: f64, e: f64) -> (Complex64, bool) {
    if kappa > 0.0 {
        (Complex64::new(float::powf(kappa, e), 0.0), false)
    } else if kappa == 0.0 {
        // e > 0 always holds here (e = 1/a or 1/a - 1 with a < 1)
        (Complex64::new(0.0, 0.0), true)
    } else {
        // principal branch of (negative real)^e = |kappa|^e exp(i pi e)
        let m = float::powf(-kappa, e);
        (
            Complex64::new(m * float::cospi(e), m * float::sinpi(e)),
            true,
        )
    }
}

fn checked_symbol(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
    mode: BranchMode,
) -> Result<f64, DispersionError> {
    let kappa = model.spatial_symbol(k);
    if !alpha.is_classical() && kappa <= 0.0 && mode == BranchMode::Strict {
        return Err(DispersionError::NonPositiveSymbol { k, kappa });
    }
    Ok(kappa)
}

/// The complex angular frequency `w(k) = u(alpha) kappa(k)^(1/alpha)`.
///
/// Classical limit: exactly `kappa + 0i` for any `k`.
pub fn omega_bar(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
    mode: BranchMode,
) -> Result<Branched, DispersionError> {
    let kappa = checked_symbol(model, alpha, k, mode)?;
    if alpha.is_classical() {
        return Ok(Branched::on_branch(Complex64::new(kappa, 0.0)));
    }
    let (pow, off) = symbol_power(kappa, 1.0 / alpha.get());
    let value = fractional_unit(alpha) * pow;
    Ok(if off {
        Branched::off_branch(value)
    } else {
        Branched::on_branch(value)
    })
}

/// The complex phase velocity `v_p(k) = w(k) / k`.
///
/// `k = 0` is refused: the curve is parameterised by `k != 0` and the
/// limit is not taken here.
pub fn phase_velocity(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
    mode: BranchMode,
) -> Result<Branched, DispersionError> {
    if k == 0.0 {
        return Err(DispersionError::ZeroWaveNumber);
    }
    let w = omega_bar(model, alpha, k, mode)?;
    Ok(Branched {
        value: w.value / k,
        branch_warning: w.branch_warning,
    })
}

/// The complex group velocity `v_g = dw/dk = (u/alpha) kappa^(1/alpha - 1) kappa'`.
///
/// Classical limit: exactly `kappa'(k) + 0i`.
pub fn group_velocity(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
    mode: BranchMode,
) -> Result<Branched, DispersionError> {
    let kappa = checked_symbol(model, alpha, k, mode)?;
    let kappa_prime = model.spatial_symbol_derivative(k);
    if alpha.is_classical() {
        return Ok(Branched::on_branch(Complex64::new(kappa_prime, 0.0)));
    }
    let a = alpha.get();
    let (pow, off) = symbol_power(kappa, 1.0 / a - 1.0);
    let value = fractional_unit(alpha) * pow * (kappa_prime / a);
    Ok(if off {
        Branched::off_branch(value)
    } else {
        Branched::on_branch(value)
    })
}

/// Cartesian components of a complex velocity, `(Re v, Im v)`.
///
/// For values coming from [`phase_velocity`]/[`group_velocity`] these equal
/// the cos/sin split formulas of the two models.
pub fn velocity_split(v: Complex64) -> (f64, f64) {
    (v.re, v.im)
}

/// A normal mode `phi(t, x) = Re{ A exp[i (w t - k x)] }` with complex `w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalMode {
    /// amplitude `A`
    pub amplitude: f64,
    /// wave number `k`
    pub wave_number: f64,
    /// complex angular frequency `w`
    pub omega_bar: Complex64,
}

impl NormalMode {
    /// Builds the mode from a model dispersion relation (strict branch).
    pub fn from_dispersion(
        model: &DispersionModel,
        alpha: FractionalOrder,
        amplitude: f64,
        wave_number: f64,
    ) -> Result<Self, DispersionError> {
        let w = omega_bar(model, alpha, wave_number, BranchMode::Strict)?;
        Ok(NormalMode {
            amplitude,
            wave_number,
            omega_bar: w.value,
        })
    }

    /// Field value `A exp(-Im(w) t) cos(Re(w) t - k x)`.
    pub fn evaluate(&self, t: f64, x: f64) -> f64 {
        self.amplitude
            * float::exp(-self.omega_bar.im * t)
            * float::cos(self.omega_bar.re * t - self.wave_number * x)
    }
}
