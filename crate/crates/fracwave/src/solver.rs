//! Pseudo-spectral evolution on a periodic domain.
//!
//! Initial data is transformed once; each Fourier mode is then multiplied by
//! the exact propagator `E_a(i kappa t^a)` of its wave number and transformed
//! back. Fractional dynamics is not a semigroup, so evolution always starts
//! from the `t = 0` amplitudes: a [`SpectralState`] with `time > 0` cannot be
//! evolved further.
//!
//! Wave-number convention: the FFT reconstructs `sum_m u_m exp(+i k_m x)`,
//! while the dispersion branch is written for the `exp(-i k x)` component, so
//! mode `m` is propagated with the branch wave number `-k_m`. The spatial
//! symbol is odd and `E_a(conj z) = conj(E_a(z))`, so conjugate mode pairs
//! receive conjugate multipliers and real initial data stays real at every
//! order (the equation itself is real). The self-conjugate Nyquist mode gets
//! the average of the two signed propagators, the real `cos(kappa t)` at
//! `alpha = 1`; that average has modulus below one, so data carrying Nyquist
//! energy is not exactly norm-conserved on the grid. Band-limited data (any
//! resolved field) is.

use crate::dispersion::{DispersionModel, FractionalOrder};
use crate::fft::{Fft, FftError};
use crate::float;
use crate::ml::{MittagLeffler, MlError};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Uniform periodic grid `x_j = j L / N`, `N` a power of two (at least 8).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeriodicGrid {
    n_points: usize,
    length: f64,
}

impl PeriodicGrid {
    /// Validates the grid: `n_points = 2^p` with `p >= 3`, finite `length > 0`.
    pub fn new(n_points: usize, length: f64) -> Result<Self, SolverError> {
        if n_points < 8 || !n_points.is_power_of_two() {
            return Err(SolverError::BadGridSize { n: n_points });
        }
        if !length.is_finite() || length <= 0.0 {
            return Err(SolverError::BadGridLength { length });
        }
        Ok(PeriodicGrid { n_points, length })
    }

    /// Number of sample points.
    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Domain length `L`.
    pub fn length(&self) -> f64 {
        self.length
    }

    /// Grid spacing `L / N`.
    pub fn spacing(&self) -> f64 {
        self.length / self.n_points as f64
    }

    /// Sample position `x_j`.
    pub fn point(&self, j: usize) -> f64 {
        j as f64 * self.spacing()
    }

    /// Signed wave number of FFT bin `m`: `2 pi m' / L` with
    /// `m' = m` for `m <= N/2` and `m - N` beyond.
    pub fn wave_number(&self, m: usize) -> f64 {
        debug_assert!(m < self.n_points);
        let half = self.n_points / 2;
        let signed = if m <= half {
            m as i64
        } else {
            m as i64 - self.n_points as i64
        };
        2.0 * PI * signed as f64 / self.length
    }

    /// Index of the self-conjugate Nyquist bin.
    pub fn nyquist_bin(&self) -> usize {
        self.n_points / 2
    }
}

/// Fourier amplitudes of a field at one instant.
#[derive(Clone, Debug)]
pub struct SpectralState {
    grid: PeriodicGrid,
    modes: Vec<Complex64>,
    time: f64,
}

impl SpectralState {
    /// Transforms complex samples taken at `t = 0`.
    pub fn from_samples(grid: PeriodicGrid, samples: &[Complex64]) -> Result<Self, SolverError> {
        if samples.len() != grid.n_points() {
            return Err(SolverError::Fft(FftError::LengthMismatch {
                expected: grid.n_points(),
                got: samples.len(),
            }));
        }
        let mut modes = samples.to_vec();
        Fft::new(grid.n_points())?.forward(&mut modes)?;
        Ok(SpectralState {
            grid,
            modes,
            time: 0.0,
        })
    }

    /// Transforms real samples taken at `t = 0`.
    pub fn from_real_samples(grid: PeriodicGrid, samples: &[f64]) -> Result<Self, SolverError> {
        let buf: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        Self::from_samples(grid, &buf)
    }

    /// The grid.
    pub fn grid(&self) -> PeriodicGrid {
        self.grid
    }

    /// The instant the amplitudes belong to.
    pub fn time(&self) -> f64 {
        self.time
    }

    /// Fourier amplitudes in FFT bin order (unnormalised forward convention).
    pub fn modes(&self) -> &[Complex64] {
        &self.modes
    }

    /// Inverse transform to field samples.
    pub fn samples(&self) -> Vec<Complex64> {
        let mut buf = self.modes.clone();
        // length is valid by construction
        Fft::new(self.grid.n_points())
            .expect("grid size validated")
            .inverse(&mut buf)
            .expect("matching length");
        buf
    }

    /// Discrete L2 norm of the field, `sqrt(sum |u_j|^2)`, computed
    /// spectrally via Parseval.
    pub fn l2_norm(&self) -> f64 {
        let s: f64 = self.modes.iter().map(|m| m.norm_sqr()).sum();
        float::sqrt(s / self.grid.n_points() as f64)
    }

    /// True when the amplitudes satisfy the Hermitian pairing
    /// `modes[N-m] = conj(modes[m])` within `tol` (relative to the largest
    /// amplitude), i.e. the field is real.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.grid.n_points();
        let scale = self
            .modes
            .iter()
            .map(|m| m.norm())
            .fold(f64::MIN_POSITIVE, f64::max);
        for m in 1..n {
            if (self.modes[n - m] - self.modes[m].conj()).norm() > tol * scale {
                return false;
            }
        }
        self.modes[0].im.abs() <= tol * scale
    }
}

/// Solver errors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SolverError {
    /// grid size must be a power of two, at least 8
    BadGridSize {
        /// offending size
        n: usize,
    },
    /// non-positive or non-finite domain length
    BadGridLength {
        /// offending length
        length: f64,
    },
    /// embedded FFT error
    Fft(FftError),
    /// evolution must start from the `t = 0` amplitudes
    NotInitialState {
        /// time the state belongs to
        time: f64,
    },
    /// target time must be finite and non-negative
    BadTime {
        /// offending time
        t: f64,
    },
    /// packet width must be positive and finite
    BadWidth {
        /// offending width
        sigma: f64,
    },
    /// Gaussian envelope does not decay below 1e-12 within the domain
    EnvelopeWraps {
        /// packet width
        sigma: f64,
        /// domain length
        length: f64,
    },
    /// centroid measurement needs the classical order
    ClassicalOnly {
        /// offending order
        alpha: f64,
    },
    /// measurement interval must satisfy `t2 > t1 >= 0`
    BadInterval {
        /// start time
        t1: f64,
        /// end time
        t2: f64,
    },
    /// packet spread out too far for a meaningful centroid
    SpreadTooWide {
        /// estimated envelope spread
        spread: f64,
        /// limit `L/4`
        limit: f64,
    },
    /// the propagator failed to converge on one mode
    Convergence {
        /// FFT bin of the failing mode
        mode_index: usize,
        /// underlying evaluator error
        source: MlError,
    },
}

impl core::fmt::Display for SolverError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            SolverError::BadGridSize { n } => {
                write!(f, "grid size must be a power of two >= 8, got {n}")
            }
            SolverError::BadGridLength { length } => {
                write!(f, "domain length must be positive, got {length}")
            }
            SolverError::Fft(e) => write!(f, "{e}"),
            SolverError::NotInitialState { time } => {
                write!(
                    f,
                    "fractional evolution composes only from t = 0, state is at t = {time}"
                )
            }
            SolverError::BadTime { t } => write!(f, "target time must be >= 0, got {t}"),
            SolverError::BadWidth { sigma } => write!(f, "packet width must be > 0, got {sigma}"),
            SolverError::EnvelopeWraps { sigma, length } => write!(
                f,
                "envelope with sigma = {sigma} does not decay below 1e-12 on a domain of length {length}"
            ),
            SolverError::ClassicalOnly { alpha } => write!(
                f,
                "centroid measurement is a classical-order diagnostic, got alpha = {alpha}"
            ),
            SolverError::BadInterval { t1, t2 } => {
                write!(f, "need t2 > t1 >= 0, got t1 = {t1}, t2 = {t2}")
            }
            SolverError::SpreadTooWide { spread, limit } => write!(
                f,
                "packet spread {spread:.3} exceeds {limit:.3}; centroid ill-defined"
            ),
            SolverError::Convergence { mode_index, source } => {
                write!(f, "propagator failed on mode {mode_index}: {source}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SolverError {}

impl From<FftError> for SolverError {
    fn from(e: FftError) -> Self {
        SolverError::Fft(e)
    }
}

/// Evolves `t = 0` amplitudes to `t_target` by one-shot per-mode propagators.
///
/// At `alpha = 1` every multiplier has unit modulus and the L2 norm is
/// conserved to rounding.
pub fn evolve(
    state: &SpectralState,
    model: &DispersionModel,
    alpha: FractionalOrder,
    t_target: f64,
) -> Result<SpectralState, SolverError> {
    if state.time != 0.0 {
        return Err(SolverError::NotInitialState { time: state.time });
    }
    if !t_target.is_finite() || t_target < 0.0 {
        return Err(SolverError::BadTime { t: t_target });
    }
    let grid = state.grid;
    let nyquist = grid.nyquist_bin();
    let mut ml = MittagLeffler::new(alpha);
    let mut prop = |mode_index: usize, k: f64| {
        ml.propagator(model, k, t_target)
            .map_err(|source| SolverError::Convergence { mode_index, source })
    };
    let mut modes = state.modes.clone();
    for (m, amp) in modes.iter_mut().enumerate() {
        let k = grid.wave_number(m);
        // the exp(-i k x) component of FFT bin m carries branch wave number -k_m
        let mult = if m == nyquist {
            0.5 * (prop(m, -k)? + prop(m, k)?)
        } else {
            prop(m, -k)?
        };
        *amp *= mult;
    }
    Ok(SpectralState {
        grid,
        modes,
        time: t_target,
    })
}

/// Field samples `(x, Re u, Im u)` at one time, for file export.
#[derive(Clone, Debug)]
pub struct Snapshot {
    /// the sample instant
    pub time: f64,
    /// sample positions
    pub x: Vec<f64>,
    /// real part of the field
    pub re: Vec<f64>,
    /// imaginary part of the field
    pub im: Vec<f64>,
}

/// Evolves to `t` and samples the field.
pub fn snapshot(
    state0: &SpectralState,
    model: &DispersionModel,
    alpha: FractionalOrder,
    t: f64,
) -> Result<Snapshot, SolverError> {
    let evolved = evolve(state0, model, alpha, t)?;
    let samples = evolved.samples();
    let grid = evolved.grid();
    Ok(Snapshot {
        time: t,
        x: (0..grid.n_points()).map(|j| grid.point(j)).collect(),
        re: samples.iter().map(|v| v.re).collect(),
        im: samples.iter().map(|v| v.im).collect(),
    })
}

/// Samples `amplitude * cos(k_m x)` for integer mode index `m`.
pub fn cosine_mode(grid: PeriodicGrid, mode_index: usize, amplitude: f64) -> SpectralState {
    let k = 2.0 * PI * mode_index as f64 / grid.length();
    let samples: Vec<f64> = (0..grid.n_points())
        .map(|j| amplitude * float::cos(k * grid.point(j)))
        .collect();
    SpectralState::from_real_samples(grid, &samples).expect("matching grid length")
}

/// Signed distance from `x` to the nearest periodic image of `x0`.
fn periodic_distance(x: f64, x0: f64, length: f64) -> f64 {
    let d = x - x0;
    d - length * float::round(d / length)
}

/// Gaussian-envelope carrier `exp(-(x-x0)^2 / (2 sigma^2)) cos(k0 (x-x0))`,
/// sampled on the grid and transformed. Fails if the envelope does not decay
/// below 1e-12 at the far point of the periodic domain.
pub fn wavepacket(
    grid: PeriodicGrid,
    k0: f64,
    sigma: f64,
    x0: f64,
) -> Result<SpectralState, SolverError> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(SolverError::BadWidth { sigma });
    }
    let half = grid.length() / 2.0;
    if float::exp(-half * half / (2.0 * sigma * sigma)) > 1e-12 {
        return Err(SolverError::EnvelopeWraps {
            sigma,
            length: grid.length(),
        });
    }
    let samples: Vec<f64> = (0..grid.n_points())
        .map(|j| {
            let d = periodic_distance(grid.point(j), x0, grid.length());
            float::exp(-d * d / (2.0 * sigma * sigma)) * float::cos(k0 * d)
        })
        .collect();
    SpectralState::from_real_samples(grid, &samples)
}

/// Intensity centroid on the circle, plus the envelope spread, both from the
/// first circular moment of `|u|^2`.
fn circular_centroid(state: &SpectralState) -> (f64, f64) {
    let grid = state.grid();
    let length = grid.length();
    let samples = state.samples();
    let mut m0 = 0.0;
    let mut m1 = Complex64::new(0.0, 0.0);
    for (j, u) in samples.iter().enumerate() {
        let w = u.norm_sqr();
        let phi = 2.0 * PI * grid.point(j) / length;
        m0 += w;
        m1 += Complex64::new(w * float::cos(phi), w * float::sin(phi));
    }
    let centroid = length * m1.arg() / (2.0 * PI);
    let resultant = (m1.norm() / m0).min(1.0);
    let spread = if resultant > 0.0 {
        length / (2.0 * PI) * float::sqrt(-2.0 * float::ln(resultant))
    } else {
        f64::INFINITY
    };
    let wrapped = if centroid < 0.0 { centroid + length } else { centroid };
    (wrapped, spread)
}

/// Measures the envelope velocity of a wavepacket as the displacement of
/// the `|u|^2` centroid between `t1` and `t2`, divided by `t2 - t1`.
///
/// Classical-order diagnostic only: at `alpha = 1` the spectral density is
/// static and the centroid moves at the `|u(k)|^2`-weighted mean of `v_g(k)`.
pub fn centroid_velocity(
    model: &DispersionModel,
    alpha: FractionalOrder,
    grid: PeriodicGrid,
    k0: f64,
    sigma: f64,
    t1: f64,
    t2: f64,
) -> Result<f64, SolverError> {
    if !alpha.is_classical() {
        return Err(SolverError::ClassicalOnly {
            alpha: alpha.get(),
        });
    }
    if t1.is_nan() || t2.is_nan() || t1 < 0.0 || t2 <= t1 {
        return Err(SolverError::BadInterval { t1, t2 });
    }
    let x0 = grid.length() / 2.0;
    let packet = wavepacket(grid, k0, sigma, x0)?;
    let limit = grid.length() / 4.0;
    let mut centroids = [0.0; 2];
    for (slot, t) in [(0usize, t1), (1, t2)] {
        let evolved = evolve(&packet, model, alpha, t)?;
        let (c, spread) = circular_centroid(&evolved);
        if spread > limit {
            return Err(SolverError::SpreadTooWide { spread, limit });
        }
        centroids[slot] = c;
    }
    let delta = periodic_distance(centroids[1], centroids[0], grid.length());
    Ok(delta / (t2 - t1))
}
