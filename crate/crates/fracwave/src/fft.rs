//! Iterative radix-2 FFT with precomputed twiddle tables.
//!
//! Unnormalised forward transform `X_m = sum_j x_j exp(-2 pi i j m / N)`;
//! the inverse applies `1/N`. Sizes must be powers of two. Deterministic:
//! the same input always produces bit-identical output.

use crate::float;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// FFT errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FftError {
    /// transform sizes must be powers of two
    SizeNotPowerOfTwo {
        /// offending length
        len: usize,
    },
    /// buffer length does not match the plan
    LengthMismatch {
        /// plan size
        expected: usize,
        /// buffer size
        got: usize,
    },
}

impl core::fmt::Display for FftError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            FftError::SizeNotPowerOfTwo { len } => {
                write!(f, "FFT size must be a power of two, got {len}")
            }
            FftError::LengthMismatch { expected, got } => {
                write!(f, "buffer length {got} does not match plan size {expected}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FftError {}

/// A transform plan for one size: twiddle factors `exp(-2 pi i k / N)`,
/// `k < N/2`, shared by the forward and inverse directions.
#[derive(Clone, Debug)]
pub struct Fft {
    n: usize,
    twiddles: Vec<Complex64>,
}

impl Fft {
    /// Plans a transform of size `n` (a power of two, at least 2).
    pub fn new(n: usize) -> Result<Self, FftError> {
        if n < 2 || !n.is_power_of_two() {
            return Err(FftError::SizeNotPowerOfTwo { len: n });
        }
        let step = -2.0 * PI / n as f64;
        let twiddles = (0..n / 2)
            .map(|k| {
                let phi = step * k as f64;
                Complex64::new(float::cos(phi), float::sin(phi))
            })
            .collect();
        Ok(Fft { n, twiddles })
    }

    /// Transform size.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; plans are at least size 2.
    pub fn is_empty(&self) -> bool {
        false
    }

    fn check(&self, data: &[Complex64]) -> Result<(), FftError> {
        if data.len() != self.n {
            return Err(FftError::LengthMismatch {
                expected: self.n,
                got: data.len(),
            });
        }
        Ok(())
    }

    fn bit_reverse(&self, data: &mut [Complex64]) {
        let shift = usize::BITS - self.n.trailing_zeros();
        for i in 0..self.n {
            let j = i.reverse_bits() >> shift;
            if i < j {
                data.swap(i, j);
            }
        }
    }

    fn transform(&self, data: &mut [Complex64], inverse: bool) {
        self.bit_reverse(data);
        let mut m = 2;
        while m <= self.n {
            let half = m / 2;
            let step = self.n / m;
            for block in (0..self.n).step_by(m) {
                for k in 0..half {
                    let mut w = self.twiddles[k * step];
                    if inverse {
                        w = w.conj();
                    }
                    let even = data[block + k];
                    let odd = w * data[block + k + half];
                    data[block + k] = even + odd;
                    data[block + k + half] = even - odd;
                }
            }
            m <<= 1;
        }
    }

    /// In-place unnormalised forward DFT.
    pub fn forward(&self, data: &mut [Complex64]) -> Result<(), FftError> {
        self.check(data)?;
        self.transform(data, false);
        Ok(())
    }

    /// In-place inverse DFT including the `1/N` normalisation.
    pub fn inverse(&self, data: &mut [Complex64]) -> Result<(), FftError> {
        self.check(data)?;
        self.transform(data, true);
        let scale = 1.0 / self.n as f64;
        for v in data.iter_mut() {
            *v *= scale;
        }
        Ok(())
    }
}

/// One-shot forward DFT of a power-of-two sample buffer.
pub fn fft_forward(samples: &[Complex64]) -> Result<Vec<Complex64>, FftError> {
    let plan = Fft::new(samples.len())?;
    let mut data = samples.to_vec();
    plan.forward(&mut data)?;
    Ok(data)
}

/// One-shot inverse DFT (applies `1/N`).
pub fn fft_inverse(modes: &[Complex64]) -> Result<Vec<Complex64>, FftError> {
    let plan = Fft::new(modes.len())?;
    let mut data = modes.to_vec();
    plan.inverse(&mut data)?;
    Ok(data)
}
