//! Double-double arithmetic (~31 significant digits).
//!
//! The Taylor route of the Mittag-Leffler evaluator sums series whose terms
//! reach `exp(|z|^(1/alpha))` while the result stays O(1); the cancellation
//! destroys up to 14 digits, which plain f64 cannot absorb. Everything here
//! is branch-free error-free-transformation arithmetic built on fused
//! multiply-add.

#![allow(dead_code)]

use crate::float;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b| (or a == 0)
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = float::fma(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    // frozen hi/lo splits (mpmath)
    pub const LN2: Dd = Dd {
        hi: core::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };
    pub const HALF_LN_TWO_PI: Dd = Dd {
        hi: 0.918_938_533_204_672_8,
        lo: -3.878_294_158_067_241_4e-17,
    };

    #[inline(always)]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two f64 values as a Dd.
    #[inline(always)]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline(always)]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn add_f64(self, rhs: f64) -> Dd {
        self.add(Dd::from_f64(rhs))
    }

    #[inline(always)]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let p2 = p2 + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    #[inline(always)]
    pub fn div_f64(self, rhs: f64) -> Dd {
        self.div(Dd::from_f64(rhs))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }
}

/// exp(x) in double-double; underflows to zero below -745, saturates above 709.
pub(crate) fn dd_exp(x: Dd) -> Dd {
    if x.hi > 709.0 {
        return Dd::from_f64(f64::INFINITY);
    }
    if x.hi < -745.0 {
        return Dd::ZERO;
    }
    // x = k ln2 + r, |r| <= ln2/2
    let k = float::round(x.hi / core::f64::consts::LN_2);
    let r = x.sub(Dd::LN2.mul_f64(k));
    // Taylor of exp(r); |r| <= 0.35 needs ~26 terms for 1e-33
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    for n in 1..40 {
        term = term.mul(r).div_f64(n as f64);
        sum = sum.add(term);
        if float::abs(term.hi) < 1e-35 * float::abs(sum.hi) {
            break;
        }
    }
    let scale = k as i32;
    Dd {
        hi: float::ldexp(sum.hi, scale),
        lo: float::ldexp(sum.lo, scale),
    }
}

/// ln(x) in double-double for x > 0, one Newton step from the f64 seed.
pub(crate) fn dd_ln(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    let y0 = float::ln(x.hi);
    // r = x * exp(-y0) - 1 is O(1e-16); ln x = y0 + ln(1+r) = y0 + r - r^2/2 + ...
    let r = x.mul(dd_exp(Dd::from_f64(-y0))).add_f64(-1.0);
    let corr = r.sub(r.mul(r).mul_f64(0.5));
    Dd::from_f64(y0).add(corr)
}

// Stirling series coefficients B_{2j} / (2j (2j-1)) as exact rationals.
const STIRLING_RATIONAL: [(f64, f64); 12] = [
    (1.0, 12.0),
    (-1.0, 360.0),
    (1.0, 1260.0),
    (-1.0, 1680.0),
    (1.0, 1188.0),
    (-691.0, 360360.0),
    (1.0, 156.0),
    (-3617.0, 122400.0),
    (43867.0, 244188.0),
    (-174611.0, 125400.0),
    (854513.0, 63756.0),
    (-236364091.0, 1506960.0),
];

/// ln Gamma(x) in double-double via the Stirling series; needs x >= 30.
fn dd_ln_gamma_stirling(x: Dd) -> Dd {
    debug_assert!(x.hi >= 30.0);
    let ln_x = dd_ln(x);
    let mut s = x.add_f64(-0.5).mul(ln_x).sub(x).add(Dd::HALF_LN_TWO_PI);
    let inv = Dd::ONE.div(x);
    let inv2 = inv.mul(inv);
    let mut acc = Dd::ZERO;
    for &(num, den) in STIRLING_RATIONAL.iter().rev() {
        acc = acc.mul(inv2).add(Dd::from_f64(num).div_f64(den));
    }
    s = s.add(acc.mul(inv));
    s
}

/// 1 / Gamma(alpha n + 1) in double-double, with the argument alpha*n + 1
/// formed exactly. Returns zero when Gamma overflows (the series term is then
/// far below any tolerance anyway).
pub(crate) fn dd_inv_gamma_series(alpha: f64, n: u32) -> Dd {
    let x = Dd::prod(alpha, n as f64).add_f64(1.0);
    if x.hi >= 30.0 {
        let lg = dd_ln_gamma_stirling(x);
        return dd_exp(lg.neg());
    }
    // shift x up into the Stirling domain: Gamma(x) = Gamma(x+m) / prod(x+j)
    let m = (30.0 - x.hi) as u32 + 1;
    let mut poch = Dd::ONE;
    for j in 0..m {
        poch = poch.mul(x.add_f64(j as f64));
    }
    let lg = dd_ln_gamma_stirling(x.add_f64(m as f64));
    poch.mul(dd_exp(lg.neg()))
}

/// Complex double-double, only what the series summation needs.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ONE: DdComplex = DdComplex {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn from_f64(re: f64, im: f64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    pub fn add(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(rhs.re),
            im: self.im.add(rhs.im),
        }
    }

    pub fn mul(self, rhs: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(rhs.re).sub(self.im.mul(rhs.im)),
            im: self.re.mul(rhs.im).add(self.im.mul(rhs.re)),
        }
    }

    pub fn scale(self, s: Dd) -> DdComplex {
        DdComplex {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    pub fn norm_hi(self) -> f64 {
        float::hypot(self.re.hi, self.im.hi)
    }

    pub fn to_complex64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}
