//! Deterministic CSV emission.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which
//! round-trips every f64 exactly and is locale-independent.

use std::fmt::Write as _;

/// One f64 with 17 significant digits, scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Header plus rows of a velocity sweep.
pub const SWEEP_HEADER: &str = "k,re_omega,im_omega,re_vp,im_vp,re_vg,im_vg,branch_flag";

/// A sweep row in file order.
#[derive(Clone, Copy, Debug)]
pub struct SweepRow {
    /// wave number
    pub k: f64,
    /// complex angular frequency
    pub omega: (f64, f64),
    /// complex phase velocity
    pub vp: (f64, f64),
    /// complex group velocity
    pub vg: (f64, f64),
    /// 1 when any value came off the kappa > 0 branch
    pub branch_flag: bool,
}

/// Renders the sweep CSV.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 160 + 80);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_f64(r.k),
            fmt_f64(r.omega.0),
            fmt_f64(r.omega.1),
            fmt_f64(r.vp.0),
            fmt_f64(r.vp.1),
            fmt_f64(r.vg.0),
            fmt_f64(r.vg.1),
            u8::from(r.branch_flag),
        );
    }
    out
}

/// Renders a field snapshot CSV with columns `x,re_u,im_u`.
pub fn snapshot_csv(x: &[f64], re: &[f64], im: &[f64]) -> String {
    let mut out = String::with_capacity(x.len() * 60 + 16);
    out.push_str("x,re_u,im_u\n");
    for j in 0..x.len() {
        let _ = writeln!(out, "{},{},{}", fmt_f64(x[j]), fmt_f64(re[j]), fmt_f64(im[j]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_exactly() {
        for &x in &[
            0.0,
            1.0 / 3.0,
            -2.718281828459045e-7,
            6.02214076e23,
            f64::MIN_POSITIVE,
            -0.7299999999999999,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn csv_layout() {
        let rows = [SweepRow {
            k: 0.5,
            omega: (0.1, 0.2),
            vp: (0.3, 0.4),
            vg: (0.5, 0.6),
            branch_flag: false,
        }];
        let text = sweep_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), SWEEP_HEADER);
        let row = lines.next().unwrap();
        assert_eq!(row.split(',').count(), 8);
        assert!(row.ends_with(",0"));
        assert!(lines.next().is_none());
    }
}
