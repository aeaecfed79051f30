//! Default numeric tolerances, collected in one record.

/// Tolerances used by the verification suites and the analysis defaults.
///
/// The defaults reflect what the closed-form evaluation achieves in f64:
/// identities that share a code path sit near machine epsilon, derivative
/// checks carry the truncation error of central differences.
#[derive(Clone, Copy, Debug)]
pub struct NumericPolicy {
    /// `|(i w)^a - i kappa| / |kappa|` for the defining symbol relation.
    pub defining_relation: f64,
    /// Cartesian components against the cos/sin split forms, relative.
    pub cartesian_split: f64,
    /// `w = k v_p` identity, relative.
    pub phase_identity: f64,
    /// analytic group velocity against central differences, relative.
    pub derivative_check: f64,
    /// `v_g / v_p = 1/alpha` for the kinematic model, absolute on the ratio.
    pub kinematic_ratio: f64,
    /// KdV velocity ratio against its closed form, absolute on the ratio.
    pub kdv_ratio: f64,
    /// classical (alpha = 1) velocity formulas, absolute.
    pub classical_limit: f64,
    /// `|Re v|` relative to `|v|` for the purely imaginary orders.
    pub purely_imaginary: f64,
    /// residual `|v_p - v_g|` accepted by the crossing finder.
    pub crossing_residual: f64,
    /// imaginary-part coincidence at a crossing.
    pub crossing_imaginary: f64,
}

impl Default for NumericPolicy {
    fn default() -> Self {
        NumericPolicy {
            defining_relation: 1e-12,
            cartesian_split: 1e-13,
            phase_identity: 1e-14,
            derivative_check: 1e-6,
            kinematic_ratio: 1e-13,
            kdv_ratio: 1e-12,
            classical_limit: 1e-14,
            purely_imaginary: 1e-12,
            crossing_residual: 1e-10,
            crossing_imaginary: 1e-9,
        }
    }
}
