//! Point-interaction couplings, one-sided boundary data, and the
//! jump-average boundary-condition predicate.

use num_complex::Complex64;

/// Coupling triple of the three fundamental point interactions at the origin.
///
/// `c1` couples the plain delta, `c2` the delta-derivative pair (odd under
/// parity, complex in general), and `c3` the derivative-sandwiched delta.
/// Hermiticity forces `c1` and `c3` real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointInteraction {
    pub c1: f64,
    pub c2: Complex64,
    pub c3: f64,
}

impl PointInteraction {
    /// Panics if any coupling is non-finite.
    pub fn new(c1: f64, c2: Complex64, c3: f64) -> Self {
        assert!(
            c1.is_finite() && c2.is_finite() && c3.is_finite(),
            "couplings must be finite"
        );
        Self { c1, c2, c3 }
    }

    /// Convenience constructor for real `c2`.
    pub fn from_real(c1: f64, c2: f64, c3: f64) -> Self {
        Self::new(c1, Complex64::new(c2, 0.0), c3)
    }

    /// The free particle: all couplings zero.
    pub fn free() -> Self {
        Self::from_real(0.0, 0.0, 0.0)
    }

    /// Determinant D = c1·c3 + |c2|² of the connection matrix.
    ///
    /// Real by construction and even under parity.
    pub fn determinant(&self) -> f64 {
        self.c1 * self.c3 + self.c2.norm_sqr()
    }

    /// Image under x → −x: c1 and c3 are even, c2 is odd.
    pub fn parity(&self) -> Self {
        Self {
            c1: self.c1,
            c2: -self.c2,
            c3: self.c3,
        }
    }

    /// Largest coupling magnitude, used for relative degeneracy thresholds.
    pub fn max_coupling(&self) -> f64 {
        self.c1.abs().max(self.c2.norm()).max(self.c3.abs())
    }
}

/// Four-real-parameter form (X1, X2, X3, X4) of the same operator family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KurasovParams {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl From<KurasovParams> for PointInteraction {
    fn from(x: KurasovParams) -> Self {
        PointInteraction::new(x.x1, Complex64::new(x.x2, x.x3), -x.x4)
    }
}

impl From<PointInteraction> for KurasovParams {
    fn from(pi: PointInteraction) -> Self {
        KurasovParams {
            x1: pi.c1,
            x2: pi.c2.re,
            x3: pi.c2.im,
            x4: -pi.c3,
        }
    }
}

/// One-sided values and derivatives of a wave function at the origin.
///
/// The one-sided limits are the primary data; jumps `[u] = u(0⁺) − u(0⁻)`
/// and averages `{u} = (u(0⁺) + u(0⁻))/2` are derived views.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryData {
    pub value_plus: Complex64,
    pub value_minus: Complex64,
    pub deriv_plus: Complex64,
    pub deriv_minus: Complex64,
}

impl BoundaryData {
    pub fn value_jump(&self) -> Complex64 {
        self.value_plus - self.value_minus
    }

    pub fn value_avg(&self) -> Complex64 {
        0.5 * (self.value_plus + self.value_minus)
    }

    pub fn deriv_jump(&self) -> Complex64 {
        self.deriv_plus - self.deriv_minus
    }

    pub fn deriv_avg(&self) -> Complex64 {
        0.5 * (self.deriv_plus + self.deriv_minus)
    }

    /// Rescales all four components by `z`.
    pub fn scaled(&self, z: Complex64) -> Self {
        Self {
            value_plus: z * self.value_plus,
            value_minus: z * self.value_minus,
            deriv_plus: z * self.deriv_plus,
            deriv_minus: z * self.deriv_minus,
        }
    }
}

/// Residual magnitudes of the two jump-average conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpAverageReport {
    /// |\[u′\] − (c1{u} − c̄2{u′})|
    pub deriv_residual: f64,
    /// |\[u\] − (c2{u} + c3{u′})|
    pub value_residual: f64,
    pub pass: bool,
}

impl JumpAverageReport {
    pub fn max_residual(&self) -> f64 {
        self.deriv_residual.max(self.value_residual)
    }
}

/// Tests whether boundary data satisfies the jump-average conditions
///
/// ```text
/// [u′] = c1 {u} − c̄2 {u′}
/// [u]  = c2 {u} + c3 {u′}
/// ```
///
/// within the absolute tolerance `tol`. The conditions are linear and
/// homogeneous in `u`, so callers normalize `bd` first if a relative
/// criterion is wanted.
pub fn check_jump_average(bd: &BoundaryData, pi: &PointInteraction, tol: f64) -> JumpAverageReport {
    assert!(tol > 0.0, "tolerance must be positive");
    let deriv_residual = (bd.deriv_jump()
        - (pi.c1 * bd.value_avg() - pi.c2.conj() * bd.deriv_avg()))
    .norm();
    let value_residual =
        (bd.value_jump() - (pi.c2 * bd.value_avg() + pi.c3 * bd.deriv_avg())).norm();
    JumpAverageReport {
        deriv_residual,
        value_residual,
        pass: deriv_residual <= tol && value_residual <= tol,
    }
}
