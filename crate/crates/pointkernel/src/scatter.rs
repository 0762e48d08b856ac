//! Scattering coefficients for point interactions: the closed form, an
//! independent stationary-state linear-solve oracle, and the
//! energy-dependent couplings induced by higher delta derivatives.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interaction::{check_jump_average, BoundaryData, PointInteraction};

/// Transmission and reflection coefficients at wavenumber k (E = k²), for
/// waves incoming from either side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    pub k: f64,
    pub t_plus: Complex64,
    pub t_minus: Complex64,
    pub r_plus: Complex64,
    pub r_minus: Complex64,
}

impl ScatteringMatrix {
    /// Max-entry magnitude of S·S† − I for S = [[T₊, R₋], [R₊, T₋]].
    pub fn unitarity_defect(&self) -> f64 {
        let s = [[self.t_plus, self.r_minus], [self.r_plus, self.t_minus]];
        let mut defect = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut entry = s[i][0] * s[j][0].conj() + s[i][1] * s[j][1].conj();
                if i == j {
                    entry -= 1.0;
                }
                defect = defect.max(entry.norm());
            }
        }
        defect
    }

    /// |T₊|² (= |T₋|²).
    pub fn transmission_probability(&self) -> f64 {
        self.t_plus.norm_sqr()
    }
}

/// Closed-form scattering coefficients:
///
/// ```text
/// T± = ((1 − D/4) ± i·Im c2) / ((1 + D/4) + (i/2)(c1/k − k·c3))
/// R± = (∓Re c2 − (i/2)(c1/k + k·c3)) / (same denominator)
/// ```
pub fn scattering(pi: &PointInteraction, k: f64) -> Result<ScatteringMatrix> {
    if !(k > 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let d4 = pi.determinant() / 4.0;
    let denom = Complex64::new(1.0 + d4, 0.5 * (pi.c1 / k - k * pi.c3));
    let t = |sign: f64| Complex64::new(1.0 - d4, sign * pi.c2.im) / denom;
    let r = |sign: f64| Complex64::new(-sign * pi.c2.re, -0.5 * (pi.c1 / k + k * pi.c3)) / denom;
    Ok(ScatteringMatrix {
        k,
        t_plus: t(1.0),
        t_minus: t(-1.0),
        r_plus: r(1.0),
        r_minus: r(-1.0),
    })
}

/// |T|² from the closed form, without building the full matrix.
pub fn transmission_probability(pi: &PointInteraction, k: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let d4 = pi.determinant() / 4.0;
    let one_minus = (1.0 - d4).powi(2);
    let momenta = 0.25 * (pi.c1 / k + k * pi.c3).powi(2);
    Ok((one_minus + pi.c2.im.powi(2)) / (one_minus + pi.c2.norm_sqr() + momenta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LeftIncoming,
    RightIncoming,
}

/// Result of imposing the jump-average conditions on the plane-wave ansatz.
#[derive(Debug, Clone, Copy)]
pub struct StationaryState {
    pub transmission: Complex64,
    pub reflection: Complex64,
    pub boundary: BoundaryData,
}

/// Boundary data of the scattering ansatz for given (T, R).
///
/// Left-incoming: e^{ikx} + R e^{−ikx} for x < 0, T e^{ikx} for x > 0.
/// Right-incoming is the mirror image.
fn ansatz_boundary(k: f64, direction: Direction, t: Complex64, r: Complex64) -> BoundaryData {
    let ik = Complex64::new(0.0, k);
    let one = Complex64::new(1.0, 0.0);
    match direction {
        Direction::LeftIncoming => BoundaryData {
            value_plus: t,
            deriv_plus: ik * t,
            value_minus: one + r,
            deriv_minus: ik * (one - r),
        },
        Direction::RightIncoming => BoundaryData {
            value_plus: one + r,
            deriv_plus: -ik * (one - r),
            value_minus: t,
            deriv_minus: -ik * t,
        },
    }
}

fn jump_average_residual(bd: &BoundaryData, pi: &PointInteraction) -> [Complex64; 2] {
    [
        bd.deriv_jump() - (pi.c1 * bd.value_avg() - pi.c2.conj() * bd.deriv_avg()),
        bd.value_jump() - (pi.c2 * bd.value_avg() + pi.c3 * bd.deriv_avg()),
    ]
}

/// Independent oracle: solves the 2×2 complex linear system obtained by
/// imposing the jump-average conditions on the plane-wave ansatz, without
/// using the closed-form coefficient expressions.
pub fn solve_stationary(
    pi: &PointInteraction,
    k: f64,
    direction: Direction,
) -> Result<StationaryState> {
    if !(k > 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let residual =
        |t: Complex64, r: Complex64| jump_average_residual(&ansatz_boundary(k, direction, t, r), pi);

    // the residual is affine in (T, R); assemble the system column by column
    let r0 = residual(zero, zero);
    let rt = residual(one, zero);
    let rr = residual(zero, one);
    let m = [
        [rt[0] - r0[0], rr[0] - r0[0]],
        [rt[1] - r0[1], rr[1] - r0[1]],
    ];
    let b = [-r0[0], -r0[1]];

    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let scale = (m[0][0].norm() + m[0][1].norm()) * (m[1][0].norm() + m[1][1].norm());
    if det.norm() <= 1e-14 * scale {
        return Err(Error::SingularSystem);
    }
    let t = (b[0] * m[1][1] - m[0][1] * b[1]) / det;
    let r = (m[0][0] * b[1] - b[0] * m[1][0]) / det;

    Ok(StationaryState {
        transmission: t,
        reflection: r,
        boundary: ansatz_boundary(k, direction, t, r),
    })
}

/// Coupling strength c of the n-th delta derivative, n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperSingularSpec {
    pub n: u32,
    pub c: f64,
}

impl SuperSingularSpec {
    pub fn new(n: u32, c: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder(n));
        }
        assert!(c.is_finite(), "coupling must be finite");
        Ok(Self { n, c })
    }
}

/// (ik)^m for even m, via exact sign logic: (−1)^(m/2) k^m.
fn real_ik_pow(k: f64, m: u32) -> f64 {
    debug_assert!(m % 2 == 0);
    let sign = if (m / 2) % 2 == 0 { 1.0 } else { -1.0 };
    sign * k.powi(m as i32)
}

/// Energy-dependent jump-average couplings of V = c·δ⁽ⁿ⁾ at wavenumber k:
///
/// ```text
/// even n: c1 = c 2^(n−1) (ik)^n,  c2 = 0,  c3 = −c 2^(n−1) (ik)^(n−2)
/// odd n:  c1 = c3 = 0,  c2 = c (2ik)^(n−1)
/// ```
///
/// All the powers have even exponents, so every coupling is exactly real.
pub fn super_singular_interaction(spec: &SuperSingularSpec, k: f64) -> Result<PointInteraction> {
    if spec.n < 1 {
        return Err(Error::InvalidOrder(spec.n));
    }
    if !(k > 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let scale = spec.c * 2.0_f64.powi(spec.n as i32 - 1);
    Ok(if spec.n % 2 == 0 {
        PointInteraction::from_real(
            scale * real_ik_pow(k, spec.n),
            0.0,
            -scale * real_ik_pow(k, spec.n - 2),
        )
    } else {
        PointInteraction::from_real(0.0, scale * real_ik_pow(k, spec.n - 1), 0.0)
    })
}

/// Residuals of the generalized derivative-jump conditions.
#[derive(Debug, Clone, Copy)]
pub struct GriffithsReport {
    pub deriv_residual: f64,
    pub value_residual: f64,
    pub pass: bool,
}

/// Checks that the stationary state built from the energy-dependent
/// couplings also satisfies the generalized jump conditions
///
/// ```text
/// [ψ′] = c 2^(n−1) (−1)^n     {ψ⁽ⁿ⁾}
/// [ψ]  = c 2^(n−1) (−1)^(n−1) {ψ⁽ⁿ⁻¹⁾}
/// ```
///
/// with all one-sided derivatives taken analytically from the plane-wave
/// form. This confirms the two boundary-condition formulations agree at k.
pub fn check_griffiths_form(spec: &SuperSingularSpec, k: f64) -> Result<GriffithsReport> {
    let pi = super_singular_interaction(spec, k)?;
    let state = solve_stationary(&pi, k, Direction::LeftIncoming)?;
    let ik = Complex64::new(0.0, k);

    // m-th one-sided derivatives of T e^{ikx} and e^{ikx} + R e^{-ikx} at 0
    let plus = |m: u32| state.transmission * ik.powu(m);
    let minus = |m: u32| ik.powu(m) + state.reflection * (-ik).powu(m);

    let n = spec.n;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let factor = spec.c * 2.0_f64.powi(n as i32 - 1) * sign;

    let deriv_lhs = plus(1) - minus(1);
    let deriv_rhs = factor * 0.5 * (plus(n) + minus(n));
    let value_lhs = plus(0) - minus(0);
    let value_rhs = -factor * 0.5 * (plus(n - 1) + minus(n - 1));

    let deriv_residual = (deriv_lhs - deriv_rhs).norm();
    let value_residual = (value_lhs - value_rhs).norm();
    let tol = 1e-9
        * (1.0
            + deriv_lhs.norm()
            + deriv_rhs.norm()
            + value_lhs.norm()
            + value_rhs.norm());
    Ok(GriffithsReport {
        deriv_residual,
        value_residual,
        pass: deriv_residual <= tol && value_residual <= tol,
    })
}

/// Boundary data of the solved state checked against the couplings used to
/// produce it; convenience for diagnostics.
pub fn stationary_boundary_report(
    pi: &PointInteraction,
    state: &StationaryState,
    tol: f64,
) -> crate::interaction::JumpAverageReport {
    check_jump_average(&state.boundary, pi, tol)
}
