//! Numerical validation layer: layer-potential jump checks, the
//! integral-equation residual, and finite-difference boundary probes.
//!
//! Everything here runs on the imaginary time axis, where the kernels are
//! positive Gaussians and the quadratures are benign. Under the rotation
//! t → −it the layer potential becomes F(y) = −∫ₛᵗ p₀(y,t|0,Θ) g(Θ) dΘ, and
//! its derivative jumps at the origin are
//!
//! ```text
//! [F⁽ᵏ⁾] = 0                           for even k,
//! [F⁽ᵏ⁾] = (d/dt)^((k−1)/2) g(t)       for odd k,
//! ```
//!
//! with a plus sign on the mapped time derivative: under t → −it the
//! real-axis operator −i d/dt turns into +d/dt.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::interaction::{check_jump_average, BoundaryData, JumpAverageReport, PointInteraction};
use crate::propagator::{
    delta_prime_propagator, free_kernel, free_kernel_dy, propagator_boundary_data, Probe, TimeAxis,
};
use crate::quad::integrate;
use crate::richardson::{one_sided_derivative, Side};

/// Offsets and stencil order for one-sided Richardson extrapolation.
///
/// The ladder must be geometric (constant ratio); the default is
/// 0.1 · 2⁻ʲ for j = 0..5 with stencil order 4. Rungs much below 1e−2 are
/// useless for third derivatives: the stencil amplifies quadrature noise
/// by Σ|w|/h³.
#[derive(Debug, Clone)]
pub struct JumpProbe {
    pub epsilon_ladder: Vec<f64>,
    pub richardson_order: u32,
}

impl Default for JumpProbe {
    fn default() -> Self {
        Self {
            epsilon_ladder: (0..6).map(|j| 0.1 * 0.5_f64.powi(j)).collect(),
            richardson_order: 4,
        }
    }
}

impl JumpProbe {
    pub fn validate(&self) -> Result<()> {
        if self.richardson_order < 2 {
            return Err(Error::InvalidOrder(self.richardson_order));
        }
        if self.epsilon_ladder.len() < 2
            || self
                .epsilon_ladder
                .windows(2)
                .any(|w| !(w[1] < w[0]) || !(w[1] > 0.0))
        {
            return Err(Error::InvalidLadder);
        }
        Ok(())
    }
}

/// A density in the time convolution, with analytic time derivatives.
pub trait TimeDensity {
    fn value(&self, theta: f64) -> f64;
    fn derivative(&self, order: u32, theta: f64) -> f64;
}

/// Σ coeffs\[i\] · θⁱ with exact derivatives.
#[derive(Debug, Clone)]
pub struct PolynomialDensity {
    coeffs: Vec<f64>,
}

impl PolynomialDensity {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn constant(value: f64) -> Self {
        Self::new(vec![value])
    }

    /// g(θ) = θ − s.
    pub fn ramp(s: f64) -> Self {
        Self::new(vec![-s, 1.0])
    }
}

impl TimeDensity for PolynomialDensity {
    fn value(&self, theta: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * theta + c)
    }

    fn derivative(&self, order: u32, theta: f64) -> f64 {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..order {
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect();
        }
        coeffs.iter().rev().fold(0.0, |acc, &c| acc * theta + c)
    }
}

const LAYER_QUAD_TOL: f64 = 1e-13;

/// F(y) = −∫ₛᵗ p₀(y,t|0,Θ) g(Θ) dΘ, integrated in σ = √(t−Θ) so the
/// integrand stays bounded through the endpoint layer at Θ → t.
fn layer_potential(g: &dyn TimeDensity, y: f64, t: f64, s: f64) -> Result<f64> {
    let width = (t - s).sqrt();
    let result = integrate(
        |sigma| {
            if sigma == 0.0 {
                return 0.0;
            }
            let expo = -y * y / (4.0 * sigma * sigma);
            if expo < -745.0 {
                return 0.0;
            }
            expo.exp() / std::f64::consts::PI.sqrt() * g.value(t - sigma * sigma)
        },
        0.0,
        width,
        LAYER_QUAD_TOL,
    )?;
    Ok(-result.value)
}

/// One derivative order of a layer-potential jump check.
#[derive(Debug, Clone, Copy)]
pub struct JumpCheckRow {
    pub order: u32,
    pub jump: f64,
    pub expected: f64,
    pub residual: f64,
    pub error_estimate: f64,
}

#[derive(Debug, Clone)]
pub struct JumpCheckReport {
    pub rows: Vec<JumpCheckRow>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Verifies the derivative-jump table of the layer potential for orders
/// 0..=k_max: even orders are continuous, odd orders jump by the mapped
/// time derivative of the density.
pub fn layer_jump_check(
    g: &dyn TimeDensity,
    k_max: u32,
    t: f64,
    s: f64,
    probe: &JumpProbe,
    tol: f64,
) -> Result<JumpCheckReport> {
    probe.validate()?;
    assert!(tol > 0.0, "tolerance must be positive");
    if !(t > s) {
        return Err(Error::InvalidTimeOrder { t, s });
    }

    let cache: RefCell<HashMap<u64, f64>> = RefCell::new(HashMap::new());
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let eval = |y: f64| -> f64 {
        *cache.borrow_mut().entry(y.to_bits()).or_insert_with(|| {
            layer_potential(g, y, t, s).unwrap_or_else(|e| {
                *failure.borrow_mut() = Some(e);
                f64::NAN
            })
        })
    };

    let mut rows = Vec::with_capacity(k_max as usize + 1);
    let mut max_residual = 0.0_f64;
    for order in 0..=k_max {
        let plus = one_sided_derivative(
            &eval,
            Side::Plus,
            order,
            &probe.epsilon_ladder,
            probe.richardson_order,
        )?;
        let minus = one_sided_derivative(
            &eval,
            Side::Minus,
            order,
            &probe.epsilon_ladder,
            probe.richardson_order,
        )?;
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        let error_estimate = plus.error_estimate + minus.error_estimate;
        if error_estimate > tol {
            return Err(Error::ExtrapolationUnstable {
                estimate: error_estimate,
                tolerance: tol,
            });
        }
        let jump = plus.value - minus.value;
        let expected = if order % 2 == 0 {
            0.0
        } else {
            g.derivative((order - 1) / 2, t)
        };
        let residual = (jump - expected).abs();
        max_residual = max_residual.max(residual);
        rows.push(JumpCheckRow {
            order,
            jump,
            expected,
            residual,
            error_estimate,
        });
    }

    Ok(JumpCheckReport {
        rows,
        max_residual,
        pass: max_residual <= tol,
    })
}

const RESIDUAL_QUAD_TOL: f64 = 1e-9;

/// Max over `probes` of |p − (p₀ + c·∫…)| for the closed-form imaginary-time
/// delta-prime propagator, with the spatial distributional integral collapsed
/// analytically and the time integral done adaptively.
pub fn integral_equation_residual(c: f64, probes: &[Probe]) -> Result<f64> {
    let axis = TimeAxis::Imaginary;
    let mut worst = 0.0_f64;
    for probe in probes {
        let (y, t, x, s) = (probe.y(), probe.t(), probe.x(), probe.s());
        if x == 0.0 || y == 0.0 {
            return Err(Error::OnBoundary);
        }
        let lhs = delta_prime_propagator(c, y, t, x, s, axis)?.re;

        let integrand = |theta: f64| -> f64 {
            let bd = propagator_boundary_data(c, theta, x, s, axis).unwrap();
            // ∂_α ψ₀(y,t|α,θ)|₀ = −∂_y ψ₀(y,t|0,θ)
            let dk = -free_kernel_dy(y, t, 0.0, theta, axis).unwrap().re;
            let k0 = free_kernel(y, t, 0.0, theta, axis).unwrap().re;
            dk * bd.value_avg().re + k0 * bd.deriv_avg().re
        };
        let correction = integrate(integrand, s, t, RESIDUAL_QUAD_TOL)?;
        let rhs = free_kernel(y, t, x, s, axis)?.re + c * correction.value;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Finite-difference reconstruction of the propagator boundary data,
/// compared against the analytic one-sided limits and the jump-average
/// conditions with couplings (0, c, 0).
#[derive(Debug, Clone, Copy)]
pub struct FdBoundaryReport {
    pub extrapolated: BoundaryData,
    pub analytic: BoundaryData,
    /// Largest difference between the two, over all four components.
    pub max_deviation: f64,
    pub jump_average: JumpAverageReport,
    pub pass: bool,
}

/// Reconstructs value and slope at 0± of the imaginary-time delta-prime
/// propagator by Richardson extrapolation and checks them against the
/// analytic limits at tolerance `tol`.
pub fn fd_boundary_check(
    c: f64,
    t: f64,
    x: f64,
    probe: &JumpProbe,
    tol: f64,
) -> Result<FdBoundaryReport> {
    probe.validate()?;
    assert!(tol > 0.0, "tolerance must be positive");
    if x == 0.0 {
        return Err(Error::OnBoundary);
    }
    if !(t > 0.0) {
        return Err(Error::InvalidTimeOrder { t, s: 0.0 });
    }
    let axis = TimeAxis::Imaginary;
    let f = |y: f64| delta_prime_propagator(c, y, t, x, 0.0, axis).unwrap().re;

    let estimate = |side: Side, order: u32| -> Result<(f64, f64)> {
        let est = one_sided_derivative(f, side, order, &probe.epsilon_ladder, probe.richardson_order)?;
        if est.error_estimate > tol {
            return Err(Error::ExtrapolationUnstable {
                estimate: est.error_estimate,
                tolerance: tol,
            });
        }
        Ok((est.value, est.error_estimate))
    };

    let (value_plus, _) = estimate(Side::Plus, 0)?;
    let (value_minus, _) = estimate(Side::Minus, 0)?;
    let (deriv_plus, _) = estimate(Side::Plus, 1)?;
    let (deriv_minus, _) = estimate(Side::Minus, 1)?;
    let extrapolated = BoundaryData {
        value_plus: value_plus.into(),
        value_minus: value_minus.into(),
        deriv_plus: deriv_plus.into(),
        deriv_minus: deriv_minus.into(),
    };

    let analytic = propagator_boundary_data(c, t, x, 0.0, axis)?;
    let max_deviation = [
        (extrapolated.value_plus - analytic.value_plus).norm(),
        (extrapolated.value_minus - analytic.value_minus).norm(),
        (extrapolated.deriv_plus - analytic.deriv_plus).norm(),
        (extrapolated.deriv_minus - analytic.deriv_minus).norm(),
    ]
    .into_iter()
    .fold(0.0_f64, f64::max);

    let pi = PointInteraction::from_real(0.0, c, 0.0);
    let jump_average = check_jump_average(&extrapolated, &pi, tol);
    Ok(FdBoundaryReport {
        extrapolated,
        analytic,
        max_deviation,
        jump_average,
        pass: max_deviation <= tol && jump_average.pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_density_jump_table() {
        let g = PolynomialDensity::constant(1.0);
        let report =
            layer_jump_check(&g, 2, 1.0, 0.0, &JumpProbe::default(), 1e-6).unwrap();
        assert!(report.pass, "residuals: {:?}", report.rows);
        assert!((report.rows[1].jump - 1.0).abs() < 1e-6);
        assert!(report.rows[0].jump.abs() < 1e-8);
        assert!(report.rows[2].jump.abs() < 1e-6);
    }

    #[test]
    fn ramp_density_third_order_jump() {
        // [F'''] equals the first time derivative of g, here exactly 1
        let g = PolynomialDensity::ramp(0.0);
        let report =
            layer_jump_check(&g, 3, 1.0, 0.0, &JumpProbe::default(), 1e-6).unwrap();
        assert!(report.pass, "residuals: {:?}", report.rows);
        assert!((report.rows[3].jump - 1.0).abs() < 1e-6);
        assert!((report.rows[1].jump - 1.0).abs() < 1e-6);
    }

    #[test]
    fn zero_density_has_no_jumps() {
        let g = PolynomialDensity::constant(0.0);
        let report =
            layer_jump_check(&g, 3, 1.0, 0.0, &JumpProbe::default(), 1e-6).unwrap();
        assert!(report.pass);
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn unreachable_tolerance_reports_unstable_extrapolation() {
        // third-derivative noise amplification keeps the error estimate far
        // above 1e-14, so the check must refuse rather than mislabel
        let g = PolynomialDensity::constant(1.0);
        let err = layer_jump_check(&g, 3, 1.0, 0.0, &JumpProbe::default(), 1e-14).unwrap_err();
        assert!(matches!(err, Error::ExtrapolationUnstable { .. }));
    }

    #[test]
    fn ladder_validation() {
        let bad = JumpProbe {
            epsilon_ladder: vec![0.1, 0.2],
            richardson_order: 4,
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidLadder)));
        let bad = JumpProbe {
            epsilon_ladder: vec![0.1, 0.05],
            richardson_order: 1,
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidOrder(1))));
        assert!(JumpProbe::default().validate().is_ok());
    }

    #[test]
    fn residual_vanishes_for_free_particle() {
        let probes = [Probe::new(0.7, 1.0, -0.4, 0.0)];
        let r = integral_equation_residual(0.0, &probes).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn residual_small_on_probe_grid() {
        let mut probes = Vec::new();
        for y in [-1.0, 0.5, 2.0] {
            for x in [-0.5, 1.0, 2.0] {
                probes.push(Probe::new(y, 1.0, x, 0.0));
            }
        }
        for c in [1.0, -2.0] {
            let r = integral_equation_residual(c, &probes).unwrap();
            assert!(r <= 1e-6, "c = {c}: residual {r}");
        }
    }

    #[test]
    fn opaque_coupling_cross_side_residual() {
        // both sides of the equation vanish across the origin at |c| = 2
        let probes = [Probe::new(-1.0, 1.0, 1.0, 0.0), Probe::new(0.5, 1.0, -2.0, 0.0)];
        for c in [2.0, -2.0] {
            let r = integral_equation_residual(c, &probes).unwrap();
            assert!(r <= 1e-6);
        }
    }

    #[test]
    fn fd_probe_agrees_with_analytic_limits() {
        let report = fd_boundary_check(1.0, 1.0, 1.0, &JumpProbe::default(), 1e-8).unwrap();
        assert!(report.pass, "deviation {}", report.max_deviation);
        // free coupling: trivially continuous
        let report = fd_boundary_check(0.0, 1.0, 1.0, &JumpProbe::default(), 1e-8).unwrap();
        assert!(report.pass);
        assert!(report.extrapolated.value_jump().norm() < 1e-9);
    }

    #[test]
    fn dirichlet_and_neumann_at_critical_couplings() {
        // inside boundary value vanishes for c = −2, inside slope for c = +2
        let report = fd_boundary_check(-2.0, 1.0, 1.0, &JumpProbe::default(), 1e-8).unwrap();
        assert!(report.extrapolated.value_plus.norm() <= 1e-8);
        let report = fd_boundary_check(2.0, 1.0, 1.0, &JumpProbe::default(), 1e-8).unwrap();
        assert!(report.extrapolated.deriv_plus.norm() <= 1e-8);
    }
}
