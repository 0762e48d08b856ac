//! Closed-form kernels: the free propagator on either time axis and the
//! exact delta-prime propagator with its boundary data.
//!
//! Units are ħ = 1, m = 1/2. On the real axis the free kernel is
//! (4πi(t−s))^(−1/2) exp(−(y−x)²/(4i(t−s))) on the principal square-root
//! branch (positive real part); the rotation t → −it turns it into the
//! Gaussian heat kernel, which is the axis every numerical oracle uses.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interaction::BoundaryData;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeAxis {
    Real,
    Imaginary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceTimePoint {
    pub position: f64,
    pub time: f64,
}

/// A (target, source) pair for kernel evaluations: ψ(y, t | x, s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub target: SpaceTimePoint,
    pub source: SpaceTimePoint,
}

impl Probe {
    pub fn new(y: f64, t: f64, x: f64, s: f64) -> Self {
        Self {
            target: SpaceTimePoint { position: y, time: t },
            source: SpaceTimePoint { position: x, time: s },
        }
    }

    pub fn y(&self) -> f64 {
        self.target.position
    }

    pub fn t(&self) -> f64 {
        self.target.time
    }

    pub fn x(&self) -> f64 {
        self.source.position
    }

    pub fn s(&self) -> f64 {
        self.source.time
    }
}

fn elapsed(t: f64, s: f64) -> Result<f64> {
    let dt = t - s;
    if dt > 0.0 && dt.is_finite() {
        Ok(dt)
    } else {
        Err(Error::InvalidTimeOrder { t, s })
    }
}

/// Free kernel ψ₀(y, t | x, s).
pub fn free_kernel(y: f64, t: f64, x: f64, s: f64, axis: TimeAxis) -> Result<Complex64> {
    let dt = elapsed(t, s)?;
    let z = y - x;
    Ok(match axis {
        TimeAxis::Imaginary => {
            let expo = -z * z / (4.0 * dt);
            // exp underflows before 1/sqrt matters; avoids 0·inf downstream
            if expo < -745.0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(expo.exp() / (4.0 * PI * dt).sqrt(), 0.0)
            }
        }
        TimeAxis::Real => {
            let root = Complex64::new(0.0, 4.0 * PI * dt).sqrt();
            Complex64::new(0.0, z * z / (4.0 * dt)).exp() / root
        }
    })
}

/// ∂/∂y of the free kernel.
pub fn free_kernel_dy(y: f64, t: f64, x: f64, s: f64, axis: TimeAxis) -> Result<Complex64> {
    let dt = elapsed(t, s)?;
    let z = y - x;
    let base = free_kernel(y, t, x, s, axis)?;
    if base == Complex64::new(0.0, 0.0) {
        return Ok(base);
    }
    Ok(match axis {
        TimeAxis::Imaginary => -z / (2.0 * dt) * base,
        TimeAxis::Real => Complex64::new(0.0, z / (2.0 * dt)) * base,
    })
}

/// Mirror-kernel coefficient 4c/(4+c²) of the same-side quadrants.
pub(crate) fn mirror_coeff(c: f64) -> f64 {
    4.0 * c / (4.0 + c * c)
}

/// Direct-kernel correction −2c²/(4+c²) of the cross-side quadrants.
pub(crate) fn cross_coeff(c: f64) -> f64 {
    -2.0 * c * c / (4.0 + c * c)
}

/// Exact propagator for the coupling-c delta-prime interaction.
///
/// The correction to the free kernel depends only on the quadrant of
/// (x, y): a mirror kernel with coefficient ±4c/(4+c²) on the same side,
/// and a rescaling by 1 − 2c²/(4+c²) across the origin. The coefficients
/// are identical on both time axes.
pub fn delta_prime_propagator(
    c: f64,
    y: f64,
    t: f64,
    x: f64,
    s: f64,
    axis: TimeAxis,
) -> Result<Complex64> {
    if x == 0.0 || y == 0.0 {
        return Err(Error::OnBoundary);
    }
    let direct = free_kernel(y, t, x, s, axis)?;
    Ok(if x > 0.0 && y > 0.0 {
        direct + mirror_coeff(c) * free_kernel(y, t, -x, s, axis)?
    } else if x < 0.0 && y < 0.0 {
        direct - mirror_coeff(c) * free_kernel(y, t, -x, s, axis)?
    } else {
        (1.0 + cross_coeff(c)) * direct
    })
}

/// Analytic one-sided limits y → 0± of the delta-prime propagator and its
/// y-derivative. Satisfies the jump-average conditions with couplings
/// (0, c, 0) to machine precision.
pub fn propagator_boundary_data(
    c: f64,
    t: f64,
    x: f64,
    s: f64,
    axis: TimeAxis,
) -> Result<BoundaryData> {
    if x == 0.0 {
        return Err(Error::OnBoundary);
    }
    let f0 = free_kernel(0.0, t, x, s, axis)?;
    let f1 = free_kernel_dy(0.0, t, x, s, axis)?;
    let m = mirror_coeff(c);
    let d = cross_coeff(c);
    // at y = 0 the direct and mirror kernels coincide; their y-derivatives
    // differ by a sign
    Ok(if x > 0.0 {
        BoundaryData {
            value_plus: (1.0 + m) * f0,
            value_minus: (1.0 + d) * f0,
            deriv_plus: (1.0 - m) * f1,
            deriv_minus: (1.0 + d) * f1,
        }
    } else {
        BoundaryData {
            value_plus: (1.0 + d) * f0,
            value_minus: (1.0 - m) * f0,
            deriv_plus: (1.0 + d) * f1,
            deriv_minus: (1.0 + m) * f1,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interaction::{check_jump_average, PointInteraction};
    use crate::quad::integrate;

    #[test]
    fn heat_kernel_integrates_to_one() {
        let r = integrate(
            |y| free_kernel(y, 1.0, 0.3, 0.0, TimeAxis::Imaginary).unwrap().re,
            -30.0,
            30.0,
            1e-10,
        )
        .unwrap();
        assert!((r.value - 1.0).abs() < 1e-8);
    }

    #[test]
    fn heat_kernel_semigroup_property() {
        // ∫ p(y, t|z, u) p(z, u|x, s) dz = p(y, t|x, s)
        let (y, x) = (0.7, -0.4);
        let direct = free_kernel(y, 2.0, x, 0.0, TimeAxis::Imaginary).unwrap().re;
        let r = integrate(
            |z| {
                free_kernel(y, 2.0, z, 0.8, TimeAxis::Imaginary).unwrap().re
                    * free_kernel(z, 0.8, x, 0.0, TimeAxis::Imaginary).unwrap().re
            },
            -40.0,
            40.0,
            1e-10,
        )
        .unwrap();
        assert!((r.value - direct).abs() < 1e-8);
    }

    #[test]
    fn real_kernel_magnitude_at_coincidence() {
        let v = free_kernel(0.4, 1.0 / (4.0 * PI), 0.4, 0.0, TimeAxis::Real).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_time_order() {
        assert!(matches!(
            free_kernel(0.0, 1.0, 0.0, 1.0, TimeAxis::Real),
            Err(Error::InvalidTimeOrder { .. })
        ));
    }

    #[test]
    fn opaque_at_critical_coupling() {
        for c in [2.0, -2.0] {
            let v = delta_prime_propagator(c, -0.6, 1.0, 0.9, 0.0, TimeAxis::Imaginary).unwrap();
            assert_eq!(v, Complex64::new(0.0, 0.0));
            let v = delta_prime_propagator(c, 0.6, 1.5, -0.9, 0.0, TimeAxis::Real).unwrap();
            assert!(v.norm() < 1e-16);
        }
    }

    #[test]
    fn zero_coupling_is_free() {
        for axis in [TimeAxis::Real, TimeAxis::Imaginary] {
            let v = delta_prime_propagator(0.0, 0.8, 1.0, -0.3, 0.0, axis).unwrap();
            let f = free_kernel(0.8, 1.0, -0.3, 0.0, axis).unwrap();
            assert_eq!(v, f);
        }
    }

    #[test]
    fn critical_couplings_are_method_of_images() {
        // c = +2: kernel + mirror (reflecting at 0+); c = −2: kernel − mirror
        for (c, sign) in [(2.0, 1.0), (-2.0, -1.0)] {
            let v = delta_prime_propagator(c, 0.5, 1.0, 1.2, 0.0, TimeAxis::Imaginary).unwrap();
            let expect = free_kernel(0.5, 1.0, 1.2, 0.0, TimeAxis::Imaginary).unwrap()
                + sign * free_kernel(0.5, 1.0, -1.2, 0.0, TimeAxis::Imaginary).unwrap();
            assert!((v - expect).norm() < 1e-15);
        }
    }

    #[test]
    fn boundary_data_satisfies_jump_average() {
        for axis in [TimeAxis::Real, TimeAxis::Imaginary] {
            for c in [0.0, 0.7, -1.3, 2.0, -2.0] {
                for x in [0.8, -1.1] {
                    let bd = propagator_boundary_data(c, 1.0, x, 0.0, axis).unwrap();
                    let pi = PointInteraction::from_real(0.0, c, 0.0);
                    let report = check_jump_average(&bd, &pi, 1e-13);
                    assert!(
                        report.pass,
                        "axis {axis:?}, c = {c}, x = {x}: residuals {:?}",
                        (report.deriv_residual, report.value_residual)
                    );
                }
            }
        }
    }

    #[test]
    fn critical_coupling_boundary_degenerates_to_dirichlet_neumann() {
        // c = 2, x > 0: psi(0−) = 0 and psi'(0+) = 0
        let bd = propagator_boundary_data(2.0, 1.0, 1.0, 0.0, TimeAxis::Imaginary).unwrap();
        assert!(bd.value_minus.norm() < 1e-16);
        assert!(bd.deriv_plus.norm() < 1e-16);
    }

    #[test]
    fn quadrant_coefficients_have_definite_parity() {
        for c in [0.3, 1.0, 1.9, 2.0, 5.0] {
            assert_eq!(mirror_coeff(-c), -mirror_coeff(c));
            assert_eq!(cross_coeff(-c), cross_coeff(c));
        }
    }

    #[test]
    fn imaginary_time_mass_splits_by_coupling_sign() {
        // total mass ∫ψ dy equals 1 + (±4c − 2c²)/(4 + c²) · P(crossing);
        // it is exactly 1 at c = 0 and c = ±2, below 1 when the source sits
        // on the absorbing side (c·x < 0), above 1 on the reflecting side
        let mass = |c: f64, x: f64, t: f64| {
            let half = |a: f64, b: f64| {
                integrate(
                    |y| {
                        delta_prime_propagator(c, y, t, x, 0.0, TimeAxis::Imaginary)
                            .unwrap()
                            .re
                    },
                    a,
                    b,
                    1e-10,
                )
                .unwrap()
                .value
            };
            half(-40.0, 0.0) + half(0.0, 40.0)
        };
        for (c, x, t) in [(0.0, 0.7, 1.0), (0.0, -0.3, 0.5), (2.0, 0.4, 2.0), (-2.0, -1.5, 1.0)] {
            let m = mass(c, x, t);
            assert!((m - 1.0).abs() < 1e-8, "c = {c}, x = {x}: mass {m}");
        }
        assert!(mass(-2.0, 1.5, 1.0) < 1.0 - 1e-3);
        assert!(mass(2.0, -0.4, 1.0) < 1.0 - 1e-3);
        assert!(mass(-1.3, 1.1, 0.5) < 1.0 - 1e-3);
        assert!(mass(1.0, -0.7, 1.0) < 1.0 - 1e-3);
        assert!(mass(1.0, 0.7, 1.0) > 1.0 + 1e-3);
        assert!(mass(-1.3, -1.1, 0.5) > 1.0 + 1e-3);
    }
}
