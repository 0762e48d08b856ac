//! Conversions between the jump-average couplings and the traditional
//! connected / separated self-adjoint-extension parameterizations.
//!
//! The coupling space splits in two: couplings with
//! (D/4 − 1)² + Im(c2)² > 0 admit the connected form, the rest (D = 4,
//! c2 real) the separated form. Both directions of each conversion are
//! implemented, with the non-representable strata reported as errors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interaction::PointInteraction;

/// Relative threshold deciding membership in the separated stratum and the
/// Δ ≈ 0 singularity of the inverse connected map. Conversions blow up like
/// the reciprocal square root of the stratum indicator, so 1e−9 keeps the
/// amplified rounding below 1e−6.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Connected boundary conditions
/// (u′(0⁺), u(0⁺))ᵀ = e^{iθ} [[a11, a12], [a21, a22]] (u′(0⁻), u(0⁻))ᵀ
/// with real unimodular matrix and phase θ ∈ (−π, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectedSae {
    pub theta: f64,
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

impl ConnectedSae {
    /// Validates unimodularity (det = 1 within 1e−12 of the product scale).
    /// Panics on non-finite inputs.
    pub fn new(theta: f64, a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self> {
        assert!(
            [theta, a11, a12, a21, a22].iter().all(|v| v.is_finite()),
            "connected parameters must be finite"
        );
        let sae = Self {
            theta,
            a11,
            a12,
            a21,
            a22,
        };
        let det = sae.det();
        let scale = 1.0 + (a11 * a22).abs() + (a12 * a21).abs();
        if !det.is_finite() || (det - 1.0).abs() > 1e-12 * scale {
            return Err(Error::NotUnimodular { det });
        }
        Ok(sae)
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }
}

/// Projective Robin pair p·u′(0±) = q·u(0±), normalized to p² + q² = 1 with
/// p ≥ 0, and q ≥ 0 when p = 0. Dirichlet is (0, 1), Neumann is (1, 0);
/// no floating-point infinities are ever needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinPair {
    p: f64,
    q: f64,
}

impl RobinPair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && q.is_finite()) || (p == 0.0 && q == 0.0) {
            return Err(Error::ZeroPair);
        }
        let norm = p.hypot(q);
        let (mut p, mut q) = (p / norm, q / norm);
        if p < 0.0 || (p == 0.0 && q < 0.0) {
            p = -p;
            q = -q;
        }
        // canonicalize -0.0 so identical pairs compare equal
        Ok(Self {
            p: p + 0.0,
            q: q + 0.0,
        })
    }

    /// u(0±) = 0.
    pub fn dirichlet() -> Self {
        Self { p: 0.0, q: 1.0 }
    }

    /// u′(0±) = 0.
    pub fn neumann() -> Self {
        Self { p: 1.0, q: 0.0 }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn is_dirichlet(&self) -> bool {
        self.p == 0.0
    }

    pub fn is_neumann(&self) -> bool {
        self.q == 0.0
    }

    /// Robin coefficient b in u′ = b·u, when finite.
    pub fn slope_coefficient(&self) -> Option<f64> {
        (self.p != 0.0).then(|| self.q / self.p)
    }

    /// Reciprocal coefficient b̃ in u = b̃·u′, when finite.
    pub fn value_coefficient(&self) -> Option<f64> {
        (self.q != 0.0).then(|| self.p / self.q)
    }

    /// Sine of the angle between two normalized pairs; zero iff they impose
    /// the same condition.
    pub fn cross(&self, other: &Self) -> f64 {
        self.p * other.q - self.q * other.p
    }
}

/// Separated boundary conditions: independent Robin pairs on each side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparatedSae {
    pub side_plus: RobinPair,
    pub side_minus: RobinPair,
}

/// Which computation produced a separated form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparatedCase {
    /// u(0±) = b̃± u′(0±) with b̃± = (c2 ± 2)/c1; c3 was eliminated.
    ValueFromSlope,
    /// u′(0±) = b± u(0±) with b± = (±2 − c2)/c3; c1 was eliminated.
    SlopeFromValue,
    /// c1 = c3 = 0, c2 = ±2: Dirichlet on one side, Neumann on the other.
    MixedDirichletNeumann,
}

/// (D/4 − 1)² + Im(c2)²: zero exactly on the separated stratum.
pub fn separated_indicator(pi: &PointInteraction) -> f64 {
    let d4 = pi.determinant() / 4.0;
    (d4 - 1.0).powi(2) + pi.c2.im.powi(2)
}

fn stratum_bound(pi: &PointInteraction) -> f64 {
    DEGENERACY_THRESHOLD.powi(2) * (1.0 + pi.max_coupling().powi(2))
}

fn canonical_angle(theta: f64) -> f64 {
    if theta == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        theta
    }
}

/// Connected form of a point interaction.
///
/// θ is the angle of the point (1 − D/4, Im c2) and the matrix entries share
/// the denominator √((D/4 − 1)² + Im(c2)²). Fails with [`Error::NotConnected`]
/// on the separated stratum.
pub fn to_connected(pi: &PointInteraction) -> Result<ConnectedSae> {
    let indicator = separated_indicator(pi);
    if indicator <= stratum_bound(pi) {
        return Err(Error::NotConnected { indicator });
    }
    let d4 = pi.determinant() / 4.0;
    let den = indicator.sqrt();
    Ok(ConnectedSae {
        theta: canonical_angle(pi.c2.im.atan2(1.0 - d4)),
        a11: (d4 + 1.0 - pi.c2.re) / den,
        a12: pi.c1 / den,
        a21: pi.c3 / den,
        a22: (d4 + 1.0 + pi.c2.re) / den,
    })
}

/// Couplings generating a connected SAE:
/// c1 = 4a12/Δ, c2 = 2(a22 − a11 + 2i sin θ)/Δ, c3 = 4a21/Δ with
/// Δ = a11 + a22 + 2cos θ. SAEs with Δ = 0 are unreachable.
pub fn from_connected(conn: &ConnectedSae) -> Result<PointInteraction> {
    let delta = conn.a11 + conn.a22 + 2.0 * conn.theta.cos();
    if delta.abs() <= DEGENERACY_THRESHOLD * (2.0 + conn.a11.abs() + conn.a22.abs()) {
        return Err(Error::NotRepresentable {
            reason: "a11 + a22 + 2cos(theta) = 0",
        });
    }
    let c1 = 4.0 * conn.a12 / delta;
    let c2 = Complex64::new(
        2.0 * (conn.a22 - conn.a11) / delta,
        4.0 * conn.theta.sin() / delta,
    );
    let c3 = 4.0 * conn.a21 / delta;
    if !(c1.is_finite() && c2.is_finite() && c3.is_finite()) {
        return Err(Error::NotRepresentable {
            reason: "couplings exceed the double-precision range",
        });
    }
    Ok(PointInteraction::new(c1, c2, c3))
}

fn pair_from_value_coefficient(b_tilde: f64) -> RobinPair {
    RobinPair::new(b_tilde, 1.0).expect("finite coefficient")
}

fn pair_from_slope_coefficient(b: f64) -> RobinPair {
    RobinPair::new(1.0, b).expect("finite coefficient")
}

/// Separated form of a point interaction on the D = 4, Im(c2) = 0 stratum.
///
/// Both nonzero-coupling charts are computed when available; they must agree
/// projectively, and the one whose eliminated constant is larger is returned.
pub fn to_separated(pi: &PointInteraction) -> Result<(SeparatedSae, SeparatedCase)> {
    let indicator = separated_indicator(pi);
    if indicator > stratum_bound(pi) {
        return Err(Error::NotSeparated { indicator });
    }
    let c2 = pi.c2.re;
    if pi.c1 == 0.0 && pi.c3 == 0.0 {
        // pure delta-prime stratum point: c2 = ±2
        let sae = if c2 > 0.0 {
            SeparatedSae {
                side_plus: RobinPair::neumann(),
                side_minus: RobinPair::dirichlet(),
            }
        } else {
            SeparatedSae {
                side_plus: RobinPair::dirichlet(),
                side_minus: RobinPair::neumann(),
            }
        };
        return Ok((sae, SeparatedCase::MixedDirichletNeumann));
    }

    let value_chart = (pi.c1 != 0.0).then(|| SeparatedSae {
        side_plus: pair_from_value_coefficient((c2 + 2.0) / pi.c1),
        side_minus: pair_from_value_coefficient((c2 - 2.0) / pi.c1),
    });
    let slope_chart = (pi.c3 != 0.0).then(|| SeparatedSae {
        side_plus: pair_from_slope_coefficient((2.0 - c2) / pi.c3),
        side_minus: pair_from_slope_coefficient((-2.0 - c2) / pi.c3),
    });

    if let (Some(v), Some(s)) = (&value_chart, &slope_chart) {
        debug_assert!(
            v.side_plus.cross(&s.side_plus).abs() <= 1e-10
                && v.side_minus.cross(&s.side_minus).abs() <= 1e-10,
            "separated charts disagree"
        );
    }

    // prefer the chart whose eliminated constant has the larger magnitude
    match (value_chart, slope_chart) {
        (Some(v), Some(_)) if pi.c3.abs() >= pi.c1.abs() => Ok((v, SeparatedCase::ValueFromSlope)),
        (Some(v), None) => Ok((v, SeparatedCase::ValueFromSlope)),
        (_, Some(s)) => Ok((s, SeparatedCase::SlopeFromValue)),
        (None, None) => unreachable!("handled by the pure delta-prime branch"),
    }
}

/// Couplings generating a separated SAE. Sides imposing the same condition
/// (b⁺ = b⁻ projectively) are unreachable.
pub fn from_separated(sep: &SeparatedSae) -> Result<PointInteraction> {
    let cross = sep.side_plus.cross(&sep.side_minus);
    if cross.abs() <= DEGENERACY_THRESHOLD {
        return Err(Error::NotRepresentable {
            reason: "identical Robin pairs on both sides",
        });
    }
    let (pp, qp) = (sep.side_plus.p(), sep.side_plus.q());
    let (pm, qm) = (sep.side_minus.p(), sep.side_minus.q());

    // chart choice: divide by whichever components sit further from zero
    let value_chart_floor = qp.abs().min(qm.abs());
    let slope_chart_floor = pp.abs().min(pm.abs());

    let pi = if value_chart_floor >= slope_chart_floor && value_chart_floor > 0.0 {
        let (btp, btm) = (pp / qp, pm / qm);
        let den = btp - btm;
        PointInteraction::from_real(4.0 / den, 2.0 * (btp + btm) / den, -4.0 * btp * btm / den)
    } else if slope_chart_floor > 0.0 {
        let (bp, bm) = (qp / pp, qm / pm);
        let den = bp - bm;
        PointInteraction::from_real(-4.0 * bp * bm / den, -2.0 * (bp + bm) / den, 4.0 / den)
    } else {
        // one side Dirichlet, the other Neumann
        if sep.side_plus.is_dirichlet() {
            PointInteraction::from_real(0.0, -2.0, 0.0)
        } else {
            PointInteraction::from_real(0.0, 2.0, 0.0)
        }
    };
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn pure_delta_maps_to_shear_matrix() {
        for g in [0.5, -3.0, 12.0] {
            let conn = to_connected(&PointInteraction::from_real(g, 0.0, 0.0)).unwrap();
            assert_eq!(conn.theta, 0.0);
            assert_close(conn.a11, 1.0, 1e-15);
            assert_close(conn.a12, g, 1e-14);
            assert_close(conn.a21, 0.0, 1e-15);
            assert_close(conn.a22, 1.0, 1e-15);
        }
    }

    #[test]
    fn imaginary_c2_maps_to_pure_phase() {
        for beta in [0.7, -2.5] {
            let pi = PointInteraction::new(0.0, Complex64::new(0.0, beta), 0.0);
            let conn = to_connected(&pi).unwrap();
            assert_close(conn.a11, 1.0, 1e-14);
            assert_close(conn.a12, 0.0, 1e-15);
            assert_close(conn.a21, 0.0, 1e-15);
            assert_close(conn.a22, 1.0, 1e-14);
            let expect = beta.atan2(1.0 - beta * beta / 4.0);
            assert_close(conn.theta, expect, 1e-15);
        }
    }

    #[test]
    fn pure_delta_prime_is_not_connected() {
        let err = to_connected(&PointInteraction::from_real(0.0, 2.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotConnected { .. }));
    }

    #[test]
    fn identity_connected_is_free() {
        let conn = ConnectedSae::new(0.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        let pi = from_connected(&conn).unwrap();
        assert_eq!(pi, PointInteraction::free());
    }

    #[test]
    fn negated_identity_is_unreachable() {
        let conn = ConnectedSae::new(0.0, -1.0, 0.0, 0.0, -1.0).unwrap();
        assert!(matches!(
            from_connected(&conn),
            Err(Error::NotRepresentable { .. })
        ));
    }

    #[test]
    fn unimodularity_enforced() {
        assert!(matches!(
            ConnectedSae::new(0.0, 1.0, 1.0, 1.0, 1.0),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn coupling_overflow_is_reported() {
        // unimodular, but a12/Δ overflows the double range
        let conn = ConnectedSae::new(std::f64::consts::PI / 2.0, 1.0, 1e308, 0.0, 1.0).unwrap();
        assert!((conn.det() - 1.0).abs() < 1e-12);
        assert!(matches!(
            from_connected(&conn),
            Err(Error::NotRepresentable {
                reason: "couplings exceed the double-precision range"
            })
        ));
    }

    #[test]
    fn dirichlet_left_robin_right() {
        let (sep, case) = to_separated(&PointInteraction::from_real(3.0, 2.0, 0.0)).unwrap();
        assert_eq!(case, SeparatedCase::ValueFromSlope);
        assert!(sep.side_minus.is_dirichlet());
        assert_close(sep.side_plus.value_coefficient().unwrap(), 4.0 / 3.0, 1e-15);
    }

    #[test]
    fn neumann_right_robin_left() {
        let (sep, case) = to_separated(&PointInteraction::from_real(0.0, 2.0, 5.0)).unwrap();
        assert_eq!(case, SeparatedCase::SlopeFromValue);
        assert!(sep.side_plus.is_neumann());
        assert_close(sep.side_minus.slope_coefficient().unwrap(), -4.0 / 5.0, 1e-15);
    }

    #[test]
    fn pure_delta_prime_separates_mixed() {
        let (sep, case) = to_separated(&PointInteraction::from_real(0.0, -2.0, 0.0)).unwrap();
        assert_eq!(case, SeparatedCase::MixedDirichletNeumann);
        assert!(sep.side_plus.is_dirichlet());
        assert!(sep.side_minus.is_neumann());

        let (sep, _) = to_separated(&PointInteraction::from_real(0.0, 2.0, 0.0)).unwrap();
        assert!(sep.side_plus.is_neumann());
        assert!(sep.side_minus.is_dirichlet());
    }

    #[test]
    fn generic_interaction_is_not_separated() {
        let err = to_separated(&PointInteraction::from_real(1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotSeparated { .. }));
    }

    #[test]
    fn mixed_pairs_recover_pure_delta_prime() {
        let sep = SeparatedSae {
            side_plus: RobinPair::neumann(),
            side_minus: RobinPair::dirichlet(),
        };
        assert_eq!(
            from_separated(&sep).unwrap(),
            PointInteraction::from_real(0.0, 2.0, 0.0)
        );
        let sep = SeparatedSae {
            side_plus: RobinPair::dirichlet(),
            side_minus: RobinPair::neumann(),
        };
        assert_eq!(
            from_separated(&sep).unwrap(),
            PointInteraction::from_real(0.0, -2.0, 0.0)
        );
    }

    #[test]
    fn equal_sides_are_unreachable() {
        let sep = SeparatedSae {
            side_plus: RobinPair::new(1.0, 1.0).unwrap(),
            side_minus: RobinPair::new(2.0, 2.0).unwrap(),
        };
        assert!(matches!(
            from_separated(&sep),
            Err(Error::NotRepresentable { .. })
        ));
    }

    #[test]
    fn separated_output_lies_on_the_stratum() {
        let sep = SeparatedSae {
            side_plus: RobinPair::new(0.3, -1.7).unwrap(),
            side_minus: RobinPair::new(1.1, 0.4).unwrap(),
        };
        let pi = from_separated(&sep).unwrap();
        assert!((pi.determinant() - 4.0).abs() <= 1e-12 * (1.0 + pi.max_coupling().powi(2)));
        assert_eq!(pi.c2.im, 0.0);
    }

    #[test]
    fn theta_pi_is_a_parity_fixed_point() {
        // real c2 with D > 4 lands on θ = π; the parity image must stay in
        // the canonical range (−π, π] rather than flipping to −π
        let pi = PointInteraction::from_real(3.0, 1.0, 2.0);
        assert!(pi.determinant() > 4.0);
        let conn = to_connected(&pi).unwrap();
        assert_eq!(conn.theta, std::f64::consts::PI);
        let conn_p = to_connected(&pi.parity()).unwrap();
        assert_eq!(conn_p.theta, std::f64::consts::PI);
    }

    #[test]
    fn parity_swaps_diagonal_and_reflects_theta() {
        let pi = PointInteraction::new(1.3, Complex64::new(0.4, -0.8), -0.6);
        let conn = to_connected(&pi).unwrap();
        let conn_p = to_connected(&pi.parity()).unwrap();
        assert_close(conn_p.theta, -conn.theta, 1e-15);
        assert_close(conn_p.a11, conn.a22, 1e-15);
        assert_close(conn_p.a22, conn.a11, 1e-15);
        assert_close(conn_p.a12, conn.a12, 1e-15);
        assert_close(conn_p.a21, conn.a21, 1e-15);
    }
}
