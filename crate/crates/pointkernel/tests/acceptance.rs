//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `--nocapture` to see them all).

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pointkernel::born::{born_step, born_step_oracle, closed_form_state, BornSeries, QuadrantKernelState};
use pointkernel::convert::{
    from_connected, from_separated, separated_indicator, to_connected, to_separated, ConnectedSae,
    RobinPair, SeparatedCase, SeparatedSae,
};
use pointkernel::interaction::{check_jump_average, PointInteraction};
use pointkernel::propagator::{propagator_boundary_data, Probe, TimeAxis};
use pointkernel::scatter::{
    check_griffiths_form, scattering, solve_stationary, super_singular_interaction, transmission_probability,
    Direction, SuperSingularSpec,
};
use pointkernel::verify::{
    fd_boundary_check, integral_equation_residual, layer_jump_check, JumpProbe, PolynomialDensity,
};

fn report(number: u32, name: &str, pass: bool, detail: &str, started: Instant, limit_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("acceptance {number:02} {name}: {verdict} ({detail}; {elapsed:.2}s, limit {limit_s}s)");
    assert!(pass, "criterion {number} failed: {detail}");
    assert!(
        elapsed < limit_s,
        "criterion {number} exceeded its runtime limit: {elapsed:.2}s >= {limit_s}s"
    );
}

fn random_interaction(rng: &mut ChaCha8Rng, scale: f64) -> PointInteraction {
    let c2 = loop {
        let c = Complex64::new(
            rng.random_range(-scale..=scale),
            rng.random_range(-scale..=scale),
        );
        if c.norm() <= scale {
            break c;
        }
    };
    PointInteraction::new(
        rng.random_range(-scale..=scale),
        c2,
        rng.random_range(-scale..=scale),
    )
}

/// k in (0, 20]
fn random_wavenumber(rng: &mut ChaCha8Rng) -> f64 {
    20.0 * (1.0 - rng.random::<f64>())
}

#[test]
fn acceptance_01_unitarity_sweep() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0_f64;
    for _ in 0..10_000 {
        let pi = random_interaction(&mut rng, 50.0);
        let k = random_wavenumber(&mut rng);
        worst = worst.max(scattering(&pi, k).unwrap().unitarity_defect());
    }
    report(
        1,
        "unitarity sweep (10000 draws)",
        worst <= 1e-12,
        &format!("max-entry |S S† − I| = {worst:.3e} <= 1e-12"),
        started,
        5.0,
    );
}

#[test]
fn acceptance_02_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let pi = random_interaction(&mut rng, 50.0);
        let k = random_wavenumber(&mut rng);
        let s = scattering(&pi, k).unwrap();
        let left = solve_stationary(&pi, k, Direction::LeftIncoming).unwrap();
        let right = solve_stationary(&pi, k, Direction::RightIncoming).unwrap();
        worst = worst
            .max((left.transmission - s.t_plus).norm())
            .max((left.reflection - s.r_plus).norm())
            .max((right.transmission - s.t_minus).norm())
            .max((right.reflection - s.r_minus).norm());
    }
    let mut worst_super = 0.0_f64;
    for n in 1..=6 {
        for c in [-1.0, -0.3, 0.3, 1.0] {
            for k in [0.5, 1.0, 2.0] {
                let spec = SuperSingularSpec::new(n, c).unwrap();
                let pi = super_singular_interaction(&spec, k).unwrap();
                let s = scattering(&pi, k).unwrap();
                let left = solve_stationary(&pi, k, Direction::LeftIncoming).unwrap();
                let right = solve_stationary(&pi, k, Direction::RightIncoming).unwrap();
                worst_super = worst_super
                    .max((left.transmission - s.t_plus).norm())
                    .max((left.reflection - s.r_plus).norm())
                    .max((right.transmission - s.t_minus).norm())
                    .max((right.reflection - s.r_minus).norm());
            }
        }
    }
    report(
        2,
        "stationary-solve oracle equivalence",
        worst <= 1e-10 && worst_super <= 1e-10,
        &format!("1000 random draws: {worst:.3e}; energy-dependent set: {worst_super:.3e}; tol 1e-10"),
        started,
        5.0,
    );
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> ConnectedSae {
    loop {
        let theta = rng.random_range(-std::f64::consts::PI..=std::f64::consts::PI);
        let a11: f64 = rng.random_range(-3.0..=3.0);
        if a11.abs() < 0.3 {
            continue;
        }
        let a12 = rng.random_range(-3.0..=3.0);
        let a21 = rng.random_range(-3.0..=3.0);
        let a22 = (1.0 + a12 * a21) / a11;
        let sae = ConnectedSae::new(theta, a11, a12, a21, a22).unwrap();
        // stay clear of the unreachable stratum
        if (sae.a11 + sae.a22 + 2.0 * sae.theta.cos()).abs() > 1e-3 {
            return sae;
        }
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let d = (a - b).rem_euclid(two_pi);
    d.min(two_pi - d)
}

/// Coordinate distance between connected forms, modulo the double cover
/// (θ, A) ~ (θ ± π, −A) of the same boundary condition.
fn connected_distance(lhs: &ConnectedSae, rhs: &ConnectedSae) -> f64 {
    let direct = circular_distance(lhs.theta, rhs.theta)
        .max((lhs.a11 - rhs.a11).abs())
        .max((lhs.a12 - rhs.a12).abs())
        .max((lhs.a21 - rhs.a21).abs())
        .max((lhs.a22 - rhs.a22).abs());
    let flipped = circular_distance(lhs.theta + std::f64::consts::PI, rhs.theta)
        .max((lhs.a11 + rhs.a11).abs())
        .max((lhs.a12 + rhs.a12).abs())
        .max((lhs.a21 + rhs.a21).abs())
        .max((lhs.a22 + rhs.a22).abs());
    direct.min(flipped)
}

fn random_robin_pair(rng: &mut ChaCha8Rng) -> RobinPair {
    let angle = rng.random_range(-std::f64::consts::FRAC_PI_2..=std::f64::consts::FRAC_PI_2);
    RobinPair::new(angle.cos(), angle.sin()).unwrap()
}

#[test]
fn acceptance_03_conversion_round_trips() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    let mut worst_connected = 0.0_f64;
    let mut done = 0;
    while done < 1000 {
        let pi = random_interaction(&mut rng, 5.0);
        if separated_indicator(&pi) < 1e-6 {
            continue;
        }
        done += 1;
        // couplings -> connected -> couplings
        let conn = to_connected(&pi).unwrap();
        assert!((conn.det() - 1.0).abs() <= 1e-12 * (1.0 + conn.a11.abs().max(conn.a22.abs()).powi(2)));
        let back = from_connected(&conn).unwrap();
        worst_connected = worst_connected
            .max((back.c1 - pi.c1).abs())
            .max((back.c2 - pi.c2).norm())
            .max((back.c3 - pi.c3).abs());
        // connected -> couplings -> connected, modulo the (θ, A) ~ (θ±π, −A)
        // double cover of the same boundary condition
        let conn = random_unimodular(&mut rng);
        let pi2 = from_connected(&conn).unwrap();
        let conn2 = to_connected(&pi2).unwrap();
        worst_connected = worst_connected.max(connected_distance(&conn2, &conn));
    }

    let mut worst_separated = 0.0_f64;
    let mut done = 0;
    while done < 1000 {
        let side_plus = random_robin_pair(&mut rng);
        let side_minus = random_robin_pair(&mut rng);
        if side_plus.cross(&side_minus).abs() < 1e-3 {
            continue;
        }
        done += 1;
        let sep = SeparatedSae {
            side_plus,
            side_minus,
        };
        let pi = from_separated(&sep).unwrap();
        let (back, _) = to_separated(&pi).unwrap();
        worst_separated = worst_separated
            .max((back.side_plus.p() - sep.side_plus.p()).abs())
            .max((back.side_plus.q() - sep.side_plus.q()).abs())
            .max((back.side_minus.p() - sep.side_minus.p()).abs())
            .max((back.side_minus.q() - sep.side_minus.q()).abs());
    }

    // the three tabulated separated cases
    let (sep, case) = to_separated(&PointInteraction::from_real(3.0, 2.0, 0.0)).unwrap();
    let case1_ok = case == SeparatedCase::ValueFromSlope
        && sep.side_minus.is_dirichlet()
        && (sep.side_plus.value_coefficient().unwrap() - 4.0 / 3.0).abs() < 1e-15;
    let (sep, case) = to_separated(&PointInteraction::from_real(0.0, 2.0, 5.0)).unwrap();
    let case2_ok = case == SeparatedCase::SlopeFromValue
        && sep.side_plus.is_neumann()
        && (sep.side_minus.slope_coefficient().unwrap() + 4.0 / 5.0).abs() < 1e-15;
    let (sep_p, _) = to_separated(&PointInteraction::from_real(0.0, 2.0, 0.0)).unwrap();
    let (sep_m, _) = to_separated(&PointInteraction::from_real(0.0, -2.0, 0.0)).unwrap();
    let case3_ok = sep_p.side_plus == RobinPair::neumann()
        && sep_p.side_minus == RobinPair::dirichlet()
        && sep_m.side_plus == RobinPair::dirichlet()
        && sep_m.side_minus == RobinPair::neumann();

    report(
        3,
        "conversion round-trips",
        worst_connected <= 1e-10 && worst_separated <= 1e-10 && case1_ok && case2_ok && case3_ok,
        &format!(
            "connected {worst_connected:.3e}, separated {worst_separated:.3e} (tol 1e-10); tabulated cases {}",
            case1_ok && case2_ok && case3_ok
        ),
        started,
        2.0,
    );
}

#[test]
fn acceptance_04_closed_form_transmissions() {
    let started = Instant::now();
    let first = transmission_probability(&PointInteraction::from_real(2.0, 0.0, 0.0), 1.0).unwrap();
    let third = transmission_probability(&PointInteraction::from_real(0.0, 0.0, 2.0), 1.0).unwrap();
    let imag =
        transmission_probability(&PointInteraction::new(0.0, Complex64::new(0.0, 2.0), 0.0), 1.0)
            .unwrap();
    let blocked_p = transmission_probability(&PointInteraction::from_real(0.0, 2.0, 0.0), 1.0).unwrap();
    let blocked_m =
        transmission_probability(&PointInteraction::from_real(0.0, -2.0, 0.0), 1.0).unwrap();
    let pass = (first - 0.5).abs() <= 1e-12
        && (third - 0.5).abs() <= 1e-12
        && (imag - 1.0).abs() <= 1e-12
        && blocked_p.abs() <= 1e-12
        && blocked_m.abs() <= 1e-12;
    report(
        4,
        "closed-form transmission values",
        pass,
        &format!("c1: {first}, c3: {third}, 2i: {imag}, ±2: {blocked_p}/{blocked_m}; tol 1e-12"),
        started,
        5.0,
    );
}

#[test]
fn acceptance_05_born_series_reproduction() {
    let started = Instant::now();

    // the five displayed terms, exact for dyadic couplings
    let c = 1.0;
    let series = BornSeries::new(c, 5);
    let tables_ok = series.terms[0].mirror == [-c, 0.0, 0.0, c]
        && series.terms[0].is_pure_mirror()
        && series.terms[1].direct == [0.0, -c * c / 2.0, -c * c / 2.0, 0.0]
        && series.terms[1].is_pure_direct()
        && series.terms[2].mirror == [c.powi(3) / 4.0, 0.0, 0.0, -c.powi(3) / 4.0]
        && series.terms[3].direct == [0.0, c.powi(4) / 8.0, c.powi(4) / 8.0, 0.0]
        && series.terms[4].mirror == [-c.powi(5) / 16.0, 0.0, 0.0, c.powi(5) / 16.0];

    let mut bound_ok = true;
    let mut worst_ratio = 0.0_f64;
    for c in [0.5, 1.0, 1.5] {
        let closed = closed_form_state(c);
        let series = BornSeries::new(c, 30);
        for n in 1..=30 {
            let err = series.partial_sum(n).max_difference(&closed);
            let bound = 4.0 * (c.abs() / 2.0).powi(n as i32 + 1);
            bound_ok &= err <= bound;
            worst_ratio = worst_ratio.max(err / bound);
        }
    }
    report(
        5,
        "Born-series reproduction",
        tables_ok && bound_ok,
        &format!("term tables exact: {tables_ok}; partial-sum error <= 4(|c|/2)^(n+1), worst ratio {worst_ratio:.3}"),
        started,
        1.0,
    );
}

#[test]
fn acceptance_06_born_quadrature_oracle() {
    let started = Instant::now();
    let c = 1.0;
    let psi0 = QuadrantKernelState::free();
    let psi1 = born_step(&psi0, c).unwrap();
    let psi2 = born_step(&psi1, c).unwrap();
    let probes = [
        Probe::new(1.0, 1.0, 1.0, 0.0),
        Probe::new(0.5, 2.0, 1.0, 0.0),
        Probe::new(-0.7, 1.5, 1.2, 0.0),
        Probe::new(1.0, 1.0, -1.0, 0.0),
        Probe::new(-0.5, 0.8, -0.9, 0.0),
    ];
    let mut worst = 0.0_f64;
    for probe in &probes {
        for (prev, next) in [(&psi0, &psi1), (&psi1, &psi2)] {
            let numeric = born_step_oracle(prev, c, probe).unwrap();
            let analytic = next
                .evaluate(probe.y(), probe.t(), probe.x(), probe.s(), TimeAxis::Imaginary)
                .unwrap()
                .re;
            worst = worst.max((numeric - analytic).abs());
        }
    }
    report(
        6,
        "Born quadrature oracle",
        worst <= 1e-6,
        &format!("max |numeric − analytic| = {worst:.3e} <= 1e-6 over 5 probes × 2 steps"),
        started,
        10.0,
    );
}

#[test]
fn acceptance_07_integral_equation_residual() {
    let started = Instant::now();
    let mut probes = Vec::new();
    for &y in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
        for &x in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
            probes.push(Probe::new(y, 1.0, x, 0.0));
        }
    }
    let mut worst = 0.0_f64;
    for c in [0.5, 1.0, 2.0, -2.0] {
        worst = worst.max(integral_equation_residual(c, &probes).unwrap());
    }
    report(
        7,
        "integral-equation residual",
        worst <= 1e-6,
        &format!("max residual {worst:.3e} <= 1e-6 over the probe grid, c in {{0.5, 1, 2, -2}}"),
        started,
        30.0,
    );
}

#[test]
fn acceptance_08_jump_lemma() {
    let started = Instant::now();
    let probe = JumpProbe::default();
    let constant = PolynomialDensity::constant(1.0);
    let ramp = PolynomialDensity::ramp(0.0);
    let r1 = layer_jump_check(&constant, 3, 1.0, 0.0, &probe, 1e-6).unwrap();
    let r2 = layer_jump_check(&ramp, 3, 1.0, 0.0, &probe, 1e-6).unwrap();
    report(
        8,
        "layer-potential jump lemma",
        r1.pass && r2.pass,
        &format!(
            "max residuals {:.3e} (constant), {:.3e} (ramp) <= 1e-6 up to order 3",
            r1.max_residual, r2.max_residual
        ),
        started,
        10.0,
    );
}

#[test]
fn acceptance_09_dirichlet_neumann_toggle() {
    let started = Instant::now();
    let probe = JumpProbe::default();
    let inside_value = fd_boundary_check(-2.0, 1.0, 1.0, &probe, 1e-8)
        .unwrap()
        .extrapolated
        .value_plus
        .norm();
    let inside_slope = fd_boundary_check(2.0, 1.0, 1.0, &probe, 1e-8)
        .unwrap()
        .extrapolated
        .deriv_plus
        .norm();
    report(
        9,
        "Dirichlet/Neumann sign toggle",
        inside_value <= 1e-8 && inside_slope <= 1e-8,
        &format!("c = −2 inside value {inside_value:.3e}, c = +2 inside slope {inside_slope:.3e}; tol 1e-8"),
        started,
        5.0,
    );
}

#[test]
fn acceptance_10_boundary_condition_consistency() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let c = rng.random_range(-3.0..=3.0);
        let sign = if rng.random_range(0..2) == 0 { 1.0 } else { -1.0 };
        let x = sign * rng.random_range(0.1..=2.0);
        let t = rng.random_range(0.05..=2.0);
        for axis in [TimeAxis::Real, TimeAxis::Imaginary] {
            let bd = propagator_boundary_data(c, t, x, 0.0, axis).unwrap();
            let pi = PointInteraction::from_real(0.0, c, 0.0);
            let rep = check_jump_average(&bd, &pi, 1e-12);
            worst = worst.max(rep.max_residual());
            assert!(rep.pass);
        }
    }
    report(
        10,
        "propagator boundary-condition consistency",
        worst <= 1e-12,
        &format!("max residual {worst:.3e} <= 1e-12 over 100 draws, both axes"),
        started,
        1.0,
    );
}

#[test]
fn acceptance_11_griffiths_form_equivalence() {
    let started = Instant::now();
    let mut all = true;
    let mut worst = 0.0_f64;
    for n in 1..=6 {
        for c in [-2.0, -0.5, 0.5, 2.0] {
            for k in [0.5, 1.0, 3.0] {
                let spec = SuperSingularSpec::new(n, c).unwrap();
                let rep = check_griffiths_form(&spec, k).unwrap();
                all &= rep.pass;
                worst = worst.max(rep.deriv_residual.max(rep.value_residual));
            }
        }
    }
    report(
        11,
        "derivative-jump form equivalence",
        all,
        &format!("max residual {worst:.3e} over n = 1..6, c in {{±0.5, ±2}}, k in {{0.5, 1, 3}}"),
        started,
        1.0,
    );
}
