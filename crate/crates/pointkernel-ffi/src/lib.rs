//! C ABI for the pointkernel library.
//!
//! Interactions are passed as opaque handles allocated by
//! `pk_interaction_new` (or `pk_super_singular_new`) and released with
//! `pk_interaction_free`. Every fallible call returns a `PkStatus`; outputs
//! are written through caller-provided pointers only on `PK_STATUS_OK`.
//!
//! The matching header lives in `include/pointkernel.h` and is regenerated
//! with `cargo build -p pointkernel-ffi --features generate-header`.

// negated comparisons like !(tol > 0.0) are deliberate: they reject NaN too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use num_complex::Complex64;

use pointkernel::born::born_partial_sum;
use pointkernel::convert::{
    from_connected, from_separated, to_connected, to_separated, ConnectedSae, RobinPair,
    SeparatedSae,
};
use pointkernel::error::Error;
use pointkernel::interaction::{check_jump_average, BoundaryData, PointInteraction};
use pointkernel::propagator::{
    delta_prime_propagator, free_kernel, propagator_boundary_data, TimeAxis,
};
use pointkernel::scatter::{
    scattering, solve_stationary, super_singular_interaction, transmission_probability, Direction,
    SuperSingularSpec,
};

/// Opaque point-interaction handle.
pub struct PkInteraction(PointInteraction);

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotConnected = 3,
    NotSeparated = 4,
    NotRepresentable = 5,
    OnBoundary = 6,
    InvalidTimeOrder = 7,
    SingularSystem = 8,
    NumericalFailure = 9,
}

/// Time axis selector for the kernels.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkTimeAxis {
    Real = 0,
    Imaginary = 1,
}

impl From<PkTimeAxis> for TimeAxis {
    fn from(axis: PkTimeAxis) -> Self {
        match axis {
            PkTimeAxis::Real => TimeAxis::Real,
            PkTimeAxis::Imaginary => TimeAxis::Imaginary,
        }
    }
}

/// Incoming direction of the scattering ansatz.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkDirection {
    LeftIncoming = 0,
    RightIncoming = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PkComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for PkComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<PkComplex> for Complex64 {
    fn from(z: PkComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Scattering coefficients at one wavenumber.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PkScattering {
    pub t_plus: PkComplex,
    pub t_minus: PkComplex,
    pub r_plus: PkComplex,
    pub r_minus: PkComplex,
    pub transmission: f64,
    pub unitarity_defect: f64,
}

/// One-sided boundary values and derivatives at the origin.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PkBoundaryData {
    pub value_plus: PkComplex,
    pub value_minus: PkComplex,
    pub deriv_plus: PkComplex,
    pub deriv_minus: PkComplex,
}

/// Connected boundary-condition form: phase and unimodular matrix.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PkConnected {
    pub theta: f64,
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

/// Separated boundary-condition form: normalized projective Robin pairs
/// p·u'(0±) = q·u(0±).
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PkSeparated {
    pub p_plus: f64,
    pub q_plus: f64,
    pub p_minus: f64,
    pub q_minus: f64,
}

fn status_of(err: &Error) -> PkStatus {
    match err {
        Error::NotConnected { .. } => PkStatus::NotConnected,
        Error::NotSeparated { .. } => PkStatus::NotSeparated,
        Error::NotRepresentable { .. } => PkStatus::NotRepresentable,
        Error::OnBoundary => PkStatus::OnBoundary,
        Error::InvalidTimeOrder { .. } => PkStatus::InvalidTimeOrder,
        Error::SingularSystem => PkStatus::SingularSystem,
        Error::QuadratureFailure { .. } | Error::ExtrapolationUnstable { .. } => {
            PkStatus::NumericalFailure
        }
        _ => PkStatus::InvalidArgument,
    }
}

/// Allocates an interaction with couplings (c1, c2_re + i·c2_im, c3).
/// Returns null if any coupling is non-finite.
#[no_mangle]
pub extern "C" fn pk_interaction_new(
    c1: f64,
    c2_re: f64,
    c2_im: f64,
    c3: f64,
) -> *mut PkInteraction {
    let c2 = Complex64::new(c2_re, c2_im);
    if !(c1.is_finite() && c2.is_finite() && c3.is_finite()) {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(PkInteraction(PointInteraction::new(c1, c2, c3))))
}

/// Allocates the energy-dependent interaction of the order-n delta
/// derivative with coupling c at wavenumber k. Returns null on invalid
/// arguments (n < 1 or k <= 0).
#[no_mangle]
pub extern "C" fn pk_super_singular_new(n: u32, c: f64, k: f64) -> *mut PkInteraction {
    if !c.is_finite() {
        return std::ptr::null_mut();
    }
    let Ok(spec) = SuperSingularSpec::new(n, c) else {
        return std::ptr::null_mut();
    };
    match super_singular_interaction(&spec, k) {
        Ok(pi) => Box::into_raw(Box::new(PkInteraction(pi))),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Releases a handle allocated by this library. Null is ignored.
///
/// # Safety
/// `interaction` must be null or a pointer previously returned by
/// `pk_interaction_new`, `pk_super_singular_new`, `pk_interaction_parity`,
/// `pk_from_connected`, or `pk_from_separated`, and not freed twice.
#[no_mangle]
pub unsafe extern "C" fn pk_interaction_free(interaction: *mut PkInteraction) {
    if !interaction.is_null() {
        drop(Box::from_raw(interaction));
    }
}

/// # Safety
/// `interaction` must be a valid handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_interaction_components(
    interaction: *const PkInteraction,
    c1: *mut f64,
    c2_re: *mut f64,
    c2_im: *mut f64,
    c3: *mut f64,
) -> PkStatus {
    if interaction.is_null() || c1.is_null() || c2_re.is_null() || c2_im.is_null() || c3.is_null()
    {
        return PkStatus::NullPointer;
    }
    let pi = &(*interaction).0;
    *c1 = pi.c1;
    *c2_re = pi.c2.re;
    *c2_im = pi.c2.im;
    *c3 = pi.c3;
    PkStatus::Ok
}

/// Writes the connection-matrix determinant c1·c3 + |c2|².
///
/// # Safety
/// `interaction` must be a valid handle; `determinant` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_interaction_determinant(
    interaction: *const PkInteraction,
    determinant: *mut f64,
) -> PkStatus {
    if interaction.is_null() || determinant.is_null() {
        return PkStatus::NullPointer;
    }
    *determinant = (*interaction).0.determinant();
    PkStatus::Ok
}

/// Allocates the parity image (c1, −c2, c3). Returns null on null input.
///
/// # Safety
/// `interaction` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn pk_interaction_parity(
    interaction: *const PkInteraction,
) -> *mut PkInteraction {
    if interaction.is_null() {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(PkInteraction((*interaction).0.parity())))
}

/// Closed-form scattering coefficients at wavenumber k > 0.
///
/// # Safety
/// `interaction` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_scattering(
    interaction: *const PkInteraction,
    k: f64,
    out: *mut PkScattering,
) -> PkStatus {
    if interaction.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    match scattering(&(*interaction).0, k) {
        Ok(s) => {
            *out = PkScattering {
                t_plus: s.t_plus.into(),
                t_minus: s.t_minus.into(),
                r_plus: s.r_plus.into(),
                r_minus: s.r_minus.into(),
                transmission: s.transmission_probability(),
                unitarity_defect: s.unitarity_defect(),
            };
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Transmission probability |T|² at wavenumber k > 0.
///
/// # Safety
/// `interaction` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_transmission_probability(
    interaction: *const PkInteraction,
    k: f64,
    out: *mut f64,
) -> PkStatus {
    if interaction.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    match transmission_probability(&(*interaction).0, k) {
        Ok(p) => {
            *out = p;
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Transmission and reflection from the independent stationary-state solve
/// (left- or right-incoming), together with the boundary data of the state.
///
/// # Safety
/// `interaction` must be a valid handle; out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_solve_stationary(
    interaction: *const PkInteraction,
    k: f64,
    direction: PkDirection,
    transmission: *mut PkComplex,
    reflection: *mut PkComplex,
    boundary: *mut PkBoundaryData,
) -> PkStatus {
    if interaction.is_null() || transmission.is_null() || reflection.is_null() || boundary.is_null()
    {
        return PkStatus::NullPointer;
    }
    let dir = match direction {
        PkDirection::LeftIncoming => Direction::LeftIncoming,
        PkDirection::RightIncoming => Direction::RightIncoming,
    };
    match solve_stationary(&(*interaction).0, k, dir) {
        Ok(state) => {
            *transmission = state.transmission.into();
            *reflection = state.reflection.into();
            *boundary = PkBoundaryData {
                value_plus: state.boundary.value_plus.into(),
                value_minus: state.boundary.value_minus.into(),
                deriv_plus: state.boundary.deriv_plus.into(),
                deriv_minus: state.boundary.deriv_minus.into(),
            };
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Connected form of the interaction; fails with PK_STATUS_NOT_CONNECTED on
/// the separated stratum.
///
/// # Safety
/// `interaction` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_to_connected(
    interaction: *const PkInteraction,
    out: *mut PkConnected,
) -> PkStatus {
    if interaction.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    match to_connected(&(*interaction).0) {
        Ok(conn) => {
            *out = PkConnected {
                theta: conn.theta,
                a11: conn.a11,
                a12: conn.a12,
                a21: conn.a21,
                a22: conn.a22,
            };
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Couplings generating a connected form; writes a new handle into `out`.
///
/// # Safety
/// `connected` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pk_from_connected(
    connected: *const PkConnected,
    out: *mut *mut PkInteraction,
) -> PkStatus {
    if connected.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    let c = &*connected;
    if ![c.theta, c.a11, c.a12, c.a21, c.a22]
        .iter()
        .all(|v| v.is_finite())
    {
        return PkStatus::InvalidArgument;
    }
    let conn = match ConnectedSae::new(c.theta, c.a11, c.a12, c.a21, c.a22) {
        Ok(conn) => conn,
        Err(e) => return status_of(&e),
    };
    match from_connected(&conn) {
        Ok(pi) => {
            *out = Box::into_raw(Box::new(PkInteraction(pi)));
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Separated form of the interaction (normalized projective pairs); fails
/// with PK_STATUS_NOT_SEPARATED off the D = 4, Im c2 = 0 stratum.
///
/// # Safety
/// `interaction` must be a valid handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_to_separated(
    interaction: *const PkInteraction,
    out: *mut PkSeparated,
) -> PkStatus {
    if interaction.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    match to_separated(&(*interaction).0) {
        Ok((sep, _case)) => {
            *out = PkSeparated {
                p_plus: sep.side_plus.p(),
                q_plus: sep.side_plus.q(),
                p_minus: sep.side_minus.p(),
                q_minus: sep.side_minus.q(),
            };
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Couplings generating a separated form; writes a new handle into `out`.
///
/// # Safety
/// `separated` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pk_from_separated(
    separated: *const PkSeparated,
    out: *mut *mut PkInteraction,
) -> PkStatus {
    if separated.is_null() || out.is_null() {
        return PkStatus::NullPointer;
    }
    let s = &*separated;
    let (side_plus, side_minus) = match (
        RobinPair::new(s.p_plus, s.q_plus),
        RobinPair::new(s.p_minus, s.q_minus),
    ) {
        (Ok(p), Ok(m)) => (p, m),
        (Err(e), _) | (_, Err(e)) => return status_of(&e),
    };
    match from_separated(&SeparatedSae {
        side_plus,
        side_minus,
    }) {
        Ok(pi) => {
            *out = Box::into_raw(Box::new(PkInteraction(pi)));
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Free kernel ψ₀(y,t|x,s) on the chosen time axis; requires t > s.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_free_kernel(
    y: f64,
    t: f64,
    x: f64,
    s: f64,
    axis: PkTimeAxis,
    out: *mut PkComplex,
) -> PkStatus {
    if out.is_null() {
        return PkStatus::NullPointer;
    }
    match free_kernel(y, t, x, s, axis.into()) {
        Ok(v) => {
            *out = v.into();
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Exact delta-prime propagator; requires t > s, x ≠ 0, y ≠ 0.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_delta_prime_propagator(
    c: f64,
    y: f64,
    t: f64,
    x: f64,
    s: f64,
    axis: PkTimeAxis,
    out: *mut PkComplex,
) -> PkStatus {
    if out.is_null() {
        return PkStatus::NullPointer;
    }
    match delta_prime_propagator(c, y, t, x, s, axis.into()) {
        Ok(v) => {
            *out = v.into();
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Analytic one-sided limits of the delta-prime propagator at the origin.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_propagator_boundary_data(
    c: f64,
    t: f64,
    x: f64,
    s: f64,
    axis: PkTimeAxis,
    out: *mut PkBoundaryData,
) -> PkStatus {
    if out.is_null() {
        return PkStatus::NullPointer;
    }
    match propagator_boundary_data(c, t, x, s, axis.into()) {
        Ok(bd) => {
            *out = PkBoundaryData {
                value_plus: bd.value_plus.into(),
                value_minus: bd.value_minus.into(),
                deriv_plus: bd.deriv_plus.into(),
                deriv_minus: bd.deriv_minus.into(),
            };
            PkStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Tests the jump-average conditions; writes the larger of the two residual
/// magnitudes and sets `pass` to 1 when both are within `tol`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_check_jump_average(
    boundary: *const PkBoundaryData,
    interaction: *const PkInteraction,
    tol: f64,
    max_residual: *mut f64,
    pass: *mut i32,
) -> PkStatus {
    if boundary.is_null() || interaction.is_null() || max_residual.is_null() || pass.is_null() {
        return PkStatus::NullPointer;
    }
    if !(tol > 0.0) {
        return PkStatus::InvalidArgument;
    }
    let b = &*boundary;
    let bd = BoundaryData {
        value_plus: b.value_plus.into(),
        value_minus: b.value_minus.into(),
        deriv_plus: b.deriv_plus.into(),
        deriv_minus: b.deriv_minus.into(),
    };
    let report = check_jump_average(&bd, &(*interaction).0, tol);
    *max_residual = report.max_residual();
    *pass = report.pass as i32;
    PkStatus::Ok
}

/// Partial sum of the delta-prime Born series as per-quadrant coefficients.
/// `direct` and `mirror` each receive four values in the quadrant order
/// (x>0,y>0), (x>0,y<0), (x<0,y>0), (x<0,y<0).
///
/// # Safety
/// `direct` and `mirror` must point to arrays of at least four doubles.
#[no_mangle]
pub unsafe extern "C" fn pk_born_partial_sum(
    c: f64,
    n_terms: u32,
    direct: *mut f64,
    mirror: *mut f64,
) -> PkStatus {
    if direct.is_null() || mirror.is_null() {
        return PkStatus::NullPointer;
    }
    if !c.is_finite() {
        return PkStatus::InvalidArgument;
    }
    let state = born_partial_sum(c, n_terms as usize);
    for q in 0..4 {
        *direct.add(q) = state.direct[q];
        *mirror.add(q) = state.mirror[q];
    }
    PkStatus::Ok
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn pk_version() -> *const std::os::raw::c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const std::os::raw::c_char
}
