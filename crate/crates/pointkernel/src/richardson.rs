//! One-sided derivatives at the origin from off-origin samples.
//!
//! A function known only on one side of 0 is sampled on stencil nodes
//! i·h (i = 1..m, no node at 0), an interpolating-polynomial derivative
//! estimate is formed for each rung h of a geometric ladder, and the rung
//! sequence is Richardson-extrapolated to h → 0. The returned value is the
//! tableau entry with the smallest neighbour-difference error estimate,
//! which keeps noise-dominated deep rungs from polluting the result.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn signum(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DerivativeEstimate {
    pub value: f64,
    pub error_estimate: f64,
}

/// Weights w such that Σ wᵢ f(i·h) / hᵏ ≈ f⁽ᵏ⁾(0) with truncation O(h^(m−k)).
///
/// Computed exactly: wᵢ = k! · [zᵏ] ℓᵢ(z) on the integer nodes 1..m, with the
/// Lagrange numerators expanded in i128 so the only rounding is the final
/// division.
fn stencil_weights(m: usize, k: usize) -> Vec<f64> {
    assert!(k < m && m <= 12, "stencil supports k < m <= 12");
    let mut weights = Vec::with_capacity(m);
    for i in 1..=m as i128 {
        // numerator poly: product over j != i of (z - j)
        let mut poly: Vec<i128> = vec![1];
        let mut denom: i128 = 1;
        for j in 1..=m as i128 {
            if j == i {
                continue;
            }
            denom *= i - j;
            let mut next = vec![0; poly.len() + 1];
            for (d, &coeff) in poly.iter().enumerate() {
                next[d + 1] += coeff;
                next[d] -= j * coeff;
            }
            poly = next;
        }
        let mut kfact: i128 = 1;
        for f in 2..=k as i128 {
            kfact *= f;
        }
        weights.push((kfact * poly[k]) as f64 / denom as f64);
    }
    weights
}

fn is_geometric(ladder: &[f64]) -> bool {
    if ladder.len() < 2 || ladder.iter().any(|&h| !(h > 0.0) || !h.is_finite()) {
        return false;
    }
    let r = ladder[1] / ladder[0];
    if !(r > 0.0 && r < 1.0) {
        return false;
    }
    ladder
        .windows(2)
        .all(|w| (w[1] / w[0] - r).abs() <= 1e-12 * r)
}

/// Estimates f⁽ᵏ⁾(0±) for `order` = k from samples strictly on `side`.
///
/// `ladder` must be geometric and strictly decreasing; `stencil_order` is the
/// truncation order of the per-rung estimate (error O(h^stencil_order)).
pub fn one_sided_derivative<F: FnMut(f64) -> f64>(
    mut f: F,
    side: Side,
    order: u32,
    ladder: &[f64],
    stencil_order: u32,
) -> Result<DerivativeEstimate> {
    if !is_geometric(ladder) {
        return Err(Error::InvalidLadder);
    }
    let k = order as usize;
    let q = (stencil_order as usize).max(2);
    let m = k + q;
    let weights = stencil_weights(m, k);
    let sgn = side.signum();
    // derivative of the interpolant through mirrored nodes picks up (−1)^k
    let parity = if k % 2 == 1 { sgn } else { 1.0 };

    let raw: Vec<f64> = ladder
        .iter()
        .map(|&h| {
            let mut acc = 0.0;
            for (i, &w) in weights.iter().enumerate() {
                acc += w * f(sgn * (i + 1) as f64 * h);
            }
            parity * acc / h.powi(k as i32)
        })
        .collect();

    let ratio = ladder[1] / ladder[0];
    let mut best = *raw.last().expect("ladder nonempty");
    let mut best_err = f64::INFINITY;
    for w in raw.windows(2) {
        let diff = (w[1] - w[0]).abs();
        if diff < best_err {
            best_err = diff;
            best = w[1];
        }
    }

    // Neville tableau: stage s removes the h^(q+s−1) error term
    let mut prev = raw;
    for stage in 1..prev.len() {
        let p = (q + stage - 1) as i32;
        let fac = ratio.powi(-p);
        let cur: Vec<f64> = prev
            .windows(2)
            .map(|w| (fac * w[1] - w[0]) / (fac - 1.0))
            .collect();
        for (j, &value) in cur.iter().enumerate() {
            let err = (value - prev[j]).abs() + (value - prev[j + 1]).abs();
            if err < best_err {
                best_err = err;
                best = value;
            }
        }
        prev = cur;
    }

    Ok(DerivativeEstimate {
        value: best,
        error_estimate: best_err,
    })
}
