//! Numeric Legendre transform `Ã(t) = sup{τt − A(τ) : τ ≥ 0}`.
//!
//! The objective `τ ↦ τt − A(τ)` is concave, hence unimodal on any
//! monotone reparametrization of the axis. The default path scans a
//! logarithmic grid (400 points per decade over `[1e−10, 1e10]`) and
//! refines around the bracketed maximizer by golden section. When the
//! input is itself a numeric conjugate (each evaluation is an inner
//! optimization), the scan is replaced by golden section over the
//! same bracket — same maximizer, far fewer inner evaluations.

use super::{YoungFunction, SATURATION};
use crate::error::{Error, Result};
use crate::quad::golden_max;

const TAU_LO: f64 = 1e-10;
const TAU_HI: f64 = 1e10;
const PER_DECADE: usize = 400;
const GOLDEN_ITERS: usize = 90;

#[inline]
fn objective(f: &YoungFunction, t: f64, tau: f64) -> f64 {
    tau * t - f.value(tau)
}

/// Scan the grid, returning (best index, best τ, best value, grid step factor).
fn scan(f: &YoungFunction, t: f64) -> (usize, f64, f64, f64) {
    let decades = (TAU_HI / TAU_LO).log10();
    let n = (decades * PER_DECADE as f64) as usize;
    let step = 10f64.powf(decades / n as f64);
    let mut tau = TAU_LO;
    let mut best = (0usize, TAU_LO, objective(f, t, TAU_LO));
    for i in 1..=n {
        tau *= step;
        let g = objective(f, t, tau);
        if g > best.2 {
            best = (i, tau, g);
        }
    }
    (best.0, best.1, best.2, step)
}

fn refine(f: &YoungFunction, t: f64, lo: f64, hi: f64) -> (f64, f64) {
    // golden section in ln τ; the objective is unimodal there
    let g = |u: f64| objective(f, t, u.exp());
    let (u, v) = golden_max(&g, lo.ln(), hi.ln(), GOLDEN_ITERS);
    (u.exp(), v)
}

fn transform(f: &YoungFunction, t: f64) -> Result<(f64, f64)> {
    debug_assert!(t > 0.0);
    let (arg, val) = if f.is_expensive() {
        refine(f, t, TAU_LO, TAU_HI)
    } else {
        let (_, tau, _, step) = scan(f, t);
        refine(f, t, tau / step, (tau * step).min(TAU_HI))
    };
    // Supremum still climbing at the upper bracket end: the transform
    // is infinite at this point (A has at most linear growth there).
    if arg > TAU_HI * 0.5 {
        let g_end = objective(f, t, TAU_HI);
        if g_end >= val * (1.0 - 1e-12) && t > f.deriv(TAU_HI) {
            return Err(Error::ConjugateInfinite { t });
        }
    }
    // τ = 0 is admissible and gives 0.
    Ok((arg, val.max(0.0).min(SATURATION)))
}

/// `Ã(t)` for `t > 0`.
pub(crate) fn conjugate_value(f: &YoungFunction, t: f64) -> Result<f64> {
    transform(f, t).map(|(_, v)| v)
}

/// The maximizer `τ*(t)`, which is the derivative of the conjugate.
pub(crate) fn conjugate_argmax(f: &YoungFunction, t: f64) -> f64 {
    transform(f, t).map(|(a, _)| a).unwrap_or(SATURATION)
}

/// Conjugate on an increasing grid of evaluation points.
///
/// The maximizer is nondecreasing in `t`, so a single sweep with a
/// marching grid pointer covers the whole table; each point still
/// gets its golden refinement.
pub(crate) fn conjugate_table(f: &YoungFunction, ts: &[f64]) -> Vec<f64> {
    debug_assert!(ts.windows(2).all(|w| w[1] > w[0]));
    let decades = (TAU_HI / TAU_LO).log10();
    let n = (decades * PER_DECADE as f64) as usize;
    let step = 10f64.powf(decades / n as f64);
    let taus: Vec<f64> = (0..=n).map(|i| TAU_LO * step.powi(i as i32)).collect();

    let mut out = Vec::with_capacity(ts.len());
    let mut j = 0usize;
    for &t in ts {
        if t <= 0.0 {
            out.push(0.0);
            continue;
        }
        while j + 1 < taus.len() && objective(f, t, taus[j + 1]) >= objective(f, t, taus[j]) {
            j += 1;
        }
        let lo = taus[j.saturating_sub(1)];
        let hi = taus[(j + 1).min(taus.len() - 1)];
        let (_, v) = refine(f, t, lo, hi);
        out.push(v.max(0.0).min(SATURATION));
    }
    out
}
