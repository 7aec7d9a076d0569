//! The auxiliary Young function `E` and the Morrey modulus `Ψ_s`.
//!
//! Under the supercritical growth condition,
//!
//! ```text
//! E(t) = t^{n/(n−s)} ∫_t^∞ Ã(τ) τ^{−1−n/(n−s)} dτ
//! ```
//!
//! is a finite Young function built from the conjugate `Ã`, and
//!
//! ```text
//! Ψ_s(r) = 1 / (r^{n−s} · E⁻¹(r^{−n}))  ≈  r^s · B⁻¹(r^{−n}),  B = Ẽ
//! ```
//!
//! is the modulus of continuity the Morrey inequality produces.
//!
//! [`e_value`] is the direct single-point route (adaptive quadrature
//! on `[t, T*]` plus a power-law tail beyond `T*`). [`EFunction`]
//! precomputes log-grid tables of `E` and `B` for the batch consumers
//! (Ψ_s sweeps, per-pair Morrey denominators); the two routes are
//! cross-checked in the tests.

use super::check_conditions;
use crate::error::{Error, Result};
use crate::quad::{adaptive_simpson_log, golden_max, log_grid, ls_slope};
use crate::table::LogLogTable;
use crate::young::{YoungFunction, SATURATION};

const TAU_LO: f64 = 1e-7;
const TAU_HI: f64 = 1e12;
const PER_DECADE: usize = 48;

fn exponent_m(n: usize, s: f64) -> f64 {
    n as f64 / (n as f64 - s)
}

/// Conjugate values on a grid, through the closed form when the kind
/// has one.
fn conjugate_values(f: &YoungFunction, taus: &[f64]) -> Vec<f64> {
    let ct = f.conjugate();
    if ct.is_expensive() {
        f.conjugate_on_grid(taus)
    } else {
        taus.iter().map(|&t| ct.value(t)).collect()
    }
}

/// Fitted tail exponent of `Ã` over the top decade of the grid.
fn tail_exponent(taus: &[f64], values: &[f64]) -> f64 {
    let k = PER_DECADE.min(taus.len() - 1);
    let lx: Vec<f64> = taus[taus.len() - k..].iter().map(|t| t.ln()).collect();
    let ly: Vec<f64> = values[values.len() - k..].iter().map(|v| v.max(1e-300).ln()).collect();
    ls_slope(&lx, &ly)
}

/// Single-point `E(t)` by adaptive quadrature on `[t, T*]` with
/// `T* = max(t·1e6, 1e8)` and power-law tail extrapolation beyond.
pub fn e_value(f: &YoungFunction, n: usize, s: f64, t: f64) -> Result<f64> {
    let conds = check_conditions(f, n, s);
    if !conds.supercritical.holds() {
        return Err(Error::SupercriticalConditionViolated);
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidInput(format!("E needs finite t >= 0, got {t}")));
    }
    let m = exponent_m(n, s);
    let ct = f.conjugate();
    let t_star = (t * 1e6).max(1e8);
    let g = |tau: f64| ct.value(tau) * tau.powf(-1.0 - m);
    let integral = adaptive_simpson_log(&g, t, t_star, 1e-9);
    // tail: Ã ~ c τ^σ beyond T*
    let probe = log_grid(t_star / 10.0, t_star, 6);
    let vals: Vec<f64> = probe.iter().map(|&x| ct.value(x)).collect();
    let sigma = tail_exponent(&probe, &vals);
    if sigma >= m - 0.01 {
        return Err(Error::TailInconclusive { slope: sigma, threshold: m });
    }
    let tail = g(t_star) * t_star / (m - sigma);
    Ok(t.powf(m) * (integral + tail))
}

/// Precomputed `E` and `B = Ẽ` on logarithmic grids.
#[derive(Clone, Debug)]
pub struct EFunction {
    n: usize,
    s: f64,
    m: f64,
    e_table: LogLogTable,
    b_table: LogLogTable,
}

impl EFunction {
    pub fn new(f: &YoungFunction, n: usize, s: f64) -> Result<Self> {
        let conds = check_conditions(f, n, s);
        if !conds.supercritical.holds() {
            return Err(Error::SupercriticalConditionViolated);
        }
        let m = exponent_m(n, s);
        let taus = log_grid(TAU_LO, TAU_HI, PER_DECADE);
        let ctilde = conjugate_values(f, &taus);
        if ctilde.iter().any(|&v| v >= SATURATION) {
            return Err(Error::Overflow { threshold: SATURATION });
        }
        let sigma = tail_exponent(&taus, &ctilde);
        if sigma >= m - 0.01 {
            return Err(Error::TailInconclusive { slope: sigma, threshold: m });
        }
        // integrand in x = ln τ coordinates: w = Ã(τ) τ^{−m}
        let w: Vec<f64> = taus
            .iter()
            .zip(&ctilde)
            .map(|(&tau, &c)| {
                if c <= 0.0 {
                    0.0
                } else {
                    (c.ln() - m * tau.ln()).exp()
                }
            })
            .collect();
        let k = taus.len();
        let mut cum = vec![0.0; k];
        cum[k - 1] = w[k - 1] / (m - sigma); // analytic power tail
        for i in (0..k - 1).rev() {
            let dx = taus[i + 1].ln() - taus[i].ln();
            cum[i] = cum[i + 1] + 0.5 * (w[i] + w[i + 1]) * dx;
        }
        let e_samples: Vec<(f64, f64)> = taus
            .iter()
            .zip(&cum)
            .map(|(&tau, &i)| (tau, (m * tau.ln() + i.max(1e-300).ln()).exp()))
            .collect();
        let e_table = LogLogTable::new(&e_samples)
            .ok_or_else(|| Error::InvalidInput("E table degenerate".into()))?;
        let b_table = legendre_of_table(&e_table, &taus)?;
        Ok(EFunction { n, s, m, e_table, b_table })
    }

    pub fn order(&self) -> (usize, f64) {
        (self.n, self.s)
    }

    /// Growth exponent `n/(n−s)` of the prefactor.
    pub fn prefactor_exponent(&self) -> f64 {
        self.m
    }

    /// `E(t)`.
    pub fn eval(&self, t: f64) -> f64 {
        self.e_table.eval(t)
    }

    /// `E⁻¹(y)` (monotone bisection on the table, exact on knots).
    pub fn inverse(&self, y: f64) -> f64 {
        self.e_table.inverse(y)
    }

    /// `B(t)` with `B = Ẽ`.
    pub fn conj_eval(&self, t: f64) -> f64 {
        self.b_table.eval(t)
    }

    /// `B⁻¹(y)`.
    pub fn conj_inverse(&self, y: f64) -> f64 {
        self.b_table.inverse(y)
    }

    /// `Ψ_s(r) = 1/(r^{n−s} E⁻¹(r^{−n}))`.
    pub fn psi(&self, r: f64) -> f64 {
        debug_assert!(r > 0.0);
        let n = self.n as f64;
        1.0 / (r.powf(n - self.s) * self.inverse(r.powf(-n)))
    }

    /// The equivalent form `r^s B⁻¹(r^{−n})`.
    pub fn psi_dual(&self, r: f64) -> f64 {
        debug_assert!(r > 0.0);
        let n = self.n as f64;
        r.powf(self.s) * self.conj_inverse(r.powf(-n))
    }
}

/// Legendre transform of a tabulated increasing function, marching
/// the (monotone) maximizer across the knot grid.
fn legendre_of_table(table: &LogLogTable, tau_knots: &[f64]) -> Result<LogLogTable> {
    let ts = log_grid(1e-9, 1e9, 32);
    let obj = |t: f64, tau: f64| tau * t - table.eval(tau);
    let mut j = 0usize;
    let mut samples = Vec::with_capacity(ts.len());
    for &t in &ts {
        while j + 1 < tau_knots.len() && obj(t, tau_knots[j + 1]) >= obj(t, tau_knots[j]) {
            j += 1;
        }
        let lo = tau_knots[j.saturating_sub(1)];
        let hi = tau_knots[(j + 1).min(tau_knots.len() - 1)];
        let g = |u: f64| obj(t, u.exp());
        let (_, v) = golden_max(&g, lo.ln(), hi.ln(), 70);
        samples.push((t, v.max(0.0)));
    }
    LogLogTable::new(&samples).ok_or_else(|| Error::InvalidInput("conjugate table degenerate".into()))
}
