//! Matuszewska-Orlicz growth functions and indices.
//!
//! For a Young function `A` the growth function and its one-sided
//! liminf variants are
//!
//! ```text
//! M(t)  = sup_{α>0}        A(αt)/A(α)
//! M₀(t) = liminf_{α→0⁺}    A(αt)/A(α)
//! M∞(t) = liminf_{α→∞}     A(αt)/A(α)
//! ```
//!
//! all nondecreasing, submultiplicative and equal to one at `t = 1`,
//! with `M₀ ≤ M` and `M∞ ≤ M`. The indices are the asymptotic slopes
//! `lim_{t→∞} log M(t)/log t` (same for the variants); they detect
//! power-type growth and are infinite outside the doubling class.
//!
//! Catalog kinds return their closed forms; the numeric estimators
//! (`*_numeric`) evaluate the defining ratios in log scale so that
//! exponential kinds stay resolvable, and are compared against the
//! closed forms in the test suites.

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::quad::{log_grid, ls_slope};
use crate::young::{Kind, YoungFunction};
use serde::Serialize;
use std::io::Write;

/// Ratios above this are flagged infinite (divergence threshold for
/// the sup/liminf estimators).
const INF_THRESHOLD_LN: f64 = 27.631021115928547; // ln(1e12)
/// Fitted slopes above this are declared infinite.
const INF_SLOPE: f64 = 50.0;

/// Which end of the scaling parameter the liminf runs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitEnd {
    Zero,
    Infinity,
}

/// Which growth function an index is fitted on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    Global,
    Zero,
    Infinity,
}

/// ln(A(αt)) − ln(A(α)), or None when not resolvable in log scale.
fn ln_ratio(f: &YoungFunction, alpha: f64, t: f64) -> Option<f64> {
    let den = f.ln_value(alpha);
    if !den.is_finite() {
        return None;
    }
    let num = f.ln_value(alpha * t);
    if num == f64::INFINITY {
        return None;
    }
    // num may be −∞: the ratio is an exact zero, which is resolvable.
    Some(num - den)
}

/// Numeric `sup_α A(αt)/A(α)` over a log grid of scalings.
///
/// The grid spans `α ∈ [2^−60, 2^60]`, matching the range the liminf
/// probes reach: logarithmically-converging suprema (the `p_log`
/// kind below one) need the wide range to get within a few percent
/// of the true value. Returns the infinite marker when the running
/// sup exceeds the divergence threshold while still growing toward a
/// grid boundary.
pub fn sup_value_numeric(f: &YoungFunction, t: f64) -> Result<ExtReal> {
    if !(t > 0.0) {
        return Err(Error::InvalidInput(format!("matuszewska sup needs t > 0, got {t}")));
    }
    if t == 1.0 {
        return Ok(ExtReal(1.0));
    }
    let alphas = log_grid(0.5f64.powi(60), 2.0f64.powi(60), 32);
    let mut best = f64::NEG_INFINITY;
    let mut best_i = 0usize;
    let mut samples: Vec<f64> = Vec::with_capacity(alphas.len());
    for &alpha in &alphas {
        if let Some(lr) = ln_ratio(f, alpha, t) {
            if lr > best {
                best = lr;
                best_i = samples.len();
            }
            samples.push(lr);
        }
    }
    if samples.is_empty() {
        return Err(Error::IndeterminateAt { t });
    }
    if best > INF_THRESHOLD_LN {
        // Large finite suprema are legitimate (t^p at big probe t);
        // divergence is a supremum still climbing into a boundary of
        // the α grid. Half a decade of samples decides the trend.
        let k = 16.min(samples.len() / 2);
        let n = samples.len();
        let rising_hi = best_i >= n / 2 && samples[n - 1] - samples[n - 1 - k] > 0.1;
        let rising_lo = best_i < n / 2 && samples[0] - samples[k] > 0.1;
        if rising_hi || rising_lo || !best.is_finite() {
            return Ok(ExtReal::INF);
        }
    }
    Ok(ExtReal(best.exp())) // exp overflow serializes as "inf" anyway
}

/// Numeric liminf of `A(αt)/A(α)` as `α → 0⁺` or `α → ∞`, probed on
/// the geometric sequence `α_k = 2^{∓k}`, `k ≤ 60`.
///
/// Returns `(value, converged)`; `converged` is false when the
/// resolvable tail is still trending.
pub fn limit_value_numeric(f: &YoungFunction, t: f64, end: LimitEnd) -> Result<(ExtReal, bool)> {
    if !(t > 0.0) {
        return Err(Error::InvalidInput(format!("matuszewska limit needs t > 0, got {t}")));
    }
    if t == 1.0 {
        return Ok((ExtReal(1.0), true));
    }
    let mut resolvable: Vec<f64> = Vec::new();
    for k in 0..=60u32 {
        let alpha = match end {
            LimitEnd::Zero => 0.5f64.powi(k as i32),
            LimitEnd::Infinity => 2.0f64.powi(k as i32),
        };
        if let Some(lr) = ln_ratio(f, alpha, t) {
            resolvable.push(lr);
        } else if !resolvable.is_empty() {
            break; // ran off the representable range
        }
    }
    if resolvable.is_empty() {
        return Err(Error::LimitIndeterminate);
    }
    let tail_start = resolvable.len().saturating_sub(10);
    let tail = &resolvable[tail_start..];
    let inf_ln = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    // convergence: spread of the last few resolvable terms
    let last = &resolvable[resolvable.len().saturating_sub(5)..];
    let spread = last.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - last.iter().cloned().fold(f64::INFINITY, f64::min);
    let converged = spread.is_nan() || spread <= 0.05;
    // divergent liminf: the whole resolvable tail sits above the
    // threshold and is still rising
    if inf_ln > INF_THRESHOLD_LN {
        let n = resolvable.len();
        let k = 5.min(n - 1);
        if k == 0 || resolvable[n - 1] - resolvable[n - 1 - k] > 0.1 || !inf_ln.is_finite() {
            return Ok((ExtReal::INF, converged));
        }
    }
    Ok((ExtReal(inf_ln.exp()), converged))
}

fn closed_forms(f: &YoungFunction) -> Option<ClosedForms> {
    match f.kind() {
        Kind::Power { p, .. } => Some(ClosedForms::powers(*p, *p, *p)),
        Kind::PowerSum { p, q } => Some(ClosedForms::powers(*p, *q, *q)),
        Kind::PowerLog { p, q, r } => Some(ClosedForms::powers(p + q * r, *p, p + q * r)),
        Kind::ExpMinusTaylor { k } => Some(ClosedForms {
            zero_exponent: Some(*k as f64),
            inf_exponent: None,
            global_exponent: None,
            inf_step: true,
            global_step_exponent: Some(*k as f64),
        }),
        Kind::DoubleExp => Some(ClosedForms {
            zero_exponent: Some(1.0),
            inf_exponent: None,
            global_exponent: None,
            inf_step: true,
            global_step_exponent: Some(1.0),
        }),
        Kind::ExpNegPower { .. } => Some(ClosedForms {
            zero_exponent: None,
            inf_exponent: Some(0.0),
            global_exponent: None,
            inf_step: false,
            global_step_exponent: Some(0.0),
        }),
        Kind::Tabulated(_) | Kind::Conjugate(_) => None,
    }
}

/// Closed-form growth data for a catalog kind, encoded as power
/// exponents plus step-function markers for the non-doubling cases.
struct ClosedForms {
    /// `M₀(t) = t^e`, or a step `{0, 1, ∞}` when `None`.
    zero_exponent: Option<f64>,
    /// `M∞(t) = t^e`, or a step when `None`.
    inf_exponent: Option<f64>,
    /// `M(t) = t^e` globally when `Some`.
    global_exponent: Option<f64>,
    /// Marks `M∞` (and `M` above one) as the `{0,1,∞}` step.
    inf_step: bool,
    /// For step cases, `M(t) = t^e` below one.
    global_step_exponent: Option<f64>,
}

impl ClosedForms {
    fn powers(i0: f64, iinf: f64, ig: f64) -> Self {
        ClosedForms {
            zero_exponent: Some(i0),
            inf_exponent: Some(iinf),
            global_exponent: Some(ig),
            inf_step: false,
            global_step_exponent: None,
        }
    }

    fn sup(&self, t: f64) -> ExtReal {
        if let (Some(e0), Some(einf)) = (self.zero_exponent, self.inf_exponent) {
            if self.global_exponent.is_some() {
                // max of the two power branches
                return ExtReal(t.powf(e0).max(t.powf(einf)));
            }
        }
        // step case: M(t) = t^e for t <= 1, ∞ above
        if t <= 1.0 {
            ExtReal(t.powf(self.global_step_exponent.unwrap_or(1.0)))
        } else {
            ExtReal::INF
        }
    }

    fn zero(&self, t: f64) -> ExtReal {
        match self.zero_exponent {
            Some(e) => ExtReal(t.powf(e)),
            None => step(t),
        }
    }

    fn inf(&self, t: f64) -> ExtReal {
        match self.inf_exponent {
            Some(e) => ExtReal(t.powf(e)),
            None => step(t),
        }
    }

    fn index(&self, which: IndexKind) -> ExtReal {
        match which {
            IndexKind::Zero => self.zero_exponent.map(ExtReal).unwrap_or(ExtReal::INF),
            IndexKind::Infinity => {
                if self.inf_step {
                    ExtReal::INF
                } else {
                    self.inf_exponent.map(ExtReal).unwrap_or(ExtReal::INF)
                }
            }
            IndexKind::Global => {
                if self.inf_step {
                    ExtReal::INF
                } else {
                    self.global_exponent.map(ExtReal).unwrap_or(ExtReal::INF)
                }
            }
        }
    }
}

fn step(t: f64) -> ExtReal {
    if t < 1.0 {
        ExtReal(0.0)
    } else if t == 1.0 {
        ExtReal(1.0)
    } else {
        ExtReal::INF
    }
}

/// `M(t)`: closed form for catalog kinds, numeric otherwise.
pub fn sup_value(f: &YoungFunction, t: f64) -> Result<ExtReal> {
    if !(t > 0.0) {
        return Err(Error::InvalidInput(format!("matuszewska sup needs t > 0, got {t}")));
    }
    match closed_forms(f) {
        Some(cf) => Ok(cf.sup(t)),
        None => sup_value_numeric(f, t),
    }
}

/// `M₀(t)` or `M∞(t)`: closed form for catalog kinds, numeric otherwise.
pub fn limit_value(f: &YoungFunction, t: f64, end: LimitEnd) -> Result<(ExtReal, bool)> {
    if !(t > 0.0) {
        return Err(Error::InvalidInput(format!("matuszewska limit needs t > 0, got {t}")));
    }
    match closed_forms(f) {
        Some(cf) => Ok((
            match end {
                LimitEnd::Zero => cf.zero(t),
                LimitEnd::Infinity => cf.inf(t),
            },
            true,
        )),
        None => limit_value_numeric(f, t, end),
    }
}

/// Growth index: slope of `log M(t)` against `log t` over
/// `t ∈ [1e2, 1e6]` on the matching variant; infinite when the
/// variant is flagged infinite at any finite `t > 1` or the fitted
/// slope exceeds the super-power threshold.
pub fn index_numeric(f: &YoungFunction, which: IndexKind) -> Result<ExtReal> {
    let ts = log_grid(1e2, 1e6, 3);
    let mut lx = Vec::with_capacity(ts.len());
    let mut ly = Vec::with_capacity(ts.len());
    for &t in &ts {
        let v = match which {
            IndexKind::Global => sup_value_numeric(f, t)?,
            IndexKind::Zero => limit_value_numeric(f, t, LimitEnd::Zero)?.0,
            IndexKind::Infinity => limit_value_numeric(f, t, LimitEnd::Infinity)?.0,
        };
        if v.is_infinite() {
            return Ok(ExtReal::INF);
        }
        if v.0 > 0.0 {
            lx.push(t.ln());
            ly.push(v.0.ln());
        }
    }
    if lx.len() < 4 {
        return Err(Error::IndexNotEstimable { samples: lx.len() });
    }
    let slope = ls_slope(&lx, &ly);
    if slope > INF_SLOPE {
        return Ok(ExtReal::INF);
    }
    Ok(ExtReal(slope))
}

/// Growth index with catalog closed forms.
pub fn index(f: &YoungFunction, which: IndexKind) -> Result<ExtReal> {
    match closed_forms(f) {
        Some(cf) => Ok(cf.index(which)),
        None => index_numeric(f, which),
    }
}

/// Estimation route for a profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileMode {
    /// Closed forms where the catalog has them.
    Auto,
    /// Force the numeric estimators (test / cross-check route).
    Numeric,
}

/// Sampled growth functions plus estimated indices.
#[derive(Clone, Debug, Serialize)]
pub struct MatuszewskaProfile {
    pub t_grid: Vec<f64>,
    pub m: Vec<ExtReal>,
    pub m_zero: Vec<ExtReal>,
    pub m_inf: Vec<ExtReal>,
    pub index_global: ExtReal,
    pub index_zero: ExtReal,
    pub index_inf: ExtReal,
    /// Per-limit convergence of the liminf tails.
    pub converged_zero: bool,
    pub converged_inf: bool,
}

/// Sample `M`, `M₀`, `M∞` on `t_grid` and estimate all three indices.
pub fn profile(f: &YoungFunction, t_grid: &[f64], mode: ProfileMode) -> Result<MatuszewskaProfile> {
    let mut m = Vec::with_capacity(t_grid.len());
    let mut m0 = Vec::with_capacity(t_grid.len());
    let mut mi = Vec::with_capacity(t_grid.len());
    let mut c0 = true;
    let mut ci = true;
    for &t in t_grid {
        match mode {
            ProfileMode::Auto => {
                m.push(sup_value(f, t)?);
                let (v0, k0) = limit_value(f, t, LimitEnd::Zero)?;
                let (vi, ki) = limit_value(f, t, LimitEnd::Infinity)?;
                m0.push(v0);
                mi.push(vi);
                c0 &= k0;
                ci &= ki;
            }
            ProfileMode::Numeric => {
                m.push(sup_value_numeric(f, t)?);
                let (v0, k0) = limit_value_numeric(f, t, LimitEnd::Zero)?;
                let (vi, ki) = limit_value_numeric(f, t, LimitEnd::Infinity)?;
                m0.push(v0);
                mi.push(vi);
                c0 &= k0;
                ci &= ki;
            }
        }
    }
    let (ig, i0, ii) = match mode {
        ProfileMode::Auto => (
            index(f, IndexKind::Global)?,
            index(f, IndexKind::Zero)?,
            index(f, IndexKind::Infinity)?,
        ),
        ProfileMode::Numeric => (
            index_numeric(f, IndexKind::Global)?,
            index_numeric(f, IndexKind::Zero)?,
            index_numeric(f, IndexKind::Infinity)?,
        ),
    };
    Ok(MatuszewskaProfile {
        t_grid: t_grid.to_vec(),
        m,
        m_zero: m0,
        m_inf: mi,
        index_global: ig,
        index_zero: i0,
        index_inf: ii,
        converged_zero: c0,
        converged_inf: ci,
    })
}

impl MatuszewskaProfile {
    /// CSV export `(t, M, M0, Minf)`; infinite entries as `"inf"`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "t,M,M0,Minf")?;
        for (i, &t) in self.t_grid.iter().enumerate() {
            writeln!(w, "{t},{},{},{}", self.m[i], self.m_zero[i], self.m_inf[i])?;
        }
        Ok(())
    }
}
