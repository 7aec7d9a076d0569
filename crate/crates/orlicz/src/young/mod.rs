//! Young functions and their calculus.
//!
//! A Young function is a convex, left-continuous, non-constant
//! `A: [0,∞) → [0,∞]` with `A(0) = 0`; it admits the representation
//! `A(t) = ∫₀ᵗ a(τ) dτ` for a nondecreasing density `a`. This module
//! provides a small catalog of closed-form kinds plus CSV-tabulated
//! densities, and the operations the rest of the crate builds on:
//! evaluation (linear and log scale), inversion, Legendre conjugation
//! `Ã(t) = sup{τt − A(τ) : τ ≥ 0}`, and doubling-condition
//! classification.
//!
//! Overflow policy: evaluations saturate at [`SATURATION`] and never
//! silently produce infinities; the `_checked` variants turn
//! saturation into an error carrying the threshold.

mod config;
mod conjugate;
mod kinds;
mod tabulated;

pub use config::YoungSpec;
pub use tabulated::TabulatedDensity;

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::quad::log_grid;
use serde::Serialize;
use std::sync::Arc;

/// Saturation threshold: values at or above this are reported as
/// overflow, never as `f64::INFINITY`.
pub const SATURATION: f64 = 1e300;

/// Relative tolerance for inversion and bisection root finds.
pub const INVERSE_RTOL: f64 = 1e-10;
/// Iteration cap for inversion bisection.
pub const INVERSE_MAX_ITERS: usize = 200;

/// Catalog of Young-function kinds.
#[derive(Clone, Debug)]
pub enum Kind {
    /// `coeff · t^p`, `p ≥ 1`.
    Power { coeff: f64, p: f64 },
    /// `t^p/p + t^q/q`, `1 ≤ p < q`.
    PowerSum { p: f64, q: f64 },
    /// `t^p ln^r(1 + t^q)`.
    PowerLog { p: f64, q: f64, r: f64 },
    /// `e^t − Σ_{j<k} t^j/j!`.
    ExpMinusTaylor { k: u32 },
    /// `e^{e^t} − e`.
    DoubleExp,
    /// `e^{−t^{−r}}` (bounded; convex only near zero — see `validate`).
    ExpNegPower { r: f64 },
    /// Trapezoid integral of a tabulated density.
    Tabulated(Arc<TabulatedDensity>),
    /// Lazy Legendre transform of another Young function.
    Conjugate(Arc<YoungFunction>),
}

/// An evaluable Young function `(A, a = A′)`.
#[derive(Clone, Debug)]
pub struct YoungFunction {
    kind: Kind,
}

impl YoungFunction {
    pub fn new(kind: Kind) -> Self {
        YoungFunction { kind }
    }

    pub fn power(p: f64) -> Self {
        Self::power_scaled(1.0, p)
    }

    pub fn power_scaled(coeff: f64, p: f64) -> Self {
        assert!(p >= 1.0 && coeff > 0.0, "power kind needs p >= 1, coeff > 0");
        YoungFunction {
            kind: Kind::Power { coeff, p },
        }
    }

    pub fn power_sum(p: f64, q: f64) -> Self {
        assert!(1.0 <= p && p < q, "power-sum kind needs 1 <= p < q");
        YoungFunction {
            kind: Kind::PowerSum { p, q },
        }
    }

    pub fn power_log(p: f64, q: f64, r: f64) -> Self {
        assert!(p >= 1.0 && q > 0.0 && r >= 0.0);
        YoungFunction {
            kind: Kind::PowerLog { p, q, r },
        }
    }

    pub fn exp_minus_taylor(k: u32) -> Self {
        assert!(k >= 1 && k <= 120);
        YoungFunction {
            kind: Kind::ExpMinusTaylor { k },
        }
    }

    pub fn double_exp() -> Self {
        YoungFunction { kind: Kind::DoubleExp }
    }

    pub fn exp_neg_power(r: f64) -> Self {
        assert!(r > 0.0);
        YoungFunction {
            kind: Kind::ExpNegPower { r },
        }
    }

    pub fn tabulated(density: TabulatedDensity) -> Self {
        YoungFunction {
            kind: Kind::Tabulated(Arc::new(density)),
        }
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// `A(t)`, saturating at [`SATURATION`].
    pub fn value(&self, t: f64) -> f64 {
        kinds::value(&self.kind, t)
    }

    /// `A(t)` with saturation reported as an error.
    pub fn value_checked(&self, t: f64) -> Result<f64> {
        if let Kind::Conjugate(inner) = &self.kind {
            if t == 0.0 {
                return Ok(0.0);
            }
            return conjugate::conjugate_value(inner, t);
        }
        let v = self.value(t);
        if v >= SATURATION {
            Err(Error::Overflow { threshold: SATURATION })
        } else {
            Ok(v)
        }
    }

    /// Left derivative `a(t)`, saturating.
    pub fn deriv(&self, t: f64) -> f64 {
        kinds::deriv(&self.kind, t)
    }

    /// `ln A(t)`; `-∞` at `t = 0`, `+∞` when `ln A` itself is not
    /// representable (double-exponential arguments).
    pub fn ln_value(&self, t: f64) -> f64 {
        kinds::ln_value(&self.kind, t)
    }

    /// `ln a(t)`.
    pub fn ln_deriv(&self, t: f64) -> f64 {
        kinds::ln_deriv(&self.kind, t)
    }

    /// Solve `A(t) = y` for `t ≥ 0`.
    ///
    /// Closed forms where the kind has one, otherwise monotone
    /// bisection with geometric bracket expansion. The result
    /// satisfies `|A(t) − y| ≤ rtol · max(y, 1)`.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !(y >= 0.0) || !y.is_finite() {
            return Err(Error::InvalidInput(format!("inverse target must be finite nonnegative, got {y}")));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        if y >= SATURATION {
            return Err(Error::Overflow { threshold: SATURATION });
        }
        match &self.kind {
            Kind::Power { coeff, p } => Ok((y / coeff).powf(1.0 / p)),
            Kind::ExpNegPower { r } => {
                if y >= 1.0 {
                    Err(Error::InverseOutOfBracket {
                        target: y,
                        lo: 0.0,
                        hi: f64::MAX,
                    })
                } else {
                    Ok((-(y.ln())).powf(-1.0 / r))
                }
            }
            _ => self.inverse_bisect(y),
        }
    }

    fn inverse_bisect(&self, y: f64) -> Result<f64> {
        let mut hi = 1.0_f64;
        let mut lo = 0.0_f64;
        let mut expansions = 0;
        while self.value(hi) < y {
            lo = hi;
            hi *= 8.0;
            expansions += 1;
            if expansions > 360 || self.value(hi) >= SATURATION && self.value(hi) < y {
                return Err(Error::InverseOutOfBracket { target: y, lo, hi });
            }
            // Saturated but still below y cannot happen (y < SATURATION),
            // a bounded function stalls instead:
            if expansions > 8 && (self.value(hi) - self.value(lo)).abs() <= f64::EPSILON * self.value(hi) {
                return Err(Error::InverseOutOfBracket { target: y, lo, hi });
            }
        }
        // shrink the lower end for small targets
        while lo == 0.0 && hi > 1e-280 && self.value(hi / 8.0) > y {
            hi /= 8.0;
        }
        // Tighter than the |A(t) − y| ≤ rtol·max(y, 1) contract: a
        // relative residual keeps the inverse∘A identity on probe
        // grids even where A is tiny.
        let tol = INVERSE_RTOL * y;
        let mut mid = 0.5 * (lo + hi);
        for _ in 0..INVERSE_MAX_ITERS {
            mid = 0.5 * (lo + hi);
            let v = self.value(mid);
            if (v - y).abs() <= tol {
                return Ok(mid);
            }
            if v < y {
                lo = mid;
            } else {
                hi = mid;
            }
            if (hi - lo) <= f64::EPSILON * hi {
                break;
            }
        }
        Ok(mid)
    }

    /// The complementary function `Ã(t) = sup{τt − A(τ) : τ ≥ 0}`.
    ///
    /// Power kinds return the closed-form conjugate; everything else
    /// returns a lazy transform evaluated on a logarithmic `τ` grid
    /// with golden-section refinement around the maximizer.
    pub fn conjugate(&self) -> YoungFunction {
        match &self.kind {
            Kind::Power { coeff, p } if *p > 1.0 => {
                // sup τt − cτ^p is attained at τ* = (t/(cp))^{1/(p−1)}
                let pc = p / (p - 1.0);
                let cc = (1.0 - 1.0 / p) * (coeff * p).powf(-1.0 / (p - 1.0));
                YoungFunction::power_scaled(cc, pc)
            }
            _ => YoungFunction {
                kind: Kind::Conjugate(Arc::new(self.clone())),
            },
        }
    }

    /// Force the numeric Legendre transform even when a closed form
    /// exists. Test hook for closed-vs-numeric comparison.
    pub fn conjugate_numeric(&self) -> YoungFunction {
        YoungFunction {
            kind: Kind::Conjugate(Arc::new(self.clone())),
        }
    }

    /// Batch conjugate evaluation on an increasing grid, exploiting
    /// monotonicity of the maximizer.
    pub fn conjugate_on_grid(&self, ts: &[f64]) -> Vec<f64> {
        conjugate::conjugate_table(self, ts)
    }

    /// Numeric invariant check on sample grids. Returns the list of
    /// violated invariants (empty for a valid Young function).
    ///
    /// The exp-neg-power kind genuinely fails convexity away from
    /// zero; it is kept in the catalog as a growth-analysis fixture
    /// and reports its violation here.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        if self.value(0.0) != 0.0 {
            violations.push(format!("A(0) = {} != 0", self.value(0.0)));
        }
        // convexity: second differences on linear windows
        for window in [1.0, 8.0] {
            let n = 40;
            let step = window / n as f64;
            let vals: Vec<f64> = (0..=n).map(|i| self.value(step * i as f64)).collect();
            if vals.iter().any(|v| *v >= SATURATION) {
                continue;
            }
            let scale = vals[n].max(1e-300);
            for i in 0..n - 1 {
                let d2 = vals[i + 2] - 2.0 * vals[i + 1] + vals[i];
                if d2 < -1e-7 * scale {
                    violations.push(format!(
                        "convexity: negative second difference at t = {:.6} (window {window})",
                        step * i as f64
                    ));
                    break;
                }
            }
        }
        // monotonicity of A and a, and A(t) <= t a(t)
        let grid = log_grid(1e-6, 1e3, 4);
        let mut prev_a = 0.0;
        let mut prev_aa = 0.0;
        let mut nonconstant = false;
        for &t in &grid {
            let va = self.value(t);
            let vd = self.deriv(t);
            if va >= SATURATION || vd >= SATURATION {
                break;
            }
            if va < prev_a - 1e-12 * va.abs().max(1e-300) {
                violations.push(format!("A not nondecreasing at t = {t:e}"));
                break;
            }
            if vd < prev_aa * (1.0 - 1e-9) {
                violations.push(format!("a not nondecreasing at t = {t:e}"));
                break;
            }
            if va > t * vd * (1.0 + 1e-9) + 1e-300 {
                violations.push(format!("A(t) > t a(t) at t = {t:e}"));
                break;
            }
            if va > 0.0 {
                nonconstant = true;
            }
            prev_a = va;
            prev_aa = vd;
        }
        if !nonconstant {
            violations.push("A vanishes on the whole probe grid".to_string());
        }
        // convexity scalings A(rt) <= r A(t) (r<1), A(rt) >= r A(t) (r>1)
        for &t in &[0.1, 1.0, 3.0] {
            let at = self.value(t);
            if at >= SATURATION || at == 0.0 {
                continue;
            }
            for &r in &[0.25, 0.5] {
                if self.value(r * t) > r * at * (1.0 + 1e-9) {
                    violations.push(format!("A(rt) > r A(t) for r = {r}, t = {t}"));
                }
            }
            for &r in &[2.0, 4.0] {
                let v = self.value(r * t);
                if v < SATURATION && v < r * at * (1.0 - 1e-9) {
                    violations.push(format!("A(rt) < r A(t) for r = {r}, t = {t}"));
                }
            }
        }
        violations
    }

    /// Classify the doubling behavior of `A` near zero and infinity.
    ///
    /// Samples `t·a(t)/A(t)` on a log grid over `[t_lo, t_hi]` and
    /// cross-checks boundedness of `A(2t)/A(t)`. Catalog kinds carry
    /// analytic values for the flags and the exponent range; the
    /// sampled doubling constants are always reported.
    pub fn classify_doubling(&self, t_lo: f64, t_hi: f64) -> Result<DoublingClass> {
        if !(t_lo > 0.0 && t_lo < 1.0 && t_hi > 1.0) {
            return Err(Error::InvalidInput(format!(
                "classify_doubling needs 0 < t_lo < 1 < t_hi, got [{t_lo}, {t_hi}]"
            )));
        }
        const DIVERGENCE: f64 = 1e3;
        let grid = log_grid(t_lo, t_hi, 16);
        let mut ratios = Vec::with_capacity(grid.len());
        let mut doubles = Vec::with_capacity(grid.len());
        for &t in &grid {
            let ln_a = self.ln_value(t);
            if ln_a == f64::NEG_INFINITY {
                return Err(Error::DegenerateYoung { t });
            }
            let ratio = if ln_a.is_finite() {
                let ln_d = self.ln_deriv(t);
                (t.ln() + ln_d - ln_a).exp()
            } else {
                f64::INFINITY
            };
            ratios.push(ratio);
            let ln_a2 = self.ln_value(2.0 * t);
            doubles.push(if ln_a.is_finite() && ln_a2.is_finite() {
                (ln_a2 - ln_a).exp()
            } else {
                f64::INFINITY
            });
        }
        let boundary = grid.partition_point(|&t| t <= 1.0);
        let side_ok = |lo_side: bool| -> bool {
            let slice = if lo_side { &ratios[..boundary] } else { &ratios[boundary..] };
            let sup = slice.iter().cloned().fold(0.0_f64, f64::max);
            if !sup.is_finite() || sup > DIVERGENCE {
                return false;
            }
            // trend across the last two decades toward the boundary end
            let k = 32.min(slice.len() / 2);
            if k >= 4 {
                let (near, far) = if lo_side {
                    (&slice[..k], &slice[k..2 * k])
                } else {
                    (&slice[slice.len() - k..], &slice[slice.len() - 2 * k..slice.len() - k])
                };
                let m_near = near.iter().sum::<f64>() / k as f64;
                let m_far = far.iter().sum::<f64>() / k as f64;
                if m_near > 1.5 * m_far && m_near > 0.5 * DIVERGENCE {
                    return false;
                }
            }
            true
        };
        let sup_double = |lo_side: bool| -> ExtReal {
            let slice = if lo_side { &doubles[..boundary] } else { &doubles[boundary..] };
            ExtReal(slice.iter().cloned().fold(0.0_f64, f64::max))
        };

        let (mut d0, mut dinf) = (side_ok(true), side_ok(false));
        let finite_ratios: Vec<f64> = ratios.iter().cloned().filter(|r| r.is_finite()).collect();
        let mut p_minus = ExtReal(finite_ratios.iter().cloned().fold(f64::INFINITY, f64::min));
        let mut p_plus = if ratios.iter().any(|r| !r.is_finite()) {
            ExtReal::INF
        } else {
            ExtReal(finite_ratios.iter().cloned().fold(0.0_f64, f64::max))
        };
        if let Some((a0, ainf, pm, pp)) = kinds::analytic_doubling(&self.kind) {
            d0 = a0;
            dinf = ainf;
            p_minus = pm;
            p_plus = pp;
        }
        Ok(DoublingClass {
            delta2_zero: d0,
            c_zero: sup_double(true),
            delta2_inf: dinf,
            c_inf: sup_double(false),
            delta2_global: d0 && dinf,
            p_minus,
            p_plus,
        })
    }

    /// True when evaluating this function is itself a numeric
    /// optimization (nested Legendre transforms switch to pure
    /// golden-section search to stay affordable).
    pub(crate) fn is_expensive(&self) -> bool {
        matches!(self.kind, Kind::Conjugate(_))
    }

    /// Short description for labels and reports.
    pub fn describe(&self) -> String {
        match &self.kind {
            Kind::Power { coeff, p } => {
                if (*coeff - 1.0).abs() < 1e-15 {
                    format!("t^{p}")
                } else {
                    format!("{coeff}*t^{p}")
                }
            }
            Kind::PowerSum { p, q } => format!("t^{p}/{p} + t^{q}/{q}"),
            Kind::PowerLog { p, q, r } => format!("t^{p} ln^{r}(1+t^{q})"),
            Kind::ExpMinusTaylor { k } => format!("exp(t) - taylor_{k}(t)"),
            Kind::DoubleExp => "exp(exp(t)) - e".to_string(),
            Kind::ExpNegPower { r } => format!("exp(-t^-{r})"),
            Kind::Tabulated(_) => "tabulated".to_string(),
            Kind::Conjugate(inner) => format!("conjugate({})", inner.describe()),
        }
    }
}

/// Which of the pair `(A, a)` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalTarget {
    /// The Young function itself.
    Function,
    /// Its left derivative.
    Density,
}

/// Checked single-point evaluation of `A` or `a`.
pub fn eval(f: &YoungFunction, t: f64, which: EvalTarget) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidInput(format!("eval needs finite t >= 0, got {t}")));
    }
    let v = match which {
        EvalTarget::Function => return f.value_checked(t),
        EvalTarget::Density => f.deriv(t),
    };
    if v >= SATURATION {
        Err(Error::Overflow { threshold: SATURATION })
    } else {
        Ok(v)
    }
}

/// Doubling-condition classification of a Young function.
///
/// `p_plus`/`p_minus` are the supremum/infimum of `t·a(t)/A(t)`; the
/// supremum is finite exactly when the global doubling condition
/// holds, and bounds the Matuszewska function by powers.
#[derive(Clone, Debug, Serialize)]
pub struct DoublingClass {
    pub delta2_zero: bool,
    /// Estimated doubling constant `sup A(2t)/A(t)` near zero.
    pub c_zero: ExtReal,
    pub delta2_inf: bool,
    /// Estimated doubling constant near infinity.
    pub c_inf: ExtReal,
    pub delta2_global: bool,
    /// `inf t·a(t)/A(t)` (≥ 1 for convex Young functions).
    pub p_minus: ExtReal,
    /// `sup t·a(t)/A(t)`; infinite outside the doubling class.
    pub p_plus: ExtReal,
}

#[cfg(test)]
mod tests;
