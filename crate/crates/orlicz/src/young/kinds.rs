//! Per-kind evaluation of `A`, `a`, and their logarithms.
//!
//! Exponential kinds are evaluated through series or `expm1` forms
//! near zero (the naive `e^t − poly` cancels catastrophically there)
//! and through explicit log-space formulas for large arguments, so
//! ratios like `A(αt)/A(α)` stay resolvable far beyond the linear
//! floating-point range.

use super::{conjugate, Kind, SATURATION};

#[inline]
fn sat(v: f64) -> f64 {
    if v.is_nan() {
        return f64::NAN;
    }
    v.min(SATURATION)
}

#[inline]
fn exp_sat(ln_v: f64) -> f64 {
    if ln_v >= 690.7755278982137 {
        // ln(1e300)
        SATURATION
    } else {
        ln_v.exp()
    }
}

/// `t^p` with multiplications for small integer and half-integer
/// exponents (these sit in the innermost kernel loops).
#[inline]
pub(crate) fn powx(t: f64, p: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    if p == 2.0 {
        t * t
    } else if p == 3.0 {
        t * t * t
    } else if p == 4.0 {
        let s = t * t;
        s * s
    } else if p == 1.0 {
        t
    } else if p == 1.5 {
        t * t.sqrt()
    } else {
        t.powf(p)
    }
}

fn ln_factorial(k: u32) -> f64 {
    (2..=k as u64).map(|j| (j as f64).ln()).sum()
}

/// `Σ_{j≥k} t^j/j!` summed directly (all terms positive, no
/// cancellation). Valid for moderate `t`; callers switch to
/// `e^t − poly` for large `t`.
fn exp_tail_series(k: u32, t: f64) -> f64 {
    let mut term = powx(t, k as f64);
    for j in 2..=k as u64 {
        term /= j as f64;
    }
    if term == 0.0 {
        return 0.0;
    }
    let mut sum = term;
    let mut j = k as u64;
    loop {
        j += 1;
        term *= t / j as f64;
        sum += term;
        if term < 1e-18 * sum || j > k as u64 + 400 {
            break;
        }
    }
    sum
}

/// `ln Σ_{j≥k} t^j/j! = k ln t − ln k! + ln R(t)` with the
/// correction series `R(t) = Σ_m t^m · k!/(k+m)!` (underflow-free).
fn exp_tail_ln(k: u32, t: f64) -> f64 {
    if t == 0.0 {
        return f64::NEG_INFINITY;
    }
    let mut r = 1.0_f64;
    let mut term = 1.0_f64;
    let mut m = 0u64;
    loop {
        m += 1;
        term *= t / (k as u64 + m) as f64;
        r += term;
        if term < 1e-18 * r || m > 500 {
            break;
        }
    }
    k as f64 * t.ln() - ln_factorial(k) + r.ln()
}

fn taylor_poly(k: u32, t: f64) -> f64 {
    // Σ_{j<k} t^j/j!
    let mut sum = 0.0;
    let mut term = 1.0;
    for j in 0..k as u64 {
        if j > 0 {
            term *= t / j as f64;
        }
        sum += term;
    }
    sum
}

fn exp_minus_taylor_value(k: u32, t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else if t <= 30.0 {
        exp_tail_series(k, t)
    } else if t < 690.0 {
        t.exp() - taylor_poly(k, t)
    } else {
        SATURATION
    }
}

fn exp_minus_taylor_ln(k: u32, t: f64) -> f64 {
    if t == 0.0 {
        f64::NEG_INFINITY
    } else if t <= 30.0 {
        exp_tail_ln(k, t)
    } else {
        // ln(e^t − P(t)) = t + ln(1 − P(t)e^{−t}); the poly term is
        // negligible long before e^t overflows.
        let corr = if t < 500.0 { (-(taylor_poly(k, t)) * (-t).exp()).ln_1p() } else { 0.0 };
        t + corr
    }
}

pub(crate) fn value(kind: &Kind, t: f64) -> f64 {
    debug_assert!(t >= 0.0, "Young functions are evaluated on t >= 0");
    match kind {
        Kind::Power { coeff, p } => sat(coeff * powx(t, *p)),
        Kind::PowerSum { p, q } => sat(powx(t, *p) / p + powx(t, *q) / q),
        Kind::PowerLog { p, q, r } => {
            if t == 0.0 {
                return 0.0;
            }
            let lq = *q * t.ln();
            let l = if lq > 700.0 { lq } else { t.powf(*q).ln_1p() };
            sat(exp_sat(*p * t.ln() + *r * l.ln()))
        }
        Kind::ExpMinusTaylor { k } => exp_minus_taylor_value(*k, t),
        Kind::DoubleExp => {
            let x = f64::exp_m1(t);
            if x > 690.0 {
                SATURATION
            } else {
                std::f64::consts::E * f64::exp_m1(x)
            }
        }
        Kind::ExpNegPower { r } => {
            if t == 0.0 {
                0.0
            } else {
                (-t.powf(-*r)).exp()
            }
        }
        Kind::Tabulated(tab) => sat(tab.value(t)),
        Kind::Conjugate(inner) => {
            if t == 0.0 {
                0.0
            } else {
                conjugate::conjugate_value(inner, t).unwrap_or(SATURATION)
            }
        }
    }
}

pub(crate) fn deriv(kind: &Kind, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    match kind {
        Kind::Power { coeff, p } => {
            if t == 0.0 {
                if *p > 1.0 {
                    0.0
                } else {
                    *coeff
                }
            } else {
                sat(coeff * p * powx(t, *p - 1.0))
            }
        }
        Kind::PowerSum { p, q } => {
            if t == 0.0 {
                if *p > 1.0 {
                    0.0
                } else {
                    1.0
                }
            } else {
                sat(powx(t, *p - 1.0) + powx(t, *q - 1.0))
            }
        }
        Kind::PowerLog { p, q, r } => {
            if t == 0.0 {
                return if *p + *q * *r > 1.0 { 0.0 } else { 1.0 };
            }
            // a = t^{p−1} L^{r−1} (p L + r q t^q/(1+t^q)), L = ln(1+t^q)
            let tq = if *q * t.ln() > 700.0 { f64::INFINITY } else { t.powf(*q) };
            let l = if tq.is_finite() { tq.ln_1p() } else { *q * t.ln() };
            let frac = if tq.is_finite() { tq / (1.0 + tq) } else { 1.0 };
            sat(exp_sat((*p - 1.0) * t.ln() + (*r - 1.0) * l.ln()) * (*p * l + *r * *q * frac))
        }
        Kind::ExpMinusTaylor { k } => {
            if *k == 1 {
                sat(if t < 690.0 { t.exp() } else { SATURATION })
            } else {
                exp_minus_taylor_value(*k - 1, t)
            }
        }
        Kind::DoubleExp => {
            // a(t) = e^{t + e^t}
            let e = if t < 7.0 { t + t.exp() } else { f64::INFINITY };
            if e.is_finite() && e < 690.0 {
                e.exp()
            } else {
                SATURATION
            }
        }
        Kind::ExpNegPower { r } => {
            if t == 0.0 {
                0.0
            } else {
                sat(*r * t.powf(-*r - 1.0) * (-t.powf(-*r)).exp())
            }
        }
        Kind::Tabulated(tab) => sat(tab.density(t)),
        Kind::Conjugate(inner) => {
            // Envelope theorem: Ã′(t) is the maximizer of τt − A(τ).
            if t == 0.0 {
                0.0
            } else {
                conjugate::conjugate_argmax(inner, t)
            }
        }
    }
}

pub(crate) fn ln_value(kind: &Kind, t: f64) -> f64 {
    if t == 0.0 {
        return f64::NEG_INFINITY;
    }
    match kind {
        Kind::Power { coeff, p } => coeff.ln() + p * t.ln(),
        Kind::PowerSum { p, q } => {
            let lp = *p * t.ln() - p.ln();
            let lq = *q * t.ln() - q.ln();
            let (hi, lo) = if lp >= lq { (lp, lq) } else { (lq, lp) };
            hi + (lo - hi).exp().ln_1p()
        }
        Kind::PowerLog { p, q, r } => {
            let lq = *q * t.ln();
            let l = if lq > 700.0 { lq } else { t.powf(*q).ln_1p() };
            *p * t.ln() + *r * l.ln()
        }
        Kind::ExpMinusTaylor { k } => exp_minus_taylor_ln(*k, t),
        Kind::DoubleExp => {
            // ln(e(e^x − 1)) with x = e^t − 1
            let x = f64::exp_m1(t);
            if !x.is_finite() {
                return f64::INFINITY;
            }
            if x > 36.0 {
                1.0 + x
            } else {
                1.0 + f64::exp_m1(x).ln()
            }
        }
        Kind::ExpNegPower { r } => -t.powf(-*r),
        Kind::Tabulated(tab) => tab.value(t).ln(),
        Kind::Conjugate(_) => {
            let v = value(kind, t);
            if v >= SATURATION {
                f64::INFINITY
            } else {
                v.ln()
            }
        }
    }
}

pub(crate) fn ln_deriv(kind: &Kind, t: f64) -> f64 {
    if t == 0.0 {
        return f64::NEG_INFINITY;
    }
    match kind {
        Kind::Power { coeff, p } => (coeff * p).ln() + (p - 1.0) * t.ln(),
        Kind::PowerSum { p, q } => {
            let lp = (*p - 1.0) * t.ln();
            let lq = (*q - 1.0) * t.ln();
            let (hi, lo) = if lp >= lq { (lp, lq) } else { (lq, lp) };
            hi + (lo - hi).exp().ln_1p()
        }
        Kind::ExpMinusTaylor { k } => {
            if *k == 1 {
                t
            } else {
                exp_minus_taylor_ln(*k - 1, t)
            }
        }
        Kind::DoubleExp => {
            let e = t.exp();
            if e.is_finite() {
                t + e
            } else {
                f64::INFINITY
            }
        }
        Kind::ExpNegPower { r } => r.ln() + (-*r - 1.0) * t.ln() - t.powf(-*r),
        _ => {
            let v = deriv(kind, t);
            if v >= SATURATION {
                f64::INFINITY
            } else {
                v.ln()
            }
        }
    }
}

/// Analytic doubling data for catalog kinds:
/// `(delta2_zero, delta2_inf, p_minus, p_plus)`.
pub(crate) fn analytic_doubling(
    kind: &Kind,
) -> Option<(bool, bool, crate::extreal::ExtReal, crate::extreal::ExtReal)> {
    use crate::extreal::ExtReal;
    match kind {
        Kind::Power { p, .. } => Some((true, true, ExtReal(*p), ExtReal(*p))),
        Kind::PowerSum { p, q } => Some((true, true, ExtReal(*p), ExtReal(*q))),
        Kind::PowerLog { p, q, r } => Some((true, true, ExtReal(*p), ExtReal(p + q * r))),
        Kind::ExpMinusTaylor { k } => Some((true, false, ExtReal(*k as f64), ExtReal::INF)),
        Kind::DoubleExp => Some((true, false, ExtReal(1.0), ExtReal::INF)),
        Kind::ExpNegPower { .. } => Some((false, true, ExtReal(0.0), ExtReal::INF)),
        Kind::Tabulated(_) | Kind::Conjugate(_) => None,
    }
}
