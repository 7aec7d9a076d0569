//! Quadrature and slope-fitting helpers.

/// Adaptive Simpson quadrature on `[a, b]`.
///
/// Classic recursive bisection with the Richardson error estimate;
/// good for the smooth positive integrands that appear in the tail
/// integrals here.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rtol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
            + rec(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
    }

    if a >= b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    let tol = rtol * whole.abs().max(1e-300);
    rec(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Integrate `f` over `[a, b]` in log space: substitutes `x = e^u` so
/// wide ranges get even relative resolution. `f` must be positive.
pub fn adaptive_simpson_log<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rtol: f64) -> f64 {
    debug_assert!(a > 0.0 && b > a);
    let g = |u: f64| {
        let x = u.exp();
        f(x) * x
    };
    adaptive_simpson(&g, a.ln(), b.ln(), rtol)
}

/// Least-squares slope of `y` against `x`.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    sxy / sxx
}

/// Log-spaced grid with `per_decade` points per decade over
/// `[lo, hi]`, endpoints included.
pub fn log_grid(lo: f64, hi: f64, per_decade: usize) -> Vec<f64> {
    debug_assert!(lo > 0.0 && hi > lo);
    let decades = (hi / lo).log10();
    let n = ((decades * per_decade as f64).ceil() as usize).max(1);
    let step = decades / n as f64;
    (0..=n)
        .map(|i| lo * 10f64.powf(step * i as f64))
        .collect()
}

/// Golden-section maximization of a unimodal function on `[a, b]`.
/// Returns `(argmax, max)`.
pub fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_powers() {
        // ∫_1^4 x^2 dx = 21
        let v = adaptive_simpson(&|x: f64| x * x, 1.0, 4.0, 1e-12);
        assert!((v - 21.0).abs() < 1e-10);
    }

    #[test]
    fn log_simpson_handles_wide_ranges() {
        // ∫_1e-6^1e6 x^-2 dx = 1e6 - 1e-6
        let v = adaptive_simpson_log(&|x: f64| x.powi(-2), 1e-6, 1e6, 1e-11);
        let want = 1e6 - 1e-6;
        assert!((v - want).abs() < 1e-6 * want);
    }

    #[test]
    fn slope_fit_recovers_line() {
        let x: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|&xi| 3.0 - 1.25 * xi).collect();
        assert!((ls_slope(&x, &y) + 1.25).abs() < 1e-12);
    }

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(&|x: f64| -(x - 2.5) * (x - 2.5), 0.0, 10.0, 80);
        assert!((x - 2.5).abs() < 1e-9);
        assert!(v.abs() < 1e-17);
    }
}
