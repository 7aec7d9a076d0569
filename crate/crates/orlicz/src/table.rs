//! Monotone functions tabulated on a logarithmic grid.
//!
//! Positive increasing functions with regularly varying tails (the
//! auxiliary Young function `E` and its conjugate) interpolate well
//! linearly in log-log coordinates, and extrapolate by the end
//! slopes, which is exactly the power-law tail continuation the
//! integral machinery needs.

/// Piecewise log-log linear interpolant of a positive increasing
/// function, with power-law extrapolation beyond the sampled range.
#[derive(Clone, Debug)]
pub struct LogLogTable {
    ln_x: Vec<f64>,
    ln_y: Vec<f64>,
    lo_slope: f64,
    hi_slope: f64,
}

impl LogLogTable {
    /// Build from `(x, y)` samples with strictly increasing positive
    /// `x` and positive nondecreasing `y`. Samples with `y <= 0` are
    /// dropped (a Young function vanishes near zero faster than any
    /// power; the table keeps its representable part).
    pub fn new(samples: &[(f64, f64)]) -> Option<Self> {
        let mut ln_x = Vec::with_capacity(samples.len());
        let mut ln_y = Vec::with_capacity(samples.len());
        for &(x, y) in samples {
            if x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite() {
                ln_x.push(x.ln());
                ln_y.push(y.ln());
            }
        }
        if ln_x.len() < 2 {
            return None;
        }
        let k = ln_x.len();
        let lo_slope = (ln_y[1] - ln_y[0]) / (ln_x[1] - ln_x[0]);
        let hi_slope = (ln_y[k - 1] - ln_y[k - 2]) / (ln_x[k - 1] - ln_x[k - 2]);
        Some(LogLogTable {
            ln_x,
            ln_y,
            lo_slope,
            hi_slope,
        })
    }

    pub fn x_range(&self) -> (f64, f64) {
        (
            self.ln_x[0].exp(),
            self.ln_x[self.ln_x.len() - 1].exp(),
        )
    }

    fn eval_ln(&self, lx: f64) -> f64 {
        let n = self.ln_x.len();
        if lx <= self.ln_x[0] {
            return self.ln_y[0] + self.lo_slope * (lx - self.ln_x[0]);
        }
        if lx >= self.ln_x[n - 1] {
            return self.ln_y[n - 1] + self.hi_slope * (lx - self.ln_x[n - 1]);
        }
        let i = match self
            .ln_x
            .binary_search_by(|v| v.partial_cmp(&lx).unwrap())
        {
            Ok(i) => return self.ln_y[i],
            Err(i) => i,
        };
        let (x0, x1) = (self.ln_x[i - 1], self.ln_x[i]);
        let (y0, y1) = (self.ln_y[i - 1], self.ln_y[i]);
        y0 + (y1 - y0) * (lx - x0) / (x1 - x0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        self.eval_ln(x.ln()).exp()
    }

    pub fn ln_eval(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        self.eval_ln(x.ln())
    }

    /// Inverse of a strictly increasing table (bisection in log-log
    /// coordinates, exact on the knots up to interpolation).
    pub fn inverse(&self, y: f64) -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        let ly = y.ln();
        let n = self.ln_x.len();
        // Locate the knot interval, extrapolating by end slopes.
        if ly <= self.ln_y[0] {
            return (self.ln_x[0] + (ly - self.ln_y[0]) / self.lo_slope).exp();
        }
        if ly >= self.ln_y[n - 1] {
            return (self.ln_x[n - 1] + (ly - self.ln_y[n - 1]) / self.hi_slope).exp();
        }
        let i = self.ln_y.partition_point(|&v| v < ly);
        let (x0, x1) = (self.ln_x[i - 1], self.ln_x[i]);
        let (y0, y1) = (self.ln_y[i - 1], self.ln_y[i]);
        if y1 == y0 {
            return x0.exp();
        }
        (x0 + (x1 - x0) * (ly - y0) / (y1 - y0)).exp()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.ln_y.windows(2).all(|w| w[1] > w[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_power_law_exactly() {
        let samples: Vec<(f64, f64)> = (0..50)
            .map(|i| {
                let x = 10f64.powf(-2.0 + 0.2 * i as f64);
                (x, 3.0 * x.powf(1.5))
            })
            .collect();
        let t = LogLogTable::new(&samples).unwrap();
        for &x in &[1e-4f64, 0.03, 1.7, 4e3, 1e9] {
            let want = 3.0 * x.powf(1.5);
            assert!((t.eval(x) - want).abs() <= 1e-10 * want);
            assert!((t.inverse(want) - x).abs() <= 1e-10 * x);
        }
    }

    #[test]
    fn interpolation_error_small_for_smooth_curvature() {
        let f = |x: f64| x * x / (1.0 + x).ln().max(1e-30) * (1.0 + x).ln();
        let samples: Vec<(f64, f64)> = (0..400)
            .map(|i| {
                let x = 10f64.powf(-4.0 + 0.02 * i as f64);
                (x, f(x))
            })
            .collect();
        let t = LogLogTable::new(&samples).unwrap();
        let x = 0.7;
        let rel = (t.eval(x) - f(x)).abs() / f(x);
        assert!(rel < 1e-5, "rel = {rel}");
    }
}
