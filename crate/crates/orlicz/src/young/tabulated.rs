//! Custom Young functions from a tabulated density.
//!
//! Input is a CSV of `(t, a(t))` pairs with strictly increasing `t`
//! starting at 0 and nondecreasing `a`. `A` is the trapezoid integral
//! of the piecewise-linear density; beyond the last knot the density
//! is continued as a constant (linear growth of `A`, whose conjugate
//! is eventually infinite — the saturation paths exercise that).

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TabulatedDensity {
    t: Vec<f64>,
    a: Vec<f64>,
    /// A at the knots (exact integral of the piecewise-linear density).
    cum: Vec<f64>,
}

impl TabulatedDensity {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidInput(
                "tabulated density needs at least two (t, a) pairs".into(),
            ));
        }
        if points[0].0 != 0.0 {
            return Err(Error::InvalidInput(format!(
                "tabulated density must start at t = 0, got t = {}",
                points[0].0
            )));
        }
        let mut t = Vec::with_capacity(points.len());
        let mut a = Vec::with_capacity(points.len());
        for (i, &(ti, ai)) in points.iter().enumerate() {
            if !ti.is_finite() || !ai.is_finite() || ai < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "tabulated density row {i}: values must be finite, a >= 0"
                )));
            }
            if i > 0 {
                if ti <= t[i - 1] {
                    return Err(Error::InvalidInput(format!(
                        "tabulated density row {i}: t must be strictly increasing"
                    )));
                }
                if ai < a[i - 1] {
                    return Err(Error::InvalidInput(format!(
                        "tabulated density row {i}: a must be nondecreasing"
                    )));
                }
            }
            t.push(ti);
            a.push(ai);
        }
        let mut cum = vec![0.0; t.len()];
        for i in 1..t.len() {
            cum[i] = cum[i - 1] + 0.5 * (a[i] + a[i - 1]) * (t[i] - t[i - 1]);
        }
        Ok(TabulatedDensity { t, a, cum })
    }

    /// Parse the CSV content (`t,a` per line; `#` comments and a
    /// `t,a` header line are allowed).
    pub fn from_csv(content: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (lineno, line) in content.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split(',').map(str::trim);
            let (ts, as_) = match (fields.next(), fields.next()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "tabulated csv line {}: expected `t,a`",
                        lineno + 1
                    )))
                }
            };
            if ts.eq_ignore_ascii_case("t") {
                continue; // header
            }
            let t: f64 = ts.parse().map_err(|_| {
                Error::InvalidInput(format!("tabulated csv line {}: bad t value", lineno + 1))
            })?;
            let a: f64 = as_.parse().map_err(|_| {
                Error::InvalidInput(format!("tabulated csv line {}: bad a value", lineno + 1))
            })?;
            points.push((t, a));
        }
        TabulatedDensity::new(points)
    }

    pub fn density(&self, x: f64) -> f64 {
        let n = self.t.len();
        if x >= self.t[n - 1] {
            return self.a[n - 1];
        }
        let i = self.t.partition_point(|&ti| ti <= x);
        // x in [t[i-1], t[i])
        let (t0, t1) = (self.t[i - 1], self.t[i]);
        let (a0, a1) = (self.a[i - 1], self.a[i]);
        a0 + (a1 - a0) * (x - t0) / (t1 - t0)
    }

    pub fn value(&self, x: f64) -> f64 {
        let n = self.t.len();
        if x >= self.t[n - 1] {
            return self.cum[n - 1] + self.a[n - 1] * (x - self.t[n - 1]);
        }
        let i = self.t.partition_point(|&ti| ti <= x);
        let t0 = self.t[i - 1];
        self.cum[i - 1] + 0.5 * (self.density(x) + self.a[i - 1]) * (x - t0)
    }
}
