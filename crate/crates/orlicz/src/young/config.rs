//! JSON configuration for Young functions.
//!
//! ```json
//! {"kind": "power", "p": 2.0}
//! {"kind": "p_q", "p": 2.0, "q": 3.5}
//! {"kind": "p_log", "p": 2.0, "q": 1.0, "r": 1.0}
//! {"kind": "exp_minus_taylor", "k": 2}
//! {"kind": "double_exp"}
//! {"kind": "exp_neg_power", "r": 1.0}
//! {"kind": "tabulated", "csv": "density.csv"}
//! ```

use super::{TabulatedDensity, YoungFunction};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum YoungSpec {
    Power {
        p: f64,
        #[serde(default = "one")]
        coeff: f64,
    },
    #[serde(rename = "p_q")]
    PQ { p: f64, q: f64 },
    #[serde(rename = "p_log")]
    PLog { p: f64, q: f64, r: f64 },
    ExpMinusTaylor { k: u32 },
    DoubleExp,
    ExpNegPower { r: f64 },
    /// Path to a CSV of `(t, a(t))` pairs, resolved against the
    /// config file's directory.
    Tabulated { csv: String },
}

impl YoungSpec {
    /// Validate parameters; returns `field: problem` strings.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            YoungSpec::Power { p, coeff } => {
                if !(*p >= 1.0) {
                    out.push(format!("young.p: must be >= 1, got {p}"));
                }
                if !(*coeff > 0.0) {
                    out.push(format!("young.coeff: must be > 0, got {coeff}"));
                }
            }
            YoungSpec::PQ { p, q } => {
                if !(*p >= 1.0) {
                    out.push(format!("young.p: must be >= 1, got {p}"));
                }
                if !(q > p) {
                    out.push(format!("young.q: must exceed p, got p={p}, q={q}"));
                }
            }
            YoungSpec::PLog { p, q, r } => {
                if !(*p >= 1.0) {
                    out.push(format!("young.p: must be >= 1, got {p}"));
                }
                if !(*q > 0.0) {
                    out.push(format!("young.q: must be > 0, got {q}"));
                }
                if !(*r >= 0.0) {
                    out.push(format!("young.r: must be >= 0, got {r}"));
                }
            }
            YoungSpec::ExpMinusTaylor { k } => {
                if *k < 1 || *k > 120 {
                    out.push(format!("young.k: must be in 1..=120, got {k}"));
                }
            }
            YoungSpec::DoubleExp => {}
            YoungSpec::ExpNegPower { r } => {
                if !(*r > 0.0) {
                    out.push(format!("young.r: must be > 0, got {r}"));
                }
            }
            YoungSpec::Tabulated { csv } => {
                if csv.is_empty() {
                    out.push("young.csv: path must be nonempty".to_string());
                }
            }
        }
        out
    }

    /// Build the function; `base_dir` anchors relative CSV paths.
    pub fn build(&self, base_dir: &Path) -> Result<YoungFunction> {
        if let Some(problem) = self.problems().into_iter().next() {
            return Err(Error::InvalidInput(problem));
        }
        Ok(match self {
            YoungSpec::Power { p, coeff } => YoungFunction::power_scaled(*coeff, *p),
            YoungSpec::PQ { p, q } => YoungFunction::power_sum(*p, *q),
            YoungSpec::PLog { p, q, r } => YoungFunction::power_log(*p, *q, *r),
            YoungSpec::ExpMinusTaylor { k } => YoungFunction::exp_minus_taylor(*k),
            YoungSpec::DoubleExp => YoungFunction::double_exp(),
            YoungSpec::ExpNegPower { r } => YoungFunction::exp_neg_power(*r),
            YoungSpec::Tabulated { csv } => {
                let path = base_dir.join(csv);
                let content = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                YoungFunction::tabulated(TabulatedDensity::from_csv(&content)?)
            }
        })
    }
}
