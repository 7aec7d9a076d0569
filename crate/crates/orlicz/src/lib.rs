//! Young-function calculus, Matuszewska-Orlicz growth analysis, and
//! discretized eigenvalue estimation for nonlocal operators of
//! Orlicz type.
//!
//! The crate is organized around five building blocks:
//!
//! - [`young`]: Young functions `A(t) = ∫₀ᵗ a(τ)dτ` with evaluation,
//!   inversion, Legendre conjugation and doubling-condition
//!   classification.
//! - [`matuszewska`]: the growth functions
//!   `M(t) = sup_α A(αt)/A(α)` (plus the liminf variants at `α → 0`
//!   and `α → ∞`) and the associated growth indices.
//! - [`bounds`]: integral growth conditions, the auxiliary Young
//!   function `E` with its Morrey modulus `Ψ_s`, and geometric lower
//!   bounds for first critical values and eigenvalues.
//! - [`domain`]: rasterized 1d/2d domains with boundary distance
//!   field, inradius, diameter and measure.
//! - [`spectral`]: the discretized Gagliardo-type modular, projected
//!   descent minimization of the Rayleigh quotient, and the
//!   verification functionals (Morrey/Hardy ratios, energy map,
//!   Luxemburg norm).
//!
//! All types are immutable after construction and every operation is
//! a pure function, so shared values can be used concurrently. The
//! pairwise kernel sums are data-parallel; they run on rayon when the
//! `parallel` feature (default) is enabled and fall back to
//! sequential loops otherwise. Parallel reductions use fixed chunk
//! boundaries so results are bit-identical regardless of thread count.

pub mod bounds;
pub mod domain;
pub mod error;
pub mod extreal;
pub mod matuszewska;
pub mod parallel;
pub mod quad;
pub mod spectral;
pub mod table;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
pub use extreal::ExtReal;
