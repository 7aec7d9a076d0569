use super::*;
use crate::quad::log_grid;

fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * b.abs().max(1.0e-300)
}

#[test]
fn eval_closed_forms() {
    let f = YoungFunction::power(2.0);
    assert_eq!(f.value(3.0), 9.0);
    let f = YoungFunction::power_sum(2.0, 3.0);
    assert!(rel_close(f.value(1.0), 5.0 / 6.0, 1e-15));
    let f = YoungFunction::exp_minus_taylor(2);
    assert_eq!(f.value(0.0), 0.0);
    // e^1 - 1 - 1
    assert!(rel_close(f.value(1.0), std::f64::consts::E - 2.0, 1e-14));
}

#[test]
fn exp_kinds_survive_tiny_arguments() {
    // series path: A(t) ~ t^k/k! with no cancellation
    let f = YoungFunction::exp_minus_taylor(3);
    let t = 1e-7;
    // series value includes the t^{k+1} correction the leading term lacks
    assert!(rel_close(f.value(t), t * t * t / 6.0 + t * t * t * t / 24.0, 1e-12));
    // ln path works far below the linear underflow range
    let lt = f.ln_value(1e-200);
    assert!(rel_close(lt, 3.0 * (1e-200f64).ln() - 6f64.ln(), 1e-12));
    // double exp behaves like e·t near zero
    let g = YoungFunction::double_exp();
    assert!(rel_close(g.value(1e-9), std::f64::consts::E * 1e-9, 1e-6));
}

#[test]
fn eval_overflow_signals_threshold() {
    let f = YoungFunction::exp_minus_taylor(1);
    match f.value_checked(800.0) {
        Err(Error::Overflow { threshold }) => assert_eq!(threshold, SATURATION),
        other => panic!("expected overflow, got {other:?}"),
    }
    assert_eq!(f.value(800.0), SATURATION);
}

#[test]
fn inverse_closed_and_bisected() {
    let f = YoungFunction::power(2.0);
    assert!(rel_close(f.inverse(9.0).unwrap(), 3.0, 1e-12));
    assert_eq!(f.inverse(0.0).unwrap(), 0.0);
    // derived: forward evaluation A(1) = 1/2 + 1/4 = 3/4
    let f = YoungFunction::power_sum(2.0, 4.0);
    assert!(rel_close(f.value(1.0), 0.75, 1e-15));
    let t = f.inverse(0.75).unwrap();
    assert!(rel_close(t, 1.0, 1e-8), "t = {t}");
}

#[test]
fn inverse_round_trip_on_probe_grid() {
    for f in [
        YoungFunction::power(1.5),
        YoungFunction::power_sum(2.0, 3.0),
        YoungFunction::power_log(2.0, 1.0, 1.0),
        YoungFunction::exp_minus_taylor(2),
    ] {
        for &t in &log_grid(1e-4, 1e2, 2) {
            let y = f.value(t);
            if y >= SATURATION {
                continue;
            }
            let back = f.inverse(y).unwrap();
            assert!(
                rel_close(f.value(back), y, 1e-8),
                "{}: t = {t}, back = {back}",
                f.describe()
            );
        }
    }
}

#[test]
fn inverse_out_of_bracket_for_bounded_function() {
    let f = YoungFunction::exp_neg_power(1.0);
    match f.inverse(2.0) {
        Err(Error::InverseOutOfBracket { target, .. }) => assert_eq!(target, 2.0),
        other => panic!("expected out-of-bracket, got {other:?}"),
    }
}

#[test]
fn conjugate_closed_forms() {
    // t²/2 is self-conjugate
    let f = YoungFunction::power_scaled(0.5, 2.0);
    let c = f.conjugate();
    for &t in &[0.1, 1.0, 7.3] {
        assert!(rel_close(c.value(t), 0.5 * t * t, 1e-14));
    }
    // (t³/3)~ = t^{3/2}/(3/2)
    let f = YoungFunction::power_scaled(1.0 / 3.0, 3.0);
    let c = f.conjugate();
    for &t in &[0.25f64, 1.0, 4.0] {
        let want = t.powf(1.5) / 1.5;
        assert!(rel_close(c.value(t), want, 1e-14));
    }
}

#[test]
fn conjugate_numeric_matches_closed_form() {
    let f = YoungFunction::power(3.0);
    let closed = f.conjugate();
    let numeric = f.conjugate_numeric();
    for &t in &log_grid(1e-3, 1e3, 1) {
        let c = closed.value(t);
        let n = numeric.value(t);
        assert!(rel_close(n, c, 1e-10), "t = {t}: closed {c}, numeric {n}");
    }
}

#[test]
fn duality_sandwich_instance() {
    // t ≤ A⁻¹(t)·Ã⁻¹(t) ≤ 2t at t = 1 for A = t³
    let f = YoungFunction::power(3.0);
    let c = f.conjugate();
    let prod = f.inverse(1.0).unwrap() * c.inverse(1.0).unwrap();
    assert!((1.0..=2.0 + 1e-9).contains(&prod), "prod = {prod}");
}

#[test]
fn biconjugation_recovers_function() {
    let f = YoungFunction::power_sum(2.0, 3.0);
    let bi = f.conjugate().conjugate();
    for &t in &[1e-3, 0.1, 1.0, 10.0, 1e3] {
        let v = bi.value(t);
        let want = f.value(t);
        assert!(rel_close(v, want, 1e-8), "t = {t}: {v} vs {want}");
    }
}

#[test]
fn conjugate_infinite_for_linear_growth() {
    // constant density: A(t) = t, conjugate infinite for t > 1
    let tab = TabulatedDensity::new(vec![(0.0, 1.0), (1.0, 1.0)]).unwrap();
    let f = YoungFunction::tabulated(tab);
    let c = f.conjugate();
    match c.value_checked(2.0) {
        Err(Error::ConjugateInfinite { t }) => assert_eq!(t, 2.0),
        other => panic!("expected conjugate-infinite, got {other:?}"),
    }
    // below the slope the supremum is finite (and zero at t <= a)
    assert!(c.value_checked(0.5).unwrap() <= 1e-12);
}

#[test]
fn classify_doubling_catalog() {
    let d = YoungFunction::power(2.0).classify_doubling(1e-4, 1e4).unwrap();
    assert!(d.delta2_global && d.delta2_zero && d.delta2_inf);
    assert_eq!(d.p_plus.0, 2.0);
    assert_eq!(d.p_minus.0, 2.0);

    let d = YoungFunction::exp_minus_taylor(2)
        .classify_doubling(1e-4, 1e4)
        .unwrap();
    assert!(d.delta2_zero && !d.delta2_inf && !d.delta2_global);
    assert!(d.p_plus.is_infinite());

    let d = YoungFunction::power_log(2.0, 1.0, 1.0)
        .classify_doubling(1e-4, 1e4)
        .unwrap();
    assert_eq!(d.p_plus.0, 3.0);
    assert_eq!(d.p_minus.0, 2.0);
    assert!(d.delta2_global);
}

#[test]
fn classify_doubling_numeric_agrees_for_tabulated_power() {
    // tabulated t² density: numeric path must find exponent ~2 and both flags
    let pts: Vec<(f64, f64)> = (0..=400).map(|i| (i as f64 * 0.05, i as f64 * 0.1)).collect();
    let f = YoungFunction::tabulated(TabulatedDensity::new(pts).unwrap());
    let d = f.classify_doubling(1e-2, 1e1).unwrap();
    assert!(d.delta2_zero && d.delta2_inf);
    assert!((d.p_plus.0 - 2.0).abs() < 0.1, "p_plus = {}", d.p_plus.0);
    assert!((d.c_zero.0 - 4.0).abs() < 0.2, "c_zero = {}", d.c_zero.0);
}

#[test]
fn degenerate_density_detected() {
    // a == 0 on an initial segment: A(t) = 0 for t in it
    let tab = TabulatedDensity::new(vec![(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)]).unwrap();
    let f = YoungFunction::tabulated(tab);
    match f.classify_doubling(1e-3, 1e2) {
        Err(Error::DegenerateYoung { .. }) => {}
        other => panic!("expected degenerate, got {other:?}"),
    }
}

#[test]
fn doubling_power_bound_for_delta2_kinds() {
    // A ∈ Δ₂ with exponent p = p_plus: min{τ,τ^p}A(t) ≤ A(tτ) ≤ max{τ,τ^p}A(t)
    for f in [
        YoungFunction::power(2.0),
        YoungFunction::power_sum(2.0, 3.0),
        YoungFunction::power_log(2.0, 1.0, 1.0),
    ] {
        let p = f.classify_doubling(1e-4, 1e4).unwrap().p_plus.0;
        for &t in &[0.05, 0.7, 3.0] {
            for &tau in &[0.1, 0.5, 2.0, 20.0] {
                let at = f.value(t);
                let atau = f.value(t * tau);
                let lo = tau.min(tau.powf(p)) * at;
                let hi = tau.max(tau.powf(p)) * at;
                assert!(
                    atau >= lo * (1.0 - 1e-9) && atau <= hi * (1.0 + 1e-9),
                    "{}: t={t} tau={tau}: {lo} <= {atau} <= {hi}",
                    f.describe()
                );
            }
        }
    }
}

#[test]
fn validate_catalog() {
    for f in [
        YoungFunction::power(2.0),
        YoungFunction::power(1.5),
        YoungFunction::power_sum(2.0, 3.0),
        YoungFunction::power_log(2.0, 1.0, 1.0),
        YoungFunction::exp_minus_taylor(1),
        YoungFunction::exp_minus_taylor(3),
        YoungFunction::double_exp(),
    ] {
        let v = f.validate();
        assert!(v.is_empty(), "{}: {v:?}", f.describe());
    }
    // the bounded catalog fixture is convex only near zero and must say so
    let v = YoungFunction::exp_neg_power(1.0).validate();
    assert!(v.iter().any(|m| m.contains("convexity") || m.contains("a not nondecreasing")), "{v:?}");
}

#[test]
fn op_level_eval_dispatch() {
    let f = YoungFunction::power(3.0);
    assert_eq!(eval(&f, 2.0, EvalTarget::Function).unwrap(), 8.0);
    assert_eq!(eval(&f, 2.0, EvalTarget::Density).unwrap(), 12.0);
    assert!(eval(&f, f64::NAN, EvalTarget::Function).is_err());
}
