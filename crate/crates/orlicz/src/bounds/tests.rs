use super::*;
use crate::quad::log_grid;
use crate::young::YoungFunction;

fn rel_close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * b.abs().max(1e-300)
}

/// Symbolic oracle for the auxiliary function of a pure power:
/// A = t^p gives Ã = c′ t^{p′} and E(t) = c′/(m − p′) · t^{p′}.
fn power_e_oracle(p: f64, n: usize, s: f64) -> (f64, f64) {
    let m = n as f64 / (n as f64 - s);
    let pp = p / (p - 1.0);
    let cc = (1.0 - 1.0 / p) * p.powf(-1.0 / (p - 1.0));
    assert!(pp < m, "oracle valid only under the supercritical condition");
    (cc / (m - pp), pp)
}

#[test]
fn condition_fixtures() {
    // fast growth: conjugate tail integral converges
    let c = check_conditions(&YoungFunction::power(4.0), 1, 0.5);
    assert_eq!(c.supercritical, Classification::Holds);

    // slow growth in 2d: diverges at infinity, converges at zero
    let c = check_conditions(&YoungFunction::power(2.0), 2, 0.5);
    assert_eq!(c.supercritical, Classification::Fails);
    assert_eq!(c.subcritical, Classification::Holds);

    // boundary-Hardy scaling for t² at n/s = 2: index equals the cap
    let c = check_conditions(&YoungFunction::power(2.0), 1, 0.5);
    assert_eq!(c.hardy_scaling, Classification::Holds);

    // exponential growth fails the scaling cap outright
    let c = check_conditions(&YoungFunction::exp_minus_taylor(2), 2, 0.5);
    assert_eq!(c.hardy_scaling, Classification::Fails);
    assert!(c.evidence.index_global.is_infinite());
}

#[test]
fn power_condition_exponent_law() {
    // for A = t^p the tail integrand is t^{(1−p)s/(n−s)}: the integral
    // converges iff (p−1)s/(n−s) > 1
    for &(p, n, s) in &[(4.0, 1usize, 0.5), (3.0, 1, 0.4), (2.0, 2, 0.5), (6.0, 2, 0.4)] {
        let want = (p - 1.0) * s / (n as f64 - s) > 1.0;
        let c = check_conditions(&YoungFunction::power(p), n, s);
        assert_eq!(
            c.supercritical.holds(),
            want,
            "p={p}, n={n}, s={s}: {:?}",
            c.evidence.tail_slopes_inf
        );
    }
    // borderline exponent is inconclusive, not a guess
    let c = check_conditions(&YoungFunction::power(2.0), 1, 0.5);
    assert_eq!(c.supercritical, Classification::Inconclusive);
}

#[test]
fn e_matches_power_oracle() {
    let f = YoungFunction::power(4.0);
    let (ce, pe) = power_e_oracle(4.0, 1, 0.5);
    // frozen from the oracle: E(1) = 3·4^{−4/3}·(3/2) ≈ 0.7087094…
    assert!(rel_close(ce, 0.708_709_470_462_702_4, 1e-12));
    let ef = EFunction::new(&f, 1, 0.5).unwrap();
    for &t in &[0.01, 0.1, 1.0, 10.0, 100.0] {
        let want = ce * t.powf(pe);
        assert!(
            rel_close(ef.eval(t), want, 2e-3),
            "table at t={t}: {} vs {want}",
            ef.eval(t)
        );
        let direct = e_value(&f, 1, 0.5, t).unwrap();
        assert!(rel_close(direct, want, 1e-6), "direct at t={t}: {direct} vs {want}");
    }
    // vanishing prefactor against a convergent integral
    assert!(e_value(&f, 1, 0.5, 0.0).unwrap() == 0.0);
    assert!(ef.eval(1e-6) < 1e-7);
    // inverse round-trip
    let y = ef.eval(2.5);
    assert!(rel_close(ef.inverse(y), 2.5, 1e-6));
}

#[test]
fn e_requires_supercritical_growth() {
    match EFunction::new(&YoungFunction::power(2.0), 2, 0.5) {
        Err(Error::SupercriticalConditionViolated) => {}
        other => panic!("expected condition violation, got {other:?}"),
    }
    assert!(e_value(&YoungFunction::power(2.0), 2, 0.5, 1.0).is_err());
}

#[test]
fn e_monotone_and_table_agrees_with_quadrature() {
    let f = YoungFunction::power_sum(2.0, 4.0);
    let ef = EFunction::new(&f, 1, 0.5).unwrap();
    let grid = log_grid(1e-2, 1e2, 4);
    let mut prev = 0.0;
    for &t in &grid {
        let v = ef.eval(t);
        assert!(v >= prev, "E not monotone at t = {t}");
        prev = v;
    }
    for &t in &[0.1, 1.0, 10.0] {
        let direct = e_value(&f, 1, 0.5, t).unwrap();
        assert!(
            rel_close(ef.eval(t), direct, 5e-3),
            "t={t}: table {} vs quadrature {direct}",
            ef.eval(t)
        );
    }
}

#[test]
fn psi_nondecreasing_and_dual_equivalent() {
    let f = YoungFunction::power(4.0);
    let ef = EFunction::new(&f, 1, 0.5).unwrap();
    let grid = log_grid(1e-2, 1e2, 4);
    let mut prev = 0.0;
    let mut ratios = Vec::new();
    for &r in &grid {
        let v = ef.psi(r);
        assert!(v >= prev * (1.0 - 1e-9), "psi decreased at r = {r}");
        prev = v;
        ratios.push(ef.psi_dual(r) / v);
    }
    // the two forms agree within a constant factor
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0_f64, f64::max);
    assert!(lo > 0.2 && hi < 5.0 && hi / lo < 3.0, "dual ratio range [{lo}, {hi}]");
}

#[test]
fn psi_tracks_inverse_for_supercritical_power() {
    // Ψ_s(r) = c · r^s A⁻¹(r^{−n}) exactly for a supercritical power
    let f = YoungFunction::power(4.0);
    let ef = EFunction::new(&f, 1, 0.5).unwrap();
    let mut ratios = Vec::new();
    for &r in &log_grid(1e-2, 1.0, 4) {
        let psi = ef.psi(r);
        let cmp = r.powf(0.5) * f.inverse(r.powf(-1.0)).unwrap();
        ratios.push(psi / cmp);
    }
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0_f64, f64::max);
    assert!(hi / lo < 1.05, "ratio not constant: [{lo}, {hi}]");
    assert!(lo > 1.0 / 8.0 && hi < 8.0);
    // frozen oracle value of the constant: c_E^{1/p'} = 0.7087094…^{0.75}
    assert!(rel_close(0.5 * (lo + hi), 0.708_709_470_462_702_4f64.powf(0.75), 1e-2));
}

#[test]
fn inradius_matuszewska_examples() {
    // power: value = C·r^{n−sp}/ω; frozen (1/2)^{1−3} = 4
    let f = YoungFunction::power(4.0);
    let rep = bound_matuszewska_inradius(&f, 1, 0.75, 0.5, 1.0, AlphaRegime::AboveAlpha0, 1.0).unwrap();
    assert!(rep.applicable);
    assert!(rel_close(rep.value, 4.0, 1e-12), "value = {}", rep.value);

    // r^s = 1 makes the growth factor drop out
    let rep = bound_matuszewska_inradius(&f, 1, 0.75, 1.0, 2.0, AlphaRegime::BelowAlpha0, 1.0).unwrap();
    assert!(rel_close(rep.value, 0.5, 1e-12));

    // p-q oracle: M = max{t², t⁴}, M(2^{3/4}) = 2³ = 8, value = 2/8
    let f = YoungFunction::power_sum(2.0, 4.0);
    let rep = bound_matuszewska_inradius(&f, 1, 0.75, 2.0, 1.0, AlphaRegime::AboveAlpha0, 1.0).unwrap();
    assert!(rep.applicable);
    assert!(rel_close(rep.value, 0.25, 1e-12), "value = {}", rep.value);
}

#[test]
fn inradius_matuszewska_inapplicable_paths() {
    // index condition fails: i0 = 2 < n/s = 4 in the below regime
    let f = YoungFunction::power_sum(2.0, 8.0);
    let rep = bound_matuszewska_inradius(&f, 2, 0.5, 0.5, 1.0, AlphaRegime::BelowAlpha0, 1.0).unwrap();
    assert!(!rep.applicable && rep.value == 0.0);
    assert!(rep.reasons.iter().any(|r| r.contains("index")), "{:?}", rep.reasons);

    // growth function infinite at r^s > 1 for a non-doubling kind
    let f = YoungFunction::exp_minus_taylor(3);
    let rep = bound_matuszewska_inradius(&f, 1, 0.75, 4.0, 1.0, AlphaRegime::BelowAlpha0, 1.0).unwrap();
    assert!(!rep.applicable);
    assert!(rep.reasons.iter().any(|r| r.contains("infinite")), "{:?}", rep.reasons);

    // same kind is applicable when r ≤ 1 (growth function finite there)
    let rep = bound_matuszewska_inradius(&f, 1, 0.75, 0.5, 1.0, AlphaRegime::BelowAlpha0, 1.0).unwrap();
    assert!(rep.applicable, "{:?}", rep.reasons);
}

#[test]
fn inverse_form_examples() {
    // power kind: value = r^{n−sp} C^{−p} / ω, independent of α
    let f = YoungFunction::power(4.0);
    let v1 = bound_inverse_inradius(&f, 1, 0.75, 2.0, 1.0, 0.1, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    let v2 = bound_inverse_inradius(&f, 1, 0.75, 2.0, 1.0, 100.0, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    assert!(rel_close(v1, v2, 1e-10), "α-dependence: {v1} vs {v2}");
    assert!(rel_close(v1, 2.0f64.powf(1.0 - 3.0), 1e-10));

    // A∘A⁻¹ identity case: α = ω, C·r^s = 1
    let f = YoungFunction::power_sum(2.0, 3.0);
    let rep = bound_inverse_inradius(&f, 1, 0.75, 1.0, 2.0, 2.0, AlphaRegime::AboveAlpha0, 1.0).unwrap();
    assert!(rel_close(rep.value, 1.0 / 2.0, 1e-8), "value = {}", rep.value);

    // the two inradius bounds coincide for powers at C = 1
    let f = YoungFunction::power(4.0);
    for &r in &[0.5, 1.0, 2.0] {
        let a = bound_matuszewska_inradius(&f, 1, 0.75, r, 1.0, AlphaRegime::AboveAlpha0, 1.0)
            .unwrap()
            .value;
        let b = bound_inverse_inradius(&f, 1, 0.75, r, 1.0, 1.0, AlphaRegime::AboveAlpha0, 1.0)
            .unwrap()
            .value;
        assert!(rel_close(a, b, 1e-10), "r={r}: {a} vs {b}");
    }
}

#[test]
fn diameter_examples() {
    let f = YoungFunction::power(2.0);
    let rep = bound_matuszewska_diameter(&f, 2, 0.5, 1.0, 1.0, 1.0).unwrap();
    assert!(rep.applicable);
    assert!(rel_close(rep.value, 1.0, 1e-12));
    let rep = bound_matuszewska_diameter(&f, 2, 0.5, 2.0, 1.0, 1.0).unwrap();
    assert!(rel_close(rep.value, 0.5, 1e-12));

    // infinite growth index: inapplicable
    let rep = bound_matuszewska_diameter(&YoungFunction::double_exp(), 2, 0.5, 1.0, 1.0, 1.0).unwrap();
    assert!(!rep.applicable);
    assert!(rep.reasons.iter().any(|r| r.contains("index")), "{:?}", rep.reasons);
}

#[test]
fn delta2_inradius_examples() {
    let f = YoungFunction::power_sum(2.0, 3.0);
    let rep = bound_delta2_inradius(&f, 2, 0.5, 1.0, 2.0, 1.0).unwrap();
    assert!(rep.applicable, "{:?}", rep.reasons);
    assert!(rel_close(rep.value, 0.5, 1e-12));
    // M(4^{1/2}) = max{4, 8} = 8
    let rep = bound_delta2_inradius(&f, 2, 0.5, 4.0, 1.0, 1.0).unwrap();
    assert!(rel_close(rep.value, 1.0 / 8.0, 1e-12), "value = {}", rep.value);

    // subcritical power shape: value = C/(ω·r^{sp})
    let f = YoungFunction::power(2.0);
    let rep = bound_delta2_inradius(&f, 2, 0.4, 3.0, 1.0, 1.0).unwrap();
    assert!(rep.applicable, "{:?}", rep.reasons);
    assert!(rel_close(rep.value, 3.0f64.powf(-0.8), 1e-12));

    // non-doubling kind: inapplicable
    let rep = bound_delta2_inradius(&YoungFunction::exp_minus_taylor(2), 2, 0.5, 0.5, 1.0, 1.0).unwrap();
    assert!(!rep.applicable);
}

#[test]
fn eigenvalue_interval_examples() {
    use crate::extreal::ExtReal;
    let (lo, hi) = eigenvalue_interval(2.0, ExtReal(3.0)).unwrap();
    assert!(rel_close(lo, 2.0 / 3.0, 1e-15) && rel_close(hi, 6.0, 1e-15));
    let (lo, hi) = eigenvalue_interval(5.0, ExtReal(1.0)).unwrap();
    assert_eq!((lo, hi), (5.0, 5.0));
    match eigenvalue_interval(1.0, ExtReal::INF) {
        Err(Error::IntervalUnbounded) => {}
        other => panic!("expected unbounded interval, got {other:?}"),
    }
}

#[test]
fn calibration_and_monotonicity_invariants() {
    let f = YoungFunction::power(4.0);
    let base = bound_matuszewska_inradius(&f, 1, 0.75, 2.0, 1.0, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    let scaled = bound_matuszewska_inradius(&f, 1, 0.75, 2.0, 1.0, AlphaRegime::AboveAlpha0, 3.0)
        .unwrap()
        .value;
    assert!(rel_close(scaled, 3.0 * base, 1e-12));

    // inverse form decreases in C
    let f2 = YoungFunction::power_sum(2.0, 3.0);
    let mut prev = f64::INFINITY;
    for &c in &[0.5, 1.0, 2.0, 4.0] {
        let v = bound_inverse_inradius(&f2, 1, 0.75, 1.0, 1.0, 1.0, AlphaRegime::AboveAlpha0, c)
            .unwrap()
            .value;
        assert!(v < prev, "not decreasing in C at {c}");
        prev = v;
    }

    // nonincreasing in the weight norm and in r (supercritical power)
    let v_small = bound_matuszewska_inradius(&f, 1, 0.75, 2.0, 1.0, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    let v_big_w = bound_matuszewska_inradius(&f, 1, 0.75, 2.0, 5.0, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    assert!(v_big_w < v_small);
    let v_big_r = bound_matuszewska_inradius(&f, 1, 0.75, 4.0, 1.0, AlphaRegime::AboveAlpha0, 1.0)
        .unwrap()
        .value;
    assert!(v_big_r < v_small);
}

#[test]
fn power_law_slopes_in_radius() {
    use crate::quad::ls_slope;
    // inradius-L¹ bound: slope n − sp; doubling-inradius bound: −sp
    let f = YoungFunction::power(4.0);
    let radii = [0.5, 1.0, 2.0, 4.0];
    let lx: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let ly: Vec<f64> = radii
        .iter()
        .map(|&r| {
            bound_matuszewska_inradius(&f, 1, 0.75, r, 1.0, AlphaRegime::AboveAlpha0, 1.0)
                .unwrap()
                .value
                .ln()
        })
        .collect();
    assert!(rel_close(ls_slope(&lx, &ly), 1.0 - 3.0, 1e-9));

    let f = YoungFunction::power(2.0);
    let ly: Vec<f64> = radii
        .iter()
        .map(|&r| bound_delta2_inradius(&f, 2, 0.4, r, 1.0, 1.0).unwrap().value.ln())
        .collect();
    assert!(rel_close(ls_slope(&lx, &ly), -0.8, 1e-9));
}
