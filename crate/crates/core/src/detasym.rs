//! The constants `G(sigma)` and `E(sigma)` (closed forms plus independent
//! quadrature cross-checks) and the determinant asymptotics: Kac-Achieser for
//! regular symbols, the two-simple-zero and double-zero formulas, and the
//! dual-contour two-term representation.

use crate::quad::{adaptive, cells_rule, dyadic_toward};
use crate::ratcalc::{Pt, RationalFunction, Side};
use crate::report::{DetDiagnostics, DetReport};
use crate::symbolmodel::{factorize, half_sign, Contour, Factorization, SingularSymbol};
use crate::{Result, WhError, C, I, ONE, ZERO};

/// `log G` as `-(i/2) [ sum_z z s(z) - sum_w w s(w) ]` over the zeros and
/// poles of `sigma`, with `s = +-1` for the (assigned) upper/lower
/// half-plane.
pub fn g_exponent_closed(f: &Factorization) -> Result<C> {
    let mut acc = ZERO;
    for z in &f.sigma.zeros {
        acc += z.at * half_sign(z)?;
    }
    for w in &f.sigma.poles {
        acc -= w.at * half_sign(w)?;
    }
    Ok(-0.5 * I * acc)
}

/// `log G` by direct quadrature of `(1/2pi) int log sigma dxi`.
///
/// The boundary factors `log(xi - zeta -+ 0i)` are integrated in closed form
/// with their explicit branch (`-i pi` below the branch point for the `-0i`
/// determination, `+i pi` for `+0i`); the remaining `log tau` is smooth with
/// winding zero and is integrated with sequential phase unwrapping.  The
/// tails `|xi| > L` are folded symmetrically and integrated adaptively.
pub fn g_exponent_quadrature(f: &Factorization) -> Result<C> {
    let ell = cutoff(f);
    let tau = &f.symbol.tau; // sigma itself in the regular case
    let mut main = ZERO;
    // analytic boundary pieces
    for zeta in [f.zeta_minus, f.zeta_plus].into_iter().flatten() {
        main += log_linear_integral(zeta, ell)?;
    }
    // smooth log tau with phase unwrapping
    let margin = f.pole_margin.min(1.0).max(0.05);
    let panels = (2.0 * ell / margin).ceil() as usize;
    let (nodes, weights) = crate::quad::panel_rule(-ell, ell, panels, 20);
    let mut theta_prev = 0.0f64;
    let mut first = true;
    for (&x, &w) in nodes.iter().zip(&weights) {
        let v = tau.eval(C::new(x, 0.0));
        let principal = v.arg();
        let theta = if first {
            first = false;
            principal
        } else {
            unwrap_phase(theta_prev, principal)
        };
        theta_prev = theta;
        main += w * C::new(v.norm().ln(), theta);
    }
    // tails, folded: int_L^inf [Log sigma(xi) + Log sigma(-xi)] dxi
    let sigma = &f.sigma;
    for s in [1.0, -1.0] {
        let v = sigma.eval(C::new(s * ell, 0.0));
        if v.arg().abs() > 0.5 {
            return Err(WhError::BranchInconsistency { diff: v.arg().abs() });
        }
    }
    let tail = adaptive(
        &|t: f64| {
            let xi = ell / t;
            let a = sigma.eval(C::new(xi, 0.0)).ln();
            let b = sigma.eval(C::new(-xi, 0.0)).ln();
            (a + b) * (ell / (t * t))
        },
        0.0,
        1.0,
        1e-12,
    )?;
    Ok((main + tail) / (2.0 * std::f64::consts::PI))
}

/// Closed-form and quadrature `G`, with their relative discrepancy.  The
/// discrepancy is required to be below 1e-6.
pub fn g_full(f: &Factorization) -> Result<(C, f64)> {
    let closed = g_exponent_closed(f)?;
    let quad = g_exponent_quadrature(f)?;
    let diff = (closed - quad).norm();
    if diff > 1e-6 {
        return Err(WhError::BranchInconsistency { diff });
    }
    Ok((closed.exp(), diff))
}

pub fn g_constant(f: &Factorization) -> Result<C> {
    Ok(g_full(f)?.0)
}

/// Closed-form `E = prod sigma_minus(b) / prod sigma_minus(a)` over the
/// poles `b` and zeros `a` of `sigma_plus`.  For `p = 0` the boundary zero's
/// divergent factor cancels against the vanishing of `sigma_minus` at the
/// origin; the finite limit replaces `sigma_minus(boundary)` by
/// `tau_minus(0)` (the value consistent with Theorem 4 being the `p -> 0`
/// limit of Theorem 3).
pub fn e_closed_form(f: &Factorization) -> Result<C> {
    let mut val = ONE;
    for b in &f.sigma_plus.poles {
        val *= f.sigma_minus.eval(b.at);
    }
    let p0 = f.p() == Some(0.0);
    for a in &f.sigma_plus.zeros {
        let boundary = f.zeta_plus.map(|z| (z.at - a.at).norm() < 1e-14).unwrap_or(false);
        if boundary && p0 {
            val /= f.parts()?.balance;
        } else {
            val /= f.sigma_minus.eval(a.at);
        }
    }
    Ok(val)
}

/// `E` by quadrature of `(1/2pi i) int (log sigma_plus)' log sigma_minus`,
/// with the boundary zeros shifted off the axis by `i eps` ("first giving p
/// a small positive imaginary part") and Richardson extrapolation over
/// `eps in {1e-2, 5e-3, 2.5e-3}`.  Returns the extrapolated value and the
/// discrepancy between the two extrapolation levels.
pub fn e_quadrature(f: &Factorization) -> Result<(C, f64)> {
    if f.zeta_minus.is_none() {
        // regular symbol: no shift needed, single pass
        let v = e_quad_eps(f, 0.0)?;
        return Ok((v, 0.0));
    }
    let eps0 = 1e-2;
    let f1 = e_quad_eps(f, eps0)?;
    let f2 = e_quad_eps(f, eps0 / 2.0)?;
    let f3 = e_quad_eps(f, eps0 / 4.0)?;
    // first-order elimination twice: the shifted value is analytic in eps
    let g1 = 2.0 * f2 - f1;
    let g2 = 2.0 * f3 - f2;
    let val = (4.0 * g2 - g1) / 3.0;
    let diff = (g2 - g1).norm();
    if diff > (1e-6 * val.norm()).max(1e-9) {
        return Err(WhError::EQuadratureFailed { diff });
    }
    Ok((val, diff))
}

/// One `eps`-shifted pass of the `E` integral.
fn e_quad_eps(f: &Factorization, eps: f64) -> Result<C> {
    // shift boundary zeros off-axis: sigma_minus's zero up, sigma_plus's down
    let shift = |r: &RationalFunction, zeta: Option<Pt>, up: bool| -> RationalFunction {
        let mut out = r.clone();
        if let (Some(z), true) = (zeta, eps > 0.0) {
            for zr in out.zeros.iter_mut() {
                if (zr.at - z.at).norm() < 1e-14 {
                    zr.at += if up { I * eps } else { -I * eps };
                    zr.side = None;
                }
            }
        }
        out
    };
    let sm = shift(&f.sigma_minus, f.zeta_minus, true);
    let sp = shift(&f.sigma_plus, f.zeta_plus, false);

    let ell = cutoff(f);
    let deriv = |xi: C| -> C {
        let mut v = ZERO;
        for a in &sp.zeros {
            v += ONE / (xi - a.at);
        }
        for b in &sp.poles {
            v -= ONE / (xi - b.at);
        }
        v
    };

    // cells: a coarse grid plus dyadic refinement toward the shifted points
    let margin = f.pole_margin.min(1.0).max(0.05);
    let mut cells: Vec<(f64, f64)> = Vec::new();
    let mut marks: Vec<f64> = vec![-ell, ell];
    if let Some(p) = f.p() {
        marks.push(p);
        marks.push(-p);
    }
    marks.sort_by(f64::total_cmp);
    marks.dedup();
    let fine = (eps / 4.0).max(1e-6);
    for w in marks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a < 1e-12 {
            continue;
        }
        // refine toward both endpoints that are singular marks (+-p), coarse
        // in the middle
        let mid = 0.5 * (a + b);
        let interior_a = a > -ell + 1e-12;
        let interior_b = b < ell - 1e-12;
        if interior_a {
            let mut cs = dyadic_toward(mid, a, fine);
            cells.append(&mut cs);
        } else {
            coarse_cells(a, mid, margin, &mut cells);
        }
        if interior_b {
            let mut cs = dyadic_toward(mid, b, fine);
            cells.append(&mut cs);
        } else {
            coarse_cells(mid, b, margin, &mut cells);
        }
    }
    // orient and order all cells left to right for phase unwrapping
    for c in cells.iter_mut() {
        if c.0 > c.1 {
            *c = (c.1, c.0);
        }
    }
    cells.sort_by(|u, v| u.0.total_cmp(&v.0));
    let (nodes, weights) = cells_rule(&cells, 20);

    let mut total = ZERO;
    let mut theta_prev = 0.0;
    let mut first = true;
    let mut theta_at_mell = 0.0;
    let mut theta_at_pell = 0.0;
    for (&x, &w) in nodes.iter().zip(&weights) {
        let xi = C::new(x, 0.0);
        let v = sm.eval(xi);
        let principal = v.arg();
        let theta = if first {
            first = false;
            theta_at_mell = principal;
            principal
        } else {
            unwrap_phase(theta_prev, principal)
        };
        theta_prev = theta;
        theta_at_pell = theta;
        total += w * deriv(xi) * C::new(v.norm().ln(), theta);
    }
    // tails with the branch offset matched to the unwrapped interior phase
    for (s, theta_edge) in [(1.0f64, theta_at_pell), (-1.0, theta_at_mell)] {
        let edge = sm.eval(C::new(s * ell, 0.0));
        let k = ((theta_edge - edge.arg()) / (2.0 * std::f64::consts::PI)).round();
        let offset = C::new(0.0, 2.0 * std::f64::consts::PI * k);
        let tail = adaptive(
            &|t: f64| {
                let xi = C::new(s * ell / t, 0.0);
                deriv(xi) * (sm.eval(xi).ln() + offset) * (ell / (t * t))
            },
            0.0,
            1.0,
            1e-12,
        )?;
        total += tail;
    }
    let mut log_e = total / (2.0 * std::f64::consts::PI * I);
    // p = 0: the shifted integral computes E of the eps-regularized symbol;
    // the finite p = 0 constant is the limit of E_eps * sigma_minus_eps(-i eps) / tau_minus(0)
    if f.p() == Some(0.0) && eps > 0.0 {
        let corr = sm.eval(-I * eps) / f.parts()?.balance;
        log_e += corr.ln();
    }
    Ok(log_e.exp())
}

/// Closed-form and quadrature `E` with their relative discrepancy (must be
/// below 1e-6).
pub fn e_full(f: &Factorization) -> Result<(C, f64)> {
    let closed = e_closed_form(f)?;
    let (quad, rich_diff) = e_quadrature(f)?;
    let diff = (closed - quad).norm() / closed.norm().max(1e-300);
    if diff > 1e-6 {
        return Err(WhError::EQuadratureFailed { diff });
    }
    Ok((closed, diff.max(rich_diff)))
}

pub fn e_constant(f: &Factorization) -> Result<C> {
    Ok(e_full(f)?.0)
}

fn coarse_cells(a: f64, b: f64, width: f64, out: &mut Vec<(f64, f64)>) {
    let n = ((b - a) / width).ceil().max(1.0) as usize;
    let h = (b - a) / n as f64;
    for k in 0..n {
        out.push((a + k as f64 * h, a + (k + 1) as f64 * h));
    }
}

fn cutoff(f: &Factorization) -> f64 {
    let mut m: f64 = 1.0;
    for pt in f.sigma.zeros.iter().chain(f.sigma.poles.iter()) {
        m = m.max(pt.at.norm());
    }
    30.0 + 2.0 * m
}

fn unwrap_phase(prev: f64, principal: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let k = ((prev - principal) / two_pi).round();
    principal + two_pi * k
}

/// `int_{-L}^{L} log(xi - c -+ 0i) dxi` exactly: antiderivative
/// `(xi-c) log|xi-c| - (xi-c)` plus the branch phase `-+ i pi (c - xi)` on
/// `xi < c` (`-i pi` for the `-0i` determination used by `sigma_minus`
/// zeros, i.e. side tag Above; `+i pi` for `+0i` / side Below).
fn log_linear_integral(zeta: Pt, ell: f64) -> Result<C> {
    let c = zeta.at.re;
    if c.abs() >= ell {
        return Err(WhError::Internal("boundary zero outside quadrature window".into()));
    }
    let phi = match zeta.side {
        Some(Side::Above) => -std::f64::consts::PI,
        Some(Side::Below) => std::f64::consts::PI,
        None => return Err(WhError::BoundarySideRequired { at: c }),
    };
    let fval = |x: f64| -> C {
        let t = x - c;
        let phase = if t < 0.0 { phi } else { 0.0 };
        let ln = if t == 0.0 { 0.0 } else { t.abs().ln() };
        C::new(t * (ln - 1.0), t * phase)
    };
    Ok(fval(ell) - fval(-ell))
}

fn base_diag(g_err: f64, e_err: f64) -> DetDiagnostics {
    DetDiagnostics { resonance_distance: None, quadrature_error_estimate: g_err.max(e_err) }
}

/// Kac-Achieser: `det W_alpha(sigma) ~ G^alpha E` for regular symbols.
pub fn det_kac(f: &Factorization, alpha: f64) -> Result<DetReport> {
    if f.symbol.is_singular() {
        return Err(WhError::MethodMismatch { hint: "singular symbol: use thm3/thm4".into() });
    }
    let lambda = g_exponent_closed(f)?;
    let (g, g_err) = g_full(f)?;
    let (e, e_err) = e_full(f)?;
    let value = (alpha * lambda).exp() * e;
    Ok(DetReport {
        method: "kac".into(),
        alpha,
        g: g.into(),
        e: e.into(),
        a_or_b: None,
        value: value.into(),
        diagnostics: base_diag(g_err, e_err),
        warnings: vec![],
    })
}

/// Theorem 3 (two simple zeros):
/// `det / G^alpha = [tau_minus(p) tau_plus(-p) - tau_plus(p) tau_minus(-p) e^{2 i alpha p}]
///  / (tau_plus(-p) tau_minus(p)) * E`.
pub fn det_thm3(f: &Factorization, alpha: f64) -> Result<DetReport> {
    let p = match f.p() {
        Some(p) if p > 0.0 => p,
        Some(_) => return Err(WhError::MethodMismatch { hint: "p = 0: use thm4".into() }),
        None => return Err(WhError::MethodMismatch { hint: "regular symbol: use kac".into() }),
    };
    let parts = f.parts()?;
    let osc = (2.0 * I * alpha * p).exp();
    let prefactor = (parts.tau_minus_at_p * parts.tau_plus_at_mp
        - parts.tau_plus_at_p * parts.tau_minus_at_mp * osc)
        / (parts.tau_plus_at_mp * parts.tau_minus_at_p);
    let lambda = g_exponent_closed(f)?;
    let (g, g_err) = g_full(f)?;
    let (e, e_err) = e_full(f)?;
    let value = (alpha * lambda).exp() * prefactor * e;
    let mut diag = base_diag(g_err, e_err);
    diag.resonance_distance = Some(prefactor.norm());
    let warnings = if prefactor.norm() < (-alpha / 10.0).exp() {
        vec!["near resonance: leading term degenerates; value is the (small) formula value".into()]
    } else {
        vec![]
    };
    Ok(DetReport {
        method: "thm3".into(),
        alpha,
        g: g.into(),
        e: e.into(),
        a_or_b: None,
        value: value.into(),
        diagnostics: diag,
        warnings,
    })
}

/// Theorem 4 (double zero): `det ~ G^alpha B E` with
/// `B = alpha + i (sigma_plus/sigma_minus)'(0)`.
pub fn det_thm4(f: &Factorization, alpha: f64) -> Result<DetReport> {
    match f.p() {
        Some(p) if p == 0.0 => {}
        Some(_) => return Err(WhError::MethodMismatch { hint: "p != 0: use thm3".into() }),
        None => return Err(WhError::MethodMismatch { hint: "regular symbol: use kac".into() }),
    }
    let parts = f.parts()?;
    let b = alpha + I * parts.d_ratio.ok_or_else(|| WhError::Internal("missing d_ratio".into()))?;
    let lambda = g_exponent_closed(f)?;
    let (g, g_err) = g_full(f)?;
    let (e, e_err) = e_full(f)?;
    let value = (alpha * lambda).exp() * b * e;
    let warnings = if alpha < 1.0 {
        vec!["small alpha: asymptotic formula used outside its regime".into()]
    } else {
        vec![]
    };
    Ok(DetReport {
        method: "thm4".into(),
        alpha,
        g: g.into(),
        e: e.into(),
        a_or_b: Some(b.into()),
        value: value.into(),
        diagnostics: base_diag(g_err, e_err),
        warnings,
    })
}

/// Dual-contour two-term representation:
/// `det ~ G1^alpha E1 + G2^alpha E2` over the C1/C2 factorizations, after
/// asserting `G1/G2 = e^{-2ip}` and
/// `E1 = -(tau_minus(p)/tau_minus(-p)) (tau_plus(-p)/tau_plus(p)) E2`.
pub fn det_dual(f: &Factorization, alpha: f64) -> Result<DetReport> {
    let p = match f.p() {
        Some(p) if p > 0.0 => p,
        _ => return Err(WhError::MethodMismatch { hint: "dual representation requires p > 0".into() }),
    };
    let other_contour = match f.symbol.contour {
        Contour::C1 => Contour::C2,
        Contour::C2 => Contour::C1,
    };
    let mut sym2 = f.symbol.clone();
    sym2.contour = other_contour;
    let f2 = factorize(&sym2)?;
    // orient: "1" = the C1 factorization
    let (fa, fb) = if f.symbol.contour == Contour::C1 { (f, &f2) } else { (&f2, f) };
    let l1 = g_exponent_closed(fa)?;
    let l2 = g_exponent_closed(fb)?;
    if (l1 - l2 + 2.0 * I * p).norm() > 1e-10 {
        return Err(WhError::DualInconsistent {
            detail: format!("G1/G2 != e^(-2ip): exponents {l1} vs {l2}"),
        });
    }
    let (e1, e1_err) = e_full(fa)?;
    let (e2, e2_err) = e_full(fb)?;
    let parts = fa.parts()?;
    let ratio = -(parts.tau_minus_at_p / parts.tau_minus_at_mp)
        * (parts.tau_plus_at_mp / parts.tau_plus_at_p);
    if (e1 - ratio * e2).norm() > 1e-10 * e1.norm().max(1e-300) {
        return Err(WhError::DualInconsistent {
            detail: format!("E1 != -(tau ratios) E2: {e1} vs {}", ratio * e2),
        });
    }
    // e^{2 i alpha p} G1^alpha = G2^alpha
    let ga1 = (alpha * l1).exp();
    let ga2 = (alpha * l2).exp();
    if ((2.0 * I * alpha * p).exp() * ga1 - ga2).norm() > 1e-10 * ga2.norm() {
        return Err(WhError::DualInconsistent { detail: "e^(2 i alpha p) G1^alpha != G2^alpha".into() });
    }
    let value = ga1 * e1 + ga2 * e2;
    let (g1, g_err) = g_full(fa)?;
    Ok(DetReport {
        method: "dual".into(),
        alpha,
        g: g1.into(),
        e: e1.into(),
        a_or_b: None,
        value: value.into(),
        diagnostics: base_diag(g_err, e1_err.max(e2_err)),
        warnings: vec![],
    })
}

/// Exact determinant for the `sigma0` anchor, used by tests.
pub fn sigma0_exact_det(alpha: f64) -> f64 {
    (-alpha).exp() * (1.0 + alpha / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::symbolmodel::{preset, ScalePolicy};

    fn fac(name: &str) -> Factorization {
        factorize(&preset(name).unwrap()).unwrap()
    }

    #[test]
    fn g_closed_forms() {
        // sigma0: G = e^{-1}
        let g0 = g_exponent_closed(&fac("sigma0")).unwrap();
        assert!((g0 - c(-1.0, 0.0)).norm() < 1e-14);
        // two zeros, C1: G = e^{-1-i}
        let g1 = g_exponent_closed(&fac("two-zeros-cauchy")).unwrap();
        assert!((g1 - c(-1.0, -1.0)).norm() < 1e-14);
        // regular: G = e^{sqrt2 - 1}
        let gr = g_exponent_closed(&fac("regular-sqrt2")).unwrap();
        assert!((gr - c(std::f64::consts::SQRT_2 - 1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn g_quadrature_agrees() {
        for name in ["sigma0", "two-zeros-cauchy", "regular-sqrt2"] {
            let f = fac(name);
            let closed = g_exponent_closed(&f).unwrap();
            let quad = g_exponent_quadrature(&f).unwrap();
            assert!((closed - quad).norm() < 1e-8, "{name}: {closed} vs {quad}");
        }
    }

    #[test]
    fn g_c2_ratio() {
        let s2 = {
            let mut s = preset("two-zeros-cauchy").unwrap();
            s.contour = Contour::C2;
            s
        };
        let g2 = g_exponent_closed(&factorize(&s2).unwrap()).unwrap();
        assert!((g2 - c(-1.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn e_closed_forms() {
        let e1 = e_closed_form(&fac("two-zeros-cauchy")).unwrap();
        assert!((e1 - c(0.5, 0.0)).norm() < 1e-13, "{e1}");
        let e0 = e_closed_form(&fac("sigma0")).unwrap();
        assert!((e0 - c(0.5, 0.0)).norm() < 1e-13, "{e0}");
        let er = e_closed_form(&fac("regular-sqrt2")).unwrap();
        let want = (3.0 + 2.0 * std::f64::consts::SQRT_2) / (4.0 * std::f64::consts::SQRT_2);
        assert!((er - c(want, 0.0)).norm() < 1e-13, "{er} vs {want}");
    }

    #[test]
    fn e_quadrature_agrees() {
        for name in ["regular-sqrt2", "two-zeros-cauchy", "sigma0"] {
            let f = fac(name);
            let closed = e_closed_form(&f).unwrap();
            let (quad, _) = e_quadrature(&f).unwrap();
            assert!(
                (closed - quad).norm() < 1e-6 * closed.norm(),
                "{name}: {closed} vs {quad}"
            );
        }
    }

    #[test]
    fn thm4_exact_for_sigma0() {
        let f = fac("sigma0");
        for &alpha in &[2.0, 5.0, 10.0] {
            let r = det_thm4(&f, alpha).unwrap();
            let want = sigma0_exact_det(alpha);
            let got: C = r.value.into();
            assert!((got - want).norm() <= 1e-12 * want.abs(), "alpha={alpha}: {got} vs {want}");
        }
    }

    #[test]
    fn thm3_closed_form_two_zeros() {
        let f = fac("two-zeros-cauchy");
        for &alpha in &[2.0, 6.0, 10.0] {
            let r = det_thm3(&f, alpha).unwrap();
            let want = (-alpha).exp() * alpha.cos();
            let got: C = r.value.into();
            assert!((got - want).norm() <= 1e-10, "alpha={alpha}: {got} vs {want}");
        }
    }

    #[test]
    fn dual_equals_thm3() {
        let f = fac("two-zeros-cauchy");
        for &alpha in &[2.0, 6.0, 9.5] {
            let a: C = det_thm3(&f, alpha).unwrap().value.into();
            let b: C = det_dual(&f, alpha).unwrap().value.into();
            assert!((a - b).norm() <= 1e-12 * a.norm().max(1e-6), "{a} vs {b}");
        }
    }

    #[test]
    fn kac_value_and_method_mismatch() {
        let f = fac("regular-sqrt2");
        let r = det_kac(&f, 8.0).unwrap();
        let want = (8.0 * (std::f64::consts::SQRT_2 - 1.0)).exp()
            * (3.0 + 2.0 * std::f64::consts::SQRT_2)
            / (4.0 * std::f64::consts::SQRT_2);
        let got: C = r.value.into();
        assert!((got - want).norm() < 1e-10 * want);
        match det_kac(&fac("sigma0"), 2.0) {
            Err(WhError::MethodMismatch { .. }) => {}
            other => panic!("expected MethodMismatch, got {other:?}"),
        }
        match det_thm3(&fac("regular-sqrt2"), 2.0) {
            Err(WhError::MethodMismatch { .. }) => {}
            other => panic!("expected MethodMismatch, got {other:?}"),
        }
    }

    #[test]
    fn thm4_invariant_under_tau_rescale() {
        use crate::symbolmodel::{cauchy_tau, SingularSymbol};
        let s1 = preset("sigma0").unwrap();
        let tau2 = cauchy_tau().scaled(c(3.7, 0.0));
        let s2 = SingularSymbol::singular(0.0, tau2, Contour::C1, ScalePolicy::Auto).unwrap();
        let f1 = factorize(&s1).unwrap();
        let f2 = factorize(&s2).unwrap();
        let a: C = det_thm4(&f1, 4.0).unwrap().value.into();
        let b: C = det_thm4(&f2, 4.0).unwrap().value.into();
        assert!((a - b).norm() < 1e-13 * a.norm());
    }

    #[test]
    fn thm3_resonance_reported_not_error() {
        let f = fac("two-zeros-cauchy");
        let alpha = std::f64::consts::FRAC_PI_2;
        let r = det_thm3(&f, alpha).unwrap();
        assert!(r.diagnostics.resonance_distance.unwrap() < 1e-9);
        let got: C = r.value.into();
        assert!(got.norm() < 1e-9);
    }
}
