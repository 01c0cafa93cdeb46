//! The symbol `sigma(xi) = (xi^2 - p^2) tau(xi)` and its Wiener-Hopf
//! factorization `sigma = sigma_minus sigma_plus` with
//! `sigma_minus = i (xi - zeta_minus) tau_minus` and
//! `sigma_plus = -i (xi - zeta_plus) tau_plus`, where the boundary zeros
//! `(zeta_minus, zeta_plus)` are `(p, -p)` for contour C1 and `(-p, p)` for
//! C2.  Regular (nonvanishing) symbols are carried by the same type with the
//! zero location absent.

use crate::ratcalc::{Half, PoleSum, PoleTerm, Pt, RationalFunction, Side};
use crate::{Result, WhError, C, I, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contour {
    C1,
    C2,
}

/// How the constructor treats the overall scale of `tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalePolicy {
    /// Rescale so that `sigma(inf) = 1`, recording the original scale.
    Auto,
    /// Require `sigma(inf) = 1` within 1e-12.
    Strict,
}

#[derive(Clone, Debug)]
pub struct SingularSymbol {
    /// Zero location: `Some(0.0)` is the double zero at the origin,
    /// `Some(p)` with `p > 0` the pair of simple zeros, `None` a regular
    /// symbol (then `tau` is `sigma` itself).
    pub p: Option<f64>,
    pub tau: RationalFunction,
    pub contour: Contour,
    /// Scale of `tau` as supplied, before normalization.
    pub original_scale: C,
}

#[derive(Clone, Debug)]
pub struct Diagnostics {
    pub winding: i32,
    pub sigma_at_infinity: C,
    pub pole_margin: f64,
}

impl SingularSymbol {
    pub fn singular(
        p: f64,
        tau: RationalFunction,
        contour: Contour,
        policy: ScalePolicy,
    ) -> Result<SingularSymbol> {
        if !(p >= 0.0) {
            return Err(WhError::InvalidSpec(format!("p = {p} must be >= 0")));
        }
        for z in &tau.zeros {
            if z.at.im == 0.0 {
                return Err(WhError::RealZeroOfTau { at: z.at.re });
            }
        }
        for w in &tau.poles {
            if w.at.im == 0.0 {
                return Err(WhError::RealPoleOfTau { at: w.at.re });
            }
        }
        if tau.poles.len() != tau.zeros.len() + 2 {
            return Err(WhError::UnnormalizedSymbol {
                at_infinity: if tau.poles.len() > tau.zeros.len() + 2 { ZERO } else { C::new(f64::INFINITY, 0.0) },
            });
        }
        // sigma(inf) = lim xi^2 tau = tau.scale for the monic representation
        let s_inf = tau.scale;
        let original_scale = tau.scale;
        let tau = match policy {
            ScalePolicy::Auto => tau.scaled(ONE / s_inf),
            ScalePolicy::Strict => {
                if (s_inf - ONE).norm() > 1e-12 {
                    return Err(WhError::UnnormalizedSymbol { at_infinity: s_inf });
                }
                tau
            }
        };
        Ok(SingularSymbol { p: Some(p), tau, contour, original_scale })
    }

    pub fn regular(sigma: RationalFunction, policy: ScalePolicy) -> Result<SingularSymbol> {
        for z in &sigma.zeros {
            if z.at.im == 0.0 {
                return Err(WhError::RealZeroOfTau { at: z.at.re });
            }
        }
        for w in &sigma.poles {
            if w.at.im == 0.0 {
                return Err(WhError::RealPoleOfTau { at: w.at.re });
            }
        }
        if sigma.poles.len() != sigma.zeros.len() {
            return Err(WhError::UnnormalizedSymbol { at_infinity: sigma.value_at_infinity() });
        }
        let s_inf = sigma.scale;
        let original_scale = sigma.scale;
        let sigma = match policy {
            ScalePolicy::Auto => sigma.scaled(ONE / s_inf),
            ScalePolicy::Strict => {
                if (s_inf - ONE).norm() > 1e-12 {
                    return Err(WhError::UnnormalizedSymbol { at_infinity: s_inf });
                }
                sigma
            }
        };
        Ok(SingularSymbol { p: None, tau: sigma, contour: Contour::C1, original_scale })
    }

    pub fn is_singular(&self) -> bool {
        self.p.is_some()
    }

    /// Boundary zeros `(zeta_minus, zeta_plus)` of `(sigma_minus, sigma_plus)`.
    pub fn boundary_zeros(&self) -> Option<(Pt, Pt)> {
        let p = self.p?;
        Some(match self.contour {
            Contour::C1 => (Pt::boundary(p, Side::Above), Pt::boundary(-p, Side::Below)),
            Contour::C2 => (Pt::boundary(-p, Side::Above), Pt::boundary(p, Side::Below)),
        })
    }

    /// The full symbol as a tagged rational function.
    pub fn sigma(&self) -> RationalFunction {
        match self.boundary_zeros() {
            None => self.tau.clone(),
            Some((zm, zp)) => {
                let mut zeros = vec![zm, zp];
                zeros.extend_from_slice(&self.tau.zeros);
                RationalFunction { zeros, poles: self.tau.poles.clone(), scale: self.tau.scale }
            }
        }
    }

    /// The reflected symbol `sigma~(xi) = sigma(-xi)`; same `p`, reflected
    /// `tau`, same contour (the reflection maps C1 boundary tags to C1).
    pub fn tilde(&self) -> SingularSymbol {
        SingularSymbol {
            p: self.p,
            tau: self.tau.tilde(),
            contour: self.contour,
            original_scale: self.original_scale,
        }
    }
}

pub fn validate_symbol(s: &SingularSymbol) -> Result<Diagnostics> {
    let winding = s.tau.winding()?;
    if winding != 0 {
        return Err(WhError::IndexNonzero { winding });
    }
    let sigma_at_infinity = s.tau.value_at_infinity();
    if (sigma_at_infinity - ONE).norm() > 1e-12 {
        return Err(WhError::UnnormalizedSymbol { at_infinity: sigma_at_infinity });
    }
    let pole_margin = s
        .tau
        .poles
        .iter()
        .map(|w| w.at.im.abs())
        .fold(f64::INFINITY, f64::min);
    Ok(Diagnostics { winding, sigma_at_infinity, pole_margin })
}

/// Scalar data attached to a singular factorization.
#[derive(Clone, Debug)]
pub struct SingularParts {
    pub tau_minus: RationalFunction,
    pub tau_plus: RationalFunction,
    /// `tau_minus(zeta_minus)`; equals `tau_minus(p)` for C1.
    pub c_minus: C,
    /// `tau_plus(zeta_plus)`; equals `tau_plus(-p)` for C1.
    pub c_plus: C,
    pub tau_minus_at_p: C,
    pub tau_minus_at_mp: C,
    pub tau_plus_at_p: C,
    pub tau_plus_at_mp: C,
    pub u_minus: PoleSum,
    pub u_plus: PoleSum,
    /// `tau_minus(0) = tau_plus(0)` (balanced split).
    pub balance: C,
    /// `(sigma_plus/sigma_minus)'(0)`, for `p = 0`.
    pub d_ratio: Option<C>,
    pub tau_deriv_minus_0: Option<C>,
    pub tau_deriv_plus_0: Option<C>,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub symbol: SingularSymbol,
    pub sigma: RationalFunction,
    pub sigma_minus: RationalFunction,
    pub sigma_plus: RationalFunction,
    /// Boundary zeros of `sigma_minus` / `sigma_plus` (singular case).
    pub zeta_minus: Option<Pt>,
    pub zeta_plus: Option<Pt>,
    pub singular: Option<SingularParts>,
    pub pole_margin: f64,
}

impl Factorization {
    pub fn p(&self) -> Option<f64> {
        self.symbol.p
    }

    pub fn parts(&self) -> Result<&SingularParts> {
        self.singular.as_ref().ok_or_else(|| WhError::MethodMismatch {
            hint: "regular symbol: use the regular inverse / Kac determinant".into(),
        })
    }
}

/// Split a rational function with winding zero into balanced upper and lower
/// factors: `r = r_minus r_plus` with `r_minus` collecting the points routed
/// to the closed upper half-plane and `r_minus(0) = r_plus(0) = sqrt(r(0))`
/// (principal branch).
fn balanced_split(r: &RationalFunction) -> Result<(RationalFunction, RationalFunction)> {
    let (m_minus, m_plus) = r.split_half_plane()?;
    let r0 = r.eval(ZERO);
    if r0.norm() == 0.0 {
        return Err(WhError::Internal("balanced split at a zero of the function".into()));
    }
    let target = r0.sqrt();
    let m0 = m_minus.eval(ZERO);
    let s_minus = target / m0;
    let minus = m_minus.scaled(s_minus);
    let plus = m_plus.scaled(r.scale / s_minus);
    Ok((minus, plus))
}

pub fn factorize(s: &SingularSymbol) -> Result<Factorization> {
    let diag = validate_symbol(s)?;
    let sigma = s.sigma();
    match s.boundary_zeros() {
        None => {
            // regular symbol: sigma itself splits
            let (minus, plus) = balanced_split(&s.tau)?;
            Ok(Factorization {
                symbol: s.clone(),
                sigma,
                sigma_minus: minus,
                sigma_plus: plus,
                zeta_minus: None,
                zeta_plus: None,
                singular: None,
                pole_margin: diag.pole_margin,
            })
        }
        Some((zm, zp)) => {
            let p = s.p.unwrap();
            let (tau_minus, tau_plus) = balanced_split(&s.tau)?;
            let balance = tau_minus.eval(ZERO);
            // sigma_minus = i (xi - zeta_minus) tau_minus
            let mut smz = vec![zm];
            smz.extend_from_slice(&tau_minus.zeros);
            let sigma_minus =
                RationalFunction { zeros: smz, poles: tau_minus.poles.clone(), scale: I * tau_minus.scale };
            let mut spz = vec![zp];
            spz.extend_from_slice(&tau_plus.zeros);
            let sigma_plus =
                RationalFunction { zeros: spz, poles: tau_plus.poles.clone(), scale: -I * tau_plus.scale };
            let pc = C::new(p, 0.0);
            let c_minus = tau_minus.eval(zm.at);
            let c_plus = tau_plus.eval(zp.at);
            let u_minus = u_function(&sigma_minus, c_minus, zm, Side::Above)?;
            let u_plus = u_function(&sigma_plus, c_plus, zp, Side::Below)?;
            let (d_ratio, dm0, dp0) = if p == 0.0 {
                // sigma_plus/sigma_minus = -tau_plus/tau_minus exactly
                let ratio = tau_plus.mul(&tau_minus.reciprocal()?).scaled(-ONE);
                (
                    Some(ratio.derivative_at(ZERO)?),
                    Some(tau_minus.derivative_at(ZERO)?),
                    Some(tau_plus.derivative_at(ZERO)?),
                )
            } else {
                (None, None, None)
            };
            let parts = SingularParts {
                tau_minus_at_p: tau_minus.eval(pc),
                tau_minus_at_mp: tau_minus.eval(-pc),
                tau_plus_at_p: tau_plus.eval(pc),
                tau_plus_at_mp: tau_plus.eval(-pc),
                tau_minus,
                tau_plus,
                c_minus,
                c_plus,
                u_minus,
                u_plus,
                balance,
                d_ratio,
                tau_deriv_minus_0: dm0,
                tau_deriv_plus_0: dp0,
            };
            Ok(Factorization {
                symbol: s.clone(),
                sigma,
                sigma_minus,
                sigma_plus,
                zeta_minus: Some(zm),
                zeta_plus: Some(zp),
                singular: Some(parts),
                pole_margin: diag.pole_margin,
            })
        }
    }
}

/// Regular part of `c / sigma_pm` after removing the boundary pole:
/// `u_plus = c_plus/sigma_plus - 1/(0 - i(xi - zeta_plus))` and
/// `u_minus = c_minus/sigma_minus - 1/(0 + i(xi - zeta_minus))`.
///
/// `1/(0 - i(xi - z)) = i/(xi - (z - 0i))` has residue `i`;
/// `1/(0 + i(xi - z)) = -i/(xi - (z + 0i))` has residue `-i`.  In each case
/// the residue of `c/sigma_pm` at the boundary zero matches exactly and the
/// pole cancels; the cancellation is verified to 1e-10 relative.
fn u_function(
    sigma_pm: &RationalFunction,
    c_pm: C,
    zeta: Pt,
    side: Side,
) -> Result<PoleSum> {
    let recip = sigma_pm.reciprocal()?.scaled(c_pm);
    let ps = recip.partial_fractions()?;
    let sub = match side {
        // u_minus subtracts -i/(xi - zeta)
        Side::Above => PoleSum {
            terms: vec![PoleTerm { pole: zeta, order: 1, coeff: -I }],
            constant: ZERO,
        },
        // u_plus subtracts i/(xi - zeta)
        Side::Below => PoleSum {
            terms: vec![PoleTerm { pole: zeta, order: 1, coeff: I }],
            constant: ZERO,
        },
    };
    let diff = ps.add(&sub.scaled(-ONE));
    let scale = ps.coeff_scale();
    diff.cancel_pole(zeta.at, scale)
}

/// The regular parts `(u_plus, u_minus)` of a singular factorization.
pub fn u_functions(f: &Factorization) -> Result<(PoleSum, PoleSum)> {
    let parts = f.parts()?;
    Ok((parts.u_plus.clone(), parts.u_minus.clone()))
}

/// Convenience: `tau` for the Cauchy weight `1/(1+xi^2)`.
pub fn cauchy_tau() -> RationalFunction {
    RationalFunction {
        zeros: vec![],
        poles: vec![
            Pt { at: C::new(0.0, 1.0), side: None },
            Pt { at: C::new(0.0, -1.0), side: None },
        ],
        scale: ONE,
    }
}

/// Packaged symbols.
pub fn preset(name: &str) -> Result<SingularSymbol> {
    match name {
        // sigma0 = xi^2/(1+xi^2)
        "sigma0" => SingularSymbol::singular(0.0, cauchy_tau(), Contour::C1, ScalePolicy::Strict),
        // (xi^2-1)/(1+xi^2)
        "two-zeros-cauchy" => {
            SingularSymbol::singular(1.0, cauchy_tau(), Contour::C1, ScalePolicy::Strict)
        }
        // regular (2+xi^2)/(1+xi^2)
        "regular-sqrt2" => {
            let sigma = RationalFunction {
                zeros: vec![
                    Pt { at: C::new(0.0, std::f64::consts::SQRT_2), side: None },
                    Pt { at: C::new(0.0, -std::f64::consts::SQRT_2), side: None },
                ],
                poles: vec![
                    Pt { at: C::new(0.0, 1.0), side: None },
                    Pt { at: C::new(0.0, -1.0), side: None },
                ],
                scale: ONE,
            };
            SingularSymbol::regular(sigma, ScalePolicy::Strict)
        }
        other => Err(WhError::InvalidSpec(format!("unknown preset '{other}'"))),
    }
}

pub const PRESET_NAMES: [&str; 3] = ["sigma0", "two-zeros-cauchy", "regular-sqrt2"];

/// Half-plane of a point, for use in sums over factor data.
pub fn half_sign(pt: &Pt) -> Result<f64> {
    Ok(match pt.half()? {
        Half::Upper => 1.0,
        Half::Lower => -1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn grid() -> Vec<C> {
        // deterministic pseudo-random real points
        (0..20)
            .map(|k| {
                let t = ((k * 37 + 11) % 101) as f64 / 101.0;
                c(12.0 * t - 6.0, 0.0)
            })
            .collect()
    }

    #[test]
    fn validate_cauchy() {
        let s = preset("two-zeros-cauchy").unwrap();
        let d = validate_symbol(&s).unwrap();
        assert_eq!(d.winding, 0);
        assert!((d.pole_margin - 1.0).abs() < 1e-15);
        assert!((d.sigma_at_infinity - ONE).norm() < 1e-15);
    }

    #[test]
    fn validate_rejects_winding() {
        // tau = (xi-i)/((xi+i)(1+xi^2)): winding 1
        let tau = RationalFunction {
            zeros: vec![Pt { at: c(0.0, 1.0), side: None }],
            poles: vec![
                Pt { at: c(0.0, -1.0), side: None },
                Pt { at: c(0.0, 1.0), side: None },
                Pt { at: c(0.0, -1.0), side: None },
            ],
            scale: ONE,
        };
        let s = SingularSymbol::singular(1.0, tau, Contour::C1, ScalePolicy::Strict).unwrap();
        match validate_symbol(&s) {
            Err(WhError::IndexNonzero { winding: 1 }) => {}
            other => panic!("expected IndexNonzero, got {other:?}"),
        }
    }

    #[test]
    fn unnormalized_rejected_and_auto_normalized() {
        let tau = cauchy_tau().scaled(c(2.0, 0.0));
        match SingularSymbol::singular(1.0, tau.clone(), Contour::C1, ScalePolicy::Strict) {
            Err(WhError::UnnormalizedSymbol { at_infinity }) => {
                assert!((at_infinity - c(2.0, 0.0)).norm() < 1e-15)
            }
            other => panic!("expected UnnormalizedSymbol, got {other:?}"),
        }
        let s = SingularSymbol::singular(1.0, tau, Contour::C1, ScalePolicy::Auto).unwrap();
        assert!((s.original_scale - c(2.0, 0.0)).norm() < 1e-15);
        assert!((validate_symbol(&s).unwrap().sigma_at_infinity - ONE).norm() < 1e-15);
    }

    #[test]
    fn factorize_two_zeros_c1() {
        let f = factorize(&preset("two-zeros-cauchy").unwrap()).unwrap();
        let parts = f.singular.as_ref().unwrap();
        // tau_minus = 1/(1+i xi), tau_plus = 1/(1-i xi)
        for &xi in &grid() {
            let tm = parts.tau_minus.eval(xi);
            let tp = parts.tau_plus.eval(xi);
            assert!((tm - ONE / (ONE + I * xi)).norm() < 1e-13, "tau_minus at {xi}");
            assert!((tp - ONE / (ONE - I * xi)).norm() < 1e-13, "tau_plus at {xi}");
        }
        let half = ONE / (ONE + I);
        assert!((parts.c_minus - half).norm() < 1e-14);
        assert!((parts.c_plus - half).norm() < 1e-14);
        assert!((parts.tau_plus_at_p - ONE / (ONE - I)).norm() < 1e-14);
        assert!((parts.tau_minus_at_mp - ONE / (ONE - I)).norm() < 1e-14);
    }

    #[test]
    fn recombination_on_random_grid() {
        for name in ["sigma0", "two-zeros-cauchy", "regular-sqrt2"] {
            let s = preset(name).unwrap();
            let f = factorize(&s).unwrap();
            for &xi in &grid() {
                let lhs = f.sigma_minus.eval(xi) * f.sigma_plus.eval(xi);
                let rhs = f.sigma.eval(xi);
                assert!(
                    (lhs - rhs).norm() <= 1e-12 * (ONE + rhs).norm(),
                    "{name} at {xi}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn factorize_sigma0() {
        let f = factorize(&preset("sigma0").unwrap()).unwrap();
        let parts = f.singular.as_ref().unwrap();
        assert!((parts.balance - ONE).norm() < 1e-14);
        // sigma_plus = -i xi/(1 - i xi), sigma_minus = i xi/(1 + i xi)
        for &xi in &grid() {
            if xi.norm() < 1e-9 {
                continue;
            }
            let sp = f.sigma_plus.eval(xi);
            let sm = f.sigma_minus.eval(xi);
            assert!((sp - (-I * xi) / (ONE - I * xi)).norm() < 1e-13);
            assert!((sm - (I * xi) / (ONE + I * xi)).norm() < 1e-13);
        }
        // d_ratio = -2i
        assert!((parts.d_ratio.unwrap() - c(0.0, -2.0)).norm() < 1e-13);
    }

    #[test]
    fn factorize_c2_swaps_zeros() {
        let s = SingularSymbol::singular(1.0, cauchy_tau(), Contour::C2, ScalePolicy::Strict).unwrap();
        let f = factorize(&s).unwrap();
        // sigma_minus = i(xi+1)/(1+i xi)
        for &xi in &grid() {
            let sm = f.sigma_minus.eval(xi);
            assert!((sm - I * (xi + ONE) / (ONE + I * xi)).norm() < 1e-13);
        }
        // tau factors identical to C1
        let f1 = factorize(&preset("two-zeros-cauchy").unwrap()).unwrap();
        for &xi in &grid() {
            let a = f.singular.as_ref().unwrap().tau_minus.eval(xi);
            let b = f1.singular.as_ref().unwrap().tau_minus.eval(xi);
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn u_plus_values() {
        // p=0 Cauchy: u_plus is identically 1, so u_plus(0) = 1 = -i tau_plus'(0)
        let f = factorize(&preset("sigma0").unwrap()).unwrap();
        let parts = f.singular.as_ref().unwrap();
        assert!((parts.u_plus.eval(ZERO) - ONE).norm() < 1e-13);
        let dtp = parts.tau_deriv_plus_0.unwrap();
        assert!((-I * dtp - ONE).norm() < 1e-13);
        // u_minus(0) = +i tau_minus'(0)
        let dtm = parts.tau_deriv_minus_0.unwrap();
        assert!((parts.u_minus.eval(ZERO) - I * dtm).norm() < 1e-13);
        // p=1 Cauchy: u_plus(0) = (1-i)/2
        let f1 = factorize(&preset("two-zeros-cauchy").unwrap()).unwrap();
        let u = &f1.singular.as_ref().unwrap().u_plus;
        assert!((u.eval(ZERO) - c(0.5, -0.5)).norm() < 1e-13);
        // ... and is constant (no pole terms survive for Cauchy tau)
        assert!(u.terms.is_empty());
    }

    #[test]
    fn u_functions_balanced_identity_general_tau() {
        // p=0, tau = (xi^2+4)/((1+xi^2)(xi^2+9)): tau(0) = 4/9 != 1.
        // Generalized identity u_pm(0) * tau_pm(0) = -+ i tau_pm'(0).
        let tau = RationalFunction {
            zeros: vec![Pt { at: c(0.0, 2.0), side: None }, Pt { at: c(0.0, -2.0), side: None }],
            poles: vec![
                Pt { at: c(0.0, 1.0), side: None },
                Pt { at: c(0.0, -1.0), side: None },
                Pt { at: c(0.0, 3.0), side: None },
                Pt { at: c(0.0, -3.0), side: None },
            ],
            scale: ONE,
        };
        let s = SingularSymbol::singular(0.0, tau, Contour::C1, ScalePolicy::Strict).unwrap();
        let f = factorize(&s).unwrap();
        let parts = f.singular.as_ref().unwrap();
        let t0 = parts.balance;
        assert!((t0 * t0 - c(4.0 / 9.0, 0.0)).norm() < 1e-13);
        let (up, um) = u_functions(&f).unwrap();
        let dtp = parts.tau_deriv_plus_0.unwrap();
        let dtm = parts.tau_deriv_minus_0.unwrap();
        assert!((up.eval(ZERO) * t0 - (-I * dtp)).norm() < 1e-12);
        assert!((um.eval(ZERO) * t0 - (I * dtm)).norm() < 1e-12);
    }

    #[test]
    fn tilde_symbol_factors_are_reflections() {
        let s = preset("two-zeros-cauchy").unwrap();
        let st = s.tilde();
        let f = factorize(&s).unwrap();
        let ft = factorize(&st).unwrap();
        // (sigma~)_minus(xi) = sigma_plus(-xi)
        for &xi in &grid() {
            let a = ft.sigma_minus.eval(xi);
            let b = f.sigma_plus.eval(-xi);
            assert!((a - b).norm() < 1e-12, "{a} vs {b} at {xi}");
        }
    }
}
