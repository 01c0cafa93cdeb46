//! Partial fraction sums `constant + sum c / (xi - q)^k` with `k <= 2`, and
//! their Fourier analysis.

use super::{ExpSum, ExpTerm, Half, Pt, Support, COINCIDE_TOL, SEPARATION_TOL};
use crate::{Result, WhError, C, I, ONE, ZERO};

#[derive(Clone, Copy, Debug)]
pub struct PoleTerm {
    pub pole: Pt,
    pub order: u32,
    pub coeff: C,
}

#[derive(Clone, Debug, Default)]
pub struct PoleSum {
    pub terms: Vec<PoleTerm>,
    pub constant: C,
}

impl PoleSum {
    pub fn constant(value: C) -> PoleSum {
        PoleSum { terms: vec![], constant: value }
    }

    pub fn eval(&self, xi: C) -> C {
        let mut v = self.constant;
        for t in &self.terms {
            let d = xi - t.pole.at;
            v += match t.order {
                1 => t.coeff / d,
                _ => t.coeff / (d * d),
            };
        }
        v
    }

    pub fn add(&self, other: &PoleSum) -> PoleSum {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        PoleSum { terms, constant: self.constant + other.constant }.merged()
    }

    pub fn scaled(&self, s: C) -> PoleSum {
        PoleSum {
            terms: self.terms.iter().map(|t| PoleTerm { coeff: s * t.coeff, ..*t }).collect(),
            constant: s * self.constant,
        }
    }

    /// Combine terms at coincident locations with equal order.
    pub fn merged(&self) -> PoleSum {
        let mut out: Vec<PoleTerm> = Vec::new();
        for t in &self.terms {
            if let Some(existing) = out
                .iter_mut()
                .find(|u| u.order == t.order && (u.pole.at - t.pole.at).norm() <= COINCIDE_TOL)
            {
                existing.coeff += t.coeff;
            } else {
                out.push(*t);
            }
        }
        PoleSum { terms: out, constant: self.constant }
    }

    /// `f(-xi)`: `c/(xi-q)^k -> c (-1)^k / (xi + q)^k`.
    pub fn tilde(&self) -> PoleSum {
        PoleSum {
            terms: self
                .terms
                .iter()
                .map(|t| PoleTerm {
                    pole: t.pole.reflect(),
                    order: t.order,
                    coeff: if t.order % 2 == 0 { t.coeff } else { -t.coeff },
                })
                .collect(),
            constant: self.constant,
        }
    }

    /// Largest coefficient magnitude, used as the scale for residue checks.
    pub fn coeff_scale(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.norm())
            .fold(self.constant.norm().max(1.0), f64::max)
    }

    /// Remove the (simple) pole at `at`, checking that its coefficient is
    /// negligible relative to `scale`.  Used after exact cancellations.
    pub fn cancel_pole(&self, at: C, scale: f64) -> Result<PoleSum> {
        let merged = self.merged();
        let mut out = Vec::new();
        let mut found = false;
        for t in &merged.terms {
            if (t.pole.at - at).norm() <= SEPARATION_TOL {
                found = true;
                let err = t.coeff.norm();
                if err > 1e-10 * scale {
                    return Err(WhError::ResidueMismatch { at, err });
                }
            } else {
                out.push(*t);
            }
        }
        if !found {
            // already exactly cancelled during merging; nothing to drop
        }
        Ok(PoleSum { terms: out, constant: merged.constant })
    }

    /// Multiply by the simple pole `1/(xi - w)`.
    ///
    /// A coincident location raises the order; otherwise the product is
    /// re-expanded in partial fractions:
    /// `c/(q-w) [1/(xi-q) - 1/(xi-w)]` for order 1 and
    /// `c/(q-w) /(xi-q)^2 - c/(q-w)^2 /(xi-q) + c/(q-w)^2 /(xi-w)` for
    /// order 2.  The constant becomes `constant/(xi-w)`.
    pub fn mul_simple_pole(&self, w: Pt) -> Result<PoleSum> {
        let mut terms: Vec<PoleTerm> = Vec::new();
        for t in &self.terms {
            let d = t.pole.at - w.at;
            if d.norm() <= COINCIDE_TOL {
                if t.order >= 2 {
                    return Err(WhError::HigherMultiplicity { order: t.order + 1 });
                }
                terms.push(PoleTerm { pole: t.pole, order: 2, coeff: t.coeff });
            } else if d.norm() < SEPARATION_TOL {
                return Err(WhError::PolesTooClose { sep: d.norm(), at: w.at });
            } else {
                match t.order {
                    1 => {
                        terms.push(PoleTerm { pole: t.pole, order: 1, coeff: t.coeff / d });
                        terms.push(PoleTerm { pole: w, order: 1, coeff: -t.coeff / d });
                    }
                    _ => {
                        terms.push(PoleTerm { pole: t.pole, order: 2, coeff: t.coeff / d });
                        terms.push(PoleTerm { pole: t.pole, order: 1, coeff: -t.coeff / (d * d) });
                        terms.push(PoleTerm { pole: w, order: 1, coeff: t.coeff / (d * d) });
                    }
                }
            }
        }
        if self.constant != ZERO {
            terms.push(PoleTerm { pole: w, order: 1, coeff: self.constant });
        }
        Ok(PoleSum { terms, constant: ZERO }.merged())
    }

    /// Inverse Fourier transform under `khat(xi) = int e^{i x xi} k(x) dx`.
    ///
    /// A pole `w` in the lower half-plane with order `k` transforms to a
    /// positive half-line term; an upper pole to a negative half-line term:
    ///
    /// `c/(xi-w)^k  ->  -+ i c (-i)^{k-1}/(k-1)!  x^{k-1} e^{-i w x}`
    ///
    /// (`-i c` for lower, `+i c` for upper).  A nonzero constant would be a
    /// delta distribution and is rejected.
    pub fn inverse_fourier(&self) -> Result<ExpSum> {
        if self.constant.norm() > 0.0 {
            return Err(WhError::DeltaPartPresent { value: self.constant });
        }
        let mut terms = Vec::new();
        for t in &self.terms {
            let half = t.pole.half()?;
            let k = t.order;
            let fact = match k {
                1 => ONE,
                _ => -I, // (-i)^{k-1}/(k-1)! for k = 2
            };
            let base = t.coeff * fact;
            let (support, coeff) = match half {
                Half::Lower => (Support::Pos, -I * base),
                Half::Upper => (Support::Neg, I * base),
            };
            terms.push(ExpTerm { support, coeff, power: k - 1, rate: -I * t.pole.at });
        }
        Ok(ExpSum { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::ratcalc::Side;

    #[test]
    fn inverse_fourier_of_cauchy() {
        // 1/(1-i xi) = i/(xi + i)  ->  e^{-x} on x > 0
        let ps = PoleSum {
            terms: vec![PoleTerm {
                pole: Pt::off_axis(c(0.0, -1.0)).unwrap(),
                order: 1,
                coeff: I,
            }],
            constant: ZERO,
        };
        let f = ps.inverse_fourier().unwrap();
        assert_eq!(f.terms.len(), 1);
        let t = &f.terms[0];
        assert_eq!(t.support, Support::Pos);
        assert!((t.coeff - ONE).norm() < 1e-15);
        assert!((t.rate - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(t.power, 0);
    }

    #[test]
    fn inverse_fourier_two_sided() {
        // -1/(1+xi^2) -> -(1/2) e^{-|x|}
        let ps = PoleSum {
            terms: vec![
                PoleTerm { pole: Pt::off_axis(c(0.0, 1.0)).unwrap(), order: 1, coeff: 0.5 * I },
                PoleTerm { pole: Pt::off_axis(c(0.0, -1.0)).unwrap(), order: 1, coeff: -0.5 * I },
            ],
            constant: ZERO,
        };
        let f = ps.inverse_fourier().unwrap();
        for &x in &[0.5, 2.0] {
            assert!((f.eval(x) - c(-0.5 * (-x).exp(), 0.0)).norm() < 1e-14);
            assert!((f.eval(-x) - c(-0.5 * (-x).exp(), 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn fourier_roundtrip_double_pole() {
        // c/(xi - w)^2 with w = 0.4 - 1.3i; transform and back via closed form
        let w = c(0.4, -1.3);
        let ps = PoleSum {
            terms: vec![PoleTerm { pole: Pt::off_axis(w).unwrap(), order: 2, coeff: c(1.1, -0.2) }],
            constant: ZERO,
        };
        let f = ps.inverse_fourier().unwrap();
        for &x in &[0.3, -0.7, 2.0] {
            let xi = c(x, 0.0);
            assert!((f.fourier_eval(xi) - ps.eval(xi)).norm() < 1e-12);
        }
    }

    #[test]
    fn mul_simple_pole_partial_fraction() {
        // [1/(xi+i)] * 1/(xi-2i): check pointwise
        let ps = PoleSum {
            terms: vec![PoleTerm { pole: Pt::off_axis(c(0.0, -1.0)).unwrap(), order: 1, coeff: ONE }],
            constant: c(0.5, 0.0),
        };
        let w = Pt::off_axis(c(0.0, 2.0)).unwrap();
        let prod = ps.mul_simple_pole(w).unwrap();
        for &x in &[0.7, -1.3, 3.0] {
            let xi = c(x, 0.0);
            let want = ps.eval(xi) / (xi - c(0.0, 2.0));
            assert!((prod.eval(xi) - want).norm() < 1e-13);
        }
    }

    #[test]
    fn mul_simple_pole_coincident_raises_order() {
        let ps = PoleSum {
            terms: vec![PoleTerm { pole: Pt::off_axis(c(0.0, -1.0)).unwrap(), order: 1, coeff: ONE }],
            constant: ZERO,
        };
        let prod = ps.mul_simple_pole(Pt::off_axis(c(0.0, -1.0)).unwrap()).unwrap();
        assert_eq!(prod.terms.len(), 1);
        assert_eq!(prod.terms[0].order, 2);
    }

    #[test]
    fn delta_part_rejected() {
        let ps = PoleSum::constant(ONE);
        match ps.inverse_fourier() {
            Err(WhError::DeltaPartPresent { .. }) => {}
            other => panic!("expected DeltaPartPresent, got {other:?}"),
        }
    }

    #[test]
    fn cancel_pole_accepts_tiny_and_rejects_large() {
        let mk = |coef: C| PoleSum {
            terms: vec![
                PoleTerm { pole: Pt::boundary(1.0, Side::Below), order: 1, coeff: coef },
                PoleTerm { pole: Pt::off_axis(c(0.0, -2.0)).unwrap(), order: 1, coeff: ONE },
            ],
            constant: ZERO,
        };
        assert!(mk(c(1e-14, 0.0)).cancel_pole(c(1.0, 0.0), 1.0).is_ok());
        match mk(c(1e-3, 0.0)).cancel_pole(c(1.0, 0.0), 1.0) {
            Err(WhError::ResidueMismatch { .. }) => {}
            other => panic!("expected ResidueMismatch, got {other:?}"),
        }
    }
}
