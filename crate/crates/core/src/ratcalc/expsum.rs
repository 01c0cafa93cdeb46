//! Exponential-polynomial sums `sum c x^m e^{rate x}` with per-term support
//! on a half-line or the whole line.  These are the position-space objects:
//! convolution kernels, Hankel profiles, and rank-one factors.

use crate::{Result, WhError, C, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// `x > 0`
    Pos,
    /// `x < 0`
    Neg,
    /// all of `R`
    Whole,
}

#[derive(Clone, Copy, Debug)]
pub struct ExpTerm {
    pub support: Support,
    pub coeff: C,
    pub power: u32,
    pub rate: C,
}

impl ExpTerm {
    fn value(&self, x: f64) -> C {
        self.coeff * x.powi(self.power as i32) * (self.rate * x).exp()
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExpSum {
    pub terms: Vec<ExpTerm>,
}

impl ExpSum {
    pub fn zero() -> ExpSum {
        ExpSum { terms: vec![] }
    }

    /// Constant `value` on `x > 0`.
    pub fn constant_pos(value: C) -> ExpSum {
        ExpSum { terms: vec![ExpTerm { support: Support::Pos, coeff: value, power: 0, rate: ZERO }] }
    }

    /// Evaluate; at `x = 0` the positive-side terms apply.
    pub fn eval(&self, x: f64) -> C {
        let mut v = ZERO;
        for t in &self.terms {
            let on = match t.support {
                Support::Pos => x >= 0.0,
                Support::Neg => x < 0.0,
                Support::Whole => true,
            };
            if on {
                v += t.value(x);
            }
        }
        v
    }

    pub fn add(&self, other: &ExpSum) -> ExpSum {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        ExpSum { terms }
    }

    pub fn scaled(&self, s: C) -> ExpSum {
        ExpSum {
            terms: self.terms.iter().map(|t| ExpTerm { coeff: s * t.coeff, ..*t }).collect(),
        }
    }

    /// Terms active on `x > 0` (Pos and Whole), retagged as Pos.
    pub fn pos_part(&self) -> ExpSum {
        ExpSum {
            terms: self
                .terms
                .iter()
                .filter(|t| t.support != Support::Neg)
                .map(|t| ExpTerm { support: Support::Pos, ..*t })
                .collect(),
        }
    }

    /// Terms active on `x < 0`, retagged as Neg.
    pub fn neg_part(&self) -> ExpSum {
        ExpSum {
            terms: self
                .terms
                .iter()
                .filter(|t| t.support != Support::Pos)
                .map(|t| ExpTerm { support: Support::Neg, ..*t })
                .collect(),
        }
    }

    /// `g(x) = f(-x)`: a Neg term becomes a Pos term and vice versa.
    pub fn reflect(&self) -> ExpSum {
        ExpSum {
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    support: match t.support {
                        Support::Pos => Support::Neg,
                        Support::Neg => Support::Pos,
                        Support::Whole => Support::Whole,
                    },
                    coeff: if t.power % 2 == 0 { t.coeff } else { -t.coeff },
                    power: t.power,
                    rate: -t.rate,
                })
                .collect(),
        }
    }

    /// `g(x) = f(alpha - x)` from the positive-side terms of `f`, valid for
    /// `x` in `(0, alpha)` and returned with Pos support.
    pub fn shift_reflect(&self, alpha: f64) -> ExpSum {
        let mut terms = Vec::new();
        for t in &self.pos_part().terms {
            let e = (t.rate * alpha).exp();
            let m = t.power;
            for j in 0..=m {
                let bin = binomial(m, j);
                let coeff = t.coeff
                    * e
                    * bin
                    * alpha.powi((m - j) as i32)
                    * if j % 2 == 0 { ONE } else { -ONE };
                terms.push(ExpTerm { support: Support::Pos, coeff, power: j, rate: -t.rate });
            }
        }
        ExpSum { terms }
    }

    /// `F(x) = int_0^x f(t) dt` from the positive-side terms.
    pub fn cum_integral(&self) -> ExpSum {
        let mut terms = Vec::new();
        for t in &self.pos_part().terms {
            if t.rate.norm() < 1e-12 {
                terms.push(ExpTerm {
                    support: Support::Pos,
                    coeff: t.coeff / (t.power + 1) as f64,
                    power: t.power + 1,
                    rate: ZERO,
                });
            } else {
                let a = antiderivative_coeffs(t.power, t.rate);
                for (j, aj) in a.iter().enumerate() {
                    terms.push(ExpTerm {
                        support: Support::Pos,
                        coeff: t.coeff * aj,
                        power: j as u32,
                        rate: t.rate,
                    });
                }
                terms.push(ExpTerm {
                    support: Support::Pos,
                    coeff: -t.coeff * a[0],
                    power: 0,
                    rate: ZERO,
                });
            }
        }
        ExpSum { terms }
    }

    /// `F(x) = int_x^inf f(t) dt` from the positive-side terms; requires
    /// nonzero rates (with the value at infinity taken in the Abel sense for
    /// purely oscillatory rates).
    pub fn tail_integral(&self) -> Result<ExpSum> {
        let mut terms = Vec::new();
        for t in &self.pos_part().terms {
            if t.rate.norm() < 1e-12 || t.rate.re > 1e-12 {
                return Err(WhError::DivergentPairing { rate: t.rate });
            }
            let a = antiderivative_coeffs(t.power, t.rate);
            for (j, aj) in a.iter().enumerate() {
                terms.push(ExpTerm {
                    support: Support::Pos,
                    coeff: -t.coeff * aj,
                    power: j as u32,
                    rate: t.rate,
                });
            }
        }
        Ok(ExpSum { terms })
    }

    /// Forward Fourier transform `int e^{i x xi} f(x) dx` evaluated at `xi`,
    /// by the closed forms
    /// `int_0^inf x^m e^{(r + i xi)x} dx = m! / (-r - i xi)^{m+1}` and the
    /// reflected formula on the negative half-line.  Whole-line terms are
    /// rejected.
    pub fn fourier_eval(&self, xi: C) -> Result<C> {
        let i = C::new(0.0, 1.0);
        let mut v = ZERO;
        for t in &self.terms {
            let m = t.power;
            let fact = factorial(m);
            match t.support {
                Support::Pos => {
                    v += t.coeff * fact / (-t.rate - i * xi).powi(m as i32 + 1);
                }
                Support::Neg => {
                    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                    v += t.coeff * sign * fact / (t.rate + i * xi).powi(m as i32 + 1);
                }
                Support::Whole => {
                    return Err(WhError::Internal(
                        "fourier_eval of a whole-line term".into(),
                    ))
                }
            }
        }
        Ok(v)
    }

    pub fn max_coeff(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm()).fold(0.0, f64::max)
    }
}

/// Coefficients `a_j` of `int x^m e^{r x} dx = e^{r x} sum_j a_j x^j` for
/// nonzero `r`: `a_m = 1/r`, `a_{j-1} = -j a_j / r`.
pub(crate) fn antiderivative_coeffs(m: u32, rate: C) -> Vec<C> {
    let mut a = vec![ZERO; m as usize + 1];
    a[m as usize] = ONE / rate;
    for j in (1..=m as usize).rev() {
        a[j - 1] = -(j as f64) * a[j] / rate;
    }
    a
}

pub(crate) fn factorial(m: u32) -> f64 {
    (1..=m as u64).map(|k| k as f64).product::<f64>().max(1.0)
}

pub(crate) fn binomial(m: u32, j: u32) -> f64 {
    factorial(m) / (factorial(j) * factorial(m - j))
}

/// `int_0^inf f(t) g(t) dt` over the positive-side terms of both factors,
/// with `int_0^inf t^m e^{mu t} dt = m! (-1/mu)^{m+1}` taken in the Abel
/// sense for purely oscillatory `mu`.  A vanishing combined rate (or a
/// growing one) is a divergent pairing.
pub fn halfline_integral(f: &ExpSum, g: &ExpSum) -> Result<C> {
    let mut v = ZERO;
    for a in &f.pos_part().terms {
        for b in &g.pos_part().terms {
            let mu = a.rate + b.rate;
            if mu.norm() < 1e-12 || mu.re > 1e-12 {
                return Err(WhError::DivergentPairing { rate: mu });
            }
            let m = a.power + b.power;
            v += a.coeff * b.coeff * factorial(m) * (-ONE / mu).powi(m as i32 + 1);
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, I};
    use crate::quad::adaptive;

    fn decaying() -> ExpSum {
        ExpSum {
            terms: vec![
                ExpTerm { support: Support::Pos, coeff: c(1.0, 0.5), power: 1, rate: c(-1.0, 0.3) },
                ExpTerm { support: Support::Pos, coeff: c(-0.3, 0.0), power: 0, rate: c(-2.0, 0.0) },
            ],
        }
    }

    #[test]
    fn halfline_integral_matches_quadrature() {
        let f = decaying();
        let g = ExpSum {
            terms: vec![ExpTerm { support: Support::Pos, coeff: c(0.7, -0.2), power: 2, rate: c(-0.5, -1.0) }],
        };
        let want = adaptive(&|t: f64| f.eval(t) * g.eval(t), 0.0, 60.0, 1e-12).unwrap();
        let got = halfline_integral(&f, &g).unwrap();
        assert!((got - want).norm() < 1e-10, "{got} vs {want}");
    }

    #[test]
    fn oscillatory_pairing_abel_value() {
        // (chi+ e_p, chi+ e_p) = int_0^inf e^{2ipt} dt = -1/(2ip)
        let p = 1.3;
        let ep = ExpSum {
            terms: vec![ExpTerm { support: Support::Pos, coeff: ONE, power: 0, rate: c(0.0, p) }],
        };
        let got = halfline_integral(&ep, &ep).unwrap();
        let want = -ONE / (2.0 * I * p);
        assert!((got - want).norm() < 1e-14);
    }

    #[test]
    fn zero_rate_pairing_is_divergent() {
        let one = ExpSum::constant_pos(ONE);
        match halfline_integral(&one, &one) {
            Err(WhError::DivergentPairing { .. }) => {}
            other => panic!("expected DivergentPairing, got {other:?}"),
        }
    }

    #[test]
    fn cum_and_tail_integrals() {
        let f = decaying();
        // cumulative against quadrature
        for &x in &[0.5, 2.0, 7.0] {
            let want = adaptive(&|t: f64| f.eval(t), 0.0, x, 1e-12).unwrap();
            let got = f.cum_integral().eval(x);
            assert!((got - want).norm() < 1e-10);
        }
        // tail against quadrature
        let tail = f.tail_integral().unwrap();
        for &x in &[0.3, 1.5] {
            let want = adaptive(&|t: f64| f.eval(t), x, 80.0, 1e-12).unwrap();
            assert!((tail.eval(x) - want).norm() < 1e-10);
        }
    }

    #[test]
    fn shift_reflect_values() {
        let f = decaying();
        let alpha = 3.0;
        let g = f.shift_reflect(alpha);
        for &x in &[0.1, 1.0, 2.9] {
            assert!((g.eval(x) - f.eval(alpha - x)).norm() < 1e-12);
        }
    }

    #[test]
    fn fourier_eval_roundtrip_pos() {
        let f = decaying();
        // compare against numerical transform
        for &x in &[0.0, 1.0, -2.5] {
            let xi = c(x, 0.0);
            let want = adaptive(&|t: f64| f.eval(t) * (I * xi * t).exp(), 0.0, 80.0, 1e-12).unwrap();
            let got = f.fourier_eval(xi).unwrap();
            assert!((got - want).norm() < 1e-9, "{got} vs {want}");
        }
    }

    #[test]
    fn reflect_matches() {
        let f = decaying();
        let g = f.reflect();
        for &x in &[0.4, 1.7] {
            assert!((g.eval(-x) - f.eval(x)).norm() < 1e-12);
        }
    }
}
