//! Separable two-variable kernels
//! `K(x, y) = sum_t c x^px y^py e^{rx x + ry y}` restricted to a region
//! (whole square, `x >= y`, or `x < y`), plus an identity multiple.  The
//! class is closed under the operator composition
//! `(K1 K2)(x, y) = int K1(x, s) K2(s, y) ds` over a finite interval or the
//! half-line, which is evaluated in closed form.

use super::expsum::{antiderivative_coeffs, binomial};
use super::{ExpSum, Support};
use crate::{Result, WhError, C, ONE, ZERO};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Whole,
    /// `x >= y`
    Lower,
    /// `x < y`
    Upper,
}

impl Region {
    fn swap(self) -> Region {
        match self {
            Region::Whole => Region::Whole,
            Region::Lower => Region::Upper,
            Region::Upper => Region::Lower,
        }
    }
}

/// Composition domain for the inner variable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Domain {
    Finite(f64),
    HalfLine,
}

#[derive(Clone, Copy, Debug)]
pub struct KernelTerm {
    pub region: Region,
    pub coeff: C,
    pub px: u32,
    pub py: u32,
    pub rx: C,
    pub ry: C,
}

#[derive(Clone, Debug)]
pub struct Kernel2D {
    pub identity_coeff: C,
    pub terms: Vec<KernelTerm>,
    /// Domain edge for `eval` / `flip`; `f64::INFINITY` for half-line kernels.
    pub alpha: f64,
}

impl Kernel2D {
    pub fn zero(alpha: f64) -> Kernel2D {
        Kernel2D { identity_coeff: ZERO, terms: vec![], alpha }
    }

    /// Convolution kernel `k(x - y)` from a position-space profile.
    pub fn from_convolution(k: &ExpSum, alpha: f64) -> Kernel2D {
        let mut terms = Vec::new();
        for t in &k.terms {
            let region = match t.support {
                Support::Pos => Region::Lower,
                Support::Neg => Region::Upper,
                Support::Whole => Region::Whole,
            };
            // (x - y)^m = sum_j C(m,j) x^j (-y)^{m-j}
            for j in 0..=t.power {
                let sign = if (t.power - j) % 2 == 0 { ONE } else { -ONE };
                terms.push(KernelTerm {
                    region,
                    coeff: t.coeff * binomial(t.power, j) * sign,
                    px: j,
                    py: t.power - j,
                    rx: t.rate,
                    ry: -t.rate,
                });
            }
        }
        Kernel2D { identity_coeff: ZERO, terms, alpha }
    }

    /// Hankel kernel `h(x + y)` from the positive-side terms of a profile.
    pub fn from_hankel(h: &ExpSum, alpha: f64) -> Kernel2D {
        let mut terms = Vec::new();
        for t in &h.pos_part().terms {
            for j in 0..=t.power {
                terms.push(KernelTerm {
                    region: Region::Whole,
                    coeff: t.coeff * binomial(t.power, j),
                    px: j,
                    py: t.power - j,
                    rx: t.rate,
                    ry: t.rate,
                });
            }
        }
        Kernel2D { identity_coeff: ZERO, terms, alpha }
    }

    /// Rank-one kernel `f(x) g(y)` from positive-side profiles.
    pub fn from_rank_one(f: &ExpSum, g: &ExpSum, coeff: C, alpha: f64) -> Kernel2D {
        let mut terms = Vec::new();
        for a in &f.pos_part().terms {
            for b in &g.pos_part().terms {
                terms.push(KernelTerm {
                    region: Region::Whole,
                    coeff: coeff * a.coeff * b.coeff,
                    px: a.power,
                    py: b.power,
                    rx: a.rate,
                    ry: b.rate,
                });
            }
        }
        Kernel2D { identity_coeff: ZERO, terms, alpha }
    }

    /// Kernel value at `(x, y)`, excluding the identity part.
    pub fn eval(&self, x: f64, y: f64) -> C {
        let mut v = ZERO;
        for t in &self.terms {
            let on = match t.region {
                Region::Whole => true,
                Region::Lower => x >= y,
                Region::Upper => x < y,
            };
            if on {
                v += t.coeff
                    * x.powi(t.px as i32)
                    * y.powi(t.py as i32)
                    * (t.rx * x + t.ry * y).exp();
            }
        }
        v
    }

    pub fn add(&self, other: &Kernel2D) -> Kernel2D {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Kernel2D {
            identity_coeff: self.identity_coeff + other.identity_coeff,
            terms,
            alpha: self.alpha.min(other.alpha),
        }
    }

    pub fn scaled(&self, s: C) -> Kernel2D {
        Kernel2D {
            identity_coeff: s * self.identity_coeff,
            terms: self.terms.iter().map(|t| KernelTerm { coeff: s * t.coeff, ..*t }).collect(),
            alpha: self.alpha,
        }
    }

    pub fn restricted(&self, alpha: f64) -> Kernel2D {
        Kernel2D { identity_coeff: self.identity_coeff, terms: self.terms.clone(), alpha }
    }

    /// `K(alpha - x, alpha - y)` (conjugation by the flip `Q_alpha`).
    pub fn flip(&self) -> Result<Kernel2D> {
        if !self.alpha.is_finite() {
            return Err(WhError::Internal("flip of a half-line kernel".into()));
        }
        let alpha = self.alpha;
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = ((t.rx + t.ry) * alpha).exp();
            for a in 0..=t.px {
                for b in 0..=t.py {
                    let sign = if (a + b) % 2 == 0 { ONE } else { -ONE };
                    terms.push(KernelTerm {
                        region: t.region.swap(),
                        coeff: t.coeff
                            * e
                            * sign
                            * binomial(t.px, a)
                            * binomial(t.py, b)
                            * alpha.powi((t.px - a) as i32)
                            * alpha.powi((t.py - b) as i32),
                        px: a,
                        py: b,
                        rx: -t.rx,
                        ry: -t.ry,
                    });
                }
            }
        }
        Ok(Kernel2D { identity_coeff: self.identity_coeff, terms, alpha })
    }

    /// `K^T(x, y) = K(y, x)`.
    pub fn transpose(&self) -> Kernel2D {
        Kernel2D {
            identity_coeff: self.identity_coeff,
            terms: self
                .terms
                .iter()
                .map(|t| KernelTerm {
                    region: t.region.swap(),
                    coeff: t.coeff,
                    px: t.py,
                    py: t.px,
                    rx: t.ry,
                    ry: t.rx,
                })
                .collect(),
            alpha: self.alpha,
        }
    }

    /// Merge coincident terms and drop exact zeros.
    pub fn compact(&self) -> Kernel2D {
        let mut out: Vec<KernelTerm> = Vec::new();
        for t in &self.terms {
            if t.coeff == ZERO {
                continue;
            }
            if let Some(u) = out.iter_mut().find(|u| {
                u.region == t.region
                    && u.px == t.px
                    && u.py == t.py
                    && (u.rx - t.rx).norm() <= 1e-12
                    && (u.ry - t.ry).norm() <= 1e-12
            }) {
                u.coeff += t.coeff;
            } else {
                out.push(*t);
            }
        }
        out.retain(|t| t.coeff != ZERO);
        Kernel2D { identity_coeff: self.identity_coeff, terms: out, alpha: self.alpha }
    }
}

/// Symbolic endpoint of the inner integration range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ep {
    Zero,
    X,
    Y,
    End,
}

/// Output-region case for the composition.
#[derive(Clone, Copy)]
enum Case {
    /// `x > y`, output region Lower
    XGtY,
    /// `x < y`, output region Upper
    XLtY,
}

fn rank(e: Ep, case: Case) -> u8 {
    match (e, case) {
        (Ep::Zero, _) => 0,
        (Ep::End, _) => 3,
        (Ep::Y, Case::XGtY) => 1,
        (Ep::X, Case::XGtY) => 2,
        (Ep::X, Case::XLtY) => 1,
        (Ep::Y, Case::XLtY) => 2,
    }
}

/// Operator composition `k1 k2` with the inner variable ranging over
/// `(0, alpha)` or `(0, inf)`.  Exact: the `s`-integral of each term pair is
/// evaluated by the closed-form antiderivative at the symbolic endpoints.
/// Pairings whose combined rate does not permit the half-line integral
/// (zero, or growing at infinity) are rejected as divergent.
pub fn compose_kernels(k1: &Kernel2D, k2: &Kernel2D, domain: Domain) -> Result<Kernel2D> {
    let (end_finite, alpha_out) = match domain {
        Domain::Finite(a) => (Some(a), a),
        Domain::HalfLine => (None, f64::INFINITY),
    };
    let mut out = Kernel2D::zero(alpha_out);
    out.identity_coeff = k1.identity_coeff * k2.identity_coeff;
    if k2.identity_coeff != ZERO {
        for t in &k1.terms {
            out.terms.push(KernelTerm { coeff: k2.identity_coeff * t.coeff, ..*t });
        }
    }
    if k1.identity_coeff != ZERO {
        for t in &k2.terms {
            out.terms.push(KernelTerm { coeff: k1.identity_coeff * t.coeff, ..*t });
        }
    }
    for t1 in &k1.terms {
        for t2 in &k2.terms {
            for case in [Case::XGtY, Case::XLtY] {
                // s-range imposed by t1 (variables x, s) and t2 (variables s, y)
                let (lo1, hi1) = match t1.region {
                    Region::Whole => (Ep::Zero, Ep::End),
                    Region::Lower => (Ep::Zero, Ep::X),
                    Region::Upper => (Ep::X, Ep::End),
                };
                let (lo2, hi2) = match t2.region {
                    Region::Whole => (Ep::Zero, Ep::End),
                    Region::Lower => (Ep::Y, Ep::End),
                    Region::Upper => (Ep::Zero, Ep::Y),
                };
                let lo = if rank(lo1, case) >= rank(lo2, case) { lo1 } else { lo2 };
                let hi = if rank(hi1, case) <= rank(hi2, case) { hi1 } else { hi2 };
                if rank(lo, case) >= rank(hi, case) {
                    continue;
                }
                let nu = t1.ry + t2.rx;
                let kk = t1.py + t2.px;
                let c0 = t1.coeff * t2.coeff;
                let region = match case {
                    Case::XGtY => Region::Lower,
                    Case::XLtY => Region::Upper,
                };
                let mut push = |extra: EndpointValue, sign: f64| match extra {
                    EndpointValue::Const(v) => out.terms.push(KernelTerm {
                        region,
                        coeff: c0 * v * sign,
                        px: t1.px,
                        py: t2.py,
                        rx: t1.rx,
                        ry: t2.ry,
                    }),
                    EndpointValue::AtX(coeffs, rate) => {
                        for (j, cj) in coeffs.iter().enumerate() {
                            out.terms.push(KernelTerm {
                                region,
                                coeff: c0 * cj * sign,
                                px: t1.px + j as u32,
                                py: t2.py,
                                rx: t1.rx + rate,
                                ry: t2.ry,
                            });
                        }
                    }
                    EndpointValue::AtY(coeffs, rate) => {
                        for (j, cj) in coeffs.iter().enumerate() {
                            out.terms.push(KernelTerm {
                                region,
                                coeff: c0 * cj * sign,
                                px: t1.px,
                                py: t2.py + j as u32,
                                rx: t1.rx,
                                ry: t2.ry + rate,
                            });
                        }
                    }
                    EndpointValue::Nothing => {}
                };
                push(endpoint_value(hi, kk, nu, end_finite)?, 1.0);
                push(endpoint_value(lo, kk, nu, end_finite)?, -1.0);
            }
        }
    }
    Ok(out.compact())
}

enum EndpointValue {
    Nothing,
    Const(C),
    /// antiderivative evaluated at `s = x`: `sum_j c_j x^j e^{rate x}`
    AtX(Vec<C>, C),
    AtY(Vec<C>, C),
}

/// Value of `F(s) = int s^K e^{nu s} ds` at a symbolic endpoint.
fn endpoint_value(e: Ep, kk: u32, nu: C, end_finite: Option<f64>) -> Result<EndpointValue> {
    let small = nu.norm() < 1e-12;
    match e {
        Ep::Zero => {
            if small {
                Ok(EndpointValue::Nothing)
            } else {
                Ok(EndpointValue::Const(antiderivative_coeffs(kk, nu)[0]))
            }
        }
        Ep::X | Ep::Y => {
            let (coeffs, rate) = if small {
                let mut cs = vec![ZERO; kk as usize + 2];
                cs[kk as usize + 1] = ONE / (kk + 1) as f64;
                (cs, ZERO)
            } else {
                (antiderivative_coeffs(kk, nu), nu)
            };
            if e == Ep::X {
                Ok(EndpointValue::AtX(coeffs, rate))
            } else {
                Ok(EndpointValue::AtY(coeffs, rate))
            }
        }
        Ep::End => match end_finite {
            Some(a) => {
                if small {
                    Ok(EndpointValue::Const(
                        C::new(a.powi(kk as i32 + 1) / (kk + 1) as f64, 0.0),
                    ))
                } else {
                    let cs = antiderivative_coeffs(kk, nu);
                    let mut v = ZERO;
                    for (j, cj) in cs.iter().enumerate() {
                        v += cj * a.powi(j as i32);
                    }
                    Ok(EndpointValue::Const(v * (nu * a).exp()))
                }
            }
            None => {
                if small || nu.re > 1e-12 {
                    Err(WhError::DivergentPairing { rate: nu })
                } else {
                    // Abel-regularized value at infinity
                    Ok(EndpointValue::Nothing)
                }
            }
        },
    }
}
