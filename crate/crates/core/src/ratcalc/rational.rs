//! Rational functions in fully factored form with half-plane bookkeeping for
//! points on the real axis.

use super::{PoleSum, PoleTerm, COINCIDE_TOL, SEPARATION_TOL};
use crate::{Result, WhError, C, ONE, ZERO};

/// Which side of the real axis a *real* point is nudged to: `Above` means
/// the point is treated as `x + 0i` (upper half-plane), `Below` as `x - 0i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

/// Effective half-plane of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    Upper,
    Lower,
}

/// A zero or pole location.  Real locations must carry a `Side`.
#[derive(Clone, Copy, Debug)]
pub struct Pt {
    pub at: C,
    pub side: Option<Side>,
}

impl Pt {
    /// Strictly off-axis point.
    pub fn off_axis(at: C) -> Result<Pt> {
        if at.im == 0.0 {
            return Err(WhError::BoundarySideRequired { at: at.re });
        }
        Ok(Pt { at, side: None })
    }

    /// Real point with an explicit side tag.
    pub fn boundary(re: f64, side: Side) -> Pt {
        Pt { at: C::new(re, 0.0), side: Some(side) }
    }

    /// Point from a raw complex location; errors for real locations.
    pub fn from_complex(at: C) -> Result<Pt> {
        Pt::off_axis(at)
    }

    pub fn is_boundary(&self) -> bool {
        self.at.im == 0.0
    }

    /// Half-plane this point is routed to.
    pub fn half(&self) -> Result<Half> {
        if self.at.im > 0.0 {
            Ok(Half::Upper)
        } else if self.at.im < 0.0 {
            Ok(Half::Lower)
        } else {
            match self.side {
                Some(Side::Above) => Ok(Half::Upper),
                Some(Side::Below) => Ok(Half::Lower),
                None => Err(WhError::BoundarySideRequired { at: self.at.re }),
            }
        }
    }

    /// The reflection `xi -> -xi` sends `z` to `-z` and swaps the side tag.
    pub fn reflect(&self) -> Pt {
        Pt { at: -self.at, side: self.side.map(Side::flip) }
    }
}

/// `scale * prod (xi - z_k) / prod (xi - w_j)` with `#zeros <= #poles`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub zeros: Vec<Pt>,
    pub poles: Vec<Pt>,
    pub scale: C,
}

impl RationalFunction {
    pub fn new(zeros: Vec<Pt>, poles: Vec<Pt>, scale: C) -> Result<Self> {
        if zeros.len() > poles.len() {
            return Err(WhError::InvalidSpec(format!(
                "rational function with numerator degree {} > denominator degree {}",
                zeros.len(),
                poles.len()
            )));
        }
        Ok(RationalFunction { zeros, poles, scale })
    }

    pub fn constant(value: C) -> Self {
        RationalFunction { zeros: vec![], poles: vec![], scale: value }
    }

    pub fn eval(&self, xi: C) -> C {
        let mut v = self.scale;
        for z in &self.zeros {
            v *= xi - z.at;
        }
        for w in &self.poles {
            v /= xi - w.at;
        }
        v
    }

    /// Limit at infinity: `scale` when degrees match, zero otherwise.
    pub fn value_at_infinity(&self) -> C {
        if self.zeros.len() == self.poles.len() {
            self.scale
        } else {
            ZERO
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        let mut poles = self.poles.clone();
        poles.extend_from_slice(&other.poles);
        RationalFunction { zeros, poles, scale: self.scale * other.scale }
    }

    pub fn scaled(&self, s: C) -> RationalFunction {
        RationalFunction { zeros: self.zeros.clone(), poles: self.poles.clone(), scale: s * self.scale }
    }

    /// `1 / r`.  Degenerate only if `r` vanishes identically.
    pub fn reciprocal(&self) -> Result<RationalFunction> {
        if self.scale == ZERO {
            return Err(WhError::Internal("reciprocal of zero function".into()));
        }
        Ok(RationalFunction {
            zeros: self.poles.clone(),
            poles: self.zeros.clone(),
            scale: ONE / self.scale,
        })
    }

    /// `r~(xi) = r(-xi)`.
    pub fn tilde(&self) -> RationalFunction {
        let zeros: Vec<Pt> = self.zeros.iter().map(Pt::reflect).collect();
        let poles: Vec<Pt> = self.poles.iter().map(Pt::reflect).collect();
        let parity = (self.zeros.len() + self.poles.len()) % 2;
        let scale = if parity == 0 { self.scale } else { -self.scale };
        RationalFunction { zeros, poles, scale }
    }

    /// Derivative at a regular point, or at a simple zero.
    pub fn derivative_at(&self, xi: C) -> Result<C> {
        for w in &self.poles {
            if (xi - w.at).norm() < SEPARATION_TOL {
                return Err(WhError::Internal(format!("derivative requested at pole {}", w.at)));
            }
        }
        let hits: Vec<usize> = self
            .zeros
            .iter()
            .enumerate()
            .filter(|(_, z)| (xi - z.at).norm() < COINCIDE_TOL)
            .map(|(k, _)| k)
            .collect();
        match hits.len() {
            0 => {
                let v = self.eval(xi);
                let mut logd = ZERO;
                for z in &self.zeros {
                    logd += ONE / (xi - z.at);
                }
                for w in &self.poles {
                    logd -= ONE / (xi - w.at);
                }
                Ok(v * logd)
            }
            1 => {
                let k = hits[0];
                let mut v = self.scale;
                for (j, z) in self.zeros.iter().enumerate() {
                    if j != k {
                        v *= xi - z.at;
                    }
                }
                for w in &self.poles {
                    v /= xi - w.at;
                }
                Ok(v)
            }
            _ => Ok(ZERO),
        }
    }

    /// Exact winding number of `r` along the real line, using the tagged
    /// half-plane routing: `2 wind = (Z_up - Z_low) - (P_up - P_low)`.
    pub fn winding(&self) -> Result<i32> {
        let mut twice = 0i32;
        for z in &self.zeros {
            twice += match z.half()? {
                Half::Upper => 1,
                Half::Lower => -1,
            };
        }
        for w in &self.poles {
            twice -= match w.half()? {
                Half::Upper => 1,
                Half::Lower => -1,
            };
        }
        if twice % 2 != 0 {
            return Err(WhError::Internal(format!(
                "odd half-plane imbalance {twice} in winding computation"
            )));
        }
        Ok(twice / 2)
    }

    /// Partial fraction expansion.  Poles are grouped by location: exactly
    /// coincident (or within `COINCIDE_TOL`) locations form multiple poles;
    /// separations between `COINCIDE_TOL` and `SEPARATION_TOL` are rejected
    /// as numerically ill-posed; multiplicity 3 or higher is unsupported.
    pub fn partial_fractions(&self) -> Result<PoleSum> {
        // group poles
        let mut groups: Vec<(Pt, u32)> = Vec::new();
        for w in &self.poles {
            let mut placed = false;
            for g in groups.iter_mut() {
                let sep = (g.0.at - w.at).norm();
                if sep <= COINCIDE_TOL {
                    g.1 += 1;
                    placed = true;
                    break;
                } else if sep < SEPARATION_TOL {
                    return Err(WhError::PolesTooClose { sep, at: w.at });
                }
            }
            if !placed {
                groups.push((*w, 1));
            }
        }
        let mut terms: Vec<PoleTerm> = Vec::new();
        for (g_idx, &(q, mult)) in groups.iter().enumerate() {
            match mult {
                1 | 2 => {}
                m => return Err(WhError::HigherMultiplicity { order: m }),
            }
            // leading coefficient: scale * prod(q - z) / prod_{other groups}(q - w)^mult
            let mut lead = self.scale;
            for z in &self.zeros {
                lead *= q.at - z.at;
            }
            for (j, &(w, wm)) in groups.iter().enumerate() {
                if j != g_idx {
                    for _ in 0..wm {
                        lead /= q.at - w.at;
                    }
                }
            }
            if mult == 1 {
                terms.push(PoleTerm { pole: q, order: 1, coeff: lead });
            } else {
                // c2 / (xi-q)^2 + c1 / (xi-q) with c2 = lead and
                // c1 = c2 * [ sum_z 1/(q-z) - sum_{other} mult_j/(q-w_j) ]
                let mut logd = ZERO;
                for z in &self.zeros {
                    logd += ONE / (q.at - z.at);
                }
                for (j, &(w, wm)) in groups.iter().enumerate() {
                    if j != g_idx {
                        logd -= C::new(wm as f64, 0.0) / (q.at - w.at);
                    }
                }
                terms.push(PoleTerm { pole: q, order: 2, coeff: lead });
                terms.push(PoleTerm { pole: q, order: 1, coeff: lead * logd });
            }
        }
        Ok(PoleSum { terms, constant: self.value_at_infinity() })
    }

    /// Split the factored data into the product `m_minus * m_plus` where
    /// `m_minus` collects the zeros and poles routed to the (closed) upper
    /// half-plane and `m_plus` the lower ones.  Both parts are monic; the
    /// overall scale is returned separately.
    pub fn split_half_plane(&self) -> Result<(RationalFunction, RationalFunction)> {
        let mut mz = vec![];
        let mut mp = vec![];
        let mut pz = vec![];
        let mut pp = vec![];
        for z in &self.zeros {
            match z.half()? {
                Half::Upper => mz.push(*z),
                Half::Lower => pz.push(*z),
            }
        }
        for w in &self.poles {
            match w.half()? {
                Half::Upper => mp.push(*w),
                Half::Lower => pp.push(*w),
            }
        }
        Ok((
            RationalFunction { zeros: mz, poles: mp, scale: ONE },
            RationalFunction { zeros: pz, poles: pp, scale: ONE },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn cauchy_tau() -> RationalFunction {
        // tau = 1/(1+xi^2) = 1/((xi-i)(xi+i))
        RationalFunction::new(
            vec![],
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap(), Pt::off_axis(c(0.0, -1.0)).unwrap()],
            ONE,
        )
        .unwrap()
    }

    #[test]
    fn eval_and_infinity() {
        let t = cauchy_tau();
        assert!((t.eval(c(2.0, 0.0)) - c(0.2, 0.0)).norm() < 1e-15);
        assert_eq!(t.value_at_infinity(), ZERO);
        let r = RationalFunction::new(
            vec![Pt::off_axis(c(0.0, 2.0)).unwrap()],
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap()],
            c(3.0, 0.0),
        )
        .unwrap();
        assert_eq!(r.value_at_infinity(), c(3.0, 0.0));
    }

    #[test]
    fn winding_examples() {
        // tau = 1/(1+xi^2): balanced poles, winding 0
        assert_eq!(cauchy_tau().winding().unwrap(), 0);
        // (xi - i) / ((xi + i)(1 + xi^2)) -> winding... zeros: up 1; poles: i up, -i low, -i low:
        let r = RationalFunction::new(
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap()],
            vec![
                Pt::off_axis(c(0.0, -1.0)).unwrap(),
                Pt::off_axis(c(0.0, 1.0)).unwrap(),
                Pt::off_axis(c(0.0, -1.0)).unwrap(),
            ],
            ONE,
        )
        .unwrap();
        // 2w = (1 - 0) - (1 - 2) = 2 -> w = 1
        assert_eq!(r.winding().unwrap(), 1);
        // boundary zeros of sigma0 with opposite sides cancel
        let s0 = RationalFunction::new(
            vec![Pt::boundary(0.0, Side::Above), Pt::boundary(0.0, Side::Below)],
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap(), Pt::off_axis(c(0.0, -1.0)).unwrap()],
            ONE,
        )
        .unwrap();
        assert_eq!(s0.winding().unwrap(), 0);
    }

    #[test]
    fn tilde_matches_pointwise() {
        let r = RationalFunction::new(
            vec![Pt::off_axis(c(0.5, 2.0)).unwrap()],
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap(), Pt::off_axis(c(-1.0, -1.5)).unwrap()],
            c(1.2, -0.3),
        )
        .unwrap();
        let rt = r.tilde();
        for &x in &[0.3, -1.7, 4.1] {
            let a = rt.eval(c(x, 0.0));
            let b = r.eval(c(-x, 0.0));
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn partial_fractions_simple() {
        let t = cauchy_tau();
        let ps = t.partial_fractions().unwrap();
        for &x in &[0.0, 1.3, -2.0] {
            let xi = c(x, 0.0);
            assert!((ps.eval(xi) - t.eval(xi)).norm() < 1e-14);
        }
    }

    #[test]
    fn partial_fractions_double_pole() {
        // (xi - 2i) / ((xi - i)^2 (xi + 3i))
        let r = RationalFunction::new(
            vec![Pt::off_axis(c(0.0, 2.0)).unwrap()],
            vec![
                Pt::off_axis(c(0.0, 1.0)).unwrap(),
                Pt::off_axis(c(0.0, 1.0)).unwrap(),
                Pt::off_axis(c(0.0, -3.0)).unwrap(),
            ],
            c(0.7, 0.4),
        )
        .unwrap();
        let ps = r.partial_fractions().unwrap();
        for &x in &[0.2, -1.1, 3.0] {
            let xi = c(x, 0.0);
            assert!((ps.eval(xi) - r.eval(xi)).norm() < 1e-13);
        }
    }

    #[test]
    fn partial_fractions_rejects_near_coincident() {
        let r = RationalFunction::new(
            vec![],
            vec![
                Pt::off_axis(c(0.0, 1.0)).unwrap(),
                Pt::off_axis(c(1e-12, 1.0)).unwrap(),
            ],
            ONE,
        )
        .unwrap();
        match r.partial_fractions() {
            Err(WhError::PolesTooClose { .. }) => {}
            other => panic!("expected PolesTooClose, got {other:?}"),
        }
    }

    #[test]
    fn derivative_at_regular_and_zero() {
        let r = RationalFunction::new(
            vec![Pt::off_axis(c(0.0, 2.0)).unwrap()],
            vec![Pt::off_axis(c(0.0, 1.0)).unwrap(), Pt::off_axis(c(0.0, -1.0)).unwrap()],
            ONE,
        )
        .unwrap();
        // finite difference check at a regular point
        let xi = c(0.7, 0.0);
        let h = 1e-6;
        let fd = (r.eval(xi + h) - r.eval(xi - h)) / (2.0 * h);
        assert!((r.derivative_at(xi).unwrap() - fd).norm() < 1e-8);
        // derivative at the (simple) zero 2i
        let z = c(0.0, 2.0);
        let fd2 = (r.eval(z + h) - r.eval(z - h)) / (2.0 * h);
        assert!((r.derivative_at(z).unwrap() - fd2).norm() < 1e-8);
    }

    #[test]
    fn boundary_point_requires_side() {
        assert!(Pt::off_axis(c(1.0, 0.0)).is_err());
        let p = Pt { at: c(1.0, 0.0), side: None };
        assert!(p.half().is_err());
    }
}
