//! Gauss-Legendre quadrature: single rules, composite panels, and a simple
//! adaptive scheme used for cross-checks.

use crate::{Result, WhError, C};

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
///
/// Computed by Newton iteration on the Legendre polynomial with the usual
/// Chebyshev initial guess; accurate to machine precision for the sizes used
/// here (n <= 64).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for k in 0..n {
        // Initial guess (k-th root, descending).
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_deriv(n, x);
        xs[k] = x;
        ws[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    xs.reverse();
    ws.reverse();
    (xs, ws)
}

/// Legendre polynomial `P_n(x)` and its derivative by the three-term
/// recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Composite rule: `panels` equal panels on `[a, b]`, each carrying the
/// `q`-point Gauss-Legendre rule.  Returns `(nodes, weights)` in increasing
/// node order.  The node set is symmetric under `x -> a + b - x`.
pub fn panel_rule(a: f64, b: f64, panels: usize, q: usize) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(q);
    let mut nodes = Vec::with_capacity(panels * q);
    let mut weights = Vec::with_capacity(panels * q);
    let h = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        for j in 0..q {
            nodes.push(lo + 0.5 * h * (xs[j] + 1.0));
            weights.push(0.5 * h * ws[j]);
        }
    }
    (nodes, weights)
}

/// Composite rule over explicitly given breakpoints, `q`-point rule per cell.
pub fn cells_rule(cells: &[(f64, f64)], q: usize) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = gauss_legendre(q);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for &(lo, hi) in cells {
        let h = hi - lo;
        for j in 0..q {
            nodes.push(lo + 0.5 * h * (xs[j] + 1.0));
            weights.push(0.5 * h * ws[j]);
        }
    }
    (nodes, weights)
}

/// Dyadically graded cells on `[a, b]` refining toward `b` down to `min_width`.
pub fn dyadic_toward(a: f64, b: f64, min_width: f64) -> Vec<(f64, f64)> {
    let mut cells = Vec::new();
    let mut lo = a;
    loop {
        let w = b - lo;
        if w <= 2.0 * min_width {
            cells.push((lo, b));
            break;
        }
        let mid = lo + 0.5 * w;
        cells.push((lo, mid));
        lo = mid;
    }
    cells
}

/// Adaptive quadrature of a complex-valued function on `[a, b]`.
///
/// Compares a 10-point and a 20-point Gauss rule on each interval and bisects
/// until the local discrepancy is below the tolerance.  Endpoints are never
/// evaluated (open rule), so integrable endpoint singularities are fine.
pub fn adaptive<F: Fn(f64) -> C>(f: &F, a: f64, b: f64, tol: f64) -> Result<C> {
    fn rule<F: Fn(f64) -> C>(f: &F, a: f64, b: f64, xs: &[f64], ws: &[f64]) -> C {
        let h = 0.5 * (b - a);
        let m = 0.5 * (a + b);
        let mut s = C::new(0.0, 0.0);
        for j in 0..xs.len() {
            s += ws[j] * f(m + h * xs[j]);
        }
        s * h
    }
    fn recurse<F: Fn(f64) -> C>(
        f: &F,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
        g10: &(Vec<f64>, Vec<f64>),
        g20: &(Vec<f64>, Vec<f64>),
    ) -> Result<C> {
        let coarse = rule(f, a, b, &g10.0, &g10.1);
        let fine = rule(f, a, b, &g20.0, &g20.1);
        if (fine - coarse).norm() <= tol || depth >= 40 {
            if depth >= 40 && (fine - coarse).norm() > tol.max(1e-9) {
                return Err(WhError::Internal(format!(
                    "adaptive quadrature failed to converge on [{a}, {b}]"
                )));
            }
            return Ok(fine);
        }
        let m = 0.5 * (a + b);
        Ok(recurse(f, a, m, 0.5 * tol, depth + 1, g10, g20)?
            + recurse(f, m, b, 0.5 * tol, depth + 1, g10, g20)?)
    }
    let g10 = gauss_legendre(10);
    let g20 = gauss_legendre(20);
    recurse(f, a, b, tol, 0, &g10, &g20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        let (xs, ws) = gauss_legendre(5);
        // degree 9 is exact for 5 points
        let val: f64 = xs
            .iter()
            .zip(&ws)
            .map(|(x, w)| w * (x.powi(9) + 3.0 * x.powi(4) - x))
            .sum();
        assert!((val - 6.0 / 5.0).abs() < 1e-14, "{val}");
    }

    #[test]
    fn gl_weights_sum_to_two() {
        for n in [1, 2, 7, 20, 40] {
            let (_, ws) = gauss_legendre(n);
            let s: f64 = ws.iter().sum();
            assert!((s - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn panel_rule_symmetric_nodes() {
        let (nodes, _) = panel_rule(0.0, 3.0, 4, 20);
        let n = nodes.len();
        for j in 0..n {
            assert!((nodes[j] + nodes[n - 1 - j] - 3.0).abs() < 1e-13);
        }
    }

    #[test]
    fn adaptive_oscillatory() {
        // int_0^1 e^{10 i x} dx = (e^{10i} - 1) / (10 i)
        let f = |x: f64| (c(0.0, 10.0 * x)).exp();
        let got = adaptive(&f, 0.0, 1.0, 1e-12).unwrap();
        let want = ((c(0.0, 10.0)).exp() - 1.0) / c(0.0, 10.0);
        assert!((got - want).norm() < 1e-11);
    }

    #[test]
    fn adaptive_log_singularity() {
        // int_0^1 ln x dx = -1
        let f = |x: f64| c(x.ln(), 0.0);
        let got = adaptive(&f, 0.0, 1.0, 1e-10).unwrap();
        assert!((got.re + 1.0).abs() < 1e-8, "{got}");
    }
}
