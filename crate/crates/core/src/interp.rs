//! Finite-difference weights and cubic Hermite interpolation.
//!
//! Two slope choices feed the same Hermite evaluator: 6th-order stencil
//! slopes for smooth resampling (coordinate changes between the physical and
//! self-similar frames), and Fritsch–Carlson monotone slopes for the
//! semi-Lagrangian transport step where overshoot at steep gradients matters
//! more than formal order.

/// Finite-difference weights for the m-th derivative at `x0` on arbitrary
/// `nodes` (Fornberg's recursion). `nodes` must be pairwise distinct.
pub fn fd_weights(x0: f64, nodes: &[f64], m: usize) -> Vec<f64> {
    let n = nodes.len();
    assert!(n > m, "need more than m+1 nodes for the m-th derivative");
    let mut c = vec![vec![0.0f64; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Slope selection for Hermite interpolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeMode {
    /// 6th-order centered stencil slopes; high accuracy on smooth data.
    Stencil6,
    /// Fritsch–Carlson monotone slopes; no overshoot between nodes.
    Monotone,
}

/// Cubic Hermite interpolant on a uniform periodic grid.
pub struct PeriodicHermite {
    origin: f64,
    h: f64,
    n: usize,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl PeriodicHermite {
    pub fn new(values: &[f64], h: f64, origin: f64, mode: SlopeMode) -> Self {
        let n = values.len();
        let slopes = match mode {
            SlopeMode::Stencil6 => periodic_slopes6(values, h),
            SlopeMode::Monotone => periodic_slopes_monotone(values, h),
        };
        Self { origin, h, n, values: values.to_vec(), slopes }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let mut u = (theta - self.origin) / self.h;
        u = u.rem_euclid(self.n as f64);
        let i = (u.floor() as usize).min(self.n - 1);
        let t = u - i as f64;
        let ip = (i + 1) % self.n;
        hermite(self.values[i], self.values[ip], self.slopes[i] * self.h, self.slopes[ip] * self.h, t)
    }
}

fn hermite(y0: f64, y1: f64, m0: f64, m1: f64, t: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
        + m0 * (t3 - 2.0 * t2 + t)
        + y1 * (-2.0 * t3 + 3.0 * t2)
        + m1 * (t3 - t2)
}

/// 6th-order centered first-derivative slopes on a uniform periodic grid.
pub fn periodic_slopes6(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut out = vec![0.0; n];
    let c = [-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0, 3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0];
    for i in 0..n {
        let mut acc = 0.0;
        for (k, &w) in c.iter().enumerate() {
            if w != 0.0 {
                let j = (i + n + k) - 3;
                acc += w * values[j % n];
            }
        }
        out[i] = acc / h;
    }
    out
}

fn periodic_slopes_monotone(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut d = vec![0.0; n];
    let delta: Vec<f64> = (0..n).map(|i| (values[(i + 1) % n] - values[i]) / h).collect();
    for i in 0..n {
        let dm = delta[(i + n - 1) % n];
        let dp = delta[i];
        d[i] = if dm * dp <= 0.0 {
            0.0
        } else {
            // Uniform spacing: the Fritsch–Carlson weighted harmonic mean
            // reduces to 2 dm dp / (dm + dp).
            2.0 * dm * dp / (dm + dp)
        };
    }
    d
}

/// Cubic Hermite interpolant on a strictly increasing non-uniform grid,
/// extended constantly outside the node range.
pub struct GradedHermite<'a> {
    xs: &'a [f64],
    values: &'a [f64],
    slopes: Vec<f64>,
}

impl<'a> GradedHermite<'a> {
    pub fn new(xs: &'a [f64], values: &'a [f64], mode: SlopeMode) -> Self {
        let slopes = match mode {
            SlopeMode::Stencil6 => nonuniform_slopes6(xs, values),
            SlopeMode::Monotone => nonuniform_slopes_monotone(xs, values),
        };
        Self { xs, values, slopes }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.values[0];
        }
        if x >= self.xs[n - 1] {
            return self.values[n - 1];
        }
        let i = match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => return self.values[i],
            Err(i) => i - 1,
        };
        let hx = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / hx;
        hermite(self.values[i], self.values[i + 1], self.slopes[i] * hx, self.slopes[i + 1] * hx, t)
    }
}

/// Slopes on a non-uniform grid from 7-point Fornberg stencils (clamped near
/// the ends).
pub fn nonuniform_slopes6(xs: &[f64], values: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut out = vec![0.0; n];
    for i in 0..n {
        let lo = i.saturating_sub(3).min(n.saturating_sub(7));
        let hi = (lo + 7).min(n);
        let w = fd_weights(xs[i], &xs[lo..hi], 1);
        out[i] = w.iter().zip(&values[lo..hi]).map(|(wi, vi)| wi * vi).sum();
    }
    out
}

fn nonuniform_slopes_monotone(xs: &[f64], values: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut d = vec![0.0; n];
    let h: Vec<f64> = (0..n - 1).map(|i| xs[i + 1] - xs[i]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (values[i + 1] - values[i]) / h[i]).collect();
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for i in 1..n - 1 {
        let (dm, dp) = (delta[i - 1], delta[i]);
        d[i] = if dm * dp <= 0.0 {
            0.0
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            (w1 + w2) / (w1 / dm + w2 / dp)
        };
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn fornberg_reproduces_centered_weights() {
        let nodes: Vec<f64> = (-3..=3).map(|i| i as f64).collect();
        let w = fd_weights(0.0, &nodes, 1);
        let expect = [-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0, 3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0];
        for (a, b) in w.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-13, "{w:?}");
        }
    }

    #[test]
    fn fornberg_third_derivative() {
        // 9-point centered stencil for the 3rd derivative, tested on sin.
        let h = 0.05;
        let nodes: Vec<f64> = (-4..=4).map(|i| i as f64 * h).collect();
        let w = fd_weights(0.0, &nodes, 3);
        let approx: f64 = nodes.iter().zip(&w).map(|(x, wi)| wi * x.sin()).sum();
        assert!((approx + 1.0).abs() < 1e-9, "{approx}");
    }

    #[test]
    fn periodic_hermite_accuracy() {
        let n = 512;
        let h = 2.0 * PI / n as f64;
        let values: Vec<f64> = (0..n).map(|i| (-PI + i as f64 * h).sin()).collect();
        let interp = PeriodicHermite::new(&values, h, -PI, SlopeMode::Stencil6);
        let mut worst: f64 = 0.0;
        for k in 0..1000 {
            let theta = -PI + 2.0 * PI * (k as f64 + 0.37) / 1000.0;
            worst = worst.max((interp.eval(theta) - theta.sin()).abs());
        }
        assert!(worst < 1e-9, "{worst}");
    }

    #[test]
    fn monotone_mode_does_not_overshoot() {
        let values = vec![0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.5, 0.0];
        let interp = PeriodicHermite::new(&values, 1.0, 0.0, SlopeMode::Monotone);
        for k in 0..800 {
            let x = k as f64 * 0.01;
            let v = interp.eval(x);
            assert!((-1e-12..=1.0 + 1e-12).contains(&v), "overshoot {v} at {x}");
        }
    }

    #[test]
    fn graded_hermite_smooth() {
        let mut xs = vec![0.0];
        let mut dx = 0.1;
        while *xs.last().unwrap() < 20.0 {
            let next = xs.last().unwrap() + dx;
            xs.push(next);
            dx *= 1.05;
        }
        let vals: Vec<f64> = xs.iter().map(|x: &f64| (0.3 * x).sin()).collect();
        let interp = GradedHermite::new(&xs, &vals, SlopeMode::Stencil6);
        let mut worst: f64 = 0.0;
        for k in 0..2000 {
            let x = 19.0 * (k as f64 + 0.5) / 2000.0;
            worst = worst.max((interp.eval(x) - (0.3 * x).sin()).abs());
        }
        assert!(worst < 1e-4, "{worst}");
        assert_eq!(interp.eval(1e9), *vals.last().unwrap());
    }
}
