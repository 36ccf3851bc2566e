//! Uniform periodic grid on the angle and its stencil kernels.

use std::f64::consts::PI;

/// Uniform periodic grid of n points over [-π, π).
#[derive(Debug, Clone)]
pub struct PeriodicGrid {
    pub n: usize,
    pub h: f64,
    pub thetas: Vec<f64>,
}

impl PeriodicGrid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 64 && n % 2 == 0, "grid needs n >= 64 and even");
        let h = 2.0 * PI / n as f64;
        let thetas = (0..n).map(|i| -PI + i as f64 * h).collect();
        Self { n, h, thetas }
    }

    /// 6th-order centered first derivative.
    pub fn deriv6(&self, f: &[f64]) -> Vec<f64> {
        crate::interp::periodic_slopes6(f, self.h)
    }

    /// 8th-order hyper-dissipation operator: -(σ/(2^8 h)) Δ⁸ f, where Δ⁸ is
    /// the 8th centered difference. The symbol is -σ sin⁸(kh/2)/h, so the
    /// injected error is O(h⁷) on smooth fields and vanishes under
    /// refinement.
    pub fn hyperdiss8(&self, f: &[f64], sigma: f64) -> Vec<f64> {
        let n = self.n;
        let scale = -sigma / (256.0 * self.h);
        // Binomial coefficients of (1 - 1)^8 pattern: Δ⁸ centered at i.
        let c = [1.0, -8.0, 28.0, -56.0, 70.0, -56.0, 28.0, -8.0, 1.0];
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for (k, &w) in c.iter().enumerate() {
                let j = (i + n + k) - 4;
                acc += w * f[j % n];
            }
            out[i] = scale * acc;
        }
        out
    }

    pub fn max_abs(f: &[f64]) -> f64 {
        f.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Largest |f| over grid points with |θ| > 3π/4 (used to verify that
    /// derivative supports stay inside [-3π/4, 3π/4]).
    pub fn max_abs_outside_support(&self, f: &[f64]) -> f64 {
        let mut m = 0.0f64;
        for (i, &th) in self.thetas.iter().enumerate() {
            if th.abs() > 3.0 * PI / 4.0 {
                m = m.max(f[i].abs());
            }
        }
        m
    }

    /// Index of the minimum value.
    pub fn argmin(f: &[f64]) -> usize {
        let mut best = 0;
        for i in 1..f.len() {
            if f[i] < f[best] {
                best = i;
            }
        }
        best
    }

    /// Sub-grid location of the minimum of `f` by parabolic refinement around
    /// the discrete argmin. Ties within `tie_tol` are broken toward the
    /// smallest |θ| so symmetric data resolve deterministically.
    pub fn refine_argmin(&self, f: &[f64], tie_tol: f64) -> (f64, f64) {
        let n = self.n;
        let raw_min = f.iter().cloned().fold(f64::INFINITY, f64::min);
        let mut best: Option<usize> = None;
        for i in 0..n {
            if f[i] <= raw_min + tie_tol {
                let better = match best {
                    None => true,
                    Some(b) => self.thetas[i].abs() < self.thetas[b].abs(),
                };
                if better {
                    best = Some(i);
                }
            }
        }
        let i = best.unwrap();
        let (fm, f0, fp) = (f[(i + n - 1) % n], f[i], f[(i + 1) % n]);
        let denom = fm - 2.0 * f0 + fp;
        let delta = if denom.abs() > 1e-300 { 0.5 * (fm - fp) / denom } else { 0.0 };
        let delta = delta.clamp(-0.5, 0.5);
        let theta = self.thetas[i] + delta * self.h;
        let value = f0 - 0.25 * (fm - fp) * delta;
        (theta, value)
    }
}

/// Maps an angle to the fundamental domain [-π, π).
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = (theta + PI).rem_euclid(two_pi) - PI;
    if t >= PI {
        t -= two_pi;
    }
    t
}
