//! The γ = 3 purely azimuthal solution: Burgers by characteristics, exact
//! blowup prediction, entropy continuation past the cusp, and the
//! Rankine–Hugoniot verification of the continued solution.
//!
//! With a ≡ 0 and z ≡ 0 the reduced system collapses to
//! `∂_t w + w ∂_θ w = 0` and the Euler fields are `u_θ = ρ = r w / 2`,
//! `u_r = 0`. Everything here is exact to round-off: characteristics are
//! inverted by bracketed bisection plus Newton polish, and the continued
//! solution is the closed-form branch-selected root formula.

use crate::cubic::cubic_branch_root;
use crate::error::{Error, Result};
use crate::grid::{wrap_angle, PeriodicGrid};
use crate::interp::{PeriodicHermite, SlopeMode};

type DatumFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

enum DatumEval {
    /// Closed-form value and slope.
    Analytic { value: DatumFn, slope: DatumFn },
    /// Hermite interpolation of the samples.
    Interpolated { value: PeriodicHermite, slope: PeriodicHermite },
}

/// Periodic Burgers initial datum with a continuous evaluator attached to
/// the samples.
pub struct BurgersDatum {
    pub grid: PeriodicGrid,
    pub w0: Vec<f64>,
    /// Positive lower bound of w₀.
    pub nu0: f64,
    /// Sup norm of w₀.
    pub amplitude: f64,
    eval: DatumEval,
}

impl BurgersDatum {
    /// Build from closed-form value and slope functions.
    pub fn from_fn<F, G>(n: usize, value: F, slope: G) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let grid = PeriodicGrid::new(n);
        let w0: Vec<f64> = grid.thetas.iter().map(|&t| value(t)).collect();
        let nu0 = w0.iter().cloned().fold(f64::INFINITY, f64::min);
        let amplitude = PeriodicGrid::max_abs(&w0);
        Self {
            grid,
            w0,
            nu0,
            amplitude,
            eval: DatumEval::Analytic { value: Box::new(value), slope: Box::new(slope) },
        }
    }

    /// Build from samples alone; evaluation interpolates.
    pub fn from_samples(w0: Vec<f64>) -> Self {
        let grid = PeriodicGrid::new(w0.len());
        let nu0 = w0.iter().cloned().fold(f64::INFINITY, f64::min);
        let amplitude = PeriodicGrid::max_abs(&w0);
        let value = PeriodicHermite::new(&w0, grid.h, -std::f64::consts::PI, SlopeMode::Stencil6);
        let slopes = grid.deriv6(&w0);
        let slope =
            PeriodicHermite::new(&slopes, grid.h, -std::f64::consts::PI, SlopeMode::Stencil6);
        Self { grid, w0, nu0, amplitude, eval: DatumEval::Interpolated { value, slope } }
    }

    /// Builtin `sine5`: w₀(θ) = 0.9 - 0.05 sin(5θ).
    pub fn sine5(n: usize) -> Self {
        Self::from_fn(n, |t| 0.9 - 0.05 * (5.0 * t).sin(), |t| -0.25 * (5.0 * t).cos())
    }

    /// Builtin satisfying the strict hypotheses ‖w₀‖∞ <= 1, w₀ >= ν₀ > 0,
    /// with minimum slope -1/ε attained at the single point θ = 0:
    /// a localized dip w₀ = c₀ - (1/ε) sin(θ) exp(β(cos θ - 1)) with
    /// β = 3/ε² so the amplitude stays near 0.35.
    pub fn strict_localized(n: usize, epsilon: f64) -> Self {
        let beta = 3.0 / (epsilon * epsilon);
        let c0 = 0.62;
        let amp = 1.0 / epsilon;
        Self::from_fn(
            n,
            move |t: f64| c0 - amp * t.sin() * (beta * (t.cos() - 1.0)).exp(),
            move |t: f64| {
                let e = (beta * (t.cos() - 1.0)).exp();
                -amp * e * (t.cos() - beta * t.sin() * t.sin())
            },
        )
    }

    pub fn value(&self, theta: f64) -> f64 {
        match &self.eval {
            DatumEval::Analytic { value, .. } => value(theta),
            DatumEval::Interpolated { value, .. } => value.eval(theta),
        }
    }

    pub fn slope(&self, theta: f64) -> f64 {
        match &self.eval {
            DatumEval::Analytic { slope, .. } => slope(theta),
            DatumEval::Interpolated { slope, .. } => slope.eval(theta),
        }
    }

    /// Strict Theorem-mode admissibility: positive with sup norm at most one
    /// and a grid-resolved unique minimum of the slope.
    pub fn is_strict_admissible(&self) -> bool {
        self.nu0 > 0.0 && self.amplitude <= 1.0
    }
}

/// Blowup prediction from the datum alone.
#[derive(Debug, Clone, Copy)]
pub struct BlowupPrediction {
    /// Blowup time T* = -1 / min ∂θ w₀.
    pub t_star: f64,
    /// Blowup angle θ* = θ₀ + T* w₀(θ₀), wrapped to [-π, π).
    pub theta_star: f64,
    /// Location of the slope minimum.
    pub theta0: f64,
    /// Minimum slope (negative).
    pub min_slope: f64,
}

/// Predict blowup time and location. The datum slope is taken from the
/// 6th-order stencil on the samples with parabolic sub-grid refinement; ties
/// resolve toward the smallest |θ₀|.
pub fn blowup_predict(datum: &BurgersDatum) -> Result<BlowupPrediction> {
    let slopes = datum.grid.deriv6(&datum.w0);
    let (theta0, min_slope) = datum.grid.refine_argmin(&slopes, 1e-12);
    // Slopes below stencil round-off are no blowup, not a 1e17 blowup time.
    if min_slope >= -1e-12 * (1.0 + datum.amplitude) {
        return Err(Error::NoBlowup);
    }
    let t_star = -1.0 / min_slope;
    let theta_star = wrap_angle(theta0 + t_star * datum.value(theta0));
    Ok(BlowupPrediction { t_star, theta_star, theta0, min_slope })
}

/// Evolve the datum to time t < T* by inverting the characteristic map
/// ψ(θ, t) = θ + t w₀(θ) on the uniform grid. Inversion is bisection on the
/// monotone map refined by Newton to 1e-13 in θ.
pub fn burgers_evolve(datum: &BurgersDatum, t: f64) -> Result<Vec<f64>> {
    let pred = blowup_predict(datum)?;
    if t >= pred.t_star {
        return Err(Error::PastBlowup { t, t_star: pred.t_star });
    }
    if t == 0.0 {
        return Ok(datum.w0.clone());
    }
    let w_min = datum.nu0.min(datum.w0.iter().cloned().fold(f64::INFINITY, f64::min));
    let w_max = datum.w0.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut out = vec![0.0; datum.grid.n];
    for (j, &target) in datum.grid.thetas.iter().enumerate() {
        out[j] = datum.value(invert_characteristic(datum, t, target, w_min, w_max));
    }
    Ok(out)
}

fn invert_characteristic(datum: &BurgersDatum, t: f64, target: f64, w_min: f64, w_max: f64) -> f64 {
    // ψ(θ) = θ + t w₀(θ) = target  =>  θ ∈ [target - t w_max, target - t w_min].
    let psi = |theta: f64| theta + t * datum.value(theta) - target;
    let mut lo = target - t * w_max - 1e-12;
    let mut hi = target - t * w_min + 1e-12;
    for _ in 0..90 {
        let mid = 0.5 * (lo + hi);
        if psi(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < 1e-10 {
            break;
        }
    }
    let mut theta = 0.5 * (lo + hi);
    for _ in 0..4 {
        let deriv = 1.0 + t * datum.slope(theta);
        if deriv.abs() < 1e-14 {
            break;
        }
        let step = psi(theta) / deriv;
        theta -= step;
        if step.abs() < 1e-14 {
            break;
        }
    }
    theta
}

/// Exact slope of the evolved solution along the characteristic from θ.
pub fn evolved_slope(datum: &BurgersDatum, theta: f64, t: f64) -> f64 {
    let s0 = datum.slope(theta);
    s0 / (1.0 + t * s0)
}

/// Side of the shock for continued-solution output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Smooth pre-blowup value.
    Pre,
    /// Left of the shock (θ <= θ*).
    Left,
    /// Right of the shock.
    Right,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Pre => "pre",
            Branch::Left => "left",
            Branch::Right => "right",
        }
    }
}

/// Entropy solution of the canonical cusp at time t > T*:
/// w(θ, t) = [θ - (t - T*)^{3/2} Y³(q)] / (t - T*) with q = θ (t - T*)^{-3/2}
/// and Y the branch-selected root of Y³ - Y = q. The identity
/// q - Y³ = -Y turns this into w = -(t - T*)^{1/2} Y(q), which is the form
/// evaluated (no cancellation at large q).
pub fn entropy_cusp_solution(theta: f64, t: f64, t_star: f64) -> Result<(f64, Branch)> {
    if t <= t_star {
        return Err(Error::BeforeBlowup { t, t_star });
    }
    let tau = t - t_star;
    let q = theta / tau.powf(1.5);
    let y = cubic_branch_root(q);
    let w = -tau.sqrt() * y;
    let branch = if theta <= 0.0 { Branch::Left } else { Branch::Right };
    Ok((w, branch))
}

/// One-sided traces of the continued cusp at time t > T*.
pub fn cusp_traces(t: f64, t_star: f64) -> Result<(f64, f64)> {
    let left = entropy_cusp_solution(0.0, t, t_star)?.0;
    let right = entropy_cusp_solution(f64::MIN_POSITIVE, t, t_star)?.0;
    Ok((left, right))
}

/// Shock state for the Rankine–Hugoniot verification.
#[derive(Debug, Clone, Copy)]
pub struct ShockState {
    pub t: f64,
    pub theta_star: f64,
    pub w_minus: f64,
    pub w_plus: f64,
    /// Measured shock velocity dθ*/dt.
    pub speed: f64,
}

/// Rankine–Hugoniot report for the γ = 3 azimuthal shock with
/// ρ = u_θ = r w / 2 and u_r = 0.
#[derive(Debug, Clone, Copy)]
pub struct RhReport {
    /// |dθ*/dt - ⟦ρ u_θ⟧ / ⟦ρ⟧| = |speed - (w⁻ + w⁺)/2|.
    pub residual: f64,
    /// ⟦ρ⟧ > 0 across the shock.
    pub density_jump_positive: bool,
    /// ⟦u_θ⟧ > 0 across the shock.
    pub utheta_jump_positive: bool,
    /// ⟦u_r⟧ = 0 (identically, u_r ≡ 0).
    pub ur_jump_zero: bool,
    /// w⁻ <= w⁺ violates the entropy condition.
    pub entropy_violation: bool,
}

/// Verify the jump relations. For γ = 3 the flux ratio ⟦ρ u_θ⟧/⟦ρ⟧ collapses
/// to the arithmetic mean of the traces:
/// ⟦ρ u_θ⟧/⟦ρ⟧ = (r/2)(w⁻² - w⁺²) / (w⁻ - w⁺) / r · ... = (w⁻ + w⁺)/2,
/// independent of r and of the scaling α = 1.
pub fn rankine_hugoniot_check(state: &ShockState) -> RhReport {
    let mean = 0.5 * (state.w_minus + state.w_plus);
    RhReport {
        residual: (state.speed - mean).abs(),
        density_jump_positive: state.w_minus > state.w_plus,
        utheta_jump_positive: state.w_minus > state.w_plus,
        ur_jump_zero: true,
        entropy_violation: state.w_minus <= state.w_plus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn predict_sine5() {
        let datum = BurgersDatum::sine5(1024);
        let p = blowup_predict(&datum).unwrap();
        assert!((p.t_star - 4.0).abs() < 1e-7, "t_star {}", p.t_star);
        assert!(p.theta0.abs() < 1e-9, "theta0 {}", p.theta0);
        let expect = 3.6 - 2.0 * PI;
        assert!((p.theta_star - expect).abs() < 1e-7, "theta_star {}", p.theta_star);
    }

    #[test]
    fn predict_sine5_against_crossing_search() {
        // Independent oracle: first non-injectivity of ψ(θ, t) over a dense
        // grid of times and angles.
        let datum = BurgersDatum::sine5(1024);
        let pred = blowup_predict(&datum).unwrap();
        let crossing_time = |t: f64| -> bool {
            // injective iff ψ' = 1 + t w₀' > 0 everywhere
            datum.grid.thetas.iter().any(|&th| 1.0 + t * datum.slope(th) <= 0.0)
        };
        assert!(!crossing_time(pred.t_star * 0.999));
        assert!(crossing_time(pred.t_star * 1.001));
    }

    #[test]
    fn predict_rejects_constant() {
        let datum = BurgersDatum::from_fn(64, |_| 0.7, |_| 0.0);
        assert!(matches!(blowup_predict(&datum), Err(Error::NoBlowup)));
    }

    #[test]
    fn evolve_identity_and_constant() {
        let datum = BurgersDatum::sine5(256);
        let w = burgers_evolve(&datum, 0.0).unwrap();
        assert_eq!(w, datum.w0);

        let c = BurgersDatum::from_fn(64, |_| 0.42, |_| 0.0);
        // Constant datum never blows up; evolve must reject via NoBlowup.
        assert!(matches!(burgers_evolve(&c, 1.0), Err(Error::NoBlowup)));
        // But the translation property is still exact through inversion:
        // handled by the physical solver tests instead.
    }

    #[test]
    fn evolve_rejects_past_blowup() {
        let datum = BurgersDatum::sine5(256);
        assert!(matches!(burgers_evolve(&datum, 4.01), Err(Error::PastBlowup { .. })));
    }

    #[test]
    fn evolve_matches_characteristics_pointwise() {
        let datum = BurgersDatum::sine5(2048);
        let t = 2.0;
        let w = burgers_evolve(&datum, t).unwrap();
        // Forward check: for each launch angle θ, w(ψ(θ,t), t) = w₀(θ).
        let interp = PeriodicHermite::new(&w, datum.grid.h, -PI, SlopeMode::Stencil6);
        let mut worst: f64 = 0.0;
        for &th in datum.grid.thetas.iter() {
            let arrival = th + t * datum.value(th);
            worst = worst.max((interp.eval(arrival) - datum.value(th)).abs());
        }
        assert!(worst < 1e-8, "{worst}");
    }

    #[test]
    fn evolve_slope_amplification() {
        let datum = BurgersDatum::sine5(2048);
        let pred = blowup_predict(&datum).unwrap();
        let t = 3.0; // (1/ε)/(1 - t/ε) with ε = 4: 0.25/(1 - 0.75) = 1.0
        let w = burgers_evolve(&datum, t).unwrap();
        let slopes = datum.grid.deriv6(&w);
        let max_slope = slopes.iter().fold(0.0f64, |m, s| m.max(-s));
        let expect = (-1.0 / pred.t_star) / (1.0 + t * (-1.0 / pred.t_star));
        assert!((max_slope - expect.abs()).abs() < 1e-3 * expect.abs(), "{max_slope} vs {expect}");
    }

    #[test]
    fn maximum_principle() {
        let datum = BurgersDatum::sine5(1024);
        for t in [1.0, 2.5, 3.9] {
            let w = burgers_evolve(&datum, t).unwrap();
            let (min, max) = w.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
                (a.min(v), b.max(v))
            });
            assert!(min >= datum.nu0 - 1e-9);
            assert!(max <= datum.amplitude + 1e-9);
        }
    }

    #[test]
    fn strict_localized_admissible() {
        let datum = BurgersDatum::strict_localized(4096, 0.25);
        assert!(datum.is_strict_admissible(), "nu0 {} amp {}", datum.nu0, datum.amplitude);
        let p = blowup_predict(&datum).unwrap();
        assert!((p.t_star - 0.25).abs() < 1e-6 * 0.25, "{}", p.t_star);
        assert!(p.theta0.abs() < 1e-8);
        // Slope minimum is unique: the second-smallest local minimum must be
        // clearly above the global one.
        let slopes = datum.grid.deriv6(&datum.w0);
        let min = slopes.iter().cloned().fold(f64::INFINITY, f64::min);
        let n = slopes.len();
        let local_minima = (0..n)
            .filter(|&i| {
                slopes[i] < 0.5 * min
                    && slopes[i] <= slopes[(i + 1) % n]
                    && slopes[i] <= slopes[(i + n - 1) % n]
            })
            .count();
        assert_eq!(local_minima, 1, "slope minimum not unique");
    }

    #[test]
    fn cusp_traces_match_closed_form() {
        let t_star = 0.0;
        for t in [1e-6, 1e-3, 0.1, 2.0] {
            let (left, right) = cusp_traces(t, t_star).unwrap();
            assert!((left - t.sqrt()).abs() < 1e-12 * (1.0 + t.sqrt()));
            assert!((right + t.sqrt()).abs() < 1e-12 * (1.0 + t.sqrt()));
        }
    }

    #[test]
    fn cusp_rejects_pre_blowup_times() {
        assert!(entropy_cusp_solution(0.1, -0.5, 0.0).is_err());
        assert!(entropy_cusp_solution(0.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn cusp_odd_symmetry() {
        for t in [0.01, 0.5, 3.0] {
            for th in [1e-8, 1e-3, 0.3, 2.0] {
                let (wp, _) = entropy_cusp_solution(th, t, 0.0).unwrap();
                let (wm, _) = entropy_cusp_solution(-th, t, 0.0).unwrap();
                assert!((wp + wm).abs() < 1e-12 * (1.0 + wp.abs()), "θ = {th}, t = {t}");
            }
        }
    }

    /// Lax–Oleinik minimization oracle for the decreasing cusp datum
    /// g(y) = -y^{1/3} (the orientation the branch rules select): the entropy
    /// solution is w(θ,t) = (θ - y*)/t with
    /// y* = argmin_y [ G(y) + (θ - y)²/(2t) ], G(y) = -(3/4) y^{4/3}.
    fn lax_oleinik_oracle(theta: f64, t: f64) -> f64 {
        let g_big = |y: f64| -0.75 * y.abs().powf(4.0 / 3.0);
        let objective = |y: f64| g_big(y) + (theta - y) * (theta - y) / (2.0 * t);
        let span = 10.0 * (theta.abs() + t.powf(1.5) + 1.0);
        let mut best_y = 0.0;
        let mut best = f64::INFINITY;
        let n = 400_001;
        for i in 0..n {
            let y = -span + 2.0 * span * i as f64 / (n - 1) as f64;
            let v = objective(y);
            if v < best {
                best = v;
                best_y = y;
            }
        }
        // Golden-section refinement around the discrete minimizer.
        let (mut lo, mut hi) = (best_y - 2.0 * span / (n - 1) as f64, best_y + 2.0 * span / (n - 1) as f64);
        for _ in 0..200 {
            let m1 = lo + 0.382 * (hi - lo);
            let m2 = lo + 0.618 * (hi - lo);
            if objective(m1) < objective(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        let y = 0.5 * (lo + hi);
        (theta - y) / t
    }

    #[test]
    fn cusp_matches_lax_oleinik_oracle() {
        let t = 0.37;
        for th in [-2.0, -0.5, -0.05, 0.05, 0.8, 3.0] {
            let (w, _) = entropy_cusp_solution(th, t, 0.0).unwrap();
            let oracle = lax_oleinik_oracle(th, t);
            assert!((w - oracle).abs() < 2e-4, "θ = {th}: {w} vs {oracle}");
        }
    }

    #[test]
    fn cusp_far_field_tends_to_datum() {
        // Far from the shock the solution approaches the (decreasing) cusp
        // datum -θ^{1/3} that the branch rules encode.
        let t = 1e-4;
        for th in [0.5, 1.0, 4.0] {
            let (w, _) = entropy_cusp_solution(th, t, 0.0).unwrap();
            let datum = -th.powf(1.0 / 3.0);
            assert!((w - datum).abs() < 5e-4 * datum.abs() + 1e-4, "θ = {th}: {w} vs {datum}");
            let (wm, _) = entropy_cusp_solution(-th, t, 0.0).unwrap();
            assert!((wm + datum).abs() < 5e-4 * datum.abs() + 1e-4);
        }
    }

    #[test]
    fn rh_mean_speed() {
        let report = rankine_hugoniot_check(&ShockState {
            t: 1.0,
            theta_star: 0.0,
            w_minus: 1.0,
            w_plus: 0.0,
            speed: 0.5,
        });
        assert_eq!(report.residual, 0.0);
        assert!(report.density_jump_positive && report.utheta_jump_positive);
        assert!(!report.entropy_violation);
    }

    #[test]
    fn rh_stationary_cusp() {
        let t = 0.2;
        let (left, right) = cusp_traces(t, 0.0).unwrap();
        let report = rankine_hugoniot_check(&ShockState {
            t,
            theta_star: 0.0,
            w_minus: left,
            w_plus: right,
            speed: 0.0,
        });
        assert!(report.residual < 1e-12);
        assert!(!report.entropy_violation);
    }

    #[test]
    fn rh_entropy_violation_flag() {
        let report = rankine_hugoniot_check(&ShockState {
            t: 1.0,
            theta_star: 0.0,
            w_minus: 0.3,
            w_plus: 0.7,
            speed: 0.5,
        });
        assert!(report.entropy_violation);
    }
}
