//! Branch-selected real roots of Y³ - Y = q.
//!
//! The entropy continuation of the cusp solution needs a specific root of
//! this depressed cubic for each q:
//!
//! * |q| > 2/(3√3): the unique real root,
//! * q in [-2/(3√3), 0]: the smallest (most negative) root, with Y(0) = -1,
//! * q in (0, 2/(3√3)]: the largest root, with Y(0⁺) = +1.
//!
//! Solved by Cardano, with the trigonometric form in the three-root regime,
//! then polished by one Newton step. The discriminant boundary 2/(3√3) is
//! evaluated exactly and compared with a half-ulp guard band so branch
//! dispatch cannot misclassify points sitting on the boundary.

/// 2/(3√3), the |q| threshold between the one-root and three-root regimes.
pub fn discriminant_boundary() -> f64 {
    2.0 / (3.0 * 3.0f64.sqrt())
}

fn newton_polish(y: f64, q: f64) -> f64 {
    let f = y * y * y - y - q;
    let fp = 3.0 * y * y - 1.0;
    if fp.abs() < 1e-300 {
        return y;
    }
    y - f / fp
}

/// The branch-selected real root of Y³ - Y = q.
pub fn cubic_branch_root(q: f64) -> f64 {
    let qc = discriminant_boundary();
    // Half-ulp guard band: points within one ulp of the boundary are treated
    // as inside the three-root regime, where the trigonometric form is exact
    // at |q| = qc (acos of ±1).
    let guard = qc * (1.0 + f64::EPSILON);
    let y = if q.abs() > guard {
        // Unique real root; Cardano on y³ + p y + r with p = -1, r = -q.
        // disc = q²/4 - 1/27 > 0 here.
        let disc = 0.25 * q * q - 1.0 / 27.0;
        let sq = disc.sqrt();
        // Avoid cancellation: pick the cube root with the same sign as q/2.
        let u = (0.5 * q + sq.copysign(q)).cbrt();
        let v = 1.0 / (3.0 * u);
        u + v
    } else {
        // Three real roots: y_k = (2/√3) cos(φ/3 - 2πk/3), φ = acos(q (3√3)/2).
        let arg = (q / qc).clamp(-1.0, 1.0);
        let phi = arg.acos();
        let scale = 2.0 / 3.0f64.sqrt();
        if q > 0.0 {
            // Largest root: k = 0.
            scale * (phi / 3.0).cos()
        } else {
            // Smallest root: k = 2.
            scale * (phi / 3.0 - 4.0 * std::f64::consts::PI / 3.0).cos()
        }
    };
    newton_polish(y, q)
}
