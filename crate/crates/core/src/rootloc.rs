//! Where the roots of the family polynomials lie.
//!
//! On the unit circle `P(e^{iθ}) = e^{inθ} Q(θ)` with the real kernel
//!
//! ```text
//! Q(θ) = 2cos(nθ) - 2cos((n-1)θ) + (-1)^t + 2 Σ_{k=1}^{t} (-1)^{t-k} cos(2kθ)
//! ```
//!
//! so unit-circle roots of `P` are the real zeros of `Q` in `[0, 2π)`. This
//! module samples `Q` and its derivatives to check the root-exclusion zone
//! near `θ = 0`, the interval-by-interval sign certificate for `-Q'/2` and
//! `-Q''/2`, and counts zeros. Everything here is floating point and
//! advisory; [`crate::cyclotomic`] is the exact authority.
//!
//! [`complex_roots`] finds all roots of an integer polynomial with Aberth's
//! iteration, used for the root-modulus band of `S(n, 0)`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::poly::IntPoly;

/// Samples closer to zero than this count as roots.
pub const ZERO_WINDOW: f64 = 1e-9;
/// Bisection stops once the bracket is this narrow.
pub const BISECTION_WIDTH: f64 = 1e-12;
/// Grid points per unit of `n` used by the root counter.
pub const SAMPLES_PER_N: u64 = 64;
/// Grid points per interval in the certificate.
pub const CERTIFICATE_GRID: usize = 64;
/// Slack on the modulus band.
pub const BAND_EPSILON: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QKernel {
    n: u64,
    t: u64,
}

impl From<FamilyParams> for QKernel {
    fn from(p: FamilyParams) -> Self {
        QKernel { n: p.n(), t: p.t() }
    }
}

fn sign_of_parity(k: u64) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl QKernel {
    pub fn new(n: u64, t: u64) -> Result<Self> {
        FamilyParams::new(n, t).map(QKernel::from)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `Q(θ)` in the division-free form, finite everywhere.
    pub fn q(&self, theta: f64) -> f64 {
        let n = self.n as f64;
        let t = self.t;
        let mut v = 2.0 * (n * theta).cos() - 2.0 * ((n - 1.0) * theta).cos() + sign_of_parity(t);
        for k in 1..=t {
            v += 2.0 * sign_of_parity(t - k) * (2.0 * k as f64 * theta).cos();
        }
        v
    }

    /// `-Q'(θ)/2 = n sin nθ - (n-1) sin (n-1)θ + 2 Σ_{k=1}^t (-1)^{k+t} k sin 2kθ`.
    pub fn neg_half_q_prime(&self, theta: f64) -> f64 {
        let n = self.n as f64;
        let t = self.t;
        let mut v = n * (n * theta).sin() - (n - 1.0) * ((n - 1.0) * theta).sin();
        for k in 1..=t {
            let kf = k as f64;
            v += 2.0 * sign_of_parity(k + t) * kf * (2.0 * kf * theta).sin();
        }
        v
    }

    /// `-Q''(θ)/2 = n² cos nθ - (n-1)² cos (n-1)θ + 4 Σ_{k=1}^t (-1)^{k+t} k² cos 2kθ`.
    pub fn neg_half_q_second(&self, theta: f64) -> f64 {
        let n = self.n as f64;
        let t = self.t;
        let mut v = n * n * (n * theta).cos() - (n - 1.0) * (n - 1.0) * ((n - 1.0) * theta).cos();
        for k in 1..=t {
            let kf = k as f64;
            v += 4.0 * sign_of_parity(k + t) * kf * kf * (2.0 * kf * theta).cos();
        }
        v
    }

    /// Lower-order part of `-Q'/2` after splitting off
    /// `2n sin(θ/2) cos((2n-1)θ/2)`: `sin (n-1)θ + 2 Σ (-1)^{k+t} k sin 2kθ`.
    pub fn r_term(&self, theta: f64) -> f64 {
        let n = self.n as f64;
        let t = self.t;
        let mut v = ((n - 1.0) * theta).sin();
        for k in 1..=t {
            let kf = k as f64;
            v += 2.0 * sign_of_parity(k + t) * kf * (2.0 * kf * theta).sin();
        }
        v
    }

    /// Lower-order part of `-Q''/2` after splitting off
    /// `-2n² sin(θ/2) sin((2n-1)θ/2)`: `(2n-1) cos (n-1)θ + 4 Σ (-1)^{k+t} k² cos 2kθ`.
    pub fn t_term(&self, theta: f64) -> f64 {
        let n = self.n as f64;
        let t = self.t;
        let mut v = (2.0 * n - 1.0) * ((n - 1.0) * theta).cos();
        for k in 1..=t {
            let kf = k as f64;
            v += 4.0 * sign_of_parity(k + t) * kf * kf * (2.0 * kf * theta).cos();
        }
        v
    }

    /// Half-width `1/(2t+4)` of the root-free zone around `θ = 0`.
    pub fn exclusion_radius(&self) -> f64 {
        1.0 / (2.0 * self.t as f64 + 4.0)
    }

    /// Samples `Q` densely on `[0, 1/(2t+4)]` and `[2π - 1/(2t+4), 2π)`;
    /// true iff it keeps a constant sign and never comes within
    /// [`ZERO_WINDOW`] of zero there.
    pub fn exclusion_check(&self) -> bool {
        let samples = 1000usize.max(20 * self.n as usize);
        let r = self.exclusion_radius();
        let left = (0..=samples).map(|k| r * k as f64 / samples as f64);
        // Q is even about 0 (and about π), but sample the right end directly.
        let right = (0..samples).map(|k| TAU - r + r * k as f64 / samples as f64);
        let mut sign = 0.0;
        for theta in left.chain(right) {
            let v = self.q(theta);
            if v.abs() <= ZERO_WINDOW {
                return false;
            }
            if sign == 0.0 {
                sign = v.signum();
            } else if v.signum() != sign {
                return false;
            }
        }
        true
    }

    /// Integer range `[i_min, i_max]` of the certificate intervals:
    /// positive integers in `[(2n-1)/(4π(t+2)) - 1, (2n-1)(1 - 1/(4π(t+2)))]`.
    pub fn index_range(&self) -> (u64, u64) {
        let m = 2.0 * self.n as f64 - 1.0;
        let c = 1.0 / (4.0 * PI * (self.t as f64 + 2.0));
        let lo = (m * c - 1.0).ceil().max(1.0) as u64;
        let hi = (m * (1.0 - c)).floor() as u64;
        (lo, hi)
    }

    /// Endpoint `(4i + offset) π / (4n - 2)`.
    fn grid_point(&self, i: u64, offset: i64) -> f64 {
        (4 * i as i64 + offset) as f64 * PI / (4.0 * self.n as f64 - 2.0)
    }

    /// `I_i`, `J_i`, `K_i` in that order.
    pub fn intervals(&self, i: u64) -> [(f64, f64); 3] {
        [
            (self.grid_point(i, -1), self.grid_point(i, 1)),
            (self.grid_point(i, 1), self.grid_point(i, 3)),
            (self.grid_point(i, 3), self.grid_point(i, 5)),
        ]
    }

    /// Sampled check of the interval certificate bounding the number of
    /// zeros of `Q` away from the exclusion zone:
    ///
    /// * (a) on `I_i`, `-Q'/2` has the sign of `(-1)^i`,
    /// * (b) on `J_i`, `-Q''/2` has constant sign and stays clear of zero,
    /// * (c) on `K_i`, `-Q'/2` has the sign of `-(-1)^i`.
    ///
    /// Requires `n >= max(16(t+1)^3, 40(t+2))`.
    pub fn certificate_check(&self) -> Result<CertificateReport> {
        let threshold = FamilyParams::new(self.n, self.t)?.certificate_threshold();
        if self.n < threshold {
            return Err(Error::BelowThreshold {
                n: self.n,
                threshold,
            });
        }
        let (i_min, i_max) = self.index_range();
        let grid = |(a, b): (f64, f64)| {
            (0..CERTIFICATE_GRID).map(move |k| a + (b - a) * k as f64 / (CERTIFICATE_GRID - 1) as f64)
        };
        let mut flags = Vec::with_capacity((i_max - i_min + 1) as usize);
        let mut r_max: f64 = 0.0;
        let mut t_max: f64 = 0.0;
        for i in i_min..=i_max {
            let [ii, jj, kk] = self.intervals(i);
            let parity = sign_of_parity(i);
            let a_holds = grid(ii).all(|th| {
                r_max = r_max.max(self.r_term(th).abs());
                self.neg_half_q_prime(th) * parity > 0.0
            });
            let c_holds = grid(kk).all(|th| {
                r_max = r_max.max(self.r_term(th).abs());
                self.neg_half_q_prime(th) * parity < 0.0
            });
            let mut sign = 0.0;
            let b_holds = grid(jj).all(|th| {
                t_max = t_max.max(self.t_term(th).abs());
                let v = self.neg_half_q_second(th);
                if v.abs() <= ZERO_WINDOW {
                    return false;
                }
                if sign == 0.0 {
                    sign = v.signum();
                }
                v.signum() == sign
            });
            flags.push(IntervalFlags {
                i,
                a_holds,
                b_holds,
                c_holds,
            });
        }
        let r = self.exclusion_radius();
        let covers = self.grid_point(i_min, -1) <= r && self.grid_point(i_max, 5) >= TAU - r;
        let count = self.count_unit_circle_roots();
        let n = self.n as f64;
        let r_bound = ((self.t + 1) * (self.t + 1)) as f64;
        Ok(CertificateReport {
            n: self.n,
            t: self.t,
            i_min,
            i_max,
            all_flags_hold: flags.iter().all(IntervalFlags::holds),
            flags,
            covers_complement: covers,
            exclusion_ok: self.exclusion_check(),
            root_count: count.total,
            r_bound,
            t_bound: 4.0 * n,
            r_observed: r_max,
            t_observed: t_max,
        })
    }

    /// Counts the zeros of `Q` on `[0, 2π)` with [`count_periodic_zeros`]
    /// on a grid of `64n` points.
    pub fn count_unit_circle_roots(&self) -> RootCount {
        count_periodic_zeros(|th| self.q(th), (SAMPLES_PER_N * self.n) as usize)
    }

    /// `samples` evenly spaced `(θ, Q(θ))` pairs over `[0, 2π)`.
    pub fn sample(&self, samples: usize) -> Vec<(f64, f64)> {
        (0..samples)
            .map(|k| {
                let th = TAU * k as f64 / samples as f64;
                (th, self.q(th))
            })
            .collect()
    }
}

/// Counts zeros of a `2π`-periodic function on `[0, 2π)`.
///
/// Sign changes between consecutive grid points give the odd-multiplicity
/// zeros, each refined by bisection to [`BISECTION_WIDTH`]. A local minimum
/// of `|f|` that dips below [`ZERO_WINDOW`] without a sign change is reported
/// as a suspected double zero and counted twice. Multiplicity is not
/// certified.
pub fn count_periodic_zeros(f: impl Fn(f64) -> f64, samples: usize) -> RootCount {
    let step = TAU / samples as f64;
    let theta = |k: usize| step * k as f64;
    let values: Vec<f64> = (0..samples).map(|k| f(theta(k))).collect();
    let at = |k: usize| values[k % samples];

    let mut simple = Vec::new();
    let mut double = Vec::new();
    for k in 0..samples {
        let (v0, v1) = (at(k), at(k + 1));
        if v0 == 0.0 {
            let prev = at(k + samples - 1);
            if prev * v1 < 0.0 {
                simple.push(theta(k));
            } else {
                double.push(theta(k));
            }
        } else if v0 * v1 < 0.0 {
            simple.push(bisect(&f, theta(k), theta(k + 1)) % TAU);
        } else if v1 != 0.0 {
            let v2 = at(k + 2);
            if v1.abs() <= v0.abs() && v1.abs() <= v2.abs() && v1 * v2 > 0.0 {
                let (th, min) = minimize_abs(&f, theta(k), theta(k + 2));
                if min <= ZERO_WINDOW {
                    double.push(th % TAU);
                }
            }
        }
    }
    simple.sort_by(f64::total_cmp);
    double.sort_by(f64::total_cmp);
    RootCount {
        total: simple.len() as u64 + 2 * double.len() as u64,
        simple_roots: simple,
        suspected_double_roots: double,
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    while b - a > BISECTION_WIDTH {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Golden-section search for the minimum of `|f|` on `[a, b]`.
fn minimize_abs(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let h = |x: f64| f(x).abs();
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (h(c), h(d));
    while b - a > BISECTION_WIDTH {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = h(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = h(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, h(x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootCount {
    /// Zeros counted with the heuristic multiplicity.
    pub total: u64,
    pub simple_roots: Vec<f64>,
    pub suspected_double_roots: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalFlags {
    pub i: u64,
    pub a_holds: bool,
    pub b_holds: bool,
    pub c_holds: bool,
}

impl IntervalFlags {
    pub fn holds(&self) -> bool {
        self.a_holds && self.b_holds && self.c_holds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub n: u64,
    pub t: u64,
    pub i_min: u64,
    pub i_max: u64,
    pub all_flags_hold: bool,
    pub flags: Vec<IntervalFlags>,
    /// The intervals reach into both exclusion zones.
    pub covers_complement: bool,
    pub exclusion_ok: bool,
    pub root_count: u64,
    /// Proven bound `(t+1)^2` on the lower-order part of `-Q'/2`.
    pub r_bound: f64,
    /// Proven bound `4n` on the lower-order part of `-Q''/2`.
    pub t_bound: f64,
    /// Largest sampled magnitudes of those parts.
    pub r_observed: f64,
    pub t_observed: f64,
}

impl CertificateReport {
    pub fn passes(&self) -> bool {
        self.all_flags_hold
            && self.covers_complement
            && self.exclusion_ok
            && self.r_observed <= self.r_bound
            && self.t_observed <= self.t_bound
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootsReport {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
    /// Largest last Aberth correction.
    pub max_update: f64,
    /// Largest `|p(z)| / (1 + |z|)^deg` over the roots.
    pub max_scaled_residual: f64,
    /// `Σ |rebuilt - original|` over coefficients, rebuilding from the roots.
    pub reconstruction_error: f64,
}

const MAX_ABERTH_ITERATIONS: usize = 1000;
const RESIDUAL_LIMIT: f64 = 1e-10;

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All `deg p` complex roots of `p` by Aberth–Ehrlich simultaneous iteration.
///
/// Converged once every correction is below `tol` and every scaled residual
/// `|p(z)| / (1 + |z|)^deg` is below `1e-10`.
pub fn complex_roots(p: &IntPoly, tol: f64) -> Result<RootsReport> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let raw = p.to_f64_vec();
    let lead = raw[deg];
    let coeffs: Vec<f64> = raw.iter().map(|c| c / lead).collect();

    let radius = if coeffs[0] == 0.0 {
        1.0
    } else {
        coeffs[0].abs().powf(1.0 / deg as f64)
    };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / deg as f64 + 0.4))
        .collect();

    let scaled_residual = |z: Complex64| {
        let (v, _) = horner_with_derivative(&coeffs, z);
        v.norm() / (1.0 + z.norm()).powi(deg as i32)
    };

    for iteration in 1..=MAX_ABERTH_ITERATIONS {
        let mut max_update: f64 = 0.0;
        for i in 0..deg {
            let (v, dv) = horner_with_derivative(&coeffs, z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let update = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !update.is_finite() {
                continue;
            }
            z[i] -= update;
            max_update = max_update.max(update.norm());
        }
        if z.iter().any(|r| !r.is_finite()) {
            return Err(Error::NoConvergence { iterations: iteration });
        }
        if max_update < tol {
            let max_scaled_residual = z.iter().map(|&r| scaled_residual(r)).fold(0.0, f64::max);
            if max_scaled_residual < RESIDUAL_LIMIT {
                let reconstruction_error = reconstruction_error(&z, &raw);
                return Ok(RootsReport {
                    roots: z,
                    iterations: iteration,
                    max_update,
                    max_scaled_residual,
                    reconstruction_error,
                });
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_ABERTH_ITERATIONS,
    })
}

fn reconstruction_error(roots: &[Complex64], original: &[f64]) -> f64 {
    let lead = *original.last().expect("nonconstant");
    let mut prod = vec![Complex64::new(lead, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
        for (k, &c) in prod.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        prod = next;
    }
    prod.iter()
        .zip(original)
        .map(|(a, &b)| (a - b).norm())
        .sum()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandReport {
    pub n: u64,
    /// `(ln n)^2 / n`.
    pub half_width: f64,
    pub lower: f64,
    pub upper: f64,
    /// Largest amount by which a root modulus leaves `[lower, upper]`.
    pub max_band_violation: f64,
    /// Largest `||z| - 1|` over the roots.
    pub max_distance_from_circle: f64,
    /// Some root has `||z| - 1| > 1e-6`.
    pub off_circle_witness: bool,
    pub pass: bool,
}

/// Checks that every root of `x^{2n} - x^{2n-1} + x^n - x + 1` has modulus
/// within `(ln n)^2 / n` of 1, up to [`BAND_EPSILON`]. Requires `n >= 12`.
pub fn modulus_band_check(n: u64) -> Result<BandReport> {
    if n < 12 {
        return Err(Error::BelowThreshold { n, threshold: 12 });
    }
    let p = FamilyParams::new(n, 0)?.closed_form_polynomial();
    let roots = complex_roots(&p, 1e-14)?;
    let ln = (n as f64).ln();
    let half_width = ln * ln / n as f64;
    let (lower, upper) = (1.0 - half_width, 1.0 + half_width);
    let mut violation: f64 = 0.0;
    let mut distance: f64 = 0.0;
    for r in &roots.roots {
        let m = r.norm();
        violation = violation.max(lower - m).max(m - upper);
        distance = distance.max((m - 1.0).abs());
    }
    let violation = violation.max(0.0);
    Ok(BandReport {
        n,
        half_width,
        lower,
        upper,
        max_band_violation: violation,
        max_distance_from_circle: distance,
        off_circle_witness: distance > 1e-6,
        pass: violation <= BAND_EPSILON,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::cyclotomic_test;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k(n: u64, t: u64) -> QKernel {
        QKernel::new(n, t).unwrap()
    }

    // The kernel in its original ratio form, away from cos θ = 0.
    fn q_ratio(n: u64, t: u64, th: f64) -> f64 {
        let n = n as f64;
        2.0 * (n * th).cos() - 2.0 * ((n - 1.0) * th).cos()
            + ((2 * t + 1) as f64 * th).cos() / th.cos()
    }

    #[test]
    fn q_examples() {
        let q = k(5, 0);
        assert!((q.q(0.0) - 1.0).abs() < 1e-15);
        assert!((q.q(PI) + 3.0).abs() < 1e-12);
        assert!((q.q(PI / 2.0) + 1.0).abs() < 1e-12);
        assert!(q.neg_half_q_prime(0.0).abs() < 1e-15);
        assert!(q.neg_half_q_prime(PI).abs() < 1e-12);
        assert!((q.neg_half_q_second(0.0) - 9.0).abs() < 1e-12);
    }

    #[test]
    fn division_free_form_matches_ratio() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (n, t) in [(5, 0), (8, 1), (14, 2), (40, 5)] {
            for _ in 0..200 {
                let th: f64 = rng.gen_range(0.0..TAU);
                if th.cos().abs() < 1e-3 {
                    continue;
                }
                assert!((k(n, t).q(th) - q_ratio(n, t, th)).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn unit_circle_transport() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for (n, t) in [(5, 0), (8, 1), (14, 2)] {
            let p = FamilyParams::new(n, t).unwrap().closed_form_polynomial();
            for _ in 0..64 {
                let th: f64 = rng.gen_range(0.0..TAU);
                let pv = p.eval_complex(Complex64::cis(th));
                let expected = Complex64::cis(n as f64 * th) * k(n, t).q(th);
                assert!((pv - expected).norm() < 1e-9);
                assert!((pv.norm() - k(n, t).q(th).abs()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = 1e-6;
        for (n, t) in [(5, 0), (8, 1), (14, 2)] {
            let q = k(n, t);
            for _ in 0..1000 {
                let th: f64 = rng.gen_range(0.0..TAU);
                let d1 = (q.q(th + h) - q.q(th - h)) / (2.0 * h);
                assert!((-d1 / 2.0 - q.neg_half_q_prime(th)).abs() < 1e-4);
                let d2 = (q.neg_half_q_prime(th + h) - q.neg_half_q_prime(th - h)) / (2.0 * h);
                assert!((d2 - q.neg_half_q_second(th)).abs() < 1e-4 * n as f64);
                // Second difference of Q itself, looser because of cancellation.
                let h2 = 1e-4;
                let dd = (q.q(th + h2) - 2.0 * q.q(th) + q.q(th - h2)) / (h2 * h2);
                assert!((-dd / 2.0 - q.neg_half_q_second(th)).abs() < 1e-2 * (n * n) as f64);
            }
        }
    }

    #[test]
    fn r_and_t_splittings() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (n, t) in [(80, 0), (200, 1), (520, 3)] {
            let q = k(n, t);
            let nf = n as f64;
            for _ in 0..500 {
                let th: f64 = rng.gen_range(0.0..TAU);
                let lead1 = 2.0 * nf * (th / 2.0).sin() * ((2.0 * nf - 1.0) * th / 2.0).cos();
                assert!((q.neg_half_q_prime(th) - lead1 - q.r_term(th)).abs() < 1e-8 * nf);
                let lead2 = -2.0 * nf * nf * (th / 2.0).sin() * ((2.0 * nf - 1.0) * th / 2.0).sin();
                assert!((q.neg_half_q_second(th) - lead2 - q.t_term(th)).abs() < 1e-8 * nf * nf);
            }
        }
    }

    #[test]
    fn exclusion_examples() {
        assert!(k(80, 0).exclusion_check());
        assert!(k(120, 1).exclusion_check());
        assert!(k(5, 0).exclusion_check());
    }

    #[test]
    fn certificate_examples() {
        let r = k(200, 0).certificate_check().unwrap();
        assert!(r.all_flags_hold && r.passes(), "{r:?}");
        assert!(r.root_count <= 399);
        let r = k(520, 1).certificate_check().unwrap();
        assert!(r.all_flags_hold && r.passes());
        assert!(r.root_count <= 1039);
        assert_eq!(
            k(39, 0).certificate_check(),
            Err(Error::BelowThreshold { n: 39, threshold: 80 })
        );
    }

    #[test]
    fn index_range_bounds() {
        for (n, t) in [(200u64, 0u64), (520, 1), (1100, 3)] {
            let (lo, hi) = k(n, t).index_range();
            let m = 2.0 * n as f64 - 1.0;
            let c = 1.0 / (4.0 * PI * (t as f64 + 2.0));
            assert!(lo as f64 >= m * c - 1.0 && (lo as f64 - 1.0) < m * c - 1.0);
            assert!(hi as f64 <= m * (1.0 - c) && hi as f64 + 1.0 > m * (1.0 - c));
        }
    }

    // Counts local minima of |P| on a fine unit-circle grid that fall below
    // `threshold`; an independent route to the distinct unit-circle roots.
    fn grid_minima_count(p: &IntPoly, points: usize, threshold: f64) -> usize {
        let vals: Vec<f64> = (0..points)
            .map(|j| p.eval_complex(Complex64::cis(TAU * j as f64 / points as f64)).norm())
            .collect();
        (0..points)
            .filter(|&j| {
                let (a, b, c) = (vals[(j + points - 1) % points], vals[j], vals[(j + 1) % points]);
                b <= a && b < c && b < threshold
            })
            .count()
    }

    #[test]
    fn counting_against_grid_oracle() {
        let q = k(5, 0);
        let count = q.count_unit_circle_roots();
        assert!(count.total < 10);
        let p = FamilyParams::new(5, 0).unwrap().closed_form_polynomial();
        let distinct = count.simple_roots.len() + count.suspected_double_roots.len();
        assert_eq!(distinct, grid_minima_count(&p, 1_000_000, 1e-3));
        // Third route: moduli of the complex roots.
        let roots = complex_roots(&p, 1e-14).unwrap();
        let on_circle = roots.roots.iter().filter(|z| (z.norm() - 1.0).abs() < 1e-6).count();
        assert_eq!(count.total as usize, on_circle);
    }

    #[test]
    fn counting_consistency_with_exact_factors() {
        for (n, t) in [(5, 0), (8, 1), (14, 2), (20, 0), (30, 1), (40, 2)] {
            let p = FamilyParams::new(n, t).unwrap().closed_form_polynomial();
            let exact = cyclotomic_test(&p).unwrap().unit_root_count();
            let count = k(n, t).count_unit_circle_roots().total;
            assert!(count >= exact, "n={n} t={t}: {count} < {exact}");
            assert!(count <= 2 * n, "n={n} t={t}");
            assert!(count < 2 * n, "n={n} t={t}: family member should be non-cyclotomic");
        }
    }

    #[test]
    fn counter_detects_tangential_zeros() {
        // (cos θ - cos 1)^2 touches zero at θ = 1 and θ = 2π - 1.
        let c1 = 1f64.cos();
        let r = count_periodic_zeros(|th| (th.cos() - c1).powi(2), 4096);
        assert!(r.simple_roots.is_empty());
        assert_eq!(r.suspected_double_roots.len(), 2);
        assert_eq!(r.total, 4);
        assert!((r.suspected_double_roots[0] - 1.0).abs() < 1e-4);
        // Simple zeros: sin(3θ) has six on [0, 2π), one sitting on the grid.
        let r = count_periodic_zeros(|th| (3.0 * th).sin() + 0.0, 600);
        assert_eq!(r.total, 6, "{r:?}");
    }

    #[test]
    fn complex_root_examples() {
        let r = complex_roots(&IntPoly::from_i64(&[1, -1, 1]), 1e-14).unwrap();
        let mut args: Vec<f64> = r.roots.iter().map(|z| z.arg()).collect();
        args.sort_by(f64::total_cmp);
        assert!((args[0] + PI / 3.0).abs() < 1e-10 && (args[1] - PI / 3.0).abs() < 1e-10);
        assert!(r.roots.iter().all(|z| (z.norm() - 1.0).abs() < 1e-10));

        let r = complex_roots(&IntPoly::from_i64(&[-1, 1]), 1e-14).unwrap();
        assert!((r.roots[0] - Complex64::new(1.0, 0.0)).norm() < 1e-12);

        let p = IntPoly::from_i64(&[1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1]);
        let r = complex_roots(&p, 1e-14).unwrap();
        assert_eq!(r.roots.len(), 10);
        assert!(r.roots.iter().any(|z| (z.norm() - 1.0).abs() > 1e-6));
        assert!(r.reconstruction_error < 1e-10);

        assert_eq!(complex_roots(&IntPoly::one(), 1e-12), Err(Error::ConstantPolynomial));
        assert_eq!(complex_roots(&IntPoly::zero(), 1e-12), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocal_symmetry_of_family_roots() {
        for (n, t) in [(5, 0), (8, 1), (14, 2), (30, 0)] {
            let p = FamilyParams::new(n, t).unwrap().closed_form_polynomial();
            let roots = complex_roots(&p, 1e-14).unwrap().roots;
            for z in &roots {
                let inv = z.inv();
                let nearest = roots.iter().map(|w| (w - inv).norm()).fold(f64::INFINITY, f64::min);
                assert!(nearest < 1e-7, "n={n} t={t} z={z}");
            }
        }
    }

    #[test]
    fn band_examples() {
        let r = modulus_band_check(12).unwrap();
        assert!(r.pass);
        assert!((r.lower - 0.4854).abs() < 1e-4 && (r.upper - 1.5146).abs() < 1e-4);
        assert!(modulus_band_check(100).unwrap().pass);
        assert_eq!(modulus_band_check(11), Err(Error::BelowThreshold { n: 11, threshold: 12 }));
    }
}
