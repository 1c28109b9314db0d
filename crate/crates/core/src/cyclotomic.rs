//! Cyclotomic polynomials and the exact cyclotomicity decision.
//!
//! By Kronecker's theorem a monic integer polynomial with nonzero constant
//! term has all of its roots on the unit circle exactly when it is a product
//! of cyclotomic polynomials. [`cyclotomic_test`] decides the latter by
//! peeling off every `Φ_d` that divides the input, so the verdict never
//! depends on floating point.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Euler's totient for every `k <= limit` (index 0 holds 0).
pub fn totient_table(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for m in (p..=limit).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

pub fn totient(d: u64) -> u64 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn memo() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `Φ_d`, shared from a process-wide memo table.
///
/// Computed from `x^d - 1 = ∏_{e | d} Φ_e` by dividing out every proper
/// divisor's cyclotomic polynomial.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn cyclotomic_shared(d: u64) -> Arc<IntPoly> {
    assert!(d > 0, "cyclotomic polynomial index must be positive");
    if let Some(hit) = memo().read().expect("memo poisoned").get(&d) {
        return Arc::clone(hit);
    }
    let mut acc = IntPoly::x_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        acc = acc
            .div_exact(&cyclotomic_shared(e))
            .expect("proper divisor cyclotomic polynomials divide x^d - 1");
    }
    let phi = Arc::new(acc);
    memo()
        .write()
        .expect("memo poisoned")
        .entry(d)
        .or_insert(phi)
        .clone()
}

/// `Φ_d` as an owned polynomial. Panics if `d == 0`.
pub fn cyclotomic(d: u64) -> IntPoly {
    (*cyclotomic_shared(d)).clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclotomicFactor {
    #[serde(with = "crate::decimal")]
    pub d: u64,
    #[serde(with = "crate::decimal")]
    pub multiplicity: u32,
}

/// Outcome of [`cyclotomic_test`].
///
/// `∏ Φ_d^{m_d} · remainder` equals the input exactly, and the remainder has
/// no cyclotomic factor left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicReport {
    pub cyclotomic: bool,
    pub factors: Vec<CyclotomicFactor>,
    pub remainder: IntPoly,
}

impl CyclotomicReport {
    /// Multiplies the factors and remainder back together.
    pub fn reconstruct(&self) -> IntPoly {
        self.factors.iter().fold(self.remainder.clone(), |acc, f| {
            acc.mul(&cyclotomic_shared(f.d).pow(f.multiplicity))
        })
    }

    /// Number of roots of unity among the roots, with multiplicity.
    pub fn unit_root_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| totient(f.d) * f.multiplicity as u64)
            .sum()
    }
}

/// Double-precision screen for `Φ_d | p`, i.e. `p(e^{2πi/d}) = 0`.
///
/// Returns `false` only when the computed `|p(ζ_d)|` exceeds a rounding
/// error bound for Horner's rule, so a `false` proves non-divisibility.
struct RootOfUnityScreen {
    coeffs: Vec<f64>,
    tolerance: f64,
}

impl RootOfUnityScreen {
    fn new(p: &IntPoly) -> Option<Self> {
        let coeffs = p.to_f64_vec();
        let l1: f64 = coeffs.iter().map(|c| c.abs()).sum();
        if !l1.is_finite() {
            return None;
        }
        let deg = coeffs.len() as f64;
        Some(RootOfUnityScreen {
            coeffs,
            tolerance: 64.0 * (deg + 1.0) * f64::EPSILON * l1,
        })
    }

    fn may_vanish(&self, d: u64) -> bool {
        let z = Complex64::cis(TAU / d as f64);
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
        v.norm() <= self.tolerance
    }
}

fn degree_of(p: &IntPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Peels cyclotomic factors from `p`. With `stop_early` the search ends as
/// soon as the remaining part is known not to be `1`.
fn peel(p: &IntPoly, stop_early: bool) -> Result<CyclotomicReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let initial_deg = degree_of(p);
    let limit = 2 * initial_deg * initial_deg;
    let phi = totient_table(limit.max(2));
    let mut remainder = p.clone();
    let mut screen = RootOfUnityScreen::new(&remainder);
    let mut factors = Vec::new();

    let mut d = 1usize;
    while d <= 2 * degree_of(&remainder).pow(2) {
        if phi[d] as usize <= degree_of(&remainder) {
            let mut multiplicity = 0u32;
            loop {
                if let Some(s) = &screen {
                    if !s.may_vanish(d as u64) {
                        break;
                    }
                }
                match remainder.div_exact(&cyclotomic_shared(d as u64)) {
                    Ok(q) => {
                        remainder = q;
                        screen = RootOfUnityScreen::new(&remainder);
                        multiplicity += 1;
                    }
                    Err(Error::NotDivisible) => break,
                    Err(e) => return Err(e),
                }
            }
            if multiplicity > 0 {
                factors.push(CyclotomicFactor {
                    d: d as u64,
                    multiplicity,
                });
            }
            // Once Φ_1 is gone, a product of cyclotomics is a palindrome.
            if stop_early && d == 1 && !remainder.is_palindromic()? {
                break;
            }
        }
        d += 1;
    }
    Ok(CyclotomicReport {
        cyclotomic: remainder.is_one(),
        factors,
        remainder,
    })
}

/// Exact cyclotomicity decision with the full factor multiset.
pub fn cyclotomic_test(p: &IntPoly) -> Result<CyclotomicReport> {
    peel(p, false)
}

/// Fast boolean form of [`cyclotomic_test`].
///
/// Products of cyclotomic polynomials are monic with constant term `±1`, so
/// anything else is rejected without peeling.
pub fn is_cyclotomic(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = p.leading_coeff().expect("nonzero");
    let c0 = p.constant_term();
    if !lead.is_one() || !c0.abs().is_one() {
        return Ok(false);
    }
    Ok(peel(p, true)?.cyclotomic)
}
