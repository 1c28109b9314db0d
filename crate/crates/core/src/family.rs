//! The family `S(n, t)` of symmetric, non-cyclotomic numerical semigroups.
//!
//! `S(n, t)` is generated by three blocks:
//!
//! * the `t` pairs `n - 2t + 4i`, `n - 2t + 4i + 1` for `0 <= i < t`,
//! * the `n - 6t - 1` consecutive integers `n + 2t ..= 2n - 4t - 2`,
//! * the `t` integers `2n - 4t + 4j - 1` for `0 <= j < t`.
//!
//! Its polynomial has the closed form
//! `x^{2n} - x^{2n-1} + Σ_{i=0}^{2t} (-1)^i x^{n+2t-2i} - x + 1`.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{cyclotomic_test, CyclotomicReport};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::semigroup::{AnalysisRecord, NumericalSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    n: u64,
    t: u64,
}

impl FamilyParams {
    /// Requires `n >= 6t + 2`. `(2, 0)` is also rejected: its only generator
    /// is `2`, which does not generate a numerical semigroup.
    pub fn new(n: u64, t: u64) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidFamily {
            n,
            t,
            reason: reason.to_owned(),
        };
        let min_n = t
            .checked_mul(6)
            .and_then(|x| x.checked_add(2))
            .ok_or_else(|| invalid("t too large"))?;
        if n < min_n {
            return Err(invalid("n must be at least 6t + 2"));
        }
        if n < 3 {
            return Err(invalid("S(2, 0) = <2> has infinitely many gaps"));
        }
        Ok(FamilyParams { n, t })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `n - 3t - 1`.
    pub fn expected_embedding_dimension(&self) -> u64 {
        self.n - 3 * self.t - 1
    }

    /// `max(8(t+1)^3, 40(t+2))`, the range where non-cyclotomicity is proved
    /// for the whole family.
    pub fn asymptotic_threshold(&self) -> u64 {
        (8 * (self.t + 1).pow(3)).max(40 * (self.t + 2))
    }

    /// `max(16(t+1)^3, 40(t+2))`, the range of the root-count certificate.
    /// The larger of the two thresholds; this is the one used
    /// for certificate claims.
    pub fn certificate_threshold(&self) -> u64 {
        (16 * (self.t + 1).pow(3)).max(40 * (self.t + 2))
    }

    pub fn generators(&self) -> Vec<u64> {
        let (n, t) = (self.n, self.t);
        let mut gens = Vec::with_capacity((n - 3 * t - 1) as usize);
        for i in 0..t {
            gens.push(n - 2 * t + 4 * i);
            gens.push(n - 2 * t + 4 * i + 1);
        }
        gens.extend(n + 2 * t..=2 * n - 4 * t - 2);
        gens.extend((0..t).map(|j| 2 * n - 4 * t + 4 * j - 1));
        gens.sort_unstable();
        gens
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.generators())
            .expect("validated family parameters generate a numerical semigroup")
    }

    /// The closed-form semigroup polynomial, degree `2n`.
    pub fn closed_form_polynomial(&self) -> IntPoly {
        let (n, t) = (self.n as usize, self.t as usize);
        let mut c = vec![0i64; 2 * n + 1];
        c[0] += 1;
        c[1] -= 1;
        c[2 * n - 1] -= 1;
        c[2 * n] += 1;
        for i in 0..=2 * t {
            c[n + 2 * t - 2 * i] += if i % 2 == 0 { 1 } else { -1 };
        }
        IntPoly::from_i64(&c)
    }

    /// Positive members below `2n` that are not generators:
    /// `2n - 4t + 4j + {0, 1, 2}` for `0 <= j < t`.
    pub fn expected_non_generator_members(&self) -> Vec<u64> {
        let base = 2 * self.n - 4 * self.t;
        (0..self.t)
            .flat_map(|j| (0..3).map(move |k| base + 4 * j + k))
            .collect()
    }

    /// Checks the gap structure of `S(n, t)` against the generic machinery:
    /// the non-generator members below `2n` are exactly
    /// [`expected_non_generator_members`](Self::expected_non_generator_members),
    /// `2n - 1` is the largest gap and every integer `>= 2n` is a member.
    pub fn gap_structure_holds(&self, s: &NumericalSemigroup) -> bool {
        let two_n = 2 * self.n;
        let gens = self.generators();
        let observed: Vec<u64> = (1..two_n)
            .filter(|&v| s.contains(v) && gens.binary_search(&v).is_err())
            .collect();
        observed == self.expected_non_generator_members()
            && !s.contains(two_n - 1)
            && s.frobenius() == two_n as i64 - 1
            && (two_n..=s.table_bound()).all(|v| s.contains(v))
    }

    pub fn verdict(&self) -> FamilyVerdict {
        let s = self.semigroup();
        let embedding_dimension = s.embedding_dimension() as u64;
        let symmetric = s.is_symmetric();
        let cyclotomic = cyclotomic_test(&s.polynomial())
            .expect("semigroup polynomial is nonzero")
            .cyclotomic;
        FamilyVerdict::new(*self, embedding_dimension, symmetric, cyclotomic)
    }

    /// Full report used by the `family` subcommand.
    pub fn report(&self) -> FamilyReport {
        let s = self.semigroup();
        let analysis = s.analysis();
        let closed_form = self.closed_form_polynomial();
        let cyclotomic = cyclotomic_test(&analysis.polynomial).expect("nonzero polynomial");
        let verdict = FamilyVerdict::new(
            *self,
            analysis.embedding_dimension as u64,
            analysis.symmetric,
            cyclotomic.cyclotomic,
        );
        FamilyReport {
            n: self.n,
            t: self.t,
            closed_form_agrees: closed_form == analysis.polynomial,
            gap_structure_holds: self.gap_structure_holds(&s),
            closed_form,
            analysis,
            cyclotomic,
            verdict,
            asymptotic_threshold: self.asymptotic_threshold(),
            certificate_threshold: self.certificate_threshold(),
        }
    }
}

/// Embedding dimension, symmetry and cyclotomicity of one family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    #[serde(with = "crate::decimal")]
    pub n: u64,
    #[serde(with = "crate::decimal")]
    pub t: u64,
    #[serde(with = "crate::decimal")]
    pub embedding_dimension: u64,
    #[serde(with = "crate::decimal")]
    pub expected_dimension: u64,
    pub symmetric: bool,
    pub cyclotomic: bool,
    /// Dimension matches `n - 3t - 1`, symmetric, and not cyclotomic.
    pub agree: bool,
}

impl FamilyVerdict {
    fn new(p: FamilyParams, embedding_dimension: u64, symmetric: bool, cyclotomic: bool) -> Self {
        let expected_dimension = p.expected_embedding_dimension();
        FamilyVerdict {
            n: p.n,
            t: p.t,
            embedding_dimension,
            expected_dimension,
            symmetric,
            cyclotomic,
            agree: embedding_dimension == expected_dimension && symmetric && !cyclotomic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    #[serde(with = "crate::decimal")]
    pub n: u64,
    #[serde(with = "crate::decimal")]
    pub t: u64,
    pub analysis: AnalysisRecord,
    pub closed_form: IntPoly,
    pub closed_form_agrees: bool,
    pub gap_structure_holds: bool,
    pub cyclotomic: CyclotomicReport,
    pub verdict: FamilyVerdict,
    #[serde(with = "crate::decimal")]
    pub asymptotic_threshold: u64,
    #[serde(with = "crate::decimal")]
    pub certificate_threshold: u64,
}
