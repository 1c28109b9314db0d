//! Numerical semigroups given by generators.
//!
//! A numerical semigroup is a submonoid of the nonnegative integers with
//! finite complement. Everything here is derived from a membership table
//! built by dynamic programming over the generators.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `member[v]` for `0 <= v <= frobenius + max(generators) + 1`.
    member: Vec<bool>,
    frobenius: i64,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens` (duplicates and order are ignored).
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&z) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::NonPositiveGenerator(z));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let multiplicity = generators[0] as usize;
        let max_gen = *generators.last().expect("nonempty") as usize;

        // Grow until `multiplicity` consecutive members appear; past that
        // point every integer is a member.
        let mut member = vec![true];
        let mut run = 1usize;
        let mut frobenius: i64 = -1;
        while run < multiplicity {
            let v = member.len();
            let is_member = generators
                .iter()
                .take_while(|&&g| g as usize <= v)
                .any(|&g| member[v - g as usize]);
            member.push(is_member);
            if is_member {
                run += 1;
            } else {
                run = 0;
                frobenius = v as i64;
            }
        }
        let bound = (frobenius + max_gen as i64 + 1) as usize;
        member.resize(bound + 1, true);
        let gaps = (1..=frobenius.max(0) as u64)
            .filter(|&v| !member[v as usize])
            .collect();
        Ok(NumericalSemigroup {
            generators,
            member,
            frobenius,
            gaps,
        })
    }

    /// Sorted, deduplicated generators as supplied (not necessarily minimal).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, v: u64) -> bool {
        self.member.get(v as usize).copied().unwrap_or(true)
    }

    /// Largest gap, or `-1` when the semigroup is all of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Upper end of the stored membership table.
    pub fn table_bound(&self) -> u64 {
        (self.member.len() - 1) as u64
    }

    /// The unique minimal generating set: nonzero members that are not a sum
    /// of two nonzero members. Every such element is at most `max(F + m, m)`.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        let top = (self.frobenius + m as i64).max(m as i64) as u64;
        (m..=top)
            .filter(|&g| self.contains(g))
            .filter(|&g| {
                !(m..=g / 2)
                    .any(|a| g - a >= m && self.contains(a) && self.contains(g - a))
            })
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `P_S(x) = (1 - x) Σ_{s ∈ S} x^s`, via `1 + (x - 1) Σ_{gaps} x^g`.
    pub fn polynomial(&self) -> IntPoly {
        let len = (self.frobenius + 2) as usize;
        let mut c = vec![0i64; len];
        c[0] = 1;
        for &g in &self.gaps {
            c[g as usize + 1] += 1;
            c[g as usize] -= 1;
        }
        IntPoly::from_i64(&c)
    }

    /// Same polynomial computed as `(1 - x)` times the Hilbert series
    /// truncated after the conductor; the infinite tail telescopes away.
    pub fn polynomial_from_hilbert_series(&self) -> IntPoly {
        let conductor = (self.frobenius + 1) as u64;
        let indicator = |v: i64| -> i64 { (v >= 0 && self.contains(v as u64)) as i64 };
        let c: Vec<i64> = (0..=conductor as i64)
            .map(|i| {
                if i == conductor as i64 {
                    // x^c / (1 - x) contributes x^c after multiplying by (1 - x).
                    1 - indicator(i - 1)
                } else {
                    indicator(i) - indicator(i - 1)
                }
            })
            .collect();
        IntPoly::from_i64(&c)
    }

    /// Symmetric means `P_S` is a palindrome.
    pub fn is_symmetric(&self) -> bool {
        self.polynomial()
            .is_palindromic()
            .expect("semigroup polynomial is nonzero")
    }

    /// `x ∈ S ⟺ F - x ∉ S` for all `0 <= x <= F`.
    pub fn is_symmetric_by_gaps(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|x| self.contains(x as u64) != self.contains((f - x) as u64))
    }

    /// Genus equals `(F + 1) / 2`.
    pub fn is_symmetric_by_genus(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius + 1
    }

    /// Least element of each residue class modulo the nonzero member `m`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        let mut apery = vec![None; m as usize];
        let mut found = 0;
        let mut v = 0u64;
        while found < m {
            if self.contains(v) && apery[(v % m) as usize].is_none() {
                apery[(v % m) as usize] = Some(v);
                found += 1;
            }
            v += 1;
        }
        Ok(apery.into_iter().map(|a| a.expect("filled")).collect())
    }

    /// Apéry set with respect to the multiplicity.
    pub fn default_apery_set(&self) -> Vec<u64> {
        self.apery_set(self.multiplicity())
            .expect("multiplicity is a member")
    }

    pub fn analysis(&self) -> AnalysisRecord {
        let minimal = self.minimal_generators();
        AnalysisRecord {
            generators: self.generators.clone(),
            embedding_dimension: minimal.len(),
            minimal_generators: minimal,
            frobenius: self.frobenius,
            genus: self.genus(),
            gaps: self.gaps.clone(),
            polynomial: self.polynomial(),
            symmetric: self.is_symmetric(),
        }
    }
}

/// Frobenius number from an Apéry set: `max(Ap) - m`.
pub fn frobenius_from_apery(apery: &[u64]) -> i64 {
    let m = apery.len() as i64;
    *apery.iter().max().expect("nonempty Apéry set") as i64 - m
}

/// Genus from an Apéry set: `Σ ⌊a / m⌋`.
pub fn genus_from_apery(apery: &[u64]) -> u64 {
    let m = apery.len() as u64;
    apery.iter().map(|a| a / m).sum()
}

/// Machine-readable summary of a semigroup. Integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    #[serde(with = "crate::decimal::vec")]
    pub generators: Vec<u64>,
    #[serde(with = "crate::decimal::vec")]
    pub minimal_generators: Vec<u64>,
    #[serde(with = "crate::decimal")]
    pub embedding_dimension: usize,
    #[serde(with = "crate::decimal")]
    pub frobenius: i64,
    #[serde(with = "crate::decimal")]
    pub genus: usize,
    #[serde(with = "crate::decimal::vec")]
    pub gaps: Vec<u64>,
    pub polynomial: IntPoly,
    pub symmetric: bool,
}
