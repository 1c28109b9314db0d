//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! The semigroup tree has `ℕ` at its root; the children of `S` are the
//! semigroups `S \ {g}` for minimal generators `g > F(S)`. Level `g` of the
//! tree is exactly the set of semigroups of genus `g`.
//!
//! Nodes carry decomposition counts `dec[x] = #{(a, b) ∈ S² : a + b = x, a <= b}`:
//! `x ∈ S` iff `dec[x] > 0` and a nonzero `x` is a minimal generator iff
//! `dec[x] == 1`. Removing a generator `g` decrements `dec[x]` for every
//! `x >= g` with `x - g ∈ S`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::is_cyclotomic;
use crate::error::Result;
use crate::semigroup::NumericalSemigroup;

/// Desk-scale ceiling on the genus.
pub const MAX_GENUS: u32 = 30;

/// A node of the semigroup tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    dec: Vec<u8>,
    genus: u32,
    frobenius: i64,
    multiplicity: u64,
}

impl TreeNode {
    /// `ℕ` with tables large enough for descendants up to genus `max_genus`.
    pub fn root(max_genus: u32) -> Self {
        // Generators of a genus-g semigroup are at most F + m <= 3g.
        let size = 3 * max_genus as usize + 3;
        let dec = (0..size).map(|x| (x / 2 + 1).min(u8::MAX as usize) as u8).collect();
        TreeNode {
            dec,
            genus: 0,
            frobenius: -1,
            multiplicity: 1,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, x: u64) -> bool {
        self.dec.get(x as usize).map_or(true, |&d| d > 0)
    }

    /// Minimal generators, ascending.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let top = (self.frobenius + self.multiplicity as i64).max(self.multiplicity as i64) as u64;
        (self.multiplicity..=top)
            .filter(|&x| self.dec[x as usize] == 1)
            .collect()
    }

    /// Generators above the Frobenius number; removing one yields a child.
    pub fn child_generators(&self) -> impl Iterator<Item = u64> + '_ {
        let lo = (self.frobenius + 1) as u64;
        let hi = (self.frobenius + self.multiplicity as i64).max(self.multiplicity as i64) as u64;
        (lo.max(1)..=hi).filter(|&x| self.dec[x as usize] == 1)
    }

    pub fn child(&self, g: u64) -> TreeNode {
        let g = g as usize;
        let mut dec = self.dec.clone();
        for x in g..dec.len() {
            if self.dec[x - g] > 0 {
                dec[x] -= 1;
            }
        }
        let multiplicity = if g as u64 == self.multiplicity {
            (g as u64 + 1..).find(|&x| dec[x as usize] > 0).expect("cofinite")
        } else {
            self.multiplicity
        };
        TreeNode {
            dec,
            genus: self.genus + 1,
            frobenius: g as i64,
            multiplicity,
        }
    }

    pub fn children(&self) -> Vec<TreeNode> {
        self.child_generators().map(|g| self.child(g)).collect()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.minimal_generators())
            .expect("tree nodes are numerical semigroups")
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0) as u64)
            .filter(|&x| !self.contains(x))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub genus: u32,
    pub embedding_dimension: u32,
    pub total: u64,
    pub symmetric: u64,
    pub cyclotomic: u64,
    pub symmetric_not_cyclotomic: u64,
}

/// Per-(genus, embedding dimension) counts together with the two checks
/// made at every node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusTable {
    rows: BTreeMap<(u32, u32), CensusRow>,
    /// Nodes of embedding dimension at most 3 where symmetric and
    /// cyclotomic disagree.
    pub low_dimension_mismatches: u64,
    /// Nodes where the three symmetry criteria disagree.
    pub symmetry_disagreements: u64,
    /// Nodes whose semigroup invariants were spot-checked.
    pub spot_checks: u64,
    pub spot_check_failures: u64,
}

impl CensusTable {
    fn record(&mut self, genus: u32, e: u32, symmetric: bool, cyclotomic: bool) {
        let row = self.rows.entry((genus, e)).or_insert(CensusRow {
            genus,
            embedding_dimension: e,
            ..Default::default()
        });
        row.total += 1;
        row.symmetric += symmetric as u64;
        row.cyclotomic += cyclotomic as u64;
        row.symmetric_not_cyclotomic += (symmetric && !cyclotomic) as u64;
    }

    /// Adds another table's counts into this one.
    pub fn merge(mut self, other: CensusTable) -> CensusTable {
        for (key, row) in other.rows {
            let r = self.rows.entry(key).or_insert(CensusRow {
                genus: row.genus,
                embedding_dimension: row.embedding_dimension,
                ..Default::default()
            });
            r.total += row.total;
            r.symmetric += row.symmetric;
            r.cyclotomic += row.cyclotomic;
            r.symmetric_not_cyclotomic += row.symmetric_not_cyclotomic;
        }
        self.low_dimension_mismatches += other.low_dimension_mismatches;
        self.symmetry_disagreements += other.symmetry_disagreements;
        self.spot_checks += other.spot_checks;
        self.spot_check_failures += other.spot_check_failures;
        self
    }

    /// Rows ordered by genus, then embedding dimension.
    pub fn rows(&self) -> impl Iterator<Item = &CensusRow> {
        self.rows.values()
    }

    /// Number of semigroups of each genus `0..=max_genus`.
    pub fn totals_by_genus(&self, max_genus: u32) -> Vec<u64> {
        let mut totals = vec![0; max_genus as usize + 1];
        for row in self.rows.values() {
            if let Some(slot) = totals.get_mut(row.genus as usize) {
                *slot += row.total;
            }
        }
        totals
    }

    pub fn total(&self) -> u64 {
        self.rows.values().map(|r| r.total).sum()
    }

    /// True iff every semigroup with embedding dimension at most 3 was
    /// symmetric exactly when cyclotomic.
    pub fn low_dimension_equivalence_holds(&self) -> bool {
        self.low_dimension_mismatches == 0
    }

    pub fn summary(&self, max_genus: u32) -> CensusSummary {
        let mut by_dimension: BTreeMap<u32, u64> = BTreeMap::new();
        for row in self.rows.values() {
            *by_dimension.entry(row.embedding_dimension).or_default() += row.symmetric_not_cyclotomic;
        }
        CensusSummary {
            max_genus,
            total: self.total(),
            totals_by_genus: self.totals_by_genus(max_genus),
            symmetric_not_cyclotomic_by_dimension: by_dimension
                .into_iter()
                .filter(|&(_, c)| c > 0)
                .collect(),
            low_dimension_equivalence: self.low_dimension_equivalence_holds(),
            low_dimension_mismatches: self.low_dimension_mismatches,
            symmetry_disagreements: self.symmetry_disagreements,
            spot_checks: self.spot_checks,
            spot_check_failures: self.spot_check_failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub max_genus: u32,
    pub total: u64,
    pub totals_by_genus: Vec<u64>,
    /// Keyed by embedding dimension; only nonzero entries.
    pub symmetric_not_cyclotomic_by_dimension: BTreeMap<u32, u64>,
    pub low_dimension_equivalence: bool,
    pub low_dimension_mismatches: u64,
    pub symmetry_disagreements: u64,
    pub spot_checks: u64,
    pub spot_check_failures: u64,
}

/// Spot-check one node in this many against a freshly built semigroup.
const SPOT_CHECK_EVERY: u64 = 1000;

fn classify(node: &TreeNode, table: &mut CensusTable, visited: &mut u64) -> Result<()> {
    let s = node.to_semigroup();
    let e = s.embedding_dimension() as u32;
    let p = s.polynomial();
    let symmetric = p.is_palindromic()?;
    let cyclotomic = is_cyclotomic(&p)?;
    if symmetric != s.is_symmetric_by_gaps() || symmetric != s.is_symmetric_by_genus() {
        table.symmetry_disagreements += 1;
    }
    if e <= 3 && symmetric != cyclotomic {
        table.low_dimension_mismatches += 1;
    }
    if *visited % SPOT_CHECK_EVERY == 0 {
        table.spot_checks += 1;
        if !spot_check(node, &s) {
            table.spot_check_failures += 1;
        }
    }
    *visited += 1;
    table.record(node.genus, e, symmetric, cyclotomic);
    Ok(())
}

fn spot_check(node: &TreeNode, s: &NumericalSemigroup) -> bool {
    let bound = s.table_bound();
    let closed = (1..=bound).all(|a| {
        (a..=bound - a).all(|b| !(s.contains(a) && s.contains(b)) || s.contains(a + b))
    });
    closed
        && s.gaps() == node.gaps().as_slice()
        && s.frobenius() == node.frobenius
        && s.genus() as u32 == node.genus
        && s.minimal_generators() == node.minimal_generators()
}

fn walk(node: &TreeNode, max_genus: u32, table: &mut CensusTable, visited: &mut u64) -> Result<()> {
    classify(node, table, visited)?;
    if node.genus < max_genus {
        for child in node.children() {
            walk(&child, max_genus, table, visited)?;
        }
    }
    Ok(())
}

/// Classifies every semigroup of genus at most `max_genus` on one thread.
pub fn enumerate_by_genus(max_genus: u32) -> Result<CensusTable> {
    let mut table = CensusTable::default();
    let mut visited = 0;
    walk(&TreeNode::root(max_genus), max_genus, &mut table, &mut visited)?;
    Ok(table)
}

/// Same as [`enumerate_by_genus`], with subtrees below a shallow frontier
/// processed in parallel and their tables merged.
pub fn enumerate_by_genus_parallel(max_genus: u32) -> Result<CensusTable> {
    let split = max_genus.min(6);
    let mut table = CensusTable::default();
    let mut visited = 0;
    let mut frontier = vec![TreeNode::root(max_genus)];
    for _ in 0..split {
        let mut next = Vec::new();
        for node in &frontier {
            classify(node, &mut table, &mut visited)?;
            next.extend(node.children());
        }
        frontier = next;
    }
    let partial = frontier
        .par_iter()
        .map(|node| {
            let mut t = CensusTable::default();
            let mut v = 0;
            walk(node, max_genus, &mut t, &mut v).map(|_| t)
        })
        .try_reduce(CensusTable::default, |a, b| Ok(a.merge(b)))?;
    Ok(table.merge(partial))
}

/// Runs the census and reports whether symmetric and cyclotomic coincide
/// for every semigroup of embedding dimension at most 3.
pub fn verify_low_dimension_equivalence(max_genus: u32) -> Result<bool> {
    Ok(enumerate_by_genus_parallel(max_genus)?.low_dimension_equivalence_holds())
}
