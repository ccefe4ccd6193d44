//! Very-goodness by inclusion-exclusion.
//!
//! A potential spoiler of an `e`-row `r` is `Y ∖ {a}` for some `Y ∈ min(r)`
//! and `a ∈ Y`; it is a spoiler if it still hits every edge. The row is
//! very-good iff there are no spoilers. The potential spoilers form a
//! disjoint union of 01g-rows, which makes the inclusion-exclusion terms
//! `N(I)` (potential spoilers missing all edges in `I`) cheap: zero the
//! positions of `⋃I` and count what is left.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bits::VertexSet;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::row::{total_cardinality, Kind, WildcardRow};

/// The potential spoilers as disjoint `g`-rows: one per fixed 1 (that 1
/// dropped) followed by one per bubble (that bubble emptied).
pub fn potential_spoiler_rows(row: &WildcardRow) -> Result<(Vec<WildcardRow>, BigUint)> {
    row.require(Kind::E)?;
    let w = row.width();
    let mut rows = Vec::with_capacity(row.ones().len() + row.bubbles().len());
    let base_zeros = row.zeros().union(row.twos());
    for a in row.ones() {
        let mut ones = row.ones().clone();
        ones.remove(a);
        let mut zeros = base_zeros.clone();
        zeros.insert(a);
        rows.push(WildcardRow::assemble(
            Kind::G,
            zeros,
            ones,
            VertexSet::empty(w),
            row.bubbles().to_vec(),
        ));
    }
    for k in 0..row.bubbles().len() {
        let mut zeros = base_zeros.clone();
        zeros.union_with(&row.bubbles()[k]);
        let others = row
            .bubbles()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, b)| b.clone())
            .collect();
        rows.push(WildcardRow::assemble(
            Kind::G,
            zeros,
            row.ones().clone(),
            VertexSet::empty(w),
            others,
        ));
    }
    let pot = total_cardinality(&rows);
    Ok((rows, pot))
}

/// Members of the spoiler rows avoiding `u`.
pub fn n_term(spoiler_rows: &[WildcardRow], u: &VertexSet) -> BigUint {
    let mut total = BigUint::zero();
    'rows: for r in spoiler_rows {
        if r.ones().intersects(u) {
            continue;
        }
        let mut c = BigUint::one();
        for b in r.bubbles() {
            let left = b.len() - b.intersection_len(u);
            if left == 0 {
                continue 'rows;
            }
            c *= left;
        }
        total += c;
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpoilerDecision {
    VeryGood,
    NotVeryGood,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpoilerVerdict {
    #[serde(serialize_with = "crate::row::as_string")]
    pub pot: BigUint,
    /// bounds on the number of spoilers; equal once the sum is complete
    #[serde(serialize_with = "crate::row::as_string")]
    pub sp_lower: BigInt,
    #[serde(serialize_with = "crate::row::as_string")]
    pub sp_upper: BigInt,
    pub decision: SpoilerDecision,
    /// the Bonferroni partial sums computed, level 1 first
    #[serde(serialize_with = "crate::row::as_strings")]
    pub partial_sums: Vec<BigInt>,
    pub terms_evaluated: u64,
}

impl SpoilerVerdict {
    /// The exact spoiler count, when known.
    pub fn exact(&self) -> Option<BigUint> {
        (self.sp_lower == self.sp_upper).then(|| self.sp_lower.to_biguint().unwrap())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpoilerConfig {
    /// run the complete alternating sum only up to this many edges
    pub full_max_edges: usize,
    /// give up on the complete sum after this many distinct terms
    pub term_budget: u64,
}

impl Default for SpoilerConfig {
    fn default() -> Self {
        SpoilerConfig {
            full_max_edges: 20,
            term_budget: 1 << 22,
        }
    }
}

/// Counts (or bounds) the spoilers of an `e`-row.
///
/// The first three Bonferroni levels are tried in order; a positive lower
/// bound after levels 1 or 3 proves a spoiler exists, a zero upper bound
/// after level 2 proves there is none. Otherwise the full sum is evaluated
/// when the hypergraph is small enough.
pub fn spoiler_count(row: &WildcardRow, h: &Hypergraph, cfg: SpoilerConfig) -> Result<SpoilerVerdict> {
    let (rows, pot) = potential_spoiler_rows(row)?;
    let edges = h.edges();
    let ne = edges.len();
    let pot_i = BigInt::from(pot.clone());
    let mut terms = 1u64;
    let mut lower = BigInt::zero();
    let mut upper = pot_i.clone();
    let mut partial = Vec::new();
    let verdict = |lower: BigInt, upper: BigInt, decision, partial, terms| SpoilerVerdict {
        pot: pot.clone(),
        sp_lower: lower,
        sp_upper: upper,
        decision,
        partial_sums: partial,
        terms_evaluated: terms,
    };

    let mut sum = pot_i.clone();
    // level 1
    for e in edges {
        sum -= BigInt::from(n_term(&rows, e));
        terms += 1;
    }
    partial.push(sum.clone());
    lower = lower.max(sum.clone());
    if sum.is_positive() {
        return Ok(verdict(lower, upper, SpoilerDecision::NotVeryGood, partial, terms));
    }
    // level 2
    for i in 0..ne {
        for j in i + 1..ne {
            sum += BigInt::from(n_term(&rows, &edges[i].union(&edges[j])));
            terms += 1;
        }
    }
    partial.push(sum.clone());
    upper = upper.min(sum.clone());
    if !sum.is_positive() {
        return Ok(verdict(BigInt::zero(), BigInt::zero(), SpoilerDecision::VeryGood, partial, terms));
    }
    // level 3
    for i in 0..ne {
        for j in i + 1..ne {
            let uij = edges[i].union(&edges[j]);
            for k in j + 1..ne {
                sum -= BigInt::from(n_term(&rows, &uij.union(&edges[k])));
                terms += 1;
            }
        }
    }
    partial.push(sum.clone());
    lower = lower.max(sum.clone());
    if sum.is_positive() {
        return Ok(verdict(lower, upper, SpoilerDecision::NotVeryGood, partial, terms));
    }
    if ne > cfg.full_max_edges {
        return Ok(verdict(lower, upper, SpoilerDecision::Undecided, partial, terms));
    }
    match full_sum(&rows, h, cfg.term_budget) {
        Some((sp, t)) => {
            let decision = if sp.is_zero() {
                SpoilerDecision::VeryGood
            } else {
                SpoilerDecision::NotVeryGood
            };
            Ok(verdict(sp.clone(), sp, decision, partial, terms + t))
        }
        None => Ok(verdict(lower, upper, SpoilerDecision::Undecided, partial, terms)),
    }
}

/// `Σ_I (-1)^|I| N(⋃I)` by depth-first search over index sets. A branch
/// stops as soon as its term vanishes, since every superset's term does
/// too. Terms are memoized by the union.
fn full_sum(rows: &[WildcardRow], h: &Hypergraph, budget: u64) -> Option<(BigInt, u64)> {
    struct Dfs<'a> {
        rows: &'a [WildcardRow],
        edges: &'a [VertexSet],
        memo: HashMap<VertexSet, BigUint>,
        visited: u64,
        budget: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, from: usize, u: &VertexSet, sign: bool) -> Option<BigInt> {
            let mut acc = BigInt::zero();
            for i in from..self.edges.len() {
                self.visited += 1;
                if self.visited > self.budget {
                    return None;
                }
                let v = u.union(&self.edges[i]);
                let rows = self.rows;
                let n = self
                    .memo
                    .entry(v.clone())
                    .or_insert_with(|| n_term(rows, &v))
                    .clone();
                if n.is_zero() {
                    continue;
                }
                let n = BigInt::from(n);
                if sign {
                    acc += n;
                } else {
                    acc -= n;
                }
                acc += self.go(i + 1, &v, !sign)?;
            }
            Some(acc)
        }
    }
    let mut dfs = Dfs {
        rows,
        edges: h.edges(),
        memo: HashMap::new(),
        visited: 0,
        budget,
    };
    let pot = BigInt::from(total_cardinality(rows));
    let rest = dfs.go(0, &VertexSet::empty(h.width()), false)?;
    Some((pot + rest, dfs.visited))
}

/// True iff `sp` spoilers are too few to spoil every row-minimal set: `sp`
/// is below the product of all bubble sizes but the largest.
pub fn goodness_guarantee(row: &WildcardRow, sp: &BigUint) -> bool {
    let mut sizes: Vec<usize> = row.bubbles().iter().map(|b| b.len()).collect();
    if sizes.is_empty() {
        return sp.is_zero();
    }
    sizes.sort_unstable();
    sizes.pop();
    let bound = sizes.iter().fold(BigUint::one(), |acc, &e| acc * e);
    *sp < bound
}
