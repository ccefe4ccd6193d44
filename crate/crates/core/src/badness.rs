//! Badness tests for semifinal rows.
//!
//! A semifinal row is bad when none of its row-minimal members is a minimal
//! hitting set. Three tests decide this: scanning the promise with the
//! MC-dud-test, sieving the promise with the killers, and intersecting the
//! row with the noncovers of its killers.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bits::all_ones;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SetFamily};
use crate::mc::mc_dud_test;
use crate::noncover::{e_intersect_n_empty, enumerate_nc};
use crate::row::{Kind, WildcardRow};
use crate::vlayout::{bit_indices, BitMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BadnessMethod {
    First,
    Second,
    Third,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BadnessMode {
    #[default]
    Auto,
    First,
    Second,
    Third,
}

#[derive(Clone, Debug, Serialize)]
pub struct BadnessVerdict {
    pub is_bad: bool,
    pub method: BadnessMethod,
    /// exactly the minimal hitting sets inside the row, when produced
    pub survivors: Option<SetFamily>,
    pub superkilled: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct BadnessConfig {
    /// promises up to this size go to the first test
    pub first_max: u64,
    /// promises up to this size go to the second test, larger ones to the third
    pub second_max: u64,
    /// refuse to expand promises larger than this
    pub expansion_limit: u64,
    /// use the column-wise variant of the first test
    pub vertical: bool,
}

impl Default for BadnessConfig {
    fn default() -> Self {
        BadnessConfig {
            first_max: 500,
            second_max: 5000,
            expansion_limit: 1 << 24,
            vertical: false,
        }
    }
}

/// True iff `ones(row)` is not MC. Every promise member then contains a
/// non-MC set and the row is bad.
pub fn superkilled(row: &WildcardRow, h: &Hypergraph) -> bool {
    !mc_dud_test(row.ones(), h)
}

/// True iff one of the given killers lies inside `ones(row)`.
pub fn superkilled_by(row: &WildcardRow, killers: &SetFamily) -> bool {
    killers.iter().any(|y| y.is_subset(row.ones()))
}

fn promise_len(row: &WildcardRow, limit: u64) -> Result<usize> {
    row.require(Kind::E)?;
    let p = row.promise_size();
    match p.to_u64() {
        Some(n) if n <= limit => Ok(n as usize),
        _ => Err(Error::TooLarge {
            size: p.to_string(),
            limit,
        }),
    }
}

/// First test: every promise member goes through the MC-dud-test.
///
/// With `vertical`, the promise is laid out column-wise and for each vertex
/// `a` the members in which `a` has no critical edge are
/// `col(a) ∧ ⋀_{a ∈ H} atLeastTwo(H)`. The row is bad iff these cover the
/// whole promise.
pub fn badness_first(row: &WildcardRow, h: &Hypergraph, vertical: bool, limit: u64) -> Result<BadnessVerdict> {
    promise_len(row, limit)?;
    let promise = row.min_members()?;
    let survivors = if vertical {
        let m = BitMatrix::build(&promise);
        let mut dud = vec![0u64; all_ones(m.height()).len()];
        for a in 0..h.width() {
            let mut d = m.column(a).to_vec();
            for e in h.edges().iter().filter(|e| e.contains(a)) {
                for (x, t) in d.iter_mut().zip(m.at_least_two(e)) {
                    *x &= t;
                }
            }
            for (x, y) in dud.iter_mut().zip(d) {
                *x |= y;
            }
        }
        let alive: Vec<u64> = all_ones(m.height()).into_iter().zip(dud).map(|(a, d)| a & !d).collect();
        let members = promise.into_members();
        bit_indices(&alive).map(|i| members[i].clone()).collect()
    } else {
        promise.into_members().into_iter().filter(|z| mc_dud_test(z, h)).collect::<Vec<_>>()
    };
    Ok(BadnessVerdict {
        is_bad: survivors.is_empty(),
        method: BadnessMethod::First,
        survivors: Some(SetFamily::from_members(row.width(), survivors)?),
        superkilled: superkilled(row, h),
    })
}

/// Trace of the second test.
#[derive(Clone, Debug, Serialize)]
pub struct SecondReport {
    pub verdict: BadnessVerdict,
    /// killer indices in processing order, up to the early exit
    pub order: Vec<usize>,
    /// promise members contained in each processed killer
    pub victims: Vec<u64>,
    /// of those, the ones not killed before
    pub new_victims: Vec<u64>,
}

/// Second test: the promise is a survivor bitset in mixed-radix order (last
/// bubble fastest) and each killer removes its victims.
///
/// Killers are taken in ascending number of bubbles they cut. A killer cuts
/// bubble `k` in a single element `c_k`; its victims are the members whose
/// digit `k` equals the index of `c_k` for every cut bubble, the remaining
/// digits being free. Those indices are generated directly from the strides.
pub fn badness_second(
    row: &WildcardRow,
    killers: &SetFamily,
    retain: bool,
    limit: u64,
) -> Result<SecondReport> {
    let p = promise_len(row, limit)?;
    let bubbles = row.bubbles();
    let radix: Vec<usize> = bubbles.iter().map(|b| b.len()).collect();
    let mut stride = vec![1usize; radix.len()];
    for k in (0..radix.len().saturating_sub(1)).rev() {
        stride[k] = stride[k + 1] * radix[k + 1];
    }
    let forbidden = row.zeros().union(row.twos());
    // (cut count, killer index, fixed digits)
    let mut plan: Vec<(usize, usize, Vec<Option<usize>>)> = Vec::new();
    let mut superkilled = false;
    for (i, y) in killers.iter().enumerate() {
        if y.intersects(&forbidden) {
            continue;
        }
        let mut digits = Vec::with_capacity(bubbles.len());
        let mut fits = true;
        for b in bubbles {
            let cut = y.intersection(b);
            match cut.len() {
                0 => digits.push(None),
                1 => {
                    let v = cut.first().unwrap();
                    digits.push(Some(b.iter().position(|u| u == v).unwrap()));
                }
                _ => {
                    fits = false;
                    break;
                }
            }
        }
        if fits {
            let cuts = digits.iter().filter(|d| d.is_some()).count();
            superkilled |= cuts == 0;
            plan.push((cuts, i, digits));
        }
    }
    plan.sort_by_key(|&(c, i, _)| (c, i));

    let mut alive = all_ones(p);
    let mut left = p as u64;
    let mut order = Vec::new();
    let mut victims = Vec::new();
    let mut new_victims = Vec::new();
    for (_, i, digits) in &plan {
        if left == 0 {
            break;
        }
        let free: Vec<usize> = (0..radix.len()).filter(|&k| digits[k].is_none()).collect();
        let base: usize = (0..radix.len())
            .filter_map(|k| digits[k].map(|d| d * stride[k]))
            .sum();
        let mut count = 0u64;
        let mut fresh = 0u64;
        let mut odo = vec![0usize; free.len()];
        loop {
            let idx = base + free.iter().zip(&odo).map(|(&k, &d)| d * stride[k]).sum::<usize>();
            count += 1;
            let (w, bit) = (idx / 64, 1u64 << (idx % 64));
            if alive[w] & bit != 0 {
                alive[w] &= !bit;
                fresh += 1;
            }
            let mut j = free.len();
            loop {
                if j == 0 {
                    break;
                }
                j -= 1;
                odo[j] += 1;
                if odo[j] < radix[free[j]] {
                    break;
                }
                odo[j] = 0;
            }
            if odo.iter().all(|&d| d == 0) {
                break;
            }
        }
        left -= fresh;
        order.push(*i);
        victims.push(count);
        new_victims.push(fresh);
    }

    let survivors = if retain {
        let members = row.min_members()?.into_members();
        Some(SetFamily::from_members(
            row.width(),
            bit_indices(&alive).map(|i| members[i].clone()).collect(),
        )?)
    } else {
        None
    };
    Ok(SecondReport {
        verdict: BadnessVerdict {
            is_bad: left == 0,
            method: BadnessMethod::Second,
            survivors,
            superkilled,
        },
        order,
        victims,
        new_victims,
    })
}

/// Third test: the row is bad iff it misses every noncover row of its
/// killers.
pub fn badness_third(row: &WildcardRow, killers: &SetFamily) -> Result<BadnessVerdict> {
    row.require(Kind::E)?;
    let nc = enumerate_nc(killers);
    Ok(BadnessVerdict {
        is_bad: nc.rows.iter().all(|s| e_intersect_n_empty(row, s)),
        method: BadnessMethod::Third,
        survivors: None,
        superkilled: superkilled_by(row, killers),
    })
}

/// Runs the test selected by `mode`. In auto mode a superkilled row is
/// reported bad at once, then the promise size picks the test. Tests that
/// need killers fall back to the first one when none are given.
pub fn badness(
    row: &WildcardRow,
    h: &Hypergraph,
    killers: Option<&SetFamily>,
    mode: BadnessMode,
    cfg: BadnessConfig,
) -> Result<BadnessVerdict> {
    let first = || badness_first(row, h, cfg.vertical, cfg.expansion_limit);
    match (mode, killers) {
        (BadnessMode::First, _) | (_, None) => first(),
        (BadnessMode::Second, Some(k)) => Ok(badness_second(row, k, true, cfg.expansion_limit)?.verdict),
        (BadnessMode::Third, Some(k)) => badness_third(row, k),
        (BadnessMode::Auto, Some(k)) => {
            if superkilled(row, h) {
                return Ok(BadnessVerdict {
                    is_bad: true,
                    method: BadnessMethod::First,
                    survivors: Some(SetFamily::new(row.width())),
                    superkilled: true,
                });
            }
            let p = row.promise_size();
            if p <= BigUint::from(cfg.first_max) {
                first()
            } else if p <= BigUint::from(cfg.second_max) {
                Ok(badness_second(row, k, true, cfg.expansion_limit)?.verdict)
            } else {
                badness_third(row, k)
            }
        }
    }
}
