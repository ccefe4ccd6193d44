//! The minhit pipeline.
//!
//! The semifinal rows are classified as very-good, merely-good or bad. In
//! first grade the merely-good rows are then replaced by very-good rows and
//! every very-good row is finalized, giving `MHS(H)` as disjoint `g`-rows.
//! In second grade nothing is expanded and `|MHS(H)|` is estimated from the
//! sampled fractions of minimal sets.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::badness::{badness, BadnessConfig, BadnessMode};
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SetFamily};
use crate::mc::{killers, mc_dud_test, min_not_mc, MinNotMc};
use crate::noncover::{e_intersect_n_empty, enumerate_nc, NoncoverSet};
use crate::reduce::{inflate_rows, reduce_hypergraph};
use crate::row::{as_string, to_f64, total_cardinality, Kind, WildcardRow};
use crate::spoiler::{spoiler_count, SpoilerConfig, SpoilerDecision};
use crate::transversal::{enumerate_hs, HsConfig, SemifinalSet};
use crate::vlayout::{bit_indices, BitMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    First,
    Second,
}

impl Grade {
    /// First grade up to 64 vertices, second grade above.
    pub fn for_width(w: usize) -> Grade {
        if w <= 64 {
            Grade::First
        } else {
            Grade::Second
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BubbleChoice {
    /// the bubble disjoint from the most killers
    #[default]
    MaxUntouched,
    Smallest,
    /// the first bubble in canonical order
    First,
}

#[derive(Clone, Copy, Debug)]
pub struct MinhitConfig {
    pub samples: usize,
    pub seed: u64,
    /// `None` picks by width
    pub grade: Option<Grade>,
    pub hs: HsConfig,
    pub badness_mode: BadnessMode,
    pub badness: BadnessConfig,
    pub spoiler: SpoilerConfig,
    /// compute the minimal non-MC sets and use killers
    pub use_mnmc: bool,
    /// work on the reduced hypergraph (first grade only)
    pub reduce: bool,
    pub bubble_choice: BubbleChoice,
    /// classify only this many rows and extrapolate (second grade only)
    pub classify_limit: Option<usize>,
}

impl Default for MinhitConfig {
    fn default() -> Self {
        MinhitConfig {
            samples: 20,
            seed: 0,
            grade: None,
            hs: HsConfig::default(),
            badness_mode: BadnessMode::Auto,
            badness: BadnessConfig::default(),
            spoiler: SpoilerConfig::default(),
            use_mnmc: true,
            reduce: false,
            bubble_choice: BubbleChoice::MaxUntouched,
            classify_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowClass {
    VeryGood,
    MerelyGood,
    Bad,
    Unresolved,
}

/// What the samples alone suggest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Likely {
    LikelyGood,
    LikelyBad,
    Mixed,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowVerdict {
    pub row_index: usize,
    pub class: RowClass,
    /// minimal sets among the samples; `None` for rows of minimum degree
    pub alpha: Option<usize>,
    pub samples: usize,
    pub likely: Likely,
    #[serde(serialize_with = "as_string")]
    pub promise_size: BigUint,
    pub degree: usize,
    pub superkilled: bool,
}

/// `n` uniform picks from `min(row)` and how many of them are minimal.
pub fn sample_min(row: &WildcardRow, h: &Hypergraph, n: usize, seed: u64) -> Result<(SetFamily, usize)> {
    sample_min_with(row, h, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn sample_min_with<R: Rng>(row: &WildcardRow, h: &Hypergraph, n: usize, rng: &mut R) -> Result<(SetFamily, usize)> {
    row.require(Kind::E)?;
    let mut fam = SetFamily::new(row.width());
    let mut alpha = 0;
    for _ in 0..n {
        let mut z = row.ones().clone();
        for b in row.bubbles() {
            z.insert(b.iter().nth(rng.gen_range(0..b.len())).unwrap());
        }
        if mc_dud_test(&z, h) {
            alpha += 1;
        }
        fam.push(z);
    }
    Ok((fam, alpha))
}

fn row_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Classifies every semifinal row. Verdicts are exact; the samples only
/// decide which test confirms them.
pub fn classify_rows(
    h: &Hypergraph,
    s: &SemifinalSet,
    mnmc: Option<&MinNotMc>,
    cfg: &MinhitConfig,
) -> Vec<RowVerdict> {
    let upto = cfg.classify_limit.map_or(s.len(), |l| l.min(s.len()));
    let mu = s.rows.iter().map(|r| r.degree()).min();
    s.rows[..upto]
        .par_iter()
        .enumerate()
        .map(|(i, r)| classify_one(h, r, i, mu, mnmc, cfg))
        .collect()
}

fn classify_one(
    h: &Hypergraph,
    row: &WildcardRow,
    index: usize,
    mu: Option<usize>,
    mnmc: Option<&MinNotMc>,
    cfg: &MinhitConfig,
) -> RowVerdict {
    let mut v = RowVerdict {
        row_index: index,
        class: RowClass::VeryGood,
        alpha: None,
        samples: 0,
        likely: Likely::LikelyGood,
        promise_size: row.promise_size(),
        degree: row.degree(),
        superkilled: false,
    };
    if Some(v.degree) == mu {
        return v;
    }
    let n = cfg.samples;
    let (_, alpha) = sample_min_with(row, h, n, &mut row_rng(cfg.seed, index)).expect("semifinal rows are e-rows");
    v.alpha = Some(alpha);
    v.samples = n;
    v.likely = match alpha {
        0 => Likely::LikelyBad,
        a if a == n => Likely::LikelyGood,
        _ => Likely::Mixed,
    };
    v.class = if alpha > 0 && alpha < n {
        RowClass::MerelyGood
    } else if alpha == n && n > 0 {
        confirm_very_good(h, row, mnmc, cfg)
    } else {
        let ki = mnmc.map(|m| killers(row, m));
        match badness(row, h, ki.as_ref(), cfg.badness_mode, cfg.badness) {
            Ok(b) => {
                v.superkilled = b.superkilled;
                if b.is_bad {
                    RowClass::Bad
                } else if n == 0 {
                    confirm_very_good(h, row, mnmc, cfg)
                } else {
                    RowClass::MerelyGood
                }
            }
            Err(_) => RowClass::Unresolved,
        }
    };
    v
}

fn confirm_very_good(h: &Hypergraph, row: &WildcardRow, mnmc: Option<&MinNotMc>, cfg: &MinhitConfig) -> RowClass {
    if let Some(m) = mnmc {
        return if crate::mc::is_very_good(row, m) {
            RowClass::VeryGood
        } else {
            RowClass::MerelyGood
        };
    }
    match spoiler_count(row, h, cfg.spoiler).map(|s| s.decision) {
        Ok(SpoilerDecision::VeryGood) => return RowClass::VeryGood,
        Ok(SpoilerDecision::NotVeryGood) => return RowClass::MerelyGood,
        _ => {}
    }
    match crate::badness::badness_first(row, h, cfg.badness.vertical, cfg.badness.expansion_limit) {
        Ok(b) => {
            let kept = b.survivors.map_or(0, |s| s.len());
            if BigUint::from(kept) == row.promise_size() {
                RowClass::VeryGood
            } else if kept == 0 {
                RowClass::Bad
            } else {
                RowClass::MerelyGood
            }
        }
        Err(_) => RowClass::Unresolved,
    }
}

/// Replaces a merely-good row by disjoint very-good rows, returned as
/// `g`-rows whose members are exactly `MHS(row)`.
///
/// A bubble `{b_1 < … < b_m}` is expanded into sons `j = 1..m` with `b_j`
/// set to 1, the earlier elements to 0 and the later ones to 2. The killers
/// of son `j` are those of the father that avoid the bubble or meet it in
/// `b_j` alone. Sons without killers are final. A son meeting a noncover row
/// of the father's killers is good; otherwise a badness test decides.
pub fn expand_merely_good(
    row: &WildcardRow,
    ki: &SetFamily,
    h: &Hypergraph,
    cfg: &MinhitConfig,
) -> Result<Vec<WildcardRow>> {
    row.require(Kind::E)?;
    let mut out = Vec::new();
    let mut stack = vec![(row.clone(), ki.clone())];
    while let Some((r, k)) = stack.pop() {
        if k.is_empty() {
            out.push(r.finalize_e_to_g()?);
            continue;
        }
        if r.bubbles().is_empty() {
            // the single promise member contains a killer
            continue;
        }
        let m = BitMatrix::build(&k);
        let bi = choose_bubble(&r, &m, cfg.bubble_choice);
        let bubble = r.bubbles()[bi].clone();
        let mut nc: Option<NoncoverSet> = None;
        let mut sons = Vec::with_capacity(bubble.len());
        for (j, v) in bubble.iter().enumerate() {
            let mut zeros = r.zeros().clone();
            let mut ones = r.ones().clone();
            let mut twos = r.twos().clone();
            for (i, u) in bubble.iter().enumerate() {
                match i.cmp(&j) {
                    std::cmp::Ordering::Less => zeros.insert(u),
                    std::cmp::Ordering::Equal => ones.insert(u),
                    std::cmp::Ordering::Greater => twos.insert(u),
                }
            }
            let mut others = r.bubbles().to_vec();
            others.remove(bi);
            let son = WildcardRow::assemble(Kind::E, zeros, ones, twos, others);
            let mut rest = bubble.clone();
            rest.remove(v);
            let dead = m.or_columns(rest.iter());
            let keep: Vec<VertexSet> = bit_indices(&complement_bits(&dead, m.height()))
                .map(|i| k.members()[i].clone())
                .collect();
            let son_ki = SetFamily::from_members(r.width(), keep)?;
            if son_ki.is_empty() {
                sons.push((son, son_ki));
                continue;
            }
            let father_nc = nc.get_or_insert_with(|| enumerate_nc(&k));
            if father_nc.rows.iter().any(|s| !e_intersect_n_empty(&son, s)) {
                sons.push((son, son_ki));
                continue;
            }
            let verdict = badness(&son, h, Some(&son_ki), cfg.badness_mode, cfg.badness)?;
            if !verdict.is_bad {
                sons.push((son, son_ki));
            }
        }
        stack.extend(sons.into_iter().rev());
    }
    Ok(out)
}

fn complement_bits(v: &[u64], height: usize) -> Vec<u64> {
    crate::bits::all_ones(height).into_iter().zip(v).map(|(a, d)| a & !d).collect()
}

fn choose_bubble(r: &WildcardRow, m: &BitMatrix, choice: BubbleChoice) -> usize {
    let bubbles = r.bubbles();
    match choice {
        BubbleChoice::Smallest => (0..bubbles.len()).min_by_key(|&i| bubbles[i].len()).unwrap(),
        BubbleChoice::First => 0,
        BubbleChoice::MaxUntouched => (0..bubbles.len())
            .max_by_key(|&i| {
                let touched: u32 = m.or_columns(bubbles[i].iter()).iter().map(|w| w.count_ones()).sum();
                (m.height() - touched as usize, std::cmp::Reverse(i))
            })
            .unwrap(),
    }
}

/// Estimated `|MHS|` with its parts.
#[derive(Clone, Debug, Serialize)]
pub struct Estimate {
    /// exact contribution of the very-good rows
    #[serde(serialize_with = "as_string")]
    pub very_good: BigUint,
    /// `Σ α/n · |min(r)|` over the merely-good rows
    pub merely_good: f64,
    /// `R / classified`
    pub extrapolation: f64,
    pub total: f64,
    /// binomial standard error of the merely-good part, with `α/n` as the
    /// success rate
    pub std_error: f64,
}

/// Sums the per-row contributions: `|min|` for very-good rows, nothing for
/// bad ones and `α/n · |min|` for merely-good ones. When only the first
/// verdicts of `total_rows` rows exist the sum is scaled up.
pub fn estimate_total(verdicts: &[RowVerdict], total_rows: usize) -> Estimate {
    let mut very_good = BigUint::zero();
    let mut merely = 0.0;
    let mut var = 0.0;
    for v in verdicts {
        match v.class {
            RowClass::VeryGood => very_good += &v.promise_size,
            RowClass::MerelyGood => {
                let p = to_f64(&v.promise_size);
                match v.alpha {
                    Some(a) if v.samples > 0 => {
                        let q = a as f64 / v.samples as f64;
                        merely += q * p;
                        var += p * p * q * (1.0 - q) / v.samples as f64;
                    }
                    _ => merely += p,
                }
            }
            RowClass::Bad | RowClass::Unresolved => {}
        }
    }
    let extrapolation = if verdicts.is_empty() {
        1.0
    } else {
        total_rows as f64 / verdicts.len() as f64
    };
    Estimate {
        total: (to_f64(&very_good) + merely) * extrapolation,
        very_good,
        merely_good: merely,
        extrapolation,
        std_error: var.sqrt() * extrapolation,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub hs_ms: f64,
    pub mnmc_ms: f64,
    pub classify_ms: f64,
    pub expand_ms: f64,
}

/// Run statistics; the columns of a benchmark table.
#[derive(Clone, Debug, Serialize)]
pub struct Stats {
    pub width: usize,
    pub edges: usize,
    /// `R`, the number of semifinal rows
    pub semifinal_rows: usize,
    pub classified_rows: usize,
    pub impositions: u64,
    pub avg_promise: f64,
    pub avg_degree: f64,
    pub min_not_mc: Option<usize>,
    pub mu: Option<usize>,
    /// number of minimum hitting sets
    #[serde(serialize_with = "as_string")]
    pub minimum_hs: BigUint,
    pub very_good_pct: f64,
    pub merely_good_pct: f64,
    pub bad_pct: f64,
    pub unresolved_pct: f64,
    pub likely_bad: usize,
    pub superkilled_of_likely_bad: usize,
    #[serde(skip)]
    pub timings: Timings,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinhitResult {
    pub grade: Grade,
    /// disjoint `g`-rows with union `MHS(H)` (first grade only)
    pub final_rows: Vec<WildcardRow>,
    pub verdicts: Vec<RowVerdict>,
    /// `|MHS(H)|` (first grade only)
    #[serde(serialize_with = "opt_string")]
    pub exact: Option<BigUint>,
    pub estimate: Estimate,
    pub stats: Stats,
}

fn opt_string<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

/// The full pipeline on a full hypergraph.
pub fn minhit(h: &Hypergraph, cfg: &MinhitConfig) -> Result<MinhitResult> {
    minhit_with(h, cfg, None)
}

/// Like [`minhit`] but reusing precomputed minimal non-MC sets of `h`.
pub fn minhit_with(h: &Hypergraph, cfg: &MinhitConfig, mnmc: Option<MinNotMc>) -> Result<MinhitResult> {
    h.require_full()?;
    let grade = cfg.grade.unwrap_or_else(|| Grade::for_width(h.width()));
    if cfg.reduce && grade == Grade::First {
        let (reduced, map) = reduce_hypergraph(h)?;
        if !map.is_identity() {
            let mut res = run(&reduced, cfg, grade, None)?;
            res.final_rows = inflate_rows(&res.final_rows, &map)?;
            res.exact = Some(total_cardinality(&res.final_rows));
            res.stats.width = h.width();
            return Ok(res);
        }
    }
    run(h, cfg, grade, mnmc)
}

fn run(h: &Hypergraph, cfg: &MinhitConfig, grade: Grade, mnmc: Option<MinNotMc>) -> Result<MinhitResult> {
    let t = Instant::now();
    let semi = enumerate_hs(h, cfg.hs)?;
    let hs_ms = ms(t);

    let t = Instant::now();
    let mnmc = match (mnmc, cfg.use_mnmc) {
        (Some(m), true) => Some(m),
        (None, true) => Some(min_not_mc(h)?),
        (_, false) => None,
    };
    let mnmc_ms = ms(t);

    let t = Instant::now();
    let mut run_cfg = *cfg;
    if grade == Grade::First {
        run_cfg.classify_limit = None;
    }
    let verdicts = classify_rows(h, &semi, mnmc.as_ref(), &run_cfg);
    let classify_ms = ms(t);

    let t = Instant::now();
    let mut final_rows = Vec::new();
    let mut exact = None;
    if grade == Grade::First {
        let unresolved: Vec<usize> = verdicts
            .iter()
            .filter(|v| v.class == RowClass::Unresolved)
            .map(|v| v.row_index + 1)
            .collect();
        if !unresolved.is_empty() {
            return Err(Error::Unresolved(unresolved));
        }
        let parts: Vec<Vec<WildcardRow>> = verdicts
            .par_iter()
            .map(|v| finalize_row(h, &semi.rows[v.row_index], v.class, mnmc.as_ref(), &run_cfg))
            .collect::<Result<_>>()?;
        final_rows = parts.into_iter().flatten().collect();
        exact = Some(total_cardinality(&final_rows));
    }
    let expand_ms = ms(t);

    let estimate = estimate_total(&verdicts, semi.len());
    let stats = stats(h, &semi, &verdicts, mnmc.as_ref(), Timings {
        hs_ms,
        mnmc_ms,
        classify_ms,
        expand_ms,
    });
    Ok(MinhitResult {
        grade,
        final_rows,
        verdicts,
        exact,
        estimate,
        stats,
    })
}

fn finalize_row(
    h: &Hypergraph,
    row: &WildcardRow,
    class: RowClass,
    mnmc: Option<&MinNotMc>,
    cfg: &MinhitConfig,
) -> Result<Vec<WildcardRow>> {
    match class {
        RowClass::VeryGood => Ok(vec![row.finalize_e_to_g()?]),
        RowClass::Bad | RowClass::Unresolved => Ok(Vec::new()),
        RowClass::MerelyGood => match mnmc {
            Some(m) => expand_merely_good(row, &killers(row, m), h, cfg),
            None => {
                let b = crate::badness::badness_first(row, h, cfg.badness.vertical, cfg.badness.expansion_limit)?;
                Ok(b.survivors
                    .unwrap_or_else(|| SetFamily::new(row.width()))
                    .iter()
                    .map(|z| WildcardRow::singleton(Kind::G, z))
                    .collect())
            }
        },
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn stats(
    h: &Hypergraph,
    semi: &SemifinalSet,
    verdicts: &[RowVerdict],
    mnmc: Option<&MinNotMc>,
    timings: Timings,
) -> Stats {
    let r = semi.len();
    let avg = |x: f64| if r == 0 { 0.0 } else { x / r as f64 };
    let mu = semi.rows.iter().map(|r| r.degree()).min();
    let minimum_hs = semi
        .rows
        .iter()
        .filter(|r| Some(r.degree()) == mu)
        .map(|r| r.promise_size())
        .sum();
    let c = verdicts.len().max(1) as f64;
    let pct = |k: RowClass| 100.0 * verdicts.iter().filter(|v| v.class == k).count() as f64 / c;
    let likely_bad: Vec<&RowVerdict> = verdicts.iter().filter(|v| v.likely == Likely::LikelyBad).collect();
    Stats {
        width: h.width(),
        edges: h.edge_count(),
        semifinal_rows: r,
        classified_rows: verdicts.len(),
        impositions: semi.impositions,
        avg_promise: avg(semi.rows.iter().map(|r| to_f64(&r.promise_size())).sum()),
        avg_degree: avg(semi.rows.iter().map(|r| r.degree() as f64).sum()),
        min_not_mc: mnmc.map(|m| m.len()),
        mu,
        minimum_hs,
        very_good_pct: pct(RowClass::VeryGood),
        merely_good_pct: pct(RowClass::MerelyGood),
        bad_pct: pct(RowClass::Bad),
        unresolved_pct: pct(RowClass::Unresolved),
        likely_bad: likely_bad.len(),
        superkilled_of_likely_bad: likely_bad.iter().filter(|v| v.superkilled).count(),
        timings,
    }
}

/// `n` minimal hitting sets drawn uniformly: a row is picked with weight
/// `|min(r)|`, a member of its promise uniformly, and duds are rejected.
/// Gives up after `1000·n` draws and returns what it found.
pub fn sample_mhs(h: &Hypergraph, semi: &SemifinalSet, n: usize, seed: u64) -> Vec<VertexSet> {
    let weights: Vec<f64> = semi.rows.iter().map(|r| to_f64(&r.promise_size())).collect();
    let Ok(pick) = WeightedIndex::new(&weights) else {
        return Vec::new();
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    let mut tries = 0usize;
    while out.len() < n && tries < n.saturating_mul(1000) {
        tries += 1;
        let r = &semi.rows[pick.sample(&mut rng)];
        let (z, alpha) = sample_min_with(r, h, 1, &mut rng).expect("semifinal rows are e-rows");
        if alpha == 1 {
            out.push(z.into_members().pop().unwrap());
        }
    }
    out
}

/// Parameters of a random uniform hypergraph: `h` edges of size `k` on
/// `[w]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub w: usize,
    pub h: usize,
    pub k: usize,
    pub seed: u64,
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    c
}

/// Draws distinct uniform `k`-subsets, then makes the hypergraph full by
/// moving a random covered-twice element of a random edge onto each
/// uncovered vertex.
pub fn random_hypergraph(sig: Signature) -> Result<Hypergraph> {
    let Signature { w, h, k, seed } = sig;
    if w == 0 || h == 0 || k == 0 {
        return Err(Error::InvalidSignature("w, h and k must be positive".into()));
    }
    if k > w {
        return Err(Error::InvalidSignature(format!("k = {k} exceeds w = {w}")));
    }
    if k * h < w {
        return Err(Error::InvalidSignature(format!("{h} edges of size {k} cannot cover {w} vertices")));
    }
    if binomial(w, k) < h as u128 {
        return Err(Error::InvalidSignature(format!("fewer than {h} distinct {k}-subsets of [{w}]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<VertexSet> = Vec::with_capacity(h);
    while edges.len() < h {
        let e = VertexSet::from_indices(w, rand::seq::index::sample(&mut rng, w, k));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let mut degree = vec![0usize; w];
    for e in &edges {
        for v in e {
            degree[v] += 1;
        }
    }
    while let Some(v) = (0..w).find(|&v| degree[v] == 0) {
        let moves: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.iter().map(move |x| (i, x)))
            .filter(|&(i, x)| {
                if degree[x] < 2 {
                    return false;
                }
                let mut e = edges[i].clone();
                e.remove(x);
                e.insert(v);
                !edges.contains(&e)
            })
            .collect();
        let &(i, x) = moves
            .choose(&mut rng)
            .ok_or_else(|| Error::InvalidSignature("cannot make the hypergraph full".into()))?;
        edges[i].remove(x);
        edges[i].insert(v);
        degree[x] -= 1;
        degree[v] += 1;
    }
    Hypergraph::new(w, edges)
}

/// `|MHS(H)|` as a float, exact or estimated.
pub fn mhs_count(res: &MinhitResult) -> f64 {
    res.exact.as_ref().and_then(|x| x.to_f64()).unwrap_or(res.estimate.total)
}
