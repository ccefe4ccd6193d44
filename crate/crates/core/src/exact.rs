//! The g-algorithm: all exact hitting sets as a disjoint union of 01g-rows.
//!
//! Hyperedges are imposed one at a time on the rows of a LIFO stack. Imposing
//! `K` on a row splits it along a 0g0-flag into disjoint candidate sons, each
//! of which meets `K` in exactly one position.

use num_bigint::BigUint;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::row::{total_cardinality, Kind, PendingRow, WildcardRow};

/// Sons of a `g`-row whose members meet `k` in exactly one vertex.
///
/// The sons are pairwise disjoint and their union is
/// `{ x ∈ row : |x ∩ k| = 1 }`. An empty result is legal.
pub fn impose_exact(row: &WildcardRow, k: &VertexSet) -> Vec<WildcardRow> {
    debug_assert_eq!(row.kind(), Kind::G);
    let hit_ones = row.ones().intersection_len(k);
    if hit_ones >= 2 {
        return Vec::new();
    }
    if hit_ones == 1 {
        // the single 1 is already there; everything else in k must be 0
        let mut zeros = row.zeros().clone();
        let mut twos = row.twos().clone();
        zeros.union_with(&twos.intersection(k));
        twos.difference_with(k);
        let mut bubbles = Vec::with_capacity(row.bubbles().len());
        for b in row.bubbles() {
            let rest = b.difference(k);
            if rest.is_empty() {
                return Vec::new();
            }
            zeros.union_with(&b.intersection(k));
            bubbles.push(rest);
        }
        return vec![WildcardRow::assemble(Kind::G, zeros, row.ones().clone(), twos, bubbles)];
    }

    let parts = flag_parts(row, k, false);
    let mut sons = Vec::with_capacity(parts.len());
    'son: for i in 0..parts.len() {
        let mut zeros = row.zeros().clone();
        let mut twos = row.twos().clone();
        let mut bubbles: Vec<VertexSet> = Vec::with_capacity(row.bubbles().len() + 1);
        // twos inside k are settled in every son: zeroed, or a fresh bubble
        twos.difference_with(k);
        for (j, p) in parts.iter().enumerate() {
            if let Part::Twos(set) = p {
                if j == i {
                    bubbles.push(set.clone());
                } else {
                    zeros.union_with(set);
                }
            }
        }
        for (b_idx, b) in row.bubbles().iter().enumerate() {
            let part = parts
                .iter()
                .enumerate()
                .find(|(_, p)| matches!(p, Part::Bubble(idx, _) if *idx == b_idx));
            match part {
                None => bubbles.push(b.clone()),
                Some((j, Part::Bubble(_, set))) => {
                    if j == i {
                        zeros.union_with(&b.difference(set));
                        bubbles.push(set.clone());
                    } else {
                        let rest = b.difference(set);
                        if rest.is_empty() {
                            continue 'son;
                        }
                        zeros.union_with(set);
                        bubbles.push(rest);
                    }
                }
                Some(_) => unreachable!(),
            }
        }
        sons.push(WildcardRow::assemble(Kind::G, zeros, row.ones().clone(), twos, bubbles));
    }
    sons
}

#[derive(Clone, Debug)]
pub(crate) enum Part {
    /// `bubble index`, `bubble ∩ K`
    Bubble(usize, VertexSet),
    /// all free positions inside `K`
    Twos(VertexSet),
}

impl Part {
    pub(crate) fn set(&self) -> &VertexSet {
        match self {
            Part::Bubble(_, s) | Part::Twos(s) => s,
        }
    }
}

/// Splits `k` (already stripped of fixed positions by the caller's logic)
/// into flag parts: one per bubble met, plus one grouped part for the twos.
/// With `bubbles_first` the twos part goes last, otherwise parts are sorted
/// by least element.
pub(crate) fn flag_parts(row: &WildcardRow, k: &VertexSet, bubbles_first: bool) -> Vec<Part> {
    let mut parts: Vec<Part> = row
        .bubbles()
        .iter()
        .enumerate()
        .filter_map(|(i, b)| {
            let p = b.intersection(k);
            (!p.is_empty()).then_some(Part::Bubble(i, p))
        })
        .collect();
    let t = row.twos().intersection(k);
    if !t.is_empty() {
        parts.push(Part::Twos(t));
    }
    if !bubbles_first {
        parts.sort_by_key(|p| p.set().first());
    }
    parts
}

/// True iff every member of the `g`-row meets `k` in exactly one vertex.
pub fn satisfies_exactly(row: &WildcardRow, k: &VertexSet) -> bool {
    let ones = row.ones().intersection_len(k);
    if row.twos().intersects(k) {
        return false;
    }
    let mut inside = 0;
    for b in row.bubbles() {
        if b.is_subset(k) {
            inside += 1;
        } else if b.intersects(k) {
            return false;
        }
    }
    ones + inside == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Infeasible,
    /// the node budget ran out
    Unknown,
}

/// Decides whether the `g`-row contains an exact hitting set, given that
/// the edges before `pending_from` are already satisfied by every member.
///
/// Backtracking search that always branches on the pending edge with the
/// fewest sons. After `budget` nodes the answer is [`Feasibility::Unknown`].
pub fn ehs_feasible(
    row: &WildcardRow,
    h: &Hypergraph,
    pending_from: usize,
    budget: u64,
) -> Feasibility {
    let pending: Vec<usize> = (pending_from..h.edge_count()).collect();
    let mut nodes = 0u64;
    match search(row, h, &pending, &mut nodes, budget) {
        Some(true) => Feasibility::Feasible,
        Some(false) => Feasibility::Infeasible,
        None => Feasibility::Unknown,
    }
}

fn search(
    row: &WildcardRow,
    h: &Hypergraph,
    pending: &[usize],
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let mut still = Vec::with_capacity(pending.len());
    let mut best: Option<(usize, Vec<WildcardRow>)> = None;
    for &i in pending {
        let k = h.edge(i);
        if satisfies_exactly(row, k) {
            continue;
        }
        let sons = impose_exact(row, k);
        if sons.is_empty() {
            return Some(false);
        }
        still.push(i);
        if best.as_ref().map_or(true, |(_, s)| sons.len() < s.len()) {
            best = Some((i, sons));
        }
    }
    let Some((chosen, sons)) = best else {
        return Some(true);
    };
    still.retain(|&i| i != chosen);
    let mut unknown = false;
    for son in &sons {
        match search(son, h, &still, nodes, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => {
                unknown = true;
                break;
            }
        }
    }
    if unknown {
        None
    } else {
        Some(false)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExactConfig {
    /// drop candidate sons that contain no exact hitting set
    pub feasibility: bool,
    /// search nodes per feasibility test before giving up (and keeping the son)
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            feasibility: true,
            node_budget: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExactRun {
    pub rows: Vec<WildcardRow>,
    pub total: BigUint,
    pub impositions: u64,
    pub feasibility_calls: u64,
}

/// Enumerates all exact hitting sets of a full hypergraph.
pub fn enumerate_ehs(h: &Hypergraph) -> Result<ExactRun> {
    enumerate_ehs_with(h, ExactConfig::default())
}

pub fn enumerate_ehs_with(h: &Hypergraph, cfg: ExactConfig) -> Result<ExactRun> {
    h.require_full()?;
    let mut stack = vec![PendingRow {
        row: WildcardRow::all_twos(h.width(), Kind::G),
        next: 0,
    }];
    let mut rows = Vec::new();
    let (mut impositions, mut feasibility_calls) = (0u64, 0u64);
    while let Some(PendingRow { row, next }) = stack.pop() {
        if next == h.edge_count() {
            rows.push(row);
            continue;
        }
        impositions += 1;
        let sons = impose_exact(&row, h.edge(next));
        let keep: Vec<WildcardRow> = sons
            .into_iter()
            .filter(|s| {
                if !cfg.feasibility {
                    return true;
                }
                feasibility_calls += 1;
                ehs_feasible(s, h, next + 1, cfg.node_budget) != Feasibility::Infeasible
            })
            .collect();
        for s in keep.into_iter().rev() {
            stack.push(PendingRow { row: s, next: next + 1 });
        }
    }
    let total = total_cardinality(&rows);
    Ok(ExactRun {
        rows,
        total,
        impositions,
        feasibility_calls,
    })
}

/// A simple graph given by its edge list over vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Parses `n m` followed by `m` lines `u v` (1-based, `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let (hl, header) = lines.next().ok_or_else(|| bad(1, "missing header `n m`"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(hl, "header must be `n m`")))
            .collect::<Result<_>>()?;
        let [n, m] = nums[..] else {
            return Err(bad(hl, "header must be `n m`"));
        };
        if n == 0 {
            return Err(bad(hl, "vertex count must be positive"));
        }
        let mut edges = Vec::with_capacity(m);
        for (ln, line) in lines {
            let uv: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(ln, "edge must be `u v`")))
                .collect::<Result<_>>()?;
            let [u, v] = uv[..] else {
                return Err(bad(ln, "edge must be `u v`"));
            };
            if u == 0 || v == 0 || u > n || v > n {
                return Err(bad(ln, "vertex out of range"));
            }
            if u == v {
                return Err(bad(ln, "loops are not allowed"));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(bad(text.lines().count().max(1), "edge count differs from header"));
        }
        Ok(Graph { vertices: n, edges })
    }
}

/// One hyperedge per graph vertex: the (1-based) indices of its incident
/// edges. Its exact hitting sets are the perfect matchings.
pub fn stars_hypergraph(g: &Graph) -> Result<Hypergraph> {
    let m = g.edges.len();
    let mut stars = vec![VertexSet::empty(m); g.vertices];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        if u == v {
            return Err(Error::InvalidRow(format!("loop at vertex {u}")));
        }
        stars[u - 1].insert(i);
        stars[v - 1].insert(i);
    }
    if let Some(v) = stars.iter().position(|s| s.is_empty()) {
        return Err(Error::IsolatedVertex(v + 1));
    }
    Hypergraph::new(m, stars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_ehs(h: &Hypergraph) -> Vec<VertexSet> {
        let w = h.width();
        (0u64..1 << w)
            .map(|m| VertexSet::from_indices(w, (0..w).filter(|i| m >> i & 1 == 1)))
            .filter(|x| h.is_exact_hitting_set(x))
            .collect()
    }

    fn h1() -> Hypergraph {
        Hypergraph::from_lists(9, [vec![2, 3, 4, 6], vec![1, 2, 3, 4, 5, 7], vec![2, 8, 9]]).unwrap()
    }

    #[test]
    fn table_two_flag() {
        let c0: WildcardRow = "g1 g1 g2 g2 g3 g4 g1 g1 g2 g3 g3 g4".parse().unwrap();
        let k = VertexSet::from_one_based(12, 1..=6).unwrap();
        let sons: Vec<String> = impose_exact(&c0, &k).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            sons,
            vec![
                "g1 g1 0 0 0 0 0 0 1 g2 g2 1",
                "0 0 g1 g1 0 0 g2 g2 0 g3 g3 1",
                "0 0 0 0 1 0 g1 g1 1 0 0 1",
                "0 0 0 0 0 1 g1 g1 1 g2 g2 0",
            ]
        );
    }

    #[test]
    fn table_one_stack() {
        let c0: WildcardRow = "2 g1 g1 g1 2 g1 2 2 2".parse().unwrap();
        let k2 = VertexSet::from_one_based(9, [1, 2, 3, 4, 5, 7]).unwrap();
        let sons: Vec<String> = impose_exact(&c0, &k2).iter().map(|s| s.to_string()).collect();
        assert_eq!(sons, vec!["g1 0 0 0 g1 1 g1 2 2", "0 g1 g1 g1 0 0 0 2 2"]);
        let c2: WildcardRow = "0 g1 g1 g1 0 0 0 2 2".parse().unwrap();
        let k3 = VertexSet::from_one_based(9, [2, 8, 9]).unwrap();
        let sizes: Vec<u32> = impose_exact(&c2, &k3)
            .iter()
            .map(|s| s.cardinality().try_into().unwrap())
            .collect();
        assert_eq!(sizes, vec![1, 4]);
    }

    #[test]
    fn h1_has_eleven() {
        let run = enumerate_ehs(&h1()).unwrap();
        let mut cards: Vec<u32> = run.rows.iter().map(|r| r.cardinality().try_into().unwrap()).collect();
        cards.sort();
        assert_eq!(cards, vec![1, 4, 6]);
        assert_eq!(run.total, BigUint::from(11u32));
    }

    #[test]
    fn no_sons_when_k_is_unreachable() {
        let r: WildcardRow = "0 0 1 g1 g1".parse().unwrap();
        let k = VertexSet::from_one_based(5, [1, 2]).unwrap();
        assert!(impose_exact(&r, &k).is_empty());
        let two = VertexSet::from_one_based(5, [3]).unwrap();
        let r2: WildcardRow = "1 0 1 g1 g1".parse().unwrap();
        assert_eq!(impose_exact(&r2, &two).len(), 1);
        let both = VertexSet::from_one_based(5, [1, 3]).unwrap();
        assert!(impose_exact(&r2, &both).is_empty());
    }

    #[test]
    fn feasibility_examples() {
        let h = h1();
        let c3: WildcardRow = "g1 0 0 0 g1 1 g1 g2 g2".parse().unwrap();
        assert_eq!(ehs_feasible(&c3, &h, 3, 1000), Feasibility::Feasible);
        let g3: WildcardRow = "0 0 g1 g1 0 0 0 2 2".parse().unwrap();
        assert_eq!(ehs_feasible(&g3, &h, 2, 1000), Feasibility::Feasible);
        let two_ones: WildcardRow = "1 0 0 0 1 0 0 2 2".parse().unwrap();
        assert_eq!(ehs_feasible(&two_ones, &h, 0, 1000), Feasibility::Infeasible);
    }

    #[test]
    fn h2_has_none() {
        let h2 = Hypergraph::from_lists(
            6,
            [vec![1, 2, 5], vec![3, 4], vec![4, 5, 6], vec![1, 3, 5], vec![2, 6]],
        )
        .unwrap();
        let run = enumerate_ehs(&h2).unwrap();
        assert_eq!(run.total, BigUint::from(0u32));
        assert!(brute_ehs(&h2).is_empty());
    }

    #[test]
    fn disjoint_edges_compress_to_one_row() {
        let lists: Vec<Vec<usize>> = (0..20).map(|i| (i * 10 + 1..=i * 10 + 10).collect()).collect();
        let h = Hypergraph::from_lists(200, lists).unwrap();
        let run = enumerate_ehs(&h).unwrap();
        assert_eq!(run.rows.len(), 1);
        assert_eq!(run.total, BigUint::from(10u32).pow(20));
    }

    #[test]
    fn matchings() {
        let c4 = Graph::parse("4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
        assert_eq!(enumerate_ehs(&stars_hypergraph(&c4).unwrap()).unwrap().total, 2u32.into());
        let k2 = Graph::parse("2 1\n1 2\n").unwrap();
        assert_eq!(enumerate_ehs(&stars_hypergraph(&k2).unwrap()).unwrap().total, 1u32.into());
        let tri = Graph::parse("3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(enumerate_ehs(&stars_hypergraph(&tri).unwrap()).unwrap().total, 0u32.into());
        let iso = Graph::parse("3 1\n1 2\n").unwrap();
        assert_eq!(stars_hypergraph(&iso), Err(Error::IsolatedVertex(3)));
        assert!(Graph::parse("2 1\n1 1\n").is_err());
    }

    #[test]
    fn sons_partition_the_exact_members() {
        let row: WildcardRow = "g1 g1 2 2 g2 g2 g2 1 0".parse().unwrap();
        let k = VertexSet::from_one_based(9, [2, 3, 5, 6]).unwrap();
        let sons = impose_exact(&row, &k);
        let mut got: Vec<VertexSet> = sons.iter().flat_map(|s| s.members(1 << 12).unwrap()).collect();
        got.sort();
        let n = got.len();
        got.dedup();
        assert_eq!(n, got.len(), "sons overlap");
        let mut want: Vec<VertexSet> = row
            .members(1 << 12)
            .unwrap()
            .into_iter()
            .filter(|x| x.intersection_len(&k) == 1)
            .collect();
        want.sort();
        assert_eq!(got, want);
    }
}
