//! The transversal e-algorithm: all hitting sets as disjoint 012e-rows.
//!
//! Imposing a hyperedge `K` on an `e`-row splits it into sons that each
//! demand "some 1 in part i, no 1 in the earlier parts" of `K`. The parts
//! are the bubbles met by `K` (in canonical order) followed by the free
//! positions of `K` as one grouped part.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::VertexSet;
use crate::error::Result;
use crate::exact::{flag_parts, Part};
use crate::hypergraph::Hypergraph;
use crate::row::{Kind, PendingRow, WildcardRow};
use crate::vlayout::{hs_feasible, BitMatrix};

/// Sons of an `e`-row whose members meet `k`. They are pairwise disjoint
/// and their union is `{ x ∈ row : x ∩ k ≠ ∅ }`.
pub fn impose_at_least_one(row: &WildcardRow, k: &VertexSet) -> Vec<WildcardRow> {
    let live = k.difference(row.zeros());
    if k.intersects(row.ones()) || row.bubbles().iter().any(|b| b.is_subset(&live)) {
        return vec![row.clone()];
    }
    if live.is_empty() {
        return Vec::new();
    }
    let parts = flag_parts(row, &live, true);
    let mut sons = Vec::with_capacity(parts.len());
    for i in 0..parts.len() {
        let mut zeros = row.zeros().clone();
        let mut twos = row.twos().clone();
        let mut bubbles: Vec<VertexSet> = row.bubbles().to_vec();
        let mut fresh: Vec<VertexSet> = Vec::new();
        for (j, p) in parts.iter().enumerate().take(i + 1) {
            match p {
                Part::Twos(set) => {
                    twos.difference_with(set);
                    if j < i {
                        zeros.union_with(set);
                    } else {
                        fresh.push(set.clone());
                    }
                }
                Part::Bubble(b, set) => {
                    if j < i {
                        // cannot empty the bubble: it is not inside `live`
                        bubbles[*b].difference_with(set);
                        zeros.union_with(set);
                    } else {
                        twos.union_with(&bubbles[*b].difference(set));
                        bubbles[*b] = set.clone();
                    }
                }
            }
        }
        bubbles.extend(fresh);
        sons.push(WildcardRow::assemble(Kind::E, zeros, row.ones().clone(), twos, bubbles));
    }
    sons
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HsConfig {
    /// discard rows whose degree exceeds this bound
    pub cutoff: Option<usize>,
    /// skip the cheap "some hitting set survives" test on candidate sons
    pub skip_feasibility: bool,
    /// swap the new top of the stack with a random lower entry
    pub shuffle_seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct SemifinalSet {
    pub rows: Vec<WildcardRow>,
    pub impositions: u64,
}

impl SemifinalSet {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `Σ |row|`, the number of hitting sets represented.
    pub fn total(&self) -> BigUint {
        crate::row::total_cardinality(&self.rows)
    }

    /// `Σ |min(row)|`.
    pub fn total_promise(&self) -> BigUint {
        self.rows.iter().map(|r| r.promise_size()).sum()
    }

    /// The least degree and the indices of the rows attaining it. Those
    /// rows are very-good and their promises are exactly the minimum
    /// hitting sets.
    pub fn minimum_rows(&self) -> Option<(usize, Vec<usize>)> {
        let mu = self.rows.iter().map(|r| r.degree()).min()?;
        let idx = (0..self.rows.len())
            .filter(|&i| self.rows[i].degree() == mu)
            .collect();
        Some((mu, idx))
    }
}

/// All hitting sets of a full hypergraph as disjoint semifinal rows.
pub fn enumerate_hs(h: &Hypergraph, cfg: HsConfig) -> Result<SemifinalSet> {
    h.require_full()?;
    Ok(enumerate_hs_any(h, cfg))
}

/// Same as [`enumerate_hs`] but also for hypergraphs that are not full.
pub(crate) fn enumerate_hs_any(h: &Hypergraph, cfg: HsConfig) -> SemifinalSet {
    let edges = BitMatrix::of_edges(h);
    let mut rng = cfg.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
    let mut stack = vec![PendingRow {
        row: WildcardRow::all_twos(h.width(), Kind::E),
        next: 0,
    }];
    let mut rows = Vec::new();
    let mut impositions = 0u64;
    while let Some(PendingRow { row, next }) = stack.pop() {
        if next == h.edge_count() {
            rows.push(row);
            continue;
        }
        impositions += 1;
        let sons = impose_at_least_one(&row, h.edge(next));
        for s in sons.into_iter().rev() {
            if cfg.cutoff.is_some_and(|m| s.degree() > m) {
                continue;
            }
            if !cfg.skip_feasibility && !hs_feasible(&edges, s.zeros()) {
                continue;
            }
            stack.push(PendingRow { row: s, next: next + 1 });
        }
        if let Some(rng) = rng.as_mut() {
            if stack.len() > 1 {
                let top = stack.len() - 1;
                let j = rng.gen_range(0..=top);
                stack.swap(top, j);
            }
        }
    }
    SemifinalSet { rows, impositions }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2() -> Hypergraph {
        Hypergraph::from_lists(6, [vec![1, 2, 5], vec![3, 4], vec![4, 5, 6], vec![1, 3, 5], vec![2, 6]])
            .unwrap()
    }

    fn h4() -> Hypergraph {
        Hypergraph::from_lists(
            6,
            [vec![1, 5, 6], vec![3, 4, 5], vec![2, 3], vec![1, 4, 6]],
        )
        .unwrap()
    }

    #[test]
    fn table_four() {
        let s = enumerate_hs(&h2(), HsConfig::default()).unwrap();
        let mut got: Vec<String> = s.rows.iter().map(|r| r.to_string()).collect();
        got.sort();
        let mut want = vec![
            "e1 e1 1 0 0 1",
            "2 e1 e2 e2 1 e1",
            "0 1 1 1 0 2",
            "1 e1 2 1 0 e1",
        ];
        want.sort();
        assert_eq!(got, want);
        let (mu, idx) = s.minimum_rows().unwrap();
        assert_eq!((mu, idx.len()), (3, 4));
    }

    #[test]
    fn first_imposition_makes_one_bubble() {
        let r = WildcardRow::all_twos(5, Kind::E);
        let k = VertexSet::from_one_based(5, [2, 4]).unwrap();
        let sons = impose_at_least_one(&r, &k);
        assert_eq!(sons.len(), 1);
        assert_eq!(sons[0].to_string(), "2 e1 2 e1 2");
        let dead: WildcardRow = "0 0 1 2 2".parse().unwrap();
        let k2 = VertexSet::from_one_based(5, [1, 2]).unwrap();
        assert!(impose_at_least_one(&dead, &k2).is_empty());
    }

    #[test]
    fn h4_contains_table_seven_row() {
        let s = enumerate_hs(&h4(), HsConfig::default()).unwrap();
        let r: WildcardRow = "e1 e2 e2 e1 1 e1".parse().unwrap();
        assert!(s.rows.contains(&r), "{:?}", s.rows);
    }

    #[test]
    fn sons_partition_hitting_members() {
        let row: WildcardRow = "e1 e1 2 2 e2 e2 e2 1 0 2".parse().unwrap();
        let k = VertexSet::from_one_based(10, [2, 3, 5, 6, 9]).unwrap();
        let sons = impose_at_least_one(&row, &k);
        let mut got: Vec<VertexSet> = sons.iter().flat_map(|s| s.members(1 << 12).unwrap()).collect();
        got.sort();
        let n = got.len();
        got.dedup();
        assert_eq!(n, got.len());
        let mut want: Vec<VertexSet> = row
            .members(1 << 12)
            .unwrap()
            .into_iter()
            .filter(|x| x.intersects(&k))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn cutoff_keeps_small_rows() {
        let s = enumerate_hs(&h2(), HsConfig { cutoff: Some(3), ..Default::default() }).unwrap();
        assert_eq!(s.len(), 4);
        let s2 = enumerate_hs(&h2(), HsConfig { cutoff: Some(2), ..Default::default() }).unwrap();
        assert!(s2.is_empty());
    }

    #[test]
    fn shuffle_keeps_the_union() {
        let a = enumerate_hs(&h4(), HsConfig::default()).unwrap();
        let b = enumerate_hs(&h4(), HsConfig { shuffle_seed: Some(7), ..Default::default() }).unwrap();
        assert_eq!(a.total(), b.total());
    }
}
