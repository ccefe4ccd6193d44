//! Minimal-criticality (MC) machinery.
//!
//! A set `S` is MC when every `b ∈ S` has a critical hyperedge, one that
//! meets `S` only in `b`. Minimal hitting sets are exactly the MC hitting
//! sets. The MC sets form an ideal whose complement is generated by the
//! inclusion-minimal non-MC sets, computed here one vertex at a time via
//! auxiliary hypergraphs.

use rayon::prelude::*;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SetFamily};
use crate::row::WildcardRow;
use crate::transversal::{enumerate_hs_any, HsConfig};
use crate::vlayout::{bit_indices, minimize_family, BitMatrix};

/// Indices of the hyperedges meeting `s` exactly in `b`.
pub fn crit(b: usize, s: &VertexSet, h: &Hypergraph) -> Result<Vec<usize>> {
    if !s.contains(b) {
        return Err(Error::NotAMember(b + 1));
    }
    Ok(h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.contains(b) && e.intersection_len(s) == 1)
        .map(|(i, _)| i)
        .collect())
}

/// One sweep over the hyperedges collecting the vertices that own a
/// critical edge. True iff every vertex of `z` does, i.e. `z` is MC.
pub fn mc_dud_test(z: &VertexSet, h: &Hypergraph) -> bool {
    let target = z.len();
    let mut t = VertexSet::empty(z.width());
    let mut seen = 0;
    if target == 0 {
        return true;
    }
    for e in h.edges() {
        if e.intersection_len(z) == 1 {
            let v = e.intersection(z).first().unwrap();
            if !t.contains(v) {
                t.insert(v);
                seen += 1;
                if seen == target {
                    return true;
                }
            }
        }
    }
    false
}

/// The inclusion-minimal non-MC sets with their vertical layout.
#[derive(Clone, Debug)]
pub struct MinNotMc {
    family: SetFamily,
    matrix: BitMatrix,
}

impl MinNotMc {
    /// Wraps a family already known to be the minimal non-MC sets (for
    /// instance loaded from a cache).
    pub fn from_family(family: SetFamily) -> Self {
        let matrix = BitMatrix::build(&family);
        MinNotMc { family, matrix }
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// True iff `z` is MC, i.e. contains no member.
    pub fn is_mc(&self, z: &VertexSet) -> bool {
        self.matrix.none_within(z)
    }
}

/// Computes the minimal non-MC sets of a full hypergraph.
///
/// For every vertex `u` the sets `S ∋ u` in which `u` has no critical edge
/// are those with `S ∖ {u}` hitting `{ H ∖ {u} : u ∈ H }`. The minimal such
/// transversals, each plus `u`, are pooled over all `u` and minimized.
pub fn min_not_mc(h: &Hypergraph) -> Result<MinNotMc> {
    h.require_full()?;
    let pooled: Vec<Vec<VertexSet>> = (0..h.width())
        .into_par_iter()
        .map(|u| contributions(h, u))
        .collect();
    let mut fam = SetFamily::new(h.width());
    for set in pooled.into_iter().flatten() {
        fam.push(set);
    }
    Ok(MinNotMc::from_family(minimize_family(&fam)))
}

/// Auxiliary hypergraph of `u`: the edges through `u` with `u` removed,
/// deduplicated. `None` if one of them becomes empty.
pub fn aux_hypergraph(h: &Hypergraph, u: usize) -> Option<Hypergraph> {
    let mut edges: Vec<VertexSet> = Vec::new();
    for e in h.edges().iter().filter(|e| e.contains(u)) {
        let mut a = e.clone();
        a.remove(u);
        if a.is_empty() {
            return None;
        }
        if !edges.contains(&a) {
            edges.push(a);
        }
    }
    Some(Hypergraph::new(h.width(), edges).expect("aux edges are nonempty"))
}

/// Minimal transversals of a (not necessarily full) hypergraph, by
/// scanning the promise of every semifinal row.
pub fn minimal_transversals(h: &Hypergraph) -> Vec<VertexSet> {
    let semi = enumerate_hs_any(h, HsConfig::default());
    let mut out = Vec::new();
    for r in &semi.rows {
        for z in r.min_members().expect("e-row").into_members() {
            if mc_dud_test(&z, h) {
                out.push(z);
            }
        }
    }
    out
}

fn contributions(h: &Hypergraph, u: usize) -> Vec<VertexSet> {
    let Some(aux) = aux_hypergraph(h, u) else {
        return Vec::new();
    };
    minimal_transversals(&aux)
        .into_iter()
        .map(|mut t| {
            t.insert(u);
            t
        })
        .collect()
}

/// Indices (into the family) of the killers of a semifinal row: members
/// avoiding zeros and twos and meeting each bubble at most once.
pub fn killer_indices(row: &WildcardRow, mnmc: &MinNotMc) -> Vec<usize> {
    let m = mnmc.matrix();
    let mut dead = m.or_columns(row.zeros().union(row.twos()).iter());
    for b in row.bubbles() {
        for (d, t) in dead.iter_mut().zip(m.at_least_two(b)) {
            *d |= t;
        }
    }
    let live: Vec<u64> = crate::bits::all_ones(m.height())
        .into_iter()
        .zip(dead)
        .map(|(a, d)| a & !d)
        .collect();
    bit_indices(&live).collect()
}

/// The killers of a semifinal row.
pub fn killers(row: &WildcardRow, mnmc: &MinNotMc) -> SetFamily {
    let members = killer_indices(row, mnmc)
        .into_iter()
        .map(|i| mnmc.family().members()[i].clone())
        .collect();
    SetFamily::from_members(row.width(), members).unwrap()
}

/// A semifinal row is very-good iff it has no killer.
pub fn is_very_good(row: &WildcardRow, mnmc: &MinNotMc) -> bool {
    killer_indices(row, mnmc).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2() -> Hypergraph {
        Hypergraph::from_lists(6, [vec![1, 2, 5], vec![3, 4], vec![4, 5, 6], vec![1, 3, 5], vec![2, 6]])
            .unwrap()
    }

    fn set(w: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_one_based(w, v.iter().copied()).unwrap()
    }

    #[test]
    fn crit_examples() {
        let h = Hypergraph::from_lists(4, [vec![1, 3], vec![2, 4], vec![3, 4]]).unwrap();
        let s = set(4, &[1, 2]);
        assert_eq!(crit(0, &s, &h).unwrap(), vec![0]);
        assert_eq!(crit(1, &s, &h).unwrap(), vec![1]);
        assert!(crit(2, &s, &h).is_err());
        assert!(crit(3, &set(6, &[3, 4, 6]), &h2()).unwrap().is_empty());
    }

    #[test]
    fn dud_test() {
        assert!(mc_dud_test(&set(6, &[2, 3, 4]), &h2()));
        let h4 = Hypergraph::from_lists(6, [vec![1, 5, 6], vec![3, 4, 5], vec![2, 3], vec![1, 4, 6]])
            .unwrap();
        assert!(!mc_dud_test(&set(6, &[1, 3, 5]), &h4));
        assert!(mc_dud_test(&VertexSet::empty(6), &h4));
    }

    #[test]
    fn min_not_mc_of_h2() {
        let m = min_not_mc(&h2()).unwrap();
        let mut want = vec![
            vec![1, 2, 3],
            vec![1, 5],
            vec![1, 2, 6],
            vec![2, 5, 6],
            vec![1, 3, 4],
            vec![3, 4, 5],
            vec![3, 4, 6],
            vec![2, 4, 6],
        ];
        want.sort();
        assert_eq!(m.family().sorted_lists(), want);
    }

    #[test]
    fn aux_of_vertex_five() {
        let aux = aux_hypergraph(&h2(), 4).unwrap();
        let mut t: Vec<Vec<usize>> = minimal_transversals(&aux).iter().map(|s| s.to_one_based()).collect();
        t.sort();
        // a..f stand for 1..6
        assert_eq!(t, vec![vec![1, 4], vec![1, 6], vec![2, 3, 4], vec![2, 3, 6]]);
    }

    #[test]
    fn singleton_edge_blocks_its_vertex() {
        let h = Hypergraph::from_lists(3, [vec![1], vec![1, 2, 3]]).unwrap();
        assert!(aux_hypergraph(&h, 0).is_none());
        let m = min_not_mc(&h).unwrap();
        assert_eq!(m.family().sorted_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn killers_of_table_four_rows() {
        let m = min_not_mc(&h2()).unwrap();
        for text in ["e1 e1 1 0 0 1", "2 e1 e2 e2 1 e1", "0 1 1 1 0 2", "1 e1 2 1 0 e1"] {
            let r = WildcardRow::parse_as(text, crate::row::Kind::E).unwrap();
            assert!(is_very_good(&r, &m), "{text}");
        }
        let h4 = Hypergraph::from_lists(6, [vec![1, 5, 6], vec![3, 4, 5], vec![2, 3], vec![1, 4, 6]])
            .unwrap();
        let m4 = min_not_mc(&h4).unwrap();
        let r: WildcardRow = "e1 e2 e2 e1 1 e1".parse().unwrap();
        assert!(!is_very_good(&r, &m4));
    }
}
