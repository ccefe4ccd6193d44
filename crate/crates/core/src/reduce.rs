//! Reduction of degenerate hypergraphs and inflation of results.
//!
//! Vertices lying in exactly the same hyperedges form a class. The reduced
//! hypergraph has one vertex per class. Exact and minimal hitting sets pick
//! at most one vertex per class, so `g`-rows over the classes inflate back
//! to `g`-rows over `[w]` by widening each 1 and each bubble by its classes.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::row::{Kind, WildcardRow};
use crate::vlayout::equivalence_classes;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    width: usize,
    classes: Vec<VertexSet>,
}

impl ClassMap {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Least vertex (0-based) of class `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.classes[k].first().unwrap()
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.width
    }

    /// Union of the classes listed in `s` (a set over class indices).
    pub fn expand(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.width);
        for k in s {
            out.union_with(&self.classes[k]);
        }
        out
    }
}

/// The reduced hypergraph over class indices together with the classes.
pub fn reduce_hypergraph(h: &Hypergraph) -> Result<(Hypergraph, ClassMap)> {
    h.require_full()?;
    let classes = equivalence_classes(h);
    let n = classes.len();
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            VertexSet::from_indices(
                n,
                classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.is_subset(e))
                    .map(|(k, _)| k),
            )
        })
        .collect();
    let reduced = Hypergraph::new(n, edges)?;
    Ok((
        reduced,
        ClassMap {
            width: h.width(),
            classes,
        },
    ))
}

/// Inflates `g`-rows over class indices to `g`-rows over `[w]`.
///
/// A fixed 1 on a class becomes a fresh bubble over that class, a bubble
/// grows by all of its classes and a 0 covers its whole class. Rows with
/// free positions or of another kind are refused.
pub fn inflate_rows(rows: &[WildcardRow], map: &ClassMap) -> Result<Vec<WildcardRow>> {
    rows.iter().map(|r| inflate_row(r, map)).collect()
}

fn inflate_row(row: &WildcardRow, map: &ClassMap) -> Result<WildcardRow> {
    if row.kind() != Kind::G && !row.bubbles().is_empty() {
        return Err(Error::WrongKind {
            expected: 'g',
            found: row.kind().symbol(),
        });
    }
    if row.width() != map.classes.len() {
        return Err(Error::WidthMismatch {
            expected: map.classes.len(),
            found: row.width(),
        });
    }
    if !row.twos().is_empty() {
        return Err(Error::InvalidRow("free positions cannot be inflated".into()));
    }
    let zeros = map.expand(row.zeros());
    let mut bubbles: Vec<VertexSet> = row.bubbles().iter().map(|b| map.expand(b)).collect();
    bubbles.extend(row.ones().iter().map(|k| map.classes[k].clone()));
    Ok(WildcardRow::assemble(
        Kind::G,
        zeros,
        VertexSet::empty(map.width),
        VertexSet::empty(map.width),
        bubbles,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::enumerate_ehs;

    fn h1() -> Hypergraph {
        Hypergraph::from_lists(9, [vec![2, 3, 4, 6], vec![1, 2, 3, 4, 5, 7], vec![2, 8, 9]]).unwrap()
    }

    fn members(rows: &[WildcardRow]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = rows.iter().flat_map(|r| r.members(1 << 16).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn reduces_h1() {
        let (r, map) = reduce_hypergraph(&h1()).unwrap();
        assert_eq!(map.classes().len(), 5);
        // class indices 0..5 stand for the classes of 1, 2, 3, 6, 8
        let lists: Vec<Vec<usize>> = r.edges().iter().map(|e| e.to_one_based()).collect();
        assert_eq!(lists, vec![vec![2, 3, 4], vec![1, 2, 3], vec![2, 5]]);
        assert_eq!(map.representative(4), 7);
    }

    #[test]
    fn table_three_inflates_to_table_one() {
        let (_, map) = reduce_hypergraph(&h1()).unwrap();
        let left: Vec<WildcardRow> = ["1 0 0 1 1", "0 0 1 0 1", "0 1 0 0 0"]
            .iter()
            .map(|t| t.parse().unwrap())
            .collect();
        let inflated = inflate_rows(&left, &map).unwrap();
        let want: Vec<WildcardRow> = [
            "g1 0 0 0 g1 1 g1 g2 g2",
            "0 0 g1 g1 0 0 0 g2 g2",
            "0 1 0 0 0 0 0 0 0",
        ]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
        assert_eq!(inflated, want);
    }

    #[test]
    fn ehs_commutes_with_reduction() {
        let h = h1();
        let direct = enumerate_ehs(&h).unwrap().rows;
        let (r, map) = reduce_hypergraph(&h).unwrap();
        let reduced = enumerate_ehs(&r).unwrap().rows;
        assert_eq!(members(&direct), members(&inflate_rows(&reduced, &map).unwrap()));
    }

    #[test]
    fn identity_on_nondegenerate() {
        let h2 = Hypergraph::from_lists(
            6,
            [vec![1, 2, 5], vec![3, 4], vec![4, 5, 6], vec![1, 3, 5], vec![2, 6]],
        )
        .unwrap();
        let (r, map) = reduce_hypergraph(&h2).unwrap();
        assert!(map.is_identity());
        assert_eq!(r, h2);
    }

    #[test]
    fn refuses_twos() {
        let (_, map) = reduce_hypergraph(&h1()).unwrap();
        let r: WildcardRow = "2 0 0 1 1".parse().unwrap();
        assert!(inflate_rows(&[r], &map).is_err());
    }
}
