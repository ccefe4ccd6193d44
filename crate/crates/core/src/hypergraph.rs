//! Hypergraphs, explicit set families and their shared text format.
//!
//! The file format is line oriented:
//!
//! ```text
//! # comments run to the end of the line
//! 6 5
//! 1 2 5
//! 3 4
//! 4 5 6
//! 1 3 5
//! 2 6
//! ```
//!
//! The header gives the width `w` and the number of members; each following
//! non-blank line lists the 1-based vertices of one member.

use std::fmt::{self, Write as _};

use crate::bits::VertexSet;
use crate::error::{Error, Result};

/// An explicit, ordered collection of subsets of `[w]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    width: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(width: usize) -> Self {
        SetFamily {
            width,
            members: Vec::new(),
        }
    }

    pub fn from_members(width: usize, members: Vec<VertexSet>) -> Result<Self> {
        for m in &members {
            if m.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: m.width(),
                });
            }
        }
        Ok(SetFamily { width, members })
    }

    /// Convenience constructor from 1-based label lists.
    pub fn from_lists<I, J>(width: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let mut fam = SetFamily::new(width);
        for (k, list) in lists.into_iter().enumerate() {
            let set = VertexSet::from_one_based(width, list).ok_or_else(|| Error::Parse {
                line: k + 1,
                msg: format!("vertex out of range 1..={width}"),
            })?;
            fam.members.push(set);
        }
        Ok(fam)
    }

    pub fn push(&mut self, set: VertexSet) {
        debug_assert_eq!(set.width(), self.width);
        self.members.push(set);
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    pub fn into_members(self) -> Vec<VertexSet> {
        self.members
    }

    /// Members as sorted 1-based lists, sorted lexicographically. Handy for
    /// order-independent comparisons.
    pub fn sorted_lists(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.members.iter().map(|m| m.to_one_based()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Parses the shared text format.
    pub fn parse(text: &str) -> Result<Self> {
        let (width, members) = parse_lines(text, false)?;
        Ok(SetFamily { width, members })
    }

    pub fn to_text(&self) -> String {
        write_text(self.width, &self.members, None)
    }

    /// Same as [`SetFamily::to_text`] with extra `#` comment lines on top.
    pub fn to_text_with_header(&self, header: &[String]) -> String {
        write_text(self.width, &self.members, Some(header))
    }
}

/// Serialized as its width and the 1-based member lists, in order.
impl serde::Serialize for SetFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SetFamily", 2)?;
        st.serialize_field("width", &self.width)?;
        let lists: Vec<Vec<usize>> = self.members.iter().map(|m| m.to_one_based()).collect();
        st.serialize_field("members", &lists)?;
        st.end()
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// A finite hypergraph on `[w]`: an ordered sequence of nonempty hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    width: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting empty hyperedges and width mismatches.
    pub fn new(width: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if width == 0 {
            return Err(Error::Parse {
                line: 1,
                msg: "width must be positive".into(),
            });
        }
        for (i, e) in edges.iter().enumerate() {
            if e.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: e.width(),
                });
            }
            if e.is_empty() {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: "empty hyperedge".into(),
                });
            }
        }
        Ok(Hypergraph { width, edges })
    }

    /// Builds a hypergraph from 1-based vertex lists.
    pub fn from_lists<I, J>(width: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let fam = SetFamily::from_lists(width, lists)?;
        Hypergraph::new(width, fam.members)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    /// Vertices (0-based) lying in no hyperedge.
    pub fn uncovered(&self) -> Vec<usize> {
        let mut cover = VertexSet::empty(self.width);
        for e in &self.edges {
            cover.union_with(e);
        }
        cover.complement().iter().collect()
    }

    /// True iff the hyperedges cover `[w]`.
    pub fn is_full(&self) -> bool {
        self.uncovered().is_empty()
    }

    pub(crate) fn require_full(&self) -> Result<()> {
        let missing = self.uncovered();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::NotFull(missing.into_iter().map(|v| v + 1).collect()))
        }
    }

    /// True iff `x` meets every hyperedge.
    pub fn is_hitting_set(&self, x: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(x))
    }

    /// True iff `x` meets every hyperedge in exactly one vertex.
    pub fn is_exact_hitting_set(&self, x: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersection_len(x) == 1)
    }

    pub fn as_family(&self) -> SetFamily {
        SetFamily {
            width: self.width,
            members: self.edges.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (width, edges) = parse_lines(text, true)?;
        Ok(Hypergraph { width, edges })
    }

    pub fn to_text(&self) -> String {
        write_text(self.width, &self.edges, None)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_lines(text: &str, hyperedges: bool) -> Result<(usize, Vec<VertexSet>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `w h`".into(),
    })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `w h`".into(),
        });
    }
    let parse_num = |s: &str| -> Result<i64> {
        s.parse::<i64>().map_err(|_| Error::Parse {
            line: hline,
            msg: format!("not an integer: `{s}`"),
        })
    };
    let w = parse_num(nums[0])?;
    let h = parse_num(nums[1])?;
    if w <= 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "width must be positive".into(),
        });
    }
    if h < 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "member count must be nonnegative".into(),
        });
    }
    let (w, h) = (w as usize, h as usize);

    let mut members = Vec::with_capacity(h);
    for (lineno, line) in lines {
        if members.len() == h {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("more than the declared {h} members"),
            });
        }
        let mut set = VertexSet::empty(w);
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("not a vertex: `{tok}`"),
            })?;
            if v == 0 || v > w {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range 1..={w}"),
                });
            }
            if set.contains(v - 1) {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} repeated"),
                });
            }
            set.insert(v - 1);
        }
        if hyperedges && set.is_empty() {
            return Err(Error::Parse {
                line: lineno,
                msg: "empty hyperedge".into(),
            });
        }
        members.push(set);
    }
    if members.len() != h {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {h} members, found {}", members.len()),
        });
    }
    Ok((w, members))
}

fn write_text(width: usize, members: &[VertexSet], header: Option<&[String]>) -> String {
    let mut out = String::new();
    if let Some(header) = header {
        for line in header {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", width, members.len());
    for m in members {
        let labels: Vec<String> = m.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_h2() {
        let h = Hypergraph::parse("6 5\n1 2 5\n3 4\n4 5 6\n1 3 5\n2 6\n").unwrap();
        assert_eq!(h.width(), 6);
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.edge(0).to_one_based(), vec![1, 2, 5]);
        assert!(h.is_full());
    }

    #[test]
    fn parses_h1_with_comments() {
        let text = "# H1\n9 3   # three edges\n2 3 4 6\n\n1 2 3 4 5 7\n2 8 9\n";
        let h = Hypergraph::parse(text).unwrap();
        assert_eq!(h.edge(1).to_one_based(), vec![1, 2, 3, 4, 5, 7]);
        assert!(h.is_full());
    }

    #[test]
    fn rejects_bad_input() {
        let err = Hypergraph::parse("3 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        assert!(Hypergraph::parse("0 1\n1\n").is_err());
        assert!(Hypergraph::parse("-2 1\n1\n").is_err());
        assert!(Hypergraph::parse("3 2\n1 2\n").is_err());
        assert!(Hypergraph::parse("3 1\n1 2\n3\n").is_err());
        assert!(Hypergraph::parse("3 1\n1 x\n").is_err());
        assert!(Hypergraph::parse("3 1\n1 1\n").is_err());
        assert!(Hypergraph::parse("").is_err());
    }

    #[test]
    fn not_full_is_reported() {
        let h = Hypergraph::from_lists(4, [vec![1, 2], vec![2]]).unwrap();
        assert!(!h.is_full());
        assert_eq!(h.require_full(), Err(Error::NotFull(vec![3, 4])));
    }

    #[test]
    fn round_trip() {
        let h = Hypergraph::from_lists(7, [vec![1, 7], vec![2, 3, 4], vec![5, 6]]).unwrap();
        assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
        let f = SetFamily::from_lists(5, [vec![1, 5], vec![2]]).unwrap();
        let text = f.to_text_with_header(&["cache".to_string()]);
        assert!(text.starts_with("# cache\n5 2\n"));
        assert_eq!(SetFamily::parse(&text).unwrap(), f);
    }
}
