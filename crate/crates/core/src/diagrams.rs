//! Noncrossing matchings and matching-and-ray diagrams.
//!
//! Vertices are labelled `1..=n`. A rectangular tableau gives a perfect
//! matching drawn inside a disc; a general two column tableau gives a
//! matching drawn above a baseline together with vertical rays at the
//! unmatched vertices. Both are built by the same greedy rule.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::TwoColumnTableau;

fn normalize_edges(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = edges
        .iter()
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    out.sort_unstable();
    out
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Checks that `edges` and `rays` cover `1..=n` exactly once and that no two
/// edges cross. Returns the partner table indexed by label.
fn check_cover(n: usize, edges: &[(usize, usize)], rays: &[usize]) -> Result<Vec<Option<usize>>> {
    let mut seen = vec![false; n + 1];
    let mut partner = vec![None; n + 1];
    let mut mark = |v: usize| -> Result<()> {
        if v == 0 || v > n {
            return Err(Error::InvalidDiagram(format!("vertex {v} is outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidDiagram(format!("vertex {v} is used twice")));
        }
        Ok(())
    };
    for &(a, b) in edges {
        if a == b {
            return Err(Error::InvalidDiagram(format!("loop at {a}")));
        }
        mark(a)?;
        mark(b)?;
        partner[a] = Some(b);
        partner[b] = Some(a);
    }
    for &r in rays {
        mark(r)?;
    }
    if let Some(v) = (1..=n).find(|&v| !seen[v]) {
        return Err(Error::InvalidDiagram(format!("vertex {v} is not covered")));
    }
    for (idx, &e) in edges.iter().enumerate() {
        if let Some(&f) = edges[idx + 1..].iter().find(|&&f| crosses(e, f)) {
            return Err(Error::InvalidDiagram(format!(
                "edges {{{}, {}}} and {{{}, {}}} cross",
                e.0, e.1, f.0, f.1
            )));
        }
    }
    Ok(partner)
}

/// Greedy matching: each second column entry, in increasing order, is matched
/// with the largest unmatched first column entry below it.
fn greedy_edges(t: &TwoColumnTableau) -> Vec<(usize, usize)> {
    let mut open: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(t.k());
    for j in 1..=t.n() {
        if t.in_col2(j) {
            // b_i >= 2i guarantees an open first column entry exists
            let i = open.pop().expect("standard tableau");
            edges.push((i, j));
        } else {
            open.push(j);
        }
    }
    normalize_edges(&edges)
}

/// A noncrossing perfect matching of `1..=n` placed clockwise on a circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "MatchingRepr")]
pub struct NoncrossingMatching {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct MatchingRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rays: Option<Vec<usize>>,
}

impl From<NoncrossingMatching> for MatchingRepr {
    fn from(m: NoncrossingMatching) -> Self {
        Self {
            n: m.n,
            edges: m.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<DiagramRepr> for NoncrossingMatching {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        if r.rays.as_ref().is_some_and(|rays| !rays.is_empty()) {
            return Err(Error::InvalidDiagram("a perfect matching has no rays".into()));
        }
        Self::new(r.n, r.edges.iter().map(|e| (e[0], e[1])).collect())
    }
}

impl NoncrossingMatching {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidDiagram(format!("a perfect matching needs an even vertex count, got {n}")));
        }
        let edges = normalize_edges(&edges);
        check_cover(n, &edges, &[])?;
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Partner of each label; index 0 is unused.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = vec![0; self.n + 1];
        for &(a, b) in &self.edges {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    /// Labels `i` such that `{i, i+1 mod n}` is an edge, in increasing order.
    /// The arc `{n, 1}` is reported as `n`.
    pub fn short_edges_mod(&self) -> Vec<usize> {
        let p = self.partners();
        (1..=self.n)
            .filter(|&i| p[i] == i % self.n + 1)
            .collect()
    }

    /// Relabels every vertex by `i -> i + 1 (mod n)`.
    pub fn rotate(&self) -> Self {
        let n = self.n;
        let edges = self.edges.iter().map(|&(a, b)| (a % n + 1, b % n + 1)).collect();
        Self::new(n, edges).expect("rotation preserves noncrossing matchings")
    }

    /// Relabels every vertex by `i -> n + 1 - i`.
    pub fn reflect(&self) -> Self {
        let n = self.n;
        let edges = self.edges.iter().map(|&(a, b)| (n + 1 - a, n + 1 - b)).collect();
        Self::new(n, edges).expect("reflection preserves noncrossing matchings")
    }

    /// Inverse of [`matching_from_tableau`]: the larger endpoints form the second column.
    pub fn to_tableau(&self) -> TwoColumnTableau {
        let col2 = self.edges.iter().map(|e| e.1).collect::<std::collections::BTreeSet<_>>();
        TwoColumnTableau::new(self.n, col2.into_iter().collect())
            .expect("noncrossing matchings correspond to standard tableaux")
    }
}

impl From<NoncrossingMatching> for MatchingRayDiagram {
    fn from(m: NoncrossingMatching) -> Self {
        Self {
            n: m.n,
            edges: m.edges,
            rays: Vec::new(),
        }
    }
}

/// Noncrossing arcs above a baseline `1..=n` plus a ray at each unmatched
/// vertex. No ray may sit underneath an arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct MatchingRayDiagram {
    n: usize,
    edges: Vec<(usize, usize)>,
    rays: Vec<usize>,
}

impl From<MatchingRayDiagram> for DiagramRepr {
    fn from(m: MatchingRayDiagram) -> Self {
        Self {
            n: m.n,
            edges: m.edges.iter().map(|&(a, b)| [a, b]).collect(),
            rays: Some(m.rays),
        }
    }
}

impl TryFrom<DiagramRepr> for MatchingRayDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        Self::new(
            r.n,
            r.edges.iter().map(|e| (e[0], e[1])).collect(),
            r.rays.unwrap_or_default(),
        )
    }
}

impl MatchingRayDiagram {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, mut rays: Vec<usize>) -> Result<Self> {
        let edges = normalize_edges(&edges);
        rays.sort_unstable();
        check_cover(n, &edges, &rays)?;
        for &(a, b) in &edges {
            if let Some(&r) = rays.iter().find(|&&r| a < r && r < b) {
                return Err(Error::InvalidDiagram(format!(
                    "ray {r} lies under the arc {{{a}, {b}}}"
                )));
            }
        }
        Ok(Self { n, edges, rays })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of matching edges.
    pub fn k(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    pub fn is_ray(&self, v: usize) -> bool {
        self.rays.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Lower endpoints `i` of the short edges `{i, i+1}`.
    pub fn short_edges(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(a, b)| b == a + 1)
            .map(|e| e.0)
            .collect()
    }

    /// The edges and rays with no endpoint in `{i+1, ..., j}`, where
    /// `{i, i+1}` and `{j, j+1}` are short edges with `i < j`.
    pub fn pseudoclaw(&self, i: usize, j: usize) -> Result<Pseudoclaw> {
        for v in [i, j] {
            if !self.has_edge(v, v + 1) {
                return Err(Error::NotAShortEdge(v));
            }
        }
        if i >= j {
            return Err(Error::InvalidDiagram(format!(
                "pseudoclaw needs i < j, got ({i}, {j})"
            )));
        }
        let outside = |v: usize| v <= i || v > j;
        Ok(Pseudoclaw {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| outside(a) && outside(b))
                .collect(),
            rays: self.rays.iter().copied().filter(|&r| outside(r)).collect(),
        })
    }

    /// Inverse of [`diagram_from_tableau`].
    pub fn to_tableau(&self) -> TwoColumnTableau {
        let mut col2: Vec<usize> = self.edges.iter().map(|e| e.1).collect();
        col2.sort_unstable();
        TwoColumnTableau::new(self.n, col2)
            .expect("matching and ray diagrams correspond to standard tableaux")
    }
}

/// Witness set of a pseudoclaw; its size enters the bundle base formulas.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Pseudoclaw {
    pub edges: Vec<(usize, usize)>,
    pub rays: Vec<usize>,
}

impl Pseudoclaw {
    pub fn len(&self) -> usize {
        self.edges.len() + self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The noncrossing matching of a rectangular tableau.
pub fn matching_from_tableau(t: &TwoColumnTableau) -> Result<NoncrossingMatching> {
    if !t.is_rectangular() {
        return Err(Error::NonRectangularShape { n: t.n(), k: t.k() });
    }
    Ok(NoncrossingMatching {
        n: t.n(),
        edges: greedy_edges(t),
    })
}

/// The matching-and-ray diagram of any two column tableau.
pub fn diagram_from_tableau(t: &TwoColumnTableau) -> MatchingRayDiagram {
    let edges = greedy_edges(t);
    let mut matched = vec![false; t.n() + 1];
    for &(a, b) in &edges {
        matched[a] = true;
        matched[b] = true;
    }
    let rays = (1..=t.n()).filter(|&v| !matched[v]).collect();
    MatchingRayDiagram {
        n: t.n(),
        edges,
        rays,
    }
}
