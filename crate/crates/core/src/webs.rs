//! Degree two `sl_k` hourglass webs.
//!
//! A noncrossing matching on `2k` points is turned into a web in three
//! steps: [`dissect`] collapses the boundary runs between consecutive short
//! arcs into the vertices of a weighted polygon, [`triangulate`] completes
//! the positive chords to a triangulation with weight zero diagonals, and
//! [`web_from_triangulation`] puts a filled vertex in every triangle.
//!
//! Internal vertices are numbered: claws (unfilled) first, then filled.
//! Hourglass multiplicities are stored on the edges; for graph predicates an
//! hourglass of any multiplicity is a single edge of the underlying graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diagrams::{matching_from_tableau, NoncrossingMatching};
use crate::error::{Error, Result};
use crate::tableaux::TwoColumnTableau;

/// An `s`-gon whose vertices are cyclic runs of boundary labels, with
/// weighted chords. Sides of the polygon are chords too.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedPolygon {
    k: usize,
    intervals: Vec<Vec<usize>>,
    chords: BTreeMap<(usize, usize), usize>,
}

impl WeightedPolygon {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of polygon vertices.
    pub fn s(&self) -> usize {
        self.intervals.len()
    }

    /// Boundary labels of each polygon vertex, clockwise.
    pub fn intervals(&self) -> &[Vec<usize>] {
        &self.intervals
    }

    /// Weight of the chord between polygon vertices `u` and `v`, if present.
    pub fn weight(&self, u: usize, v: usize) -> Option<usize> {
        self.chords.get(&(u.min(v), u.max(v))).copied()
    }

    /// All chords as `((u, v), weight)` with `u < v`, including weight zero
    /// diagonals added by triangulation.
    pub fn chords(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.chords.iter().map(|(&e, &w)| (e, w))
    }

    fn is_side(&self, u: usize, v: usize) -> bool {
        let s = self.s();
        (u + 1) % s == v || (v + 1) % s == u
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.is_side(u, v) || self.chords.contains_key(&(u.min(v), u.max(v)))
    }

    fn positive_diagonals(&self) -> Vec<(usize, usize)> {
        self.chords
            .iter()
            .filter(|&(&(u, v), &w)| w > 0 && !self.is_side(u, v))
            .map(|(&e, _)| e)
            .collect()
    }

    fn min_label(&self, v: usize) -> usize {
        *self.intervals[v].iter().min().expect("intervals are nonempty")
    }
}

/// Builds the weighted dissection of a noncrossing matching on `2k >= 4` points.
pub fn dissect(m: &NoncrossingMatching) -> Result<WeightedPolygon> {
    let n = m.n();
    if m.k() < 2 {
        return Err(Error::DegenerateMatching { n });
    }
    let cuts = m.short_edges_mod();
    let s = cuts.len();
    let mut owner = vec![0; n + 1];
    let intervals: Vec<Vec<usize>> = (0..s)
        .map(|j| {
            let start = cuts[j];
            let end = if j + 1 < s { cuts[j + 1] } else { cuts[0] + n };
            (start + 1..=end)
                .map(|t| (t - 1) % n + 1)
                .inspect(|&label| owner[label] = j)
                .collect()
        })
        .collect();
    let mut chords = BTreeMap::new();
    for &(a, b) in m.edges() {
        let (u, v) = (owner[a], owner[b]);
        debug_assert_ne!(u, v, "no matching edge stays inside one interval");
        *chords.entry((u.min(v), u.max(v))).or_insert(0) += 1;
    }
    Ok(WeightedPolygon {
        k: m.k(),
        intervals,
        chords,
    })
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Order in which candidate fan apexes are tried, by the smallest boundary
/// label of each polygon vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApexRule {
    LeastLabel,
    GreatestLabel,
}

/// Canonical triangulation: fan from the least labelled admissible apex.
pub fn triangulate(p: &WeightedPolygon) -> WeightedPolygon {
    triangulate_with(p, ApexRule::LeastLabel)
}

/// Completes the positive chords of `p` to a triangulation.
///
/// A fan from the first admissible apex (one whose diagonals cross no
/// positive chord) is used. When no apex is admissible the polygon is split
/// along its first positive diagonal and each side is handled the same way.
pub fn triangulate_with(p: &WeightedPolygon, rule: ApexRule) -> WeightedPolygon {
    let mut out = p.clone();
    let region: Vec<usize> = (0..p.s()).collect();
    let positive = p.positive_diagonals();
    let mut added = Vec::new();
    fill_region(p, &region, &positive, rule, &mut added);
    for e in added {
        out.chords.entry(e).or_insert(0);
    }
    out
}

fn fill_region(
    p: &WeightedPolygon,
    region: &[usize],
    positive: &[(usize, usize)],
    rule: ApexRule,
    added: &mut Vec<(usize, usize)>,
) {
    let len = region.len();
    if len <= 3 {
        return;
    }
    let mut apexes: Vec<usize> = (0..len).collect();
    apexes.sort_by_key(|&idx| p.min_label(region[idx]));
    if rule == ApexRule::GreatestLabel {
        apexes.reverse();
    }
    let inner: Vec<(usize, usize)> = positive
        .iter()
        .copied()
        .filter(|&(u, v)| region.contains(&u) && region.contains(&v))
        .collect();
    for apex in apexes {
        let fan: Vec<(usize, usize)> = (2..len - 1)
            .map(|off| {
                let (u, v) = (region[apex], region[(apex + off) % len]);
                (u.min(v), u.max(v))
            })
            .collect();
        if fan.iter().all(|&d| inner.iter().all(|&c| !crosses(c, d))) {
            added.extend(fan);
            return;
        }
    }
    // every apex is blocked, so some positive chord is a diagonal of the region
    let (u, v) = inner
        .iter()
        .copied()
        .find(|&(u, v)| {
            let (iu, iv) = (
                region.iter().position(|&x| x == u).unwrap(),
                region.iter().position(|&x| x == v).unwrap(),
            );
            let gap = iu.abs_diff(iv);
            gap > 1 && gap < len - 1
        })
        .expect("a blocked fan implies a positive diagonal");
    let left: Vec<usize> = region.iter().copied().filter(|&x| x >= u && x <= v).collect();
    let right: Vec<usize> = region.iter().copied().filter(|&x| x <= u || x >= v).collect();
    fill_region(p, &left, positive, rule, added);
    fill_region(p, &right, positive, rule, added);
}

/// An unfilled internal vertex together with its boundary labels (clockwise).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Claw {
    pub vertex: usize,
    pub boundary: Vec<usize>,
}

/// An internal edge; `mult >= 2` is drawn as an hourglass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WebEdge {
    pub u: usize,
    pub v: usize,
    pub mult: usize,
}

/// A `k`-valent hourglass web with boundary labels `1..=2k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WebRepr")]
pub struct HourglassWeb {
    k: usize,
    claws: Vec<Claw>,
    filled: Vec<usize>,
    edges: Vec<WebEdge>,
}

#[derive(Deserialize)]
struct WebRepr {
    k: usize,
    claws: Vec<Claw>,
    filled: Vec<usize>,
    edges: Vec<WebEdge>,
}

impl TryFrom<WebRepr> for HourglassWeb {
    type Error = Error;

    fn try_from(r: WebRepr) -> Result<Self> {
        Self::new(r.k, r.claws, r.filled, r.edges)
    }
}

/// Dihedral orbit of a forest web, identified by its least break set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub canonical_breaks: Vec<usize>,
    pub size: usize,
}

impl HourglassWeb {
    /// Validates and normalizes a web: claws are reordered clockwise starting
    /// with the claw that contains label 1, and edges are sorted.
    pub fn new(k: usize, claws: Vec<Claw>, filled: Vec<usize>, edges: Vec<WebEdge>) -> Result<Self> {
        let n = 2 * k;
        if k == 0 {
            return Err(Error::InvalidWeb("k must be positive".into()));
        }
        let mut ids = BTreeSet::new();
        for id in claws.iter().map(|c| c.vertex).chain(filled.iter().copied()) {
            if !ids.insert(id) {
                return Err(Error::InvalidWeb(format!("internal vertex {id} appears twice")));
            }
        }
        let mut covered = vec![false; n + 1];
        for claw in &claws {
            if claw.boundary.is_empty() {
                return Err(Error::InvalidWeb(format!("claw at {} is empty", claw.vertex)));
            }
            for (idx, &label) in claw.boundary.iter().enumerate() {
                if label == 0 || label > n {
                    return Err(Error::InvalidWeb(format!("boundary label {label} outside 1..={n}")));
                }
                if std::mem::replace(&mut covered[label], true) {
                    return Err(Error::InvalidWeb(format!("boundary label {label} is in two claws")));
                }
                if idx > 0 && label != claw.boundary[idx - 1] % n + 1 {
                    return Err(Error::InvalidWeb(format!(
                        "claw at {} is not a clockwise run of labels",
                        claw.vertex
                    )));
                }
            }
        }
        if let Some(label) = (1..=n).find(|&l| !covered[l]) {
            return Err(Error::InvalidWeb(format!("boundary label {label} is in no claw")));
        }
        let mut degree: BTreeMap<usize, usize> = claws.iter().map(|c| (c.vertex, c.boundary.len())).collect();
        for &f in &filled {
            degree.insert(f, 0);
        }
        let mut edges: Vec<WebEdge> = edges
            .into_iter()
            .map(|e| WebEdge {
                u: e.u.min(e.v),
                v: e.u.max(e.v),
                mult: e.mult,
            })
            .collect();
        edges.sort_unstable();
        for (idx, e) in edges.iter().enumerate() {
            if e.u == e.v || e.mult == 0 {
                return Err(Error::InvalidWeb(format!("bad edge {}-{} x{}", e.u, e.v, e.mult)));
            }
            if idx > 0 && (edges[idx - 1].u, edges[idx - 1].v) == (e.u, e.v) {
                return Err(Error::InvalidWeb(format!("edge {}-{} listed twice", e.u, e.v)));
            }
            for end in [e.u, e.v] {
                *degree
                    .get_mut(&end)
                    .ok_or_else(|| Error::InvalidWeb(format!("edge endpoint {end} is not a vertex")))? += e.mult;
            }
        }
        if let Some((id, d)) = degree.iter().find(|&(_, &d)| d != k) {
            return Err(Error::InvalidWeb(format!("internal vertex {id} has degree {d}, expected {k}")));
        }
        if filled.len() != claws.len().saturating_sub(2) {
            return Err(Error::InvalidWeb(format!(
                "{} claws need {} filled vertices, found {}",
                claws.len(),
                claws.len().saturating_sub(2),
                filled.len()
            )));
        }
        let mut web = Self {
            k,
            claws,
            filled,
            edges,
        };
        web.normalize();
        Ok(web)
    }

    fn normalize(&mut self) {
        let n = 2 * self.k;
        // clockwise position of each claw's first label, measured from 1;
        // a claw wrapping past n starts "before" 1
        let key = |c: &Claw| {
            let first = c.boundary[0];
            if c.boundary.contains(&1) {
                0
            } else {
                first + n
            }
        };
        self.claws.sort_by_key(key);
        self.filled.sort_unstable();
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Claws in clockwise order, starting with the claw containing label 1.
    pub fn claws(&self) -> &[Claw] {
        &self.claws
    }

    pub fn filled(&self) -> &[usize] {
        &self.filled
    }

    pub fn edges(&self) -> &[WebEdge] {
        &self.edges
    }

    /// Hourglass multiplicity between two internal vertices, zero if absent.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let (u, v) = (a.min(b), a.max(b));
        self.edges
            .iter()
            .find(|e| e.u == u && e.v == v)
            .map_or(0, |e| e.mult)
    }

    pub fn claw_sizes(&self) -> Vec<usize> {
        self.claws.iter().map(|c| c.boundary.len()).collect()
    }

    /// Index into [`Self::claws`] of the claw holding `label`.
    pub fn claw_index_of(&self, label: usize) -> usize {
        self.claws
            .iter()
            .position(|c| c.boundary.contains(&label))
            .expect("claws partition the boundary")
    }

    /// Arcs `(j, j+1 mod 2k)` whose ends lie in different claws.
    pub fn breaks(&self) -> Vec<(usize, usize)> {
        let n = 2 * self.k;
        (1..=n)
            .map(|j| (j, j % n + 1))
            .filter(|&(a, b)| self.claw_index_of(a) != self.claw_index_of(b))
            .collect()
    }

    /// Lower labels of the breaks.
    pub fn break_set(&self) -> Vec<usize> {
        self.breaks().into_iter().map(|b| b.0).collect()
    }

    /// The first claw clockwise from the arc `(2k, 1)` that does not contain `2k`.
    pub fn first_claw(&self) -> &Claw {
        let n = 2 * self.k;
        if self.claw_index_of(1) != self.claw_index_of(n) {
            &self.claws[self.claw_index_of(1)]
        } else {
            &self.claws[(self.claw_index_of(1) + 1) % self.claws.len()]
        }
    }

    /// The claws in clockwise order starting from [`Self::first_claw`].
    pub fn claws_from_first(&self) -> Vec<&Claw> {
        let n = 2 * self.k;
        let start = if self.claw_index_of(1) != self.claw_index_of(n) { 0 } else { 1 };
        let s = self.claws.len();
        (0..s).map(|i| &self.claws[(start + i) % s]).collect()
    }

    fn internal_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.claws.iter().map(|c| c.vertex).chain(self.filled.iter().copied()).collect();
        ids.sort_unstable();
        ids
    }

    fn adjacency(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = self.internal_ids().into_iter().map(|id| (id, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.u).unwrap().push(e.v);
            adj.get_mut(&e.v).unwrap().push(e.u);
        }
        adj
    }

    /// A cycle of internal vertices in the underlying graph, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = self.internal_ids().into_iter().map(|id| (id, Vec::new())).collect();
        for e in &self.edges {
            if let Some(mut path) = bfs_path(&adj, e.u, e.v) {
                // path runs u .. v; the edge v-u closes it
                path.dedup();
                return Some(path);
            }
            adj.get_mut(&e.u).unwrap().push(e.v);
            adj.get_mut(&e.v).unwrap().push(e.u);
        }
        None
    }

    /// True when `cycle` lists distinct internal vertices, consecutive ones
    /// (cyclically) joined by an edge.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let distinct: BTreeSet<_> = cycle.iter().collect();
        cycle.len() >= 3
            && distinct.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.multiplicity(cycle[i], cycle[(i + 1) % cycle.len()]) > 0)
    }

    /// Whether the underlying graph (boundary vertices included) has no cycle.
    pub fn is_forest(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Connected components of the underlying graph. Boundary vertices hang
    /// off their claws and never add components.
    pub fn components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &start in adj.keys() {
            if !seen.insert(start) {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[&x] {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected()
    }

    fn relabel(&self, f: impl Fn(usize) -> usize, reverse: bool) -> Self {
        let claws = self
            .claws
            .iter()
            .map(|c| {
                let mut boundary: Vec<usize> = c.boundary.iter().map(|&l| f(l)).collect();
                if reverse {
                    boundary.reverse();
                }
                Claw {
                    vertex: c.vertex,
                    boundary,
                }
            })
            .collect();
        let mut web = Self {
            k: self.k,
            claws,
            filled: self.filled.clone(),
            edges: self.edges.clone(),
        };
        web.normalize();
        web
    }

    /// Clockwise rotation: boundary label `i` becomes `i + 1 (mod 2k)`.
    pub fn rotate(&self) -> Self {
        let n = 2 * self.k;
        self.relabel(|l| l % n + 1, false)
    }

    /// Reflection: boundary label `i` becomes `2k + 1 - i`.
    pub fn reflect(&self) -> Self {
        let n = 2 * self.k;
        self.relabel(|l| n + 1 - l, true)
    }

    /// Dihedral orbit of a forest web. Forest webs are determined by their
    /// breaks, so the orbit is tracked through break sets.
    pub fn dihedral_orbit(&self) -> Result<OrbitInfo> {
        if !self.is_forest() {
            return Err(Error::NonForestWeb);
        }
        let n = 2 * self.k;
        let base = self.break_set();
        let rotate = |set: &[usize], r: usize| -> Vec<usize> {
            let mut out: Vec<usize> = set.iter().map(|&j| (j - 1 + r) % n + 1).collect();
            out.sort_unstable();
            out
        };
        let reflected: Vec<usize> = base.iter().map(|&j| if j == n { n } else { n - j }).collect();
        let images: BTreeSet<Vec<usize>> = (0..n)
            .flat_map(|r| [rotate(&base, r), rotate(&reflected, r)])
            .collect();
        Ok(OrbitInfo {
            canonical_breaks: images.iter().next().cloned().unwrap_or_default(),
            size: images.len(),
        })
    }
}

fn bfs_path(adj: &BTreeMap<usize, Vec<usize>>, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[&x] {
            if let std::collections::btree_map::Entry::Vacant(slot) = prev.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    None
}

/// Places a filled vertex in every triangle of a triangulated polygon.
///
/// The edge from a filled vertex toward corner `v` carries the weight of the
/// opposite side plus every chord on the far side of it.
pub fn web_from_triangulation(p: &WeightedPolygon) -> HourglassWeb {
    let s = p.s();
    let claws: Vec<Claw> = p
        .intervals
        .iter()
        .enumerate()
        .map(|(id, labels)| Claw {
            vertex: id,
            boundary: labels.clone(),
        })
        .collect();
    let mut filled = Vec::new();
    let mut edges = Vec::new();
    if s >= 3 {
        let mut next_id = s;
        for a in 0..s {
            for b in a + 1..s {
                for c in b + 1..s {
                    if !(p.adjacent(a, b) && p.adjacent(b, c) && p.adjacent(a, c)) {
                        continue;
                    }
                    let face = next_id;
                    next_id += 1;
                    filled.push(face);
                    for (corner, u, w) in [(a, b, c), (b, a, c), (c, a, b)] {
                        let mult = far_side_weight(p, corner, u, w);
                        if mult > 0 {
                            edges.push(WebEdge { u: corner, v: face, mult });
                        }
                    }
                }
            }
        }
    }
    HourglassWeb::new(p.k, claws, filled, edges).expect("construction yields a valid web")
}

/// Total chord weight in the part of the polygon cut off by side `{u, w}`
/// away from `corner`, the side itself included.
fn far_side_weight(p: &WeightedPolygon, corner: usize, u: usize, w: usize) -> usize {
    let (lo, hi) = (u.min(w), u.max(w));
    let inside = |x: usize| x >= lo && x <= hi;
    let region: Vec<bool> = if inside(corner) {
        (0..p.s()).map(|x| !inside(x) || x == lo || x == hi).collect()
    } else {
        (0..p.s()).map(inside).collect()
    };
    p.chords
        .iter()
        .filter(|&(&(x, y), _)| region[x] && region[y])
        .map(|(_, &wt)| wt)
        .sum()
}

/// The web of a noncrossing matching, using the canonical triangulation.
pub fn web_from_matching(m: &NoncrossingMatching) -> Result<HourglassWeb> {
    Ok(web_from_triangulation(&triangulate(&dissect(m)?)))
}

/// The web `W_T` of a rectangular tableau.
pub fn web_from_tableau(t: &TwoColumnTableau) -> Result<HourglassWeb> {
    web_from_matching(&matching_from_tableau(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn web(col2: &[usize]) -> HourglassWeb {
        web_from_tableau(&TwoColumnTableau::rectangular(col2.to_vec()).unwrap()).unwrap()
    }

    fn boundaries(w: &HourglassWeb) -> Vec<Vec<usize>> {
        w.claws().iter().map(|c| c.boundary.clone()).collect()
    }

    #[test]
    fn running_example_dissection() {
        let m = matching_from_tableau(&TwoColumnTableau::rectangular(vec![3, 4, 6, 8, 10]).unwrap()).unwrap();
        let p = dissect(&m).unwrap();
        assert_eq!(
            p.intervals(),
            &[vec![3, 4, 5], vec![6, 7], vec![8, 9], vec![10, 1, 2]]
        );
        // edges {2,3},{1,4},{5,6},{7,8},{9,10}
        assert_eq!(p.weight(0, 3), Some(2));
        assert_eq!(p.weight(0, 1), Some(1));
        assert_eq!(p.weight(1, 2), Some(1));
        assert_eq!(p.weight(2, 3), Some(1));
        assert_eq!(p.weight(0, 2), None);
        assert_eq!(p.weight(1, 3), None);
        let t = triangulate(&p);
        let zero: Vec<_> = t.chords().filter(|&(_, w)| w == 0).map(|(e, _)| e).collect();
        // apex holding label 1 is polygon vertex 3
        assert_eq!(zero, vec![(1, 3)]);
        let alt = triangulate_with(&p, ApexRule::GreatestLabel);
        let zero: Vec<_> = alt.chords().filter(|&(_, w)| w == 0).map(|(e, _)| e).collect();
        assert_eq!(zero, vec![(0, 2)]);
    }

    #[test]
    fn running_example_webs() {
        let w = web(&[3, 4, 6, 8, 10]);
        assert_eq!(boundaries(&w), vec![vec![10, 1, 2], vec![3, 4, 5], vec![6, 7], vec![8, 9]]);
        assert_eq!(w.filled().len(), 2);
        assert!(!w.is_forest());
        assert_eq!(w.first_claw().boundary, vec![3, 4, 5]);
        let cycle = w.find_cycle().unwrap();
        assert!(w.is_cycle(&cycle));
    }

    #[test]
    fn two_claw_webs_have_no_internal_edges() {
        for k in 2..=6 {
            let w = web(&(k + 1..=2 * k).collect::<Vec<_>>());
            assert_eq!(w.claws().len(), 2);
            assert!(w.edges().is_empty());
            assert!(w.filled().is_empty());
            assert_eq!(w.breaks(), vec![(k, k + 1), (2 * k, 1)]);
            assert!(w.is_forest());
            assert!(!w.is_tree());
            assert_eq!(w.components(), 2);
        }
    }

    #[test]
    fn three_row_webs() {
        let w = web(&[2, 4, 6]);
        assert_eq!(boundaries(&w), vec![vec![6, 1], vec![2, 3], vec![4, 5]]);
        assert!(w.is_tree());
        assert_eq!(w.edges().iter().map(|e| e.mult).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn eight_row_tree_example() {
        let w = web(&[2, 9, 10, 12, 13, 14, 15, 16]);
        assert!(w.is_tree());
        assert_eq!(w.claws().len(), 3);
        assert_eq!(w.first_claw().boundary, (2..=8).collect::<Vec<_>>());
        let second = w.claws_from_first()[1];
        assert_eq!(second.boundary, vec![9, 10, 11]);
        assert_eq!(w.multiplicity(second.vertex, w.filled()[0]), 5);
    }

    #[test]
    fn rotation_and_reflection() {
        let w = web(&[3, 4, 6]);
        assert_eq!(boundaries(&w), vec![vec![6, 1, 2], vec![3, 4, 5]]);
        let r = w.rotate();
        assert_eq!(boundaries(&r), vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(r, web(&[4, 5, 6]));
        let f = w.reflect();
        assert_eq!(boundaries(&f), vec![vec![5, 6, 1], vec![2, 3, 4]]);
        assert_eq!(f, web(&[2, 5, 6]));
        assert_eq!(f.reflect(), w);
    }

    #[test]
    fn orbit_of_two_claw_webs() {
        let a = web(&[4, 5, 6]).dihedral_orbit().unwrap();
        let b = web(&[3, 4, 6]).dihedral_orbit().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.size, 3);
        assert_eq!(a.canonical_breaks, vec![1, 4]);
        assert_eq!(web(&[3, 4, 6, 8, 10]).dihedral_orbit(), Err(Error::NonForestWeb));
    }

    #[test]
    fn degenerate_matching() {
        let m = NoncrossingMatching::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(dissect(&m), Err(Error::DegenerateMatching { n: 2 }));
    }

    #[test]
    fn web_validation() {
        let claw = |vertex, boundary: Vec<usize>| Claw { vertex, boundary };
        assert!(HourglassWeb::new(2, vec![claw(0, vec![1, 2]), claw(1, vec![3, 4])], vec![], vec![]).is_ok());
        // valence
        assert!(HourglassWeb::new(2, vec![claw(0, vec![1]), claw(1, vec![2, 3, 4])], vec![], vec![]).is_err());
        // not a run
        assert!(HourglassWeb::new(2, vec![claw(0, vec![1, 3]), claw(1, vec![2, 4])], vec![], vec![]).is_err());
        // wrapping run is fine
        assert!(HourglassWeb::new(2, vec![claw(0, vec![4, 1]), claw(1, vec![2, 3])], vec![], vec![]).is_ok());
        // uncovered label
        assert!(HourglassWeb::new(2, vec![claw(0, vec![1, 2])], vec![], vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let w = web(&[2, 9, 10, 12, 13, 14, 15, 16]);
        let json = serde_json::to_string(&w).unwrap();
        let back: HourglassWeb = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(json.starts_with(r#"{"k":8,"claws":[{"vertex":"#));
    }
}
