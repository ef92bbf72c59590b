//! Iterated fiber bundle bases of smooth components.
//!
//! Three routes produce a base: from the `(a, b, c)` triple of the tableau,
//! from the claws of a forest web, and from the short edges and pseudoclaws
//! of a matching-and-ray diagram. After point factors are dropped they agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{smooth_by_diagram, smooth_by_tableau_general};
use crate::diagrams::MatchingRayDiagram;
use crate::error::{Error, Result};
use crate::tableaux::{TwoColumnShape, TwoColumnTableau};
use crate::webs::HourglassWeb;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum BundleFactor {
    /// `P^n`, lines in `C^(n+1)`.
    #[serde(rename = "P")]
    Projective { n: usize },
    /// `Gr_d(n)`, `d`-planes in `C^n`.
    #[serde(rename = "Gr")]
    Grassmannian { d: usize, n: usize },
    /// Complete flags in `C^n`.
    #[serde(rename = "Fl")]
    Flag { n: usize },
    #[serde(rename = "Prod")]
    Product { factors: Vec<BundleFactor> },
}

impl BundleFactor {
    pub fn projective(n: usize) -> Self {
        Self::Projective { n }
    }

    pub fn grassmannian(d: usize, n: usize) -> Self {
        assert!(d <= n, "Gr_{d}({n}) is empty");
        Self::Grassmannian { d, n }
    }

    pub fn flag(n: usize) -> Self {
        Self::Flag { n }
    }

    pub fn product(factors: Vec<BundleFactor>) -> Self {
        Self::Product { factors }
    }

    /// Complex dimension.
    pub fn dimension(&self) -> usize {
        match self {
            Self::Projective { n } => *n,
            Self::Grassmannian { d, n } => d * (n - d),
            Self::Flag { n } => n * n.saturating_sub(1) / 2,
            Self::Product { factors } => factors.iter().map(Self::dimension).sum(),
        }
    }

    pub fn is_point(&self) -> bool {
        match self {
            Self::Product { factors } => factors.iter().all(Self::is_point),
            other => other.dimension() == 0,
        }
    }

    /// Drops point members of products, flattens nested products and unwraps
    /// products with a single member. Returns `None` for a point.
    fn canonical(&self) -> Option<Self> {
        match self {
            Self::Product { factors } => {
                let mut members = Vec::new();
                for f in factors {
                    match f.canonical() {
                        Some(Self::Product { factors }) => members.extend(factors),
                        Some(other) => members.push(other),
                        None => {}
                    }
                }
                match members.len() {
                    0 => None,
                    1 => members.pop(),
                    _ => Some(Self::Product { factors: members }),
                }
            }
            other if other.is_point() => None,
            other => Some(other.clone()),
        }
    }

    /// Same factor with product members sorted, for order-free comparison.
    fn sorted(&self) -> Self {
        match self {
            Self::Product { factors } => {
                let mut factors: Vec<_> = factors.iter().map(Self::sorted).collect();
                factors.sort();
                Self::Product { factors }
            }
            other => other.clone(),
        }
    }
}

impl fmt::Display for BundleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Projective { n } => write!(f, "P^{n}"),
            Self::Grassmannian { d, n } => write!(f, "Gr_{d}({n})"),
            Self::Flag { n } => write!(f, "Fl({n})"),
            Self::Product { factors } => {
                for (idx, x) in factors.iter().enumerate() {
                    if idx > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// Base `(B_1, ..., B_m)` of an iterated fiber bundle, innermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BundleBase(pub Vec<BundleFactor>);

impl BundleBase {
    pub fn factors(&self) -> &[BundleFactor] {
        &self.0
    }

    /// Total dimension of the bundle, the sum over its base.
    pub fn dimension(&self) -> usize {
        self.0.iter().map(BundleFactor::dimension).sum()
    }

    /// Removes every factor that is a point.
    pub fn canonicalize(&self) -> Self {
        Self(self.0.iter().filter_map(BundleFactor::canonical).collect())
    }

    /// Equality of canonical forms, with the members of each product
    /// compared as a multiset.
    pub fn equivalent(&self, other: &Self) -> bool {
        let key = |b: &Self| -> Vec<BundleFactor> {
            b.canonicalize().0.iter().map(BundleFactor::sorted).collect()
        };
        key(self) == key(other)
    }
}

impl fmt::Display for BundleBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The `(a, b, c)` data of a smooth tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FmsoTriple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl FmsoTriple {
    pub fn sum(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn sorted(&self) -> [usize; 3] {
        let mut v = [self.a, self.b, self.c];
        v.sort_unstable();
        v
    }
}

fn to_usize(x: isize) -> usize {
    usize::try_from(x).expect("triple entries of a smooth tableau are nonnegative")
}

/// The `(a, b, c)` triple, with `a + b + c` equal to the first column length.
///
/// For a non-rectangular shape with `|tau*| = 2` and `n` in the first column
/// the triple is `((n-k) - (beta-alpha), k - alpha, beta - k)`.
pub fn fmso_triple(t: &TwoColumnTableau) -> Result<FmsoTriple> {
    if !smooth_by_tableau_general(t).smooth {
        return Err(Error::SingularComponent);
    }
    let n = t.n() as isize;
    let k = t.k() as isize;
    let first = n - k;
    let tau: Vec<isize> = t.tau_star().into_iter().map(|x| x as isize).collect();
    let (a, b, c) = match *tau.as_slice() {
        [alpha] => (alpha - k, k, first - alpha),
        [alpha, beta] if !t.in_col2(t.n()) => (first - (beta - alpha), k - alpha, beta - k),
        [alpha, beta] => (first - (beta - alpha), beta - first, first - alpha),
        [alpha, beta, gamma] => (
            first - (gamma - beta),
            (gamma - alpha) - first,
            first - (beta - alpha),
        ),
        _ => return Err(Error::SingularComponent),
    };
    Ok(FmsoTriple {
        a: to_usize(a),
        b: to_usize(b),
        c: to_usize(c),
    })
}

fn projective_run(from: usize, to_inclusive: isize) -> impl Iterator<Item = BundleFactor> {
    let to = usize::try_from(to_inclusive + 1).unwrap_or(0);
    (from..to).map(BundleFactor::projective)
}

/// `(Fl(a+b) x Fl(b+c), Gr_a(a+c), P^b, ..., P^(k-1))`, not canonicalized.
pub fn base_from_triple(t: &TwoColumnTableau) -> Result<BundleBase> {
    let FmsoTriple { a, b, c } = fmso_triple(t)?;
    let mut factors = vec![
        BundleFactor::product(vec![BundleFactor::flag(a + b), BundleFactor::flag(b + c)]),
        BundleFactor::grassmannian(a, a + c),
    ];
    factors.extend(projective_run(b, t.k() as isize - 1));
    Ok(BundleBase(factors))
}

/// Base of the component of a forest web, read off its claws.
pub fn base_from_web(w: &HourglassWeb) -> Result<BundleBase> {
    if !w.is_forest() {
        return Err(Error::NonForestWeb);
    }
    let k = w.k();
    let claws = w.claws_from_first();
    let mut factors = Vec::new();
    match claws.len() {
        2 => {
            let holder = &w.claws()[w.claw_index_of(1)];
            let start = holder.boundary.iter().position(|&l| l == 1).unwrap();
            let i = holder.boundary[start..]
                .iter()
                .zip(1..)
                .take_while(|&(&l, want)| l == want)
                .count();
            factors.push(BundleFactor::product(vec![BundleFactor::flag(i), BundleFactor::flag(k)]));
            factors.extend(projective_run(i, k as isize - 1));
        }
        3 => {
            let (i, j, m) = (
                claws[0].boundary.len(),
                claws[1].boundary.len(),
                claws[2].boundary.len(),
            );
            let filled = w.filled()[0];
            let ell = w.multiplicity(claws[1].vertex, filled);
            factors.push(BundleFactor::product(vec![BundleFactor::flag(i), BundleFactor::flag(j)]));
            factors.push(BundleFactor::grassmannian(ell, m));
            factors.extend(projective_run(k - m, k as isize - 1));
        }
        // a forest web has two or three claws
        _ => return Err(Error::NonForestWeb),
    }
    Ok(BundleBase(factors))
}

/// Base of a smooth component from its matching-and-ray diagram.
pub fn base_from_diagram(m: &MatchingRayDiagram) -> Result<BundleBase> {
    if !smooth_by_diagram(m).smooth {
        return Err(Error::SingularComponent);
    }
    let n = m.n();
    let k = m.k();
    let r = m.rays().len();
    let top = k as isize - 1;
    let short = m.short_edges();
    let mut factors = Vec::new();
    match *short.as_slice() {
        [i] => {
            let ell = m.rays().iter().filter(|&&v| v <= i).count();
            factors.push(BundleFactor::product(vec![BundleFactor::flag(i), BundleFactor::flag(n - i)]));
            factors.push(BundleFactor::grassmannian(ell, r));
        }
        [i, j] => {
            let ell = m.pseudoclaw(i, j)?.len();
            if m.is_ray(n) {
                factors.push(BundleFactor::product(vec![BundleFactor::flag(n - j), BundleFactor::flag(j - i)]));
                factors.push(BundleFactor::grassmannian(ell, r + i));
                factors.extend(projective_run(k - i, top));
            } else {
                factors.push(BundleFactor::product(vec![BundleFactor::flag(i), BundleFactor::flag(j - i)]));
                factors.push(BundleFactor::grassmannian(ell, r + n - j));
                factors.extend(projective_run(j - (r + k), top));
            }
        }
        [i, j, h] => {
            let ell = m.pseudoclaw(j, h)?.len();
            factors.push(BundleFactor::product(vec![BundleFactor::flag(j - i), BundleFactor::flag(h - j)]));
            factors.push(BundleFactor::grassmannian(ell, n + r - (h - i)));
            factors.extend(projective_run((h - i) - (r + k), top));
        }
        _ => return Err(Error::SingularComponent),
    }
    Ok(BundleBase(factors))
}

/// `sum (i - 1) * eta_i` over the rows of the shape.
pub fn springer_dimension(shape: TwoColumnShape) -> usize {
    shape
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &len)| i * len)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::diagram_from_tableau;
    use crate::webs::web_from_tableau;

    fn fl(n: usize) -> BundleFactor {
        BundleFactor::flag(n)
    }

    fn p(n: usize) -> BundleFactor {
        BundleFactor::projective(n)
    }

    fn prod(a: BundleFactor, b: BundleFactor) -> BundleFactor {
        BundleFactor::product(vec![a, b])
    }

    #[test]
    fn dimensions_and_points() {
        assert_eq!(p(3).dimension(), 3);
        assert_eq!(BundleFactor::grassmannian(2, 5).dimension(), 6);
        assert_eq!(fl(4).dimension(), 6);
        assert_eq!(prod(fl(3), p(2)).dimension(), 5);
        for point in [p(0), fl(0), fl(1), BundleFactor::grassmannian(0, 4), BundleFactor::grassmannian(4, 4), BundleFactor::product(vec![])] {
            assert!(point.is_point(), "{point}");
        }
        assert!(!p(1).is_point());
    }

    #[test]
    fn canonicalize_drops_points() {
        let b = BundleBase(vec![
            prod(fl(1), fl(3)),
            BundleFactor::grassmannian(0, 2),
            p(0),
            fl(1),
            fl(0),
            BundleFactor::grassmannian(3, 3),
            p(2),
        ]);
        assert_eq!(b.canonicalize(), BundleBase(vec![fl(3), p(2)]));
        assert!(BundleBase(vec![prod(fl(2), fl(4))]).equivalent(&BundleBase(vec![prod(fl(4), fl(2))])));
        assert!(!BundleBase(vec![p(1), p(2)]).equivalent(&BundleBase(vec![p(2), p(1)])));
    }

    #[test]
    fn springer_dimensions() {
        assert_eq!(springer_dimension(TwoColumnShape::new(5, 2).unwrap()), 4);
        assert_eq!(springer_dimension(TwoColumnShape::new(8, 3).unwrap()), 13);
        for k in 1..=8 {
            assert_eq!(springer_dimension(TwoColumnShape::rectangle(k).unwrap()), k * (k - 1));
        }
    }

    #[test]
    fn eight_row_tree() {
        let t = TwoColumnTableau::rectangular(vec![2, 9, 10, 12, 13, 14, 15, 16]).unwrap();
        assert_eq!(fmso_triple(&t).unwrap(), FmsoTriple { a: 5, b: 2, c: 1 });
        let mut expected = vec![prod(fl(7), fl(3)), BundleFactor::grassmannian(5, 6)];
        expected.extend((2..=7).map(p));
        let expected = BundleBase(expected);
        assert_eq!(base_from_triple(&t).unwrap(), expected);
        assert_eq!(base_from_web(&web_from_tableau(&t).unwrap()).unwrap(), expected);
        assert_eq!(expected.to_string(), "(Fl(7) x Fl(3), Gr_5(6), P^2, P^3, P^4, P^5, P^6, P^7)");
    }

    #[test]
    fn forest_not_tree_web() {
        let t = TwoColumnTableau::rectangular(vec![4, 5, 6, 9, 10]).unwrap();
        let w = web_from_tableau(&t).unwrap();
        assert_eq!(w.components(), 2);
        let base = base_from_web(&w).unwrap();
        assert_eq!(base, BundleBase(vec![prod(fl(3), fl(5)), p(3), p(4)]));
    }

    #[test]
    fn nested_rectangle_is_flag_squared() {
        for k in 2..=6 {
            let t = TwoColumnTableau::rectangular((k + 1..=2 * k).collect()).unwrap();
            assert_eq!(fmso_triple(&t).unwrap(), FmsoTriple { a: 0, b: k, c: 0 });
            let canon = BundleBase(vec![prod(fl(k), fl(k))]);
            assert_eq!(base_from_triple(&t).unwrap().canonicalize(), canon);
            assert_eq!(base_from_web(&web_from_tableau(&t).unwrap()).unwrap().canonicalize(), canon);
        }
    }

    #[test]
    fn five_three_diagrams() {
        let top_left = TwoColumnTableau::new(8, vec![3, 4, 7]).unwrap();
        let base = base_from_diagram(&diagram_from_tableau(&top_left)).unwrap();
        assert_eq!(base, BundleBase(vec![prod(fl(2), fl(4)), BundleFactor::grassmannian(1, 4), p(1), p(2)]));

        let lower_left = TwoColumnTableau::new(8, vec![2, 5, 8]).unwrap();
        let base = base_from_diagram(&diagram_from_tableau(&lower_left)).unwrap();
        assert_eq!(base, BundleBase(vec![prod(fl(3), fl(3)), BundleFactor::grassmannian(2, 4), p(1), p(2)]));
        assert_eq!(base.dimension(), 13);

        let singular = TwoColumnTableau::new(8, vec![2, 4, 6]).unwrap();
        assert_eq!(base_from_diagram(&diagram_from_tableau(&singular)), Err(Error::SingularComponent));
        assert_eq!(fmso_triple(&singular), Err(Error::SingularComponent));
    }

    #[test]
    fn single_edge_with_rays() {
        let t = TwoColumnTableau::new(4, vec![2]).unwrap();
        let base = base_from_diagram(&diagram_from_tableau(&t)).unwrap();
        assert_eq!(base, BundleBase(vec![prod(fl(1), fl(3)), BundleFactor::grassmannian(0, 2)]));
        assert_eq!(base.canonicalize(), BundleBase(vec![fl(3)]));
        assert_eq!(base.dimension(), 3);
    }

    #[test]
    fn three_two_dimensions() {
        for col2 in [vec![2, 4], vec![2, 5], vec![3, 4], vec![3, 5], vec![4, 5]] {
            let t = TwoColumnTableau::new(5, col2).unwrap();
            assert_eq!(base_from_triple(&t).unwrap().dimension(), 4);
            assert_eq!(base_from_diagram(&diagram_from_tableau(&t)).unwrap().dimension(), 4);
        }
    }

    #[test]
    fn singular_web_is_rejected() {
        let w = web_from_tableau(&TwoColumnTableau::rectangular(vec![3, 4, 6, 8, 10]).unwrap()).unwrap();
        assert_eq!(base_from_web(&w), Err(Error::NonForestWeb));
    }

    #[test]
    fn json_form() {
        let b = BundleBase(vec![prod(fl(2), fl(4)), BundleFactor::grassmannian(1, 4), p(1)]);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(
            json,
            r#"[{"type":"Prod","factors":[{"type":"Fl","n":2},{"type":"Fl","n":4}]},{"type":"Gr","d":1,"n":4},{"type":"P","n":1}]"#
        );
        assert_eq!(serde_json::from_str::<BundleBase>(&json).unwrap(), b);
    }
}
