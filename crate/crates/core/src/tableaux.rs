//! Two column shapes and their standard Young tableaux.
//!
//! A two column tableau of shape `(n-k, k)*` is determined by its second
//! column `b_1 < ... < b_k`; the first column is the complement in `[n]`.
//! Standardness is exactly the condition `b_i >= 2i`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The conjugate of the two row partition `(n-k, k)`: `k` rows of length two
/// followed by `n - 2k` rows of length one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr")]
pub struct TwoColumnShape {
    n: usize,
    k: usize,
}

#[derive(Deserialize)]
struct ShapeRepr {
    n: usize,
    k: usize,
}

impl TryFrom<ShapeRepr> for TwoColumnShape {
    type Error = Error;

    fn try_from(r: ShapeRepr) -> Result<Self> {
        Self::new(r.n, r.k)
    }
}

impl TwoColumnShape {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || 2 * k > n {
            return Err(Error::InvalidShape { n, k });
        }
        Ok(Self { n, k })
    }

    /// The two column rectangle `(k, k)*`.
    pub fn rectangle(k: usize) -> Result<Self> {
        Self::new(2 * k, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Length of the first column, `n - k`.
    pub fn first_column_len(&self) -> usize {
        self.n - self.k
    }

    pub fn is_rectangular(&self) -> bool {
        self.n == 2 * self.k
    }

    /// Row lengths of the diagram, top to bottom.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows = vec![2; self.k];
        rows.resize(self.n - self.k, 1);
        rows
    }

    /// Number of standard tableaux of this shape by the hook length formula.
    pub fn hook_length_count(&self) -> BigUint {
        let first = self.first_column_len();
        let mut hooks = BigUint::one();
        for r in 0..first {
            let arm = usize::from(r < self.k);
            hooks *= BigUint::from(arm + (first - 1 - r) + 1);
        }
        for r in 0..self.k {
            hooks *= BigUint::from(self.k - r);
        }
        let factorial = (1..=self.n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
        factorial / hooks
    }

    /// Every two column shape with at most `n_max` boxes, ordered by `(n, k)`.
    pub fn all_up_to(n_max: usize) -> Vec<Self> {
        (2..=n_max)
            .flat_map(|n| (1..=n / 2).map(move |k| Self { n, k }))
            .collect()
    }
}

impl fmt::Display for TwoColumnShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})*", self.n - self.k, self.k)
    }
}

/// A standard Young tableau of two column shape, stored by its second column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct TwoColumnTableau {
    shape: TwoColumnShape,
    col2: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    n: usize,
    k: usize,
    col2: Vec<usize>,
}

impl TryFrom<TableauRepr> for TwoColumnTableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        if r.col2.len() != r.k {
            return Err(Error::InvalidTableau(format!(
                "k = {} but the second column has {} entries",
                r.k,
                r.col2.len()
            )));
        }
        Self::new(r.n, r.col2)
    }
}

impl From<TwoColumnTableau> for TableauRepr {
    fn from(t: TwoColumnTableau) -> Self {
        Self {
            n: t.shape.n,
            k: t.shape.k,
            col2: t.col2,
        }
    }
}

impl TwoColumnTableau {
    /// Builds the tableau on `[n]` whose second column is `col2`.
    pub fn new(n: usize, col2: Vec<usize>) -> Result<Self> {
        let shape = TwoColumnShape::new(n, col2.len())?;
        for (idx, &b) in col2.iter().enumerate() {
            if b == 0 || b > n {
                return Err(Error::InvalidTableau(format!("entry {b} is outside 1..={n}")));
            }
            if idx > 0 && col2[idx - 1] >= b {
                return Err(Error::InvalidTableau(
                    "second column must be strictly increasing".into(),
                ));
            }
            if b < 2 * (idx + 1) {
                return Err(Error::InvalidTableau(format!(
                    "b_{} = {b} violates b_i >= 2i",
                    idx + 1
                )));
            }
        }
        Ok(Self { shape, col2 })
    }

    /// Rectangular tableau of shape `(k, k)*` with `n = 2 * col2.len()`.
    pub fn rectangular(col2: Vec<usize>) -> Result<Self> {
        let n = 2 * col2.len();
        Self::new(n, col2)
    }

    pub fn shape(&self) -> TwoColumnShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn k(&self) -> usize {
        self.shape.k
    }

    pub fn is_rectangular(&self) -> bool {
        self.shape.is_rectangular()
    }

    pub fn col2(&self) -> &[usize] {
        &self.col2
    }

    pub fn col1(&self) -> Vec<usize> {
        let mut in_col2 = vec![false; self.n() + 1];
        for &b in &self.col2 {
            in_col2[b] = true;
        }
        (1..=self.n()).filter(|&j| !in_col2[j]).collect()
    }

    pub fn in_col2(&self, j: usize) -> bool {
        self.col2.binary_search(&j).is_ok()
    }

    /// First column entries `j` with `j + 1` in the second column.
    pub fn tau_star(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&j| !self.in_col2(j) && self.in_col2(j + 1))
            .collect()
    }

    /// Least `i` with `b_i = 2i`, restricted to `i <= limit`.
    ///
    /// `b_i = 2i` holds exactly when the first `i` rows form a rectangular
    /// tableau of shape `(i, i)*`.
    pub fn split_row(&self, limit: usize) -> Option<usize> {
        self.col2
            .iter()
            .enumerate()
            .take(limit)
            .find(|&(idx, &b)| b == 2 * (idx + 1))
            .map(|(idx, _)| idx + 1)
    }

    /// Entries row by row; rows of length one carry `None` in column two.
    pub fn rows(&self) -> Vec<(usize, Option<usize>)> {
        let col1 = self.col1();
        col1.iter()
            .enumerate()
            .map(|(r, &a)| (a, self.col2.get(r).copied()))
            .collect()
    }

    fn require_rectangular(&self) -> Result<()> {
        if self.is_rectangular() {
            Ok(())
        } else {
            Err(Error::NonRectangularShape {
                n: self.n(),
                k: self.k(),
            })
        }
    }

    fn grid(&self) -> Vec<[usize; 2]> {
        self.col1()
            .into_iter()
            .zip(self.col2.iter().copied())
            .map(|(a, b)| [a, b])
            .collect()
    }

    fn from_grid(grid: &[[usize; 2]]) -> Self {
        let col2 = grid.iter().map(|row| row[1]).collect();
        Self::rectangular(col2).expect("jeu de taquin preserves standardness")
    }

    /// Promotion by jeu de taquin: delete `n`, slide the hole to the top left
    /// corner, add one to every entry and put `1` in the corner.
    ///
    /// On the associated matchings and webs this is the clockwise rotation
    /// `i -> i + 1 (mod n)`.
    pub fn promotion(&self) -> Result<Self> {
        self.require_rectangular()?;
        let mut grid = self.grid();
        let (mut r, mut c) = (grid.len() - 1, 1);
        loop {
            let up = (r > 0).then(|| grid[r - 1][c]);
            let left = (c > 0).then(|| grid[r][c - 1]);
            let (nr, nc) = match (up, left) {
                (None, None) => break,
                (Some(_), None) => (r - 1, c),
                (None, Some(_)) => (r, c - 1),
                (Some(u), Some(l)) => {
                    if u > l {
                        (r - 1, c)
                    } else {
                        (r, c - 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            (r, c) = (nr, nc);
        }
        for row in grid.iter_mut() {
            row[0] += 1;
            row[1] += 1;
        }
        grid[0][0] = 1;
        Ok(Self::from_grid(&grid))
    }

    /// Schützenberger evacuation by repeated deletion of the minimum entry
    /// followed by a forward jeu de taquin slide.
    pub fn evacuation(&self) -> Result<Self> {
        self.require_rectangular()?;
        let n = self.n();
        let mut grid: Vec<[Option<usize>; 2]> = self
            .grid()
            .into_iter()
            .map(|[a, b]| [Some(a), Some(b)])
            .collect();
        let mut out = vec![[0usize; 2]; grid.len()];
        for step in 0..n {
            let (mut r, mut c) = (0, 0);
            loop {
                let right = if c == 0 { grid[r][1] } else { None };
                let down = grid.get(r + 1).and_then(|row| row[c]);
                let (nr, nc) = match (right, down) {
                    (None, None) => break,
                    (Some(_), None) => (r, c + 1),
                    (None, Some(_)) => (r + 1, c),
                    (Some(x), Some(y)) => {
                        if x < y {
                            (r, c + 1)
                        } else {
                            (r + 1, c)
                        }
                    }
                };
                grid[r][c] = grid[nr][nc];
                (r, c) = (nr, nc);
            }
            grid[r][c] = None;
            out[r][c] = n - step;
        }
        Ok(Self::from_grid(&out))
    }
}

impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (a, b)) in self.rows().into_iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            match b {
                Some(b) => write!(f, "{a} {b}")?,
                None => write!(f, "{a}")?,
            }
        }
        Ok(())
    }
}

/// All standard tableaux of `shape`, lexicographically ordered by second column.
pub fn enumerate_tableaux(shape: TwoColumnShape) -> Vec<TwoColumnTableau> {
    fn extend(
        shape: TwoColumnShape,
        prefix: &mut Vec<usize>,
        out: &mut Vec<TwoColumnTableau>,
    ) {
        let idx = prefix.len();
        if idx == shape.k {
            out.push(TwoColumnTableau {
                shape,
                col2: prefix.clone(),
            });
            return;
        }
        let lo = (2 * (idx + 1)).max(prefix.last().map_or(0, |&b| b + 1));
        // leave room for the remaining entries
        let hi = shape.n - (shape.k - idx - 1);
        for b in lo..=hi {
            prefix.push(b);
            extend(shape, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(shape, &mut Vec::with_capacity(shape.k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col2s(shape: TwoColumnShape) -> Vec<Vec<usize>> {
        enumerate_tableaux(shape)
            .into_iter()
            .map(|t| t.col2)
            .collect()
    }

    #[test]
    fn shape_validation() {
        assert!(TwoColumnShape::new(4, 2).is_ok());
        assert!(TwoColumnShape::new(5, 3).is_err());
        assert!(TwoColumnShape::new(3, 0).is_err());
        let s = TwoColumnShape::new(5, 2).unwrap();
        assert_eq!(s.rows(), vec![2, 2, 1]);
        assert!(!s.is_rectangular());
        assert_eq!(s.to_string(), "(3, 2)*");
    }

    #[test]
    fn small_enumerations() {
        let s22 = TwoColumnShape::rectangle(2).unwrap();
        assert_eq!(col2s(s22), vec![vec![2, 4], vec![3, 4]]);
        assert_eq!(enumerate_tableaux(TwoColumnShape::rectangle(3).unwrap()).len(), 5);
        assert_eq!(
            col2s(TwoColumnShape::new(5, 2).unwrap()),
            vec![vec![2, 4], vec![2, 5], vec![3, 4], vec![3, 5], vec![4, 5]]
        );
    }

    #[test]
    fn rejects_nonstandard_columns() {
        assert!(TwoColumnTableau::new(4, vec![2, 3]).is_err());
        assert!(TwoColumnTableau::new(4, vec![1, 4]).is_err());
        assert!(TwoColumnTableau::new(4, vec![4, 3]).is_err());
        assert!(TwoColumnTableau::new(4, vec![2, 5]).is_err());
    }

    #[test]
    fn tau_star_of_alternating_tableau() {
        for k in 1..=7 {
            let t = TwoColumnTableau::rectangular((1..=k).map(|i| 2 * i).collect()).unwrap();
            let expected: Vec<usize> = (1..=k).map(|i| 2 * i - 1).collect();
            assert_eq!(t.tau_star(), expected);
        }
    }

    #[test]
    fn tau_star_counts_of_four_row_examples() {
        let t1 = TwoColumnTableau::rectangular(vec![3, 4, 7, 8]).unwrap();
        let t2 = TwoColumnTableau::rectangular(vec![2, 5, 6, 8]).unwrap();
        let t3 = TwoColumnTableau::rectangular(vec![3, 5, 7, 8]).unwrap();
        assert_eq!(t1.tau_star().len(), 2);
        assert_eq!(t2.tau_star().len(), 3);
        assert_eq!(t3.tau_star().len(), 3);
    }

    #[test]
    fn promotion_swaps_the_two_by_two_tableaux() {
        let a = TwoColumnTableau::rectangular(vec![3, 4]).unwrap();
        let b = TwoColumnTableau::rectangular(vec![2, 4]).unwrap();
        assert_eq!(a.promotion().unwrap(), b);
        assert_eq!(b.promotion().unwrap(), a);
    }

    #[test]
    fn promotion_worked_example() {
        let t = TwoColumnTableau::rectangular(vec![3, 4, 6]).unwrap();
        assert_eq!(t.promotion().unwrap().col2(), &[4, 5, 6]);
    }

    #[test]
    fn dynamics_need_rectangles() {
        let t = TwoColumnTableau::new(5, vec![2, 4]).unwrap();
        assert_eq!(
            t.promotion(),
            Err(Error::NonRectangularShape { n: 5, k: 2 })
        );
        assert!(t.evacuation().is_err());
    }

    #[test]
    fn display_rows() {
        let t = TwoColumnTableau::new(5, vec![3, 4]).unwrap();
        assert_eq!(t.to_string(), "1 3\n2 4\n5");
    }

    #[test]
    fn json_form() {
        let t = TwoColumnTableau::rectangular(vec![3, 4, 6, 8, 10]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"n":10,"k":5,"col2":[3,4,6,8,10]}"#);
        let back: TwoColumnTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<TwoColumnTableau>(r#"{"n":4,"k":2,"col2":[2,3]}"#).is_err());
        assert!(serde_json::from_str::<TwoColumnTableau>(r#"{"n":4,"k":1,"col2":[2,4]}"#).is_err());
    }
}
