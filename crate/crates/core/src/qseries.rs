//! Exact polynomials in `q` and Poincaré polynomials of smooth components.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{base_from_triple, base_from_web, fmso_triple, BundleBase, BundleFactor};
use crate::tableaux::TwoColumnTableau;
use crate::webs::HourglassWeb;

/// Polynomial in `q` with nonnegative integer coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); d + 1];
        coeffs[d] = BigUint::one();
        Self { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigUint::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let zero = BigUint::zero();
                self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        QPolynomial::new(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::new(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.is_one() && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(u64),
    Big(String),
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<Coefficient> = self
            .coeffs
            .iter()
            .map(|c| match u64::try_from(c) {
                Ok(small) => Coefficient::Small(small),
                Err(_) => Coefficient::Big(c.to_string()),
            })
            .collect();
        coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Coefficient>::deserialize(deserializer)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coefficient::Small(v) => Ok(BigUint::from(v)),
                Coefficient::Big(s) => s.parse::<BigUint>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::new(coeffs))
    }
}

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: usize) -> QPolynomial {
    QPolynomial::new(vec![BigUint::one(); n])
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).map(q_integer).product()
}

/// Gaussian binomial from the Pascal rule
/// `[n, d] = [n-1, d-1] + q^d [n-1, d]`.
pub fn q_binomial(n: usize, d: usize) -> QPolynomial {
    if d > n {
        return QPolynomial::zero();
    }
    // row[j] holds [m, j] for the current m
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(d) {
            let left = if j == 0 { QPolynomial::zero() } else { row[j - 1].clone() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(d)
}

pub fn poincare_factor(f: &BundleFactor) -> QPolynomial {
    match f {
        BundleFactor::Projective { n } => q_integer(n + 1),
        BundleFactor::Flag { n } => q_factorial(*n),
        BundleFactor::Grassmannian { d, n } => q_binomial(*n, *d),
        BundleFactor::Product { factors } => factors.iter().map(poincare_factor).product(),
    }
}

/// Product of the Poincaré polynomials of the canonical base.
pub fn poincare_base(b: &BundleBase) -> QPolynomial {
    b.canonicalize().factors().iter().map(poincare_factor).product()
}

pub fn poincare_of_tableau(t: &TwoColumnTableau) -> Result<QPolynomial> {
    Ok(poincare_base(&base_from_triple(t)?))
}

pub fn poincare_of_web(w: &HourglassWeb) -> Result<QPolynomial> {
    Ok(poincare_base(&base_from_web(w)?))
}

fn leaf_symbols(f: &BundleFactor, out: &mut Vec<(usize, String)>) {
    match f {
        BundleFactor::Projective { n } => out.push((1, format!("[{}]", n + 1))),
        BundleFactor::Flag { n: 2 } => out.push((1, "[2]".to_string())),
        BundleFactor::Flag { n } => out.push((0, format!("[{n}]!"))),
        BundleFactor::Grassmannian { d, n } => {
            // Gr_1(n) and Gr_(n-1)(n) are P^(n-1)
            if *d == 1 || *d + 1 == *n {
                out.push((1, format!("[{n}]")));
            } else {
                out.push((2, format!("[{n} choose {d}]")));
            }
        }
        BundleFactor::Product { factors } => factors.iter().for_each(|x| leaf_symbols(x, out)),
    }
}

/// Factored form such as `([3]!)^2` or `[2]^4 [3]`.
pub fn factored_form(b: &BundleBase) -> String {
    let mut leaves = Vec::new();
    for f in b.canonicalize().factors() {
        leaf_symbols(f, &mut leaves);
    }
    if leaves.is_empty() {
        return "1".to_string();
    }
    let mut counts: BTreeMap<(usize, usize, String), usize> = BTreeMap::new();
    for (kind, sym) in leaves {
        let size: usize = sym
            .trim_start_matches('[')
            .split(|c: char| !c.is_ascii_digit())
            .next()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0);
        *counts.entry((kind, size, sym)).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((_, _, sym), e)| match (e, sym.ends_with('!') || sym.contains(' ')) {
            (1, _) => sym,
            (_, true) => format!("({sym})^{e}"),
            (_, false) => format!("{sym}^{e}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Returns (equal Poincaré polynomials, same dihedral orbit).
pub fn poincare_equal_iff_orbit(w: &HourglassWeb, other: &HourglassWeb) -> Result<(bool, bool)> {
    if w.k() != other.k() {
        return Err(Error::InvalidWeb(format!("webs have k = {} and k = {}", w.k(), other.k())));
    }
    let equal = poincare_of_web(w)? == poincare_of_web(other)?;
    let same_orbit = w.dihedral_orbit()? == other.dihedral_orbit()?;
    Ok((equal, same_orbit))
}

/// Equality of Poincaré polynomials decided from the triples alone.
pub fn triple_poincare_equal(t: &TwoColumnTableau, other: &TwoColumnTableau) -> Result<bool> {
    let x = fmso_triple(t)?;
    let y = fmso_triple(other)?;
    let x_edge = x.a == 0 || x.c == 0;
    let y_edge = y.a == 0 || y.c == 0;
    Ok((x_edge && y_edge) || (!x_edge && !y_edge && x.sorted() == y.sorted()))
}
