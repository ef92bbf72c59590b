//! Smoothness of components of two column Springer fibers, decided from the
//! tableau, from the web and from the matching-and-ray diagram.

use serde::{Deserialize, Serialize};

use crate::diagrams::MatchingRayDiagram;
use crate::error::{Error, Result};
use crate::tableaux::TwoColumnTableau;
use crate::webs::HourglassWeb;

/// Which alternative of the smoothness criterion holds. The tableau clauses
/// and their diagram counterparts correspond one to one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Clause {
    S1,
    S2,
    S3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Rectangular tableau criterion: `|tau*|` and the least `i < k` with `b_i = 2i`.
    TauCount { tau: usize, split: Option<usize> },
    /// A satisfied clause of the general criterion.
    Clause { clause: Clause },
    /// No clause holds; `count` is `|tau*|` or the number of short edges.
    NoClause { count: usize },
    /// The web is a forest with this many claws.
    Forest { claws: usize },
    /// A cycle of internal web vertices.
    Cycle { vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessVerdict {
    pub smooth: bool,
    pub witness: Witness,
}

impl SmoothnessVerdict {
    /// The clause behind a smooth verdict from a general criterion.
    pub fn clause(&self) -> Option<Clause> {
        match self.witness {
            Witness::Clause { clause } => Some(clause),
            _ => None,
        }
    }

    /// Re-derives the verdict from the witness alone; web witnesses are
    /// replayed against `web` when given.
    pub fn is_consistent(&self, web: Option<&HourglassWeb>) -> bool {
        match &self.witness {
            Witness::TauCount { tau, split } => self.smooth == (*tau <= 2 || (*tau == 3 && split.is_some())),
            Witness::Clause { .. } => self.smooth,
            Witness::NoClause { .. } => !self.smooth,
            Witness::Forest { claws } => {
                self.smooth && *claws <= 3 && web.is_none_or(|w| w.is_forest() && w.claws().len() == *claws)
            }
            Witness::Cycle { vertices } => !self.smooth && web.is_none_or(|w| w.is_cycle(vertices)),
        }
    }
}

/// Smoothness for a rectangle: `|tau*| <= 3`, and when it equals 3 some
/// `i < k` has `b_i = 2i`.
pub fn smooth_by_tableau_rect(t: &TwoColumnTableau) -> Result<SmoothnessVerdict> {
    if !t.is_rectangular() {
        return Err(Error::NonRectangularShape { n: t.n(), k: t.k() });
    }
    let tau = t.tau_star().len();
    let split = t.split_row(t.k() - 1);
    Ok(SmoothnessVerdict {
        smooth: tau <= 2 || (tau == 3 && split.is_some()),
        witness: Witness::TauCount { tau, split },
    })
}

/// Smoothness for a rectangle read off the web: smooth iff it is a forest.
pub fn smooth_by_web(w: &HourglassWeb) -> SmoothnessVerdict {
    match w.find_cycle() {
        Some(vertices) => SmoothnessVerdict {
            smooth: false,
            witness: Witness::Cycle { vertices },
        },
        None => SmoothnessVerdict {
            smooth: true,
            witness: Witness::Forest {
                claws: w.claws().len(),
            },
        },
    }
}

fn general_clause(t: &TwoColumnTableau) -> Option<Clause> {
    let (n, k) = (t.n(), t.k());
    let b_k_is_n = t.col2().last() == Some(&n);
    match t.tau_star().len() {
        1 => Some(Clause::S1),
        2 if b_k_is_n || t.split_row(k).is_some() => Some(Clause::S2),
        3 if b_k_is_n && t.split_row(k - 1).is_some() => Some(Clause::S3),
        _ => None,
    }
}

/// Smoothness for any two column shape via clauses (S1), (S2), (S3).
pub fn smooth_by_tableau_general(t: &TwoColumnTableau) -> SmoothnessVerdict {
    let verdict = match general_clause(t) {
        Some(clause) => SmoothnessVerdict {
            smooth: true,
            witness: Witness::Clause { clause },
        },
        None => SmoothnessVerdict {
            smooth: false,
            witness: Witness::NoClause {
                count: t.tau_star().len(),
            },
        },
    };
    if t.is_rectangular() {
        debug_assert_eq!(
            verdict.smooth,
            smooth_by_tableau_rect(t).map(|v| v.smooth).ok() == Some(true)
        );
    }
    verdict
}

/// Smoothness from the short edges of a matching-and-ray diagram.
pub fn smooth_by_diagram(m: &MatchingRayDiagram) -> SmoothnessVerdict {
    let n = m.n();
    let short = m.short_edges().len();
    let clause = match short {
        1 => Some(Clause::S1),
        2 if !(m.is_ray(1) && m.is_ray(n)) => Some(Clause::S2),
        3 if !m.has_edge(1, n) && !m.is_ray(1) && !m.is_ray(n) => Some(Clause::S3),
        _ => None,
    };
    match clause {
        Some(clause) => SmoothnessVerdict {
            smooth: true,
            witness: Witness::Clause { clause },
        },
        None => SmoothnessVerdict {
            smooth: false,
            witness: Witness::NoClause { count: short },
        },
    }
}
