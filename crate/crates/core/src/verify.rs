//! Exhaustive checks over every tableau of small shapes.
//!
//! Each suite produces structured records and a sorted list of failures, so
//! two runs with the same arguments serialize to identical bytes.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{smooth_by_diagram, smooth_by_tableau_general, smooth_by_tableau_rect, smooth_by_web};
use crate::diagrams::diagram_from_tableau;
use crate::geometry::{base_from_diagram, base_from_triple, base_from_web, springer_dimension};
use crate::qseries::{poincare_base, poincare_of_web, triple_poincare_equal, QPolynomial};
use crate::tableaux::{enumerate_tableaux, TwoColumnShape, TwoColumnTableau};
use crate::webs::{web_from_tableau, HourglassWeb, OrbitInfo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Smooth,
    Geometry,
    Poincare,
    Promotion,
    Counts,
}

impl Suite {
    const PARTS: [Suite; 5] = [Suite::Smooth, Suite::Counts, Suite::Geometry, Suite::Poincare, Suite::Promotion];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Smooth => "smooth",
            Suite::Geometry => "geometry",
            Suite::Poincare => "poincare",
            Suite::Promotion => "promotion",
            Suite::Counts => "counts",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::All]
            .into_iter()
            .chain(Suite::PARTS)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// A counterexample, with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub n: usize,
    pub k: usize,
    pub witness: Value,
}

/// Totals for one shape (or one `k` for counting checks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    pub smooth: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub records: Vec<ShapeRecord>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(suite: Suite, mut records: Vec<ShapeRecord>, mut failures: Vec<Failure>) -> Self {
        records.sort_by_key(|r| (r.n, r.k));
        failures.sort_by_cached_key(|f| (f.check.clone(), f.n, f.k, f.witness.to_string()));
        Self {
            suite,
            passed: failures.is_empty(),
            records,
            failures,
        }
    }

    pub fn checked(&self) -> usize {
        self.records.iter().map(|r| r.checked).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub max_k: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn tableau_json(t: &TwoColumnTableau) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

fn failure(check: &str, t: &TwoColumnTableau, extra: Value) -> Failure {
    Failure {
        check: check.to_string(),
        n: t.n(),
        k: t.k(),
        witness: json!({ "tableau": tableau_json(t), "detail": extra }),
    }
}

fn record(shape: TwoColumnShape, checked: usize, smooth: usize, failures: &[Failure]) -> ShapeRecord {
    ShapeRecord {
        n: shape.n(),
        k: shape.k(),
        checked,
        smooth,
        failures: failures.iter().filter(|f| f.n == shape.n() && f.k == shape.k()).count(),
    }
}

fn rectangles(k_max: usize) -> impl Iterator<Item = TwoColumnShape> {
    (2..=k_max).filter_map(|k| TwoColumnShape::rectangle(k).ok())
}

fn check_smoothness(t: &TwoColumnTableau) -> (bool, Vec<Failure>) {
    let mut out = Vec::new();
    let general = smooth_by_tableau_general(t);
    let diagram = smooth_by_diagram(&diagram_from_tableau(t));
    let mut verdicts = vec![json!({ "general": general }), json!({ "diagram": diagram })];
    let mut agree = general.smooth == diagram.smooth && general.clause() == diagram.clause();
    if t.is_rectangular() {
        match (smooth_by_tableau_rect(t), web_from_tableau(t)) {
            (Ok(rect), Ok(web)) => {
                let by_web = smooth_by_web(&web);
                agree &= rect.smooth == general.smooth && by_web.smooth == general.smooth;
                if !rect.is_consistent(None) || !by_web.is_consistent(Some(&web)) {
                    out.push(failure("witness_replay", t, json!({ "rect": rect, "web": by_web })));
                }
                verdicts.push(json!({ "rect": rect }));
                verdicts.push(json!({ "web": by_web, "web_json": web }));
            }
            (rect, web) => {
                agree = false;
                verdicts.push(json!({ "rect_error": rect.err().map(|e| e.to_string()), "web_error": web.err().map(|e| e.to_string()) }));
            }
        }
    }
    if !general.is_consistent(None) || !diagram.is_consistent(None) {
        out.push(failure("witness_replay", t, json!({ "general": general, "diagram": diagram })));
    }
    if !agree {
        out.push(failure("verdicts_agree", t, Value::Array(verdicts)));
    }
    (general.smooth, out)
}

/// The tableau, web and diagram criteria agree on every tableau of `(k,k)*`,
/// `2 <= k <= k_max`.
pub fn verify_smoothness_equivalence(k_max: usize) -> SuiteReport {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for shape in rectangles(k_max) {
        let tableaux = enumerate_tableaux(shape);
        let results: Vec<(bool, Vec<Failure>)> = tableaux.par_iter().map(check_smoothness).collect();
        let smooth = results.iter().filter(|r| r.0).count();
        let shape_failures: Vec<Failure> = results.into_iter().flat_map(|r| r.1).collect();
        records.push(record(shape, tableaux.len(), smooth, &shape_failures));
        failures.extend(shape_failures);
    }
    SuiteReport::new(Suite::Smooth, records, failures)
}

/// Number of smooth components of `(k,k)*`, by exhaustive classification.
pub fn count_smooth(k: usize) -> usize {
    let Ok(shape) = TwoColumnShape::rectangle(k) else {
        return 0;
    };
    enumerate_tableaux(shape)
        .par_iter()
        .filter(|t| smooth_by_tableau_general(t).smooth)
        .count()
}

/// `k + 2 * C(k, 3)`.
pub fn smooth_count_formula(k: usize) -> usize {
    k + 2 * binomial(k, 3)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("a larger entry exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

fn contains_321(p: &[usize]) -> bool {
    let k = p.len();
    let mut suffix_min = vec![usize::MAX; k + 1];
    for i in (0..k).rev() {
        suffix_min[i] = suffix_min[i + 1].min(p[i]);
    }
    let mut prefix_max = 0;
    for j in 0..k {
        if j > 0 && prefix_max > p[j] && suffix_min[j + 1] < p[j] {
            return true;
        }
        prefix_max = prefix_max.max(p[j]);
    }
    false
}

/// Naive containment of `pattern` (a permutation of `0..m`) as a subsequence.
pub fn contains_pattern(p: &[usize], pattern: &[usize]) -> bool {
    fn go(p: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pattern.len() {
            return true;
        }
        for i in start..p.len() {
            let depth = chosen.len();
            let fits = chosen.iter().enumerate().all(|(d, &idx)| (p[idx] < p[i]) == (pattern[d] < pattern[depth]));
            if fits {
                chosen.push(i);
                if go(p, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(p, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Permutations of `S_k` avoiding 321, 2143 and 3124.
pub fn count_pattern_avoiders(k: usize) -> usize {
    let mut p: Vec<usize> = (0..k).collect();
    let mut count = 0;
    loop {
        if !contains_321(&p) && !contains_pattern(&p, &[1, 0, 3, 2]) && !contains_pattern(&p, &[2, 0, 1, 3]) {
            count += 1;
        }
        if !next_permutation(&mut p) {
            return count;
        }
    }
}

/// Smooth counts against the closed formula for `2 <= k <= k_max`, and
/// against pattern avoiders for `3 <= k <= min(k_max, 9)`.
pub fn verify_counts(k_max: usize) -> SuiteReport {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for shape in rectangles(k_max) {
        let k = shape.k();
        let smooth = count_smooth(k);
        let formula = smooth_count_formula(k);
        let mut checked = 1;
        let mut local = Vec::new();
        let mut fail = |check: &str, detail: Value| {
            local.push(Failure { check: check.into(), n: 2 * k, k, witness: detail });
        };
        if smooth != formula {
            fail("count_formula", json!({ "classified": smooth, "formula": formula }));
        }
        if (3..=9).contains(&k) {
            checked += 1;
            let avoiders = count_pattern_avoiders(k);
            if avoiders != smooth {
                fail("pattern_avoiders", json!({ "classified": smooth, "avoiders": avoiders }));
            }
        }
        records.push(record(shape, checked, smooth, &local));
        failures.extend(local);
    }
    SuiteReport::new(Suite::Counts, records, failures)
}

fn check_geometry(t: &TwoColumnTableau) -> Option<Vec<Failure>> {
    if !smooth_by_tableau_general(t).smooth {
        return None;
    }
    let mut out = Vec::new();
    let triple = match base_from_triple(t) {
        Ok(b) => b,
        Err(e) => return Some(vec![failure("base_from_triple", t, json!(e.to_string()))]),
    };
    let diagram = match base_from_diagram(&diagram_from_tableau(t)) {
        Ok(b) => b,
        Err(e) => return Some(vec![failure("base_from_diagram", t, json!(e.to_string()))]),
    };
    if !triple.equivalent(&diagram) {
        out.push(failure(
            "diagram_vs_triple",
            t,
            json!({ "triple": triple.canonicalize(), "diagram": diagram.canonicalize() }),
        ));
    }
    if t.is_rectangular() && t.k() >= 2 {
        match web_from_tableau(t).and_then(|w| base_from_web(&w).map(|b| (w, b))) {
            Ok((w, web)) if !web.equivalent(&triple) => out.push(failure(
                "web_vs_triple",
                t,
                json!({ "triple": triple.canonicalize(), "web": web.canonicalize(), "web_json": w }),
            )),
            Ok(_) => {}
            Err(e) => out.push(failure("base_from_web", t, json!(e.to_string()))),
        }
    }
    Some(out)
}

fn check_dimension(t: &TwoColumnTableau) -> Option<Vec<Failure>> {
    if !smooth_by_tableau_general(t).smooth {
        return None;
    }
    let expected = springer_dimension(t.shape());
    let mut bases = Vec::new();
    if let Ok(b) = base_from_triple(t) {
        bases.push(("triple", b));
    }
    if let Ok(b) = base_from_diagram(&diagram_from_tableau(t)) {
        bases.push(("diagram", b));
    }
    if t.is_rectangular() && t.k() >= 2 {
        if let Ok(b) = web_from_tableau(t).and_then(|w| base_from_web(&w)) {
            bases.push(("web", b));
        }
    }
    let mut out = Vec::new();
    for (route, base) in bases {
        let dim = base.dimension();
        let degree = poincare_base(&base).degree();
        if dim != expected || degree != Some(expected) {
            out.push(failure(
                "dimension",
                t,
                json!({ "route": route, "base": base, "dimension": dim, "degree": degree, "expected": expected }),
            ));
        }
    }
    Some(out)
}

fn sweep_shapes(
    suite: Suite,
    shapes: &[TwoColumnShape],
    check: fn(&TwoColumnTableau) -> Option<Vec<Failure>>,
) -> SuiteReport {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for &shape in shapes {
        let tableaux = enumerate_tableaux(shape);
        let results: Vec<Option<Vec<Failure>>> = tableaux.par_iter().map(check).collect();
        let smooth = results.iter().filter(|r| r.is_some()).count();
        let local: Vec<Failure> = results.into_iter().flatten().flatten().collect();
        records.push(record(shape, tableaux.len(), smooth, &local));
        failures.extend(local);
    }
    SuiteReport::new(suite, records, failures)
}

/// The web, triple and diagram bases agree on every smooth component.
pub fn verify_geometry_agreement(shapes: &[TwoColumnShape]) -> SuiteReport {
    sweep_shapes(Suite::Geometry, shapes, check_geometry)
}

/// Every base, and the degree of its Poincaré polynomial, has the dimension
/// of the Springer fiber.
pub fn verify_dimension(shapes: &[TwoColumnShape]) -> SuiteReport {
    sweep_shapes(Suite::Geometry, shapes, check_dimension)
}

struct ForestData {
    tableau: TwoColumnTableau,
    web: HourglassWeb,
    poly: QPolynomial,
    orbit: OrbitInfo,
}

/// Poincaré equality against dihedral orbits, and against the triple rule,
/// over all pairs of forest webs of `(k,k)*`.
pub fn verify_poincare_orbit(k_max: usize) -> SuiteReport {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for shape in rectangles(k_max) {
        let tableaux = enumerate_tableaux(shape);
        let prepared: Vec<Result<Option<ForestData>, Failure>> = tableaux
            .par_iter()
            .map(|t| {
                let web = web_from_tableau(t).map_err(|e| failure("web", t, json!(e.to_string())))?;
                if !web.is_forest() {
                    return Ok(None);
                }
                let poly = poincare_of_web(&web).map_err(|e| failure("poincare", t, json!(e.to_string())))?;
                let orbit = web.dihedral_orbit().map_err(|e| failure("orbit", t, json!(e.to_string())))?;
                Ok(Some(ForestData { tableau: t.clone(), web, poly, orbit }))
            })
            .collect();
        let mut local = Vec::new();
        let mut forests = Vec::new();
        for p in prepared {
            match p {
                Ok(Some(d)) => forests.push(d),
                Ok(None) => {}
                Err(f) => local.push(f),
            }
        }
        for d in &forests {
            let reflected = d.web.reflect();
            let same = poincare_of_web(&reflected).ok() == Some(d.poly.clone())
                && reflected.dihedral_orbit().ok().as_ref() == Some(&d.orbit);
            if !same {
                local.push(failure("reflection", &d.tableau, json!({ "web": d.web })));
            }
        }
        let pairs: Vec<(usize, usize)> = (0..forests.len())
            .flat_map(|i| (i + 1..forests.len()).map(move |j| (i, j)))
            .collect();
        let mismatches: Vec<Failure> = pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let (x, y) = (&forests[i], &forests[j]);
                let equal = x.poly == y.poly;
                let orbit = x.orbit == y.orbit;
                let triple = triple_poincare_equal(&x.tableau, &y.tableau).ok();
                (equal != orbit || triple != Some(equal)).then(|| Failure {
                    check: "poincare_orbit".into(),
                    n: shape.n(),
                    k: shape.k(),
                    witness: json!({
                        "tableaux": [tableau_json(&x.tableau), tableau_json(&y.tableau)],
                        "poincare_equal": equal,
                        "same_orbit": orbit,
                        "triple_rule": triple,
                    }),
                })
            })
            .collect();
        local.extend(mismatches);
        records.push(record(shape, pairs.len(), forests.len(), &local));
        failures.extend(local);
    }
    SuiteReport::new(Suite::Poincare, records, failures)
}

fn check_promotion(t: &TwoColumnTableau) -> Option<Vec<Failure>> {
    let web = web_from_tableau(t).ok()?;
    if !web.is_forest() {
        return None;
    }
    let mut out = Vec::new();
    let promoted = t.promotion().and_then(|p| web_from_tableau(&p));
    match promoted {
        Ok(p) if p.break_set() == web.rotate().break_set() => {}
        other => out.push(failure(
            "promotion_rotation",
            t,
            json!({
                "promoted_breaks": other.ok().map(|w| w.break_set()),
                "rotated_breaks": web.rotate().break_set(),
            }),
        )),
    }
    let evacuated = t.evacuation().and_then(|e| web_from_tableau(&e));
    match evacuated {
        Ok(e) if e.break_set() == web.reflect().break_set() => {}
        other => out.push(failure(
            "evacuation_reflection",
            t,
            json!({
                "evacuated_breaks": other.ok().map(|w| w.break_set()),
                "reflected_breaks": web.reflect().break_set(),
            }),
        )),
    }
    Some(out)
}

/// Promotion rotates and evacuation reflects every forest web of `(k,k)*`.
pub fn verify_promotion_rotation(k_max: usize) -> SuiteReport {
    let shapes: Vec<TwoColumnShape> = rectangles(k_max).collect();
    sweep_shapes(Suite::Promotion, &shapes, check_promotion)
}

/// Runs one suite, or all of them, at scale `max_k`. Geometry runs over every
/// two column shape with at most `2 * max_k` boxes.
pub fn run_suite(max_k: usize, suite: Suite) -> Report {
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        other => vec![other],
    };
    let shapes = TwoColumnShape::all_up_to(2 * max_k);
    let mut suites = Vec::new();
    for part in parts {
        match part {
            Suite::Smooth => suites.push(verify_smoothness_equivalence(max_k)),
            Suite::Counts => suites.push(verify_counts(max_k)),
            Suite::Geometry => {
                let agreement = verify_geometry_agreement(&shapes);
                let dimension = verify_dimension(&shapes);
                let mut failures = agreement.failures;
                failures.extend(dimension.failures);
                let records = agreement
                    .records
                    .into_iter()
                    .map(|mut r| {
                        r.failures = failures.iter().filter(|f| f.n == r.n && f.k == r.k).count();
                        r
                    })
                    .collect();
                suites.push(SuiteReport::new(Suite::Geometry, records, failures));
            }
            Suite::Poincare => suites.push(verify_poincare_orbit(max_k)),
            Suite::Promotion => suites.push(verify_promotion_rotation(max_k)),
            Suite::All => unreachable!(),
        }
    }
    Report {
        max_k,
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
