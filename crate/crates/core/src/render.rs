//! SVG drawings of matchings, ray diagrams and webs.
//!
//! Output is a standalone SVG 1.1 document on a 600 by 600 canvas. Circular
//! drawings put label 1 at the top with labels increasing clockwise.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::diagrams::{MatchingRayDiagram, NoncrossingMatching};
use crate::webs::HourglassWeb;

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const RADIUS: f64 = 240.0;
const STRAND_GAP: f64 = 4.0;

type Point = (f64, f64);

fn boundary_point(label: usize, n: usize, radius: f64) -> Point {
    let theta = 2.0 * std::f64::consts::PI * (label as f64 - 0.5) / n as f64;
    (CENTER + radius * theta.sin(), CENTER - radius * theta.cos())
}

/// Fixed precision keeps the bytes stable; `-0.00` is folded into `0.00`.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

struct Svg {
    body: String,
}

impl Svg {
    fn new() -> Self {
        let mut body = String::new();
        body.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            body,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">",
            s = SIZE
        );
        body.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        Self { body }
    }

    fn line(&mut self, class: &str, a: Point, b: Point) {
        let _ = writeln!(
            self.body,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.5\"/>",
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1)
        );
    }

    fn path(&mut self, class: &str, d: &str) {
        let _ = writeln!(
            self.body,
            "<path class=\"{class}\" d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>"
        );
    }

    fn dot(&mut self, class: &str, p: Point, r: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1.5\"/>",
            num(p.0),
            num(p.1),
            num(r)
        );
    }

    fn label(&mut self, p: Point, text: usize) {
        let _ = writeln!(
            self.body,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{text}</text>",
            num(p.0),
            num(p.1)
        );
    }

    fn outline(&mut self) {
        let _ = writeln!(
            self.body,
            "<circle class=\"disc\" cx=\"{c}\" cy=\"{c}\" r=\"{r}\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>",
            c = num(CENTER),
            r = num(RADIUS)
        );
    }

    fn boundary(&mut self, n: usize) {
        for label in 1..=n {
            self.dot("boundary", boundary_point(label, n, RADIUS), 4.0, "black");
            self.label(boundary_point(label, n, RADIUS + 22.0), label);
        }
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

/// Matching drawn in a disc; each arc bends toward the center.
pub fn render_matching(m: &NoncrossingMatching) -> String {
    let n = m.n();
    let mut svg = Svg::new();
    svg.outline();
    for &(a, b) in m.edges() {
        let p = boundary_point(a, n, RADIUS);
        let q = boundary_point(b, n, RADIUS);
        let mid = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        let ctrl = (CENTER + 0.4 * (mid.0 - CENTER), CENTER + 0.4 * (mid.1 - CENTER));
        let d = format!(
            "M {} {} Q {} {} {} {}",
            num(p.0),
            num(p.1),
            num(ctrl.0),
            num(ctrl.1),
            num(q.0),
            num(q.1)
        );
        svg.path("arc", &d);
    }
    svg.boundary(n);
    svg.finish()
}

/// Ray diagram on a horizontal baseline with arcs above it and rays going up.
pub fn render_diagram(m: &MatchingRayDiagram) -> String {
    let n = m.n();
    let base_y = 420.0;
    let margin = 50.0;
    let step = if n > 1 { (SIZE - 2.0 * margin) / (n - 1) as f64 } else { 0.0 };
    let x = |v: usize| margin + (v - 1) as f64 * step;
    let mut svg = Svg::new();
    svg.line("baseline", (margin / 2.0, base_y), (SIZE - margin / 2.0, base_y));
    let max_span = m.edges().iter().map(|&(a, b)| b - a).max().unwrap_or(1) as f64;
    for &(a, b) in m.edges() {
        let rx = (x(b) - x(a)) / 2.0;
        let ry = 320.0 * (b - a) as f64 / (max_span + 1.0);
        let d = format!(
            "M {} {} A {} {} 0 0 1 {} {}",
            num(x(a)),
            num(base_y),
            num(rx),
            num(ry),
            num(x(b)),
            num(base_y)
        );
        svg.path("arc", &d);
    }
    for &r in m.rays() {
        svg.line("ray", (x(r), base_y), (x(r), 20.0));
    }
    for v in 1..=n {
        svg.dot("boundary", (x(v), base_y), 4.0, "black");
        svg.label((x(v), base_y + 24.0), v);
    }
    svg.finish()
}

fn internal_positions(w: &HourglassWeb) -> BTreeMap<usize, Point> {
    let n = 2 * w.k();
    let mut pos = BTreeMap::new();
    for claw in w.claws() {
        let (sx, sy) = claw.boundary.iter().fold((0.0, 0.0), |(sx, sy), &l| {
            let p = boundary_point(l, n, 1.0);
            (sx + p.0 - CENTER, sy + p.1 - CENTER)
        });
        let norm = (sx * sx + sy * sy).sqrt();
        let p = if norm < 1e-9 {
            (CENTER, CENTER)
        } else {
            (CENTER + 0.55 * RADIUS * sx / norm, CENTER + 0.55 * RADIUS * sy / norm)
        };
        pos.insert(claw.vertex, p);
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in w.edges() {
        adj.entry(e.u).or_default().push(e.v);
        adj.entry(e.v).or_default().push(e.u);
    }
    for &f in w.filled() {
        pos.insert(f, (CENTER, CENTER));
    }
    // filled vertices settle at the average of their neighbours
    for _ in 0..200 {
        for &f in w.filled() {
            let nbrs = adj.get(&f).map(Vec::as_slice).unwrap_or(&[]);
            if nbrs.is_empty() {
                continue;
            }
            let (sx, sy) = nbrs.iter().fold((0.0, 0.0), |(sx, sy), v| (sx + pos[v].0, sy + pos[v].1));
            pos.insert(f, (sx / nbrs.len() as f64, sy / nbrs.len() as f64));
        }
    }
    pos
}

/// Web in a disc: hollow claw vertices, solid filled vertices, and an edge
/// of multiplicity `m` drawn as `m` parallel strands.
pub fn render_web(w: &HourglassWeb) -> String {
    let n = 2 * w.k();
    let pos = internal_positions(w);
    let mut svg = Svg::new();
    svg.outline();
    for claw in w.claws() {
        for &l in &claw.boundary {
            svg.line("leg", boundary_point(l, n, RADIUS), pos[&claw.vertex]);
        }
    }
    for e in w.edges() {
        let (a, b) = (pos[&e.u], pos[&e.v]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (nx, ny) = (-dy / len, dx / len);
        for s in 0..e.mult {
            let off = (s as f64 - (e.mult as f64 - 1.0) / 2.0) * STRAND_GAP;
            svg.line(
                "strand",
                (a.0 + nx * off, a.1 + ny * off),
                (b.0 + nx * off, b.1 + ny * off),
            );
        }
    }
    for claw in w.claws() {
        svg.dot("claw", pos[&claw.vertex], 7.0, "white");
    }
    for f in w.filled() {
        svg.dot("filled", pos[f], 7.0, "black");
    }
    svg.boundary(n);
    svg.finish()
}

/// Number of elements with the given class attribute.
pub fn count_class(svg: &str, class: &str) -> usize {
    svg.matches(&format!("class=\"{class}\"")).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::TwoColumnTableau;
    use crate::webs::web_from_tableau;

    #[test]
    fn label_one_sits_right_of_top() {
        let (x, y) = boundary_point(1, 4, RADIUS);
        assert!(x > CENTER && y < CENTER);
        let (x, y) = boundary_point(4, 4, RADIUS);
        assert!(x < CENTER && y < CENTER);
    }

    #[test]
    fn matching_structure() {
        let m = NoncrossingMatching::new(4, vec![(1, 2), (3, 4)]).unwrap();
        let svg = render_matching(&m);
        assert_eq!(count_class(&svg, "boundary"), 4);
        assert_eq!(count_class(&svg, "arc"), 2);
        assert_eq!(svg, render_matching(&m));
    }

    #[test]
    fn diagram_structure() {
        let d = MatchingRayDiagram::new(8, vec![(2, 3), (1, 4), (6, 7)], vec![5, 8]).unwrap();
        let svg = render_diagram(&d);
        assert_eq!(count_class(&svg, "arc"), 3);
        assert_eq!(count_class(&svg, "ray"), 2);
        assert_eq!(count_class(&svg, "boundary"), 8);
    }

    #[test]
    fn web_structure() {
        let t = TwoColumnTableau::rectangular(vec![2, 9, 10, 12, 13, 14, 15, 16]).unwrap();
        let svg = render_web(&web_from_tableau(&t).unwrap());
        assert_eq!(count_class(&svg, "claw"), 3);
        assert_eq!(count_class(&svg, "filled"), 1);
        assert_eq!(count_class(&svg, "boundary"), 16);
        assert_eq!(count_class(&svg, "strand"), 5 + 2 + 1);
        assert!(!svg.contains("NaN"));
    }
}
