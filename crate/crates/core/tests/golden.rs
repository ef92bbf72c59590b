//! SVG output compared byte for byte against files in `tests/golden`.
//! Run with `SPRINGWEB_BLESS=1` to rewrite them.

use std::path::PathBuf;

use springweb::render::{count_class, render_diagram, render_matching, render_web};
use springweb::tableaux::enumerate_tableaux;
use springweb::webs::web_from_tableau;
use springweb::{MatchingRayDiagram, NoncrossingMatching, TwoColumnShape, TwoColumnTableau};

fn check(name: &str, svg: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("SPRINGWEB_BLESS").is_some() {
        std::fs::write(&path, svg).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(svg, expected, "{name} differs from its golden file");
}

#[test]
fn two_arc_matching() {
    let svg = render_matching(&NoncrossingMatching::new(4, vec![(1, 2), (3, 4)]).unwrap());
    assert_eq!(count_class(&svg, "boundary"), 4);
    assert_eq!(count_class(&svg, "arc"), 2);
    check("matching_12_34.svg", &svg);
}

#[test]
fn two_claw_web() {
    let t = TwoColumnTableau::rectangular(vec![5, 6, 7, 8]).unwrap();
    let svg = render_web(&web_from_tableau(&t).unwrap());
    assert_eq!(count_class(&svg, "claw"), 2);
    assert_eq!(count_class(&svg, "filled"), 0);
    assert_eq!(count_class(&svg, "boundary"), 8);
    check("web_two_claw_k4.svg", &svg);
}

#[test]
fn tree_with_hourglass() {
    let t = TwoColumnTableau::rectangular(vec![2, 9, 10, 12, 13, 14, 15, 16]).unwrap();
    let svg = render_web(&web_from_tableau(&t).unwrap());
    assert_eq!(count_class(&svg, "claw"), 3);
    assert_eq!(count_class(&svg, "filled"), 1);
    check("web_tree_k8.svg", &svg);
}

#[test]
fn three_row_webs() {
    for t in enumerate_tableaux(TwoColumnShape::rectangle(3).unwrap()) {
        let w = web_from_tableau(&t).unwrap();
        let mut claw = w.claws()[w.claw_index_of(1)].boundary.clone();
        claw.sort_unstable();
        let name: String = claw.iter().map(ToString::to_string).collect();
        check(&format!("web_k3_{name}.svg"), &render_web(&w));
    }
}

#[test]
fn ray_diagram() {
    let d = MatchingRayDiagram::new(8, vec![(2, 3), (1, 4), (6, 7)], vec![5, 8]).unwrap();
    check("diagram_5_3_top_left.svg", &render_diagram(&d));
}
