use std::process::{Command, Output};

use serde_json::Value;
use springweb::{BundleBase, HourglassWeb, MatchingRayDiagram, NoncrossingMatching, OrbitInfo, SmoothnessVerdict, TwoColumnTableau};

fn springweb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springweb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = springweb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn round_trips<T: serde::de::DeserializeOwned + serde::Serialize>(v: &Value) -> T {
    let typed: T = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(&serde_json::to_value(&typed).unwrap(), v);
    typed
}

#[test]
fn count_three() {
    assert_eq!(stdout(&["count", "--k", "3"]).trim(), "total=5 smooth=5 formula=5 avoiders=5");
    let v = json(&["count", "--k", "3"]);
    assert_eq!(v["total"], 5);
    assert_eq!(v["smooth"], 5);
}

#[test]
fn classify_matches_web() {
    let v = json(&["classify", "--col2", "2,4,6,8"]);
    assert_eq!(v["smooth"], false);
    assert_eq!(v["web"]["smooth"], false);
    round_trips::<SmoothnessVerdict>(&v["web"]);
    round_trips::<SmoothnessVerdict>(&v["tableau"]);

    let v = json(&["classify", "--col2", "2,9,10,12,13,14,15,16"]);
    assert_eq!(v["smooth"], true);
    assert_eq!(v["web"]["witness"]["kind"], "forest");
}

#[test]
fn json_outputs_round_trip() {
    let t: TwoColumnTableau = round_trips(&json(&["syt", "--col2", "3,4,7", "--n", "8"]));
    assert_eq!(t.tau_star(), vec![2, 6]);
    round_trips::<NoncrossingMatching>(&json(&["matching", "--col2", "3,4,6,8,10"]));
    round_trips::<MatchingRayDiagram>(&json(&["matching", "--col2", "3,4,7", "--n", "8"]));
    round_trips::<HourglassWeb>(&json(&["web", "--col2", "3,4,6,8,10"]));
    let orbit: OrbitInfo = round_trips(&json(&["orbit", "--col2", "4,5,6"]));
    assert_eq!(orbit.size, 3);

    let v = json(&["geometry", "--col2", "2,9,10,12,13,14,15,16", "--via", "web"]);
    let base: BundleBase = round_trips(&v["base"]);
    assert_eq!(base.to_string(), "(Fl(7) x Fl(3), Gr_5(6), P^2, P^3, P^4, P^5, P^6, P^7)");
    assert_eq!(v["dimension"], 56);

    let v = json(&["poincare", "--col2", "3,5,6"]);
    assert_eq!(v["factored"], "[2]^4 [3]");
    assert_eq!(v["coefficients"], serde_json::json!([1, 5, 11, 14, 11, 5, 1]));
}

#[test]
fn geometry_routes_agree() {
    for via in ["web", "triple", "diagram"] {
        let v = json(&["geometry", "--col2", "4,5,6,9,10", "--via", via]);
        assert_eq!(v["dimension"], 20, "{via}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(springweb(&["geometry", "--col2", "2,4,6", "--n", "8"]).status.code(), Some(1));
    assert_eq!(springweb(&["web", "--col2", "3,4,7", "--n", "8"]).status.code(), Some(1));
    assert_eq!(springweb(&["syt", "--col2", "1,2"]).status.code(), Some(1));
    assert_eq!(springweb(&["classify", "--col2", "x"]).status.code(), Some(2));
    assert_eq!(springweb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(springweb(&["verify", "--suite", "everything"]).status.code(), Some(2));
    let out = springweb(&["orbit", "--col2", "3,4,6,8,10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a forest"));
}

#[test]
fn verify_is_deterministic() {
    let first = springweb(&["--json", "verify", "--max-k", "6"]);
    let second = springweb(&["--json", "verify", "--max-k", "6"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["passed"], true);
    round_trips::<springweb::verify::Report>(&v);
}

#[test]
fn render_is_stable() {
    let args = ["render", "--col2", "2,9,10,12,13,14,15,16"];
    let svg = stdout(&args);
    assert_eq!(svg, stdout(&args));
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"filled\"").count(), 1);
    let diagram = stdout(&["render", "--col2", "3,4,7", "--n", "8", "--what", "diagram"]);
    assert_eq!(diagram.matches("class=\"ray\"").count(), 2);
}
