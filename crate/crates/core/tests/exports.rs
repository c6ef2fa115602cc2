use serde_json::{json, Value};
use stratalab::orbits::{self, Algebra, OrbitLabel, Partition};
use stratalab::{RootSystem, WeylGroup};

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().expect("object").keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

#[test]
fn orbit_export() {
    let o = OrbitLabel::new(Algebra::So(8), Partition::parse("3,2^2,1").unwrap()).unwrap();
    let v = serde_json::to_value(orbits::export_orbit(&o, 14).unwrap()).unwrap();
    assert_eq!(
        v,
        json!({"algebra": "so8", "partition": [3, 2, 2, 1], "rigid": true, "dim": 16})
    );

    let o = OrbitLabel::new(Algebra::So(8), Partition::parse("2^4").unwrap()).unwrap();
    let v = serde_json::to_value(orbits::export_orbit(&o, 14).unwrap()).unwrap();
    assert_eq!(keys(&v), ["algebra", "dim", "mark", "partition", "rigid"]);
}

#[test]
fn class_export() {
    let g = WeylGroup::new(&RootSystem::build("A2".parse().unwrap()));
    let classes = g.involution_classes(1000).unwrap();
    let v = serde_json::to_value(g.export_class(&classes[1])).unwrap();
    assert_eq!(v["size"], 3);
    assert_eq!(v["min_length"], 1);
    assert_eq!(v["max_length"], 3);
    assert_eq!(v["has_maximum"], true);
    assert_eq!(v["maximum_word"].as_array().unwrap().len(), 3);
}

#[test]
fn root_system_export() {
    let v = serde_json::to_value(RootSystem::build("G2".parse().unwrap()).export()).unwrap();
    assert_eq!(
        keys(&v),
        ["highest_root", "label", "positive_roots", "rank", "simple_roots"]
    );
    assert_eq!(v["label"], "G2");
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["highest_root"], json!([3, 2]));
}
