use diagram_wasm::{egg_box_json, gram_json, multiply_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn multiply_reports_floating_components() {
    let v = parse(multiply_json(2, "{2,2'}", "{2,2'}").unwrap());
    assert_eq!(v["product"], "{2,2'}");
    assert_eq!(v["paths"], 1);
    assert_eq!(v["twist"], "y");
    assert!(v["stacked"].as_str().unwrap().starts_with("<svg"));
    assert!(multiply_json(2, "{1,2,3}", "{}").is_err());
}

#[test]
fn egg_box_grid_shape() {
    let v = parse(egg_box_json("m", 3, 1).unwrap());
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 5);
    assert!(cells.iter().flat_map(|r| r.as_array().unwrap()).all(|c| c["size"] == 1));
    assert!(egg_box_json("q", 3, 1).is_err());
}

#[test]
fn gram_radical() {
    let v = parse(gram_json(2, 0, "1", "1").unwrap());
    assert_eq!(v["radical_dim"], 1);
    assert_eq!(v["entries"][0][0], "y^2");
    let v = parse(gram_json(3, 1, "2", "1").unwrap());
    assert_eq!(v["radical_dim"], 1);
    let v = parse(gram_json(3, 1, "3/2", "1").unwrap());
    assert_eq!(v["radical_dim"], 0);
}
