use movdom_web::{build_json, check_json, solve_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn solved_witnesses_pass_the_set_check() {
    for (source, invariant, property) in [
        ("cycle:5", "gamma", "dominating"),
        ("path:5", "gamma-m1", "one-movable"),
        ("complete_bipartite:2,3", "gamma-m2", "two-movable"),
    ] {
        for mode in ["literal", "distinct"] {
            let solved = parse(&solve_json(source, invariant, mode).unwrap());
            let Some(witness) = solved["witness"].as_array() else { continue };
            let members: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            let checked = parse(&check_json(source, property, mode, &members.join(",")).unwrap());
            assert_eq!(checked["holds"], true, "{source} {invariant} {mode}");
        }
    }
}

#[test]
fn built_products_feed_back_into_the_solver() {
    let built = parse(&build_json("corona", "path:3", "complete:2").unwrap());
    let edge_list = built["graph"]["edge_list"].as_str().unwrap();
    let solved = parse(&solve_json(edge_list, "gamma-m2", "distinct").unwrap());
    assert_eq!(solved["value"], 3);
    assert_eq!(solved["graph"], built["graph"]);

    let built = parse(&build_json("join", "path:3", "cycle:4").unwrap());
    let solved = parse(&solve_json(built["graph"]["edge_list"].as_str().unwrap(), "gamma-m2", "literal").unwrap());
    assert_eq!(solved["value"], 2);
}
