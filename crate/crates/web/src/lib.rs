//! Browser bindings: solve an invariant, build a product, and check a
//! hand-picked set. Every entry point takes plain strings and returns a JSON
//! document so the page needs no generated glue types; the `*_json`
//! functions are the same operations without the wasm boundary.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use movdom::{
    corona, edgelist, gamma, gamma_m1, gamma_m2, is_1movable_dominating, is_2movable_dominating, is_dominating, join,
    make_family, Graph, MovabilityCertificate, ReplacementMode, VertexSet,
};

/// Largest graph the page will solve; keeps a click responsive on one thread.
pub const MAX_DEMO_ORDER: usize = 18;

/// A family spec (`path:4`) when the text is a single such token, otherwise
/// an edge list.
fn load(source: &str) -> Result<Graph, String> {
    let trimmed = source.trim();
    let graph = if !trimmed.contains('\n') && trimmed.contains(':') {
        make_family(trimmed).map_err(|e| e.to_string())?
    } else {
        let mut text = source.replace("\r\n", "\n");
        if !text.ends_with('\n') {
            text.push('\n');
        }
        edgelist::parse(&text).map_err(|e| e.to_string())?
    };
    if graph.order() > MAX_DEMO_ORDER {
        return Err(format!(
            "the demo solves graphs of at most {MAX_DEMO_ORDER} vertices; this one has {}",
            graph.order()
        ));
    }
    Ok(graph)
}

fn mode(name: &str) -> Result<ReplacementMode, String> {
    name.parse().map_err(|_| format!("unknown mode {name:?} (expected literal or distinct)"))
}

#[derive(Serialize)]
struct Drawing {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_list: String,
}

impl Drawing {
    fn of(g: &Graph) -> Self {
        Drawing { n: g.order(), edges: g.edges().collect(), edge_list: edgelist::write(g, &[]) }
    }
}

#[derive(Serialize)]
struct Solved<'a> {
    graph: Drawing,
    invariant: &'a str,
    value: Option<usize>,
    witness: Option<VertexSet>,
    certificate: Option<MovabilityCertificate>,
}

/// `invariant` is `gamma`, `gamma-m1` or `gamma-m2`; `value` is null when no
/// qualifying set exists.
pub fn solve_json(source: &str, invariant: &str, mode_name: &str) -> Result<String, String> {
    let g = load(source)?;
    let result = match invariant {
        "gamma" => gamma(&g),
        "gamma-m1" => gamma_m1(&g),
        "gamma-m2" => gamma_m2(&g, mode(mode_name)?),
        other => return Err(format!("unknown invariant {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let doc = Solved {
        graph: Drawing::of(&g),
        invariant,
        value: result.value(),
        witness: result.witness(),
        certificate: result.certificate().cloned(),
    };
    Ok(serde_json::to_string(&doc).expect("plain data serializes"))
}

#[derive(Serialize)]
struct Built {
    graph: Drawing,
    /// Vertices of the left factor (join) or the centers (corona).
    left: Vec<usize>,
}

/// `product` is `join` or `corona`; factors are family specs or edge lists.
pub fn build_json(product: &str, left: &str, right: &str) -> Result<String, String> {
    let (l, r) = (load(left)?, load(right)?);
    let (g, left) = match product {
        "join" => {
            let (g, layout) = join(&l, &r).map_err(|e| e.to_string())?;
            (g, layout.left.collect())
        }
        "corona" => {
            let (g, layout) = corona(&l, &r).map_err(|e| e.to_string())?;
            (g, layout.centers)
        }
        other => return Err(format!("unknown product {other:?}")),
    };
    if g.order() > MAX_DEMO_ORDER {
        return Err(format!("the product has {} vertices; the demo limit is {MAX_DEMO_ORDER}", g.order()));
    }
    Ok(serde_json::to_string(&Built { graph: Drawing::of(&g), left }).expect("plain data serializes"))
}

#[derive(Serialize)]
struct Checked {
    holds: bool,
    certificate: Option<MovabilityCertificate>,
    reason: Option<String>,
}

/// `property` is `dominating`, `one-movable` or `two-movable`; `members` is a
/// comma-separated vertex list (possibly empty).
pub fn check_json(source: &str, property: &str, mode_name: &str, members: &str) -> Result<String, String> {
    let g = load(source)?;
    let mut set = VertexSet::EMPTY;
    for token in members.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token.parse().map_err(|_| format!("{token:?} is not a vertex index"))?;
        if v >= g.order() {
            return Err(format!("vertex {v} is out of range for {} vertices", g.order()));
        }
        set.insert(v);
    }
    let verdict = match property {
        "dominating" => None,
        "one-movable" | "two-movable" if set.is_empty() => {
            let reason = Some("the empty set is not movable".to_string());
            return Ok(serde_json::to_string(&Checked { holds: false, certificate: None, reason }).expect("serializes"));
        }
        "one-movable" => Some(is_1movable_dominating(&g, set).map_err(|e| e.to_string())?),
        "two-movable" => Some(is_2movable_dominating(&g, set, mode(mode_name)?).map_err(|e| e.to_string())?),
        other => return Err(format!("unknown property {other:?}")),
    };
    let doc = match verdict {
        None => {
            let holds = is_dominating(&g, set);
            let reason = (!holds).then(|| {
                let missing = g.vertices().difference(g.closed_neighborhood(set).expect("set checked"));
                format!("{missing} not covered")
            });
            Checked { holds, certificate: None, reason }
        }
        Some(v) => Checked {
            holds: v.is_certified(),
            certificate: v.certificate().cloned(),
            reason: v.failure().map(|f| f.to_string()),
        },
    };
    Ok(serde_json::to_string(&doc).expect("plain data serializes"))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(source: &str, invariant: &str, mode: &str) -> Result<String, JsError> {
    js(solve_json(source, invariant, mode))
}

#[wasm_bindgen]
pub fn build(product: &str, left: &str, right: &str) -> Result<String, JsError> {
    js(build_json(product, left, right))
}

#[wasm_bindgen]
pub fn check(source: &str, property: &str, mode: &str, members: &str) -> Result<String, JsError> {
    js(check_json(source, property, mode, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Value};

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn solves_families_and_edge_lists() {
        let doc = parse(solve_json("path:4", "gamma-m2", "distinct").unwrap());
        assert_eq!(doc["value"], 2);
        assert_eq!(doc["witness"], json!([0, 2]));
        assert_eq!(doc["certificate"]["kind"], "two-movable");
        assert_eq!(doc["graph"]["edges"], json!([[0, 1], [1, 2], [2, 3]]));

        let doc = parse(solve_json("4\n0 1\n1 2\n2 3", "gamma", "literal").unwrap());
        assert_eq!(doc["value"], 2);
        assert_eq!(doc["certificate"], Value::Null);

        let doc = parse(solve_json("star:4", "gamma-m2", "distinct").unwrap());
        assert_eq!(doc["value"], Value::Null);
        assert_eq!(doc["witness"], Value::Null);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_json("path:4", "gamma-m3", "literal").is_err());
        assert!(solve_json("path:4", "gamma-m2", "loose").is_err());
        assert!(solve_json("cycle:2", "gamma", "literal").unwrap_err().contains("cycle"));
        assert!(solve_json("3\n0 3\n", "gamma", "literal").is_err());
        assert!(solve_json("path:19", "gamma", "literal").unwrap_err().contains("at most"));
    }

    #[test]
    fn builds_products() {
        let doc = parse(build_json("corona", "path:3", "complete:2").unwrap());
        assert_eq!(doc["graph"]["n"], 9);
        assert_eq!(doc["graph"]["edges"].as_array().unwrap().len(), 11);
        assert_eq!(doc["left"], json!([0, 1, 2]));

        let doc = parse(build_json("join", "complete:1", "path:4").unwrap());
        assert_eq!(doc["graph"]["n"], 5);
        assert_eq!(doc["left"], json!([0]));
        assert!(build_json("corona", "path:4", "path:4").is_err());
        assert!(build_json("product", "path:2", "path:2").is_err());
    }

    #[test]
    fn checks_selected_sets() {
        let doc = parse(check_json("path:4", "two-movable", "literal", "0,2").unwrap());
        assert_eq!(doc["holds"], true);
        assert_eq!(doc["certificate"]["kind"], "two-movable");

        let doc = parse(check_json("path:4", "dominating", "literal", "0").unwrap());
        assert_eq!(doc["holds"], false);
        assert_eq!(doc["reason"], "{2, 3} not covered");

        let doc = parse(check_json("star:4", "one-movable", "literal", "0").unwrap());
        assert_eq!(doc["holds"], false);
        assert!(doc["reason"].as_str().unwrap().contains("vertex 0"));

        let doc = parse(check_json("path:4", "two-movable", "literal", "").unwrap());
        assert_eq!(doc["holds"], false);
        assert!(check_json("path:4", "dominating", "literal", "9").is_err());
        assert!(check_json("path:4", "dominating", "literal", "x").is_err());
    }
}
