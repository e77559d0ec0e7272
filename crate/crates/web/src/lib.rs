//! WebAssembly bindings for the demo page. Every export takes and returns
//! JSON text; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use shelf_core::chain::complex::{build_complex_with_cap, preset_complex, CoefficientVector, HomologyKind};
use shelf_core::explore::boolean_rank;
use shelf_core::families::{construct_family, FamilySpec};
use shelf_core::io::{HomologyReport, ShelfDocument};
use shelf_core::orbits::{classify, left_orbits};
use shelf_core::simplicial::build_shelf_complex;
use shelf_core::validate_multishelf;

/// Small enough that a page never hangs for long.
const BROWSER_CAP: u128 = 1 << 18;

fn reply(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Validation, left orbits, classification and the shelf complex.
#[wasm_bindgen]
pub fn analyze(doc: &str) -> String {
    reply((|| {
        let doc = ShelfDocument::parse(doc).map_err(err)?;
        let s = doc.to_shelf().map_err(err)?;
        let orbits = left_orbits(&s);
        let cx = build_shelf_complex(&s, Some(s.size().saturating_sub(1).min(3))).map_err(err)?;
        let h1 = if cx.maxdim() >= 1 { Some(cx.homology(1).map_err(err)?) } else { None };
        Ok(json!({
            "size": s.size(),
            "classification": classify(&s),
            "orbits": orbits.blocks(),
            "components": cx.components().count,
            "maximal_simplices": cx.maximal_simplices(),
            "simplicial_h1": h1,
        }))
    })())
}

/// Homology report for `kind` in shelf, rack, quandle.
#[wasm_bindgen]
pub fn homology(doc: &str, kind: &str, maxdeg: usize) -> String {
    reply((|| {
        let doc = ShelfDocument::parse(doc).map_err(err)?;
        let kind: HomologyKind = kind.parse()?;
        let s = doc.to_shelf().map_err(err)?;
        let augmented = kind.default_augmented();
        let cx = preset_complex(&s, kind, maxdeg, Some(augmented), BROWSER_CAP).map_err(err)?;
        let groups = cx.homology_all().map_err(err)?;
        let c = cx.coefficients().entries().to_vec();
        let report = HomologyReport::new(&s.to_multishelf(), Some(kind), c, augmented, groups);
        serde_json::to_value(report).map_err(err)
    })())
}

/// Observed and conjectured ranks for `a0 d^0 + a1 d^∩ + a2 d^∪` on the
/// subsets of an `omega`-point set.
#[wasm_bindgen]
pub fn boolean_point(omega: usize, a0: i64, a1: i64, a2: i64, maxdeg: usize) -> String {
    reply((|| {
        if omega > 2 {
            return Err("ground set is limited to 2 points here".into());
        }
        let full = construct_family(&FamilySpec::BooleanMultiShelf { omega }).map_err(err)?.into_multishelf();
        let ms = validate_multishelf(full.ops()[..3].to_vec()).map_err(err)?;
        let c = CoefficientVector::new(vec![a0, a1, a2]);
        let groups = build_complex_with_cap(&ms, &c, maxdeg + 1, true, BROWSER_CAP)
            .and_then(|cx| cx.homology_all())
            .map_err(err)?;
        let conjectured: Vec<usize> = (0..=maxdeg).map(|d| boolean_rank(omega, [a0, a1, a2], d)).collect();
        Ok(json!({ "groups": groups, "conjectured": conjectured }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze_example() {
        let doc = r#"{"size":4,"ops":[[[0,2,2,3],[0,1,2,3],[0,2,2,3],[2,0,2,3]]]}"#;
        let v = parse(analyze(doc));
        assert_eq!(v["components"], 2);
        assert_eq!(v["simplicial_h1"]["rank"], 1);
        assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn homology_of_right_trivial() {
        let doc = r#"{"size":3,"ops":[[[0,1,2],[0,1,2],[0,1,2]]]}"#;
        let v = parse(homology(doc, "shelf", 2));
        let ranks: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["rank"].as_u64().unwrap()).collect();
        assert_eq!(ranks, vec![2, 6, 18]);
    }

    #[test]
    fn errors_are_reported() {
        assert!(parse(analyze("{")).get("error").is_some());
        assert!(parse(homology(r#"{"size":1,"ops":[[[0]]]}"#, "knot", 1)).get("error").is_some());
        assert!(parse(boolean_point(3, 0, 0, 0, 1)).get("error").is_some());
        let big = r#"{"size":4,"ops":[[[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,1,2,3]]]}"#;
        assert!(parse(homology(big, "shelf", 9)).get("error").is_some());
    }

    #[test]
    fn boolean_zero_point() {
        let v = parse(boolean_point(1, 0, 0, 0, 1));
        assert_eq!(v["groups"][1]["rank"], 4);
        assert_eq!(v["conjectured"][1], 4);
    }
}
