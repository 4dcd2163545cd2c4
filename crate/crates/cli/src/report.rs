//! JSON reports. Keys are inserted in a fixed order so output is byte-stable.

use maxtorus::category::{Morphism, MorphismReport, PrincipalResult};
use maxtorus::constructions::{AdmissibilityReport, LiftResult};
use maxtorus::exact::{IntMatrix, Rational, RationalMatrix};
use maxtorus::polyhedral::{Fan, FanReport, Simplex};
use maxtorus::triple::{Decomposition, KaehlerReport, QuotientFan, ValidationReport};
use maxtorus::Triple;
use serde_json::{json, Map, Value};

use crate::document::{number, quadruple, TripleDocument};

fn one_based(s: &Simplex) -> Value {
    Value::from(s.iter().map(|v| v + 1).collect::<Vec<_>>())
}

fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn rational_matrix(m: &RationalMatrix) -> Value {
    Value::from(m.row_vecs().iter().map(|r| Value::from(r.iter().map(rational).collect::<Vec<_>>())).collect::<Vec<_>>())
}

fn int_matrix(m: &IntMatrix) -> Value {
    Value::from(
        m.row_vecs()
            .iter()
            .map(|r| Value::from(r.iter().map(|x| Value::Number(number(x))).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn fan_value(fan: &Fan) -> Value {
    let doc = TripleDocument::from_triple(&Triple::new(fan.clone(), vec![]).expect("a fan with h = 0 is a triple"));
    json!({ "rank": fan.ambient_rank(), "rays": doc.rays, "simplices": doc.simplices })
}

pub fn fan_report(r: &FanReport) -> Value {
    json!({
        "is_simplicial_complex": r.is_simplicial_complex,
        "rays_primitive": r.rays_primitive,
        "rays_distinct": r.rays_distinct,
        "rays_are_cones": r.rays_are_cones,
        "nonsingular": r.nonsingular,
        "fan_property": r.fan_property,
        "overlap": r.overlap.as_ref().map(|(a, b)| json!([one_based(a), one_based(b)])),
        "pure_dim": r.pure_dim,
        "wall_condition": r.wall_condition,
        "complete": r.complete,
    })
}

pub fn validation(t: &Triple, r: &ValidationReport) -> Map<String, Value> {
    let mut conditions = Map::new();
    for v in &r.verdicts {
        conditions.insert(v.condition.to_string(), json!({ "holds": v.holds, "witness": v.witness }));
    }
    let mut out = Map::new();
    out.insert("valid".into(), r.is_valid().into());
    out.insert("torus_rank".into(), t.torus_rank().into());
    out.insert("complex_dim".into(), t.complex_dim().into());
    out.insert("quotient_dim".into(), r.quotient_dim.into());
    out.insert("conditions".into(), Value::Object(conditions));
    out.insert("fan".into(), fan_report(&r.fan));
    out.insert("warnings".into(), r.warnings.clone().into());
    out
}

pub fn kaehler(k: &KaehlerReport) -> Value {
    json!({ "passes": k.passes, "dim_f": k.dim_f, "required": k.required })
}

pub fn invariants(t: &Triple) -> Map<String, Value> {
    let hert: Vec<Value> = t
        .fan()
        .complex()
        .faces()
        .filter_map(|s| t.hert(s).ok().map(|h| (s, h)))
        .map(|(s, h)| json!({ "stratum": one_based(s), "h": h.h, "e": h.e, "r": h.r, "t": h.t }))
        .collect();
    let minimal = t.minimal_orbits();
    let mut out = Map::new();
    out.insert("complex_dim".into(), t.complex_dim().into());
    out.insert("quotient_dim".into(), t.quotient_dim().into());
    out.insert("minimal_orbit_count".into(), minimal.len().into());
    out.insert("minimal_orbits".into(), minimal.iter().map(one_based).collect::<Vec<_>>().into());
    out.insert("hert".into(), hert.into());
    out.insert("kaehler".into(), kaehler(&t.kaehler_obstruction()));
    out
}

pub fn quotient(q: &QuotientFan) -> Value {
    json!({
        "quotient_dim": q.quotient_dim,
        "projection": rational_matrix(&q.projection),
        "rays": q.fan.rays().iter().map(|r| r.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "simplices": q.fan.complex().maximal_faces().iter().map(one_based).collect::<Vec<_>>(),
    })
}

pub fn decomposition(d: &Decomposition) -> Value {
    json!({
        "fiber": fan_value(&d.fiber_fan),
        "fiber_complete": d.fiber_fan.is_complete(d.fiber_fan.ambient_rank()).unwrap_or(false),
        "base_rank": d.base_rank,
        "base_h_basis": d.base_h_basis.iter().map(|w| w.iter().map(quadruple).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "splitting": int_matrix(&d.splitting),
    })
}

pub fn principal(p: &PrincipalResult) -> Value {
    json!({
        "is_principal": p.is_principal,
        "kernel_dim": p.kernel_dim,
        "kernel_component_divisors": p.kernel_component_divisors.iter().map(number).collect::<Vec<_>>(),
        "rays_bijective": p.rays_bijective,
        "images_primitive": p.images_primitive,
        "surjective": p.surjective,
    })
}

pub fn lift(m: usize, l: &LiftResult) -> Value {
    json!({
        "m": m,
        "matrix": int_matrix(l.alpha.matrix()),
        "lifted": TripleDocument::from_triple(&l.lifted),
        "ghost_vertices": l.ghost_vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
        "principal": principal(&l.alpha.principal_bundle_check()),
    })
}

pub fn morphism(f: &Morphism, r: &MorphismReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "fan_morphism": r.fan_morphism,
        "fan_witness": r.fan_witness,
        "h_contained": r.h_contained,
        "h_witness": r.h_witness,
        "is_isomorphism": f.is_isomorphism(),
    })
}

pub fn admissibility(r: &AdmissibilityReport) -> Value {
    json!({
        "admissible": r.is_admissible(),
        "parity_ok": r.parity_ok,
        "realization_complete": r.realization_complete,
        "underlying_matches": r.underlying_matches,
        "ghost_vertices": r.ghost_vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with arrays that contain no objects, and flat records inside
/// arrays, kept on one line.
pub fn render(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn write_value(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(v, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if has_object(value) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                match v {
                    // small records such as HERT rows stay on one line
                    Value::Object(map) if !map.values().any(has_object) => out.push_str(&v.to_string()),
                    _ => write_value(v, depth + 1, out),
                }
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}
