//! JSON rendering of limit outcomes.

use std::time::Duration;

use serde_json::{json, Value};

use crate::algebraic::RealAlgebraic;
use crate::limit::{ExtReal, LimitOutcome, ShearKind};

/// `{"minpoly", "interval", "approx"}` plus `"exact"` for rationals.
pub fn value_json(v: &RealAlgebraic) -> Value {
    let iv = v.interval();
    let mut out = json!({
        "minpoly": v.minpoly_int().to_string(),
        "interval": [iv.lo.to_string(), iv.hi.to_string()],
        "approx": v.to_decimal(12),
    });
    if let Some(q) = v.as_rational() {
        out["exact"] = Value::String(q.to_string());
    }
    out
}

pub fn ext_json(v: &ExtReal) -> Value {
    match v {
        ExtReal::NegInf => Value::String("-inf".into()),
        ExtReal::PosInf => Value::String("+inf".into()),
        ExtReal::Finite(a) => value_json(a),
    }
}

pub fn outcome_json(out: &LimitOutcome, elapsed: Duration) -> Value {
    let d = &out.diagnostics;
    json!({
        "exists": out.exists(),
        "limit": out.limit().map(value_json),
        "range": out.range.as_ref().map(|r| json!({"min": ext_json(&r.min), "max": ext_json(&r.max)})),
        "isolated_zero": d.isolated_zero,
        "shear": d.shear.as_ref().map(|s| json!({
            "c": s.c.to_string(),
            "kind": match s.kind { ShearKind::X => "x", ShearKind::Y => "y" },
        })),
        "truncation": {"M": d.separation, "N": d.truncation},
        "time_ms": elapsed.as_secs_f64() * 1000.0,
    })
}
