//! Output formats.

use frobenius::{Int, InvariantReport};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// One JSON object per line.
    #[default]
    #[serde(alias = "json-lines")]
    #[value(alias = "json-lines")]
    Json,
    Csv,
    Human,
}

pub fn params_json(params: &[(&str, Int)]) -> Value {
    let map: Map<String, Value> = params.iter().map(|&(k, v)| (k.to_string(), int(v))).collect();
    Value::Object(map)
}

/// Integers are emitted as JSON numbers when they fit in `i64`, otherwise as
/// decimal strings.
pub fn int(v: Int) -> Value {
    match i64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn ints(vs: &[Int]) -> Value {
    Value::Array(vs.iter().map(|&v| int(v)).collect())
}

/// `F`, `g`, `PF`, `t`, `source`; `PF` and `t` are null when unknown.
pub fn report_fields(report: &InvariantReport) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("F".into(), int(report.frobenius));
    map.insert("g".into(), int(report.genus));
    map.insert(
        "PF".into(),
        report.pseudo_frobenius.as_deref().map_or(Value::Null, ints),
    );
    map.insert(
        "t".into(),
        report.semigroup_type().map_or(Value::Null, |t| json!(t)),
    );
    map.insert("source".into(), json!(report.source.as_str()));
    map
}

pub fn join(vs: &[Int]) -> String {
    vs.iter().map(Int::to_string).collect::<Vec<_>>().join(",")
}

pub fn opt_int(v: Option<Int>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// `(x_1,...,x_k)` as printed in the presentation table.
pub fn tuple(coeffs: &[u64]) -> String {
    let inner: Vec<String> = coeffs.iter().map(u64::to_string).collect();
    format!("({})", inner.join(","))
}
