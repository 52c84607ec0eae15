//! Closed form versus oracle over a parameter grid.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use frobenius::{Int, InvariantReport};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};
use crate::instance::{ClosedForm, Family, Instance};
use crate::render::{self, Format};

pub const DEFAULT_ORACLE_LIMIT: Int = 100_000;

/// Grid tuples are evaluated in parallel this many at a time; output order
/// within and across chunks follows the grid.
const CHUNK: usize = 512;

/// Inclusive integer interval. `lo > hi` is an empty range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RangeRepr")]
pub struct ParamRange {
    pub lo: Int,
    pub hi: Int,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RangeRepr {
    Single(i64),
    Pair([i64; 2]),
    Text(String),
}

impl TryFrom<RangeRepr> for ParamRange {
    type Error = CliError;

    fn try_from(r: RangeRepr) -> Result<Self> {
        match r {
            RangeRepr::Single(v) => Ok(ParamRange { lo: v.into(), hi: v.into() }),
            RangeRepr::Pair([lo, hi]) => Ok(ParamRange { lo: lo.into(), hi: hi.into() }),
            RangeRepr::Text(s) => s.parse(),
        }
    }
}

impl FromStr for ParamRange {
    type Err = CliError;

    /// `7`, `2..60` or `2..=60`; both ends inclusive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || CliError::usage(format!("bad range '{s}', expected N or LO..HI"));
        let parse = |t: &str| t.trim().parse::<Int>().map_err(|_| bad());
        match s.split_once("..") {
            None => {
                let v = parse(s)?;
                Ok(ParamRange { lo: v, hi: v })
            }
            Some((lo, hi)) => Ok(ParamRange {
                lo: parse(lo)?,
                hi: parse(hi.strip_prefix('=').unwrap_or(hi))?,
            }),
        }
    }
}

impl ParamRange {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    fn len(&self) -> u128 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u128 + 1
        }
    }
}

/// A verification sweep: family, one range per parameter, oracle cutoff.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub family: Family,
    #[serde(default)]
    pub ranges: BTreeMap<String, ParamRange>,
    #[serde(default = "default_oracle_limit", deserialize_with = "int_from_i64")]
    pub oracle_limit: Int,
    #[serde(default)]
    pub format: Option<Format>,
}

fn default_oracle_limit() -> Int {
    DEFAULT_ORACLE_LIMIT
}

/// TOML integers are 64-bit.
fn int_from_i64<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Int, D::Error> {
    i64::deserialize(d).map(Int::from)
}

impl SweepConfig {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            ranges: BTreeMap::new(),
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            format: None,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::usage(format!("bad sweep config: {e}")))
    }

    pub fn with_range(mut self, name: &str, range: ParamRange) -> Self {
        self.ranges.insert(name.to_string(), range);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.oracle_limit < 2 {
            return Err(CliError::usage("oracle limit must be at least 2"));
        }
        let names = self.family.param_names();
        for name in names {
            if !self.ranges.contains_key(*name) {
                return Err(CliError::usage(format!(
                    "family {} needs a range for '{name}'",
                    self.family
                )));
            }
        }
        if let Some(extra) = self.ranges.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(CliError::usage(format!(
                "family {} has no parameter '{extra}'",
                self.family
            )));
        }
        let size: u128 = names.iter().map(|n| self.ranges[*n].len()).product();
        if size > 50_000_000 {
            return Err(CliError::usage(format!("grid has {size} points; limit is 50000000")));
        }
        Ok(())
    }

    /// Grid points in lexicographic order of the family's parameter list.
    pub fn grid(&self) -> Vec<Vec<Int>> {
        let mut points: Vec<Vec<Int>> = vec![Vec::new()];
        for name in self.family.param_names() {
            let r = self.ranges[*name];
            points = points
                .into_iter()
                .flat_map(|p| {
                    (r.lo..=r.hi).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        points
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Checked,
    /// The closed form's hypothesis does not hold (`a + d < k`).
    SkippedHypothesis,
    /// `a` exceeds the oracle limit.
    SkippedOracle,
    /// The closed form failed to evaluate (for example a non-integral
    /// intermediate), which counts as a mismatch.
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Checked => "checked",
            Status::SkippedHypothesis => "skipped_hypothesis",
            Status::SkippedOracle => "skipped_oracle",
            Status::Error => "error",
        }
    }
}

/// Per-field agreement; `None` when the closed form does not give the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Matches {
    pub frobenius: Option<bool>,
    pub genus: Option<bool>,
    pub pseudo_frobenius: Option<bool>,
    pub semigroup_type: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct VerifyRecord {
    pub family: Family,
    pub params: Vec<(&'static str, Int)>,
    pub central: (Int, Int, usize),
    pub generators: Vec<Int>,
    pub status: Status,
    pub closed: Option<ClosedForm>,
    pub oracle: Option<InvariantReport>,
    pub matches: Matches,
    /// Additional identities checked against the oracle (piecewise forms,
    /// maximal Apéry sets), by name.
    pub extra: Vec<(&'static str, bool)>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl VerifyRecord {
    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::SkippedHypothesis | Status::SkippedOracle)
    }

    pub fn is_mismatch(&self) -> bool {
        if self.status == Status::Error {
            return true;
        }
        let m = self.matches;
        [m.frobenius, m.genus, m.pseudo_frobenius, m.semigroup_type]
            .into_iter()
            .any(|f| f == Some(false))
            || self.extra.iter().any(|&(_, ok)| !ok)
    }

    fn all_match(&self) -> Option<bool> {
        match self.status {
            Status::Checked | Status::Error => Some(!self.is_mismatch()),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let report = |r: &Option<InvariantReport>| {
            r.as_ref().map_or(Value::Null, |r| Value::Object(render::report_fields(r)))
        };
        let flag = |f: Option<bool>| f.map_or(Value::Null, Value::Bool);
        let extra: Map<String, Value> = self.extra.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect();
        let mut closed = report(&self.closed.as_ref().map(|c| c.report.clone()));
        if let (Some(c), Value::Object(map)) = (&self.closed, &mut closed) {
            if let Some(set) = &c.max_apery {
                map.insert("max_apery".into(), render::ints(set));
            }
            if let Some((f, g)) = c.piecewise {
                map.insert("piecewise".into(), json!({ "F": render::int(f), "g": render::int(g) }));
            }
        }
        let (a, d, k) = self.central;
        json!({
            "family": self.family.as_str(),
            "params": render::params_json(&self.params),
            "central": { "a": render::int(a), "d": render::int(d), "k": k },
            "generators": render::ints(&self.generators),
            "status": self.status.as_str(),
            "closed_form": closed,
            "oracle": report(&self.oracle),
            "match": {
                "F": flag(self.matches.frobenius),
                "g": flag(self.matches.genus),
                "PF": flag(self.matches.pseudo_frobenius),
                "t": flag(self.matches.semigroup_type),
                "all": flag(self.all_match()),
            },
            "extra": extra,
            "note": self.note,
            "elapsed_us": self.elapsed.as_micros() as u64,
        })
    }

    pub fn csv_header() -> &'static str {
        "family,a,d,k,extra_params,F_closed,F_oracle,g_closed,g_oracle,t_closed,t_oracle,match"
    }

    pub fn to_csv(&self) -> String {
        let (a, d, k) = self.central;
        let extra_params = if self.family == Family::Central {
            String::new()
        } else {
            self.params.iter().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(";")
        };
        let closed = self.closed.as_ref().map(|c| &c.report);
        let oracle = self.oracle.as_ref();
        let t = |r: Option<&InvariantReport>| {
            r.and_then(InvariantReport::semigroup_type).map(|t| t.to_string()).unwrap_or_default()
        };
        let verdict = match self.all_match() {
            Some(true) => "true",
            Some(false) => "false",
            None => self.status.as_str(),
        };
        [
            self.family.as_str().to_string(),
            a.to_string(),
            d.to_string(),
            k.to_string(),
            extra_params,
            render::opt_int(closed.map(|r| r.frobenius)),
            render::opt_int(oracle.map(|r| r.frobenius)),
            render::opt_int(closed.map(|r| r.genus)),
            render::opt_int(oracle.map(|r| r.genus)),
            t(closed),
            t(oracle),
            verdict.to_string(),
        ]
        .join(",")
    }

    pub fn to_human(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(n, v)| format!("{n}={v}")).collect();
        let mut line = format!(
            "{:<8} {:<22} gens=({})",
            self.family.as_str(),
            params.join(" "),
            render::join(&self.generators)
        );
        match (self.status, &self.closed, &self.oracle) {
            (Status::Checked, Some(c), Some(o)) => {
                let verdict = if self.is_mismatch() { "MISMATCH" } else { "ok" };
                line.push_str(&format!(
                    "  F={}/{} g={}/{}",
                    c.report.frobenius, o.frobenius, c.report.genus, o.genus
                ));
                if let (Some(tc), Some(to)) = (c.report.semigroup_type(), o.semigroup_type()) {
                    line.push_str(&format!(" t={tc}/{to}"));
                }
                line.push_str(&format!("  {verdict}"));
            }
            _ => {
                line.push_str(&format!("  {}", self.status.as_str()));
                if let Some(note) = &self.note {
                    line.push_str(&format!(" ({note})"));
                }
            }
        }
        line
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: u64,
    pub checked: u64,
    pub skipped: u64,
    pub mismatches: u64,
}

impl Summary {
    pub fn to_json(&self) -> Value {
        json!({ "summary": {
            "total": self.total,
            "checked": self.checked,
            "skipped": self.skipped,
            "mismatches": self.mismatches,
        }})
    }

    pub fn to_human(&self) -> String {
        format!(
            "total={} checked={} skipped={} mismatches={}",
            self.total, self.checked, self.skipped, self.mismatches
        )
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

/// Evaluates one grid point. `None` for tuples outside the family's domain
/// (for example `gcd(a, d) > 1`).
pub fn evaluate(family: Family, values: &[Int], oracle_limit: Int) -> Option<VerifyRecord> {
    let start = Instant::now();
    let instance = Instance::new(family, values).ok()?;
    let central = instance.family_params().ok()?;
    let generators = central
        .generators()
        .map(|g| g.as_slice().to_vec())
        .unwrap_or_default();
    let mut record = VerifyRecord {
        family,
        params: instance.params(),
        central: (central.a(), central.d(), central.k()),
        generators,
        status: Status::Checked,
        closed: None,
        oracle: None,
        matches: Matches::default(),
        extra: Vec::new(),
        note: None,
        elapsed: Duration::ZERO,
    };

    if !instance.has_closed_form() {
        record.status = Status::SkippedHypothesis;
        record.note = Some("a + d < k".into());
        record.elapsed = start.elapsed();
        return Some(record);
    }
    let closed = match instance.closed_form() {
        Ok(c) => c,
        Err(e) => {
            record.status = Status::Error;
            record.note = Some(format!("closed form: {e}"));
            record.elapsed = start.elapsed();
            return Some(record);
        }
    };
    if central.a() > oracle_limit {
        record.status = Status::SkippedOracle;
        record.note = Some(format!("a = {} exceeds oracle limit {oracle_limit}", central.a()));
        record.closed = Some(closed);
        record.elapsed = start.elapsed();
        return Some(record);
    }

    let oracle = central
        .generators()
        .and_then(|g| g.apery())
        .and_then(|table| {
            let report = InvariantReport {
                frobenius: table.frobenius(),
                genus: table.genus()?,
                pseudo_frobenius: Some(table.pseudo_frobenius()),
                source: frobenius::Source::Oracle,
            };
            Ok((report, table.maximal_elements()))
        });
    let (oracle, maximal) = match oracle {
        Ok(pair) => pair,
        Err(e) => {
            record.status = Status::Error;
            record.note = Some(format!("oracle: {e}"));
            record.closed = Some(closed);
            record.elapsed = start.elapsed();
            return Some(record);
        }
    };

    let c = &closed.report;
    record.matches = Matches {
        frobenius: Some(c.frobenius == oracle.frobenius),
        genus: Some(c.genus == oracle.genus),
        pseudo_frobenius: c.pseudo_frobenius.as_ref().map(|pf| Some(pf) == oracle.pseudo_frobenius.as_ref()),
        semigroup_type: c.semigroup_type().map(|t| Some(t) == oracle.semigroup_type()),
    };
    if let Some((f, g)) = closed.piecewise {
        record.extra.push(("piecewise_F", f == oracle.frobenius));
        record.extra.push(("piecewise_g", g == oracle.genus));
    }
    if let Some(set) = &closed.max_apery {
        record.extra.push(("max_apery", *set == maximal));
    }
    record.closed = Some(closed);
    record.oracle = Some(oracle);
    record.elapsed = start.elapsed();
    Some(record)
}

/// Runs the sweep, handing records to `emit` in grid order.
pub fn run<F>(config: &SweepConfig, mut emit: F) -> Result<Summary>
where
    F: FnMut(&VerifyRecord) -> Result<()>,
{
    config.validate()?;
    let grid = config.grid();
    let mut summary = Summary::default();
    for chunk in grid.chunks(CHUNK) {
        let records: Vec<Option<VerifyRecord>> = chunk
            .par_iter()
            .map(|values| evaluate(config.family, values, config.oracle_limit))
            .collect();
        for record in records {
            summary.total += 1;
            let Some(record) = record else {
                summary.skipped += 1;
                continue;
            };
            if record.is_skipped() {
                summary.skipped += 1;
            } else {
                summary.checked += 1;
                if record.is_mismatch() {
                    summary.mismatches += 1;
                }
            }
            emit(&record)?;
        }
    }
    Ok(summary)
}
