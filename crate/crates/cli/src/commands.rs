use std::io::Write;

use frobenius::coins::{self, CoinSystem, Orderliness, Witness};
use frobenius::{AperyTable, GeneratorSet, Int, InvariantReport, Source};
use serde_json::{json, Map, Value};

use crate::error::{CliError, ExitCode, Result};
use crate::instance::{Family, Instance};
use crate::render::{self, Format};
use crate::sweep::{self, ParamRange, SweepConfig, VerifyRecord};
use crate::{Cli, Command, ComputeArgs, Method, OrderlyArgs, SourceChoice, TableArgs, VerifyArgs};

/// Default exhaustive bounds above this are clamped; explicit ones rejected.
const MAX_EXHAUSTIVE_BOUND: u64 = 100_000_000;
const DEFAULT_EXHAUSTIVE_CAP: u64 = 10_000_000;

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute(args) => compute(args, cli, out),
        Command::Verify(args) => verify(args, cli, out),
        Command::Table(args) => table(args, cli.format.unwrap_or_default(), out),
        Command::Orderly(args) => orderly(args, cli.format.unwrap_or_default(), out),
    }
}

fn oracle_limit(cli: &Cli) -> Result<Int> {
    let limit = cli.oracle_limit.unwrap_or(sweep::DEFAULT_ORACLE_LIMIT);
    if limit < 2 {
        return Err(CliError::usage("oracle limit must be at least 2"));
    }
    Ok(limit)
}

fn oracle_table(gens: &GeneratorSet, limit: Int) -> Result<AperyTable> {
    if gens.least() > limit {
        return Err(CliError::precondition(format!(
            "least generator {} exceeds the oracle limit {limit}; raise --oracle-limit",
            gens.least()
        )));
    }
    Ok(gens.apery()?)
}

fn oracle_report(table: &AperyTable) -> Result<InvariantReport> {
    Ok(InvariantReport {
        frobenius: table.frobenius(),
        genus: table.genus()?,
        pseudo_frobenius: Some(table.pseudo_frobenius()),
        source: Source::Oracle,
    })
}

fn compute(args: &ComputeArgs, cli: &Cli, out: &mut dyn Write) -> Result<ExitCode> {
    let limit = oracle_limit(cli)?;
    let format = cli.format.unwrap_or_default();
    let mut fields = Map::new();

    let (gens, instance) = match (&args.gens, args.family) {
        (Some(values), None) => {
            if [args.a, args.d, args.k, args.m, args.n].iter().any(Option::is_some) {
                return Err(CliError::usage("--a/--d/--k/--m/--n need --family"));
            }
            if args.source == SourceChoice::Closed {
                return Err(CliError::precondition("no closed form for explicit generators"));
            }
            (GeneratorSet::new(values.iter().copied())?, None)
        }
        (None, Some(family)) => {
            let instance = Instance::new(family, &family_values(args, family)?)?;
            fields.insert("family".into(), json!(family.as_str()));
            fields.insert("params".into(), render::params_json(&instance.params()));
            (instance.family_params()?.generators()?, Some(instance))
        }
        _ => return Err(CliError::usage("give exactly one of --gens or --family")),
    };
    fields.insert("generators".into(), render::ints(gens.as_slice()));

    let use_closed = match (args.source, &instance) {
        (SourceChoice::Oracle, _) | (_, None) => false,
        (SourceChoice::Closed, Some(_)) => true,
        (SourceChoice::Auto, Some(i)) => i.has_closed_form(),
    };
    let needs_table = !use_closed || args.gaps || args.apery;
    let table = if needs_table { Some(oracle_table(&gens, limit)?) } else { None };

    let mut report = match (&instance, use_closed) {
        (Some(i), true) => {
            let closed = i.closed_form()?;
            if let Some(set) = &closed.max_apery {
                fields.insert("max_apery".into(), render::ints(set));
            }
            closed.report
        }
        _ => oracle_report(table.as_ref().expect("oracle table"))?,
    };
    let mut pf_source = None;
    if args.pf && report.pseudo_frobenius.is_none() {
        let table = match &table {
            Some(t) => t.clone(),
            None => oracle_table(&gens, limit)?,
        };
        report.pseudo_frobenius = Some(table.pseudo_frobenius());
        pf_source = Some(Source::Oracle);
    }
    fields.extend(render::report_fields(&report));
    if let Some(src) = pf_source {
        fields.insert("PF_source".into(), json!(src.as_str()));
    }
    if let Some(table) = &table {
        if args.apery {
            fields.insert(
                "apery".into(),
                json!({ "base": render::int(table.base()), "entries": render::ints(table.entries()) }),
            );
        }
        if args.gaps {
            fields.insert("gaps".into(), render::ints(&table.gaps()));
        }
    }

    let value = Value::Object(fields);
    match format {
        Format::Json => writeln!(out, "{value}")?,
        Format::Csv => {
            let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
            let cells: Vec<String> = keys.iter().map(|k| csv_cell(&value[k.as_str()])).collect();
            writeln!(out, "{}", keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(","))?;
            writeln!(out, "{}", cells.join(","))?;
        }
        Format::Human => {
            for (k, v) in value.as_object().unwrap() {
                writeln!(out, "{k}: {}", human_cell(v))?;
            }
        }
    }
    Ok(ExitCode::Success)
}

fn family_values(args: &ComputeArgs, family: Family) -> Result<Vec<Int>> {
    let given = [("a", args.a), ("d", args.d), ("k", args.k), ("m", args.m), ("n", args.n)];
    let names = family.param_names();
    if let Some((name, _)) = given.iter().find(|(n, v)| v.is_some() && !names.contains(n)) {
        return Err(CliError::usage(format!("family {family} has no parameter --{name}")));
    }
    names
        .iter()
        .map(|name| {
            given
                .iter()
                .find(|(n, _)| n == name)
                .and_then(|(_, v)| *v)
                .ok_or_else(|| CliError::usage(format!("family {family} needs --{name}")))
        })
        .collect()
}

/// Lists become space-separated so cells never need quoting.
fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(" "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", csv_cell(v)))
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    }
}

fn human_cell(v: &Value) -> String {
    match v {
        Value::Null => "unknown".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(human_cell).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", human_cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Merges the config file (if any) with flags; flags win.
pub fn sweep_config(args: &VerifyArgs, cli: &Cli) -> Result<SweepConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let mut cfg = SweepConfig::from_toml(&text)?;
            if let Some(family) = args.family {
                if family != cfg.family {
                    cfg.family = family;
                    cfg.ranges.clear();
                }
            }
            cfg
        }
        None => match args.family {
            Some(family) => SweepConfig::new(family),
            None => return Err(CliError::usage("verify needs --family or --config")),
        },
    };
    let flags: [(&str, Option<ParamRange>); 5] =
        [("a", args.a), ("d", args.d), ("k", args.k), ("m", args.m), ("n", args.n)];
    for (name, range) in flags {
        if let Some(range) = range {
            config.ranges.insert(name.to_string(), range);
        }
    }
    if let Some(limit) = cli.oracle_limit {
        config.oracle_limit = limit;
    }
    if let Some(format) = cli.format {
        config.format = Some(format);
    }
    config.validate()?;
    Ok(config)
}

fn verify(args: &VerifyArgs, cli: &Cli, out: &mut dyn Write) -> Result<ExitCode> {
    let config = sweep_config(args, cli)?;
    let format = config.format.unwrap_or_default();
    if format == Format::Csv {
        writeln!(out, "{}", VerifyRecord::csv_header())?;
    }
    let summary = sweep::run(&config, |record| {
        match format {
            Format::Json => writeln!(out, "{}", record.to_json())?,
            Format::Csv => writeln!(out, "{}", record.to_csv())?,
            Format::Human => writeln!(out, "{}", record.to_human())?,
        }
        Ok(())
    })?;
    match format {
        Format::Json => writeln!(out, "{}", summary.to_json())?,
        Format::Csv => writeln!(out, "# {summary}")?,
        Format::Human => writeln!(out, "{summary}")?,
    }
    Ok(if summary.mismatches == 0 { ExitCode::Success } else { ExitCode::Mismatch })
}

fn table(args: &TableArgs, format: Format, out: &mut dyn Write) -> Result<ExitCode> {
    if args.k == 0 || args.k > coins::MAX_K {
        return Err(CliError::precondition(format!("k must be in 1..={}", coins::MAX_K)));
    }
    if format == Format::Csv {
        let cols: Vec<String> = (1..=args.k).map(|i| format!("x{i}")).collect();
        writeln!(out, "M,{}", cols.join(","))?;
    }
    for m in 0..=args.max {
        let p = coins::greedy_presentation(args.k, m)?;
        match format {
            Format::Json => writeln!(out, "{}", json!({ "M": m, "coeffs": p.coeffs() }))?,
            Format::Csv => {
                let cells: Vec<String> = p.coeffs().iter().map(u64::to_string).collect();
                writeln!(out, "{m},{}", cells.join(","))?
            }
            Format::Human => writeln!(out, "M={m}: {}", render::tuple(p.coeffs()))?,
        }
    }
    Ok(ExitCode::Success)
}

/// Any amount where greedy loses is below `b_{k-1} + b_k`, so checking up to
/// that bound decides orderliness.
pub fn complete_bound(denominations: &[u64]) -> u64 {
    match denominations {
        [.., x, y] => x.saturating_add(*y).saturating_sub(1),
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Orderly,
    NonOrderly(Witness),
    Undecided,
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Orderly => "orderly",
            Verdict::NonOrderly(_) => "non-orderly",
            Verdict::Undecided => "undecided",
        }
    }
}

fn witness_json(w: &Witness) -> Value {
    json!({ "M": w.amount, "opt": w.optimal, "grd": w.greedy })
}

fn orderly(args: &OrderlyArgs, format: Format, out: &mut dyn Write) -> Result<ExitCode> {
    let coins = CoinSystem::new(args.denominations.clone())?;
    let complete = complete_bound(coins.denominations());
    let bound = match args.bound {
        Some(b) if b > MAX_EXHAUSTIVE_BOUND => {
            return Err(CliError::usage(format!("--bound is capped at {MAX_EXHAUSTIVE_BOUND}")))
        }
        Some(b) => b,
        None => complete.min(DEFAULT_EXHAUSTIVE_CAP),
    };

    let onepoint = match args.method {
        Method::Exhaustive => None,
        _ => Some(coins.is_orderly_onepoint()?),
    };
    let exhaustive = match args.method {
        Method::Onepoint => None,
        _ => Some(coins.is_orderly_exhaustive(bound)?),
    };

    let mut fields = Map::new();
    fields.insert("denominations".into(), json!(coins.denominations()));
    let mut onepoint_verdict = None;
    if let Some(o) = &onepoint {
        let v = match o {
            Orderliness::Orderly => Verdict::Orderly,
            Orderliness::NonOrderly(w) => Verdict::NonOrderly(*w),
            Orderliness::Undecided { .. } => Verdict::Undecided,
        };
        let mut obj = json!({ "verdict": v.as_str() });
        match o {
            Orderliness::NonOrderly(w) => obj["witness"] = witness_json(w),
            Orderliness::Undecided { prefix_len, witness } => {
                obj["failed_prefix"] = json!(prefix_len);
                obj["prefix_witness"] = witness_json(witness);
            }
            Orderliness::Orderly => {}
        }
        fields.insert("onepoint".into(), obj);
        onepoint_verdict = Some(v);
    }
    let mut exhaustive_verdict = None;
    if let Some(e) = &exhaustive {
        let v = match e {
            Orderliness::NonOrderly(w) => Verdict::NonOrderly(*w),
            _ if bound >= complete => Verdict::Orderly,
            _ => Verdict::Undecided,
        };
        let mut obj = json!({ "verdict": v.as_str(), "bound": bound, "complete": bound >= complete });
        if let Verdict::NonOrderly(w) = v {
            obj["witness"] = witness_json(&w);
        }
        fields.insert("exhaustive".into(), obj);
        exhaustive_verdict = Some(v);
    }

    let disagree = match (onepoint_verdict, exhaustive_verdict) {
        (Some(Verdict::Orderly), Some(Verdict::NonOrderly(_))) => true,
        (Some(Verdict::NonOrderly(w)), Some(e)) => w.amount <= bound && e == Verdict::Orderly,
        _ => false,
    };
    let verdict = match (onepoint_verdict, exhaustive_verdict) {
        (Some(Verdict::Undecided) | None, Some(e)) => e,
        (Some(o), _) => o,
        (None, None) => Verdict::Undecided,
    };
    fields.insert("verdict".into(), json!(verdict.as_str()));
    if let Verdict::NonOrderly(w) = verdict {
        fields.insert("witness".into(), witness_json(&w));
    }
    if onepoint.is_some() && exhaustive.is_some() {
        fields.insert("agree".into(), json!(!disagree));
    }

    match format {
        Format::Json => writeln!(out, "{}", Value::Object(fields))?,
        Format::Csv => {
            let witness = match verdict {
                Verdict::NonOrderly(w) => format!("{},{},{}", w.amount, w.optimal, w.greedy),
                _ => ",,".into(),
            };
            writeln!(out, "denominations,verdict,witness_M,opt,grd")?;
            writeln!(out, "{},{},{witness}", render_u64s(coins.denominations(), " "), verdict.as_str())?;
        }
        Format::Human => {
            let mut line = format!("({}): {}", render_u64s(coins.denominations(), ","), verdict.as_str());
            if let Verdict::NonOrderly(w) = verdict {
                line.push_str(&format!(", witness M={} (opt {}, grd {})", w.amount, w.optimal, w.greedy));
            }
            if disagree {
                line.push_str(" [one-point and exhaustive disagree]");
            }
            writeln!(out, "{line}")?;
        }
    }
    Ok(if disagree { ExitCode::Mismatch } else { ExitCode::Success })
}

fn render_u64s(vs: &[u64], sep: &str) -> String {
    vs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bounds() {
        assert_eq!(complete_bound(&[1]), 0);
        assert_eq!(complete_bound(&[1, 5, 16]), 20);
        assert_eq!(complete_bound(&[1, u64::MAX]), u64::MAX - 1);
    }

    #[test]
    fn cells() {
        assert_eq!(csv_cell(&json!([1, 2])), "1 2");
        assert_eq!(csv_cell(&Value::Null), "");
        assert_eq!(human_cell(&json!({"n": 2})), "n=2");
    }
}
