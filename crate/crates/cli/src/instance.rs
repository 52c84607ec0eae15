//! Named families and their closed-form evaluation.

use std::fmt;
use std::str::FromStr;

use frobenius::family::{k2_piecewise, k3_piecewise, FamilyParams};
use frobenius::special::{self, Family3Params, MersenneParams, ThabitParams};
use frobenius::{Int, InvariantReport};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Central,
    Mersenne,
    Thabit,
    Family3,
    Smn,
    Gt,
}

impl Family {
    /// Parameter names, in the order sweeps iterate them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Central => &["a", "d", "k"],
            Family::Mersenne => &["m", "n", "d"],
            Family::Thabit => &["n", "d"],
            Family::Family3 => &["m", "k", "d"],
            Family::Smn => &["m", "n"],
            Family::Gt => &["n", "m"],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Central => "central",
            Family::Mersenne => "mersenne",
            Family::Thabit => "thabit",
            Family::Family3 => "family3",
            Family::Smn => "smn",
            Family::Gt => "gt",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        <Family as clap::ValueEnum>::from_str(s, true)
            .map_err(|_| CliError::usage(format!("unknown family '{s}'")))
    }
}

/// A concrete member of one of the named families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Central(FamilyParams),
    Mersenne(MersenneParams),
    Thabit(ThabitParams),
    Family3(Family3Params),
    Smn { m: Int, n: Int, params: FamilyParams },
    Gt { n: Int, m: Int, params: FamilyParams },
}

/// Closed-form output plus any family-specific extra sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub report: InvariantReport,
    pub max_apery: Option<Vec<Int>>,
    pub piecewise: Option<(Int, Int)>,
}

impl Instance {
    /// Builds an instance from named values, in the order of
    /// [`Family::param_names`].
    pub fn new(family: Family, values: &[Int]) -> Result<Self> {
        let names = family.param_names();
        if values.len() != names.len() {
            return Err(CliError::usage(format!(
                "family {family} takes parameters {}",
                names.join(", ")
            )));
        }
        let v = values;
        Ok(match family {
            Family::Central => Instance::Central(FamilyParams::new(v[0], v[1], to_k(v[2])?)?),
            Family::Mersenne => Instance::Mersenne(MersenneParams::new(v[0], v[1], v[2])?),
            Family::Thabit => Instance::Thabit(ThabitParams::new(v[0], v[1])?),
            Family::Family3 => Instance::Family3(Family3Params::new(v[0], v[1], v[2])?),
            Family::Smn => Instance::Smn { m: v[0], n: v[1], params: special::map_smn(v[0], v[1])? },
            Family::Gt => Instance::Gt { n: v[0], m: v[1], params: special::map_gt(v[0], v[1])? },
        })
    }

    pub fn family(&self) -> Family {
        match self {
            Instance::Central(_) => Family::Central,
            Instance::Mersenne(_) => Family::Mersenne,
            Instance::Thabit(_) => Family::Thabit,
            Instance::Family3(_) => Family::Family3,
            Instance::Smn { .. } => Family::Smn,
            Instance::Gt { .. } => Family::Gt,
        }
    }

    /// The `(a, d, k)` realizing this instance in the central family.
    pub fn family_params(&self) -> Result<FamilyParams> {
        Ok(match self {
            Instance::Central(p) => *p,
            Instance::Mersenne(p) => p.family()?,
            Instance::Thabit(p) => p.family()?,
            Instance::Family3(p) => p.family()?,
            Instance::Smn { params, .. } | Instance::Gt { params, .. } => *params,
        })
    }

    /// The family's own parameters, as `(name, value)` pairs.
    pub fn params(&self) -> Vec<(&'static str, Int)> {
        let values = match self {
            Instance::Central(p) => vec![p.a(), p.d(), p.k() as Int],
            Instance::Mersenne(p) => vec![p.m(), p.n(), p.d()],
            Instance::Thabit(p) => vec![p.n(), p.d()],
            Instance::Family3(p) => vec![p.m(), p.k(), p.d()],
            Instance::Smn { m, n, .. } => vec![*m, *n],
            Instance::Gt { n, m, .. } => vec![*n, *m],
        };
        self.family().param_names().iter().copied().zip(values).collect()
    }

    /// Whether a closed form exists for these parameters.
    pub fn has_closed_form(&self) -> bool {
        match self {
            Instance::Central(p) => p.monotone_ok(),
            Instance::Smn { params, .. } | Instance::Gt { params, .. } => params.monotone_ok(),
            _ => true,
        }
    }

    pub fn closed_form(&self) -> Result<ClosedForm> {
        let mut max_apery = None;
        let mut piecewise = None;
        let report = match self {
            Instance::Central(p) => {
                let report = p.closed_report()?;
                piecewise = match p.k() {
                    2 => Some(k2_piecewise(p.a(), p.d())?),
                    3 if p.a() >= 7 => Some(k3_piecewise(p.a(), p.d())?),
                    _ => None,
                };
                report
            }
            Instance::Mersenne(p) => special::mersenne_general(p)?,
            Instance::Thabit(p) => {
                let t = special::thabit_general(p)?;
                max_apery = t.max_apery;
                t.report
            }
            Instance::Family3(p) => {
                let (frobenius, genus) = special::family3(p)?;
                InvariantReport {
                    frobenius,
                    genus,
                    pseudo_frobenius: None,
                    source: frobenius::Source::ClosedForm,
                }
            }
            Instance::Smn { params, .. } | Instance::Gt { params, .. } => params.closed_report()?,
        };
        Ok(ClosedForm { report, max_apery, piecewise })
    }
}

fn to_k(k: Int) -> Result<usize> {
    usize::try_from(k).map_err(|_| CliError::precondition("k must be positive"))
}
