//! Identity verification: brute-force oracles, a registry of named exact
//! checks over parameter grids, and the split/join bijection.

mod bijection;
mod oracle;
mod registry;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::Value;
use crate::structures::DEFAULT_CELL_CAP;

pub use bijection::{join_lah, split_lah, Split};
pub use oracle::{
    first_stat_mismatch, oracle, oracle_ext_lah, oracle_lah, oracle_partitions, oracle_perms,
};
pub use registry::{registry, Identity};

/// `(α_{i,j}, β_{i,j})` for the ambient `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorPair {
    pub a: u8,
    pub b: u8,
}

/// `a = χ(j odd) + χ(j even and i = n)`, `b = χ(j even) + χ(j odd and i = n)`.
pub fn indicator_pair(i: i64, j: i64, n: i64) -> IndicatorPair {
    let odd = j.rem_euclid(2) == 1;
    let last = i == n;
    IndicatorPair {
        a: u8::from(odd) + u8::from(!odd && last),
        b: u8::from(!odd) + u8::from(odd && last),
    }
}

/// Grid parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    M,
    N,
    K,
    R,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::M => "m",
            Param::N => "n",
            Param::K => "k",
            Param::R => "r",
        }
    }
}

/// An inclusive range of non-negative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Span {
        Span { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Parameter ranges for a check. A missing `k` runs over every `k` with a
/// possibly nonzero value; `max_total` bounds `m + n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_total: Option<usize>,
}

impl Grid {
    pub fn get(&self, p: Param) -> Option<Span> {
        match p {
            Param::M => self.m,
            Param::N => self.n,
            Param::K => self.k,
            Param::R => self.r,
        }
    }

    fn set(&mut self, p: Param, s: Option<Span>) {
        match p {
            Param::M => self.m = s,
            Param::N => self.n = s,
            Param::K => self.k = s,
            Param::R => self.r = s,
        }
    }

    /// `self` with every range given in `over` replaced. Overriding `m` or
    /// `n` drops the bound on `m + n` unless `over` sets its own.
    pub fn overridden(&self, over: &Grid) -> Grid {
        let mut g = self.clone();
        for p in [Param::M, Param::N, Param::K, Param::R] {
            if let Some(s) = over.get(p) {
                g.set(p, Some(s));
            }
        }
        if over.m.is_some() || over.n.is_some() {
            g.max_total = None;
        }
        if over.max_total.is_some() {
            g.max_total = over.max_total;
        }
        g
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for p in [Param::M, Param::N, Param::K, Param::R] {
            if let Some(s) = self.get(p) {
                parts.push(format!("{}={s}", p.name()));
            }
        }
        if let Some(t) = self.max_total {
            parts.push(format!("m+n<={t}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// One grid point. Unused parameters are 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

impl Cell {
    fn params(&self, used: &[Param]) -> BTreeMap<String, usize> {
        used.iter()
            .map(|&p| {
                let v = match p {
                    Param::M => self.m,
                    Param::N => self.n,
                    Param::K => self.k,
                    Param::R => self.r,
                };
                (p.name().to_string(), v)
            })
            .collect()
    }
}

/// Settings shared by every cell of a check.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub cell_cap: u64,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx {
            cell_cap: DEFAULT_CELL_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, usize>,
    pub lhs: Value,
    pub rhs: Value,
    /// A structure whose incrementally tracked statistics disagree with the
    /// direct ones, when the check is oracle-backed and one exists.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub structure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub grid: Grid,
    pub cells_checked: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl IdentityReport {
    /// One summary line.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {:<12} cells={:<5} [{}]",
            self.status, self.identity, self.cells_checked, self.grid
        );
        if let Some(c) = &self.counterexample {
            let at: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!(" at {}: {} != {}", at.join(","), c.lhs, c.rhs));
        }
        s
    }
}

/// Looks an identity up by name.
pub fn find(name: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|id| id.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Runs `identity` on its default grid with `overrides` applied.
pub fn check(identity: &Identity, overrides: &Grid, ctx: &Ctx) -> Result<IdentityReport> {
    let grid = (identity.default_grid)().overridden(overrides);
    let cells = identity.cells(&grid);
    let outcomes: Vec<Result<Option<(Value, Value)>>> = cells
        .par_iter()
        .map(|cell| {
            let sides = (identity.eval)(cell, ctx)?;
            let first = &sides[0];
            Ok(sides
                .iter()
                .find(|s| *s != first)
                .map(|other| (first.clone(), other.clone())))
        })
        .collect();
    let mut counterexample = None;
    for (cell, outcome) in cells.iter().zip(outcomes) {
        if let Some((lhs, rhs)) = outcome? {
            counterexample = Some(Counterexample {
                params: cell.params(identity.params),
                lhs,
                rhs,
                structure: identity.witness.and_then(|w| w(cell)),
            });
            break;
        }
    }
    let status = match (&counterexample, cells.len()) {
        (Some(_), _) => Status::Fail,
        (None, 0) => Status::Skipped,
        (None, _) => Status::Pass,
    };
    Ok(IdentityReport {
        identity: identity.name.to_string(),
        grid,
        cells_checked: cells.len(),
        status,
        counterexample,
        note: identity.note.map(str::to_string),
    })
}

/// Checks a registered identity by name.
pub fn check_named(name: &str, overrides: &Grid, ctx: &Ctx) -> Result<IdentityReport> {
    check(find(name)?, overrides, ctx)
}
