use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{BigInt, MPoly, QPoly};

/// A value produced by an engine, an oracle or one side of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Int(#[serde(with = "decimal")] BigInt),
    Q(QPoly),
    M(MPoly),
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl Value {
    /// Flat text for CSV cells: coefficients for `QPoly`, terms otherwise.
    pub fn flat(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Q(p) => p
                .coeffs()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            Value::M(p) => p.to_string(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Q(p) => write!(f, "{p}"),
            Value::M(p) => write!(f, "{p}"),
        }
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<QPoly> for Value {
    fn from(v: QPoly) -> Self {
        Value::Q(v)
    }
}

impl From<MPoly> for Value {
    fn from(v: MPoly) -> Self {
        Value::M(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Recurrence,
    ClosedForm,
}

/// Families the table command can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableFamily {
    Stirling2Q,
    BellQ,
    LahQ,
    LahTotalQ,
    Stirling1Q,
    Stirling1TotalQ,
    HsuShiue,
    GenBell,
}

impl TableFamily {
    pub const ALL: [TableFamily; 8] = [
        TableFamily::Stirling2Q,
        TableFamily::BellQ,
        TableFamily::LahQ,
        TableFamily::LahTotalQ,
        TableFamily::Stirling1Q,
        TableFamily::Stirling1TotalQ,
        TableFamily::HsuShiue,
        TableFamily::GenBell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableFamily::Stirling2Q => "stirling2_q",
            TableFamily::BellQ => "bell_q",
            TableFamily::LahQ => "lah_q",
            TableFamily::LahTotalQ => "lah_total_q",
            TableFamily::Stirling1Q => "stirling1_q",
            TableFamily::Stirling1TotalQ => "stirling1_total_q",
            TableFamily::HsuShiue => "hsu_shiue",
            TableFamily::GenBell => "gen_bell",
        }
    }

    pub fn has_k(self) -> bool {
        matches!(
            self,
            TableFamily::Stirling2Q
                | TableFamily::LahQ
                | TableFamily::Stirling1Q
                | TableFamily::HsuShiue
        )
    }

    pub fn has_r(self) -> bool {
        !matches!(self, TableFamily::HsuShiue | TableFamily::GenBell)
    }

    /// The engine value at one cell. `k`/`r` are ignored where unused.
    pub fn value(self, n: usize, k: usize, r: usize) -> Value {
        match self {
            TableFamily::Stirling2Q => super::stirling2_q(n, k, r).into(),
            TableFamily::BellQ => super::bell_q(n, r).into(),
            TableFamily::LahQ => super::lah_q(n, k, r).into(),
            TableFamily::LahTotalQ => super::lah_total_q(n, r).into(),
            TableFamily::Stirling1Q => super::stirling1_q(n, k, r).into(),
            TableFamily::Stirling1TotalQ => super::stirling1_total_q(n, r).into(),
            TableFamily::HsuShiue => super::hsu_shiue(n, k).into(),
            TableFamily::GenBell => super::gen_bell(n).into(),
        }
    }

    pub fn provenance(self, r: usize) -> Provenance {
        match self {
            TableFamily::LahQ | TableFamily::LahTotalQ => Provenance::ClosedForm,
            TableFamily::Stirling2Q
            | TableFamily::BellQ
            | TableFamily::Stirling1Q
            | TableFamily::Stirling1TotalQ
                if r > 0 =>
            {
                Provenance::ClosedForm
            }
            _ => Provenance::Recurrence,
        }
    }
}

impl FromStr for TableFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: TableFamily,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    pub provenance: Provenance,
    pub value: Value,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut args = vec![self.n.to_string()];
        args.extend(self.k.map(|k| k.to_string()));
        args.extend(self.r.map(|r| r.to_string()));
        write!(f, "{}({}) = {}", self.family, args.join(","), self.value)
    }
}

/// Rows of one family over a parameter box. `k` defaults to `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTable {
    pub family: TableFamily,
    pub rows: Vec<TableRow>,
}

impl FamilyTable {
    pub fn build(
        family: TableFamily,
        n: RangeInclusive<usize>,
        k: Option<RangeInclusive<usize>>,
        r: RangeInclusive<usize>,
    ) -> FamilyTable {
        let rs: Vec<Option<usize>> = if family.has_r() {
            r.map(Some).collect()
        } else {
            vec![None]
        };
        let mut rows = Vec::new();
        for rr in rs {
            for nn in n.clone() {
                let ks: Vec<Option<usize>> = match (&k, family.has_k()) {
                    (_, false) => vec![None],
                    (Some(k), true) => k.clone().filter(|&kk| kk <= nn).map(Some).collect(),
                    (None, true) => (0..=nn).map(Some).collect(),
                };
                for kk in ks {
                    let rv = rr.unwrap_or(0);
                    rows.push(TableRow {
                        family,
                        n: nn,
                        k: kk,
                        r: rr,
                        provenance: family.provenance(rv),
                        value: family.value(nn, kk.unwrap_or(0), rv),
                    });
                }
            }
        }
        FamilyTable { family, rows }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["family", "n", "k", "r", "provenance", "value"])
            .expect("in-memory write");
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for row in &self.rows {
            let prov = match row.provenance {
                Provenance::Recurrence => "recurrence",
                Provenance::ClosedForm => "closed-form",
            };
            w.write_record([
                row.family.name().to_string(),
                row.n.to_string(),
                opt(row.k),
                opt(row.r),
                prov.to_string(),
                row.value.flat(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let t = FamilyTable::build(TableFamily::Stirling2Q, 0..=5, None, 0..=0);
        assert_eq!(t.rows.len(), 21);
        let t = FamilyTable::build(TableFamily::GenBell, 0..=3, None, 0..=2);
        assert_eq!(t.rows.len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let t = FamilyTable::build(TableFamily::HsuShiue, 0..=3, None, 0..=0);
        let back: Vec<TableRow> = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t.rows);
        let t = FamilyTable::build(TableFamily::LahQ, 0..=3, Some(1..=2), 0..=1);
        let back: Vec<TableRow> = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t.rows);
    }

    #[test]
    fn csv_lists_coefficients() {
        let t = FamilyTable::build(TableFamily::Stirling2Q, 3..=3, Some(2..=2), 0..=0);
        assert!(t.to_csv().contains("stirling2_q,3,2,0,recurrence,0 2 1"));
    }
}
