//! Flat record formats shared by `solve`, `table` and their file outputs.
//!
//! Every value is a decimal string so that nothing is rounded through a
//! floating-point JSON number.

use std::io::{Read, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use quartic_core::families::Family;
use quartic_core::{verify_family, Solution};

pub const CSV_HEADER: &str = "h,A,B,C,D,source";

/// One row: `h,A,B,C,D,source`. Rows without a solution leave `A..D` and
/// `source` empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub h: String,
    #[serde(rename = "A")]
    pub a: Option<String>,
    #[serde(rename = "B")]
    pub b: Option<String>,
    #[serde(rename = "C")]
    pub c: Option<String>,
    #[serde(rename = "D")]
    pub d: Option<String>,
    pub source: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("field {field}: {value:?} is not an integer")]
    BadInteger { field: &'static str, value: String },
    #[error("record for h={0} has only some of A, B, C, D")]
    Partial(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse(field: &'static str, value: &str) -> Result<BigInt, RecordError> {
    BigInt::from_str(value).map_err(|_| RecordError::BadInteger {
        field,
        value: value.to_string(),
    })
}

impl OutputRecord {
    pub fn from_solution(s: &Solution) -> Self {
        Self {
            h: s.h.to_string(),
            a: Some(s.a.to_string()),
            b: Some(s.b.to_string()),
            c: Some(s.c.to_string()),
            d: Some(s.d.to_string()),
            source: Some(s.source.to_string()),
        }
    }

    pub fn empty(h: impl ToString) -> Self {
        Self {
            h: h.to_string(),
            a: None,
            b: None,
            c: None,
            d: None,
            source: None,
        }
    }

    pub fn has_solution(&self) -> bool {
        self.a.is_some()
    }

    /// Parsed `(h, [A, B, C, D])`, or `None` for an empty row.
    pub fn values(&self) -> Result<Option<(BigInt, [BigInt; 4])>, RecordError> {
        let h = parse("h", &self.h)?;
        match (&self.a, &self.b, &self.c, &self.d) {
            (None, None, None, None) => Ok(None),
            (Some(a), Some(b), Some(c), Some(d)) => Ok(Some((
                h,
                [
                    parse("A", a)?,
                    parse("B", b)?,
                    parse("C", c)?,
                    parse("D", d)?,
                ],
            ))),
            _ => Err(RecordError::Partial(self.h.clone())),
        }
    }

    /// True for empty rows and for rows whose values satisfy the equation.
    pub fn validate(&self) -> Result<bool, RecordError> {
        Ok(match self.values()? {
            None => true,
            Some((h, [a, b, c, d])) => a.pow(4) + &h * b.pow(4) == c.pow(4) + &h * d.pow(4),
        })
    }
}

pub fn write_csv<W: Write>(records: &[OutputRecord], out: W) -> Result<(), RecordError> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<OutputRecord>, RecordError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(RecordError::from))
        .collect()
}

pub fn write_json<W: Write>(records: &[OutputRecord], mut out: W) -> Result<(), RecordError> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out).map_err(serde_json::Error::io)?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<OutputRecord>, RecordError> {
    Ok(serde_json::from_reader(input)?)
}

/// Verification outcome for one family, as printed by `verify --json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub id: String,
    pub arity: u8,
    pub verified: bool,
    pub residual: String,
    pub provenance: String,
}

impl VerifyRecord {
    pub fn check(f: &Family) -> Self {
        let residual = verify_family(f);
        Self {
            id: f.id.clone(),
            arity: f.arity.as_u8(),
            verified: residual.is_zero(),
            residual: residual.to_string(),
            provenance: f.provenance.clone(),
        }
    }
}

/// Family catalog entry with expanded polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub arity: u8,
    pub h: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
    pub provenance: String,
}

impl From<&Family> for CatalogRecord {
    fn from(f: &Family) -> Self {
        let [h, a, b, c, d] = f.polys().map(ToString::to_string);
        Self {
            id: f.id.clone(),
            arity: f.arity.as_u8(),
            h,
            a,
            b,
            c,
            d,
            provenance: f.provenance.clone(),
        }
    }
}

/// Machine-readable `match` entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchRecord {
    pub family: String,
    pub p: String,
    pub q: String,
    pub source: String,
    pub h: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
    pub nontrivial: bool,
}
