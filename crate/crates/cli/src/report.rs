//! Machine-readable reports. Polynomials are ascending coefficient arrays
//! (index = degree), matrices are arrays of rows.

use std::io::Write;

use anyhow::Result;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use onebranch_core::{IntMatrix, PolyZ};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Value,
    pub results: Value,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn poly(p: &PolyZ) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.rows().iter().map(|row| Value::Array(row.iter().map(int).collect())).collect())
}

/// Inverse of [`poly`].
#[cfg(test)]
pub fn poly_from_json(v: &Value) -> Option<PolyZ> {
    let coeffs = v
        .as_array()?
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.as_i64().map(BigInt::from),
            Value::String(s) => s.parse().ok(),
            _ => None,
        })
        .collect::<Option<Vec<BigInt>>>()?;
    Some(PolyZ::new(coeffs))
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut rows = vec![
                    ("command".to_owned(), self.command.clone()),
                    ("status".to_owned(), serde_json::to_value(self.status)?.as_str().unwrap_or("").to_owned()),
                ];
                flatten("parameters", &self.parameters, &mut rows);
                flatten("results", &self.results, &mut rows);
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["key", "value"])?;
                for (k, v) in rows {
                    w.write_record([k, v])?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

/// Leaves keyed by dotted paths; arrays of scalars stay on one line.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_owned(), parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        other => out.push((prefix.to_owned(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

pub fn object(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect::<Map<_, _>>())
}
