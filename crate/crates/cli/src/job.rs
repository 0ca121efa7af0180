//! Job documents: a JSON object of parameters, optionally patched by
//! `--param key=value` overrides.

use std::fs;
use std::io::Read;
use std::path::Path;

use hrs_core::{CodeParams, FieldElement, NrtMatrix, Polynomial, PrimeModulus};
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] hrs_core::Error),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(hrs_core::Error::BudgetExceeded { .. }) => 3,
            CliError::Output(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

#[derive(Clone, Debug, Default)]
pub struct Job {
    fields: Map<String, Value>,
}

impl Job {
    /// Reads the job at `path` (`-` for stdin), then applies `overrides`.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> CliResult<Self> {
        let mut fields = match path {
            None => Map::new(),
            Some(path) => {
                let text = if path == Path::new("-") {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| invalid(format!("cannot read job from stdin: {e}")))?;
                    buf
                } else {
                    fs::read_to_string(path)
                        .map_err(|e| invalid(format!("cannot read job file {}: {e}", path.display())))?
                };
                match serde_json::from_str(&text) {
                    Ok(Value::Object(map)) => map,
                    Ok(_) => return Err(invalid("job file must contain a JSON object")),
                    Err(e) => return Err(invalid(format!("job file is not valid JSON: {e}"))),
                }
            }
        };
        for item in overrides {
            let (key, raw) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("--param expects key=value, got {item:?}")))?;
            let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
            fields.insert(key.trim().to_string(), value);
        }
        Ok(Self { fields })
    }

    #[cfg(test)]
    pub fn from_value(value: Value) -> CliResult<Self> {
        match value {
            Value::Object(fields) => Ok(Self { fields }),
            _ => Err(invalid("job must be a JSON object")),
        }
    }

    fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key).filter(|v| !v.is_null())
    }

    pub fn opt_u64(&self, key: &str) -> CliResult<Option<u64>> {
        self.get(key)
            .map(|v| v.as_u64().ok_or_else(|| invalid(format!("`{key}` must be a non-negative integer, got {v}"))))
            .transpose()
    }

    pub fn opt_usize(&self, key: &str) -> CliResult<Option<usize>> {
        self.opt_u64(key)?
            .map(|v| usize::try_from(v).map_err(|_| invalid(format!("`{key}` is too large"))))
            .transpose()
    }

    pub fn usize(&self, key: &str) -> CliResult<usize> {
        self.opt_usize(key)?.ok_or_else(|| invalid(format!("missing `{key}`")))
    }

    pub fn modulus(&self) -> CliResult<PrimeModulus> {
        let p = self.opt_u64("p")?.ok_or_else(|| invalid("missing `p`"))?;
        Ok(PrimeModulus::new(p)?)
    }

    /// Field elements of the list under `key`, reduced mod p.
    pub fn elements(&self, key: &str, m: PrimeModulus) -> CliResult<Option<Vec<FieldElement>>> {
        let Some(value) = self.get(key) else { return Ok(None) };
        let list = value
            .as_array()
            .ok_or_else(|| invalid(format!("`{key}` must be a list of integers")))?;
        list.iter().map(|v| reduce(key, v, m)).collect::<CliResult<_>>().map(Some)
    }

    pub fn polynomial(&self, m: PrimeModulus) -> CliResult<Polynomial> {
        let coeffs = self.elements("poly", m)?.ok_or_else(|| invalid("missing `poly`"))?;
        Ok(Polynomial::new(m, coeffs)?)
    }

    /// The matrix under `key`, given as a list of rows or as
    /// `{"s": .., "r": .., "entries": [[..], ..]}`.
    pub fn matrix(&self, key: &str, m: PrimeModulus) -> CliResult<Option<NrtMatrix>> {
        let Some(value) = self.get(key) else { return Ok(None) };
        let (rows, shape) = match value {
            Value::Array(rows) => (rows, None),
            Value::Object(obj) => {
                let rows = obj
                    .get("entries")
                    .and_then(Value::as_array)
                    .ok_or_else(|| invalid(format!("`{key}` object needs an `entries` list")))?;
                let dim = |d: &str| obj.get(d).and_then(Value::as_u64).map(|v| v as usize);
                (rows, Some((dim("s"), dim("r"))))
            }
            _ => return Err(invalid(format!("`{key}` must be a list of rows or a matrix object"))),
        };
        if rows.is_empty() {
            return Err(invalid(format!("`{key}` has no rows")));
        }
        let mut columns: Vec<Vec<FieldElement>> = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| invalid(format!("row {i} of `{key}` is not a list")))?;
            if i == 0 {
                columns = vec![Vec::with_capacity(rows.len()); row.len()];
            } else if row.len() != columns.len() {
                return Err(invalid(format!("rows of `{key}` have different lengths")));
            }
            for (col, v) in columns.iter_mut().zip(row) {
                col.push(reduce(key, v, m)?);
            }
        }
        if columns.is_empty() {
            return Err(invalid(format!("`{key}` has empty rows")));
        }
        if let Some((s, r)) = shape {
            if s.is_some_and(|s| s != rows.len()) || r.is_some_and(|r| r != columns.len()) {
                return Err(invalid(format!("`{key}` declares a shape that does not match its entries")));
            }
        }
        Ok(Some(NrtMatrix::from_columns(m, columns)?))
    }

    /// Code parameters. With `t = None` the `t` key is required; otherwise
    /// the given value is used and the key ignored.
    pub fn code_params(&self, t: Option<usize>) -> CliResult<CodeParams> {
        let m = self.modulus()?;
        let s = self.usize("s")?;
        let r = self.opt_usize("r")?;
        let alphas = match (self.elements("alphas", m)?, r) {
            (Some(a), Some(r)) if a.len() != r => {
                return Err(invalid(format!("`alphas` has {} entries but r = {r}", a.len())))
            }
            (Some(a), _) => a,
            (None, Some(r)) => (0..r as u64).map(|a| m.element(a)).collect(),
            (None, None) => return Err(invalid("missing `alphas`")),
        };
        let t = match t {
            Some(t) => t,
            None => self.usize("t")?,
        };
        let multipliers = self.matrix("multipliers", m)?;
        Ok(CodeParams::new(m, s, t, alphas, multipliers)?)
    }
}

fn reduce(key: &str, v: &Value, m: PrimeModulus) -> CliResult<FieldElement> {
    let p = m.value() as i128;
    let raw = if let Some(u) = v.as_u64() {
        u as i128
    } else if let Some(i) = v.as_i64() {
        i as i128
    } else {
        return Err(invalid(format!("`{key}` entries must be integers, got {v}")));
    };
    let reduced = raw.rem_euclid(p);
    if reduced != raw {
        eprintln!("warning: `{key}` entry {raw} reduced mod {p} to {reduced}");
    }
    Ok(m.element(reduced as u64))
}

pub fn poly_json(f: &Polynomial) -> Value {
    let values = if f.is_zero() { vec![0] } else { f.values() };
    Value::from(values)
}

pub fn matrix_json(y: &NrtMatrix) -> Value {
    let mut obj = Map::new();
    obj.insert("s".into(), y.s().into());
    obj.insert("r".into(), y.r().into());
    obj.insert("entries".into(), Value::from(y.to_rows()));
    Value::Object(obj)
}
