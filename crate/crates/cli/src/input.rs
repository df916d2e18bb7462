//! Matrix documents: 9 whitespace-separated numbers per matrix, or a stream
//! of `{"matrix": [[…],[…],[…]], "modulus": p, "label": "…"}` objects.
//! Complex entries are `[re, im]` pairs (18 numbers per matrix in text).

use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use rotaxis::{CMat3, Mat3};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Entry {
    Int(i64),
    Real(f64),
    Complex(f64, f64),
}

impl Entry {
    fn real(self) -> Option<f64> {
        match self {
            Entry::Int(i) => Some(i as f64),
            Entry::Real(x) => Some(x),
            Entry::Complex(..) => None,
        }
    }

    fn complex(self) -> Complex64 {
        match self {
            Entry::Int(i) => Complex64::new(i as f64, 0.0),
            Entry::Real(x) => Complex64::new(x, 0.0),
            Entry::Complex(re, im) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument {
    pub entries: [[Entry; 3]; 3],
    pub modulus: Option<u64>,
    pub label: Option<String>,
}

impl MatrixDocument {
    pub fn real(&self) -> Result<Mat3, CliError> {
        let mut rows = [[0.0; 3]; 3];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                rows[i][j] = e
                    .real()
                    .ok_or_else(|| CliError::Parse(format!("entry ({}, {}) is complex", i + 1, j + 1)))?;
            }
        }
        Ok(Mat3::new(rows))
    }

    pub fn integer(&self) -> Result<[[i64; 3]; 3], CliError> {
        let mut rows = [[0i64; 3]; 3];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                rows[i][j] = match e {
                    Entry::Int(v) => *v,
                    _ => return Err(CliError::Parse(format!("entry ({}, {}) is not an integer", i + 1, j + 1))),
                };
            }
        }
        Ok(rows)
    }

    pub fn complex(&self) -> CMat3 {
        CMat3::from_fn(|i, j| self.entries[i][j].complex())
    }
}

pub fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Parses every matrix in `text`. With `pairs`, plain text is read as
/// `re im` pairs.
pub fn parse_documents(text: &str, pairs: bool) -> Result<Vec<MatrixDocument>, CliError> {
    let docs = match text.trim_start().as_bytes().first() {
        None => Vec::new(),
        Some(b'{') | Some(b'[') => parse_json(text)?,
        Some(_) => parse_text(text, pairs)?,
    };
    if docs.is_empty() {
        return Err(CliError::Parse("no matrix in input".into()));
    }
    Ok(docs)
}

fn parse_text(text: &str, pairs: bool) -> Result<Vec<MatrixDocument>, CliError> {
    let tokens: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .collect();
    let mut values = Vec::with_capacity(tokens.len());
    for t in &tokens {
        values.push(parse_number(t)?);
    }
    let per = if pairs { 18 } else { 9 };
    if values.len() % per != 0 {
        return Err(CliError::Parse(format!("expected a multiple of {per} numbers, found {}", values.len())));
    }
    Ok(values
        .chunks(per)
        .map(|chunk| {
            let entry = |k: usize| {
                if pairs {
                    Entry::Complex(as_f64(chunk[2 * k]), as_f64(chunk[2 * k + 1]))
                } else {
                    chunk[k]
                }
            };
            MatrixDocument {
                entries: [0, 1, 2].map(|i| [0, 1, 2].map(|j| entry(3 * i + j))),
                modulus: None,
                label: None,
            }
        })
        .collect())
}

fn as_f64(e: Entry) -> f64 {
    e.real().unwrap_or(f64::NAN)
}

fn parse_number(t: &str) -> Result<Entry, CliError> {
    if let Ok(i) = t.parse::<i64>() {
        return Ok(Entry::Int(i));
    }
    match t.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(Entry::Real(x)),
        _ => Err(CliError::Parse(format!("invalid number {t:?}"))),
    }
}

fn parse_json(text: &str) -> Result<Vec<MatrixDocument>, CliError> {
    let mut out = Vec::new();
    for (n, value) in serde_json::Deserializer::from_str(text).into_iter::<Value>().enumerate() {
        let value = value.map_err(|e| CliError::Parse(format!("document {n}: {e}")))?;
        out.push(document_from_value(&value).map_err(|e| e.at(n))?);
    }
    Ok(out)
}

fn document_from_value(value: &Value) -> Result<MatrixDocument, CliError> {
    let (matrix, modulus, label) = match value {
        Value::Object(map) => {
            let matrix = map.get("matrix").ok_or_else(|| CliError::Parse("missing \"matrix\"".into()))?;
            let modulus = match map.get("modulus") {
                None | Some(Value::Null) => None,
                Some(m) => Some(m.as_u64().ok_or_else(|| CliError::Parse("\"modulus\" must be a positive integer".into()))?),
            };
            let label = match map.get("label") {
                None | Some(Value::Null) => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(_) => return Err(CliError::Parse("\"label\" must be a string".into())),
            };
            (matrix, modulus, label)
        }
        Value::Array(_) => (value, None, None),
        _ => return Err(CliError::Parse("expected an object or a 3x3 array".into())),
    };
    let rows = matrix
        .as_array()
        .filter(|r| r.len() == 3)
        .ok_or_else(|| CliError::Parse("\"matrix\" must have exactly 3 rows".into()))?;
    let mut entries = [[Entry::Int(0); 3]; 3];
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == 3)
            .ok_or_else(|| CliError::Parse(format!("row {} must have exactly 3 entries", i + 1)))?;
        for (j, v) in row.iter().enumerate() {
            entries[i][j] = entry_from_value(v)
                .ok_or_else(|| CliError::Parse(format!("entry ({}, {}) is not a number or [re, im] pair", i + 1, j + 1)))?;
        }
    }
    Ok(MatrixDocument { entries, modulus, label })
}

fn entry_from_value(v: &Value) -> Option<Entry> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Some(Entry::Int(i)),
            None => n.as_f64().filter(|x| x.is_finite()).map(Entry::Real),
        },
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().filter(|x| x.is_finite())?;
            let im = pair[1].as_f64().filter(|x| x.is_finite())?;
            Some(Entry::Complex(re, im))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree() {
        let text = parse_documents("0 -1 0\n1 0 0\n0 0 1\n", false).unwrap();
        let json = parse_documents(r#"{"matrix": [[0, -1, 0], [1, 0, 0], [0, 0, 1]]}"#, false).unwrap();
        assert_eq!(text, json);
        assert_eq!(text[0].real().unwrap().rows[0][1], -1.0);
    }

    #[test]
    fn json_stream_with_modulus_and_label() {
        let docs = parse_documents(
            "{\"matrix\": [[4,4,3],[3,4,4],[4,3,4]], \"modulus\": 5, \"label\": \"z5\"}\n[[1,0,0],[0,1,0],[0,0,1]]",
            false,
        )
        .unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[0].modulus, Some(5));
        assert_eq!(docs[0].label.as_deref(), Some("z5"));
        assert_eq!(docs[0].integer().unwrap()[2], [4, 3, 4]);
    }

    #[test]
    fn complex_entries() {
        let docs = parse_documents("{\"matrix\": [[[0,1],0,0],[0,[0,-1],0],[0,0,1]]}", false).unwrap();
        assert_eq!(docs[0].complex().rows[1][1], Complex64::new(0.0, -1.0));
        assert!(docs[0].real().is_err());
        let text = parse_documents(&"1 0 ".repeat(9), true).unwrap();
        assert_eq!(text[0].complex().rows[2][2], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "1 2 3", "{\"matrix\": [[1,2],[3,4]]}", "{\"m\": 1}", "1 2 x 4 5 6 7 8 9", "{\"matrix\": "] {
            assert!(matches!(parse_documents(bad, false), Err(CliError::Parse(_))), "{bad:?}");
        }
    }
}
