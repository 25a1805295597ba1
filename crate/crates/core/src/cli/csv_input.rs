use std::path::Path;

use super::encoding::{encode_categoricals, CategoricalEncoding};
use crate::error::{Error, Result};

/// Feature matrix and labels read from a delimited file.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTable {
    pub name: String,
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<String>,
    /// Encodings for columns that were coded to integers.
    pub encodings: Vec<CategoricalEncoding>,
}

impl RawTable {
    pub fn distinct_labels(&self) -> Vec<String> {
        let mut seen: Vec<String> = self.labels.clone();
        seen.sort();
        seen.dedup();
        seen
    }
}

fn resolve_column(header: &[String], wanted: &str) -> Result<usize> {
    if let Some(i) = header.iter().position(|h| h == wanted) {
        return Ok(i);
    }
    match wanted.parse::<usize>() {
        Ok(i) if i < header.len() => Ok(i),
        _ => Err(Error::MissingColumn {
            wanted: wanted.to_owned(),
            available: header.to_vec(),
        }),
    }
}

/// Reads a CSV with a header row. `label_column` is a header name or a
/// zero-based column index. Without `encode` every other cell must parse as a
/// number; with it, columns holding any non-numeric cell are coded by first
/// appearance.
pub fn parse_csv(path: &Path, label_column: &str, encode: bool) -> Result<RawTable> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(file);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header.is_empty() || header.iter().all(String::is_empty) {
        return Err(Error::Parse {
            path: path.into(),
            line: 1,
            message: "empty file".into(),
        });
    }
    let label_idx = resolve_column(&header, label_column)?;

    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut labels = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let line = k + 2;
        let record = record.map_err(|e| Error::Parse {
            path: path.into(),
            line,
            message: e.to_string(),
        })?;
        if record.len() != header.len() {
            return Err(Error::Parse {
                path: path.into(),
                line,
                message: format!("expected {} fields, found {}", header.len(), record.len()),
            });
        }
        labels.push(record[label_idx].to_owned());
        cells.push(
            record
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != label_idx)
                .map(|(_, c)| c.to_owned())
                .collect(),
        );
    }
    if cells.is_empty() {
        return Err(Error::Parse {
            path: path.into(),
            line: 2,
            message: "no data rows".into(),
        });
    }

    let feature_names: Vec<String> = header
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != label_idx)
        .map(|(_, h)| h.clone())
        .collect();
    let width = feature_names.len();
    let mut rows = vec![vec![0.0; width]; cells.len()];
    let mut encodings = Vec::new();
    for f in 0..width {
        let parsed: Vec<Option<f64>> = cells.iter().map(|r| r[f].parse::<f64>().ok()).collect();
        if let Some(bad) = parsed.iter().position(|v| v.is_none()) {
            if !encode {
                return Err(Error::Parse {
                    path: path.into(),
                    line: bad + 2,
                    message: format!(
                        "column {:?}: non-numeric value {:?} (use --encode for categorical data)",
                        feature_names[f], cells[bad][f]
                    ),
                });
            }
            let column: Vec<&str> = cells.iter().map(|r| r[f].as_str()).collect();
            let (codes, enc) = encode_categoricals(feature_names[f].clone(), &column);
            for (row, code) in rows.iter_mut().zip(codes) {
                row[f] = code as f64;
            }
            encodings.push(enc);
        } else {
            for (row, v) in rows.iter_mut().zip(parsed) {
                row[f] = v.unwrap_or_default();
            }
        }
    }

    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(RawTable {
        name,
        feature_names,
        rows,
        labels,
        encodings,
    })
}
