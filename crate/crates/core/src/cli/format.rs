//! Text formats: profile tables (CSV and JSON lines), dataset CSV,
//! correlation matrices and plot data.

use std::fmt::Write as _;
use std::path::Path;

use crate::analysis::{parse_value, ComplexityProfile, CorrelationMatrix, Measure, MeasureValues, ProfileTable};
use crate::dataset::Dataset;
use crate::error::{Error, Result};

pub const PROFILE_HEADER: [&str; 16] = [
    "name", "n", "d", "F1", "F2", "F3", "L1", "L2", "L3", "N1", "N2", "N3", "N4", "T1", "T2",
    "flags",
];

const GROUP_PREFIX: &str = "group=";

/// Fixed 17-significant-digit scientific notation, `inf` / `nan` for sentinels.
pub fn format_real(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.16e}")
    }
}

fn profile_flags(p: &ComplexityProfile) -> String {
    let mut tokens: Vec<String> = p.flags.clone();
    if let Some(g) = &p.group {
        tokens.push(format!("{GROUP_PREFIX}{g}"));
    }
    tokens.join(";")
}

pub fn profiles_to_csv(table: &ProfileTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(PROFILE_HEADER)?;
    for p in &table.rows {
        let mut record = vec![p.name.clone(), p.n.to_string(), p.d.to_string()];
        record.extend(p.values().iter().map(|&v| format_real(v)));
        record.push(profile_flags(p));
        w.write_record(&record)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn profiles_to_jsonl(table: &ProfileTable) -> Result<String> {
    let mut out = String::new();
    for p in &table.rows {
        out.push_str(&serde_json::to_string(p)?);
        out.push('\n');
    }
    Ok(out)
}

/// Reads a profile table written by [`profiles_to_csv`]. Metadata not stored
/// in the CSV (seed, classes, solver) is left empty.
pub fn read_profiles_csv(path: &Path) -> Result<ProfileTable> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::Reader::from_reader(file);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_owned).collect();
    if header != PROFILE_HEADER {
        return Err(Error::Parse {
            path: path.into(),
            line: 1,
            message: format!("expected header {}", PROFILE_HEADER.join(",")),
        });
    }
    let mut rows = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let line = k + 2;
        let bad = |message: String| Error::Parse {
            path: path.into(),
            line,
            message,
        };
        let record = record.map_err(|e| bad(e.to_string()))?;
        let int = |i: usize| record[i].parse::<usize>().map_err(|_| bad(format!("bad integer in column {}", PROFILE_HEADER[i])));
        let mut values = [0.0; 12];
        for (j, v) in values.iter_mut().enumerate() {
            *v = parse_value(&record[3 + j])
                .ok_or_else(|| bad(format!("bad value {:?} for {}", &record[3 + j], Measure::ALL[j])))?;
        }
        let mut flags = Vec::new();
        let mut group = None;
        for token in record[15].split(';').filter(|t| !t.is_empty()) {
            match token.strip_prefix(GROUP_PREFIX) {
                Some(g) => group = Some(g.to_owned()),
                None => flags.push(token.to_owned()),
            }
        }
        rows.push(ComplexityProfile {
            name: record[0].to_owned(),
            n: int(1)?,
            d: int(2)?,
            seed: 0,
            classes: [String::new(), String::new()],
            group,
            measures: MeasureValues(values),
            flags,
            solver: String::new(),
            rng: String::new(),
            variance: String::new(),
        });
    }
    Ok(ProfileTable::new(rows))
}

/// Header `x1..xd,label`; coordinates in shortest round-trip form.
pub fn dataset_to_csv(ds: &Dataset) -> String {
    let mut out = String::new();
    for f in 1..=ds.dim() {
        let _ = write!(out, "x{f},");
    }
    out.push_str("label\n");
    for (i, p) in ds.points().enumerate() {
        for v in p {
            let _ = write!(out, "{v:?},");
        }
        out.push_str(ds.label(i));
        out.push('\n');
    }
    out
}

pub fn correlation_to_csv(c: &CorrelationMatrix) -> String {
    let mut out = String::from("measure");
    for m in &c.measures {
        let _ = write!(out, ",{m}");
    }
    out.push('\n');
    for (a, row) in c.measures.iter().zip(&c.values) {
        out.push_str(a.name());
        for v in row {
            let _ = write!(out, ",{}", format_real(*v));
        }
        out.push('\n');
    }
    out
}

/// Whitespace-separated `x y [group]` lines for a bivariate scatter plot.
/// Rows where either value is not finite are skipped.
pub fn plot_data(table: &ProfileTable, x: Measure, y: Measure) -> String {
    let mut out = format!("# {x} {y}");
    let grouped = table.rows.iter().any(|r| r.group.is_some());
    if grouped {
        out.push_str(" group");
    }
    out.push('\n');
    for r in &table.rows {
        let (vx, vy) = (r.get(x), r.get(y));
        if !(vx.is_finite() && vy.is_finite()) {
            continue;
        }
        let _ = write!(out, "{} {}", format_real(vx), format_real(vy));
        if grouped {
            let _ = write!(out, " {}", r.group.as_deref().unwrap_or("-"));
        }
        out.push('\n');
    }
    out
}
