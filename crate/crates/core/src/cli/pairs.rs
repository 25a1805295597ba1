use super::csv_input::RawTable;
use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// The two-class problem formed by rows labeled `a` or `b`.
pub fn restrict(table: &RawTable, a: &str, b: &str) -> Result<Dataset> {
    let (rows, labels): (Vec<Vec<f64>>, Vec<String>) = table
        .rows
        .iter()
        .zip(&table.labels)
        .filter(|(_, l)| *l == a || *l == b)
        .map(|(r, l)| (r.clone(), l.clone()))
        .unzip();
    if rows.is_empty() {
        return Err(Error::InvalidArgument(format!("no rows labeled {a:?} or {b:?}")));
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Dataset::new(format!("{}:{lo}-vs-{hi}", table.name), rows, labels)
}

/// One problem per unordered label pair, pairs in lexicographic order.
pub fn all_pairs(table: &RawTable) -> Result<Vec<Dataset>> {
    let labels = table.distinct_labels();
    if labels.len() < 2 {
        return Err(Error::ClassCount {
            found: labels.len(),
            row: 0,
            label: labels.first().cloned().unwrap_or_default(),
        });
    }
    let mut out = Vec::with_capacity(labels.len() * (labels.len() - 1) / 2);
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            out.push(restrict(table, a, b)?);
        }
    }
    Ok(out)
}

/// The table as a single problem. It must hold exactly two labels.
pub fn whole(table: &RawTable) -> Result<Dataset> {
    Dataset::new(table.name.clone(), table.rows.clone(), table.labels.clone())
}
