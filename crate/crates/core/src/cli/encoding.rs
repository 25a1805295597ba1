use serde::{Deserialize, Serialize};

/// Integer codes for one text column, assigned in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoricalEncoding {
    pub column: String,
    /// `values[code]` is the original text.
    pub values: Vec<String>,
}

impl CategoricalEncoding {
    pub fn decode(&self, codes: &[usize]) -> Vec<String> {
        codes.iter().map(|&c| self.values[c].clone()).collect()
    }

    pub fn code_of(&self, value: &str) -> Option<usize> {
        self.values.iter().position(|v| v == value)
    }
}

pub fn encode_categoricals<S: AsRef<str>>(
    column: impl Into<String>,
    values: &[S],
) -> (Vec<usize>, CategoricalEncoding) {
    let mut encoding = CategoricalEncoding {
        column: column.into(),
        values: Vec::new(),
    };
    let codes = values
        .iter()
        .map(|v| {
            let v = v.as_ref();
            encoding.code_of(v).unwrap_or_else(|| {
                encoding.values.push(v.to_owned());
                encoding.values.len() - 1
            })
        })
        .collect();
    (codes, encoding)
}
