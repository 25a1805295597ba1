use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::linprog::{interpolated_test_set, LinearFit, SOLVER_ID};
use crate::neighbors::{n1_boundary_fraction, NeighborTable};
use crate::overlap::{f1_max_fisher, f2_overlap_volume, f3_max_feature_efficiency};
use crate::rng::RNG_ID;
use crate::topology::{t1_adherence_fraction, t2_points_per_dimension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    F1,
    F2,
    F3,
    L1,
    L2,
    L3,
    N1,
    N2,
    N3,
    N4,
    T1,
    T2,
}

impl Measure {
    pub const ALL: [Measure; 12] = [
        Measure::F1,
        Measure::F2,
        Measure::F3,
        Measure::L1,
        Measure::L2,
        Measure::L3,
        Measure::N1,
        Measure::N2,
        Measure::N3,
        Measure::N4,
        Measure::T1,
        Measure::T2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::F1 => "F1",
            Measure::F2 => "F2",
            Measure::F3 => "F3",
            Measure::L1 => "L1",
            Measure::L2 => "L2",
            Measure::L3 => "L3",
            Measure::N1 => "N1",
            Measure::N2 => "N2",
            Measure::N3 => "N3",
            Measure::N4 => "N4",
            Measure::T1 => "T1",
            Measure::T2 => "T2",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn description(self) -> &'static str {
        match self {
            Measure::F1 => "maximum Fisher's discriminant ratio",
            Measure::F2 => "volume of overlap region",
            Measure::F3 => "maximum individual feature efficiency",
            Measure::L1 => "minimized sum of error distance by linear programming",
            Measure::L2 => "error rate of linear classifier by linear programming",
            Measure::L3 => "nonlinearity of linear classifier",
            Measure::N1 => "fraction of points on boundary (MST)",
            Measure::N2 => "ratio of average intra/inter class NN distance",
            Measure::N3 => "leave-one-out error rate of 1NN classifier",
            Measure::N4 => "nonlinearity of 1NN classifier",
            Measure::T1 => "fraction of retained adherence balls",
            Measure::T2 => "average number of points per dimension",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Measure> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown measure {s:?}")))
    }
}

impl Serialize for Measure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Degenerate cases that fired while computing a profile.
pub mod flags {
    pub const F1_INFINITE: &str = "f1_infinite";
    pub const N2_INFINITE: &str = "n2_infinite";
    pub const N2_SINGLETON_EXCLUDED: &str = "n2_singleton_excluded";
    pub const N2_NO_INTRA: &str = "n2_no_intra_neighbors";
    pub const L1_DEGENERATE_DIAGONAL: &str = "l1_degenerate_diagonal";
}

/// Text form of a measure value: shortest round-trip decimal, or `inf` /
/// `nan` for the sentinels.
pub fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v:?}")
    }
}

pub fn parse_value(s: &str) -> Option<f64> {
    match s.trim() {
        "inf" | "+inf" | "Infinity" => Some(f64::INFINITY),
        "-inf" | "-Infinity" => Some(f64::NEG_INFINITY),
        "nan" | "NaN" => Some(f64::NAN),
        other => other.parse().ok(),
    }
}

/// The twelve measure values in fixed order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureValues(pub [f64; 12]);

impl MeasureValues {
    pub fn get(&self, m: Measure) -> f64 {
        self.0[m.index()]
    }
}

impl Serialize for MeasureValues {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(12))?;
        for m in Measure::ALL {
            let v = self.get(m);
            if v.is_finite() {
                map.serialize_entry(m.name(), &v)?;
            } else {
                map.serialize_entry(m.name(), &format_value(v))?;
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MeasureValues {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        let raw = BTreeMap::<String, Raw>::deserialize(deserializer)?;
        let mut values = [0.0; 12];
        for m in Measure::ALL {
            values[m.index()] = match raw.get(m.name()) {
                Some(Raw::Number(v)) => *v,
                Some(Raw::Text(s)) => parse_value(s)
                    .ok_or_else(|| de::Error::custom(format!("bad value {s:?} for {m}")))?,
                None => return Err(de::Error::missing_field(m.name())),
            };
        }
        Ok(MeasureValues(values))
    }
}

/// The twelve measures of one problem together with how they were obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub name: String,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub classes: [String; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub measures: MeasureValues,
    pub flags: Vec<String>,
    pub solver: String,
    pub rng: String,
    pub variance: String,
}

impl ComplexityProfile {
    pub fn get(&self, m: Measure) -> f64 {
        self.measures.get(m)
    }

    pub fn values(&self) -> &[f64; 12] {
        &self.measures.0
    }

    pub fn with_group(mut self, group: impl Into<String>) -> Self {
        self.group = Some(group.into());
        self
    }
}

/// All twelve measures. `seed` drives only the interpolated test set shared by
/// L3 and N4.
pub fn compute_profile(ds: &Dataset, seed: u64) -> Result<ComplexityProfile> {
    let mut flags = Vec::new();

    let f1 = f1_max_fisher(ds);
    if f1.is_infinite() {
        flags.push(flags::F1_INFINITE.to_owned());
    }
    let f2 = f2_overlap_volume(ds);
    let f3 = f3_max_feature_efficiency(ds);

    let fit = LinearFit::train(ds).map_err(|e| e.in_measure("L1"))?;
    if fit.degenerate_diagonal() {
        flags.push(flags::L1_DEGENERATE_DIAGONAL.to_owned());
    }
    let test = interpolated_test_set(ds, ds.len(), seed);
    let l1 = fit.l1();
    let l2 = fit.l2(ds);
    let l3 = fit.error_on(&test);

    let n1 = n1_boundary_fraction(ds);
    let table = NeighborTable::build(ds);
    let n2 = table.intra_inter_ratio();
    if table.singletons() > 0 {
        flags.push(flags::N2_SINGLETON_EXCLUDED.to_owned());
        if table.singletons() == ds.len() {
            flags.push(flags::N2_NO_INTRA.to_owned());
        }
    }
    if n2.is_infinite() {
        flags.push(flags::N2_INFINITE.to_owned());
    }
    let n3 = table.loo_error();
    let n4 = crate::neighbors::n4_on(ds, &test);

    let t1 = t1_adherence_fraction(ds);
    let t2 = t2_points_per_dimension(ds);

    Ok(ComplexityProfile {
        name: ds.name().to_owned(),
        n: ds.len(),
        d: ds.dim(),
        seed,
        classes: ds.classes().clone(),
        group: None,
        measures: MeasureValues([f1, f2, f3, l1, l2, l3, n1, n2, n3, n4, t1, t2]),
        flags,
        solver: SOLVER_ID.to_owned(),
        rng: RNG_ID.to_owned(),
        variance: "population".to_owned(),
    })
}

/// Profiles of many problems, one row each.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ProfileTable {
    pub rows: Vec<ComplexityProfile>,
}

impl ProfileTable {
    pub fn new(rows: Vec<ComplexityProfile>) -> Self {
        ProfileTable { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column(&self, m: Measure) -> Vec<f64> {
        self.rows.iter().map(|r| r.get(m)).collect()
    }

    /// Rows carrying the given group tag.
    pub fn group(&self, tag: &str) -> ProfileTable {
        ProfileTable::new(
            self.rows
                .iter()
                .filter(|r| r.group.as_deref() == Some(tag))
                .cloned()
                .collect(),
        )
    }

    /// Mean of a measure over rows where it is finite.
    pub fn mean(&self, m: Measure) -> f64 {
        let vals: Vec<f64> = self.column(m).into_iter().filter(|v| v.is_finite()).collect();
        vals.iter().sum::<f64>() / vals.len() as f64
    }
}
