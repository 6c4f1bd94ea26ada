use fatpoints::combinatorics::{virtual_dim_bi, HfValue, Source};
use fatpoints::{BiDegree, UniformFatPoints};
use serde::{Deserialize, Serialize};

/// One cell of output. The value-dependent fields are `null` for a cell
/// with no closed form that the oracle was not asked to resolve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub s: u64,
    pub value: Option<u64>,
    pub source: Option<Source>,
    pub known: bool,
    pub defective: Option<bool>,
    pub defect: Option<u64>,
    pub virtual_dim: i64,
    pub expected_dim: u64,
}

impl OutputRecord {
    pub fn new(deg: BiDegree, pts: UniformFatPoints, value: Option<&HfValue>) -> Self {
        let virtual_dim = virtual_dim_bi(deg, pts);
        Self {
            a: deg.a,
            b: deg.b,
            m: pts.m,
            s: pts.s,
            value: value.map(|v| v.value),
            source: value.map(|v| v.source),
            known: value.is_some_and(|v| v.known),
            defective: value.map(|v| v.defective),
            defect: value.map(|v| v.defect),
            virtual_dim,
            expected_dim: virtual_dim.max(0) as u64,
        }
    }

    pub const CSV_HEADER: &'static str = "a,b,m,s,value,source,known,defective,defect";

    pub fn csv_row(&self) -> String {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.a,
            self.b,
            self.m,
            self.s,
            opt(self.value),
            opt(self.source),
            self.known,
            opt(self.defective),
            opt(self.defect)
        )
    }

    pub fn text_line(&self) -> String {
        let value = match (self.value, self.source) {
            (Some(v), Some(src)) => format!("{v} ({src})"),
            _ => "unknown".to_string(),
        };
        let mut line = format!(
            "HF({}, {}) = {value}   m={} s={} virtual={} expected={}",
            self.a, self.b, self.m, self.s, self.virtual_dim, self.expected_dim
        );
        if let Some(d) = self.defect.filter(|&d| d > 0) {
            line.push_str(&format!(" defect={d}"));
        }
        line
    }
}
