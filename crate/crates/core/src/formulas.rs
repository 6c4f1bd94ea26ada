//! Closed-form Hilbert functions of `s` general fat points of multiplicity
//! `m` on P¹×P¹, and the classification of bidegrees into known and unknown
//! regions.
//!
//! Known regions:
//!
//! * `m = 1`: simple points impose independent conditions;
//! * `min(a, b) <= m`: the low-bidegree theorem ([`hf_m_ge_b`]);
//! * `m = 3`: the complete triple-point theorem ([`hf_triple`]);
//! * `m = 2`, `min(a, b) >= 3`: independent conditions;
//! * one infinite defective family for every `m >= 3` ([`defective_family`]).
//!
//! Everything else (`m >= 4` and `min(a, b) > m`) is reported as
//! [`Evaluation::Unknown`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{bin, narrow, to_i64, BiDegree, HfValue, Source, UniformFatPoints};
use crate::error::{Error, Result};
use crate::oracle::{hf_uniform_oracle, OracleConfig};
use crate::scheme::PlaneScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionKind {
    KnownFormula,
    KnownDefectiveFamily,
    Unknown,
}

/// Which result a known value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremTag {
    /// Simple points, `m = 1`.
    Simple,
    /// Low bidegrees, `m >= min(a, b)`.
    MGeB,
    /// Triple points, all bidegrees.
    Triple,
    /// Double points with `min(a, b) >= 3`, as in the reference program.
    AppendixACode,
    /// `(a, b, s) = ((2m-1)(m-2), m+1, 4m-7)`, defect 1.
    AppendixBFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionClass {
    pub kind: RegionKind,
    /// `None` exactly when `kind` is [`RegionKind::Unknown`].
    pub theorem: Option<TheoremTag>,
}

impl RegionClass {
    fn known(theorem: TheoremTag) -> Self {
        let kind = match theorem {
            TheoremTag::AppendixBFamily => RegionKind::KnownDefectiveFamily,
            _ => RegionKind::KnownFormula,
        };
        Self {
            kind,
            theorem: Some(theorem),
        }
    }

    const UNKNOWN: Self = Self {
        kind: RegionKind::Unknown,
        theorem: None,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluation {
    Known { value: HfValue, region: RegionClass },
    Unknown { region: RegionClass },
}

impl Evaluation {
    pub fn value(&self) -> Option<&HfValue> {
        match self {
            Evaluation::Known { value, .. } => Some(value),
            Evaluation::Unknown { .. } => None,
        }
    }

    pub fn region(&self) -> RegionClass {
        match self {
            Evaluation::Known { region, .. } | Evaluation::Unknown { region } => *region,
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, Evaluation::Known { .. })
    }
}

fn formula_value(deg: BiDegree, pts: UniformFatPoints, value: i64) -> HfValue {
    let value = u64::try_from(value).expect("formula produced a negative Hilbert function");
    HfValue::new(deg, pts, value, Source::Formula, true)
        .expect("formula value outside the admissible range")
}

/// Hilbert function in bidegree `(a, b)` when `m >= min(a, b)`.
///
/// `min((a+1)(b+1), s bin(m+1,2) - s bin(m-b,2))`, except for odd `s = 2k+1`
/// and `a = bk + c + s(m-b)` with `0 <= c <= b-2`, where the value drops to
/// `(a+1)(b+1) - bin(c+2, 2)`.
pub fn hf_m_ge_b(deg: BiDegree, pts: UniformFatPoints) -> Result<HfValue> {
    let deg = deg.normalized();
    let (a, b, s, m) = (to_i64(deg.a), to_i64(deg.b), to_i64(pts.s), to_i64(pts.m));
    if m < b {
        return Err(Error::Precondition(format!(
            "multiplicity {m} is below min(a, b) = {b}"
        )));
    }
    let total = (a + 1) * (b + 1);
    if s % 2 == 1 && b >= 2 {
        let k = (s - 1) / 2;
        let shifted = a - s * (m - b);
        if shifted >= 0 && shifted / b == k && shifted % b <= b - 2 {
            let c = shifted % b;
            return Ok(formula_value(deg, pts, total - narrow(bin(c + 2, 2))));
        }
    }
    let bound = s * narrow(bin(m + 1, 2) - bin(m - b, 2));
    Ok(formula_value(deg, pts, total.min(bound)))
}

/// Hilbert function of `s` general triple points in every bidegree.
///
/// `min((a+1)(b+1), 6s)` except for:
/// `b = 1`, `5s < 2(a+1)`: `5s`;
/// `s = 2k+1` and `(a, b) = (4k+1, 2)` or `(3k, 3)`: `(a+1)(b+1) - 1`;
/// `s = 2k+1` and `(a, b) = (3k+1, 3)`: `6s - 1`;
/// `s = 5`, `(a, b) = (5, 4)`: `29`.
///
/// Row `b = 0` is `min(a+1, 3s)`.
pub fn hf_triple(deg: BiDegree, s: u64) -> HfValue {
    let pts = UniformFatPoints { s, m: 3 };
    let deg = deg.normalized();
    let (a, b, s) = (to_i64(deg.a), to_i64(deg.b), to_i64(s));
    let total = (a + 1) * (b + 1);
    let value = if b == 0 {
        (a + 1).min(3 * s)
    } else if b == 1 && 5 * s < 2 * (a + 1) {
        5 * s
    } else if s % 2 == 1 && (b, a) == (2, 2 * (s - 1) + 1) {
        total - 1
    } else if s % 2 == 1 && (b, a) == (3, 3 * (s / 2)) {
        total - 1
    } else if s % 2 == 1 && (b, a) == (3, 3 * (s / 2) + 1) {
        6 * s - 1
    } else if (s, a, b) == (5, 5, 4) {
        29
    } else {
        total.min(6 * s)
    };
    formula_value(deg, pts, value)
}

/// The defective family `a = (2m-1)(m-2)`, `b = m+1`, `s = 4m-7`, `m >= 3`,
/// where the ideal has dimension one more than expected.
pub fn defective_family(deg: BiDegree, pts: UniformFatPoints) -> Option<HfValue> {
    let deg = deg.normalized();
    let m = to_i64(pts.m);
    let matches = m >= 3
        && to_i64(deg.a) == (2 * m - 1) * (m - 2)
        && to_i64(deg.b) == m + 1
        && to_i64(pts.s) == 4 * m - 7;
    if !matches {
        return None;
    }
    let expected_dim = (m - 3) * (m - 4) / 2;
    let value = formula_value(deg, pts, to_i64(deg.piece_dim()) - expected_dim - 1);
    debug_assert_eq!(value.defect, 1);
    Some(value)
}

/// Hilbert function in bidegree `deg`, or [`Evaluation::Unknown`] when no
/// closed form applies.
pub fn hf_uniform(deg: BiDegree, pts: UniformFatPoints) -> Result<Evaluation> {
    if pts.m == 0 {
        return Err(Error::InvalidInput(
            "multiplicity must be at least 1".into(),
        ));
    }
    let deg = deg.normalized();
    let known = |value, theorem| Evaluation::Known {
        value,
        region: RegionClass::known(theorem),
    };
    let total = deg.piece_dim();
    Ok(match pts.m {
        1 => known(
            formula_value(deg, pts, to_i64(total.min(pts.s))),
            TheoremTag::Simple,
        ),
        m if m >= deg.b => known(hf_m_ge_b(deg, pts)?, TheoremTag::MGeB),
        3 => known(hf_triple(deg, pts.s), TheoremTag::Triple),
        2 => known(
            formula_value(deg, pts, to_i64(total.min(3 * pts.s))),
            TheoremTag::AppendixACode,
        ),
        _ => match defective_family(deg, pts) {
            Some(v) => known(v, TheoremTag::AppendixBFamily),
            None => Evaluation::Unknown {
                region: RegionClass::UNKNOWN,
            },
        },
    })
}

/// First `a` from which column `b` is constant, equal to the scheme degree.
/// Defined for `b` in `{m-1, m}`: `b(k+1) + s(m-b) - 1` with `k = floor(s/2)`.
pub fn stabilization_threshold(b: u64, pts: UniformFatPoints) -> Result<u64> {
    if b != pts.m && b + 1 != pts.m {
        return Err(Error::Precondition(format!(
            "column {b} is not m-1 or m for m = {}",
            pts.m
        )));
    }
    let k = pts.s / 2;
    Ok((b * (k + 1) + pts.s * (pts.m - b)).saturating_sub(1))
}

/// The plane model `aQ1 + bQ2 + mP_1 + ... + mP_s` in degree `a + b`.
pub fn reduce_to_plane(deg: BiDegree, pts: UniformFatPoints) -> (PlaneScheme, u64) {
    (
        PlaneScheme::new(deg.a, deg.b, pts.multiplicities()),
        deg.a + deg.b,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCell {
    pub deg: BiDegree,
    pub region: RegionClass,
    /// `None` for unknown cells that were not resolved by the oracle.
    pub value: Option<HfValue>,
}

impl TableCell {
    pub fn resolved_by_oracle(&self) -> bool {
        self.value.is_some_and(|v| v.source == Source::Oracle)
    }
}

/// Hilbert-function table, row index `b`, column index `a`, both from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub pts: UniformFatPoints,
    pub a_max: u64,
    pub b_max: u64,
    pub rows: Vec<Vec<TableCell>>,
}

impl Table {
    pub fn get(&self, a: u64, b: u64) -> Option<&TableCell> {
        self.rows.get(b as usize)?.get(a as usize)
    }

    pub fn cells(&self) -> impl Iterator<Item = &TableCell> {
        self.rows.iter().flatten()
    }
}

/// Fills the `(b_max+1) x (a_max+1)` grid. With an oracle configuration,
/// unknown cells are computed by rank and tagged [`Source::Oracle`]; cells
/// are evaluated in parallel and the result does not depend on the order.
pub fn table_region(
    pts: UniformFatPoints,
    a_max: u64,
    b_max: u64,
    oracle: Option<&OracleConfig>,
) -> Result<Table> {
    let degs: Vec<BiDegree> = (0..=b_max)
        .flat_map(|b| (0..=a_max).map(move |a| BiDegree::new(a, b)))
        .collect();
    let cells: Vec<TableCell> = degs
        .par_iter()
        .map(|&deg| -> Result<TableCell> {
            let eval = hf_uniform(deg, pts)?;
            let value = match (eval.value(), oracle) {
                (Some(v), _) => Some(*v),
                (None, Some(cfg)) => {
                    let rank = hf_uniform_oracle(deg, pts, cfg)?;
                    Some(HfValue::new(deg, pts, rank, Source::Oracle, false)?)
                }
                (None, None) => None,
            };
            Ok(TableCell {
                deg,
                region: eval.region(),
                value,
            })
        })
        .collect::<Result<_>>()?;
    let rows = cells
        .chunks(a_max as usize + 1)
        .map(<[TableCell]>::to_vec)
        .collect();
    Ok(Table {
        pts,
        a_max,
        b_max,
        rows,
    })
}
