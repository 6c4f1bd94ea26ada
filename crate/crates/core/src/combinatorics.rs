//! Integer combinatorics shared by the formula and oracle paths.
//!
//! Everything here is computed in checked 64/128-bit arithmetic. An
//! overflow is a panic with a message, never a wrapped value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binomial coefficient with the convention `bin(i, j) = 0` unless `0 <= j <= i`.
pub fn bin(i: i64, j: i64) -> i128 {
    if j < 0 || i < 0 || j > i {
        return 0;
    }
    let j = j.min(i - j);
    let mut acc: i128 = 1;
    for k in 0..j {
        // acc * (i - k) is divisible by (k + 1) at every step
        acc = acc.checked_mul((i - k) as i128).expect("binomial overflow") / (k as i128 + 1);
    }
    acc
}

/// Falling factorial `n (n-1) ... (n-k+1)`, zero when `k > n`.
pub fn falling(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, t| {
        acc.checked_mul((n - t) as u128)
            .expect("falling factorial overflow")
    })
}

pub(crate) fn to_i64(v: u64) -> i64 {
    i64::try_from(v).expect("value exceeds i64")
}

pub(crate) fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("value exceeds i64")
}

/// A bidegree `(a, b)` indexing the graded piece `S_(a,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiDegree {
    pub a: u64,
    pub b: u64,
}

impl BiDegree {
    pub fn new(a: u64, b: u64) -> Self {
        Self { a, b }
    }

    /// The same bidegree with `a >= b`. Swapping the two factors of P¹×P¹
    /// preserves the Hilbert function of general points.
    pub fn normalized(self) -> Self {
        Self {
            a: self.a.max(self.b),
            b: self.a.min(self.b),
        }
    }

    pub fn swapped(self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    /// `(a+1)(b+1)`, the dimension of the whole graded piece.
    pub fn piece_dim(self) -> u64 {
        (self.a + 1)
            .checked_mul(self.b + 1)
            .expect("bidegree piece dimension overflow")
    }
}

/// The scheme `mP_1 + ... + mP_s` of `s` general points of multiplicity `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniformFatPoints {
    pub s: u64,
    pub m: u64,
}

impl UniformFatPoints {
    pub fn new(s: u64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput(
                "multiplicity must be at least 1".into(),
            ));
        }
        Ok(Self { s, m })
    }

    /// Conditions imposed by one point: `bin(m+1, 2)`.
    pub fn conditions_per_point(&self) -> u64 {
        u64::try_from(bin(to_i64(self.m) + 1, 2)).expect("multiplicity too large")
    }

    /// Length of the scheme, `s * bin(m+1, 2)`.
    pub fn degree(&self) -> u64 {
        self.s
            .checked_mul(self.conditions_per_point())
            .expect("scheme degree overflow")
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        vec![self.m; self.s as usize]
    }
}

/// `(a+1)(b+1) - s bin(m+1, 2)`; negative when the points over-determine the piece.
pub fn virtual_dim_bi(deg: BiDegree, pts: UniformFatPoints) -> i64 {
    to_i64(deg.piece_dim()) - to_i64(pts.degree())
}

/// Virtual dimension of `L_{a+b}(aQ1 + bQ2 + mP_1 + ... + mP_s)` in the plane.
pub fn virtual_dim_plane(a: u64, b: u64, pts: UniformFatPoints) -> i64 {
    let (a, b) = (to_i64(a), to_i64(b));
    narrow(bin(a + b + 2, 2) - bin(a + 1, 2) - bin(b + 1, 2) - i128::from(pts.degree()))
}

/// The critical point counts `(floor, ceil)` of `(a+1)(b+1) / bin(m+1, 2)`.
///
/// Non-defectivity at both counts implies it for every `s`.
pub fn critical_counts(deg: BiDegree, m: u64) -> Result<(u64, u64)> {
    let per_point = UniformFatPoints::new(0, m)?.conditions_per_point();
    let total = deg.piece_dim();
    let s1 = total / per_point;
    let s2 = if total % per_point == 0 { s1 } else { s1 + 1 };
    Ok((s1, s2))
}

/// Where a Hilbert-function value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Formula,
    Oracle,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Source::Formula => f.write_str("formula"),
            Source::Oracle => f.write_str("oracle"),
        }
    }
}

/// A Hilbert-function value at one bidegree, together with the dimension
/// bookkeeping of the ideal's graded piece.
///
/// `defect` is measured against the expected dimension `max(0, virtual)`;
/// [`HfValue::algebraic_defect`] measures against the virtual dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfValue {
    pub value: u64,
    pub source: Source,
    pub known: bool,
    pub virtual_dim: i64,
    pub expected_dim: u64,
    pub defect: u64,
    pub defective: bool,
}

impl HfValue {
    /// Fills in the dimension fields for `value` at `deg`.
    ///
    /// Fails when `value` is not a possible Hilbert-function value, i.e. when
    /// it exceeds the piece dimension or the scheme degree.
    pub fn new(
        deg: BiDegree,
        pts: UniformFatPoints,
        value: u64,
        source: Source,
        known: bool,
    ) -> Result<Self> {
        let total = deg.piece_dim();
        if value > total.min(pts.degree()) {
            return Err(Error::Inconsistent(format!(
                "HF value {value} at ({}, {}) exceeds min({total}, {})",
                deg.a,
                deg.b,
                pts.degree()
            )));
        }
        let virtual_dim = virtual_dim_bi(deg, pts);
        let expected_dim = virtual_dim.max(0) as u64;
        let ideal_dim = total - value;
        // value <= degree forces ideal_dim >= virtual, and value <= total forces ideal_dim >= 0
        let defect = ideal_dim - expected_dim;
        Ok(Self {
            value,
            source,
            known,
            virtual_dim,
            expected_dim,
            defect,
            defective: defect > 0,
        })
    }

    /// Dimension of the ideal's piece, `(a+1)(b+1) - value`.
    pub fn ideal_dim(&self) -> u64 {
        self.expected_dim + self.defect
    }

    /// Actual dimension minus virtual dimension; at least [`HfValue::defect`].
    pub fn algebraic_defect(&self) -> i64 {
        to_i64(self.ideal_dim()) - self.virtual_dim
    }
}
