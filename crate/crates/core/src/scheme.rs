//! Plane schemes: two corner fat points, general fat points, and
//! vertically graded points sliced along a distinguished line.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{bin, to_i64};
use crate::error::{Error, Result};

/// Row widths `(d_0, d_1, ..., d_k)` of a scheme supported at one point of the
/// distinguished line: `d_j` conditions at level `y^j` in a local frame where
/// the line is `y = 0`.
///
/// Trailing zero rows are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SliceProfile {
    widths: Vec<u64>,
}

impl SliceProfile {
    pub fn new(widths: impl Into<Vec<u64>>) -> Self {
        let mut widths = widths.into();
        while widths.last() == Some(&0) {
            widths.pop();
        }
        Self { widths }
    }

    /// The fat point `mP` on the line: widths `(m, m-1, ..., 1)`.
    pub fn fat_point(m: u64) -> Self {
        Self::new((1..=m).rev().collect::<Vec<_>>())
    }

    pub fn widths(&self) -> &[u64] {
        &self.widths
    }

    pub fn is_empty(&self) -> bool {
        self.widths.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.widths.iter().sum()
    }

    /// Width of the bottom row, i.e. the length of the trace on the line.
    pub fn bottom(&self) -> u64 {
        self.widths.first().copied().unwrap_or(0)
    }

    /// The multiplicity `m` if this profile is the full fat point `mP`.
    pub fn as_fat_point(&self) -> Option<u64> {
        let m = self.bottom();
        (*self == Self::fat_point(m)).then_some(m)
    }

    /// Widths never increase going up, i.e. the conditions form an ideal.
    pub fn is_vertically_graded(&self) -> bool {
        self.widths.windows(2).all(|w| w[0] >= w[1])
    }

    /// Residue with respect to the line: the bottom row goes, the rest shift down.
    pub fn residue(&self) -> Self {
        Self::new(self.widths.iter().skip(1).copied().collect::<Vec<_>>())
    }

    /// The `t`-th differential residue and trace: row `t` is removed (rows
    /// above it shift down one level) and its width is the trace length.
    pub fn differential(&self, t: usize) -> Result<(Self, u64)> {
        if t >= self.widths.len() {
            return Err(Error::InvalidInput(format!(
                "slice index {t} out of range for profile {:?}",
                self.widths
            )));
        }
        let mut rest = self.widths.clone();
        let trace = rest.remove(t);
        Ok((Self::new(rest), trace))
    }

    /// The concrete profile of this point after choosing slice `t` to meet the
    /// line: row `t` at the bottom, followed by the `t`-th residue.
    pub fn with_slice_on_line(&self, t: usize) -> Result<Self> {
        let (rest, trace) = self.differential(t)?;
        let mut widths = Vec::with_capacity(self.widths.len());
        widths.push(trace);
        widths.extend_from_slice(&rest.widths);
        Ok(Self { widths })
    }

    /// First slice index whose row has width `width`.
    pub fn slice_of_width(&self, width: u64) -> Option<usize> {
        self.widths.iter().position(|&w| w == width)
    }
}

impl std::fmt::Display for SliceProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(m) = self.as_fat_point() {
            return write!(f, "{m}P");
        }
        let parts: Vec<String> = self.widths.iter().map(u64::to_string).collect();
        write!(f, "D({})", parts.join(","))
    }
}

/// The plane model `aQ1 + bQ2 + sum m_i P_i`, plus points sliced along the
/// distinguished line.
///
/// `Q1 = [0:1:0]` and `Q2 = [0:0:1]`; the line through them is the line at
/// infinity. General points are drawn in the chart `x0 = 1`, off the
/// distinguished line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PlaneScheme {
    pub corner_a: u64,
    pub corner_b: u64,
    pub general_points: Vec<u64>,
    pub sliced_points: Vec<SliceProfile>,
}

impl PlaneScheme {
    pub fn new(corner_a: u64, corner_b: u64, general_points: Vec<u64>) -> Self {
        Self {
            corner_a,
            corner_b,
            general_points,
            sliced_points: Vec::new(),
        }
    }

    pub fn with_sliced(mut self, sliced: Vec<SliceProfile>) -> Self {
        self.sliced_points = sliced;
        self
    }

    /// Total length: the corner and general fat points contribute
    /// `bin(m+1, 2)` each, sliced points their profile degree.
    pub fn degree(&self) -> u64 {
        let fat = |m: u64| u64::try_from(bin(to_i64(m) + 1, 2)).expect("multiplicity too large");
        fat(self.corner_a)
            + fat(self.corner_b)
            + self.general_points.iter().map(|&m| fat(m)).sum::<u64>()
            + self
                .sliced_points
                .iter()
                .map(SliceProfile::degree)
                .sum::<u64>()
    }

    /// Residue with respect to the line `Q1Q2`: both corners drop by one.
    pub fn residue_corner_line(&self) -> Self {
        Self {
            corner_a: self.corner_a.saturating_sub(1),
            corner_b: self.corner_b.saturating_sub(1),
            ..self.clone()
        }
    }

    /// Sliced points that impose no conditions are dropped.
    pub fn pruned(mut self) -> Self {
        self.general_points.retain(|&m| m > 0);
        self.sliced_points.retain(|p| !p.is_empty());
        self
    }
}

impl std::fmt::Display for PlaneScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}Q1 + {}Q2", self.corner_a, self.corner_b)?;
        for m in &self.general_points {
            write!(f, " + {m}P")?;
        }
        for p in &self.sliced_points {
            write!(f, " + {p}|r")?;
        }
        Ok(())
    }
}
