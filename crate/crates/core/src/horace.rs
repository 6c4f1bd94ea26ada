//! Residue and trace with respect to the distinguished line `r`, the
//! differential (sliced) variants, and the two specialization steps used
//! for triple points.
//!
//! A point on `r` carries a [`SliceProfile`] and a slice selector `t`. After
//! specialization its bottom row is row `t` of the profile, so the trace on
//! `r` has length `widths[t]` and the residue is the profile with row `t`
//! deleted. With `t = 0` these are the ordinary residue and trace.

use serde::Serialize;

use crate::combinatorics::{bin, critical_counts, narrow, to_i64, BiDegree};
use crate::error::{Error, Result};
use crate::oracle::{hf_plane, hf_trace_line, OracleConfig};
use crate::scheme::{PlaneScheme, SliceProfile};

/// A plane scheme whose `sliced_points` lie on `r`, each with a slice selector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineConfiguration {
    scheme: PlaneScheme,
    selectors: Vec<usize>,
}

impl LineConfiguration {
    pub fn new(scheme: PlaneScheme, selectors: Vec<usize>) -> Result<Self> {
        if selectors.len() != scheme.sliced_points.len() {
            return Err(Error::InvalidInput(format!(
                "{} slice selectors for {} points on the line",
                selectors.len(),
                scheme.sliced_points.len()
            )));
        }
        for (profile, &t) in scheme.sliced_points.iter().zip(&selectors) {
            if t >= profile.widths().len() {
                return Err(Error::InvalidInput(format!(
                    "slice index {t} out of range for {profile}"
                )));
            }
        }
        Ok(Self { scheme, selectors })
    }

    /// Every on-line point uses its ordinary residue and trace.
    pub fn ordinary(scheme: PlaneScheme) -> Self {
        let selectors = vec![0; scheme.sliced_points.len()];
        Self { scheme, selectors }.pruned_line()
    }

    fn pruned_line(mut self) -> Self {
        let keep: Vec<bool> = self
            .scheme
            .sliced_points
            .iter()
            .map(|p| !p.is_empty())
            .collect();
        let mut it = keep.iter();
        self.selectors.retain(|_| *it.next().unwrap());
        self.scheme.sliced_points.retain(|p| !p.is_empty());
        self
    }

    /// The unspecialized scheme: on-line points carry their own profiles.
    pub fn scheme(&self) -> &PlaneScheme {
        &self.scheme
    }

    pub fn selectors(&self) -> &[usize] {
        &self.selectors
    }

    /// The scheme after each on-line point is turned so that slice `t` meets `r`.
    pub fn specialized(&self) -> PlaneScheme {
        let sliced = self
            .scheme
            .sliced_points
            .iter()
            .zip(&self.selectors)
            .map(|(p, &t)| {
                p.with_slice_on_line(t)
                    .expect("selector validated on construction")
            })
            .collect();
        self.scheme.clone().with_sliced(sliced)
    }

    /// Sum of the trace lengths on `r`.
    pub fn trace_degree(&self) -> u64 {
        trace_line(self).iter().sum()
    }
}

impl std::fmt::Display for LineConfiguration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}Q1 + {}Q2", self.scheme.corner_a, self.scheme.corner_b)?;
        for m in &self.scheme.general_points {
            write!(f, " + {m}P")?;
        }
        for (p, t) in self.scheme.sliced_points.iter().zip(&self.selectors) {
            write!(f, " + {p}|r^{t}")?;
        }
        Ok(())
    }
}

/// `Res^t_r`: each on-line point loses its selected slice. Off-line points
/// and corners are untouched; on-line points with nothing left are dropped.
pub fn residue_line(cfg: &LineConfiguration) -> PlaneScheme {
    let sliced = cfg
        .scheme
        .sliced_points
        .iter()
        .zip(&cfg.selectors)
        .map(|(p, &t)| {
            p.differential(t)
                .expect("selector validated on construction")
                .0
        })
        .collect();
    cfg.scheme.clone().with_sliced(sliced).pruned()
}

/// `Tr^t_r`: the length each on-line point leaves on `r`.
pub fn trace_line(cfg: &LineConfiguration) -> Vec<u64> {
    cfg.scheme
        .sliced_points
        .iter()
        .zip(&cfg.selectors)
        .map(|(p, &t)| p.widths()[t])
        .collect()
}

/// Residue and trace length of the `t`-th slice of a fat point `mP`.
pub fn diff_slice(m: u64, t: u64) -> Result<(SliceProfile, u64)> {
    if t >= m {
        return Err(Error::InvalidInput(format!(
            "slice index {t} needs 0 <= t < m = {m}"
        )));
    }
    SliceProfile::fat_point(m).differential(t as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CastelnuovoReport {
    pub lhs: u64,
    pub rhs_res: u64,
    pub rhs_tr: u64,
    pub holds: bool,
}

/// Both sides of Castelnuovo's inequality for the specialized scheme in degree `d`.
pub fn castelnuovo_check(
    cfg: &LineConfiguration,
    d: u64,
    oracle: &OracleConfig,
) -> Result<CastelnuovoReport> {
    let lhs = hf_plane(d, &cfg.specialized(), oracle)?;
    let rhs_res = match d {
        0 => 0,
        _ => hf_plane(d - 1, &residue_line(cfg), oracle)?,
    };
    let rhs_tr = hf_trace_line(d, &trace_line(cfg), oracle)?;
    Ok(CastelnuovoReport {
        lhs,
        rhs_res,
        rhs_tr,
        holds: lhs <= rhs_res + rhs_tr,
    })
}

/// An observed dimension next to the count the hypothesis asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimCheck {
    pub observed: u64,
    pub expected: i64,
}

impl DimCheck {
    pub fn holds(&self) -> bool {
        i128::from(self.observed) == i128::from(self.expected)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoraceVerdict {
    /// Both hypotheses and the conclusion were observed.
    Witnessed,
    /// Hypothesis (1), on the residue in degree `d - 1`, fails.
    ResidueFails,
    /// Hypothesis (2), on the trace in degree `d`, fails.
    TraceFails,
    /// Both hypotheses hold but the conclusion does not.
    Contradicted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HoraceReport {
    pub residue: DimCheck,
    pub trace: DimCheck,
    /// Only evaluated when both hypotheses hold.
    pub conclusion: Option<DimCheck>,
    pub verdict: HoraceVerdict,
}

impl HoraceReport {
    pub fn witnessed(&self) -> bool {
        self.verdict == HoraceVerdict::Witnessed
    }

    /// False only when the lemma would be contradicted.
    pub fn consistent(&self) -> bool {
        self.verdict != HoraceVerdict::Contradicted
    }
}

/// Checks the differential Horace lemma at one instance.
///
/// `R` is the set of on-line points of `cfg` with their selectors, `S` the
/// corners and off-line points. The conclusion is about the general scheme
/// `Z = R + S`, i.e. with the fat points of `R` moved off `r`, so every
/// on-line point must be a full fat point.
pub fn horace_verify(
    cfg: &LineConfiguration,
    d: u64,
    oracle: &OracleConfig,
) -> Result<HoraceReport> {
    let mut z = cfg.scheme.clone().with_sliced(Vec::new());
    for p in &cfg.scheme.sliced_points {
        let m = p
            .as_fat_point()
            .ok_or_else(|| Error::InvalidInput(format!("{p} on the line is not a fat point")))?;
        z.general_points.push(m);
    }

    let residue = residue_line(cfg);
    let residue_obs = match d {
        0 => 0,
        _ => hf_plane(d - 1, &residue, oracle)?,
    };
    let residue = DimCheck {
        observed: residue_obs,
        expected: narrow(bin(to_i64(d) + 1, 2)) - to_i64(residue.degree()),
    };

    let lengths = trace_line(cfg);
    let trace = DimCheck {
        observed: hf_trace_line(d, &lengths, oracle)?,
        expected: to_i64(d + 1) - to_i64(lengths.iter().sum()),
    };

    let (conclusion, verdict) = if !residue.holds() {
        (None, HoraceVerdict::ResidueFails)
    } else if !trace.holds() {
        (None, HoraceVerdict::TraceFails)
    } else {
        let check = DimCheck {
            observed: hf_plane(d, &z, oracle)?,
            expected: narrow(bin(to_i64(d) + 2, 2)) - to_i64(z.degree()),
        };
        let verdict = match check.holds() {
            true => HoraceVerdict::Witnessed,
            false => HoraceVerdict::Contradicted,
        };
        (Some(check), verdict)
    };
    Ok(HoraceReport {
        residue,
        trace,
        conclusion,
        verdict,
    })
}

/// First step for `X = aQ1 + bQ2 + 3P_1 + ... + 3P_s`: `x` points on `r`
/// with slice degree 3, `y` with slice degree 2, and for `c = 2, 3, 4` one
/// more with slice degree `c - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleStep1 {
    pub a: u64,
    pub b: u64,
    pub s: u64,
    pub h: u64,
    pub c: u64,
    pub x: u64,
    pub y: u64,
    pub extra_degree: Option<u64>,
    /// `X~`, as a line configuration.
    pub x_tilde: LineConfiguration,
    /// `T = Res_{Q1Q2}(Res_r(X~))`.
    pub t: PlaneScheme,
}

impl TripleStep1 {
    /// Degree of the plane curves in `L(X~)`.
    pub fn degree(&self) -> u64 {
        self.a + self.b
    }
}

/// Second step: the points of `T` on `r` are re-sliced with degrees 2 and 3,
/// and for `c = 1, 3, 4` one more triple point is moved onto `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleStep2 {
    pub step1: TripleStep1,
    /// Slice degrees of `P_{x+y+1}` and `P_{x+y+2}` where they lie on `r`.
    pub extra_degrees: Vec<u64>,
    pub t_tilde: LineConfiguration,
    /// `W = Res_{Q1Q2}(Res_r(T~))`.
    pub w: PlaneScheme,
    /// `Res_r(W)` with ordinary residues.
    pub res_w: PlaneScheme,
}

fn triple_with_degree(degree: u64) -> (SliceProfile, usize) {
    let p = SliceProfile::fat_point(3);
    let t = p
        .slice_of_width(degree)
        .expect("a triple point has slices of degree 1, 2, 3");
    (p, t)
}

fn check_line_degree(total: u64, want: u64, step: &str) -> Result<()> {
    if total != want {
        return Err(Error::Inconsistent(format!(
            "{step}: slices on r have total degree {total}, expected {want}"
        )));
    }
    Ok(())
}

fn step1_points(c: u64, x: u64, y: u64) -> u64 {
    x + y + u64::from(c >= 2)
}

fn step2_points(c: u64, x: u64, y: u64) -> u64 {
    match c {
        0 => x + y,
        1 | 2 => x + y + 1,
        _ => x + y + 2,
    }
}

pub fn specialize_triple_step1(a: u64, b: u64, s: u64) -> Result<TripleStep1> {
    if a < b || b < 4 || a + b < 10 {
        return Err(Error::Precondition(format!(
            "triple-point specialization needs a >= b >= 4 and a + b >= 10, got ({a}, {b})"
        )));
    }
    let (h, c) = ((a + b) / 5, (a + b) % 5);
    let (x, y) = if c == 0 {
        (h + 1, h - 1)
    } else {
        (h + 2, h - 2)
    };
    let needed = step1_points(c, x, y);
    if s < needed {
        return Err(Error::Precondition(format!(
            "step 1 for (a, b) = ({a}, {b}) puts {needed} points on r, but s = {s}"
        )));
    }
    let (s1, _) = critical_counts(BiDegree::new(a, b), 3)?;
    if x + y + 1 > s1 {
        return Err(Error::Inconsistent(format!(
            "x + y + 1 = {} exceeds s1 = {s1}",
            x + y + 1
        )));
    }

    let extra_degree = (c >= 2).then(|| c - 1);
    let degrees = std::iter::repeat(3)
        .take(x as usize)
        .chain(std::iter::repeat(2).take(y as usize))
        .chain(extra_degree);
    let (sliced, selectors): (Vec<_>, Vec<_>) = degrees.map(triple_with_degree).unzip();
    let scheme = PlaneScheme::new(a, b, vec![3; (s - needed) as usize]).with_sliced(sliced);
    let x_tilde = LineConfiguration::new(scheme, selectors)?;
    check_line_degree(x_tilde.trace_degree(), a + b + 1, "step 1")?;

    let t = residue_line(&x_tilde).residue_corner_line();
    Ok(TripleStep1 {
        a,
        b,
        s,
        h,
        c,
        x,
        y,
        extra_degree,
        x_tilde,
        t,
    })
}

pub fn specialize_triple_step2(step1: &TripleStep1) -> Result<TripleStep2> {
    let TripleStep1 {
        a, b, s, c, x, y, ..
    } = *step1;
    let needed = step2_points(c, x, y);
    if s < needed {
        return Err(Error::Precondition(format!(
            "step 2 for (a, b) = ({a}, {b}) puts {needed} points on r, but s = {s}"
        )));
    }
    if c >= 3 {
        let (s1, _) = critical_counts(BiDegree::new(a, b), 3)?;
        if x + y + 2 > s1 {
            return Err(Error::Inconsistent(format!(
                "x + y + 2 = {} exceeds s1 = {s1}",
                x + y + 2
            )));
        }
    }

    // slice degrees of P_{x+y+1}, P_{x+y+2}; P_{x+y+1} is already on r for c = 2, 3, 4
    let extra_degrees: Vec<u64> = match c {
        0 => vec![],
        1 => vec![2],
        2 => vec![3],
        3 => vec![3, 1],
        _ => vec![2, 3],
    };
    let moved = needed - step1_points(c, x, y);

    let mut t = step1.t.clone();
    let mut sliced = Vec::with_capacity(needed as usize);
    let mut selectors = Vec::with_capacity(needed as usize);
    let mut want = std::iter::repeat(2)
        .take(x as usize)
        .chain(std::iter::repeat(3).take(y as usize))
        .chain(extra_degrees.iter().copied());
    for profile in &step1.t.sliced_points {
        let degree = want
            .next()
            .expect("step 1 put at most x + y + 1 points on r");
        let sel = profile.slice_of_width(degree).ok_or_else(|| {
            Error::Inconsistent(format!("{profile} has no slice of degree {degree}"))
        })?;
        sliced.push(profile.clone());
        selectors.push(sel);
    }
    for degree in want {
        let (p, sel) = triple_with_degree(degree);
        sliced.push(p);
        selectors.push(sel);
    }
    if selectors.len() as u64 != needed {
        return Err(Error::Inconsistent(format!(
            "step 2 placed {} points on r, expected {needed}",
            selectors.len()
        )));
    }
    t.general_points
        .truncate(t.general_points.len() - moved as usize);
    let t_tilde = LineConfiguration::new(t.with_sliced(sliced), selectors)?;
    check_line_degree(t_tilde.trace_degree(), a + b - 1, "step 2")?;

    let w = residue_line(&t_tilde).residue_corner_line();
    let res_w = residue_line(&LineConfiguration::ordinary(w.clone()));
    Ok(TripleStep2 {
        step1: step1.clone(),
        extra_degrees,
        t_tilde,
        w,
        res_w,
    })
}

/// The four dimensions in the chain `X~ -> T`, `T~ -> W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleChain {
    pub x_tilde: u64,
    pub t: u64,
    pub t_tilde: u64,
    pub w: u64,
}

impl TripleChain {
    /// `dim L_{a+b}(X~) = dim L_{a+b-2}(T)` and `dim L_{a+b-2}(T~) = dim L_{a+b-4}(W)`.
    pub fn holds(&self) -> bool {
        self.x_tilde == self.t && self.t_tilde == self.w
    }
}

pub fn triple_chain(step2: &TripleStep2, oracle: &OracleConfig) -> Result<TripleChain> {
    let d = step2.step1.degree();
    Ok(TripleChain {
        x_tilde: hf_plane(d, &step2.step1.x_tilde.specialized(), oracle)?,
        t: hf_plane(d - 2, &step2.step1.t, oracle)?,
        t_tilde: hf_plane(d - 2, &step2.t_tilde.specialized(), oracle)?,
        w: hf_plane(d - 4, &step2.w, oracle)?,
    })
}
