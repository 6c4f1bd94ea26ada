//! Ground-truth Hilbert functions by exact rank over a prime field.
//!
//! A fat point of multiplicity `m` imposes the vanishing of every partial
//! derivative of order `< m`. Evaluating those derivatives on the monomial
//! basis of the ambient graded piece at pseudo-random support gives a
//! conditions matrix whose rank is the Hilbert function of the scheme in
//! general position, except with probability about `trials * poly(a, b) / p`.
//! Taking the maximum rank over several independent supports only moves the
//! estimate towards the generic value.
//!
//! Every support is derived deterministically from the master seed, the
//! instance, and the trial index, so results do not depend on evaluation
//! order or thread count.

mod field;
mod matrix;
mod support;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{bin, to_i64, BiDegree, UniformFatPoints};
use crate::error::{Error, Result};
use crate::formulas::reduce_to_plane;
use crate::scheme::PlaneScheme;

pub use field::{is_prime, FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::{rank_mod_p, ConditionsMatrix};
pub use support::{derive_seed, SupportSample};

pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_SEED: u64 = 0x00C0_FFEE_F00D;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub prime: u64,
    pub trials: u32,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            prime: DEFAULT_PRIME,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn with_prime(self, prime: u64) -> Self {
        Self { prime, ..self }
    }

    pub fn with_trials(self, trials: u32) -> Self {
        Self { trials, ..self }
    }

    pub fn field(&self) -> Result<PrimeField> {
        if self.trials == 0 {
            return Err(Error::Config("at least one trial is required".into()));
        }
        PrimeField::new(self.prime)
    }

    /// The prime must exceed every exponent and multiplicity of an instance,
    /// otherwise falling factorials vanish for reasons unrelated to geometry.
    fn field_for(&self, max_exponent: u64) -> Result<PrimeField> {
        let field = self.field()?;
        if max_exponent >= field.modulus() {
            return Err(Error::Config(format!(
                "prime {} does not exceed instance size {max_exponent}",
                field.modulus()
            )));
        }
        Ok(field)
    }
}

/// Which model a support sample is drawn for; keeps the streams apart.
#[derive(Debug, Clone, Copy)]
#[repr(u64)]
enum Stream {
    Biprojective = 1,
    Plane = 2,
    Line = 3,
}

fn falling_mod(f: PrimeField, n: u64, k: u64) -> FieldElement {
    if k > n {
        return 0;
    }
    (0..k).fold(1 % f.modulus(), |acc, t| f.mul(acc, (n - t) % f.modulus()))
}

/// Conditions of the P¹×P¹ model in the affine chart: monomials `x^j y^l`
/// (`j <= a`, `l <= b`, column `j (b+1) + l`) and, for each point `(p, q)`
/// of multiplicity `m`, the rows `∂x^c ∂y^e f (p, q)` with `c + e < m`.
pub fn biproj_matrix(
    deg: BiDegree,
    mults: &[u64],
    sample: &SupportSample,
    field: PrimeField,
) -> ConditionsMatrix {
    let (a, b) = (deg.a as usize, deg.b as usize);
    let cols = (a + 1) * (b + 1);
    let mut mat = ConditionsMatrix::new(field, cols);
    let mut row = vec![0; cols];
    for (&m, &(p, q)) in mults.iter().zip(&sample.points) {
        let (px, qy) = (field.powers(p, a), field.powers(q, b));
        for c in 0..m as usize {
            for e in 0..m as usize - c {
                for j in 0..=a {
                    let fx = if j >= c {
                        field.mul(falling_mod(field, j as u64, c as u64), px[j - c])
                    } else {
                        0
                    };
                    for l in 0..=b {
                        row[j * (b + 1) + l] = if fx != 0 && l >= e {
                            field.mul(
                                fx,
                                field.mul(falling_mod(field, l as u64, e as u64), qy[l - e]),
                            )
                        } else {
                            0
                        };
                    }
                }
                mat.push_row(&row);
            }
        }
    }
    mat
}

/// Monomials `x^i y^j` with `i + j <= d` in the chart `x0 = 1`.
fn plane_monomials(d: usize) -> Vec<(usize, usize)> {
    (0..=d)
        .flat_map(|i| (0..=d - i).map(move |j| (i, j)))
        .collect()
}

/// Conditions of the plane model in degree `d`.
///
/// Corners use homogeneous derivatives of order `mult - 1` at their exact
/// coordinates; general points use affine derivatives of order `< m`; sliced
/// points on the line `y = x + 1` use derivatives in the frame
/// `u = x - p`, `v = y - x - 1`, where `∂u = ∂x + ∂y` and `∂v = ∂y`, taking
/// `∂u^i ∂v^j f` for `i < width_j`.
pub fn plane_matrix(
    d: u64,
    scheme: &PlaneScheme,
    sample: &SupportSample,
    field: PrimeField,
) -> ConditionsMatrix {
    let d = d as usize;
    let mons = plane_monomials(d);
    let mut mat = ConditionsMatrix::new(field, mons.len());
    let mut row = vec![0; mons.len()];
    let ff = |n: usize, k: usize| falling_mod(field, n as u64, k as u64);

    let corners = [
        (scheme.corner_a, [0u64, 1, 0]),
        (scheme.corner_b, [0u64, 0, 1]),
    ];
    for (mult, point) in corners {
        if mult == 0 {
            continue;
        }
        // a form of degree d with multiplicity > d at a point is zero
        let order = (mult as usize - 1).min(d);
        for a0 in 0..=order {
            for a1 in 0..=order - a0 {
                let alpha = [a0, a1, order - a0 - a1];
                for (col, &(i, j)) in mons.iter().enumerate() {
                    let e = [d - i - j, i, j];
                    row[col] = (0..3).fold(1, |acc, k| {
                        if acc == 0 || e[k] < alpha[k] {
                            return 0;
                        }
                        let rest = (e[k] - alpha[k]) as u32;
                        let pw = if rest == 0 { 1 } else { point[k].pow(rest) };
                        field.mul(acc, field.mul(ff(e[k], alpha[k]), pw % field.modulus()))
                    });
                }
                mat.push_row(&row);
            }
        }
    }

    for (&m, &(p, q)) in scheme.general_points.iter().zip(&sample.points) {
        let (px, qy) = (field.powers(p, d), field.powers(q, d));
        for c in 0..m as usize {
            for e in 0..m as usize - c {
                for (col, &(i, j)) in mons.iter().enumerate() {
                    row[col] = if i >= c && j >= e {
                        field.mul(
                            field.mul(ff(i, c), px[i - c]),
                            field.mul(ff(j, e), qy[j - e]),
                        )
                    } else {
                        0
                    };
                }
                mat.push_row(&row);
            }
        }
    }

    for (profile, &p) in scheme.sliced_points.iter().zip(&sample.line_points) {
        let q = field.add(p, 1);
        let (px, qy) = (field.powers(p, d), field.powers(q, d));
        for (level, &width) in profile.widths().iter().enumerate() {
            for du in 0..width as usize {
                for (col, &(i, j)) in mons.iter().enumerate() {
                    let mut acc = 0;
                    for k in 0..=du {
                        let (cx, cy) = (du - k, level + k);
                        if i < cx || j < cy {
                            continue;
                        }
                        let coeff = field.reduce(bin(du as i64, k as i64) as u128);
                        let term = field.mul(
                            field.mul(coeff, field.mul(ff(i, cx), px[i - cx])),
                            field.mul(ff(j, cy), qy[j - cy]),
                        );
                        acc = field.add(acc, term);
                    }
                    row[col] = acc;
                }
                mat.push_row(&row);
            }
        }
    }
    mat
}

/// Hermite conditions on univariate polynomials of degree `<= d`: a point of
/// length `l` kills the derivatives of order `< l`.
pub fn line_matrix(
    d: u64,
    lengths: &[u64],
    sample: &SupportSample,
    field: PrimeField,
) -> ConditionsMatrix {
    let d = d as usize;
    let mut mat = ConditionsMatrix::new(field, d + 1);
    let mut row = vec![0; d + 1];
    for (&len, &t) in lengths.iter().zip(&sample.line_points) {
        let tp = field.powers(t, d);
        for k in 0..len as usize {
            for j in 0..=d {
                row[j] = if j >= k {
                    field.mul(falling_mod(field, j as u64, k as u64), tp[j - k])
                } else {
                    0
                };
            }
            mat.push_row(&row);
        }
    }
    mat
}

fn max_rank_over_trials(cfg: &OracleConfig, mut rank_of_trial: impl FnMut(u32) -> usize) -> usize {
    (0..cfg.trials).map(&mut rank_of_trial).max().unwrap_or(0)
}

/// Hilbert function of general fat points with multiplicities `mults` on
/// P¹×P¹ in bidegree `deg`: the maximum conditions-matrix rank over the
/// configured trials.
pub fn hf_biproj(deg: BiDegree, mults: &[u64], cfg: &OracleConfig) -> Result<u64> {
    let max_m = mults.iter().copied().max().unwrap_or(0);
    let field = cfg.field_for((deg.a + deg.b).max(max_m))?;
    let rank = max_rank_over_trials(cfg, |trial| {
        let seed = derive_seed(cfg.seed, Stream::Biprojective as u64, deg.a, deg.b, trial);
        let sample = SupportSample::draw(seed, field, mults.len(), 0);
        biproj_matrix(deg, mults, &sample, field).rank()
    });
    Ok(rank as u64)
}

/// Shorthand for [`hf_biproj`] on `s` points of multiplicity `m`.
pub fn hf_uniform_oracle(deg: BiDegree, pts: UniformFatPoints, cfg: &OracleConfig) -> Result<u64> {
    hf_biproj(deg, &pts.multiplicities(), cfg)
}

/// Dimension of the degree-`d` piece of the ideal of `scheme` in the plane.
pub fn hf_plane(d: u64, scheme: &PlaneScheme, cfg: &OracleConfig) -> Result<u64> {
    let max_m = scheme
        .general_points
        .iter()
        .chain([&scheme.corner_a, &scheme.corner_b])
        .copied()
        .chain(scheme.sliced_points.iter().map(|p| p.degree()))
        .max()
        .unwrap_or(0);
    let field = cfg.field_for(d.max(max_m) + 1)?;
    let cols = u64::try_from(bin(to_i64(d) + 2, 2)).expect("degree too large");
    let rank = max_rank_over_trials(cfg, |trial| {
        let seed = derive_seed(
            cfg.seed,
            Stream::Plane as u64,
            scheme.corner_a * 1_000 + scheme.corner_b,
            d,
            trial,
        );
        let sample = SupportSample::draw(
            seed,
            field,
            scheme.general_points.len(),
            scheme.sliced_points.len(),
        );
        plane_matrix(d, scheme, &sample, field).rank()
    });
    Ok(cols - rank as u64)
}

/// Dimension of the degree-`d` forms on a line vanishing on points of the
/// given lengths: `max(0, d + 1 - sum)`, confirmed by the rank of the
/// Hermite conditions at random support.
pub fn hf_trace_line(d: u64, lengths: &[u64], cfg: &OracleConfig) -> Result<u64> {
    let total: u64 = lengths.iter().sum();
    let expected = (d + 1).saturating_sub(total);
    let field = cfg.field_for(d + 1)?;
    let rank = max_rank_over_trials(cfg, |trial| {
        let seed = derive_seed(
            cfg.seed,
            Stream::Line as u64,
            d,
            lengths.len() as u64,
            trial,
        );
        let sample = SupportSample::draw(seed, field, 0, lengths.len());
        line_matrix(d, lengths, &sample, field).rank()
    });
    let measured = d + 1 - rank as u64;
    if measured != expected {
        return Err(Error::Inconsistent(format!(
            "trace of lengths {lengths:?} in degree {d}: rank gives {measured}, count gives {expected}"
        )));
    }
    Ok(expected)
}

/// Both sides of the reduction to the plane: the ideal dimension in bidegree
/// `(a, b)` on P¹×P¹ and in degree `a + b` for `aQ1 + bQ2 + mP_1 + ... + mP_s`.
pub fn reduction_dims(
    deg: BiDegree,
    pts: UniformFatPoints,
    cfg: &OracleConfig,
) -> Result<(u64, u64)> {
    let bi = deg.piece_dim() - hf_uniform_oracle(deg, pts, cfg)?;
    let (scheme, d) = reduce_to_plane(deg, pts);
    let plane = hf_plane(d, &scheme, cfg)?;
    Ok((bi, plane))
}

pub fn check_reduction(deg: BiDegree, pts: UniformFatPoints, cfg: &OracleConfig) -> Result<bool> {
    let (bi, plane) = reduction_dims(deg, pts, cfg)?;
    Ok(bi == plane)
}
