use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;

/// Pseudo-random support in the affine chart.
///
/// `points` are general points; `line_points` are the `x`-coordinates of
/// points on the distinguished line `y = x + 1`. All `x`-coordinates are
/// pairwise distinct, and so are all `y`-coordinates: two points sharing
/// a coordinate would lie on a common ruling (on P¹×P¹) or on a common
/// line through a corner (in the plane model). General points avoid the
/// distinguished line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSample {
    pub seed: u64,
    pub points: Vec<(u64, u64)>,
    pub line_points: Vec<u64>,
}

impl SupportSample {
    pub fn draw(seed: u64, field: PrimeField, general: usize, on_line: usize) -> Self {
        let p = field.modulus();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut xs = HashSet::new();
        let mut ys = HashSet::new();

        let mut line_points = Vec::with_capacity(on_line);
        while line_points.len() < on_line {
            // keep y = x + 1 inside [1, p - 1]
            let x = rng.gen_range(1..p - 1);
            let y = x + 1;
            if xs.contains(&x) || ys.contains(&y) {
                continue;
            }
            xs.insert(x);
            ys.insert(y);
            line_points.push(x);
        }

        let mut points = Vec::with_capacity(general);
        while points.len() < general {
            let x = rng.gen_range(1..p);
            let y = rng.gen_range(1..p);
            if y == field.add(x, 1) || xs.contains(&x) || ys.contains(&y) {
                continue;
            }
            xs.insert(x);
            ys.insert(y);
            points.push((x, y));
        }

        Self {
            seed,
            points,
            line_points,
        }
    }
}

/// Mixes the master seed with an instance and a trial index (splitmix64).
pub fn derive_seed(master: u64, stream: u64, a: u64, b: u64, trial: u32) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    [stream, a, b, u64::from(trial)]
        .into_iter()
        .fold(mix(master), |acc, v| mix(acc ^ mix(v)))
}
