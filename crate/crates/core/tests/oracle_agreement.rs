use fatpoints::formulas::hf_uniform;
use fatpoints::oracle::{hf_biproj, hf_plane, hf_uniform_oracle, is_prime};
use fatpoints::{BiDegree, OracleConfig, PlaneScheme, SliceProfile, UniformFatPoints};
use proptest::prelude::*;

fn formula(deg: BiDegree, pts: UniformFatPoints) -> u64 {
    hf_uniform(deg, pts)
        .unwrap()
        .value()
        .expect("known cell")
        .value
}

#[test]
fn double_points_in_high_bidegree() {
    let cfg = OracleConfig::default();
    for s in 1..=10u64 {
        let pts = UniformFatPoints::new(s, 2).unwrap();
        for b in 3..=8u64 {
            for a in b..=10u64 {
                let deg = BiDegree::new(a, b);
                assert_eq!(
                    hf_uniform_oracle(deg, pts, &cfg).unwrap(),
                    formula(deg, pts),
                    "({a},{b}) s={s}"
                );
            }
        }
    }
}

#[test]
fn simple_points_everywhere() {
    let cfg = OracleConfig::default();
    for s in 0..=12u64 {
        let pts = UniformFatPoints::new(s, 1).unwrap();
        for (a, b) in [(0, 0), (3, 0), (2, 2), (4, 1), (5, 3)] {
            let deg = BiDegree::new(a, b);
            assert_eq!(
                hf_uniform_oracle(deg, pts, &cfg).unwrap(),
                formula(deg, pts)
            );
        }
    }
}

#[test]
fn second_prime_agrees() {
    let p = 4_294_967_291;
    assert!(is_prime(p));
    let cfg = OracleConfig::default().with_prime(p);
    for (a, b, s, m) in [(5, 4, 5, 3), (13, 4, 5, 5), (14, 5, 9, 4), (8, 7, 5, 5)] {
        let deg = BiDegree::new(a, b);
        let pts = UniformFatPoints::new(s, m).unwrap();
        assert_eq!(
            hf_uniform_oracle(deg, pts, &cfg).unwrap(),
            hf_uniform_oracle(deg, pts, &OracleConfig::default()).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seeds_agree(a in 0u64..8, b in 0u64..8, s in 0u64..7, m in 1u64..5) {
        let deg = BiDegree::new(a, b);
        let pts = UniformFatPoints::new(s, m).unwrap();
        let values: Vec<u64> = [1u64, 2, 3]
            .iter()
            .map(|&seed| hf_uniform_oracle(deg, pts, &OracleConfig::default().with_seed(seed)).unwrap())
            .collect();
        prop_assert!(values.windows(2).all(|w| w[0] == w[1]), "{:?}", values);
    }

    #[test]
    fn smaller_multiplicities_impose_fewer_conditions(
        a in 0u64..8,
        b in 0u64..8,
        mults in prop::collection::vec(1u64..5, 0..6),
        which in 0usize..6,
    ) {
        let cfg = OracleConfig::default();
        let deg = BiDegree::new(a, b);
        let full = hf_biproj(deg, &mults, &cfg).unwrap();
        let mut sub = mults.clone();
        if let Some(m) = sub.get_mut(which) {
            *m -= 1;
        }
        prop_assert!(hf_biproj(deg, &sub, &cfg).unwrap() <= full);
    }

    #[test]
    fn collinear_points_never_impose_more(
        d in 1u64..9,
        corners in (0u64..5, 0u64..5),
        on_line in prop::collection::vec(1u64..4, 1..5),
    ) {
        let cfg = OracleConfig::default();
        let general = PlaneScheme::new(corners.0, corners.1, on_line.clone());
        let special = PlaneScheme::new(corners.0, corners.1, vec![])
            .with_sliced(on_line.iter().map(|&m| SliceProfile::fat_point(m)).collect());
        // ideal dimensions: the special position can only be larger
        prop_assert!(hf_plane(d, &special, &cfg).unwrap() >= hf_plane(d, &general, &cfg).unwrap());
    }
}
