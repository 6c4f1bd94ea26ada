use fatpoints::formulas::{hf_m_ge_b, hf_triple, hf_uniform};
use fatpoints::{BiDegree, UniformFatPoints};
use proptest::prelude::*;

fn known(a: u64, b: u64, s: u64, m: u64) -> Option<u64> {
    let pts = UniformFatPoints::new(s, m).unwrap();
    hf_uniform(BiDegree::new(a, b), pts)
        .unwrap()
        .value()
        .map(|v| v.value)
}

#[test]
fn triple_and_low_bidegree_theorems_agree() {
    for s in 0..=50u64 {
        let pts = UniformFatPoints::new(s, 3).unwrap();
        for b in 0..=3u64 {
            for a in b..=100u64 {
                let deg = BiDegree::new(a, b);
                assert_eq!(
                    hf_triple(deg, s).value,
                    hf_m_ge_b(deg, pts).unwrap().value,
                    "(a,b)=({a},{b}) s={s}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn symmetric_in_a_and_b(a in 0u64..60, b in 0u64..60, s in 0u64..40, m in 1u64..10) {
        prop_assert_eq!(known(a, b, s, m), known(b, a, s, m));
    }

    #[test]
    fn bounded_by_piece_and_degree(a in 0u64..60, b in 0u64..60, s in 0u64..40, m in 1u64..10) {
        if let Some(v) = known(a, b, s, m) {
            let pts = UniformFatPoints::new(s, m).unwrap();
            prop_assert!(v <= BiDegree::new(a, b).piece_dim());
            prop_assert!(v <= pts.degree());
        }
    }

    #[test]
    fn monotone_in_each_degree(a in 0u64..60, b in 0u64..60, s in 0u64..40, m in 1u64..10) {
        let here = known(a, b, s, m);
        for next in [known(a + 1, b, s, m), known(a, b + 1, s, m)] {
            if let (Some(x), Some(y)) = (here, next) {
                prop_assert!(x <= y, "({a},{b}) s={s} m={m}: {x} > {y}");
            }
        }
    }

    #[test]
    fn monotone_in_point_count(a in 0u64..60, b in 0u64..60, s in 0u64..40, m in 1u64..10) {
        if let (Some(x), Some(y)) = (known(a, b, s, m), known(a, b, s + 1, m)) {
            prop_assert!(x <= y);
        }
    }
}
