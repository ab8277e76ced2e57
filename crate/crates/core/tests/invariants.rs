use hdshapes::partition::nproduct_total;
use hdshapes::{gen_hole, gen_nproduct, gen_nsum, make_stream, normalize_data, Dataset, HoleSpec};
use proptest::prelude::*;

fn dataset(rows: usize, cols: usize, seed: u64) -> Dataset {
    let mut s = make_stream(seed);
    let values = (0..rows * cols).map(|_| s.uniform(-3.0, 3.0)).collect();
    Dataset::from_vec(rows, cols, values).unwrap()
}

proptest! {
    #[test]
    fn nsum_parts(target in 1usize..5000, k in 1usize..50) {
        prop_assume!(k <= target);
        let parts = gen_nsum(target, k).unwrap();
        prop_assert_eq!(parts.len(), k);
        prop_assert_eq!(parts.iter().sum::<usize>(), target);
        let (lo, hi) = (parts.iter().min().unwrap(), parts.iter().max().unwrap());
        prop_assert!(hi - lo <= 1);
        prop_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn nsum_rejects_too_many_parts(target in 0usize..20, extra in 1usize..10) {
        prop_assert!(gen_nsum(target, target + extra).is_err());
    }

    #[test]
    fn nproduct_is_minimal_cover(target in 1u64..200_000, k in 1usize..6) {
        let f = gen_nproduct(target, k);
        prop_assert_eq!(f.len(), k);
        prop_assert!(nproduct_total(&f) >= target);
        prop_assert!(f.iter().max().unwrap() - f.iter().min().unwrap() <= 1);
        for i in 0..k {
            if f[i] > 1 {
                let mut lower = f.clone();
                lower[i] -= 1;
                prop_assert!(nproduct_total(&lower) < target);
            }
        }
    }

    #[test]
    fn hole_is_idempotent(seed in 0u64..1000, r in 0.1f64..2.0, cols in 1usize..5) {
        let ds = dataset(300, cols, seed);
        let spec = HoleSpec::at(vec![0.0; cols], r);
        if let Ok(once) = gen_hole(&ds, &spec) {
            prop_assert!(once.rows().all(|row| row.iter().map(|x| x * x).sum::<f64>().sqrt() > r));
            prop_assert_eq!(gen_hole(&once, &spec).unwrap(), once);
        }
    }

    #[test]
    fn normalize_maps_to_unit_box(seed in 0u64..1000, rows in 2usize..100, cols in 1usize..6) {
        let ds = dataset(rows, cols, seed);
        let out = normalize_data(&ds).unwrap();
        for j in 0..cols {
            let col = out.column(j);
            let lo = col.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = col.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(lo.abs() < 1e-12);
            prop_assert!((hi - 1.0).abs() < 1e-12);
        }
        prop_assert_eq!(normalize_data(&out).unwrap(), out);
    }
}
