use hdshapes::shapes::{gen_pyramid, PyramidKind};
use hdshapes::{generate, make_stream, ShapeKind, ShapeParams};

// upper 0.001 quantile of chi-square with 3 degrees of freedom
const CHI2_3DF_999: f64 = 16.266;

#[test]
fn pyrtri_slice_fills_midpoint_subtriangles_evenly() {
    let (l, rt, h) = (2.0, 0.5, 3.0);
    let ds = gen_pyramid(PyramidKind::Tri { l, rt }, 20_000, 4, h, &mut make_stream(404)).unwrap();
    let mut counts = [0.0f64; 4];
    let mut total = 0.0;
    for r in ds.rows() {
        let z = r[3];
        if !(0.25..1.25).contains(&z) {
            continue;
        }
        let side = rt + (l - rt) * z / h;
        let b = [r[0] / side, r[1] / side, r[2] / side];
        let region = b.iter().position(|&x| x > 0.5).unwrap_or(3);
        counts[region] += 1.0;
        total += 1.0;
    }
    assert!(total > 5000.0, "slice holds {total} rows");
    let expected = total / 4.0;
    let chi2: f64 = counts.iter().map(|c| (c - expected).powi(2) / expected).sum();
    assert!(chi2 < CHI2_3DF_999, "chi2 {chi2:.2} counts {counts:?}");
}

#[test]
fn pyramid_heights_follow_clamped_exponential() {
    let h = 2.0;
    let n = 20_000;
    let ds = gen_pyramid(PyramidKind::Tri { l: 1.0, rt: 0.2 }, n, 4, h, &mut make_stream(9)).unwrap();
    let mut z = ds.column(3);
    z.sort_by(f64::total_cmp);
    let rate = 2.0 / h;
    let m = n as f64;
    let mut ks: f64 = 0.0;
    let mut capped = 0.0;
    for (i, &x) in z.iter().enumerate() {
        assert!((0.0..=h).contains(&x));
        if x == h {
            capped += 1.0;
            continue;
        }
        let f = 1.0 - (-rate * x).exp();
        ks = ks.max((f - i as f64 / m).abs()).max(((i + 1) as f64 / m - f).abs());
    }
    assert!(ks < 1.63 / m.sqrt(), "KS {ks:.4}");
    let atom = (-rate * h).exp();
    let sd = (atom * (1.0 - atom) / m).sqrt();
    assert!((capped / m - atom).abs() < 4.0 * sd, "mass at h {}", capped / m);
}

#[test]
fn every_kind_is_reproducible() {
    for &kind in ShapeKind::ALL {
        let params = ShapeParams::with_n(500);
        let a = generate(kind, &params, &mut make_stream(12)).unwrap();
        let b = generate(kind, &params, &mut make_stream(12)).unwrap();
        assert_eq!(a, b, "{kind}");
        assert!(a.values().iter().all(|v| v.is_finite()), "{kind}");
    }
}
