mod common;

use common::*;
use defc::analysis::{
    adjacent_pixel_correlation, chi_square, chi_square_critical, correlation_coefficient,
    correlation_report, histogram, image_correlation, inter_image_correlation,
    key_sensitivity_suite, timing_report, Direction, WrongKeyOutcome,
};
use defc::{Error, PixelMatrix, PlainImage};
use proptest::prelude::*;

/// Pearson correlation straight from the population definitions.
fn oracle_r(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let ex = x.iter().sum::<f64>() / n;
    let ey = y.iter().sum::<f64>() / n;
    let dx = x.iter().map(|v| (v - ex).powi(2)).sum::<f64>() / n;
    let dy = y.iter().map(|v| (v - ey).powi(2)).sum::<f64>() / n;
    let cov = x
        .iter()
        .zip(y)
        .map(|(a, b)| (a - ex) * (b - ey))
        .sum::<f64>()
        / n;
    cov / (dx.sqrt() * dy.sqrt())
}

#[test]
fn correlation_examples() {
    assert!(
        (correlation_coefficient(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap() - 1.0).abs() < 1e-12
    );
    assert!(
        (correlation_coefficient(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-12
    );
    let r = correlation_coefficient(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap();
    assert!((r - 0.8).abs() < 1e-12);
    assert!(matches!(
        correlation_coefficient(&[2.0, 2.0, 2.0], &[1.0, 2.0, 3.0]),
        Err(Error::UndefinedCorrelation)
    ));
    assert!(correlation_coefficient(&[1.0], &[1.0]).is_err());
    assert!(correlation_coefficient(&[1.0, 2.0], &[1.0, 2.0, 3.0]).is_err());
}

#[test]
fn histogram_examples() {
    let h = histogram(&PixelMatrix::new(4, 4, vec![7.0; 16]).unwrap()).unwrap();
    assert_eq!(h.bins()[7], 16);
    assert_eq!(h.bins().iter().sum::<u64>(), 16);
    let h = histogram(&PixelMatrix::new(2, 2, vec![0.0, 255.0, 255.0, 0.0]).unwrap()).unwrap();
    assert_eq!((h.bins()[0], h.bins()[255], h.total()), (2, 2, 4));
    assert!(histogram(&PixelMatrix::new(1, 2, vec![3.0, 256.0]).unwrap()).is_err());
    assert!(histogram(&PixelMatrix::new(1, 2, vec![3.0, 1.5]).unwrap()).is_err());
    let csv = h.to_csv();
    assert_eq!(csv.trim_end().split(',').count(), 256);
}

#[test]
fn chi_square_values() {
    let a = histogram(&PixelMatrix::new(1, 4, vec![0.0, 0.0, 1.0, 1.0]).unwrap()).unwrap();
    let b = histogram(&PixelMatrix::new(1, 4, vec![0.0, 1.0, 1.0, 1.0]).unwrap()).unwrap();
    // (2-1)^2/3 + (2-3)^2/5
    assert!((chi_square(&a, &b) - (1.0 / 3.0 + 1.0 / 5.0)).abs() < 1e-12);
    assert_eq!(chi_square(&a, &a), 0.0);
    // tabulated upper 0.1% point for 255 degrees of freedom
    assert!((chi_square_critical(0.999, 255) - 330.52).abs() < 0.05);
    assert!((chi_square_critical(0.95, 1) - 3.841).abs() < 1e-3);
}

#[test]
fn adjacent_pairs_on_stripes() {
    let data: Vec<f64> = (0..8 * 8)
        .map(|i| if (i / 8) % 2 == 0 { 0.0 } else { 255.0 })
        .collect();
    let stripes = PixelMatrix::new(8, 8, data).unwrap();
    let v = adjacent_pixel_correlation(&stripes, Direction::Vertical, 500, 1).unwrap();
    assert!((v + 1.0).abs() < 1e-12);
    let d = adjacent_pixel_correlation(&stripes, Direction::Diagonal, 500, 1).unwrap();
    assert!((d + 1.0).abs() < 1e-12);
    // every horizontal pair is (0,0) or (255,255)
    let h = adjacent_pixel_correlation(&stripes, Direction::Horizontal, 500, 1).unwrap();
    assert!((h - 1.0).abs() < 1e-12);
    let flat = PixelMatrix::new(8, 8, vec![9.0; 64]).unwrap();
    assert!(matches!(
        adjacent_pixel_correlation(&flat, Direction::Horizontal, 100, 0),
        Err(Error::UndefinedCorrelation)
    ));
    let thin = PixelMatrix::new(1, 8, vec![1.0; 8]).unwrap();
    assert!(adjacent_pixel_correlation(&thin, Direction::Vertical, 10, 0).is_err());
}

#[test]
fn sampled_correlation_is_reproducible() {
    let img = fixture("camera.png");
    let ch = img.channel(0);
    let a = correlation_report(ch, 2000, 42).unwrap();
    let b = correlation_report(ch, 2000, 42).unwrap();
    assert_eq!(a, b);
    assert_eq!((a.sample_count, a.rng_seed), (2000, 42));
    let c = correlation_report(ch, 2000, 43).unwrap();
    assert_ne!(a.horizontal, c.horizontal);
    for d in Direction::ALL {
        assert!(a.get(d) > 0.9, "{d}: {}", a.get(d));
    }
}

#[test]
fn inter_image_examples() {
    let x = PixelMatrix::from_u8(4, 5, &test_bytes(1, 20)).unwrap();
    let inv = PixelMatrix::new(4, 5, x.as_slice().iter().map(|v| 255.0 - v).collect()).unwrap();
    assert!((inter_image_correlation(&x, &x).unwrap() - 1.0).abs() < 1e-12);
    assert!((inter_image_correlation(&x, &inv).unwrap() + 1.0).abs() < 1e-12);
    let other = PixelMatrix::from_u8(5, 4, &test_bytes(1, 20)).unwrap();
    assert!(matches!(
        inter_image_correlation(&x, &other),
        Err(Error::DimensionMismatch { .. })
    ));
    let p = PlainImage::from_rgb(4, 4, &test_bytes(2, 48)).unwrap();
    assert!((image_correlation(&p, &p).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn key_sensitivity_on_a_natural_image() {
    let img = fixture("camera.png");
    let report = key_sensitivity_suite(&img, &test_key(), 1).unwrap();
    assert!(report.max_abs_pairwise() < 0.1, "{report:?}");
    match report.wrong_key {
        WrongKeyOutcome::IntegrityFailure(_) => {}
        WrongKeyOutcome::Decrypted { correlation } => assert!(correlation.abs() < 0.1),
    }
}

#[test]
fn same_key_renders_match() {
    let img = PlainImage::from_gray(16, 16, &test_bytes(3, 256)).unwrap();
    let a = defc::render_cipher(&defc::encrypt_image(&img, &test_key(), 1).unwrap());
    let b = defc::render_cipher(&defc::encrypt_image(&img, &test_key(), 1).unwrap());
    assert_eq!(image_correlation(&a, &b).unwrap(), 1.0);
}

#[test]
fn timing_is_positive() {
    let img = PlainImage::from_gray(64, 64, &test_bytes(4, 4096)).unwrap();
    let t = timing_report(&img, &test_key(), 1).unwrap();
    assert!(t.encrypt_seconds > 0.0 && t.decrypt_seconds > 0.0);
    assert_eq!(t.runs, 5);
}

fn pair_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2usize..200).prop_flat_map(|n| {
        (
            prop::collection::vec(-1e3f64..1e3, n),
            prop::collection::vec(-1e3f64..1e3, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matches_definition((x, y) in pair_strategy()) {
        match correlation_coefficient(&x, &y) {
            Ok(r) => prop_assert!((r - oracle_r(&x, &y)).abs() < 1e-9),
            Err(e) => prop_assert!(matches!(e, Error::UndefinedCorrelation)),
        }
    }

    #[test]
    fn symmetric_and_bounded((x, y) in pair_strategy()) {
        if let (Ok(a), Ok(b)) = (correlation_coefficient(&x, &y), correlation_coefficient(&y, &x)) {
            prop_assert!((a - b).abs() < 1e-12);
            prop_assert!(a.abs() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn affine_invariant((x, y) in pair_strategy(), a in 0.01f64..100.0, b in -1e3f64..1e3) {
        let scaled: Vec<f64> = x.iter().map(|v| a * v + b).collect();
        if let (Ok(r), Ok(s)) = (correlation_coefficient(&x, &y), correlation_coefficient(&scaled, &y)) {
            prop_assert!((r - s).abs() < 1e-9);
        }
        let scaled_y: Vec<f64> = y.iter().map(|v| a * v + b).collect();
        if let (Ok(r), Ok(s)) = (correlation_coefficient(&x, &y), correlation_coefficient(&x, &scaled_y)) {
            prop_assert!((r - s).abs() < 1e-9);
        }
    }

    #[test]
    fn adjacent_sampling_is_deterministic(seed in any::<u64>(), pix in prop::collection::vec(any::<u8>(), 64)) {
        let img = PixelMatrix::from_u8(8, 8, &pix).unwrap();
        for d in Direction::ALL {
            let a = adjacent_pixel_correlation(&img, d, 300, seed);
            let b = adjacent_pixel_correlation(&img, d, 300, seed);
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a.to_bits(), b.to_bits()),
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "runs disagree"),
            }
        }
    }

    #[test]
    fn histogram_totals(w in 1usize..40, h in 1usize..40, seed in any::<u64>()) {
        let img = PixelMatrix::from_u8(h, w, &test_bytes(seed, w * h)).unwrap();
        let hist = histogram(&img).unwrap();
        prop_assert_eq!(hist.total(), (w * h) as u64);
        prop_assert_eq!(hist.bins().iter().sum::<u64>(), (w * h) as u64);
    }
}
