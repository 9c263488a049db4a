#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use defc::{codec, Complex64, PixelMatrix, PlainImage, SecretKey, SpectralMatrix};

/// The key spelled "1589853085422475" in hex.
pub const TEST_KEY_HEX: &str = "1589853085422475";

pub fn test_key() -> SecretKey {
    TEST_KEY_HEX.parse().unwrap()
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn fixture(name: &str) -> PlainImage {
    codec::read_image(data_path(name)).unwrap_or_else(|e| panic!("loading {name}: {e}"))
}

/// Grayscale natural test images.
pub const GRAY_FIXTURES: [&str; 3] = ["camera.png", "moon.png", "clock.png"];
pub const RGB_FIXTURE: &str = "astronaut.png";

/// Top-left `size x size` crop of a grayscale image.
pub fn crop(img: &PlainImage, size: usize) -> PlainImage {
    let src = img.channel(0);
    let mut out = Vec::with_capacity(size * size);
    for r in 0..size {
        for c in 0..size {
            out.push(src.get(r, c) as u8);
        }
    }
    PlainImage::from_gray(size, size, &out).unwrap()
}

pub const FIG4A: [[f64; 4]; 4] = [
    [2.0, 4.0, 17.0, 100.0],
    [3955.0, 4.0, 23.0, 199.0],
    [1.0, 3.0, 4.0, 5.0],
    [9.0, 7.0, 6.0, 5.0],
];

pub fn fig4a() -> PixelMatrix {
    PixelMatrix::new(4, 4, FIG4A.iter().flatten().copied().collect()).unwrap()
}

type Parts = [[(f64, f64); 4]; 4];

/// Keyed DFT of the 4x4 example with k_s = 16, as printed (x 1000, 4 d.p.).
pub const FIG4B: Parts = [
    [
        (4344.0, 0.0),
        (3917.0, 291.0),
        (3690.0, 0.0),
        (3917.0, -291.0),
    ],
    [
        (110.0, -4154.0),
        (185.0, -3835.0),
        (-82.0, -3772.0),
        (-209.0, -4023.0),
    ],
    [
        (-4072.0, 0.0),
        (-3953.0, -95.0),
        (-3866.0, 0.0),
        (-3953.0, 95.0),
    ],
    [
        (110.0, 4154.0),
        (-209.0, 4023.0),
        (-82.0, 3772.0),
        (185.0, 3835.0),
    ],
];

/// After crossing adjacent column pairs in every row.
pub const FIG5A: Parts = [
    [
        (4344.0, 291.0),
        (3917.0, 0.0),
        (3690.0, -291.0),
        (3917.0, 0.0),
    ],
    [
        (110.0, -3835.0),
        (185.0, -4154.0),
        (-82.0, -4023.0),
        (-209.0, -3772.0),
    ],
    [
        (-4072.0, -95.0),
        (-3953.0, 0.0),
        (-3866.0, 95.0),
        (-3953.0, 0.0),
    ],
    [
        (110.0, 4023.0),
        (-209.0, 4154.0),
        (-82.0, 3835.0),
        (185.0, 3772.0),
    ],
];

/// After mutating columns 0 and 2 with `5 - re`.
pub const FIG6A: Parts = [
    [
        (-4339.0, 291.0),
        (3917.0, 0.0),
        (-3685.0, -291.0),
        (3917.0, 0.0),
    ],
    [
        (-105.0, -3835.0),
        (185.0, -4154.0),
        (87.0, -4023.0),
        (-209.0, -3772.0),
    ],
    [
        (4077.0, -95.0),
        (-3953.0, 0.0),
        (3871.0, 95.0),
        (-3953.0, 0.0),
    ],
    [
        (-105.0, 4023.0),
        (-209.0, 4154.0),
        (87.0, 3835.0),
        (185.0, 3772.0),
    ],
];

pub fn matrix(parts: &Parts) -> SpectralMatrix {
    let flat: Vec<(f64, f64)> = parts.iter().flatten().copied().collect();
    SpectralMatrix::from_parts(4, 4, &flat).unwrap()
}

/// Crossover schedule shown in the worked example: every row, columns
/// (0,1) and (2,3).
pub fn figure_crossover() -> defc::CrossoverSchedule {
    let pairs = (0..4)
        .flat_map(|r| [((r, 0), (r, 1)), ((r, 2), (r, 3))])
        .collect();
    defc::CrossoverSchedule::new(4, 4, pairs).unwrap()
}

/// Mutation schedule shown in the worked example: every row, columns 0 and 2.
pub fn figure_mutation() -> defc::MutationSchedule {
    let targets = (0..4).flat_map(|r| [(r, 0), (r, 2)]).collect();
    defc::MutationSchedule::new(4, 4, targets).unwrap()
}

/// Direct evaluation of the keyed DFT definition, O(M^2 N^2).
pub fn naive_keyed_dft(img: &PixelMatrix, k: f64) -> Vec<Complex64> {
    let (m, n) = img.dims();
    let mut out = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for x in 0..m {
                for y in 0..n {
                    let angle = -2.0 * PI * ((u * x) as f64 / m as f64 + (v * y) as f64 / n as f64);
                    acc += Complex64::from_polar(img.get(x, y), angle);
                }
            }
            out.push(acc * (k / (m * n) as f64));
        }
    }
    out
}

/// Direct evaluation of the keyed inverse DFT definition.
pub fn naive_keyed_idft(spec: &SpectralMatrix, k: f64) -> Vec<Complex64> {
    let (m, n) = spec.dims();
    let mut out = Vec::with_capacity(m * n);
    for x in 0..m {
        for y in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for u in 0..m {
                for v in 0..n {
                    let angle = 2.0 * PI * ((u * x) as f64 / m as f64 + (v * y) as f64 / n as f64);
                    acc += spec.get(u, v) * Complex64::from_polar(1.0, angle);
                }
            }
            out.push(acc / k);
        }
    }
    out
}

/// Relative closeness for spectral comparisons, scaled by the largest
/// magnitude in the reference.
pub fn max_rel_error(a: &[Complex64], b: &[Complex64]) -> f64 {
    let scale = b.iter().map(|v| v.norm()).fold(1e-300, f64::max);
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

/// Deterministic pseudo-random bytes for test images (splitmix64).
pub fn test_bytes(seed: u64, len: usize) -> Vec<u8> {
    let mut state = seed;
    (0..len)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            (z ^ (z >> 31)) as u8
        })
        .collect()
}
