//! Keyed forward and inverse 2-D discrete Fourier transform.
//!
//! The forward transform carries the multiplier `k_s / (M N)` and the
//! inverse `1 / k_s`, so their product stays `1 / (M N)` and the pair is an
//! exact inverse only when both sides use the same key scalar.

use rustfft::num_complex::Complex64;
use rustfft::{FftDirection, FftPlannerScalar};

use crate::error::{Error, Result};
use crate::key::SecretKey;

/// Float-domain form of the key. Always an integer in `[1, 2^32)`, so it is
/// exact in an `f64` with room to spare for pixel sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyScalar(f64);

impl KeyScalar {
    /// Low 32 bits of the key; a zero result becomes 1.
    pub fn from_key(key: &SecretKey) -> Self {
        let low = key.value().rem_u64(1 << 32);
        KeyScalar(if low == 0 { 1.0 } else { low as f64 })
    }

    pub fn new(value: u32) -> Result<Self> {
        if value == 0 {
            return Err(Error::InvalidArgument(
                "key scalar must be at least 1".into(),
            ));
        }
        Ok(KeyScalar(f64::from(value)))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Row-major matrix of real pixel intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct PixelMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl PixelMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        check_dims(rows, cols, data.len())?;
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: i / cols,
                col: i % cols,
            });
        }
        Ok(PixelMatrix { rows, cols, data })
    }

    pub fn from_u8(rows: usize, cols: usize, data: &[u8]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&v| f64::from(v)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Pixel values as bytes. Fails if any value is not an integer in
    /// `[0, 255]`.
    pub fn to_u8(&self) -> Result<Vec<u8>> {
        self.data
            .iter()
            .map(|&v| {
                if (0.0..=255.0).contains(&v) && v.fract() == 0.0 {
                    Ok(v as u8)
                } else {
                    Err(Error::PixelRange(v))
                }
            })
            .collect()
    }
}

/// Row-major matrix of complex values; the working representation of the
/// cipher.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl SpectralMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        check_dims(rows, cols, data.len())?;
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: i / cols,
                col: i % cols,
            });
        }
        Ok(SpectralMatrix { rows, cols, data })
    }

    /// Builds a matrix from `(re, im)` pairs given row by row.
    pub fn from_parts(rows: usize, cols: usize, parts: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            parts
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.cols + col]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub(crate) fn check_position(&self, row: usize, col: usize) -> Result<usize> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(row * self.cols + col)
    }

    /// Largest absolute imaginary part.
    pub fn max_imag_abs(&self) -> f64 {
        self.data.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }
}

fn check_dims(rows: usize, cols: usize, len: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidDimension(format!(
            "matrix must be at least 1x1, got {rows}x{cols}"
        )));
    }
    if rows.checked_mul(cols) != Some(len) {
        return Err(Error::InvalidDimension(format!(
            "{len} values do not fill a {rows}x{cols} matrix"
        )));
    }
    Ok(())
}

/// Unnormalized 2-D FFT in place over a row-major buffer.
fn fft2_in_place(data: &mut [Complex64], rows: usize, cols: usize, direction: FftDirection) {
    let mut planner = FftPlannerScalar::<f64>::new();

    let row_fft = planner.plan_fft(cols, direction);
    let mut scratch = vec![Complex64::default(); row_fft.get_inplace_scratch_len()];
    for row in data.chunks_exact_mut(cols) {
        row_fft.process_with_scratch(row, &mut scratch);
    }

    if rows > 1 {
        let col_fft = planner.plan_fft(rows, direction);
        let mut transposed = vec![Complex64::default(); rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                transposed[c * rows + r] = data[r * cols + c];
            }
        }
        let mut scratch = vec![Complex64::default(); col_fft.get_inplace_scratch_len()];
        for col in transposed.chunks_exact_mut(rows) {
            col_fft.process_with_scratch(col, &mut scratch);
        }
        for c in 0..cols {
            for r in 0..rows {
                data[r * cols + c] = transposed[c * rows + r];
            }
        }
    }
}

/// `F(u,v) = (k_s / MN) Σ_x Σ_y f(x,y) e^{-j2π(ux/M + vy/N)}`.
pub fn keyed_dft_2d(img: &PixelMatrix, k: KeyScalar) -> Result<SpectralMatrix> {
    let (rows, cols) = img.dims();
    let mut data: Vec<Complex64> = img.data.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft2_in_place(&mut data, rows, cols, FftDirection::Forward);
    let scale = k.value() / (rows * cols) as f64;
    for v in &mut data {
        *v *= scale;
    }
    SpectralMatrix::new(rows, cols, data)
}

/// `f(x,y) = (1 / k_s) Σ_u Σ_v F(u,v) e^{+j2π(ux/M + vy/N)}`. The result is
/// complex; deciding what to do with residual imaginary parts is up to the
/// caller.
pub fn keyed_idft_2d(spec: &SpectralMatrix, k: KeyScalar) -> Result<SpectralMatrix> {
    let (rows, cols) = spec.dims();
    let mut data = spec.data.clone();
    fft2_in_place(&mut data, rows, cols, FftDirection::Inverse);
    let scale = 1.0 / k.value();
    for v in &mut data {
        *v *= scale;
    }
    SpectralMatrix::new(rows, cols, data)
}
