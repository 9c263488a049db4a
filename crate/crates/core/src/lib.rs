//! Frequency-domain image cipher.
//!
//! An image channel is taken to the frequency domain with a keyed 2-D DFT,
//! then its spectral components are shuffled in two key-driven passes:
//! crossover (adjacent components exchange imaginary parts) and keyed
//! mutation (a real part `r` becomes `k_s - r`). Which components are
//! touched is decided by index streams from a bank of 32 8-cell LFSRs
//! seeded with the 256-bit key. Every step is an involution or has an exact
//! inverse, so decryption with the same key is lossless.
//!
//! ```
//! use defc::{decrypt_image, encrypt_image, PlainImage, SecretKey};
//!
//! let key: SecretKey = "1589853085422475".parse().unwrap();
//! let img = PlainImage::from_gray(4, 2, &[10, 20, 30, 40, 50, 60, 70, 80]).unwrap();
//! let cipher = encrypt_image(&img, &key, 1).unwrap();
//! assert_eq!(decrypt_image(&cipher, &key, 1).unwrap(), img);
//! ```
//!
//! The [`analysis`] module carries the statistical checks (histograms,
//! adjacent-pixel and inter-image correlation, timing), [`codec`] the file
//! formats, and [`cli`] the `defc` command-line tool.

pub mod analysis;
pub mod cli;
pub mod codec;
pub mod de_ops;
pub mod error;
pub mod key;
pub mod lfsr;
pub mod pipeline;
pub mod transform;
pub mod u256;

pub use rustfft::num_complex::Complex64;

pub use de_ops::{
    apply_crossover_pass, apply_mutation_pass, crossover_pair, mutate_component, CrossoverSchedule,
    MutationSchedule, Position,
};
pub use error::{Error, Result};
pub use key::{KeyFormat, SecretKey};
pub use lfsr::{IndexStream, LfsrBank, LfsrRegister, StreamLabel};
pub use pipeline::{
    decrypt_channel, decrypt_image, encrypt_channel, encrypt_image, render_cipher, render_spectrum,
    CipherImage, PlainImage,
};
pub use transform::{keyed_dft_2d, keyed_idft_2d, KeyScalar, PixelMatrix, SpectralMatrix};
pub use u256::U256;
