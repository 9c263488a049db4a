//! The 256-bit shared secret.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::u256::U256;

/// How a key string is spelled on input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KeyFormat {
    #[default]
    Hex,
    Decimal,
}

/// A 256-bit secret key. Byte 0 of the big-endian form is the most
/// significant and seeds LFSR register S0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SecretKey(U256);

impl SecretKey {
    pub const BITS: u32 = 256;

    pub fn from_u256(v: U256) -> Self {
        SecretKey(v)
    }

    pub fn from_u128(v: u128) -> Self {
        SecretKey(U256::from_u128(v))
    }

    pub fn from_be_bytes(bytes: [u8; 32]) -> Self {
        SecretKey(U256::from_be_bytes(bytes))
    }

    pub fn to_be_bytes(&self) -> [u8; 32] {
        self.0.to_be_bytes()
    }

    pub fn value(&self) -> U256 {
        self.0
    }

    /// Returns the key with bit `index` flipped (bit 0 = least significant).
    pub fn flip_bit(&self, index: u32) -> Self {
        SecretKey(self.0.flip_bit(index))
    }

    /// Parses a key in the given spelling. Hex keys are 1-64 digits with an
    /// optional `0x` prefix, decimal keys any value below 2^256.
    pub fn parse(s: &str, format: KeyFormat) -> Result<Self> {
        let s = s.trim();
        match format {
            KeyFormat::Hex => {
                let digits = s
                    .strip_prefix("0x")
                    .or_else(|| s.strip_prefix("0X"))
                    .unwrap_or(s);
                if digits.is_empty() || digits.len() > 64 {
                    return Err(Error::InvalidKey(format!(
                        "hex key must have 1-64 digits, got {}",
                        digits.len()
                    )));
                }
                if !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
                    return Err(Error::InvalidKey(format!("not a hex number: {s:?}")));
                }
                let v = BigUint::parse_bytes(digits.as_bytes(), 16)
                    .ok_or_else(|| Error::InvalidKey(format!("not a hex number: {s:?}")))?;
                Self::from_biguint(&v)
            }
            KeyFormat::Decimal => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::InvalidKey(format!("not a decimal number: {s:?}")));
                }
                let v = BigUint::parse_bytes(s.as_bytes(), 10)
                    .ok_or_else(|| Error::InvalidKey(format!("not a decimal number: {s:?}")))?;
                Self::from_biguint(&v)
            }
        }
    }

    fn from_biguint(v: &BigUint) -> Result<Self> {
        if v.bits() > u64::from(Self::BITS) {
            return Err(Error::InvalidKey("key does not fit in 256 bits".into()));
        }
        let raw = v.to_bytes_be();
        let mut bytes = [0u8; 32];
        bytes[32 - raw.len()..].copy_from_slice(&raw);
        Ok(Self::from_be_bytes(bytes))
    }

    /// Decimal spelling of the key.
    pub fn to_decimal(&self) -> String {
        BigUint::from_bytes_be(&self.to_be_bytes()).to_str_radix(10)
    }
}

impl FromStr for SecretKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SecretKey::parse(s, KeyFormat::Hex)
    }
}

impl fmt::Debug for SecretKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SecretKey({:x})", self.0)
    }
}

impl fmt::LowerHex for SecretKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}
