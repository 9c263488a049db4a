//! Minimal fixed-width 256-bit unsigned arithmetic.
//!
//! Only what the key schedule needs: byte conversion, wrapping add/sub,
//! rotation and reduction by a machine-word modulus.

use std::fmt;

/// 256-bit unsigned integer stored as two 128-bit halves.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct U256 {
    hi: u128,
    lo: u128,
}

impl U256 {
    pub const ZERO: U256 = U256 { hi: 0, lo: 0 };
    pub const MAX: U256 = U256 {
        hi: u128::MAX,
        lo: u128::MAX,
    };
    pub const BITS: u32 = 256;

    pub const fn from_halves(hi: u128, lo: u128) -> Self {
        U256 { hi, lo }
    }

    pub const fn from_u128(v: u128) -> Self {
        U256 { hi: 0, lo: v }
    }

    pub const fn hi(self) -> u128 {
        self.hi
    }

    pub const fn lo(self) -> u128 {
        self.lo
    }

    /// Interprets `bytes` as big-endian (byte 0 most significant).
    pub fn from_be_bytes(bytes: [u8; 32]) -> Self {
        let mut hi = [0u8; 16];
        let mut lo = [0u8; 16];
        hi.copy_from_slice(&bytes[..16]);
        lo.copy_from_slice(&bytes[16..]);
        U256 {
            hi: u128::from_be_bytes(hi),
            lo: u128::from_be_bytes(lo),
        }
    }

    pub fn to_be_bytes(self) -> [u8; 32] {
        let mut out = [0u8; 32];
        out[..16].copy_from_slice(&self.hi.to_be_bytes());
        out[16..].copy_from_slice(&self.lo.to_be_bytes());
        out
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0 && self.lo == 0
    }

    pub fn wrapping_add(self, rhs: U256) -> U256 {
        let (lo, carry) = self.lo.overflowing_add(rhs.lo);
        let hi = self.hi.wrapping_add(rhs.hi).wrapping_add(carry as u128);
        U256 { hi, lo }
    }

    pub fn wrapping_sub(self, rhs: U256) -> U256 {
        let (lo, borrow) = self.lo.overflowing_sub(rhs.lo);
        let hi = self.hi.wrapping_sub(rhs.hi).wrapping_sub(borrow as u128);
        U256 { hi, lo }
    }

    pub fn rotate_left(self, bits: u32) -> U256 {
        let bits = bits % Self::BITS;
        let (mut hi, mut lo) = (self.hi, self.lo);
        let mut k = bits;
        if k >= 128 {
            std::mem::swap(&mut hi, &mut lo);
            k -= 128;
        }
        if k == 0 {
            return U256 { hi, lo };
        }
        U256 {
            hi: (hi << k) | (lo >> (128 - k)),
            lo: (lo << k) | (hi >> (128 - k)),
        }
    }

    /// Flips bit `index`, where bit 0 is the least significant.
    pub fn flip_bit(self, index: u32) -> U256 {
        assert!(index < Self::BITS, "bit index {index} out of range");
        if index >= 128 {
            U256 {
                hi: self.hi ^ (1u128 << (index - 128)),
                lo: self.lo,
            }
        } else {
            U256 {
                hi: self.hi,
                lo: self.lo ^ (1u128 << index),
            }
        }
    }

    pub fn bit(self, index: u32) -> bool {
        assert!(index < Self::BITS, "bit index {index} out of range");
        if index >= 128 {
            (self.hi >> (index - 128)) & 1 == 1
        } else {
            (self.lo >> index) & 1 == 1
        }
    }

    /// `self mod modulus`. Panics when `modulus` is zero.
    pub fn rem_u64(self, modulus: u64) -> u64 {
        assert!(modulus != 0, "modulus must be nonzero");
        let m = modulus as u128;
        let mut r = self.hi % m;
        r = ((r << 64) | (self.lo >> 64)) % m;
        r = ((r << 64) | (self.lo & u64::MAX as u128)) % m;
        r as u64
    }
}

impl fmt::Debug for U256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U256({self:x})")
    }
}

impl fmt::LowerHex for U256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi == 0 {
            fmt::LowerHex::fmt(&self.lo, f)
        } else {
            write!(f, "{:x}{:032x}", self.hi, self.lo)
        }
    }
}
