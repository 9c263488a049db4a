//! Index generation from the secret key with a bank of 32 parallel 8-cell
//! LFSRs.
//!
//! Each register implements the primitive polynomial
//! x^8 + x^4 + x^3 + x^2 + 1 (0x11D): the feedback bit is
//! b4 ^ b3 ^ b2 ^ b0 of the current state, the register shifts right and the
//! feedback enters at bit 7. One output byte is eight clocks of a register.
//!
//! The 32 registers are seeded from the 32 key bytes (S0 = most significant
//! byte). A draw clocks the whole bank, concatenates the bytes S0..S31 into a
//! 256-bit value `v` and returns `v mod bound`. The registers on their own
//! never interact, so the bank as a whole would cycle after 255 draws; the
//! bank is therefore reloaded from `v + rotl(v, 13) mod 2^256` after every
//! draw, which carries bits across register boundaries.

use crate::error::{Error, Result};
use crate::key::SecretKey;
use crate::u256::U256;

/// Number of registers in a bank.
pub const BANK_SIZE: usize = 32;

/// Bit rotation used when chaining one draw into the next bank state.
const CHAIN_ROTATION: u32 = 13;

const fn step(s: u8) -> u8 {
    let feedback = ((s >> 4) ^ (s >> 3) ^ (s >> 2) ^ s) & 1;
    (s >> 1) | (feedback << 7)
}

const fn build_clock8_table() -> [u8; 256] {
    let mut table = [0u8; 256];
    let mut s = 0;
    while s < 256 {
        let mut x = s as u8;
        let mut i = 0;
        while i < 8 {
            x = step(x);
            i += 1;
        }
        table[s] = x;
        s += 1;
    }
    table
}

static CLOCK8: [u8; 256] = build_clock8_table();

/// One 8-cell register (cells b7..b0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LfsrRegister(u8);

impl LfsrRegister {
    pub const fn new(state: u8) -> Self {
        LfsrRegister(state)
    }

    pub const fn state(self) -> u8 {
        self.0
    }

    /// A single clock.
    pub const fn step(self) -> Self {
        LfsrRegister(step(self.0))
    }

    /// Eight clocks: a fully refreshed output byte.
    pub fn clock8(self) -> Self {
        LfsrRegister(CLOCK8[self.0 as usize])
    }
}

/// Registers S0..S31.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LfsrBank {
    registers: [LfsrRegister; BANK_SIZE],
}

impl LfsrBank {
    /// Seeds S_i from byte i of the key. Zero bytes would freeze their
    /// register, so they are replaced by 0xFF.
    pub fn seed(key: &SecretKey) -> Self {
        Self::from_value(key.value())
    }

    fn from_value(v: U256) -> Self {
        let bytes = v.to_be_bytes();
        let mut registers = [LfsrRegister::default(); BANK_SIZE];
        for (reg, &b) in registers.iter_mut().zip(bytes.iter()) {
            *reg = LfsrRegister(if b == 0 { 0xFF } else { b });
        }
        LfsrBank { registers }
    }

    pub fn registers(&self) -> &[LfsrRegister; BANK_SIZE] {
        &self.registers
    }

    /// Clocks every register eight times and returns the concatenated bytes,
    /// S0 most significant.
    pub fn output(&mut self) -> U256 {
        let mut bytes = [0u8; BANK_SIZE];
        for (reg, out) in self.registers.iter_mut().zip(bytes.iter_mut()) {
            *reg = reg.clock8();
            *out = reg.0;
        }
        U256::from_be_bytes(bytes)
    }
}

/// What an index stream is used for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StreamLabel {
    CrossoverRow,
    MutationRow,
    MutationCol,
}

/// A deterministic sequence of bounded indices derived from the key.
///
/// Streams are stateful; one stream belongs to one consumer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexStream {
    bank: LfsrBank,
    label: StreamLabel,
}

impl IndexStream {
    /// Row streams seed from the key itself, the column stream from the key
    /// rotated by 128 bits so that rows and columns follow different
    /// trajectories.
    pub fn derive(key: &SecretKey, label: StreamLabel) -> Self {
        let seed = match label {
            StreamLabel::CrossoverRow | StreamLabel::MutationRow => key.value(),
            StreamLabel::MutationCol => key.value().rotate_left(128),
        };
        IndexStream {
            bank: LfsrBank::from_value(seed),
            label,
        }
    }

    pub fn label(&self) -> StreamLabel {
        self.label
    }

    pub fn bank(&self) -> &LfsrBank {
        &self.bank
    }

    /// Next index in `[0, bound)`.
    pub fn next_index(&mut self, bound: usize) -> Result<usize> {
        if bound == 0 {
            return Err(Error::InvalidDimension(
                "index bound must be at least 1".into(),
            ));
        }
        let v = self.bank.output();
        self.bank = LfsrBank::from_value(v.wrapping_add(v.rotate_left(CHAIN_ROTATION)));
        Ok(v.rem_u64(bound as u64) as usize)
    }
}
