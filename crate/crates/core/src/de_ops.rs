//! Spectral crossover and keyed mutation, and the schedules that drive them.
//!
//! Crossover exchanges the imaginary parts of two components; mutation
//! reflects a real part `r` to `k_s - r`. Both are involutions, so running
//! the same schedule twice undoes it.

use crate::error::{Error, Result};
use crate::key::SecretKey;
use crate::lfsr::IndexStream;
use crate::transform::{KeyScalar, SpectralMatrix};
use crate::u256::U256;

/// `(row, col)` of a spectral component.
pub type Position = (usize, usize);

/// Exchanges the imaginary parts of the components at `a` and `b`.
pub fn crossover_pair(spec: &mut SpectralMatrix, a: Position, b: Position) -> Result<()> {
    let ia = spec.check_position(a.0, a.1)?;
    let ib = spec.check_position(b.0, b.1)?;
    if ia == ib {
        return Err(Error::InvalidArgument(format!(
            "crossover needs two distinct positions, got {a:?} twice"
        )));
    }
    let data = spec.as_mut_slice();
    let im = data[ia].im;
    data[ia].im = data[ib].im;
    data[ib].im = im;
    Ok(())
}

/// Replaces the real part `r` at `pos` with `k_s - r`.
pub fn mutate_component(spec: &mut SpectralMatrix, pos: Position, k: KeyScalar) -> Result<()> {
    let i = spec.check_position(pos.0, pos.1)?;
    let c = &mut spec.as_mut_slice()[i];
    c.re = k.value() - c.re;
    Ok(())
}

fn check_schedule_dims(spec: &SpectralMatrix, dims: (usize, usize)) -> Result<()> {
    if spec.dims() != dims {
        return Err(Error::DimensionMismatch {
            expected: dims,
            found: spec.dims(),
        });
    }
    Ok(())
}

fn check_in_bounds(p: Position, rows: usize, cols: usize) -> Result<()> {
    if p.0 >= rows || p.1 >= cols {
        return Err(Error::OutOfBounds {
            row: p.0,
            col: p.1,
            rows,
            cols,
        });
    }
    Ok(())
}

/// `key mod bound` over the full 256-bit key.
fn key_mod(key: U256, bound: usize) -> usize {
    key.rem_u64(bound as u64) as usize
}

/// Ordered component pairs for one crossover pass over an `rows x cols`
/// spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossoverSchedule {
    dims: (usize, usize),
    pairs: Vec<(Position, Position)>,
}

impl CrossoverSchedule {
    /// An explicit schedule. Every position must be in bounds and the two
    /// members of a pair distinct.
    pub fn new(rows: usize, cols: usize, pairs: Vec<(Position, Position)>) -> Result<Self> {
        for &(a, b) in &pairs {
            check_in_bounds(a, rows, cols)?;
            check_in_bounds(b, rows, cols)?;
            if a == b {
                return Err(Error::InvalidArgument(format!(
                    "crossover pair repeats position {a:?}"
                )));
            }
        }
        Ok(CrossoverSchedule {
            dims: (rows, cols),
            pairs,
        })
    }

    /// Key-driven schedule. The first row is `key mod rows`; pair `t` crosses
    /// columns `2t` and `2t + 1` of the current row, after which the row is
    /// redrawn from `stream`. An odd trailing column is left alone, and fewer
    /// than two columns give an empty schedule.
    pub fn build(
        rows: usize,
        cols: usize,
        key: &SecretKey,
        stream: &mut IndexStream,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension(format!(
                "cannot schedule a {rows}x{cols} spectrum"
            )));
        }
        let mut pairs = Vec::with_capacity(cols / 2);
        let mut row = key_mod(key.value(), rows);
        for t in 0..cols / 2 {
            pairs.push(((row, 2 * t), (row, 2 * t + 1)));
            row = stream.next_index(rows)?;
        }
        Ok(CrossoverSchedule {
            dims: (rows, cols),
            pairs,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn pairs(&self) -> &[(Position, Position)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Ordered mutation targets for one mutation pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationSchedule {
    dims: (usize, usize),
    targets: Vec<Position>,
    repeat_factor: u32,
}

impl MutationSchedule {
    /// An explicit target list. `repeat_factor` is reported as 1.
    pub fn new(rows: usize, cols: usize, targets: Vec<Position>) -> Result<Self> {
        for &p in &targets {
            check_in_bounds(p, rows, cols)?;
        }
        Ok(MutationSchedule {
            dims: (rows, cols),
            targets,
            repeat_factor: 1,
        })
    }

    /// Key-driven schedule of `rows * cols * repeat_factor` targets. The
    /// first is `(key mod rows, (key - 128) mod cols)` with the subtraction
    /// wrapping in 256 bits; every later row comes from `row_stream` and
    /// every later column from `col_stream`.
    pub fn build(
        rows: usize,
        cols: usize,
        key: &SecretKey,
        row_stream: &mut IndexStream,
        col_stream: &mut IndexStream,
        repeat_factor: u32,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension(format!(
                "cannot schedule a {rows}x{cols} spectrum"
            )));
        }
        if repeat_factor == 0 {
            return Err(Error::InvalidArgument(
                "repeat factor must be at least 1".into(),
            ));
        }
        let total = rows
            .checked_mul(cols)
            .and_then(|n| n.checked_mul(repeat_factor as usize))
            .ok_or_else(|| Error::InvalidArgument("mutation schedule too large".into()))?;

        let mut targets = Vec::with_capacity(total);
        let k = key.value();
        targets.push((
            key_mod(k, rows),
            key_mod(k.wrapping_sub(U256::from_u128(128)), cols),
        ));
        for _ in 1..total {
            let r = row_stream.next_index(rows)?;
            let c = col_stream.next_index(cols)?;
            targets.push((r, c));
        }
        Ok(MutationSchedule {
            dims: (rows, cols),
            targets,
            repeat_factor,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn targets(&self) -> &[Position] {
        &self.targets
    }

    pub fn repeat_factor(&self) -> u32 {
        self.repeat_factor
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }
}

/// Applies every pair of `schedule` in order.
pub fn apply_crossover_pass(spec: &mut SpectralMatrix, schedule: &CrossoverSchedule) -> Result<()> {
    check_schedule_dims(spec, schedule.dims)?;
    for &(a, b) in &schedule.pairs {
        crossover_pair(spec, a, b)?;
    }
    Ok(())
}

/// Applies every target of `schedule` in order. Targets hit an even number
/// of times cancel out.
pub fn apply_mutation_pass(
    spec: &mut SpectralMatrix,
    schedule: &MutationSchedule,
    k: KeyScalar,
) -> Result<()> {
    check_schedule_dims(spec, schedule.dims)?;
    for &p in &schedule.targets {
        mutate_component(spec, p, k)?;
    }
    Ok(())
}
