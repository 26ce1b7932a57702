use std::fmt;
use std::str::FromStr;

use super::{check_blocks, parse_blocks, plain_blocks, sort_by_min, write_blocks};
use crate::error::{Error, Result};

/// A permutation of `[n]` in standard cycle form: each cycle starts with
/// its minimum and cycles are ordered by increasing minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePerm {
    cycles: Vec<Vec<usize>>,
}

impl CyclePerm {
    /// Rotates each cycle to start at its minimum, orders the cycles and
    /// validates the ground set.
    pub fn new(mut cycles: Vec<Vec<usize>>) -> Result<Self> {
        check_blocks(&cycles, true)?;
        for c in &mut cycles {
            let at = c.iter().enumerate().min_by_key(|(_, &e)| e).map(|(i, _)| i);
            c.rotate_left(at.unwrap_or(0));
        }
        sort_by_min(&mut cycles);
        Ok(CyclePerm { cycles })
    }

    pub(crate) fn from_canonical(cycles: Vec<Vec<usize>>) -> Self {
        CyclePerm { cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn separates(&self, r: usize) -> bool {
        self.cycles
            .iter()
            .all(|c| c.iter().filter(|&&e| e <= r).count() <= 1)
    }

    /// The image of each element: `result[e]` is where `e` maps (index 0 unused).
    pub fn successor_table(&self) -> Vec<usize> {
        let mut succ = vec![0; self.n() + 1];
        for c in &self.cycles {
            for (i, &e) in c.iter().enumerate() {
                succ[e] = c[(i + 1) % c.len()];
            }
        }
        succ
    }
}

impl fmt::Display for CyclePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.cycles, |_| false)
    }
}

impl FromStr for CyclePerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CyclePerm::new(plain_blocks(parse_blocks(s)?)?)
    }
}
