use std::fmt;
use std::str::FromStr;

use super::{check_blocks, parse_blocks, plain_blocks, sort_by_min, write_blocks};
use crate::error::{Error, Result};

/// A partition of `[n]` into blocks, each block increasing, blocks ordered
/// by increasing minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes and validates a partition of `[n]`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_blocks(&blocks, true)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        sort_by_min(&mut blocks);
        Ok(SetPartition { blocks })
    }

    pub(crate) fn from_canonical(blocks: Vec<Vec<usize>>) -> Self {
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True when `1..=r` lie in pairwise distinct blocks.
    pub fn separates(&self, r: usize) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().filter(|&&e| e <= r).count() <= 1)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks, |_| false)
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SetPartition::new(plain_blocks(parse_blocks(s)?)?)
    }
}
