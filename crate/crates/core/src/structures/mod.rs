//! Set partitions, permutations in standard cycle form, Lah distributions
//! and extended Lah distributions, with exhaustive enumerators.
//!
//! Elements are labelled `1..=n`. Every structure stores its blocks (or
//! cycles) ordered by increasing minimum, so derived equality and hashing
//! compare canonical forms.
//!
//! The text form used in dumps and reports separates blocks with `/` and
//! elements with `,`, rendering a circled element `i` as `(i)`:
//! `(1),3,(2)/4,(5),7`.

mod counts;
mod cycles;
mod enumerate;
mod lah;
mod partition;

pub use counts::{cell_size, check_cell_cap, Family, DEFAULT_CELL_CAP};
pub use cycles::CyclePerm;
pub use enumerate::{
    enum_cycle_perms, enum_extended_lah, enum_extended_lah_tracked, enum_lah, enum_partitions,
    InsertionStream,
};
pub use lah::{special_elements, ExtLahDist, LahDist};
pub use partition::SetPartition;

use crate::error::{Error, Result};

/// Checks blocks are non-empty with pairwise distinct positive elements.
/// With `standard`, the union must also be exactly `1..=n`.
fn check_blocks(blocks: &[Vec<usize>], standard: bool) -> Result<()> {
    let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
    if blocks.iter().any(Vec::is_empty) {
        return Err(Error::InvalidArgument("empty block".into()));
    }
    seen.sort_unstable();
    if seen.first() == Some(&0) {
        return Err(Error::InvalidArgument("elements are labelled from 1".into()));
    }
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("repeated element".into()));
    }
    if standard && seen.iter().enumerate().any(|(i, &e)| e != i + 1) {
        return Err(Error::InvalidArgument(format!(
            "ground set is not 1..={}",
            seen.len()
        )));
    }
    Ok(())
}

fn sort_by_min(blocks: &mut [Vec<usize>]) {
    blocks.sort_by_key(|b| b.iter().copied().min());
}

/// Parses the `/`- and `,`-separated text form; the flag marks `(i)`.
fn parse_blocks(s: &str) -> Result<Vec<Vec<(usize, bool)>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|block| {
            block
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    let (body, circled) = match tok.strip_prefix('(') {
                        Some(rest) => (
                            rest.strip_suffix(')')
                                .ok_or_else(|| Error::Parse(format!("unbalanced `{tok}`")))?,
                            true,
                        ),
                        None => (tok, false),
                    };
                    body.trim()
                        .parse::<usize>()
                        .map(|e| (e, circled))
                        .map_err(|_| Error::Parse(format!("bad element `{tok}`")))
                })
                .collect()
        })
        .collect()
}

fn write_blocks(
    f: &mut std::fmt::Formatter<'_>,
    blocks: &[Vec<usize>],
    circled: impl Fn(usize) -> bool,
) -> std::fmt::Result {
    for (bi, block) in blocks.iter().enumerate() {
        if bi > 0 {
            f.write_str("/")?;
        }
        for (i, &e) in block.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if circled(e) {
                write!(f, "({e})")?;
            } else {
                write!(f, "{e}")?;
            }
        }
    }
    Ok(())
}

fn plain_blocks(parsed: Vec<Vec<(usize, bool)>>) -> Result<Vec<Vec<usize>>> {
    parsed
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|(e, c)| {
                    if c {
                        Err(Error::Parse(format!("circled element {e} not allowed here")))
                    } else {
                        Ok(e)
                    }
                })
                .collect()
        })
        .collect()
}
