//! The split/join bijection behind the generalized Bell recurrence.
//!
//! Fix `m, n >= 1` and let `H = [m+1, m+n]`. For an extended Lah
//! distribution `λ` of `[m+n]`, the blocks holding elements of `[m]` come
//! first (their minima are at most `m`); call them the head blocks. Circled
//! elements of `H` can only sit at the end of the last head block. If there
//! are any, the smallest one `c` is also the leftmost, and everything to its
//! right is larger than `c`.
//!
//! `σ` is the head blocks with the tail from `c` cut off; it keeps its
//! original labels. `τ` is that tail (if any) followed by the remaining
//! blocks, relabelled onto `[i]`; a tail turns into the block of a circled
//! 1. Weights multiply: `w(λ) = w(σ) w(τ)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::structures::{ExtLahDist, LahDist};

/// The pieces of a split.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Split {
    /// Size of `τ`: the elements of `H` not kept in `σ`.
    pub i: usize,
    /// True blocks formed by `[m]`.
    pub j: usize,
    /// The head part on `[m]` plus `n - i` uncircled elements of `H`.
    pub sigma: ExtLahDist,
    /// The rest, relabelled onto `[i]`.
    pub tau: ExtLahDist,
}

fn invalid(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

pub fn split_lah(lambda: &ExtLahDist, m: usize, n: usize) -> Result<Split> {
    if m == 0 || n == 0 {
        return Err(invalid("split needs m, n >= 1".into()));
    }
    if lambda.n() != m + n || !lambda.base().is_standard() {
        return Err(invalid(format!("{lambda} is not a distribution of [{}]", m + n)));
    }
    lambda.validate()?;
    let blocks = lambda.blocks();
    let head = blocks.iter().take_while(|b| b.iter().any(|&e| e <= m)).count();
    if blocks[head..].iter().flatten().any(|&e| e <= m) {
        return Err(invalid(format!("{lambda}: head blocks are not first")));
    }
    let circled_h: Vec<usize> = blocks[..head]
        .iter()
        .flatten()
        .copied()
        .filter(|&e| e > m && lambda.is_circled(e))
        .collect();
    let last = &blocks[head - 1];
    let cut = match circled_h.iter().min() {
        None => last.len(),
        Some(&c) => {
            let p = last
                .iter()
                .position(|&e| e == c)
                .ok_or_else(|| invalid(format!("{lambda}: circled {c} outside the last head block")))?;
            if last[p..].iter().any(|&e| e < c) {
                return Err(invalid(format!("{lambda}: element right of circled {c} is smaller")));
            }
            p
        }
    };

    let mut sigma_blocks: Vec<Vec<usize>> = blocks[..head].to_vec();
    let tail = sigma_blocks[head - 1].split_off(cut);
    let mut tau_blocks: Vec<Vec<usize>> = Vec::new();
    if !tail.is_empty() {
        tau_blocks.push(tail);
    }
    tau_blocks.extend(blocks[head..].iter().cloned());

    let circled_in = |bs: &[Vec<usize>]| -> BTreeSet<usize> {
        bs.iter().flatten().copied().filter(|&e| lambda.is_circled(e)).collect()
    };
    let sigma = ExtLahDist::new(LahDist::with_labels(sigma_blocks.clone())?, circled_in(&sigma_blocks))?;
    let tau = if tau_blocks.is_empty() {
        ExtLahDist::empty()
    } else {
        ExtLahDist::new(LahDist::with_labels(tau_blocks.clone())?, circled_in(&tau_blocks))?
            .relabeled()
    };
    Ok(Split {
        i: tau.n(),
        j: sigma.true_blocks(),
        sigma,
        tau,
    })
}

/// Rebuilds `λ` from a split. Fails unless re-splitting the result gives
/// back exactly the same pieces.
pub fn join_lah(split: &Split, m: usize, n: usize) -> Result<ExtLahDist> {
    let Split { i, sigma, tau, .. } = split;
    if tau.n() != *i || !tau.base().is_standard() {
        return Err(invalid(format!("τ = {tau} is not a distribution of [{i}]")));
    }
    let labels: BTreeSet<usize> = sigma.base().scan().collect();
    let kept: BTreeSet<usize> = labels.range(m + 1..).copied().collect();
    let fits = labels.len() == m + kept.len()
        && labels.range(..=m).count() == m
        && kept.last().map_or(true, |&e| e <= m + n)
        && kept.len() + i == n;
    if !fits {
        return Err(invalid(format!("σ = {sigma} does not fit [{m}] and H")));
    }
    let rest: Vec<usize> = (m + 1..=m + n).filter(|e| !kept.contains(e)).collect();
    let map = |t: usize| rest[t - 1];

    let mut blocks: Vec<Vec<usize>> = sigma.blocks().to_vec();
    let mut circled: BTreeSet<usize> = sigma.circled().clone();
    circled.extend(tau.circled().iter().map(|&t| map(t)));
    for (bi, b) in tau.blocks().iter().enumerate() {
        let mapped: Vec<usize> = b.iter().map(|&t| map(t)).collect();
        if bi == 0 && tau.has_circled_min() {
            blocks
                .last_mut()
                .ok_or_else(|| invalid("σ is empty".into()))?
                .extend(mapped);
        } else {
            blocks.push(mapped);
        }
    }
    let lambda = ExtLahDist::new(LahDist::new(blocks)?, circled)?;
    if &split_lah(&lambda, m, n)? != split {
        return Err(invalid(format!("({sigma}, {tau}) is not the split of {lambda}")));
    }
    Ok(lambda)
}
