//! Brute-force generators written straight from the definitions, shared by
//! the integration tests. Nothing here goes through the library's
//! enumerators or statistics.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

pub type Blocks = Vec<Vec<usize>>;

pub fn naive_inversions(word: &[usize]) -> u64 {
    let mut c = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                c += 1;
            }
        }
    }
    c
}

/// Orders blocks by increasing minimum.
pub fn canonical(mut blocks: Blocks) -> Blocks {
    blocks.sort_by_key(|b| *b.iter().min().unwrap());
    blocks
}

/// `1..=r` lie in distinct blocks.
pub fn separates(blocks: &Blocks, r: usize) -> bool {
    (1..=r).map(|e| blocks.iter().position(|b| b.contains(&e))).all_unique()
}

/// Every set partition of `[n]`, from restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Blocks> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn go(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Blocks>) {
        if i == rgs.len() {
            let nb = rgs.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); nb];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push(e + 1);
            }
            out.push(blocks);
            return;
        }
        let hi = if i == 0 { 0 } else { max + 1 };
        for b in 0..=hi {
            rgs[i] = b;
            go(i + 1, max.max(b), rgs, out);
        }
    }
    go(0, 0, &mut rgs, &mut out);
    out
}

pub fn stat_w(blocks: &Blocks) -> u64 {
    canonical(blocks.clone())
        .iter()
        .enumerate()
        .map(|(i, b)| (i * b.len()) as u64)
        .sum()
}

/// Cycles of a permutation in one-line form, each led by its minimum,
/// ordered by minimum.
pub fn cycles(perm: &[usize]) -> Blocks {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            c.push(e);
            e = perm[e - 1];
        }
        out.push(c);
    }
    out
}

pub fn stat_inv_c(cyc: &Blocks) -> u64 {
    naive_inversions(&cyc.concat())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Every Lah distribution of `[n]`: each word of `[n]` cut at every subset
/// of the gaps, deduplicated.
pub fn lah_all(n: usize) -> BTreeSet<Blocks> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Vec::new());
        return out;
    }
    for word in permutations(n) {
        for mask in 0u32..1 << (n - 1) {
            let mut blocks = vec![vec![word[0]]];
            for (p, &e) in word.iter().enumerate().skip(1) {
                if mask >> (p - 1) & 1 == 1 {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().unwrap().push(e);
            }
            out.insert(canonical(blocks));
        }
    }
    out
}

pub fn stat_inv_rho(blocks: &Blocks) -> u64 {
    let mut bs = canonical(blocks.clone());
    bs.reverse();
    let word: Vec<usize> = Itertools::intersperse(bs.into_iter(), vec![0]).flatten().collect();
    naive_inversions(&word)
}

/// Elements that may be circled: 1, and every `i >= 2` that is not a block
/// minimum and has all of `[i-1]` to its left in the scan.
pub fn specials(blocks: &Blocks) -> BTreeSet<usize> {
    let scan: Vec<usize> = blocks.concat();
    let pos: BTreeMap<usize, usize> = scan.iter().enumerate().map(|(p, &e)| (e, p)).collect();
    let minima: BTreeSet<usize> = blocks.iter().map(|b| *b.iter().min().unwrap()).collect();
    let mut out = BTreeSet::new();
    for &i in &scan {
        if i == 1 || (!minima.contains(&i) && (1..i).all(|j| pos[&j] < pos[&i])) {
            out.insert(i);
        }
    }
    out
}

/// An extended Lah distribution: canonical blocks and a circled set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ext {
    pub blocks: Blocks,
    pub circled: BTreeSet<usize>,
}

impl Ext {
    pub fn true_blocks(&self) -> usize {
        self.blocks.len() - usize::from(self.circled.contains(&1))
    }

    /// `(nrec, rec*, circ)` from the definitions.
    pub fn stats(&self) -> (u32, u32, u32) {
        let (mut nrec, mut rec) = (0, 0);
        for b in &self.blocks {
            let plain: Vec<usize> = b.iter().copied().filter(|e| !self.circled.contains(e)).collect();
            if b.contains(&1) && self.circled.contains(&1) {
                nrec += plain.len() as u32;
                continue;
            }
            let min = *plain.iter().min().unwrap();
            for (p, &e) in plain.iter().enumerate() {
                let low = plain[..p].iter().all(|&x| x > e);
                if !low {
                    nrec += 1;
                } else if e != min {
                    rec += 1;
                }
            }
        }
        (nrec, rec, self.circled.len() as u32)
    }

    pub fn render(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| if self.circled.contains(e) { format!("({e})") } else { e.to_string() })
                    .join(",")
            })
            .join("/")
    }
}

/// Every extended Lah distribution of `[n]`.
pub fn ext_lah_all(n: usize) -> Vec<Ext> {
    let mut out = Vec::new();
    for blocks in lah_all(n) {
        let sp: Vec<usize> = specials(&blocks)
            .into_iter()
            .filter(|&e| e != 1 || blocks.iter().any(|b| b[0] == 1))
            .collect();
        for mask in 0u32..1 << sp.len() {
            let circled = sp.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            out.push(Ext { blocks: blocks.clone(), circled });
        }
    }
    out
}

/// Histogram of a statistic, indexed by value.
pub fn histogram(values: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut h = Vec::new();
    for v in values {
        let v = v as usize;
        if h.len() <= v {
            h.resize(v + 1, 0);
        }
        h[v] += 1;
    }
    h
}
