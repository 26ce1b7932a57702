use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{check_blocks, parse_blocks, plain_blocks, sort_by_min, write_blocks};
use crate::error::{Error, Result};

/// A Lah distribution: a set partition whose blocks are ordered lists.
///
/// Blocks are stored ordered by increasing minimum; the order inside a
/// block is significant. Normally the ground set is `[n]`; pieces cut out of
/// a larger distribution keep their original labels (see
/// [`LahDist::with_labels`]) and every definition below is read relative to
/// the ground set's own order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LahDist {
    blocks: Vec<Vec<usize>>,
}

impl LahDist {
    /// A Lah distribution of `[n]`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_blocks(&blocks, true)?;
        sort_by_min(&mut blocks);
        Ok(LahDist { blocks })
    }

    /// A Lah distribution on whatever distinct positive labels it contains.
    pub fn with_labels(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_blocks(&blocks, false)?;
        sort_by_min(&mut blocks);
        Ok(LahDist { blocks })
    }

    pub(crate) fn from_canonical(blocks: Vec<Vec<usize>>) -> Self {
        LahDist { blocks }
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

    /// The left-to-right scan of all blocks.
    pub fn scan(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().flatten().copied()
    }

    pub fn is_standard(&self) -> bool {
        check_blocks(&self.blocks, true).is_ok()
    }

    pub fn separates(&self, r: usize) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().filter(|&&e| e <= r).count() <= 1)
    }

    /// Order-preserving relabelling of the ground set onto `[n]`.
    pub fn relabeled(&self) -> LahDist {
        let map = rank_map(self.scan());
        LahDist {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|e| map(*e)).collect())
                .collect(),
        }
    }
}

/// Maps each label to its 1-based rank among `labels`.
fn rank_map(labels: impl Iterator<Item = usize>) -> impl Fn(usize) -> usize {
    let mut sorted: Vec<usize> = labels.collect();
    sorted.sort_unstable();
    move |e| sorted.binary_search(&e).expect("label in ground set") + 1
}

/// The special elements of a Lah distribution: the smallest element, and
/// every element that is not a block minimum and is preceded in the
/// left-to-right scan by all smaller elements.
pub fn special_elements(delta: &LahDist) -> BTreeSet<usize> {
    let mut pos: Vec<(usize, usize)> = delta.scan().enumerate().map(|(p, e)| (e, p)).collect();
    pos.sort_unstable();
    let minima: BTreeSet<usize> = delta
        .blocks
        .iter()
        .filter_map(|b| b.iter().copied().min())
        .collect();
    let mut out = BTreeSet::new();
    let mut furthest: Option<usize> = None;
    for (idx, &(e, p)) in pos.iter().enumerate() {
        let preceded = furthest.map_or(true, |f| f < p);
        if idx == 0 || (preceded && !minima.contains(&e)) {
            out.insert(e);
        }
        furthest = Some(furthest.map_or(p, |f| f.max(p)));
    }
    out
}

impl fmt::Display for LahDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks, |_| false)
    }
}

impl FromStr for LahDist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LahDist::new(plain_blocks(parse_blocks(s)?)?)
    }
}

/// A Lah distribution with some special elements circled.
///
/// The smallest element may be circled only when it starts its block. A
/// block containing the circled smallest element is not a *true* block;
/// every other block is.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtLahDist {
    base: LahDist,
    circled: BTreeSet<usize>,
}

impl ExtLahDist {
    /// Validates the circling rules against `base`.
    pub fn new(base: LahDist, circled: BTreeSet<usize>) -> Result<Self> {
        let d = ExtLahDist { base, circled };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_parts_unchecked(base: LahDist, circled: BTreeSet<usize>) -> Self {
        ExtLahDist { base, circled }
    }

    pub fn empty() -> Self {
        ExtLahDist {
            base: LahDist::from_canonical(Vec::new()),
            circled: BTreeSet::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let special = special_elements(&self.base);
        if let Some(bad) = self.circled.iter().find(|e| !special.contains(e)) {
            return Err(Error::InvalidArgument(format!(
                "circled element {bad} is not special in {self}"
            )));
        }
        if let Some(min) = self.min_element() {
            if self.circled.contains(&min) && !self.base.blocks.iter().any(|b| b[0] == min) {
                return Err(Error::InvalidArgument(format!(
                    "circled {min} must start its block in {self}"
                )));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &LahDist {
        &self.base
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.base.blocks
    }

    pub fn circled(&self) -> &BTreeSet<usize> {
        &self.circled
    }

    pub fn is_circled(&self, e: usize) -> bool {
        self.circled.contains(&e)
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn is_empty(&self) -> bool {
        self.base.blocks.is_empty()
    }

    pub fn min_element(&self) -> Option<usize> {
        self.base.blocks.first().and_then(|b| b.iter().copied().min())
    }

    /// True when the smallest element is circled; its block is then the
    /// first block and is not true.
    pub fn has_circled_min(&self) -> bool {
        self.min_element().is_some_and(|m| self.circled.contains(&m))
    }

    /// Indices into [`blocks`](Self::blocks) of the true blocks.
    pub fn true_block_indices(&self) -> std::ops::Range<usize> {
        let skip = usize::from(self.has_circled_min());
        skip..self.base.blocks.len()
    }

    pub fn true_blocks(&self) -> usize {
        self.true_block_indices().len()
    }

    pub fn relabeled(&self) -> ExtLahDist {
        let map = rank_map(self.base.scan());
        let circled = self.circled.iter().map(|e| map(*e)).collect();
        ExtLahDist {
            base: self.base.relabeled(),
            circled,
        }
    }
}

impl fmt::Display for ExtLahDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.base.blocks, |e| self.circled.contains(&e))
    }
}

impl FromStr for ExtLahDist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parsed = parse_blocks(s)?;
        let circled = parsed.iter().flatten().filter(|(_, c)| *c).map(|(e, _)| *e).collect();
        let blocks = parsed
            .into_iter()
            .map(|b| b.into_iter().map(|(e, _)| e).collect())
            .collect();
        ExtLahDist::new(LahDist::new(blocks)?, circled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lah(s: &str) -> LahDist {
        s.parse().unwrap()
    }

    #[test]
    fn natural_single_block_is_all_special() {
        let d = lah("1,2,3,4,5");
        assert_eq!(special_elements(&d), (1..=5).collect());
    }

    #[test]
    fn block_minima_and_late_elements_are_not_special() {
        // Blocks by minimum: {2,1} then {3}. 2 precedes 1, 3 is a minimum.
        assert_eq!(special_elements(&lah("2,1/3")), BTreeSet::from([1]));
        assert_eq!(special_elements(&lah("1/2")), BTreeSet::from([1]));
    }

    #[test]
    fn fifteen_element_example() {
        let lam: ExtLahDist = "(1),3,(2)/4,(5),7/13,6,8,(9)/12,11,10,14,(15)"
            .parse()
            .unwrap();
        let special = special_elements(lam.base());
        assert!(special.contains(&8) && !lam.is_circled(8));
        assert!(special.contains(&14) && !lam.is_circled(14));
        assert_eq!(lam.true_blocks(), 3);
        assert_eq!(lam.to_string(), "(1),3,(2)/4,(5),7/13,6,8,(9)/12,11,10,14,(15)");
    }

    #[test]
    fn circling_rules() {
        assert!("(1),2".parse::<ExtLahDist>().is_ok());
        assert!("2,(1)".parse::<ExtLahDist>().is_err());
        assert!("(1)/2".parse::<ExtLahDist>().is_ok());
        assert!("1/(2)".parse::<ExtLahDist>().is_err());
        assert!("2,1,(3)".parse::<ExtLahDist>().is_ok());
        assert!("1,(3),2".parse::<ExtLahDist>().is_err());
    }

    #[test]
    fn relabeling_preserves_order() {
        let d = ExtLahDist::new(
            LahDist::with_labels(vec![vec![7, 9], vec![2, 5]]).unwrap(),
            BTreeSet::from([9]),
        )
        .unwrap();
        assert_eq!(d.relabeled().to_string(), "1,2/3,(4)");
    }
}
