//! Insertion enumerators.
//!
//! Every family is generated the same way: start from the fixed part
//! (`1..=r` as singletons, or nothing) and insert the remaining elements in
//! increasing order, each into every legal position of the structure built
//! so far. A depth-first walk over those choices yields each structure
//! exactly once, in insertion-position order, and prunes branches that can
//! no longer reach the requested number of blocks.

use std::collections::BTreeSet;

use super::{CyclePerm, ExtLahDist, LahDist, SetPartition};
use crate::statistics::ExtStats;

/// One family's insertion rules.
pub trait Insertion {
    type Item;
    /// Number of positions for inserting `elem`.
    fn options(&self, elem: usize) -> usize;
    /// 1 when option `opt` opens a counted block, else 0.
    fn delta(&self, elem: usize, opt: usize) -> usize;
    fn apply(&mut self, elem: usize, opt: usize);
    fn undo(&mut self);
    /// Counted blocks so far.
    fn count(&self) -> usize;
    fn snapshot(&self) -> Self::Item;
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Resume,
    Done,
}

/// A stream over every structure reachable by inserting `len` elements,
/// starting at label `first`, that ends with exactly `target` counted blocks.
pub struct InsertionStream<B> {
    builder: B,
    first: usize,
    len: usize,
    target: usize,
    stack: Vec<usize>,
    next_opt: usize,
    state: State,
}

impl<B: Insertion> InsertionStream<B> {
    fn new(builder: B, first: usize, len: usize, target: usize) -> Self {
        InsertionStream {
            builder,
            first,
            len,
            target,
            stack: Vec::with_capacity(len),
            next_opt: 0,
            state: State::Fresh,
        }
    }

    fn feasible(&self, depth: usize, opt: usize) -> bool {
        let elem = self.first + depth;
        let count = self.builder.count() + self.builder.delta(elem, opt);
        let remaining = self.len - depth - 1;
        count <= self.target && count + remaining >= self.target
    }

    /// Pops the deepest choice so the walk continues with its successor.
    /// Returns false once the root is exhausted.
    fn backtrack(&mut self) -> bool {
        match self.stack.pop() {
            Some(prev) => {
                self.builder.undo();
                self.next_opt = prev + 1;
                true
            }
            None => false,
        }
    }
}

impl<B: Insertion> Iterator for InsertionStream<B> {
    type Item = B::Item;

    fn next(&mut self) -> Option<B::Item> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Resume;
                let c = self.builder.count();
                if c > self.target || c + self.len < self.target {
                    self.state = State::Done;
                    return None;
                }
            }
            State::Resume => {
                if !self.backtrack() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        loop {
            let depth = self.stack.len();
            if depth == self.len {
                return Some(self.builder.snapshot());
            }
            let elem = self.first + depth;
            let options = self.builder.options(elem);
            let found = (self.next_opt..options).find(|&o| self.feasible(depth, o));
            match found {
                Some(o) => {
                    self.builder.apply(elem, o);
                    self.stack.push(o);
                    self.next_opt = 0;
                }
                None => {
                    if !self.backtrack() {
                        self.state = State::Done;
                        return None;
                    }
                }
            }
        }
    }
}

fn singletons(r: usize) -> Vec<Vec<usize>> {
    (1..=r).map(|e| vec![e]).collect()
}

// Set partitions: an element joins an existing block or opens a new one.

pub struct PartitionBuilder {
    blocks: Vec<Vec<usize>>,
    log: Vec<Option<usize>>,
}

impl Insertion for PartitionBuilder {
    type Item = SetPartition;

    fn options(&self, _: usize) -> usize {
        self.blocks.len() + 1
    }

    fn delta(&self, _: usize, opt: usize) -> usize {
        usize::from(opt == self.blocks.len())
    }

    fn apply(&mut self, elem: usize, opt: usize) {
        if opt == self.blocks.len() {
            self.blocks.push(vec![elem]);
            self.log.push(None);
        } else {
            self.blocks[opt].push(elem);
            self.log.push(Some(opt));
        }
    }

    fn undo(&mut self) {
        match self.log.pop().expect("undo without apply") {
            None => {
                self.blocks.pop();
            }
            Some(b) => {
                self.blocks[b].pop();
            }
        }
    }

    fn count(&self) -> usize {
        self.blocks.len()
    }

    fn snapshot(&self) -> SetPartition {
        SetPartition::from_canonical(self.blocks.clone())
    }
}

/// Partitions of `[n + r]` into `k + r` blocks with `1..=r` in distinct
/// blocks. `r = 0` gives the plain partitions of `[n]` into `k` blocks.
pub fn enum_partitions(n: usize, k: usize, r: usize) -> InsertionStream<PartitionBuilder> {
    let builder = PartitionBuilder {
        blocks: singletons(r),
        log: Vec::new(),
    };
    InsertionStream::new(builder, r + 1, n, k + r)
}

// Permutations: an element goes directly after any placed element in its
// cycle, or starts a new cycle. Kept as a successor table.

pub struct CycleBuilder {
    succ: Vec<usize>,
    placed: usize,
    cycles: usize,
    log: Vec<Option<usize>>,
}

impl Insertion for CycleBuilder {
    type Item = CyclePerm;

    fn options(&self, elem: usize) -> usize {
        elem
    }

    fn delta(&self, elem: usize, opt: usize) -> usize {
        usize::from(opt == elem - 1)
    }

    fn apply(&mut self, elem: usize, opt: usize) {
        if opt == elem - 1 {
            self.succ[elem] = elem;
            self.cycles += 1;
            self.log.push(None);
        } else {
            let after = opt + 1;
            self.succ[elem] = self.succ[after];
            self.succ[after] = elem;
            self.log.push(Some(after));
        }
        self.placed = elem;
    }

    fn undo(&mut self) {
        let elem = self.placed;
        match self.log.pop().expect("undo without apply") {
            None => self.cycles -= 1,
            Some(after) => self.succ[after] = self.succ[elem],
        }
        self.succ[elem] = 0;
        self.placed -= 1;
    }

    fn count(&self) -> usize {
        self.cycles
    }

    fn snapshot(&self) -> CyclePerm {
        let mut seen = vec![false; self.placed + 1];
        let mut cycles = Vec::with_capacity(self.cycles);
        for start in 1..=self.placed {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                cycle.push(e);
                e = self.succ[e];
            }
            cycles.push(cycle);
        }
        CyclePerm::from_canonical(cycles)
    }
}

/// Permutations of `[n + r]` with `k + r` cycles and `1..=r` in distinct
/// cycles, in standard cycle form.
pub fn enum_cycle_perms(n: usize, k: usize, r: usize) -> InsertionStream<CycleBuilder> {
    let mut succ = vec![0; n + r + 1];
    for (e, s) in succ.iter_mut().enumerate().take(r + 1).skip(1) {
        *s = e;
    }
    let builder = CycleBuilder {
        succ,
        placed: r,
        cycles: r,
        log: Vec::new(),
    };
    InsertionStream::new(builder, r + 1, n, k + r)
}

// Lah distributions: an element goes into any gap of any block, or opens a
// new block. Options run block by block, gap 0 (the front) first.

pub struct LahBuilder {
    blocks: Vec<Vec<usize>>,
    log: Vec<Option<(usize, usize)>>,
}

impl LahBuilder {
    fn gap(&self, mut opt: usize) -> Option<(usize, usize)> {
        for (b, block) in self.blocks.iter().enumerate() {
            if opt <= block.len() {
                return Some((b, opt));
            }
            opt -= block.len() + 1;
        }
        None
    }
}

impl Insertion for LahBuilder {
    type Item = LahDist;

    fn options(&self, elem: usize) -> usize {
        elem + self.blocks.len()
    }

    fn delta(&self, elem: usize, opt: usize) -> usize {
        usize::from(opt == elem - 1 + self.blocks.len())
    }

    fn apply(&mut self, elem: usize, opt: usize) {
        match self.gap(opt) {
            Some((b, at)) => {
                self.blocks[b].insert(at, elem);
                self.log.push(Some((b, at)));
            }
            None => {
                self.blocks.push(vec![elem]);
                self.log.push(None);
            }
        }
    }

    fn undo(&mut self) {
        match self.log.pop().expect("undo without apply") {
            None => {
                self.blocks.pop();
            }
            Some((b, at)) => {
                self.blocks[b].remove(at);
            }
        }
    }

    fn count(&self) -> usize {
        self.blocks.len()
    }

    fn snapshot(&self) -> LahDist {
        LahDist::from_canonical(self.blocks.clone())
    }
}

/// Lah distributions of `[n + r]` into `k + r` blocks with `1..=r` in
/// distinct blocks.
pub fn enum_lah(n: usize, k: usize, r: usize) -> InsertionStream<LahBuilder> {
    let builder = LahBuilder {
        blocks: singletons(r),
        log: Vec::new(),
    };
    InsertionStream::new(builder, r + 1, n, k + r)
}

// Extended Lah distributions. For element e the options are, in order:
//   0            a new true block
//   1..e         directly after element `opt` (nrec + 1)
//   then one per true block, at its front (rec* + 1)
//   last         circled, at the end of the last block (circ + 1)
// With no blocks yet the circled option opens the non-true block (1).

#[derive(Clone, Copy)]
enum ExtMove {
    NewBlock,
    After(usize, usize),
    Front(usize),
    Circled,
}

pub struct ExtLahBuilder {
    blocks: Vec<Vec<usize>>,
    circled: Vec<bool>,
    circled_min: bool,
    stats: ExtStats,
    log: Vec<ExtMove>,
}

impl ExtLahBuilder {
    fn true_blocks(&self) -> usize {
        self.blocks.len() - usize::from(self.circled_min)
    }

    fn locate(&self, e: usize) -> (usize, usize) {
        self.blocks
            .iter()
            .enumerate()
            .find_map(|(b, block)| block.iter().position(|&x| x == e).map(|i| (b, i)))
            .expect("placed element")
    }

    fn current(&self) -> ExtLahDist {
        let circled: BTreeSet<usize> = (1..self.circled.len()).filter(|&e| self.circled[e]).collect();
        ExtLahDist::from_parts_unchecked(LahDist::from_canonical(self.blocks.clone()), circled)
    }
}

impl Insertion for ExtLahBuilder {
    type Item = (ExtLahDist, ExtStats);

    fn options(&self, elem: usize) -> usize {
        elem + self.true_blocks() + 1
    }

    fn delta(&self, _: usize, opt: usize) -> usize {
        usize::from(opt == 0)
    }

    fn apply(&mut self, elem: usize, opt: usize) {
        let fronts = self.true_blocks();
        let mv = if opt == 0 {
            self.blocks.push(vec![elem]);
            ExtMove::NewBlock
        } else if opt < elem {
            let (b, i) = self.locate(opt);
            self.blocks[b].insert(i + 1, elem);
            self.stats.nrec += 1;
            ExtMove::After(b, i + 1)
        } else if opt < elem + fronts {
            let b = opt - elem + usize::from(self.circled_min);
            self.blocks[b].insert(0, elem);
            self.stats.rec_star += 1;
            ExtMove::Front(b)
        } else {
            match self.blocks.last_mut() {
                Some(last) => last.push(elem),
                None => {
                    self.blocks.push(vec![elem]);
                    self.circled_min = true;
                }
            }
            self.circled[elem] = true;
            self.stats.circ += 1;
            ExtMove::Circled
        };
        self.log.push(mv);
    }

    fn undo(&mut self) {
        match self.log.pop().expect("undo without apply") {
            ExtMove::NewBlock => {
                self.blocks.pop();
            }
            ExtMove::After(b, i) => {
                self.blocks[b].remove(i);
                self.stats.nrec -= 1;
            }
            ExtMove::Front(b) => {
                self.blocks[b].remove(0);
                self.stats.rec_star -= 1;
            }
            ExtMove::Circled => {
                let last = self.blocks.last_mut().expect("circled element has a block");
                let elem = last.pop().expect("non-empty block");
                if last.is_empty() {
                    self.blocks.pop();
                    self.circled_min = false;
                }
                self.circled[elem] = false;
                self.stats.circ -= 1;
            }
        }
    }

    fn count(&self) -> usize {
        self.true_blocks()
    }

    fn snapshot(&self) -> (ExtLahDist, ExtStats) {
        let d = self.current();
        if let Err(e) = d.validate() {
            panic!("insertion produced an invalid extended Lah distribution: {e}");
        }
        (d, self.stats)
    }
}

/// Extended Lah distributions together with the statistics accumulated
/// while inserting.
pub fn enum_extended_lah_tracked(n: usize, k: usize) -> InsertionStream<ExtLahBuilder> {
    let builder = ExtLahBuilder {
        blocks: Vec::new(),
        circled: vec![false; n + 1],
        circled_min: false,
        stats: ExtStats::default(),
        log: Vec::new(),
    };
    InsertionStream::new(builder, 1, n, k)
}

/// Extended Lah distributions of `[n]` with exactly `k` true blocks.
pub fn enum_extended_lah(n: usize, k: usize) -> impl Iterator<Item = ExtLahDist> {
    enum_extended_lah_tracked(n, k).map(|(d, _)| d)
}
