//! The statistics carried by each structure family, computed directly from
//! the structure (never from how it was generated).

use crate::polyring::MPoly;
use crate::structures::{CyclePerm, ExtLahDist, LahDist, SetPartition};

/// Number of pairs `i < j` with `word[i] > word[j]`, by merge sort.
pub fn inversions(word: &[usize]) -> u64 {
    if word.len() < 2 {
        return 0;
    }
    let mut buf = word.to_vec();
    let mut scratch = vec![0; word.len()];
    sort_count(&mut buf, &mut scratch)
}

fn sort_count(a: &mut [usize], scratch: &mut [usize]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    if n <= 16 {
        // insertion sort; each shift is one inversion
        let mut inv = 0;
        for i in 1..n {
            let x = a[i];
            let mut j = i;
            while j > 0 && a[j - 1] > x {
                a[j] = a[j - 1];
                j -= 1;
            }
            inv += (i - j) as u64;
            a[j] = x;
        }
        return inv;
    }
    let mid = n / 2;
    let (left, right) = a.split_at_mut(mid);
    let mut inv = sort_count(left, &mut scratch[..mid]) + sort_count(right, &mut scratch[mid..]);
    let (mut i, mut j, mut o) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if left[i] <= right[j] {
            scratch[o] = left[i];
            i += 1;
        } else {
            scratch[o] = right[j];
            inv += (left.len() - i) as u64;
            j += 1;
        }
        o += 1;
    }
    scratch[o..o + left.len() - i].copy_from_slice(&left[i..]);
    o += left.len() - i;
    scratch[o..o + right.len() - j].copy_from_slice(&right[j..]);
    a.copy_from_slice(&scratch[..n]);
    inv
}

/// `Σ (i-1)|B_i|` over the blocks in increasing-minimum order.
pub fn stat_w(pi: &SetPartition) -> u64 {
    pi.blocks()
        .iter()
        .enumerate()
        .map(|(i, b)| (i * b.len()) as u64)
        .sum()
}

/// Inversions of the word listing the blocks by decreasing minimum,
/// separated by 0.
pub fn stat_inv_rho(delta: &LahDist) -> u64 {
    let mut word = Vec::with_capacity(delta.n() + delta.num_blocks());
    for (i, b) in delta.blocks().iter().rev().enumerate() {
        if i > 0 {
            word.push(0);
        }
        word.extend_from_slice(b);
    }
    inversions(&word)
}

/// Inversions of the concatenated cycles in standard cycle form.
pub fn stat_inv_c(pi: &CyclePerm) -> u64 {
    let word: Vec<usize> = pi.cycles().iter().flatten().copied().collect();
    inversions(&word)
}

/// Record-low statistics of an extended Lah distribution, plus the circle
/// count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtStats {
    /// Uncircled elements that are not record lows.
    pub nrec: u32,
    /// Uncircled record lows that are not the minimum of their block.
    pub rec_star: u32,
    pub circ: u32,
}

/// Scans `list` for record lows. Returns (non-record-lows, record lows
/// other than the list minimum).
fn record_scan(list: &[usize]) -> (u32, u32) {
    let Some(&min) = list.iter().min() else {
        return (0, 0);
    };
    let mut low = usize::MAX;
    let (mut nrec, mut rec) = (0, 0);
    for &e in list {
        if e < low {
            low = e;
            if e != min {
                rec += 1;
            }
        } else {
            nrec += 1;
        }
    }
    (nrec, rec)
}

pub fn ext_stats(lambda: &ExtLahDist) -> ExtStats {
    let mut s = ExtStats {
        circ: lambda.circled().len() as u32,
        ..ExtStats::default()
    };
    let skip = usize::from(lambda.has_circled_min());
    for (bi, block) in lambda.blocks().iter().enumerate() {
        let uncircled: Vec<usize> = block
            .iter()
            .copied()
            .filter(|&e| !lambda.is_circled(e))
            .collect();
        if bi < skip {
            // the circled minimum heads this block: scan with it put back
            // in front, then the block gives p to nrec and nothing to rec*
            let mut front = Vec::with_capacity(uncircled.len() + 1);
            front.push(block[0]);
            front.extend_from_slice(&uncircled);
            let (nrec, rec) = record_scan(&front);
            let p = uncircled.len() as u32;
            assert!(
                nrec == p && rec == 0,
                "circled-minimum block scan disagrees with its override in {lambda}"
            );
            s.nrec += p;
        } else {
            let (nrec, rec) = record_scan(&uncircled);
            s.nrec += nrec;
            s.rec_star += rec;
        }
    }
    s
}

/// The monomial `α^nrec β^rec* r^circ`.
pub fn weight(lambda: &ExtLahDist) -> MPoly {
    let s = ext_stats(lambda);
    MPoly::from_monomial(s.nrec, s.rec_star, s.circ, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(s: &str) -> Vec<usize> {
        s.bytes().map(|b| (b - b'0') as usize).collect()
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[1, 2, 3, 4]), 0);
        assert_eq!(inversions(&digits("7680325014")), 30);
        assert_eq!(inversions(&digits("1342576")), 3);
        let long: Vec<usize> = (0..100).rev().collect();
        assert_eq!(inversions(&long), 4950);
    }

    #[test]
    fn w_statistic() {
        assert_eq!(stat_w(&"1,2,3".parse().unwrap()), 0);
        assert_eq!(stat_w(&"1,2/3".parse().unwrap()), 1);
        assert_eq!(stat_w(&"1/2,3".parse().unwrap()), 2);
    }

    #[test]
    fn inv_rho() {
        let d: LahDist = "3,2,5/7,6,8/1,4".parse().unwrap();
        assert_eq!(stat_inv_rho(&d), 30);
        assert_eq!(stat_inv_rho(&"1,2,3,4".parse().unwrap()), 0);
        assert_eq!(stat_inv_rho(&"2,1".parse().unwrap()), 1);
    }

    #[test]
    fn inv_c() {
        let p = CyclePerm::new(vec![vec![5, 7, 6], vec![3, 4, 1], vec![2]]).unwrap();
        assert_eq!(stat_inv_c(&p), 3);
        assert_eq!(stat_inv_c(&"1/2/3".parse().unwrap()), 0);
        assert_eq!(stat_inv_c(&"1,2".parse().unwrap()), 0);
    }

    #[test]
    fn extended_stats() {
        let lam: ExtLahDist = "(1),3,(2)/4,(5),7/13,6,8,(9)/12,11,10,14,(15)"
            .parse()
            .unwrap();
        let s = ext_stats(&lam);
        assert_eq!((s.nrec, s.rec_star, s.circ), (4, 3, 5));
        assert_eq!(weight(&lam), MPoly::from_monomial(4, 3, 5, 0));

        let s = ext_stats(&"1,3/2,4".parse().unwrap());
        assert_eq!((s.nrec, s.rec_star), (2, 0));
        let s = ext_stats(&"(1),2".parse().unwrap());
        assert_eq!((s.nrec, s.rec_star, s.circ), (1, 0, 1));
        assert_eq!(weight(&"1".parse().unwrap()), MPoly::one());
        assert_eq!(weight(&"1,(2)".parse().unwrap()), MPoly::from_monomial(0, 0, 1, 0));
    }

    #[test]
    fn record_lows_of_example() {
        // 4,1 | 8,3,2 | 7 are record lows: six in all
        let d: ExtLahDist = "4,1,5/8,3,6,2/7".parse().unwrap();
        let s = ext_stats(&d);
        assert_eq!(s.nrec, 2);
        assert_eq!(s.rec_star, 3);
    }
}
