use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default limit on the number of structures enumerated for one cell.
pub const DEFAULT_CELL_CAP: u64 = 10_000_000;

/// The four enumerated families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Partitions,
    Perms,
    Lah,
    ExtLah,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Partitions => "partitions",
            Family::Perms => "perms",
            Family::Lah => "lah",
            Family::ExtLah => "ext_lah",
        }
    }
}

/// Exact number of structures in the `(n, k, r)` cell, from the insertion
/// recurrences. `r` is ignored for extended Lah distributions.
pub fn cell_size(family: Family, n: usize, k: usize, r: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] holds the count for the current size with j counted blocks
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::from(1u8);
    for size in 1..=n {
        for j in (0..=k.min(size)).rev() {
            let stay = match family {
                Family::Partitions => j + r,
                Family::Perms => size - 1 + r,
                Family::Lah => size + j + 2 * r - 1,
                Family::ExtLah => size + j,
            };
            let mut v = &row[j] * BigUint::from(stay);
            if j > 0 {
                v += &row[j - 1];
            }
            row[j] = v;
        }
    }
    row.swap_remove(k)
}

/// Fails with a capacity error when the cell holds more than `cap` members.
pub fn check_cell_cap(family: Family, n: usize, k: usize, r: usize, cap: u64) -> Result<()> {
    let size = cell_size(family, n, k, r);
    if size.to_u64().is_some_and(|s| s <= cap) {
        Ok(())
    } else {
        Err(Error::CapacityExceeded {
            cell: format!("{}(n={n}, k={k}, r={r})", family.name()),
            estimate: size,
            cap,
        })
    }
}
