//! Brute-force statistic sums over full enumerations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numbers::Value;
use crate::polyring::{BigInt, MPoly, QPoly};
use crate::statistics::{ext_stats, stat_inv_c, stat_inv_rho, stat_w};
use crate::structures::{
    check_cell_cap, enum_cycle_perms, enum_extended_lah_tracked, enum_lah, enum_partitions, Family,
};

fn histogram(stats: impl Iterator<Item = u64>) -> QPoly {
    let mut counts: Vec<u64> = Vec::new();
    for s in stats {
        let s = s as usize;
        if s >= counts.len() {
            counts.resize(s + 1, 0);
        }
        counts[s] += 1;
    }
    QPoly::from_counts(&counts)
}

/// `Σ q^w` over partitions of `[n+r]` into `k+r` blocks with `1..=r` apart.
pub fn oracle_partitions(n: usize, k: usize, r: usize, cap: u64) -> Result<QPoly> {
    check_cell_cap(Family::Partitions, n, k, r, cap)?;
    Ok(histogram(enum_partitions(n, k, r).map(|p| stat_w(&p))))
}

/// `Σ q^inv_c` over permutations of `[n+r]` with `k+r` cycles, `1..=r` apart.
pub fn oracle_perms(n: usize, k: usize, r: usize, cap: u64) -> Result<QPoly> {
    check_cell_cap(Family::Perms, n, k, r, cap)?;
    Ok(histogram(enum_cycle_perms(n, k, r).map(|p| stat_inv_c(&p))))
}

/// `Σ q^inv_ρ` over Lah distributions of `[n+r]` into `k+r` blocks,
/// `1..=r` apart.
pub fn oracle_lah(n: usize, k: usize, r: usize, cap: u64) -> Result<QPoly> {
    check_cell_cap(Family::Lah, n, k, r, cap)?;
    Ok(histogram(enum_lah(n, k, r).map(|d| stat_inv_rho(&d))))
}

/// `Σ α^nrec β^rec* r^circ` over extended Lah distributions of `[n]` with
/// `k` true blocks. Statistics are computed directly from each structure.
pub fn oracle_ext_lah(n: usize, k: usize, cap: u64) -> Result<MPoly> {
    check_cell_cap(Family::ExtLah, n, k, 0, cap)?;
    let mut counts: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
    for (d, _) in enum_extended_lah_tracked(n, k) {
        let s = ext_stats(&d);
        *counts.entry((s.nrec, s.rec_star, s.circ)).or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .map(|((a, b, c), cnt)| MPoly::from_monomial(a, b, c, 0).scale(&BigInt::from(cnt)))
        .sum())
}

/// The first extended Lah distribution whose statistics, as tracked during
/// insertion, differ from the ones computed directly.
pub fn first_stat_mismatch(n: usize, k: usize) -> Option<String> {
    enum_extended_lah_tracked(n, k).find_map(|(d, tracked)| {
        let direct = ext_stats(&d);
        (tracked != direct).then(|| format!("{d}: tracked {tracked:?}, direct {direct:?}"))
    })
}

/// Dispatches to the family's oracle. Extended Lah requires `r = 0`.
pub fn oracle(family: Family, n: usize, k: usize, r: usize, cap: u64) -> Result<Value> {
    Ok(match family {
        Family::Partitions => oracle_partitions(n, k, r, cap)?.into(),
        Family::Perms => oracle_perms(n, k, r, cap)?.into(),
        Family::Lah => oracle_lah(n, k, r, cap)?.into(),
        Family::ExtLah => {
            if r != 0 {
                return Err(Error::InvalidArgument(
                    "extended Lah oracle takes no r".into(),
                ));
            }
            oracle_ext_lah(n, k, cap)?.into()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Var;
    use crate::structures::DEFAULT_CELL_CAP;

    const CAP: u64 = DEFAULT_CELL_CAP;

    #[test]
    fn small_oracles() {
        assert_eq!(oracle_partitions(3, 2, 0, CAP).unwrap(), QPoly::from_i64s(&[0, 2, 1]));
        assert_eq!(oracle_perms(3, 2, 0, CAP).unwrap(), QPoly::from_i64s(&[2, 1]));
        assert_eq!(oracle_lah(2, 1, 0, CAP).unwrap(), QPoly::from_i64s(&[1, 1]));
        let a = MPoly::var(Var::Alpha);
        let b = MPoly::var(Var::Beta);
        let r = MPoly::var(Var::R);
        assert_eq!(
            oracle_ext_lah(2, 1, CAP).unwrap(),
            &(&a + &b) + &r.scale(&BigInt::from(2))
        );
        assert_eq!(oracle_lah(5, 2, 0, CAP).unwrap().coeff_sum(), BigInt::from(240));
    }

    #[test]
    fn cap_and_family_errors() {
        assert!(matches!(
            oracle_perms(9, 1, 0, 100),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(oracle(Family::ExtLah, 2, 1, 1, CAP).is_err());
    }

    #[test]
    fn tracked_statistics_match() {
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(first_stat_mismatch(n, k), None);
            }
        }
    }
}
