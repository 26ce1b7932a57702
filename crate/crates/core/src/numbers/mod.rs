//! Engines for every number family: q-Stirling numbers of both kinds,
//! q-Bell numbers, q-Lah numbers, their `r`-variants, and the generalized
//! Stirling numbers `S(n,k; α,β,r)` with their Bell polynomials.
//!
//! Base families come from their defining recurrences. The `r`-variants
//! are composed from the base tables with the shift sums (an extra shift
//! by `r` elements that must sit in distinct blocks). Every value is
//! memoized; tables only ever grow.

mod table;

use std::sync::LazyLock;

use num_traits::{One, Zero};

use crate::memo::Memo;
use crate::polyring::{
    binomial, q_binomial, q_integer, q_rising, BigInt, MPoly, Monomial, QPoly, Var,
};

pub use table::{FamilyTable, Provenance, TableFamily, TableRow, Value};

type QMemo = LazyLock<Memo<(usize, usize, usize), QPoly>>;

static STIRLING2: QMemo = LazyLock::new(Memo::new);
static STIRLING1: QMemo = LazyLock::new(Memo::new);
static LAH: QMemo = LazyLock::new(Memo::new);
static LAH_REC: QMemo = LazyLock::new(Memo::new);
static HSU_SHIUE: LazyLock<Memo<(usize, usize), MPoly>> = LazyLock::new(Memo::new);

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `S_q^(r)(n,k)`: partitions of `[n+r]` into `k+r` blocks with `1..=r`
/// apart, weighted by `q^w`.
///
/// For `r > 0` this is `Σ_i q^(ir + C(r,2)) (r_q)^(n-i) C(n,i) S_q(i,k)`
/// with an ordinary power and an ordinary binomial. The `q^C(r,2)` factor is
/// the weight of `1..=r` themselves sitting in the first `r` blocks.
pub fn stirling2_q(n: usize, k: usize, r: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let v = STIRLING2.get_or_insert_with((n, k, r), || {
        if r == 0 {
            if n == 0 || k == 0 {
                return if n == k { QPoly::one() } else { QPoly::zero() };
            }
            let a = stirling2_q(n - 1, k - 1, 0).shift(k - 1);
            let b = &q_integer(k) * &stirling2_q(n - 1, k, 0);
            return &a + &b;
        }
        let rq = q_integer(r);
        (k..=n)
            .map(|i| {
                let base = stirling2_q(i, k, 0);
                base.shift(i * r + choose2(r))
                    .scale(&binomial(n as i64, i as i64))
                    * rq.pow((n - i) as u32)
            })
            .sum()
    });
    (*v).clone()
}

/// `B_q^(r)(n) = Σ_k S_q^(r)(n,k)`.
pub fn bell_q(n: usize, r: usize) -> QPoly {
    (0..=n).map(|k| stirling2_q(n, k, r)).sum()
}

/// `L_q(n,k)` from the product formula
/// `q^(k(k-1)) (n_q!/k_q!) C(n-1,k-1)_q`, for `1 <= k <= n`.
pub fn lah_q_closed(n: usize, k: usize) -> QPoly {
    if n == 0 || k == 0 {
        return if n == k { QPoly::one() } else { QPoly::zero() };
    }
    if k > n {
        return QPoly::zero();
    }
    (&q_rising(k + 1, n - k) * &q_binomial(n as i64 - 1, k as i64 - 1)).shift(k * (k - 1))
}

/// `L_q(n,k)` from `L_q(n,k) = q^(n+k-2) L_q(n-1,k-1) + [n+k-1]_q L_q(n-1,k)`.
pub fn lah_q_recurrence(n: usize, k: usize) -> QPoly {
    if n == 0 || k == 0 {
        return if n == k { QPoly::one() } else { QPoly::zero() };
    }
    if k > n {
        return QPoly::zero();
    }
    let v = LAH_REC.get_or_insert_with((n, k, 0), || {
        let a = lah_q_recurrence(n - 1, k - 1).shift(n + k - 2);
        let b = &q_integer(n + k - 1) * &lah_q_recurrence(n - 1, k);
        &a + &b
    });
    (*v).clone()
}

/// `L_q^(r)(n,k)`: Lah distributions of `[n+r]` into `k+r` blocks with
/// `1..=r` apart, weighted by `q^inv_ρ`.
///
/// The base table is the product formula, checked against the recurrence
/// as it is filled. For `r > 0`:
/// `Σ_i q^(r(2i+r-1)) [2r]_q^(rising n-i) C(n,i)_q L_q(i,k)`.
pub fn lah_q(n: usize, k: usize, r: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let v = LAH.get_or_insert_with((n, k, r), || {
        if r == 0 {
            let closed = lah_q_closed(n, k);
            assert_eq!(
                closed,
                lah_q_recurrence(n, k),
                "q-Lah product formula and recurrence disagree at ({n},{k})"
            );
            return closed;
        }
        (k..=n)
            .map(|i| {
                let t = &q_rising(2 * r, n - i) * &q_binomial(n as i64, i as i64);
                (&t * &lah_q(i, k, 0)).shift(r * (2 * i + r - 1))
            })
            .sum()
    });
    (*v).clone()
}

/// `L_q^(r)(n) = Σ_{k=0}^{n} L_q^(r)(n,k)`.
pub fn lah_total_q(n: usize, r: usize) -> QPoly {
    (0..=n).map(|k| lah_q(n, k, r)).sum()
}

/// `c_q^(r)(n,k)`: permutations of `[n+r]` with `k+r` cycles and `1..=r`
/// apart, weighted by `q^inv_c`.
///
/// Base: `c_q(n,k) = c_q(n-1,k-1) + [n-1]_q c_q(n-1,k)`. For `r > 0`:
/// `Σ_i [r]_q^(rising n-i) C(n,i)_q c_q(i,k)`.
pub fn stirling1_q(n: usize, k: usize, r: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let v = STIRLING1.get_or_insert_with((n, k, r), || {
        if r == 0 {
            if n == 0 || k == 0 {
                return if n == k { QPoly::one() } else { QPoly::zero() };
            }
            let b = &q_integer(n - 1) * &stirling1_q(n - 1, k, 0);
            return &stirling1_q(n - 1, k - 1, 0) + &b;
        }
        (k..=n)
            .map(|i| {
                let t = &q_rising(r, n - i) * &q_binomial(n as i64, i as i64);
                &t * &stirling1_q(i, k, 0)
            })
            .sum()
    });
    (*v).clone()
}

/// `Σ_k c_q^(r)(n,k)`.
pub fn stirling1_total_q(n: usize, r: usize) -> QPoly {
    (0..=n).map(|k| stirling1_q(n, k, r)).sum()
}

/// Which closed form to evaluate at `q = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `S_q(n,k)` at `q = -1`.
    Plain,
    /// `S_q^(1)(n,k)` at `q = -1`.
    R1,
}

fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed forms for the q-Stirling numbers of the second kind at `q = -1`:
///
/// - plain: `(-1)^C(k,2) C(n - ⌊k/2⌋ - 1, n - k)`
/// - r1: `(-1)^C(k+1,2) C(n - ⌈k/2⌉, ⌊k/2⌋)`
///
/// Zero outside `0 <= k <= n`.
pub fn stirling_neg1(variant: Variant, n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    match variant {
        Variant::Plain => sign(choose2(k as usize)) * binomial(n - k / 2 - 1, n - k),
        Variant::R1 => sign(choose2(k as usize + 1)) * binomial(n - (k + 1) / 2, k / 2),
    }
}

/// `S(n,k; α,β,r)` from
/// `S(n,k) = S(n-1,k-1) + (α(n-1) + βk + r) S(n-1,k)`, `S(0,0) = 1`.
pub fn hsu_shiue(n: usize, k: usize) -> MPoly {
    if k > n {
        return MPoly::zero();
    }
    if n == 0 {
        return MPoly::one();
    }
    let v = HSU_SHIUE.get_or_insert_with((n, k), || {
        let factor = &(&MPoly::var(Var::Alpha).scale(&BigInt::from(n - 1))
            + &MPoly::var(Var::Beta).scale(&BigInt::from(k)))
            + &MPoly::var(Var::R);
        let mut out = &factor * &hsu_shiue(n - 1, k);
        if k > 0 {
            out += &hsu_shiue(n - 1, k - 1);
        }
        out
    });
    (*v).clone()
}

/// The generalized Bell polynomial `Σ_k S(n,k; α,β,r) x^k`.
pub fn gen_bell(n: usize) -> MPoly {
    (0..=n)
        .map(|k| hsu_shiue(n, k).shift(Monomial([0, 0, 0, k as u32])))
        .sum()
}
