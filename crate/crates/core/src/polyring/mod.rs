//! Exact polynomial arithmetic and the q-combinatorial primitives.
//!
//! [`QPoly`] is the value type of every q-analogue; [`MPoly`] carries the
//! four-variable generalized Stirling numbers. Coefficients are
//! [`BigInt`], so nothing here overflows or rounds.

mod mpoly;
mod qpoly;

use std::sync::LazyLock;

pub use mpoly::{MPoly, Monomial, Var};
pub use num_bigint::BigInt;
pub use qpoly::QPoly;

use num_traits::{One, Zero};

use crate::memo::Memo;

/// `n_q = 1 + q + ... + q^(n-1)`, with `0_q = 0`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

static Q_FACTORIAL: LazyLock<Memo<usize, QPoly>> = LazyLock::new(Memo::new);
static Q_BINOMIAL: LazyLock<Memo<(usize, usize), QPoly>> = LazyLock::new(Memo::new);

/// `n_q! = 1_q 2_q ... n_q`, with `0_q! = 1`.
pub fn q_factorial(n: usize) -> QPoly {
    if n == 0 {
        return QPoly::one();
    }
    let v = Q_FACTORIAL.get_or_insert_with(n, || &q_factorial(n - 1) * &q_integer(n));
    (*v).clone()
}

/// The q-binomial coefficient, total on integer pairs.
///
/// `n_q! / (k_q! (n-k)_q!)` when `0 <= k <= n`, `1` when `k = 0` for any
/// integer `n`, and `0` otherwise. The quotient is taken by exact long
/// division; a remainder is an internal error.
pub fn q_binomial(n: i64, k: i64) -> QPoly {
    if k == 0 {
        return QPoly::one();
    }
    if k < 0 || n < 0 || k > n {
        return QPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let v = Q_BINOMIAL.get_or_insert_with((n, k), || {
        let den = &q_factorial(k) * &q_factorial(n - k);
        q_factorial(n)
            .div_exact(&den)
            .expect("q-factorial ratio must divide exactly")
    });
    (*v).clone()
}

/// `[n]_q^(rising m) = n_q (n+1)_q ... (n+m-1)_q`, with empty product 1.
pub fn q_rising(n: usize, m: usize) -> QPoly {
    (n..n + m).map(q_integer).product()
}

/// `a (a+1) ... (a+b-1)`, with `a^(rising 0) = 1`.
pub fn rising_int(a: &BigInt, b: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut t = a.clone();
    for _ in 0..b {
        acc *= &t;
        t += 1;
    }
    acc
}

/// Ordinary binomial coefficient with the same convention as
/// [`q_binomial`]: `1` when `k = 0`, `0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact integer evaluation of `p` at `q = t`.
pub fn poly_eval_int(p: &QPoly, t: &BigInt) -> BigInt {
    p.eval(t)
}

/// Which base a shifted factorial starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftBase {
    /// `x`
    X,
    /// `x - r`
    XMinusR,
}

/// The increment `θ` of a shifted factorial `(b)^(k, θ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Increment {
    /// `θ = -α`
    NegAlpha,
    /// `θ = β`
    Beta,
}

/// `(base)^(k, θ) = base (base - θ) ... (base - (k-1)θ)`, expanded in
/// `(α, β, r, x)`. Equals 1 for `k = 0`.
pub fn shifted_factorial_poly(k: usize, base: ShiftBase, increment: Increment) -> MPoly {
    let b = match base {
        ShiftBase::X => MPoly::var(Var::X),
        ShiftBase::XMinusR => &MPoly::var(Var::X) - &MPoly::var(Var::R),
    };
    let theta = match increment {
        Increment::NegAlpha => -&MPoly::var(Var::Alpha),
        Increment::Beta => MPoly::var(Var::Beta),
    };
    (0..k).fold(MPoly::one(), |acc, i| {
        let factor = &b - &theta.scale(&BigInt::from(i));
        &acc * &factor
    })
}
