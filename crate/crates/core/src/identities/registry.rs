//! The named identities. Each entry evaluates every side of its identity
//! at one grid cell; a cell passes when all sides are exactly equal.

use num_traits::{One, Pow, Zero};

use super::oracle::{first_stat_mismatch, oracle_ext_lah, oracle_partitions, oracle_perms};
use super::{indicator_pair, Cell, Ctx, Grid, Param, Span};
use crate::error::{Error, Result};
use crate::numbers::{
    bell_q, gen_bell, hsu_shiue, lah_q, lah_q_closed, lah_q_recurrence, lah_total_q,
    stirling1_q, stirling1_total_q, stirling2_q, stirling_neg1, Value, Variant,
};
use crate::polyring::{
    binomial, q_binomial, q_integer, q_rising, rising_int, shifted_factorial_poly, BigInt,
    Increment, MPoly, Monomial, QPoly, ShiftBase, Var,
};

/// A registered identity.
pub struct Identity {
    pub name: &'static str,
    /// The identity in plain notation.
    pub statement: &'static str,
    /// Parameters the identity ranges over.
    pub params: &'static [Param],
    /// Smallest `k` checked by default.
    k_from: usize,
    /// Largest useful `k` at a cell.
    k_to: fn(&Cell) -> usize,
    pub default_grid: fn() -> Grid,
    pub note: Option<&'static str>,
    pub(crate) eval: fn(&Cell, &Ctx) -> Result<Vec<Value>>,
    pub(crate) witness: Option<fn(&Cell) -> Option<String>>,
}

impl Identity {
    /// Grid cells in canonical (parameter) order.
    pub fn cells(&self, grid: &Grid) -> Vec<Cell> {
        let span = |p: Param| -> Vec<usize> {
            if !self.params.contains(&p) {
                return vec![0];
            }
            grid.get(p).map_or(vec![0], |s| s.iter().collect())
        };
        let mut out = Vec::new();
        for m in span(Param::M) {
            for n in span(Param::N) {
                if grid.max_total.is_some_and(|t| m + n > t) {
                    continue;
                }
                for r in span(Param::R) {
                    let base = Cell { m, n, k: 0, r };
                    if !self.params.contains(&Param::K) {
                        out.push(base);
                        continue;
                    }
                    let hi = (self.k_to)(&base);
                    let ks = grid.k.unwrap_or(Span::new(self.k_from, hi));
                    for k in ks.lo.max(self.k_from)..=ks.hi.min(hi) {
                        out.push(Cell { k, ..base });
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn int(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn at1(p: &QPoly) -> BigInt {
    p.coeff_sum()
}

fn at_minus1(p: &QPoly) -> BigInt {
    p.eval(&BigInt::from(-1))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn bin(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

fn grid(m: Option<(usize, usize)>, n: Option<(usize, usize)>, r: Option<(usize, usize)>, total: Option<usize>) -> Grid {
    let s = |x: Option<(usize, usize)>| x.map(|(a, b)| Span::new(a, b));
    Grid {
        m: s(m),
        n: s(n),
        k: None,
        r: s(r),
        max_total: total,
    }
}

// ---- q = 1 identities for Bell and r-Stirling numbers ----

fn spivey(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n) = (c.m, c.n);
    let lhs = at1(&bell_q(m + n, 0));
    let mut rhs = BigInt::zero();
    for i in 0..=n {
        for j in 0..=m {
            rhs += Pow::pow(int(j), (n - i) as u32)
                * bin(n as i64, i as i64)
                * at1(&stirling2_q(m, j, 0))
                * at1(&bell_q(i, 0));
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

fn mezo1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, r) = (c.m, c.n, c.r);
    let lhs = at1(&bell_q(m + n, r));
    let mut rhs = BigInt::zero();
    for i in 0..=n {
        for j in 0..=m {
            rhs += Pow::pow(int(j + r), (n - i) as u32)
                * bin(n as i64, i as i64)
                * at1(&stirling2_q(m, j, r))
                * at1(&bell_q(i, 0));
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

fn mezo2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, r) = (c.m, c.n, c.r);
    let r1 = int(r + 1);
    let lhs = rising_int(&r1, m + n);
    let mut rhs = BigInt::zero();
    for i in 0..=n {
        for j in 0..=m {
            rhs += rising_int(&int(m), n - i)
                * bin(n as i64, i as i64)
                * at1(&stirling1_q(m, j, r))
                * rising_int(&r1, i);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

// ---- q-Stirling numbers of the second kind ----

fn pe1_sum(c: &Cell, extra: usize) -> QPoly {
    let (n, k, r) = (c.n, c.k, c.r);
    let rq = q_integer(r);
    (0..=n)
        .map(|i| {
            (&rq.pow((n - i) as u32) * &stirling2_q(i, k, 0))
                .scale(&bin(n as i64, i as i64))
                .shift(i * r + extra)
        })
        .sum()
}

fn pe1(c: &Cell, ctx: &Ctx) -> Result<Vec<Value>> {
    let lhs = oracle_partitions(c.n, c.k, c.r, ctx.cell_cap)?;
    Ok(vec![lhs.into(), pe1_sum(c, 0).into()])
}

fn pe1_corr(c: &Cell, ctx: &Ctx) -> Result<Vec<Value>> {
    let lhs = oracle_partitions(c.n, c.k, c.r, ctx.cell_cap)?;
    Ok(vec![lhs.into(), pe1_sum(c, choose2(c.r)).into()])
}

/// `q^(i(j+r)) [j+r]_q^(n-i) C(n,i) S_q^(r)(m,j)`, the part shared by the
/// two recurrences below.
fn p1_factor(m: usize, n: usize, r: usize, i: usize, j: usize) -> QPoly {
    (&q_integer(j + r).pow((n - i) as u32) * &stirling2_q(m, j, r))
        .scale(&bin(n as i64, i as i64))
        .shift(i * (j + r))
}

fn p1e1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let lhs = stirling2_q(m + n, k, r);
    let mut rhs = QPoly::zero();
    for i in 0..=n {
        for j in 0..=m.min(k) {
            rhs += &p1_factor(m, n, r, i, j) * &stirling2_q(i, k - j, 0);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

fn p1e2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, r) = (c.m, c.n, c.r);
    let lhs = bell_q(m + n, r);
    let mut rhs = QPoly::zero();
    for i in 0..=n {
        for j in 0..=m {
            rhs += &p1_factor(m, n, r, i, j) * &bell_q(i, 0);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

// ---- integer identities at q = -1 ----

fn floor2(j: i64) -> i64 {
    j.div_euclid(2)
}

fn ceil2(j: i64) -> i64 {
    (j + 1).div_euclid(2)
}

fn bin_sum(c: &Cell, term: impl Fn(i64, i64, i64, i64, i64) -> BigInt) -> BigInt {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        for j in 0..=m {
            acc += term(m, n, k, i, j);
        }
    }
    acc
}

fn bin1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let lhs = bin(m + n - k - 1, k - 1);
    let rhs = bin_sum(c, |m, n, k, i, j| {
        let a = indicator_pair(i, j, n).a;
        if a == 0 {
            return BigInt::zero();
        }
        int(a)
            * sign(((i + 1) * j) as usize)
            * bin(n, i)
            * bin(m - floor2(j) - 1, m - j)
            * bin(i - k + ceil2(j) - 1, i - 2 * k + j)
    });
    Ok(vec![lhs.into(), rhs.into()])
}

fn bin2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let lhs = bin(m + n - k, k - 1);
    let rhs = bin_sum(c, |m, n, k, i, j| {
        let a = indicator_pair(i, j, n).a;
        if a == 0 {
            return BigInt::zero();
        }
        int(a)
            * sign((i * j) as usize)
            * bin(n, i)
            * bin(m - floor2(j) - 1, m - j)
            * bin(i - k + floor2(j), i - 2 * k + j + 1)
    });
    Ok(vec![lhs.into(), rhs.into()])
}

fn bin3(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let lhs = bin(m + n - k, k);
    let rhs = bin_sum(c, |m, n, k, i, j| {
        let b = indicator_pair(i, j, n).b;
        if b == 0 {
            return BigInt::zero();
        }
        int(b)
            * sign((i * (j + 1)) as usize)
            * bin(n, i)
            * bin(m - ceil2(j), m - j)
            * bin(i - k + ceil2(j) - 1, i - 2 * k + j)
    });
    Ok(vec![lhs.into(), rhs.into()])
}

fn bin4(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let lhs = bin(m + n - k, k - 1);
    let rhs = bin_sum(c, |m, n, k, i, j| {
        let b = indicator_pair(i, j, n).b;
        if b == 0 {
            return BigInt::zero();
        }
        int(b)
            * sign(((i + 1) * (j + 1)) as usize)
            * bin(n, i)
            * bin(m - ceil2(j), m - j)
            * bin(i - k + floor2(j), i - 2 * k + j + 1)
    });
    Ok(vec![lhs.into(), rhs.into()])
}

fn s_m1(n: usize, k: i64, r: usize) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    at_minus1(&stirling2_q(n, k as usize, r))
}

fn bin5(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m, c.n, c.k as i64);
    let lhs = s_m1(m + n, k, 0);
    let rhs = bin_sum(c, |_, n_, _, i, j| {
        let a = indicator_pair(i, j, n_).a;
        if a == 0 {
            return BigInt::zero();
        }
        int(a)
            * sign((i * j) as usize)
            * bin(n_, i)
            * s_m1(m, j, 0)
            * s_m1(i as usize, k - j, 0)
    });
    let _ = n;
    Ok(vec![lhs.into(), rhs.into()])
}

fn bin6(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        s_m1(c.n, c.k as i64, 0).into(),
        stirling_neg1(Variant::Plain, c.n, c.k).into(),
    ])
}

fn bin7_sum(c: &Cell, with_binomial: bool) -> BigInt {
    let (m, k) = (c.m, c.k as i64);
    bin_sum(c, |_, n, _, i, j| {
        let b = indicator_pair(i, j, n).b;
        if b == 0 {
            return BigInt::zero();
        }
        let choose = if with_binomial { bin(n, i) } else { BigInt::one() };
        int(b) * sign((i * (j + 1)) as usize) * choose * s_m1(m, j, 1) * s_m1(i as usize, k - j, 0)
    })
}

fn bin7(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let lhs = s_m1(c.m + c.n, c.k as i64, 1);
    Ok(vec![lhs.into(), bin7_sum(c, false).into()])
}

fn bin7_corr(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let lhs = s_m1(c.m + c.n, c.k as i64, 1);
    Ok(vec![lhs.into(), bin7_sum(c, true).into()])
}

fn bin8(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (n, k) = (c.n as i64, c.k as i64);
    let lhs = s_m1(c.n, k, 1);
    let rhs: BigInt = (k..=n)
        .map(|i| {
            sign((i as usize) + choose2(k as usize))
                * bin(n, i)
                * bin(i - floor2(k) - 1, i - k)
        })
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn bin9(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        s_m1(c.n, c.k as i64, 1).into(),
        stirling_neg1(Variant::R1, c.n, c.k).into(),
    ])
}

// ---- q-Lah numbers ----

fn lah_cf(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        lah_q_closed(c.n, c.k).into(),
        lah_q_recurrence(c.n, c.k).into(),
    ])
}

fn lah_r(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (n, k, r) = (c.n, c.k, c.r);
    let lhs = at1(&lah_q(n, k, r));
    let rhs: BigInt = (0..=n)
        .map(|i| rising_int(&int(2 * r), i) * bin(n as i64, i as i64) * at1(&lah_q(n - i, k, 0)))
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

/// `q^(i(j+m+2r)) [j+m+2r]_q^(rising n-i) C(n,i)_q L_q^(r)(m,j)`.
fn p2_factor(m: usize, n: usize, r: usize, i: usize, j: usize) -> QPoly {
    let base = j + m + 2 * r;
    let t = &q_rising(base, n - i) * &q_binomial(n as i64, i as i64);
    (&t * &lah_q(m, j, r)).shift(i * base)
}

fn p2e1_sum(c: &Cell, j_to: usize) -> QPoly {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let mut acc = QPoly::zero();
    for i in 0..=n {
        for j in 0..=j_to.min(k) {
            acc += &p2_factor(m, n, r, i, j) * &lah_q(i, k - j, 0);
        }
    }
    acc
}

fn p2e1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        lah_q(c.m + c.n, c.k, c.r).into(),
        p2e1_sum(c, c.k).into(),
        p2e1_sum(c, c.m).into(),
    ])
}

fn p2e2_sum(c: &Cell, j_to: usize) -> QPoly {
    let (m, n, r) = (c.m, c.n, c.r);
    let mut acc = QPoly::zero();
    for i in 0..=n {
        for j in 0..=j_to {
            acc += &p2_factor(m, n, r, i, j) * &lah_total_q(i, 0);
        }
    }
    acc
}

fn p2e2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        lah_total_q(c.m + c.n, c.r).into(),
        p2e2_sum(c, c.m).into(),
        p2e2_sum(c, c.m + c.n).into(),
    ])
}

fn qbin(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k) = (c.m as i64, c.n as i64, c.k as i64);
    let lhs = &(&q_binomial(m + n, k) * &q_binomial(m + n + 1, n))
        - &(&q_binomial(m, k) * &q_binomial(k + m + n + 1, n));
    let mut rhs = QPoly::zero();
    for i in 1..=n {
        for j in 1..=k {
            let prod = &(&q_binomial(m, j - 1) * &q_binomial(k + 1, j))
                * &(&q_binomial(i - 1, k - j) * &q_binomial(m + n + j - i, n - i));
            if prod.is_zero() {
                continue;
            }
            let e = i * (j + m + 1) - 2 * j * (k - j + 1);
            if e < 0 {
                return Err(Error::InvalidArgument(format!(
                    "negative power of q ({e}) on a nonzero term at i={i}, j={j}"
                )));
            }
            rhs += prod.shift(e as usize);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

// ---- q-Stirling numbers of the first kind ----

fn cq_rec(c: &Cell, ctx: &Ctx) -> Result<Vec<Value>> {
    let (n, k) = (c.n, c.k);
    let lhs = oracle_perms(n, k, 0, ctx.cell_cap)?;
    let mut rhs = &q_integer(n - 1) * &stirling1_q(n - 1, k, 0);
    if k > 0 {
        rhs += &stirling1_q(n - 1, k - 1, 0);
    }
    Ok(vec![lhs.into(), rhs.into()])
}

fn t3e1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let lhs = stirling1_q(m + n, k, r);
    let mut rhs = QPoly::zero();
    for i in 0..=n {
        let t = &q_rising(m + r, n - i) * &q_binomial(n as i64, i as i64);
        for j in 0..=m.min(k) {
            rhs += &(&t * &stirling1_q(m, j, r)) * &stirling1_q(i, k - j, 0);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

/// `Π_{ℓ=from}^{to-1} (1 + ℓ_q)`.
fn one_plus_product(from: usize, to: usize) -> QPoly {
    (from..to).map(|l| &QPoly::one() + &q_integer(l)).product()
}

fn t3e2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, r) = (c.m, c.n, c.r);
    let lhs = one_plus_product(m + r, m + r + n);
    let rhs: QPoly = (0..=n)
        .map(|i| {
            &(&q_rising(m + r, n - i) * &q_binomial(n as i64, i as i64)) * &one_plus_product(0, i)
        })
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn cq_sum(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        stirling1_total_q(c.n, c.r).into(),
        one_plus_product(c.r, c.n + c.r).into(),
    ])
}

fn cq_sym(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (n, k) = (c.n, c.k);
    let size = n - k;
    let items: Vec<QPoly> = (1..n).map(q_integer).collect();
    let mut e = QPoly::zero();
    for mask in 0u32..(1 << items.len()) {
        if mask.count_ones() as usize != size {
            continue;
        }
        e += items
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, p)| p.clone())
            .product::<QPoly>();
    }
    if n == 0 {
        e = QPoly::one();
    }
    Ok(vec![stirling1_q(n, k, 0).into(), e.into()])
}

// ---- shifting the restricted elements ----

fn t4e1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let lhs = stirling2_q(n, k, m + r);
    let mq = q_integer(m);
    let rhs: QPoly = (0..=n)
        .map(|i| {
            (&mq.pow((n - i) as u32) * &stirling2_q(i, k, r))
                .scale(&bin(n as i64, i as i64))
                .shift(m * (i + r) + choose2(m))
        })
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn t4e2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let lhs = lah_q(n, k, m + r);
    let rhs: QPoly = (0..=n)
        .map(|i| {
            let t = &q_rising(2 * m, n - i) * &q_binomial(n as i64, i as i64);
            (&t * &lah_q(i, k, r)).shift(m * (2 * i + 2 * r + m).saturating_sub(1))
        })
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn t4e3(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, k, r) = (c.m, c.n, c.k, c.r);
    let lhs = stirling1_q(n, k, m + r);
    let rhs: QPoly = (0..=n)
        .map(|i| {
            let t = &q_rising(m, n - i) * &q_binomial(n as i64, i as i64);
            (&t * &stirling1_q(i, k, r)).shift(r * (n - i))
        })
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn t4c1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n, r) = (c.m, c.n, c.r);
    let lhs = one_plus_product(r, m + n + r);
    let mut rhs = QPoly::zero();
    for i in 0..=n {
        let t = (&(&q_rising(m, n - i) * &q_binomial(n as i64, i as i64))
            * &one_plus_product(r, i + r))
            .shift(r * (n - i));
        for j in 0..=m {
            rhs += &t * &stirling1_q(m, j, r);
        }
    }
    Ok(vec![lhs.into(), rhs.into()])
}

// ---- generalized Stirling numbers ----

fn genrec(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let n = c.n;
    let lhs = shifted_factorial_poly(n, ShiftBase::X, Increment::NegAlpha);
    let rhs: MPoly = (0..=n)
        .map(|k| &hsu_shiue(n, k) * &shifted_factorial_poly(k, ShiftBase::XMinusR, Increment::Beta))
        .sum();
    Ok(vec![lhs.into(), rhs.into()])
}

fn genl1(c: &Cell, ctx: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        hsu_shiue(c.n, c.k).into(),
        oracle_ext_lah(c.n, c.k, ctx.cell_cap)?.into(),
    ])
}

fn genl1_witness(c: &Cell) -> Option<String> {
    first_stat_mismatch(c.n, c.k)
}

fn genl1_rec(c: &Cell, ctx: &Ctx) -> Result<Vec<Value>> {
    let (n, k) = (c.n, c.k);
    let lhs = oracle_ext_lah(n, k, ctx.cell_cap)?;
    let factor = &(&MPoly::var(Var::Alpha).scale(&int(n - 1))
        + &MPoly::var(Var::Beta).scale(&int(k)))
        + &MPoly::var(Var::R);
    let mut rhs = &factor * &oracle_ext_lah(n - 1, k, ctx.cell_cap)?;
    if k > 0 {
        rhs += &oracle_ext_lah(n - 1, k - 1, ctx.cell_cap)?;
    }
    Ok(vec![lhs.into(), rhs.into()])
}

/// `Π_{ℓ=0}^{n-i-1} ((m+ℓ)α + jβ)`.
fn t5_product(m: usize, n: usize, i: usize, j: usize) -> MPoly {
    (0..n - i).fold(MPoly::one(), |acc, l| {
        let f = &MPoly::var(Var::Alpha).scale(&int(m + l)) + &MPoly::var(Var::Beta).scale(&int(j));
        &acc * &f
    })
}

fn t5e1_sum(m: usize, n: usize, k: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for i in 0..=n {
        for j in 0..=m.min(k) {
            let t = &hsu_shiue(m, j) * &hsu_shiue(i, k - j);
            if t.is_zero() {
                continue;
            }
            acc += &(&t * &t5_product(m, n, i, j)).scale(&bin(n as i64, i as i64));
        }
    }
    acc
}

fn t5e1(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    Ok(vec![
        hsu_shiue(c.m + c.n, c.k).into(),
        t5e1_sum(c.m, c.n, c.k).into(),
    ])
}

fn x_pow(j: usize) -> Monomial {
    Monomial([0, 0, 0, j as u32])
}

fn t5e2(c: &Cell, _: &Ctx) -> Result<Vec<Value>> {
    let (m, n) = (c.m, c.n);
    let mut direct = MPoly::zero();
    for i in 0..=n {
        for j in 0..=m {
            let t = &hsu_shiue(m, j).shift(x_pow(j)) * &gen_bell(i);
            direct += &(&t * &t5_product(m, n, i, j)).scale(&bin(n as i64, i as i64));
        }
    }
    let summed: MPoly = (0..=m + n).map(|k| t5e1_sum(m, n, k).shift(x_pow(k))).sum();
    Ok(vec![gen_bell(m + n).into(), direct.into(), summed.into()])
}

// ---- the table ----

fn k_to_total(c: &Cell) -> usize {
    c.m + c.n
}

fn k_to_n(c: &Cell) -> usize {
    c.n
}

fn k_to_qbin(_: &Cell) -> usize {
    6
}

use Param::{K, M, N, R};

static REGISTRY: [Identity; 36] = [
    Identity {
        name: "I-SPIVEY",
        statement: "B(m+n) = Σ_i Σ_j j^(n-i) C(n,i) S(m,j) B(i)",
        params: &[M, N],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 10)), Some((0, 10)), None, Some(10)),
        note: None,
        eval: spivey,
        witness: None,
    },
    Identity {
        name: "I-MEZO-1",
        statement: "B^(r)(m+n) = Σ_i Σ_j (j+r)^(n-i) C(n,i) S^(r)(m,j) B(i)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 10)), Some((0, 10)), Some((0, 3)), Some(10)),
        note: None,
        eval: mezo1,
        witness: None,
    },
    Identity {
        name: "I-MEZO-2",
        statement: "(r+1)^(rising m+n) = Σ_i Σ_j m^(rising n-i) C(n,i) c^(r)(m,j) (r+1)^(rising i)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 10)), Some((0, 10)), Some((0, 3)), Some(10)),
        note: None,
        eval: mezo2,
        witness: None,
    },
    Identity {
        name: "I-PE1",
        statement: "S_q^(r)(n,k) = Σ_i q^(ir) (r_q)^(n-i) C(n,i) S_q(i,k)",
        params: &[N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 8)), Some((0, 2)), None),
        note: Some("left side is the enumeration oracle; this form omits the weight q^C(r,2) of 1..r in the first r blocks, see I-PE1-CORR"),
        eval: pe1,
        witness: None,
    },
    Identity {
        name: "I-PE1-CORR",
        statement: "S_q^(r)(n,k) = Σ_i q^(ir + C(r,2)) (r_q)^(n-i) C(n,i) S_q(i,k)",
        params: &[N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 8)), Some((0, 2)), None),
        note: Some("left side is the enumeration oracle"),
        eval: pe1_corr,
        witness: None,
    },
    Identity {
        name: "I-P1E1",
        statement: "S_q^(r)(m+n,k) = Σ_i Σ_j q^(i(j+r)) [j+r]_q^(n-i) C(n,i) S_q^(r)(m,j) S_q(i,k-j)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 8)), Some((0, 8)), Some((0, 2)), Some(8)),
        note: None,
        eval: p1e1,
        witness: None,
    },
    Identity {
        name: "I-P1E2",
        statement: "B_q^(r)(m+n) = Σ_i Σ_j q^(i(j+r)) [j+r]_q^(n-i) C(n,i) S_q^(r)(m,j) B_q(i)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 8)), Some((0, 8)), Some((0, 2)), Some(8)),
        note: None,
        eval: p1e2,
        witness: None,
    },
    Identity {
        name: "I-BIN-1",
        statement: "C(m+n-k-1,k-1) = Σ α_ij (-1)^((i+1)j) C(n,i) C(m-⌊j/2⌋-1,m-j) C(i-k+⌈j/2⌉-1,i-2k+j)",
        params: &[M, N, K],
        k_from: 1,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, None),
        note: None,
        eval: bin1,
        witness: None,
    },
    Identity {
        name: "I-BIN-2",
        statement: "C(m+n-k,k-1) = Σ α_ij (-1)^(ij) C(n,i) C(m-⌊j/2⌋-1,m-j) C(i-k+⌊j/2⌋,i-2k+j+1)",
        params: &[M, N, K],
        k_from: 1,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, None),
        note: None,
        eval: bin2,
        witness: None,
    },
    Identity {
        name: "I-BIN-3",
        statement: "C(m+n-k,k) = Σ β_ij (-1)^(i(j+1)) C(n,i) C(m-⌈j/2⌉,m-j) C(i-k+⌈j/2⌉-1,i-2k+j)",
        params: &[M, N, K],
        k_from: 1,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, None),
        note: None,
        eval: bin3,
        witness: None,
    },
    Identity {
        name: "I-BIN-4",
        statement: "C(m+n-k,k-1) = Σ β_ij (-1)^((i+1)(j+1)) C(n,i) C(m-⌈j/2⌉,m-j) C(i-k+⌊j/2⌋,i-2k+j+1)",
        params: &[M, N, K],
        k_from: 1,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, None),
        note: None,
        eval: bin4,
        witness: None,
    },
    Identity {
        name: "I-BIN-5",
        statement: "S_-1(m+n,k) = Σ_i Σ_j α_ij (-1)^(ij) C(n,i) S_-1(m,j) S_-1(i,k-j)",
        params: &[M, N, K],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, Some(10)),
        note: None,
        eval: bin5,
        witness: None,
    },
    Identity {
        name: "I-BIN-6",
        statement: "S_-1(n,k) = (-1)^C(k,2) C(n-⌊k/2⌋-1, n-k)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 20)), None, None),
        note: None,
        eval: bin6,
        witness: None,
    },
    Identity {
        name: "I-BIN-7",
        statement: "S_-1^(1)(m+n,k) = Σ_i Σ_j β_ij (-1)^(i(j+1)) S_-1^(1)(m,j) S_-1(i,k-j)",
        params: &[M, N, K],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, Some(10)),
        note: Some("this form lacks the factor C(n,i) that the q = -1, r = 1 case of I-P1E1 carries, see I-BIN-7-CORR"),
        eval: bin7,
        witness: None,
    },
    Identity {
        name: "I-BIN-7-CORR",
        statement: "S_-1^(1)(m+n,k) = Σ_i Σ_j β_ij (-1)^(i(j+1)) C(n,i) S_-1^(1)(m,j) S_-1(i,k-j)",
        params: &[M, N, K],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((1, 10)), Some((1, 10)), None, Some(10)),
        note: None,
        eval: bin7_corr,
        witness: None,
    },
    Identity {
        name: "I-BIN-8",
        statement: "S_-1^(1)(n,k) = Σ_{i=k}^{n} (-1)^(i+C(k,2)) C(n,i) C(i-⌊k/2⌋-1, i-k)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 20)), None, None),
        note: None,
        eval: bin8,
        witness: None,
    },
    Identity {
        name: "I-BIN-9",
        statement: "S_-1^(1)(n,k) = (-1)^C(k+1,2) C(n-⌈k/2⌉, ⌊k/2⌋)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 20)), None, None),
        note: None,
        eval: bin9,
        witness: None,
    },
    Identity {
        name: "I-LAH-CF",
        statement: "q^(k(k-1)) (n_q!/k_q!) C(n-1,k-1)_q = L_q(n,k) by its recurrence",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 20)), None, None),
        note: None,
        eval: lah_cf,
        witness: None,
    },
    Identity {
        name: "I-LAH-R",
        statement: "L^(r)(n,k) = Σ_i (2r)^(rising i) C(n,i) L(n-i,k)",
        params: &[N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 10)), Some((0, 3)), None),
        note: None,
        eval: lah_r,
        witness: None,
    },
    Identity {
        name: "I-P2E1",
        statement: "L_q^(r)(m+n,k) = Σ_i Σ_j q^(i(j+m+2r)) [j+m+2r]_q^(rising n-i) C(n,i)_q L_q^(r)(m,j) L_q(i,k-j)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: Some("inner sum run both to j = k and to j = m; all three sides must agree"),
        eval: p2e1,
        witness: None,
    },
    Identity {
        name: "I-P2E2",
        statement: "L_q^(r)(m+n) = Σ_i Σ_j q^(i(j+m+2r)) [j+m+2r]_q^(rising n-i) C(n,i)_q L_q^(r)(m,j) L_q(i)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: Some("the inner bound is not fixed by the statement: read as j = 0..m, checked against j = 0..m+n; L_q(i) = Σ_k L_q(i,k)"),
        eval: p2e2,
        witness: None,
    },
    Identity {
        name: "I-QBIN",
        statement: "C(m+n,k)_q C(m+n+1,n)_q - C(m,k)_q C(k+m+n+1,n)_q = Σ_{i,j>=1} q^(i(j+m+1)-2j(k-j+1)) C(m,j-1)_q C(k+1,j)_q C(i-1,k-j)_q C(m+n+j-i,n-i)_q",
        params: &[M, N, K],
        k_from: 0,
        k_to: k_to_qbin,
        default_grid: || grid(Some((0, 6)), Some((0, 6)), None, None),
        note: None,
        eval: qbin,
        witness: None,
    },
    Identity {
        name: "I-CQ-REC",
        statement: "c_q(n,k) = c_q(n-1,k-1) + [n-1]_q c_q(n-1,k)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((1, 8)), None, None),
        note: Some("left side is the enumeration oracle"),
        eval: cq_rec,
        witness: None,
    },
    Identity {
        name: "I-T3E1",
        statement: "c_q^(r)(m+n,k) = Σ_i Σ_j [m+r]_q^(rising n-i) C(n,i)_q c_q^(r)(m,j) c_q(i,k-j)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t3e1,
        witness: None,
    },
    Identity {
        name: "I-T3E2",
        statement: "Π_{l<n} (1 + [l+m+r]_q) = Σ_i [m+r]_q^(rising n-i) C(n,i)_q Π_{l<i} (1 + l_q)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t3e2,
        witness: None,
    },
    Identity {
        name: "I-CQ-SUM",
        statement: "Σ_k c_q^(r)(n,k) = Π_{l=r}^{n+r-1} (1 + l_q)",
        params: &[N, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 8)), Some((0, 3)), None),
        note: None,
        eval: cq_sum,
        witness: None,
    },
    Identity {
        name: "I-CQ-SYM",
        statement: "c_q(n,k) = e_(n-k)(1_q, 2_q, ..., (n-1)_q)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 10)), None, None),
        note: None,
        eval: cq_sym,
        witness: None,
    },
    Identity {
        name: "I-T4E1",
        statement: "S_q^(m+r)(n,k) = Σ_i q^(m(i+r) + C(m,2)) (m_q)^(n-i) C(n,i) S_q^(r)(i,k)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t4e1,
        witness: None,
    },
    Identity {
        name: "I-T4E2",
        statement: "L_q^(m+r)(n,k) = Σ_i q^(m(2i+2r+m-1)) [2m]_q^(rising n-i) C(n,i)_q L_q^(r)(i,k)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t4e2,
        witness: None,
    },
    Identity {
        name: "I-T4E3",
        statement: "c_q^(m+r)(n,k) = Σ_i q^(r(n-i)) m_q^(rising n-i) C(n,i)_q c_q^(r)(i,k)",
        params: &[M, N, K, R],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t4e3,
        witness: None,
    },
    Identity {
        name: "I-T4C1",
        statement: "Π_{l<m+n} (1 + [l+r]_q) = Σ_i Σ_j q^(r(n-i)) m_q^(rising n-i) C(n,i)_q c_q^(r)(m,j) Π_{l<i} (1 + [l+r]_q)",
        params: &[M, N, R],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), Some((0, 2)), Some(7)),
        note: None,
        eval: t4c1,
        witness: None,
    },
    Identity {
        name: "I-GENREC",
        statement: "(x)^(n,-α) = Σ_k S(n,k;α,β,r) (x-r)^(k,β)",
        params: &[N],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 8)), None, None),
        note: None,
        eval: genrec,
        witness: None,
    },
    Identity {
        name: "I-GENL1",
        statement: "S(n,k;α,β,r) = Σ_{λ in L*_(n,k)} α^nrec β^rec* r^circ",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((0, 7)), None, None),
        note: Some("right side is the enumeration oracle"),
        eval: genl1,
        witness: Some(genl1_witness),
    },
    Identity {
        name: "I-GENL1-REC",
        statement: "W(n,k) = W(n-1,k-1) + (α(n-1) + βk + r) W(n-1,k) for the weight sums W over L*_(n,k)",
        params: &[N, K],
        k_from: 0,
        k_to: k_to_n,
        default_grid: || grid(None, Some((1, 7)), None, None),
        note: Some("every term is an enumeration oracle"),
        eval: genl1_rec,
        witness: Some(genl1_witness),
    },
    Identity {
        name: "I-T5E1",
        statement: "S(m+n,k) = Σ_i Σ_j C(n,i) S(m,j) S(i,k-j) Π_{l<n-i} ((m+l)α + jβ)",
        params: &[M, N, K],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), None, Some(7)),
        note: None,
        eval: t5e1,
        witness: None,
    },
    Identity {
        name: "I-T5E2",
        statement: "B_(m+n)(x) = Σ_i Σ_j C(n,i) x^j S(m,j) B_i(x) Π_{l<n-i} ((m+l)α + jβ)",
        params: &[M, N],
        k_from: 0,
        k_to: k_to_total,
        default_grid: || grid(Some((0, 7)), Some((0, 7)), None, Some(7)),
        note: Some("checked directly with x and as the sum over k of I-T5E1 times x^k"),
        eval: t5e2,
        witness: None,
    },
];

/// Every registered identity, in a fixed order.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(name: &str, cell: Cell) -> Vec<Value> {
        let id = registry().iter().find(|i| i.name == name).unwrap();
        (id.eval)(&cell, &Ctx::default()).unwrap()
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = registry().iter().map(|i| i.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), registry().len());
    }

    #[test]
    fn spot_values() {
        let sides = eval("I-SPIVEY", Cell { m: 2, n: 1, k: 0, r: 0 });
        assert_eq!(sides, vec![Value::from(BigInt::from(5)); 2]);

        let sides = eval("I-GENREC", Cell { n: 1, ..Cell::default() });
        assert_eq!(sides[0], Value::from(MPoly::var(Var::X)));
        assert_eq!(sides[0], sides[1]);

        let sides = eval("I-GENL1", Cell { n: 2, k: 1, ..Cell::default() });
        assert_eq!(sides[0].to_string(), "α + β + 2r");
        assert_eq!(sides[0], sides[1]);
    }

    #[test]
    fn k_follows_the_cell() {
        let id = registry().iter().find(|i| i.name == "I-BIN-1").unwrap();
        let g = Grid {
            m: Some(Span::new(1, 2)),
            n: Some(Span::new(1, 1)),
            ..Grid::default()
        };
        let ks: Vec<(usize, usize)> = id.cells(&g).iter().map(|c| (c.m, c.k)).collect();
        assert_eq!(ks, [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]);
    }

    #[test]
    fn qbin_never_meets_a_negative_power() {
        for m in 0..=6 {
            for n in 0..=6 {
                for k in 0..=6 {
                    let sides = qbin(&Cell { m, n, k, r: 0 }, &Ctx::default()).unwrap();
                    assert_eq!(sides[0], sides[1], "m={m} n={n} k={k}");
                }
            }
        }
    }
}
