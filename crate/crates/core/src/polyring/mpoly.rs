//! Sparse polynomials in the four variables `(α, β, r, x)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The fixed variable order of every [`MPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Alpha = 0,
    Beta = 1,
    R = 2,
    X = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Alpha, Var::Beta, Var::R, Var::X];

    fn symbol(self) -> &'static str {
        match self {
            Var::Alpha => "α",
            Var::Beta => "β",
            Var::R => "r",
            Var::X => "x",
        }
    }
}

/// Exponent vector `[e_α, e_β, e_r, e_x]`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients in `(α, β, r, x)`.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, Monomial::default())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// `α^a β^b r^c x^d` with unit coefficient.
    pub fn from_monomial(a: u32, b: u32, c: u32, d: u32) -> Self {
        MPoly::term(1, Monomial([a, b, c, d]))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v as usize] = 1;
        MPoly::term(1, Monomial(e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded-lexicographic, ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `α^a β^b r^c x^d`.
    pub fn shift(&self, m: Monomial) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(MPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes exact rational values for all four variables.
    pub fn eval_rational(&self, point: &[BigRational; 4]) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = BigRational::from_integer(c.clone());
                for (base, &e) in point.iter().zip(&m.0) {
                    v *= Pow::pow(base, e);
                }
                v
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Substitutes integer values for the variables given as `Some`,
    /// leaving the others symbolic.
    pub fn specialize(&self, values: &[Option<BigInt>; 4]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.0;
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    coeff *= Pow::pow(v, exps[i]);
                    exps[i] = 0;
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        out
    }

    /// The constant term after substituting all of `α, β, r, x`.
    pub fn eval_int(&self, values: [i64; 4]) -> BigInt {
        let vals = values.map(|v| Some(BigInt::from(v)));
        self.specialize(&vals).coeff(&Monomial::default())
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest terms first for readability.
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = m.degree() == 0;
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
            }
            for v in Var::ALL {
                match m.0[v as usize] {
                    0 => {}
                    1 => write!(f, "{}", v.symbol())?,
                    e => write!(f, "{}^{e}", v.symbol())?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exps: [u32; 4],
    coeff: String,
}

/// Serialized as `[{exps: [e_α, e_β, e_r, e_x], coeff: "<decimal>"}, ...]`
/// in canonical term order.
impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(m, c)| TermRecord {
            exps: m.0,
            coeff: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut out = MPoly::zero();
        for rec in records {
            let c: BigInt = rec.coeff.parse().map_err(D::Error::custom)?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in term list"));
            }
            let m = Monomial(rec.exps);
            if out.terms.insert(m, c).is_some() {
                return Err(D::Error::custom("duplicate monomial in term list"));
            }
        }
        Ok(out)
    }
}
