//! Laurent polynomials in one variable `z` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::rational::{fmt_q, Q};

/// A Laurent polynomial `Σ_k c_k z^k` with finitely many nonzero terms.
///
/// Stored densely from the lowest exponent; the zero polynomial has no
/// coefficients. Equality is structural and therefore exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Q>,
}

impl Laurent {
    fn trimmed(mut low: i64, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        low += lead as i64;
        if coeffs.is_empty() {
            low = 0;
        }
        Self { low, coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// A constant.
    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    /// `c z^e`.
    pub fn monomial(c: Q, e: i64) -> Self {
        Self::trimmed(e, vec![c])
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(Q::one(), 1)
    }

    /// Build from `(exponent, coefficient)` terms; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    /// Dense coefficients starting at exponent `low`.
    pub fn from_dense(low: i64, coeffs: Vec<Q>) -> Self {
        Self::trimmed(low, coeffs)
    }

    /// `true` for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The `z`-adic valuation (lowest exponent); `None` for zero (`+∞`).
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// The highest exponent; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `z^e`.
    pub fn coeff(&self, e: i64) -> Q {
        let k = e - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Q::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &Q) -> Self {
        Self::trimmed(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `Some((c, e))` when `self = c z^e` with `c ≠ 0`: the units of `Q[z, 1/z]`.
    pub fn as_monomial(&self) -> Option<(Q, i64)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }

    /// `Some(c)` for constants (including zero).
    pub fn as_constant(&self) -> Option<Q> {
        match self.as_monomial() {
            _ if self.is_zero() => Some(Q::zero()),
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    /// Keep only terms of exponent `< bound`.
    pub fn truncate_below(&self, bound: i64) -> Self {
        let keep = (bound - self.low).clamp(0, self.coeffs.len() as i64) as usize;
        Self::trimmed(self.low, self.coeffs[..keep].to_vec())
    }

    /// `(self · other)` with all terms of exponent `≥ bound` dropped, without
    /// computing them.
    pub fn mul_below(&self, other: &Self, bound: i64) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let low = self.low + other.low;
        let len =
            (bound - low).clamp(0, (self.coeffs.len() + other.coeffs.len() - 1) as i64) as usize;
        let mut out = vec![Q::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::trimmed(low, out)
    }

    /// The part with the power of `z` removed: `self = z^{ν} · unit_part`,
    /// where `unit_part` has nonzero constant term.
    pub fn unit_part(&self) -> Self {
        Self {
            low: 0,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact quotient in `Q[z, 1/z]`, or `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = poly_divrem(&self.coeffs, &other.coeffs);
        r.iter()
            .all(Zero::is_zero)
            .then(|| Self::trimmed(self.low - other.low, q))
    }

    /// Power series of `1 / self` up to (excluding) `z^len`, for `self` with
    /// nonzero constant term and no negative exponents.
    pub fn inverse_series(&self, len: usize) -> Vec<Q> {
        assert_eq!(self.low, 0, "series inverse needs a nonzero constant term");
        let c0 = &self.coeffs[0];
        let mut out: Vec<Q> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = if k == 0 { Q::one() } else { Q::zero() };
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc -= &self.coeffs[j] * &out[k - j];
            }
            out.push(acc / c0);
        }
        out
    }
}

/// Polynomial division on dense coefficient vectors (index = exponent).
pub(crate) fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut rem: Vec<Q> = a.to_vec();
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (vec![], rem);
    }
    let mut quo = vec![Q::zero(); a.len() - db];
    let lead = &b[db];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
        }
        quo[k] = c;
    }
    rem.truncate(db);
    (quo, rem)
}

/// Monic gcd in `Q[z]` of two polynomials (no negative exponents), including
/// the common power of `z`. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    assert!(
        a.valuation().unwrap_or(0) >= 0 && b.valuation().unwrap_or(0) >= 0,
        "poly_gcd needs polynomials"
    );
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let shift = x.low.min(y.low);
        let xs: Vec<Q> = dense_from(&x, shift);
        let ys: Vec<Q> = dense_from(&y, shift);
        let (_, r) = poly_divrem(&xs, &ys);
        let r = Laurent::trimmed(shift, r);
        x = y;
        y = r;
    }
    match x.coeffs.last().cloned() {
        None => Laurent::zero(),
        Some(lead) => x.scale(&(Q::one() / lead)),
    }
}

fn dense_from(p: &Laurent, shift: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); (p.low - shift) as usize];
    v.extend(p.coeffs.iter().cloned());
    v
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.degree().unwrap().max(other.degree().unwrap());
        let coeffs = (low..=high)
            .map(|e| self.coeff(e) + other.coeff(e))
            .collect();
        Laurent::trimmed(low, coeffs)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, other: Laurent) -> Laurent {
        &self + &other
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, other: &Laurent) -> Laurent {
        self + &(-other)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, other: Laurent) -> Laurent {
        &self - &other
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::trimmed(self.low + other.low, coeffs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, other: Laurent) -> Laurent {
        &self * &other
    }
}

impl From<Q> for Laurent {
    fn from(c: Q) -> Self {
        Laurent::constant(c)
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(Q::from_integer(c.into()))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{}", fmt_q(&mag))?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{}*z", fmt_q(&mag))?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{}*z^{e}", fmt_q(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
