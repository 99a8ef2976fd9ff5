//! The group of basic transformations, through its action on weights and
//! determinant degrees.
//!
//! A [`NumTransform`] `(π, s, ℓ, H)` stands for the composite
//! `Σ_π ∘ D^s ∘ T_ℓ ∘ SH_H`: first the Hecke modification `SH_H`, then
//! tensoring by a line bundle of degree `ℓ`, then dualization when
//! `s = −1`, then relabelling points by `π`. Line bundles are recorded only
//! by their degree.
//!
//! Composition and inversion rewrite the concatenated word into canonical
//! order (see [`word`]); the normal form has `0 ≤ h_x < r`.

pub mod word;

use num::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::weights::{normalize, WeightSystem};
use word::{word_of, Generator, Rewriter};

/// The sign `s` of a transformation: `Minus` means the dual is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    /// `s = +1`.
    Plus,
    /// `s = −1`.
    Minus,
}

impl Sign {
    /// `±1` as an integer.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Parse `±1`.
    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidTransform(format!(
                "sign must be +1 or -1, got {v}"
            ))),
        }
    }
}

/// Numerical shadow `(π, s, ℓ, H)` of a basic transformation.
///
/// `perm[i] = j` means the data at point `i` is moved to point `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumTransform {
    /// Point permutation `π`.
    pub perm: Vec<usize>,
    /// Dualization sign `s`.
    pub sign: Sign,
    /// Degree `ℓ` of the tensoring line bundle.
    pub tdeg: i64,
    /// Hecke multiplicities `h_x`.
    pub hecke: Vec<i64>,
}

/// `(π, ±, ℓ, H)` with `π` and `H` as 0-based lists.
impl std::fmt::Display for NumTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.sign == Sign::Plus { '+' } else { '−' };
        write!(
            f,
            "({:?}, {sign}, {}, {:?})",
            self.perm, self.tdeg, self.hecke
        )
    }
}

impl NumTransform {
    /// Build without validation (see [`NumTransform::validate`]).
    pub fn new(perm: Vec<usize>, sign: Sign, tdeg: i64, hecke: Vec<i64>) -> Self {
        Self {
            perm,
            sign,
            tdeg,
            hecke,
        }
    }

    /// `(id, +1, 0, 0)` on `n` points.
    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect(), Sign::Plus, 0, vec![0; n])
    }

    /// Pure relabelling `Σ_π`.
    pub fn permutation(perm: Vec<usize>) -> Self {
        let n = perm.len();
        Self::new(perm, Sign::Plus, 0, vec![0; n])
    }

    /// Pure Hecke modification `SH_H`.
    pub fn hecke_only(hecke: Vec<i64>) -> Self {
        let n = hecke.len();
        Self::new((0..n).collect(), Sign::Plus, 0, hecke)
    }

    /// Number of points acted on.
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `|H| = Σ_x h_x`.
    pub fn hecke_total(&self) -> i64 {
        self.hecke.iter().sum()
    }

    /// `true` for `(id, +1, 0, 0)`.
    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// Check that this is a normal-form element for rank `r` on `n` points.
    pub fn validate(&self, r: usize, n: usize) -> Result<()> {
        if self.perm.len() != n || self.hecke.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "transformation on {} points used with {n} points",
                self.perm.len()
            )));
        }
        if !is_perm(&self.perm) {
            return Err(Error::InvalidTransform(format!(
                "{:?} is not a permutation",
                self.perm
            )));
        }
        if let Some(h) = self.hecke.iter().find(|&&h| h < 0 || h >= r as i64) {
            return Err(Error::InvalidTransform(format!(
                "Hecke multiplicity {h} outside the normal-form range 0..={}",
                r - 1
            )));
        }
        Ok(())
    }
}

/// `true` when `p` is a permutation of `0..p.len()`.
pub fn is_perm(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&j| j < p.len() && !std::mem::replace(&mut seen[j], true))
}

/// `a ∘ b` (apply `b` first).
pub fn perm_compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j]).collect()
}

/// Inverse permutation.
pub fn perm_inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// `SH_H(α)`: at each point rotate the weights by `h_x` steps and shift so the
/// first weight is zero. Requires `0 ≤ h_x < r`.
pub fn hecke_weights(w: &WeightSystem, hecke: &[i64]) -> Result<WeightSystem> {
    let r = w.rank();
    if hecke.len() != w.n() {
        return Err(Error::ShapeMismatch(format!(
            "{} Hecke multiplicities for {} points",
            hecke.len(),
            w.n()
        )));
    }
    if let Some(h) = hecke.iter().find(|&&h| h < 0 || h >= r as i64) {
        return Err(Error::InvalidTransform(format!(
            "Hecke multiplicity {h} outside 0..={}",
            r - 1
        )));
    }
    let one = Q::one();
    let weights = w
        .weights()
        .iter()
        .zip(hecke)
        .map(|(a, &h)| {
            let h = h as usize;
            let base = &a[h];
            (0..r)
                .map(|i| {
                    if i + h < r {
                        &a[i + h] - base
                    } else {
                        &a[i + h - r] - base + &one
                    }
                })
                .collect()
        })
        .collect();
    w.with_weights(weights)
}

/// Dual weights: the normalization of `(1 − α_{r−i+1}(x))_i`.
pub fn dual_weights(w: &WeightSystem) -> WeightSystem {
    let one = Q::one();
    let weights = w
        .weights()
        .iter()
        .map(|a| {
            let rev: Vec<Q> = a.iter().rev().map(|x| &one - x).collect();
            rev.iter().map(|x| x - &rev[0]).collect()
        })
        .collect();
    w.with_weights(weights)
        .expect("dual of valid weights is valid")
}

/// Move the tuple at point `i` to point `perm[i]`; labels stay in place.
pub fn permute_weights(w: &WeightSystem, perm: &[usize]) -> Result<WeightSystem> {
    if perm.len() != w.n() || !is_perm(perm) {
        return Err(Error::InvalidTransform(format!(
            "{perm:?} is not a permutation of {} points",
            w.n()
        )));
    }
    let mut weights = w.weights().to_vec();
    for (i, &j) in perm.iter().enumerate() {
        weights[j] = w.point(i).to_vec();
    }
    w.with_weights(weights)
}

/// `T(α)` in canonical form: Hecke rotation, then relabelling, then dual if
/// `s = −1`. The degree `ℓ` does not affect weights.
pub fn apply_to_weights(t: &NumTransform, w: &WeightSystem) -> Result<WeightSystem> {
    t.validate(w.rank(), w.n())?;
    let moved = permute_weights(&hecke_weights(w, &t.hecke)?, &t.perm)?;
    Ok(match t.sign {
        Sign::Plus => normalize(&moved),
        Sign::Minus => dual_weights(&moved),
    })
}

/// Determinant degree after `T`: `s · (r ℓ + d − |H|)`.
pub fn apply_to_degree(t: &NumTransform, d: i64, r: usize) -> i64 {
    t.sign.value() * (r as i64 * t.tdeg + d - t.hecke_total())
}

/// Normal form of `t1 ∘ t2` (apply `t2` first), by word rewriting.
pub fn compose(t1: &NumTransform, t2: &NumTransform, r: usize) -> Result<NumTransform> {
    let n = t1.n();
    t1.validate(r, n)?;
    t2.validate(r, n)?;
    let rw = Rewriter::new(r);
    let mut w = word_of(t1);
    w.extend(word_of(t2));
    Ok(rw.to_transform(&rw.normalize(w), n))
}

/// Normal form of `t⁻¹`.
pub fn inverse(t: &NumTransform, r: usize) -> Result<NumTransform> {
    let n = t.n();
    t.validate(r, n)?;
    let rw = Rewriter::new(r);
    let w: Vec<Generator> = word_of(t).iter().rev().map(Generator::inverse).collect();
    Ok(rw.to_transform(&rw.normalize(w), n))
}

/// Rank 2 only: trade the dual of `t` for a twist, keeping its action on the
/// weight class and on the degree `d`: `(π, −1, ℓ, H) ↦ (π, +1, −ℓ + |H| − d, H)`.
pub fn reduce_dual_rank2(t: &NumTransform, d: i64, r: usize) -> Result<NumTransform> {
    if r != 2 {
        return Err(Error::OutOfRange(format!(
            "dual elimination needs r = 2, got r = {r}"
        )));
    }
    if t.sign != Sign::Minus {
        return Err(Error::InvalidTransform(
            "dual elimination needs sign −1".into(),
        ));
    }
    t.validate(r, t.n())?;
    Ok(NumTransform::new(
        t.perm.clone(),
        Sign::Plus,
        -t.tdeg + t.hecke_total() - d,
        t.hecke.clone(),
    ))
}

/// Membership in the dual-free subgroup: `s = +1`.
pub fn is_in_st_plus(t: &NumTransform) -> bool {
    t.sign == Sign::Plus
}
