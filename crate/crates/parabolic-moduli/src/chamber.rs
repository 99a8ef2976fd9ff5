//! Numerical stability chambers.
//!
//! For an admissible type `n̄` of subrank `r′`, weights `α` and degree `d`,
//!
//! ```text
//! M(r, α, d, n̄) = ⌊ (r′ d + f(α)) / r ⌋,   f(α) = r′ Σα − r owt_α(n̄),
//! ```
//!
//! is the largest degree a subbundle of type `n̄` may have without
//! destabilizing. The vector `M̄(r, α, d)` over all admissible types is
//! constant exactly on numerical chambers. Because `M` only jumps where
//! `r′ d + f` crosses a multiple of `r`, only walls `f = m` with
//! `m ≡ −r′ d (mod r)` are *relevant* for a given degree.
//!
//! Enumeration cost is `Σ_{r′} C(r, r′)^n`; the practical envelope is about
//! `r ≤ 6`, `n ≤ 4`. Types are produced lazily by [`admissible_types`].

use itertools::Itertools;
use num::{BigInt, Integer, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{floor_q, is_integer, q, qi, Q};
use crate::weights::{wall_value, ParabolicType, WeightSystem};

/// All admissible types for `(r, n)` in canonical order: by subrank `r′`
/// ascending, then lexicographically by the index sets `I(x)`, the first
/// point being most significant.
pub fn admissible_types(r: usize, n: usize) -> impl Iterator<Item = ParabolicType> {
    (1..r).flat_map(move |sub| {
        let rows: Vec<Vec<u8>> = (0..r)
            .combinations(sub)
            .map(|c| {
                let mut row = vec![0u8; r];
                c.into_iter().for_each(|i| row[i] = 1);
                row
            })
            .collect();
        (0..n)
            .map(|_| rows.clone())
            .multi_cartesian_product()
            .map(|entries| ParabolicType::admissible(entries).expect("constructed admissible"))
    })
}

/// `Σ_{r′=1}^{r−1} C(r, r′)^n`, the number of admissible types.
pub fn admissible_count(r: usize, n: usize) -> BigInt {
    (1..r).map(|k| num::pow(binomial(r, k), n)).sum()
}

fn binomial(r: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(r - i) / BigInt::from(i + 1)
    })
}

fn check(r: usize, w: &WeightSystem, t: Option<&ParabolicType>) -> Result<()> {
    if r != w.rank() {
        return Err(Error::ShapeMismatch(format!(
            "rank {r} given for rank-{} weights",
            w.rank()
        )));
    }
    if let Some(t) = t {
        if t.n() != w.n() || t.r() != r {
            return Err(Error::ShapeMismatch(format!(
                "type {} does not fit {} points of rank {r}",
                t.code(),
                w.n()
            )));
        }
        if !t.is_admissible() {
            return Err(Error::InvalidType(format!(
                "type {} is not admissible",
                t.code()
            )));
        }
    }
    Ok(())
}

/// `(r′ d + f(α)) / r`, the exact slope bound whose floor is `M`.
pub fn m_fraction(r: usize, w: &WeightSystem, d: i64, t: &ParabolicType) -> Result<Q> {
    check(r, w, Some(t))?;
    Ok((qi(t.subrank() as i64 * d) + wall_value(w, t)?) / qi(r as i64))
}

/// `M(r, α, d, n̄)`.
pub fn m_value(r: usize, w: &WeightSystem, d: i64, t: &ParabolicType) -> Result<BigInt> {
    Ok(floor_q(&m_fraction(r, w, d, t)?))
}

/// The exclusive lower bound `d/r − r n − 1` and inclusive upper bound
/// `(r−1) d / r + (r−1) n` satisfied by every `M` value.
pub fn m_bounds(r: usize, n: usize, d: i64) -> (Q, Q) {
    let (ri, ni) = (r as i64, n as i64);
    (
        q(d, ri) - qi(ri * ni + 1),
        q((ri - 1) * d, ri) + qi((ri - 1) * ni),
    )
}

/// `M̄(r, α, d)`: the values of `M` over all admissible types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberInvariant {
    /// Rank.
    pub r: usize,
    /// Number of points.
    pub n: usize,
    /// Degree.
    pub d: i64,
    /// `(type, M)` pairs in [`admissible_types`] order.
    #[serde(serialize_with = "serialize_values")]
    pub values: Vec<(ParabolicType, BigInt)>,
}

fn serialize_values<S: serde::Serializer>(
    values: &[(ParabolicType, BigInt)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry {
        #[serde(rename = "type")]
        code: String,
        #[serde(rename = "M", serialize_with = "crate::rational::as_string::display")]
        m: BigInt,
    }
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for (t, m) in values {
        seq.serialize_element(&Entry {
            code: t.code(),
            m: m.clone(),
        })?;
    }
    seq.end()
}

impl ChamberInvariant {
    /// The value at `t`, if `t` is admissible for this context.
    pub fn get(&self, t: &ParabolicType) -> Option<&BigInt> {
        self.values.iter().find(|(k, _)| k == t).map(|(_, v)| v)
    }
}

/// Assemble `M̄(r, α, d)`.
pub fn m_vec(r: usize, w: &WeightSystem, d: i64) -> Result<ChamberInvariant> {
    check(r, w, None)?;
    let values = admissible_types(r, w.n())
        .map(|t| {
            let m = m_value(r, w, d, &t)?;
            Ok((t, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChamberInvariant {
        r,
        n: w.n(),
        d,
        values,
    })
}

/// Equality of `M̄` for two weight systems at the same degree.
pub fn same_numerical_chamber(
    r: usize,
    w1: &WeightSystem,
    w2: &WeightSystem,
    d: i64,
) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::ShapeMismatch(
            "weight systems on different point sets".into(),
        ));
    }
    check(r, w2, None)?;
    Ok(m_vec(r, w1, d)?.values == m_vec(r, w2, d)?.values)
}

/// A hyperplane `f_{r′,I}(α) = m` in weight space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wall {
    /// `r′`.
    pub subrank: usize,
    /// `I(x)` per point (1-based indices).
    pub subsets: Vec<Vec<usize>>,
    /// `m`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub level: BigInt,
    /// `m ≡ −r′ d (mod r)`: the wall changes `M̄` at this degree.
    pub relevant: bool,
}

/// Whether the wall `f_{r′,I} = m` is relevant at degree `d`.
pub fn is_relevant(level: &BigInt, subrank: usize, d: i64, r: usize) -> bool {
    (level + BigInt::from(subrank as i64 * d))
        .mod_floor(&BigInt::from(r as i64))
        .is_zero()
}

/// The first wall (in type order) containing `w`, optionally only relevant ones.
pub fn wall_through(
    r: usize,
    w: &WeightSystem,
    d: i64,
    relevant_only: bool,
) -> Result<Option<Wall>> {
    check(r, w, None)?;
    for t in admissible_types(r, w.n()) {
        let f = wall_value(w, &t)?;
        if is_integer(&f) {
            let level = f.to_integer();
            let relevant = is_relevant(&level, t.subrank(), d, r);
            if relevant || !relevant_only {
                return Ok(Some(Wall {
                    subrank: t.subrank(),
                    subsets: t.subsets(),
                    level,
                    relevant,
                }));
            }
        }
    }
    Ok(None)
}

/// Walls strictly separating `w1` from `w2`: for each admissible type, every
/// integer strictly between the two wall-function values. With
/// `relevant_only`, only walls relevant at degree `d` are kept, and the
/// result is empty exactly when the two systems share a numerical chamber.
///
/// Errors if an endpoint lies on a wall (any wall, or any relevant wall when
/// `relevant_only`).
pub fn walls_crossed(
    r: usize,
    w1: &WeightSystem,
    w2: &WeightSystem,
    d: i64,
    relevant_only: bool,
) -> Result<Vec<Wall>> {
    if w1.n() != w2.n() {
        return Err(Error::ShapeMismatch(
            "weight systems on different point sets".into(),
        ));
    }
    for (name, w) in [("first", w1), ("second", w2)] {
        if let Some(wall) = wall_through(r, w, d, relevant_only)? {
            return Err(Error::OnWall(format!(
                "{name} endpoint lies on the wall r′ = {}, I = {:?}, m = {}",
                wall.subrank, wall.subsets, wall.level
            )));
        }
    }
    let mut out = Vec::new();
    for t in admissible_types(r, w1.n()) {
        let (f1, f2) = (wall_value(w1, &t)?, wall_value(w2, &t)?);
        let (lo, hi) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
        let mut m: BigInt = floor_q(&lo) + 1;
        while Q::from_integer(m.clone()) < hi {
            let relevant = is_relevant(&m, t.subrank(), d, r);
            if relevant || !relevant_only {
                out.push(Wall {
                    subrank: t.subrank(),
                    subsets: t.subsets(),
                    level: m.clone(),
                    relevant,
                });
            }
            m += 1;
        }
    }
    Ok(out)
}
