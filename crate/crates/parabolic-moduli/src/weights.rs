//! Weight systems, parabolic types and the arithmetic built on them.
//!
//! A [`WeightSystem`] assigns to each marked point `x` a strictly increasing
//! tuple `0 ≤ α_1(x) < … < α_r(x) < 1`. A [`ParabolicType`] is a 0/1 matrix
//! `n̄ = (n_i(x))` with constant row sum `r′`, recording which flag steps a
//! subbundle meets at each point.
//!
//! For an admissible type (`0 < r′ < r`) the *wall function*
//!
//! ```text
//! f(α) = r′ · Σ_x Σ_i α_i(x) − r · Σ_x Σ_i n_i(x) α_i(x)
//! ```
//!
//! is the quantity whose integrality decides wall membership; see
//! [`wall_value`]. It is invariant under per-point translation of `α`.

use num::{BigInt, One, Signed};
use serde::{Deserialize, Serialize};

use crate::chamber::admissible_types;
use crate::error::{Error, Result};
use crate::rational::{floor_q, is_integer, parse_q, q, qi, Q};

/// A full-flag system of weights of rank `r` over `n ≥ 1` labelled points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    rank: usize,
    labels: Vec<String>,
    weights: Vec<Vec<Q>>,
}

impl WeightSystem {
    /// Validate and build a weight system.
    ///
    /// Fails unless `rank ≥ 2`, there is at least one point, labels are
    /// distinct, every tuple has length `rank` and is strictly increasing in
    /// `[0, 1)`.
    pub fn new(rank: usize, labels: Vec<String>, weights: Vec<Vec<Q>>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidWeights(format!(
                "rank must be at least 2, got {rank}"
            )));
        }
        if weights.is_empty() {
            return Err(Error::InvalidWeights(
                "at least one marked point is required".into(),
            ));
        }
        if labels.len() != weights.len() {
            return Err(Error::InvalidWeights(format!(
                "{} labels for {} weight tuples",
                labels.len(),
                weights.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidWeights(format!(
                    "duplicate point label `{l}`"
                )));
            }
        }
        let one = Q::one();
        for (label, tuple) in labels.iter().zip(&weights) {
            if tuple.len() != rank {
                return Err(Error::InvalidWeights(format!(
                    "point `{label}` has {} weights, expected exactly r = {rank}",
                    tuple.len()
                )));
            }
            if tuple[0].is_negative() || tuple[rank - 1] >= one {
                return Err(Error::InvalidWeights(format!(
                    "weights at `{label}` must lie in [0, 1)"
                )));
            }
            if tuple.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidWeights(format!(
                    "weights at `{label}` must be strictly increasing (full flag)"
                )));
            }
        }
        Ok(Self {
            rank,
            labels,
            weights,
        })
    }

    /// Build from tuples, labelling points `x1, x2, …`.
    pub fn from_tuples(rank: usize, weights: Vec<Vec<Q>>) -> Result<Self> {
        let labels = (1..=weights.len()).map(|i| format!("x{i}")).collect();
        Self::new(rank, labels, weights)
    }

    /// Build from `(label, ["p/q", …])` pairs.
    pub fn parse(rank: usize, points: &[(&str, &[&str])]) -> Result<Self> {
        let labels = points.iter().map(|(l, _)| l.to_string()).collect();
        let weights = points
            .iter()
            .map(|(_, ws)| ws.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, labels, weights)
    }

    /// The rank `r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The number of marked points `n = |D|`.
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// Point labels in order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// All weight tuples in point order.
    pub fn weights(&self) -> &[Vec<Q>] {
        &self.weights
    }

    /// The tuple at point index `x`.
    pub fn point(&self, x: usize) -> &[Q] {
        &self.weights[x]
    }

    /// Replace the tuples, keeping rank and labels; revalidates.
    pub fn with_weights(&self, weights: Vec<Vec<Q>>) -> Result<Self> {
        Self::new(self.rank, self.labels.clone(), weights)
    }

    /// Σ_x Σ_i α_i(x).
    pub fn total(&self) -> Q {
        self.weights.iter().flatten().sum()
    }

    fn check_type(&self, t: &ParabolicType) -> Result<()> {
        if t.n() != self.n() || t.r() != self.rank {
            return Err(Error::ShapeMismatch(format!(
                "type has shape {}×{}, weights have {}×{}",
                t.n(),
                t.r(),
                self.n(),
                self.rank
            )));
        }
        Ok(())
    }
}

/// `x: (a, b, c); y: (…)`, with rationals in lowest terms.
impl std::fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, (label, tuple)) in self.labels.iter().zip(&self.weights).enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            let body: Vec<String> = tuple.iter().map(crate::rational::fmt_q).collect();
            write!(f, "{label}: ({})", body.join(", "))?;
        }
        Ok(())
    }
}

/// A 0/1 pattern `n̄` of shape `n × r` with constant row sum `r′`.
///
/// [`ParabolicType::new`] accepts any constant row sum `0 ≤ r′ ≤ r` (the
/// all-zero and all-one patterns are needed by [`owt`] and [`t_number`]);
/// [`ParabolicType::admissible`] additionally insists on `0 < r′ < r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicType {
    entries: Vec<Vec<u8>>,
    subrank: usize,
}

impl ParabolicType {
    /// Validate a pattern: rectangular, nonempty, 0/1 entries, constant row sum.
    pub fn new(entries: Vec<Vec<u8>>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(Error::InvalidType("a type needs at least one row".into()));
        };
        let r = first.len();
        if r == 0 {
            return Err(Error::InvalidType("rows must be nonempty".into()));
        }
        if entries.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidType(
                "all rows must have the same length".into(),
            ));
        }
        if entries.iter().flatten().any(|&e| e > 1) {
            return Err(Error::InvalidType("entries must be 0 or 1".into()));
        }
        let subrank = first.iter().map(|&e| e as usize).sum();
        if entries
            .iter()
            .any(|row| row.iter().map(|&e| e as usize).sum::<usize>() != subrank)
        {
            return Err(Error::InvalidType(
                "every row must have the same sum r′ (one subbundle rank)".into(),
            ));
        }
        Ok(Self { entries, subrank })
    }

    /// Like [`ParabolicType::new`] but requires `0 < r′ < r`.
    pub fn admissible(entries: Vec<Vec<u8>>) -> Result<Self> {
        let t = Self::new(entries)?;
        if !t.is_admissible() {
            return Err(Error::InvalidType(format!(
                "admissible types need 0 < r′ < r, got r′ = {} with r = {}",
                t.subrank,
                t.r()
            )));
        }
        Ok(t)
    }

    /// The type whose row at every point is the indicator of `subsets[x]`
    /// (1-based indices).
    pub fn from_subsets(r: usize, subsets: &[Vec<usize>]) -> Result<Self> {
        let mut entries = vec![vec![0u8; r]; subsets.len()];
        for (row, set) in entries.iter_mut().zip(subsets) {
            for &i in set {
                if i == 0 || i > r {
                    return Err(Error::InvalidType(format!("index {i} outside 1..={r}")));
                }
                row[i - 1] = 1;
            }
        }
        Self::new(entries)
    }

    /// The all-ones pattern (`r′ = r`), i.e. the bundle itself.
    pub fn full(n: usize, r: usize) -> Self {
        Self {
            entries: vec![vec![1; r]; n],
            subrank: r,
        }
    }

    /// The all-zero pattern (`r′ = 0`).
    pub fn zero(n: usize, r: usize) -> Self {
        Self {
            entries: vec![vec![0; r]; n],
            subrank: 0,
        }
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Rank `r` (row length).
    pub fn r(&self) -> usize {
        self.entries[0].len()
    }

    /// The common row sum `r′`.
    pub fn subrank(&self) -> usize {
        self.subrank
    }

    /// The rows `n_i(x)`.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.entries
    }

    /// `0 < r′ < r`.
    pub fn is_admissible(&self) -> bool {
        self.subrank > 0 && self.subrank < self.r()
    }

    /// The pattern `1 − n_i(x)` (the quotient's type, of rank `r″ = r − r′`).
    pub fn complement(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| 1 - e).collect())
                .collect(),
            subrank: self.r() - self.subrank,
        }
    }

    /// The pattern `n_{r−i+1}(x)`.
    pub fn reversed(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().rev().copied().collect())
                .collect(),
            subrank: self.subrank,
        }
    }

    /// Per point, the 1-based indices `i` with `n_i(x) = 1`.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 1)
                    .map(|(i, _)| i + 1)
                    .collect()
            })
            .collect()
    }

    /// Compact text form, rows separated by `|`, e.g. `10|01`.
    pub fn code(&self) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| char::from(b'0' + e)).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parse the [`ParabolicType::code`] form.
    pub fn from_code(code: &str) -> Result<Self> {
        let rows = code
            .split('|')
            .map(|row| {
                row.trim()
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(Error::Parse(format!(
                            "bad character `{c}` in type `{code}`"
                        ))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// The translation representative with `α_1(x) = 0` at every point.
pub fn normalize(w: &WeightSystem) -> WeightSystem {
    let weights = w
        .weights
        .iter()
        .map(|t| t.iter().map(|a| a - &t[0]).collect())
        .collect();
    WeightSystem {
        rank: w.rank,
        labels: w.labels.clone(),
        weights,
    }
}

/// `owt_α(n̄) = Σ_x Σ_i n_i(x) α_i(x)`.
pub fn owt(w: &WeightSystem, t: &ParabolicType) -> Result<Q> {
    w.check_type(t)?;
    Ok(w.weights
        .iter()
        .zip(t.rows())
        .flat_map(|(ws, row)| {
            ws.iter()
                .zip(row)
                .filter(|(_, &e)| e == 1)
                .map(|(a, _)| a.clone())
        })
        .sum())
}

/// Parabolic degree `d + Σ_x Σ_i α_i(x)` of a bundle of degree `d`.
pub fn pdeg(d: i64, w: &WeightSystem) -> Q {
    qi(d) + w.total()
}

/// `s_min(α, n̄′) = r″·owt(n̄′) − r′·owt(n̄″)` with `n̄″` the complement.
pub fn s_min(w: &WeightSystem, t: &ParabolicType) -> Result<Q> {
    let c = t.complement();
    let r1 = qi(t.subrank() as i64);
    let r2 = qi(c.subrank() as i64);
    Ok(r2 * owt(w, t)? - r1 * owt(w, &c)?)
}

/// The wall function `f(α) = r′·Σα − r·owt(n̄)` of an admissible type.
///
/// `f` is translation invariant and, for valid weights, satisfies
/// `|f| < n·r²`. It equals `−s_min(α, n̄)`.
pub fn wall_value(w: &WeightSystem, t: &ParabolicType) -> Result<Q> {
    let r = qi(w.rank as i64);
    Ok(qi(t.subrank() as i64) * w.total() - r * owt(w, t)?)
}

/// `t_{n̄″,n̄′} = (Σ_x Σ_{i>j} n″_i(x) n′_j(x)) / (r″ r′)`; `t1` plays `n̄″`.
pub fn t_number(t1: &ParabolicType, t2: &ParabolicType) -> Result<Q> {
    if t1.n() != t2.n() || t1.r() != t2.r() {
        return Err(Error::ShapeMismatch(
            "t-number of types with different shapes".into(),
        ));
    }
    if t1.subrank() == 0 || t2.subrank() == 0 {
        return Err(Error::InvalidType("t-number needs nonzero subranks".into()));
    }
    let mut count = 0i64;
    for (a, b) in t1.rows().iter().zip(t2.rows()) {
        for (i, &ai) in a.iter().enumerate() {
            count += b[..i].iter().map(|&bj| (ai * bj) as i64).sum::<i64>();
        }
    }
    Ok(q(count, (t1.subrank() * t2.subrank()) as i64))
}

/// Dimension counts attached to `(g, n, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    /// `dim M(r, α, ξ) = (r²−1)(g−1) + n(r²−r)/2` (fixed determinant).
    pub dim_fixed_det: i64,
    /// `dim M(r, α, d) = r²(g−1) + 1 + n(r²−r)/2` (determinant allowed to vary).
    pub dim_nonfixed: i64,
    /// `h⁰(K^k D^{k−1})` for `k = 1..=r` (index 0 holds `k = 1`, which is `g`).
    pub dim_w: Vec<i64>,
    /// `Σ_{k=2}^{r} h⁰(K^k D^{k−1})`, the dimension of the Hitchin base.
    pub dim_w_total: i64,
}

/// `h⁰(K^k D^{k−1})` by Riemann–Roch (`k ≥ 2`), and `g` for `k = 1`.
pub fn h0_power(g: i64, n: i64, k: i64) -> i64 {
    if k == 1 {
        g
    } else {
        k * (2 * g - 2) + (k - 1) * n - g + 1
    }
}

fn check_gnr(g: i64, n: i64, r: i64) -> Result<()> {
    if g < 2 || n < 1 || r < 2 {
        return Err(Error::OutOfRange(format!(
            "need g ≥ 2, n ≥ 1, r ≥ 2; got (g, n, r) = ({g}, {n}, {r})"
        )));
    }
    Ok(())
}

/// Moduli and Hitchin-base dimensions for genus `g`, `n` points, rank `r`.
pub fn dims(g: i64, n: i64, r: i64) -> Result<Dims> {
    check_gnr(g, n, r)?;
    let flag = n * (r * r - r) / 2;
    let dim_w: Vec<i64> = (1..=r).map(|k| h0_power(g, n, k)).collect();
    Ok(Dims {
        dim_fixed_det: (r * r - 1) * (g - 1) + flag,
        dim_nonfixed: r * r * (g - 1) + 1 + flag,
        dim_w_total: dim_w[1..].iter().sum(),
        dim_w,
    })
}

/// Dimension of the stratum `N^d` of the nilpotent cone of the Hitchin base,
/// for `1 ≤ d ≤ ⌊r/2⌋`.
pub fn dim_nonreduced_stratum(g: i64, n: i64, r: i64, d: i64) -> Result<i64> {
    check_gnr(g, n, r)?;
    if d < 1 || 2 * d > r {
        return Err(Error::OutOfRange(format!(
            "need 1 ≤ d ≤ ⌊r/2⌋, got d = {d} with r = {r}"
        )));
    }
    let h = |j: i64| h0_power(g, n, j);
    Ok(if 2 * d < r {
        (1..=d).map(h).sum::<i64>() + (2..=r - 2 * d).map(h).sum::<i64>()
    } else {
        (2..=r / 2).map(h).sum()
    })
}

/// A wall `f_{r′,I}(α) = m` on which some weight system lies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `r′`.
    pub subrank: usize,
    /// The index sets `I(x)` (1-based), one per point.
    pub subsets: Vec<Vec<usize>>,
    /// The integer level `m`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub level: BigInt,
}

/// Outcome of [`is_generic`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genericity {
    /// No wall function takes an integer value.
    pub generic: bool,
    /// The first wall hit, in admissible-type order, when not generic.
    pub witness: Option<Witness>,
}

/// Strict genericity: `f_{r′,I}(α) ∉ Z` for every admissible `(r′, I)`.
pub fn is_generic(w: &WeightSystem) -> Genericity {
    let bound = qi((w.n() * w.rank * w.rank) as i64);
    for t in admissible_types(w.rank, w.n()) {
        let f = wall_value(w, &t).expect("shapes agree by construction");
        debug_assert!(f.abs() < bound, "wall value exceeds n·r²");
        if is_integer(&f) {
            return Genericity {
                generic: false,
                witness: Some(Witness {
                    subrank: t.subrank(),
                    subsets: t.subsets(),
                    level: f.to_integer(),
                }),
            };
        }
    }
    Genericity {
        generic: true,
        witness: None,
    }
}

/// The concentration threshold `4 / (n r²)`.
pub fn concentration_threshold(w: &WeightSystem) -> Q {
    q(4, (w.n() * w.rank * w.rank) as i64)
}

/// `α_r(x) − α_1(x) < 4/(n r²)` at every point.
pub fn is_concentrated(w: &WeightSystem) -> bool {
    let th = concentration_threshold(w);
    w.weights.iter().all(|t| &t[w.rank - 1] - &t[0] < th)
}

/// Genus thresholds from the chamber, refined-chamber, `(l, m)`-stability and
/// codimension statements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    /// `1 + (r−1)n − min(⌊Σ_x α_1(x)⌋, ⌊Σ_x β_1(x)⌋)`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub chamber: BigInt,
    /// `1 + ⌊Σ_x Σ_i (1 − α_i(x))(1 − n_i(x))⌋ / r′`, when a type was given.
    #[serde(serialize_with = "crate::rational::as_string::option")]
    pub refined: Option<Q>,
    /// `m + l + 1 + (l + k)/(r − 1)`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub lm: Q,
    /// `1 + (l − 1)/(r − 1)`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub codim: Q,
}

/// Compute the genus thresholds. `w2` defaults to `w`; `t` is only needed
/// for the refined bound (see [`refined_genus_bound`]).
pub fn genus_bounds(
    w: &WeightSystem,
    w2: Option<&WeightSystem>,
    t: Option<&ParabolicType>,
    l: u64,
    m: u64,
    k: u64,
) -> Result<GenusBounds> {
    let w2 = w2.unwrap_or(w);
    if w2.rank != w.rank || w2.n() != w.n() {
        return Err(Error::ShapeMismatch(
            "genus bound for weights of different shapes".into(),
        ));
    }
    let r = w.rank as i64;
    let n = w.n() as i64;
    let first_sum = |v: &WeightSystem| floor_q(&v.weights.iter().map(|t| t[0].clone()).sum::<Q>());
    let min_floor = first_sum(w).min(first_sum(w2));
    let chamber = BigInt::from(1 + (r - 1) * n) - min_floor;
    let refined = t.map(|t| refined_genus_bound(w, Some(t))).transpose()?;
    let lm = qi(m as i64 + l as i64 + 1) + q((l + k) as i64, r - 1);
    let codim = qi(1) + q(l as i64 - 1, r - 1);
    Ok(GenusBounds {
        chamber,
        refined,
        lm,
        codim,
    })
}

/// `1 + ⌊Σ_x Σ_i (1 − α_i(x))(1 − n_i(x))⌋ / r′`; errors when `t` is absent.
pub fn refined_genus_bound(w: &WeightSystem, t: Option<&ParabolicType>) -> Result<Q> {
    let t = t.ok_or_else(|| {
        Error::MissingType("the refined genus bound needs an admissible type".into())
    })?;
    w.check_type(t)?;
    if !t.is_admissible() {
        return Err(Error::InvalidType(
            "the refined genus bound needs 0 < r′ < r".into(),
        ));
    }
    let one = Q::one();
    let s: Q = w
        .weights
        .iter()
        .zip(t.rows())
        .flat_map(|(ws, row)| {
            ws.iter()
                .zip(row)
                .filter(|(_, &e)| e == 0)
                .map(|(a, _)| &one - a)
                .collect::<Vec<_>>()
        })
        .sum();
    Ok(qi(1) + Q::from_integer(floor_q(&s)) / qi(t.subrank() as i64))
}

/// Verdict of comparing a subbundle's parabolic slope with the bundle's.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    /// `pdeg(F)/r′ < pdeg(E)/r`.
    Strict,
    /// The slopes agree.
    Equality,
    /// `pdeg(F)/r′ > pdeg(E)/r`.
    Violated,
}

/// Compare the slope of a subbundle of rank `r′`, degree `d_f` and type `t`
/// with that of a rank-`r`, degree-`d` bundle, both weighted by `w`.
pub fn stability_check(
    r: usize,
    d: i64,
    w: &WeightSystem,
    subrank: usize,
    d_f: i64,
    t: &ParabolicType,
) -> Result<Stability> {
    if r != w.rank {
        return Err(Error::ShapeMismatch(format!(
            "rank {r} given for rank-{} weights",
            w.rank
        )));
    }
    w.check_type(t)?;
    if t.subrank() != subrank || !t.is_admissible() {
        return Err(Error::InvalidType(format!(
            "subbundle rank {subrank} must equal the type's row sum {} and lie in (0, r)",
            t.subrank()
        )));
    }
    let lhs = (qi(d_f) + owt(w, t)?) * qi(r as i64);
    let rhs = pdeg(d, w) * qi(subrank as i64);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Stability::Strict,
        std::cmp::Ordering::Equal => Stability::Equality,
        std::cmp::Ordering::Greater => Stability::Violated,
    })
}
