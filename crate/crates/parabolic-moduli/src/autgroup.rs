//! Automorphisms and isomorphisms of moduli spaces, through their numerical
//! shadows.
//!
//! A transformation class `T = (π, s, ℓ, H)` induces an automorphism when it
//! fixes the determinant degree, `s(rℓ + d − |H|) = d`, and keeps the weights
//! in their numerical chamber, `M̄(r, T(α), d) = M̄(r, α, d)`; in rank 2 only
//! dual-free classes are counted. Candidates are enumerated exhaustively over
//! the curve's point symmetries, both signs and all normal-form Hecke vectors.
//!
//! Each numerical class lifts to `r^{2g}` transformations (one per `r`-torsion
//! line bundle), which act distinctly once `g ≥ 4`. Curve automorphisms are
//! seen only through the point permutation they induce, weighted by a
//! user-supplied multiplicity.

use itertools::Itertools;
use num::BigInt;
use serde::Serialize;

use crate::chamber::{same_numerical_chamber, wall_through, Wall};
use crate::error::{Error, Result};
use crate::transform::{apply_to_weights, is_perm, reduce_dual_rank2, NumTransform, Sign};
use crate::weights::{genus_bounds, is_generic, WeightSystem};

/// Genus of the curve and the point permutations induced by its automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    genus: u32,
    symmetries: Vec<(Vec<usize>, u64)>,
}

impl CurveData {
    /// Validate: permutations of one common size, no repeats, positive
    /// multiplicities, and the identity present.
    pub fn new(genus: u32, symmetries: Vec<(Vec<usize>, u64)>) -> Result<Self> {
        let Some(n) = symmetries.first().map(|(p, _)| p.len()) else {
            return Err(Error::InvalidCurve(
                "the identity permutation must be listed".into(),
            ));
        };
        for (i, (p, m)) in symmetries.iter().enumerate() {
            if p.len() != n || !is_perm(p) {
                return Err(Error::InvalidCurve(format!(
                    "{p:?} is not a permutation of {n} points"
                )));
            }
            if *m == 0 {
                return Err(Error::InvalidCurve(format!(
                    "multiplicity of {p:?} must be positive"
                )));
            }
            if symmetries[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::InvalidCurve(format!(
                    "permutation {p:?} listed twice"
                )));
            }
        }
        if !symmetries
            .iter()
            .any(|(p, _)| p.iter().enumerate().all(|(i, &j)| i == j))
        {
            return Err(Error::InvalidCurve(
                "the identity permutation must be listed".into(),
            ));
        }
        Ok(Self { genus, symmetries })
    }

    /// A curve with no point symmetries besides the identity.
    pub fn trivial(n: usize, genus: u32) -> Self {
        Self {
            genus,
            symmetries: vec![((0..n).collect(), 1)],
        }
    }

    /// Genus `g`.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of marked points.
    pub fn n(&self) -> usize {
        self.symmetries[0].0.len()
    }

    /// `(permutation, multiplicity)` pairs.
    pub fn symmetries(&self) -> &[(Vec<usize>, u64)] {
        &self.symmetries
    }

    /// Multiplicity of `perm` (0 if absent).
    pub fn multiplicity(&self, perm: &[usize]) -> u64 {
        self.symmetries
            .iter()
            .find(|(p, _)| p == perm)
            .map_or(0, |(_, m)| *m)
    }

    /// `|Aut(X, D)|` as seen numerically: the sum of multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.symmetries.iter().map(|(_, m)| m).sum()
    }
}

/// Classes sending degree `d_from` to `d_to`, over the given permutations.
fn candidates(
    r: usize,
    n: usize,
    d_from: i64,
    d_to: i64,
    perms: &[Vec<usize>],
) -> Vec<NumTransform> {
    let ri = r as i64;
    let mut out = Vec::new();
    for perm in perms {
        for sign in [Sign::Plus, Sign::Minus] {
            for hecke in (0..n).map(|_| 0..ri).multi_cartesian_product() {
                // s (r ℓ + d_from − |H|) = d_to  ⇔  r ℓ = s d_to − d_from + |H|
                let rhs = sign.value() * d_to - d_from + hecke.iter().sum::<i64>();
                if rhs % ri != 0 {
                    continue;
                }
                let t = NumTransform::new(perm.clone(), sign, rhs / ri, hecke);
                out.push(if r == 2 && sign == Sign::Minus {
                    reduce_dual_rank2(&t, d_from, r).expect("rank-2 dual class")
                } else {
                    t
                });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All normal-form classes `(π, s, ℓ, H)` with `π` a curve symmetry that fix
/// the degree `d`; for `r = 2` the dual classes are folded into dual-free
/// ones before deduplication. Sorted.
pub fn candidate_transforms(r: usize, n: usize, d: i64, curve: &CurveData) -> Vec<NumTransform> {
    let perms: Vec<Vec<usize>> = curve.symmetries.iter().map(|(p, _)| p.clone()).collect();
    candidates(r, n, d, d, &perms)
}

/// Result of [`automorphism_group`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutResult {
    /// Surviving numerical classes, sorted.
    pub classes: Vec<NumTransform>,
    /// `r^{2g}`, the number of lifts of each class.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub torsion_factor: BigInt,
    /// `r^{2g} · Σ_classes multiplicity(π)`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub order: BigInt,
    /// Strict genericity of the weights (no wall function is an integer).
    pub generic: bool,
    /// A wall relevant at this degree through the weights, if any. When
    /// present, the chamber filter is evaluated on a wall and the classes are
    /// only a numerical statement.
    pub relevant_wall: Option<Wall>,
    /// Genus from which numerical and geometric chambers agree:
    /// `max(chamber genus bound, 6)`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub genus_threshold: BigInt,
    /// Genus from which distinct torsion lifts act distinctly.
    pub lift_validity_genus: u32,
}

impl Serialize for NumTransform {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("NumTransform", 4)?;
        st.serialize_field("perm", &self.perm)?;
        st.serialize_field("sign", &self.sign.value())?;
        st.serialize_field("tdeg", &self.tdeg)?;
        st.serialize_field("hecke", &self.hecke)?;
        st.end()
    }
}

fn check_context(r: usize, n: usize, w: &WeightSystem) -> Result<()> {
    if w.rank() != r || w.n() != n {
        return Err(Error::ShapeMismatch(format!(
            "context (r, n) = ({r}, {n}) but weights have ({}, {})",
            w.rank(),
            w.n()
        )));
    }
    Ok(())
}

/// Numerical automorphism classes of the moduli space of rank `r`,
/// degree-`d` determinant, weights `w`, over a genus-`g` curve with the
/// given point symmetries.
///
/// Non-generic weights are not rejected: the result records strict
/// genericity and any relevant wall through `w`, so callers can decide how
/// much the chamber comparison means.
pub fn automorphism_group(
    r: usize,
    n: usize,
    d: i64,
    g: u32,
    w: &WeightSystem,
    curve: &CurveData,
) -> Result<AutResult> {
    check_context(r, n, w)?;
    if curve.n() != n {
        return Err(Error::ShapeMismatch(format!(
            "curve has {} points, weights {n}",
            curve.n()
        )));
    }
    let mut classes = Vec::new();
    for t in candidate_transforms(r, n, d, curve) {
        if same_numerical_chamber(r, &apply_to_weights(&t, w)?, w, d)? {
            classes.push(t);
        }
    }
    let torsion_factor = num::pow(BigInt::from(r), 2 * g as usize);
    let mult: u64 = classes.iter().map(|t| curve.multiplicity(&t.perm)).sum();
    let chamber_bound = genus_bounds(w, None, None, 0, 0, 0)?.chamber;
    Ok(AutResult {
        order: &torsion_factor * BigInt::from(mult),
        torsion_factor,
        classes,
        generic: is_generic(w).generic,
        relevant_wall: wall_through(r, w, d, true)?,
        genus_threshold: chamber_bound.max(BigInt::from(6)),
        lift_validity_genus: 4,
    })
}

/// Classes `T` with `T(d1) = d2` and `M̄(r, T(w1), d2) = M̄(r, w2, d2)`, with
/// `π` ranging over `curve_iso`. Empty means no numerical isomorphism.
pub fn iso_transforms(
    r: usize,
    n: usize,
    d1: i64,
    w1: &WeightSystem,
    d2: i64,
    w2: &WeightSystem,
    curve_iso: &[Vec<usize>],
) -> Result<Vec<NumTransform>> {
    check_context(r, n, w1)?;
    check_context(r, n, w2)?;
    if let Some(p) = curve_iso.iter().find(|p| p.len() != n || !is_perm(p)) {
        return Err(Error::InvalidCurve(format!(
            "{p:?} is not a permutation of {n} points"
        )));
    }
    let mut out = Vec::new();
    for t in candidates(r, n, d1, d2, curve_iso) {
        if same_numerical_chamber(r, &apply_to_weights(&t, w1)?, w2, d2)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Group orders in the concentrated chamber with `gcd(r, d) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcentratedOrders {
    /// `|Aut| = r^{2g} · |Aut(X, D)|`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub aut: BigInt,
    /// Order of the group of 3-birational automorphisms.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub threebir: BigInt,
    /// `threebir / aut`: `2^{|D|−1}` for `r = 2`, `2 r^{|D|−1}` for `r > 2`.
    #[serde(serialize_with = "crate::rational::as_string::display")]
    pub ratio: BigInt,
}

/// Orders of the automorphism and 3-birational automorphism groups for
/// concentrated weights (the caller asserts `gcd(r, d) = 1`).
pub fn concentrated_orders(
    g: u32,
    r: usize,
    n_d: usize,
    aut_order: u64,
) -> Result<ConcentratedOrders> {
    if r < 2 || n_d < 1 || aut_order < 1 {
        return Err(Error::OutOfRange(format!(
            "need r ≥ 2, |D| ≥ 1, |Aut(X, D)| ≥ 1; got r = {r}, |D| = {n_d}, |Aut| = {aut_order}"
        )));
    }
    let rb = BigInt::from(r);
    let torsion = num::pow(rb.clone(), 2 * g as usize);
    let aut = &torsion * BigInt::from(aut_order);
    let ratio = if r == 2 {
        num::pow(BigInt::from(2), n_d - 1)
    } else {
        BigInt::from(2) * num::pow(rb, n_d - 1)
    };
    Ok(ConcentratedOrders {
        threebir: &aut * &ratio,
        aut,
        ratio,
    })
}
