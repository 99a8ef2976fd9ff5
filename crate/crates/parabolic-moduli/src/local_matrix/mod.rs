//! Stalk-level matrix algebra at a marked point.
//!
//! The local ring at a parabolic point is modelled by `Q[z]` localized at
//! `(z)`; computations happen in `Q[z, 1/z]` and valuations are `z`-adic.
//! A matrix is *integral* when every entry has `ν_z ≥ 0` and *parabolic*
//! when, in addition, every entry strictly below the diagonal has
//! `ν_z ≥ 1`.
//!
//! Linear maps `X ↦ A X B` on `n × n` matrices are written in the basis
//! `τ(i, j) = (i − 1) n + j`, where they become `A ⊗ Bᵗ`. The bijection
//! `σ` rearranges an `n² × n²` matrix so that `σ(A ⊗ Bᵗ) = τ(A) · τ(B)ᵗ`,
//! turning Kronecker structure into rank one. The parabolic variant
//! `MP_{A,B}` conjugates by the below-diagonal `z`-twist and equals
//! `z^Ξ ∘ (A ⊗ Bᵗ)` entrywise, with
//! `Ξ[τ(i,j), τ(k,l)] = −[j < i] + [l < k]`.

pub mod laurent;
pub mod matrix;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;
pub use laurent::{poly_gcd, Laurent};
pub use matrix::LaurentMatrix;

/// The index bijections `τ`, `σ` and the exponent matrix `Ξ` for size `n`
/// (all indices 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexMaps {
    n: usize,
}

impl IndexMaps {
    /// Index maps for `n × n` matrices.
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `τ(i, j) = i n + j`.
    pub fn tau(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// `τ⁻¹(a) = (a / n, a mod n)`.
    pub fn tau_inv(&self, a: usize) -> (usize, usize) {
        (a / self.n, a % self.n)
    }

    /// `σ(τ(i,j), τ(k,l)) = (τ(i,k), τ(l,j))`.
    pub fn sigma(&self, a: usize, b: usize) -> (usize, usize) {
        let ((i, j), (k, l)) = (self.tau_inv(a), self.tau_inv(b));
        (self.tau(i, k), self.tau(l, j))
    }

    /// Inverse of [`IndexMaps::sigma`].
    pub fn sigma_inv(&self, a: usize, b: usize) -> (usize, usize) {
        let ((i, k), (l, j)) = (self.tau_inv(a), self.tau_inv(b));
        (self.tau(i, j), self.tau(k, l))
    }

    /// `Ξ[a, b]`.
    pub fn xi(&self, a: usize, b: usize) -> i64 {
        let ((i, j), (k, l)) = (self.tau_inv(a), self.tau_inv(b));
        -((j < i) as i64) + (l < k) as i64
    }
}

/// The `n² × n²` exponent matrix `Ξ` (entries in `{−1, 0, 1}`).
pub fn xi_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("Ξ needs n ≥ 2, got {n}")));
    }
    let maps = IndexMaps::new(n);
    Ok((0..n * n)
        .map(|a| (0..n * n).map(|b| maps.xi(a, b)).collect())
        .collect())
}

fn side(m: &LaurentMatrix) -> Result<usize> {
    let s = m.rows();
    let n = (1..=s).find(|k| k * k >= s).unwrap_or(0);
    if !m.is_square() || n * n != s {
        return Err(Error::ShapeMismatch(format!(
            "expected an n² × n² matrix, got {}×{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(n)
}

/// `σ(M)`: the entry of `M` at `(a, b)` moves to `σ(a, b)`.
pub fn sigma_apply(m: &LaurentMatrix) -> Result<LaurentMatrix> {
    let maps = IndexMaps::new(side(m)?);
    let s = m.rows();
    Ok(LaurentMatrix::from_fn(s, s, |a, b| {
        let (x, y) = maps.sigma_inv(a, b);
        m.get(x, y).clone()
    }))
}

/// `τ(A)`: the `n² × 1` column listing `A` row by row.
pub fn tau_vec(a: &LaurentMatrix) -> LaurentMatrix {
    let n = a.cols();
    LaurentMatrix::from_fn(a.rows() * n, 1, |k, _| a.get(k / n, k % n).clone())
}

/// `τ⁻¹`: reshape a vector of length `n²` (row or column) to `n × n`.
pub fn tau_inv_vec(v: &LaurentMatrix) -> Result<LaurentMatrix> {
    let len = v.rows() * v.cols();
    let n = (1..=len).find(|k| k * k >= len).unwrap_or(0);
    if v.rows().min(v.cols()) != 1 || n * n != len {
        return Err(Error::ShapeMismatch(format!(
            "a vector of length {len} is not τ of a square matrix"
        )));
    }
    let entry = |k: usize| {
        if v.cols() == 1 {
            v.get(k, 0)
        } else {
            v.get(0, k)
        }
    };
    Ok(LaurentMatrix::from_fn(n, n, |i, j| {
        entry(i * n + j).clone()
    }))
}

/// Multiply entry `(a, b)` by `z^{sign · Ξ[a, b]}`.
pub fn z_xi(m: &LaurentMatrix, sign: i64) -> Result<LaurentMatrix> {
    let maps = IndexMaps::new(side(m)?);
    Ok(m.map(|a, b, e| e.shift(sign * maps.xi(a, b))))
}

/// Matrix of `X ↦ A X B` in the `τ` basis: `A ⊗ Bᵗ`.
pub fn conj_matrix(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    check_pair(a, b)?;
    Ok(a.kron(&b.transpose()))
}

fn check_pair(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<()> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "need two square matrices of one size, got {}×{} and {}×{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

/// `MP_{A,B}`: the matrix of `X ↦ Z_{−Ξ_T}(A · Z_{Ξ_T}(X) · B)` in the `τ`
/// basis, i.e. `z^Ξ ∘ (A ⊗ Bᵗ)`.
pub fn mp_matrix(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    z_xi(&conj_matrix(a, b)?, 1)
}

/// Rank-one factorization `M = A · B` (column times row).
///
/// Returns `None` exactly when some 2 × 2 minor of `M` is nonzero. For
/// polynomial input the factors are polynomial, obtained by splitting the
/// pivot through gcds of its row and column; Laurent input is first cleared
/// of negative powers of `z`. The factorization is unique up to
/// `(A, B) ↦ (ρA, ρ⁻¹B)`.
pub fn rank1_factor(m: &LaurentMatrix) -> Option<(LaurentMatrix, LaurentMatrix)> {
    let (rows, cols) = (m.rows(), m.cols());
    let Some(v) = m.min_valuation() else {
        return Some((LaurentMatrix::zeros(rows, 1), LaurentMatrix::zeros(1, cols)));
    };
    let shift = v.min(0);
    let p = m.shift(-shift);
    let (i0, j0) = (0..rows * cols)
        .map(|k| (k / cols, k % cols))
        .find(|&(i, j)| !p.get(i, j).is_zero())?;
    let gcd_of =
        |it: &mut dyn Iterator<Item = &Laurent>| it.fold(Laurent::zero(), |g, x| poly_gcd(&g, x));
    let g_col = gcd_of(&mut (0..rows).filter(|&i| i != i0).map(|i| p.get(i, j0)));
    let pivot = p.get(i0, j0);
    let b_piv = poly_gcd(pivot, &g_col);
    let a_piv = pivot.div_exact(&b_piv)?;
    let col = LaurentMatrix::from_fn(rows, 1, |i, _| {
        if i == i0 {
            a_piv.clone()
        } else {
            p.get(i, j0).div_exact(&b_piv).unwrap_or_default()
        }
    });
    let mut row_ok = true;
    let row = LaurentMatrix::from_fn(1, cols, |_, j| {
        if j == j0 {
            b_piv.clone()
        } else {
            p.get(i0, j).div_exact(&a_piv).unwrap_or_else(|| {
                row_ok = false;
                Laurent::zero()
            })
        }
    });
    if !row_ok || &col * &row != p {
        return None;
    }
    Some((col.shift(shift), row))
}

/// Brute-force check that every 2 × 2 minor vanishes.
pub fn minors_vanish(m: &LaurentMatrix) -> bool {
    let (rows, cols) = (m.rows(), m.cols());
    (0..rows).all(|i| {
        (i + 1..rows).all(|k| {
            (0..cols).all(|j| {
                (j + 1..cols).all(|l| m.get(i, j) * m.get(k, l) == m.get(i, l) * m.get(k, j))
            })
        })
    })
}

/// `M` is the matrix of some `X ↦ A X B`: `σ(M)` has rank at most one.
pub fn is_pure_tensor(m: &LaurentMatrix) -> Result<bool> {
    Ok(rank1_factor(&sigma_apply(m)?).is_some())
}

/// If `M` is the matrix of `X ↦ A X A⁻¹`, return `A` (unique up to a unit
/// scalar); the returned `A` satisfies `A · B = I` for the matching `B`.
pub fn is_inner(m: &LaurentMatrix) -> Result<Option<LaurentMatrix>> {
    let n = side(m)?;
    let Some((col, row)) = rank1_factor(&sigma_apply(m)?) else {
        return Ok(None);
    };
    let maps = IndexMaps::new(n);
    let entry = |p: (usize, usize), q: (usize, usize)| {
        let (x, y) = maps.sigma_inv(maps.tau(p.0, p.1), maps.tau(q.0, q.1));
        m.get(x, y).clone()
    };
    for i in 0..n {
        for j in 0..n {
            let delta = if i == j {
                Laurent::one()
            } else {
                Laurent::zero()
            };
            // (AB)_ij = Σ_k a_ik b_kj and (BA)_ij = Σ_k b_ik a_kj, read off M.
            let ab = (0..n).fold(Laurent::zero(), |s, k| &s + &entry((i, k), (k, j)));
            let ba = (0..n).fold(Laurent::zero(), |s, k| &s + &entry((k, j), (i, k)));
            if ab != delta || ba != delta {
                return Ok(None);
            }
        }
    }
    let a = tau_inv_vec(&col)?;
    debug_assert_eq!(&a * &tau_inv_vec(&row)?, LaurentMatrix::identity(n));
    Ok(Some(a))
}

/// The matrix `H` with ones on the superdiagonal and `z` in the bottom-left
/// corner; `Hⁿ = z I` and `det H = ±z`.
pub fn h_matrix(n: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            Laurent::one()
        } else if i == n - 1 && j == 0 {
            Laurent::z()
        } else {
            Laurent::zero()
        }
    })
}

/// Report of [`hecke_conjugation_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeReport {
    /// Matrix size `n`.
    pub n: usize,
    /// `ν_z(det A)`.
    pub det_valuation: i64,
    /// Smallest exact valuation among the nonzero entries of `MP_{A,A⁻¹}`.
    pub min_valuation: Option<i64>,
    /// Every entry of `MP_{A,A⁻¹}` has `ν_z ≥ 0`.
    pub integral: bool,
    /// `A ∈ ParEnd_n ∩ GL_n` over the local ring.
    pub a_parabolic: bool,
    /// `k = ν_z(det A) mod n`.
    pub k: i64,
    /// `(ν_z(det A) − k) / n`, the valuation of the scalar `ρ` in `A = ρ A′ H^k`.
    pub scalar_valuation: i64,
    /// Whether `A′ = z^{−ν(ρ)} A H^{−k}` is parabolic-invertible.
    pub decomposition_parabolic: bool,
    /// Retained precision: `truncated` keeps exponents `< precision`.
    pub precision: i64,
    /// `MP_{A,A⁻¹}` with each entry's power series truncated below `z^precision`.
    #[serde(skip)]
    pub truncated: LaurentMatrix,
}

/// Examine `MP_{A, A⁻¹}` for `A ∈ GL_n(Q(z))` with Laurent entries.
///
/// Valuations are exact: with `det A = z^v u(z)`, `u(0) ≠ 0`, every entry
/// is a Laurent polynomial divided by `det A`, so its valuation is that of
/// the numerator minus `v`. The entries themselves are returned as power
/// series truncated below `z^precision`; if some nonzero entry has valuation
/// `≥ precision` the truncation would erase it and the call fails.
pub fn hecke_conjugation_check(a: &LaurentMatrix, precision: i64) -> Result<HeckeReport> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(
            "hecke check needs a square matrix".into(),
        ));
    }
    let n = a.rows();
    let det = a.det()?;
    let Some(v) = det.valuation() else {
        return Err(Error::NotInvertible("det A = 0".into()));
    };
    let adj = a.adjugate()?;
    // Numerators of MP_{A, A^{-1}} = z^Ξ (A ⊗ adj(A)ᵗ) / det A.
    let numer = z_xi(&a.kron(&adj.transpose()), 1)?;
    let vals: Vec<i64> = (0..n * n)
        .flat_map(|x| (0..n * n).map(move |y| (x, y)))
        .filter_map(|(x, y)| numer.get(x, y).valuation().map(|e| e - v))
        .collect();
    let min_valuation = vals.iter().copied().min();
    if let Some(&worst) = vals.iter().max() {
        if worst >= precision {
            return Err(Error::PrecisionExhausted(format!(
                "an entry has valuation {worst}, so truncation below z^{precision} would erase it"
            )));
        }
    }
    let unit = det.unit_part();
    let len = (precision - min_valuation.unwrap_or(precision)).max(0) as usize;
    let series = Laurent::from_dense(0, unit.inverse_series(len));
    let truncated = numer.map(|_, _, e| e.shift(-v).mul_below(&series, precision));

    let ni = n as i64;
    let k = v.rem_euclid(ni);
    let scalar_valuation = (v - k) / ni;
    let h_neg_k = if k == 0 {
        LaurentMatrix::identity(n)
    } else {
        h_matrix(n).pow((ni - k) as u32).shift(-1)
    };
    let a_prime = (a * &h_neg_k).shift(-scalar_valuation);
    Ok(HeckeReport {
        n,
        det_valuation: v,
        min_valuation,
        integral: min_valuation.is_none_or(|m| m >= 0),
        a_parabolic: a.is_parabolic_invertible(),
        k,
        scalar_valuation,
        decomposition_parabolic: a_prime.is_parabolic_invertible(),
        precision,
        truncated,
    })
}

/// Convenience for tests and examples: a constant rational matrix.
pub fn constant_matrix(rows: Vec<Vec<Q>>) -> Result<LaurentMatrix> {
    LaurentMatrix::from_rationals(rows)
}
