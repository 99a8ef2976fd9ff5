//! Dense matrices over `Q[z, 1/z]`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::local_matrix::laurent::Laurent;
use crate::rational::Q;

/// A dense matrix of Laurent polynomials.
///
/// Most operations expect square matrices (stalks of endomorphism bundles);
/// rectangular shapes appear as the column and row factors of
/// [`crate::local_matrix::rank1_factor`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Laurent>,
}

impl LaurentMatrix {
    /// Build from rows; all rows must have the same positive length.
    pub fn new(rows: Vec<Vec<Laurent>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(
                "matrix rows must be nonempty and of equal length".into(),
            ));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from a function of `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Laurent) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    /// Build a constant matrix from rational entries.
    pub fn from_rationals(rows: Vec<Vec<Q>>) -> Result<Self> {
        Self::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(Laurent::constant).collect())
                .collect(),
        )
    }

    /// Build a constant matrix from integers.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Laurent::from(x)).collect())
                .collect(),
        )
    }

    /// `n × n` identity.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Laurent::one()
            } else {
                Laurent::zero()
            }
        })
    }

    /// `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Laurent::zero())
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Side length of a square matrix.
    pub fn size(&self) -> usize {
        self.rows
    }

    /// `rows == cols`.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)` (0-based).
    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.data[i * self.cols + j]
    }

    /// Mutable entry `(i, j)`.
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Laurent {
        &mut self.data[i * self.cols + j]
    }

    /// Rows as nested vectors.
    pub fn to_rows(&self) -> Vec<Vec<Laurent>> {
        self.data
            .chunks(self.cols)
            .map(<[Laurent]>::to_vec)
            .collect()
    }

    /// Apply `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(usize, usize, &Laurent) -> Laurent) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| f(i, j, self.get(i, j)))
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Multiply every entry by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map(|_, _, e| e.shift(k))
    }

    /// Multiply every entry by `c`.
    pub fn scale(&self, c: &Laurent) -> Self {
        self.map(|_, _, e| e * c)
    }

    /// Matrix product; errors on incompatible shapes.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Laurent::zero(), |acc, k| {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        }))
    }

    /// Entrywise sum; errors on shape mismatch.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(
                "cannot add matrices of different shapes".into(),
            ));
        }
        Ok(self.map(|i, j, e| e + other.get(i, j)))
    }

    /// `self^k` for square matrices.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// Kronecker product `A ⊗ B`: entry `(i·p + k, j·q + l) = a_ij b_kl`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q) * other.get(r % p, c % q)
        })
    }

    /// Determinant by fraction-free elimination (exact in `Q[z, 1/z]`).
    pub fn det(&self) -> Result<Laurent> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut m = self.to_rows();
        let mut sign = false;
        let mut prev = Laurent::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Laurent::zero());
            };
            if p != k {
                m.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("fraction-free step divides exactly");
                }
                m[i][k] = Laurent::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign { -det } else { det })
    }

    /// Adjugate `adj(A)` with `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(
                "adjugate of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = Self::from_fn(n - 1, n - 1, |a, b| {
                    self.get(if a < j { a } else { a + 1 }, if b < i { b } else { b + 1 })
                        .clone()
                });
                let c = minor.det()?;
                *out.get_mut(i, j) = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(out)
    }

    /// Inverse over `Q[z, 1/z]`; exists iff the determinant is a monomial.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det()?;
        let Some((c, e)) = det.as_monomial() else {
            return Err(Error::NotInvertible(format!(
                "determinant {det} is not a unit of Q[z, 1/z]"
            )));
        };
        let inv = Laurent::monomial(Q::from_integer(1.into()) / c, -e);
        Ok(self.adjugate()?.scale(&inv))
    }

    /// Minimum valuation over nonzero entries (`None` for the zero matrix).
    pub fn min_valuation(&self) -> Option<i64> {
        self.data.iter().filter_map(Laurent::valuation).min()
    }

    /// All entries have nonnegative valuation: the matrix is over `Q[z]`
    /// (modelling the local ring).
    pub fn is_integral(&self) -> bool {
        self.min_valuation().is_none_or(|v| v >= 0)
    }

    /// Integral with entries strictly below the diagonal divisible by `z`.
    pub fn is_parabolic(&self) -> bool {
        self.is_integral()
            && (0..self.rows).all(|i| {
                (0..i.min(self.cols)).all(|j| self.get(i, j).valuation().is_none_or(|v| v >= 1))
            })
    }

    /// Parabolic and invertible over the local ring: `ν_z(det) = 0`.
    pub fn is_parabolic_invertible(&self) -> bool {
        self.is_square()
            && self.is_parabolic()
            && self.det().ok().and_then(|d| d.valuation()) == Some(0)
    }

    /// `true` when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Laurent::is_zero)
    }

    /// Entrywise rational-valued check (no `z` anywhere).
    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|e| e.as_constant().is_some())
    }

    /// Value of each entry's coefficient of `z^0` (useful for tests).
    pub fn constant_terms(&self) -> Vec<Vec<Q>> {
        self.to_rows()
            .iter()
            .map(|r| r.iter().map(|e| e.coeff(0)).collect())
            .collect()
    }

    /// `true` if the matrix has no nonzero entries off the diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }
}

/// One bracketed row per line, entries right-aligned to a common width.
impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[{}]", row.join("  "))?;
        }
        Ok(())
    }
}

impl<'a> Mul<&'a LaurentMatrix> for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, other: &LaurentMatrix) -> LaurentMatrix {
        self.try_mul(other).expect("compatible shapes")
    }
}
