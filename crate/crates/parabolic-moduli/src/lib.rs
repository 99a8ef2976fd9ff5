//! Exact combinatorics of moduli spaces of full-flag parabolic vector bundles.
//!
//! Everything here is a *numerical shadow*: weight systems, parabolic types,
//! determinant degrees and the finite data describing basic transformations.
//! All arithmetic is exact (`BigRational` / `BigInt`); there is no floating
//! point anywhere in the library.
//!
//! The crate is organised in layers:
//!
//! - [`weights`] — weight systems, parabolic types, degrees, dimension counts,
//!   genericity, concentration and genus thresholds.
//! - [`transform`] — the group of basic transformations (point permutations,
//!   dualization, tensoring by line bundles, Hecke modifications): actions on
//!   weights and degrees, composition by word rewriting, inverses.
//! - [`chamber`] — the floor invariant `M`, the vector `M̄`, walls and
//!   numerical stability chambers.
//! - [`autgroup`] — automorphism and isomorphism classification by exhaustive
//!   candidate enumeration, plus the group-order formulas.
//! - [`local_matrix`] — Laurent-polynomial matrices over `Q[z, 1/z]`: rank-one
//!   factorization, Kronecker-structure detection, the exponent matrix `Ξ`,
//!   parabolic conjugation and the `H` matrix.
//! - [`fixtures`] — the three worked example families, evaluated claim by
//!   claim.
//! - [`cli`] — the JSON command-line front end used by the `parmod` binary.
//!
//! ```
//! use parabolic_moduli::prelude::*;
//!
//! let alpha = WeightSystem::parse(3, &[("x", &["1/8", "3/8", "7/8"])]).unwrap();
//! let t = NumTransform::new(vec![0], Sign::Minus, 1, vec![1]);
//! assert_eq!(apply_to_weights(&t, &alpha).unwrap(), normalize(&alpha));
//! assert_eq!(apply_to_degree(&t, -1, 3), -1);
//! assert!(compose(&t, &t, 3).unwrap().is_identity());
//! ```

pub mod autgroup;
pub mod chamber;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod local_matrix;
pub mod rational;
pub mod transform;
pub mod weights;

pub use error::{Error, Result};

/// Convenience re-exports of the most used types and functions.
pub mod prelude {
    pub use crate::autgroup::{
        automorphism_group, candidate_transforms, concentrated_orders, iso_transforms, AutResult,
        ConcentratedOrders, CurveData,
    };
    pub use crate::chamber::{
        admissible_types, m_bounds, m_value, m_vec, same_numerical_chamber, walls_crossed,
        ChamberInvariant, Wall,
    };
    pub use crate::error::{Error, Result};
    pub use crate::local_matrix::{
        h_matrix, hecke_conjugation_check, is_inner, is_pure_tensor, mp_matrix, rank1_factor,
        xi_matrix, IndexMaps, Laurent, LaurentMatrix,
    };
    pub use crate::rational::{q, Q};
    pub use crate::transform::{
        apply_to_degree, apply_to_weights, compose, dual_weights, hecke_weights, inverse,
        is_in_st_plus, permute_weights, reduce_dual_rank2, NumTransform, Sign,
    };
    pub use crate::weights::{
        dim_nonreduced_stratum, dims, genus_bounds, is_concentrated, is_generic, normalize, owt,
        pdeg, s_min, stability_check, t_number, Dims, GenusBounds, ParabolicType, Stability,
        WeightSystem,
    };
}
