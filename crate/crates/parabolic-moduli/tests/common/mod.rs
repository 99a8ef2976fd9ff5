//! Seeded random generators and the property suites shared by the module
//! tests and the acceptance run.
#![allow(dead_code)]

use num::{BigInt, Integer};
use parabolic_moduli::chamber::m_fraction;
use parabolic_moduli::local_matrix::{minors_vanish, sigma_apply, tau_vec};
use parabolic_moduli::prelude::*;
use parabolic_moduli::rational::{floor_q, is_integer};
use parabolic_moduli::transform::word::{word_of, Generator, Rewriter};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random point tuple: `r` distinct multiples of `1/den` in `[lo, hi)`.
fn tuple(rng: &mut Rng8, r: usize, den: i64, lo: i64, hi: i64) -> Vec<Q> {
    let mut pool: Vec<i64> = (lo..hi).collect();
    pool.shuffle(rng);
    let mut v: Vec<i64> = pool[..r].to_vec();
    v.sort();
    v.into_iter().map(|k| q(k, den)).collect()
}

/// Random valid weights of rank `r` on `n` points.
pub fn weights(rng: &mut Rng8, r: usize, n: usize) -> WeightSystem {
    let den = rng.gen_range(r as i64 + 1..=48);
    let w = (0..n).map(|_| tuple(rng, r, den, 0, den)).collect();
    WeightSystem::from_tuples(r, w).unwrap()
}

/// Random strictly generic weights.
pub fn generic_weights(rng: &mut Rng8, r: usize, n: usize) -> WeightSystem {
    loop {
        let w = weights(rng, r, n);
        if is_generic(&w).generic {
            return w;
        }
    }
}

/// Random concentrated, strictly generic weights (spread `< 4/(n r²)`),
/// translated by a random offset.
pub fn concentrated_generic_weights(rng: &mut Rng8, r: usize, n: usize) -> WeightSystem {
    let scale = (n * r * r) as i64;
    loop {
        let k = rng.gen_range(r as i64 + 2..=40);
        let den = scale * k;
        let w: Vec<Vec<Q>> = (0..n)
            .map(|_| {
                let t = tuple(rng, r, den, 0, 4 * k);
                let off = q(rng.gen_range(0..=den - 4 * k), den);
                t.into_iter().map(|a| a + &off).collect()
            })
            .collect();
        let w = WeightSystem::from_tuples(r, w).unwrap();
        assert!(is_concentrated(&w));
        if is_generic(&w).generic {
            return w;
        }
    }
}

/// A random translate `α[ε]` (per-point shifts keeping weights in `[0, 1)`).
pub fn translate(rng: &mut Rng8, w: &WeightSystem) -> WeightSystem {
    let shifted = w
        .weights()
        .iter()
        .map(|t| {
            let lo = -t[0].clone();
            let hi = Q::from_integer(1.into()) - &t[t.len() - 1];
            let u = q(rng.gen_range(0..=1000), 1000);
            let e = &lo + (&hi - &lo) * u;
            let e = if &e + &t[t.len() - 1] >= Q::from_integer(1.into()) {
                lo.clone()
            } else {
                e
            };
            t.iter().map(|a| a + &e).collect()
        })
        .collect();
    w.with_weights(shifted).unwrap()
}

pub fn perm(rng: &mut Rng8, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A random normal-form transformation.
pub fn transform(rng: &mut Rng8, r: usize, n: usize) -> NumTransform {
    let sign = if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let hecke = (0..n).map(|_| rng.gen_range(0..r as i64)).collect();
    NumTransform::new(perm(rng, n), sign, rng.gen_range(-4..=4), hecke)
}

/// A random word of generators (Hecke entries may be negative or ≥ r).
pub fn word(rng: &mut Rng8, r: usize, n: usize, len: usize) -> Vec<Generator> {
    (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => Generator::Perm(perm(rng, n)),
            1 => Generator::Dual,
            2 => Generator::Tensor(rng.gen_range(-3..=3)),
            _ => Generator::Hecke(
                (0..n)
                    .map(|_| rng.gen_range(-(r as i64)..2 * r as i64))
                    .collect(),
            ),
        })
        .collect()
}

/// Independent inverse from the closed formula
/// `(π, +1, ℓ, H)⁻¹ = (π⁻¹, +1, −ℓ + n, r − H∘π)` (then reduced) and
/// `(π, −1, ℓ, H)⁻¹ = (π⁻¹, −1, ℓ, H∘π)`.
pub fn inverse_oracle(t: &NumTransform, r: usize) -> NumTransform {
    let n = t.n();
    let mut pinv = vec![0; n];
    for (i, &j) in t.perm.iter().enumerate() {
        pinv[j] = i;
    }
    let ri = r as i64;
    match t.sign {
        Sign::Minus => {
            let h = (0..n).map(|i| t.hecke[pinv[i]]).collect();
            NumTransform::new(pinv, Sign::Minus, t.tdeg, h)
        }
        Sign::Plus => {
            let raw: Vec<i64> = (0..n).map(|i| ri - t.hecke[pinv[i]]).collect();
            let carry: i64 = raw.iter().map(|h| h.div_euclid(ri)).sum();
            let h = raw.iter().map(|h| h.rem_euclid(ri)).collect();
            NumTransform::new(pinv, Sign::Plus, -t.tdeg + n as i64 - carry, h)
        }
    }
}

// ---------------------------------------------------------------- matrices

fn rand_poly(rng: &mut Rng8, max_deg: i64, min_exp: i64) -> Laurent {
    Laurent::from_terms((min_exp..=max_deg).map(|e| (e, q(rng.gen_range(-3..=3), 1))))
}

pub fn laurent(rng: &mut Rng8) -> Laurent {
    rand_poly(rng, 2, -1)
}

pub fn laurent_matrix(rng: &mut Rng8, rows: usize, cols: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(rows, cols, |_, _| laurent(rng))
}

/// A random polynomial matrix of z-degree ≤ 2 whose constant term is
/// `c0` (integer entries) and whose entries at positions where `lower` holds
/// have no constant term.
fn poly_matrix_with(rng: &mut Rng8, c0: &[Vec<i64>], lower_vanishes: bool) -> LaurentMatrix {
    let n = c0.len();
    LaurentMatrix::from_fn(n, n, |i, j| {
        let c = if lower_vanishes && i > j { 0 } else { c0[i][j] };
        let tail = rand_poly(rng, 2, 1);
        &Laurent::constant(q(c, 1)) + &tail
    })
}

fn int_det(m: &[Vec<i64>]) -> Q {
    LaurentMatrix::from_fn(m.len(), m.len(), |i, j| Laurent::constant(q(m[i][j], 1)))
        .det()
        .unwrap()
        .coeff(0)
}

/// Random `A ∈ ParEnd_n ∩ GL_n` over the local ring: below-diagonal entries
/// divisible by `z`, diagonal constant terms nonzero.
pub fn parabolic_invertible(rng: &mut Rng8, n: usize) -> LaurentMatrix {
    let c0: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        *[-2i64, -1, 1, 2, 3].choose(rng).unwrap()
                    } else {
                        rng.gen_range(-3..=3)
                    }
                })
                .collect()
        })
        .collect();
    let a = poly_matrix_with(rng, &c0, true);
    assert!(a.is_parabolic_invertible());
    a
}

/// Random `A ∈ GL_n` over the local ring with a unit strictly below the
/// diagonal (so `A ∉ ParEnd_n`).
pub fn non_parabolic_invertible(rng: &mut Rng8, n: usize) -> LaurentMatrix {
    loop {
        let c0: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let has_lower_unit = (0..n).any(|i| (0..i).any(|j| c0[i][j] != 0));
        if !has_lower_unit || int_det(&c0) == q(0, 1) {
            continue;
        }
        let a = poly_matrix_with(rng, &c0, false);
        assert!(!a.is_parabolic());
        return a;
    }
}

/// `P = ((0, I_{n−1}), (1, 0))`.
pub fn cyclic_perm_matrix(n: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(n, n, |i, j| {
        if j == (i + 1) % n {
            Laurent::one()
        } else {
            Laurent::zero()
        }
    })
}

/// The 16 × 16 exponent matrix for n = 4, as displayed in the source text.
pub fn xi4_display() -> Vec<Vec<i64>> {
    let a = [0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0];
    let b = [-1, -1, -1, -1, 0, -1, -1, -1, 0, 0, -1, -1, 0, 0, 0, -1];
    let pattern = "aaaa".to_string() + "baaa" + "bbaa" + "bbba";
    pattern
        .chars()
        .map(|c| if c == 'a' { a.to_vec() } else { b.to_vec() })
        .collect()
}

// ------------------------------------------------------------------ suites
//
// Each suite returns `Err(description)` on the first counterexample.

pub type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Group axioms, action compatibility and normal-form path independence.
pub fn group_suite(seed: u64, triples: usize, words: usize) -> Check {
    let mut g = rng(seed);
    for it in 0..triples {
        let r = g.gen_range(2..=4);
        let n = g.gen_range(1..=3);
        let (a, b, c) = (
            transform(&mut g, r, n),
            transform(&mut g, r, n),
            transform(&mut g, r, n),
        );
        let id = NumTransform::identity(n);
        let ab = compose(&a, &b, r).unwrap();
        let bc = compose(&b, &c, r).unwrap();
        let left = compose(&ab, &c, r).unwrap();
        let right = compose(&a, &bc, r).unwrap();
        ensure(left == right, || {
            format!("associativity #{it}: {a:?} {b:?} {c:?}")
        })?;
        ensure(
            compose(&a, &id, r).unwrap() == a && compose(&id, &a, r).unwrap() == a,
            || format!("identity #{it}: {a:?}"),
        )?;
        let ai = inverse(&a, r).unwrap();
        ensure(
            compose(&a, &ai, r).unwrap().is_identity()
                && compose(&ai, &a, r).unwrap().is_identity(),
            || format!("inverse #{it}: {a:?} -> {ai:?}"),
        )?;
        ensure(ai == inverse_oracle(&a, r), || {
            format!("inverse formula #{it}: {a:?}")
        })?;

        // Action compatibility on weights and degrees.
        let w = weights(&mut g, r, n);
        let d = g.gen_range(-6..=6);
        let lhs = apply_to_weights(&ab, &w).unwrap();
        let rhs = apply_to_weights(&a, &apply_to_weights(&b, &w).unwrap()).unwrap();
        ensure(lhs == rhs, || {
            format!("weight action #{it}: {a:?} {b:?} on {w:?}")
        })?;
        ensure(
            apply_to_degree(&ab, d, r) == apply_to_degree(&a, apply_to_degree(&b, d, r), r),
            || format!("degree action #{it}: {a:?} {b:?} at d = {d}"),
        )?;
        // Transformations preserve genericity.
        ensure(
            is_generic(&w).generic == is_generic(&apply_to_weights(&a, &w).unwrap()).generic,
            || format!("genericity #{it}: {a:?} on {w:?}"),
        )?;

        // Hecke modifications at distinct points commute.
        if n >= 2 {
            let (x, y) = (g.gen_range(0..n), g.gen_range(0..n));
            let e = |p: usize| {
                let mut h = vec![0; n];
                h[p] = 1;
                NumTransform::hecke_only(h)
            };
            ensure(
                compose(&e(x), &e(y), r).unwrap() == compose(&e(y), &e(x), r).unwrap(),
                || format!("Hecke commutation #{it} at ({x}, {y})"),
            )?;
        }

        // Translation subgroup: (ℓ + 1, H + r e_x) reduces to (ℓ, H).
        let rw = Rewriter::new(r);
        let base = NumTransform::new((0..n).collect(), Sign::Plus, a.tdeg, a.hecke.clone());
        let x = g.gen_range(0..n);
        let mut h = a.hecke.clone();
        h[x] += r as i64;
        let lifted = rw.to_transform(
            &rw.normalize(vec![Generator::Tensor(a.tdeg + 1), Generator::Hecke(h)]),
            n,
        );
        ensure(lifted == base, || {
            format!("translation triviality #{it}: {base:?} vs {lifted:?}")
        })?;
    }

    // Path independence of the rewriting system.
    for it in 0..words {
        let r = g.gen_range(2..=4);
        let n = g.gen_range(1..=3);
        let len = g.gen_range(1..=10);
        let wd = word(&mut g, r, n, len);
        let rw = Rewriter::new(r);
        let canonical = rw.normalize(wd.clone());
        for _ in 0..3 {
            let mut chooser = rng(g.gen());
            let other = rw.normalize_by(wd.clone(), |k| chooser.gen_range(0..k));
            ensure(other == canonical, || {
                format!("path independence #{it}: {wd:?}")
            })?;
        }
        // Re-normalizing the word of a normal form gives it back.
        let t = rw.to_transform(&canonical, n);
        ensure(rw.to_transform(&rw.normalize(word_of(&t)), n) == t, || {
            format!("normal form not fixed #{it}")
        })?;
    }
    Ok(())
}

const CHAMBER_SHAPES: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 1), (3, 2)];

/// Translation invariance, bounds, wall/invariant equivalence, stability ⇔ floor.
pub fn chamber_suite(seed: u64, pairs: usize) -> Check {
    let mut g = rng(seed);
    for it in 0..pairs {
        let (r, n) = CHAMBER_SHAPES[it % CHAMBER_SHAPES.len()];
        let d = g.gen_range(-5..=5);
        let w1 = generic_weights(&mut g, r, n);
        let w2 = generic_weights(&mut g, r, n);
        let v1 = m_vec(r, &w1, d).unwrap();

        ensure(m_vec(r, &translate(&mut g, &w1), d).unwrap() == v1, || {
            format!("translation #{it}: {w1:?}")
        })?;
        ensure(m_vec(r, &normalize(&w1), d).unwrap() == v1, || {
            format!("normalize #{it}: {w1:?}")
        })?;

        let (lo, hi) = m_bounds(r, n, d);
        ensure(
            v1.values
                .iter()
                .all(|(_, m)| Q::from_integer(m.clone()) > lo && Q::from_integer(m.clone()) <= hi),
            || format!("bounds #{it}: {v1:?}"),
        )?;

        let same = same_numerical_chamber(r, &w1, &w2, d).unwrap();
        let walls = walls_crossed(r, &w1, &w2, d, true).unwrap();
        ensure(same == walls.is_empty(), || {
            format!("walls vs invariant #{it}: {w1:?} {w2:?} d = {d}")
        })?;
        ensure(walls.iter().all(|w| w.relevant), || {
            format!("irrelevant wall reported #{it}")
        })?;

        // Stability against the floor characterization.
        let t = admissible_types(r, n)
            .nth(
                g.gen_range(
                    0..parabolic_moduli::chamber::admissible_count(r, n)
                        .try_into()
                        .unwrap(),
                ),
            )
            .unwrap();
        let m = m_value(r, &w1, d, &t).unwrap();
        let frac = m_fraction(r, &w1, d, &t).unwrap();
        let df: i64 = g.gen_range(-8..=8) + i64::try_from(m.clone()).unwrap();
        let verdict = stability_check(r, d, &w1, t.subrank(), df, &t).unwrap();
        let dfb = BigInt::from(df);
        debug_assert_eq!(floor_q(&frac), m);
        let expected = if dfb > m {
            Stability::Violated
        } else if dfb == m && is_integer(&frac) {
            Stability::Equality
        } else {
            Stability::Strict
        };
        ensure(verdict == expected, || {
            format!("stability #{it}: dF = {df}, M = {m}, fraction {frac}")
        })?;
        ensure(
            !(is_generic(&w1).generic && verdict == Stability::Equality),
            || format!("equality on generic weights #{it}"),
        )?;
    }
    Ok(())
}

/// Duality compatibility: `M(α^∨, −d, n̄ reversed) = −M(α, d, n̄) − 1` for
/// generic weights.
pub fn duality_check(seed: u64, count: usize) -> Check {
    let mut g = rng(seed);
    for it in 0..count {
        let (r, n) = CHAMBER_SHAPES[it % CHAMBER_SHAPES.len()];
        let w = generic_weights(&mut g, r, n);
        let d = g.gen_range(-5..=5);
        let dual = dual_weights(&w);
        for t in admissible_types(r, n) {
            let m = m_value(r, &w, d, &t).unwrap();
            let md = m_value(r, &dual, -d, &t.reversed()).unwrap();
            ensure(md == -m.clone() - 1, || {
                format!("duality #{it}: {w:?} d = {d} type {}", t.code())
            })?;
        }
    }
    Ok(())
}

/// `gcd(r, d) = 1` concentrated generic weights: every surviving class has
/// `H = 0` and the order is `r^{2g} |Aut(X, D)|`.
pub fn concentrated_suite(seed: u64, count: usize) -> Check {
    let mut g = rng(seed);
    for it in 0..count {
        let r = [2usize, 3][it % 2];
        let n = 1 + (it / 2) % 3;
        let d = loop {
            let d: i64 = g.gen_range(-9..=9);
            if d.gcd(&(r as i64)) == 1 {
                break d;
            }
        };
        let w = concentrated_generic_weights(&mut g, r, n);
        let genus = g.gen_range(2..=5);
        let curve = if n > 1 && g.gen_bool(0.5) {
            use itertools::Itertools;
            let perms: Vec<(Vec<usize>, u64)> = (0..n).permutations(n).map(|p| (p, 1)).collect();
            CurveData::new(genus, perms).unwrap()
        } else {
            CurveData::trivial(n, genus)
        };
        let res = automorphism_group(r, n, d, genus, &w, &curve).unwrap();
        ensure(
            res.classes.iter().all(|t| t.hecke.iter().all(|&h| h == 0)),
            || {
                format!(
                    "Hecke class survives #{it}: r = {r}, d = {d}, {w:?}: {:?}",
                    res.classes
                )
            },
        )?;
        let aut_order = curve.total_multiplicity();
        let expected = parabolic_moduli::autgroup::concentrated_orders(genus, r, n, aut_order)
            .unwrap()
            .aut;
        ensure(res.order == expected, || {
            format!("order #{it}: {} vs {expected}", res.order)
        })?;
        ensure(res.relevant_wall.is_none() && res.generic, || {
            format!("wall #{it}")
        })?;
    }
    Ok(())
}

/// Exact dimension identities over the grid `[2,20] × [1,8] × [2,8]`.
pub fn dims_suite() -> Check {
    for g in 2..=20 {
        for n in 1..=8 {
            for r in 2..=8 {
                let dm = dims(g, n, r).unwrap();
                let closed = (r * r - 1) * (g - 1) + n * (r * r - r) / 2;
                let sum: i64 = (2..=r).map(|k| k * (2 * g - 2) + (k - 1) * n - g + 1).sum();
                ensure(
                    dm.dim_w_total == closed && sum == closed && dm.dim_fixed_det == closed,
                    || format!("Hitchin base at (g, n, r) = ({g}, {n}, {r})"),
                )?;
                if r >= 3 {
                    let top = dim_nonreduced_stratum(g, n, r, 1).unwrap();
                    for d in 2..=r / 2 {
                        let other = dim_nonreduced_stratum(g, n, r, d).unwrap();
                        ensure(top > other, || {
                            format!("N^1 vs N^{d} at ({g}, {n}, {r}): {top} ≤ {other}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// σ correctness, Ξ consistency, functoriality, H power law, rank-one round
/// trips and the parabolic integrality dichotomy.
pub fn matrix_suite(seed: u64, rank1: usize, integrality: usize) -> Check {
    let mut g = rng(seed);
    ensure(xi_matrix(4).unwrap() == xi4_display(), || {
        "Ξ for n = 4 differs from the display".into()
    })?;
    for n in 2..=4 {
        let h = h_matrix(n);
        let hinv = h.inverse().unwrap();
        let p = cyclic_perm_matrix(n);
        let mp = mp_matrix(&h, &hinv).unwrap();
        ensure(mp == p.kron(&p), || format!("MP(H, H⁻¹) at n = {n}"))?;
        ensure(mp.pow(n as u32) == LaurentMatrix::identity(n * n), || {
            format!("MP(H, H⁻¹)^n at n = {n}")
        })?;
    }

    for it in 0..100 {
        let n = g.gen_range(2..=3);
        let (a, b) = (laurent_matrix(&mut g, n, n), laurent_matrix(&mut g, n, n));
        let kron = a.kron(&b.transpose());
        ensure(
            sigma_apply(&kron).unwrap() == &tau_vec(&a) * &tau_vec(&b).transpose(),
            || format!("σ #{it}"),
        )?;
        let maps = IndexMaps::new(n);
        let mp = mp_matrix(&a, &b).unwrap();
        ensure(mp == kron.map(|x, y, e| e.shift(maps.xi(x, y))), || {
            format!("Ξ consistency #{it}")
        })?;
        let (a2, b2) = (laurent_matrix(&mut g, n, n), laurent_matrix(&mut g, n, n));
        ensure(
            mp_matrix(&(&a * &a2), &(&b2 * &b)).unwrap() == &mp * &mp_matrix(&a2, &b2).unwrap(),
            || format!("functoriality #{it}"),
        )?;
    }

    for it in 0..rank1 {
        let rows = g.gen_range(1..=4);
        let cols = g.gen_range(1..=4);
        let m = if it % 2 == 0 {
            let c = laurent_matrix(&mut g, rows, 1);
            let r = laurent_matrix(&mut g, 1, cols);
            &c * &r
        } else {
            laurent_matrix(&mut g, rows, cols)
        };
        let oracle = minors_vanish(&m);
        match rank1_factor(&m) {
            Some((c, r)) => {
                ensure(oracle, || {
                    format!("rank-one #{it}: factored a matrix with a nonzero minor")
                })?;
                ensure(&c * &r == m, || format!("rank-one #{it}: product differs"))?;
            }
            None => ensure(!oracle, || {
                format!("rank-one #{it}: rejected a rank-one matrix {m:?}")
            })?,
        }
    }

    for it in 0..integrality {
        let n = g.gen_range(2..=3);
        let a = parabolic_invertible(&mut g, n);
        let rep = hecke_conjugation_check(&a, 12).unwrap();
        ensure(rep.integral && rep.a_parabolic, || {
            format!("parabolic A gives non-integral MP #{it}: {a:?}")
        })?;
        let b = non_parabolic_invertible(&mut g, n);
        let rep = hecke_conjugation_check(&b, 12).unwrap();
        ensure(!rep.integral, || {
            format!("non-parabolic A gives integral MP #{it}: {b:?}")
        })?;
    }
    Ok(())
}
