//! Words in the generators of the transformation group and their rewriting
//! to canonical order `Σ ∘ D ∘ T ∘ SH`.
//!
//! A word `[g_1, …, g_k]` denotes the composite `g_1 ∘ … ∘ g_k` (so `g_k`
//! acts first). The rewriting rules are:
//!
//! | redex                 | result                                   |
//! |-----------------------|------------------------------------------|
//! | `Σ_a Σ_b`             | `Σ_{a∘b}`                                |
//! | `D D`                 | (empty)                                  |
//! | `T_a T_b`             | `T_{a+b}`                                |
//! | `SH_A SH_B`           | `SH_{A+B}`, then reduced                 |
//! | `D Σ`                 | `Σ D`                                    |
//! | `T_ℓ Σ`               | `Σ T_ℓ`                                  |
//! | `SH_H Σ_σ`            | `Σ_σ SH_{H∘σ}`                           |
//! | `T_ℓ D`               | `D T_{−ℓ}`                               |
//! | `SH_H D` (reduced H)  | `D T_{#supp H} SH_{H′}`, `h′ = r − h` on the support |
//! | `SH T`                | `T SH`                                   |
//! | `SH_H`, some `h ∉ [0, r)` | `T_{−Σq} SH_{H − r q}`, `q = ⌊h / r⌋` |
//! | `Σ_id`, `T_0`, `SH_0` | (empty)                                  |
//!
//! The system terminates and is confluent; [`Rewriter::normalize_by`] lets a
//! caller pick any redex at every step, which the test-suite uses to check
//! that every rewriting path reaches the same normal form.

use crate::transform::{perm_compose, NumTransform, Sign};

/// One generator of the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Relabel points: the data at point `i` moves to point `perm[i]`.
    Perm(Vec<usize>),
    /// Dualization `D⁻`.
    Dual,
    /// Tensor by a line bundle of the given degree.
    Tensor(i64),
    /// Hecke modification with multiplicity `h_x` at each point (any integer;
    /// negative entries denote inverse modifications).
    Hecke(Vec<i64>),
}

impl Generator {
    fn rank(&self) -> u8 {
        match self {
            Generator::Perm(_) => 0,
            Generator::Dual => 1,
            Generator::Tensor(_) => 2,
            Generator::Hecke(_) => 3,
        }
    }

    /// The inverse generator.
    pub fn inverse(&self) -> Generator {
        match self {
            Generator::Perm(p) => Generator::Perm(crate::transform::perm_inverse(p)),
            Generator::Dual => Generator::Dual,
            Generator::Tensor(l) => Generator::Tensor(-l),
            Generator::Hecke(h) => Generator::Hecke(h.iter().map(|x| -x).collect()),
        }
    }
}

/// Which rule a redex triggers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Drop an identity generator.
    DropIdentity,
    /// Bring Hecke multiplicities into `[0, r)`, absorbing quotients into `T`.
    ReduceHecke,
    /// Merge two adjacent generators of the same kind.
    Merge,
    /// Swap two adjacent out-of-order generators.
    Swap,
}

/// A rewrite site: the rule and the index of its (first) generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Redex {
    /// Rule to apply.
    pub rule: Rule,
    /// Index of the generator (or of the left generator of a pair).
    pub pos: usize,
}

/// Rewriting engine for a fixed rank `r`.
#[derive(Clone, Copy, Debug)]
pub struct Rewriter {
    r: i64,
}

impl Rewriter {
    /// Engine for rank `r ≥ 2`.
    pub fn new(r: usize) -> Self {
        Self { r: r as i64 }
    }

    fn is_identity(g: &Generator) -> bool {
        match g {
            Generator::Perm(p) => p.iter().enumerate().all(|(i, &j)| i == j),
            Generator::Dual => false,
            Generator::Tensor(l) => *l == 0,
            Generator::Hecke(h) => h.iter().all(|&x| x == 0),
        }
    }

    fn hecke_reduced(&self, h: &[i64]) -> bool {
        h.iter().all(|&x| (0..self.r).contains(&x))
    }

    /// Every redex of `word`, left to right.
    pub fn redexes(&self, word: &[Generator]) -> Vec<Redex> {
        let mut out = Vec::new();
        for (pos, g) in word.iter().enumerate() {
            if Self::is_identity(g) {
                out.push(Redex {
                    rule: Rule::DropIdentity,
                    pos,
                });
            } else if let Generator::Hecke(h) = g {
                if !self.hecke_reduced(h) {
                    out.push(Redex {
                        rule: Rule::ReduceHecke,
                        pos,
                    });
                }
            }
        }
        for pos in 0..word.len().saturating_sub(1) {
            let (a, b) = (&word[pos], &word[pos + 1]);
            if a.rank() == b.rank() {
                out.push(Redex {
                    rule: Rule::Merge,
                    pos,
                });
            } else if a.rank() > b.rank() {
                let blocked = matches!((a, b), (Generator::Hecke(h), Generator::Dual) if !self.hecke_reduced(h));
                if !blocked {
                    out.push(Redex {
                        rule: Rule::Swap,
                        pos,
                    });
                }
            }
        }
        out.sort_by_key(|r| (r.pos, r.rule as u8));
        out
    }

    /// Apply one redex in place.
    pub fn apply(&self, word: &mut Vec<Generator>, redex: Redex) {
        let i = redex.pos;
        let replacement: Vec<Generator> = match redex.rule {
            Rule::DropIdentity => vec![],
            Rule::ReduceHecke => {
                let Generator::Hecke(h) = &word[i] else {
                    unreachable!("not a Hecke generator")
                };
                self.reduce(h)
            }
            Rule::Merge => match (&word[i], &word[i + 1]) {
                (Generator::Perm(a), Generator::Perm(b)) => {
                    vec![Generator::Perm(perm_compose(a, b))]
                }
                (Generator::Dual, Generator::Dual) => vec![],
                (Generator::Tensor(a), Generator::Tensor(b)) => vec![Generator::Tensor(a + b)],
                (Generator::Hecke(a), Generator::Hecke(b)) => {
                    let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    self.reduce(&sum)
                }
                _ => unreachable!("merge of different kinds"),
            },
            Rule::Swap => match (&word[i], &word[i + 1]) {
                (Generator::Dual, p @ Generator::Perm(_)) => vec![p.clone(), Generator::Dual],
                (t @ Generator::Tensor(_), p @ Generator::Perm(_)) => vec![p.clone(), t.clone()],
                (Generator::Hecke(h), Generator::Perm(s)) => {
                    let pulled = s.iter().map(|&j| h[j]).collect();
                    vec![Generator::Perm(s.clone()), Generator::Hecke(pulled)]
                }
                (Generator::Tensor(l), Generator::Dual) => {
                    vec![Generator::Dual, Generator::Tensor(-l)]
                }
                (Generator::Hecke(h), Generator::Dual) => {
                    let support = h.iter().filter(|&&x| x > 0).count() as i64;
                    let flipped = h
                        .iter()
                        .map(|&x| if x > 0 { self.r - x } else { 0 })
                        .collect();
                    vec![
                        Generator::Dual,
                        Generator::Tensor(support),
                        Generator::Hecke(flipped),
                    ]
                }
                (h @ Generator::Hecke(_), t @ Generator::Tensor(_)) => vec![t.clone(), h.clone()],
                _ => unreachable!("swap of in-order pair"),
            },
        };
        let width = if matches!(redex.rule, Rule::Merge | Rule::Swap) {
            2
        } else {
            1
        };
        word.splice(i..i + width, replacement);
    }

    fn reduce(&self, h: &[i64]) -> Vec<Generator> {
        let q: Vec<i64> = h.iter().map(|&x| x.div_euclid(self.r)).collect();
        let rest = h.iter().zip(&q).map(|(x, qx)| x - self.r * qx).collect();
        vec![
            Generator::Tensor(-q.iter().sum::<i64>()),
            Generator::Hecke(rest),
        ]
    }

    /// Rewrite to normal form, always choosing the leftmost redex.
    pub fn normalize(&self, word: Vec<Generator>) -> Vec<Generator> {
        self.normalize_by(word, |_| 0)
    }

    /// Rewrite to normal form; `choose(k)` picks which of the `k` available
    /// redexes (in [`Rewriter::redexes`] order) to apply next.
    pub fn normalize_by(
        &self,
        mut word: Vec<Generator>,
        mut choose: impl FnMut(usize) -> usize,
    ) -> Vec<Generator> {
        loop {
            let redexes = self.redexes(&word);
            if redexes.is_empty() {
                return word;
            }
            let k = choose(redexes.len()).min(redexes.len() - 1);
            self.apply(&mut word, redexes[k]);
        }
    }

    /// Read a normal-form word as a transformation on `n` points.
    ///
    /// Panics if `word` is not in normal form.
    pub fn to_transform(&self, word: &[Generator], n: usize) -> NumTransform {
        assert!(self.redexes(word).is_empty(), "word is not in normal form");
        let mut t = NumTransform::identity(n);
        for g in word {
            match g {
                Generator::Perm(p) => t.perm = p.clone(),
                Generator::Dual => t.sign = Sign::Minus,
                Generator::Tensor(l) => t.tdeg = *l,
                Generator::Hecke(h) => t.hecke = h.clone(),
            }
        }
        t
    }
}

/// The canonical word `Σ_π D^s T_ℓ SH_H` of a transformation (identity
/// factors included; they are dropped by rewriting).
pub fn word_of(t: &NumTransform) -> Vec<Generator> {
    let mut w = vec![Generator::Perm(t.perm.clone())];
    if t.sign == Sign::Minus {
        w.push(Generator::Dual);
    }
    w.push(Generator::Tensor(t.tdeg));
    w.push(Generator::Hecke(t.hecke.clone()));
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_hecke_at_rank_two_is_a_twist() {
        let rw = Rewriter::new(2);
        let w = rw.normalize(vec![Generator::Hecke(vec![1]), Generator::Hecke(vec![1])]);
        assert_eq!(w, vec![Generator::Tensor(-1)]);
    }

    #[test]
    fn hecke_past_dual_flips_multiplicities() {
        let rw = Rewriter::new(3);
        let w = rw.normalize(vec![Generator::Hecke(vec![1, 0]), Generator::Dual]);
        assert_eq!(
            w,
            vec![
                Generator::Dual,
                Generator::Tensor(1),
                Generator::Hecke(vec![2, 0])
            ]
        );
    }

    #[test]
    fn negative_hecke_reduces() {
        let rw = Rewriter::new(3);
        let w = rw.normalize(vec![Generator::Hecke(vec![-1])]);
        assert_eq!(w, vec![Generator::Tensor(1), Generator::Hecke(vec![2])]);
    }
}
