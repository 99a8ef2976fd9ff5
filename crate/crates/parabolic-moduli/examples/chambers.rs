//! The chamber invariant M̄, walls, and a walk across weight space.
//!
//! ```text
//! cargo run --example chambers
//! ```

use parabolic_moduli::prelude::*;

fn main() -> Result<()> {
    let (r, d) = (2, 1);
    let alpha = WeightSystem::parse(r, &[("x", &["0", "2/5"]), ("y", &["0", "1/4"])])?;
    let beta = WeightSystem::parse(r, &[("x", &["0", "4/5"]), ("y", &["0", "3/4"])])?;

    let inv = m_vec(r, &alpha, d)?;
    let (lo, hi) = m_bounds(r, alpha.n(), d);
    println!("M̄(α) at d = {d}  (every value in ({lo}, {hi}]):");
    for (t, m) in &inv.values {
        println!("  {}  M = {m}", t.code());
    }

    println!(
        "\nsame chamber as β: {}",
        same_numerical_chamber(r, &alpha, &beta, d)?
    );
    for w in walls_crossed(r, &alpha, &beta, d, true)? {
        println!(
            "  crosses r′ = {}, I = {:?}, m = {}",
            w.subrank, w.subsets, w.level
        );
    }

    // Walk along the segment from α to β and record each change of chamber.
    println!("\nwalking α → β in 20 steps:");
    let mut prev = inv.values.clone();
    for k in 1..=20 {
        let s = q(k, 20);
        let pts: Vec<Vec<Q>> = alpha
            .weights()
            .iter()
            .zip(beta.weights())
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + (y - x) * &s).collect())
            .collect();
        let w = alpha.with_weights(pts)?;
        let cur = m_vec(r, &w, d)?.values;
        if cur != prev {
            println!("  step {k:>2}: new chamber at {w}");
            prev = cur;
        }
    }
    Ok(())
}
