//! Automorphism and isomorphism classes by exhaustive candidate search.
//!
//! ```text
//! cargo run --example automorphisms
//! ```

use parabolic_moduli::fixtures::{rank2_swap_weights, rank3_weights};
use parabolic_moduli::prelude::*;

fn report(title: &str, res: &AutResult) {
    println!("{title}");
    for t in &res.classes {
        println!("  {t}");
    }
    println!(
        "  order {} (= {} lifts per class), generic {}",
        res.order, res.torsion_factor, res.generic
    );
    if let Some(w) = &res.relevant_wall {
        println!(
            "  on the relevant wall r′ = {}, I = {:?}, m = {}",
            w.subrank, w.subsets, w.level
        );
    }
}

fn main() -> Result<()> {
    // One point, rank 3, degree −1: the identity and a dual-Hecke involution.
    let g = 4;
    let w3 = rank3_weights(&q(1, 20))?;
    report(
        &format!("rank 3, α = {w3}, d = −1, g = {g}:"),
        &automorphism_group(3, 1, -1, g, &w3, &CurveData::trivial(1, g))?,
    );

    // Two points exchanged by the curve, rank 2.
    let swap = CurveData::new(3, vec![(vec![0, 1], 1), (vec![1, 0], 1)])?;
    let w2 = rank2_swap_weights(&q(1, 10), &q(7, 10))?;
    report(
        &format!("\nrank 2, α = {w2}, d = 0, g = 3:"),
        &automorphism_group(2, 2, 0, 3, &w2, &swap)?,
    );

    // Concentrated generic weights with gcd(r, d) = 1: only H = 0 survives.
    let conc = WeightSystem::parse(
        3,
        &[("x", &["0", "1/97", "3/97"]), ("y", &["0", "2/89", "3/89"])],
    )?;
    let full = CurveData::new(2, vec![(vec![0, 1], 1), (vec![1, 0], 1)])?;
    let res = automorphism_group(3, 2, 1, 2, &conc, &full)?;
    report(&format!("\nconcentrated, α = {conc}, d = 1, g = 2:"), &res);
    let orders = concentrated_orders(2, 3, 2, full.total_multiplicity())?;
    println!(
        "  formula: |Aut| = {}, 3-birational {}, ratio {}",
        orders.aut, orders.threebir, orders.ratio
    );

    // Isomorphisms between two moduli spaces.
    let a = WeightSystem::parse(2, &[("x", &["0", "1/3"])])?;
    let b = hecke_weights(&a, &[1])?;
    let isos = iso_transforms(2, 1, 0, &a, -1, &b, &[vec![0]])?;
    println!("\nisomorphisms (d = 0, {a}) → (d = −1, {b}):");
    for t in isos {
        println!("  {t}");
    }
    Ok(())
}
