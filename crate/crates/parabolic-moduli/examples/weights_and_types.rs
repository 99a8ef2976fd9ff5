//! Weight systems, parabolic types and the quantities derived from them.
//!
//! ```text
//! cargo run --example weights_and_types
//! ```

use parabolic_moduli::prelude::*;
use parabolic_moduli::rational::fmt_q;
use parabolic_moduli::weights::{concentration_threshold, wall_value};

fn main() -> Result<()> {
    let alpha = WeightSystem::parse(
        3,
        &[("x", &["1/10", "1/2", "4/5"]), ("y", &["0", "1/3", "2/3"])],
    )?;
    println!("α = {alpha}");
    println!("normalized: {}", normalize(&alpha));
    println!("pdeg at d = 2: {}", pdeg(2, &alpha));

    // A rank-one subbundle meeting the first flag step at x and the last at y.
    let t = ParabolicType::from_code("100|001")?;
    println!("\ntype {} (subrank {}):", t.code(), t.subrank());
    println!("  owt   = {}", owt(&alpha, &t)?);
    println!("  s_min = {}", s_min(&alpha, &t)?);
    println!("  wall  = {}", wall_value(&alpha, &t)?);
    for d_f in [-1, 0, 1] {
        println!(
            "  deg F = {d_f} inside deg E = 2: {:?}",
            stability_check(3, 2, &alpha, 1, d_f, &t)?
        );
    }

    let gen = is_generic(&alpha);
    println!("\ngeneric: {}", gen.generic);
    if let Some(w) = gen.witness {
        println!(
            "  witness: r′ = {}, I = {:?}, level {}",
            w.subrank, w.subsets, w.level
        );
    }
    println!(
        "concentrated: {} (threshold {})",
        is_concentrated(&alpha),
        concentration_threshold(&alpha)
    );

    let small = WeightSystem::parse(
        3,
        &[
            ("x", &["0", "1/100", "1/50"]),
            ("y", &["0", "1/90", "1/60"]),
        ],
    )?;
    println!(
        "generic: {}, concentrated: {}  for {small}",
        is_generic(&small).generic,
        is_concentrated(&small)
    );

    let b = genus_bounds(&alpha, None, Some(&t), 1, 0, 1)?;
    let refined = b.refined.as_ref().map_or("—".to_string(), fmt_q);
    println!(
        "\ngenus bounds: chamber {}, refined {refined}, (l, m) {}, codim {}",
        b.chamber, b.lm, b.codim
    );

    println!("\ndimensions for g = 3, n = 2:");
    for r in 2..=5 {
        let dm = dims(3, 2, r)?;
        println!(
            "  r = {r}: fixed det {}, Hitchin pieces {:?} (total {})",
            dm.dim_fixed_det, dm.dim_w, dm.dim_w_total
        );
    }
    Ok(())
}
