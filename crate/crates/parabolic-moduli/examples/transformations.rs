//! The group of basic transformations acting on weights and degrees.
//!
//! ```text
//! cargo run --example transformations
//! ```

use parabolic_moduli::prelude::*;

fn main() -> Result<()> {
    let r = 3;
    let alpha = WeightSystem::parse(r, &[("x", &["1/8", "3/8", "7/8"])])?;
    println!("α = {alpha}");
    for h in 0..3 {
        println!("  SH_{h}x(α) = {}", hecke_weights(&alpha, &[h])?);
    }
    println!("  dual(α)   = {}", dual_weights(&alpha));

    // Dual after one Hecke step at x returns the weight class; at degree −1
    // the combined transformation is an involution.
    let t = NumTransform::new(vec![0], Sign::Minus, 1, vec![1]);
    println!("\nT = {t}");
    println!("  T(α)         = {}", apply_to_weights(&t, &alpha)?);
    println!("  T(d = −1)    = {}", apply_to_degree(&t, -1, r));
    println!("  T ∘ T        = {}", compose(&t, &t, r)?);
    println!("  T⁻¹          = {}", inverse(&t, r)?);

    // Composition on two points: relabel, tensor, Hecke.
    let a = NumTransform::new(vec![1, 0], Sign::Plus, 2, vec![1, 0]);
    let b = NumTransform::new(vec![0, 1], Sign::Minus, -1, vec![2, 1]);
    let ab = compose(&a, &b, r)?;
    println!("\na = {a}, b = {b}");
    println!("  a ∘ b = {ab}, in ST⁺: {}", is_in_st_plus(&ab));
    let w = WeightSystem::parse(
        r,
        &[("x", &["0", "1/5", "2/3"]), ("y", &["1/7", "1/2", "3/4"])],
    )?;
    println!("  (a ∘ b)(w)      = {}", apply_to_weights(&ab, &w)?);
    println!(
        "  a(b(w))         = {}",
        apply_to_weights(&a, &apply_to_weights(&b, &w)?)?
    );
    println!("  (a ∘ b)(d = 4)  = {}", apply_to_degree(&ab, 4, r));

    // In rank 2 a dual class can be rewritten without the dual.
    let dual = NumTransform::new(vec![0, 1], Sign::Minus, 0, vec![1, 0]);
    println!(
        "\nrank 2, d = 1: {dual} ~ {}",
        reduce_dual_rank2(&dual, 1, 2)?
    );
    Ok(())
}
