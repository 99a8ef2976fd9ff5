//! Laurent-polynomial matrices: Ξ, the parabolic conjugation matrix, rank-one
//! factorization and the Hecke conjugation check.
//!
//! ```text
//! cargo run --example local_matrices
//! ```

use parabolic_moduli::prelude::*;

fn main() -> Result<()> {
    println!("Ξ for n = 2:");
    for row in xi_matrix(2)? {
        println!("  {row:?}");
    }

    let h = h_matrix(3);
    println!("\nH (n = 3):\n{h}");
    let mp = mp_matrix(&h, &h.inverse()?)?;
    let p = LaurentMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])?;
    println!("MP(H, H⁻¹):\n{mp}");
    println!(
        "equals P ⊗ P: {}, pure tensor: {}",
        mp == p.kron(&p),
        is_pure_tensor(&mp)?
    );
    if let Some(p) = is_inner(&mp)? {
        println!("recovered conjugating matrix (up to scalar):\n{p}");
    }

    let z = Laurent::z();
    let one = Laurent::one();
    let col = LaurentMatrix::new(vec![vec![z.clone()], vec![&one + &z], vec![one.clone()]])?;
    let row = LaurentMatrix::new(vec![vec![&one - &z, z.pow(2), Laurent::constant(q(3, 2))]])?;
    let m = &col * &row;
    println!("rank-one input:\n{m}");
    match rank1_factor(&m) {
        Some((a, b)) => println!("column:\n{a}row:\n{b}"),
        None => println!("not rank one"),
    }
    println!(
        "identity rank one? {}",
        rank1_factor(&LaurentMatrix::identity(2)).is_some()
    );

    // A parabolic-invertible matrix times H² keeps the conjugation integral
    // and the Hecke power is read off the determinant valuation.
    let a = LaurentMatrix::new(vec![
        vec![Laurent::constant(q(2, 1)), &one + &z, Laurent::zero()],
        vec![z.clone(), one.clone(), z.pow(2)],
        vec![z.pow(3), z.clone(), Laurent::constant(q(-1, 1))],
    ])?;
    let rep = hecke_conjugation_check(&(&a * &h.pow(2)), 8)?;
    println!(
        "\nA·H²: det valuation {}, integral {}, k = {}, A′ parabolic {}",
        rep.det_valuation, rep.integral, rep.k, rep.decomposition_parabolic
    );
    let bad = LaurentMatrix::from_ints(&[&[0, 1], &[1, 0]])?;
    let rep = hecke_conjugation_check(&bad, 8)?;
    println!(
        "swap matrix: integral {}, minimum valuation {:?}",
        rep.integral, rep.min_valuation
    );
    Ok(())
}
