//! Evaluate the three worked example families and print each claim.
//!
//! ```text
//! cargo run --example fixtures_report
//! ```

use parabolic_moduli::fixtures;

fn main() {
    let claims = fixtures::run();
    let mut family = String::new();
    for c in &claims {
        if c.family != family {
            family = c.family.clone();
            println!("\n[{family}]");
        }
        println!("  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.claim);
        println!("       {}", c.detail);
    }
    let failed = claims.iter().filter(|c| !c.passed).count();
    println!("\n{} claims, {failed} failed", claims.len());

    // The literal two-point member lies on relevant walls; show what the
    // classification returns there.
    for d in [0, 1] {
        let (classes, wall) = fixtures::rank2_literal_classes(d).expect("valid fixture");
        let list: Vec<String> = classes.iter().map(ToString::to_string).collect();
        println!(
            "literal a₂ = 3/5 at d = {d}: {} classes {}; wall {:?}",
            classes.len(),
            list.join(" "),
            wall.map(|w| (w.subsets, w.level))
        );
    }
}
