//! Chern classes of Λ^p of a generic bundle, then of a concrete one.
//!
//!     cargo run --example exterior_powers

use hyperchern::charcls::{direct_sum, exterior_power, lambda_formula, BundleClass};
use hyperchern::cohring::HypersurfaceModel;
use hyperchern::exactnum::MultiPoly;

fn main() -> hyperchern::Result<()> {
    let f = lambda_formula(4, 2, 4)?;
    println!("Λ^2 of a rank 4 bundle has rank {}", f.output_rank());
    for k in 1..=4 {
        println!("  c{k} = {}", f.chern_poly(k)?);
    }

    // O(1) + O(2) + O(-1) on a fourfold: Λ^2 is O(3) + O(0) + O(1).
    let x = HypersurfaceModel::new(4)?;
    let line = |a| BundleClass::line(x, MultiPoly::int(a));
    let e = direct_sum(&direct_sum(&line(1), &line(2))?, &line(-1))?;
    let w = exterior_power(&e, 2)?;
    println!("c(Λ^2(O(1)+O(2)+O(-1))) = {}", w.total_chern());
    Ok(())
}
