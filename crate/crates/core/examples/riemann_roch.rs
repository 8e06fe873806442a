//! χ(O_X(m)) from Hirzebruch-Riemann-Roch against the binomial count of
//! degree-m forms modulo the equation.
//!
//!     cargo run --example riemann_roch

use hyperchern::charcls::BundleClass;
use hyperchern::cohring::HypersurfaceModel;
use hyperchern::exactnum::{binomial_poly, MultiPoly, Symbol};
use hyperchern::hygeo::{chi_structure_twist, hrr_chi};

fn main() -> hyperchern::Result<()> {
    let m = MultiPoly::var(Symbol::M);
    let d = MultiPoly::var(Symbol::D);
    for n in [3, 6] {
        let x = HypersurfaceModel::new(n)?;
        let hrr = hrr_chi(x, &BundleClass::trivial(x, 1), &m);
        let shift = MultiPoly::int(n as i64 + 1);
        let count = binomial_poly(&(&m + &shift), n as u32 + 1) - binomial_poly(&(&(&m - &d) + &shift), n as u32 + 1);
        println!("n = {n}: χ(O_X(m)) = {hrr}");
        println!("  agrees with the binomial count: {}", hrr == count);
        println!("  agrees with chi_structure_twist: {}", hrr == chi_structure_twist(x, &m));
        println!("  χ(O_X) at d = 5: {}", chi_structure_twist(x, &MultiPoly::zero()).eval_d(5)?);
    }
    Ok(())
}
