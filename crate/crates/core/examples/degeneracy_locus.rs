//! Invariants of the degeneracy locus Z of r-1 general sections of an
//! Ulrich bundle: degree, the two linear relations and the solved
//! intersection numbers.
//!
//!     cargo run --example degeneracy_locus

use hyperchern::degloc::DegeneracyModel;

fn main() -> hyperchern::Result<()> {
    for (n, r) in [(6, 5), (8, 7)] {
        let z = DegeneracyModel::new(n, r)?;
        println!("n = {n}, r = {r}: Z has dimension {}", z.dim_z());
        println!("  deg Z = {}", z.degree_of_z().to_factored_text());
        let c2 = z.c2z_relation();
        println!("  {} c2(Z) = ({}) H^2 + ({}) KH", c2.factor, c2.alpha, c2.beta);
        for (name, value) in z.solve_intersections()?.entries() {
            println!("  {name} = {}", value.to_factored_text());
        }
    }
    Ok(())
}
