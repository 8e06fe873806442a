//! The two computations of χ(O_Z) in each of the four cases, their
//! difference and the integer roots it can have.
//!
//!     cargo run --release --example four_cases

use hyperchern::pipeline::{global_verdict, run_all};

fn main() -> hyperchern::Result<()> {
    let reports = run_all()?;
    for c in &reports {
        println!("{}: {:?}", c.id(), c.verdict);
        println!("  difference = ({}) * ({})", c.content, c.difference);
        println!("  stated factors {} leave cofactor {}", c.stated_product_text(), c.cofactor);
        println!("  integer roots >= 3: {:?}, below 3: {:?}", c.roots_ge_3, c.small_roots);
    }
    println!("{}", global_verdict(&reports).1);
    Ok(())
}
