//! Chern classes forced on an Ulrich bundle, and where they fail to be
//! integers.
//!
//!     cargo run --example ulrich_classes -- 8 6

use hyperchern::exactnum::{MultiPoly, Symbol};
use hyperchern::ulrich::{solve_ulrich_chern, ulrich_hilbert};

fn main() -> hyperchern::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, r) = match args[..] {
        [n, r] => (n, r),
        _ => (6, 4),
    };
    let sol = solve_ulrich_chern(n, r)?;
    for (i, e) in sol.classes().iter().enumerate() {
        let tag = if i + 1 > r { " (above the rank)" } else { "" };
        println!("e{} = {}{tag}", i + 1, e.to_factored_text());
    }
    let m = MultiPoly::var(Symbol::M);
    println!("χ(E(m)) = r d C(m+n, n): {}", sol.chi_formal(&m) == ulrich_hilbert(n, r, &m));
    for (i, d) in sol.non_integral_at(3, 12) {
        println!("e{i} is not an integer at d = {d}");
    }
    Ok(())
}
