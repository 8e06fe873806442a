//! Where the section count C(d+n+1-r, n+1-r) first exceeds r(n+2-r).
//!
//!     cargo run --example degree_thresholds

use hyperchern::pipeline::{check_dgr, dgr_threshold};

fn main() {
    for (n, r) in [(6, 4), (6, 5), (8, 6), (8, 7)] {
        let row: String = (3..=10).map(|d| if check_dgr(n, r, d) { '+' } else { '.' }).collect();
        println!("n={n} r={r}  d=3..10 {row}  holds from {:?}", dgr_threshold(n, r, 3, 10));
    }
}
