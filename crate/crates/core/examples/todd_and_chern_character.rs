//! Todd class and Chern character, generically and on a hypersurface.
//!
//!     cargo run --example todd_and_chern_character

use hyperchern::charcls::{ch_from_total, todd_of_total};
use hyperchern::cohring::{GradedClass, HypersurfaceModel};
use hyperchern::exactnum::{MultiPoly, Symbol};
use hyperchern::hygeo::{tangent_chern, todd_of_x};

fn main() -> hyperchern::Result<()> {
    let x = HypersurfaceModel::new(4)?;
    let mut c = vec![MultiPoly::one()];
    c.extend((1..=4).map(|i| MultiPoly::var(Symbol::c(i))));
    let generic = GradedClass::from_coeffs(x, c);
    let td = todd_of_total(&generic);
    let ch = ch_from_total(&MultiPoly::var(Symbol::M), &generic);
    for k in 0..=4 {
        println!("td{k} = {}", td.coeff(k));
    }
    for k in 0..=4 {
        println!("ch{k} = {}", ch.coeff(k));
    }

    // On X of degree d in P^5, in powers of the hyperplane class.
    let t = tangent_chern(x);
    println!("c(T_X) coefficients:");
    for i in 0..=4 {
        println!("  c{i} = {}", t.coeff(i));
    }
    println!("td(X) = {}", todd_of_x(x));
    Ok(())
}
