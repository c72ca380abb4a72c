// Zeta polynomials, colored h-polynomials and lattice properties.

use dexter::dexter::{hasse, interval_poset};
use dexter::invariants::{
    colored_h_polynomial, is_extremal, is_semidistributive, longest_chain, narayana_matches, zeta_polynomial,
};
use dexter::DyckPath;

pub fn run_example() -> dexter::Result<()> {
    for n in 1..=5 {
        let d = hasse(n)?;
        let z = zeta_polynomial(&d)?;
        println!("D_{n}: Z(k) = {z}; Z(-1) = {}, Z(-2) = {}; longest chain {}", z.eval(-1), z.eval(-2), longest_chain(&d));
    }
    for n in 1..=4 {
        let a = colored_h_polynomial(n)?;
        println!("A_{n}(r, b) = {a}");
        assert!(narayana_matches(&a, n));
    }
    let p = interval_poset(DyckPath::w_min(6), "111100100100".parse()?)?;
    println!(
        "[w_min(6), 111100100100]: semidistributive {}, extremal {}",
        is_semidistributive(&p)?,
        is_extremal(&p)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
