// Coxeter polynomials of intervals, factored into cyclotomic polynomials.

use dexter::dexter::{interval_poset, j_interval};
use dexter::hochschild::f_poset;
use dexter::invariants::{coxeter_factorization, roots_on_unit_circle, DEFAULT_ROOT_TOL};
use dexter::DyckPath;

pub fn run_example() -> dexter::Result<()> {
    for w in ["101100", "110010", "11011000", "11101000", "10111000", "11001100"] {
        let j = j_interval(w.parse()?);
        println!("J({w}): {:>2} elements, {}", j.len(), coxeter_factorization(&j)?.to_notation());
    }
    let f5 = f_poset(5)?;
    println!("F_5: {} elements, {}", f5.len(), coxeter_factorization(&f5)?.to_notation());

    // Not every interval has its Coxeter roots on the unit circle.
    let p = interval_poset(DyckPath::w_min(7), "11111001000100".parse()?)?;
    let f = coxeter_factorization(&p)?;
    println!("{} elements, roots on the circle: {}", p.len(), roots_on_unit_circle(&f.expand(), DEFAULT_ROOT_TOL));
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
