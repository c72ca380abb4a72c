// The meet of two Dyck paths, built by repeatedly lowering the path that
// goes up at the first disagreement.

use dexter::meet::{meet, meet_with_trace};
use dexter::DyckPath;

pub fn run_example() -> dexter::Result<()> {
    let v: DyckPath = "1101011000".parse()?;
    let w: DyckPath = "1110010100".parse()?;
    let (m, trace) = meet_with_trace(v, w)?;
    for (a, b) in &trace {
        println!("{a}  {b}");
    }
    println!("meet = {m}");
    assert!(dexter::dexter::path_leq(m, v) && dexter::dexter::path_leq(m, w));
    assert_eq!(meet(w, v)?, m);
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
