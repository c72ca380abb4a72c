// Hasse diagram of the dexter order on D_4, as Graphviz and JSON.
//
// ```text
// cargo run --example hasse_dot | dot -Tsvg > d4.svg
// ```

use dexter::dexter::hasse;
use dexter::export::{from_json, to_dot, to_json};
use dexter::{DyckPath, EdgeColor, Poset};

pub fn run_example() -> dexter::Result<()> {
    let d4 = hasse(4)?;
    let red = d4.edges().filter(|e| e.2 == EdgeColor::Red).count();
    eprintln!("D_4: {} paths, {} covers ({red} red)", d4.len(), d4.num_covers());
    println!("{}", to_dot(&d4, "D_4"));

    // JSON keeps elements as 0/1 strings and parses back.
    let back: Poset<DyckPath> = from_json(&to_json(&d4))?;
    assert_eq!(back.elements(), d4.elements());
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
