mod hasse_dot {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hasse_dot.rs"));
}

mod orders {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orders.rs"));
}

mod monoids {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monoids.rs"));
}

mod intervals {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/intervals.rs"));
}

mod meet {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/meet.rs"));
}

mod hochschild {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hochschild.rs"));
}

mod coxeter {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coxeter.rs"));
}

mod zeta_hpoly {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/zeta_hpoly.rs"));
}

mod verify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify.rs"));
}


#[test]
fn hasse_dot_example_runs() {
    hasse_dot::run_example().expect("hasse_dot example should run");
}

#[test]
fn orders_example_runs() {
    orders::run_example().expect("orders example should run");
}

#[test]
fn monoids_example_runs() {
    monoids::run_example().expect("monoids example should run");
}

#[test]
fn intervals_example_runs() {
    intervals::run_example().expect("intervals example should run");
}

#[test]
fn meet_example_runs() {
    meet::run_example().expect("meet example should run");
}

#[test]
fn hochschild_example_runs() {
    hochschild::run_example().expect("hochschild example should run");
}

#[test]
fn coxeter_example_runs() {
    coxeter::run_example().expect("coxeter example should run");
}

#[test]
fn zeta_hpoly_example_runs() {
    zeta_hpoly::run_example().expect("zeta_hpoly example should run");
}

#[test]
fn verify_example_runs() {
    verify::run_example().expect("verify example should run");
}
