use nclattice::acceptance::{run, select, Faults};

fn check(tag: &str) {
    let criterion = select(Some(tag))[0];
    let outcome = run(criterion, Faults::default());
    println!("{} ({:.2?})", outcome.line(), outcome.elapsed);
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn c01_u_table() {
    check("table-u");
}

#[test]
fn c02_v_table() {
    check("table-v");
}

#[test]
fn c03_s_table() {
    check("table-s");
}

#[test]
fn c04_t_family() {
    check("t-family");
}

#[test]
fn c05_gradedness() {
    check("graded");
}

#[test]
fn c06_chain_decompositions() {
    check("scd");
}

#[test]
fn c07_decomposition_isomorphisms() {
    check("decomposition");
}

#[test]
fn c08_series_identities() {
    check("series");
}

#[test]
fn c09_lattice_axioms() {
    check("lattice");
}

#[test]
fn c10_self_duality() {
    check("self-dual");
}
