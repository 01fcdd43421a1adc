// Runs every example under examples/ as a test.

mod bisymmetric_demo {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bisymmetric_demo.rs"));
}

mod cell_chains {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cell_chains.rs"));
}

mod centre {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/centre.rs"));
}

mod centrosymmetric_basis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/centrosymmetric_basis.rs"));
}

mod even_isomorphism {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/even_isomorphism.rs"));
}

mod frobenius_extension {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/frobenius_extension.rs"));
}

mod morita_witnesses {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/morita_witnesses.rs"));
}

mod odd_quotient {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/odd_quotient.rs"));
}

mod quasi_heredity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quasi_heredity.rs"));
}

mod ring_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ring_arithmetic.rs"));
}

mod small_presentations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/small_presentations.rs"));
}

mod wedderburn_split {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wedderburn_split.rs"));
}

#[test]
fn bisymmetric_demo_runs() {
    bisymmetric_demo::run_example().expect("bisymmetric_demo example");
}

#[test]
fn cell_chains_runs() {
    cell_chains::run_example().expect("cell_chains example");
}

#[test]
fn centre_runs() {
    centre::run_example().expect("centre example");
}

#[test]
fn centrosymmetric_basis_runs() {
    centrosymmetric_basis::run_example().expect("centrosymmetric_basis example");
}

#[test]
fn even_isomorphism_runs() {
    even_isomorphism::run_example().expect("even_isomorphism example");
}

#[test]
fn frobenius_extension_runs() {
    frobenius_extension::run_example().expect("frobenius_extension example");
}

#[test]
fn morita_witnesses_runs() {
    morita_witnesses::run_example().expect("morita_witnesses example");
}

#[test]
fn odd_quotient_runs() {
    odd_quotient::run_example().expect("odd_quotient example");
}

#[test]
fn quasi_heredity_runs() {
    quasi_heredity::run_example().expect("quasi_heredity example");
}

#[test]
fn ring_arithmetic_runs() {
    ring_arithmetic::run_example().expect("ring_arithmetic example");
}

#[test]
fn small_presentations_runs() {
    small_presentations::run_example().expect("small_presentations example");
}

#[test]
fn wedderburn_split_runs() {
    wedderburn_split::run_example().expect("wedderburn_split example");
}
