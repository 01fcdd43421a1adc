// Bisymmetric matrices are not closed under multiplication; centrosymmetric
// ones are.
//
// `cargo run --example bisymmetric_demo`

use centrosym::cli::bisymmetric_demo;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = bisymmetric_demo();
    for (name, m, f) in [("a", &d.left, d.flags[0]), ("b", &d.right, d.flags[1]), ("ab", &d.product, d.flags[2])] {
        println!("{name}:\n{}  bisymmetric {}, centrosymmetric {}", m.to_text(), f.bisymmetric, f.centrosymmetric);
    }
    assert!(d.flags[0].bisymmetric && d.flags[1].bisymmetric);
    assert!(!d.flags[2].bisymmetric && d.flags[2].centrosymmetric);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bisymmetric demo");
}
