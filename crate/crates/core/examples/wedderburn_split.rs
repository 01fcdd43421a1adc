// `S_n(R) ≅ M_⌈n/2⌉(R) × M_⌊n/2⌋(R)` when 2 is invertible.
//
// `cargo run --example wedderburn_split`

use centrosym::algebra::check_witness;
use centrosym::structure;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["rat", "gf:5"] {
        let ring: RingSpec = lit.parse()?;
        for n in 1..=6 {
            let w = structure::wedderburn_split(&ring, n)?;
            println!("{lit:<5} n = {n}: pieces of rank {} and {}", w.plus.rank(), w.minus.rank());
            assert!(w.report.passed());
            assert!(check_witness(&w.witness).passed());
        }
    }
    let w = structure::wedderburn_split(&RingSpec::Rational, 3)?;
    println!("first idempotent of the plus piece: {}", w.plus.labels()[0]);
    match structure::wedderburn_split(&RingSpec::Integer, 3) {
        Err(e) => println!("over int: {e}"),
        Ok(_) => unreachable!("2 is not a unit in the integers"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("wedderburn example");
}
