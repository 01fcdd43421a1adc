// Cell chains of `S_n(R)` in both parities.
//
// `cargo run --example cell_chains`

use centrosym::cellular;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["int", "gf:2", "rat"] {
        let ring: RingSpec = lit.parse()?;
        for n in 1..=5 {
            let chain = cellular::cell_chain(&ring, n)?;
            println!("{lit:<5} n = {n}: layer ranks {:?}, cell module ranks {:?}", chain.layer_ranks(), chain.delta_ranks());
            assert!(chain.passed());
        }
    }

    let chain = cellular::cell_chain(&RingSpec::Integer, 3)?;
    for (p, layer) in chain.layers.iter().enumerate() {
        println!("layer {}: Δ = {}", p + 1, layer.witness.delta_labels().join(", "));
    }
    print!("{}", chain.full_report());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cell chain example");
}
