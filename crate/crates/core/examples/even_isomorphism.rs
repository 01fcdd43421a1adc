// `S_{2m}(R) ≅ M_m(R[C_2])`, checked on all basis pairs.
//
// `cargo run --example even_isomorphism`

use centrosym::algebra::check_witness;
use centrosym::structure;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["int", "gf:2", "rat"] {
        let ring: RingSpec = lit.parse()?;
        for m in 1..=3 {
            let w = structure::iso_even(&ring, m)?;
            let rep = check_witness(&w);
            println!("{lit:<5} m = {m}: {}", rep.verdict());
            assert!(rep.passed());
        }
    }
    let w = structure::iso_even(&RingSpec::Integer, 2)?;
    for row in w.to_json()["images"].as_array().unwrap() {
        println!("  {} -> {}", row["source"].as_str().unwrap(), row["image"].as_str().unwrap());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("even isomorphism example");
}
