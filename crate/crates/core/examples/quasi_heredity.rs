// Heredity ideals of `S_{2m+1}(R)`, and the nilpotent ideal of `GF(2)[C_2]`
// that blocks a heredity chain.
//
// `cargo run --example quasi_heredity`

use centrosym::cellular;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["gf:2", "gf:5", "rat"] {
        let ring: RingSpec = lit.parse()?;
        for n in [3, 5, 7] {
            let steps = cellular::quasi_hereditary_chain_odd(&ring, n)?;
            let es: Vec<&str> = steps.iter().map(|s| s.idempotent.as_str()).collect();
            println!("{lit:<5} n = {n}: idempotents {es:?}");
            assert!(steps.iter().all(|s| s.witness.report.passed()));
        }
    }

    let (mu, image) = cellular::injectivity_check_mu(&RingSpec::Integer, 5, 1, 1)?;
    println!("mu(f1_3 ⊗ f3_1) has {} nonzero coordinates", image.iter().filter(|c| !RingSpec::Integer.is_zero(c)).count());
    assert!(mu.passed());

    let (j, rep) = cellular::nilpotent_group_ring_ideal(&RingSpec::Modular(2))?;
    println!("GF(2)[C_2]: ideal of rank {} generated by 1+x", j.rank());
    print!("{rep}");
    assert!(rep.passed());
    println!("idempotents of GF(2)[C_2]: {:?}", cellular::group_ring_idempotents(2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("heredity example");
}
