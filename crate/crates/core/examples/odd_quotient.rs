// `S_{2m+1}(R)` modulo the ideal generated by the centre cell is `M_m(R)`.
//
// `cargo run --example odd_quotient`

use centrosym::algebra::check_witness;
use centrosym::structure::{self, f};
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = RingSpec::Integer;
    let q = structure::odd_quotient(&z, 2)?;
    println!("ideal rank {}: {}", q.ideal.rank(), q.ideal.labels().join(", "));
    println!("quotient basis: {:?}", q.quotient.algebra.labels());

    // f̄_{1,4} = -f̄_{1,2} in the quotient of S_5
    let img = q.quotient.project(&f(&z, 5, 1, 4));
    println!("f1_4 -> {}", q.quotient.algebra.format(&img));

    let rep = q.sign_identity();
    print!("{rep}");
    assert!(rep.passed());
    assert!(check_witness(&q.witness).passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("odd quotient example");
}
