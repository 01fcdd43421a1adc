// The centre of `S_n(F)` is `span{1, c}` for `n >= 2`.
//
// `cargo run --example centre`

use centrosym::algebra::{algebra_of_censym, centre_of_censym};
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["gf:2", "gf:3", "gf:5", "rat"] {
        let ring: RingSpec = lit.parse()?;
        for n in 1..=5 {
            let c = centre_of_censym(&ring, n)?;
            let a = algebra_of_censym(&ring, n)?;
            let basis: Vec<String> = c.basis.iter().map(|v| a.format(v)).collect();
            println!("{lit:<5} n = {n}: dim {:?}  [{}]", c.dimension(), basis.join("; "));
            assert_eq!(c.dimension(), Some(if n == 1 { 1 } else { 2 }));
        }
    }
    // over the integers only containment is certified
    let c = centre_of_censym(&RingSpec::Integer, 4)?;
    print!("{}", c.report);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("centre example");
}
