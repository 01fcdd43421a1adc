// The Frobenius system of `S_n(R) ⊆ M_n(R)`, separability and splitting.
//
// `cargo run --example frobenius_extension`

use centrosym::frobenius::{self, FrobeniusSystem, Splitness};
use centrosym::matrices::matrix_unit;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = RingSpec::Integer;
    let sys = FrobeniusSystem::new(&z, 4);
    let a = matrix_unit(&z, 4, 2, 3)?;
    println!("E(e23) =\n{}", sys.e_map(&a)?.matrix().to_text());
    assert_eq!(&sys.left_expansion(&a)?, &a);

    let rep = frobenius::verify_frobenius_system(&sys, 20, frobenius::DEFAULT_SEED, &[])?;
    print!("{rep}");
    assert!(rep.passed());

    let (sep, _) = frobenius::separability_check(&sys)?;
    assert!(sep.passed());

    for lit in ["int", "gf:2", "rat", "zmod:9"] {
        let ring: RingSpec = lit.parse()?;
        let (s, _) = frobenius::splitness_check(&FrobeniusSystem::new(&ring, 3))?;
        let verdict = match s {
            Splitness::Split(_) => "split, d = 1/2",
            Splitness::Unknown => "unknown",
        };
        println!("{lit:<7} {verdict}");
    }

    // at n = 1, c = 1 and E doubles everything
    let one = FrobeniusSystem::new(&z, 1);
    let rep = frobenius::verify_frobenius_system(&one, 0, 0, &[])?;
    assert!(!rep.passed());
    println!("n = 1: {}", rep.verdict());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("frobenius example");
}
