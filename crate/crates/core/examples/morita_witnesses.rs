// Column-module isomorphisms and the corner algebra `e S_n(R) e ≅ S_3(R)`.
//
// `cargo run --example morita_witnesses`

use centrosym::algebra::check_witness;
use centrosym::structure;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = RingSpec::Integer;
    for n in 4..=7 {
        for j in 2..=n / 2 {
            let w = structure::morita_column_iso(&z, n, j)?;
            let rep = check_witness(&w);
            println!("n = {n}, S f_1 -> S f_{j}: {}", rep.verdict());
            assert!(rep.passed());
        }
    }

    let e = structure::endring_odd(&z, 5)?;
    println!("corner basis {:?}", e.corner.labels());
    print!("{}", e.relations);
    assert!(e.relations.passed());
    assert!(check_witness(&e.witness).passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("morita example");
}
