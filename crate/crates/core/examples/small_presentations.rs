// `S_2(R) ≅ R[C_2]` and the generalized-matrix presentation of `S_3(R)`.
//
// `cargo run --example small_presentations`

use centrosym::algebra::check_witness;
use centrosym::structure;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = RingSpec::Integer;
    let s2 = structure::iso_s2(&z)?;
    println!("{}", serde_json::to_string_pretty(&s2.to_json())?);
    assert!(check_witness(&s2).passed());

    // 3 + 2x as a matrix
    let m = structure::s2_matrix(&z, &z.from_i64(3), &z.from_i64(2))?;
    print!("{}", m.matrix().to_text());

    let (pres, w) = structure::s3_presentation(&z)?;
    println!("S_3 presentation basis: {:?}", pres.labels());
    let rep = check_witness(&w);
    print!("{rep}");
    assert!(rep.passed());

    // (d·u) lands in the corner as 2du
    let d = pres.element("d")?;
    let u = pres.element("u")?;
    println!("d * u = {}", pres.format(&pres.mul(&d, &u)));
    println!("u * d = {}", pres.format(&pres.mul(&u, &d)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("presentation example");
}
