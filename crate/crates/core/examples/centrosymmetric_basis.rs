// The f-basis of `S_n(R)`, its rank and a few structure constants.
//
// `cargo run --example centrosymmetric_basis`

use centrosym::algebra::algebra_of_censym;
use centrosym::censym;
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = RingSpec::Integer;
    for n in 1..=6 {
        println!("n = {n}: rank {:>2}  {}", censym::rank(n), censym::basis_labels(n).join(" "));
        assert_eq!(censym::rank(n), (n * n + 1) / 2);
    }

    let s3 = algebra_of_censym(&z, 3)?;
    let prod = |x: &str, y: &str| -> Result<String, centrosym::Error> {
        Ok(s3.format(&s3.mul(&s3.element(x)?, &s3.element(y)?)))
    };
    for (x, y) in [("f1_2", "f2_1"), ("f2_1", "f1_2"), ("f1_3", "f1_3")] {
        println!("{x} * {y} = {}", prod(x, y)?);
    }
    assert_eq!(prod("f2_1", "f1_2")?, "2*f2_2");

    // f1_2 as a matrix: e12 + e32
    let f12 = s3.element("f1_2")?;
    let m = censym::from_coords(&z, 3, &f12)?;
    print!("{}", m.matrix().to_text());
    assert!(s3.audit().passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("basis example");
}
