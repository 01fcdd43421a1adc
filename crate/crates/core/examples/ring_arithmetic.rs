// Exact arithmetic in the supported coefficient rings.
//
// `cargo run --example ring_arithmetic`

use centrosym::rings::{arith, ArithOp, RingElt};
use centrosym::RingSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for lit in ["int", "rat", "zmod:4", "gf:5", "c2:int", "c2:gf:3"] {
        let ring: RingSpec = lit.parse()?;
        let two = RingElt::from_i64(&ring, 2);
        let half = two.inverse();
        println!(
            "{ring:<8} field={:<5} 1/2 = {}",
            ring.is_field(),
            half.as_ref().map(|h| ring.format_elem(h.value())).unwrap_or_else(|| "none".into())
        );
    }

    // R[C_2]: (1 + x)^2 = 2 + 2x, and over GF(2) that is zero
    let c2: RingSpec = "c2:int".parse()?;
    let y = RingElt::parse(&c2, "1+1*x")?;
    let sq = arith(ArithOp::Mul, &y, &y)?;
    println!("(1+x)^2 in {c2} = {}", c2.format_elem(sq.value()));
    assert_eq!(c2.format_elem(sq.value()), "2+2*x");

    let c2f2: RingSpec = "c2:gf:2".parse()?;
    let y = RingElt::parse(&c2f2, "1+1*x")?;
    assert!(c2f2.is_zero(arith(ArithOp::Mul, &y, &y)?.value()));
    println!("(1+x)^2 in {c2f2} = 0");

    let q = RingSpec::Rational;
    let a = RingElt::parse(&q, "3/4")?;
    let b = RingElt::parse(&q, "-5/6")?;
    let s = arith(ArithOp::Add, &a, &b)?;
    println!("3/4 + -5/6 = {}", q.format_elem(s.value()));
    assert_eq!(q.format_elem(s.value()), "-1/12");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ring arithmetic example");
}
