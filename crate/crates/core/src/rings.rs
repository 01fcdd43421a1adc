//! Exact commutative rings with canonical-form elements.
//!
//! A [`RingSpec`] describes the ring; elements are stored as bare [`Elem`]
//! payloads and all arithmetic goes through the `RingSpec`, which keeps matrices
//! and coordinate vectors free of per-entry ring tags. [`RingElt`] pairs a
//! payload with its ring for callers that want checked arithmetic.
//!
//! Canonical forms: integers are plain big integers, rationals are reduced
//! with a positive denominator, residues live in `[0, modulus)`, and
//! group-ring elements `a + b*x` are the pair `(a, b)`. Payload equality is
//! therefore ring equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integer,
    Rational,
    /// Integers modulo `m`, `m >= 2`.
    Modular(u64),
    /// The group ring `R[C_2] = R + R*x` with `x^2 = 1`.
    GroupRingC2(Box<RingSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Residue(u64),
    /// `a + b*x`
    Pair(Box<Elem>, Box<Elem>),
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo `m` by extended Euclid, if `gcd(a, m) = 1`.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

impl RingSpec {
    pub fn modular(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("modulus must be >= 2, got {m}")));
        }
        Ok(RingSpec::Modular(m))
    }

    /// `GF(p)`; rejects composite `p`.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("gf:{p} needs a prime modulus")));
        }
        Ok(RingSpec::Modular(p))
    }

    pub fn group_ring_c2(base: RingSpec) -> Self {
        RingSpec::GroupRingC2(Box::new(base))
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Rational => true,
            RingSpec::Modular(m) => is_prime(*m),
            RingSpec::Integer | RingSpec::GroupRingC2(_) => false,
        }
    }

    /// The coefficient ring of a group ring, `None` otherwise.
    pub fn base(&self) -> Option<&RingSpec> {
        match self {
            RingSpec::GroupRingC2(b) => Some(b),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            RingSpec::Integer => Elem::Int(BigInt::zero()),
            RingSpec::Rational => Elem::Rat(BigRational::zero()),
            RingSpec::Modular(_) => Elem::Residue(0),
            RingSpec::GroupRingC2(b) => Elem::Pair(Box::new(b.zero()), Box::new(b.zero())),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> Elem {
        match self {
            RingSpec::Integer => Elem::Int(BigInt::from(k)),
            RingSpec::Rational => Elem::Rat(BigRational::from_integer(BigInt::from(k))),
            RingSpec::Modular(m) => Elem::Residue((k as i128).rem_euclid(*m as i128) as u64),
            RingSpec::GroupRingC2(b) => Elem::Pair(Box::new(b.from_i64(k)), Box::new(b.zero())),
        }
    }

    /// `a + b*x` in a group ring.
    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(matches!(self, RingSpec::GroupRingC2(_)));
        Elem::Pair(Box::new(a), Box::new(b))
    }

    /// The generator `x` of `C_2`; `None` outside group rings.
    pub fn generator(&self) -> Option<Elem> {
        self.base().map(|b| self.pair(b.zero(), b.one()))
    }

    /// Whether `e` is a canonical payload of this ring.
    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (RingSpec::Integer, Elem::Int(_)) => true,
            (RingSpec::Rational, Elem::Rat(r)) => r.denom().is_positive() && r.numer().gcd(r.denom()).is_one(),
            (RingSpec::Modular(m), Elem::Residue(r)) => r < m,
            (RingSpec::GroupRingC2(b), Elem::Pair(x, y)) => b.contains(x) && b.contains(y),
            _ => false,
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        match e {
            Elem::Int(a) => a.is_zero(),
            Elem::Rat(a) => a.is_zero(),
            Elem::Residue(a) => *a == 0,
            Elem::Pair(a, b) => {
                let base = self.base().expect("pair payload outside a group ring");
                base.is_zero(a) && base.is_zero(b)
            }
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (RingSpec::Integer, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (RingSpec::Rational, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (RingSpec::Modular(m), Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            (RingSpec::GroupRingC2(base), Elem::Pair(a0, a1), Elem::Pair(b0, b1)) => {
                Elem::Pair(Box::new(base.add(a0, b0)), Box::new(base.add(a1, b1)))
            }
            _ => panic!("payload does not belong to ring {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (RingSpec::Integer, Elem::Int(x)) => Elem::Int(-x),
            (RingSpec::Rational, Elem::Rat(x)) => Elem::Rat(-x),
            (RingSpec::Modular(m), Elem::Residue(x)) => Elem::Residue(if *x == 0 { 0 } else { m - x }),
            (RingSpec::GroupRingC2(base), Elem::Pair(a0, a1)) => {
                Elem::Pair(Box::new(base.neg(a0)), Box::new(base.neg(a1)))
            }
            _ => panic!("payload does not belong to ring {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (RingSpec::Integer, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (RingSpec::Rational, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (RingSpec::Modular(m), Elem::Residue(x), Elem::Residue(y)) => {
                Elem::Residue(((*x as u128 * *y as u128) % *m as u128) as u64)
            }
            // (a + bx)(c + dx) = (ac + bd) + (ad + bc)x
            (RingSpec::GroupRingC2(base), Elem::Pair(a0, a1), Elem::Pair(b0, b1)) => {
                let c0 = base.add(&base.mul(a0, b0), &base.mul(a1, b1));
                let c1 = base.add(&base.mul(a0, b1), &base.mul(a1, b0));
                Elem::Pair(Box::new(c0), Box::new(c1))
            }
            _ => panic!("payload does not belong to ring {self}"),
        }
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (self, a) {
            (RingSpec::Integer, Elem::Int(x)) => {
                if x.abs().is_one() {
                    Some(Elem::Int(x.clone()))
                } else {
                    None
                }
            }
            (RingSpec::Rational, Elem::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Elem::Rat(x.recip()))
                }
            }
            (RingSpec::Modular(m), Elem::Residue(x)) => mod_inverse(*x, *m).map(Elem::Residue),
            // (a + bx)(a - bx) = a^2 - b^2, so a + bx is a unit iff its norm is.
            (RingSpec::GroupRingC2(base), Elem::Pair(a0, a1)) => {
                let norm = base.sub(&base.mul(a0, a0), &base.mul(a1, a1));
                let t = base.inverse(&norm)?;
                Some(Elem::Pair(Box::new(base.mul(a0, &t)), Box::new(base.neg(&base.mul(a1, &t)))))
            }
            _ => panic!("payload does not belong to ring {self}"),
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// The element `d` with `2d = 1`, when 2 is a unit.
    pub fn invert_two(&self) -> Option<Elem> {
        self.inverse(&self.from_i64(2))
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let bad = || Error::Parse { what: "ring element", input: s.to_string() };
        let s = s.trim();
        match self {
            RingSpec::Integer => parse_int(s).map(Elem::Int).ok_or_else(bad),
            RingSpec::Rational => {
                let (p, q) = match s.split_once('/') {
                    Some((p, q)) => (parse_int(p).ok_or_else(bad)?, parse_nat(q).ok_or_else(bad)?),
                    None => (parse_int(s).ok_or_else(bad)?, BigInt::one()),
                };
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Elem::Rat(BigRational::new(p, q)))
            }
            RingSpec::Modular(m) => {
                let v = parse_int(s).ok_or_else(bad)?;
                let r = v.mod_floor(&BigInt::from(*m));
                Ok(Elem::Residue(r.to_u64().expect("residue fits modulus")))
            }
            RingSpec::GroupRingC2(base) => {
                let (a, b) = split_pair(s).ok_or_else(bad)?;
                let a = match a {
                    Some(a) => base.parse_elem(strip_parens(a))?,
                    None => base.zero(),
                };
                let b = match b {
                    Some(b) => base.parse_elem(strip_parens(b))?,
                    None => base.zero(),
                };
                Ok(self.pair(a, b))
            }
        }
    }

    /// The canonical literal; `parse_elem` inverts it exactly.
    pub fn format_elem(&self, e: &Elem) -> String {
        match e {
            Elem::Int(x) => x.to_string(),
            Elem::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Elem::Residue(x) => x.to_string(),
            Elem::Pair(a, b) => {
                let base = self.base().expect("pair payload outside a group ring");
                let (fa, fb) = (base.format_elem(a), base.format_elem(b));
                if base.base().is_some() {
                    format!("({fa})+({fb})*x")
                } else {
                    format!("{fa}+{fb}*x")
                }
            }
        }
    }

    /// A small random element, for seeded property batches.
    pub fn random_elem<G: Rng + ?Sized>(&self, rng: &mut G) -> Elem {
        match self {
            RingSpec::Integer => Elem::Int(BigInt::from(rng.gen_range(-9i64..=9))),
            RingSpec::Rational => {
                let p = rng.gen_range(-9i64..=9);
                let q = rng.gen_range(1i64..=5);
                Elem::Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
            }
            RingSpec::Modular(m) => Elem::Residue(rng.gen_range(0..*m)),
            RingSpec::GroupRingC2(base) => {
                let a = base.random_elem(rng);
                let b = base.random_elem(rng);
                self.pair(a, b)
            }
        }
    }
}

fn parse_nat(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn parse_int(s: &str) -> Option<BigInt> {
    match s.strip_prefix('-') {
        Some(rest) => parse_nat(rest).map(|v| -v),
        None => parse_nat(s),
    }
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}

/// Splits `a+b*x` into its two halves. Either half may be absent
/// (`a`, `b*x`, `x`); the split happens at the first depth-0 `+` that is not
/// a leading sign.
fn split_pair(s: &str) -> Option<(Option<&str>, Option<&str>)> {
    if s == "x" {
        return Some((None, Some("1")));
    }
    let mut depth = 0i32;
    let mut split = None;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 && idx > 0 => {
                split = Some(idx);
                break;
            }
            _ => {}
        }
    }
    match split {
        Some(idx) => {
            let rest = &s[idx + 1..];
            let b = if rest == "x" { "1" } else { rest.strip_suffix("*x")? };
            Some((Some(&s[..idx]), Some(b)))
        }
        None => match s.strip_suffix("*x") {
            Some(b) => Some((None, Some(b))),
            None => Some((Some(s), None)),
        },
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integer => write!(f, "int"),
            RingSpec::Rational => write!(f, "rat"),
            RingSpec::Modular(m) if is_prime(*m) => write!(f, "gf:{m}"),
            RingSpec::Modular(m) => write!(f, "zmod:{m}"),
            RingSpec::GroupRingC2(b) => write!(f, "c2:{b}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "ring literal", input: s.to_string() };
        let s = s.trim();
        match s {
            "int" => return Ok(RingSpec::Integer),
            "rat" => return Ok(RingSpec::Rational),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("c2:") {
            return Ok(RingSpec::group_ring_c2(rest.parse()?));
        }
        if let Some(m) = s.strip_prefix("zmod:") {
            return RingSpec::modular(m.parse().map_err(|_| bad())?);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            return RingSpec::prime_field(p.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

/// A ring element tagged with its ring, for checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElt {
    ring: RingSpec,
    value: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Sub,
}

impl RingElt {
    pub fn new(ring: RingSpec, value: Elem) -> Result<Self> {
        if !ring.contains(&value) {
            return Err(Error::Parse { what: "canonical ring element", input: format!("{value:?}") });
        }
        Ok(RingElt { ring, value })
    }

    pub fn parse(ring: &RingSpec, s: &str) -> Result<Self> {
        let value = ring.parse_elem(s)?;
        Ok(RingElt { ring: ring.clone(), value })
    }

    pub fn from_i64(ring: &RingSpec, k: i64) -> Self {
        RingElt { ring: ring.clone(), value: ring.from_i64(k) }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    pub fn into_value(self) -> Elem {
        self.value
    }

    pub fn inverse(&self) -> Option<RingElt> {
        self.ring.inverse(&self.value).map(|value| RingElt { ring: self.ring.clone(), value })
    }
}

/// Checked ring arithmetic. `Neg` ignores `b` apart from the ring check.
pub fn arith(op: ArithOp, a: &RingElt, b: &RingElt) -> Result<RingElt> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    let r = &a.ring;
    let value = match op {
        ArithOp::Add => r.add(&a.value, &b.value),
        ArithOp::Mul => r.mul(&a.value, &b.value),
        ArithOp::Neg => r.neg(&a.value),
        ArithOp::Sub => r.sub(&a.value, &b.value),
    };
    Ok(RingElt { ring: r.clone(), value })
}

/// The `d` with `2d = 1`, if it exists.
pub fn invert_two(ring: &RingSpec) -> Option<RingElt> {
    ring.invert_two().map(|value| RingElt { ring: ring.clone(), value })
}

pub fn group_ring_c2(base: RingSpec) -> RingSpec {
    RingSpec::group_ring_c2(base)
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_elem(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(ring: &RingSpec, s: &str) -> RingElt {
        RingElt::parse(ring, s).unwrap()
    }

    #[test]
    fn modular_product_reduces() {
        let r: RingSpec = "zmod:4".parse().unwrap();
        let p = arith(ArithOp::Mul, &elt(&r, "2"), &elt(&r, "3")).unwrap();
        assert_eq!(p.to_string(), "2");
    }

    #[test]
    fn group_ring_zero_divisor() {
        let r: RingSpec = "c2:int".parse().unwrap();
        let p = arith(ArithOp::Mul, &elt(&r, "1+1*x"), &elt(&r, "1+-1*x")).unwrap();
        assert!(r.is_zero(p.value()));
    }

    #[test]
    fn rational_sum() {
        let p = arith(ArithOp::Add, &elt(&RingSpec::Rational, "1/2"), &elt(&RingSpec::Rational, "1/3")).unwrap();
        assert_eq!(p.to_string(), "5/6");
    }

    #[test]
    fn mismatch_names_both_rings() {
        let err = arith(ArithOp::Add, &RingElt::from_i64(&RingSpec::Integer, 1), &RingElt::from_i64(&RingSpec::Rational, 1))
            .unwrap_err();
        assert_eq!(err, Error::RingMismatch { left: "int".into(), right: "rat".into() });
    }

    #[test]
    fn two_inverses() {
        assert_eq!(invert_two(&RingSpec::Modular(9)).unwrap().to_string(), "5");
        assert_eq!(invert_two(&RingSpec::Rational).unwrap().to_string(), "1/2");
        assert!(invert_two(&RingSpec::Integer).is_none());
        assert!(invert_two(&RingSpec::Modular(2)).is_none());
        assert!(invert_two(&RingSpec::Modular(4)).is_none());
        let c2q = group_ring_c2(RingSpec::Rational);
        assert_eq!(invert_two(&c2q).unwrap().to_string(), "1/2+0*x");
    }

    #[test]
    fn group_ring_examples() {
        let r = group_ring_c2(RingSpec::Modular(2));
        let s = elt(&r, "1+1*x");
        assert!(r.is_zero(&r.mul(s.value(), s.value())));

        let q = group_ring_c2(RingSpec::Rational);
        let h = elt(&q, "1/2+1/2*x");
        assert_eq!(q.mul(h.value(), h.value()), *h.value());

        let z = group_ring_c2(RingSpec::Integer);
        let x = z.generator().unwrap();
        assert!(z.is_one(&z.mul(&x, &x)));
    }

    #[test]
    fn ring_literals() {
        for lit in ["int", "rat", "zmod:4", "gf:5", "c2:int", "c2:zmod:4", "c2:c2:rat"] {
            let r: RingSpec = lit.parse().unwrap();
            assert_eq!(r.to_string(), lit);
        }
        assert!("gf:4".parse::<RingSpec>().is_err());
        assert!("zmod:1".parse::<RingSpec>().is_err());
        assert!("poly".parse::<RingSpec>().is_err());
        assert!(RingSpec::Modular(7).is_field());
        assert!(!RingSpec::Integer.is_field());
        assert!(!group_ring_c2(RingSpec::Rational).is_field());
    }

    #[test]
    fn element_literals() {
        let m: RingSpec = "zmod:5".parse().unwrap();
        assert_eq!(m.parse_elem("-1").unwrap(), Elem::Residue(4));
        assert_eq!(m.parse_elem("12").unwrap(), Elem::Residue(2));
        assert!(RingSpec::Integer.parse_elem("1/2").is_err());
        assert!(RingSpec::Integer.parse_elem("+3").is_err());
        assert!(RingSpec::Rational.parse_elem("1/0").is_err());
        assert!(RingSpec::Rational.parse_elem("4/-2").is_err());
        assert_eq!(RingSpec::Rational.format_elem(&RingSpec::Rational.parse_elem("-4/6").unwrap()), "-2/3");

        let c: RingSpec = "c2:int".parse().unwrap();
        assert_eq!(c.format_elem(&c.parse_elem("3+2*x").unwrap()), "3+2*x");
        assert_eq!(c.format_elem(&c.parse_elem("-3+-2*x").unwrap()), "-3+-2*x");
        assert_eq!(c.format_elem(&c.parse_elem("x").unwrap()), "0+1*x");
        assert_eq!(c.format_elem(&c.parse_elem("7").unwrap()), "7+0*x");
        let cc: RingSpec = "c2:c2:int".parse().unwrap();
        let e = cc.parse_elem("(1+2*x)+(3+-4*x)*x").unwrap();
        assert_eq!(cc.format_elem(&e), "(1+2*x)+(3+-4*x)*x");
    }

    #[test]
    fn group_ring_units() {
        let z = group_ring_c2(RingSpec::Integer);
        let x = z.generator().unwrap();
        assert_eq!(z.inverse(&x), Some(x.clone()));
        assert!(z.inverse(&z.parse_elem("1+1*x").unwrap()).is_none());
        let q = group_ring_c2(RingSpec::Rational);
        let a = q.parse_elem("2+1*x").unwrap();
        let inv = q.inverse(&a).unwrap();
        assert!(q.is_one(&q.mul(&a, &inv)));
    }
}
