// Ring axioms, codec round trips, and the structure constants against plain
// matrix multiplication.

use centrosym::algebra::algebra_of_censym;
use centrosym::censym::{self, CentroMatrix, SymSeq};
use centrosym::{Elem, Matrix, RingSpec};
use proptest::prelude::*;

fn rings() -> Vec<RingSpec> {
    vec![
        RingSpec::Integer,
        RingSpec::Rational,
        RingSpec::Modular(4),
        RingSpec::Modular(5),
        RingSpec::Modular(9),
        RingSpec::group_ring_c2(RingSpec::Integer),
        RingSpec::group_ring_c2(RingSpec::Modular(3)),
        RingSpec::group_ring_c2(RingSpec::Rational),
    ]
}

// (numerator, denominator, x-part numerator)
type Raw = (i64, i64, i64);

fn raw() -> impl Strategy<Value = Raw> {
    (-50i64..=50, 1i64..=7, -50i64..=50)
}

fn build(ring: &RingSpec, (p, q, b): Raw) -> Elem {
    match ring {
        RingSpec::Rational => ring.mul(&ring.from_i64(p), &ring.inverse(&ring.from_i64(q)).unwrap()),
        RingSpec::GroupRingC2(base) => ring.pair(build(base, (p, q, 0)), build(base, (b, q, 0))),
        _ => ring.from_i64(p),
    }
}

fn ring_and_elems(k: usize) -> impl Strategy<Value = (RingSpec, Vec<Elem>)> {
    (prop::sample::select(rings()), prop::collection::vec(raw(), k))
        .prop_map(|(r, xs)| {
            let es = xs.into_iter().map(|x| build(&r, x)).collect();
            (r, es)
        })
}

fn censym_pair() -> impl Strategy<Value = (RingSpec, usize, Vec<Elem>, Vec<Elem>)> {
    (prop::sample::select(rings()), 1usize..=6).prop_flat_map(|(r, n)| {
        let k = censym::rank(n);
        (prop::collection::vec(raw(), k), prop::collection::vec(raw(), k)).prop_map(move |(a, b)| {
            let f = |v: Vec<Raw>| v.into_iter().map(|x| build(&r, x)).collect::<Vec<_>>();
            (r.clone(), n, f(a), f(b))
        })
    })
}

proptest! {
    #[test]
    fn addition_is_an_abelian_group((r, e) in ring_and_elems(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
        prop_assert_eq!(r.add(a, &r.zero()), a.clone());
        prop_assert!(r.is_zero(&r.add(a, &r.neg(a))));
        prop_assert_eq!(r.sub(a, b), r.add(a, &r.neg(b)));
    }

    #[test]
    fn multiplication_is_commutative_unital_and_distributes((r, e) in ring_and_elems(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
        prop_assert_eq!(r.mul(a, &r.one()), a.clone());
        prop_assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    }

    #[test]
    fn inverses_are_two_sided((r, e) in ring_and_elems(1)) {
        let a = &e[0];
        match r.inverse(a) {
            Some(i) => {
                prop_assert!(r.is_one(&r.mul(a, &i)));
                prop_assert!(r.is_unit(a));
            }
            None => prop_assert!(!r.is_unit(a)),
        }
    }

    #[test]
    fn element_literals_round_trip((r, e) in ring_and_elems(1)) {
        let s = r.format_elem(&e[0]);
        prop_assert_eq!(r.parse_elem(&s).unwrap(), e[0].clone());
    }

    #[test]
    fn ring_literals_round_trip(r in prop::sample::select(rings())) {
        let s = r.to_string();
        prop_assert_eq!(s.parse::<RingSpec>().unwrap(), r);
    }

    #[test]
    fn matrix_text_round_trips((r, e) in ring_and_elems(9)) {
        let m = Matrix::from_fn(&r, 3, |i, j| e[(i - 1) * 3 + (j - 1)].clone());
        prop_assert_eq!(Matrix::parse_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn coords_round_trip((r, n, a, _b) in censym_pair()) {
        let x = censym::from_coords(&r, n, &a).unwrap();
        prop_assert!(censym::is_centrosymmetric(x.matrix()));
        prop_assert_eq!(censym::coords(&x), a);
        let seq = censym::matrix_to_seq(&x);
        prop_assert_eq!(censym::seq_to_matrix(&SymSeq::new(&r, seq.entries().to_vec()).unwrap()).unwrap(), x);
    }

    #[test]
    fn structure_constants_multiply_like_matrices((r, n, a, b) in censym_pair()) {
        let alg = algebra_of_censym(&r, n).unwrap();
        let x = censym::from_coords(&r, n, &a).unwrap();
        let y = censym::from_coords(&r, n, &b).unwrap();
        let direct = x.matrix().mul(y.matrix()).unwrap();
        let via_table = censym::from_coords(&r, n, &alg.mul(&a, &b)).unwrap();
        prop_assert_eq!(via_table.matrix(), &direct);
    }

    #[test]
    fn transpose_is_an_anti_automorphism((r, n, a, b) in censym_pair()) {
        let x = censym::from_coords(&r, n, &a).unwrap();
        let y = censym::from_coords(&r, n, &b).unwrap();
        let lhs: CentroMatrix = x.mul(&y).unwrap().transpose();
        prop_assert_eq!(lhs, y.transpose().mul(&x.transpose()).unwrap());
    }
}
