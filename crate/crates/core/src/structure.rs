//! Explicit isomorphism witnesses for `S_n(R)`: the small cases `n = 2, 3`,
//! `S_{2m}(R) ≅ M_m(R[C_2])`, the odd quotient `S_{2m+1}(R)/J ≅ M_m(R)`, the
//! column-module isomorphisms and corner algebra behind the Morita
//! equivalences, and the splitting `S_n(R) ≅ M_k(R) × M_{n-k}(R)` when 2 is a
//! unit.

use crate::algebra::{
    self, algebra_of_censym, full_matrix_algebra, group_ring_algebra, group_ring_matrix_algebra, ideal_generated, product_algebra,
    quotient_by_ideal, subalgebra, BasedModule, Domain, IdealBasis, LinearMapWitness, Property, Quotient,
    StructureAlgebra,
};
use crate::censym::{self, BasisIndex, CentroMatrix};
use crate::error::{Error, Result};
use crate::linalg::{self, Coords};
use crate::matrices::{matrix_unit, Matrix};
use crate::report::{CheckReport, Clause, Counterexample};
use crate::rings::{Elem, RingSpec};

const ALG_ISO: [Property; 3] = [Property::AlgebraHomomorphism, Property::Bijective, Property::InvolutionCompatible];

/// Coordinates of `f_{ij}` (any indices) in `S_n(R)`.
pub fn f(ring: &RingSpec, n: usize, i: usize, j: usize) -> Coords {
    let idx = BasisIndex::of(n, i, j);
    linalg::unit_vector(ring, censym::rank(n), censym::basis_slot(idx))
}

fn witness(source: StructureAlgebra, target: StructureAlgebra, matrix: Vec<Coords>, claims: &[Property]) -> Result<LinearMapWitness> {
    LinearMapWitness::new(Domain::Algebra(source), Domain::Algebra(target), matrix, claims.to_vec())?.with_computed_inverse()
}

/// `R[C_2] -> S_2(R)`, `1 ↦ f_1`, `x ↦ f_{12}`.
pub fn iso_s2(ring: &RingSpec) -> Result<LinearMapWitness> {
    let src = group_ring_algebra(ring);
    let tgt = algebra_of_censym(ring, 2)?;
    let matrix = vec![f(ring, 2, 1, 1), f(ring, 2, 1, 2)];
    witness(src, tgt, matrix, &ALG_ISO)
}

/// The 2×2 matrix of `a + bx` under [`iso_s2`].
pub fn s2_matrix(ring: &RingSpec, a: &Elem, b: &Elem) -> Result<CentroMatrix> {
    censym::from_coords(ring, 2, &[a.clone(), b.clone()])
}

/// Labels of the generalized-matrix presentation of `S_3(R)`: an element
/// `(a, b, u, d, v)` stands for `[[a + bx, u], [d, v]]`.
pub const S3_LABELS: [&str; 5] = ["a", "b", "u", "d", "v"];

/// The product of two `(a, b, u, d, v)` tuples:
/// `((aa'+bb'+ud') + (ab'+ba'+ud')x, au'+bu'+uv', da'+db'+vd', 2du'+vv')`.
pub fn s3_product(ring: &RingSpec, p: &[Elem], q: &[Elem]) -> Coords {
    let m = |x: &Elem, y: &Elem| ring.mul(x, y);
    let sum = |xs: &[Elem]| xs.iter().fold(ring.zero(), |acc, x| ring.add(&acc, x));
    let (a, b, u, d, v) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
    let (a1, b1, u1, d1, v1) = (&q[0], &q[1], &q[2], &q[3], &q[4]);
    let du = m(d, u1);
    vec![
        sum(&[m(a, a1), m(b, b1), m(u, d1)]),
        sum(&[m(a, b1), m(b, a1), m(u, d1)]),
        sum(&[m(a, u1), m(b, u1), m(u, v1)]),
        sum(&[m(d, a1), m(d, b1), m(v, d1)]),
        sum(&[du.clone(), du, m(v, v1)]),
    ]
}

/// The presentation algebra and its map onto `S_3(R)`,
/// `(a, b, u, d, v) ↦ (f_1, f_{13}, f_{12}, f_{21}, f_2)`.
pub fn s3_presentation(ring: &RingSpec) -> Result<(StructureAlgebra, LinearMapWitness)> {
    let e = |k| linalg::unit_vector(ring, 5, k);
    let labels = S3_LABELS.iter().map(|s| s.to_string()).collect();
    let unit = linalg::add(ring, &e(0), &e(4));
    // the transpose swaps the off-diagonal corners
    let involution = vec![e(0), e(1), e(3), e(2), e(4)];
    let pres = StructureAlgebra::from_products(ring, labels, |x, y| s3_product(ring, &e(x), &e(y)), unit, Some(involution))?;
    let matrix = vec![f(ring, 3, 1, 1), f(ring, 3, 1, 3), f(ring, 3, 1, 2), f(ring, 3, 2, 1), f(ring, 3, 2, 2)];
    let w = witness(pres.clone(), algebra_of_censym(ring, 3)?, matrix, &ALG_ISO)?;
    Ok((pres, w))
}

/// `M_m(R[C_2]) -> S_{2m}(R)`, `a E_{ij} + b xE_{ij} ↦ a f_{ij} + b f_{i,n+1-j}`.
pub fn iso_even(ring: &RingSpec, m: usize) -> Result<LinearMapWitness> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let n = 2 * m;
    let src = group_ring_matrix_algebra(ring, m);
    let mut matrix = Vec::with_capacity(2 * m * m);
    for i in 1..=m {
        for j in 1..=m {
            matrix.push(f(ring, n, i, j));
            matrix.push(f(ring, n, i, n + 1 - j));
        }
    }
    witness(src, algebra_of_censym(ring, n)?, matrix, &ALG_ISO)
}

/// `S_{2m+1}(R)` modulo the ideal generated by `f_{m+1}`.
#[derive(Clone, Debug)]
pub struct OddQuotient {
    pub m: usize,
    pub ambient: StructureAlgebra,
    pub ideal: IdealBasis,
    /// The quotient, with `f̄_{ij}` (`1 <= i, j <= m`) as basis.
    pub quotient: Quotient,
    /// `f̄_{ij} ↦ E_{ij}` onto `M_m(R)`.
    pub witness: LinearMapWitness,
}

pub fn odd_quotient(ring: &RingSpec, m: usize) -> Result<OddQuotient> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let n = 2 * m + 1;
    let a = algebra_of_censym(ring, n)?;
    let ideal = ideal_generated(&a, &[f(ring, n, m + 1, m + 1)])?;
    let complement = (1..=m).flat_map(|i| (1..=m).map(move |j| (i, j))).map(|(i, j)| f(ring, n, i, j)).collect();
    let quotient = quotient_by_ideal(&a, &ideal, Some(complement))?;
    let target = full_matrix_algebra(ring, m);
    let w = witness(quotient.algebra.clone(), target, linalg::identity(ring, m * m), &ALG_ISO)?;
    Ok(OddQuotient { m, ambient: a, ideal, quotient, witness: w })
}

/// The witness `S_{2m+1}(R)/J -> M_m(R)`.
pub fn iso_odd_quotient(ring: &RingSpec, m: usize) -> Result<LinearMapWitness> {
    Ok(odd_quotient(ring, m)?.witness)
}

impl OddQuotient {
    /// `f̄_{ij} = -f̄_{i,n+1-j}` for all `i <= m` and all `j`, and every
    /// `f_{m+1,j}` maps to zero.
    pub fn sign_identity(&self) -> CheckReport {
        let ring = self.ambient.ring().clone();
        let n = 2 * self.m + 1;
        let q = &self.quotient;
        let mut cx = None;
        'outer: for i in 1..=self.m {
            for j in 1..=n {
                let lhs = q.project(&f(&ring, n, i, j));
                let rhs = linalg::scale(&ring, &ring.from_i64(-1), &q.project(&f(&ring, n, i, n + 1 - j)));
                if lhs != rhs {
                    cx = Some(Counterexample::new(
                        vec![format!("f{i}_{j}")],
                        q.algebra.format(&lhs),
                        q.algebra.format(&rhs),
                    ));
                    break 'outer;
                }
            }
        }
        let mut rep = CheckReport::new();
        rep.push(Clause::from_search("sign-identity", cx));
        let mut cx = None;
        for j in 1..=n {
            let v = q.project(&f(&ring, n, self.m + 1, j));
            if !linalg::is_zero(&ring, &v) {
                cx = Some(Counterexample::new(vec![format!("f{}_{j}", self.m + 1)], q.algebra.format(&v), "0"));
                break;
            }
        }
        rep.push(Clause::from_search("middle-row-vanishes", cx));
        rep
    }
}

/// Canonical basis elements of `S_n(R)` whose column is `j` or `n+1-j`;
/// a free basis of the column module `S_n(R) f_j`.
pub fn column_module_basis(ring: &RingSpec, n: usize, j: usize) -> Vec<Coords> {
    let slots = censym::slots(n);
    censym::basis_indices(n)
        .into_iter()
        .filter(|b| b.j() == j || b.j() == n + 1 - j)
        .map(|b| linalg::unit_vector(ring, censym::rank(n), slots[&b]))
        .collect()
}

fn right_mult_map(ring: &RingSpec, n: usize, from: &BasedModule, to: &BasedModule, g: &Matrix) -> Result<Vec<Coords>> {
    from.basis()
        .iter()
        .map(|v| {
            let prod = censym::from_coords(ring, n, v)?.matrix().mul(g)?;
            let c = censym::coords_of(&prod)?;
            match to.solve(&c) {
                linalg::Membership::In(x) => Ok(x),
                _ => Err(Error::Precondition("image leaves the column module".into())),
            }
        })
        .collect()
}

/// `S_n(R) f_1 -> S_n(R) f_j`, right multiplication by
/// `e_{1j} + e_{n,n+1-j}`, with inverse right multiplication by
/// `e_{j1} + e_{n+1-j,n}`.
pub fn morita_column_iso(ring: &RingSpec, n: usize, j: usize) -> Result<LinearMapWitness> {
    if n < 4 {
        return Err(Error::Precondition(format!("column isomorphisms need n >= 4, got {n}")));
    }
    if !(2..=n / 2).contains(&j) {
        return Err(Error::IndexOutOfRange { i: 1, j, n });
    }
    let a = algebra_of_censym(ring, n)?;
    let src = BasedModule::new(&a, column_module_basis(ring, n, 1))?;
    let tgt = BasedModule::new(&a, column_module_basis(ring, n, j))?;
    let unit = |p, q| matrix_unit(ring, n, p, q);
    let g = unit(1, j)?.add(&unit(n, n + 1 - j)?)?;
    let h = unit(j, 1)?.add(&unit(n + 1 - j, n)?)?;
    let matrix = right_mult_map(ring, n, &src, &tgt, &g)?;
    let inverse = right_mult_map(ring, n, &tgt, &src, &h)?;
    Ok(LinearMapWitness::new(
        Domain::Module(src),
        Domain::Module(tgt),
        matrix,
        vec![Property::LeftModuleHomomorphism, Property::Bijective],
    )?
    .with_inverse(inverse))
}

/// The corner algebra `e S_n(R) e` for `e = f_1 + f_{m+1}`, `n = 2m+1`.
#[derive(Clone, Debug)]
pub struct EndRing {
    pub n: usize,
    pub corner: StructureAlgebra,
    /// Corner → `S_3(R)`.
    pub witness: LinearMapWitness,
    /// The two defining relations.
    pub relations: CheckReport,
}

/// Builds `e S_n(R) e` on the basis `f_1, f_{1n}, f_{1,m+1}, f_{m+1,1},
/// f_{m+1}` and maps it onto `S_3(R)`. The endomorphism ring of
/// `S f_1 ⊕ S f_{m+1}` is the opposite of this corner; `S_3(R)` is
/// isomorphic to its own opposite via the transpose.
pub fn endring_odd(ring: &RingSpec, n: usize) -> Result<EndRing> {
    if n % 2 == 0 || n < 5 {
        return Err(Error::Precondition(format!("need odd n >= 5, got {n}")));
    }
    let m = n / 2;
    let a = algebra_of_censym(ring, n)?;
    let picks = [(1, 1), (1, n), (1, m + 1), (m + 1, 1), (m + 1, m + 1)];
    let basis: Vec<Coords> = picks.iter().map(|&(i, j)| f(ring, n, i, j)).collect();
    let labels = picks.iter().map(|&(i, j)| BasisIndex::of(n, i, j).label()).collect();
    let e = linalg::add(ring, &basis[0], &basis[4]);
    let corner = subalgebra(&a, basis.clone(), &e, labels)?;

    let mut rel = CheckReport::new();
    let lhs1 = a.mul(&basis[2], &basis[3]);
    let rhs1 = linalg::add(ring, &basis[0], &basis[1]);
    rel.push(Clause::from_search(
        format!("f1_{0}*f{0}_1 = f1_1 + f1_{1}", m + 1, n),
        (lhs1 != rhs1).then(|| Counterexample::new(vec![a.format(&basis[2]), a.format(&basis[3])], a.format(&lhs1), a.format(&rhs1))),
    ));
    let lhs2 = a.mul(&basis[3], &basis[2]);
    let rhs2 = linalg::scale(ring, &ring.from_i64(2), &basis[4]);
    rel.push(Clause::from_search(
        format!("f{0}_1*f1_{0} = 2*f{0}_{0}", m + 1),
        (lhs2 != rhs2).then(|| Counterexample::new(vec![a.format(&basis[3]), a.format(&basis[2])], a.format(&lhs2), a.format(&rhs2))),
    ));

    let s3 = algebra_of_censym(ring, 3)?;
    let matrix = vec![f(ring, 3, 1, 1), f(ring, 3, 1, 3), f(ring, 3, 1, 2), f(ring, 3, 2, 1), f(ring, 3, 2, 2)];
    let w = witness(corner.clone(), s3, matrix, &ALG_ISO)?;
    Ok(EndRing { n, corner, witness: w, relations: rel })
}

/// `S_n(R) = p₊ S p₊ × p₋ S p₋` with `p± = (1 ± c)/2`.
#[derive(Clone, Debug)]
pub struct WedderburnSplit {
    pub n: usize,
    /// `p₊ S p₊` on its matrix-unit basis, `⌈n/2⌉²` elements.
    pub plus: StructureAlgebra,
    /// `p₋ S p₋` on its matrix-unit basis, `⌊n/2⌋²` elements.
    pub minus: StructureAlgebra,
    /// `S_n(R) -> M_k(R) × M_{n-k}(R)`.
    pub witness: LinearMapWitness,
    /// Idempotent and piece-versus-full-matrix comparisons.
    pub report: CheckReport,
}

fn outer(ring: &RingSpec, n: usize, u: &[Elem], w: &[Elem], s: &Elem) -> Matrix {
    Matrix::from_fn(ring, n, |i, j| ring.mul(s, &ring.mul(&u[i - 1], &w[j - 1])))
}

fn compare_tables(name: &str, got: &StructureAlgebra, want: &StructureAlgebra) -> Clause {
    for u in 0..want.rank() {
        for v in 0..want.rank() {
            let (g, w) = (got.mul_basis(u, v), want.mul_basis(u, v));
            if g != w {
                return Clause::fail(
                    name,
                    Counterexample::new(vec![want.labels()[u].clone(), want.labels()[v].clone()], got.format(&g), want.format(&w)),
                );
            }
        }
    }
    if got.unit() != want.unit() {
        return Clause::fail(name, Counterexample::new(vec!["1".into()], got.format(got.unit()), want.format(want.unit())));
    }
    Clause::pass(name)
}

pub fn wedderburn_split(ring: &RingSpec, n: usize) -> Result<WedderburnSplit> {
    let half = ring.invert_two().ok_or_else(|| {
        Error::Unsupported(format!("the splitting needs 2 to be invertible, and it is not in {ring}"))
    })?;
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let (k, l) = (censym::half_ceil(n), n / 2);
    let a = algebra_of_censym(ring, n)?;
    let e = |i: usize| linalg::unit_vector(ring, n, i - 1);
    // symmetric vectors u_i = e_i + e_{n+1-i} (u_{m+1} = e_{m+1}) and antisymmetric w_i = e_i - e_{n+1-i}
    let sym: Vec<Coords> = (1..=k).map(|i| if i == n + 1 - i { e(i) } else { linalg::add(ring, &e(i), &e(n + 1 - i)) }).collect();
    let anti: Vec<Coords> = (1..=l).map(|i| linalg::sub(ring, &e(i), &e(n + 1 - i))).collect();
    let scale_sym = |j: usize| if j == n + 1 - j { ring.one() } else { half.clone() };

    let mut plus_basis = Vec::with_capacity(k * k);
    for i in 1..=k {
        for j in 1..=k {
            plus_basis.push(censym::coords_of(&outer(ring, n, &sym[i - 1], &sym[j - 1], &scale_sym(j)))?);
        }
    }
    let mut minus_basis = Vec::with_capacity(l * l);
    for i in 1..=l {
        for j in 1..=l {
            minus_basis.push(censym::coords_of(&outer(ring, n, &anti[i - 1], &anti[j - 1], &half))?);
        }
    }

    let c = censym::coords(&CentroMatrix::exchange(ring, n));
    let p_plus = linalg::scale(ring, &half, &linalg::add(ring, a.unit(), &c));
    let p_minus = linalg::scale(ring, &half, &linalg::sub(ring, a.unit(), &c));

    let mut rep = CheckReport::new();
    let idem = |p: &Coords| a.mul(p, p) == *p;
    let central = |p: &Coords| (0..a.rank()).all(|u| a.left_mul_basis(u, p) == a.right_mul_basis(p, u));
    let ok = idem(&p_plus) && idem(&p_minus) && central(&p_plus) && central(&p_minus)
        && linalg::is_zero(ring, &a.mul(&p_plus, &p_minus))
        && linalg::add(ring, &p_plus, &p_minus) == *a.unit();
    rep.push(Clause::from_search(
        "central-orthogonal-idempotents",
        (!ok).then(|| Counterexample::new(vec!["p+".into(), "p-".into()], a.format(&p_plus), a.format(&p_minus))),
    ));

    let labels = |pre: &str, d: usize| (0..d * d).map(|u| format!("{pre}E{}_{}", u / d + 1, u % d + 1)).collect::<Vec<_>>();
    let plus = subalgebra(&a, plus_basis.clone(), &p_plus, labels("+", k))?.without_involution();
    let minus = if l == 0 {
        StructureAlgebra::zero(ring).without_involution()
    } else {
        subalgebra(&a, minus_basis.clone(), &p_minus, labels("-", l))?.without_involution()
    };
    rep.push(compare_tables("plus-piece-is-full-matrix", &plus, &full_matrix_algebra(ring, k)));
    rep.push(compare_tables("minus-piece-is-full-matrix", &minus, &full_matrix_algebra(ring, l)));

    let target = product_algebra(&full_matrix_algebra(ring, k), &full_matrix_algebra(ring, l))?;
    let stacked: Vec<Coords> = plus_basis.into_iter().chain(minus_basis).collect();
    let matrix = linalg::inverse(ring, &stacked)?;
    let w = LinearMapWitness::new(
        Domain::Algebra(a),
        Domain::Algebra(target),
        matrix,
        vec![Property::AlgebraHomomorphism, Property::Bijective],
    )?
    .with_inverse(stacked);
    Ok(WedderburnSplit { n, plus, minus, witness: w, report: rep })
}

/// All witnesses of this module for a given `n`, checked; used by the CLI.
pub fn check_all_isos(ring: &RingSpec, n: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new();
    let add = |rep: &mut CheckReport, prefix: &str, w: &LinearMapWitness| rep.extend_prefixed(prefix, algebra::check_witness(w));
    if n == 2 {
        add(&mut rep, "s2/", &iso_s2(ring)?);
    }
    if n == 3 {
        add(&mut rep, "s3/", &s3_presentation(ring)?.1);
    }
    if n % 2 == 0 && n > 0 {
        add(&mut rep, "even/", &iso_even(ring, n / 2)?);
    }
    if n % 2 == 1 && n >= 3 {
        let q = odd_quotient(ring, n / 2)?;
        add(&mut rep, "odd-quotient/", &q.witness);
        rep.extend_prefixed("odd-quotient/", q.sign_identity());
    }
    if n >= 4 {
        for j in 2..=n / 2 {
            add(&mut rep, &format!("morita-j{j}/"), &morita_column_iso(ring, n, j)?);
        }
    }
    if n % 2 == 1 && n >= 5 {
        let e = endring_odd(ring, n)?;
        rep.extend_prefixed("endring/", e.relations);
        add(&mut rep, "endring/", &e.witness);
    }
    if ring.invert_two().is_some() {
        let w = wedderburn_split(ring, n)?;
        rep.extend_prefixed("wedderburn/", w.report);
        add(&mut rep, "wedderburn/", &w.witness);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_witness;

    fn rings() -> Vec<RingSpec> {
        vec![RingSpec::Integer, RingSpec::Modular(2), RingSpec::Rational]
    }

    #[test]
    fn s2() {
        for ring in rings() {
            let w = iso_s2(&ring).unwrap();
            assert!(check_witness(&w).passed());
            let x = w.matrix[1].clone();
            let x2 = match &w.target {
                Domain::Algebra(t) => t.mul(&x, &x),
                _ => unreachable!(),
            };
            assert_eq!(x2, w.matrix[0]);
        }
        let z = RingSpec::Integer;
        let (a, b) = (z.from_i64(3), z.from_i64(-4));
        assert_eq!(s2_matrix(&z, &a, &b).unwrap().matrix().rows(), vec![vec![a.clone(), b.clone()], vec![b, a]]);
    }

    #[test]
    fn s3() {
        let z = RingSpec::Integer;
        let (pres, w) = s3_presentation(&z).unwrap();
        assert!(pres.audit().passed());
        assert!(check_witness(&w).passed());
        let el = |l: &str| pres.element(l).unwrap();
        assert_eq!(pres.format(&pres.mul(&el("d"), &el("u"))), "2*v");
        assert_eq!(pres.format(&pres.mul(&el("u"), &el("d"))), "a + b");
        assert_eq!(pres.format(pres.unit()), "a + v");
    }

    #[test]
    fn even() {
        for ring in rings() {
            for m in 1..=3 {
                let w = iso_even(&ring, m).unwrap();
                assert!(check_witness(&w).passed(), "{ring} m={m}");
            }
        }
        let z = RingSpec::Integer;
        let w = iso_even(&z, 2).unwrap();
        let t = match &w.target {
            Domain::Algebra(t) => t.clone(),
            _ => unreachable!(),
        };
        // E_12 ↦ f_12, xE_12 ↦ f_13
        assert_eq!(t.format(&w.matrix[2]), "f1_2");
        assert_eq!(t.format(&w.matrix[3]), "f1_3");
        let xe11 = &w.matrix[1];
        assert_eq!(t.format(xe11), "f1_4");
        assert_eq!(t.mul(xe11, xe11), w.matrix[0]);
    }

    #[test]
    fn odd_quotients() {
        for ring in rings() {
            for m in 1..=3 {
                let q = odd_quotient(&ring, m).unwrap();
                assert_eq!(q.ideal.rank(), (m + 1) * (m + 1));
                assert!(check_witness(&q.witness).passed());
                assert!(q.sign_identity().passed());
                assert!(q.quotient.algebra.audit().passed());
            }
        }
        let q = odd_quotient(&RingSpec::Rational, 1).unwrap();
        assert_eq!(q.quotient.algebra.rank(), 1);
        assert_eq!(q.quotient.algebra.format(&q.quotient.project(&f(&RingSpec::Rational, 3, 1, 3))), "-[f1_1]");
        let q5 = odd_quotient(&RingSpec::Rational, 2).unwrap();
        let qa = &q5.quotient.algebra;
        let p = qa.mul(&qa.element("[f1_2]").unwrap(), &qa.element("[f2_1]").unwrap());
        assert_eq!(qa.format(&p), "[f1_1]");
    }

    #[test]
    fn morita() {
        let z = RingSpec::Integer;
        for n in 4..=7 {
            for j in 2..=n / 2 {
                let w = morita_column_iso(&z, n, j).unwrap();
                assert!(check_witness(&w).passed(), "n={n} j={j}");
            }
        }
        let w = morita_column_iso(&z, 4, 2).unwrap();
        assert_eq!(w.source.rank(), 4);
        assert_eq!(w.target.rank(), 4);
        assert_eq!(w.source.labels(), ["f1_1", "f1_4", "f2_1", "f2_4"]);
        assert!(morita_column_iso(&z, 3, 1).is_err());
        assert!(morita_column_iso(&z, 6, 4).is_err());
        assert!(morita_column_iso(&z, 6, 1).is_err());
    }

    #[test]
    fn morita_generator_image() {
        let z = RingSpec::Integer;
        let w = morita_column_iso(&z, 5, 2).unwrap();
        // f_1 ↦ e_12 + e_54 = f_12
        let img = w.target.format(&w.matrix[0]);
        assert_eq!(img, "f1_2");
    }

    #[test]
    fn endrings() {
        for ring in rings() {
            for n in [5, 7] {
                let e = endring_odd(&ring, n).unwrap();
                assert!(e.relations.passed(), "{}", e.relations);
                assert_eq!(e.corner.rank(), 5);
                assert!(e.corner.audit().passed());
                assert!(check_witness(&e.witness).passed());
            }
        }
        assert!(endring_odd(&RingSpec::Integer, 3).is_err());
        assert!(endring_odd(&RingSpec::Integer, 6).is_err());
    }

    #[test]
    fn wedderburn() {
        for ring in [RingSpec::Rational, RingSpec::Modular(5), RingSpec::Modular(9)] {
            for n in 1..=6 {
                let w = wedderburn_split(&ring, n).unwrap();
                assert!(w.report.passed(), "{ring} n={n}\n{}", w.report);
                assert_eq!(w.plus.rank(), censym::half_ceil(n).pow(2));
                assert_eq!(w.minus.rank(), (n / 2).pow(2));
                assert!(check_witness(&w.witness).passed());
            }
        }
        assert!(matches!(wedderburn_split(&RingSpec::Integer, 3), Err(Error::Unsupported(_))));
        assert!(matches!(wedderburn_split(&RingSpec::Modular(2), 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn all_isos_for_small_n() {
        for n in 1..=6 {
            assert!(check_all_isos(&RingSpec::Rational, n).unwrap().passed());
            assert!(check_all_isos(&RingSpec::Integer, n).unwrap().passed());
        }
    }
}
