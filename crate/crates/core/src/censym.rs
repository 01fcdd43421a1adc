//! The algebra `S_n(R)` of centrosymmetric matrices: membership, the
//! canonical f-basis, coordinates, and structure constants.
//!
//! An index pair `(i, j)` and its mirror `(n+1-i, n+1-j)` name the same basis
//! element `f_{ij} = e_{ij} + e_{n+1-i,n+1-j}`; when `n = 2m+1` the centre cell
//! `(m+1, m+1)` is its own mirror and `f_{m+1} = e_{m+1,m+1}`. The canonical
//! representative has `i <= ceil(n/2)`, and on the middle row of odd `n` also
//! `j <= m+1`. There are exactly `ceil(n^2/2)` of them, ordered
//! lexicographically.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::linalg::Coords;
use crate::matrices::{exchange, Matrix};
use crate::rings::{Elem, RingSpec};

/// Kronecker delta.
pub fn delta(p: usize, q: usize) -> bool {
    p == q
}

/// Anti-Kronecker delta: `sigma_{pq} = 0` iff `p = q`.
pub fn sigma(p: usize, q: usize) -> bool {
    p != q
}

/// `ceil(n/2)`, the number of diagonal idempotents.
pub fn half_ceil(n: usize) -> usize {
    n.div_ceil(2)
}

/// `ceil(n^2/2)`, the rank of `S_n(R)`.
pub fn rank(n: usize) -> usize {
    (n * n).div_ceil(2)
}

fn mirror(n: usize, k: usize) -> usize {
    n + 1 - k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    n: usize,
    i: usize,
    j: usize,
}

impl BasisIndex {
    /// The canonical name of `f_{ij}` for any `1 <= i, j <= n`.
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        let (mut i, mut j) = (i, j);
        if i > half_ceil(n) {
            (i, j) = (mirror(n, i), mirror(n, j));
        }
        if n % 2 == 1 && i == n / 2 + 1 && j > i {
            j = mirror(n, j);
        }
        Ok(BasisIndex { n, i, j })
    }

    pub(crate) fn of(n: usize, i: usize, j: usize) -> Self {
        BasisIndex::new(n, i, j).expect("index in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// The centre cell of odd `n`, whose f-matrix has a single entry.
    pub fn is_fixed_cell(&self) -> bool {
        self.i == mirror(self.n, self.i) && self.j == mirror(self.n, self.j)
    }

    /// Position in the lexicographic basis order.
    pub fn position(&self) -> usize {
        let n = self.n;
        (self.i - 1) * n + (self.j - 1)
    }

    /// `f_{ij}` as a matrix.
    pub fn matrix(&self, ring: &RingSpec) -> Matrix {
        let mut m = Matrix::zero(ring, self.n);
        m.set(self.i, self.j, ring.one());
        m.set(mirror(self.n, self.i), mirror(self.n, self.j), ring.one());
        m
    }

    /// Transpose acts on the basis by `f_{ij} -> f_{ji}`.
    pub fn transpose(&self) -> BasisIndex {
        BasisIndex::of(self.n, self.j, self.i)
    }

    pub fn label(&self) -> String {
        format!("f{}_{}", self.i, self.j)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The canonical index set in basis order.
pub fn basis_indices(n: usize) -> Vec<BasisIndex> {
    let mut out = Vec::with_capacity(rank(n));
    for i in 1..=half_ceil(n) {
        for j in 1..=n {
            let idx = BasisIndex::of(n, i, j);
            if idx.i == i && idx.j == j {
                out.push(idx);
            }
        }
    }
    out
}

/// Maps each canonical index to its slot in the basis order.
pub fn slots(n: usize) -> HashMap<BasisIndex, usize> {
    basis_indices(n).into_iter().enumerate().map(|(k, idx)| (idx, k)).collect()
}

pub fn basis_slot(idx: BasisIndex) -> usize {
    basis_indices(idx.n).iter().position(|b| *b == idx).expect("canonical index")
}

pub fn is_centrosymmetric(a: &Matrix) -> bool {
    a.conj_by_c() == *a
}

/// A matrix certified to satisfy `c a c = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroMatrix(Matrix);

impl CentroMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !is_centrosymmetric(&m) {
            return Err(Error::NotCentrosymmetric);
        }
        Ok(CentroMatrix(m))
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        CentroMatrix(Matrix::identity(ring, n))
    }

    pub fn exchange(ring: &RingSpec, n: usize) -> Self {
        CentroMatrix(exchange(ring, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn ring(&self) -> &RingSpec {
        self.0.ring()
    }

    pub fn add(&self, other: &CentroMatrix) -> Result<CentroMatrix> {
        Ok(CentroMatrix(self.0.add(&other.0)?))
    }

    pub fn mul(&self, other: &CentroMatrix) -> Result<CentroMatrix> {
        let p = self.0.mul(&other.0)?;
        debug_assert!(is_centrosymmetric(&p));
        Ok(CentroMatrix(p))
    }

    pub fn scale(&self, s: &Elem) -> Result<CentroMatrix> {
        Ok(CentroMatrix(self.0.scale(s)?))
    }

    pub fn transpose(&self) -> CentroMatrix {
        CentroMatrix(self.0.transpose())
    }
}

impl fmt::Display for CentroMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn canonical_basis(ring: &RingSpec, n: usize) -> Vec<(BasisIndex, CentroMatrix)> {
    basis_indices(n).into_iter().map(|idx| (idx, CentroMatrix(idx.matrix(ring)))).collect()
}

pub fn basis_labels(n: usize) -> Vec<String> {
    basis_indices(n).iter().map(BasisIndex::label).collect()
}

/// Coordinates over the canonical basis: the coefficient of `f_{ij}` is `a_{ij}`.
pub fn coords(a: &CentroMatrix) -> Coords {
    basis_indices(a.n()).iter().map(|idx| a.0.get(idx.i, idx.j).clone()).collect()
}

/// Coordinates of an arbitrary matrix, rejecting non-members.
pub fn coords_of(a: &Matrix) -> Result<Coords> {
    Ok(coords(&CentroMatrix::new(a.clone())?))
}

pub fn from_coords(ring: &RingSpec, n: usize, v: &[Elem]) -> Result<CentroMatrix> {
    let idx = basis_indices(n);
    if v.len() != idx.len() {
        return Err(Error::DimensionMismatch(format!("expected {} coordinates, got {}", idx.len(), v.len())));
    }
    let mut m = Matrix::zero(ring, n);
    for (b, c) in idx.iter().zip(v) {
        m.set(b.i, b.j, c.clone());
        m.set(mirror(n, b.i), mirror(n, b.j), c.clone());
    }
    Ok(CentroMatrix(m))
}

/// Sparse structure constants: `table[u][v]` lists `(w, T[u][v][w])` for the
/// nonzero coefficients of `f_u f_v`.
pub type StructureTable = Vec<Vec<Vec<(usize, Elem)>>>;

type TableCache = RwLock<HashMap<(RingSpec, usize), Arc<StructureTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Structure constants of `S_n(R)`, computed by expanding each pair of basis
/// elements into matrix units, multiplying in `M_n(R)`, and reading the
/// coordinates of the product. Memoised per `(ring, n)`.
pub fn structure_constants(ring: &RingSpec, n: usize) -> Arc<StructureTable> {
    let key = (ring.clone(), n);
    if let Some(t) = table_cache().read().expect("cache lock").get(&key) {
        return Arc::clone(t);
    }
    let basis = canonical_basis(ring, n);
    let table: StructureTable = basis
        .iter()
        .map(|(_, fu)| {
            basis
                .iter()
                .map(|(_, fv)| {
                    let prod = fu.mul(fv).expect("same ring and size");
                    coords(&prod).into_iter().enumerate().filter(|(_, c)| !ring.is_zero(c)).collect()
                })
                .collect()
        })
        .collect();
    let table = Arc::new(table);
    table_cache().write().expect("cache lock").entry(key).or_insert_with(|| Arc::clone(&table));
    table
}

/// The closed product rule
/// `f_{ij} f_{pq} = delta_{jp} f_{iq} + delta_{j,n+1-p} f_{i,n+1-q}`,
/// returned as integer multiplicities over canonical indices. `None` when a
/// factor or a produced term is the fixed centre cell, where the single
/// matrix-unit form of `f_{m+1}` breaks the rule.
pub fn closed_form_product(u: BasisIndex, v: BasisIndex) -> Option<Vec<(BasisIndex, i64)>> {
    let n = u.n;
    if u.is_fixed_cell() || v.is_fixed_cell() {
        return None;
    }
    let (i, j, p, q) = (u.i, u.j, v.i, v.j);
    let mut terms: Vec<(BasisIndex, i64)> = Vec::new();
    let mut push = |idx: BasisIndex| match terms.iter_mut().find(|(t, _)| *t == idx) {
        Some((_, k)) => *k += 1,
        None => terms.push((idx, 1)),
    };
    for (hit, col) in [(delta(j, p), q), (delta(j, mirror(n, p)), mirror(n, q))] {
        if hit {
            let idx = BasisIndex::of(n, i, col);
            if idx.is_fixed_cell() {
                return None;
            }
            push(idx);
        }
    }
    terms.sort();
    Some(terms)
}

/// The diagonal idempotents `f_1, ..., f_{ceil(n/2)}`.
pub fn idempotents(ring: &RingSpec, n: usize) -> Vec<CentroMatrix> {
    (1..=half_ceil(n)).map(|i| CentroMatrix(BasisIndex::of(n, i, i).matrix(ring))).collect()
}

/// A free basis of the Peirce component `f_i S_n(R) f_j`, spanned by `f_{ij}`
/// and `f_{i,n+1-j}` (one element when these coincide).
pub fn peirce_component(ring: &RingSpec, n: usize, i: usize, j: usize) -> Result<Vec<(BasisIndex, CentroMatrix)>> {
    let k = half_ceil(n);
    if !(1..=k).contains(&i) || !(1..=k).contains(&j) {
        return Err(Error::IndexOutOfRange { i, j, n: k });
    }
    let mut idx = vec![BasisIndex::of(n, i, j), BasisIndex::of(n, i, mirror(n, j))];
    idx.sort();
    idx.dedup();
    Ok(idx.into_iter().map(|b| (b, CentroMatrix(b.matrix(ring)))).collect())
}

/// A sequence `a_1..a_m` with `a_i = a_{m+1-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeq {
    ring: RingSpec,
    entries: Vec<Elem>,
}

impl SymSeq {
    pub fn new(ring: &RingSpec, entries: Vec<Elem>) -> Result<Self> {
        let m = entries.len();
        if (0..m).any(|k| entries[k] != entries[m - 1 - k]) {
            return Err(Error::Precondition("sequence is not symmetric".into()));
        }
        Ok(SymSeq { ring: ring.clone(), entries })
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn square_side(len: usize) -> Option<usize> {
    let n = (len as f64).sqrt().round() as usize;
    (n * n == len && n > 0).then_some(n)
}

/// Row-major fill of an `n x n` matrix from a sequence of length `n^2`.
pub fn fill_row_major(ring: &RingSpec, entries: &[Elem]) -> Result<Matrix> {
    let n = square_side(entries.len())
        .ok_or_else(|| Error::DimensionMismatch(format!("sequence length {} is not a perfect square", entries.len())))?;
    Ok(Matrix::from_fn(ring, n, |i, j| entries[(i - 1) * n + (j - 1)].clone()))
}

pub fn seq_to_matrix(s: &SymSeq) -> Result<CentroMatrix> {
    let m = fill_row_major(&s.ring, &s.entries)?;
    Ok(CentroMatrix::new(m).expect("a symmetric sequence fills a centrosymmetric matrix"))
}

pub fn matrix_to_seq(a: &CentroMatrix) -> SymSeq {
    let entries = a.matrix().rows().into_iter().flatten().collect();
    SymSeq { ring: a.ring().clone(), entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::matrix_unit;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(n: usize, i: usize, j: usize) -> Matrix {
        matrix_unit(&RingSpec::Integer, n, i, j).unwrap()
    }

    fn labels(n: usize) -> Vec<String> {
        basis_labels(n)
    }

    #[test]
    fn membership() {
        let z = RingSpec::Integer;
        assert!(is_centrosymmetric(&exchange(&z, 4)));
        assert!(is_centrosymmetric(&Matrix::identity(&z, 3)));
        assert!(!is_centrosymmetric(&e(2, 1, 1)));
        assert_eq!(CentroMatrix::new(e(2, 1, 1)), Err(Error::NotCentrosymmetric));
    }

    #[test]
    fn basis_for_small_n() {
        let z = RingSpec::Integer;
        assert_eq!(labels(3), ["f1_1", "f1_2", "f1_3", "f2_1", "f2_2"]);
        let b = canonical_basis(&z, 3);
        let get = |l: &str| b.iter().find(|(i, _)| i.label() == l).unwrap().1.matrix().clone();
        assert_eq!(get("f1_1"), e(3, 1, 1).add(&e(3, 3, 3)).unwrap());
        assert_eq!(get("f2_2"), e(3, 2, 2));
        assert_eq!(get("f1_2"), e(3, 1, 2).add(&e(3, 3, 2)).unwrap());
        assert_eq!(get("f1_3"), e(3, 1, 3).add(&e(3, 3, 1)).unwrap());
        assert_eq!(get("f2_1"), e(3, 2, 1).add(&e(3, 2, 3)).unwrap());

        assert_eq!(labels(2), ["f1_1", "f1_2"]);
        let b2 = canonical_basis(&z, 2);
        assert_eq!(*b2[0].1.matrix(), Matrix::identity(&z, 2));
        assert_eq!(*b2[1].1.matrix(), exchange(&z, 2));

        assert_eq!(labels(1), ["f1_1"]);
        assert_eq!(*canonical_basis(&z, 1)[0].1.matrix(), Matrix::identity(&z, 1));
    }

    #[test]
    fn index_canonicalisation() {
        assert_eq!(BasisIndex::new(3, 2, 3).unwrap().label(), "f2_1");
        assert_eq!(BasisIndex::new(3, 3, 3).unwrap().label(), "f1_1");
        assert_eq!(BasisIndex::new(4, 4, 1).unwrap().label(), "f1_4");
        assert!(BasisIndex::new(4, 5, 1).is_err());
        assert!(BasisIndex::new(5, 3, 3).unwrap().is_fixed_cell());
        for n in 1..=7 {
            for (k, idx) in basis_indices(n).iter().enumerate() {
                assert_eq!(basis_slot(*idx), k);
            }
        }
    }

    #[test]
    fn rank_matches_ceiling() {
        for n in 1..=12 {
            assert_eq!(basis_indices(n).len(), rank(n));
            assert_eq!(rank(n), (n * n + 1) / 2);
        }
    }

    #[test]
    fn coordinates() {
        let z = RingSpec::Integer;
        let one = z.one();
        let zero = z.zero();
        assert_eq!(coords(&CentroMatrix::identity(&z, 3)), vec![one.clone(), zero.clone(), zero.clone(), zero.clone(), one.clone()]);
        // c = f_13 + f_2
        assert_eq!(coords(&CentroMatrix::exchange(&z, 3)), vec![zero.clone(), zero.clone(), one.clone(), zero.clone(), one.clone()]);
        let f12 = &canonical_basis(&z, 3)[1].1;
        assert_eq!(coords(f12), vec![zero.clone(), one.clone(), zero.clone(), zero.clone(), zero.clone()]);
        assert!(from_coords(&z, 3, &vec![zero.clone(); 5]).unwrap().matrix().is_zero());
        assert_eq!(from_coords(&z, 3, &[one.clone(), zero.clone(), zero.clone(), zero.clone(), one]).unwrap(), CentroMatrix::identity(&z, 3));
        assert!(matches!(from_coords(&z, 3, &vec![zero; 4]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn coordinate_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ring in [RingSpec::Integer, RingSpec::Rational, RingSpec::group_ring_c2(RingSpec::Modular(3))] {
            for n in 1..=6 {
                let v: Coords = (0..rank(n)).map(|_| ring.random_elem(&mut rng)).collect();
                let a = from_coords(&ring, n, &v).unwrap();
                assert_eq!(coords(&a), v);
            }
        }
    }

    fn product(n: usize, a: &str, b: &str) -> String {
        let z = RingSpec::Integer;
        let t = structure_constants(&z, n);
        let l = labels(n);
        let u = l.iter().position(|x| x == a).unwrap();
        let v = l.iter().position(|x| x == b).unwrap();
        t[u][v]
            .iter()
            .map(|(w, c)| if z.is_one(c) { l[*w].clone() } else { format!("{}*{}", z.format_elem(c), l[*w]) })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    #[test]
    fn products_for_n3() {
        assert_eq!(product(3, "f1_2", "f2_1"), "f1_1 + f1_3");
        assert_eq!(product(3, "f2_1", "f1_2"), "2*f2_2");
        assert_eq!(product(3, "f1_3", "f1_3"), "f1_1");
        assert_eq!(product(2, "f1_2", "f1_2"), "f1_1");
    }

    #[test]
    fn closed_form_agrees_where_applicable() {
        let z = RingSpec::Integer;
        for n in 1..=8 {
            let t = structure_constants(&z, n);
            let idx = basis_indices(n);
            let slots = slots(n);
            for (u, a) in idx.iter().enumerate() {
                for (v, b) in idx.iter().enumerate() {
                    if let Some(terms) = closed_form_product(*a, *b) {
                        let predicted: Vec<(usize, Elem)> = {
                            let mut p: Vec<_> = terms.iter().map(|(w, k)| (slots[w], z.from_i64(*k))).collect();
                            p.sort_by_key(|(w, _)| *w);
                            p
                        };
                        assert_eq!(t[u][v], predicted, "n={n} {a}*{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_decomposition() {
        let z = RingSpec::Integer;
        for n in 1..=7 {
            let fs = idempotents(&z, n);
            let mut total = Matrix::zero(&z, n);
            for (a, fa) in fs.iter().enumerate() {
                total = total.add(fa.matrix()).unwrap();
                for (b, fb) in fs.iter().enumerate() {
                    let p = fa.mul(fb).unwrap();
                    if a == b {
                        assert_eq!(p, *fa);
                    } else {
                        assert!(p.matrix().is_zero());
                    }
                }
            }
            assert_eq!(total, Matrix::identity(&z, n));
        }
        let f5 = idempotents(&z, 5);
        assert_eq!(*f5[2].matrix(), e(5, 3, 3));
        let f4 = idempotents(&z, 4);
        assert_eq!(*f4[0].matrix(), e(4, 1, 1).add(&e(4, 4, 4)).unwrap());
        assert_eq!(*f4[1].matrix(), e(4, 2, 2).add(&e(4, 3, 3)).unwrap());
        assert_eq!(*idempotents(&z, 1)[0].matrix(), Matrix::identity(&z, 1));
    }

    #[test]
    fn peirce_components() {
        let z = RingSpec::Integer;
        let names = |n, i, j| -> Vec<String> {
            peirce_component(&z, n, i, j).unwrap().iter().map(|(b, _)| b.label()).collect()
        };
        assert_eq!(names(3, 1, 1), ["f1_1", "f1_3"]);
        assert_eq!(names(3, 2, 2), ["f2_2"]);
        assert_eq!(names(4, 1, 2), ["f1_2", "f1_3"]);
        assert!(peirce_component(&z, 4, 3, 1).is_err());
        for n in 1..=9 {
            let k = half_ceil(n);
            let total: usize = (1..=k).flat_map(|i| (1..=k).map(move |j| (i, j))).map(|(i, j)| names(n, i, j).len()).sum();
            assert_eq!(total, rank(n));
        }
    }

    #[test]
    fn transpose_permutes_basis() {
        let z = RingSpec::Integer;
        for n in 1..=8 {
            for (idx, f) in canonical_basis(&z, n) {
                let t = idx.transpose();
                assert_eq!(*f.transpose().matrix(), t.matrix(&z));
                let fixed = t == idx;
                assert_eq!(fixed, idx.i() == idx.j() || idx.i() + idx.j() == n + 1, "n={n} {idx}");
            }
        }
    }

    #[test]
    fn symmetric_sequences() {
        let z = RingSpec::Integer;
        let (a, b) = (z.from_i64(5), z.from_i64(-2));
        let s = SymSeq::new(&z, vec![a.clone(), b.clone(), b.clone(), a.clone()]).unwrap();
        let m = seq_to_matrix(&s).unwrap();
        assert_eq!(m.matrix().rows(), vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]]);
        assert_eq!(matrix_to_seq(&m), s);

        let nine: Vec<Elem> = [1, 2, 3, 4, 5, 4, 3, 2, 1].iter().map(|&k| z.from_i64(k)).collect();
        let m = seq_to_matrix(&SymSeq::new(&z, nine).unwrap()).unwrap();
        assert_eq!(m.matrix().to_literals(), vec![vec!["1", "2", "3"], vec!["4", "5", "4"], vec!["3", "2", "1"]]);

        let odd: Vec<Elem> = (0..3).map(|_| z.one()).collect();
        assert!(seq_to_matrix(&SymSeq::new(&z, odd).unwrap()).is_err());
        assert!(SymSeq::new(&z, vec![z.one(), z.zero()]).is_err());
    }
}
