//! Finite-rank algebras given by structure constants on a free basis, with
//! optional involution; ideals, quotients, linear-map witnesses and centres.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::censym::{self, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::{self, Coords, Insertion, Membership, Span};
use crate::report::{CheckReport, Clause, Counterexample, Verdict};
use crate::rings::{Elem, RingSpec};

#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    ring: RingSpec,
    labels: Vec<String>,
    table: Arc<StructureTable>,
    unit: Coords,
    /// Row `u` holds the coordinates of `i(b_u)`.
    involution: Option<Vec<Coords>>,
}

/// Drops zero coefficients from a dense vector.
fn sparse(ring: &RingSpec, v: Coords) -> Vec<(usize, Elem)> {
    v.into_iter().enumerate().filter(|(_, c)| !ring.is_zero(c)).collect()
}

impl StructureAlgebra {
    /// Assembles an algebra from its parts; only shapes are checked here,
    /// the axioms are checked by [`StructureAlgebra::audit`].
    pub fn new(
        ring: &RingSpec,
        labels: Vec<String>,
        table: Arc<StructureTable>,
        unit: Coords,
        involution: Option<Vec<Coords>>,
    ) -> Result<Self> {
        let r = labels.len();
        let bad_table = table.len() != r
            || table
                .iter()
                .any(|row| row.len() != r || row.iter().any(|e| e.iter().any(|(w, _)| *w >= r)));
        if bad_table || unit.len() != r {
            return Err(Error::DimensionMismatch(format!(
                "structure data does not match rank {r}"
            )));
        }
        if let Some(inv) = &involution {
            if inv.len() != r || inv.iter().any(|row| row.len() != r) {
                return Err(Error::DimensionMismatch("involution matrix has the wrong shape".into()));
            }
        }
        Ok(StructureAlgebra {
            ring: ring.clone(),
            labels,
            table,
            unit,
            involution,
        })
    }

    /// Builds the table from a product rule on basis indices.
    pub fn from_products(
        ring: &RingSpec,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Coords,
        unit: Coords,
        involution: Option<Vec<Coords>>,
    ) -> Result<Self> {
        let r = labels.len();
        let table: StructureTable = (0..r)
            .map(|u| (0..r).map(|v| sparse(ring, product(u, v))).collect())
            .collect();
        StructureAlgebra::new(ring, labels, Arc::new(table), unit, involution)
    }

    /// The rank-0 algebra.
    pub fn zero(ring: &RingSpec) -> Self {
        StructureAlgebra {
            ring: ring.clone(),
            labels: vec![],
            table: Arc::new(vec![]),
            unit: vec![],
            involution: Some(vec![]),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn unit(&self) -> &Coords {
        &self.unit
    }

    pub fn involution(&self) -> Option<&Vec<Coords>> {
        self.involution.as_ref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch("label count differs from rank".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn without_involution(mut self) -> Self {
        self.involution = None;
        self
    }

    pub fn basis_vector(&self, u: usize) -> Coords {
        linalg::unit_vector(&self.ring, self.rank(), u)
    }

    pub fn zero_vector(&self) -> Coords {
        linalg::zeros(&self.ring, self.rank())
    }

    /// Coordinates of the element named by `label`.
    pub fn element(&self, label: &str) -> Result<Coords> {
        let u = self.label_index(label).ok_or_else(|| Error::Parse {
            what: "basis label",
            input: label.into(),
        })?;
        Ok(self.basis_vector(u))
    }

    pub fn mul_basis(&self, u: usize, v: usize) -> Coords {
        let mut out = self.zero_vector();
        for (w, c) in &self.table[u][v] {
            out[*w] = c.clone();
        }
        out
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Coords {
        let r = &self.ring;
        let mut out = self.zero_vector();
        for (u, x) in a.iter().enumerate().filter(|(_, x)| !r.is_zero(x)) {
            for (v, y) in b.iter().enumerate().filter(|(_, y)| !r.is_zero(y)) {
                let xy = r.mul(x, y);
                for (w, c) in &self.table[u][v] {
                    out[*w] = r.add(&out[*w], &r.mul(&xy, c));
                }
            }
        }
        out
    }

    /// `b_u * a`
    pub fn left_mul_basis(&self, u: usize, a: &[Elem]) -> Coords {
        self.mul(&self.basis_vector(u), a)
    }

    /// `a * b_u`
    pub fn right_mul_basis(&self, a: &[Elem], u: usize) -> Coords {
        self.mul(a, &self.basis_vector(u))
    }

    pub fn apply_involution(&self, a: &[Elem]) -> Option<Coords> {
        self.involution
            .as_ref()
            .map(|inv| linalg::combine(&self.ring, a, inv, self.rank()))
    }

    pub fn format(&self, a: &[Elem]) -> String {
        format_combination(&self.ring, &self.labels, a)
    }

    /// Checks associativity and unit laws on all basis triples and pairs, and
    /// that the involution is an order-2 anti-automorphism.
    pub fn audit(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let r = self.rank();
        let ring = &self.ring;
        let name = |u: usize| self.labels[u].clone();

        let mut cx = None;
        'assoc: for u in 0..r {
            for v in 0..r {
                for w in 0..r {
                    let mut lhs = self.zero_vector();
                    for (t, c) in &self.table[u][v] {
                        for (s, d) in &self.table[*t][w] {
                            lhs[*s] = ring.add(&lhs[*s], &ring.mul(c, d));
                        }
                    }
                    let mut rhs = self.zero_vector();
                    for (t, c) in &self.table[v][w] {
                        for (s, d) in &self.table[u][*t] {
                            rhs[*s] = ring.add(&rhs[*s], &ring.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        cx = Some(Counterexample::new(
                            vec![name(u), name(v), name(w)],
                            self.format(&lhs),
                            self.format(&rhs),
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        rep.push(Clause::from_search("associativity", cx));

        let mut cx = None;
        for u in 0..r {
            let b = self.basis_vector(u);
            let left = self.mul(&self.unit, &b);
            let right = self.mul(&b, &self.unit);
            if left != b || right != b {
                let bad = if left != b { left } else { right };
                cx = Some(Counterexample::new(
                    vec!["1".into(), name(u)],
                    self.format(&bad),
                    self.format(&b),
                ));
                break;
            }
        }
        rep.push(Clause::from_search("unit", cx));

        if let Some(inv) = &self.involution {
            let mut cx = None;
            'anti: for u in 0..r {
                for v in 0..r {
                    let lhs = self
                        .apply_involution(&self.mul_basis(u, v))
                        .expect("involution present");
                    let rhs = self.mul(&inv[v], &inv[u]);
                    if lhs != rhs {
                        cx = Some(Counterexample::new(
                            vec![name(u), name(v)],
                            self.format(&lhs),
                            self.format(&rhs),
                        ));
                        break 'anti;
                    }
                }
            }
            rep.push(Clause::from_search("involution-anti-multiplicative", cx));

            let mut cx = None;
            for u in 0..r {
                let twice = self.apply_involution(&inv[u]).expect("involution present");
                if twice != self.basis_vector(u) {
                    cx = Some(Counterexample::new(vec![name(u)], self.format(&twice), name(u)));
                    break;
                }
            }
            rep.push(Clause::from_search("involution-order-two", cx));

            let fixes_unit = self.apply_involution(&self.unit).as_ref() == Some(&self.unit);
            rep.push(Clause::from_search(
                "involution-fixes-unit",
                (!fixes_unit).then(|| {
                    Counterexample::new(
                        vec!["1".into()],
                        self.format(&self.apply_involution(&self.unit).unwrap()),
                        self.format(&self.unit),
                    )
                }),
            ));

            let signed = inv.iter().all(|row| {
                let nz: Vec<&Elem> = row.iter().filter(|c| !ring.is_zero(c)).collect();
                nz.len() == 1 && (ring.is_one(nz[0]) || ring.is_one(&ring.neg(nz[0])))
            });
            rep.push(Clause::with_verdict(
                "involution-signed-permutation",
                Verdict::Pass,
                if signed {
                    "signed basis permutation"
                } else {
                    "general invertible matrix"
                },
            ));
        }
        rep
    }

    /// Serialises labels, the dense tensor of element literals, the unit and
    /// the involution matrix.
    pub fn to_json(&self) -> Value {
        let lit = |c: &Elem| self.ring.format_elem(c);
        let vec_lits = |v: &[Elem]| v.iter().map(lit).collect::<Vec<_>>();
        let r = self.rank();
        let tensor: Vec<Vec<Vec<String>>> = (0..r)
            .map(|u| (0..r).map(|v| vec_lits(&self.mul_basis(u, v))).collect())
            .collect();
        let involution = self
            .involution
            .as_ref()
            .map(|inv| inv.iter().map(|row| vec_lits(row)).collect::<Vec<_>>());
        json!({
            "ring": self.ring.to_string(),
            "rank": r,
            "labels": self.labels,
            "tensor": tensor,
            "unit": vec_lits(&self.unit),
            "involution": involution,
        })
    }
}

/// Renders `sum a_u * label_u`, e.g. `f1_1 + f1_3` or `2*f2_2`.
pub fn format_combination(ring: &RingSpec, labels: &[String], a: &[Elem]) -> String {
    let mut out = String::new();
    for (c, label) in a.iter().zip(labels) {
        if ring.is_zero(c) {
            continue;
        }
        let lit = ring.format_elem(c);
        let neg = ring.format_elem(&ring.neg(c));
        let simple =
            |s: &str| !s.contains(['+', '*', '-']) || (s.starts_with('-') && !s[1..].contains(['+', '*', '-']));
        let (sign, body) = if lit.starts_with('-') && simple(&lit) && !out.is_empty() {
            (" - ", neg)
        } else {
            (if out.is_empty() { "" } else { " + " }, lit)
        };
        out.push_str(sign);
        if body == "1" {
            out.push_str(label);
        } else if body == "-1" {
            out.push('-');
            out.push_str(label);
        } else if simple(&body) {
            out.push_str(&format!("{body}*{label}"));
        } else {
            out.push_str(&format!("({body})*{label}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `S_n(R)` on the canonical f-basis, with the transpose `f_ij -> f_ji`.
pub fn algebra_of_censym(ring: &RingSpec, n: usize) -> Result<StructureAlgebra> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let table = censym::structure_constants(ring, n);
    let idx = censym::basis_indices(n);
    let slots = censym::slots(n);
    let unit = censym::coords(&censym::CentroMatrix::identity(ring, n));
    let involution = idx
        .iter()
        .map(|b| linalg::unit_vector(ring, idx.len(), slots[&b.transpose()]))
        .collect();
    StructureAlgebra::new(ring, censym::basis_labels(n), table, unit, Some(involution))
}

/// `M_m(B[C_2])` flattened over `B`: the basis interleaves `E<i>_<j>` and
/// `xE<i>_<j>`, and the transpose fixes coefficients.
pub fn group_ring_matrix_algebra(base: &RingSpec, m: usize) -> StructureAlgebra {
    let r = 2 * m * m;
    let slot = |i: usize, j: usize, x: usize| 2 * (i * m + j) + x;
    let mut labels = Vec::with_capacity(r);
    for i in 0..m {
        for j in 0..m {
            labels.push(format!("E{}_{}", i + 1, j + 1));
            labels.push(format!("xE{}_{}", i + 1, j + 1));
        }
    }
    let decode = |u: usize| ((u / 2) / m, (u / 2) % m, u % 2);
    let product = |u: usize, v: usize| {
        let (i, j, x) = decode(u);
        let (k, l, y) = decode(v);
        let mut out = linalg::zeros(base, r);
        if j == k {
            out[slot(i, l, (x + y) % 2)] = base.one();
        }
        out
    };
    let mut unit = linalg::zeros(base, r);
    for i in 0..m {
        unit[slot(i, i, 0)] = base.one();
    }
    let involution = (0..r)
        .map(|u| {
            let (i, j, x) = decode(u);
            linalg::unit_vector(base, r, slot(j, i, x))
        })
        .collect();
    StructureAlgebra::from_products(base, labels, product, unit, Some(involution)).expect("consistent shapes")
}

/// `M_m(R)` on matrix units `E<i>_<j>` with the transpose. `m = 0` gives the
/// zero algebra.
pub fn full_matrix_algebra(ring: &RingSpec, m: usize) -> StructureAlgebra {
    let r = m * m;
    let labels = (0..r).map(|u| format!("E{}_{}", u / m + 1, u % m + 1)).collect();
    let product = |u: usize, v: usize| {
        let mut out = linalg::zeros(ring, r);
        if u % m == v / m {
            out[(u / m) * m + v % m] = ring.one();
        }
        out
    };
    let mut unit = linalg::zeros(ring, r);
    for i in 0..m {
        unit[i * m + i] = ring.one();
    }
    let involution = (0..r)
        .map(|u| linalg::unit_vector(ring, r, (u % m) * m + u / m))
        .collect();
    StructureAlgebra::from_products(ring, labels, product, unit, Some(involution)).expect("consistent shapes")
}

/// `B[C_2]` over `B`, basis `1, x`, with the identity involution.
pub fn group_ring_algebra(base: &RingSpec) -> StructureAlgebra {
    group_ring_matrix_algebra(base, 1)
        .with_labels(vec!["1".into(), "x".into()])
        .expect("rank 2")
}

/// The direct product `A x B`; its basis lists `(a,0)` then `(0,b)`.
pub fn product_algebra(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<StructureAlgebra> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch {
            left: a.ring.to_string(),
            right: b.ring.to_string(),
        });
    }
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra + rb;
    let ring = &a.ring;
    let embed = |v: &[Elem], offset: usize| {
        let mut out = linalg::zeros(ring, r);
        for (k, c) in v.iter().enumerate() {
            out[offset + k] = c.clone();
        }
        out
    };
    let labels = a
        .labels
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.labels.iter().map(|l| format!("(0,{l})")))
        .collect();
    let product = |u: usize, v: usize| {
        if u < ra && v < ra {
            embed(&a.mul_basis(u, v), 0)
        } else if u >= ra && v >= ra {
            embed(&b.mul_basis(u - ra, v - ra), ra)
        } else {
            linalg::zeros(ring, r)
        }
    };
    let unit = linalg::add(ring, &embed(&a.unit, 0), &embed(&b.unit, ra));
    let involution = match (&a.involution, &b.involution) {
        (Some(ia), Some(ib)) => Some(
            ia.iter()
                .map(|row| embed(row, 0))
                .chain(ib.iter().map(|row| embed(row, ra)))
                .collect(),
        ),
        _ => None,
    };
    StructureAlgebra::from_products(ring, labels, product, unit, involution)
}

/// The subalgebra (with its own unit `unit`, e.g. a corner `eAe`) spanned by
/// `basis`, which must be free and closed under multiplication. The
/// involution is restricted when it preserves the span.
pub fn subalgebra(
    a: &StructureAlgebra,
    basis: Vec<Coords>,
    unit: &[Elem],
    labels: Vec<String>,
) -> Result<StructureAlgebra> {
    let ring = a.ring();
    let k = basis.len();
    if labels.len() != k {
        return Err(Error::DimensionMismatch("label count differs from basis size".into()));
    }
    let span = Span::basis(ring, a.rank(), &basis)?;
    let solve = |v: &[Elem]| match span.solve(v) {
        Membership::In(c) => Ok(c),
        Membership::NotIn => Err(Error::Precondition(format!("{} leaves the span", a.format(v)))),
        Membership::Undetermined => Err(membership_error("subalgebra")),
    };
    let mut table = Vec::with_capacity(k);
    for x in &basis {
        let mut row = Vec::with_capacity(k);
        for y in &basis {
            row.push(sparse(ring, solve(&a.mul(x, y))?));
        }
        table.push(row);
    }
    let unit = solve(unit)?;
    let involution = match &a.involution {
        Some(_) => basis
            .iter()
            .map(|v| solve(&a.apply_involution(v).expect("involution present")))
            .collect::<Result<Vec<_>>>()
            .ok(),
        None => None,
    };
    StructureAlgebra::new(ring, labels, Arc::new(table), unit, involution)
}

/// A free basis of a two-sided ideal, with closure certified.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    algebra: StructureAlgebra,
    vectors: Vec<Coords>,
    span: Span,
}

fn membership_error(what: &str) -> Error {
    Error::FreenessUndetermined(format!("{what}: no unit pivot available"))
}

impl IdealBasis {
    /// Validates that `vectors` are free and span a two-sided ideal.
    pub fn new(algebra: &StructureAlgebra, vectors: Vec<Coords>) -> Result<Self> {
        let span = Span::basis(algebra.ring(), algebra.rank(), &vectors)?;
        for v in &vectors {
            for u in 0..algebra.rank() {
                for p in [algebra.left_mul_basis(u, v), algebra.right_mul_basis(v, u)] {
                    match span.solve(&p) {
                        Membership::In(_) => {}
                        Membership::NotIn => {
                            return Err(Error::Precondition(format!(
                                "span is not a two-sided ideal: {} escapes",
                                algebra.format(&p)
                            )))
                        }
                        Membership::Undetermined => return Err(membership_error("ideal closure")),
                    }
                }
            }
        }
        Ok(IdealBasis {
            algebra: algebra.clone(),
            vectors,
            span,
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn vectors(&self) -> &[Coords] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.span.contains(v)
    }

    /// Coordinates of `v` over this basis.
    pub fn solve(&self, v: &[Elem]) -> Membership {
        self.span.solve(v)
    }

    /// Whether the involution maps the ideal into itself.
    pub fn involution_stable(&self) -> Option<bool> {
        let imgs: Option<Vec<Coords>> = self.vectors.iter().map(|v| self.algebra.apply_involution(v)).collect();
        imgs.map(|imgs| imgs.iter().all(|w| self.contains(w)))
    }

    /// Whether every product of two ideal elements vanishes.
    pub fn squares_to_zero(&self) -> bool {
        self.vectors.iter().all(|a| {
            self.vectors
                .iter()
                .all(|b| linalg::is_zero(self.algebra.ring(), &self.algebra.mul(a, b)))
        })
    }

    pub fn labels(&self) -> Vec<String> {
        self.vectors.iter().map(|v| self.algebra.format(v)).collect()
    }
}

/// The smallest two-sided ideal containing `gens`, as reduced echelon rows.
pub fn ideal_generated(a: &StructureAlgebra, gens: &[Coords]) -> Result<IdealBasis> {
    if gens.is_empty() {
        return Err(Error::Precondition("ideal generators must be nonempty".into()));
    }
    let mut span = Span::new(a.ring(), a.rank());
    let mut queue: VecDeque<Coords> = gens.iter().cloned().collect();
    let mut seen: HashSet<Coords> = HashSet::new();
    while let Some(v) = queue.pop_front() {
        if !seen.insert(v.clone()) || matches!(span.insert(&v), Insertion::Dependent(_)) {
            continue;
        }
        // Without unit pivots the pending rows can keep growing (2v, 4v, ...).
        if span.rank() + span.pending() > a.rank() {
            return Err(membership_error("ideal generation"));
        }
        for u in 0..a.rank() {
            queue.push_back(a.left_mul_basis(u, &v));
            queue.push_back(a.right_mul_basis(&v, u));
        }
    }
    if !span.is_settled() {
        return Err(membership_error("ideal generation"));
    }
    let mut rows: Vec<(usize, Coords)> = span.pivots().into_iter().zip(span.echelon_rows()).collect();
    rows.sort_by_key(|(p, _)| *p);
    IdealBasis::new(a, rows.into_iter().map(|(_, v)| v).collect())
}

/// A vector space or free module endowed with a distinguished basis, seen
/// inside an ambient algebra as a left ideal (or two-sided ideal).
#[derive(Clone, Debug)]
pub struct BasedModule {
    algebra: StructureAlgebra,
    basis: Vec<Coords>,
    span: Span,
}

impl BasedModule {
    pub fn new(algebra: &StructureAlgebra, basis: Vec<Coords>) -> Result<Self> {
        let span = Span::basis(algebra.ring(), algebra.rank(), &basis)?;
        Ok(BasedModule {
            algebra: algebra.clone(),
            basis,
            span,
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[Coords] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Module coordinates of an ambient element.
    pub fn solve(&self, v: &[Elem]) -> Membership {
        self.span.solve(v)
    }

    /// Ambient element with the given module coordinates.
    pub fn embed(&self, m: &[Elem]) -> Coords {
        linalg::combine(self.algebra.ring(), m, &self.basis, self.algebra.rank())
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|v| self.algebra.format(v)).collect()
    }
}

#[derive(Clone, Debug)]
pub enum Domain {
    Algebra(StructureAlgebra),
    Module(BasedModule),
}

impl Domain {
    pub fn rank(&self) -> usize {
        match self {
            Domain::Algebra(a) => a.rank(),
            Domain::Module(m) => m.rank(),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        match self {
            Domain::Algebra(a) => a.ring(),
            Domain::Module(m) => m.algebra.ring(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            Domain::Algebra(a) => a.labels.clone(),
            Domain::Module(m) => m.labels(),
        }
    }

    pub fn format(&self, v: &[Elem]) -> String {
        match self {
            Domain::Algebra(a) => a.format(v),
            Domain::Module(m) => m.algebra.format(&m.embed(v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    AlgebraHomomorphism,
    LeftModuleHomomorphism,
    BimoduleHomomorphism,
    Bijective,
    Surjective,
    InvolutionCompatible,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::AlgebraHomomorphism => "algebra-homomorphism",
            Property::LeftModuleHomomorphism => "left-module-homomorphism",
            Property::BimoduleHomomorphism => "bimodule-homomorphism",
            Property::Bijective => "bijective",
            Property::Surjective => "surjective",
            Property::InvolutionCompatible => "involution-compatible",
        }
    }
}

/// A linear map given by the coordinates of the images of the source basis,
/// together with the properties it is claimed to have.
#[derive(Clone, Debug)]
pub struct LinearMapWitness {
    pub source: Domain,
    pub target: Domain,
    /// Row `u` is the image of source basis element `u`.
    pub matrix: Vec<Coords>,
    pub inverse: Option<Vec<Coords>>,
    pub claims: Vec<Property>,
}

impl LinearMapWitness {
    pub fn new(source: Domain, target: Domain, matrix: Vec<Coords>, claims: Vec<Property>) -> Result<Self> {
        if matrix.len() != source.rank() || matrix.iter().any(|r| r.len() != target.rank()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix must be {} x {}",
                source.rank(),
                target.rank()
            )));
        }
        Ok(LinearMapWitness {
            source,
            target,
            matrix,
            inverse: None,
            claims,
        })
    }

    /// Attaches the inverse, computed by exact elimination.
    pub fn with_computed_inverse(mut self) -> Result<Self> {
        self.inverse = Some(linalg::inverse(self.source.ring(), &self.matrix)?);
        Ok(self)
    }

    pub fn with_inverse(mut self, inverse: Vec<Coords>) -> Self {
        self.inverse = Some(inverse);
        self
    }

    pub fn apply(&self, v: &[Elem]) -> Coords {
        linalg::combine(self.source.ring(), v, &self.matrix, self.target.rank())
    }

    pub fn claims(&self, p: Property) -> bool {
        self.claims.contains(&p)
    }

    pub fn to_json(&self) -> Value {
        let ring = self.source.ring();
        let src = self.source.labels();
        let tgt = self.target.labels();
        let images: Vec<Value> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(u, row)| {
                json!({
                    "source": src[u],
                    "image": self.target.format(row),
                    "coords": row.iter().map(|c| ring.format_elem(c)).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "source_basis": src,
            "target_basis": tgt,
            "images": images,
            "claims": self.claims.iter().map(|p| p.name()).collect::<Vec<_>>(),
            "has_inverse": self.inverse.is_some(),
        })
    }
}

/// Checks every claimed property of `w` exhaustively on bases.
pub fn check_witness(w: &LinearMapWitness) -> CheckReport {
    let mut rep = CheckReport::new();
    for &p in &w.claims {
        let clause = match p {
            Property::AlgebraHomomorphism => check_algebra_hom(w),
            Property::LeftModuleHomomorphism => check_module_hom(w, false),
            Property::BimoduleHomomorphism => check_module_hom(w, true),
            Property::Bijective => check_bijective(w),
            Property::Surjective => check_surjective(w),
            Property::InvolutionCompatible => check_involution(w),
        };
        rep.push(clause);
    }
    rep
}

fn check_algebra_hom(w: &LinearMapWitness) -> Clause {
    let name = Property::AlgebraHomomorphism.name();
    let (Domain::Algebra(s), Domain::Algebra(t)) = (&w.source, &w.target) else {
        return Clause::with_verdict(name, Verdict::Fail, "source and target must be algebras");
    };
    let img_unit = w.apply(&s.unit);
    if img_unit != t.unit {
        return Clause::fail(
            name,
            Counterexample::new(vec!["1".into()], t.format(&img_unit), t.format(&t.unit)),
        );
    }
    for u in 0..s.rank() {
        for v in 0..s.rank() {
            let lhs = w.apply(&s.mul_basis(u, v));
            let rhs = t.mul(&w.matrix[u], &w.matrix[v]);
            if lhs != rhs {
                return Clause::fail(
                    name,
                    Counterexample::new(
                        vec![s.labels[u].clone(), s.labels[v].clone()],
                        t.format(&lhs),
                        t.format(&rhs),
                    ),
                );
            }
        }
    }
    Clause::pass(name)
}

/// Module coordinates of `s * m` (or `m * s`) for `m` given by coordinates.
fn act(m: &BasedModule, s: usize, v: &[Elem], right: bool) -> std::result::Result<Coords, Verdict> {
    let x = m.embed(v);
    let p = if right {
        m.algebra.right_mul_basis(&x, s)
    } else {
        m.algebra.left_mul_basis(s, &x)
    };
    match m.solve(&p) {
        Membership::In(c) => Ok(c),
        Membership::NotIn => Err(Verdict::Fail),
        Membership::Undetermined => Err(Verdict::Undetermined),
    }
}

fn check_module_hom(w: &LinearMapWitness, both_sides: bool) -> Clause {
    let name = if both_sides {
        Property::BimoduleHomomorphism.name()
    } else {
        Property::LeftModuleHomomorphism.name()
    };
    let (Domain::Module(s), Domain::Module(t)) = (&w.source, &w.target) else {
        return Clause::with_verdict(name, Verdict::Fail, "source and target must be based modules");
    };
    if s.algebra.labels != t.algebra.labels || s.algebra.ring != t.algebra.ring {
        return Clause::with_verdict(name, Verdict::Fail, "modules over different algebras");
    }
    let alg = &s.algebra;
    let sides: &[bool] = if both_sides { &[false, true] } else { &[false] };
    for &right in sides {
        for a in 0..alg.rank() {
            for m in 0..s.rank() {
                let basis_m = linalg::unit_vector(alg.ring(), s.rank(), m);
                let acted = match act(s, a, &basis_m, right) {
                    Ok(c) => c,
                    Err(v) => return Clause::with_verdict(name, v, "source is not closed under the action"),
                };
                let lhs = w.apply(&acted);
                let rhs = match act(t, a, &w.matrix[m], right) {
                    Ok(c) => c,
                    Err(v) => return Clause::with_verdict(name, v, "target is not closed under the action"),
                };
                if lhs != rhs {
                    let (x, y) = (alg.labels[a].clone(), s.labels()[m].clone());
                    let inputs = if right { vec![y, x] } else { vec![x, y] };
                    return Clause::fail(
                        name,
                        Counterexample::new(
                            inputs,
                            t.algebra.format(&t.embed(&lhs)),
                            t.algebra.format(&t.embed(&rhs)),
                        ),
                    );
                }
            }
        }
    }
    Clause::pass(name)
}

fn check_bijective(w: &LinearMapWitness) -> Clause {
    let name = Property::Bijective.name();
    let Some(inv) = &w.inverse else {
        return Clause::fail(
            name,
            Counterexample::new(vec!["inverse".into()], "missing", "two-sided inverse"),
        );
    };
    let ring = w.source.ring();
    if w.source.rank() != w.target.rank() || inv.len() != w.target.rank() {
        return Clause::fail(
            name,
            Counterexample::new(
                vec!["ranks".into()],
                w.source.rank().to_string(),
                w.target.rank().to_string(),
            ),
        );
    }
    let r = w.source.rank();
    let id = linalg::identity(ring, r);
    let fwd = linalg::mat_mul(ring, &w.matrix, inv, r);
    let back = linalg::mat_mul(ring, inv, &w.matrix, r);
    for (k, (f, b)) in fwd.iter().zip(&back).enumerate() {
        if *f != id[k] {
            return Clause::fail(
                name,
                Counterexample::new(
                    vec![format!("row {k} of map*inverse")],
                    w.source.format(f),
                    w.source.format(&id[k]),
                ),
            );
        }
        if *b != id[k] {
            return Clause::fail(
                name,
                Counterexample::new(
                    vec![format!("row {k} of inverse*map")],
                    w.target.format(b),
                    w.target.format(&id[k]),
                ),
            );
        }
    }
    Clause::pass(name)
}

fn check_surjective(w: &LinearMapWitness) -> Clause {
    let name = Property::Surjective.name();
    let ring = w.source.ring();
    let mut span = Span::new(ring, w.target.rank());
    for row in &w.matrix {
        span.insert(row);
    }
    let labels = w.target.labels();
    for t in 0..w.target.rank() {
        match span.solve(&linalg::unit_vector(ring, w.target.rank(), t)) {
            Membership::In(_) => {}
            Membership::NotIn => {
                return Clause::fail(
                    name,
                    Counterexample::new(vec![labels[t].clone()], "not in image", labels[t].clone()),
                )
            }
            Membership::Undetermined => {
                return Clause::with_verdict(name, Verdict::Undetermined, "image has no unit pivots")
            }
        }
    }
    Clause::pass(name)
}

fn check_involution(w: &LinearMapWitness) -> Clause {
    let name = Property::InvolutionCompatible.name();
    let (Domain::Algebra(s), Domain::Algebra(t)) = (&w.source, &w.target) else {
        return Clause::with_verdict(name, Verdict::Fail, "source and target must be algebras");
    };
    let (Some(is), Some(_)) = (&s.involution, &t.involution) else {
        return Clause::with_verdict(name, Verdict::Fail, "both algebras need an involution");
    };
    for u in 0..s.rank() {
        let lhs = t.apply_involution(&w.matrix[u]).expect("target involution");
        let rhs = w.apply(&is[u]);
        if lhs != rhs {
            return Clause::fail(
                name,
                Counterexample::new(vec![s.labels[u].clone()], t.format(&lhs), t.format(&rhs)),
            );
        }
    }
    Clause::pass(name)
}

/// The identity map of an algebra, claiming everything it satisfies.
pub fn identity_witness(a: &StructureAlgebra) -> LinearMapWitness {
    let id = linalg::identity(a.ring(), a.rank());
    LinearMapWitness {
        source: Domain::Algebra(a.clone()),
        target: Domain::Algebra(a.clone()),
        matrix: id.clone(),
        inverse: Some(id),
        claims: vec![
            Property::AlgebraHomomorphism,
            Property::Bijective,
            Property::InvolutionCompatible,
        ],
    }
}

/// `A / J` together with the chosen complement and the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructureAlgebra,
    pub projection: LinearMapWitness,
    /// Representatives in `A` of the quotient basis.
    pub complement: Vec<Coords>,
    /// Row `u` is the quotient coordinates of `b_u`.
    project_rows: Vec<Coords>,
}

impl Quotient {
    pub fn project(&self, a: &[Elem]) -> Coords {
        linalg::combine(self.algebra.ring(), a, &self.project_rows, self.algebra.rank())
    }

    /// The representative of a quotient element in the chosen complement.
    pub fn lift(&self, q: &[Elem]) -> Coords {
        let amb = self.projection.source.rank();
        linalg::combine(self.algebra.ring(), q, &self.complement, amb)
    }
}

/// The quotient by `j`, using `complement` as representatives of the
/// quotient basis, or the standard basis vectors off the pivots of `j`.
pub fn quotient_by_ideal(a: &StructureAlgebra, j: &IdealBasis, complement: Option<Vec<Coords>>) -> Result<Quotient> {
    let ring = a.ring();
    let r = a.rank();
    let complement = match complement {
        Some(c) => c,
        None => {
            let pivots = j.span.pivots();
            (0..r)
                .filter(|c| !pivots.contains(c))
                .map(|c| linalg::unit_vector(ring, r, c))
                .collect()
        }
    };
    let k = complement.len();
    if k + j.rank() != r {
        return Err(Error::NoComplement(format!(
            "complement of rank {k} does not fit ideal of rank {} in rank {r}",
            j.rank()
        )));
    }
    let stacked: Vec<Coords> = complement.iter().chain(j.vectors.iter()).cloned().collect();
    let inv = linalg::inverse(ring, &stacked).map_err(|e| Error::NoComplement(e.to_string()))?;
    // a = c * stacked, so c = a * inv; the quotient coordinates are the first k.
    let project_rows: Vec<Coords> = inv.iter().map(|row| row[..k].to_vec()).collect();
    let project = |v: &[Elem]| linalg::combine(ring, v, &project_rows, k);

    let labels = complement.iter().map(|v| format!("[{}]", a.format(v))).collect();
    let product = |u: usize, v: usize| project(&a.mul(&complement[u], &complement[v]));
    let unit = project(&a.unit);
    let involution = match j.involution_stable() {
        Some(true) => Some(
            complement
                .iter()
                .map(|v| project(&a.apply_involution(v).expect("involution present")))
                .collect(),
        ),
        _ => None,
    };
    let q = StructureAlgebra::from_products(ring, labels, product, unit, involution)?;
    let projection = LinearMapWitness::new(
        Domain::Algebra(a.clone()),
        Domain::Algebra(q.clone()),
        project_rows.clone(),
        vec![Property::AlgebraHomomorphism, Property::Surjective],
    )?;
    Ok(Quotient {
        algebra: q,
        projection,
        complement,
        project_rows,
    })
}

/// The centre of an algebra, or a containment certificate over non-fields.
#[derive(Clone, Debug)]
pub struct Centre {
    /// A basis of the centre over a field; the certified elements otherwise.
    pub basis: Vec<Coords>,
    /// Whether `basis` is known to span the whole centre.
    pub exhaustive: bool,
    pub report: CheckReport,
}

impl Centre {
    pub fn dimension(&self) -> Option<usize> {
        self.exhaustive.then_some(self.basis.len())
    }
}

/// Over a field, solves `z b_u = b_u z` for all `u` and compares the
/// solution space with `expected`. Over other rings, certifies that the
/// `expected` elements are central and independent.
pub fn centre(a: &StructureAlgebra, expected: &[Coords]) -> Result<Centre> {
    let ring = a.ring();
    let r = a.rank();
    let mut rep = CheckReport::new();
    let central = |z: &[Elem]| (0..r).find(|&u| a.right_mul_basis(z, u) != a.left_mul_basis(u, z));

    let mut cx = None;
    for z in expected {
        if let Some(u) = central(z) {
            cx = Some(Counterexample::new(
                vec![a.format(z), a.labels[u].clone()],
                a.format(&a.right_mul_basis(z, u)),
                a.format(&a.left_mul_basis(u, z)),
            ));
            break;
        }
    }
    rep.push(Clause::from_search("expected-elements-central", cx));
    let independent = Span::basis(ring, r, expected);
    rep.push(match &independent {
        Ok(_) => Clause::pass("expected-elements-independent"),
        Err(Error::FreenessUndetermined(d)) => {
            Clause::with_verdict("expected-elements-independent", Verdict::Undetermined, d.clone())
        }
        Err(e) => Clause::with_verdict("expected-elements-independent", Verdict::Fail, e.to_string()),
    });

    if !ring.is_field() {
        rep.push(Clause::with_verdict(
            "spans-centre",
            Verdict::Undetermined,
            format!("saturation is not decided over {ring}"),
        ));
        return Ok(Centre {
            basis: expected.to_vec(),
            exhaustive: false,
            report: rep,
        });
    }

    // Equation (u, w): sum_t z_t (T[t][u][w] - T[u][t][w]) = 0.
    let mut equations = Vec::with_capacity(r * r);
    for u in 0..r {
        let mut rows = vec![linalg::zeros(ring, r); r];
        for t in 0..r {
            for (w, c) in &a.table[t][u] {
                rows[*w][t] = ring.add(&rows[*w][t], c);
            }
            for (w, c) in &a.table[u][t] {
                rows[*w][t] = ring.sub(&rows[*w][t], c);
            }
        }
        equations.extend(rows.into_iter().filter(|row| !linalg::is_zero(ring, row)));
    }
    let basis = linalg::nullspace(ring, r, &equations)?;
    let same = linalg::same_span(ring, r, &basis, expected).unwrap_or(false);
    rep.push(
        Clause::from_search(
            "spans-centre",
            (!same).then(|| {
                Counterexample::new(
                    vec!["centre basis".into()],
                    basis.iter().map(|v| a.format(v)).collect::<Vec<_>>().join("; "),
                    expected.iter().map(|v| a.format(v)).collect::<Vec<_>>().join("; "),
                )
            }),
        )
        .detail(format!("dimension {}", basis.len())),
    );
    Ok(Centre {
        basis,
        exhaustive: true,
        report: rep,
    })
}

/// The centre of `S_n(R)` compared with `R[c] = span{1, c}`.
pub fn centre_of_censym(ring: &RingSpec, n: usize) -> Result<Centre> {
    let a = algebra_of_censym(ring, n)?;
    let one = a.unit.clone();
    let c = censym::coords(&censym::CentroMatrix::exchange(ring, n));
    let expected = if n == 1 { vec![one] } else { vec![one, c] };
    centre(&a, &expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integer
    }

    fn el(a: &StructureAlgebra, l: &str) -> Coords {
        a.element(l).unwrap()
    }

    fn prod(a: &StructureAlgebra, x: &str, y: &str) -> String {
        a.format(&a.mul(&el(a, x), &el(a, y)))
    }

    #[test]
    fn censym_algebra_small_cases() {
        let s2 = algebra_of_censym(&z(), 2).unwrap();
        assert_eq!(prod(&s2, "f1_2", "f1_2"), "f1_1");
        let s1 = algebra_of_censym(&z(), 1).unwrap();
        assert_eq!(s1.rank(), 1);
        assert_eq!(prod(&s1, "f1_1", "f1_1"), "f1_1");
        let s3 = algebra_of_censym(&z(), 3).unwrap();
        let t = |l: &str| s3.format(&s3.apply_involution(&el(&s3, l)).unwrap());
        assert_eq!(t("f1_2"), "f2_1");
        assert_eq!(t("f2_1"), "f1_2");
        for l in ["f1_1", "f2_2", "f1_3"] {
            assert_eq!(t(l), l);
        }
        assert!(algebra_of_censym(&z(), 0).is_err());
    }

    #[test]
    fn audits_pass_for_constructed_algebras() {
        for ring in [z(), RingSpec::Modular(4), RingSpec::group_ring_c2(z())] {
            for n in 1..=6 {
                let a = algebra_of_censym(&ring, n).unwrap();
                assert!(a.audit().passed(), "{ring} n={n}\n{}", a.audit());
            }
            for m in 0..=3 {
                assert!(full_matrix_algebra(&ring, m).audit().passed());
            }
        }
        assert!(group_ring_algebra(&RingSpec::Modular(2)).audit().passed());
        let p = product_algebra(&full_matrix_algebra(&z(), 2), &full_matrix_algebra(&z(), 1)).unwrap();
        assert!(p.audit().passed());
        assert!(StructureAlgebra::zero(&z()).audit().passed());
    }

    #[test]
    fn broken_table_fails_audit() {
        let a = full_matrix_algebra(&z(), 2);
        let bad = StructureAlgebra::from_products(
            &z(),
            a.labels().to_vec(),
            |u, v| {
                if (u, v) == (1, 2) {
                    a.basis_vector(3)
                } else {
                    a.mul_basis(u, v)
                }
            },
            a.unit().clone(),
            None,
        )
        .unwrap();
        let rep = bad.audit();
        assert_eq!(rep.clause("associativity").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn matrix_algebras() {
        let m2 = full_matrix_algebra(&z(), 2);
        assert_eq!(m2.rank(), 4);
        assert_eq!(prod(&m2, "E1_2", "E2_1"), "E1_1");
        let gr = group_ring_matrix_algebra(&z(), 1);
        assert_eq!(gr.rank(), 2);
        assert_eq!(*gr.ring(), z());
        assert_eq!(prod(&gr, "xE1_1", "xE1_1"), "E1_1");
        assert_eq!(group_ring_matrix_algebra(&z(), 2).rank(), 8);
        assert_eq!(full_matrix_algebra(&z(), 0).rank(), 0);
    }

    #[test]
    fn oracle_equivalence_with_matrix_product() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for ring in [z(), RingSpec::Modular(6), RingSpec::group_ring_c2(RingSpec::Rational)] {
            for n in 1..=6 {
                let a = algebra_of_censym(&ring, n).unwrap();
                for _ in 0..10 {
                    let x: Coords = (0..a.rank()).map(|_| ring.random_elem(&mut rng)).collect();
                    let y: Coords = (0..a.rank()).map(|_| ring.random_elem(&mut rng)).collect();
                    let mx = censym::from_coords(&ring, n, &x).unwrap();
                    let my = censym::from_coords(&ring, n, &y).unwrap();
                    assert_eq!(a.mul(&x, &y), censym::coords(&mx.mul(&my).unwrap()));
                }
            }
        }
    }

    #[test]
    fn ideal_of_middle_idempotent() {
        let a = algebra_of_censym(&z(), 3).unwrap();
        let j = ideal_generated(&a, &[el(&a, "f2_2")]).unwrap();
        assert_eq!(j.labels(), ["f1_1 + f1_3", "f1_2", "f2_1", "f2_2"]);
        assert_eq!(j.involution_stable(), Some(true));

        let q = algebra_of_censym(&RingSpec::Rational, 3).unwrap();
        assert_eq!(ideal_generated(&q, &[q.unit().clone()]).unwrap().rank(), 5);
        assert!(ideal_generated(&q, &[]).is_err());
    }

    #[test]
    fn char_two_group_ring_ideal_is_nilpotent() {
        let g = group_ring_algebra(&RingSpec::Modular(2));
        let j = ideal_generated(
            &g,
            &[g.unit()
                .iter()
                .cloned()
                .zip(el(&g, "x"))
                .map(|(a, b)| g.ring().add(&a, &b))
                .collect()],
        )
        .unwrap();
        assert_eq!(j.rank(), 1);
        assert!(j.squares_to_zero());
    }

    #[test]
    fn ideal_validation() {
        let a = algebra_of_censym(&z(), 3).unwrap();
        assert!(matches!(
            IdealBasis::new(&a, vec![el(&a, "f1_2")]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            IdealBasis::new(&a, vec![el(&a, "f1_2"), el(&a, "f1_2")]),
            Err(Error::LinearlyDependent(_))
        ));
    }

    #[test]
    fn undetermined_ideal_over_integers() {
        let a = algebra_of_censym(&z(), 1).unwrap();
        let two = vec![z().from_i64(2)];
        assert!(matches!(
            ideal_generated(&a, &[two]),
            Err(Error::FreenessUndetermined(_))
        ));
    }

    #[test]
    fn quotients() {
        let q3 = algebra_of_censym(&RingSpec::Rational, 3).unwrap();
        let j = ideal_generated(&q3, &[el(&q3, "f2_2")]).unwrap();
        let quo = quotient_by_ideal(&q3, &j, Some(vec![el(&q3, "f1_1")])).unwrap();
        assert_eq!(quo.algebra.rank(), 1);
        assert_eq!(quo.algebra.format(&quo.project(&el(&q3, "f1_3"))), "-[f1_1]");
        assert!(quo.algebra.audit().passed());
        assert!(check_witness(&quo.projection).passed());

        let q5 = algebra_of_censym(&RingSpec::Rational, 5).unwrap();
        let j5 = ideal_generated(&q5, &[el(&q5, "f3_3")]).unwrap();
        assert_eq!(j5.rank(), 9);
        let comp = ["f1_1", "f1_2", "f2_1", "f2_2"].iter().map(|l| el(&q5, l)).collect();
        let quo5 = quotient_by_ideal(&q5, &j5, Some(comp)).unwrap();
        let m2 = full_matrix_algebra(&RingSpec::Rational, 2);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(quo5.algebra.mul_basis(u, v), m2.mul_basis(u, v));
            }
        }
        // projection kills exactly J and restricts to the identity on the complement
        for v in j5.vectors() {
            assert!(linalg::is_zero(q5.ring(), &quo5.project(v)));
        }
        for (k, c) in quo5.complement.iter().enumerate() {
            assert_eq!(quo5.project(c), quo5.algebra.basis_vector(k));
            assert_eq!(quo5.lift(&quo5.algebra.basis_vector(k)), *c);
        }

        let whole = ideal_generated(&q3, &[q3.unit().clone()]).unwrap();
        let zero = quotient_by_ideal(&q3, &whole, None).unwrap();
        assert_eq!(zero.algebra.rank(), 0);
        assert!(zero.algebra.audit().passed());
    }

    #[test]
    fn bad_complement() {
        let q3 = algebra_of_censym(&RingSpec::Rational, 3).unwrap();
        let j = ideal_generated(&q3, &[el(&q3, "f2_2")]).unwrap();
        let in_j = linalg::add(q3.ring(), &el(&q3, "f1_1"), &el(&q3, "f1_3"));
        assert!(matches!(
            quotient_by_ideal(&q3, &j, Some(vec![in_j])),
            Err(Error::NoComplement(_))
        ));
        assert!(matches!(
            quotient_by_ideal(&q3, &j, Some(vec![])),
            Err(Error::NoComplement(_))
        ));
    }

    #[test]
    fn transpose_is_not_a_homomorphism() {
        let a = algebra_of_censym(&z(), 3).unwrap();
        let w = LinearMapWitness::new(
            Domain::Algebra(a.clone()),
            Domain::Algebra(a.clone()),
            a.involution().unwrap().clone(),
            vec![Property::AlgebraHomomorphism],
        )
        .unwrap();
        let rep = check_witness(&w);
        assert_eq!(rep.verdict(), Verdict::Fail);
        let cx = rep.first_counterexample().unwrap();
        assert_ne!(cx.lhs, cx.rhs);
        assert!(check_witness(&identity_witness(&a)).passed());
    }

    #[test]
    fn bijectivity_needs_inverse() {
        let a = full_matrix_algebra(&z(), 1);
        let mut w = identity_witness(&a);
        w.inverse = None;
        assert_eq!(check_witness(&w).clause("bijective").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn centres() {
        for (p, n) in [(3, 4), (2, 3), (5, 2)] {
            let c = centre_of_censym(&RingSpec::Modular(p), n).unwrap();
            assert_eq!(c.dimension(), Some(2));
            assert!(c.report.passed(), "{}", c.report);
        }
        let c1 = centre_of_censym(&RingSpec::Modular(5), 1).unwrap();
        assert_eq!(c1.dimension(), Some(1));
        let m2 = full_matrix_algebra(&RingSpec::Modular(5), 2);
        let c = centre(&m2, &[m2.unit().clone()]).unwrap();
        assert_eq!(c.dimension(), Some(1));
        assert!(c.report.passed());

        let zc = centre_of_censym(&z(), 4).unwrap();
        assert_eq!(zc.dimension(), None);
        assert_eq!(zc.report.verdict(), Verdict::Undetermined);
        assert_eq!(
            zc.report.clause("expected-elements-central").unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn centre_basis_is_a_subalgebra() {
        let a = algebra_of_censym(&RingSpec::Modular(3), 5).unwrap();
        let c = centre_of_censym(&RingSpec::Modular(3), 5).unwrap();
        let mut span = Span::new(a.ring(), a.rank());
        for v in &c.basis {
            span.insert(v);
        }
        assert!(span.contains(a.unit()));
        for x in &c.basis {
            for y in &c.basis {
                assert!(span.contains(&a.mul(x, y)));
            }
        }
    }

    #[test]
    fn formatting() {
        let r = z();
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let v = |xs: [i64; 3]| xs.iter().map(|&k| r.from_i64(k)).collect::<Coords>();
        assert_eq!(format_combination(&r, &labels, &v([1, 0, 1])), "a + c");
        assert_eq!(format_combination(&r, &labels, &v([0, 2, 0])), "2*b");
        assert_eq!(format_combination(&r, &labels, &v([1, -1, -3])), "a - b - 3*c");
        assert_eq!(format_combination(&r, &labels, &v([-1, 0, 0])), "-a");
        assert_eq!(format_combination(&r, &labels, &v([0, 0, 0])), "0");
        let g = RingSpec::group_ring_c2(z());
        let x = g.generator().unwrap();
        assert_eq!(
            format_combination(&g, &labels[..1], &[g.add(&g.one(), &x)]),
            "(1+1*x)*a"
        );
    }

    #[test]
    fn json_dump() {
        let a = algebra_of_censym(&z(), 2).unwrap();
        let j = a.to_json();
        assert_eq!(j["labels"], json!(["f1_1", "f1_2"]));
        assert_eq!(j["tensor"][1][1], json!(["1", "0"]));
        assert_eq!(j["unit"], json!(["1", "0"]));
        assert_eq!(j["involution"], json!([["1", "0"], ["0", "1"]]));
    }
}
