//! Exact linear algebra on coordinate vectors over a [`RingSpec`].
//!
//! Elimination only ever pivots on units of the ring. Over a field that is
//! ordinary Gauss-Jordan; over the integers it pivots on `±1`, and a vector
//! that cannot be reduced to a unit pivot is parked as *pending*. A span with
//! pending vectors has no certified free basis, which callers surface as
//! [`Error::FreenessUndetermined`] instead of guessing.

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec};

pub type Coords = Vec<Elem>;

pub fn zeros(ring: &RingSpec, len: usize) -> Coords {
    vec![ring.zero(); len]
}

pub fn unit_vector(ring: &RingSpec, len: usize, at: usize) -> Coords {
    let mut v = zeros(ring, len);
    v[at] = ring.one();
    v
}

pub fn add(ring: &RingSpec, a: &[Elem], b: &[Elem]) -> Coords {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

pub fn sub(ring: &RingSpec, a: &[Elem], b: &[Elem]) -> Coords {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect()
}

pub fn scale(ring: &RingSpec, s: &Elem, a: &[Elem]) -> Coords {
    a.iter().map(|x| ring.mul(s, x)).collect()
}

pub fn is_zero(ring: &RingSpec, a: &[Elem]) -> bool {
    a.iter().all(|x| ring.is_zero(x))
}

/// `acc += s * v`
fn axpy(ring: &RingSpec, acc: &mut [Elem], s: &Elem, v: &[Elem]) {
    if ring.is_zero(s) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !ring.is_zero(x) {
            *a = ring.add(a, &ring.mul(s, x));
        }
    }
}

/// Row-vector times matrix: `sum_k v[k] * rows[k]`.
pub fn combine(ring: &RingSpec, v: &[Elem], rows: &[Coords], width: usize) -> Coords {
    let mut out = zeros(ring, width);
    for (c, row) in v.iter().zip(rows) {
        axpy(ring, &mut out, c, row);
    }
    out
}

/// Matrix product with matrices stored as lists of rows.
pub fn mat_mul(ring: &RingSpec, a: &[Coords], b: &[Coords], width: usize) -> Vec<Coords> {
    a.iter().map(|row| combine(ring, row, b, width)).collect()
}

pub fn identity(ring: &RingSpec, n: usize) -> Vec<Coords> {
    (0..n).map(|i| unit_vector(ring, n, i)).collect()
}

#[derive(Clone, Debug)]
struct Row {
    vec: Coords,
    /// Expresses `vec` as a combination of the inserted generators.
    combo: Coords,
    pivot: usize,
}

/// Outcome of inserting a vector into a [`Span`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector enlarged the span.
    Added,
    /// The vector was already in the span; the payload is a relation
    /// `sum_k r_k g_k = 0` among generators, with `r_last = 1`.
    Dependent(Coords),
    /// No unit pivot is available (yet).
    Pending,
}

/// Outcome of solving `v = sum_k c_k g_k` against a [`Span`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    In(Coords),
    NotIn,
    Undetermined,
}

/// A submodule of `R^width` in reduced row-echelon form with unit pivots,
/// tracking how every echelon row arose from the inserted generators.
#[derive(Clone, Debug)]
pub struct Span {
    ring: RingSpec,
    width: usize,
    generators: usize,
    rows: Vec<Row>,
    pending: Vec<Row>,
}

impl Span {
    pub fn new(ring: &RingSpec, width: usize) -> Self {
        Span { ring: ring.clone(), width, generators: 0, rows: Vec::new(), pending: Vec::new() }
    }

    /// A span over `gens` that must be a free basis: every generator has to
    /// enlarge the span with a unit pivot.
    pub fn basis(ring: &RingSpec, width: usize, gens: &[Coords]) -> Result<Self> {
        let mut span = Span::new(ring, width);
        for (k, g) in gens.iter().enumerate() {
            match span.insert(g) {
                Insertion::Added => {}
                Insertion::Dependent(_) => {
                    return Err(Error::LinearlyDependent(format!("generator {k} lies in the span of the earlier ones")))
                }
                Insertion::Pending => {}
            }
        }
        if !span.pending.is_empty() {
            return Err(Error::FreenessUndetermined(format!(
                "{} generator(s) admit no unit pivot over {}",
                span.pending.len(),
                ring
            )));
        }
        if span.rows.len() != gens.len() {
            return Err(Error::LinearlyDependent("generators collapse during elimination".into()));
        }
        Ok(span)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Whether every inserted vector has been absorbed by unit pivots.
    pub fn is_settled(&self) -> bool {
        self.pending.is_empty()
    }

    /// Number of inserted vectors still waiting for a unit pivot.
    pub fn pending(&self) -> usize {
        self.pending.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    /// The reduced echelon rows; a free basis of the span when settled.
    pub fn echelon_rows(&self) -> Vec<Coords> {
        self.rows.iter().map(|r| r.vec.clone()).collect()
    }

    fn pad(&self, combo: &mut Coords) {
        while combo.len() < self.generators {
            combo.push(self.ring.zero());
        }
    }

    fn reduce_row(&self, row: &mut Row) {
        let r = &self.ring;
        for existing in &self.rows {
            let coef = row.vec[existing.pivot].clone();
            if r.is_zero(&coef) {
                continue;
            }
            let neg = r.neg(&coef);
            axpy(r, &mut row.vec, &neg, &existing.vec);
            axpy(r, &mut row.combo, &neg, &existing.combo);
        }
    }

    fn unit_pivot(&self, v: &[Elem]) -> Option<(usize, Elem)> {
        v.iter().enumerate().find_map(|(idx, x)| {
            if self.ring.is_zero(x) {
                None
            } else {
                self.ring.inverse(x).map(|inv| (idx, inv))
            }
        })
    }

    /// Normalises `row` at `pivot`, clears that column elsewhere, stores it.
    fn install(&mut self, mut row: Row, pivot: usize, inv: Elem) {
        let r = self.ring.clone();
        row.vec = scale(&r, &inv, &row.vec);
        row.combo = scale(&r, &inv, &row.combo);
        row.pivot = pivot;
        for other in self.rows.iter_mut().chain(self.pending.iter_mut()) {
            let coef = other.vec[pivot].clone();
            if r.is_zero(&coef) {
                continue;
            }
            while other.combo.len() < row.combo.len() {
                other.combo.push(r.zero());
            }
            let neg = r.neg(&coef);
            axpy(&r, &mut other.vec, &neg, &row.vec);
            axpy(&r, &mut other.combo, &neg, &row.combo);
        }
        self.rows.push(row);
    }

    /// Promotes pending rows that acquired a unit entry; drops those that
    /// reduced to zero.
    fn settle(&mut self) {
        loop {
            let mut progressed = false;
            let mut idx = 0;
            while idx < self.pending.len() {
                if is_zero(&self.ring, &self.pending[idx].vec) {
                    self.pending.remove(idx);
                    progressed = true;
                    continue;
                }
                if let Some((p, inv)) = self.unit_pivot(&self.pending[idx].vec) {
                    let row = self.pending.remove(idx);
                    self.install(row, p, inv);
                    progressed = true;
                    continue;
                }
                idx += 1;
            }
            if !progressed {
                break;
            }
        }
    }

    pub fn insert(&mut self, v: &[Elem]) -> Insertion {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let k = self.generators;
        self.generators += 1;
        let mut combo = zeros(&self.ring, self.generators);
        combo[k] = self.ring.one();
        for row in self.rows.iter_mut().chain(self.pending.iter_mut()) {
            while row.combo.len() < k + 1 {
                row.combo.push(self.ring.zero());
            }
        }
        let mut row = Row { vec: v.to_vec(), combo, pivot: usize::MAX };
        self.reduce_row(&mut row);
        if is_zero(&self.ring, &row.vec) {
            return Insertion::Dependent(row.combo);
        }
        match self.unit_pivot(&row.vec) {
            Some((p, inv)) => {
                self.install(row, p, inv);
                self.settle();
                Insertion::Added
            }
            None => {
                self.pending.push(row);
                Insertion::Pending
            }
        }
    }

    /// Residual of `v` after subtracting its pivot components.
    pub fn reduce(&self, v: &[Elem]) -> Coords {
        let mut out = v.to_vec();
        for row in &self.rows {
            let coef = out[row.pivot].clone();
            if !self.ring.is_zero(&coef) {
                axpy(&self.ring, &mut out, &self.ring.neg(&coef), &row.vec);
            }
        }
        out
    }

    /// Coordinates of `v` in terms of the inserted generators.
    pub fn solve(&self, v: &[Elem]) -> Membership {
        let residual = self.reduce(v);
        if !is_zero(&self.ring, &residual) {
            return if self.pending.is_empty() { Membership::NotIn } else { Membership::Undetermined };
        }
        let mut coords = zeros(&self.ring, self.generators);
        for row in &self.rows {
            let mut combo = row.combo.clone();
            self.pad(&mut combo);
            axpy(&self.ring, &mut coords, &v[row.pivot], &combo);
        }
        Membership::In(coords)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        matches!(self.solve(v), Membership::In(_))
    }
}

/// Two-sided inverse of a square matrix (rows), pivoting on units only.
pub fn inverse(ring: &RingSpec, m: &[Coords]) -> Result<Vec<Coords>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("inverse needs a square matrix".into()));
    }
    let span = Span::basis(ring, n, m)?;
    (0..n)
        .map(|w| match span.solve(&unit_vector(ring, n, w)) {
            Membership::In(c) => Ok(c),
            Membership::NotIn => Err(Error::LinearlyDependent("matrix is singular".into())),
            Membership::Undetermined => Err(Error::FreenessUndetermined("no unit pivots".into())),
        })
        .collect()
}

/// Right nullspace `{z : sum_u z_u * eq[u] = 0 for every equation}` where
/// each equation is a linear form over `unknowns` variables. Fields only.
pub fn nullspace(ring: &RingSpec, unknowns: usize, equations: &[Coords]) -> Result<Vec<Coords>> {
    if !ring.is_field() {
        return Err(Error::Unsupported(format!("nullspace elimination needs a field, got {ring}")));
    }
    let mut span = Span::new(ring, unknowns);
    for eq in equations {
        span.insert(eq);
    }
    let pivots = span.pivots();
    let rows = span.echelon_rows();
    let mut basis = Vec::new();
    for free in (0..unknowns).filter(|c| !pivots.contains(c)) {
        let mut z = unit_vector(ring, unknowns, free);
        for (row, &p) in rows.iter().zip(&pivots) {
            z[p] = ring.neg(&row[free]);
        }
        basis.push(z);
    }
    Ok(basis)
}

/// Whether two spans coincide, judged by mutual containment.
pub fn same_span(ring: &RingSpec, width: usize, a: &[Coords], b: &[Coords]) -> Option<bool> {
    let mut sa = Span::new(ring, width);
    a.iter().for_each(|v| {
        sa.insert(v);
    });
    let mut sb = Span::new(ring, width);
    b.iter().for_each(|v| {
        sb.insert(v);
    });
    if !sa.is_settled() || !sb.is_settled() {
        return None;
    }
    Some(b.iter().all(|v| sa.contains(v)) && a.iter().all(|v| sb.contains(v)))
}
