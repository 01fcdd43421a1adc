//! Dense square matrices over a [`RingSpec`], with 1-based indexing.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: RingSpec,
    n: usize,
    entries: Vec<Elem>,
}

/// Which of the four symmetry notions a matrix satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SymmetryFlags {
    pub symmetric: bool,
    pub persymmetric: bool,
    pub bisymmetric: bool,
    pub centrosymmetric: bool,
}

impl Matrix {
    pub fn zero(ring: &RingSpec, n: usize) -> Self {
        Matrix { ring: ring.clone(), n, entries: vec![ring.zero(); n * n] }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Matrix::zero(ring, n);
        for i in 1..=n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds a matrix from `f(i, j)` with 1-based indices.
    pub fn from_fn(ring: &RingSpec, n: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), n, entries }
    }

    pub fn from_rows(ring: &RingSpec, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for e in row {
                if !ring.contains(&e) {
                    return Err(Error::RingMismatch { left: ring.to_string(), right: format!("{e:?}") });
                }
                entries.push(e);
            }
        }
        Ok(Matrix { ring: ring.clone(), n, entries })
    }

    pub fn random<G: Rng + ?Sized>(ring: &RingSpec, n: usize, rng: &mut G) -> Self {
        Matrix::from_fn(ring, n, |_, _| ring.random_elem(rng))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a_{ij}`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index ({i}, {j}) out of range");
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<&Elem> {
        if !(1..=self.n).contains(&i) || !(1..=self.n).contains(&j) {
            return Err(Error::IndexOutOfRange { i, j, n: self.n });
        }
        Ok(self.get(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index ({i}, {j}) out of range");
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.n, self.n, other.n, other.n)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.sub(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|a| self.ring.neg(a)).collect();
        Matrix { ring: self.ring.clone(), n: self.n, entries }
    }

    /// Schoolbook product; zero entries of `self` are skipped.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let r = &self.ring;
        let mut out = vec![r.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if r.is_zero(b) {
                        continue;
                    }
                    let slot = &mut out[i * n + j];
                    *slot = r.add(slot, &r.mul(a, b));
                }
            }
        }
        Ok(Matrix { ring: r.clone(), n, entries: out })
    }

    /// Left scalar multiple `s * a`.
    pub fn scale(&self, s: &Elem) -> Result<Matrix> {
        if !self.ring.contains(s) {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: format!("{s:?}") });
        }
        let entries = self.entries.iter().map(|a| self.ring.mul(s, a)).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    /// `c a c` for the exchange matrix `c`: `(cac)_{jk} = a_{n+1-j, n+1-k}`.
    pub fn conj_by_c(&self) -> Matrix {
        let n = self.n;
        Matrix::from_fn(&self.ring, n, |j, k| self.get(n + 1 - j, n + 1 - k).clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn symmetry_class(&self) -> SymmetryFlags {
        let t = self.transpose();
        let symmetric = t == *self;
        let persymmetric = t.conj_by_c() == *self;
        SymmetryFlags {
            symmetric,
            persymmetric,
            bisymmetric: symmetric && persymmetric,
            centrosymmetric: self.conj_by_c() == *self,
        }
    }

    /// Parses the text matrix format: a header line `n <size> ring <ring>`
    /// followed by `size` rows of whitespace-separated element literals.
    pub fn parse_text(text: &str) -> Result<Matrix> {
        let bad = |what: &str| Error::Parse { what: "matrix file", input: what.to_string() };
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (n, ring) = match words.as_slice() {
            ["n", n, "ring", ring] => (n.parse::<usize>().map_err(|_| bad(header))?, ring.parse::<RingSpec>()?),
            _ => return Err(bad(header)),
        };
        if n == 0 {
            return Err(bad(header));
        }
        let mut rows = Vec::with_capacity(n);
        for line in lines.by_ref().take(n) {
            let row = line.split_whitespace().map(|w| ring.parse_elem(w)).collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::DimensionMismatch(format!("expected {n} rows, found {}", rows.len())));
        }
        if let Some(extra) = lines.next() {
            return Err(bad(extra));
        }
        Matrix::from_rows(&ring, rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n {} ring {}\n", self.n, self.ring);
        for row in self.entries.chunks(self.n.max(1)) {
            let cells: Vec<String> = row.iter().map(|e| self.ring.format_elem(e)).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }

    /// Rows of element literals, for reports.
    pub fn to_literals(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.n.max(1))
            .map(|row| row.iter().map(|e| self.ring.format_elem(e)).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.to_literals().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// The matrix unit `e_{ij}`.
pub fn matrix_unit(ring: &RingSpec, n: usize, i: usize, j: usize) -> Result<Matrix> {
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    let mut m = Matrix::zero(ring, n);
    m.set(i, j, ring.one());
    Ok(m)
}

/// The exchange matrix `c = e_{1n} + e_{2,n-1} + ... + e_{n1}`.
pub fn exchange(ring: &RingSpec, n: usize) -> Matrix {
    let mut m = Matrix::zero(ring, n);
    for i in 1..=n {
        m.set(i, n + 1 - i, ring.one());
    }
    m
}
