//! The extension `S_n(R) ⊆ M_n(R)`: the trace-like map `E(a) = a + cac`, the
//! Frobenius system `(E, x_i = e_{i1}, y_i = e_{1i})`, and the separability
//! and splitting witnesses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::censym::{self, CentroMatrix};
use crate::error::Result;
use crate::matrices::{matrix_unit, Matrix};
use crate::report::{CheckReport, Clause, Counterexample, Verdict};
use crate::rings::RingSpec;

pub const DEFAULT_BATCH: usize = 100;
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug)]
pub struct FrobeniusSystem {
    ring: RingSpec,
    n: usize,
    xs: Vec<Matrix>,
    ys: Vec<Matrix>,
}

impl FrobeniusSystem {
    pub fn new(ring: &RingSpec, n: usize) -> Self {
        let unit = |i, j| matrix_unit(ring, n, i, j).expect("indices in range");
        FrobeniusSystem {
            ring: ring.clone(),
            n,
            xs: (1..=n).map(|i| unit(i, 1)).collect(),
            ys: (1..=n).map(|i| unit(1, i)).collect(),
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn xs(&self) -> &[Matrix] {
        &self.xs
    }

    pub fn ys(&self) -> &[Matrix] {
        &self.ys
    }

    /// `E(a) = a + cac`.
    pub fn e_map(&self, a: &Matrix) -> Result<CentroMatrix> {
        e_map(a)
    }

    /// `sum_i x_i E(y_i a)`
    pub fn left_expansion(&self, a: &Matrix) -> Result<Matrix> {
        let mut acc = Matrix::zero(&self.ring, self.n);
        for (x, y) in self.xs.iter().zip(&self.ys) {
            acc = acc.add(&x.mul(e_map(&y.mul(a)?)?.matrix())?)?;
        }
        Ok(acc)
    }

    /// `sum_i E(a x_i) y_i`
    pub fn right_expansion(&self, a: &Matrix) -> Result<Matrix> {
        let mut acc = Matrix::zero(&self.ring, self.n);
        for (x, y) in self.xs.iter().zip(&self.ys) {
            acc = acc.add(&e_map(&a.mul(x)?)?.matrix().mul(y)?)?;
        }
        Ok(acc)
    }

    /// `sum_i x_i d y_i`
    pub fn casimir(&self, d: &Matrix) -> Result<Matrix> {
        let mut acc = Matrix::zero(&self.ring, self.n);
        for (x, y) in self.xs.iter().zip(&self.ys) {
            acc = acc.add(&x.mul(d)?.mul(y)?)?;
        }
        Ok(acc)
    }
}

pub fn e_map(a: &Matrix) -> Result<CentroMatrix> {
    CentroMatrix::new(a.add(&a.conj_by_c())?)
}

fn inline(m: &Matrix) -> String {
    let rows: Vec<String> = m.to_literals().into_iter().map(|r| r.join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

/// The matrices the identities are checked on: every matrix unit, then
/// `batch` seeded random matrices, then `extra`.
fn test_matrices(sys: &FrobeniusSystem, batch: usize, seed: u64, extra: &[Matrix]) -> Vec<(String, Matrix)> {
    let (ring, n) = (&sys.ring, sys.n);
    let mut out = Vec::with_capacity(n * n + batch + extra.len());
    for p in 1..=n {
        for q in 1..=n {
            out.push((format!("e{p}_{q}"), matrix_unit(ring, n, p, q).expect("in range")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..batch {
        out.push((format!("random#{k}"), Matrix::random(ring, n, &mut rng)));
    }
    for (k, m) in extra.iter().enumerate() {
        out.push((format!("file#{k}"), m.clone()));
    }
    out
}

/// Checks both Frobenius-system identities, that `E` lands in `S_n(R)`, and
/// that `E` is an `S_n(R)`-bimodule map on (f-basis × matrix-unit) pairs.
pub fn verify_frobenius_system(sys: &FrobeniusSystem, batch: usize, seed: u64, extra: &[Matrix]) -> Result<CheckReport> {
    let mut rep = CheckReport::new();
    let mats = test_matrices(sys, batch, seed, extra);
    let n_units = sys.n * sys.n;
    for m in extra {
        if m.ring() != &sys.ring || m.n() != sys.n {
            return Err(crate::Error::DimensionMismatch(format!(
                "matrix of size {} over {} does not fit the system",
                m.n(),
                m.ring()
            )));
        }
    }

    let mut cx = None;
    for (name, a) in &mats {
        let image = a.add(&a.conj_by_c())?;
        if !censym::is_centrosymmetric(&image) {
            cx = Some(Counterexample::new(vec![name.clone()], inline(&image.conj_by_c()), inline(&image)));
            break;
        }
    }
    rep.push(Clause::from_search("image-in-centrosymmetric", cx));

    for (clause, left) in [("left-identity", true), ("right-identity", false)] {
        let mut cx = None;
        for (name, a) in &mats {
            let got = if left { sys.left_expansion(a)? } else { sys.right_expansion(a)? };
            if got != *a {
                cx = Some(Counterexample::new(vec![name.clone()], inline(&got), inline(a)));
                break;
            }
        }
        rep.push(
            Clause::from_search(clause, cx)
                .detail(format!("{} matrix units, {} random, {} supplied", n_units, batch, extra.len())),
        );
    }

    let mut cx = None;
    'outer: for (idx, s) in censym::canonical_basis(&sys.ring, sys.n) {
        for (name, a) in mats.iter().take(n_units) {
            let s = s.matrix();
            let checks = [
                (e_map(&s.mul(a)?)?.into_matrix(), s.mul(e_map(a)?.matrix())?, format!("E({idx}*{name})")),
                (e_map(&a.mul(s)?)?.into_matrix(), e_map(a)?.matrix().mul(s)?, format!("E({name}*{idx})")),
            ];
            for (lhs, rhs, what) in checks {
                if lhs != rhs {
                    cx = Some(Counterexample::new(vec![what], inline(&lhs), inline(&rhs)));
                    break 'outer;
                }
            }
        }
    }
    rep.push(Clause::from_search("bimodule", cx));
    Ok(rep)
}

/// Whether `d` commutes with every canonical basis element of `S_n(R)`.
pub fn centralizer_membership(sys: &FrobeniusSystem, d: &Matrix) -> Result<bool> {
    for (_, s) in censym::canonical_basis(&sys.ring, sys.n) {
        if s.matrix().mul(d)? != d.mul(s.matrix())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The separability witness `d = 1`: central, and `sum x_i d y_i = 1`.
pub fn separability_check(sys: &FrobeniusSystem) -> Result<(CheckReport, Matrix)> {
    let d = Matrix::identity(&sys.ring, sys.n);
    let mut rep = CheckReport::new();
    rep.push(Clause::from_search(
        "d-in-centralizer",
        (!centralizer_membership(sys, &d)?).then(|| Counterexample::new(vec!["d".into()], "not central", "central")),
    ));
    let sum = sys.casimir(&d)?;
    rep.push(Clause::from_search(
        "sum-x-d-y",
        (sum != d).then(|| Counterexample::new(vec!["d = 1".into()], inline(&sum), inline(&d))),
    ));
    Ok((rep, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitness {
    /// `d` is central and `E(d) = 1`.
    Split(Matrix),
    /// No witness is available; nothing is claimed either way.
    Unknown,
}

/// Tries `d = (1/2)·1`. Without an inverse of 2 the verdict is `unknown`.
pub fn splitness_check(sys: &FrobeniusSystem) -> Result<(Splitness, CheckReport)> {
    let mut rep = CheckReport::new();
    let Some(t) = sys.ring.invert_two() else {
        rep.push(Clause::with_verdict(
            "split-witness",
            Verdict::Unknown,
            format!("2 is not invertible in {}; no witness attempted", sys.ring),
        ));
        return Ok((Splitness::Unknown, rep));
    };
    let d = Matrix::identity(&sys.ring, sys.n).scale(&t)?;
    rep.push(Clause::from_search(
        "d-in-centralizer",
        (!centralizer_membership(sys, &d)?).then(|| Counterexample::new(vec![inline(&d)], "not central", "central")),
    ));
    let ed = e_map(&d)?.into_matrix();
    let one = Matrix::identity(&sys.ring, sys.n);
    rep.push(Clause::from_search(
        "E(d) = 1",
        (ed != one).then(|| Counterexample::new(vec![inline(&d)], inline(&ed), inline(&one))),
    ));
    let outcome = if rep.passed() { Splitness::Split(d) } else { Splitness::Unknown };
    Ok((outcome, rep))
}
