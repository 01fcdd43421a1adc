//! The `censym` command line: verification suites, tables, witnesses and
//! algebra dumps. Reports go to stdout, one per check, as text or as one
//! JSON object per line.
//!
//! Exit status: 0 when nothing fails (`unknown` and `undetermined` are not
//! failures), 1 when some report fails, 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{algebra_of_censym, centre_of_censym, check_witness, full_matrix_algebra, LinearMapWitness};
use crate::cellular;
use crate::censym;
use crate::error::{Error, Result};
use crate::frobenius::{self, FrobeniusSystem, Splitness};
use crate::linalg;
use crate::matrices::{matrix_unit, Matrix, SymmetryFlags};
use crate::report::{CheckReport, Clause, Counterexample, Verdict};
use crate::rings::RingSpec;
use crate::structure;

/// Size grid used when `--n` is omitted.
pub const DEFAULT_GRID: std::ops::RangeInclusive<usize> = 1..=8;

#[derive(Parser, Debug)]
#[command(name = "censym", about = "Exact verification of centrosymmetric matrix algebras S_n(R)", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Matrix size.
    #[arg(long)]
    pub n: Option<usize>,
    /// Ring literal: int, rat, zmod:<m>, gf:<p>, c2:<ring>.
    #[arg(long, default_value = "int")]
    pub ring: String,
    /// Emit JSON, one report per line.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites over one size or the default grid 1..8.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long = "check", value_enum, value_delimiter = ',', default_value = "all")]
        checks: Vec<CheckKind>,
        #[arg(long, default_value_t = frobenius::DEFAULT_SEED)]
        seed: u64,
        /// Extra matrices for the Frobenius identities (text matrix format).
        #[arg(long)]
        matrix_file: Option<std::path::PathBuf>,
    },
    /// Print the multiplication table of the f-basis.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Build and check one isomorphism witness.
    Iso {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: IsoKind,
        /// Column index for `--kind morita`; all valid columns when omitted.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Frobenius system, separability and splitting for the extension S_n(R) ⊆ M_n(R).
    Frobenius {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = frobenius::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        matrix_file: Option<std::path::PathBuf>,
    },
    /// The cell chain with layer ranks and cell module bases.
    Cellchain {
        #[command(flatten)]
        common: Common,
    },
    /// The centre, compared with span{1, c}.
    Centre {
        #[command(flatten)]
        common: Common,
    },
    /// Bisymmetric matrices are not closed under multiplication.
    DemoBisymmetric {
        #[arg(long)]
        json: bool,
    },
    /// Dump an algebra as JSON.
    DumpAlgebra {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "censym")]
        kind: AlgebraKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Closure,
    Rank,
    StructureConstants,
    Frobenius,
    Separability,
    Split,
    Isos,
    Cellchain,
    Heredity,
    Centre,
    All,
}

impl CheckKind {
    const EACH: [CheckKind; 10] = [
        CheckKind::Closure,
        CheckKind::Rank,
        CheckKind::StructureConstants,
        CheckKind::Frobenius,
        CheckKind::Separability,
        CheckKind::Split,
        CheckKind::Isos,
        CheckKind::Cellchain,
        CheckKind::Heredity,
        CheckKind::Centre,
    ];
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoKind {
    S2,
    S3,
    Even,
    OddQuotient,
    Wedderburn,
    Morita,
    Endring,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Censym,
    Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: Option<usize>,
    pub ring: String,
    pub seed: Option<u64>,
}

/// One check's outcome. A failing report always carries a counterexample;
/// a passing witness-producing check always carries its witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Params,
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    pub witness: Option<Value>,
    pub counterexample: Option<Counterexample>,
}

impl Report {
    pub fn new(check: impl Into<String>, params: Params, rep: CheckReport, witness: Option<Value>) -> Self {
        let verdict = rep.verdict();
        let counterexample = match verdict {
            Verdict::Fail => Some(rep.first_counterexample().cloned().unwrap_or_else(|| {
                let c = rep.failures().next().expect("a failing clause");
                Counterexample::new(vec![c.name.clone()], c.detail.clone().unwrap_or_else(|| "fail".into()), "pass")
            })),
            _ => None,
        };
        Report { check: check.into(), params, verdict, clauses: rep.clauses, witness, counterexample }
    }

    /// A report for a check that could not be carried out.
    pub fn from_error(check: impl Into<String>, params: Params, e: &Error) -> Self {
        let check = check.into();
        let mut rep = CheckReport::new();
        rep.push(match e {
            Error::FreenessUndetermined(s) => Clause::with_verdict("construction", Verdict::Undetermined, s.clone()),
            e => Clause::fail("construction", Counterexample::new(vec![check.clone()], e.to_string(), "constructed")),
        });
        Report::new(check, params, rep, None)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{:<12} {}", self.verdict.as_str(), self.check);
        if let Some(n) = self.params.n {
            let _ = write!(s, " n={n}");
        }
        let _ = write!(s, " ring={}", self.params.ring);
        if let Some(seed) = self.params.seed {
            let _ = write!(s, " seed={seed}");
        }
        s.push('\n');
        s.push_str(&CheckReport { clauses: self.clauses.clone() }.to_string());
        s
    }
}

fn usage(msg: impl std::fmt::Display) -> Error {
    Error::Precondition(msg.to_string())
}

fn parse_ring(s: &str) -> Result<RingSpec> {
    s.parse()
}

fn params(n: usize, ring: &RingSpec, seed: Option<u64>) -> Params {
    Params { n: Some(n), ring: ring.to_string(), seed }
}

fn literals(m: &Matrix) -> Value {
    json!(m.to_literals())
}

// ---- individual checks -------------------------------------------------

/// All basis products and `batch` seeded random products are centrosymmetric.
pub fn closure_report(ring: &RingSpec, n: usize, batch: usize, seed: u64) -> Result<Report> {
    let basis = censym::canonical_basis(ring, n);
    let mut rep = CheckReport::new();
    let mut cx = None;
    'outer: for (u, fu) in &basis {
        for (v, fv) in &basis {
            let p = fu.matrix().mul(fv.matrix())?;
            if !censym::is_centrosymmetric(&p) {
                cx = Some(Counterexample::new(vec![u.label(), v.label()], p.to_text(), p.conj_by_c().to_text()));
                break 'outer;
            }
        }
    }
    rep.push(Clause::from_search("basis-products", cx).detail(format!("{} pairs", basis.len().pow(2))));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = censym::rank(n);
    let mut cx = None;
    for k in 0..batch {
        let a = censym::from_coords(ring, n, &(0..r).map(|_| ring.random_elem(&mut rng)).collect::<Vec<_>>())?;
        let b = censym::from_coords(ring, n, &(0..r).map(|_| ring.random_elem(&mut rng)).collect::<Vec<_>>())?;
        let p = a.matrix().mul(b.matrix())?;
        if !censym::is_centrosymmetric(&p) && cx.is_none() {
            cx = Some(Counterexample::new(vec![format!("random#{k}")], p.to_text(), p.conj_by_c().to_text()));
        }
    }
    rep.push(Clause::from_search("random-products", cx).detail(format!("{batch} products")));
    Ok(Report::new("closure", params(n, ring, Some(seed)), rep, None))
}

/// `|basis| = ⌈n²/2⌉` and the coordinate round trip on random elements.
pub fn rank_report(ring: &RingSpec, n: usize, batch: usize, seed: u64) -> Result<Report> {
    let mut rep = CheckReport::new();
    let got = censym::canonical_basis(ring, n).len();
    let want = (n * n).div_ceil(2);
    rep.push(Clause::from_search(
        "basis-size",
        (got != want).then(|| Counterexample::new(vec![format!("n = {n}")], got.to_string(), want.to_string())),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cx = None;
    for k in 0..batch {
        let v: Vec<_> = (0..want).map(|_| ring.random_elem(&mut rng)).collect();
        let back = censym::coords(&censym::from_coords(ring, n, &v)?);
        if back != v && cx.is_none() {
            let f = |x: &[crate::Elem]| x.iter().map(|e| ring.format_elem(e)).collect::<Vec<_>>().join(" ");
            cx = Some(Counterexample::new(vec![format!("random#{k}")], f(&back), f(&v)));
        }
    }
    rep.push(Clause::from_search("coords-round-trip", cx).detail(format!("{batch} elements")));
    Ok(Report::new("rank", params(n, ring, Some(seed)), rep, Some(json!({ "rank": got, "labels": censym::basis_labels(n) }))))
}

/// The oracle table against the closed product rule, and the three worked
/// products at `n = 3`.
pub fn structure_constants_report(ring: &RingSpec, n: usize) -> Result<Report> {
    let a = algebra_of_censym(ring, n)?;
    let idx = censym::basis_indices(n);
    let r = idx.len();
    let mut rep = CheckReport::new();
    let (mut applicable, mut cx) = (0usize, None);
    for (u, &bu) in idx.iter().enumerate() {
        for (v, &bv) in idx.iter().enumerate() {
            let Some(terms) = censym::closed_form_product(bu, bv) else { continue };
            applicable += 1;
            let mut want = linalg::zeros(ring, r);
            for (t, k) in terms {
                let s = censym::basis_slot(t);
                want[s] = ring.add(&want[s], &ring.from_i64(k));
            }
            let got = a.mul_basis(u, v);
            if got != want && cx.is_none() {
                cx = Some(Counterexample::new(vec![bu.label(), bv.label()], a.format(&got), a.format(&want)));
            }
        }
    }
    rep.push(Clause::from_search("closed-formula", cx).detail(format!("{applicable} of {} pairs applicable", r * r)));
    if n == 3 {
        let el = |l: &str| a.element(l);
        let worked = [
            ("f1_2", "f2_1", linalg::add(ring, &el("f1_1")?, &el("f1_3")?)),
            ("f2_1", "f1_2", linalg::scale(ring, &ring.from_i64(2), &el("f2_2")?)),
            ("f1_3", "f1_3", el("f1_1")?),
        ];
        for (x, y, want) in worked {
            let got = a.mul(&el(x)?, &el(y)?);
            rep.push(Clause::from_search(
                format!("{x}*{y}"),
                (got != want).then(|| Counterexample::new(vec![x.into(), y.into()], a.format(&got), a.format(&want))),
            ));
        }
    }
    Ok(Report::new("structure-constants", params(n, ring, None), rep, None))
}

fn read_matrices(path: &std::path::Path) -> Result<Vec<Matrix>> {
    let text = std::fs::read_to_string(path)?;
    // several matrices may be separated by blank lines before a new header
    let mut out = Vec::new();
    let mut chunk = String::new();
    for line in text.lines() {
        if line.trim_start().starts_with("n ") && !chunk.trim().is_empty() {
            out.push(Matrix::parse_text(&chunk)?);
            chunk.clear();
        }
        chunk.push_str(line);
        chunk.push('\n');
    }
    if !chunk.trim().is_empty() {
        out.push(Matrix::parse_text(&chunk)?);
    }
    Ok(out)
}

pub fn frobenius_report(ring: &RingSpec, n: usize, batch: usize, seed: u64, extra: &[Matrix]) -> Result<Report> {
    let sys = FrobeniusSystem::new(ring, n);
    let extra: Vec<Matrix> = extra.iter().filter(|m| m.n() == n && m.ring() == ring).cloned().collect();
    let rep = frobenius::verify_frobenius_system(&sys, batch, seed, &extra)?;
    let witness = json!({
        "E": "a + c*a*c",
        "x": sys.xs().iter().map(literals).collect::<Vec<_>>(),
        "y": sys.ys().iter().map(literals).collect::<Vec<_>>(),
    });
    Ok(Report::new("frobenius", params(n, ring, Some(seed)), rep, Some(witness)))
}

pub fn separability_report(ring: &RingSpec, n: usize) -> Result<Report> {
    let sys = FrobeniusSystem::new(ring, n);
    let (rep, d) = frobenius::separability_check(&sys)?;
    Ok(Report::new("separability", params(n, ring, None), rep, Some(json!({ "d": literals(&d) }))))
}

pub fn split_report(ring: &RingSpec, n: usize) -> Result<Report> {
    let sys = FrobeniusSystem::new(ring, n);
    let (outcome, rep) = frobenius::splitness_check(&sys)?;
    let witness = match outcome {
        Splitness::Split(d) => Some(json!({ "d": literals(&d) })),
        Splitness::Unknown => None,
    };
    Ok(Report::new("split", params(n, ring, None), rep, witness))
}

fn witness_report(check: String, n: usize, ring: &RingSpec, w: &LinearMapWitness, extra: Option<CheckReport>) -> Report {
    let mut rep = extra.unwrap_or_default();
    rep.extend_prefixed("", check_witness(w));
    Report::new(check, params(n, ring, None), rep, Some(w.to_json()))
}

/// The iso kinds that make sense for `(ring, n)`.
pub fn applicable_isos(ring: &RingSpec, n: usize) -> Vec<IsoKind> {
    let mut out = Vec::new();
    if n == 2 {
        out.push(IsoKind::S2);
    }
    if n == 3 {
        out.push(IsoKind::S3);
    }
    if n % 2 == 0 {
        out.push(IsoKind::Even);
    }
    if n % 2 == 1 && n >= 3 {
        out.push(IsoKind::OddQuotient);
    }
    if n >= 4 {
        out.push(IsoKind::Morita);
    }
    if n % 2 == 1 && n >= 5 {
        out.push(IsoKind::Endring);
    }
    if ring.invert_two().is_some() {
        out.push(IsoKind::Wedderburn);
    }
    out
}

fn iso_name(kind: IsoKind) -> &'static str {
    match kind {
        IsoKind::S2 => "iso/s2",
        IsoKind::S3 => "iso/s3",
        IsoKind::Even => "iso/even",
        IsoKind::OddQuotient => "iso/odd-quotient",
        IsoKind::Wedderburn => "iso/wedderburn",
        IsoKind::Morita => "iso/morita",
        IsoKind::Endring => "iso/endring",
    }
}

/// Reports for one iso kind; `morita` yields one report per column.
/// Size and ring preconditions surface as errors.
pub fn iso_reports(kind: IsoKind, ring: &RingSpec, n: usize, j: Option<usize>) -> Result<Vec<Report>> {
    let name = iso_name(kind).to_string();
    let one = |r: Report| Ok(vec![r]);
    match kind {
        IsoKind::S2 => {
            if n != 2 {
                return Err(usage(format!("--kind s2 needs n = 2, got {n}")));
            }
            one(witness_report(name, n, ring, &structure::iso_s2(ring)?, None))
        }
        IsoKind::S3 => {
            if n != 3 {
                return Err(usage(format!("--kind s3 needs n = 3, got {n}")));
            }
            one(witness_report(name, n, ring, &structure::s3_presentation(ring)?.1, None))
        }
        IsoKind::Even => {
            if n % 2 == 1 || n == 0 {
                return Err(usage(format!("--kind even needs even n, got {n}")));
            }
            one(witness_report(name, n, ring, &structure::iso_even(ring, n / 2)?, None))
        }
        IsoKind::OddQuotient => {
            if n % 2 == 0 || n < 3 {
                return Err(usage(format!("--kind odd-quotient needs odd n >= 3, got {n}")));
            }
            let q = structure::odd_quotient(ring, n / 2)?;
            one(witness_report(name, n, ring, &q.witness, Some(q.sign_identity())))
        }
        IsoKind::Morita => {
            if n < 4 {
                return Err(usage(format!("--kind morita needs n >= 4, got {n}")));
            }
            let cols: Vec<usize> = match j {
                Some(j) if (2..=n / 2).contains(&j) => vec![j],
                Some(j) => return Err(usage(format!("--j must lie in 2..={}, got {j}", n / 2))),
                None => (2..=n / 2).collect(),
            };
            cols.into_iter()
                .map(|j| Ok(witness_report(format!("{name}/j{j}"), n, ring, &structure::morita_column_iso(ring, n, j)?, None)))
                .collect()
        }
        IsoKind::Endring => {
            if n % 2 == 0 || n < 5 {
                return Err(usage(format!("--kind endring needs odd n >= 5, got {n}")));
            }
            let e = structure::endring_odd(ring, n)?;
            one(witness_report(name, n, ring, &e.witness, Some(e.relations)))
        }
        IsoKind::Wedderburn => {
            if ring.invert_two().is_none() {
                return Err(usage(format!("--kind wedderburn needs 2 invertible, and it is not in {ring}")));
            }
            let w = structure::wedderburn_split(ring, n)?;
            let mut r = witness_report(name, n, ring, &w.witness, Some(w.report));
            if let Some(obj) = r.witness.as_mut().and_then(Value::as_object_mut) {
                obj.insert("piece_ranks".into(), json!([w.plus.rank(), w.minus.rank()]));
            }
            one(r)
        }
    }
}

pub fn cellchain_report(ring: &RingSpec, n: usize) -> Result<Report> {
    let chain = cellular::cell_chain(ring, n)?;
    let a = &chain.algebra;
    let layers: Vec<Value> = chain
        .layers
        .iter()
        .map(|l| {
            json!({
                "rank": l.spec.ideal.len(),
                "ideal": l.spec.ideal.iter().map(|v| a.format(v)).collect::<Vec<_>>(),
                "delta": l.spec.delta.iter().map(|v| a.format(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let witness = json!({ "layer_ranks": chain.layer_ranks(), "layers": layers });
    Ok(Report::new("cellchain", params(n, ring, None), chain.full_report(), Some(witness)))
}

pub fn heredity_report(ring: &RingSpec, n: usize) -> Result<Report> {
    if n % 2 == 0 {
        let mut rep = CheckReport::new();
        rep.push(Clause::with_verdict(
            "heredity-chain",
            Verdict::Unknown,
            "no heredity chain is constructed for even n",
        ));
        return Ok(Report::new("heredity", params(n, ring, None), rep, None));
    }
    let steps = cellular::quasi_hereditary_chain_odd(ring, n)?;
    let mut rep = CheckReport::new();
    for (k, s) in steps.iter().enumerate() {
        rep.extend_prefixed(&format!("step{}/", k + 1), s.witness.report.clone());
    }
    let witness = json!({
        "idempotents": steps.iter().map(|s| s.idempotent.clone()).collect::<Vec<_>>(),
        "ideal_ranks": steps.iter().map(|s| s.witness.products.len()).collect::<Vec<_>>(),
    });
    Ok(Report::new("heredity", params(n, ring, None), rep, Some(witness)))
}

pub fn centre_report(ring: &RingSpec, n: usize) -> Result<Report> {
    let c = centre_of_censym(ring, n)?;
    let a = algebra_of_censym(ring, n)?;
    let witness = json!({
        "basis": c.basis.iter().map(|v| a.format(v)).collect::<Vec<_>>(),
        "dimension": c.dimension(),
        "exhaustive": c.exhaustive,
    });
    Ok(Report::new("centre", params(n, ring, None), c.report, Some(witness)))
}

/// The operands, their product and the symmetry flags of all three.
pub struct BisymmetricDemo {
    pub left: Matrix,
    pub right: Matrix,
    pub product: Matrix,
    pub flags: [SymmetryFlags; 3],
}

pub fn bisymmetric_demo() -> BisymmetricDemo {
    let z = RingSpec::Integer;
    let sum = |ps: &[(usize, usize)]| {
        ps.iter().fold(Matrix::zero(&z, 3), |acc, &(i, j)| acc.add(&matrix_unit(&z, 3, i, j).expect("in range")).expect("same size"))
    };
    let left = sum(&[(1, 1), (1, 3), (3, 1), (3, 3)]);
    let right = sum(&[(1, 2), (2, 1), (2, 3), (3, 2)]);
    let product = left.mul(&right).expect("same size");
    let flags = [left.symmetry_class(), right.symmetry_class(), product.symmetry_class()];
    BisymmetricDemo { left, right, product, flags }
}

pub fn demo_report() -> Report {
    let d = bisymmetric_demo();
    let z = RingSpec::Integer;
    let mut rep = CheckReport::new();
    let [fl, fr, fp] = d.flags;
    rep.push(Clause::from_search(
        "operands-bisymmetric",
        (!(fl.bisymmetric && fr.bisymmetric))
            .then(|| Counterexample::new(vec!["operands".into()], format!("{} {}", fl.bisymmetric, fr.bisymmetric), "true true")),
    ));
    let want = d.product.clone();
    let expected = matrix_unit(&z, 3, 1, 2)
        .and_then(|a| a.add(&matrix_unit(&z, 3, 3, 2)?))
        .and_then(|a| a.scale(&z.from_i64(2)))
        .expect("in range");
    rep.push(Clause::from_search(
        "product-is-2(e12+e32)",
        (want != expected).then(|| Counterexample::new(vec!["product".into()], want.to_text(), expected.to_text())),
    ));
    rep.push(Clause::from_search(
        "product-centrosymmetric",
        (!fp.centrosymmetric).then(|| Counterexample::new(vec!["product".into()], "false", "true")),
    ));
    rep.push(Clause::from_search(
        "product-not-bisymmetric",
        fp.bisymmetric.then(|| Counterexample::new(vec!["product".into()], "true", "false")),
    ));
    let flag_json = |f: &SymmetryFlags| {
        json!({
            "symmetric": f.symmetric,
            "persymmetric": f.persymmetric,
            "bisymmetric": f.bisymmetric,
            "centrosymmetric": f.centrosymmetric,
        })
    };
    let witness = json!({
        "left": literals(&d.left),
        "right": literals(&d.right),
        "product": literals(&d.product),
        "flags": { "left": flag_json(&fl), "right": flag_json(&fr), "product": flag_json(&fp) },
    });
    Report::new("demo-bisymmetric", Params { n: Some(3), ring: z.to_string(), seed: None }, rep, Some(witness))
}

/// Rows `f_u * f_v = ...` of the multiplication table.
pub fn table_rows(ring: &RingSpec, n: usize) -> Result<Vec<(String, String, String)>> {
    let a = algebra_of_censym(ring, n)?;
    let labels = a.labels().to_vec();
    let mut out = Vec::with_capacity(labels.len().pow(2));
    for (u, x) in labels.iter().enumerate() {
        for (v, y) in labels.iter().enumerate() {
            out.push((x.clone(), y.clone(), a.format(&a.mul_basis(u, v))));
        }
    }
    Ok(out)
}

// ---- dispatch ------------------------------------------------------------

fn run_check(kind: CheckKind, ring: &RingSpec, n: usize, seed: u64, extra: &[Matrix]) -> Vec<Report> {
    let p = params(n, ring, None);
    let guard = |name: &str, r: Result<Report>| r.unwrap_or_else(|e| Report::from_error(name, p.clone(), &e));
    let batch = frobenius::DEFAULT_BATCH;
    match kind {
        CheckKind::Closure => vec![guard("closure", closure_report(ring, n, batch, seed))],
        CheckKind::Rank => vec![guard("rank", rank_report(ring, n, batch, seed))],
        CheckKind::StructureConstants => vec![guard("structure-constants", structure_constants_report(ring, n))],
        CheckKind::Frobenius => vec![guard("frobenius", frobenius_report(ring, n, batch, seed, extra))],
        CheckKind::Separability => vec![guard("separability", separability_report(ring, n))],
        CheckKind::Split => vec![guard("split", split_report(ring, n))],
        CheckKind::Isos => applicable_isos(ring, n)
            .into_iter()
            .flat_map(|k| iso_reports(k, ring, n, None).unwrap_or_else(|e| vec![Report::from_error(iso_name(k), p.clone(), &e)]))
            .collect(),
        CheckKind::Cellchain => vec![guard("cellchain", cellchain_report(ring, n))],
        CheckKind::Heredity => vec![guard("heredity", heredity_report(ring, n))],
        CheckKind::Centre => vec![guard("centre", centre_report(ring, n))],
        CheckKind::All => CheckKind::EACH.iter().flat_map(|&k| run_check(k, ring, n, seed, extra)).collect(),
    }
}

fn sizes(n: Option<usize>) -> Result<Vec<usize>> {
    match n {
        Some(0) => Err(usage("--n must be at least 1")),
        Some(n) => Ok(vec![n]),
        None => Ok(DEFAULT_GRID.collect()),
    }
}

fn one_size(n: Option<usize>) -> Result<usize> {
    match n {
        None => Err(usage("--n is required")),
        Some(0) => Err(usage("--n must be at least 1")),
        Some(n) => Ok(n),
    }
}

/// What a command produced: reports (which set the exit status) or a
/// plain document.
pub enum Output {
    Reports(Vec<Report>),
    Document(String),
}

/// Runs a parsed command. Errors are usage errors.
pub fn execute(cmd: Command) -> Result<(Output, bool)> {
    match cmd {
        Command::Verify { common, checks, seed, matrix_file } => {
            let ring = parse_ring(&common.ring)?;
            let extra = match &matrix_file {
                Some(p) => read_matrices(p)?,
                None => Vec::new(),
            };
            if let Some(m) = extra.iter().find(|m| m.ring() != &ring) {
                return Err(usage(format!("matrix file is over {}, not {ring}", m.ring())));
            }
            let mut reports = Vec::new();
            for n in sizes(common.n)? {
                for &k in &checks {
                    reports.extend(run_check(k, &ring, n, seed, &extra));
                }
            }
            Ok((Output::Reports(reports), common.json))
        }
        Command::Frobenius { common, seed, matrix_file } => {
            let ring = parse_ring(&common.ring)?;
            let n = one_size(common.n)?;
            let extra = match &matrix_file {
                Some(p) => read_matrices(p)?,
                None => Vec::new(),
            };
            if let Some(m) = extra.iter().find(|m| m.ring() != &ring || m.n() != n) {
                return Err(usage(format!("matrix file holds a {}x{} matrix over {}", m.n(), m.n(), m.ring())));
            }
            let reports = vec![
                frobenius_report(&ring, n, frobenius::DEFAULT_BATCH, seed, &extra)?,
                separability_report(&ring, n)?,
                split_report(&ring, n)?,
            ];
            Ok((Output::Reports(reports), common.json))
        }
        Command::Iso { common, kind, j } => {
            let ring = parse_ring(&common.ring)?;
            let n = match (kind, common.n) {
                (IsoKind::S2, None) => 2,
                (IsoKind::S3, None) => 3,
                (_, n) => one_size(n)?,
            };
            Ok((Output::Reports(iso_reports(kind, &ring, n, j)?), common.json))
        }
        Command::Cellchain { common } => {
            let ring = parse_ring(&common.ring)?;
            let n = one_size(common.n)?;
            Ok((Output::Reports(vec![cellchain_report(&ring, n)?]), common.json))
        }
        Command::Centre { common } => {
            let ring = parse_ring(&common.ring)?;
            let n = one_size(common.n)?;
            Ok((Output::Reports(vec![centre_report(&ring, n)?]), common.json))
        }
        Command::DemoBisymmetric { json } => {
            let rep = demo_report();
            if json {
                return Ok((Output::Reports(vec![rep]), true));
            }
            let d = bisymmetric_demo();
            let mut s = String::new();
            for (name, m, f) in [("left", &d.left, d.flags[0]), ("right", &d.right, d.flags[1]), ("product", &d.product, d.flags[2])] {
                let _ = writeln!(s, "{name}:");
                for row in m.to_literals() {
                    let _ = writeln!(s, "  {}", row.join(" "));
                }
                let _ = writeln!(s, "  bisymmetric: {}  centrosymmetric: {}", f.bisymmetric, f.centrosymmetric);
            }
            s.push_str(&rep.to_text());
            let failed = rep.verdict.is_fail();
            Ok((Output::Document(s), failed))
        }
        Command::Table { common } => {
            let ring = parse_ring(&common.ring)?;
            let n = one_size(common.n)?;
            let rows = table_rows(&ring, n)?;
            let doc = if common.json {
                let products: Vec<Value> = rows.iter().map(|(x, y, p)| json!({ "left": x, "right": y, "product": p })).collect();
                let v = json!({ "n": n, "ring": ring.to_string(), "labels": censym::basis_labels(n), "products": products });
                serde_json::to_string_pretty(&v).expect("serialises") + "\n"
            } else {
                rows.iter().map(|(x, y, p)| format!("{x} * {y} = {p}\n")).collect()
            };
            Ok((Output::Document(doc), false))
        }
        Command::DumpAlgebra { common, kind } => {
            let ring = parse_ring(&common.ring)?;
            let n = one_size(common.n)?;
            let a = match kind {
                AlgebraKind::Censym => algebra_of_censym(&ring, n)?,
                AlgebraKind::Matrix => full_matrix_algebra(&ring, n),
            };
            let mut v = a.to_json();
            v["kind"] = json!(match kind {
                AlgebraKind::Censym => "censym",
                AlgebraKind::Matrix => "matrix",
            });
            v["n"] = json!(n);
            Ok((Output::Document(serde_json::to_string_pretty(&v).expect("serialises") + "\n"), false))
        }
    }
}

/// Renders reports; returns whether any failed.
pub fn render(reports: &[Report], json: bool, out: &mut impl std::io::Write) -> std::io::Result<bool> {
    for r in reports {
        if json {
            writeln!(out, "{}", r.to_json_line())?;
        } else {
            write!(out, "{}", r.to_text())?;
        }
    }
    Ok(reports.iter().any(|r| r.verdict.is_fail()))
}

/// Entry point: parses `args` (including the program name), runs, prints,
/// and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command) {
        Err(e) => {
            eprintln!("censym: {e}");
            2
        }
        Ok((Output::Document(s), failed)) => {
            let _ = out.write_all(s.as_bytes());
            i32::from(failed)
        }
        Ok((Output::Reports(rs), json)) => match render(&rs, json, &mut out) {
            Ok(failed) => i32::from(failed),
            Err(_) => 2,
        },
    }
}
