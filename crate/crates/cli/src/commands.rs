use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use stratquant_core::bounds::Bounds;
use stratquant_core::checks::{self, lierinehart::dirac_residuals, run_suite, CheckOptions, Suite};
use stratquant_core::exactalg::{parse_poly, poly_to_json, Matrix, Scalar, VarSet};
use stratquant_core::fock::{gram, invariant_basis_with, is_positive_definite};
use stratquant_core::lierinehart::PrequantumModule;
use stratquant_core::poisson::{PresentedPoissonAlgebra, Verdict};
use stratquant_core::reduction::{adjoint_point, sample_zero_level};
use stratquant_core::repcount::{kernel_dim, oracle_dim, section_dim};
use stratquant_core::{exactalg, sample};

use crate::args::SuiteArg;

pub const SCHEMA: &str = "stratquant/1";

/// Result of a subcommand, renderable in every output format.
pub struct Output {
    pub exit: u8,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

/// Configuration problems; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Output, UsageError>;

fn envelope(command: &str, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body) {
        dst.extend(src);
    }
    v
}

fn scalar_json(x: &Scalar) -> Value {
    json!({ "re": x.re().to_string(), "im": x.im().to_string() })
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(scalar_json).collect())).collect())
}

fn exit_for(passed: bool) -> u8 {
    if passed {
        0
    } else {
        1
    }
}

pub fn check(suite: SuiteArg, algebra: Option<&Path>, seed: u64) -> CmdResult {
    let mut opts = CheckOptions { seed, algebra: None };
    if let Some(path) = algebra {
        let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        opts.algebra = Some(PresentedPoissonAlgebra::from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?);
        if !matches!(suite, SuiteArg::Poisson | SuiteArg::All) {
            return Err(UsageError("--algebra applies to the poisson suite only".into()));
        }
    }
    let suites: Vec<Suite> = match suite {
        SuiteArg::Poisson => vec![Suite::Poisson],
        SuiteArg::Lierinehart => vec![Suite::LieRinehart],
        SuiteArg::Reduction => vec![Suite::Reduction],
        SuiteArg::Fock => vec![Suite::Fock],
        SuiteArg::Repcount => vec![Suite::Repcount],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, &opts)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "suite {}", r.suite);
        for p in &r.properties {
            let _ = writeln!(text, "  {p}");
        }
    }
    let _ = writeln!(text, "{}", if passed { "all properties pass" } else { "property failure" });
    Ok(Output {
        exit: exit_for(passed),
        json: envelope("check", json!({ "seed": seed, "passed": passed, "suites": reports })),
        text,
        csv: None,
    })
}

#[derive(Serialize)]
struct DimsRow {
    s: usize,
    l: usize,
    k: u32,
    section_dim: u64,
    oracle_dim: usize,
    kernel_dim: Option<u64>,
    #[serde(rename = "match")]
    matches: bool,
}

pub fn dims(lmax: usize, kmax: u32, seed: u64, bounds: &Bounds) -> CmdResult {
    if lmax == 0 {
        return Err(UsageError("--lmax must be at least 1".into()));
    }
    bounds.check(lmax, lmax, kmax as usize)?;
    let mut rows = Vec::new();
    for l in 1..=lmax {
        for s in 1..=l {
            for k in 0..=kmax {
                let sd = section_dim(s, l, k)?;
                let od = oracle_dim(s, l, k, seed)?;
                let kd = if s >= 2 { Some(kernel_dim(s, l, k)?) } else { None };
                rows.push(DimsRow { s, l, k, section_dim: sd, oracle_dim: od, kernel_dim: kd, matches: sd == od as u64 });
            }
        }
    }
    let passed = rows.iter().all(|r| r.matches);
    let mut csv = String::from("s,l,k,section_dim,oracle_dim,kernel_dim,match\n");
    let mut text = format!("{:>2} {:>2} {:>2} {:>8} {:>8} {:>8}  match\n", "s", "l", "k", "section", "oracle", "kernel");
    for r in &rows {
        let kd = r.kernel_dim.map(|x| x.to_string()).unwrap_or_default();
        let _ = writeln!(csv, "{},{},{},{},{},{},{}", r.s, r.l, r.k, r.section_dim, r.oracle_dim, kd, r.matches);
        let kd = if kd.is_empty() { "-".to_string() } else { kd };
        let _ = writeln!(text, "{:>2} {:>2} {:>2} {:>8} {:>8} {:>8}  {}", r.s, r.l, r.k, r.section_dim, r.oracle_dim, kd, r.matches);
    }
    Ok(Output {
        exit: exit_for(passed),
        json: envelope("dims", json!({ "seed": seed, "passed": passed, "rows": rows })),
        text,
        csv: Some(csv),
    })
}

pub fn gram_cmd(s: usize, l: usize, k: u32, bounds: &Bounds) -> CmdResult {
    let basis = invariant_basis_with(s, l, k, bounds)?;
    let g = gram(&basis);
    let pd = is_positive_definite(&g);
    let minors = exactalg::leading_principal_minors(&g);
    let mut text = format!("invariant basis (s = {s}, l = {l}, k = {k}): {} elements\n", basis.len());
    for w in basis.w_repr() {
        let _ = writeln!(text, "  {w}");
    }
    let _ = writeln!(text, "gram matrix:\n{g}");
    let _ = writeln!(text, "positive definite: {pd}");
    let body = json!({
        "s": s, "l": l, "k": k,
        "dimension": basis.len(),
        "basis": basis.w_repr().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "basis_z": basis.elements().iter().map(poly_to_json).collect::<Vec<_>>(),
        "gram": (0..g.rows()).map(|i| g.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "leading_minors": minors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "positive_definite": pd,
    });
    Ok(Output { exit: exit_for(pd), json: envelope("gram", body), text, csv: None })
}

pub fn reduce_sample(s: usize, l: usize, count: usize, seed: u64, bounds: &Bounds) -> CmdResult {
    bounds.check(s, l, 0)?;
    bounds.check_count(count)?;
    let pts = sample_zero_level(s, l, count, seed)?;
    let mut records = Vec::new();
    let mut text = String::new();
    let mut csv = String::from("index,muO_zero,rank,W\n");
    let mut passed = true;
    for (i, pt) in pts.iter().enumerate() {
        let zero = pt.on_zero_level();
        let w = pt.orbit_image()?;
        let rank = w.rank();
        passed &= zero && rank <= s.min(l);
        let vecs = |v: &[Vec<exactalg::Rational>]| -> Value {
            v.iter().map(|x| x.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>().into()
        };
        records.push(json!({
            "q": vecs(pt.q()), "p": vecs(pt.p()),
            "muO_zero": zero,
            "W": matrix_json(w.matrix()),
            "rank": rank,
        }));
        let flat: Vec<String> = (0..l).flat_map(|j| (0..l).map(move |k| (j, k))).map(|(j, k)| w.get(j, k).to_string()).collect();
        let _ = writeln!(csv, "{i},{zero},{rank},\"{}\"", flat.join(" "));
        let _ = writeln!(text, "{pt}\n  mu_O = 0: {zero}, rank W = {rank}, W = [{}]", flat.join(", "));
    }
    Ok(Output {
        exit: exit_for(passed),
        json: envelope("reduce-sample", json!({ "s": s, "l": l, "seed": seed, "samples": records })),
        text,
        csv: Some(csv),
    })
}

fn parse_scalar(s: &str) -> Result<Scalar, UsageError> {
    let vars = VarSet::new::<&str>(&[])?;
    let p = parse_poly(&vars, s).map_err(|e| UsageError(format!("z = {s}: {e}")))?;
    Ok(p.constant_term())
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Pass => json!({ "passed": true }),
        Verdict::Fail { location, witness } => json!({ "passed": false, "location": location, "witness": witness.to_string() }),
    }
}

pub fn adjoint(count: usize, zs: &[String], seed: u64, bounds: &Bounds) -> CmdResult {
    bounds.check_count(count)?;
    if count == 0 && zs.is_empty() {
        return Err(UsageError("--count must be at least 1".into()));
    }
    let points: Vec<Scalar> = if zs.is_empty() {
        let mut rng = sample::rng(seed);
        (0..count).map(|_| checks::reduction::random_torus_point(&mut rng)).collect()
    } else {
        zs.iter().map(|z| parse_scalar(z)).collect::<Result<_, _>>()?
    };
    let mut residual_failures = 0;
    let mut max_residual = exactalg::Rational::from_integer(0.into());
    let mut symmetry_failures = 0;
    let mut reported = Vec::new();
    for z in &points {
        let p = adjoint_point(z)?;
        let r = p.relation_residual();
        if !r.is_zero() {
            residual_failures += 1;
            max_residual = max_residual.max(r.norm_sqr());
        }
        let q = adjoint_point(&z.inv()?)?;
        if (&p.big_x, &p.big_y, &p.tau) != (&q.big_x, &q.big_y, &q.tau) {
            symmetry_failures += 1;
        }
        if !zs.is_empty() {
            reported.push(p);
        }
    }
    let alg = PresentedPoissonAlgebra::adjoint_quotient();
    let ideal = alg.is_poisson_ideal();
    let jacobi = alg.check_jacobi();
    let vertices: Vec<_> = [Scalar::one(), Scalar::int(-1)].iter().map(|z| adjoint_point(z).expect("nonzero")).collect();
    let vertex_brackets_vanish = vertices.iter().all(|v| {
        alg.table_at(&v.coordinates()).expect("point").iter().flatten().all(Scalar::is_zero)
    });
    let passed = residual_failures == 0 && symmetry_failures == 0 && ideal.passed() && jacobi.passed() && vertex_brackets_vanish;
    let point_json = |p: &stratquant_core::reduction::AdjointPoint| {
        json!({ "z": p.z.to_string(), "X": p.big_x.to_string(), "Y": p.big_y.to_string(), "tau": p.tau.to_string() })
    };
    let mut text = String::new();
    let _ = writeln!(text, "samples: {}", points.len());
    let _ = writeln!(text, "relation residual: max |r|^2 = {max_residual}, {residual_failures} nonzero");
    let _ = writeln!(text, "weyl symmetry z <-> 1/z: {symmetry_failures} failures");
    for p in &reported {
        let _ = writeln!(text, "point z = {}: (X, Y, tau) = ({}, {}, {})", p.z, p.big_x, p.big_y, p.tau);
    }
    let show = |v: &Verdict| match v {
        Verdict::Pass => "pass".to_string(),
        Verdict::Fail { location, witness } => format!("FAIL at {location}: {witness}"),
    };
    let _ = writeln!(text, "poisson ideal: {}", show(&ideal));
    let _ = writeln!(text, "jacobi: {}", show(&jacobi));
    for v in &vertices {
        let _ = writeln!(text, "vertex X = {} (z = {}): brackets vanish: {vertex_brackets_vanish}", v.big_x, v.z);
    }
    let body = json!({
        "seed": seed,
        "samples": points.len(),
        "residual_failures": residual_failures,
        "max_residual_norm_sqr": max_residual.to_string(),
        "symmetry_failures": symmetry_failures,
        "points": reported.iter().map(point_json).collect::<Vec<_>>(),
        "poisson_ideal": verdict_json(&ideal),
        "jacobi": verdict_json(&jacobi),
        "vertices": vertices.iter().map(point_json).collect::<Vec<_>>(),
        "vertex_brackets_vanish": vertex_brackets_vanish,
        "passed": passed,
    });
    Ok(Output { exit: exit_for(passed), json: envelope("adjoint", body), text, csv: None })
}

pub fn dirac(n: usize, max_degree: u32, probe_degree: u32, no_potential: bool, bounds: &Bounds) -> CmdResult {
    if n == 0 {
        return Err(UsageError("--n must be at least 1".into()));
    }
    bounds.check(0, n, max_degree.max(probe_degree) as usize)?;
    let module = if no_potential { PrequantumModule::without_potential(n) } else { PrequantumModule::flat(n)? };
    let result = dirac_residuals(&module, max_degree, probe_degree);
    let (passed, pairs, counterexample) = match result {
        Ok(k) => (true, k, None),
        Err((k, ce)) => (false, k, Some(ce)),
    };
    let mut text = format!(
        "flat R^{}: sign {}, potential {}\n",
        2 * n,
        module.sign(),
        if no_potential { "removed" } else { "p dq" }
    );
    let _ = writeln!(text, "monomial pairs of degree <= {max_degree}, probes of degree <= {probe_degree}: {pairs} checked");
    match &counterexample {
        None => text.push_str("dirac condition holds\n"),
        Some(ce) => {
            let _ = writeln!(text, "dirac condition FAILS: {ce}");
        }
    }
    let body = json!({
        "n": n,
        "sign": module.sign(),
        "potential": !no_potential,
        "max_degree": max_degree,
        "probe_degree": probe_degree,
        "pairs_checked": pairs,
        "passed": passed,
        "counterexample": counterexample,
    });
    Ok(Output { exit: exit_for(passed), json: envelope("dirac", body), text, csv: None })
}
