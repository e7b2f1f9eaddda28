//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use stratquant_core::checks::{fock, lierinehart, poisson, reduction, repcount, PropertyResult, DEFAULT_SEED};
use stratquant_core::poisson::PresentedPoissonAlgebra;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Vec<PropertyResult>,
}

fn identities() -> Vec<PropertyResult> {
    let cone = PresentedPoissonAlgebra::semicone();
    let adj = PresentedPoissonAlgebra::adjoint_quotient();
    vec![
        poisson::poisson_ideal(&cone),
        poisson::jacobi_generators(&cone),
        poisson::poisson_ideal(&adj),
        poisson::jacobi_generators(&adj),
        poisson::adjoint_tau_brackets(),
        reduction::adjoint_relation(1000, DEFAULT_SEED),
    ]
}

fn lie_rinehart() -> Vec<PropertyResult> {
    vec![
        lierinehart::lie_rinehart_axioms(200, DEFAULT_SEED),
        lierinehart::ext_jacobi(200, DEFAULT_SEED),
        lierinehart::representation(),
        lierinehart::dirac_flat(),
        lierinehart::stripped_mutant_fails(),
    ]
}

fn bargmann() -> Vec<PropertyResult> {
    vec![fock::closed_form_matches_oracle(4, 3), fock::gram_positive_definite(2, 3)]
}

fn geometry() -> Vec<PropertyResult> {
    vec![reduction::zero_level(1000, DEFAULT_SEED), reduction::semicone_image(1000, DEFAULT_SEED)]
}

fn dimensions() -> Vec<PropertyResult> {
    vec![fock::basis_dimension(3, 4), repcount::oracle_agreement(3, 4, DEFAULT_SEED), fock::restriction_kernel()]
}

fn top_level() -> Vec<PropertyResult> {
    vec![repcount::top_level_closed_form(3, 4)]
}

fn killing() -> Vec<PropertyResult> {
    vec![reduction::killing_orthogonal(100, DEFAULT_SEED), reduction::killing_symplectic(100, DEFAULT_SEED)]
}

fn cli_run(args: &[&str]) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_stratquant")).args(args).output().expect("binary runs");
    (o.status.code().unwrap_or(-1), o.stdout)
}

fn cli_contract() -> Vec<PropertyResult> {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/perturbed_semicone.json");
    vec![
        PropertyResult::run("byte-identical reruns", || {
            let cases: [&[&str]; 3] = [
                &["dims", "--lmax", "2", "--kmax", "3", "--json"],
                &["reduce-sample", "--s", "3", "--l", "3", "--count", "25", "--json"],
                &["adjoint", "--count", "100", "--json"],
            ];
            for (i, args) in cases.iter().enumerate() {
                let (a, b) = (cli_run(args), cli_run(args));
                if a != b || a.0 != 0 {
                    return Err((i, format!("{args:?}")));
                }
            }
            Ok(cases.len())
        }),
        PropertyResult::run("exit codes: 0 pass, 1 mutant, 2 usage", || {
            let cases: [(&[&str], i32); 4] = [
                (&["check", "poisson"], 0),
                (&["check", "poisson", "--algebra", fixture], 1),
                (&["dirac", "--no-potential"], 1),
                (&["dims", "--lmax", "9"], 2),
            ];
            for (i, (args, want)) in cases.iter().enumerate() {
                let (got, _) = cli_run(args);
                if got != *want {
                    return Err((i, format!("{args:?} exited {got}, expected {want}")));
                }
            }
            Ok(cases.len())
        }),
    ]
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "symbolic identities (semicone, adjoint quotient)", limit: Some(Duration::from_secs(5)), run: identities },
        Criterion { id: 2, title: "Lie-Rinehart axioms, extension Jacobi, Dirac condition", limit: Some(Duration::from_secs(30)), run: lie_rinehart },
        Criterion { id: 3, title: "Bargmann closed form and Gram positivity", limit: Some(Duration::from_secs(30)), run: bargmann },
        Criterion { id: 4, title: "zero-level reduction geometry", limit: Some(Duration::from_secs(60)), run: geometry },
        Criterion { id: 5, title: "invariant basis = highest-weight count = oracle; restriction kernels", limit: Some(Duration::from_secs(300)), run: dimensions },
        Criterion { id: 6, title: "top-level closed form", limit: None, run: top_level },
        Criterion { id: 7, title: "Killing form identities", limit: None, run: killing },
        Criterion { id: 8, title: "CLI determinism and exit codes", limit: None, run: cli_contract },
    ];
    let mut all = true;
    for c in &criteria {
        let t = Instant::now();
        let results = (c.run)();
        let elapsed = t.elapsed();
        let within = c.limit.is_none_or(|l| elapsed <= l);
        let ok = within && results.iter().all(|r| r.passed);
        all &= ok;
        let limit = c.limit.map(|l| format!(" / limit {l:?}")).unwrap_or_default();
        println!("criterion {}: {} - {} ({elapsed:.2?}{limit})", c.id, if ok { "PASS" } else { "FAIL" }, c.title);
        for r in results.iter().filter(|r| !r.passed) {
            println!("    {r}");
        }
        if !within {
            println!("    runtime limit exceeded");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
