//! Lie–Rinehart axioms, the extension bracket, and the Dirac condition.

use crate::exactalg::{monomials_of_degree, Poly, Scalar, VarSet};
use crate::lierinehart::{DiffElement, LieRinehart, PrequantumModule};
use crate::poisson::{PresentedPoissonAlgebra, Verdict};
use crate::sample::{self, SampleRng};

use super::{fail, PropertyResult};

pub fn suite(seed: u64) -> Vec<PropertyResult> {
    vec![
        differential_rules_confluent(),
        lie_rinehart_axioms(200, seed),
        ext_jacobi(200, seed),
        representation(),
        dirac_flat(),
        stripped_mutant_fails(),
    ]
}

fn algebras() -> Vec<PresentedPoissonAlgebra> {
    vec![PresentedPoissonAlgebra::flat(1), PresentedPoissonAlgebra::flat(2), PresentedPoissonAlgebra::semicone()]
}

pub fn differential_rules_confluent() -> PropertyResult {
    PropertyResult::run("differential module rules are confluent and kill dR", || {
        let algs = [PresentedPoissonAlgebra::semicone(), PresentedPoissonAlgebra::adjoint_quotient()];
        for (i, a) in algs.into_iter().enumerate() {
            let name = a.name().to_string();
            match LieRinehart::new(a) {
                Ok(lr) => {
                    if let Verdict::Fail { location, witness } = lr.check_confluence() {
                        return fail(i, format!("{name}: {location} leaves {witness}"));
                    }
                }
                Err(e) => return fail(i, format!("{name}: {e}")),
            }
        }
        Ok(2)
    })
}

fn random_diff(rng: &mut SampleRng, lr: &LieRinehart) -> DiffElement {
    let vars = lr.algebra().vars();
    let coeffs = (0..vars.len()).map(|_| sample::poly(rng, vars, 2, 2, false)).collect();
    lr.element(coeffs).expect("same ring")
}

fn small_poly(rng: &mut SampleRng, vars: &VarSet) -> Poly {
    sample::poly(rng, vars, 2, 2, false)
}

/// `[α, aβ] = α(a)β + a[α,β]`, `(aα)(b) = a·α(b)` and antisymmetry, on each
/// of the flat ℝ², ℝ⁴ and semicone algebras.
pub fn lie_rinehart_axioms(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("Lie-Rinehart axioms on flat R^2, R^4 and the semicone", || {
        let mut rng = sample::rng(seed);
        let mut n = 0;
        for alg in algebras() {
            let lr = LieRinehart::new(alg).expect("built-in algebra");
            let vars = lr.algebra().vars().clone();
            for _ in 0..count {
                n += 1;
                let alpha = random_diff(&mut rng, &lr);
                let beta = random_diff(&mut rng, &lr);
                let a = small_poly(&mut rng, &vars);
                let b = small_poly(&mut rng, &vars);
                let lhs = lr.lr_bracket(&alpha, &lr.scale(&a, &beta).expect("same ring"));
                let anchor = lr.pi_sharp(&alpha, &a).expect("same ring");
                let rhs = &lr.scale(&anchor, &beta).expect("same ring")
                    + &lr.scale(&a, &lr.lr_bracket(&alpha, &beta)).expect("same ring");
                if lhs != rhs {
                    return fail(n, format!("{}: [α, aβ] rule fails for α = {alpha}, β = {beta}, a = {a}", lr.algebra().name()));
                }
                let l = lr.pi_sharp(&lr.scale(&a, &alpha).expect("same ring"), &b).expect("same ring");
                let r = lr.algebra().normal_form(&(&a * &lr.pi_sharp(&alpha, &b).expect("same ring")));
                if l != r {
                    return fail(n, format!("{}: (aα)(b) ≠ a·α(b) for α = {alpha}, a = {a}, b = {b}", lr.algebra().name()));
                }
                let s = &lr.lr_bracket(&alpha, &beta) + &lr.lr_bracket(&beta, &alpha);
                if !s.is_zero() {
                    return fail(n, format!("{}: bracket not antisymmetric for α = {alpha}, β = {beta}", lr.algebra().name()));
                }
            }
        }
        Ok(n)
    })
}

/// Jacobi for the extension bracket on random triples of pairs `(a, du)`.
pub fn ext_jacobi(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("extension bracket Jacobi identity on flat R^2 and R^4", || {
        let mut rng = sample::rng(seed.wrapping_add(1));
        let mut n = 0;
        for k in [1, 2] {
            let lr = LieRinehart::new(PresentedPoissonAlgebra::flat(k)).expect("flat");
            let vars = lr.algebra().vars().clone();
            for _ in 0..count / 2 {
                n += 1;
                let e: Vec<_> = (0..3)
                    .map(|_| {
                        let a = small_poly(&mut rng, &vars);
                        let u = sample::poly(&mut rng, &vars, 3, 2, false);
                        lr.ext_pair(&a, &u).expect("same ring")
                    })
                    .collect();
                let br = |x, y| lr.ext_bracket(x, y).expect("same ring");
                let (b12, b20, b01) = (br(&e[1], &e[2]), br(&e[2], &e[0]), br(&e[0], &e[1]));
                let t1 = br(&e[0], &b12);
                let t2 = br(&e[1], &b20);
                let t3 = br(&e[2], &b01);
                let scalar = t1.scalar + t2.scalar + t3.scalar;
                let diff = &(&t1.diff + &t2.diff) + &t3.diff;
                if !scalar.is_zero() || !diff.is_zero() {
                    return fail(n, format!("R^{}: jacobiator ({scalar}, {diff})", 2 * k));
                }
            }
        }
        Ok(n)
    })
}

pub fn representation() -> PropertyResult {
    PropertyResult::run("prequantum module: chi(a,0) = i*a and chi represents the extension (probes of degree <= 3)", || {
        for n in [1, 2] {
            let m = match PrequantumModule::flat(n) {
                Ok(m) => m,
                Err(e) => return fail(n, format!("R^{}: {e}", 2 * n)),
            };
            if let Verdict::Fail { location, witness } = m.check_representation(3) {
                return fail(n, format!("R^{}: {location}: {witness}", 2 * n));
            }
        }
        Ok(2)
    })
}

fn monomials_up_to(vars: &VarSet, deg: u32) -> Vec<Poly> {
    (0..=deg)
        .flat_map(|k| monomials_of_degree(vars.len(), k))
        .map(|m| Poly::term(vars, m, Scalar::one()))
        .collect()
}

/// Residual of every unordered monomial pair of degree ≤ `max_deg`, on
/// probes of degree ≤ `probe_deg`. The residual is a first-order differential
/// operator, so the probes `1` and the coordinates already decide it.
pub fn dirac_residuals(m: &PrequantumModule, max_deg: u32, probe_deg: u32) -> std::result::Result<usize, (usize, String)> {
    let vars = m.algebra().vars().clone();
    let obs = monomials_up_to(&vars, max_deg);
    let probes = monomials_up_to(&vars, probe_deg);
    let mut n = 0;
    for (i, a) in obs.iter().enumerate() {
        for b in &obs[i..] {
            n += 1;
            for x in &probes {
                let r = m.dirac_residual(a, b, x).expect("same ring");
                if !r.is_zero() {
                    return fail(n, format!("a = {a}, b = {b}, probe {x}: residual {r}"));
                }
            }
        }
    }
    Ok(n)
}

pub fn dirac_flat() -> PropertyResult {
    PropertyResult::run("Dirac condition on monomial pairs of degree <= 3 on R^2 and R^4", || {
        let mut total = 0;
        for n in [1, 2] {
            let m = PrequantumModule::flat(n).map_err(|e| (total, e.to_string()))?;
            total += dirac_residuals(&m, 3, 3).map_err(|(k, e)| (total + k, format!("R^{}: {e}", 2 * n)))?;
        }
        Ok(total)
    })
}

/// The module without the potential term must violate the Dirac condition,
/// with residual `−{a,b}·x`.
pub fn stripped_mutant_fails() -> PropertyResult {
    PropertyResult::run("mutant without the potential term violates the Dirac condition", || {
        let m = PrequantumModule::without_potential(1);
        let p = |s: &str| m.algebra().parse(s).expect("valid");
        let (a, b, x) = (p("q1"), p("p1"), p("1"));
        let r = m.dirac_residual(&a, &b, &x).expect("same ring");
        let ab = m.algebra().bracket(&a, &b).expect("same ring");
        if r != -(&ab * &x) {
            return fail(1, format!("residual {r}, expected -{{a,b}}·x"));
        }
        if dirac_residuals(&m, 3, 1).is_ok() {
            return fail(2, "mutant passes the Dirac sweep");
        }
        if PrequantumModule::with_sign(1, -1).check_representation(1).passed() {
            return fail(3, "opposite sign passes the representation check");
        }
        Ok(3)
    })
}
