//! Bracket axioms, Jacobi and Poisson-ideal checks.

use rand::Rng;

use crate::exactalg::Scalar;
use crate::poisson::{LiePoissonSpace, PresentedPoissonAlgebra, Verdict};
use crate::sample;

use super::{fail, CheckOptions, PropertyResult};

pub fn suite(opts: &CheckOptions) -> Vec<PropertyResult> {
    let algebras = match &opts.algebra {
        Some(a) => vec![a.clone()],
        None => vec![PresentedPoissonAlgebra::semicone(), PresentedPoissonAlgebra::adjoint_quotient()],
    };
    let mut out = Vec::new();
    for a in &algebras {
        out.push(poisson_ideal(a));
        out.push(jacobi_generators(a));
        out.push(antisymmetry_leibniz(a, 500, opts.seed));
    }
    if opts.algebra.is_none() {
        out.push(adjoint_tau_brackets());
        for a in &algebras {
            out.push(perturbations_detected(a, 20, opts.seed));
        }
        out.push(lie_poisson_jacobi(3));
        out.push(lie_poisson_linear(3, opts.seed));
    }
    out
}

fn verdict(v: Verdict) -> std::result::Result<(), String> {
    match v {
        Verdict::Pass => Ok(()),
        Verdict::Fail { location, witness } => Err(format!("{location} = {witness}")),
    }
}

pub fn poisson_ideal(a: &PresentedPoissonAlgebra) -> PropertyResult {
    let n = a.num_generators() * a.relations().relations().len();
    PropertyResult::run(format!("{}: relations generate a Poisson ideal", a.name()), || {
        verdict(a.is_poisson_ideal()).map(|_| n).or_else(|e| fail(n, e))
    })
}

pub fn jacobi_generators(a: &PresentedPoissonAlgebra) -> PropertyResult {
    let g = a.num_generators();
    let n = g * g.saturating_sub(1) * g.saturating_sub(2) / 6;
    PropertyResult::run(format!("{}: Jacobi identity on generator triples", a.name()), || {
        verdict(a.check_jacobi()).map(|_| n).or_else(|e| fail(n, e))
    })
}

pub fn antisymmetry_leibniz(a: &PresentedPoissonAlgebra, count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run(format!("{}: antisymmetry and Leibniz rule on random polynomials", a.name()), || {
        let mut rng = sample::rng(seed);
        let vars = a.vars();
        for i in 0..count {
            let f = sample::poly(&mut rng, vars, 3, 3, false);
            let g = sample::poly(&mut rng, vars, 3, 3, false);
            let h = sample::poly(&mut rng, vars, 2, 3, false);
            let fg = a.bracket(&f, &g).expect("same ring");
            let gf = a.bracket(&g, &f).expect("same ring");
            if !a.normal_form(&(&fg + &gf)).is_zero() {
                return fail(i, format!("{{f,g}} + {{g,f}} ≠ 0 for f = {f}, g = {g}"));
            }
            let lhs = a.bracket(&f, &(&g * &h)).expect("same ring");
            let rhs = &g * &a.bracket(&f, &h).expect("same ring") + &h * &fg;
            if !a.normal_form(&(lhs - rhs)).is_zero() {
                return fail(i, format!("Leibniz fails for f = {f}, g = {g}, h = {h}"));
            }
        }
        Ok(count)
    })
}

/// `{X,τ} = 2(1−τ)Y` and `{Y,τ} = 2Xτ`.
pub fn adjoint_tau_brackets() -> PropertyResult {
    PropertyResult::run("adjoint-quotient: derived brackets {X,tau} = 2(1-tau)Y, {Y,tau} = 2X*tau", || {
        let a = PresentedPoissonAlgebra::adjoint_quotient();
        let p = |s: &str| a.parse(s).expect("valid");
        for (f, g, want) in [("X", "tau", "2*(1 - tau)*Y"), ("Y", "tau", "2*X*tau"), ("X", "Y", "X^2 + Y^2 + 4*(2*tau - 1)")] {
            let got = a.bracket(&p(f), &p(g)).expect("same ring");
            if got != a.normal_form(&p(want)) {
                return fail(3, format!("{{{f},{g}}} = {got}"));
            }
        }
        Ok(3)
    })
}

/// Adds a random nonzero polynomial of degree at most 1 to one table entry;
/// every such perturbation must break the ideal property.
pub fn perturbations_detected(a: &PresentedPoissonAlgebra, count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run(format!("{}: single-entry table perturbations are rejected", a.name()), || {
        let mut rng = sample::rng(seed ^ 0x5eed);
        let n = a.num_generators();
        let vars = a.vars();
        for t in 0..count {
            let i = rng.random_range(0..n);
            let j = (i + rng.random_range(1..n)) % n;
            let delta = loop {
                let d = sample::poly(&mut rng, vars, 1, 2, false);
                if !d.is_zero() {
                    break d;
                }
            };
            let value = a.table_entry(i, j) + &delta;
            let bad = a.with_bracket(vars.name(i), vars.name(j), value).expect("valid entry");
            if bad.is_poisson_ideal().passed() {
                return fail(t, format!("{{{},{}}} += {delta} not detected", vars.name(i), vars.name(j)));
            }
        }
        Ok(count)
    })
}

pub fn lie_poisson_jacobi(lmax: usize) -> PropertyResult {
    PropertyResult::run(format!("lie-poisson sp(l), l <= {lmax}: Jacobi identity on coordinate triples"), || {
        let mut n = 0;
        for l in 1..=lmax {
            let s = LiePoissonSpace::new(l).expect("l >= 1");
            let d = s.algebra().dim();
            n += d * (d - 1) * (d - 2) / 6;
            if let Verdict::Fail { location, witness } = s.poisson().check_jacobi() {
                return fail(n, format!("l = {l}, {location}: {witness}"));
            }
        }
        Ok(n)
    })
}

/// `{f_a, f_b}(x) = ½ tr([a,b] x)` for basis pairs at random points of 𝔰𝔭(ℓ).
pub fn lie_poisson_linear(lmax: usize, seed: u64) -> PropertyResult {
    PropertyResult::run(format!("lie-poisson sp(l), l <= {lmax}: bracket of linear functions is the commutator"), || {
        let mut rng = sample::rng(seed);
        let mut n = 0;
        for l in 1..=lmax {
            let s = LiePoissonSpace::new(l).expect("l >= 1");
            let g = s.algebra();
            let half = Scalar::ratio(1, 2);
            let xs: Vec<_> = (0..3)
                .map(|_| g.from_coords(&(0..g.dim()).map(|_| sample::scalar(&mut rng, 5, 3, false)).collect::<Vec<_>>()))
                .collect();
            for (i, a) in g.basis().iter().enumerate() {
                for b in &g.basis()[i..] {
                    n += 1;
                    let br = s.bracket(&s.linear(a).expect("basis"), &s.linear(b).expect("basis")).expect("same space");
                    let c = a.commutator(b);
                    for x in &xs {
                        let want = (&c * x).trace() * &half;
                        if s.evaluate(&br, x).expect("point") != want {
                            return fail(n, format!("l = {l}: {{f_a, f_b}} = {br} disagrees with 1/2 tr([a,b]x)"));
                        }
                    }
                    if br != s.linear(&c).expect("closed under commutator") {
                        return fail(n, format!("l = {l}: {br} is not f_[a,b]"));
                    }
                }
            }
        }
        Ok(n)
    })
}
