use crate::error::{Error, Result};
use crate::exactalg::{Poly, Scalar};
use crate::poisson::{PresentedPoissonAlgebra, Verdict};

use super::differentials::LieRinehart;
use super::extension::ExtElement;

/// Prequantum module on `M = A ⊗ ℂ` for the flat algebra on ℝ²ⁿ.
///
/// `χ(a, Σ cⱼ dgⱼ)x = i·a·x + Σ cⱼ ({gⱼ, x} + i·ε·θ(X_{gⱼ})·x)` with
/// `θ = Σ pᵢ dqᵢ`, so `θ(X_u) = Σ pᵢ {u, qᵢ}`.
#[derive(Clone, Debug)]
pub struct PrequantumModule {
    lr: LieRinehart,
    potential: Vec<Poly>,
    sign: i32,
}

impl PrequantumModule {
    /// Builds the module on ℝ²ⁿ, selecting the unique sign `ε ∈ {+1, −1}`
    /// for which `χ` represents `L̄`.
    pub fn flat(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let valid: Vec<PrequantumModule> = [1, -1]
            .into_iter()
            .map(|e| Self::with_sign(n, e))
            .filter(|m| m.check_representation(2).passed())
            .collect();
        match <[PrequantumModule; 1]>::try_from(valid) {
            Ok([m]) => Ok(m),
            Err(v) => Err(Error::SignSelection(format!("{} valid signs", v.len()))),
        }
    }

    /// Module with a fixed sign, unvalidated. `ε = 0` drops the potential.
    pub fn with_sign(n: usize, sign: i32) -> Self {
        let alg = PresentedPoissonAlgebra::flat(n);
        let vars = alg.vars().clone();
        let potential = (0..vars.len())
            .map(|j| {
                let u = Poly::var_at(&vars, j);
                let mut th = Poly::zero(&vars);
                for i in 1..=n {
                    let (q, p) = (Poly::var_at(&vars, 2 * i - 2), Poly::var_at(&vars, 2 * i - 1));
                    th = th + &p * &alg.bracket(&u, &q).expect("same ring");
                }
                th
            })
            .collect();
        PrequantumModule { lr: LieRinehart::new(alg).expect("flat algebra"), potential, sign }
    }

    /// The module with the `θ` correction deleted.
    pub fn without_potential(n: usize) -> Self {
        Self::with_sign(n, 0)
    }

    pub fn sign(&self) -> i32 {
        self.sign
    }

    pub fn lie_rinehart(&self) -> &LieRinehart {
        &self.lr
    }

    pub fn algebra(&self) -> &PresentedPoissonAlgebra {
        self.lr.algebra()
    }

    /// `θ(X_g)` for a generator.
    pub fn potential(&self, generator: &str) -> Result<&Poly> {
        Ok(&self.potential[self.algebra().vars().index_of(generator)?])
    }

    fn check(&self, p: &Poly) -> Result<()> {
        if p.vars() != self.algebra().vars() {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn chi(&self, e: &ExtElement, x: &Poly) -> Result<Poly> {
        self.check(x)?;
        let alg = self.algebra();
        let ieps = Scalar::i() * Scalar::int(self.sign as i64);
        let mut out = (&e.scalar * x).scale(&Scalar::i());
        for (j, c) in e.diff.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let g = Poly::var_at(alg.vars(), j);
            let act = alg.bracket(&g, x)? + (&self.potential[j] * x).scale(&ieps);
            out = out + c * &act;
        }
        Ok(out)
    }

    /// `â(x) = (1/i) χ(0, da)(x) + a·x`.
    pub fn prequantize(&self, a: &Poly, x: &Poly) -> Result<Poly> {
        self.check(a)?;
        let da = self.lr.ext(&Poly::zero(self.algebra().vars()), self.lr.d(a)?);
        Ok(self.chi(&da, x)?.scale(&-Scalar::i()) + a * x)
    }

    /// `{a,b}^(probe) − i[â, b̂](probe)`.
    pub fn dirac_residual(&self, a: &Poly, b: &Poly, probe: &Poly) -> Result<Poly> {
        let ab = self.algebra().bracket(a, b)?;
        let lhs = self.prequantize(&ab, probe)?;
        let comm = self.prequantize(a, &self.prequantize(b, probe)?)? - self.prequantize(b, &self.prequantize(a, probe)?)?;
        Ok(lhs - comm.scale(&Scalar::i()))
    }

    /// `χ(a,0) = i·a` and `χ([α,β]) = [χ(α), χ(β)]` on the pairs
    /// `(gᵢ, dgⱼ)`, `(0, dgⱼ)` and `(1, 0)`, evaluated on every monomial probe
    /// of degree at most `probe_degree`.
    pub fn check_representation(&self, probe_degree: u32) -> Verdict {
        let lr = &self.lr;
        let vars = self.algebra().vars().clone();
        let zero = Poly::zero(&vars);
        let mut gens = vec![lr.ext(&Poly::one(&vars), lr.zero())];
        for i in 0..vars.len() {
            let g = Poly::var_at(&vars, i);
            gens.push(lr.ext(&zero, lr.d(&g).expect("same ring")));
            gens.push(lr.ext(&g, lr.zero()));
        }
        let probes: Vec<Poly> = (0..=probe_degree)
            .flat_map(|k| crate::exactalg::monomials_of_degree(vars.len(), k))
            .map(|m| Poly::term(&vars, m, Scalar::one()))
            .collect();
        for x in &probes {
            for e in &gens {
                if e.diff.is_zero() {
                    let w = self.chi(e, x).expect("same ring") - (&e.scalar * x).scale(&Scalar::i());
                    if !w.is_zero() {
                        return Verdict::Fail { location: format!("χ({}, 0) on {x}", e.scalar), witness: w };
                    }
                }
            }
            for (s, a) in gens.iter().enumerate() {
                for b in &gens[s + 1..] {
                    let ab = lr.ext_bracket(a, b).expect("same ring");
                    let lhs = self.chi(&ab, x).expect("same ring");
                    let rhs = self.chi(a, &self.chi(b, x).expect("same ring")).expect("same ring")
                        - self.chi(b, &self.chi(a, x).expect("same ring")).expect("same ring");
                    let w = lhs - rhs;
                    if !w.is_zero() {
                        return Verdict::Fail { location: format!("[({}, {}), ({}, {})] on {x}", a.scalar, a.diff, b.scalar, b.diff), witness: w };
                    }
                }
            }
        }
        Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_is_plus_one() {
        let m = PrequantumModule::flat(1).unwrap();
        assert_eq!(m.sign(), 1);
        assert!(!PrequantumModule::with_sign(1, -1).check_representation(1).passed());
        assert_eq!(m.potential("p1").unwrap(), &m.algebra().parse("-p1").unwrap());
        assert!(m.potential("q1").unwrap().is_zero());
    }

    #[test]
    fn prequantize_examples() {
        let m = PrequantumModule::flat(1).unwrap();
        let p = |t| m.algebra().parse(t).unwrap();
        assert_eq!(m.prequantize(&p("5"), &p("q1*p1 + 1")).unwrap(), p("5*q1*p1 + 5"));
        assert_eq!(m.prequantize(&p("q1"), &p("1")).unwrap(), p("q1"));
        assert!(m.prequantize(&p("p1"), &p("1")).unwrap().is_zero());
    }

    #[test]
    fn dirac_examples() {
        let m = PrequantumModule::flat(1).unwrap();
        let p = |t| m.algebra().parse(t).unwrap();
        for probe in ["1", "q1", "p1^2*q1", "q1^3"] {
            assert!(m.dirac_residual(&p("q1"), &p("p1"), &p(probe)).unwrap().is_zero());
        }
        assert!(m.dirac_residual(&p("q1^2"), &p("p1^2"), &p("q1")).unwrap().is_zero());
    }

    #[test]
    fn deleting_potential_leaves_central_residual() {
        let m = PrequantumModule::without_potential(1);
        let p = |t| m.algebra().parse(t).unwrap();
        let (a, b, x) = (p("q1^2"), p("p1"), p("q1 + p1^2"));
        let ab = m.algebra().bracket(&a, &b).unwrap();
        assert_eq!(m.dirac_residual(&a, &b, &x).unwrap(), -(&ab * &x));
    }
}
