use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Poly, Scalar};
use crate::lie::MatrixLieAlgebra;

use super::algebra::PresentedPoissonAlgebra;

/// Polynomial functions on 𝔰𝔭(ℓ,ℝ) with the Lie–Poisson bracket.
///
/// Coordinates are the linear functions `f_e(x) = ½ tr(e x)` of the basis
/// elements `e`; the bracket of linear functions is `{f_a, f_b} = f_[a,b]`
/// and extends to polynomials as a bi-derivation.
#[derive(Clone, Debug)]
pub struct LiePoissonSpace {
    l: usize,
    algebra: MatrixLieAlgebra,
    poisson: PresentedPoissonAlgebra,
}

impl LiePoissonSpace {
    pub fn new(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::Precondition("ℓ must be positive".into()));
        }
        let algebra = MatrixLieAlgebra::sp(l);
        let names: Vec<&str> = algebra.names().iter().map(String::as_str).collect();
        let vars = crate::exactalg::VarSet::new(&names)?;
        let d = algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = &algebra.structure_constants()[i][j];
                let value = Poly::from_terms(
                    &vars,
                    c.iter()
                        .enumerate()
                        .map(|(k, x)| (crate::exactalg::Monomial::unit(d, k), x.clone())),
                );
                if !value.is_zero() {
                    brackets.push((names[i].to_string(), names[j].to_string(), value));
                }
            }
        }
        let poisson = PresentedPoissonAlgebra::new(&format!("lie-poisson-sp{l}"), &names, brackets, vec![])?;
        Ok(LiePoissonSpace { l, algebra, poisson })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn algebra(&self) -> &MatrixLieAlgebra {
        &self.algebra
    }

    pub fn poisson(&self) -> &PresentedPoissonAlgebra {
        &self.poisson
    }

    /// The linear function `f_a`.
    pub fn linear(&self, a: &Matrix) -> Result<Poly> {
        let c = self
            .algebra
            .coords(a)
            .ok_or_else(|| Error::DimensionMismatch("matrix is not in 𝔰𝔭(ℓ,ℝ)".into()))?;
        let vars = self.poisson.vars();
        Ok(Poly::from_terms(
            vars,
            c.into_iter().enumerate().map(|(k, x)| (crate::exactalg::Monomial::unit(vars.len(), k), x)),
        ))
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        if f.vars() != self.poisson.vars() || g.vars() != self.poisson.vars() {
            return Err(Error::DimensionMismatch("polynomial not on this 𝔰𝔭(ℓ,ℝ)".into()));
        }
        self.poisson.bracket(f, g)
    }

    /// Evaluates `f` at `x ∈ 𝔰𝔭(ℓ,ℝ)`, each coordinate being `½ tr(e x)`.
    pub fn evaluate(&self, f: &Poly, x: &Matrix) -> Result<Scalar> {
        let half = Scalar::ratio(1, 2);
        let point: Vec<Scalar> = self.algebra.basis().iter().map(|e| (e * x).trace() * &half).collect();
        f.evaluate(&point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_examples() {
        let s = LiePoissonSpace::new(1).unwrap();
        let g = s.algebra();
        let (e, f, h) = (&g.basis()[0], &g.basis()[1], &g.basis()[2]);
        let (fe, ff, fh) = (s.linear(e).unwrap(), s.linear(f).unwrap(), s.linear(h).unwrap());
        assert_eq!(s.bracket(&fh, &fe).unwrap(), fe.scale(&Scalar::int(2)));
        assert!(s.bracket(&fh, &fh).unwrap().is_zero());
        assert_eq!(s.bracket(&fe, &ff).unwrap(), fh);
    }

    #[test]
    fn dimension_mismatch() {
        let s1 = LiePoissonSpace::new(1).unwrap();
        let s2 = LiePoissonSpace::new(2).unwrap();
        let f = s2.linear(&s2.algebra().basis()[0]).unwrap();
        assert!(matches!(s1.bracket(&f, &f), Err(Error::DimensionMismatch(_))));
        assert!(s1.linear(&Matrix::identity(2)).is_err());
        assert!(LiePoissonSpace::new(0).is_err());
    }
}
