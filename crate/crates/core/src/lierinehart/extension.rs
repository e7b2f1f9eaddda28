use crate::error::Result;
use crate::exactalg::Poly;

use super::differentials::{DiffElement, LieRinehart};

/// An element `(a, α)` of the central extension `L̄ = A ⊕ D_A`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtElement {
    pub scalar: Poly,
    pub diff: DiffElement,
}

impl ExtElement {
    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.diff.is_zero()
    }
}

impl LieRinehart {
    /// `(a, α)` with `a` reduced.
    pub fn ext(&self, a: &Poly, alpha: DiffElement) -> ExtElement {
        ExtElement { scalar: self.algebra().normal_form(a), diff: alpha }
    }

    /// The generating pair `(a, du)`.
    pub fn ext_pair(&self, a: &Poly, u: &Poly) -> Result<ExtElement> {
        Ok(self.ext(a, self.d(u)?))
    }

    /// `[(a,α),(b,β)] = (π♯(α)b − π♯(β)a − π(α,β), [α,β])`, which on pairs
    /// `(a,du), (b,dv)` is `({u,b} + {a,v} − {u,v}, d{u,v})`.
    pub fn ext_bracket(&self, x: &ExtElement, y: &ExtElement) -> Result<ExtElement> {
        let s = self.pi_sharp(&x.diff, &y.scalar)? - self.pi_sharp(&y.diff, &x.scalar)? - self.pi(&x.diff, &y.diff);
        Ok(ExtElement { scalar: self.algebra().normal_form(&s), diff: self.lr_bracket(&x.diff, &y.diff) })
    }
}

#[cfg(test)]
mod tests {
    use crate::poisson::PresentedPoissonAlgebra;

    use super::*;

    #[test]
    fn flat_examples() {
        let lr = LieRinehart::new(PresentedPoissonAlgebra::flat(1)).unwrap();
        let p = |t| lr.algebra().parse(t).unwrap();
        let zero = p("0");
        let e = lr.ext_bracket(&lr.ext_pair(&zero, &p("q1")).unwrap(), &lr.ext_pair(&zero, &p("p1")).unwrap()).unwrap();
        assert_eq!(e.scalar, p("-1"));
        assert!(e.diff.is_zero());
        let e = lr.ext_bracket(&lr.ext(&p("q1^2"), lr.zero()), &lr.ext(&p("p1 + 3"), lr.zero())).unwrap();
        assert!(e.is_zero());
        let u = lr.ext_pair(&p("q1*p1"), &p("q1*p1")).unwrap();
        assert!(lr.ext_bracket(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn pair_formula_matches_general_form() {
        let lr = LieRinehart::new(PresentedPoissonAlgebra::semicone()).unwrap();
        let alg = lr.algebra();
        let p = |t| alg.parse(t).unwrap();
        let (a, u, b, v) = (p("x*y"), p("r^2 + y"), p("r - 2"), p("x*r"));
        let e = lr.ext_bracket(&lr.ext_pair(&a, &u).unwrap(), &lr.ext_pair(&b, &v).unwrap()).unwrap();
        let uv = alg.bracket(&u, &v).unwrap();
        let scalar = alg.bracket(&u, &b).unwrap() + alg.bracket(&a, &v).unwrap() - uv.clone();
        assert_eq!(e.scalar, alg.normal_form(&scalar));
        assert_eq!(e.diff, lr.d(&uv).unwrap());
    }
}
