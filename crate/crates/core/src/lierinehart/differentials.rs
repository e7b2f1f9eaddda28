use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Poly, Scalar};
use crate::poisson::{PresentedPoissonAlgebra, Verdict};

/// An element `Σ aᵢ dgᵢ` of the module of formal differentials, stored in
/// normal form (one coefficient per generator).
#[derive(Clone, Debug, PartialEq)]
pub struct DiffElement {
    coeffs: Vec<Poly>,
}

impl DiffElement {
    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `d name`.
    pub fn coeff(&self, name: &str) -> Result<&Poly> {
        let i = self.coeffs.first().ok_or(Error::VariableMismatch)?.vars().index_of(name)?;
        Ok(&self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

// Sums of normal forms are normal forms, so these need no reduction.
impl std::ops::Add for &DiffElement {
    type Output = DiffElement;
    fn add(self, rhs: &DiffElement) -> DiffElement {
        DiffElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &DiffElement {
    type Output = DiffElement;
    fn sub(self, rhs: &DiffElement) -> DiffElement {
        DiffElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &DiffElement {
    type Output = DiffElement;
    fn neg(self) -> DiffElement {
        DiffElement { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for DiffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name = c.vars().name(i);
            if c.num_terms() == 1 && c.constant_term().is_one() {
                write!(f, "d{name}")?;
            } else if c.num_terms() == 1 {
                write!(f, "{c} d{name}")?;
            } else {
                write!(f, "({c}) d{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Module rewrite rule, monic at `(pos, lead)` in position-over-term order.
#[derive(Clone, Debug)]
struct ModuleRule {
    pos: usize,
    lead: Monomial,
    element: Vec<Poly>,
}

/// The Lie–Rinehart algebra `(A, D_A)` of a presented Poisson algebra.
///
/// `D_A` is the free module on the `dgᵢ` modulo `A·dR` for every relation
/// `R`. Normal forms come from module rules obtained by reducing `f·dR` for
/// the cofactors `f` of the presentation; [`LieRinehart::new`] rejects
/// a rule set that is not confluent.
#[derive(Clone, Debug)]
pub struct LieRinehart {
    alg: PresentedPoissonAlgebra,
    rules: Vec<ModuleRule>,
}

impl LieRinehart {
    pub fn new(alg: PresentedPoissonAlgebra) -> Result<Self> {
        let mut lr = LieRinehart { alg, rules: Vec::new() };
        let n = lr.alg.num_generators();
        for (r, cof) in lr.alg.differential_cofactors().to_vec() {
            let rel = &lr.alg.relations().relations()[r];
            let v: Vec<Poly> = (0..n).map(|i| cof.clone() * rel.differentiate_at(i)).collect();
            let v = lr.reduce(v);
            let Some((pos, lead, c)) = pot_lead(&v) else { continue };
            let inv = c.inv().expect("nonzero lead");
            let element = v.iter().map(|p| p.scale(&inv)).collect();
            lr.rules.push(ModuleRule { pos, lead, element });
        }
        if let Verdict::Fail { location, witness } = lr.check_confluence() {
            return Err(Error::Precondition(format!(
                "differential rules of {} are not confluent: {location} leaves {witness}",
                lr.alg.name()
            )));
        }
        Ok(lr)
    }

    pub fn algebra(&self) -> &PresentedPoissonAlgebra {
        &self.alg
    }

    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    fn reduce(&self, mut v: Vec<Poly>) -> Vec<Poly> {
        for p in v.iter_mut() {
            *p = self.alg.normal_form(p);
        }
        loop {
            let hit = (0..v.len()).find_map(|pos| {
                v[pos].terms().rev().find_map(|(m, c)| {
                    self.rules
                        .iter()
                        .find(|r| r.pos == pos && r.lead.divides(m))
                        .map(|r| (r, r.lead.quotient_of(m), -c.clone()))
                })
            });
            let Some((rule, q, c)) = hit else { return v };
            for k in rule.pos..v.len() {
                if !rule.element[k].is_zero() {
                    let t = rule.element[k].mul_term(&q, &c);
                    v[k] = self.alg.normal_form(&(&v[k] + &t));
                }
            }
        }
    }

    /// S-pairs among module rules, and between module rules and the ring
    /// relations placed at the same position, must reduce to zero; so must
    /// every `dR`.
    pub fn check_confluence(&self) -> Verdict {
        let n = self.alg.num_generators();
        for (a, ra) in self.rules.iter().enumerate() {
            for (b, rb) in self.rules.iter().enumerate().skip(a + 1) {
                if ra.pos != rb.pos {
                    continue;
                }
                let l = ra.lead.lcm(&rb.lead);
                let (qa, qb) = (ra.lead.quotient_of(&l), rb.lead.quotient_of(&l));
                let s: Vec<Poly> = (0..n)
                    .map(|k| ra.element[k].mul_term(&qa, &Scalar::one()) - rb.element[k].mul_term(&qb, &Scalar::one()))
                    .collect();
                let s = self.reduce(s);
                if let Some(w) = s.into_iter().find(|p| !p.is_zero()) {
                    return Verdict::Fail { location: format!("rules {a} and {b}"), witness: w };
                }
            }
            for ring in self.alg.relations().rules() {
                let l = ra.lead.lcm(&ring.lead);
                let qa = ra.lead.quotient_of(&l);
                let s: Vec<Poly> = ra.element.iter().map(|p| p.mul_term(&qa, &Scalar::one())).collect();
                let s = self.reduce(s);
                if let Some(w) = s.into_iter().find(|p| !p.is_zero()) {
                    return Verdict::Fail { location: format!("rule {a} and relation"), witness: w };
                }
            }
        }
        for (k, rel) in self.alg.relations().relations().iter().enumerate() {
            let v = self.reduce((0..n).map(|i| rel.differentiate_at(i)).collect());
            if let Some(w) = v.into_iter().find(|p| !p.is_zero()) {
                return Verdict::Fail { location: format!("dR{k}"), witness: w };
            }
        }
        Verdict::Pass
    }

    fn check(&self, p: &Poly) -> Result<()> {
        if p.vars() != self.alg.vars() {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    pub fn zero(&self) -> DiffElement {
        let vars = self.alg.vars();
        DiffElement { coeffs: vec![Poly::zero(vars); vars.len()] }
    }

    /// Reduces an arbitrary coefficient vector.
    pub fn element(&self, coeffs: Vec<Poly>) -> Result<DiffElement> {
        if coeffs.len() != self.alg.num_generators() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.alg.num_generators()
            )));
        }
        for c in &coeffs {
            self.check(c)?;
        }
        Ok(DiffElement { coeffs: self.reduce(coeffs) })
    }

    /// `Σ a dg` over the given (coefficient, generator) pairs.
    pub fn from_pairs(&self, pairs: &[(Poly, &str)]) -> Result<DiffElement> {
        let mut coeffs = self.zero().coeffs;
        for (a, g) in pairs {
            self.check(a)?;
            let i = self.alg.vars().index_of(g)?;
            coeffs[i] = &coeffs[i] + a;
        }
        self.element(coeffs)
    }

    /// `d g` for a generator name.
    pub fn dg(&self, name: &str) -> Result<DiffElement> {
        self.from_pairs(&[(Poly::one(self.alg.vars()), name)])
    }

    /// `du = Σ ∂u/∂gᵢ dgᵢ`.
    pub fn d(&self, u: &Poly) -> Result<DiffElement> {
        self.check(u)?;
        self.element((0..self.alg.num_generators()).map(|i| u.differentiate_at(i)).collect())
    }

    /// `a·α`.
    pub fn scale(&self, a: &Poly, alpha: &DiffElement) -> Result<DiffElement> {
        self.check(a)?;
        self.element(alpha.coeffs.iter().map(|c| a * c).collect())
    }

    /// `π♯(α)(f) = Σ aᵢ {gᵢ, f}`.
    pub fn pi_sharp(&self, alpha: &DiffElement, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        let mut out = Poly::zero(self.alg.vars());
        for (i, a) in alpha.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let g = Poly::var_at(self.alg.vars(), i);
                out = out + a * &self.alg.raw_bracket(&g, f)?;
            }
        }
        Ok(self.alg.normal_form(&out))
    }

    /// `π(α, β) = Σ aᵢ bⱼ {gᵢ, gⱼ}`.
    pub fn pi(&self, alpha: &DiffElement, beta: &DiffElement) -> Poly {
        let n = self.alg.num_generators();
        let mut out = Poly::zero(self.alg.vars());
        for i in 0..n {
            for j in 0..n {
                let t = self.alg.table_entry(i, j);
                if !t.is_zero() && !alpha.coeffs[i].is_zero() && !beta.coeffs[j].is_zero() {
                    out = out + &(&alpha.coeffs[i] * &beta.coeffs[j]) * t;
                }
            }
        }
        self.alg.normal_form(&out)
    }

    /// Bilinear extension of `[a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}`.
    pub fn lr_bracket(&self, alpha: &DiffElement, beta: &DiffElement) -> DiffElement {
        let n = self.alg.num_generators();
        let vars = self.alg.vars();
        let mut coeffs = self.zero().coeffs;
        for i in 0..n {
            let a = &alpha.coeffs[i];
            if a.is_zero() {
                continue;
            }
            let gi = Poly::var_at(vars, i);
            for j in 0..n {
                let b = &beta.coeffs[j];
                if b.is_zero() {
                    continue;
                }
                let gj = Poly::var_at(vars, j);
                let t1 = a * &self.alg.raw_bracket(&gi, b).expect("same ring");
                coeffs[j] = &coeffs[j] + &t1;
                let t2 = b * &self.alg.raw_bracket(a, &gj).expect("same ring");
                coeffs[i] = &coeffs[i] + &t2;
                let t = self.alg.table_entry(i, j);
                if !t.is_zero() {
                    let ab = a * b;
                    for (k, c) in coeffs.iter_mut().enumerate() {
                        let dk = t.differentiate_at(k);
                        if !dk.is_zero() {
                            *c = &*c + &(&ab * &dk);
                        }
                    }
                }
            }
        }
        DiffElement { coeffs: self.reduce(coeffs) }
    }
}

fn pot_lead(v: &[Poly]) -> Option<(usize, Monomial, Scalar)> {
    v.iter()
        .enumerate()
        .find_map(|(i, p)| p.leading_term().map(|(m, c)| (i, m.clone(), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semicone() -> LieRinehart {
        LieRinehart::new(PresentedPoissonAlgebra::semicone()).unwrap()
    }

    #[test]
    fn built_in_rule_sets_are_confluent() {
        let s = semicone();
        assert_eq!(s.num_rules(), 2);
        let a = LieRinehart::new(PresentedPoissonAlgebra::adjoint_quotient()).unwrap();
        assert_eq!(a.check_confluence(), Verdict::Pass);
    }

    #[test]
    fn missing_cofactor_is_rejected() {
        let mut d = PresentedPoissonAlgebra::semicone().descriptor();
        d.differential_rules.truncate(1);
        let alg = PresentedPoissonAlgebra::from_descriptor(&d).unwrap();
        assert!(matches!(LieRinehart::new(alg), Err(Error::Precondition(_))));
    }

    #[test]
    fn d_examples() {
        let s = semicone();
        let p = |t| s.algebra().parse(t).unwrap();
        assert!(s.d(&p("x^2 + y^2 - r^2")).unwrap().is_zero());
        assert!(s.d(&p("7")).unwrap().is_zero());
        let lhs = s.d(&p("x*y")).unwrap();
        let rhs = s.from_pairs(&[(p("x"), "y"), (p("y"), "x")]).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(s.dg("x").unwrap().to_string(), "dx");
    }

    #[test]
    fn pi_sharp_example() {
        let s = semicone();
        let p = |t| s.algebra().parse(t).unwrap();
        assert_eq!(s.pi_sharp(&s.dg("x").unwrap(), &p("y")).unwrap(), p("2*r"));
    }
}
