use crate::error::{Error, Result};

use super::poly::{Monomial, Poly, VarSet};
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lead: Monomial,
    pub replacement: Poly,
}

impl Rule {
    /// `lead - replacement`, the relation the rule encodes.
    pub fn relation(&self) -> Poly {
        let vars = self.replacement.vars();
        &Poly::term(vars, self.lead.clone(), Scalar::one()) - &self.replacement
    }
}

/// Oriented relations `lead -> replacement`, each strictly decreasing in the
/// graded-lex order, so rewriting always terminates.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteSystem {
    vars: VarSet,
    rules: Vec<Rule>,
    relations: Vec<Poly>,
}

impl RewriteSystem {
    pub fn empty(vars: &VarSet) -> Self {
        RewriteSystem { vars: vars.clone(), rules: Vec::new(), relations: Vec::new() }
    }

    pub fn new(vars: &VarSet, rules: Vec<(Monomial, Poly)>) -> Result<Self> {
        let mut out = RewriteSystem::empty(vars);
        for (lead, replacement) in rules {
            if replacement.vars() != vars || lead.exps().len() != vars.len() {
                return Err(Error::VariableMismatch);
            }
            if let Some((m, _)) = replacement.leading_term() {
                if *m >= lead {
                    let one = Scalar::one();
                    return Err(Error::NonDecreasingRule {
                        lead: Poly::term(vars, lead, one.clone()).to_string(),
                        term: Poly::term(vars, m.clone(), one).to_string(),
                    });
                }
            }
            let rule = Rule { lead, replacement };
            out.relations.push(rule.relation());
            out.rules.push(rule);
        }
        Ok(out)
    }

    /// Orients each relation by its leading monomial. The relations are kept
    /// verbatim for Poisson-ideal checks.
    pub fn from_relations(vars: &VarSet, relations: Vec<Poly>) -> Result<Self> {
        let mut rules = Vec::new();
        for r in &relations {
            if r.vars() != vars {
                return Err(Error::VariableMismatch);
            }
            let (lead, lc) = match r.leading_term() {
                Some((m, c)) => (m.clone(), c.clone()),
                None => return Err(Error::Precondition("zero relation".into())),
            };
            let monic = r.scale(&lc.inv()?);
            let replacement = &Poly::term(vars, lead.clone(), Scalar::one()) - &monic;
            rules.push((lead, replacement));
        }
        let mut out = RewriteSystem::new(vars, rules)?;
        out.relations = relations;
        Ok(out)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn reducer(&self, m: &Monomial) -> Option<&Rule> {
        self.rules.iter().find(|r| r.lead.divides(m))
    }

    /// The rewrite-irreducible representative of `p`.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        assert!(p.vars() == &self.vars, "polynomial outside the rewrite system's ring");
        if self.rules.is_empty() {
            return p.clone();
        }
        let mut rem = p.clone();
        let mut done = Poly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let (m, c) = (m.clone(), c.clone());
            match self.reducer(&m) {
                Some(rule) => {
                    let q = rule.lead.quotient_of(&m);
                    rem.add_term(m, &-&c);
                    rem = rem + rule.replacement.mul_term(&q, &c);
                }
                None => {
                    rem.add_term(m.clone(), &-&c);
                    done.add_term(m, &c);
                }
            }
        }
        done
    }

    pub fn is_normal(&self, p: &Poly) -> bool {
        p.terms().all(|(m, _)| self.reducer(m).is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::text::parse_poly;

    fn semicone_rules() -> (VarSet, RewriteSystem) {
        let v = VarSet::new(&["r", "x", "y"]).unwrap();
        let rel = parse_poly(&v, "x^2 + y^2 - r^2").unwrap();
        let rs = RewriteSystem::from_relations(&v, vec![rel]).unwrap();
        (v, rs)
    }

    #[test]
    fn orientation_picks_r_squared() {
        let (v, rs) = semicone_rules();
        assert_eq!(rs.rules()[0].lead, Monomial::new(vec![2, 0, 0]));
        assert_eq!(rs.rules()[0].replacement, parse_poly(&v, "x^2 + y^2").unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let (v, rs) = semicone_rules();
        let p = |s| parse_poly(&v, s).unwrap();
        assert_eq!(rs.normal_form(&p("r^2")), p("x^2 + y^2"));
        assert!(rs.normal_form(&(p("x^2 + y^2 - r^2") * p("x + 3*y"))).is_zero());
        assert_eq!(rs.normal_form(&p("x + y")), p("x + y"));
        assert_eq!(rs.normal_form(&p("r^3")), p("r*x^2 + r*y^2"));
    }

    #[test]
    fn increasing_rule_rejected() {
        let v = VarSet::new(&["x", "y", "r"]).unwrap();
        let r2 = Monomial::new(vec![0, 0, 2]);
        let err = RewriteSystem::new(&v, vec![(r2, parse_poly(&v, "x^2 + y^2").unwrap())]);
        assert!(matches!(err, Err(Error::NonDecreasingRule { .. })));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let (v, rs) = semicone_rules();
        let p = parse_poly(&v, "r^5 - 3*r^2*x + y^4*r^3 - 1").unwrap();
        let nf = rs.normal_form(&p);
        assert!(rs.is_normal(&nf));
        assert_eq!(rs.normal_form(&nf), nf);
    }
}
