use crate::error::{Error, Result};
use crate::exactalg::{parse_poly, Poly, RewriteSystem, Scalar, VarSet};

use super::descriptor::{AlgebraDescriptor, BracketEntry, DifferentialRule, ADJOINT_QUOTIENT_JSON, SEMICONE_JSON};

/// Outcome of a symbolic identity check; failures carry the first nonzero
/// residual found.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Pass,
    Fail { location: String, witness: Poly },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// A Poisson algebra given by generators, a bracket table on generator
/// pairs, and polynomial relations.
#[derive(Clone, Debug)]
pub struct PresentedPoissonAlgebra {
    name: String,
    vars: VarSet,
    table: Vec<Vec<Poly>>,
    relations: RewriteSystem,
    differential_cofactors: Vec<(usize, Poly)>,
}

impl PresentedPoissonAlgebra {
    /// Builds the algebra. The table is completed by antisymmetry; entries
    /// given twice must be antisymmetric and diagonal entries must vanish.
    pub fn new(
        name: &str,
        generators: &[&str],
        brackets: Vec<(String, String, Poly)>,
        relations: Vec<Poly>,
    ) -> Result<Self> {
        let vars = VarSet::new(generators)?;
        let n = vars.len();
        let mut table: Vec<Vec<Option<Poly>>> = vec![vec![None; n]; n];
        for (a, b, value) in brackets {
            if value.vars() != &vars {
                return Err(Error::VariableMismatch);
            }
            let (i, j) = (vars.index_of(&a)?, vars.index_of(&b)?);
            if i == j {
                if !value.is_zero() {
                    return Err(Error::Descriptor(format!("nonzero diagonal bracket {{{a},{a}}}")));
                }
                continue;
            }
            for (slot, v) in [((i, j), value.clone()), ((j, i), -&value)] {
                match &table[slot.0][slot.1] {
                    Some(existing) if *existing != v => {
                        return Err(Error::Descriptor(format!("bracket {{{a},{b}}} is not antisymmetric")));
                    }
                    _ => table[slot.0][slot.1] = Some(v),
                }
            }
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.unwrap_or_else(|| Poly::zero(&vars))).collect())
            .collect();
        let relations = RewriteSystem::from_relations(&vars, relations)?;
        let differential_cofactors = (0..relations.relations().len()).map(|r| (r, Poly::one(&vars))).collect();
        Ok(PresentedPoissonAlgebra { name: name.to_string(), vars, table, relations, differential_cofactors })
    }

    pub fn from_descriptor(d: &AlgebraDescriptor) -> Result<Self> {
        let gens: Vec<&str> = d.generators.iter().map(String::as_str).collect();
        let vars = VarSet::new(&gens)?;
        let brackets = d
            .brackets
            .iter()
            .map(|e| Ok((e.a.clone(), e.b.clone(), parse_poly(&vars, &e.value)?)))
            .collect::<Result<Vec<_>>>()?;
        let relations = d.relations.iter().map(|r| parse_poly(&vars, r)).collect::<Result<Vec<_>>>()?;
        let mut alg = Self::new(&d.name, &gens, brackets, relations)?;
        if !d.differential_rules.is_empty() {
            let mut cofs = Vec::new();
            for rule in &d.differential_rules {
                if rule.relation >= d.relations.len() {
                    return Err(Error::Descriptor(format!("differential rule refers to relation {}", rule.relation)));
                }
                cofs.push((rule.relation, parse_poly(&alg.vars, &rule.cofactor)?));
            }
            alg.differential_cofactors = cofs;
        }
        Ok(alg)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let d: AlgebraDescriptor = serde_json::from_str(s).map_err(|e| Error::Descriptor(e.to_string()))?;
        Self::from_descriptor(&d)
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        let n = self.vars.len();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_zero() {
                    brackets.push(BracketEntry {
                        a: self.vars.name(i).to_string(),
                        b: self.vars.name(j).to_string(),
                        value: self.table[i][j].to_string(),
                    });
                }
            }
        }
        AlgebraDescriptor {
            name: self.name.clone(),
            generators: self.vars.names().to_vec(),
            brackets,
            relations: self.relations.relations().iter().map(Poly::to_string).collect(),
            differential_rules: self
                .differential_cofactors
                .iter()
                .map(|(r, c)| DifferentialRule { relation: *r, cofactor: c.to_string() })
                .collect(),
        }
    }

    /// The exotic plane with one vertex: `x² + y² = r²`.
    pub fn semicone() -> Self {
        Self::from_json(SEMICONE_JSON).expect("built-in descriptor")
    }

    /// The SL(2,ℂ) adjoint quotient in the variables `X`, `Y`, `τ`.
    pub fn adjoint_quotient() -> Self {
        Self::from_json(ADJOINT_QUOTIENT_JSON).expect("built-in descriptor")
    }

    /// Canonical brackets `{q_i, p_i} = 1` on ℝ²ⁿ, generators `q1, p1, …`.
    pub fn flat(n: usize) -> Self {
        let names: Vec<String> = (1..=n).flat_map(|i| [format!("q{i}"), format!("p{i}")]).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let vars = VarSet::new(&refs).expect("valid names");
        let brackets = (1..=n)
            .map(|i| (format!("q{i}"), format!("p{i}"), Poly::one(&vars)))
            .collect();
        Self::new(&format!("flat-{}", 2 * n), &refs, brackets, vec![]).expect("valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generator(&self, name: &str) -> Result<Poly> {
        Poly::var(&self.vars, name)
    }

    pub fn num_generators(&self) -> usize {
        self.vars.len()
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &Poly {
        &self.table[i][j]
    }

    pub fn relations(&self) -> &RewriteSystem {
        &self.relations
    }

    pub fn differential_cofactors(&self) -> &[(usize, Poly)] {
        &self.differential_cofactors
    }

    /// Copy with one table entry (and its mirror) replaced.
    pub fn with_bracket(&self, a: &str, b: &str, value: Poly) -> Result<Self> {
        let (i, j) = (self.vars.index_of(a)?, self.vars.index_of(b)?);
        if i == j || value.vars() != &self.vars {
            return Err(Error::Precondition("off-diagonal entry in the algebra's ring required".into()));
        }
        let mut out = self.clone();
        out.table[j][i] = -&value;
        out.table[i][j] = value;
        Ok(out)
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        parse_poly(&self.vars, s)
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.relations.normal_form(p)
    }

    fn check(&self, p: &Poly) -> Result<()> {
        if p.vars() != &self.vars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    /// Bi-derivation extension of the table, not reduced.
    pub fn raw_bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.check(f)?;
        self.check(g)?;
        let n = self.vars.len();
        let df: Vec<Poly> = (0..n).map(|i| f.differentiate_at(i)).collect();
        let dg: Vec<Poly> = (0..n).map(|j| g.differentiate_at(j)).collect();
        let mut out = Poly::zero(&self.vars);
        for i in 0..n {
            if df[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || dg[j].is_zero() || self.table[i][j].is_zero() {
                    continue;
                }
                out = out + &(&df[i] * &dg[j]) * &self.table[i][j];
            }
        }
        Ok(out)
    }

    /// `{f, g}` reduced to normal form.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        Ok(self.normal_form(&self.raw_bracket(f, g)?))
    }

    /// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`, reduced.
    pub fn jacobiator(&self, f: &Poly, g: &Poly, h: &Poly) -> Result<Poly> {
        let a = self.bracket(f, &self.bracket(g, h)?)?;
        let b = self.bracket(g, &self.bracket(h, f)?)?;
        let c = self.bracket(h, &self.bracket(f, g)?)?;
        Ok(self.normal_form(&(a + b + c)))
    }

    /// Checks `{g_i, R} ≡ 0` modulo the relations for every generator and relation.
    pub fn is_poisson_ideal(&self) -> Verdict {
        for (k, rel) in self.relations.relations().iter().enumerate() {
            for i in 0..self.vars.len() {
                let g = Poly::var_at(&self.vars, i);
                let w = self.bracket(&g, rel).expect("same ring");
                if !w.is_zero() {
                    return Verdict::Fail {
                        location: format!("{{{}, R{}}}", self.vars.name(i), k),
                        witness: w,
                    };
                }
            }
        }
        Verdict::Pass
    }

    /// Jacobi identity on all generator triples.
    pub fn check_jacobi(&self) -> Verdict {
        let n = self.vars.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (Poly::var_at(&self.vars, i), Poly::var_at(&self.vars, j), Poly::var_at(&self.vars, k));
                    let w = self.jacobiator(&a, &b, &c).expect("same ring");
                    if !w.is_zero() {
                        return Verdict::Fail {
                            location: format!("({}, {}, {})", self.vars.name(i), self.vars.name(j), self.vars.name(k)),
                            witness: w,
                        };
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Evaluates the bracket table at a point.
    pub fn table_at(&self, point: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        self.table
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(point)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semicone_bracket_examples() {
        let a = PresentedPoissonAlgebra::semicone();
        let p = |s| a.parse(s).unwrap();
        assert_eq!(a.bracket(&p("x"), &p("y")).unwrap(), p("2*r"));
        assert!(a.bracket(&p("x"), &p("x")).unwrap().is_zero());
        assert!(a.bracket(&p("x"), &p("x^2 + y^2 - r^2")).unwrap().is_zero());
        assert_eq!(a.bracket(&p("y"), &p("r")).unwrap(), p("-2*x"));
    }

    #[test]
    fn semicone_jacobi_example() {
        let a = PresentedPoissonAlgebra::semicone();
        let p = |s| a.parse(s).unwrap();
        assert_eq!(a.bracket(&p("y"), &p("r")).unwrap(), p("-2*x"));
        assert!(a.bracket(&p("x"), &p("-2*x")).unwrap().is_zero());
        assert!(a.jacobiator(&p("x"), &p("y"), &p("r")).unwrap().is_zero());
        assert!(a.jacobiator(&p("x"), &p("x"), &p("r*y")).unwrap().is_zero());
    }

    #[test]
    fn built_in_algebras_are_valid() {
        for a in [PresentedPoissonAlgebra::semicone(), PresentedPoissonAlgebra::adjoint_quotient()] {
            assert_eq!(a.is_poisson_ideal(), Verdict::Pass, "{}", a.name());
            assert_eq!(a.check_jacobi(), Verdict::Pass, "{}", a.name());
        }
        assert_eq!(PresentedPoissonAlgebra::flat(2).check_jacobi(), Verdict::Pass);
    }

    #[test]
    fn perturbed_semicone_fails_with_witness() {
        let a = PresentedPoissonAlgebra::semicone();
        let bad = a.with_bracket("x", "y", a.parse("2*r + 1").unwrap()).unwrap();
        match bad.is_poisson_ideal() {
            Verdict::Fail { witness, location } => {
                assert_eq!(location, "{x, R0}");
                assert_eq!(witness, a.parse("2*y").unwrap());
            }
            Verdict::Pass => panic!("perturbation not detected"),
        }
    }

    #[test]
    fn adjoint_tau_brackets_are_forced() {
        // {X,τ} and {Y,τ} as locked regression constants
        let a = PresentedPoissonAlgebra::adjoint_quotient();
        let p = |s| a.parse(s).unwrap();
        assert_eq!(a.bracket(&p("X"), &p("tau")).unwrap(), p("2*Y - 2*Y*tau"));
        assert_eq!(a.bracket(&p("Y"), &p("tau")).unwrap(), p("2*X*tau"));
        // flipping either sign breaks the ideal property
        let bad = a.with_bracket("Y", "tau", p("-2*X*tau")).unwrap();
        assert!(!bad.is_poisson_ideal().passed());
    }

    #[test]
    fn descriptor_round_trip() {
        for a in [PresentedPoissonAlgebra::semicone(), PresentedPoissonAlgebra::adjoint_quotient()] {
            let d = a.descriptor();
            let b = PresentedPoissonAlgebra::from_descriptor(&d).unwrap();
            assert_eq!(b.descriptor(), d);
        }
    }

    #[test]
    fn malformed_descriptors() {
        let gens = ["a", "b"];
        let vars = VarSet::new(&gens).unwrap();
        let one = Poly::one(&vars);
        let err = PresentedPoissonAlgebra::new(
            "bad",
            &gens,
            vec![("a".into(), "b".into(), one.clone()), ("b".into(), "a".into(), one.clone())],
            vec![],
        );
        assert!(matches!(err, Err(Error::Descriptor(_))));
        let err = PresentedPoissonAlgebra::new("bad", &gens, vec![("a".into(), "a".into(), one)], vec![]);
        assert!(matches!(err, Err(Error::Descriptor(_))));
        assert!(PresentedPoissonAlgebra::from_json("{").is_err());
    }

    #[test]
    fn foreign_polynomials_rejected() {
        let a = PresentedPoissonAlgebra::semicone();
        let other = PresentedPoissonAlgebra::flat(1);
        let q = other.generator("q1").unwrap();
        assert_eq!(a.bracket(&q, &q), Err(Error::VariableMismatch));
    }
}
