use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Monomial, Poly, Scalar, VarSet};
use crate::repcount::w_pairs;

/// Variables `z_{j,a}` for `ℓ` particles in ℂ^s, and the invariant
/// coordinates `w_jk = Σ_a z_{j,a} z_{k,a}`.
#[derive(Clone, Debug)]
pub struct FockModel {
    s: usize,
    l: usize,
    zvars: VarSet,
    wvars: VarSet,
    w_images: Vec<Poly>,
}

impl FockModel {
    pub fn new(s: usize, l: usize) -> Result<Self> {
        if s == 0 || l == 0 {
            return Err(Error::Precondition("s and ℓ must be positive".into()));
        }
        let znames: Vec<String> = (1..=l).flat_map(|j| (1..=s).map(move |a| format!("z{j}_{a}"))).collect();
        let zvars = VarSet::new(&znames)?;
        let pairs = w_pairs(l);
        let wnames: Vec<String> = pairs.iter().map(|(j, k)| format!("w{}_{}", j + 1, k + 1)).collect();
        let wvars = VarSet::new(&wnames)?;
        let mut model = FockModel { s, l, zvars, wvars, w_images: Vec::new() };
        model.w_images = pairs
            .iter()
            .map(|&(j, k)| (0..s).fold(Poly::zero(&model.zvars), |acc, a| acc + &model.z(j, a) * &model.z(k, a)))
            .collect();
        Ok(model)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.s * self.l
    }

    pub fn zvars(&self) -> &VarSet {
        &self.zvars
    }

    pub fn wvars(&self) -> &VarSet {
        &self.wvars
    }

    /// `z_{j,a}`, zero-based indices.
    pub fn z(&self, j: usize, a: usize) -> Poly {
        Poly::var_at(&self.zvars, j * self.s + a)
    }

    /// `w_jk` expanded in the z-variables.
    pub fn w_image(&self, j: usize, k: usize) -> Poly {
        let (j, k) = (j.min(k), j.max(k));
        let idx = w_pairs(self.l).iter().position(|&p| p == (j, k)).expect("valid pair");
        self.w_images[idx].clone()
    }

    /// Substitutes `w_jk = z_j · z_k`.
    pub fn to_z(&self, w: &Poly) -> Result<Poly> {
        w.substitute(&self.w_images)
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if f.vars() != &self.zvars {
            return Err(Error::VariableMismatch);
        }
        Ok(())
    }

    /// Substitutes `z_{j,·} ↦ g z_{j,·}` for every particle `j`.
    pub fn act(&self, g: &Matrix, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        if g.rows() != self.s || g.cols() != self.s {
            return Err(Error::DimensionMismatch("g must be s×s".into()));
        }
        let images: Vec<Poly> = (0..self.l)
            .flat_map(|j| (0..self.s).map(move |a| (j, a)))
            .map(|(j, a)| (0..self.s).fold(Poly::zero(&self.zvars), |acc, b| acc + self.z(j, b).scale(g.get(a, b))))
            .collect();
        f.substitute(&images)
    }

    /// Generators of a Zariski-dense subgroup of O(s): adjacent
    /// transpositions, one sign change, and the rotation by (3/5, 4/5).
    pub fn orthogonal_generators(&self) -> Vec<Matrix> {
        let s = self.s;
        let mut gens = Vec::new();
        for a in 0..s.saturating_sub(1) {
            gens.push(Matrix::from_fn(s, s, |r, c| {
                let r2 = if r == a { a + 1 } else if r == a + 1 { a } else { r };
                if r2 == c { Scalar::one() } else { Scalar::zero() }
            }));
        }
        gens.push(Matrix::from_fn(s, s, |r, c| match (r == c, r) {
            (true, 0) => Scalar::int(-1),
            (true, _) => Scalar::one(),
            _ => Scalar::zero(),
        }));
        if s >= 2 {
            let mut rot = Matrix::identity(s);
            rot.set(0, 0, Scalar::ratio(3, 5));
            rot.set(0, 1, Scalar::ratio(4, 5));
            rot.set(1, 0, Scalar::ratio(-4, 5));
            rot.set(1, 1, Scalar::ratio(3, 5));
            gens.push(rot);
        }
        gens
    }

    pub fn is_invariant(&self, f: &Poly) -> Result<bool> {
        for g in self.orthogonal_generators() {
            if self.act(&g, f)? != *f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `D_a f = Σ_{j,k} a_jk Σ_α z_{k,α} ∂f/∂z_{j,α}`.
    pub fn derivation(&self, a: &Matrix, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        if a.rows() != self.l || a.cols() != self.l {
            return Err(Error::DimensionMismatch("a must be ℓ×ℓ".into()));
        }
        let mut out = Poly::zero(&self.zvars);
        for j in 0..self.l {
            for al in 0..self.s {
                let df = f.differentiate_at(j * self.s + al);
                if df.is_zero() {
                    continue;
                }
                for k in 0..self.l {
                    let c = a.get(j, k);
                    if !c.is_zero() {
                        out = out + (&df * &self.z(k, al)).scale(c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Quantized `a ∈ 𝔲(ℓ)`: `â = −i·D_a`, so `[â, b̂] = i·[a,b]^` and
    /// `a = i·Id` gives the Euler operator. No ordering constant.
    pub fn quantize_u(&self, a: &Matrix, f: &Poly) -> Result<Poly> {
        if !a.is_anti_hermitian() {
            return Err(Error::Precondition("a must be anti-Hermitian".into()));
        }
        Ok(self.derivation(a, f)?.scale(&-Scalar::i()))
    }

    /// `Σ z ∂/∂z`.
    pub fn euler(&self, f: &Poly) -> Result<Poly> {
        self.quantize_u(&Matrix::identity(self.l).scale(&Scalar::i()), f)
    }

    /// Restriction to the level-`s′` model, `w_jk := t_j · t_k` with
    /// `t_j ∈ ℂ^{s′}`; on z-polynomials this drops the coordinates `a > s′`.
    pub fn restrict(&self, f: &Poly, s_prime: usize) -> Result<(FockModel, Poly)> {
        self.check(f)?;
        if s_prime == 0 || s_prime >= self.s {
            return Err(Error::Precondition(format!("need 1 ≤ s′ < s = {}, got s′ = {s_prime}", self.s)));
        }
        let target = FockModel::new(s_prime, self.l)?;
        let images: Vec<Poly> = (0..self.l)
            .flat_map(|j| (0..self.s).map(move |a| (j, a)))
            .map(|(j, a)| if a < s_prime { target.z(j, a) } else { Poly::zero(&target.zvars) })
            .collect();
        let g = f.substitute(&images)?;
        Ok((target, g))
    }
}

/// Sparse coefficient row of a polynomial over a shared monomial index.
pub(crate) fn coefficient_row(p: &Poly, index: &mut BTreeMap<Monomial, usize>) -> BTreeMap<usize, Scalar> {
    p.terms()
        .map(|(m, c)| {
            let n = index.len();
            (*index.entry(m.clone()).or_insert(n), c.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        let m = FockModel::new(1, 1).unwrap();
        let z = m.z(0, 0);
        assert_eq!(m.euler(&(&z * &z)).unwrap(), (&z * &z).scale(&Scalar::int(2)));
        assert!(m.euler(&Poly::one(m.zvars())).unwrap().is_zero());
        assert!(m.quantize_u(&Matrix::identity(1), &z).is_err());
    }

    #[test]
    fn w_images_are_invariant() {
        let m = FockModel::new(2, 2).unwrap();
        for (j, k) in w_pairs(2) {
            assert!(m.is_invariant(&m.w_image(j, k)).unwrap());
        }
        assert!(!m.is_invariant(&m.z(0, 0)).unwrap());
    }

    #[test]
    fn restriction_errors() {
        let m = FockModel::new(2, 2).unwrap();
        let f = m.w_image(0, 1);
        assert!(m.restrict(&f, 2).is_err());
        assert!(m.restrict(&f, 0).is_err());
        let (t, g) = m.restrict(&f, 1).unwrap();
        assert_eq!(g, &t.z(0, 0) * &t.z(1, 0));
    }
}
