//! Matrix Lie algebras 𝔰𝔬(s) and 𝔰𝔭(ℓ,ℝ) with explicit bases, structure
//! constants and the Killing form.

use crate::exactalg::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Antisymmetric `s×s` matrices.
    Orthogonal { s: usize },
    /// `2ℓ×2ℓ` matrices `[[A, B], [C, -Aᵀ]]` with `B`, `C` symmetric.
    Symplectic { l: usize },
}

#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    kind: Kind,
    names: Vec<String>,
    basis: Vec<Matrix>,
    /// `constants[i][j][k]`: coefficient of basis `k` in `[e_i, e_j]`.
    constants: Vec<Vec<Vec<Scalar>>>,
}

fn unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Scalar::one());
    m
}

impl MatrixLieAlgebra {
    /// 𝔰𝔬(s) with basis `L_ij = e_ij - e_ji`, `i < j`.
    pub fn so(s: usize) -> Self {
        let mut names = Vec::new();
        let mut basis = Vec::new();
        for i in 0..s {
            for j in i + 1..s {
                names.push(format!("L{}_{}", i + 1, j + 1));
                basis.push(&unit(s, i, j) - &unit(s, j, i));
            }
        }
        Self::build(Kind::Orthogonal { s }, names, basis)
    }

    /// 𝔰𝔭(ℓ,ℝ) with the block basis: `E_ij` (upper symmetric block),
    /// `F_ij` (lower symmetric block), `H_ij` (the 𝔤𝔩(ℓ) block).
    /// For ℓ = 1 these are the usual `E`, `F`, `H` of 𝔰𝔩(2,ℝ).
    pub fn sp(l: usize) -> Self {
        let n = 2 * l;
        let mut names = Vec::new();
        let mut basis = Vec::new();
        for i in 0..l {
            for j in i..l {
                names.push(format!("E{}_{}", i + 1, j + 1));
                let mut m = unit(n, i, l + j);
                if i != j {
                    m = &m + &unit(n, j, l + i);
                }
                basis.push(m);
            }
        }
        for i in 0..l {
            for j in i..l {
                names.push(format!("F{}_{}", i + 1, j + 1));
                let mut m = unit(n, l + i, j);
                if i != j {
                    m = &m + &unit(n, l + j, i);
                }
                basis.push(m);
            }
        }
        for i in 0..l {
            for j in 0..l {
                names.push(format!("H{}_{}", i + 1, j + 1));
                basis.push(&unit(n, i, j) - &unit(n, l + j, l + i));
            }
        }
        Self::build(Kind::Symplectic { l }, names, basis)
    }

    fn build(kind: Kind, names: Vec<String>, basis: Vec<Matrix>) -> Self {
        let mut alg = MatrixLieAlgebra { kind, names, basis, constants: Vec::new() };
        let d = alg.dim();
        let mut constants = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let c = alg.basis[i].commutator(&alg.basis[j]);
                constants[i][j] = alg.coords(&c).expect("algebra closed under commutators");
            }
        }
        alg.constants = constants;
        alg
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        match self.kind {
            Kind::Orthogonal { s } => s,
            Kind::Symplectic { l } => 2 * l,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.constants
    }

    /// Standard symplectic form `J = [[0, I], [-I, 0]]` (symplectic kind only).
    pub fn symplectic_form(l: usize) -> Matrix {
        let mut j = Matrix::zeros(2 * l, 2 * l);
        for i in 0..l {
            j.set(i, l + i, Scalar::one());
            j.set(l + i, i, Scalar::int(-1));
        }
        j
    }

    /// Membership test by the defining equations.
    pub fn contains(&self, m: &Matrix) -> bool {
        if m.rows() != self.matrix_size() || m.cols() != self.matrix_size() {
            return false;
        }
        match self.kind {
            Kind::Orthogonal { .. } => m.is_antisymmetric(),
            Kind::Symplectic { l } => {
                let j = Self::symplectic_form(l);
                (&(&m.transpose() * &j) + &(&j * m)).is_zero()
            }
        }
    }

    /// Coordinates of `m` in the basis, or `None` if `m` is not in the algebra.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        if !self.contains(m) {
            return None;
        }
        let c: Vec<Scalar> = match self.kind {
            Kind::Orthogonal { s } => {
                let mut c = Vec::new();
                for i in 0..s {
                    for j in i + 1..s {
                        c.push(m.get(i, j).clone());
                    }
                }
                c
            }
            Kind::Symplectic { l } => {
                let mut c = Vec::new();
                for i in 0..l {
                    for j in i..l {
                        c.push(m.get(i, l + j).clone());
                    }
                }
                for i in 0..l {
                    for j in i..l {
                        c.push(m.get(l + i, j).clone());
                    }
                }
                for i in 0..l {
                    for j in 0..l {
                        c.push(m.get(i, j).clone());
                    }
                }
                c
            }
        };
        debug_assert_eq!(&self.from_coords(&c), m);
        Some(c)
    }

    pub fn from_coords(&self, c: &[Scalar]) -> Matrix {
        let n = self.matrix_size();
        let mut out = Matrix::zeros(n, n);
        for (x, b) in c.iter().zip(&self.basis) {
            if !x.is_zero() {
                out = &out + &b.scale(x);
            }
        }
        out
    }

    /// Matrix of `ad_a` in the basis, assembled from structure constants.
    pub fn ad(&self, a: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = &self.constants[i][j][k];
                    if !c.is_zero() {
                        let v = out.get(k, j) + &(ai * c);
                        out.set(k, j, v);
                    }
                }
            }
        }
        out
    }

    /// Killing form `tr(ad_a ∘ ad_b)` on coordinate vectors.
    pub fn killing(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        (&self.ad(a) * &self.ad(b)).trace()
    }

    pub fn killing_matrices(&self, a: &Matrix, b: &Matrix) -> Option<Scalar> {
        Some(self.killing(&self.coords(a)?, &self.coords(b)?))
    }
}
