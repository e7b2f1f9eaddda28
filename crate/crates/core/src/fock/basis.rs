use std::collections::BTreeMap;

use num_traits::Signed;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::exactalg::{independent_rows, leading_principal_minors, monomials_of_degree, Matrix, Poly, Scalar};
use crate::repcount::w_pairs;

use super::inner::bargmann_inner;
use super::model::{coefficient_row, FockModel};

/// A basis of the degree-`2k` O(s)-invariant polynomials in `ℓ` particles,
/// each element also recorded as a degree-`k` polynomial in the `w_jk`.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    model: FockModel,
    k: u32,
    elements: Vec<Poly>,
    w_repr: Vec<Poly>,
}

impl InvariantBasis {
    pub fn model(&self) -> &FockModel {
        &self.model
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn w_repr(&self) -> &[Poly] {
        &self.w_repr
    }
}

/// [`invariant_basis_with`] under the default bounds.
pub fn invariant_basis(s: usize, l: usize, k: u32) -> Result<InvariantBasis> {
    invariant_basis_with(s, l, k, &Bounds::default())
}

/// Greedy independent subset of the degree-`k` w-monomials (largest first)
/// after substituting `w_jk = z_j·z_k`.
pub fn invariant_basis_with(s: usize, l: usize, k: u32, bounds: &Bounds) -> Result<InvariantBasis> {
    bounds.check(s, l, k as usize)?;
    let model = FockModel::new(s, l)?;
    let pairs = w_pairs(l);
    let monomials = monomials_of_degree(pairs.len(), k);
    // Monomials with different particle multidegree have disjoint z-supports.
    let mut blocks: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (idx, m) in monomials.iter().enumerate() {
        let mut deg = vec![0u32; l];
        for (e, &(a, b)) in m.exps().iter().zip(&pairs) {
            deg[a] += e;
            deg[b] += e;
        }
        blocks.entry(deg).or_default().push(idx);
    }
    let w_monos: Vec<Poly> =
        monomials.iter().map(|m| Poly::term(model.wvars(), m.clone(), Scalar::one())).collect();
    let z_images: Vec<Poly> = w_monos.iter().map(|w| model.to_z(w)).collect::<Result<_>>()?;
    let mut chosen = Vec::new();
    for members in blocks.values() {
        let mut index = BTreeMap::new();
        let rows: Vec<_> = members.iter().map(|&i| coefficient_row(&z_images[i], &mut index)).collect();
        chosen.extend(independent_rows(&rows).into_iter().map(|r| members[r]));
    }
    chosen.sort_unstable();
    Ok(InvariantBasis {
        k,
        elements: chosen.iter().map(|&i| z_images[i].clone()).collect(),
        w_repr: chosen.iter().map(|&i| w_monos[i].clone()).collect(),
        model,
    })
}

/// Exact Gram matrix `⟨bᵢ, bⱼ⟩`.
pub fn gram(basis: &InvariantBasis) -> Matrix {
    let e = &basis.elements;
    Matrix::from_fn(e.len(), e.len(), |i, j| bargmann_inner(&e[i], &e[j]).expect("same model"))
}

/// All leading principal minors real and positive.
pub fn is_positive_definite(m: &Matrix) -> bool {
    if !m.is_square() || m.conj_transpose() != *m {
        return false;
    }
    let minors = leading_principal_minors(m);
    minors.len() == m.rows() && minors.iter().all(|d| d.as_real().is_some_and(Signed::is_positive))
}

/// Number of linearly independent polynomials among `ps`.
pub fn span_dim(ps: &[Poly]) -> usize {
    let mut index = BTreeMap::new();
    let rows: Vec<_> = ps.iter().map(|p| coefficient_row(p, &mut index)).collect();
    independent_rows(&rows).len()
}

/// Restricts basis element `idx` from level `s` to level `s′ < s`.
pub fn costratified_restrict(basis: &InvariantBasis, idx: usize, s_prime: usize) -> Result<Poly> {
    let f = basis
        .elements
        .get(idx)
        .ok_or_else(|| Error::Precondition(format!("basis has {} elements", basis.len())))?;
    Ok(basis.model.restrict(f, s_prime)?.1)
}

/// `dim − rank` of the restriction from level `s` to `s′`.
pub fn restriction_kernel_dim(basis: &InvariantBasis, s_prime: usize) -> Result<usize> {
    let images = (0..basis.len()).map(|i| costratified_restrict(basis, i, s_prime)).collect::<Result<Vec<_>>>()?;
    Ok(basis.len() - span_dim(&images))
}
