//! Highest-weight bookkeeping for the quantum spaces over the rank strata,
//! and a brute-force evaluation-rank oracle for the same dimensions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{integer_rank, monomials_of_degree};
use crate::sample;

/// `δ₁^α δ₂^β ⋯ δ_s^γ`; `exps[j]` is the exponent of `δ_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaMonomial {
    exps: Vec<u32>,
}

impl DeltaMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        DeltaMonomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// `α + 2β + ⋯ + sγ`.
    pub fn level(&self) -> u32 {
        self.exps.iter().enumerate().map(|(j, e)| (j as u32 + 1) * e).sum()
    }

    /// Whether `δ_s` occurs.
    pub fn involves_top(&self) -> bool {
        self.exps.last().is_some_and(|&e| e > 0)
    }

    /// Highest weight for U(ℓ); `δ_j` has weight `(2,…,2,0,…,0)` with `j` twos.
    pub fn weight(&self, l: usize) -> Result<WeightTuple> {
        if self.exps.len() > l {
            return Err(Error::Precondition(format!("s = {} exceeds ℓ = {l}", self.exps.len())));
        }
        let mut w = vec![0u32; l];
        for (j, e) in self.exps.iter().enumerate() {
            for x in w.iter_mut().take(j + 1) {
                *x += 2 * e;
            }
        }
        WeightTuple::new(w)
    }
}

impl fmt::Display for DeltaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(j, e)| if *e == 1 { format!("d{}", j + 1) } else { format!("d{}^{e}", j + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A nonincreasing tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightTuple(Vec<u32>);

impl WeightTuple {
    pub fn new(lambda: Vec<u32>) -> Result<Self> {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("weight {lambda:?} is not nonincreasing")));
        }
        Ok(WeightTuple(lambda))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn l(&self) -> usize {
        self.0.len()
    }
}

/// All `δ`-monomials of level `k` for `s` determinants, exponent tuples in
/// decreasing lexicographic order.
pub fn enumerate_monomials(s: usize, k: u32) -> Vec<DeltaMonomial> {
    fn rec(j: usize, s: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<DeltaMonomial>) {
        if j == s {
            if rest == 0 {
                out.push(DeltaMonomial::new(cur.clone()));
            }
            return;
        }
        let w = j as u32 + 1;
        for e in (0..=rest / w).rev() {
            cur.push(e);
            rec(j + 1, s, rest - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        if k == 0 {
            out.push(DeltaMonomial::new(vec![]));
        }
        return out;
    }
    rec(0, s, k, &mut Vec::new(), &mut out);
    out
}

/// `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`.
pub fn weyl_dim(lambda: &WeightTuple) -> BigUint {
    let l = lambda.l();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..l {
        for j in i + 1..l {
            num *= BigInt::from(lambda.0[i] as i64 - lambda.0[j] as i64 + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q.to_biguint().expect("positive")
}

fn to_u64(x: BigUint) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::BoundsExceeded("dimension exceeds 64 bits".into()))
}

/// Dimension of the degree-`k` part of the coordinate ring of rank `≤ s`
/// symmetric ℓ×ℓ matrices, summed over highest weights.
pub fn section_dim(s: usize, l: usize, k: u32) -> Result<u64> {
    if s == 0 || s > l {
        return Err(Error::Precondition(format!("need 1 ≤ s ≤ ℓ, got s = {s}, ℓ = {l}")));
    }
    let mut total = BigUint::zero();
    for m in enumerate_monomials(s, k) {
        total += weyl_dim(&m.weight(l)?);
    }
    to_u64(total)
}

/// Part of `section_dim` carried by monomials involving `δ_s`.
pub fn kernel_dim(s: usize, l: usize, k: u32) -> Result<u64> {
    if s < 2 || s > l {
        return Err(Error::Precondition(format!("need 2 ≤ s ≤ ℓ, got s = {s}, ℓ = {l}")));
    }
    let mut total = BigUint::zero();
    for m in enumerate_monomials(s, k).into_iter().filter(DeltaMonomial::involves_top) {
        total += weyl_dim(&m.weight(l)?);
    }
    to_u64(total)
}

/// Index pairs `(j, k)`, `j ≤ k`, of the symmetric-matrix coordinates
/// `w_jk`, in variable order.
pub fn w_pairs(l: usize) -> Vec<(usize, usize)> {
    (0..l).flat_map(|j| (j..l).map(move |k| (j, k))).collect()
}

/// Rank of the evaluation matrix of the degree-`k` monomials in `w_jk` at
/// `monomial count + 8` random points `W = T Tᵀ`, `T` an integer ℓ×s matrix.
pub fn oracle_dim(s: usize, l: usize, k: u32, seed: u64) -> Result<usize> {
    let pairs = w_pairs(l).len();
    let n = monomials_of_degree(pairs, k).len();
    oracle_dim_with_samples(s, l, k, seed, n + 8)
}

pub fn oracle_dim_with_samples(s: usize, l: usize, k: u32, seed: u64, samples: usize) -> Result<usize> {
    if s == 0 || l == 0 {
        return Err(Error::Precondition("s and ℓ must be positive".into()));
    }
    let pairs = w_pairs(l);
    let monomials = monomials_of_degree(pairs.len(), k);
    let mut rng = sample::rng(seed);
    let mut rows = Vec::with_capacity(samples);
    for _ in 0..samples {
        let t: Vec<Vec<i64>> = (0..l).map(|_| (0..s).map(|_| rng.random_range(-3..=3)).collect()).collect();
        let w: Vec<BigInt> = pairs
            .iter()
            .map(|&(a, b)| BigInt::from(t[a].iter().zip(&t[b]).map(|(x, y)| x * y).sum::<i64>()))
            .collect();
        let row = monomials
            .iter()
            .map(|m| {
                m.exps()
                    .iter()
                    .zip(&w)
                    .fold(BigInt::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .collect();
        rows.push(row);
    }
    Ok(integer_rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(v: &[DeltaMonomial]) -> Vec<Vec<u32>> {
        v.iter().map(|m| m.exps().to_vec()).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(exps(&enumerate_monomials(2, 2)), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(exps(&enumerate_monomials(1, 3)), vec![vec![3]]);
        assert_eq!(exps(&enumerate_monomials(3, 3)), vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn weyl_examples() {
        let w = |v: Vec<u32>| weyl_dim(&WeightTuple::new(v).unwrap());
        assert_eq!(w(vec![0, 0, 0]), 1u32.into());
        assert_eq!(w(vec![2, 0]), 3u32.into());
        assert_eq!(w(vec![2, 2]), 1u32.into());
        assert!(WeightTuple::new(vec![0, 1]).is_err());
    }

    #[test]
    fn section_examples() {
        assert_eq!(section_dim(1, 2, 2).unwrap(), 5);
        assert_eq!(section_dim(2, 2, 2).unwrap(), 6);
        assert_eq!(section_dim(2, 2, 1).unwrap(), 3);
        assert!(section_dim(3, 2, 1).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_dim(2, 2, 2).unwrap(), 1);
        assert_eq!(kernel_dim(2, 2, 1).unwrap(), 0);
        let d = section_dim(2, 3, 2).unwrap() - section_dim(1, 3, 2).unwrap();
        assert_eq!(kernel_dim(2, 3, 2).unwrap(), d);
        assert!(kernel_dim(1, 2, 2).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_dim(1, 2, 2, 1).unwrap(), 5);
        assert_eq!(oracle_dim(2, 2, 3, 1).unwrap(), 10);
        for k in 0..5 {
            assert_eq!(oracle_dim(1, 1, k, 3).unwrap(), 1);
        }
    }
}
