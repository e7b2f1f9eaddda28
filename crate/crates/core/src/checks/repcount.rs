//! Dimension formulas against the evaluation oracle.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::Rng;

use crate::exactalg::Rational;
use crate::repcount::{kernel_dim, oracle_dim, section_dim, weyl_dim, WeightTuple};
use crate::sample;

use super::{fail, PropertyResult};

pub fn suite(seed: u64) -> Vec<PropertyResult> {
    vec![oracle_agreement(3, 4, seed), top_level_closed_form(3, 4), kernel_telescoping(3, 4), weyl_integrality(1000, seed)]
}

/// `section_dim = oracle_dim` for all `1 ≤ s ≤ ℓ ≤ lmax`, `k ≤ kmax`, under
/// two seeds.
pub fn oracle_agreement(lmax: usize, kmax: u32, seed: u64) -> PropertyResult {
    PropertyResult::run(format!("section_dim = oracle_dim for s <= l <= {lmax}, k <= {kmax}, two seeds"), || {
        let mut n = 0;
        for l in 1..=lmax {
            for s in 1..=l {
                for k in 0..=kmax {
                    let want = section_dim(s, l, k).map_err(|e| (n, e.to_string()))? as usize;
                    for sd in [seed, seed.wrapping_mul(31).wrapping_add(17)] {
                        n += 1;
                        let got = oracle_dim(s, l, k, sd).map_err(|e| (n, e.to_string()))?;
                        if got != want {
                            return fail(n, format!("(s, l, k) = ({s}, {l}, {k}), seed {sd}: oracle {got}, formula {want}"));
                        }
                    }
                }
            }
        }
        Ok(n)
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

pub fn top_level_closed_form(lmax: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run("section_dim(l,l,k) = C(k + l(l+1)/2 - 1, k)", || {
        let mut n = 0;
        for l in 1..=lmax {
            let d = (l * (l + 1) / 2) as u64;
            for k in 0..=kmax {
                n += 1;
                let got = section_dim(l, l, k).map_err(|e| (n, e.to_string()))?;
                let want = binomial(k as u64 + d - 1, k as u64);
                if got != want {
                    return fail(n, format!("l = {l}, k = {k}: {got} ≠ {want}"));
                }
            }
        }
        Ok(n)
    })
}

pub fn kernel_telescoping(lmax: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run("sum of kernel_dim over levels 2..s telescopes to section_dim(s) - section_dim(1)", || {
        let mut n = 0;
        for l in 2..=lmax {
            for s in 2..=l {
                for k in 0..=kmax {
                    n += 1;
                    let sum: u64 = (2..=s).map(|t| kernel_dim(t, l, k).expect("2 <= t <= l")).sum();
                    let want = section_dim(s, l, k).expect("s <= l") - section_dim(1, l, k).expect("1 <= l");
                    if sum != want {
                        return fail(n, format!("(s, l, k) = ({s}, {l}, {k}): {sum} ≠ {want}"));
                    }
                }
            }
        }
        Ok(n)
    })
}

/// The Weyl product is a positive integer on random dominant weights.
pub fn weyl_integrality(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("Weyl dimension is a positive integer on random weights, l <= 5", || {
        let mut rng = sample::rng(seed);
        for t in 0..count {
            let l = rng.random_range(1..=5usize);
            let mut lambda: Vec<u32> = (0..l).map(|_| rng.random_range(0..=12)).collect();
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            let mut prod = Rational::one();
            for i in 0..l {
                for j in i + 1..l {
                    let num = lambda[i] as i64 - lambda[j] as i64 + (j - i) as i64;
                    prod *= Rational::new(BigInt::from(num), BigInt::from((j - i) as i64));
                }
            }
            let w = weyl_dim(&WeightTuple::new(lambda.clone()).expect("sorted"));
            if !prod.is_integer() || !prod.is_positive() || prod.to_integer() != BigInt::from(w) {
                return fail(t, format!("lambda = {lambda:?}: product {prod}"));
            }
        }
        Ok(count)
    })
}
