//! Seeded exact random data for property checks and samplers.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Poly, Rational, Scalar, VarSet, Monomial};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `|n| ≤ bound`, `1 ≤ d ≤ den`.
pub fn rational(rng: &mut SampleRng, bound: i64, den: i64) -> Rational {
    let n = rng.random_range(-bound..=bound);
    let d = rng.random_range(1..=den.max(1));
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn nonzero_rational(rng: &mut SampleRng, bound: i64, den: i64) -> Rational {
    loop {
        let r = rational(rng, bound, den);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn scalar(rng: &mut SampleRng, bound: i64, den: i64, complex: bool) -> Scalar {
    let im = if complex { rational(rng, bound, den) } else { Rational::from_integer(0.into()) };
    Scalar::new(rational(rng, bound, den), im)
}

/// Random polynomial with at most `terms` terms of degree at most `max_deg`.
pub fn poly(rng: &mut SampleRng, vars: &VarSet, max_deg: u32, terms: usize, complex: bool) -> Poly {
    let n = vars.len();
    let mut out = Poly::zero(vars);
    for _ in 0..terms {
        let deg = rng.random_range(0..=max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            if n > 0 {
                exps[rng.random_range(0..n)] += 1;
            }
        }
        let c = scalar(rng, 5, 3, complex);
        out = out + Poly::term(vars, Monomial::new(exps), c);
    }
    out
}
