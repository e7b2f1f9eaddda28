use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Poly, Rational, Scalar};

/// Polynomials in the holomorphic variables `z₁, …, z_m`.
pub type FockPoly = Poly;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// `⟨z^α, z^α⟩ = 2^{|α|} α!`.
pub fn monomial_norm(m: &Monomial) -> Rational {
    let v = m.exps().iter().fold(BigInt::one(), |acc, &a| acc * (BigInt::from(2).pow(a) * factorial(a)));
    Rational::from_integer(v)
}

/// Gaussian inner product `∫ f ḡ e^{−|z|²/2}`, normalized so `⟨1,1⟩ = 1`.
/// Linear in `f`, conjugate-linear in `g`; monomials are orthogonal.
pub fn bargmann_inner(f: &FockPoly, g: &FockPoly) -> Result<Scalar> {
    if f.vars() != g.vars() {
        return Err(Error::VariableMismatch);
    }
    let mut acc = Scalar::zero();
    for (m, a) in f.terms() {
        let b = g.coeff(m);
        if !b.is_zero() {
            acc += &(&(a * &b.conj()) * &Scalar::real(monomial_norm(m)));
        }
    }
    Ok(acc)
}

/// Closed forms derived independently of [`monomial_norm`].
pub mod oracle {
    use super::*;

    /// `E[xⁿ]` for `x ~ N(0,1)`: `(n−1)!!` for even `n`, else 0.
    pub fn normal_moment(n: u32) -> BigInt {
        if n % 2 == 1 {
            return BigInt::from(0);
        }
        (1..n).step_by(2).fold(BigInt::one(), |a, k| a * k)
    }

    fn binomial(n: u32, k: u32) -> BigInt {
        (0..k).fold(BigInt::one(), |a, i| a * (n - i) / (i + 1))
    }

    /// `E[(x+iy)^a (x−iy)^b]` for independent standard normals, which is the
    /// one-variable inner product `⟨z^a, z^b⟩`.
    pub fn gaussian_pairing(a: u32, b: u32) -> Scalar {
        // (x+iy)^a (x-iy)^b = Σ C(a,p) C(b,q) x^{p+q} (iy)^{a-p} (-iy)^{b-q}
        let mut acc = Scalar::zero();
        for p in 0..=a {
            for q in 0..=b {
                let c = binomial(a, p) * binomial(b, q);
                let mx = normal_moment(p + q);
                let my = normal_moment(a - p + b - q);
                if mx == BigInt::from(0) || my == BigInt::from(0) {
                    continue;
                }
                let unit = Scalar::i().pow(a - p) * (-Scalar::i()).pow(b - q);
                acc += &(unit * Scalar::real(Rational::from_integer(c * mx * my)));
            }
        }
        acc
    }

    /// `∫₀^∞ ρ^{2a} e^{−ρ²/2} ρ dρ` by the integration-by-parts recursion
    /// `I(a) = 2a·I(a−1)`, `I(0) = 1`.
    pub fn radial_integral(a: u32) -> BigInt {
        (1..=a).fold(BigInt::one(), |acc, k| acc * (2 * k))
    }

    /// Multivariate `⟨z^α, z^β⟩` as a product of one-variable pairings.
    pub fn monomial_pairing(alpha: &[u32], beta: &[u32]) -> Scalar {
        alpha.iter().zip(beta).fold(Scalar::one(), |acc, (&a, &b)| acc * gaussian_pairing(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarSet;

    #[test]
    fn examples() {
        let vars = VarSet::new(&["z1", "z2"]).unwrap();
        let z1 = Poly::var(&vars, "z1").unwrap();
        let z2 = Poly::var(&vars, "z2").unwrap();
        let one = Poly::one(&vars);
        assert_eq!(bargmann_inner(&one, &one).unwrap(), Scalar::one());
        assert!(bargmann_inner(&z1, &z2).unwrap().is_zero());
        let sq = &z1 * &z1;
        assert_eq!(bargmann_inner(&sq, &sq).unwrap(), Scalar::int(8));
    }

    #[test]
    fn sesquilinear() {
        let vars = VarSet::new(&["z1"]).unwrap();
        let z = Poly::var(&vars, "z1").unwrap();
        let iz = z.scale(&Scalar::i());
        assert_eq!(bargmann_inner(&iz, &z).unwrap(), Scalar::int(2) * Scalar::i());
        assert_eq!(bargmann_inner(&z, &iz).unwrap(), Scalar::int(-2) * Scalar::i());
    }

    #[test]
    fn oracle_agrees_in_one_variable() {
        for a in 0..6 {
            assert_eq!(oracle::radial_integral(a), BigInt::from(2).pow(a) * factorial(a));
            for b in 0..6 {
                let expected = if a == b { Scalar::real(monomial_norm(&Monomial::new(vec![a]))) } else { Scalar::zero() };
                assert_eq!(oracle::gaussian_pairing(a, b), expected, "a = {a}, b = {b}");
            }
        }
    }
}
