use crate::error::{Error, Result};
use crate::exactalg::Scalar;

/// A point `z ∈ ℂ*` of the maximal torus of SL(2,ℂ) together with its image
/// in the adjoint quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPoint {
    pub z: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    pub r2: Scalar,
    pub big_x: Scalar,
    pub big_y: Scalar,
    pub tau: Scalar,
}

impl AdjointPoint {
    /// `Y² − (X² + Y² + 4(τ − 1))τ`.
    pub fn relation_residual(&self) -> Scalar {
        let (xx, yy, t) = (&self.big_x, &self.big_y, &self.tau);
        yy * yy - &(&(&(xx * xx) + &(yy * yy)) + &(Scalar::int(4) * &(t - &Scalar::one()))) * t
    }

    /// `X + iY`, which equals `z + 1/z`.
    pub fn steinberg(&self) -> Scalar {
        &self.big_x + &(Scalar::i() * &self.big_y)
    }

    /// `[Y, X, τ]`, the generator order of the presented algebra.
    pub fn coordinates(&self) -> Vec<Scalar> {
        vec![self.big_y.clone(), self.big_x.clone(), self.tau.clone()]
    }
}

/// `X = x + x/r²`, `Y = y − y/r²`, `τ = y²/r²` for `z = x + iy`.
pub fn adjoint_point(z: &Scalar) -> Result<AdjointPoint> {
    if z.is_zero() {
        return Err(Error::Precondition("z must be nonzero".into()));
    }
    let x = Scalar::real(z.re().clone());
    let y = Scalar::real(z.im().clone());
    let r2 = Scalar::real(z.norm_sqr());
    let inv = r2.inv()?;
    Ok(AdjointPoint {
        big_x: &x + &(&x * &inv),
        big_y: &y - &(&y * &inv),
        tau: &(&y * &y) * &inv,
        z: z.clone(),
        x,
        y,
        r2,
    })
}

/// Elementary symmetric functions `σ₁, …, σ_{n−1}` of `z₁ ⋯ z_n = 1`.
pub fn steinberg_general(zs: &[Scalar]) -> Result<Vec<Scalar>> {
    if zs.is_empty() {
        return Err(Error::Precondition("at least one eigenvalue required".into()));
    }
    let prod: Scalar = zs.iter().fold(Scalar::one(), |a, b| &a * b);
    if !prod.is_one() {
        return Err(Error::Precondition(format!("product of eigenvalues is {prod}, not 1")));
    }
    // e[k] = σ_k of the prefix processed so far
    let mut e = vec![Scalar::one()];
    for z in zs {
        e.push(Scalar::zero());
        for k in (1..e.len()).rev() {
            e[k] = &e[k] + &(&e[k - 1] * z);
        }
    }
    Ok(e[1..zs.len()].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = adjoint_point(&Scalar::one()).unwrap();
        assert_eq!((p.big_x.clone(), p.big_y.clone(), p.tau.clone()), (Scalar::int(2), Scalar::zero(), Scalar::zero()));
        let p = adjoint_point(&Scalar::i()).unwrap();
        assert_eq!((p.big_x.clone(), p.big_y.clone(), p.tau.clone()), (Scalar::zero(), Scalar::zero(), Scalar::one()));
        assert!(p.relation_residual().is_zero());
        let p = adjoint_point(&Scalar::int(2)).unwrap();
        assert_eq!(p.big_x, Scalar::ratio(5, 2));
        assert!(p.big_y.is_zero() && p.tau.is_zero());
        assert!(adjoint_point(&Scalar::zero()).is_err());
    }

    #[test]
    fn general_map() {
        let z = Scalar::from_parts("2/3", "-1/5").unwrap();
        let s = steinberg_general(&[z.clone(), z.inv().unwrap()]).unwrap();
        assert_eq!(s, vec![adjoint_point(&z).unwrap().steinberg()]);
        assert_eq!(steinberg_general(&vec![Scalar::one(); 3]).unwrap(), vec![Scalar::int(3), Scalar::int(3)]);
        assert!(steinberg_general(&[Scalar::int(2), Scalar::int(2)]).is_err());
    }
}
