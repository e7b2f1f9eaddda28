use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Rational, Scalar};
use crate::sample::{self, SampleRng};

/// A point of `(ℝ^{2s})^ℓ`: `ℓ` pairs `(q_j, p_j)` of vectors in ℚ^s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoint {
    s: usize,
    l: usize,
    q: Vec<Vec<Rational>>,
    p: Vec<Vec<Rational>>,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl PhasePoint {
    pub fn new(q: Vec<Vec<Rational>>, p: Vec<Vec<Rational>>) -> Result<Self> {
        let l = q.len();
        let s = q.first().map_or(0, Vec::len);
        if l == 0 || s == 0 {
            return Err(Error::Precondition("s and ℓ must be positive".into()));
        }
        if p.len() != l || q.iter().chain(&p).any(|v| v.len() != s) {
            return Err(Error::DimensionMismatch("q and p must be ℓ vectors of length s".into()));
        }
        Ok(PhasePoint { s, l, q, p })
    }

    pub fn from_ints(q: &[&[i64]], p: &[&[i64]]) -> Result<Self> {
        let conv = |v: &[&[i64]]| -> Vec<Vec<Rational>> {
            v.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect()
        };
        Self::new(conv(q), conv(p))
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn q(&self) -> &[Vec<Rational>] {
        &self.q
    }

    pub fn p(&self) -> &[Vec<Rational>] {
        &self.p
    }

    /// `z_j = q_j + i p_j`.
    pub fn z(&self, j: usize) -> Vec<Scalar> {
        self.q[j].iter().zip(&self.p[j]).map(|(a, b)| Scalar::new(a.clone(), b.clone())).collect()
    }

    /// Applies `g ∈ GL(s)` to every `q_j` and `p_j`.
    pub fn transform(&self, g: &Matrix) -> Result<PhasePoint> {
        if g.rows() != self.s || g.cols() != self.s {
            return Err(Error::DimensionMismatch("g must be s×s".into()));
        }
        let apply = |v: &Vec<Rational>| -> Result<Vec<Rational>> {
            (0..self.s)
                .map(|a| {
                    let mut acc = Scalar::zero();
                    for (b, x) in v.iter().enumerate() {
                        acc += &(g.get(a, b) * &Scalar::real(x.clone()));
                    }
                    acc.as_real().cloned().ok_or_else(|| Error::Precondition("g must be real".into()))
                })
                .collect()
        };
        Ok(PhasePoint {
            s: self.s,
            l: self.l,
            q: self.q.iter().map(apply).collect::<Result<_>>()?,
            p: self.p.iter().map(apply).collect::<Result<_>>()?,
        })
    }

    /// Angular momentum `Σ_j q_jᵗ p_j − p_jᵗ q_j`, an antisymmetric s×s matrix.
    pub fn mu_o(&self) -> Matrix {
        Matrix::from_fn(self.s, self.s, |a, b| {
            let v: Rational = (0..self.l).map(|j| &self.q[j][a] * &self.p[j][b] - &self.p[j][a] * &self.q[j][b]).sum();
            Scalar::real(v)
        })
    }

    pub fn on_zero_level(&self) -> bool {
        self.mu_o().is_zero()
    }

    /// The 2ℓ×2ℓ matrix `[[qp, −qq], [pp, −pq]]` of inner products.
    pub fn mu_sp(&self) -> Matrix {
        let l = self.l;
        Matrix::from_fn(2 * l, 2 * l, |r, c| {
            let (j, k) = (r % l, c % l);
            let v = match (r < l, c < l) {
                (true, true) => dot(&self.q[j], &self.p[k]),
                (true, false) => -dot(&self.q[j], &self.q[k]),
                (false, true) => dot(&self.p[j], &self.p[k]),
                (false, false) => -dot(&self.p[j], &self.q[k]),
            };
            Scalar::real(v)
        })
    }

    /// `W_jk = z_j · z_k`, complex bilinear; defined on the zero level only.
    pub fn orbit_image(&self) -> Result<SymMatrixC> {
        if !self.on_zero_level() {
            return Err(Error::Precondition("point is not on the zero angular momentum level".into()));
        }
        let zs: Vec<Vec<Scalar>> = (0..self.l).map(|j| self.z(j)).collect();
        Ok(SymMatrixC(Matrix::from_fn(self.l, self.l, |j, k| zs[j].iter().zip(&zs[k]).map(|(a, b)| a * b).sum())))
    }

    /// `|q|² + |p|²` summed over all pairs.
    pub fn norm_sqr(&self) -> Rational {
        self.q.iter().chain(&self.p).map(|v| dot(v, v)).sum()
    }
}

impl fmt::Display for PhasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vecs = |v: &[Vec<Rational>]| {
            v.iter()
                .map(|x| format!("({})", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "q = {}; p = {}", vecs(&self.q), vecs(&self.p))
    }
}

/// Complex symmetric ℓ×ℓ matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrixC(Matrix);

impl SymMatrixC {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() || !m.is_symmetric() {
            return Err(Error::Precondition("matrix is not symmetric".into()));
        }
        Ok(SymMatrixC(m))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, j: usize, k: usize) -> &Scalar {
        self.0.get(j, k)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

/// Zero-level points built from parallel pairs `p_j = c_j q_j`.
pub fn sample_zero_level(s: usize, l: usize, count: usize, seed: u64) -> Result<Vec<PhasePoint>> {
    if s == 0 || l == 0 {
        return Err(Error::Precondition("s and ℓ must be positive".into()));
    }
    let mut rng = sample::rng(seed);
    Ok((0..count).map(|_| zero_level_point(&mut rng, s, l)).collect())
}

fn zero_level_point(rng: &mut SampleRng, s: usize, l: usize) -> PhasePoint {
    let mut q = Vec::with_capacity(l);
    let mut p = Vec::with_capacity(l);
    for _ in 0..l {
        let qj: Vec<Rational> = (0..s).map(|_| sample::rational(rng, 20, 6)).collect();
        let c = sample::rational(rng, 6, 4);
        p.push(qj.iter().map(|x| x * &c).collect());
        q.push(qj);
    }
    PhasePoint { s, l, q, p }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_o_examples() {
        let pt = PhasePoint::from_ints(&[&[1, 0]], &[&[0, 1]]).unwrap();
        assert_eq!(pt.mu_o(), Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let pt = PhasePoint::from_ints(&[&[1, 0]], &[&[2, 0]]).unwrap();
        assert!(pt.mu_o().is_zero());
        let pt = PhasePoint::from_ints(&[&[3, -1], &[2, 5]], &[&[0, 0], &[0, 0]]).unwrap();
        assert!(pt.mu_o().is_zero());
    }

    #[test]
    fn mu_sp_example() {
        let pt = PhasePoint::from_ints(&[&[1, 0]], &[&[2, 0]]).unwrap();
        let m = pt.mu_sp();
        assert_eq!(m, Matrix::from_ints(&[&[2, -1], &[4, -2]]));
        assert!(m.trace().is_zero());
        assert!(m.det().unwrap().is_zero());
        assert!(PhasePoint::from_ints(&[&[0, 0]], &[&[0, 0]]).unwrap().mu_sp().is_zero());
    }

    #[test]
    fn orbit_image_examples() {
        let pt = PhasePoint::from_ints(&[&[1, 0]], &[&[2, 0]]).unwrap();
        let w = pt.orbit_image().unwrap();
        assert_eq!(w.get(0, 0), &Scalar::from_parts("-3", "4").unwrap());
        assert_eq!(w.get(0, 0).norm_sqr(), pt.norm_sqr() * pt.norm_sqr());
        let zero = PhasePoint::from_ints(&[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]).unwrap();
        assert_eq!(zero.orbit_image().unwrap().rank(), 0);
        let off = PhasePoint::from_ints(&[&[1, 0]], &[&[0, 1]]).unwrap();
        assert!(matches!(off.orbit_image(), Err(Error::Precondition(_))));
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_zero_level(2, 2, 5, 7).unwrap();
        assert_eq!(a, sample_zero_level(2, 2, 5, 7).unwrap());
        assert_ne!(a, sample_zero_level(2, 2, 5, 8).unwrap());
        assert!(a.iter().all(PhasePoint::on_zero_level));
        assert_eq!(a[0].orbit_image().unwrap().rank(), 2);
    }

    #[test]
    fn malformed_points() {
        assert!(PhasePoint::from_ints(&[&[1, 0]], &[&[1]]).is_err());
        assert!(PhasePoint::from_ints(&[], &[]).is_err());
        assert!(sample_zero_level(0, 1, 1, 0).is_err());
    }
}
