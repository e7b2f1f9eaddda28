//! Momentum maps, the zero level, Killing identities and the adjoint quotient.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactalg::{Matrix, Scalar};
use crate::lie::MatrixLieAlgebra;
use crate::poisson::PresentedPoissonAlgebra;
use crate::reduction::{adjoint_point, sample_zero_level, PhasePoint};
use crate::sample::{self, SampleRng};

use super::{fail, PropertyResult};

pub fn suite(seed: u64) -> Vec<PropertyResult> {
    vec![
        mu_o_equivariance(100, seed),
        zero_level(1000, seed),
        semicone_image(1000, seed),
        killing_orthogonal(100, seed),
        killing_symplectic(100, seed),
        adjoint_relation(1000, seed),
        adjoint_vertices(),
    ]
}

fn signed_permutation(rng: &mut SampleRng, s: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..s).collect();
    perm.shuffle(rng);
    let signs: Vec<i64> = (0..s).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect();
    Matrix::from_fn(s, s, |r, c| if perm[r] == c { Scalar::int(signs[r]) } else { Scalar::zero() })
}

fn random_point(rng: &mut SampleRng, s: usize, l: usize) -> PhasePoint {
    let v = |rng: &mut SampleRng| (0..l).map(|_| (0..s).map(|_| sample::rational(rng, 9, 4)).collect()).collect();
    let q = v(rng);
    let p = v(rng);
    PhasePoint::new(q, p).expect("consistent")
}

pub fn mu_o_equivariance(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("mu_O(g pt) = g mu_O(pt) g^T for signed permutations", || {
        let mut rng = sample::rng(seed);
        for t in 0..count {
            let (s, l) = (rng.random_range(1..=4), rng.random_range(1..=3));
            let pt = random_point(&mut rng, s, l);
            let g = signed_permutation(&mut rng, s);
            let lhs = pt.transform(&g).expect("s×s").mu_o();
            let rhs = &(&g * &pt.mu_o()) * &g.transpose();
            if lhs != rhs || !lhs.is_antisymmetric() {
                return fail(t, format!("{pt} with g = {g}"));
            }
        }
        Ok(count)
    })
}

/// For each `(s, ℓ) ∈ {1,2,3}²`: `μ_O = 0`, `rank W ≤ min(s,ℓ)` with equality
/// on at least 95% of samples, and `μ_Sp ∈ 𝔰𝔭(ℓ)`.
pub fn zero_level(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("zero level: mu_O = 0, rank W <= min(s,l) (generic equality), mu_Sp in sp(l)", || {
        let mut n = 0;
        for s in 1..=3 {
            for l in 1..=3 {
                let sp = MatrixLieAlgebra::sp(l);
                let pts = sample_zero_level(s, l, count, seed ^ ((s * 16 + l) as u64)).expect("positive");
                let mut full = 0;
                for pt in &pts {
                    n += 1;
                    if !pt.on_zero_level() {
                        return fail(n, format!("mu_O ≠ 0 at {pt}"));
                    }
                    let r = pt.orbit_image().expect("zero level").rank();
                    if r > s.min(l) {
                        return fail(n, format!("rank {r} > min(s,l) at {pt}"));
                    }
                    if r == s.min(l) {
                        full += 1;
                    }
                    if !sp.contains(&pt.mu_sp()) {
                        return fail(n, format!("mu_Sp not in sp({l}) at {pt}"));
                    }
                }
                if full * 100 < 95 * count {
                    return fail(n, format!("(s, l) = ({s}, {l}): maximal rank on only {full}/{count} samples"));
                }
            }
        }
        Ok(n)
    })
}

/// ℓ = 1: `x + iy = W₁₁`, `r = |q|² + |p|²` satisfy `x² + y² = r²`, `r ≥ 0`,
/// and `μ_Sp` is nilpotent.
pub fn semicone_image(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("l = 1: image lies on the semicone x^2 + y^2 = r^2, r >= 0, mu_Sp nilpotent", || {
        let mut n = 0;
        let cone = PresentedPoissonAlgebra::semicone();
        let rel = &cone.relations().relations()[0];
        for s in 1..=3 {
            for pt in sample_zero_level(s, 1, count, seed ^ (s as u64 * 101)).expect("positive") {
                n += 1;
                let w = pt.orbit_image().expect("zero level").get(0, 0).clone();
                let r = pt.norm_sqr();
                // generator order of the semicone algebra is (r, x, y)
                let point = [Scalar::real(r.clone()), Scalar::real(w.re().clone()), Scalar::real(w.im().clone())];
                if !rel.evaluate(&point).expect("three coordinates").is_zero() || r.is_negative() {
                    return fail(n, format!("off the semicone at {pt}"));
                }
                let m = pt.mu_sp();
                if !m.trace().is_zero() || !m.det().expect("square").is_zero() {
                    return fail(n, format!("mu_Sp not nilpotent at {pt}"));
                }
            }
        }
        Ok(n)
    })
}

fn random_element(rng: &mut SampleRng, g: &MatrixLieAlgebra) -> Matrix {
    g.from_coords(&(0..g.dim()).map(|_| sample::scalar(rng, 6, 3, false)).collect::<Vec<_>>())
}

pub fn killing_orthogonal(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("(s-2) tr(a^T b) = -beta(a,b) on so(3), so(4)", || {
        let mut rng = sample::rng(seed);
        let mut n = 0;
        for s in [3usize, 4] {
            let g = MatrixLieAlgebra::so(s);
            for _ in 0..count {
                n += 1;
                let (a, b) = (random_element(&mut rng, &g), random_element(&mut rng, &g));
                let beta = g.killing_matrices(&a, &b).expect("members");
                let lhs = Scalar::int(s as i64 - 2) * (&a.transpose() * &b).trace();
                if lhs != -beta {
                    return fail(n, format!("so({s}): a = {a}, b = {b}"));
                }
            }
        }
        Ok(n)
    })
}

pub fn killing_symplectic(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("beta(a,b) = 2(l+1) tr(ab) on sp(l), l <= 3", || {
        let mut rng = sample::rng(seed.wrapping_add(7));
        let mut n = 0;
        for l in 1..=3usize {
            let g = MatrixLieAlgebra::sp(l);
            for _ in 0..count {
                n += 1;
                let (a, b) = (random_element(&mut rng, &g), random_element(&mut rng, &g));
                let beta = g.killing_matrices(&a, &b).expect("members");
                if beta != Scalar::int(2 * (l as i64 + 1)) * (&a * &b).trace() {
                    return fail(n, format!("sp({l}): a = {a}, b = {b}"));
                }
            }
        }
        Ok(n)
    })
}

pub fn random_torus_point(rng: &mut SampleRng) -> Scalar {
    loop {
        let z = sample::scalar(rng, 9, 5, true);
        if !z.is_zero() {
            return z;
        }
    }
}

/// Relation residual and `z ↦ 1/z` symmetry at random rational `z`.
pub fn adjoint_relation(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("adjoint quotient: relation residual 0 and z -> 1/z symmetry at random z", || {
        let mut rng = sample::rng(seed);
        let alg = PresentedPoissonAlgebra::adjoint_quotient();
        let rel = &alg.relations().relations()[0];
        for t in 0..count {
            let z = random_torus_point(&mut rng);
            let p = adjoint_point(&z).expect("nonzero");
            let q = adjoint_point(&z.inv().expect("nonzero")).expect("nonzero");
            let from_poly = rel.evaluate(&p.coordinates()).expect("three coordinates");
            if !p.relation_residual().is_zero() || !from_poly.is_zero() {
                return fail(t, format!("z = {z}: residual {}", p.relation_residual()));
            }
            if (&p.big_x, &p.big_y, &p.tau) != (&q.big_x, &q.big_y, &q.tau) {
                return fail(t, format!("z = {z}: image differs from that of 1/z"));
            }
            if p.steinberg() != &z + &z.inv().expect("nonzero") {
                return fail(t, format!("z = {z}: X + iY ≠ z + 1/z"));
            }
        }
        Ok(count)
    })
}

/// At `z = ±1` the image is `(±2, 0, 0)` and every bracket vanishes there.
pub fn adjoint_vertices() -> PropertyResult {
    PropertyResult::run("adjoint quotient: vertices X = 2 and X = -2, where all brackets vanish", || {
        let alg = PresentedPoissonAlgebra::adjoint_quotient();
        for (i, z) in [Scalar::one(), Scalar::int(-1)].into_iter().enumerate() {
            let p = adjoint_point(&z).expect("nonzero");
            let want = Scalar::int(if i == 0 { 2 } else { -2 });
            if p.big_x != want || !p.big_y.is_zero() || !p.tau.is_zero() {
                return fail(i, format!("z = {z} maps to ({}, {}, {})", p.big_x, p.big_y, p.tau));
            }
            let table = alg.table_at(&p.coordinates()).expect("point");
            if table.iter().flatten().any(|v| !v.is_zero()) {
                return fail(i, format!("bracket nonzero at X = {want}"));
            }
        }
        Ok(2)
    })
}
