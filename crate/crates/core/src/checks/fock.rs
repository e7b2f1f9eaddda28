//! Fock-space inner product, invariant bases, 𝔲(ℓ) quantization and the
//! restriction maps.

use rand::Rng;

use crate::exactalg::{monomials_of_degree, Matrix, Monomial, Poly, Scalar, VarSet};
use crate::fock::{
    bargmann_inner, gram, invariant_basis, is_positive_definite, monomial_norm, oracle, restriction_kernel_dim,
    FockModel,
};
use crate::repcount::{kernel_dim, section_dim};
use crate::sample::{self, SampleRng};

use super::{fail, PropertyResult};

pub fn suite(seed: u64) -> Vec<PropertyResult> {
    vec![
        closed_form_matches_oracle(4, 3),
        inner_positive(200, seed),
        gram_positive_definite(2, 3),
        degree_orthogonality(2, 3),
        basis_dimension(3, 4),
        basis_invariance(3, 4),
        euler_self_adjoint(100, seed),
        u_dirac(50, seed),
        u_preserves_invariants(seed),
        restriction_kernel(),
        restriction_coherence(),
        restriction_is_projection(),
    ]
}

fn z_vars(m: usize) -> VarSet {
    let names: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
    VarSet::new(&names).expect("valid names")
}

/// `⟨z^α, z^β⟩ = δ_{αβ} 2^{|α|} α!` against Gaussian moments, all
/// `|α|, |β| ≤ dmax`, `m ≤ mmax`.
pub fn closed_form_matches_oracle(dmax: u32, mmax: usize) -> PropertyResult {
    PropertyResult::run(format!("Bargmann closed form matches Gaussian moments, |alpha| <= {dmax}, m <= {mmax}"), || {
        let mut n = 0;
        for m in 1..=mmax {
            let vars = z_vars(m);
            let monos: Vec<Monomial> = (0..=dmax).flat_map(|k| monomials_of_degree(m, k)).collect();
            for a in &monos {
                let radial: num_bigint::BigInt = a.exps().iter().map(|&e| oracle::radial_integral(e)).product();
                if monomial_norm(a) != crate::exactalg::Rational::from_integer(radial) {
                    return fail(n, format!("radial integral disagrees at {a:?}"));
                }
                for b in &monos {
                    n += 1;
                    let f = Poly::term(&vars, a.clone(), Scalar::one());
                    let g = Poly::term(&vars, b.clone(), Scalar::one());
                    let got = bargmann_inner(&f, &g).expect("same variables");
                    let want = oracle::monomial_pairing(a.exps(), b.exps());
                    if got != want {
                        return fail(n, format!("<{f}, {g}> = {got}, oracle {want}"));
                    }
                }
            }
        }
        Ok(n)
    })
}

pub fn inner_positive(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("<f,f> > 0 for random nonzero f", || {
        let mut rng = sample::rng(seed);
        for t in 0..count {
            let vars = z_vars(rng.random_range(1..=4));
            let f = sample::poly(&mut rng, &vars, 4, 4, true);
            if f.is_zero() {
                continue;
            }
            let v = bargmann_inner(&f, &f).expect("same variables");
            let positive = v.as_real().is_some_and(|r| r > &crate::exactalg::Rational::from_integer(0.into()));
            if !positive {
                return fail(t, format!("<f,f> = {v} for f = {f}"));
            }
        }
        Ok(count)
    })
}

pub fn gram_positive_definite(max: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run(format!("Gram matrices positive definite by leading minors, s, l <= {max}, k <= {kmax}"), || {
        let mut n = 0;
        for l in 1..=max {
            for s in 1..=max {
                for k in 0..=kmax {
                    n += 1;
                    let b = invariant_basis(s, l, k).map_err(|e| (n, e.to_string()))?;
                    if !is_positive_definite(&gram(&b)) {
                        return fail(n, format!("(s, l, k) = ({s}, {l}, {k})"));
                    }
                }
            }
        }
        Ok(n)
    })
}

pub fn degree_orthogonality(max: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run("invariants of different degree are orthogonal", || {
        let mut n = 0;
        for l in 1..=max {
            for s in 1..=max {
                let bases: Vec<_> = (0..=kmax).map(|k| invariant_basis(s, l, k).expect("in bounds")).collect();
                for (i, a) in bases.iter().enumerate() {
                    for b in &bases[i + 1..] {
                        for f in a.elements() {
                            for g in b.elements() {
                                n += 1;
                                if !bargmann_inner(f, g).expect("same model").is_zero() {
                                    return fail(n, format!("<{f}, {g}> ≠ 0"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(n)
    })
}

pub fn basis_dimension(lmax: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run(format!("dim InvariantBasis(s,l,k) = section_dim(s,l,k), s <= l <= {lmax}, k <= {kmax}"), || {
        let mut n = 0;
        for l in 1..=lmax {
            for s in 1..=l {
                for k in 0..=kmax {
                    n += 1;
                    let b = invariant_basis(s, l, k).map_err(|e| (n, e.to_string()))?;
                    let want = section_dim(s, l, k).map_err(|e| (n, e.to_string()))?;
                    if b.len() as u64 != want {
                        return fail(n, format!("(s, l, k) = ({s}, {l}, {k}): basis {} ≠ {want}", b.len()));
                    }
                }
            }
        }
        Ok(n)
    })
}

pub fn basis_invariance(max: usize, kmax: u32) -> PropertyResult {
    PropertyResult::run("basis elements are fixed by generators of O(s)", || {
        let mut n = 0;
        for l in 1..=max {
            for s in 1..=max {
                for k in 0..=kmax {
                    let b = invariant_basis(s, l, k).map_err(|e| (n, e.to_string()))?;
                    for f in b.elements() {
                        n += 1;
                        if !b.model().is_invariant(f).expect("same model") {
                            return fail(n, format!("(s, l, k) = ({s}, {l}, {k}): {f} not invariant"));
                        }
                    }
                }
            }
        }
        Ok(n)
    })
}

fn random_anti_hermitian(rng: &mut SampleRng, l: usize) -> Matrix {
    let h = Matrix::from_fn(l, l, |_, _| sample::scalar(rng, 4, 3, true));
    // a = h − h*
    &h - &h.conj_transpose()
}

fn random_z_poly(rng: &mut SampleRng, model: &FockModel) -> Poly {
    sample::poly(rng, model.zvars(), 3, 3, true)
}

pub fn euler_self_adjoint(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("<Ef, g> = <f, Eg> and quantized u(l) elements are self-adjoint", || {
        let mut rng = sample::rng(seed);
        for t in 0..count {
            let model = FockModel::new(rng.random_range(1..=2), rng.random_range(1..=2)).expect("positive");
            let (f, g) = (random_z_poly(&mut rng, &model), random_z_poly(&mut rng, &model));
            let lhs = bargmann_inner(&model.euler(&f).expect("same model"), &g).expect("same model");
            let rhs = bargmann_inner(&f, &model.euler(&g).expect("same model")).expect("same model");
            if lhs != rhs {
                return fail(t, format!("Euler operator: f = {f}, g = {g}"));
            }
            let a = random_anti_hermitian(&mut rng, model.l());
            let lhs = bargmann_inner(&model.quantize_u(&a, &f).expect("anti-Hermitian"), &g).expect("same model");
            let rhs = bargmann_inner(&f, &model.quantize_u(&a, &g).expect("anti-Hermitian")).expect("same model");
            if lhs != rhs {
                return fail(t, format!("a = {a}: f = {f}, g = {g}"));
            }
        }
        Ok(count)
    })
}

/// `[â, b̂] = i·[a,b]^` on all monomial probes of degree ≤ 4.
pub fn u_dirac(count: usize, seed: u64) -> PropertyResult {
    PropertyResult::run("[a^, b^] = i [a,b]^ for random u(l) pairs on probes of degree <= 4", || {
        let mut rng = sample::rng(seed.wrapping_add(3));
        let model = FockModel::new(1, 2).expect("positive");
        let probes: Vec<Poly> = (0..=4)
            .flat_map(|k| monomials_of_degree(model.m(), k))
            .map(|m| Poly::term(model.zvars(), m, Scalar::one()))
            .collect();
        for t in 0..count {
            let a = random_anti_hermitian(&mut rng, 2);
            let b = random_anti_hermitian(&mut rng, 2);
            let c = a.commutator(&b);
            let q = |m: &Matrix, f: &Poly| model.quantize_u(m, f).expect("anti-Hermitian");
            for x in &probes {
                let lhs = q(&a, &q(&b, x)) - q(&b, &q(&a, x));
                if lhs != q(&c, x).scale(&Scalar::i()) {
                    return fail(t, format!("a = {a}, b = {b}, probe {x}"));
                }
            }
        }
        Ok(count)
    })
}

pub fn u_preserves_invariants(seed: u64) -> PropertyResult {
    PropertyResult::run("quantized u(l) elements map invariants to invariants", || {
        let mut rng = sample::rng(seed.wrapping_add(5));
        let mut n = 0;
        for (s, l, k) in [(2, 2, 2), (2, 3, 2), (3, 2, 1)] {
            let b = invariant_basis(s, l, k).expect("in bounds");
            let a = random_anti_hermitian(&mut rng, l);
            for f in b.elements() {
                n += 1;
                let g = b.model().quantize_u(&a, f).expect("anti-Hermitian");
                if !b.model().is_invariant(&g).expect("same model") {
                    return fail(n, format!("a = {a}, f = {f}"));
                }
            }
        }
        Ok(n)
    })
}

/// Rank drop of `s → s−1` equals `kernel_dim(s, ℓ, k)`.
pub fn restriction_kernel() -> PropertyResult {
    PropertyResult::run("kernel_dim equals the rank drop of the restriction at (2,2,k<=3), (2,3,k<=2)", || {
        let mut n = 0;
        for (s, l, kmax) in [(2, 2, 3), (2, 3, 2)] {
            for k in 0..=kmax {
                n += 1;
                let b = invariant_basis(s, l, k).map_err(|e| (n, e.to_string()))?;
                let drop = restriction_kernel_dim(&b, s - 1).map_err(|e| (n, e.to_string()))? as u64;
                let want = kernel_dim(s, l, k).map_err(|e| (n, e.to_string()))?;
                if drop != want {
                    return fail(n, format!("(s, l, k) = ({s}, {l}, {k}): rank drop {drop}, kernel_dim {want}"));
                }
            }
        }
        Ok(n)
    })
}

/// Restricting `3 → 1` directly equals `3 → 2 → 1`, and truncation equals
/// substituting `w_jk := t_j·t_k` into the w-representation.
pub fn restriction_coherence() -> PropertyResult {
    PropertyResult::run("restrictions compose coherently and agree with w := t t^T", || {
        let mut n = 0;
        for l in 1..=3 {
            for k in 0..=2 {
                let b = invariant_basis(3, l, k).expect("in bounds");
                for (f, w) in b.elements().iter().zip(b.w_repr()) {
                    n += 1;
                    let (m1, direct) = b.model().restrict(f, 1).expect("1 < 3");
                    let (m2, mid) = b.model().restrict(f, 2).expect("2 < 3");
                    let (_, composed) = m2.restrict(&mid, 1).expect("1 < 2");
                    if direct != composed {
                        return fail(n, format!("l = {l}: {f}"));
                    }
                    let via_w = m1.to_z(&w.embed(m1.wvars()).expect("same w-variables")).expect("substitution");
                    if via_w != direct {
                        return fail(n, format!("l = {l}: w-route differs for {w}"));
                    }
                }
            }
        }
        Ok(n)
    })
}

/// Substituting `z_{j,a} = 0` for `a ≥ s′` agrees with the orthogonal
/// projection onto polynomials in the surviving variables, computed from the
/// inner product against every target monomial of the right degree.
pub fn restriction_is_projection() -> PropertyResult {
    PropertyResult::run("restriction equals orthogonal projection onto surviving variables", || {
        let mut n = 0;
        for (s, l, k) in [(2, 2, 2), (2, 3, 2), (3, 3, 2)] {
            let b = invariant_basis(s, l, k).expect("in bounds");
            for sp in 1..s {
                let target = FockModel::new(sp, l).expect("in bounds");
                let monos = monomials_of_degree(target.zvars().len(), 2 * k);
                for f in b.elements() {
                    n += 1;
                    let (_, restricted) = b.model().restrict(f, sp).expect("s′ < s");
                    let mut proj = Poly::zero(target.zvars());
                    for m in &monos {
                        let e = Poly::term(target.zvars(), m.clone(), Scalar::one());
                        let up = e.embed(b.model().zvars()).expect("surviving variables");
                        let c = bargmann_inner(&up, f).expect("same model");
                        let c = c.checked_div(&Scalar::real(monomial_norm(m))).expect("nonzero norm");
                        proj = &proj + &e.scale(&c);
                    }
                    if proj != restricted {
                        return fail(n, format!("s = {s}, l = {l}, s' = {sp}: {f}"));
                    }
                }
            }
        }
        Ok(n)
    })
}
