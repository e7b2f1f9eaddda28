use num_traits::Signed;
use proptest::prelude::*;
use stratquant_core::exactalg::{parse_poly, poly_from_json, poly_to_json};
use stratquant_core::fock::bargmann_inner;
use stratquant_core::poisson::PresentedPoissonAlgebra;
use stratquant_core::repcount::{section_dim, weyl_dim, WeightTuple};
use stratquant_core::{sample, Matrix, Poly, VarSet};

fn xyz() -> VarSet {
    VarSet::new(&["x", "y", "z"]).unwrap()
}

fn three(seed: u64, vars: &VarSet, complex: bool) -> (Poly, Poly, Poly) {
    let mut rng = sample::rng(seed);
    let mut p = || sample::poly(&mut rng, vars, 4, 6, complex);
    (p(), p(), p())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let (a, b, c) = three(seed, &xyz(), true);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_and_json_round_trip(seed in any::<u64>()) {
        let vars = xyz();
        let (a, _, _) = three(seed, &vars, true);
        prop_assert_eq!(&parse_poly(&vars, &a.to_string()).unwrap(), &a);
        prop_assert_eq!(&poly_from_json(&poly_to_json(&a)).unwrap(), &a);
    }

    #[test]
    fn rank_of_transpose(seed in any::<u64>(), n in 1usize..=12, m in 1usize..=12, r in 1usize..=12) {
        use rand::Rng;
        let mut rng = sample::rng(seed);
        let mut ints = |rows: usize, cols: usize| {
            let v: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-4..=4)).collect()).collect();
            let refs: Vec<&[i64]> = v.iter().map(Vec::as_slice).collect();
            Matrix::from_ints(&refs)
        };
        let prod = &ints(n, r) * &ints(r, m);
        let k = prod.rank();
        prop_assert!(k <= n.min(m).min(r));
        prop_assert_eq!(k, prod.transpose().rank());
    }

    #[test]
    fn weyl_dim_trivial_and_defining(l in 1usize..=6) {
        let mut lambda = vec![0; l];
        prop_assert_eq!(weyl_dim(&WeightTuple::new(lambda.clone()).unwrap()), 1u32.into());
        lambda[0] = 1;
        prop_assert_eq!(weyl_dim(&WeightTuple::new(lambda).unwrap()), (l as u32).into());
    }

    #[test]
    fn section_dim_monotone_in_s(l in 1usize..=3, k in 0u32..=4) {
        for s in 2..=l {
            prop_assert!(section_dim(s - 1, l, k).unwrap() <= section_dim(s, l, k).unwrap());
        }
    }

    #[test]
    fn bargmann_hermitian(seed in any::<u64>()) {
        let (f, g, _) = three(seed, &xyz(), true);
        prop_assert_eq!(bargmann_inner(&f, &g).unwrap(), bargmann_inner(&g, &f).unwrap().conj());
        let n = bargmann_inner(&f, &f).unwrap();
        prop_assert!(n.is_real());
        prop_assert!(f.is_zero() || n.re().is_positive());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(500) })]

    #[test]
    fn normal_form_is_algebra_map(seed in any::<u64>()) {
        let alg = PresentedPoissonAlgebra::semicone();
        let (a, b, _) = three(seed, alg.vars(), false);
        let nf = |p: &Poly| alg.normal_form(p);
        prop_assert_eq!(nf(&(&a + &b)), &nf(&a) + &nf(&b));
        prop_assert_eq!(nf(&(&a * &b)), nf(&(&nf(&a) * &nf(&b))));
        prop_assert_eq!(nf(&nf(&a)), nf(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(48) })]

    #[test]
    fn bracket_antisymmetric_and_leibniz(seed in any::<u64>(), adjoint in any::<bool>()) {
        let alg = if adjoint {
            PresentedPoissonAlgebra::adjoint_quotient()
        } else {
            PresentedPoissonAlgebra::semicone()
        };
        let (f, g, h) = three(seed, alg.vars(), false);
        let fg = alg.bracket(&f, &g).unwrap();
        prop_assert!(alg.normal_form(&(&fg + &alg.bracket(&g, &f).unwrap())).is_zero());
        let lhs = alg.bracket(&f, &(&g * &h)).unwrap();
        let rhs = &(&g * &alg.bracket(&f, &h).unwrap()) + &(&fg * &h);
        prop_assert!(alg.normal_form(&(&lhs - &rhs)).is_zero());
    }
}
