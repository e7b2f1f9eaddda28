use stratquant_core::fock::{invariant_basis, restriction_kernel_dim};
use stratquant_core::repcount::{kernel_dim, oracle_dim, section_dim};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

#[test]
fn invariant_basis_matches_highest_weight_count() {
    for l in 1..=3 {
        for s in 1..=l {
            for k in 0..=4u32 {
                let b = invariant_basis(s, l, k).unwrap();
                assert_eq!(b.len() as u64, section_dim(s, l, k).unwrap(), "(s, l, k) = ({s}, {l}, {k})");
            }
        }
    }
}

#[test]
fn oracle_matches_highest_weight_count() {
    for l in 1..=3 {
        for s in 1..=l {
            for k in 0..=4u32 {
                let expected = section_dim(s, l, k).unwrap() as usize;
                for seed in [11, 12] {
                    assert_eq!(oracle_dim(s, l, k, seed).unwrap(), expected, "(s, l, k) = ({s}, {l}, {k})");
                }
            }
        }
    }
}

#[test]
fn top_level_is_full_polynomial_ring() {
    for l in 1..=3u64 {
        for k in 0..=4u64 {
            let d = l * (l + 1) / 2;
            assert_eq!(section_dim(l as usize, l as usize, k as u32).unwrap(), binomial(k + d - 1, k));
        }
    }
}

#[test]
fn kernel_telescopes() {
    for l in 2..=3 {
        for s in 2..=l {
            for k in 0..=4u32 {
                let sum: u64 = (2..=s).map(|t| kernel_dim(t, l, k).unwrap()).sum();
                assert_eq!(sum, section_dim(s, l, k).unwrap() - section_dim(1, l, k).unwrap());
            }
        }
    }
}

#[test]
fn kernel_is_restriction_rank_drop() {
    for (s, l, kmax) in [(2, 2, 3), (2, 3, 2), (3, 3, 2)] {
        for k in 0..=kmax {
            let b = invariant_basis(s, l, k).unwrap();
            let drop = restriction_kernel_dim(&b, s - 1).unwrap() as u64;
            assert_eq!(drop, kernel_dim(s, l, k).unwrap(), "(s, l, k) = ({s}, {l}, {k})");
        }
    }
}
