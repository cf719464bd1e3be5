//! Property tests over random seeds.

mod common;

use common::*;
use nilreal::duality::{dualize, PencilTag};
use nilreal::exact::{rat, Mat};
use nilreal::lataut::{self, GramLattice};
use nilreal::lie::LieAlg;
use nilreal::twostep::tensor::{binom2, random_tensor};
use nilreal::twostep::{catalog, tensor_to_lie, CatalogEntry};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rows_of(m: usize, n: usize) -> Vec<&'static CatalogEntry> {
    catalog().iter().filter(|e| (e.m, e.n) == (m, n)).collect()
}

fn random_matrix<R: Rng>(r: usize, c: usize, rng: &mut R) -> Mat {
    Mat::from_rows((0..r).map(|_| (0..c).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn signature_invariant_under_congruence(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_symmetric(n, &mut rng);
        let p = rational_invertible(n, &mut rng);
        prop_assert!(congruence_invariant(&s, &p));
        prop_assert_eq!(s.signature().unwrap().dim(), n);
    }

    #[test]
    fn rank_plus_nullity(seed in any::<u64>(), r in 1usize..7, c in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(r, c, &mut rng);
        let ker = a.kernel();
        prop_assert_eq!(a.rank() + ker.len(), c);
        for k in &ker {
            prop_assert!(a.mul_vec(k).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn solve_consistent_systems(seed in any::<u64>(), r in 1usize..7, c in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(r, c, &mut rng);
        let x0: Vec<_> = (0..c).map(|_| rat(rng.gen_range(-5..=5))).collect();
        let b = a.mul_vec(&x0);
        let x = a.solve(&b).expect("consistent");
        prop_assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn inverse_and_determinant(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = rational_invertible(n, &mut rng);
        let q = rational_invertible(n, &mut rng);
        prop_assert_eq!(p.inverse().unwrap().mul(&p), Mat::identity(n));
        prop_assert_eq!(p.mul(&q).det().unwrap(), p.det().unwrap() * q.det().unwrap());
    }

    #[test]
    fn change_basis_preserves_structure(seed in any::<u64>(), idx in 0usize..27) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = tensor_to_lie(&catalog()[idx].tensor);
        let g = rational_invertible(8, &mut rng);
        let l2: LieAlg = l.change_basis(&g).unwrap();
        prop_assert!(l2.satisfies_jacobi());
        prop_assert!(l2.is_two_step());
        prop_assert!(l2.is_nondegenerate_lie());
        prop_assert_eq!(l2.center().dim(), l.center().dim());
        prop_assert_eq!(l2.killing().signature().unwrap(), l.killing().signature().unwrap());
        let back = l2.change_basis(&g.inverse().unwrap()).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    prop_assert_eq!(back.constant(i, j, k), l.constant(i, j, k));
                }
            }
        }
    }

    #[test]
    fn parser_round_trips(seed in any::<u64>(), sig in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = [(6, 2), (5, 3), (4, 4)][sig];
        prop_assert!(parser_round_trip(&random_rational_tensor(m, n, &mut rng)));
    }

    #[test]
    fn classifier_invariant_under_base_change(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = PencilTag::ALL[rng.gen_range(0..4)].representative();
        let p = rational_invertible(4, &mut rng);
        let q = rational_invertible(2, &mut rng);
        prop_assert!(classifier_invariant(&e, &p, &q));
    }

    #[test]
    fn dual_target_dimension(seed in any::<u64>(), sig in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = [(4, 2), (4, 4), (5, 3)][sig];
        let e = random_tensor(m, n, 2, &mut rng);
        if e.is_surjective() {
            prop_assert_eq!(dualize(&e).unwrap().n(), binom2(m) - n);
        } else {
            prop_assert!(dualize(&e).is_err());
        }
    }

    #[test]
    fn lattice_automorphisms_conjugate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // unimodular P from elementary operations
        let mut p = lataut::identity(3);
        for _ in 0..4 {
            let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
            if i != j {
                let c = rng.gen_range(-1..=1);
                let row_j = p[j].clone();
                for (x, y) in p[i].iter_mut().zip(row_j) {
                    *x += c * y;
                }
            }
        }
        let base = GramLattice::new(lataut::reference_gram()).unwrap();
        let moved = base.transform(&p).unwrap();
        let (g0, g1) = (base.aut_group().unwrap(), moved.aut_group().unwrap());
        prop_assert_eq!(g0.order, g1.order);
        let pinv = lataut::inverse(&p).unwrap();
        for g in &g0.elements {
            prop_assert!(g1.contains(&lataut::mul(&lataut::mul(&p, g), &pinv)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn stabilizer_equivariance_6_2(seed in any::<u64>()) { stab_case(6, 2, seed)?; }
    #[test]
    fn stabilizer_equivariance_5_3(seed in any::<u64>()) { stab_case(5, 3, seed)?; }
    #[test]
    fn stabilizer_equivariance_4_4(seed in any::<u64>()) { stab_case(4, 4, seed)?; }
    #[test]
    fn fingerprint_invariance_6_2(seed in any::<u64>()) { fp_case(6, 2, seed)?; }
    #[test]
    fn fingerprint_invariance_5_3(seed in any::<u64>()) { fp_case(5, 3, seed)?; }
    #[test]
    fn fingerprint_invariance_4_4(seed in any::<u64>()) { fp_case(4, 4, seed)?; }
}

fn stab_case(m: usize, n: usize, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rows_of(m, n);
    let e = &rows[rng.gen_range(0..rows.len())].tensor;
    let (p, q) = (rational_invertible(m, &mut rng), rational_invertible(n, &mut rng));
    prop_assert!(stabilizer_equivariant(e, &p, &q));
    Ok(())
}

fn fp_case(m: usize, n: usize, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rows_of(m, n);
    let e = &rows[rng.gen_range(0..rows.len())].tensor;
    let (p, q) = (rational_invertible(m, &mut rng), rational_invertible(n, &mut rng));
    prop_assert!(fingerprint_invariant(e, &p, &q));
    Ok(())
}
