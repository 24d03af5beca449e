//! Properties of the Artin action and liftability.

mod support;

use braidmono::garside::words_equal;
use braidmono::monodromy::{artin_action, MonodromyMorphism};
use braidmono::{BraidWord, FreeGroupWord};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::gen;

fn braid(d: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(d, letters.to_vec()).unwrap()
}

fn act_on_generators(b: &BraidWord) -> Vec<FreeGroupWord> {
    let d = b.strands();
    (1..=d)
        .map(|i| artin_action(b, &FreeGroupWord::generator(d, i).unwrap()).unwrap())
        .collect()
}

#[test]
fn action_respects_braid_relations() {
    for d in 3..=5 {
        for i in 1..(d - 1) {
            let lhs = braid(d, &[i as i32, i as i32 + 1, i as i32]);
            let rhs = braid(d, &[i as i32 + 1, i as i32, i as i32 + 1]);
            assert_eq!(act_on_generators(&lhs), act_on_generators(&rhs));
        }
        for i in 1..d {
            for j in (i + 2)..d {
                let lhs = braid(d, &[i as i32, j as i32]);
                let rhs = braid(d, &[j as i32, i as i32]);
                assert_eq!(act_on_generators(&lhs), act_on_generators(&rhs));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn boundary_word_is_fixed_by_every_braid(
        d in 2usize..=5,
        seed in any::<u64>(),
        len in 0usize..=8,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = gen::random_word(&mut rng, d, len);
        let boundary = FreeGroupWord::boundary(d);
        prop_assert_eq!(artin_action(&b, &boundary).unwrap(), boundary);
    }

    #[test]
    fn action_of_inverse_inverts(
        d in 2usize..=5,
        seed in any::<u64>(),
        len in 0usize..=6,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = gen::random_word(&mut rng, d, len);
        let w = gen::random_word(&mut rng, d, 5);
        let free = FreeGroupWord::new(d, w.letters().to_vec()).unwrap();
        let roundtrip = artin_action(&b.inverse(), &artin_action(&b, &free).unwrap()).unwrap();
        prop_assert_eq!(roundtrip, free);
    }
}

fn theta_d4_n3() -> MonodromyMorphism {
    MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 3), (1, 3), (1, 2)]).unwrap()
}

/// Random element of the liftable subgroup of the d=4, N=3 morphism,
/// written in generators that are checked liftable individually.
fn random_liftable(rng: &mut ChaCha8Rng, len: usize) -> BraidWord {
    let atoms: [&[i32]; 6] = [
        &[2],
        &[-2],
        &[1, 1, 1],
        &[-1, -1, -1],
        &[3, 3, 3],
        &[-3, -3, -3],
    ];
    let mut letters = Vec::new();
    for _ in 0..len {
        let atom = atoms[rand::Rng::gen_range(rng, 0..atoms.len())];
        letters.extend_from_slice(atom);
    }
    braid(4, &letters)
}

#[test]
fn liftable_subgroup_closure() {
    let theta = theta_d4_n3();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for atom in [braid(4, &[2]), braid(4, &[1, 1, 1]), braid(4, &[3, 3, 3])] {
        assert!(theta.is_liftable(&atom).unwrap());
    }
    assert!(!theta.is_liftable(&braid(4, &[1])).unwrap());
    assert!(!theta.is_liftable(&braid(4, &[1, 1])).unwrap());
    for _ in 0..100 {
        let a = random_liftable(&mut rng, 3);
        let b = random_liftable(&mut rng, 3);
        assert!(theta.is_liftable(&a).unwrap());
        assert!(theta.is_liftable(&b).unwrap());
        assert!(theta.is_liftable(&a.multiply(&b).unwrap()).unwrap());
        assert!(theta.is_liftable(&a.inverse()).unwrap());
    }
}

#[test]
fn full_twist_lifts_when_fiber_closes() {
    // Delta^2 acts by conjugation by the boundary word, whose image is the
    // identity for closed-fiber data
    for (d, theta) in [
        (
            2,
            MonodromyMorphism::from_transpositions(2, &[(1, 2), (1, 2)]).unwrap(),
        ),
        (
            4,
            MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 2), (1, 3), (1, 3)]).unwrap(),
        ),
        (4, theta_d4_n3()),
        (
            6,
            MonodromyMorphism::from_transpositions(
                4,
                &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 4), (3, 4)],
            )
            .unwrap(),
        ),
    ] {
        let dsq = BraidWord::delta_power(d, 2).unwrap();
        assert!(theta.is_liftable(&dsq).unwrap(), "d={d}");
    }
}

#[test]
fn induced_morphism_preserves_validity_flags() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let thetas = [
        MonodromyMorphism::from_transpositions(2, &[(1, 2), (1, 2)]).unwrap(),
        MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 2), (1, 3), (1, 3)]).unwrap(),
        theta_d4_n3(),
        // an invalid datum: odd degree, open fiber
        MonodromyMorphism::from_transpositions(2, &[(1, 2), (1, 2), (1, 2)]).unwrap(),
    ];
    for theta in thetas {
        let before = theta.validate();
        for _ in 0..40 {
            let b = gen::random_word(&mut rng, theta.degree(), 6);
            let after = theta.induced_by(&b).unwrap().validate();
            assert_eq!(before.all_transpositions, after.all_transpositions);
            assert_eq!(before.transitive, after.transitive);
            assert_eq!(before.surjective, after.surjective);
            assert_eq!(before.product_is_identity, after.product_is_identity);
            assert_eq!(before.degree_even, after.degree_even);
        }
    }
}

#[test]
fn liftability_is_constant_on_word_problem_classes() {
    let theta = theta_d4_n3();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let b1 = gen::random_word(&mut rng, 4, 6);
        let b2 = gen::equivalent_rewrite(&mut rng, &b1);
        assert!(words_equal(&b1, &b2).unwrap());
        assert_eq!(
            theta.is_liftable(&b1).unwrap(),
            theta.is_liftable(&b2).unwrap()
        );
    }
}
