//! Invariance properties of the Hurwitz calculus on random factorizations.

mod support;

use braidmono::factorization::{Direction, Factor, FactorKind, Factorization};
use braidmono::garside::normal_form;
use braidmono::monodromy::MonodromyMorphism;
use braidmono::search::{
    hurwitz_equivalent, stable_equivalence_search, EquivOptions, Equivalence, SearchLimits,
};
use braidmono::{BraidWord, CanonicalForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::gen;

fn random_factorization(rng: &mut ChaCha8Rng, strands: usize, factors: usize) -> Factorization {
    let kinds = [
        FactorKind::Tangency,
        FactorKind::PositiveNode,
        FactorKind::NegativeNode,
        FactorKind::Cusp,
    ];
    let list = (0..factors)
        .map(|_| {
            let len = rng.gen_range(0..=5);
            let conjugator = gen::random_word(rng, strands, len);
            Factor::new(conjugator, kinds[rng.gen_range(0..kinds.len())]).unwrap()
        })
        .collect();
    Factorization::new(strands, 1, list).unwrap()
}

fn product_form(f: &Factorization) -> CanonicalForm {
    normal_form(&f.evaluate())
}

#[test]
fn moves_preserve_product_and_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let d = rng.gen_range(2..=4);
        let factors = rng.gen_range(2..=8);
        let f = random_factorization(&mut rng, d, factors);
        let product = product_form(&f);
        let profile = f.profile();
        for position in 1..f.len() {
            for direction in [Direction::Right, Direction::Left] {
                let moved = f.hurwitz_move(position, direction).unwrap();
                assert_eq!(product_form(&moved), product);
                assert_eq!(moved.profile(), profile);
            }
        }
    }
}

#[test]
fn moves_compose_to_identity_both_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..40 {
        let d = rng.gen_range(2..=4);
        let factors = rng.gen_range(2..=6);
        let f = random_factorization(&mut rng, d, factors);
        let position = rng.gen_range(1..f.len());
        let rl = f
            .hurwitz_move(position, Direction::Right)
            .unwrap()
            .hurwitz_move(position, Direction::Left)
            .unwrap();
        let lr = f
            .hurwitz_move(position, Direction::Left)
            .unwrap()
            .hurwitz_move(position, Direction::Right)
            .unwrap();
        assert!(rl.equal_as_braids(&f));
        assert!(lr.equal_as_braids(&f));
    }
}

#[test]
fn conjugations_preserve_product_and_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let d = rng.gen_range(2..=4);
        let f = Factorization::standard(d).unwrap();
        let len = rng.gen_range(0..=4);
        let b = gen::random_word(&mut rng, d, len);
        let conj = f.global_conjugate(&b).unwrap();
        assert!(conj.verify_target());
        assert_eq!(conj.profile(), f.profile());
        // whole-range partial conjugation must coincide with it
        let partial = f.partial_conjugate(1, f.len(), &b).unwrap();
        assert!(partial.equal_as_braids(&conj));
    }
}

#[test]
fn scrambles_keep_the_exponent_audit() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for d in 2..=4 {
        let f = Factorization::standard(d).unwrap();
        for _ in 0..10 {
            let scrambled = f.scramble(30, rng.gen()).unwrap();
            assert!(scrambled.exponent_audit());
            assert!(scrambled.verify_target());
        }
    }
}

#[test]
fn node_pair_roundtrip_random_positions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let d = rng.gen_range(2..=4);
        let factors = rng.gen_range(1..=6);
        let f = random_factorization(&mut rng, d, factors);
        let position = rng.gen_range(1..=f.len() + 1);
        let len = rng.gen_range(0..=4);
        let c = gen::random_word(&mut rng, d, len);
        let created = f.create_node_pair(position, &c, None, None).unwrap();
        assert_eq!(created.len(), f.len() + 2);
        let audit = created.profile();
        assert_eq!(audit.nodes_pos, f.profile().nodes_pos + 1);
        assert_eq!(audit.nodes_neg, f.profile().nodes_neg + 1);
        assert_eq!(product_form(&created), product_form(&f));
        let cancelled = created.cancel_node_pair(position).unwrap();
        assert_eq!(cancelled.factors(), f.factors());
    }
}

#[test]
fn liftability_closed_under_moves() {
    // factors built from liftable pieces of the d=4, N=3 morphism
    let theta =
        MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 3), (1, 3), (1, 2)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let liftable_factors = [
        Factor::new(BraidWord::identity(4), FactorKind::Cusp).unwrap(),
        Factor::of_generator(4, 2, FactorKind::Tangency).unwrap(),
        Factor::of_generator(4, 3, FactorKind::Cusp).unwrap(),
    ];
    for _ in 0..20 {
        let list: Vec<Factor> = (0..5)
            .map(|_| liftable_factors[rng.gen_range(0..liftable_factors.len())].clone())
            .collect();
        let mut f = Factorization::new(4, 1, list).unwrap();
        assert!(f.is_liftable(&theta).unwrap());
        for _ in 0..10 {
            let position = rng.gen_range(1..f.len());
            let direction = if rng.gen_bool(0.5) {
                Direction::Right
            } else {
                Direction::Left
            };
            f = f.hurwitz_move(position, direction).unwrap();
            assert!(f.is_liftable(&theta).unwrap());
        }
    }
}

#[test]
fn stabilization_search_recognizes_scrambles_at_zero_copies() {
    let f = Factorization::standard(3).unwrap();
    let g = f.scramble(40, 12).unwrap();
    let trail = stable_equivalence_search(
        &f,
        &g,
        2,
        &EquivOptions::default(),
        &SearchLimits::default(),
    )
    .unwrap();
    assert_eq!(trail.len(), 1);
    assert!(matches!(trail[0].outcome, Equivalence::Yes(_)));
}

#[test]
fn equivalence_respects_liftability_restriction() {
    let theta =
        MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 3), (1, 3), (1, 2)]).unwrap();
    // liftable on the left (sigma_2 sits over equal transpositions),
    // non-liftable on the right (sigma_1 sits over overlapping ones),
    // with equal profiles
    let liftable = Factorization::new(
        4,
        1,
        vec![Factor::of_generator(4, 2, FactorKind::Tangency).unwrap()],
    )
    .unwrap();
    let unliftable = Factorization::new(
        4,
        1,
        vec![Factor::of_generator(4, 1, FactorKind::Tangency).unwrap()],
    )
    .unwrap();
    assert!(liftable.is_liftable(&theta).unwrap());
    assert!(!unliftable.is_liftable(&theta).unwrap());
    let options = EquivOptions {
        restrict_liftable: Some(theta),
        ..EquivOptions::default()
    };
    let outcome =
        hurwitz_equivalent(&liftable, &unliftable, &options, &SearchLimits::default()).unwrap();
    assert!(matches!(
        outcome,
        Equivalence::No(braidmono::search::NoReason::LiftabilityMismatch)
    ));
}
