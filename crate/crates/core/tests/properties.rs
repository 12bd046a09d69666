use num_bigint::BigInt;
use osp_core::formal::{expand_product, exterior_power_character, GroupRingElement, ProductFactor};
use osp_core::rootdata::bilinear;
use osp_core::weyl::enumerate_weyl;
use osp_core::{build_root_system, Weight, WeylElement};
use proptest::prelude::*;

const RANK: usize = 3;

fn half_weight(dim: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-6i64..=6, dim).prop_map(|d| Weight::from_halves(&d))
}

fn element(dim: usize) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((half_weight(dim), -4i64..=4), 0..5).prop_map(move |terms| {
        GroupRingElement::from_terms(dim, terms.into_iter().map(|(w, c)| (w, BigInt::from(c)))).unwrap()
    })
}

fn weyl_element(l: usize) -> impl Strategy<Value = WeylElement> {
    let group = enumerate_weyl(l, 6).unwrap();
    (0..group.len()).prop_map(move |i| group[i].clone())
}

proptest! {
    #[test]
    fn ring_associativity(a in element(RANK), b in element(RANK), c in element(RANK)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn ring_distributivity(a in element(RANK), b in element(RANK), c in element(RANK)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn ring_commutativity_and_unit(a in element(2), b in element(2)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&GroupRingElement::one(2)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn weyl_action_is_a_group_action(u in weyl_element(RANK), v in weyl_element(RANK), x in half_weight(RANK)) {
        prop_assert_eq!(u.compose(&v).act(&x).unwrap(), u.act(&v.act(&x).unwrap()).unwrap());
        prop_assert_eq!(u.inverse().act(&u.act(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn weyl_action_preserves_the_form(w in weyl_element(RANK), x in half_weight(RANK), y in half_weight(RANK)) {
        let (wx, wy) = (w.act(&x).unwrap(), w.act(&y).unwrap());
        prop_assert_eq!(bilinear(&wx, &wy).unwrap(), bilinear(&x, &y).unwrap());
    }

    #[test]
    fn lengths_are_multiplicative_in_sign(u in weyl_element(RANK), v in weyl_element(RANK)) {
        prop_assert_eq!(u.compose(&v).sign(), u.sign() * v.sign());
        prop_assert_eq!(u.inverse().length(), u.length());
    }

    #[test]
    fn weyl_maps_are_ring_maps(w in weyl_element(2), a in element(2), b in element(2)) {
        prop_assert_eq!(a.mul(&b).apply_weyl(&w), a.apply_weyl(&w).mul(&b.apply_weyl(&w)));
    }

    #[test]
    fn j_is_linear_over_invariants(a in element(2), r in 0usize..=4) {
        // J(a·b) = J(a)·b for W-stable b
        let rs = build_root_system(2).unwrap();
        let b = exterior_power_character(&rs, r).unwrap();
        prop_assert_eq!(a.mul(&b).j_apply(6).unwrap(), a.j_apply(6).unwrap().mul(&b));
    }

    #[test]
    fn truncation_is_sound(n in 0usize..6, picks in prop::collection::vec((0usize..4, 1usize..3, any::<bool>()), 1..5)) {
        let rs = build_root_system(2).unwrap();
        let roots = rs.positive_roots();
        let factors: Vec<_> = picks
            .iter()
            .map(|&(i, k, inv)| if inv { ProductFactor::geometric(-&roots[i], k) } else { ProductFactor::minus(roots[i].clone(), k) })
            .collect();
        let small = expand_product(2, &factors, n, None).unwrap();
        let big = expand_product(2, &factors, n + 2, None).unwrap();
        prop_assert_eq!(big.truncate(n), small.clone());
        // multiplying truncated series commutes with truncation
        prop_assert_eq!(big.mul(&big).truncate(n), small.mul(&small));
    }
}
