//! Generative property tests for the exterior algebra and the group action.

use proptest::collection::vec;
use proptest::prelude::*;

use specforms::exterior::{normalize_component, Index};
use specforms::symmetry::SignedPermutation;
use specforms::Form;

/// Strategy: a form of the given shape with entries in {-1, +1} on up to
/// five supports.
fn form_of(d: u8, p: u8) -> impl Strategy<Value = Form> {
    let comp = (vec(1..=d, p as usize), prop_oneof![Just(1i64), Just(-1i64)]);
    vec(comp, 1..6).prop_map(move |comps| {
        let mut f = Form::zero(d, p).expect("shape");
        for (idx, c) in comps {
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == p as usize {
                f.accumulate(&sorted, c).expect("component");
            }
        }
        f
    })
}

fn form_strategy(max_dim: u8) -> impl Strategy<Value = Form> {
    (2..=max_dim).prop_flat_map(|d| (1..=d.min(4)).prop_flat_map(move |p| form_of(d, p)))
}

fn permutation_strategy(d: u8) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((1..=d).collect::<Vec<u8>>()).prop_shuffle(),
        vec(prop_oneof![Just(1i8), Just(-1i8)], d as usize),
    )
        .prop_map(|(images, etas)| SignedPermutation::new(images, &etas).expect("bijection"))
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn normalize_round_trips_permuted_indices(
        base in vec(1u8..=9, 3..6),
        seed in any::<u64>(),
    ) {
        let mut sorted = base.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assume!(sorted.len() >= 3);
        // permute deterministically from the seed
        let mut perm: Vec<Index> = sorted.clone();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let (t1, c1) = normalize_component(&perm, 1i64).expect("distinct");
        prop_assert_eq!(t1.indices(), &sorted[..]);
        // renormalizing the permuted indices with the signed coefficient
        // recovers the stored value: coefficient × permutation sign
        let (t2, c2) = normalize_component(&perm, c1).expect("distinct");
        prop_assert_eq!(&t2, &t1);
        prop_assert_eq!(c2, 1);
    }

    #[test]
    fn double_dual_is_signed_identity(f in form_strategy(8)) {
        let p = f.degree() as usize;
        let q = (f.dim() - f.degree()) as usize;
        let twice = f.hodge_star().hodge_star();
        if (p * q) % 2 == 0 {
            prop_assert_eq!(twice, f);
        } else {
            prop_assert_eq!(twice, f.negate());
        }
    }

    #[test]
    fn wedge_is_graded_anticommutative(
        (a, b) in (4u8..=6).prop_flat_map(|d| {
            (1..=3u8, 1..=3u8).prop_flat_map(move |(p, q)| (form_of(d, p), form_of(d, q)))
        }),
    ) {
        prop_assume!(a.degree() + b.degree() <= a.dim());
        let ab = a.wedge(&b).expect("shapes");
        let ba = b.wedge(&a).expect("shapes");
        let sign = if (a.degree() as usize * b.degree() as usize) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(ab, ba.scale(&sign));
    }

    #[test]
    fn wedge_is_associative(
        (a, b, c) in (5u8..=6).prop_flat_map(|d| {
            (form_of(d, 1), form_of(d, 2), form_of(d, 2))
        }),
    ) {
        let left = a.wedge(&b).expect("shapes").wedge(&c).expect("shapes");
        let right = a.wedge(&b.wedge(&c).expect("shapes")).expect("shapes");
        prop_assert_eq!(left, right);
    }

    #[test]
    fn contraction_is_antisymmetric_in_the_plane(
        f in (4u8..=7).prop_flat_map(|d| (2..=3u8).prop_flat_map(move |p| form_of(d, p))),
    ) {
        let a = f.contract_plane(1, 2).expect("plane");
        let b = f.contract_plane(2, 1).expect("plane");
        prop_assert_eq!(a.negate(), b);
    }

    #[test]
    fn action_is_a_homomorphism(
        (f, g, h) in form_strategy(6).prop_flat_map(|f| {
            let d = f.dim();
            (Just(f), permutation_strategy(d), permutation_strategy(d))
        }),
    ) {
        let lhs = g.compose(&h).act(&f).expect("dims");
        let rhs = g.act(&h.act(&f).expect("dims")).expect("dims");
        prop_assert_eq!(lhs, rhs);
        // action preserves weight and specialness
        let moved = g.act(&f).expect("dims");
        prop_assert_eq!(moved.weight(), f.weight());
        prop_assert_eq!(moved.is_special(), f.is_special());
    }

    #[test]
    fn text_format_round_trips(f in form_strategy(8)) {
        let text = f.to_text();
        let parsed = Form::parse_text(&text).expect("parses");
        prop_assert_eq!(&parsed, &f);
        prop_assert_eq!(parsed.to_text(), text);
    }
}
