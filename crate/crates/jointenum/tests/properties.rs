//! Randomised invariants: serialization round-trips, substitution
//! linearity, dual involution, composition laws and the induced-action
//! homomorphism.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use jointenum::algebra::{Alphabet, Elem};
use jointenum::codes::{JointCode, LinearCode, MAX_CODE_WORDS, MAX_DUAL_SEARCH};
use jointenum::cycleindex::{InducedAction, MAX_POINTS};
use jointenum::enumerators::{cjwe, lr_cjwe, MAX_ENUM_TUPLES};
use jointenum::permgroup::{Permutation, PointSet};
use jointenum::polynomial::{Coeff, Monomial, SparsePoly, Var, VarFamily, XIndex};

fn alphabet_strategy() -> impl Strategy<Value = Arc<Alphabet>> {
    prop_oneof![
        Just(Alphabet::field(2, 1, None).unwrap()),
        Just(Alphabet::field(3, 1, None).unwrap()),
        Just(Alphabet::field(2, 2, Some(&[1, 1, 1])).unwrap()),
        Just(Alphabet::ring(4).unwrap()),
        Just(Alphabet::ring(6).unwrap()),
    ]
}

fn code_on(alphabet: &Arc<Alphabet>, n: usize) -> impl Strategy<Value = Arc<LinearCode>> {
    let alphabet = alphabet.clone();
    let m = alphabet.size();
    prop::collection::vec(prop::collection::vec(0..m as u8, n), 0..=2).prop_map(move |rows| {
        let gens: Vec<Vec<Elem>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| Elem(v)).collect())
            .collect();
        LinearCode::span(alphabet.clone(), n, &gens, MAX_CODE_WORDS).unwrap()
    })
}

fn code_strategy() -> impl Strategy<Value = Arc<LinearCode>> {
    (alphabet_strategy(), 1usize..=4).prop_flat_map(|(alphabet, n)| code_on(&alphabet, n))
}

fn code_pair_strategy() -> impl Strategy<Value = (Arc<LinearCode>, Arc<LinearCode>)> {
    (alphabet_strategy(), 1usize..=3)
        .prop_flat_map(|(alphabet, n)| (code_on(&alphabet, n), code_on(&alphabet, n)))
}

fn poly_strategy() -> impl Strategy<Value = SparsePoly> {
    let var = prop::collection::vec(0u8..4, 2).prop_map(|row| Var::X(XIndex::from_rows(&[row])));
    let monomial = prop::collection::vec((var, 1u32..3), 1..3).prop_map(Monomial::from_powers);
    prop::collection::vec((monomial, -6i64..7), 0..6).prop_map(|terms| {
        let mut poly = SparsePoly::zero(VarFamily::x(1, 2));
        for (m, c) in terms {
            poly.add_term(m, Coeff::int(c));
        }
        poly
    })
}

fn hadamard_rules(poly: &SparsePoly) -> BTreeMap<Var, SparsePoly> {
    // x_a -> sum over first-entry flips, a small invertible linear rule
    let mut rules = BTreeMap::new();
    for var in poly.variables() {
        let Var::X(idx) = &var else { unreachable!() };
        let mut image = SparsePoly::zero(poly.family());
        for flip in 0..2u8 {
            let mut rows = idx.row_major();
            rows[0][0] = (rows[0][0] + flip) % 4;
            let sign = if flip == 1 && rows[0][0] % 2 == 0 {
                -1
            } else {
                1
            };
            image.add_term(
                Monomial::var(Var::X(XIndex::from_rows(&rows))),
                Coeff::int(sign),
            );
        }
        rules.insert(var, image);
    }
    rules
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poly_json_round_trip(poly in poly_strategy()) {
        let json = poly.to_json().unwrap();
        let back = SparsePoly::from_json(&json).unwrap();
        prop_assert_eq!(back, poly);
    }

    #[test]
    fn substitution_is_linear(p in poly_strategy(), q in poly_strategy()) {
        let sum = p.add(&q).unwrap();
        let mut rules = hadamard_rules(&sum);
        // rules must also cover vars cancelled in the sum
        for (var, rule) in hadamard_rules(&p) {
            rules.entry(var).or_insert(rule);
        }
        for (var, rule) in hadamard_rules(&q) {
            rules.entry(var).or_insert(rule);
        }
        let lhs = sum.substitute(&rules).unwrap();
        let rhs = p.substitute(&rules).unwrap().add(&q.substitute(&rules).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_involution(code in code_strategy()) {
        let dual = code.dual(MAX_DUAL_SEARCH).unwrap();
        let back = dual.dual(MAX_DUAL_SEARCH).unwrap();
        prop_assert_eq!(back.words(), code.words());
        let m = code.alphabet().size() as u128;
        prop_assert_eq!(
            code.size() as u128 * dual.size() as u128,
            m.pow(code.length() as u32)
        );
    }

    #[test]
    fn compose_laws(images in prop::collection::vec(0usize..6, 6)) {
        let points = PointSet::Abstract { n: 6 };
        // turn an arbitrary vector into a permutation by stable ranking
        let mut order: Vec<usize> = (0..6).collect();
        order.sort_by_key(|&i| (images[i], i));
        let mut img = vec![0u32; 6];
        for (rank, &i) in order.iter().enumerate() {
            img[i] = rank as u32;
        }
        let g = Permutation::from_images(points, img).unwrap();
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        prop_assert_eq!(g.cycle_counts().total_points(), 6);
    }

    #[test]
    fn induced_action_homomorphism(code in code_strategy()) {
        let alphabet = code.alphabet().clone();
        let joint = JointCode::single(code);
        prop_assume!(joint.length() * alphabet.size() <= MAX_POINTS);
        prop_assume!(joint.size() <= 16);
        let action = InducedAction::new(joint.clone(), MAX_POINTS).unwrap();
        for a in joint.elements() {
            for b in joint.elements() {
                let sum = a.add_in(&b, &alphabet);
                let lhs = action.permutation(&sum);
                let rhs = action.permutation(&a).compose(&action.permutation(&b)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn lr_cjwe_collapses_to_cjwe((c, d) in code_pair_strategy()) {
        prop_assume!((c.size() as u128) * (d.size() as u128) <= 4096);
        let joint = lr_cjwe(
            &[JointCode::single(c.clone()), JointCode::single(d.clone())],
            MAX_ENUM_TUPLES,
        )
        .unwrap();
        prop_assert_eq!(joint, cjwe(&c, &d, MAX_ENUM_TUPLES).unwrap());
    }
}
