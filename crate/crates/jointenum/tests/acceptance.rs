//! Acceptance suite: every release criterion as one test, each printing a
//! pass/fail line with its runtime (visible with `--nocapture`).  All
//! comparisons are exact; the time budgets are asserted as well.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use jointenum::algebra::{Alphabet, Elem};
use jointenum::averaging::{
    avg_cycle_index_groups, avg_intersection_code_induced, avg_intersection_codes,
    avg_intersection_groups, verify_average_identity, AverageMode,
};
use jointenum::codes::{
    JointCode, LinearCode, MAX_CODE_WORDS, MAX_DUAL_SEARCH, MAX_ORBIT_L, MAX_ORBIT_N,
};
use jointenum::cycleindex::{
    joint_cycle_index, t_substitution, TupleData, MAX_CYCLE_TUPLES, MAX_POINTS,
};
use jointenum::enumerators::{cjwe, cwe_genus, lr_cjwe, MAX_ENUM_TUPLES};
use jointenum::macwilliams::{verify_duality, DualPattern};
use jointenum::permgroup::{PermGroup, Permutation, PointSet, MAX_GROUP};
use jointenum::polynomial::{Coeff, Monomial, SparsePoly, Var, VarFamily, XIndex};

fn timed(name: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => {
            println!("criterion {name}: PASS ({elapsed:.2?}, budget {budget:.0?})");
            assert!(
                elapsed < budget,
                "criterion {name} exceeded its {budget:?} budget: {elapsed:?}"
            );
        }
        Err(payload) => {
            println!("criterion {name}: FAIL ({elapsed:.2?})");
            resume_unwind(payload);
        }
    }
}

fn code(alphabet: &Arc<Alphabet>, n: usize, gens: &[&[u8]]) -> Arc<LinearCode> {
    let gens: Vec<Vec<Elem>> = gens
        .iter()
        .map(|row| row.iter().map(|&v| Elem(v)).collect())
        .collect();
    LinearCode::span(alphabet.clone(), n, &gens, MAX_CODE_WORDS).unwrap()
}

fn f2() -> Arc<Alphabet> {
    Alphabet::field(2, 1, None).unwrap()
}

/// C = all of F_2^2 and D = {00, 11}: the standing pair of codes.
fn standing_pair() -> (Arc<LinearCode>, Arc<LinearCode>) {
    let f2 = f2();
    (code(&f2, 2, &[&[0, 1], &[1, 0]]), code(&f2, 2, &[&[1, 1]]))
}

fn field_alphabets() -> Vec<Arc<Alphabet>> {
    vec![
        f2(),
        Alphabet::field(3, 1, None).unwrap(),
        Alphabet::field(2, 2, Some(&[1, 1, 1])).unwrap(),
        Alphabet::field(5, 1, None).unwrap(),
    ]
}

fn random_code(
    rng: &mut ChaCha8Rng,
    alphabet: &Arc<Alphabet>,
    n: usize,
    max_gens: usize,
) -> Arc<LinearCode> {
    let gens = rng.random_range(0..=max_gens);
    let rows: Vec<Vec<Elem>> = (0..gens)
        .map(|_| {
            (0..n)
                .map(|_| Elem(rng.random_range(0..alphabet.size()) as u8))
                .collect()
        })
        .collect();
    LinearCode::span(alphabet.clone(), n, &rows, MAX_CODE_WORDS).unwrap()
}

fn random_joint(
    rng: &mut ChaCha8Rng,
    alphabet: &Arc<Alphabet>,
    n: usize,
    l: usize,
    max_gens: usize,
) -> Arc<JointCode> {
    let components = (0..l)
        .map(|_| random_code(rng, alphabet, n, max_gens))
        .collect();
    JointCode::new(components).unwrap()
}

fn joints_tuple_count(joints: &[Arc<JointCode>]) -> u128 {
    joints.iter().map(|j| j.size()).product()
}

/// Criterion 1: the standing pair reproduces the expected collected joint
/// weight enumerator and the 8 cycle-index summands, through the CLI.
#[test]
fn criterion_1_standing_pair_reproduction() {
    timed("1 (standing pair via CLI)", Duration::from_secs(1), || {
        let dir = std::env::temp_dir().join(format!("jointenum-acc-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let c_path = dir.join("c.json");
        let d_path = dir.join("d.json");
        std::fs::write(
            &c_path,
            r#"{"alphabet":{"kind":"field","p":2},"length":2,"generators":[[0,1],[1,0]]}"#,
        )
        .unwrap();
        std::fs::write(
            &d_path,
            r#"{"alphabet":{"kind":"field","p":2},"length":2,"generators":[[1,1]]}"#,
        )
        .unwrap();
        let args = |cmd: &[&str]| -> Vec<String> {
            let mut v = vec!["jointenum".to_string()];
            v.extend(cmd.iter().map(|s| s.to_string()));
            v
        };

        let mut out = Vec::new();
        let code = jointenum::cli::run_to(
            args(&[
                "enum-cjwe",
                c_path.to_str().unwrap(),
                d_path.to_str().unwrap(),
            ]),
            &mut out,
        );
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
        let produced = SparsePoly::from_json(&value).unwrap();

        let xvar = |u: u8, v: u8| Var::X(XIndex::from_rows(&[vec![u, v]]));
        let mut expected = SparsePoly::zero(VarFamily::x(1, 2));
        for (u, v) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            expected.add_term(Monomial::from_powers(vec![(xvar(u, v), 2)]), Coeff::int(1));
        }
        expected.add_term(
            Monomial::from_powers(vec![(xvar(0, 0), 1), (xvar(1, 0), 1)]),
            Coeff::int(2),
        );
        expected.add_term(
            Monomial::from_powers(vec![(xvar(0, 1), 1), (xvar(1, 1), 1)]),
            Coeff::int(2),
        );
        assert_eq!(produced, expected);

        let mut out = Vec::new();
        let code = jointenum::cli::run_to(
            args(&[
                "cycle-index",
                c_path.to_str().unwrap(),
                d_path.to_str().unwrap(),
            ]),
            &mut out,
        );
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
        let summands = value["summands"].as_array().unwrap();
        assert_eq!(summands.len(), 8);
        let expect = serde_json::json!([
            {"coeff": "1", "tuple": [[[0,0]], [[0,0]]], "cycles": [[1,4]]},
            {"coeff": "1", "tuple": [[[0,0]], [[1,1]]], "cycles": [[2,2]]},
            {"coeff": "1", "tuple": [[[0,1]], [[0,0]]], "cycles": [[1,2],[2,1]]},
            {"coeff": "1", "tuple": [[[0,1]], [[1,1]]], "cycles": [[1,2],[2,1]]},
            {"coeff": "1", "tuple": [[[1,0]], [[0,0]]], "cycles": [[1,2],[2,1]]},
            {"coeff": "1", "tuple": [[[1,0]], [[1,1]]], "cycles": [[1,2],[2,1]]},
            {"coeff": "1", "tuple": [[[1,1]], [[0,0]]], "cycles": [[2,2]]},
            {"coeff": "1", "tuple": [[[1,1]], [[1,1]]], "cycles": [[1,4]]},
        ]);
        assert_eq!(value["summands"], expect);
        std::fs::remove_dir_all(&dir).ok();
    });
}

/// Criterion 2: the substituted cycle index equals the direct (l,r)-fold
/// enumerator on the worked examples and on 50 randomized cases over
/// F_2, F_3, F_4 and F_5.
#[test]
fn criterion_2_substitution_identity_fields() {
    timed(
        "2 (substitution identity, fields)",
        Duration::from_secs(30),
        || {
            let (c, d) = standing_pair();
            let ex1 = [JointCode::single(c.clone()), JointCode::single(d.clone())];
            let z = joint_cycle_index(&ex1, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
            assert_eq!(
                t_substitution(&z).unwrap(),
                lr_cjwe(&ex1, MAX_ENUM_TUPLES).unwrap()
            );

            let ex2 = [
                JointCode::new(vec![c.clone(), d.clone()]).unwrap(),
                JointCode::power(d.clone(), 2),
            ];
            let z = joint_cycle_index(&ex2, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
            assert_eq!(z.num_summands(), 32);
            // anchor two summands of the 2-fold index: the all-zero tuple fixes
            // all 8 points, and ((00/00),(00/11)) translates both coordinates by
            // an order-2 vector
            for (coeff, tuple, cycles) in z.summands().unwrap() {
                let TupleData::Code { mats } = tuple else {
                    panic!()
                };
                let rows: Vec<Vec<Vec<u8>>> = mats.iter().map(|m| m.row_major()).collect();
                if rows == vec![vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]] {
                    assert_eq!(coeff, Coeff::int(1));
                    assert_eq!(cycles, vec![(1, 8)]);
                }
                if rows == vec![vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![1, 1]]] {
                    assert_eq!(cycles, vec![(2, 4)]);
                }
            }
            assert_eq!(
                t_substitution(&z).unwrap(),
                lr_cjwe(&ex2, MAX_ENUM_TUPLES).unwrap()
            );

            let alphabets = field_alphabets();
            let mut rng = ChaCha8Rng::seed_from_u64(0x0201);
            let mut done = 0;
            while done < 50 {
                let alphabet = alphabets[rng.random_range(0..alphabets.len())].clone();
                let n = rng.random_range(2..=5);
                let l = rng.random_range(1..=2);
                let r = rng.random_range(1..=2);
                let joints: Vec<Arc<JointCode>> = (0..r)
                    .map(|_| random_joint(&mut rng, &alphabet, n, l, 2))
                    .collect();
                if joints_tuple_count(&joints) > 20_000 {
                    continue;
                }
                let z = joint_cycle_index(&joints, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
                assert_eq!(
                    t_substitution(&z).unwrap(),
                    lr_cjwe(&joints, MAX_ENUM_TUPLES).unwrap(),
                    "mismatch on {alphabet:?}, n={n}, l={l}, r={r}"
                );
                done += 1;
            }
        },
    );
}

/// Criterion 3: the r = 1 pipeline reproduces the genus-g complete weight
/// enumerator for g in {1, 2} on 20 randomized codes.
#[test]
fn criterion_3_genus_regression() {
    timed("3 (genus pipeline)", Duration::from_secs(10), || {
        let alphabets = field_alphabets();
        let mut rng = ChaCha8Rng::seed_from_u64(0x0301);
        let mut done = 0;
        while done < 20 {
            let alphabet = alphabets[rng.random_range(0..alphabets.len())].clone();
            let n = rng.random_range(2..=5);
            let c = random_code(&mut rng, &alphabet, n, 2);
            if (c.size() as u128).pow(2) > 20_000 {
                continue;
            }
            for genus in 1..=2usize {
                let joints = [JointCode::power(c.clone(), genus)];
                let z = joint_cycle_index(&joints, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
                assert_eq!(
                    t_substitution(&z).unwrap(),
                    cwe_genus(&c, genus, MAX_ENUM_TUPLES).unwrap()
                );
            }
            done += 1;
        }
    });
}

/// The field-side corpus used by the MacWilliams and property criteria.
fn field_corpus() -> Vec<Vec<Arc<JointCode>>> {
    let (c, d) = standing_pair();
    let f3 = Alphabet::field(3, 1, None).unwrap();
    let f4 = Alphabet::field(2, 2, Some(&[1, 1, 1])).unwrap();
    let f5 = Alphabet::field(5, 1, None).unwrap();
    vec![
        vec![JointCode::single(c.clone()), JointCode::single(d.clone())],
        vec![
            JointCode::new(vec![c.clone(), d.clone()]).unwrap(),
            JointCode::power(d.clone(), 2),
        ],
        vec![
            JointCode::single(code(&f3, 2, &[&[1, 2]])),
            JointCode::single(code(&f3, 2, &[&[1, 1]])),
        ],
        vec![JointCode::single(code(&f4, 2, &[&[1, 2]]))],
        vec![JointCode::single(code(&f5, 2, &[&[1, 3]]))],
        vec![JointCode::new(vec![
            code(&f2(), 3, &[&[1, 1, 0]]),
            code(&f2(), 3, &[&[0, 1, 1]]),
        ])
        .unwrap()],
    ]
}

/// Criterion 4: for the standing corpus and every dual pattern, the tensor
/// MacWilliams transform equals the directly enumerated dualised
/// enumerator, with all character sums cancelling to integers.
#[test]
fn criterion_4_macwilliams_fields() {
    timed("4 (MacWilliams, fields)", Duration::from_secs(60), || {
        for joints in field_corpus() {
            for pattern in DualPattern::all(joints.len()) {
                let report =
                    verify_duality(&joints, &pattern, MAX_ENUM_TUPLES, MAX_DUAL_SEARCH).unwrap();
                assert!(report.equal, "pattern {pattern} failed");
                for (_, coeff) in report.rhs.terms() {
                    assert!(
                        coeff.to_integer().is_some(),
                        "non-integer coefficient {coeff} under pattern {pattern}"
                    );
                }
            }
        }
    });
}

/// The ring-side corpus: Z_2, Z_3, Z_4 and Z_6 codes of length at most 4.
fn ring_corpus() -> Vec<Vec<Arc<JointCode>>> {
    let z2 = Alphabet::ring(2).unwrap();
    let z3 = Alphabet::ring(3).unwrap();
    let z4 = Alphabet::ring(4).unwrap();
    let z6 = Alphabet::ring(6).unwrap();
    vec![
        vec![JointCode::single(code(&z2, 3, &[&[1, 1, 0]]))],
        vec![
            JointCode::single(code(&z3, 2, &[&[1, 2]])),
            JointCode::single(code(&z3, 2, &[&[1, 1]])),
        ],
        // the word (1, 2) over Z_4 mixes coordinate orders 4 and 2
        vec![JointCode::single(code(&z4, 2, &[&[1, 2]]))],
        vec![JointCode::new(vec![code(&z4, 2, &[&[1, 2]]), code(&z4, 2, &[&[2, 0]])]).unwrap()],
        vec![
            JointCode::single(code(&z6, 2, &[&[1, 5]])),
            JointCode::single(code(&z6, 2, &[&[2, 2]])),
        ],
        vec![JointCode::single(code(&z6, 3, &[&[3, 2, 0]]))],
    ]
}

/// Criterion 5: the substitution identity and the MacWilliams identity over
/// Z_k — the fixed ring corpus plus randomized codes — including a Z_4
/// summand mixing cycle lengths 2 and 4.
#[test]
fn criterion_5_zk_analogues() {
    timed("5 (Z_k analogues)", Duration::from_secs(60), || {
        let mut saw_mixed_z4 = false;
        let mut check = |joints: &[Arc<JointCode>]| {
            let z = joint_cycle_index(joints, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
            assert_eq!(
                t_substitution(&z).unwrap(),
                lr_cjwe(joints, MAX_ENUM_TUPLES).unwrap()
            );
            if joints[0].alphabet().size() == 4 {
                for (_, _, cycles) in z.summands().unwrap() {
                    let lens: Vec<usize> = cycles.iter().map(|(len, _)| *len).collect();
                    if lens.contains(&2) && lens.contains(&4) {
                        saw_mixed_z4 = true;
                    }
                }
            }
            for pattern in DualPattern::all(joints.len()) {
                let report =
                    verify_duality(joints, &pattern, MAX_ENUM_TUPLES, MAX_DUAL_SEARCH).unwrap();
                assert!(report.equal, "Z_k pattern {pattern} failed");
                for (_, coeff) in report.rhs.terms() {
                    assert!(coeff.to_integer().is_some());
                }
            }
        };
        for joints in ring_corpus() {
            check(&joints);
        }
        let rings: Vec<Arc<Alphabet>> = [2u64, 3, 4, 6]
            .iter()
            .map(|&k| Alphabet::ring(k).unwrap())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x0501);
        let mut done = 0;
        while done < 20 {
            let alphabet = rings[rng.random_range(0..rings.len())].clone();
            // the transform expands degree-n monomials over |A|^l-term rules,
            // so keep l = 2 to the small rings and short lengths
            let l = if alphabet.size() <= 4 && rng.random_bool(0.3) {
                2
            } else {
                1
            };
            let n = if l == 2 || alphabet.size() == 6 {
                rng.random_range(2..=3)
            } else {
                rng.random_range(2..=4)
            };
            let r = rng.random_range(1..=2);
            let joints: Vec<Arc<JointCode>> = (0..r)
                .map(|_| random_joint(&mut rng, &alphabet, n, l, 1))
                .collect();
            if joints_tuple_count(&joints) > 2_000 {
                continue;
            }
            check(&joints);
            done += 1;
        }
        assert!(saw_mixed_z4, "no Z_4 summand mixed cycle lengths 2 and 4");
    });
}

/// Criterion 6: the averaged pair cycle index of the transposition subgroup
/// against the 3-cycle subgroup of S_3, in collected form, and the average
/// intersection number 1.
#[test]
fn criterion_6_s3_average_examples() {
    timed("6 (S_3 averages)", Duration::from_secs(1), || {
        let points = PointSet::Abstract { n: 3 };
        let g1 = PermGroup::closure(
            points,
            &[Permutation::from_cycles(points, &[&[1, 2]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        let g2 = PermGroup::closure(
            points,
            &[Permutation::from_cycles(points, &[&[1, 3, 2]]).unwrap()],
            MAX_GROUP,
        )
        .unwrap();
        let avg = avg_cycle_index_groups(&[&g1, &g2], AverageMode::Distinct).unwrap();
        assert_eq!(avg.orbit_size, 3);
        let z = &avg.value;
        assert_eq!(z.num_summands(), 12);
        let one = Coeff::Rat(BigRational::from_integer(BigInt::from(1)));
        let third = Coeff::Rat(BigRational::new(BigInt::from(1), BigInt::from(3)));
        let mut identity_terms = 0;
        let mut mixed_terms = 0;
        for (coeff, tuple, cycles) in z.summands().unwrap() {
            let TupleData::Group { perms } = tuple else {
                panic!("expected abstract tuples")
            };
            if perms[0].is_identity() {
                // shared across all three copies: collected weight 3 * 1/3
                assert_eq!(coeff, one);
                identity_terms += 1;
                if perms[1].is_identity() {
                    assert_eq!(cycles, vec![(1, 3)]);
                } else {
                    assert_eq!(cycles, vec![(3, 1)]);
                }
            } else {
                assert_eq!(coeff, third);
                assert_eq!(cycles, vec![(1, 1), (2, 1)]);
                mixed_terms += 1;
            }
        }
        assert_eq!(identity_terms, 3);
        assert_eq!(mixed_terms, 9);

        let int = avg_intersection_groups(&g1, &g2, AverageMode::Distinct).unwrap();
        assert_eq!(int.value, BigRational::from_integer(BigInt::from(1)));
    });
}

/// Criterion 7: the direct average enumerator equals the substituted
/// average cycle index on 20 randomized cases, distinct-orbit mode both
/// sides.
#[test]
fn criterion_7_average_identity() {
    timed("7 (average identity)", Duration::from_secs(60), || {
        let f3 = Alphabet::field(3, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x0701);
        let mut done = 0;
        while done < 20 {
            let alphabet = if rng.random_bool(0.5) {
                f2()
            } else {
                f3.clone()
            };
            let l = if rng.random_bool(0.25) { 2 } else { 1 };
            let n = if l == 2 {
                rng.random_range(2..=3)
            } else {
                rng.random_range(2..=5)
            };
            let r = rng.random_range(1..=2);
            let joints: Vec<Arc<JointCode>> = (0..r)
                .map(|_| random_joint(&mut rng, &alphabet, n, l, 1))
                .collect();
            if joints_tuple_count(&joints) > 600 {
                continue;
            }
            let report = verify_average_identity(
                &joints,
                AverageMode::Distinct,
                MAX_ENUM_TUPLES,
                MAX_POINTS,
                MAX_ORBIT_N,
                MAX_ORBIT_L,
            )
            .unwrap();
            assert!(report.equal, "average identity failed at case {done}");
            done += 1;
        }
    });
}

/// Criterion 8: the code-level average intersection number agrees with the
/// induced-group reading on 20 randomized pairs.
#[test]
fn criterion_8_intersection_identity() {
    timed("8 (intersection identity)", Duration::from_secs(30), || {
        let f3 = Alphabet::field(3, 1, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x0801);
        let mut done = 0;
        while done < 20 {
            let alphabet = if rng.random_bool(0.5) {
                f2()
            } else {
                f3.clone()
            };
            let n = rng.random_range(2..=4);
            let c = random_code(&mut rng, &alphabet, n, 2);
            let d = random_code(&mut rng, &alphabet, n, 2);
            let code_side =
                avg_intersection_codes(&c, &d, AverageMode::Distinct, MAX_ORBIT_N).unwrap();
            let group_side = avg_intersection_code_induced(
                &c,
                &d,
                AverageMode::Distinct,
                MAX_ORBIT_N,
                MAX_POINTS,
            )
            .unwrap();
            assert_eq!(code_side.value, group_side.value, "pair {done} disagreed");
            done += 1;
        }
    });
}

/// Criterion 9: structural properties across the full corpus: coefficient
/// sums, monomial degrees, cycle-count conservation, character
/// orthogonality and dual involution.
#[test]
fn criterion_9_property_suites() {
    timed("9 (property suites)", Duration::from_secs(60), || {
        let mut corpus = field_corpus();
        corpus.extend(ring_corpus());

        for joints in &corpus {
            let n = joints[0].length();
            let expected_total: u128 = joints_tuple_count(joints);
            let poly = lr_cjwe(joints, MAX_ENUM_TUPLES).unwrap();
            assert_eq!(
                poly.coefficient_sum(),
                Coeff::Int(BigInt::from(expected_total))
            );
            for degree in poly.degrees() {
                assert_eq!(degree as usize, n);
            }

            let z = joint_cycle_index(joints, MAX_CYCLE_TUPLES, MAX_POINTS).unwrap();
            let points = z.points().size();
            for (_, _, cycles) in z.summands().unwrap() {
                let total: usize = cycles.iter().map(|(len, count)| len * count).sum();
                assert_eq!(total, points);
            }
        }

        // character orthogonality over every alphabet in the corpus
        let mut alphabets = field_alphabets();
        for k in [2u64, 3, 4, 6] {
            alphabets.push(Alphabet::ring(k).unwrap());
        }
        for alphabet in &alphabets {
            for a in alphabet.elements() {
                let mut sum = jointenum::algebra::Cyclotomic::zero(alphabet.character_order());
                for b in alphabet.elements() {
                    sum = sum.add(&alphabet.character(alphabet.mul(a, b)));
                }
                if a == Elem(0) {
                    assert_eq!(
                        sum.as_rational(),
                        Some(BigRational::from_integer(BigInt::from(
                            alphabet.size() as i64
                        )))
                    );
                } else {
                    assert!(sum.is_zero());
                }
            }
        }

        // dual involution over every component code in the corpus
        for joints in &corpus {
            for joint in joints {
                for component in joint.components() {
                    let dual = component.dual(MAX_DUAL_SEARCH).unwrap();
                    let back = dual.dual(MAX_DUAL_SEARCH).unwrap();
                    assert_eq!(back.words(), component.words());
                    let m = component.alphabet().size() as u128;
                    assert_eq!(
                        component.size() as u128 * dual.size() as u128,
                        m.pow(component.length() as u32)
                    );
                }
            }
        }

        // joint enumerators collapse correctly to the pair enumerator
        let (c, d) = standing_pair();
        assert_eq!(
            lr_cjwe(
                &[JointCode::single(c.clone()), JointCode::single(d.clone())],
                MAX_ENUM_TUPLES
            )
            .unwrap(),
            cjwe(&c, &d, MAX_ENUM_TUPLES).unwrap()
        );
    });
}
