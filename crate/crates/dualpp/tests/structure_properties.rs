//! Structure checkers against independent evaluators, and closure of the
//! constructions and representation functors on random inputs.

mod common;

use common::*;
use dualpp::algebra::names::*;
use dualpp::algebra::{dialgebra_sub_adjacent, predpp_sub_adjacent};
use dualpp::catalog;
use dualpp::constructions::{
    average_induced, check_averaging, check_deformation, compatible_prelie_tensor, derivation_induced,
    semiclassical_limit, tensor_dpp, DeformedDialgebra,
};
use dualpp::kernel::{int, sub_vec, unit};
use dualpp::quadratic::{matched_pair_glue, MatchedPairData};
use dualpp::representations::{check_representation, dual_rep, regular_rep, semidirect};
use dualpp::{check_structure, Algebra, Representation, StructureKind, Q};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn is_kind(a: &Algebra<Q>, kind: StructureKind) -> bool {
    check_structure(a, kind).unwrap().passed()
}

/// Linear combination of vectors with integer coefficients.
fn lin(terms: &[(i64, Vec<Q>)]) -> Vec<Q> {
    let n = terms[0].1.len();
    let mut out = vec![int::<Q>(0); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v) {
            *o += int::<Q>(*c) * x;
        }
    }
    out
}

/// One defining identity per kind, written out by hand.
fn direct_residual(kind: StructureKind, a: &Algebra<Q>, x: &[Q], y: &[Q], z: &[Q]) -> (&'static str, Vec<Q>) {
    let m = |op: &str, u: &[Q], v: &[Q]| a.mul(op, u, v).unwrap();
    use StructureKind::*;
    match kind {
        Permutative => (
            "perm-left-comm",
            sub_vec(&m(PERM, &m(PERM, x, y), z), &m(PERM, &m(PERM, y, x), z)),
        ),
        Leibniz => (
            "leibniz",
            lin(&[
                (1, m(BRACKET, x, &m(BRACKET, y, z))),
                (-1, m(BRACKET, &m(BRACKET, x, y), z)),
                (-1, m(BRACKET, y, &m(BRACKET, x, z))),
            ]),
        ),
        Lie => (
            "jacobi",
            lin(&[
                (1, m(LIE, x, &m(LIE, y, z))),
                (1, m(LIE, y, &m(LIE, z, x))),
                (1, m(LIE, z, &m(LIE, x, y))),
            ]),
        ),
        CommutativeAssociative => ("assoc", sub_vec(&m(ASSOC, &m(ASSOC, x, y), z), &m(ASSOC, x, &m(ASSOC, y, z)))),
        Poisson => (
            "poisson-leibniz-rule",
            lin(&[
                (1, m(LIE, x, &m(ASSOC, y, z))),
                (-1, m(ASSOC, &m(LIE, x, y), z)),
                (-1, m(ASSOC, y, &m(LIE, x, z))),
            ]),
        ),
        PreLie => (
            "pre-lie",
            lin(&[
                (1, m(PRELIE, &m(PRELIE, x, y), z)),
                (-1, m(PRELIE, x, &m(PRELIE, y, z))),
                (-1, m(PRELIE, &m(PRELIE, y, x), z)),
                (1, m(PRELIE, y, &m(PRELIE, x, z))),
            ]),
        ),
        Zinbiel => (
            "zinbiel",
            lin(&[
                (1, m(ZINBIEL, x, &m(ZINBIEL, y, z))),
                (-1, m(ZINBIEL, &m(ZINBIEL, x, y), z)),
                (-1, m(ZINBIEL, &m(ZINBIEL, y, x), z)),
            ]),
        ),
        PrePoisson => (
            "pre-poisson-2",
            lin(&[
                (1, m(PRELIE, &m(ZINBIEL, x, y), z)),
                (1, m(PRELIE, &m(ZINBIEL, y, x), z)),
                (-1, m(ZINBIEL, x, &m(PRELIE, y, z))),
                (-1, m(ZINBIEL, y, &m(PRELIE, x, z))),
            ]),
        ),
        DualPrePoisson => (
            "bracket-derives-perm",
            lin(&[
                (1, m(BRACKET, x, &m(PERM, y, z))),
                (-1, m(PERM, &m(BRACKET, x, y), z)),
                (-1, m(PERM, y, &m(BRACKET, x, z))),
            ]),
        ),
        Dialgebra => ("right-left-mixed", sub_vec(&m(LEFT, &m(RIGHT, x, y), z), &m(RIGHT, x, &m(LEFT, y, z)))),
        PrePermutative => ("pre-perm-3", sub_vec(&m(LTRI, &m(RTRI, y, x), z), &m(RTRI, y, &m(LTRI, x, z)))),
        LeibnizDendriform => (
            "leib-dend-2",
            lin(&[(1, m(PREC, &m(SUCC, x, y), z)), (1, m(PREC, &m(PREC, y, x), z))]),
        ),
        PreDualPrePoisson => (
            "pre-dpp-8",
            lin(&[
                (1, m(RTRI, &m(SUCC, x, y), z)),
                (1, m(RTRI, &m(PREC, x, y), z)),
                (1, m(RTRI, &m(SUCC, y, x), z)),
                (1, m(RTRI, &m(PREC, y, x), z)),
            ]),
        ),
        CompatiblePreLie => {
            let (p, q) = (PRELIE, PRELIE2);
            (
                "compatibility",
                lin(&[
                    (1, m(q, &m(p, x, y), z)),
                    (-1, m(q, x, &m(p, y, z))),
                    (1, m(p, &m(q, x, y), z)),
                    (-1, m(p, x, &m(q, y, z))),
                    (-1, m(q, &m(p, y, x), z)),
                    (1, m(q, y, &m(p, x, z))),
                    (-1, m(p, &m(q, y, x), z)),
                    (1, m(p, y, &m(q, x, z))),
                ]),
            )
        }
    }
}

fn random_algebra_of_kind(rng: &mut ChaCha8Rng, kind: StructureKind) -> Algebra<Q> {
    let n = rng.gen_range(2..=3);
    let mut a = Algebra::new(n);
    for op in kind.required_ops() {
        a.insert_op(op, sparse_tensor(rng, n, 3)).unwrap();
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn checkers_agree_with_direct_evaluation(seed in any::<u64>()) {
        let mut rng = rng(seed);
        for kind in StructureKind::ALL {
            let a = random_algebra_of_kind(&mut rng, kind);
            let report = check_structure(&a, kind).unwrap();
            let n = a.dim();
            let mut any_nonzero = false;
            let mut label = "";
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (l, res) = direct_residual(kind, &a, &unit(n, i), &unit(n, j), &unit(n, k));
                        label = l;
                        let w = report.with_label(l).find(|w| w.indices == [i, j, k]);
                        if res.iter().all(|c| *c == int(0)) {
                            prop_assert!(w.is_none(), "{kind} {l} ({i},{j},{k})");
                        } else {
                            any_nonzero = true;
                            prop_assert_eq!(&w.expect("witness").residual, &res);
                        }
                    }
                }
            }
            prop_assert_eq!(report.with_label(label).next().is_some(), any_nonzero);
        }
    }

    #[test]
    fn dpp_restricts_to_perm_and_leibniz(seed in any::<u64>()) {
        let a = random_dpp(&mut rng(seed), 3);
        prop_assert!(is_kind(&a.restrict(&[PERM]).unwrap(), StructureKind::Permutative));
        prop_assert!(is_kind(&a.restrict(&[BRACKET]).unwrap(), StructureKind::Leibniz));
    }

    #[test]
    fn dialgebra_sub_adjacent_is_leibniz(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=3);
        let d = sample(&mut rng, n, &[RIGHT, LEFT], 3, StructureKind::Dialgebra);
        prop_assert!(is_kind(&dialgebra_sub_adjacent(&d).unwrap(), StructureKind::Leibniz));
    }

    #[test]
    fn predpp_sub_adjacent_is_dpp_with_rep(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=3);
        let p = random_predpp(&mut rng, n);
        let (a, rep) = predpp_sub_adjacent(&p).unwrap();
        prop_assert!(is_kind(&a, StructureKind::DualPrePoisson));
        prop_assert!(check_representation(&a, &rep).unwrap().passed());
    }

    #[test]
    fn tensor_products_of_random_dpps(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = random_dpp(&mut rng, 2);
        let b = random_dpp(&mut rng, 2);
        prop_assert!(is_kind(&tensor_dpp(&a, &b).unwrap(), StructureKind::DualPrePoisson));
    }

    #[test]
    fn averaging_operators_induce_dpp(seed in any::<u64>()) {
        let mut rng = rng(seed);
        for (_, a) in catalog::poisson_fixtures::<Q>() {
            let n = a.dim();
            let p = sparse_matrix(&mut rng, n, n, 3);
            if check_averaging(&a, &p).unwrap().passed() {
                prop_assert!(is_kind(&average_induced(&a, &p).unwrap(), StructureKind::DualPrePoisson));
            } else {
                prop_assert!(average_induced(&a, &p).is_err());
            }
        }
    }

    #[test]
    fn derivation_brackets_are_antisymmetric(c in proptest::array::uniform4(-3i64..=3)) {
        let (a, d1, d2) = catalog::derivation_triple::<Q>();
        let mix = |x: i64, y: i64| &d1.scale(&int(x)) + &d2.scale(&int(y));
        let (e1, e2) = (mix(c[0], c[1]), mix(c[2], c[3]));
        let fwd = derivation_induced(&a, &e1, &e2).unwrap();
        let rev = derivation_induced(&a, &e2, &e1).unwrap();
        prop_assert_eq!(fwd.op(BRACKET).unwrap(), &rev.op(BRACKET).unwrap().neg());
        prop_assert!(is_kind(&fwd, StructureKind::DualPrePoisson));
    }

    #[test]
    fn semiclassical_limits_are_dpp(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let d = DeformedDialgebra::new(
            catalog::plane_perm::<Q>(),
            vec![sparse_tensor(&mut rng, 2, 2)],
            vec![sparse_tensor(&mut rng, 2, 2)],
        )
        .unwrap();
        if check_deformation(&d).unwrap().passed() {
            prop_assert!(is_kind(&semiclassical_limit(&d).unwrap(), StructureKind::DualPrePoisson));
        } else {
            prop_assert!(semiclassical_limit(&d).is_err());
        }
    }

    #[test]
    fn compatible_prelie_combinations(k1 in -4i64..=4, k2 in -4i64..=4) {
        for (_, a) in catalog::dpp_fixtures::<Q>().into_iter().filter(|(_, a)| a.dim() <= 3) {
            for (_, b) in catalog::pre_poisson_fixtures::<Q>() {
                let (pl, _) = compatible_prelie_tensor(&a, &b).unwrap();
                let t = pl.op(PRELIE).unwrap().combine(&int(k1), pl.op(PRELIE2).unwrap(), &int(k2));
                let sum = Algebra::new(pl.dim()).with_op(PRELIE, t).unwrap();
                prop_assert!(is_kind(&sum, StructureKind::PreLie));
            }
        }
    }

    #[test]
    fn dual_rep_is_an_involutive_representation(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = catalog::plane::<Q>();
        let m = rng.gen_range(1..=3);
        let rep = random_rep(&mut rng, &a, m, 4);
        let dual = dual_rep(&a, &rep).unwrap();
        prop_assert!(check_representation(&a, &dual).unwrap().passed());
        prop_assert_eq!(dual_rep(&a, &dual).unwrap(), rep);
    }

    #[test]
    fn semidirect_is_dpp_iff_rep(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = random_dpp(&mut rng, 3);
        let n = a.dim();
        let base = if rng.gen_bool(0.5) {
            regular_rep(&a).unwrap()
        } else {
            dual_rep(&a, &regular_rep(&a).unwrap()).unwrap()
        };
        let rep = if rng.gen_bool(0.5) { perturb(&mut rng, &base) } else { base };
        let m = rep.dim_v();
        let mp = MatchedPairData::new(
            a.clone(),
            Algebra::zero(m, StructureKind::DualPrePoisson),
            rep.clone(),
            Representation::zero(m, n),
        )
        .unwrap();
        let glued = matched_pair_glue(&mp).unwrap();
        let is_rep = check_representation(&a, &rep).unwrap().passed();
        prop_assert_eq!(is_kind(&glued, StructureKind::DualPrePoisson), is_rep);
        if is_rep {
            prop_assert_eq!(&semidirect(&a, &rep).unwrap(), &glued);
        }
    }

    #[test]
    fn projection_from_semidirect_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = random_dpp(&mut rng, 3);
        let n = a.dim();
        let m = rng.gen_range(1..=2);
        let rep = random_rep(&mut rng, &a, m, 3);
        let s = semidirect(&a, &rep).unwrap();
        for op in [PERM, BRACKET] {
            for i in 0..n {
                for j in 0..n {
                    let lifted = s.basis_mul(op, i, j).unwrap();
                    let expected = a.basis_mul(op, i, j).unwrap();
                    prop_assert_eq!(&lifted[..n], expected.as_slice());
                    prop_assert!(lifted[n..].iter().all(|c| *c == int(0)));
                }
            }
            for u in n..n + m {
                for v in n..n + m {
                    prop_assert!(s.basis_mul(op, u, v).unwrap().iter().all(|c| *c == int(0)));
                }
            }
        }
    }
}

#[test]
fn regular_reps_of_random_dpps() {
    for seed in 0..20 {
        let a = random_dpp(&mut rng(seed), 3);
        let reg = regular_rep(&a).unwrap();
        assert!(check_representation(&a, &reg).unwrap().passed());
    }
}
