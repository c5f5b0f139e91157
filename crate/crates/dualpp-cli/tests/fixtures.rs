//! The shipped fixture files are the canonical renderings of the catalog.
//! Set `DUALPP_BLESS=1` to rewrite them.

use std::path::PathBuf;

use dualpp::catalog;
use dualpp::quadratic::standard_form;
use dualpp::representations::regular_rep;
use dualpp::ybe::TensorElement;
use dualpp::{Algebra, Matrix, StructureKind, Q};
use dualpp_cli::fixture::{canonicalize, Canonical, Document};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn expected() -> Vec<(&'static str, Canonical)> {
    let alg = |a: Algebra<Q>| Canonical::new().algebra(&a);
    let op = |m: Matrix<Q>| Canonical::new().matrix("operator", &m);
    let plane = catalog::plane::<Q>();
    let (perm3, d1, d2) = catalog::derivation_triple::<Q>();
    let canonical = catalog::canonical_plane_bialgebra::<Q>();
    vec![
        ("plane.json", alg(plane.clone()).basis(&["e1", "e2"])),
        ("plane-perm.json", alg(catalog::plane_perm())),
        ("plane-regular-rep.json", Canonical::new().representation(&regular_rep(&plane).unwrap())),
        ("plane-double.json", alg(catalog::plane_double()).basis(&["e1", "e2", "e1*", "e2*"])),
        ("standard-form-2.json", Canonical::new().matrix("form", standard_form::<Q>(2).matrix())),
        ("plane-rota-baxter.json", op(catalog::plane_rota_baxter())),
        ("plane-pre-dpp.json", alg(catalog::plane_pre_dpp())),
        ("plane-deformation.json", Canonical::new().deformation(&catalog::plane_deformation())),
        (
            "canonical-plane-double.json",
            alg(canonical.alg().clone()).tensor_element(&catalog::canonical_r(2)),
        ),
        ("canonical-plane-bialgebra.json", Canonical::new().bialgebra(&canonical)),
        ("canonical-r.json", Canonical::new().tensor_element(&catalog::canonical_r(2))),
        ("zero-r-2.json", Canonical::new().tensor_element(&TensorElement::zero(2))),
        (
            "asymmetric-r-2.json",
            Canonical::new().tensor_element(&TensorElement::new(Matrix::from_ints(&[[0, 1], [0, 0]]))),
        ),
        ("zero-dpp-2.json", alg(Algebra::zero(2, StructureKind::DualPrePoisson))),
        ("line-poisson.json", alg(catalog::line_poisson())),
        ("heisenberg-poisson.json", alg(catalog::heisenberg_poisson())),
        ("heisenberg-averaging.json", op(catalog::heisenberg_averaging())),
        ("averaged-heisenberg.json", alg(catalog::averaged_heisenberg())),
        ("heisenberg-poisson-double.json", alg(catalog::heisenberg_poisson_double())),
        ("derivation-perm.json", alg(perm3)),
        ("derivation-d1.json", op(d1)),
        ("derivation-d2.json", op(d2)),
        ("derivation-dpp.json", alg(catalog::derivation_dpp())),
    ]
}

#[test]
fn fixture_files_match_the_catalog() {
    let bless = std::env::var_os("DUALPP_BLESS").is_some();
    for (name, doc) in expected() {
        let path = dir().join(name);
        let text = doc.render();
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, text, "{name} is stale; rerun with DUALPP_BLESS=1");
    }
}

#[test]
fn every_valid_fixture_round_trips() {
    let mut count = 0;
    for entry in std::fs::read_dir(dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path).unwrap();
            let once = canonicalize(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(once, text, "{} is not canonical", path.display());
            assert_eq!(canonicalize(&once).unwrap(), once);
            count += 1;
        }
    }
    assert!(count >= expected().len());
}

#[test]
fn invalid_fixtures_report_their_paths() {
    let cases = [
        ("bad-denominator.json", "$.ops.perm[0][3]"),
        ("index-out-of-range.json", "$.ops.bracket[0][2]"),
        ("duplicate-entry.json", "$.ops.perm[1]"),
    ];
    for (name, path) in cases {
        let file = dir().join("invalid").join(name);
        let err = Document::read(&file).and_then(|d| d.algebra()).unwrap_err();
        assert_eq!(err.path, path, "{name}: {err}");
    }
}

mod round_trip {
    use dualpp::{Algebra, Tensor3, Q};
    use dualpp_cli::fixture::{canonicalize, Canonical, Document};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn algebra() -> impl Strategy<Value = Algebra<Q>> {
        (1usize..=3).prop_flat_map(|n| {
            let entry = (0..n, 0..n, 0..n, -50i64..=50, 1i64..=12);
            (
                Just(n),
                proptest::collection::vec(entry.clone(), 0..6),
                proptest::collection::vec(entry, 0..6),
            )
                .prop_map(|(n, p, b)| {
                    let t = |es: Vec<(usize, usize, usize, i64, i64)>| {
                        Tensor3::from_entries(
                            [n; 3],
                            es.into_iter().map(|(i, j, k, a, d)| (i, j, k, Q::new(BigInt::from(a), BigInt::from(d)))),
                        )
                        .unwrap()
                    };
                    Algebra::new(n).with_op("perm", t(p)).unwrap().with_op("bracket", t(b)).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn parse_serialize_parse_is_identity(a in algebra()) {
            let text = Canonical::new().algebra(&a).render();
            let back = Document::parse("a.json", &text).unwrap().algebra().unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(canonicalize(&text).unwrap(), text);
        }
    }
}
