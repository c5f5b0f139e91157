//! Seeded generators of small sparse structures for the property suites.
#![allow(dead_code)]

use dualpp::algebra::names::*;
use dualpp::kernel::int;
use dualpp::quadratic::{check_matched_pair, matched_pair_glue, MatchedPairData};
use dualpp::representations::Representation;
use dualpp::ybe::coregular_rep;
use dualpp::ybe::TensorElement;
use dualpp::{check_structure, Algebra, Matrix, StructureKind, Tensor3, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero coefficient in {−2, −1, 1, 2}.
pub fn coeff(rng: &mut ChaCha8Rng) -> i64 {
    [-2, -1, 1, 2][rng.gen_range(0..4)]
}

/// Up to `max_nnz` random structure constants on an `n`-cube.
pub fn sparse_tensor(rng: &mut ChaCha8Rng, n: usize, max_nnz: usize) -> Tensor3<Q> {
    let k = rng.gen_range(0..=max_nnz);
    let entries: Vec<(usize, usize, usize, i64)> = (0..k)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n), coeff(rng)))
        .collect();
    Tensor3::from_ints(n, &entries)
}

/// Rejection-samples an algebra of `kind` with the given products.
pub fn sample(rng: &mut ChaCha8Rng, n: usize, ops: &[&str], max_nnz: usize, kind: StructureKind) -> Algebra<Q> {
    loop {
        let mut a = Algebra::new(n);
        for op in ops {
            a.insert_op(op, sparse_tensor(rng, n, max_nnz)).unwrap();
        }
        if check_structure(&a, kind).unwrap().passed() {
            return a;
        }
    }
}

pub fn random_dpp(rng: &mut ChaCha8Rng, max_dim: usize) -> Algebra<Q> {
    let n = rng.gen_range(1..=max_dim);
    sample(rng, n, &[PERM, BRACKET], 3, StructureKind::DualPrePoisson)
}

pub fn random_dpp_of_dim(rng: &mut ChaCha8Rng, n: usize) -> Algebra<Q> {
    sample(rng, n, &[PERM, BRACKET], 3, StructureKind::DualPrePoisson)
}

pub fn random_predpp(rng: &mut ChaCha8Rng, n: usize) -> Algebra<Q> {
    sample(rng, n, &[RTRI, LTRI, SUCC, PREC], 2, StructureKind::PreDualPrePoisson)
}

/// Sparse integer matrix with at most `max_nnz` entries.
pub fn sparse_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max_nnz: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(rows, cols);
    for _ in 0..rng.gen_range(0..=max_nnz) {
        let (i, j) = (rng.gen_range(0..rows), rng.gen_range(0..cols));
        m.set(i, j, int(coeff(rng)));
    }
    m
}

/// Random symmetric `r` with at most `max_pairs` symmetric monomial pairs.
pub fn symmetric_r(rng: &mut ChaCha8Rng, n: usize, max_pairs: usize) -> TensorElement<Q> {
    let mut m = Matrix::zeros(n, n);
    for _ in 0..rng.gen_range(0..=max_pairs) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let c: Q = int(coeff(rng));
        m.set(i, j, c.clone());
        m.set(j, i, c);
    }
    TensorElement::new(m)
}

/// Adds one random ±1 to a random entry of a random family matrix.
pub fn perturb(rng: &mut ChaCha8Rng, rep: &Representation<Q>) -> Representation<Q> {
    let mut out = rep.clone();
    let fam = rng.gen_range(0..4);
    let mats = out.families_mut().into_iter().nth(fam).expect("four families");
    if mats.is_empty() {
        return rep.clone();
    }
    let x = rng.gen_range(0..mats.len());
    let m = &mut mats[x];
    if m.rows() == 0 {
        return rep.clone();
    }
    let (i, j) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    let v = m.get(i, j) + int::<Q>(coeff(rng).signum());
    m.set(i, j, v);
    out
}

/// Rejection-samples a representation of `a` on an `m`-dim space whose four
/// families carry at most `max_nnz` nonzero entries in total.
pub fn random_rep(rng: &mut ChaCha8Rng, a: &Algebra<Q>, m: usize, max_nnz: usize) -> Representation<Q> {
    let n = a.dim();
    loop {
        let mut rep = Representation::zero(n, m);
        for _ in 0..rng.gen_range(0..=max_nnz) {
            let fam = rng.gen_range(0..4);
            let x = rng.gen_range(0..n);
            let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
            let c = coeff(rng);
            rep.families_mut().into_iter().nth(fam).expect("four families")[x].set(i, j, int(c));
        }
        if dualpp::representations::check_representation(a, &rep).unwrap().passed() {
            return rep;
        }
    }
}

/// Coregular or zero action families, possibly with one entry perturbed.
pub fn random_families(rng: &mut ChaCha8Rng, a1: &Algebra<Q>, a2: &Algebra<Q>) -> (Representation<Q>, Representation<Q>) {
    let (n1, n2) = (a1.dim(), a2.dim());
    let zero = (Representation::zero(n1, n2), Representation::zero(n2, n1));
    let base = if n1 == n2 && rng.gen_bool(0.7) {
        (
            coregular_rep(a1).unwrap(),
            coregular_rep(a2).unwrap(),
        )
    } else {
        zero
    };
    match rng.gen_range(0..3) {
        0 => base,
        1 => (perturb(rng, &base.0), base.1),
        _ => (base.0, perturb(rng, &base.1)),
    }
}

/// One random matched-pair instance: (equation verdict, glue verdict,
/// whether the report flags a disagreement).
pub fn matched_pair_case(seed: u64) -> (bool, bool, bool) {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=3);
    let a1 = random_dpp_of_dim(&mut rng, n);
    let a2 = if rng.gen_bool(0.5) {
        random_dpp_of_dim(&mut rng, n)
    } else {
        random_dpp(&mut rng, 3)
    };
    let (f1, f2) = random_families(&mut rng, &a1, &a2);
    let mp = MatchedPairData::new(a1, a2, f1, f2).unwrap();
    let report = check_matched_pair(&mp).unwrap();
    let glued = check_structure(&matched_pair_glue(&mp).unwrap(), StructureKind::DualPrePoisson)
        .unwrap()
        .passed();
    let disagreement = report.with_label("glue-agreement").next().is_some();
    (report.passed(), glued, disagreement)
}
