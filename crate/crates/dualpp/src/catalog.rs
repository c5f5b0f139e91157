//! Small worked instances used by tests, the CLI and documentation.
//!
//! Basis vectors are 0-based: `e₁` is index 0.

use crate::algebra::names::*;
use crate::algebra::{Algebra, StructureKind};
use crate::constructions::{DeformedDialgebra, LinearOperator};
use crate::kernel::{frac, Field, Matrix, Tensor3};
use crate::quadratic::{BialgebraData, Coproduct};
use crate::ybe::TensorElement;

/// 2-dim dual pre-Poisson algebra `e₂∘e₂ = [e₂,e₂] = e₁`.
pub fn plane<S: Field>() -> Algebra<S> {
    Algebra::from_ints(2, &[(PERM, &[(1, 1, 0, 1)]), (BRACKET, &[(1, 1, 0, 1)])])
}

/// The permutative part of [`plane`].
pub fn plane_perm<S: Field>() -> Algebra<S> {
    Algebra::from_ints(2, &[(PERM, &[(1, 1, 0, 1)])])
}

/// 1-dim permutative algebra `e∘e = e`.
pub fn line_perm<S: Field>() -> Algebra<S> {
    Algebra::from_ints(1, &[(PERM, &[(0, 0, 0, 1)])])
}

/// 1-dim Poisson algebra `e•e = e` with zero bracket.
pub fn line_poisson<S: Field>() -> Algebra<S> {
    Algebra::from_ints(1, &[(ASSOC, &[(0, 0, 0, 1)]), (LIE, &[])])
}

/// 3-dim Poisson algebra `e₁•e₂ = e₃`, `{e₁,e₂} = 2e₃`.
pub fn heisenberg_poisson<S: Field>() -> Algebra<S> {
    Algebra::from_ints(
        3,
        &[
            (ASSOC, &[(0, 1, 2, 1), (1, 0, 2, 1)]),
            (LIE, &[(0, 1, 2, 2), (1, 0, 2, -2)]),
        ],
    )
}

/// The averaging operator `P(e₁) = e₁`, `P(e₂) = P(e₃) = 0` on [`heisenberg_poisson`].
pub fn heisenberg_averaging<S: Field>() -> LinearOperator<S> {
    Matrix::diag(vec![S::one(), S::zero(), S::zero()])
}

/// The dual pre-Poisson algebra `e₁∘e₂ = e₃`, `[e₁,e₂] = 2e₃` induced by
/// [`heisenberg_averaging`].
pub fn averaged_heisenberg<S: Field>() -> Algebra<S> {
    Algebra::from_ints(3, &[(PERM, &[(0, 1, 2, 1)]), (BRACKET, &[(0, 1, 2, 2)])])
}

/// 6-dim semidirect sum of [`heisenberg_poisson`] with its coregular
/// module, basis `(e₁, e₂, e₃, e₁*, e₂*, e₃*)`.
pub fn heisenberg_poisson_double<S: Field>() -> Algebra<S> {
    Algebra::from_ints(
        6,
        &[
            (PERM, &[(0, 1, 2, 1), (1, 0, 2, 1), (0, 5, 4, 1), (1, 5, 3, 1)]),
            (BRACKET, &[(0, 1, 2, 2), (1, 0, 2, -2), (0, 5, 4, -2), (1, 5, 3, 2)]),
        ],
    )
}

/// Coregular double of [`plane`], basis `(e₁, e₂, e₁*, e₂*)`.
pub fn plane_double<S: Field>() -> Algebra<S> {
    Algebra::from_ints(
        4,
        &[
            (PERM, &[(1, 1, 0, 1), (1, 2, 3, 1)]),
            (BRACKET, &[(1, 1, 0, 1), (1, 2, 3, -1), (2, 1, 3, 2)]),
        ],
    )
}

/// Permutative part of [`plane_double`]: the coregular double of [`plane_perm`].
pub fn plane_perm_double<S: Field>() -> Algebra<S> {
    Algebra::from_ints(4, &[(PERM, &[(1, 1, 0, 1), (1, 2, 3, 1)])])
}

/// Rota-Baxter operator `P(e₁) = ½e₁`, `P(e₂) = e₂` on [`plane`].
pub fn plane_rota_baxter<S: Field>() -> LinearOperator<S> {
    Matrix::diag(vec![frac(1, 2), S::one()])
}

/// Pre-dual pre-Poisson algebra `e₂▷e₂ = e₂◁e₂ = e₂≺e₂ = e₂≻e₂ = e₁`
/// induced by [`plane_rota_baxter`].
pub fn plane_pre_dpp<S: Field>() -> Algebra<S> {
    let one: &[(usize, usize, usize, i64)] = &[(1, 1, 0, 1)];
    Algebra::from_ints(2, &[(RTRI, one), (LTRI, one), (SUCC, one), (PREC, one)])
}

/// Sub-adjacent algebra of [`plane_pre_dpp`]: `e₂∘e₂ = [e₂,e₂] = 2e₁`.
pub fn doubled_plane<S: Field>() -> Algebra<S> {
    Algebra::from_ints(2, &[(PERM, &[(1, 1, 0, 2)]), (BRACKET, &[(1, 1, 0, 2)])])
}

/// The 4-dim algebra carrying the canonical solution built from
/// [`plane_pre_dpp`]: `e₂∘e₂ = [e₂,e₂] = 2e₁`, `e₂∘e₁* = e₂*`,
/// `[e₂,e₁*] = −e₂*`, `[e₁*,e₂] = 2e₂*`.
pub fn canonical_plane_double<S: Field>() -> Algebra<S> {
    Algebra::from_ints(
        4,
        &[
            (PERM, &[(1, 1, 0, 2), (1, 2, 3, 1)]),
            (BRACKET, &[(1, 1, 0, 2), (1, 2, 3, -1), (2, 1, 3, 2)]),
        ],
    )
}

/// `r = Σᵢ (eᵢ⊗eᵢ* + eᵢ*⊗eᵢ)` on a `2n`-dim double.
pub fn canonical_r<S: Field>(n: usize) -> TensorElement<S> {
    crate::ybe::canonical_r(n)
}

/// Coproducts of [`canonical_r`] on [`canonical_plane_double`]:
/// `δ∘(e₂) = e₂*⊗e₁`, `δ[,](e₂) = 2e₁⊗e₂* − e₂*⊗e₁`,
/// `δ∘(e₁*) = δ[,](e₁*) = 2e₂*⊗e₂*`.
pub fn canonical_plane_bialgebra<S: Field>() -> BialgebraData<S> {
    let t = |e: &[(usize, usize, usize, i64)]| Coproduct::new(Tensor3::from_ints(4, e)).expect("cube");
    BialgebraData::new(
        canonical_plane_double(),
        t(&[(1, 3, 0, 1), (2, 3, 3, 2)]),
        t(&[(1, 0, 3, 2), (1, 3, 0, -1), (2, 3, 3, 2)]),
    )
    .expect("consistent dimensions")
}

/// 3-dim permutative algebra `e₁∘e₂ = e₃` with commuting derivations
/// `D₁ = diag(−1, 1, 0)` and `D₂ = diag(−1, 0, −1)`.
///
/// Found by exhaustive search over 3-dim permutative algebras with at most
/// three nonzero constants in {−2..2} and derivations with at most two
/// nonzero entries in {−1, 1}, ranked by sparsity.
pub fn derivation_triple<S: Field>() -> (Algebra<S>, LinearOperator<S>, LinearOperator<S>) {
    (
        Algebra::from_ints(3, &[(PERM, &[(0, 1, 2, 1)])]),
        Matrix::from_ints(&[[-1, 0, 0], [0, 1, 0], [0, 0, 0]]),
        Matrix::from_ints(&[[-1, 0, 0], [0, 0, 0], [0, 0, -1]]),
    )
}

/// The dual pre-Poisson algebra `e₁∘e₂ = e₃`, `[e₁,e₂] = e₃` induced by
/// [`derivation_triple`].
pub fn derivation_dpp<S: Field>() -> Algebra<S> {
    Algebra::from_ints(3, &[(PERM, &[(0, 1, 2, 1)]), (BRACKET, &[(0, 1, 2, 1)])])
}

/// Lift of [`derivation_triple`] to the 6-dim coregular double of its
/// permutative algebra: `D ↦ D ⊕ (−Dᵀ)`, skew for the standard form.
pub fn skew_derivation_triple<S: Field>() -> (Algebra<S>, LinearOperator<S>, LinearOperator<S>) {
    let (_, d1, d2) = derivation_triple::<S>();
    let lift = |d: &Matrix<S>| {
        let dt = d.transpose();
        Matrix::from_fn(6, 6, |i, j| match (i < 3, j < 3) {
            (true, true) => d.get(i, j).clone(),
            (false, false) => -dt.get(i - 3, j - 3).clone(),
            _ => S::zero(),
        })
    };
    // e₁∘e₂ = e₃, e₁∘e₃* = e₃*∘e₁ = e₂*, e₃*∘e₂ = −e₁*.
    let perm = Algebra::from_ints(
        6,
        &[(PERM, &[(0, 1, 2, 1), (0, 5, 4, 1), (5, 0, 4, 1), (5, 1, 3, -1)])],
    );
    (perm, lift(&d1), lift(&d2))
}

/// 2-dim pre-Poisson algebra with Zinbiel product `e₁⊙e₁ = e₂` and zero ⋄.
pub fn zinbiel_plane<S: Field>() -> Algebra<S> {
    Algebra::from_ints(2, &[(PRELIE, &[]), (ZINBIEL, &[(0, 0, 1, 1)])])
}

/// Order-1 deformation of [`plane_perm`] with `e₂▷₁e₂ = e₁`, `◁₁ = 0`;
/// its semi-classical limit is [`plane`].
pub fn plane_deformation<S: Field>() -> DeformedDialgebra<S> {
    DeformedDialgebra::new(
        plane_perm(),
        vec![Tensor3::from_ints(2, &[(1, 1, 0, 1)])],
        vec![Tensor3::zero_cube(2)],
    )
    .expect("consistent layers")
}

/// Named dual pre-Poisson fixtures.
pub fn dpp_fixtures<S: Field>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("plane", plane()),
        ("doubled-plane", doubled_plane()),
        ("averaged-heisenberg", averaged_heisenberg()),
        ("derivation-dpp", derivation_dpp()),
        ("plane-double", plane_double()),
        ("canonical-plane-double", canonical_plane_double()),
        ("heisenberg-poisson-double", heisenberg_poisson_double()),
        ("zero-2", Algebra::zero(2, StructureKind::DualPrePoisson)),
    ]
}

/// Named permutative fixtures.
pub fn perm_fixtures<S: Field>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("line-perm", line_perm()),
        ("plane-perm", plane_perm()),
        ("derivation-perm", derivation_triple().0),
        ("plane-perm-double", plane_perm_double()),
    ]
}

/// Named Poisson fixtures.
pub fn poisson_fixtures<S: Field>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("line-poisson", line_poisson()),
        ("heisenberg-poisson", heisenberg_poisson()),
    ]
}

/// Named pre-Poisson fixtures.
pub fn pre_poisson_fixtures<S: Field>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("zinbiel-plane", zinbiel_plane()),
        ("zero-1", Algebra::zero(1, StructureKind::PrePoisson)),
    ]
}

/// Named pre-dual pre-Poisson fixtures.
pub fn pre_dpp_fixtures<S: Field>() -> Vec<(&'static str, Algebra<S>)> {
    vec![
        ("plane-pre-dpp", plane_pre_dpp()),
        ("zero-2", Algebra::zero(2, StructureKind::PreDualPrePoisson)),
    ]
}
