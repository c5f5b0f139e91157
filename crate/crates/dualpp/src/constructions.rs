//! Ways to manufacture dual pre-Poisson algebras: tensor products,
//! averaging operators, commuting derivations, Poisson-module semidirect
//! sums, compatible pre-Lie products and diassociative deformations.

use crate::algebra::names::*;
use crate::algebra::{check_identities, check_structure, require, Algebra, Identity, StructureKind};
use crate::error::{Error, Result};
use crate::kernel::{sub_vec, unit, Field, Matrix, Tensor3, Q};
use crate::report::{ReportBuilder, VerificationReport};
use crate::representations::{semidirect_products, star, Representation};

/// A linear endomorphism of an algebra, as a square matrix acting on columns.
pub type LinearOperator<S = Q> = Matrix<S>;

fn require_square<S: Field>(p: &Matrix<S>, n: usize, what: &str) -> Result<(), S> {
    if p.rows() != n || p.cols() != n {
        return Err(Error::Dimension(format!(
            "{what} is {}x{}, expected {n}x{n}",
            p.rows(),
            p.cols()
        )));
    }
    Ok(())
}

/// Product on `A⊗B` from products on the factors, basis index `i·dim(B) + j`.
pub fn tensor_op<S: Field>(ta: &Tensor3<S>, tb: &Tensor3<S>) -> Tensor3<S> {
    let na = ta.extents()[0];
    let nb = tb.extents()[0];
    let d = na * nb;
    let mut entries = Vec::with_capacity(ta.nnz() * tb.nnz());
    for (i1, j1, k1, c1) in ta.entries() {
        for (i2, j2, k2, c2) in tb.entries() {
            entries.push((i1 * nb + i2, j1 * nb + j2, k1 * nb + k2, c1.mul_ref(c2)));
        }
    }
    Tensor3::from_entries([d, d, d], entries).expect("tensor indices in range")
}

/// `(x⊗a)∘(y⊗b) = x∘y ⊗ a∘b`, `[x⊗a, y⊗b] = [x,y]⊗a∘b + x∘y⊗[a,b]`.
pub fn tensor_dpp<S: Field>(a: &Algebra<S>, b: &Algebra<S>) -> Result<Algebra<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require(b, StructureKind::DualPrePoisson)?;
    let perm = tensor_op(a.op(PERM)?, b.op(PERM)?);
    let bracket = tensor_op(a.op(BRACKET)?, b.op(PERM)?).add(&tensor_op(a.op(PERM)?, b.op(BRACKET)?));
    Algebra::new(a.dim() * b.dim())
        .with_op(PERM, perm)?
        .with_op(BRACKET, bracket)
}

/// Permutative ⊗ Poisson: `(x⊗a)∘(y⊗b) = x∘y⊗a•b`, `[x⊗a, y⊗b] = x∘y⊗{a,b}`.
pub fn tensor_perm_poisson<S: Field>(a: &Algebra<S>, b: &Algebra<S>) -> Result<Algebra<S>, S> {
    require(a, StructureKind::Permutative)?;
    require(b, StructureKind::Poisson)?;
    Algebra::new(a.dim() * b.dim())
        .with_op(PERM, tensor_op(a.op(PERM)?, b.op(ASSOC)?))?
        .with_op(BRACKET, tensor_op(a.op(PERM)?, b.op(LIE)?))
}

/// Checks `P(x)•P(y) = P(P(x)•y)` and `{P(x),P(y)} = P({P(x),y})`.
pub fn check_averaging<S: Field>(a: &Algebra<S>, p: &LinearOperator<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::Poisson)?;
    let n = a.dim();
    require_square(p, n, "averaging operator")?;
    let mut report = ReportBuilder::new(["assoc-average", "lie-average"]);
    for (label, op) in [("assoc-average", ASSOC), ("lie-average", LIE)] {
        for i in 0..n {
            for j in 0..n {
                let px = p.column(i);
                let lhs = a.mul(op, &px, &p.column(j))?;
                let rhs = p.apply(&a.mul(op, &px, &unit(n, j))?);
                report.check(label, &[i, j], sub_vec(&lhs, &rhs));
            }
        }
    }
    Ok(report.finish())
}

/// `x∘y = P(x)•y`, `[x,y] = {P(x),y}` for an averaging operator `P`.
pub fn average_induced<S: Field>(a: &Algebra<S>, p: &LinearOperator<S>) -> Result<Algebra<S>, S> {
    let report = check_averaging(a, p)?;
    if !report.passed() {
        return Err(Error::precondition("operator is not averaging", report));
    }
    let n = a.dim();
    let induced = |op: &str| -> Result<Tensor3<S>, S> {
        let t = a.op(op)?;
        Ok(Tensor3::from_table(n, n, n, |i, j| t.apply(&p.column(i), &unit(n, j))))
    };
    Algebra::new(n)
        .with_op(PERM, induced(ASSOC)?)?
        .with_op(BRACKET, induced(LIE)?)
}

/// Checks `D(x∘y) = D(x)∘y + x∘D(y)` on basis pairs.
pub fn check_derivation<S: Field>(a: &Algebra<S>, d: &LinearOperator<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::Permutative)?;
    let n = a.dim();
    require_square(d, n, "derivation")?;
    let t = a.op(PERM)?;
    let mut report = ReportBuilder::new(["leibniz-rule"]);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let lhs = d.apply(&t.apply(&x, &y));
            let r1 = t.apply(&d.column(i), &y);
            let r2 = t.apply(&x, &d.column(j));
            report.check("leibniz-rule", &[i, j], sub_vec(&sub_vec(&lhs, &r1), &r2));
        }
    }
    Ok(report.finish())
}

/// Keeps `∘` and sets `[x,y] = D₁(x)∘D₂(y) − D₂(x)∘D₁(y)` for commuting derivations.
pub fn derivation_induced<S: Field>(
    a: &Algebra<S>,
    d1: &LinearOperator<S>,
    d2: &LinearOperator<S>,
) -> Result<Algebra<S>, S> {
    for (name, d) in [("D1", d1), ("D2", d2)] {
        let report = check_derivation(a, d)?;
        if !report.passed() {
            return Err(Error::precondition(format!("{name} is not a derivation"), report));
        }
    }
    let n = a.dim();
    let comm = &(d1 * d2) - &(d2 * d1);
    let mut report = ReportBuilder::new(["commutator"]);
    for i in 0..n {
        report.check("commutator", &[i], comm.column(i));
    }
    let report = report.finish();
    if !report.passed() {
        return Err(Error::precondition("derivations do not commute", report));
    }
    let t = a.op(PERM)?;
    let bracket = Tensor3::from_table(n, n, n, |i, j| {
        sub_vec(
            &t.apply(&d1.column(i), &d2.column(j)),
            &t.apply(&d2.column(i), &d1.column(j)),
        )
    });
    Algebra::new(n).with_op(PERM, t.clone())?.with_op(BRACKET, bracket)
}

/// A module over a Poisson algebra: `μ` for `•` and `ρ` for `{,}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoissonRepresentation<S = Q> {
    dim_v: usize,
    mu: Vec<Matrix<S>>,
    rho: Vec<Matrix<S>>,
}

impl<S: Field> PoissonRepresentation<S> {
    pub fn new(dim_v: usize, mu: Vec<Matrix<S>>, rho: Vec<Matrix<S>>) -> Result<Self, S> {
        if mu.len() != rho.len() {
            return Err(Error::Dimension("mu and rho have different lengths".into()));
        }
        if mu.iter().chain(&rho).any(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(Error::Dimension(format!("action matrices must be {dim_v}x{dim_v}")));
        }
        Ok(PoissonRepresentation { dim_v, mu, rho })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        PoissonRepresentation {
            dim_v: m,
            mu: vec![Matrix::zeros(m, m); n],
            rho: vec![Matrix::zeros(m, m); n],
        }
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn mu(&self) -> &[Matrix<S>] {
        &self.mu
    }

    pub fn rho(&self) -> &[Matrix<S>] {
        &self.rho
    }
}

/// `μ = L•`, `ρ = ad`.
pub fn regular_poisson_rep<S: Field>(a: &Algebra<S>) -> Result<PoissonRepresentation<S>, S> {
    require(a, StructureKind::Poisson)?;
    PoissonRepresentation::new(a.dim(), a.left_muls(ASSOC)?, a.left_muls(LIE)?)
}

/// `μ = −L•*`, `ρ = ad*` on the dual space.
pub fn coregular_poisson_rep<S: Field>(a: &Algebra<S>) -> Result<PoissonRepresentation<S>, S> {
    let reg = regular_poisson_rep(a)?;
    PoissonRepresentation::new(
        a.dim(),
        reg.mu.iter().map(|m| -star(m)).collect(),
        reg.rho.iter().map(star).collect(),
    )
}

/// Checks the module axioms of a Poisson representation on basis pairs.
pub fn check_poisson_representation<S: Field>(
    a: &Algebra<S>,
    rep: &PoissonRepresentation<S>,
) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::Poisson)?;
    let n = a.dim();
    if rep.mu.len() != n {
        return Err(Error::Dimension(format!(
            "representation has {} matrices, algebra has dimension {n}",
            rep.mu.len()
        )));
    }
    let m = rep.dim_v;
    let comb = |f: &[Matrix<S>], v: &[S]| crate::representations::combine(f, v, m);
    let flat = |x: Matrix<S>| x.data().to_vec();
    let (mu, rho) = (&rep.mu, &rep.rho);
    let mut report = ReportBuilder::new(["mu-assoc", "rho-lie", "rho-of-product", "mu-of-bracket"]);
    for x in 0..n {
        for y in 0..n {
            let xy = a.basis_mul(ASSOC, x, y)?;
            let bxy = a.basis_mul(LIE, x, y)?;
            let idx = [x, y];
            report.check("mu-assoc", &idx, flat(&comb(mu, &xy) - &(&mu[x] * &mu[y])));
            report.check(
                "rho-lie",
                &idx,
                flat(&(&comb(rho, &bxy) - &(&rho[x] * &rho[y])) + &(&rho[y] * &rho[x])),
            );
            report.check(
                "rho-of-product",
                &idx,
                flat(&(&comb(rho, &xy) - &(&mu[y] * &rho[x])) - &(&mu[x] * &rho[y])),
            );
            report.check(
                "mu-of-bracket",
                &idx,
                flat(&(&comb(mu, &bxy) - &(&rho[x] * &mu[y])) + &(&mu[y] * &rho[x])),
            );
        }
    }
    Ok(report.finish())
}

/// `(x+u)∘(y+v) = x•y + μ(x)v`, `[x+u, y+v] = {x,y} + ρ(x)v`, `A`-indices first.
pub fn poisson_rep_semidirect<S: Field>(
    a: &Algebra<S>,
    rep: &PoissonRepresentation<S>,
) -> Result<Algebra<S>, S> {
    let report = check_poisson_representation(a, rep)?;
    if !report.passed() {
        return Err(Error::precondition("input is not a Poisson representation", report));
    }
    let n = a.dim();
    let m = rep.dim_v;
    let zeros = vec![Matrix::zeros(m, m); n];
    let r = Representation::new(m, rep.mu.clone(), zeros.clone(), rep.rho.clone(), zeros)?;
    semidirect_products(&a.renamed(&[(ASSOC, PERM), (LIE, BRACKET)])?, &r)
}

/// `(x⊗a)⋄₁(y⊗b) = (x∘y)⊗(a⋄b)` and `(x⊗a)⋄₂(y⊗b) = [x,y]⊗(a⊙b)` on `A⊗B`,
/// with the commutator Lie brackets of both.
pub fn compatible_prelie_tensor<S: Field>(
    a: &Algebra<S>,
    b: &Algebra<S>,
) -> Result<(Algebra<S>, Algebra<S>), S> {
    require(a, StructureKind::DualPrePoisson)?;
    require(b, StructureKind::PrePoisson)?;
    let d = a.dim() * b.dim();
    let p1 = tensor_op(a.op(PERM)?, b.op(PRELIE)?);
    let p2 = tensor_op(a.op(BRACKET)?, b.op(ZINBIEL)?);
    let commutator = |t: &Tensor3<S>| t.sub(&t.permute_axes([1, 0, 2]));
    let lie = Algebra::new(d)
        .with_op(LIE, commutator(&p1))?
        .with_op(LIE2, commutator(&p2))?;
    let prelie = Algebra::new(d).with_op(PRELIE, p1)?.with_op(PRELIE2, p2)?;
    Ok((prelie, lie))
}

/// Second bracket of a compatible Lie pair.
pub const LIE2: &str = "lie2";

/// Checks that `lie`, `lie2` and their sum are Lie brackets.
pub fn check_compatible_lie<S: Field>(alg: &Algebra<S>) -> Result<VerificationReport<S>, S> {
    let first = check_structure(&alg.restrict(&[LIE])?, StructureKind::Lie)?;
    let second = check_structure(&alg.renamed(&[(LIE2, LIE)])?, StructureKind::Lie)?;
    let sum = Algebra::new(alg.dim()).with_op(LIE, alg.op(LIE)?.add(alg.op(LIE2)?))?;
    let sum = check_structure(&sum, StructureKind::Lie)?;
    Ok(VerificationReport::concat([
        first.prefixed("lie"),
        second.prefixed("lie2"),
        sum.prefixed("sum"),
    ]))
}

/// Polynomial deformation `x▷_ħ y = Σ ħ^i x▷_i y`, `x◁_ħ y = Σ ħ^i x◁_i y`
/// of a permutative algebra, with `x▷₀y = x∘y = y◁₀x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeformedDialgebra<S = Q> {
    base: Algebra<S>,
    right_layers: Vec<Tensor3<S>>,
    left_layers: Vec<Tensor3<S>>,
}

impl<S: Field> DeformedDialgebra<S> {
    /// `right_layers[i]` and `left_layers[i]` hold ▷_{i+1} and ◁_{i+1}.
    pub fn new(base: Algebra<S>, right_layers: Vec<Tensor3<S>>, left_layers: Vec<Tensor3<S>>) -> Result<Self, S> {
        let n = base.dim();
        base.op(PERM)?;
        if right_layers.len() != left_layers.len() {
            return Err(Error::Dimension("right and left layer counts differ".into()));
        }
        if right_layers.iter().chain(&left_layers).any(|t| t.extents() != [n; 3]) {
            return Err(Error::Dimension(format!("layers must have extents {:?}", [n; 3])));
        }
        Ok(DeformedDialgebra {
            base,
            right_layers,
            left_layers,
        })
    }

    pub fn base(&self) -> &Algebra<S> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.right_layers.len()
    }

    pub fn right_layers(&self) -> &[Tensor3<S>] {
        &self.right_layers
    }

    pub fn left_layers(&self) -> &[Tensor3<S>] {
        &self.left_layers
    }

    /// All layers including degree zero as named products `right{i}`, `left{i}`.
    fn layered(&self) -> Result<Algebra<S>, S> {
        let mut a = Algebra::new(self.base.dim());
        a.insert_op("right0", self.base.op(PERM)?.clone())?;
        a.insert_op("left0", self.base.opposite(PERM)?)?;
        for (i, (r, l)) in self.right_layers.iter().zip(&self.left_layers).enumerate() {
            a.insert_op(&format!("right{}", i + 1), r.clone())?;
            a.insert_op(&format!("left{}", i + 1), l.clone())?;
        }
        Ok(a)
    }
}

/// The five dialgebra axioms as `(outer-left, inner-left, outer-right, inner-right)`
/// with `(x a y) b z = x c (y d z)`.
const DIALGEBRA_FAMILIES: [(&str, [&str; 4]); 5] = [
    ("right-assoc", ["right", "right", "right", "right"]),
    ("left-assoc", ["left", "left", "left", "left"]),
    ("left-left-right", ["left", "left", "left", "right"]),
    ("right-left-mixed", ["left", "right", "right", "left"]),
    ("left-right-right", ["right", "left", "right", "right"]),
];

fn deformation_identities(order: usize) -> Vec<Identity> {
    let mut out = Vec::new();
    for k in 0..=2 * order {
        for (label, [outer_l, inner_l, outer_r, inner_r]) in DIALGEBRA_FAMILIES {
            let mut terms = Vec::new();
            for i in 0..=k.min(order) {
                let j = k - i;
                if j > order {
                    continue;
                }
                terms.push(format!("{outer_l}{j}({inner_l}{i}(x, y), z)"));
                terms.push(format!("- {outer_r}{i}(x, {inner_r}{j}(y, z))"));
            }
            let expr = terms.join(" + ").replace("+ -", "-");
            out.push(Identity::parse(&format!("degree-{k}/{label}"), &expr).expect("generated identity"));
        }
    }
    out
}

/// Checks every homogeneous component of the five dialgebra axioms.
pub fn check_deformation<S: Field>(d: &DeformedDialgebra<S>) -> Result<VerificationReport<S>, S> {
    require(&d.base, StructureKind::Permutative)?;
    let layered = d.layered()?;
    check_identities(layered.dim(), &deformation_identities(d.order()), |name| {
        layered.ops().get(name)
    })
}

/// `∘` of the base and `[x,y] = x▷₁y − y◁₁x`.
pub fn semiclassical_limit<S: Field>(d: &DeformedDialgebra<S>) -> Result<Algebra<S>, S> {
    let report = check_deformation(d)?;
    if !report.passed() {
        return Err(Error::precondition("deformation violates the dialgebra axioms", report));
    }
    let n = d.base.dim();
    let bracket = match (d.right_layers.first(), d.left_layers.first()) {
        (Some(r), Some(l)) => r.sub(&l.permute_axes([1, 0, 2])),
        _ => Tensor3::zero_cube(n),
    };
    Algebra::new(n)
        .with_op(PERM, d.base.op(PERM)?.clone())?
        .with_op(BRACKET, bracket)
}
