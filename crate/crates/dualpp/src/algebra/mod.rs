//! The algebra carrier, structure checkers, derived products and
//! sub-adjacent functors.

mod identity;
mod kinds;

use std::collections::BTreeMap;

pub use identity::{check_identities, tuples, Identity};
pub use kinds::StructureKind;

use crate::error::{Error, Result};
use crate::kernel::{unit, Field, Matrix, Tensor3, Q};
use crate::report::{ReportBuilder, VerificationReport};
use crate::representations::Representation;

/// Canonical product names.
pub mod names {
    /// Permutative product ∘.
    pub const PERM: &str = "perm";
    /// Leibniz bracket [·,·].
    pub const BRACKET: &str = "bracket";
    /// Commutative associative product •.
    pub const ASSOC: &str = "assoc";
    /// Lie bracket {·,·}.
    pub const LIE: &str = "lie";
    /// Pre-Lie product ⋄.
    pub const PRELIE: &str = "prelie";
    /// Second pre-Lie product of a compatible pair.
    pub const PRELIE2: &str = "prelie2";
    /// Zinbiel product ⊙.
    pub const ZINBIEL: &str = "zinbiel";
    /// Dialgebra product ▷.
    pub const RIGHT: &str = "right";
    /// Dialgebra product ◁.
    pub const LEFT: &str = "left";
    /// Pre-permutative ▷.
    pub const RTRI: &str = "rtri";
    /// Pre-permutative ◁.
    pub const LTRI: &str = "ltri";
    /// Leibniz-dendriform ≻.
    pub const SUCC: &str = "succ";
    /// Leibniz-dendriform ≺.
    pub const PREC: &str = "prec";
    /// x■y = x∘y − y∘x.
    pub const BLACKSQUARE: &str = "blacksquare";
    /// x□y = [x,y] + [y,x].
    pub const SQUARE: &str = "square";
}

use names::*;

/// Integer structure constants `(i, j, k, c)`.
pub type IntEntries<'a> = &'a [(usize, usize, usize, i64)];

/// A finite-dimensional space with named bilinear products given by
/// structure constants `c_{ij}^k`, where `e_i * e_j = Σ_k c_{ij}^k e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra<S = Q> {
    dim: usize,
    ops: BTreeMap<String, Tensor3<S>>,
}

impl<S: Field> Algebra<S> {
    pub fn new(dim: usize) -> Self {
        Algebra {
            dim,
            ops: BTreeMap::new(),
        }
    }

    /// Zero products for every operation the kind requires.
    pub fn zero(dim: usize, kind: StructureKind) -> Self {
        let mut a = Self::new(dim);
        for op in kind.required_ops() {
            a.ops.insert(op.to_string(), Tensor3::zero_cube(dim));
        }
        a
    }

    /// Integer structure constants, mainly for fixtures.
    pub fn from_ints(dim: usize, ops: &[(&str, IntEntries)]) -> Self {
        let mut a = Self::new(dim);
        for (name, entries) in ops {
            a.ops.insert(name.to_string(), Tensor3::from_ints(dim, entries));
        }
        a
    }

    pub fn insert_op(&mut self, name: &str, t: Tensor3<S>) -> Result<(), S> {
        if t.extents() != [self.dim; 3] {
            return Err(Error::Dimension(format!(
                "product \"{name}\" has extents {:?}, expected {:?}",
                t.extents(),
                [self.dim; 3]
            )));
        }
        self.ops.insert(name.to_string(), t);
        Ok(())
    }

    pub fn with_op(mut self, name: &str, t: Tensor3<S>) -> Result<Self, S> {
        self.insert_op(name, t)?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &BTreeMap<String, Tensor3<S>> {
        &self.ops
    }

    pub fn has_op(&self, name: &str) -> bool {
        self.ops.contains_key(name)
    }

    pub fn op(&self, name: &str) -> Result<&Tensor3<S>, S> {
        self.ops
            .get(name)
            .ok_or_else(|| Error::MissingOperation(name.to_string()))
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, name: &str, u: &[S], v: &[S]) -> Result<Vec<S>, S> {
        Ok(self.op(name)?.apply(u, v))
    }

    /// `e_i * e_j` in coordinates.
    pub fn basis_mul(&self, name: &str, i: usize, j: usize) -> Result<Vec<S>, S> {
        let n = self.dim;
        self.mul(name, &unit(n, i), &unit(n, j))
    }

    /// Matrix of `y ↦ x * y`.
    pub fn left_mul(&self, name: &str, x: &[S]) -> Result<Matrix<S>, S> {
        Ok(self.op(name)?.left_matrix(x))
    }

    /// Matrix of `x ↦ x * y`.
    pub fn right_mul(&self, name: &str, y: &[S]) -> Result<Matrix<S>, S> {
        Ok(self.op(name)?.right_matrix(y))
    }

    /// Left multiplication matrices of all basis vectors.
    pub fn left_muls(&self, name: &str) -> Result<Vec<Matrix<S>>, S> {
        (0..self.dim)
            .map(|i| self.left_mul(name, &unit(self.dim, i)))
            .collect()
    }

    /// Right multiplication matrices of all basis vectors.
    pub fn right_muls(&self, name: &str) -> Result<Vec<Matrix<S>>, S> {
        (0..self.dim)
            .map(|i| self.right_mul(name, &unit(self.dim, i)))
            .collect()
    }

    /// Keeps only the named products.
    pub fn restrict(&self, names: &[&str]) -> Result<Self, S> {
        let mut a = Self::new(self.dim);
        for n in names {
            a.ops.insert(n.to_string(), self.op(n)?.clone());
        }
        Ok(a)
    }

    /// Copy with the products renamed by `(from, to)` pairs.
    pub fn renamed(&self, pairs: &[(&str, &str)]) -> Result<Self, S> {
        let mut a = Self::new(self.dim);
        for (from, to) in pairs {
            a.ops.insert(to.to_string(), self.op(from)?.clone());
        }
        Ok(a)
    }

    /// The opposite product `x *' y = y * x`.
    pub fn opposite(&self, name: &str) -> Result<Tensor3<S>, S> {
        Ok(self.op(name)?.permute_axes([1, 0, 2]))
    }
}

/// Checks every defining identity of `kind` on all basis tuples.
pub fn check_structure<S: Field>(alg: &Algebra<S>, kind: StructureKind) -> Result<VerificationReport<S>, S> {
    for op in kind.required_ops() {
        alg.op(op)?;
    }
    check_identities(alg.dim(), kind.identities(), |name| alg.ops().get(name))
}

/// Fails with a precondition error unless `alg` is of the given kind.
pub fn require<S: Field>(alg: &Algebra<S>, kind: StructureKind) -> Result<(), S> {
    let report = check_structure(alg, kind)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(format!("input is not a {kind} algebra"), report))
    }
}

/// Adds `blacksquare` (x∘y − y∘x) and `square` ([x,y] + [y,x]) when the
/// underlying products are present.
pub fn derived_products<S: Field>(alg: &Algebra<S>) -> Result<Algebra<S>, S> {
    if !alg.has_op(PERM) && !alg.has_op(BRACKET) {
        return Err(Error::MissingOperation(format!("{PERM}\" or \"{BRACKET}")));
    }
    let mut out = alg.clone();
    if alg.has_op(PERM) {
        out.insert_op(BLACKSQUARE, alg.op(PERM)?.sub(&alg.opposite(PERM)?))?;
    }
    if alg.has_op(BRACKET) {
        out.insert_op(SQUARE, alg.op(BRACKET)?.add(&alg.opposite(BRACKET)?))?;
    }
    Ok(out)
}

/// The Leibniz algebra `[x,y] = x▷y − y◁x` of a dialgebra.
pub fn dialgebra_sub_adjacent<S: Field>(alg: &Algebra<S>) -> Result<Algebra<S>, S> {
    require(alg, StructureKind::Dialgebra)?;
    let bracket = alg.op(RIGHT)?.sub(&alg.opposite(LEFT)?);
    Algebra::new(alg.dim()).with_op(BRACKET, bracket)
}

/// The dual pre-Poisson algebra `x∘y = x▷y + x◁y`, `[x,y] = x≻y + x≺y`
/// of a pre-dual pre-Poisson algebra, together with its representation
/// `(L▷, R◁, L≻, R≺)` on the underlying space.
pub fn predpp_sub_adjacent<S: Field>(alg: &Algebra<S>) -> Result<(Algebra<S>, Representation<S>), S> {
    require(alg, StructureKind::PreDualPrePoisson)?;
    let dpp = Algebra::new(alg.dim())
        .with_op(PERM, alg.op(RTRI)?.add(alg.op(LTRI)?))?
        .with_op(BRACKET, alg.op(SUCC)?.add(alg.op(PREC)?))?;
    let rep = Representation::new(
        alg.dim(),
        alg.left_muls(RTRI)?,
        alg.right_muls(LTRI)?,
        alg.left_muls(SUCC)?,
        alg.right_muls(PREC)?,
    )?;
    Ok((dpp, rep))
}

/// For a pre-dual pre-Poisson algebra with `x◁y = y▷x` and `x≺y = −y≻x`,
/// the pre-Poisson algebra `⋄ = ≻`, `⊙ = ▷` and its Poisson algebra
/// `x•y = x⊙y + y⊙x`, `{x,y} = x⋄y − y⋄x`.
pub fn predpp_associated_pre_poisson<S: Field>(alg: &Algebra<S>) -> Result<(Algebra<S>, Algebra<S>), S> {
    require(alg, StructureKind::PreDualPrePoisson)?;
    let n = alg.dim();
    let mut report = ReportBuilder::new(["ltri-is-opposite-rtri", "prec-is-minus-opposite-succ"]);
    for i in 0..n {
        for j in 0..n {
            let l = alg.basis_mul(LTRI, i, j)?;
            let r = alg.basis_mul(RTRI, j, i)?;
            report.check("ltri-is-opposite-rtri", &[i, j], crate::kernel::sub_vec(&l, &r));
            let p = alg.basis_mul(PREC, i, j)?;
            let s = alg.basis_mul(SUCC, j, i)?;
            report.check("prec-is-minus-opposite-succ", &[i, j], crate::kernel::add_vec(&p, &s));
        }
    }
    let report = report.finish();
    if !report.passed() {
        return Err(Error::precondition(
            "symmetry hypotheses x◁y = y▷x and x≺y = −y≻x fail",
            report,
        ));
    }
    let zin = alg.op(RTRI)?.clone();
    let pl = alg.op(SUCC)?.clone();
    let pre_poisson = Algebra::new(n).with_op(PRELIE, pl.clone())?.with_op(ZINBIEL, zin.clone())?;
    let assoc = zin.add(&zin.permute_axes([1, 0, 2]));
    let lie = pl.sub(&pl.permute_axes([1, 0, 2]));
    let poisson = Algebra::new(n).with_op(ASSOC, assoc)?.with_op(LIE, lie)?;
    Ok((pre_poisson, poisson))
}
