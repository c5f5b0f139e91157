//! Invariant bilinear forms, quadratic doubles, coalgebras and bialgebras,
//! matched pairs and Manin triples.

use crate::algebra::names::*;
use crate::algebra::{check_structure, require, Algebra, StructureKind};
use crate::constructions::{
    coregular_poisson_rep, derivation_induced, poisson_rep_semidirect, tensor_perm_poisson, LinearOperator,
};
use crate::error::{Error, Result};
use crate::kernel::{kron, unit, Field, Matrix, Tensor3, Q};
use crate::report::{ReportBuilder, VerificationReport};
use crate::representations::{
    check_representation, coregular_double, dual_families, regular_rep, Representation,
};

/// `B(x,y) = xᵀ·M·y` in coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm<S = Q> {
    matrix: Matrix<S>,
}

impl<S: Field> BilinearForm<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self, S> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "bilinear form matrix is {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[S], y: &[S]) -> S {
        let my = self.matrix.apply(y);
        let mut acc = S::zero();
        for (a, b) in x.iter().zip(&my) {
            acc.add_mul(a, b);
        }
        acc
    }
}

/// `B(x+a*, y+b*) = ⟨y,a*⟩ − ⟨x,b*⟩`, the block matrix `[[0, −I], [I, 0]]`.
pub fn standard_form<S: Field>(n: usize) -> BilinearForm<S> {
    let m = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            -S::one()
        } else if i == j + n {
            S::one()
        } else {
            S::zero()
        }
    });
    BilinearForm { matrix: m }
}

/// Outcome of [`check_invariant_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormReport<S = Q> {
    pub skew: bool,
    pub nondegenerate: bool,
    pub invariant: bool,
    pub report: VerificationReport<S>,
}

impl<S: Field> FormReport<S> {
    /// Nondegenerate, skew-symmetric and invariant.
    pub fn is_quadratic(&self) -> bool {
        self.skew && self.nondegenerate && self.invariant
    }
}

fn require_form_dim<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<(), S> {
    if b.dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "form has dimension {}, algebra has dimension {}",
            b.dim(),
            a.dim()
        )));
    }
    Ok(())
}

/// Checks `B(x∘y,z) = B(x, y∘z − z∘y)`, `B([x,y],z) = B(x, [y,z]+[z,y])`,
/// skew-symmetry and nondegeneracy. When all hold it also checks
/// `B(x∘y,z) = B(y,x∘z)` and `B([x,y],z) = −B(y,[x,z])`.
pub fn check_invariant_form<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<FormReport<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_form_dim(a, b)?;
    form_report(a, b)
}

fn form_report<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<FormReport<S>, S> {
    let n = a.dim();
    let (perm, br) = (a.op(PERM)?, a.op(BRACKET)?);
    let mut report = ReportBuilder::new([
        "skew",
        "nondegenerate",
        "perm-invariance",
        "bracket-invariance",
        "lemma-perm",
        "lemma-bracket",
    ]);
    let m = b.matrix();
    for i in 0..n {
        for j in 0..n {
            report.check("skew", &[i, j], vec![m.get(i, j).add_ref(m.get(j, i))]);
        }
    }
    let rank = m.rank();
    if rank < n {
        report.fail("nondegenerate", &[rank]);
    }
    let p = |i: usize, j: usize| perm.apply(&unit(n, i), &unit(n, j));
    let q = |i: usize, j: usize| br.apply(&unit(n, i), &unit(n, j));
    let mut invariant = true;
    for (x, y, z) in triples(n) {
        let ex = unit(n, x);
        let lhs = b.eval(&p(x, y), &unit(n, z));
        let rhs = b.eval(&ex, &crate::kernel::sub_vec(&p(y, z), &p(z, y)));
        let r1 = lhs.sub_ref(&rhs);
        let lhs = b.eval(&q(x, y), &unit(n, z));
        let rhs = b.eval(&ex, &crate::kernel::add_vec(&q(y, z), &q(z, y)));
        let r2 = lhs.sub_ref(&rhs);
        invariant &= r1.is_zero() && r2.is_zero();
        report.check("perm-invariance", &[x, y, z], vec![r1]);
        report.check("bracket-invariance", &[x, y, z], vec![r2]);
    }
    let skew = m.is_skew();
    let nondegenerate = rank == n;
    if skew && nondegenerate && invariant {
        for (x, y, z) in triples(n) {
            let ez = unit(n, z);
            let l1 = b.eval(&p(x, y), &ez).sub_ref(&b.eval(&unit(n, y), &p(x, z)));
            let l2 = b.eval(&q(x, y), &ez).add_ref(&b.eval(&unit(n, y), &q(x, z)));
            report.check("lemma-perm", &[x, y, z], vec![l1]);
            report.check("lemma-bracket", &[x, y, z], vec![l2]);
        }
    }
    Ok(FormReport {
        skew,
        nondegenerate,
        invariant,
        report: report.finish(),
    })
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// Which double [`quadratic_doubles`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoubleMode {
    /// A Poisson algebra with its coregular module `(−L•*, ad*)`.
    Poisson,
    /// A dual pre-Poisson algebra with its coregular representation.
    DualPrePoisson,
}

/// The quadratic double of `a` on `A ⊕ A*` with [`standard_form`].
pub fn quadratic_doubles<S: Field>(
    a: &Algebra<S>,
    mode: DoubleMode,
) -> Result<(Algebra<S>, BilinearForm<S>), S> {
    let double = match mode {
        DoubleMode::Poisson => poisson_rep_semidirect(a, &coregular_poisson_rep(a)?)?,
        DoubleMode::DualPrePoisson => coregular_double(a)?,
    };
    Ok((double, standard_form(a.dim())))
}

/// Checks `B` skew with `B(x∘y,z) = B(x, y∘z − z∘y)` on a permutative algebra.
pub fn check_perm_form<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::Permutative)?;
    require_form_dim(a, b)?;
    let n = a.dim();
    let perm = a.op(PERM)?;
    let m = b.matrix();
    let mut report = ReportBuilder::new(["skew", "perm-invariance"]);
    for i in 0..n {
        for j in 0..n {
            report.check("skew", &[i, j], vec![m.get(i, j).add_ref(m.get(j, i))]);
        }
    }
    let p = |i: usize, j: usize| perm.apply(&unit(n, i), &unit(n, j));
    for (x, y, z) in triples(n) {
        let lhs = b.eval(&p(x, y), &unit(n, z));
        let rhs = b.eval(&unit(n, x), &crate::kernel::sub_vec(&p(y, z), &p(z, y)));
        report.check("perm-invariance", &[x, y, z], vec![lhs.sub_ref(&rhs)]);
    }
    Ok(report.finish())
}

/// Checks `B` symmetric with `B(x•y,z) = B(x,y•z)` and `B({x,y},z) = B(x,{y,z})`.
pub fn check_poisson_form<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::Poisson)?;
    require_form_dim(a, b)?;
    let n = a.dim();
    let m = b.matrix();
    let mut report = ReportBuilder::new(["symmetric", "assoc-invariance", "lie-invariance"]);
    for i in 0..n {
        for j in 0..n {
            report.check("symmetric", &[i, j], vec![m.get(i, j).sub_ref(m.get(j, i))]);
        }
    }
    for (label, op) in [("assoc-invariance", ASSOC), ("lie-invariance", LIE)] {
        let t = a.op(op)?;
        let p = |i: usize, j: usize| t.apply(&unit(n, i), &unit(n, j));
        for (x, y, z) in triples(n) {
            let lhs = b.eval(&p(x, y), &unit(n, z));
            let rhs = b.eval(&unit(n, x), &p(y, z));
            report.check(label, &[x, y, z], vec![lhs.sub_ref(&rhs)]);
        }
    }
    Ok(report.finish())
}

/// Tensor product of a permutative algebra with an invariant skew form and a
/// Poisson algebra with an invariant symmetric form, carrying
/// `B(x⊗a, y⊗b) = B_A(x,y)·B_B(a,b)`.
pub fn quadratic_tensor<S: Field>(
    a: &Algebra<S>,
    ba: &BilinearForm<S>,
    b: &Algebra<S>,
    bb: &BilinearForm<S>,
) -> Result<(Algebra<S>, BilinearForm<S>), S> {
    let ra = check_perm_form(a, ba)?;
    if !ra.passed() {
        return Err(Error::precondition(
            "form is not skew invariant on the permutative factor",
            ra,
        ));
    }
    let rb = check_poisson_form(b, bb)?;
    if !rb.passed() {
        return Err(Error::precondition(
            "form is not symmetric invariant on the Poisson factor",
            rb,
        ));
    }
    let alg = tensor_perm_poisson(a, b)?;
    Ok((alg, BilinearForm::new(kron(ba.matrix(), bb.matrix()))?))
}

/// Checks `B(D(x),y) + B(x,D(y)) = 0`; witnesses are `(i, x, y)` for `Dᵢ`.
pub fn check_skew_derivations<S: Field>(
    b: &BilinearForm<S>,
    ds: &[&LinearOperator<S>],
) -> Result<VerificationReport<S>, S> {
    let n = b.dim();
    let m = b.matrix();
    let mut report = ReportBuilder::new(["skew-derivation"]);
    for (i, d) in ds.iter().enumerate() {
        if d.rows() != n || d.cols() != n {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, form has dimension {n}",
                d.rows(),
                d.cols()
            )));
        }
        let s = &(&d.transpose() * m) + &(m * *d);
        for x in 0..n {
            for y in 0..n {
                report.check("skew-derivation", &[i + 1, x, y], vec![s.get(x, y).clone()]);
            }
        }
    }
    Ok(report.finish())
}

/// The derivation-induced algebra `[x,y] = D₁(x)∘D₂(y) − D₂(x)∘D₁(y)`
/// together with a form for which both derivations are skew.
pub fn skew_derivation_quadratic<S: Field>(
    a: &Algebra<S>,
    d1: &LinearOperator<S>,
    d2: &LinearOperator<S>,
    b: &BilinearForm<S>,
) -> Result<(Algebra<S>, BilinearForm<S>), S> {
    let alg = derivation_induced(a, d1, d2)?;
    let mut report = check_perm_form(a, b)?;
    let rank = b.matrix().rank();
    if rank < b.dim() {
        let mut nd = ReportBuilder::new(["nondegenerate"]);
        nd.fail("nondegenerate", &[rank]);
        report = VerificationReport::concat([report, nd.finish()]);
    }
    if !report.passed() {
        return Err(Error::precondition(
            "form is not quadratic on the permutative algebra",
            report,
        ));
    }
    let skew = check_skew_derivations(b, &[d1, d2])?;
    if !skew.passed() {
        return Err(Error::precondition("derivations are not skew for the form", skew));
    }
    Ok((alg, b.clone()))
}

/// A comultiplication `δ(e_i) = Σ d_i^{jk} e_j⊗e_k`, stored as entries `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coproduct<S = Q> {
    tensor: Tensor3<S>,
}

impl<S: Field> Coproduct<S> {
    pub fn new(tensor: Tensor3<S>) -> Result<Self, S> {
        let [a, b, c] = tensor.extents();
        if a != b || b != c {
            return Err(Error::Dimension(format!(
                "coproduct extents ({a}, {b}, {c}) are not equal"
            )));
        }
        Ok(Coproduct { tensor })
    }

    pub fn zero(n: usize) -> Self {
        Coproduct {
            tensor: Tensor3::zero_cube(n),
        }
    }

    pub fn tensor(&self) -> &Tensor3<S> {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.extents()[0]
    }

    /// `δ(x)` as a vector indexed by `j·n + k`.
    pub fn apply(&self, x: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n * n];
        for (i, j, k, c) in self.tensor.entries() {
            if !x[*i].is_zero() {
                out[j * n + k].add_mul(&x[*i], c);
            }
        }
        out
    }

    /// `τδ`.
    pub fn flipped(&self) -> Self {
        Coproduct {
            tensor: self.tensor.permute_axes([0, 2, 1]),
        }
    }

    /// `δ − τδ`.
    pub fn antisymmetrized(&self) -> Self {
        Coproduct {
            tensor: self.tensor.sub(&self.flipped().tensor),
        }
    }

    /// `δ + τδ`.
    pub fn symmetrized(&self) -> Self {
        Coproduct {
            tensor: self.tensor.add(&self.flipped().tensor),
        }
    }
}

/// `(A⊗id)v` for `v ∈ V⊗V` indexed by `j·n + k`.
fn act_left<S: Field>(a: &Matrix<S>, v: &[S]) -> Vec<S> {
    let n = a.rows();
    let mut out = vec![S::zero(); n * n];
    for j in 0..n {
        for k in 0..n {
            let c = &v[j * n + k];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                out[i * n + k].add_mul(a.get(i, j), c);
            }
        }
    }
    out
}

/// `(id⊗A)v`.
fn act_right<S: Field>(a: &Matrix<S>, v: &[S]) -> Vec<S> {
    let n = a.rows();
    let mut out = vec![S::zero(); n * n];
    for j in 0..n {
        for k in 0..n {
            let c = &v[j * n + k];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                out[j * n + i].add_mul(a.get(i, k), c);
            }
        }
    }
    out
}

/// `τv`.
fn flip_vec<S: Field>(v: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n * n];
    for j in 0..n {
        for k in 0..n {
            out[k * n + j] = v[j * n + k].clone();
        }
    }
    out
}

/// `Σ plus − Σ minus`.
fn residual<S: Field>(plus: &[Vec<S>], minus: &[Vec<S>]) -> Vec<S> {
    let len = plus.iter().chain(minus).map(Vec::len).max().unwrap_or(0);
    let mut out = vec![S::zero(); len];
    for v in plus {
        for (o, c) in out.iter_mut().zip(v) {
            *o = o.add_ref(c);
        }
    }
    for v in minus {
        for (o, c) in out.iter_mut().zip(v) {
            *o = o.sub_ref(c);
        }
    }
    out
}

/// `(id⊗δ)δ(e_i)` and `(δ⊗id)δ(e_i)` style compositions on `V⊗V⊗V`,
/// indexed by `(p·n + q)·n + r`.
fn compose_right<S: Field>(outer: &Coproduct<S>, inner: &Coproduct<S>, i: usize) -> Vec<S> {
    let n = outer.dim();
    let first = inner.apply(&unit(n, i));
    let mut out = vec![S::zero(); n * n * n];
    for (j, k, c) in pairs(n, &first) {
        let d = outer.apply(&unit(n, k));
        for (q, r, e) in pairs(n, &d) {
            out[(j * n + q) * n + r].add_mul(c, e);
        }
    }
    out
}

fn compose_left<S: Field>(outer: &Coproduct<S>, inner: &Coproduct<S>, i: usize) -> Vec<S> {
    let n = outer.dim();
    let first = inner.apply(&unit(n, i));
    let mut out = vec![S::zero(); n * n * n];
    for (j, k, c) in pairs(n, &first) {
        let d = outer.apply(&unit(n, j));
        for (p, q, e) in pairs(n, &d) {
            out[(p * n + q) * n + k].add_mul(c, e);
        }
    }
    out
}

fn pairs<S: Field>(n: usize, v: &[S]) -> impl Iterator<Item = (usize, usize, &S)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(move |(idx, c)| (idx / n, idx % n, c))
}

/// `(τ⊗id)` on `V⊗V⊗V`.
fn flip12<S: Field>(v: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n * n * n];
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                out[(q * n + p) * n + r] = v[(p * n + q) * n + r].clone();
            }
        }
    }
    out
}

fn require_same_dim<S: Field>(dp: &Coproduct<S>, db: &Coproduct<S>) -> Result<(), S> {
    if dp.dim() != db.dim() {
        return Err(Error::Dimension(format!(
            "coproducts have dimensions {} and {}",
            dp.dim(),
            db.dim()
        )));
    }
    Ok(())
}

/// Checks the permutative and Leibniz coalgebra axioms and the three
/// coproduct compatibilities on every basis vector.
pub fn check_coalgebra<S: Field>(dp: &Coproduct<S>, db: &Coproduct<S>) -> Result<VerificationReport<S>, S> {
    require_same_dim(dp, db)?;
    let n = dp.dim();
    let mut report = ReportBuilder::new([
        "perm-coassoc",
        "perm-cocomm",
        "leibniz-co",
        "co-mixed-1",
        "co-mixed-2",
        "co-mixed-3",
    ]);
    for i in 0..n {
        let idx = [i];
        let pp_r = compose_right(dp, dp, i);
        let pp_l = compose_left(dp, dp, i);
        report.check("perm-coassoc", &idx, residual(&[pp_r], std::slice::from_ref(&pp_l)));
        report.check("perm-cocomm", &idx, residual(std::slice::from_ref(&pp_l), &[flip12(&pp_l, n)]));
        let bb_r = compose_right(db, db, i);
        let bb_l = compose_left(db, db, i);
        report.check(
            "leibniz-co",
            &idx,
            residual(std::slice::from_ref(&bb_r), &[bb_l, flip12(&bb_r, n)]),
        );
        let pb_r = compose_right(dp, db, i);
        let bp_l = compose_left(db, dp, i);
        let bp_r = compose_right(db, dp, i);
        let pb_l = compose_left(dp, db, i);
        report.check(
            "co-mixed-1",
            &idx,
            residual(&[pb_r], &[bp_l.clone(), flip12(&bp_r, n)]),
        );
        report.check(
            "co-mixed-2",
            &idx,
            residual(&[pb_l], &[bp_r.clone(), flip12(&bp_r, n)]),
        );
        report.check("co-mixed-3", &idx, residual(&[bp_l.clone(), flip12(&bp_l, n)], &[]));
    }
    Ok(report.finish())
}

/// The products on `A*` dual to a pair of coproducts:
/// `⟨a*∘b*, x⟩ = ⟨a*⊗b*, δ∘(x)⟩`.
pub fn dualize_coproducts<S: Field>(dp: &Coproduct<S>, db: &Coproduct<S>) -> Result<Algebra<S>, S> {
    require_same_dim(dp, db)?;
    Algebra::new(dp.dim())
        .with_op(PERM, dp.tensor.permute_axes([1, 2, 0]))?
        .with_op(BRACKET, db.tensor.permute_axes([1, 2, 0]))
}

/// The coproducts on `A*` dual to the products of `A`.
pub fn dualize_algebra<S: Field>(a: &Algebra<S>) -> Result<(Coproduct<S>, Coproduct<S>), S> {
    let t = |name: &str| -> Result<Coproduct<S>, S> {
        Ok(Coproduct {
            tensor: a.op(name)?.permute_axes([2, 0, 1]),
        })
    };
    Ok((t(PERM)?, t(BRACKET)?))
}

/// A dual pre-Poisson algebra with two comultiplications.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BialgebraData<S = Q> {
    alg: Algebra<S>,
    delta_perm: Coproduct<S>,
    delta_br: Coproduct<S>,
}

impl<S: Field> BialgebraData<S> {
    pub fn new(alg: Algebra<S>, delta_perm: Coproduct<S>, delta_br: Coproduct<S>) -> Result<Self, S> {
        if delta_perm.dim() != alg.dim() || delta_br.dim() != alg.dim() {
            return Err(Error::Dimension(format!(
                "coproducts of dimensions {} and {} on a {}-dim algebra",
                delta_perm.dim(),
                delta_br.dim(),
                alg.dim()
            )));
        }
        Ok(BialgebraData {
            alg,
            delta_perm,
            delta_br,
        })
    }

    pub fn alg(&self) -> &Algebra<S> {
        &self.alg
    }

    pub fn delta_perm(&self) -> &Coproduct<S> {
        &self.delta_perm
    }

    pub fn delta_br(&self) -> &Coproduct<S> {
        &self.delta_br
    }
}

/// Labels of [`check_bialgebra`] in report order.
pub const BIALGEBRA_LABELS: [&str; 12] = [
    "pbi-1", "pbi-2", "pbi-3", "leibbi-1", "leibbi-2", "dppbi-1", "dppbi-2", "dppbi-3", "dppbi-4", "dppbi-5",
    "dppbi-6", "dppbi-7",
];

/// Checks the permutative, Leibniz and mixed bialgebra compatibilities on
/// every basis pair as equalities in `A⊗A`.
pub fn check_bialgebra<S: Field>(bd: &BialgebraData<S>) -> Result<VerificationReport<S>, S> {
    let a = &bd.alg;
    require(a, StructureKind::DualPrePoisson)?;
    let co = check_coalgebra(&bd.delta_perm, &bd.delta_br)?;
    if !co.passed() {
        return Err(Error::precondition("coproducts do not form a coalgebra", co));
    }
    let n = a.dim();
    let (dp, db) = (&bd.delta_perm, &bd.delta_br);
    let d_bs = dp.antisymmetrized();
    let d_sq = db.symmetrized();
    let lp = a.left_muls(PERM)?;
    let rp = a.right_muls(PERM)?;
    let lb = a.left_muls(BRACKET)?;
    let rb = a.right_muls(BRACKET)?;
    let l_bs: Vec<Matrix<S>> = (0..n).map(|x| &lp[x] - &rp[x]).collect();
    let r_bs: Vec<Matrix<S>> = (0..n).map(|x| &rp[x] - &lp[x]).collect();
    let l_sq: Vec<Matrix<S>> = (0..n).map(|x| &lb[x] + &rb[x]).collect();
    let (perm, br) = (a.op(PERM)?, a.op(BRACKET)?);
    let e = |i: usize| unit::<S>(n, i);
    let mut report = ReportBuilder::new(BIALGEBRA_LABELS);
    for x in 0..n {
        for y in 0..n {
            let idx = [x, y];
            let (ex, ey) = (e(x), e(y));
            let xy = perm.apply(&ex, &ey);
            let bxy = br.apply(&ex, &ey);
            let sq_xy = crate::kernel::add_vec(&bxy, &br.apply(&ey, &ex));
            let (dpx, dpy) = (dp.apply(&ex), dp.apply(&ey));
            let (dbx, dby) = (db.apply(&ex), db.apply(&ey));
            let (dbs_x, dbs_y) = (d_bs.apply(&ex), d_bs.apply(&ey));
            let (dsq_x, dsq_y) = (d_sq.apply(&ex), d_sq.apply(&ey));
            let dp_xy = dp.apply(&xy);
            report.check(
                "pbi-1",
                &idx,
                residual(std::slice::from_ref(&dp_xy), &[act_left(&l_bs[x], &dpy), act_right(&rp[y], &dpx)]),
            );
            report.check(
                "pbi-2",
                &idx,
                residual(&[act_right(&rp[x], &flip_vec(&dpy, n))], &[act_left(&rp[y], &dpx)]),
            );
            report.check(
                "pbi-3",
                &idx,
                residual(std::slice::from_ref(&dp_xy), &[act_left(&l_bs[y], &dbs_x), act_right(&lp[x], &dpy)]),
            );
            report.check(
                "leibbi-1",
                &idx,
                residual(&[act_right(&rb[x], &flip_vec(&dby, n))], &[act_left(&rb[y], &dbx)]),
            );
            report.check(
                "leibbi-2",
                &idx,
                residual(
                    &[db.apply(&bxy), act_left(&l_sq[y], &dsq_x)],
                    &[act_right(&rb[y], &dsq_x), act_right(&lb[x], &dby), act_left(&lb[x], &dby)],
                ),
            );
            let dp_bxy = dp.apply(&bxy);
            report.check(
                "dppbi-1",
                &idx,
                residual(
                    &[dp_bxy.clone(), act_right(&rp[y], &dsq_x)],
                    &[act_right(&lb[x], &dpy), act_left(&lb[x], &dpy), act_left(&l_bs[y], &dsq_x)],
                ),
            );
            let db_xy = db.apply(&xy);
            report.check(
                "dppbi-2",
                &idx,
                residual(
                    &[db_xy.clone(), act_left(&l_sq[x], &dpy), act_left(&l_sq[y], &dbs_x)],
                    &[act_right(&lp[x], &dby), act_right(&rp[y], &dbx)],
                ),
            );
            report.check(
                "dppbi-3",
                &idx,
                residual(&[act_right(&rb[x], &flip_vec(&dpy, n)), act_left(&rp[y], &dbx)], &[]),
            );
            report.check(
                "dppbi-4",
                &idx,
                residual(
                    &[dp_bxy, act_left(&lp[x], &dby), act_left(&l_sq[y], &dbs_x)],
                    &[act_right(&lp[x], &dby), act_right(&rb[y], &dbs_x)],
                ),
            );
            report.check(
                "dppbi-5",
                &idx,
                residual(
                    &[d_sq.apply(&xy), act_left(&lb[x], &dbs_y), act_left(&lb[y], &dbs_x)],
                    &[act_right(&lp[x], &dsq_y), act_right(&lp[y], &dsq_x)],
                ),
            );
            report.check(
                "dppbi-6",
                &idx,
                residual(
                    &[db_xy, act_right(&rb[y], &dbs_x), act_left(&r_bs[y], &dsq_x)],
                    &[act_left(&lp[x], &dby), act_right(&lb[x], &dpy)],
                ),
            );
            report.check(
                "dppbi-7",
                &idx,
                residual(
                    &[
                        dp.apply(&sq_xy),
                        act_right(&r_bs[y], &dbx),
                        act_left(&r_bs[y], &flip_vec(&dbx, n)),
                    ],
                    &[act_right(&l_sq[x], &dpy), act_left(&l_sq[x], &flip_vec(&dpy, n))],
                ),
            );
        }
    }
    Ok(report.finish())
}

/// Two dual pre-Poisson algebras acting on each other: `on_a2` holds
/// `(l∘₁, r∘₁, l[,]₁, r[,]₁)` indexed by `A₁`, `on_a1` holds
/// `(l∘₂, r∘₂, l[,]₂, r[,]₂)` indexed by `A₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchedPairData<S = Q> {
    a1: Algebra<S>,
    a2: Algebra<S>,
    on_a2: Representation<S>,
    on_a1: Representation<S>,
}

impl<S: Field> MatchedPairData<S> {
    pub fn new(
        a1: Algebra<S>,
        a2: Algebra<S>,
        on_a2: Representation<S>,
        on_a1: Representation<S>,
    ) -> Result<Self, S> {
        if on_a2.dim_a() != a1.dim() || on_a2.dim_v() != a2.dim() {
            return Err(Error::Dimension("A₁-indexed families have the wrong shape".into()));
        }
        if on_a1.dim_a() != a2.dim() || on_a1.dim_v() != a1.dim() {
            return Err(Error::Dimension("A₂-indexed families have the wrong shape".into()));
        }
        Ok(MatchedPairData { a1, a2, on_a2, on_a1 })
    }

    /// Both algebras act on each other by their coregular-type families
    /// `(−L∘*, −L∘* + R∘*, L[,]*, −L[,]* − R[,]*)`, where `a2` lives on `A₁*`.
    pub fn coregular(a1: Algebra<S>, a2: Algebra<S>) -> Result<Self, S> {
        if a1.dim() != a2.dim() {
            return Err(Error::Dimension(format!(
                "algebras of dimensions {} and {} are not dual",
                a1.dim(),
                a2.dim()
            )));
        }
        let on_a2 = dual_families(&regular_rep(&a1)?);
        let on_a1 = dual_families(&regular_rep(&a2)?);
        Self::new(a1, a2, on_a2, on_a1)
    }

    pub fn a1(&self) -> &Algebra<S> {
        &self.a1
    }

    pub fn a2(&self) -> &Algebra<S> {
        &self.a2
    }

    pub fn on_a2(&self) -> &Representation<S> {
        &self.on_a2
    }

    pub fn on_a1(&self) -> &Representation<S> {
        &self.on_a1
    }
}

/// `A₁ ⊕ A₂` with `(x+a)∘(y+b) = x∘y + r∘₂(b)x + l∘₂(a)y + l∘₁(x)b + r∘₁(y)a + a∘b`
/// and the analogous bracket, `A₁`-indices first.
pub fn matched_pair_glue<S: Field>(mp: &MatchedPairData<S>) -> Result<Algebra<S>, S> {
    let n1 = mp.a1.dim();
    let n2 = mp.a2.dim();
    let d = n1 + n2;
    let glue = |op: &str, f: usize| -> Result<Tensor3<S>, S> {
        let fam1 = mp.on_a2.families();
        let fam2 = mp.on_a1.families();
        let (l1, r1) = (fam1[f], fam1[f + 1]);
        let (l2, r2) = (fam2[f], fam2[f + 1]);
        let mut entries: Vec<(usize, usize, usize, S)> = mp.a1.op(op)?.entries().to_vec();
        for (i, j, k, c) in mp.a2.op(op)?.entries() {
            entries.push((n1 + i, n1 + j, n1 + k, c.clone()));
        }
        for x in 0..n1 {
            for a in 0..n2 {
                for k in 0..n2 {
                    entries.push((x, n1 + a, n1 + k, l1[x].get(k, a).clone()));
                    entries.push((n1 + a, x, n1 + k, r1[x].get(k, a).clone()));
                }
                for k in 0..n1 {
                    entries.push((n1 + a, x, k, l2[a].get(k, x).clone()));
                    entries.push((x, n1 + a, k, r2[a].get(k, x).clone()));
                }
            }
        }
        Tensor3::from_entries([d, d, d], entries)
    };
    Algebra::new(d)
        .with_op(PERM, glue(PERM, 0)?)?
        .with_op(BRACKET, glue(BRACKET, 2)?)
}

/// Labels of the matched-pair equations, each checked in both directions.
pub const MATCHED_PAIR_LABELS: [&str; 16] = [
    "perm-mp-1", "perm-mp-2", "perm-mp-3", "perm-mp-4", "perm-mp-5", "leib-mp-1", "leib-mp-2", "leib-mp-3",
    "dpp-mp-1", "dpp-mp-2", "dpp-mp-3", "dpp-mp-4", "dpp-mp-5", "dpp-mp-6", "dpp-mp-7", "dpp-mp-8",
];

/// Matched-pair equations with `x ∈ U` and `a, b ∈ W`, valued in `W`;
/// `f` is `U` acting on `W` and `g` is `W` acting on `U`.
fn matched_pair_equations<S: Field>(
    w: &Algebra<S>,
    f: &Representation<S>,
    g: &Representation<S>,
) -> Result<VerificationReport<S>, S> {
    let nu = f.dim_a();
    let nw = w.dim();
    let (flo, fro, flb, frb) = (f.l_perm(), f.r_perm(), f.l_br(), f.r_br());
    let (glo, gro, glb, grb) = (g.l_perm(), g.r_perm(), g.l_br(), g.r_br());
    let (pw, bw) = (w.op(PERM)?, w.op(BRACKET)?);
    // Family `fam` of `U` evaluated at a vector of `U`, applied to `e_b`.
    let at = |fam: &[Matrix<S>], u: &[S], b: usize| {
        let mut out = vec![S::zero(); nw];
        for (c, uc) in u.iter().enumerate().filter(|(_, uc)| !uc.is_zero()) {
            for (k, o) in out.iter_mut().enumerate() {
                o.add_mul(uc, fam[c].get(k, b));
            }
        }
        out
    };
    let mut report = ReportBuilder::new(MATCHED_PAIR_LABELS);
    for x in 0..nu {
        for a in 0..nw {
            for b in 0..nw {
                let idx = [x, a, b];
                let (ea, eb) = (unit::<S>(nw, a), unit::<S>(nw, b));
                let p = |u: &[S], v: &[S]| pw.apply(u, v);
                let q = |u: &[S], v: &[S]| bw.apply(u, v);
                let ab = p(&ea, &eb);
                let ba = p(&eb, &ea);
                let bab = q(&ea, &eb);
                let bba = q(&eb, &ea);
                let (flo_a, flo_b) = (flo[x].column(a), flo[x].column(b));
                let (fro_a, fro_b) = (fro[x].column(a), fro[x].column(b));
                let (flb_a, flb_b) = (flb[x].column(a), flb[x].column(b));
                let (frb_a, frb_b) = (frb[x].column(a), frb[x].column(b));
                // g-family of W at a basis vector of W, applied to e_x.
                let gx = |fam: &[Matrix<S>], c: usize| fam[c].column(x);
                report.check(
                    "perm-mp-1",
                    &idx,
                    residual(&[flo[x].apply(&ab)], &[p(&flo_a, &eb), at(flo, &gx(gro, a), b)]),
                );
                report.check(
                    "perm-mp-2",
                    &idx,
                    residual(&[fro[x].apply(&ab)], &[p(&ea, &fro_b), at(fro, &gx(glo, b), a)]),
                );
                report.check(
                    "perm-mp-3",
                    &idx,
                    residual(
                        &[p(&fro_a, &eb), at(flo, &gx(glo, a), b)],
                        &[p(&ea, &flo_b), at(fro, &gx(gro, b), a)],
                    ),
                );
                report.check(
                    "perm-mp-4",
                    &idx,
                    residual(
                        &[p(&flo_a, &eb), at(flo, &gx(gro, a), b)],
                        &[p(&fro_a, &eb), at(flo, &gx(glo, a), b)],
                    ),
                );
                report.check("perm-mp-5", &idx, fro[x].apply(&residual(std::slice::from_ref(&ab), &[ba])));
                report.check(
                    "leib-mp-1",
                    &idx,
                    residual(
                        &[frb[x].apply(&bab), q(&eb, &frb_a), at(frb, &gx(glb, a), b)],
                        &[q(&ea, &frb_b), at(frb, &gx(glb, b), a)],
                    ),
                );
                report.check(
                    "leib-mp-2",
                    &idx,
                    residual(
                        &[flb[x].apply(&bab)],
                        &[q(&flb_a, &eb), q(&ea, &flb_b), at(flb, &gx(grb, a), b), at(frb, &gx(grb, b), a)],
                    ),
                );
                report.check(
                    "leib-mp-3",
                    &idx,
                    residual(
                        &[q(&flb_a, &eb), at(flb, &gx(grb, a), b), q(&frb_a, &eb), at(flb, &gx(glb, a), b)],
                        &[],
                    ),
                );
                report.check(
                    "dpp-mp-1",
                    &idx,
                    residual(
                        &[q(&ea, &flo_b), at(frb, &gx(gro, b), a)],
                        &[p(&frb_a, &eb), flo[x].apply(&bab), at(flo, &gx(glb, a), b)],
                    ),
                );
                report.check(
                    "dpp-mp-2",
                    &idx,
                    residual(
                        &[q(&ea, &fro_b), at(frb, &gx(glo, b), a)],
                        &[p(&eb, &frb_a), fro[x].apply(&bab), at(fro, &gx(glb, a), b)],
                    ),
                );
                report.check(
                    "dpp-mp-3",
                    &idx,
                    residual(
                        &[flb[x].apply(&ab)],
                        &[at(flo, &gx(grb, a), b), at(fro, &gx(grb, b), a), p(&flb_a, &eb), p(&ea, &flb_b)],
                    ),
                );
                report.check(
                    "dpp-mp-4",
                    &idx,
                    residual(
                        &[q(&flo_a, &eb), at(flb, &gx(gro, a), b)],
                        &[flo[x].apply(&bab), p(&ea, &flb_b), at(fro, &gx(grb, b), a)],
                    ),
                );
                report.check(
                    "dpp-mp-5",
                    &idx,
                    residual(
                        &[q(&flo_a, &eb), at(flb, &gx(gro, a), b)],
                        &[q(&fro_a, &eb), at(flb, &gx(glo, a), b)],
                    ),
                );
                report.check(
                    "dpp-mp-6",
                    &idx,
                    residual(
                        &[frb[x].apply(&ab)],
                        &[p(&ea, &frb_b), at(fro, &gx(glb, b), a), p(&eb, &frb_a), at(fro, &gx(glb, a), b)],
                    ),
                );
                report.check(
                    "dpp-mp-7",
                    &idx,
                    residual(
                        &[at(flo, &gx(glb, a), b), p(&frb_a, &eb), p(&flb_a, &eb), at(flo, &gx(grb, a), b)],
                        &[],
                    ),
                );
                report.check("dpp-mp-8", &idx, fro[x].apply(&residual(&[bab, bba], &[])));
            }
        }
    }
    Ok(report.finish())
}

/// Checks both representations and all matched-pair equations in both
/// directions. The glued algebra is checked too; a `glue-agreement`
/// witness records a disagreement between the two verdicts.
pub fn check_matched_pair<S: Field>(mp: &MatchedPairData<S>) -> Result<VerificationReport<S>, S> {
    require(&mp.a1, StructureKind::DualPrePoisson)?;
    require(&mp.a2, StructureKind::DualPrePoisson)?;
    let equations = VerificationReport::concat([
        check_representation(&mp.a1, &mp.on_a2)?.prefixed("rep-on-a2"),
        check_representation(&mp.a2, &mp.on_a1)?.prefixed("rep-on-a1"),
        matched_pair_equations(&mp.a2, &mp.on_a2, &mp.on_a1)?.prefixed("into-a2"),
        matched_pair_equations(&mp.a1, &mp.on_a1, &mp.on_a2)?.prefixed("into-a1"),
    ]);
    let glued = check_structure(&matched_pair_glue(mp)?, StructureKind::DualPrePoisson)?;
    if equations.passed() == glued.passed() {
        return Ok(equations);
    }
    let mut extra = ReportBuilder::new(["glue-agreement"]);
    extra.fail("glue-agreement", &[usize::from(glued.passed())]);
    Ok(VerificationReport::concat([equations, extra.finish()]))
}

/// Checks the standard Manin triple candidate `A ⋈ A*` built from the
/// coregular-type actions: both summands are subalgebras, the sum is dual
/// pre-Poisson and [`standard_form`] is invariant on it.
pub fn check_manin_triple<S: Field>(a: &Algebra<S>, astar: &Algebra<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require(astar, StructureKind::DualPrePoisson)?;
    let mp = MatchedPairData::coregular(a.clone(), astar.clone())?;
    let big = matched_pair_glue(&mp)?;
    let n = a.dim();
    let mut sub = ReportBuilder::new(["a-subalgebra", "astar-subalgebra"]);
    for op in [PERM, BRACKET] {
        let t = big.op(op)?;
        for (i, j, k, c) in t.entries() {
            let (si, sj, sk) = (*i < n, *j < n, *k < n);
            if si && sj && !sk {
                sub.check("a-subalgebra", &[*i, *j, *k], vec![c.clone()]);
            }
            if !si && !sj && sk {
                sub.check("astar-subalgebra", &[*i, *j, *k], vec![c.clone()]);
            }
        }
    }
    let dpp = check_structure(&big, StructureKind::DualPrePoisson)?;
    let form = form_report(&big, &standard_form(n))?;
    Ok(VerificationReport::concat([
        sub.finish(),
        dpp.prefixed("double"),
        form.report.prefixed("form"),
    ]))
}

/// The three verdicts of the Manin triple, matched pair and bialgebra
/// characterizations for one pair `(A, A*)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleEquivalence<S = Q> {
    pub manin: VerificationReport<S>,
    pub matched_pair: VerificationReport<S>,
    pub bialgebra: VerificationReport<S>,
}

impl<S: Field> TripleEquivalence<S> {
    pub fn verdicts(&self) -> [bool; 3] {
        [self.manin.passed(), self.matched_pair.passed(), self.bialgebra.passed()]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v[0] == v[1] && v[1] == v[2]
    }

    /// All three sub-reports, plus a `verdicts-disagree` witness carrying
    /// the three verdicts as 0/1 indices when they differ.
    pub fn report(&self) -> VerificationReport<S> {
        let mut extra = ReportBuilder::new(["verdicts-disagree"]);
        if !self.agree() {
            let v = self.verdicts().map(usize::from);
            extra.fail("verdicts-disagree", &v);
        }
        VerificationReport::concat([
            self.manin.clone().prefixed("manin"),
            self.matched_pair.clone().prefixed("matched-pair"),
            self.bialgebra.clone().prefixed("bialgebra"),
            extra.finish(),
        ])
    }
}

/// Evaluates the Manin triple, matched pair and bialgebra conditions for `A`
/// and a dual pre-Poisson structure on `A*`, with `δ` dual to `A*`.
pub fn triple_equivalence<S: Field>(a: &Algebra<S>, astar: &Algebra<S>) -> Result<TripleEquivalence<S>, S> {
    let manin = check_manin_triple(a, astar)?;
    let mp = MatchedPairData::coregular(a.clone(), astar.clone())?;
    let matched_pair = check_matched_pair(&mp)?;
    let (dp, db) = dualize_algebra(astar)?;
    let bialgebra = check_bialgebra(&BialgebraData::new(a.clone(), dp, db)?)?;
    Ok(TripleEquivalence {
        manin,
        matched_pair,
        bialgebra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::kernel::int;

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn standard_form_blocks() {
        assert_eq!(standard_form::<Q>(1).matrix(), &Matrix::from_ints(&[[0, -1], [1, 0]]));
        let b = standard_form::<Q>(2);
        // B(e₁*, e₁) = 1 = −B(e₁, e₁*).
        assert_eq!(b.eval(&ints(&[0, 0, 1, 0]), &ints(&[1, 0, 0, 0])), int(1));
        assert_eq!(b.eval(&ints(&[1, 0, 0, 0]), &ints(&[0, 0, 1, 0])), int(-1));
        assert!(BilinearForm::<Q>::new(Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn plane_double_is_quadratic() {
        let (double, b) = quadratic_doubles(&catalog::plane::<Q>(), DoubleMode::DualPrePoisson).unwrap();
        assert_eq!(double, catalog::plane_double());
        let fr = check_invariant_form(&double, &b).unwrap();
        assert!(fr.is_quadratic() && fr.report.passed());

        let fr = check_invariant_form(&double, &BilinearForm::new(Matrix::identity(4)).unwrap()).unwrap();
        assert!(!fr.skew && fr.nondegenerate);
        assert!(!fr.is_quadratic());
        assert_eq!(fr.report.first().unwrap().label, "skew");
    }

    #[test]
    fn poisson_double_and_zero_double_are_quadratic() {
        let (double, b) = quadratic_doubles(&catalog::heisenberg_poisson::<Q>(), DoubleMode::Poisson).unwrap();
        assert_eq!(double, catalog::heisenberg_poisson_double());
        assert!(check_invariant_form(&double, &b).unwrap().is_quadratic());

        let zero = Algebra::<Q>::zero(2, StructureKind::DualPrePoisson);
        let (double, b) = quadratic_doubles(&zero, DoubleMode::DualPrePoisson).unwrap();
        assert!(double.ops().values().all(Tensor3::is_zero));
        assert!(check_invariant_form(&double, &b).unwrap().is_quadratic());
    }

    #[test]
    fn degenerate_form_is_flagged() {
        let fr = check_invariant_form(&catalog::plane_double::<Q>(), &BilinearForm::new(Matrix::zeros(4, 4)).unwrap())
            .unwrap();
        assert!(fr.skew && fr.invariant && !fr.nondegenerate);
    }

    #[test]
    fn tensor_of_quadratic_factors() {
        let perm = catalog::plane_perm_double::<Q>();
        let poisson = catalog::line_poisson::<Q>();
        let one = BilinearForm::new(Matrix::identity(1)).unwrap();
        let (alg, b) = quadratic_tensor(&perm, &standard_form(2), &poisson, &one).unwrap();
        assert_eq!(alg.dim(), 4);
        assert!(check_invariant_form(&alg, &b).unwrap().is_quadratic());

        let zero_form = BilinearForm::new(Matrix::zeros(1, 1)).unwrap();
        let (alg, b) = quadratic_tensor(&perm, &standard_form(2), &poisson, &zero_form).unwrap();
        let fr = check_invariant_form(&alg, &b).unwrap();
        assert!(!fr.nondegenerate && !fr.is_quadratic());

        let heis = catalog::heisenberg_poisson::<Q>();
        let (alg, _) = quadratic_tensor(&catalog::plane_perm(), &BilinearForm::new(Matrix::zeros(2, 2)).unwrap(), &heis, &BilinearForm::new(Matrix::zeros(3, 3)).unwrap()).unwrap();
        assert_eq!(alg.dim(), 6);

        let err = quadratic_tensor(&perm, &BilinearForm::new(Matrix::identity(4)).unwrap(), &poisson, &one).unwrap_err();
        assert_eq!(err.report().unwrap().first().unwrap().label, "skew");
    }

    #[test]
    fn skew_derivation_fixture_is_quadratic() {
        let (perm, d1, d2) = catalog::skew_derivation_triple::<Q>();
        let b = standard_form(3);
        let (alg, b) = skew_derivation_quadratic(&perm, &d1, &d2, &b).unwrap();
        assert!(!alg.op(BRACKET).unwrap().is_zero());
        assert!(check_invariant_form(&alg, &b).unwrap().is_quadratic());

        let zero = Matrix::zeros(6, 6);
        let (alg, _) = skew_derivation_quadratic(&perm, &zero, &zero, &b).unwrap();
        assert!(alg.op(BRACKET).unwrap().is_zero());
        assert!(check_invariant_form(&alg, &b).unwrap().is_quadratic());

        let id = Matrix::identity(6);
        let report = check_skew_derivations(&b, &[&id]).unwrap();
        let w = report.first().unwrap();
        assert_eq!(w.indices, vec![1, 0, 3]);
        assert_eq!(w.residual, ints(&[-2]));
    }

    #[test]
    fn coproduct_layout() {
        let (dp, db) = dualize_algebra(&catalog::plane::<Q>()).unwrap();
        let e2e2 = Tensor3::from_ints(2, &[(0, 1, 1, 1)]);
        assert_eq!(dp.tensor(), &e2e2);
        assert_eq!(db.tensor(), &e2e2);
        assert_eq!(dp.apply(&ints(&[1, 0])), ints(&[0, 0, 0, 1]));
        assert!(check_coalgebra(&dp, &db).unwrap().passed());
        assert_eq!(dualize_coproducts(&dp, &db).unwrap(), catalog::plane());

        let c = Coproduct::new(Tensor3::<Q>::from_ints(2, &[(0, 0, 1, 1)])).unwrap();
        assert_eq!(c.flipped().tensor(), &Tensor3::from_ints(2, &[(0, 1, 0, 1)]));
        assert_eq!(c.antisymmetrized().tensor(), &Tensor3::from_ints(2, &[(0, 0, 1, 1), (0, 1, 0, -1)]));
        assert_eq!(c.symmetrized().tensor(), &Tensor3::from_ints(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]));
        assert!(Coproduct::new(Tensor3::<Q>::zeros([2, 2, 3])).is_err());
    }

    #[test]
    fn non_coassociative_coproduct() {
        assert!(check_coalgebra(&Coproduct::<Q>::zero(3), &Coproduct::zero(3)).unwrap().passed());
        // δ∘(e₁) = e₁⊗e₂: (δ⊗id)δ(e₁) = e₁⊗e₂⊗e₂ while (id⊗δ)δ(e₁) = 0.
        let dp = Coproduct::new(Tensor3::<Q>::from_ints(2, &[(0, 0, 1, 1)])).unwrap();
        let report = check_coalgebra(&dp, &Coproduct::zero(2)).unwrap();
        let w = report.first().unwrap();
        assert_eq!((w.label.as_str(), w.indices.clone()), ("perm-coassoc", vec![0]));
        assert_eq!(w.residual, ints(&[0, 0, 0, -1, 0, 0, 0, 0]));
    }

    #[test]
    fn final_example_bialgebra() {
        let bd = catalog::canonical_plane_bialgebra::<Q>();
        assert!(check_bialgebra(&bd).unwrap().passed());
        for (name, a) in catalog::dpp_fixtures::<Q>() {
            let n = a.dim();
            let zero = BialgebraData::new(a, Coproduct::zero(n), Coproduct::zero(n)).unwrap();
            assert!(check_bialgebra(&zero).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn perturbed_final_example_fails() {
        let bd = catalog::canonical_plane_bialgebra::<Q>();
        let bump = Tensor3::from_ints(4, &[(0, 0, 1, 1)]);
        let dp = Coproduct::new(bd.delta_perm().tensor().add(&bump)).unwrap();
        let err = check_bialgebra(&BialgebraData::new(bd.alg().clone(), dp, bd.delta_br().clone()).unwrap())
            .unwrap_err();
        let w = err.report().unwrap().first().unwrap();
        assert_eq!((w.label.as_str(), w.indices.clone()), ("perm-coassoc", vec![0]));
    }

    #[test]
    fn plane_with_its_own_dual_is_not_a_bialgebra() {
        let a = catalog::plane::<Q>();
        let (dp, db) = dualize_algebra(&a).unwrap();
        let report = check_bialgebra(&BialgebraData::new(a, dp, db).unwrap()).unwrap();
        let w = report.first().unwrap();
        assert_eq!((w.label.as_str(), w.indices.clone()), ("pbi-1", vec![0, 1]));
        assert_eq!(w.residual, ints(&[0, 0, -1, 0]));
        assert_eq!(report.witnesses().len(), 28);
    }

    #[test]
    fn coregular_matched_pair_glues_to_double() {
        let a = catalog::plane::<Q>();
        let zero = Algebra::zero(2, StructureKind::DualPrePoisson);
        let mp = MatchedPairData::coregular(a.clone(), zero.clone()).unwrap();
        assert!(check_matched_pair(&mp).unwrap().passed());
        assert_eq!(matched_pair_glue(&mp).unwrap(), catalog::plane_double());

        let mut on_a2 = mp.on_a2().clone();
        on_a2.families_mut()[0][1].set(0, 0, int(1));
        let bad = MatchedPairData::new(a, zero, on_a2, mp.on_a1().clone()).unwrap();
        let report = check_matched_pair(&bad).unwrap();
        assert!(!report.passed());
        assert_eq!(report.with_label("glue-agreement").count(), 0);
        assert!(!check_structure(&matched_pair_glue(&bad).unwrap(), StructureKind::DualPrePoisson)
            .unwrap()
            .passed());
    }

    #[test]
    fn zero_matched_pair() {
        let z = Algebra::<Q>::zero(2, StructureKind::DualPrePoisson);
        let mp = MatchedPairData::new(z.clone(), z, Representation::zero(2, 2), Representation::zero(2, 2)).unwrap();
        assert!(check_matched_pair(&mp).unwrap().passed());
        assert!(matched_pair_glue(&mp).unwrap().ops().values().all(Tensor3::is_zero));
    }

    #[test]
    fn triple_verdicts() {
        let zero = Algebra::<Q>::zero(2, StructureKind::DualPrePoisson);
        let t = triple_equivalence(&catalog::plane(), &zero).unwrap();
        assert_eq!(t.verdicts(), [true, true, true]);

        let double = catalog::canonical_plane_double::<Q>();
        let star = crate::ybe::dual_products_from_r(&double, &catalog::canonical_r(2)).unwrap();
        assert!(check_manin_triple(&double, &star).unwrap().passed());
        assert_eq!(triple_equivalence(&double, &star).unwrap().verdicts(), [true, true, true]);

        let t = triple_equivalence(&catalog::plane::<Q>(), &catalog::plane()).unwrap();
        assert_eq!(t.verdicts(), [false, false, false]);
        assert!(t.report().with_label("verdicts-disagree").next().is_none());

        let not_dpp = Algebra::<Q>::from_ints(2, &[(PERM, &[(1, 1, 0, 1)]), (BRACKET, &[(1, 1, 1, 1)])]);
        assert!(matches!(
            check_manin_triple(&catalog::plane(), &not_dpp),
            Err(Error::Precondition { .. })
        ));
    }
}
