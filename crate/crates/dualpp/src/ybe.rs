//! The permutative-Leibniz Yang-Baxter equation, coboundary bialgebras,
//! O-operators, Rota-Baxter operators and the canonical solutions built
//! from pre-dual pre-Poisson algebras.

use crate::algebra::names::*;
use crate::algebra::{check_structure, predpp_sub_adjacent, require, Algebra, StructureKind};
use crate::constructions::LinearOperator;
use crate::error::{Error, Result};
use crate::kernel::{add_vec, invert, sub_vec, unit, Field, Matrix, Tensor3, Q};
use crate::quadratic::{check_invariant_form, BialgebraData, BilinearForm, Coproduct};
use crate::report::{ReportBuilder, VerificationReport};
use crate::representations::{
    check_representation, combine, dual_families, dual_rep, regular_rep, semidirect, Representation,
};

/// `r = Σ m_ij e_i⊗e_j`. Under dual bases the matrix of `r̃: A* → A`,
/// `⟨r̃(u*), v*⟩ = ⟨r, u*⊗v*⟩`, is `mᵀ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement<S = Q> {
    matrix: Matrix<S>,
}

impl<S: Field> TensorElement<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        TensorElement { matrix }
    }

    pub fn zero(n: usize) -> Self {
        TensorElement {
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `τr = r`.
    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_square() && self.matrix.is_symmetric()
    }

    /// The matrix of `r̃`.
    pub fn r_tilde(&self) -> Matrix<S> {
        self.matrix.transpose()
    }

    fn coefficients(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let n = self.matrix.cols();
        self.matrix
            .data()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (idx / n, idx % n, c))
    }
}

/// `r = Σᵢ (eᵢ⊗eᵢ* + eᵢ*⊗eᵢ)` on `A ⊕ A*`, basis `(e₁..eₙ, e₁*..eₙ*)`.
pub fn canonical_r<S: Field>(n: usize) -> TensorElement<S> {
    TensorElement::new(Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i + n == j || j + n == i {
            S::one()
        } else {
            S::zero()
        }
    }))
}

fn require_r<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<(), S> {
    let m = r.matrix();
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::Dimension(format!(
            "r is {}x{}, algebra has dimension {}",
            m.rows(),
            m.cols(),
            a.dim()
        )));
    }
    Ok(())
}

fn require_symmetric<S: Field>(r: &TensorElement<S>) -> Result<(), S> {
    if r.is_symmetric() {
        return Ok(());
    }
    let m = r.matrix();
    let mut report = ReportBuilder::new(["symmetric"]);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            report.check("symmetric", &[i, j], vec![m.get(i, j).sub_ref(m.get(j, i))]);
        }
    }
    Err(Error::precondition("r is not symmetric", report.finish()))
}

/// `P(r) = r₁₃∘r₂₃ − r₁₂∘r₂₃ + r₁₃■r₁₂` and
/// `L(r) = [r₁₃,r₂₃] + [r₁₂,r₂₃] − r₁₂□r₁₃` as 3-tensors with entry
/// `(α, β, γ)` the coefficient of `e_α⊗e_β⊗e_γ`.
pub fn plybe_residual<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<(Tensor3<S>, Tensor3<S>), S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_r(a, r)?;
    let n = a.dim();
    let (perm, br) = (a.op(PERM)?, a.op(BRACKET)?);
    let mul = |t: &Tensor3<S>, i: usize, j: usize| t.apply(&unit(n, i), &unit(n, j));
    let mut p = Vec::new();
    let mut l = Vec::new();
    let coeffs: Vec<(usize, usize, &S)> = r.coefficients().collect();
    for &(i, j, c) in &coeffs {
        for &(s, t, d) in &coeffs {
            let cd = c.mul_ref(d);
            let neg = -cd.clone();
            let push = |out: &mut Vec<(usize, usize, usize, S)>, v: Vec<S>, slot: usize, o1: usize, o2: usize, w: &S| {
                for (k, x) in v.into_iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let idx = match slot {
                        0 => (k, o1, o2),
                        1 => (o1, k, o2),
                        _ => (o1, o2, k),
                    };
                    out.push((idx.0, idx.1, idx.2, x.mul_ref(w)));
                }
            };
            // r₁₃∘r₂₃ = Σ e_i⊗e_s⊗(e_j∘e_t)
            push(&mut p, mul(perm, j, t), 2, i, s, &cd);
            // r₁₂∘r₂₃ = Σ e_i⊗(e_j∘e_s)⊗e_t
            push(&mut p, mul(perm, j, s), 1, i, t, &neg);
            // r₁₃■r₁₂ = Σ (e_i■e_s)⊗e_t⊗e_j
            push(&mut p, sub_vec(&mul(perm, i, s), &mul(perm, s, i)), 0, t, j, &cd);
            // [r₁₃,r₂₃] = Σ e_i⊗e_s⊗[e_j,e_t]
            push(&mut l, mul(br, j, t), 2, i, s, &cd);
            // [r₁₂,r₂₃] = Σ e_i⊗[e_j,e_s]⊗e_t
            push(&mut l, mul(br, j, s), 1, i, t, &cd);
            // r₁₂□r₁₃ = Σ (e_i□e_s)⊗e_j⊗e_t
            push(&mut l, add_vec(&mul(br, i, s), &mul(br, s, i)), 0, j, t, &neg);
        }
    }
    Ok((Tensor3::from_entries([n, n, n], p)?, Tensor3::from_entries([n, n, n], l)?))
}

/// [`plybe_residual`] as a report with labels `plybe-perm` and `plybe-bracket`.
pub fn check_plybe<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<VerificationReport<S>, S> {
    let (p, l) = plybe_residual(a, r)?;
    let mut report = ReportBuilder::new(["plybe-perm", "plybe-bracket"]);
    for (label, t) in [("plybe-perm", &p), ("plybe-bracket", &l)] {
        for (i, j, k, c) in t.entries() {
            report.check(label, &[*i, *j, *k], vec![c.clone()]);
        }
    }
    Ok(report.finish())
}

/// `δ∘,r(x) = (R■(x)⊗id + id⊗R∘(x))r` and `δ[,],r(x) = (L□(x)⊗id − id⊗R[,](x))r`.
pub fn coproducts_from_r<S: Field>(
    a: &Algebra<S>,
    r: &TensorElement<S>,
) -> Result<(Coproduct<S>, Coproduct<S>), S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_r(a, r)?;
    let n = a.dim();
    let (perm, br) = (a.op(PERM)?, a.op(BRACKET)?);
    let mul = |t: &Tensor3<S>, i: usize, j: usize| t.apply(&unit(n, i), &unit(n, j));
    let mut dp = Vec::new();
    let mut db = Vec::new();
    for x in 0..n {
        for (i, j, c) in r.coefficients() {
            // R■(x)e_i = e_i∘x − x∘e_i
            let bs = sub_vec(&mul(perm, i, x), &mul(perm, x, i));
            let sq = add_vec(&mul(br, x, i), &mul(br, i, x));
            for k in 0..n {
                if !bs[k].is_zero() {
                    dp.push((x, k, j, bs[k].mul_ref(c)));
                }
                if !sq[k].is_zero() {
                    db.push((x, k, j, sq[k].mul_ref(c)));
                }
            }
            let rp = mul(perm, j, x);
            let rb = mul(br, j, x);
            for k in 0..n {
                if !rp[k].is_zero() {
                    dp.push((x, i, k, rp[k].mul_ref(c)));
                }
                if !rb[k].is_zero() {
                    db.push((x, i, k, -rb[k].mul_ref(c)));
                }
            }
        }
    }
    Ok((
        Coproduct::new(Tensor3::from_entries([n, n, n], dp)?)?,
        Coproduct::new(Tensor3::from_entries([n, n, n], db)?)?,
    ))
}

fn require_solution<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<(), S> {
    require_r(a, r)?;
    require_symmetric(r)?;
    let report = check_plybe(a, r)?;
    if !report.passed() {
        return Err(Error::precondition("r is not a solution of the PLYBE", report));
    }
    Ok(())
}

/// The coboundary bialgebra of a symmetric solution, re-verified with
/// [`check_bialgebra`](crate::quadratic::check_bialgebra).
pub fn bialgebra_from_r<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<BialgebraData<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_solution(a, r)?;
    let (dp, db) = coproducts_from_r(a, r)?;
    let bd = BialgebraData::new(a.clone(), dp, db)?;
    let report = crate::quadratic::check_bialgebra(&bd)?;
    if !report.passed() {
        return Err(Error::precondition("coboundary data is not a bialgebra", report));
    }
    Ok(bd)
}

/// `T: V → A` together with a representation of `A` on `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OOperatorData<S = Q> {
    alg: Algebra<S>,
    rep: Representation<S>,
    t: Matrix<S>,
}

impl<S: Field> OOperatorData<S> {
    pub fn new(alg: Algebra<S>, rep: Representation<S>, t: Matrix<S>) -> Result<Self, S> {
        if rep.dim_a() != alg.dim() || t.rows() != alg.dim() || t.cols() != rep.dim_v() {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, expected {}x{}",
                t.rows(),
                t.cols(),
                alg.dim(),
                rep.dim_v()
            )));
        }
        Ok(OOperatorData { alg, rep, t })
    }

    /// `T` on the regular representation.
    pub fn rota_baxter(alg: Algebra<S>, p: LinearOperator<S>) -> Result<Self, S> {
        let rep = regular_rep(&alg)?;
        Self::new(alg, rep, p)
    }

    pub fn alg(&self) -> &Algebra<S> {
        &self.alg
    }

    pub fn rep(&self) -> &Representation<S> {
        &self.rep
    }

    pub fn t(&self) -> &Matrix<S> {
        &self.t
    }
}

/// Checks `T(u)∘T(v) = T(l∘(Tu)v + r∘(Tv)u)` and the bracket analogue on
/// all basis pairs of `V`.
pub fn check_o_operator<S: Field>(od: &OOperatorData<S>) -> Result<VerificationReport<S>, S> {
    let rep_report = check_representation(&od.alg, &od.rep)?;
    if !rep_report.passed() {
        return Err(Error::precondition("input is not a representation", rep_report));
    }
    let m = od.rep.dim_v();
    let t = &od.t;
    let fam = od.rep.families();
    let mut report = ReportBuilder::new(["perm-o-operator", "bracket-o-operator"]);
    for (label, op, f) in [("perm-o-operator", PERM, 0), ("bracket-o-operator", BRACKET, 2)] {
        let prod = od.alg.op(op)?;
        for u in 0..m {
            for v in 0..m {
                let (tu, tv) = (t.column(u), t.column(v));
                let lhs = prod.apply(&tu, &tv);
                let inner = add_vec(
                    &combine(fam[f], &tu, m).column(v),
                    &combine(fam[f + 1], &tv, m).column(u),
                );
                report.check(label, &[u, v], sub_vec(&lhs, &t.apply(&inner)));
            }
        }
    }
    Ok(report.finish())
}

/// Checks `P(x)∘P(y) = P(P(x)∘y + x∘P(y))` and the bracket analogue through
/// [`check_o_operator`] on the regular representation.
pub fn check_rota_baxter<S: Field>(a: &Algebra<S>, p: &LinearOperator<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    if p.rows() != a.dim() || p.cols() != a.dim() {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, algebra has dimension {}",
            p.rows(),
            p.cols(),
            a.dim()
        )));
    }
    check_o_operator(&OOperatorData::rota_baxter(a.clone(), p.clone())?)
}

/// Two independently computed verdicts that a proposition says coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence<S = Q> {
    pub names: [&'static str; 2],
    pub reports: [VerificationReport<S>; 2],
}

impl<S: Field> Equivalence<S> {
    pub fn verdicts(&self) -> [bool; 2] {
        [self.reports[0].passed(), self.reports[1].passed()]
    }

    pub fn agree(&self) -> bool {
        let [a, b] = self.verdicts();
        a == b
    }

    /// Both sub-reports, plus a `verdicts-disagree` witness carrying the two
    /// verdicts as 0/1 indices when they differ.
    pub fn report(&self) -> VerificationReport<S> {
        let mut extra = ReportBuilder::new(["verdicts-disagree"]);
        if !self.agree() {
            extra.fail("verdicts-disagree", &self.verdicts().map(usize::from));
        }
        VerificationReport::concat([
            self.reports[0].clone().prefixed(self.names[0]),
            self.reports[1].clone().prefixed(self.names[1]),
            extra.finish(),
        ])
    }
}

/// The coregular representation `(A*; −L∘*, −L■*, L[,]*, −L□*)`.
pub fn coregular_rep<S: Field>(a: &Algebra<S>) -> Result<Representation<S>, S> {
    Ok(dual_families(&regular_rep(a)?))
}

/// The PLYBE verdict for a symmetric `r` next to the O-operator verdict
/// of `r̃` on the coregular representation.
pub fn r_is_solution_iff_o_operator<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<Equivalence<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_r(a, r)?;
    require_symmetric(r)?;
    let plybe = check_plybe(a, r)?;
    let od = OOperatorData::new(a.clone(), coregular_rep(a)?, r.r_tilde())?;
    let o_op = check_o_operator(&od)?;
    Ok(Equivalence {
        names: ["plybe", "o-operator"],
        reports: [plybe, o_op],
    })
}

/// Checks `T(u∘v) = T(u)∘T(v)` and the bracket analogue on basis pairs.
pub fn check_homomorphism<S: Field>(
    t: &Matrix<S>,
    source: &Algebra<S>,
    target: &Algebra<S>,
) -> Result<VerificationReport<S>, S> {
    let m = source.dim();
    if t.rows() != target.dim() || t.cols() != m {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {}x{m}",
            t.rows(),
            t.cols(),
            target.dim()
        )));
    }
    let mut report = ReportBuilder::new(["perm-homomorphism", "bracket-homomorphism"]);
    for (label, op) in [("perm-homomorphism", PERM), ("bracket-homomorphism", BRACKET)] {
        let (ps, pt) = (source.op(op)?, target.op(op)?);
        for u in 0..m {
            for v in 0..m {
                let lhs = t.apply(&ps.apply(&unit(m, u), &unit(m, v)));
                let rhs = pt.apply(&t.column(u), &t.column(v));
                report.check(label, &[u, v], sub_vec(&lhs, &rhs));
            }
        }
    }
    Ok(report.finish())
}

/// `a*∘b* = −L∘*(r̃a*)b* − L■*(r̃b*)a*` and
/// `[a*,b*] = L[,]*(r̃a*)b* − L□*(r̃b*)a*` on `A*`, checked to be dual
/// pre-Poisson with `r̃` a homomorphism to `A`.
pub fn dual_products_from_r<S: Field>(a: &Algebra<S>, r: &TensorElement<S>) -> Result<Algebra<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    require_solution(a, r)?;
    let n = a.dim();
    let rt = r.r_tilde();
    let (lp, rp) = (a.left_muls(PERM)?, a.right_muls(PERM)?);
    let (lb, rb) = (a.left_muls(BRACKET)?, a.right_muls(BRACKET)?);
    let l_bs: Vec<Matrix<S>> = (0..n).map(|x| &lp[x] - &rp[x]).collect();
    let l_sq: Vec<Matrix<S>> = (0..n).map(|x| &lb[x] + &rb[x]).collect();
    let star = |f: &[Matrix<S>], x: &[S]| -combine(f, x, n).transpose();
    let perm = Tensor3::from_table(n, n, n, |i, j| {
        let (ra, rb_) = (rt.column(i), rt.column(j));
        let u = star(&lp, &ra).apply(&unit(n, j));
        let v = star(&l_bs, &rb_).apply(&unit(n, i));
        sub_vec(&scale_neg(&u), &v)
    });
    let bracket = Tensor3::from_table(n, n, n, |i, j| {
        let (ra, rb_) = (rt.column(i), rt.column(j));
        let u = star(&lb, &ra).apply(&unit(n, j));
        let v = star(&l_sq, &rb_).apply(&unit(n, i));
        sub_vec(&u, &v)
    });
    let dual = Algebra::new(n).with_op(PERM, perm)?.with_op(BRACKET, bracket)?;
    let dpp = check_structure(&dual, StructureKind::DualPrePoisson)?;
    let hom = check_homomorphism(&rt, &dual, a)?;
    let report = VerificationReport::concat([dpp.prefixed("dual"), hom]);
    if !report.passed() {
        return Err(Error::precondition("dual products are inconsistent", report));
    }
    Ok(dual)
}

fn scale_neg<S: Field>(v: &[S]) -> Vec<S> {
    v.iter().map(|c| -c.clone()).collect()
}

/// `B(x,y) = ⟨r̃⁻¹(x), y⟩`, whose matrix is the inverse of the matrix of `r`.
pub fn induced_form<S: Field>(r: &TensorElement<S>) -> Result<BilinearForm<S>, S> {
    BilinearForm::new(invert(r.matrix())?)
}

/// Checks `B(x∘y,z) = B(y,x∘z) + B(x,y■z)` and
/// `B([x,y],z) = −B(y,[x,z]) + B(x,y□z)` on basis triples.
pub fn check_closed_conditions<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::Dimension(format!(
            "form has dimension {}, algebra has dimension {n}",
            b.dim()
        )));
    }
    let (perm, br) = (a.op(PERM)?, a.op(BRACKET)?);
    let p = |i: usize, j: usize| perm.apply(&unit(n, i), &unit(n, j));
    let q = |i: usize, j: usize| br.apply(&unit(n, i), &unit(n, j));
    let mut report = ReportBuilder::new(["closed-perm", "closed-bracket"]);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (unit(n, x), unit(n, y), unit(n, z));
                let bs_yz = sub_vec(&p(y, z), &p(z, y));
                let r1 = b
                    .eval(&p(x, y), &ez)
                    .sub_ref(&b.eval(&ey, &p(x, z)))
                    .sub_ref(&b.eval(&ex, &bs_yz));
                let sq_yz = add_vec(&q(y, z), &q(z, y));
                let r2 = b
                    .eval(&q(x, y), &ez)
                    .add_ref(&b.eval(&ey, &q(x, z)))
                    .sub_ref(&b.eval(&ex, &sq_yz));
                report.check("closed-perm", &[x, y, z], vec![r1]);
                report.check("closed-bracket", &[x, y, z], vec![r2]);
            }
        }
    }
    Ok(report.finish())
}

/// The matrix of `φ: A → A*`, `⟨φ(x), y⟩ = B(x,y)`.
pub fn form_map<S: Field>(b: &BilinearForm<S>) -> Matrix<S> {
    b.matrix().transpose()
}

/// `P_r = r̃∘φ` for a quadratic form, with the PLYBE verdict of `r` next to
/// the Rota-Baxter verdict of `P_r`.
pub fn r_to_rota_baxter<S: Field>(
    a: &Algebra<S>,
    b: &BilinearForm<S>,
    r: &TensorElement<S>,
) -> Result<(LinearOperator<S>, Equivalence<S>), S> {
    let form = check_invariant_form(a, b)?;
    if !form.is_quadratic() {
        return Err(Error::precondition("form is not quadratic", form.report));
    }
    require_r(a, r)?;
    require_symmetric(r)?;
    let p = &r.r_tilde() * &form_map(b);
    let plybe = check_plybe(a, r)?;
    let rb = check_rota_baxter(a, &p)?;
    Ok((
        p,
        Equivalence {
            names: ["plybe", "rota-baxter"],
            reports: [plybe, rb],
        },
    ))
}

fn require_o_operator<S: Field>(od: &OOperatorData<S>) -> Result<(), S> {
    let report = check_o_operator(od)?;
    if !report.passed() {
        return Err(Error::precondition("operator is not an O-operator", report));
    }
    Ok(())
}

fn require_valid<S: Field>(alg: &Algebra<S>, kind: StructureKind, what: &str) -> Result<(), S> {
    let report = check_structure(alg, kind)?;
    if !report.passed() {
        return Err(Error::precondition(what.to_string(), report));
    }
    Ok(())
}

/// `u▷v = l∘(Tu)v`, `u◁v = r∘(Tv)u`, `u≻v = l[,](Tu)v`, `u≺v = r[,](Tv)u`
/// on `V`, checked to be pre-dual pre-Poisson with `T` a homomorphism from
/// its sub-adjacent algebra to `A`.
pub fn o_operator_to_predpp<S: Field>(od: &OOperatorData<S>) -> Result<Algebra<S>, S> {
    require_o_operator(od)?;
    let m = od.rep.dim_v();
    let t = &od.t;
    let fam = od.rep.families();
    let left = |f: &[Matrix<S>]| Tensor3::from_table(m, m, m, |u, v| combine(f, &t.column(u), m).column(v));
    let right = |f: &[Matrix<S>]| Tensor3::from_table(m, m, m, |u, v| combine(f, &t.column(v), m).column(u));
    let out = Algebra::new(m)
        .with_op(RTRI, left(fam[0]))?
        .with_op(LTRI, right(fam[1]))?
        .with_op(SUCC, left(fam[2]))?
        .with_op(PREC, right(fam[3]))?;
    require_valid(&out, StructureKind::PreDualPrePoisson, "induced products are not pre-dual pre-Poisson")?;
    let (sub, _) = predpp_sub_adjacent(&out)?;
    let hom = check_homomorphism(t, &sub, &od.alg)?;
    if !hom.passed() {
        return Err(Error::precondition("operator is not a homomorphism", hom));
    }
    Ok(out)
}

/// `x▷y = T(l∘(x)T⁻¹y)`, `x◁y = T(r∘(y)T⁻¹x)`, `x≻y = T(l[,](x)T⁻¹y)`,
/// `x≺y = T(r[,](y)T⁻¹x)` for an invertible O-operator; the sub-adjacent
/// algebra of the result is `A` itself.
pub fn invertible_o_to_compatible_predpp<S: Field>(od: &OOperatorData<S>) -> Result<Algebra<S>, S> {
    let t = &od.t;
    if !t.is_square() {
        return Err(Error::Dimension(format!("operator is {}x{}", t.rows(), t.cols())));
    }
    let t_inv = invert(t)?;
    require_o_operator(od)?;
    let n = od.alg.dim();
    let fam = od.rep.families();
    let left = |f: &[Matrix<S>]| {
        Tensor3::from_table(n, n, n, |x, y| t.apply(&f[x].apply(&t_inv.column(y))))
    };
    let right = |f: &[Matrix<S>]| {
        Tensor3::from_table(n, n, n, |x, y| t.apply(&f[y].apply(&t_inv.column(x))))
    };
    let out = Algebra::new(n)
        .with_op(RTRI, left(fam[0]))?
        .with_op(LTRI, right(fam[1]))?
        .with_op(SUCC, left(fam[2]))?
        .with_op(PREC, right(fam[3]))?;
    require_valid(&out, StructureKind::PreDualPrePoisson, "induced products are not pre-dual pre-Poisson")?;
    let (sub, _) = predpp_sub_adjacent(&out)?;
    if sub.op(PERM)? != od.alg.op(PERM)? || sub.op(BRACKET)? != od.alg.op(BRACKET)? {
        let hom = check_homomorphism(&Matrix::identity(n), &sub, &od.alg)?;
        return Err(Error::precondition("sub-adjacent algebra differs from the input", hom));
    }
    Ok(out)
}

/// The compatible pre-dual pre-Poisson structure of a nondegenerate
/// symmetric form satisfying the closed conditions, through `φ⁻¹` as an
/// O-operator on the coregular representation.
pub fn closed_form_predpp<S: Field>(a: &Algebra<S>, b: &BilinearForm<S>) -> Result<Algebra<S>, S> {
    let closed = check_closed_conditions(a, b)?;
    if !closed.passed() {
        return Err(Error::precondition("form does not satisfy the closed conditions", closed));
    }
    if !b.matrix().is_symmetric() {
        return Err(Error::Invalid("form is not symmetric".into()));
    }
    let t = invert(&form_map(b))?;
    let od = OOperatorData::new(a.clone(), coregular_rep(a)?, t)?;
    invertible_o_to_compatible_predpp(&od)
}

/// The double `Â = A ⋉ A*` for the dual of `(L▷, R◁, L≻, R≺)` together with
/// the canonical symmetric solution `Σᵢ (eᵢ⊗eᵢ* + eᵢ*⊗eᵢ)`.
pub fn predpp_canonical_r<S: Field>(p: &Algebra<S>) -> Result<(Algebra<S>, TensorElement<S>), S> {
    let (sub, rep) = predpp_sub_adjacent(p)?;
    let double = semidirect(&sub, &dual_rep(&sub, &rep)?)?;
    let r = canonical_r(p.dim());
    let report = check_plybe(&double, &r)?;
    if !report.passed() {
        return Err(Error::precondition("canonical r is not a solution", report));
    }
    Ok((double, r))
}
