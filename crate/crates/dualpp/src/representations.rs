//! Representations of dual pre-Poisson algebras, their duals and
//! semidirect products.

use crate::algebra::names::{BRACKET, PERM};
use crate::algebra::{require, Algebra, StructureKind};
use crate::error::{Error, Result};
use crate::kernel::{invert, Field, Matrix, Tensor3, Q};
use crate::report::{ReportBuilder, VerificationReport};

/// Four families `l∘, r∘, l[,], r[,]` of `m×m` matrices, one per basis
/// vector of the acting algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation<S = Q> {
    dim_v: usize,
    l_perm: Vec<Matrix<S>>,
    r_perm: Vec<Matrix<S>>,
    l_br: Vec<Matrix<S>>,
    r_br: Vec<Matrix<S>>,
}

/// Family names in the order `l_perm, r_perm, l_br, r_br`.
pub const FAMILIES: [&str; 4] = ["l_perm", "r_perm", "l_br", "r_br"];

impl<S: Field> Representation<S> {
    pub fn new(
        dim_v: usize,
        l_perm: Vec<Matrix<S>>,
        r_perm: Vec<Matrix<S>>,
        l_br: Vec<Matrix<S>>,
        r_br: Vec<Matrix<S>>,
    ) -> Result<Self, S> {
        let n = l_perm.len();
        for (name, fam) in FAMILIES.iter().zip([&l_perm, &r_perm, &l_br, &r_br]) {
            if fam.len() != n {
                return Err(Error::Dimension(format!(
                    "family {name} has {} matrices, expected {n}",
                    fam.len()
                )));
            }
            if let Some(i) = fam.iter().position(|m| m.rows() != dim_v || m.cols() != dim_v) {
                return Err(Error::Dimension(format!(
                    "{name}[{i}] is not {dim_v}x{dim_v}"
                )));
            }
        }
        Ok(Representation {
            dim_v,
            l_perm,
            r_perm,
            l_br,
            r_br,
        })
    }

    /// All-zero families for an `n`-dimensional algebra on an `m`-dimensional space.
    pub fn zero(n: usize, m: usize) -> Self {
        let z = vec![Matrix::zeros(m, m); n];
        Representation {
            dim_v: m,
            l_perm: z.clone(),
            r_perm: z.clone(),
            l_br: z.clone(),
            r_br: z,
        }
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// Dimension of the acting algebra.
    pub fn dim_a(&self) -> usize {
        self.l_perm.len()
    }

    pub fn l_perm(&self) -> &[Matrix<S>] {
        &self.l_perm
    }

    pub fn r_perm(&self) -> &[Matrix<S>] {
        &self.r_perm
    }

    pub fn l_br(&self) -> &[Matrix<S>] {
        &self.l_br
    }

    pub fn r_br(&self) -> &[Matrix<S>] {
        &self.r_br
    }

    /// The four families in the order of [`FAMILIES`].
    pub fn families(&self) -> [&[Matrix<S>]; 4] {
        [&self.l_perm, &self.r_perm, &self.l_br, &self.r_br]
    }

    pub fn families_mut(&mut self) -> [&mut Vec<Matrix<S>>; 4] {
        [&mut self.l_perm, &mut self.r_perm, &mut self.l_br, &mut self.r_br]
    }
}

/// `Σ_k c_k f(e_k)` for a family `f`.
pub(crate) fn combine<S: Field>(family: &[Matrix<S>], coeffs: &[S], m: usize) -> Matrix<S> {
    let mut out = Matrix::zeros(m, m);
    for (c, f) in coeffs.iter().zip(family) {
        if !c.is_zero() {
            out = &out + &f.scale(c);
        }
    }
    out
}

fn flat<S: Field>(m: Matrix<S>) -> Vec<S> {
    m.data().to_vec()
}

/// Checks the thirteen representation identities on all basis pairs.
pub fn check_representation<S: Field>(
    a: &Algebra<S>,
    rep: &Representation<S>,
) -> Result<VerificationReport<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    let n = a.dim();
    if rep.dim_a() != n {
        return Err(Error::Dimension(format!(
            "representation has {} matrices per family, algebra has dimension {n}",
            rep.dim_a()
        )));
    }
    let m = rep.dim_v();
    let (lp, rp, lb, rb) = (&rep.l_perm, &rep.r_perm, &rep.l_br, &rep.r_br);
    let c = |f: &[Matrix<S>], v: &[S]| combine(f, v, m);
    let mut report = ReportBuilder::new([
        "perm-rep-1a",
        "perm-rep-1b",
        "perm-rep-1c",
        "perm-rep-2a",
        "perm-rep-2b",
        "leib-rep-1",
        "leib-rep-2",
        "leib-rep-3",
        "dpp-rep-1",
        "dpp-rep-2",
        "dpp-rep-3",
        "dpp-rep-4",
        "dpp-rep-5",
        "dpp-rep-6",
        "dpp-rep-7",
        "dpp-rep-8",
    ]);
    for x in 0..n {
        for y in 0..n {
            let xy = a.basis_mul(PERM, x, y)?;
            let yx = a.basis_mul(PERM, y, x)?;
            let bxy = a.basis_mul(BRACKET, x, y)?;
            let byx = a.basis_mul(BRACKET, y, x)?;
            let idx = [x, y];
            let rp_yx = c(rp, &yx);
            report.check("perm-rep-1a", &idx, flat(&(&rp[x] * &rp[y]) - &rp_yx));
            report.check("perm-rep-1b", &idx, flat(&rp_yx - &(&lp[y] * &rp[x])));
            report.check(
                "perm-rep-1c",
                &idx,
                flat(&(&lp[y] * &rp[x]) - &(&rp[x] * &lp[y])),
            );
            report.check("perm-rep-2a", &idx, flat(&c(lp, &xy) - &(&lp[x] * &lp[y])));
            report.check(
                "perm-rep-2b",
                &idx,
                flat(&(&lp[x] * &lp[y]) - &(&lp[y] * &lp[x])),
            );
            report.check(
                "leib-rep-1",
                &idx,
                flat(&(&c(lb, &bxy) - &(&lb[x] * &lb[y])) + &(&lb[y] * &lb[x])),
            );
            report.check(
                "leib-rep-2",
                &idx,
                flat(&(&c(rb, &bxy) - &(&rb[y] * &rb[x])) - &(&lb[x] * &rb[y])),
            );
            report.check(
                "leib-rep-3",
                &idx,
                flat(&(&rb[x] * &rb[y]) + &(&rb[x] * &lb[y])),
            );
            report.check(
                "dpp-rep-1",
                &idx,
                flat(&(&c(rb, &xy) - &(&rp[y] * &rb[x])) - &(&lp[x] * &rb[y])),
            );
            report.check(
                "dpp-rep-2",
                &idx,
                flat(&(&(&lb[x] * &rp[y]) - &(&rp[y] * &lb[x])) - &c(rp, &bxy)),
            );
            report.check(
                "dpp-rep-3",
                &idx,
                flat(&(&(&lb[x] * &lp[y]) - &c(lp, &bxy)) - &(&lp[y] * &lb[x])),
            );
            report.check(
                "dpp-rep-4",
                &idx,
                flat(&(&(&rb[x] * &rp[y]) - &c(rp, &byx)) - &(&lp[y] * &rb[x])),
            );
            report.check(
                "dpp-rep-5",
                &idx,
                flat(&(&c(lb, &xy) - &(&lp[x] * &lb[y])) - &(&lp[y] * &lb[x])),
            );
            report.check("dpp-rep-6", &idx, flat(&rb[x] * &(&lp[y] - &rp[y])));
            report.check("dpp-rep-7", &idx, flat(&rp[x] * &(&lb[y] + &rb[y])));
            let sym: Vec<S> = crate::kernel::add_vec(&bxy, &byx);
            report.check("dpp-rep-8", &idx, flat(c(lp, &sym)));
        }
    }
    Ok(report.finish())
}

fn require_rep<S: Field>(a: &Algebra<S>, rep: &Representation<S>) -> Result<(), S> {
    let report = check_representation(a, rep)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition("input is not a representation", report))
    }
}

/// `(L∘, R∘, L[,], R[,])` on the algebra itself.
pub fn regular_rep<S: Field>(a: &Algebra<S>) -> Result<Representation<S>, S> {
    require(a, StructureKind::DualPrePoisson)?;
    Representation::new(
        a.dim(),
        a.left_muls(PERM)?,
        a.right_muls(PERM)?,
        a.left_muls(BRACKET)?,
        a.right_muls(BRACKET)?,
    )
}

/// Signed transpose realizing `f*` with `⟨f*(x)u*, v⟩ = −⟨u*, f(x)v⟩`.
pub fn star<S: Field>(f: &Matrix<S>) -> Matrix<S> {
    -f.transpose()
}

/// Dual representation `(−l∘*, −l∘* + r∘*, l[,]*, −l[,]* − r[,]*)` on `V*`.
pub fn dual_rep<S: Field>(a: &Algebra<S>, rep: &Representation<S>) -> Result<Representation<S>, S> {
    require_rep(a, rep)?;
    Ok(dual_families(rep))
}

/// The dual families without checking the input.
pub(crate) fn dual_families<S: Field>(rep: &Representation<S>) -> Representation<S> {
    let n = rep.dim_a();
    let mut out = Representation::zero(n, rep.dim_v());
    for x in 0..n {
        let lp = star(&rep.l_perm[x]);
        let rp = star(&rep.r_perm[x]);
        let lb = star(&rep.l_br[x]);
        let rb = star(&rep.r_br[x]);
        out.l_perm[x] = -&lp;
        out.r_perm[x] = &(-&lp) + &rp;
        out.l_br[x] = lb.clone();
        out.r_br[x] = &(-&lb) - &rb;
    }
    out
}

/// Products of the semidirect sum `A ⊕ V`, `A`-indices first, without checks.
pub(crate) fn semidirect_products<S: Field>(
    a: &Algebra<S>,
    rep: &Representation<S>,
) -> Result<Algebra<S>, S> {
    let n = a.dim();
    let m = rep.dim_v();
    let d = n + m;
    let glue = |base: &Tensor3<S>, left: &[Matrix<S>], right: &[Matrix<S>]| {
        let mut entries: Vec<(usize, usize, usize, S)> = base.entries().to_vec();
        for x in 0..n {
            for b in 0..m {
                for v in 0..m {
                    let l = left[x].get(b, v);
                    if !l.is_zero() {
                        entries.push((x, n + v, n + b, l.clone()));
                    }
                    let r = right[x].get(b, v);
                    if !r.is_zero() {
                        entries.push((n + v, x, n + b, r.clone()));
                    }
                }
            }
        }
        Tensor3::from_entries([d, d, d], entries)
    };
    Algebra::new(d)
        .with_op(PERM, glue(a.op(PERM)?, &rep.l_perm, &rep.r_perm)?)?
        .with_op(BRACKET, glue(a.op(BRACKET)?, &rep.l_br, &rep.r_br)?)
}

/// Semidirect product `A ⋉ V` with `(x+u)∘(y+v) = x∘y + l∘(x)v + r∘(y)u`
/// and the analogous bracket.
pub fn semidirect<S: Field>(a: &Algebra<S>, rep: &Representation<S>) -> Result<Algebra<S>, S> {
    require_rep(a, rep)?;
    semidirect_products(a, rep)
}

/// `A ⋉ A*` for the coregular representation, basis `(e_1..e_n, e_1*..e_n*)`.
pub fn coregular_double<S: Field>(a: &Algebra<S>) -> Result<Algebra<S>, S> {
    let reg = regular_rep(a)?;
    semidirect(a, &dual_rep(a, &reg)?)
}

/// Checks `φ f₁(x) = f₂(x) φ` for all four families and all basis `x`.
pub fn check_equivalence<S: Field>(
    a: &Algebra<S>,
    rep1: &Representation<S>,
    rep2: &Representation<S>,
    phi: &Matrix<S>,
) -> Result<VerificationReport<S>, S> {
    let n = a.dim();
    let m = rep1.dim_v();
    if rep1.dim_a() != n || rep2.dim_a() != n || rep2.dim_v() != m || phi.rows() != m || phi.cols() != m {
        return Err(Error::Dimension(
            "representations and intertwiner have inconsistent shapes".into(),
        ));
    }
    if let Err(Error::NotInvertible { rank, size }) = invert(phi) {
        return Err(Error::NotInvertible { rank, size });
    }
    let mut report = ReportBuilder::new(FAMILIES);
    for (k, name) in FAMILIES.iter().enumerate() {
        let (f1, f2) = (rep1.families()[k], rep2.families()[k]);
        for x in 0..n {
            report.check(name, &[x], flat(&(phi * &f1[x]) - &(&f2[x] * phi)));
        }
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::names::{ASSOC, LIE};
    use crate::catalog;
    use crate::kernel::{int, Q};
    use crate::quadratic::{check_invariant_form, standard_form};

    fn is_dpp(a: &Algebra<Q>) -> bool {
        crate::algebra::check_structure(a, StructureKind::DualPrePoisson).unwrap().passed()
    }

    #[test]
    fn regular_rep_of_plane() {
        let a = catalog::plane::<Q>();
        let reg = regular_rep(&a).unwrap();
        assert_eq!(reg.l_perm()[1], Matrix::from_ints(&[[0, 1], [0, 0]]));
        assert!(reg.l_perm()[0].is_zero());
        assert!(check_representation(&a, &reg).unwrap().passed());
    }

    #[test]
    fn regular_reps_of_fixtures_pass() {
        for (name, a) in catalog::dpp_fixtures::<Q>() {
            let reg = regular_rep(&a).unwrap();
            assert!(check_representation(&a, &reg).unwrap().passed(), "{name}");
            assert!(check_representation(&a, &dual_rep(&a, &reg).unwrap()).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn zero_families_and_zero_algebra() {
        let a = catalog::plane::<Q>();
        assert!(check_representation(&a, &Representation::zero(2, 3)).unwrap().passed());
        let zero = Algebra::<Q>::zero(2, StructureKind::DualPrePoisson);
        let reg = regular_rep(&zero).unwrap();
        assert!(reg.families().iter().all(|f| f.iter().all(Matrix::is_zero)));
        assert_eq!(dual_rep(&zero, &reg).unwrap(), reg);
        let double = coregular_double(&zero).unwrap();
        assert_eq!(double.dim(), 4);
        assert!(double.ops().values().all(Tensor3::is_zero));
    }

    #[test]
    fn left_and_right_agree_for_commutative_products() {
        let heis = catalog::heisenberg_poisson::<Q>().renamed(&[(ASSOC, PERM), (LIE, BRACKET)]).unwrap();
        let reg = regular_rep(&heis).unwrap();
        assert_eq!(reg.l_perm(), reg.r_perm());
        let reg = regular_rep(&catalog::plane_double::<Q>()).unwrap();
        assert_ne!(reg.l_perm(), reg.r_perm());
    }

    #[test]
    fn swapped_perm_families_fail() {
        // e₁∘e₁ = e₁, e₁∘e₂ = e₂: the triple products e₁∘e₁∘e₂ and e₁∘e₂∘e₁ differ.
        let a = Algebra::<Q>::from_ints(2, &[(PERM, &[(0, 0, 0, 1), (0, 1, 1, 1)]), (BRACKET, &[])]);
        assert!(is_dpp(&a));
        let reg = regular_rep(&a).unwrap();
        let swapped = Representation::new(
            2,
            reg.r_perm().to_vec(),
            reg.l_perm().to_vec(),
            reg.l_br().to_vec(),
            reg.r_br().to_vec(),
        )
        .unwrap();
        let report = check_representation(&a, &swapped).unwrap();
        let w = report.first().unwrap();
        assert_eq!((w.label.as_str(), w.indices.clone()), ("perm-rep-1b", vec![0, 0]));
        assert_eq!(w.residual, vec![int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn dual_of_regular_on_plane() {
        let a = catalog::plane::<Q>();
        let co = dual_rep(&a, &regular_rep(&a).unwrap()).unwrap();
        // e₂∘e₁* = e₂*
        assert_eq!(co.l_perm()[1], Matrix::from_ints(&[[0, 0], [1, 0]]));
        assert_eq!(semidirect(&a, &co).unwrap(), catalog::plane_double());
        assert_eq!(coregular_double(&a).unwrap(), catalog::plane_double());
        assert_eq!(dual_rep(&a, &co).unwrap(), regular_rep(&a).unwrap());
    }

    #[test]
    fn semidirect_with_regular_and_zero() {
        for (name, a) in catalog::dpp_fixtures::<Q>().into_iter().filter(|(_, a)| a.dim() <= 4) {
            let reg = regular_rep(&a).unwrap();
            assert!(is_dpp(&semidirect(&a, &reg).unwrap()), "{name}");
            let n = a.dim();
            let direct = semidirect(&a, &Representation::zero(n, 2)).unwrap();
            for t in direct.ops().values() {
                assert!(t.entries().iter().all(|e| e.0 < n && e.1 < n && e.2 < n), "{name}");
            }
        }
        let avg = catalog::averaged_heisenberg::<Q>();
        let double = coregular_double(&avg).unwrap();
        assert_eq!(double.dim(), 6);
        assert!(is_dpp(&double));
    }

    #[test]
    fn corrupted_rep_gives_non_dpp_gluing() {
        let a = catalog::plane::<Q>();
        let mut rep = dual_rep(&a, &regular_rep(&a).unwrap()).unwrap();
        rep.families_mut()[3][1].set(0, 0, int(1));
        assert!(!check_representation(&a, &rep).unwrap().passed());
        assert!(!is_dpp(&semidirect_products(&a, &rep).unwrap()));
        assert!(matches!(semidirect(&a, &rep), Err(Error::Precondition { .. })));
    }

    #[test]
    fn projection_onto_a_is_a_homomorphism() {
        let a = catalog::averaged_heisenberg::<Q>();
        let double = coregular_double(&a).unwrap();
        let n = a.dim();
        for op in [PERM, BRACKET] {
            for i in 0..n {
                for j in 0..n {
                    let lifted = double.basis_mul(op, i, j).unwrap();
                    assert_eq!(&lifted[..n], a.basis_mul(op, i, j).unwrap().as_slice());
                }
            }
        }
    }

    #[test]
    fn equivalences() {
        let a = catalog::plane::<Q>();
        let reg = regular_rep(&a).unwrap();
        assert!(check_equivalence(&a, &reg, &reg, &Matrix::identity(2)).unwrap().passed());
        assert!(check_equivalence(&a, &reg, &reg, &Matrix::scalar(2, int(2))).unwrap().passed());
        let singular = Matrix::from_ints(&[[1, 1], [1, 1]]);
        assert!(matches!(
            check_equivalence(&a, &reg, &reg, &singular),
            Err(Error::NotInvertible { rank: 1, size: 2 })
        ));
    }

    #[test]
    fn invariant_form_intertwines_regular_and_coregular() {
        let a = catalog::plane_double::<Q>();
        let b = standard_form(2);
        assert!(check_invariant_form(&a, &b).unwrap().is_quadratic());
        let reg = regular_rep(&a).unwrap();
        let co = dual_rep(&a, &reg).unwrap();
        let phi = crate::ybe::form_map(&b);
        assert!(check_equivalence(&a, &reg, &co, &phi).unwrap().passed());
        assert!(!check_equivalence(&a, &reg, &co, &Matrix::identity(4)).unwrap().passed());
    }
}
