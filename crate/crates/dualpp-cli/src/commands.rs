//! Command implementations. Each returns an [`Outcome`] holding the text for
//! standard output and the exit status; input problems surface as [`Failure`].

use std::path::{Path, PathBuf};

use dualpp::algebra::predpp_sub_adjacent;
use dualpp::constructions::{
    average_induced, check_averaging, check_deformation, coregular_poisson_rep, derivation_induced,
    poisson_rep_semidirect, semiclassical_limit, tensor_dpp, tensor_perm_poisson,
};
use dualpp::operad::{gk_check, operad_dim, series_dualprepois, series_prepois};
use dualpp::quadratic::{
    check_bialgebra, check_coalgebra, check_invariant_form, check_manin_triple, check_matched_pair,
    matched_pair_glue, BilinearForm, MatchedPairData,
};
use dualpp::representations::{check_representation, coregular_double, semidirect};
use dualpp::ybe::{
    bialgebra_from_r, check_o_operator, check_rota_baxter, closed_form_predpp, dual_products_from_r,
    plybe_residual, predpp_canonical_r, OOperatorData, TensorElement,
};
use dualpp::{check_structure, Algebra, Error, StructureKind, Tensor3, VerificationReport, Q};

use crate::fixture::{Canonical, Document, InputError};

/// Witnesses printed unless all are requested.
pub const DEFAULT_WITNESS_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
    InputError = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome {
            status: Status::Pass,
            stdout,
        }
    }

    fn fail(stdout: String) -> Self {
        Outcome {
            status: Status::Fail,
            stdout,
        }
    }
}

/// Exit-2 conditions: unreadable or invalid input, or a library error that
/// is not a verification failure.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
}

type Res<T> = Result<T, Failure>;

/// Output options shared by the commands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub all_witnesses: bool,
    pub output: Option<PathBuf>,
}

fn load(path: &Path) -> Res<Document> {
    Ok(Document::read(path)?)
}

fn expect_inputs<'a>(inputs: &'a [PathBuf], names: &[&str], what: &str) -> Res<&'a [PathBuf]> {
    if inputs.len() != names.len() {
        return Err(Failure::Usage(format!(
            "{what} takes {} input file(s): {}; got {}",
            names.len(),
            names.join(" "),
            inputs.len()
        )));
    }
    Ok(inputs)
}

/// Library errors split into a verification failure (exit 1) or a usage problem (exit 2).
enum Lib {
    Failed(String, VerificationReport<Q>),
    Other(String),
}

fn classify(e: Error<Q>) -> Lib {
    match e {
        Error::Precondition { context, report } => Lib::Failed(context, *report),
        other => Lib::Other(other.to_string()),
    }
}

/// Runs a library call, turning precondition failures into a printed
/// failure outcome and other errors into [`Failure::Usage`].
fn lib<T>(r: Result<T, Error<Q>>, opts: &Options, basis: Option<&[String]>) -> Res<Result<T, Outcome>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) => match classify(e) {
            Lib::Failed(context, report) => Ok(Err(Outcome::fail(describe(&context, &report, opts, basis)))),
            Lib::Other(msg) => Err(Failure::Usage(msg)),
        },
    }
}

macro_rules! try_lib {
    ($e:expr, $opts:expr) => {
        try_lib!($e, $opts, None)
    };
    ($e:expr, $opts:expr, $basis:expr) => {
        match lib($e, $opts, $basis)? {
            Ok(v) => v,
            Err(outcome) => return Ok(outcome),
        }
    };
}

/// `PASS <what>` or `FAIL <what>: N witness(es)` followed by witness lines.
pub fn describe(what: &str, report: &VerificationReport<Q>, opts: &Options, basis: Option<&[String]>) -> String {
    if report.passed() {
        return format!("PASS {what}\n");
    }
    let ws = report.witnesses();
    let mut out = format!("FAIL {what}: {} witness(es)\n", ws.len());
    let shown = if opts.all_witnesses { ws.len() } else { ws.len().min(DEFAULT_WITNESS_LIMIT) };
    for w in &ws[..shown] {
        out.push_str(&format!("  {w}"));
        if let Some(names) = basis {
            if w.indices.iter().all(|&i| i < names.len()) {
                let named: Vec<&str> = w.indices.iter().map(|&i| names[i].as_str()).collect();
                out.push_str(&format!("  <{}>", named.join(", ")));
            }
        }
        out.push('\n');
    }
    if shown < ws.len() {
        out.push_str(&format!("  ... {} more; pass --all-witnesses to list them\n", ws.len() - shown));
    }
    out
}

fn verdict(what: &str, report: &VerificationReport<Q>, opts: &Options, basis: Option<&[String]>) -> Outcome {
    let text = describe(what, report, opts, basis);
    if report.passed() {
        Outcome::pass(text)
    } else {
        Outcome::fail(text)
    }
}

/// Verification targets beyond the structure kinds.
pub const VERIFY_TARGETS: [(&str, &[&str]); 10] = [
    ("rep", &["ALGEBRA", "REP"]),
    ("form", &["ALGEBRA", "FORM"]),
    ("coalgebra", &["COPRODUCTS"]),
    ("bialgebra", &["BIALGEBRA"]),
    ("matched-pair", &["A1", "A2", "REP_A1_ON_A2", "REP_A2_ON_A1"]),
    ("manin", &["A", "A_STAR"]),
    ("o-operator", &["ALGEBRA", "REP", "OPERATOR"]),
    ("rota-baxter", &["ALGEBRA", "OPERATOR"]),
    ("deformation", &["DEFORMATION"]),
    ("averaging", &["POISSON", "OPERATOR"]),
];

pub fn verify(kind: &str, inputs: &[PathBuf], opts: &Options) -> Res<Outcome> {
    if let Ok(k) = kind.parse::<StructureKind>() {
        let [f] = expect_inputs(inputs, &["ALGEBRA"], kind)? else { unreachable!() };
        let doc = load(f)?;
        let a = doc.algebra()?;
        let basis = doc.basis()?;
        let report = try_lib!(check_structure(&a, k), opts);
        return Ok(verdict(k.name(), &report, opts, basis.as_deref()));
    }
    let Some((_, names)) = VERIFY_TARGETS.iter().find(|(t, _)| *t == kind) else {
        let kinds: Vec<&str> = StructureKind::ALL.iter().map(|k| k.name()).collect();
        let targets: Vec<&str> = VERIFY_TARGETS.iter().map(|(t, _)| *t).collect();
        return Err(Failure::Usage(format!(
            "unknown kind `{kind}`; expected one of {} or {}",
            kinds.join(", "),
            targets.join(", ")
        )));
    };
    let docs: Vec<Document> = expect_inputs(inputs, names, kind)?
        .iter()
        .map(|p| load(p))
        .collect::<Res<_>>()?;
    let report = match kind {
        "rep" => {
            let a = docs[0].algebra()?;
            let rep = docs[1].representation(a.dim())?;
            try_lib!(check_representation(&a, &rep), opts)
        }
        "form" => {
            let a = docs[0].algebra()?;
            let b = BilinearForm::new(docs[1].square_matrix("form", a.dim())?).map_err(|e| Failure::Usage(e.to_string()))?;
            let fr = try_lib!(check_invariant_form(&a, &b), opts);
            let mut text = describe("invariant form", &fr.report, opts, None);
            text.push_str(&format!(
                "skew: {}\nnondegenerate: {}\ninvariant: {}\nquadratic: {}\n",
                fr.skew,
                fr.nondegenerate,
                fr.invariant,
                fr.is_quadratic()
            ));
            return Ok(if fr.is_quadratic() { Outcome::pass(text) } else { Outcome::fail(text) });
        }
        "coalgebra" => {
            let (dp, db) = docs[0].coproducts()?;
            try_lib!(check_coalgebra(&dp, &db), opts)
        }
        "bialgebra" => try_lib!(check_bialgebra(&docs[0].bialgebra()?), opts),
        "matched-pair" => {
            let (a1, a2) = (docs[0].algebra()?, docs[1].algebra()?);
            let on_a2 = docs[2].representation(a1.dim())?;
            let on_a1 = docs[3].representation(a2.dim())?;
            let mp = MatchedPairData::new(a1, a2, on_a2, on_a1).map_err(|e| Failure::Usage(e.to_string()))?;
            try_lib!(check_matched_pair(&mp), opts)
        }
        "manin" => try_lib!(check_manin_triple(&docs[0].algebra()?, &docs[1].algebra()?), opts),
        "o-operator" => {
            let a = docs[0].algebra()?;
            let rep = docs[1].representation(a.dim())?;
            let t = docs[2].matrix_rect("operator", a.dim(), rep.dim_v())?;
            let od = OOperatorData::new(a, rep, t).map_err(|e| Failure::Usage(e.to_string()))?;
            try_lib!(check_o_operator(&od), opts)
        }
        "rota-baxter" => {
            let a = docs[0].algebra()?;
            let p = docs[1].square_matrix("operator", a.dim())?;
            try_lib!(check_rota_baxter(&a, &p), opts)
        }
        "deformation" => try_lib!(check_deformation(&docs[0].deformation()?), opts),
        "averaging" => {
            let a = docs[0].algebra()?;
            let p = docs[1].square_matrix("operator", a.dim())?;
            try_lib!(check_averaging(&a, &p), opts)
        }
        _ => unreachable!("target table and dispatch agree"),
    };
    let basis = docs[0].basis().ok().flatten();
    Ok(verdict(kind, &report, opts, basis.as_deref()))
}

/// Writes `text` to `-o` or returns it for standard output.
fn emit(text: String, opts: &Options, summary: &str) -> Res<Outcome> {
    match &opts.output {
        None => Ok(Outcome::pass(text)),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Write {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            Ok(Outcome::pass(format!("{summary}\nwrote {}\n", path.display())))
        }
    }
}

/// Re-verifies a constructed algebra before anything is written.
fn emit_checked(a: &Algebra<Q>, kind: StructureKind, doc: Canonical, opts: &Options) -> Res<Outcome> {
    let report = try_lib!(check_structure(a, kind), opts);
    if !report.passed() {
        let mut text = describe(&format!("re-verification as {}", kind.name()), &report, opts, None);
        text.push_str("refusing to write the constructed fixture\n");
        return Ok(Outcome::fail(text));
    }
    emit(doc.render(), opts, &format!("PASS re-verification as {} (dim {})", kind.name(), a.dim()))
}

pub const CONSTRUCTIONS: [(&str, &[&str]); 10] = [
    ("tensor", &["A", "B"]),
    ("perm-poisson", &["PERMUTATIVE", "POISSON"]),
    ("average", &["POISSON", "OPERATOR"]),
    ("derivations", &["PERMUTATIVE", "D1", "D2"]),
    ("poisson-semidirect", &["POISSON", "POISSON_REP"]),
    ("semidirect", &["ALGEBRA", "REP"]),
    ("coregular-double", &["ALGEBRA"]),
    ("matched-glue", &["A1", "A2", "REP_A1_ON_A2", "REP_A2_ON_A1"]),
    ("semiclassical", &["DEFORMATION"]),
    ("predpp-subadjacent", &["PRE_DPP"]),
];

pub fn construct(what: &str, inputs: &[PathBuf], opts: &Options) -> Res<Outcome> {
    let Some((_, names)) = CONSTRUCTIONS.iter().find(|(c, _)| *c == what) else {
        return Err(Failure::Usage(format!("unknown construction `{what}`")));
    };
    let mut names = names.to_vec();
    if what == "poisson-semidirect" && inputs.len() == 1 {
        names.truncate(1);
    }
    let docs: Vec<Document> = expect_inputs(inputs, &names, what)?
        .iter()
        .map(|p| load(p))
        .collect::<Res<_>>()?;
    let dim = |d: &Document| -> Res<usize> { Ok(d.dim()?) };
    let out = match what {
        "tensor" => try_lib!(tensor_dpp(&docs[0].algebra()?, &docs[1].algebra()?), opts),
        "perm-poisson" => try_lib!(tensor_perm_poisson(&docs[0].algebra()?, &docs[1].algebra()?), opts),
        "average" => {
            let p = docs[1].square_matrix("operator", dim(&docs[0])?)?;
            try_lib!(average_induced(&docs[0].algebra()?, &p), opts)
        }
        "derivations" => {
            let n = dim(&docs[0])?;
            let (d1, d2) = (docs[1].square_matrix("operator", n)?, docs[2].square_matrix("operator", n)?);
            try_lib!(derivation_induced(&docs[0].algebra()?, &d1, &d2), opts)
        }
        "poisson-semidirect" => {
            let a = docs[0].algebra()?;
            let rep = match docs.get(1) {
                Some(d) => d.poisson_representation(a.dim())?,
                None => try_lib!(coregular_poisson_rep(&a), opts),
            };
            try_lib!(poisson_rep_semidirect(&a, &rep), opts)
        }
        "semidirect" => {
            let a = docs[0].algebra()?;
            let rep = docs[1].representation(a.dim())?;
            try_lib!(semidirect(&a, &rep), opts)
        }
        "coregular-double" => try_lib!(coregular_double(&docs[0].algebra()?), opts),
        "matched-glue" => {
            let (a1, a2) = (docs[0].algebra()?, docs[1].algebra()?);
            let on_a2 = docs[2].representation(a1.dim())?;
            let on_a1 = docs[3].representation(a2.dim())?;
            let mp = MatchedPairData::new(a1, a2, on_a2, on_a1).map_err(|e| Failure::Usage(e.to_string()))?;
            try_lib!(matched_pair_glue(&mp), opts)
        }
        "semiclassical" => try_lib!(semiclassical_limit(&docs[0].deformation()?), opts),
        "predpp-subadjacent" => try_lib!(predpp_sub_adjacent(&docs[0].algebra()?), opts).0,
        _ => unreachable!("construction table and dispatch agree"),
    };
    emit_checked(&out, StructureKind::DualPrePoisson, Canonical::new().algebra(&out), opts)
}

pub const YBE_COMMANDS: [(&str, &[&str]); 5] = [
    ("residual", &["ALGEBRA", "R"]),
    ("bialgebra", &["ALGEBRA", "R"]),
    ("canonical", &["PRE_DPP"]),
    ("dual-products", &["ALGEBRA", "R"]),
    ("closed-form", &["ALGEBRA", "FORM"]),
];

fn symmetric_r(doc: &Document, n: usize) -> Res<TensorElement<Q>> {
    let r = doc.tensor_element(n)?;
    if !r.is_symmetric() {
        return Err(Failure::Usage("r is not symmetric".into()));
    }
    Ok(r)
}

fn entries_json(t: &Tensor3<Q>) -> String {
    let v: Vec<serde_json::Value> = t
        .entries()
        .iter()
        .map(|(i, j, k, c)| serde_json::json!([i, j, k, c.to_string()]))
        .collect();
    serde_json::to_string(&v).expect("serializable")
}

pub fn ybe(what: &str, inputs: &[PathBuf], opts: &Options) -> Res<Outcome> {
    let Some((_, names)) = YBE_COMMANDS.iter().find(|(c, _)| *c == what) else {
        return Err(Failure::Usage(format!("unknown ybe command `{what}`")));
    };
    let docs: Vec<Document> = expect_inputs(inputs, names, what)?
        .iter()
        .map(|p| load(p))
        .collect::<Res<_>>()?;
    match what {
        "residual" => {
            let a = docs[0].algebra()?;
            let r = docs[1].tensor_element(a.dim())?;
            let (p, l) = try_lib!(plybe_residual(&a, &r), opts);
            let text = format!("plybe-perm: {}\nplybe-bracket: {}\n", entries_json(&p), entries_json(&l));
            Ok(if p.is_zero() && l.is_zero() { Outcome::pass(text) } else { Outcome::fail(text) })
        }
        "bialgebra" => {
            let a = docs[0].algebra()?;
            let r = symmetric_r(&docs[1], a.dim())?;
            let bd = try_lib!(bialgebra_from_r(&a, &r), opts);
            let report = try_lib!(check_bialgebra(&bd), opts);
            if !report.passed() {
                return Ok(Outcome::fail(describe("bialgebra", &report, opts, None)));
            }
            emit(Canonical::new().bialgebra(&bd).render(), opts, "PASS bialgebra")
        }
        "canonical" => {
            let (double, r) = try_lib!(predpp_canonical_r(&docs[0].algebra()?), opts);
            let doc = Canonical::new().algebra(&double).tensor_element(&r);
            let report = try_lib!(check_structure(&double, StructureKind::DualPrePoisson), opts);
            if !report.passed() {
                return Ok(Outcome::fail(describe("double", &report, opts, None)));
            }
            emit(doc.render(), opts, "PASS canonical solution")
        }
        "dual-products" => {
            let a = docs[0].algebra()?;
            let r = symmetric_r(&docs[1], a.dim())?;
            let astar = try_lib!(dual_products_from_r(&a, &r), opts);
            emit_checked(&astar, StructureKind::DualPrePoisson, Canonical::new().algebra(&astar), opts)
        }
        "closed-form" => {
            let a = docs[0].algebra()?;
            let b = BilinearForm::new(docs[1].square_matrix("form", a.dim())?).map_err(|e| Failure::Usage(e.to_string()))?;
            let p = try_lib!(closed_form_predpp(&a, &b), opts);
            emit_checked(&p, StructureKind::PreDualPrePoisson, Canonical::new().algebra(&p), opts)
        }
        _ => unreachable!("ybe table and dispatch agree"),
    }
}

pub fn series(order: usize) -> Res<Outcome> {
    if order < 2 {
        return Err(Failure::Usage(format!("--order must be at least 2, got {order}")));
    }
    let usage = |e: Error<Q>| Failure::Usage(e.to_string());
    let pp = series_prepois::<Q>(order).map_err(usage)?;
    let dpp = series_dualprepois::<Q>(order).map_err(usage)?;
    let gk = gk_check::<Q>(order).map_err(usage)?;
    let line = |name: &str, s: &dualpp::TruncatedSeries<Q>| {
        let cs: Vec<String> = (1..=order).map(|n| s.coeff(n).to_string()).collect();
        format!("{name}: {}\n", cs.join(" "))
    };
    let mut out = line("prepois", &pp);
    out.push_str(&line("dualprepois", &dpp));
    let gk_cs: Vec<String> = (0..=order).map(|n| gk.coeff(n).to_string()).collect();
    out.push_str(&format!("gk-residual: {}\n", gk_cs.join(" ")));
    out.push_str("dimensions (n: n*n!):\n");
    for n in 1..=order {
        match operad_dim(n) {
            Ok(d) => out.push_str(&format!("{n}: {d}\n")),
            Err(e) => return Err(Failure::Usage(e.to_string())),
        }
    }
    if gk.is_zero() {
        out.push_str("PASS gk functional equation\n");
        Ok(Outcome::pass(out))
    } else {
        out.push_str("FAIL gk functional equation\n");
        Ok(Outcome::fail(out))
    }
}
