//! JSON fixture documents: parsing with path-qualified errors and canonical
//! serialization (sorted keys, sorted index tuples, lowest-terms rationals).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use dualpp::constructions::{DeformedDialgebra, PoissonRepresentation};
use dualpp::kernel::Matrix;
use dualpp::quadratic::{BialgebraData, Coproduct};
use dualpp::representations::FAMILIES;
use dualpp::ybe::TensorElement;
use dualpp::{Algebra, Representation, Tensor3, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

/// An input problem located by file and JSON path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{file}: {path}: {message}")]
pub struct InputError {
    pub file: String,
    pub path: String,
    pub message: String,
}

const KNOWN_KEYS: [&str; 13] = [
    "basis", "delta_br", "delta_perm", "dim", "dimV", "form", "left", "maps", "operator", "ops", "order", "r", "right",
];

/// A parsed top-level JSON object together with its source name.
#[derive(Debug, Clone)]
pub struct Document {
    file: String,
    root: Map<String, Value>,
}

type Res<T> = Result<T, InputError>;

impl Document {
    pub fn read(path: &Path) -> Res<Self> {
        let file = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| InputError {
            file: file.clone(),
            path: "$".into(),
            message: format!("cannot read file: {e}"),
        })?;
        Self::parse(&file, &text)
    }

    pub fn parse(file: &str, text: &str) -> Res<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| InputError {
            file: file.into(),
            path: "$".into(),
            message: format!("invalid JSON at line {} column {}: {e}", e.line(), e.column()),
        })?;
        let Value::Object(root) = value else {
            return Err(InputError {
                file: file.into(),
                path: "$".into(),
                message: "top level must be an object".into(),
            });
        };
        let doc = Document { file: file.into(), root };
        if let Some(k) = doc.root.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(doc.err(&format!("$.{k}"), "unknown key"));
        }
        Ok(doc)
    }

    fn err(&self, path: &str, message: &str) -> InputError {
        InputError {
            file: self.file.clone(),
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.root.contains_key(key)
    }

    fn get(&self, key: &str) -> Res<&Value> {
        self.root
            .get(key)
            .ok_or_else(|| self.err("$", &format!("missing key \"{key}\"")))
    }

    fn usize_at(&self, v: &Value, path: &str) -> Res<usize> {
        v.as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.err(path, "expected a nonnegative integer"))
    }

    fn array_at<'v>(&self, v: &'v Value, path: &str) -> Res<&'v Vec<Value>> {
        v.as_array().ok_or_else(|| self.err(path, "expected an array"))
    }

    fn rational_at(&self, v: &Value, path: &str) -> Res<Q> {
        let s = v
            .as_str()
            .ok_or_else(|| self.err(path, "expected a rational string such as \"-3/4\""))?;
        parse_rational(s).map_err(|m| self.err(path, &m))
    }

    fn index_at(&self, v: &Value, path: &str, bound: usize) -> Res<usize> {
        let i = self.usize_at(v, path)?;
        if i >= bound {
            return Err(self.err(path, &format!("index {i} outside [0, {bound})")));
        }
        Ok(i)
    }

    /// `[[i, j, k, "c"], …]` with every index below `bounds`.
    fn entries3(&self, v: &Value, path: &str, bounds: [usize; 3]) -> Res<Tensor3<Q>> {
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for (e, item) in self.array_at(v, path)?.iter().enumerate() {
            let p = format!("{path}[{e}]");
            let t = self.array_at(item, &p)?;
            if t.len() != 4 {
                return Err(self.err(&p, "expected [i, j, k, \"coefficient\"]"));
            }
            let i = self.index_at(&t[0], &format!("{p}[0]"), bounds[0])?;
            let j = self.index_at(&t[1], &format!("{p}[1]"), bounds[1])?;
            let k = self.index_at(&t[2], &format!("{p}[2]"), bounds[2])?;
            let c = self.rational_at(&t[3], &format!("{p}[3]"))?;
            if !seen.insert((i, j, k)) {
                return Err(self.err(&p, &format!("duplicate index tuple ({i}, {j}, {k})")));
            }
            entries.push((i, j, k, c));
        }
        Tensor3::from_entries(bounds, entries).map_err(|e| self.err(path, &e.to_string()))
    }

    /// Rows of rational strings forming a `rows × cols` matrix.
    fn matrix_at(&self, v: &Value, path: &str, rows: usize, cols: usize) -> Res<Matrix<Q>> {
        let rs = self.array_at(v, path)?;
        if rs.len() != rows {
            return Err(self.err(path, &format!("expected {rows} rows, found {}", rs.len())));
        }
        let mut m = Matrix::zeros(rows, cols);
        for (i, row) in rs.iter().enumerate() {
            let p = format!("{path}[{i}]");
            let cs = self.array_at(row, &p)?;
            if cs.len() != cols {
                return Err(self.err(&p, &format!("expected {cols} entries, found {}", cs.len())));
            }
            for (j, c) in cs.iter().enumerate() {
                m.set(i, j, self.rational_at(c, &format!("{p}[{j}]"))?);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> Res<usize> {
        self.usize_at(self.get("dim")?, "$.dim")
    }

    /// Optional basis names used when printing witnesses.
    pub fn basis(&self) -> Res<Option<Vec<String>>> {
        let Some(v) = self.root.get("basis") else {
            return Ok(None);
        };
        let names = self.array_at(v, "$.basis")?;
        let dim = self.dim()?;
        if names.len() != dim {
            return Err(self.err("$.basis", &format!("expected {dim} names, found {}", names.len())));
        }
        names
            .iter()
            .enumerate()
            .map(|(i, n)| {
                n.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| self.err(&format!("$.basis[{i}]"), "expected a string"))
            })
            .collect::<Res<Vec<_>>>()
            .map(Some)
    }

    pub fn algebra(&self) -> Res<Algebra<Q>> {
        let n = self.dim()?;
        let ops = self.get("ops")?.as_object().ok_or_else(|| self.err("$.ops", "expected an object"))?;
        let mut a = Algebra::new(n);
        for (name, v) in ops {
            let path = format!("$.ops.{name}");
            let t = self.entries3(v, &path, [n; 3])?;
            a.insert_op(name, t).map_err(|e| self.err(&path, &e.to_string()))?;
        }
        Ok(a)
    }

    /// A representation of an `n`-dimensional algebra; missing families are zero.
    pub fn representation(&self, n: usize) -> Res<Representation<Q>> {
        let [l_perm, r_perm, l_br, r_br] = self.families(n, &FAMILIES)?.try_into().expect("four families");
        let m = self.usize_at(self.get("dimV")?, "$.dimV")?;
        Representation::new(m, l_perm, r_perm, l_br, r_br).map_err(|e| self.err("$.maps", &e.to_string()))
    }

    /// A Poisson module with families `mu` and `rho`.
    pub fn poisson_representation(&self, n: usize) -> Res<PoissonRepresentation<Q>> {
        let [mu, rho] = self.families(n, &["mu", "rho"])?.try_into().expect("two families");
        let m = self.usize_at(self.get("dimV")?, "$.dimV")?;
        PoissonRepresentation::new(m, mu, rho).map_err(|e| self.err("$.maps", &e.to_string()))
    }

    fn families(&self, n: usize, names: &[&str]) -> Res<Vec<Vec<Matrix<Q>>>> {
        let m = self.usize_at(self.get("dimV")?, "$.dimV")?;
        let maps = self.get("maps")?.as_object().ok_or_else(|| self.err("$.maps", "expected an object"))?;
        if let Some(k) = maps.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(self.err(&format!("$.maps.{k}"), &format!("unknown family; expected one of {names:?}")));
        }
        names
            .iter()
            .map(|name| {
                let Some(v) = maps.get(*name) else {
                    return Ok(vec![Matrix::zeros(m, m); n]);
                };
                let path = format!("$.maps.{name}");
                let mats = self.array_at(v, &path)?;
                if mats.len() != n {
                    return Err(self.err(&path, &format!("expected {n} matrices, found {}", mats.len())));
                }
                mats.iter()
                    .enumerate()
                    .map(|(x, mv)| self.matrix_at(mv, &format!("{path}[{x}]"), m, m))
                    .collect()
            })
            .collect()
    }

    /// `r = Σ r_ij e_i⊗e_j` on an `n`-dimensional space.
    pub fn tensor_element(&self, n: usize) -> Res<TensorElement<Q>> {
        let mut seen = BTreeSet::new();
        let mut m = Matrix::zeros(n, n);
        for (e, item) in self.array_at(self.get("r")?, "$.r")?.iter().enumerate() {
            let p = format!("$.r[{e}]");
            let t = self.array_at(item, &p)?;
            if t.len() != 3 {
                return Err(self.err(&p, "expected [i, j, \"coefficient\"]"));
            }
            let i = self.index_at(&t[0], &format!("{p}[0]"), n)?;
            let j = self.index_at(&t[1], &format!("{p}[1]"), n)?;
            let c = self.rational_at(&t[2], &format!("{p}[2]"))?;
            if !seen.insert((i, j)) {
                return Err(self.err(&p, &format!("duplicate index tuple ({i}, {j})")));
            }
            m.set(i, j, c);
        }
        Ok(TensorElement::new(m))
    }

    /// The square matrix stored under `key` (`form` or `operator`).
    pub fn square_matrix(&self, key: &str, n: usize) -> Res<Matrix<Q>> {
        self.matrix_rect(key, n, n)
    }

    pub fn matrix_rect(&self, key: &str, rows: usize, cols: usize) -> Res<Matrix<Q>> {
        self.matrix_at(self.get(key)?, &format!("$.{key}"), rows, cols)
    }

    /// Coproducts `δ(e_i) = Σ d_i^{jk} e_j⊗e_k` as entries `[i, j, k, "d"]`.
    pub fn coproducts(&self) -> Res<(Coproduct<Q>, Coproduct<Q>)> {
        let n = self.dim()?;
        let read = |key: &str| -> Res<Coproduct<Q>> {
            let path = format!("$.{key}");
            let t = self.entries3(self.get(key)?, &path, [n; 3])?;
            Coproduct::new(t).map_err(|e| self.err(&path, &e.to_string()))
        };
        Ok((read("delta_perm")?, read("delta_br")?))
    }

    pub fn bialgebra(&self) -> Res<BialgebraData<Q>> {
        let (dp, db) = self.coproducts()?;
        BialgebraData::new(self.algebra()?, dp, db).map_err(|e| self.err("$", &e.to_string()))
    }

    /// Base permutative algebra plus `order` layers of ▷ and ◁.
    pub fn deformation(&self) -> Res<DeformedDialgebra<Q>> {
        let base = self.algebra()?;
        let n = base.dim();
        let order = self.usize_at(self.get("order")?, "$.order")?;
        let layers = |key: &str| -> Res<Vec<Tensor3<Q>>> {
            let path = format!("$.{key}");
            let ls = self.array_at(self.get(key)?, &path)?;
            if ls.len() != order {
                return Err(self.err(&path, &format!("expected {order} layers, found {}", ls.len())));
            }
            ls.iter()
                .enumerate()
                .map(|(d, v)| self.entries3(v, &format!("{path}[{d}]"), [n; 3]))
                .collect()
        };
        DeformedDialgebra::new(base, layers("right")?, layers("left")?).map_err(|e| self.err("$", &e.to_string()))
    }
}

/// Parses `^-?[0-9]+(/[1-9][0-9]*)?$` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Q, String> {
    let bad = || format!("invalid rational \"{s}\"");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if d.starts_with('0') {
                return Err(format!("invalid rational \"{s}\": denominator must start with 1-9"));
            }
            d.parse().map_err(|_| bad())?
        }
    };
    Ok(Q::new(n, d))
}

pub fn rational(c: &Q) -> Value {
    Value::String(c.to_string())
}

fn entries_value(t: &Tensor3<Q>) -> Value {
    Value::Array(
        t.entries()
            .iter()
            .map(|(i, j, k, c)| Value::Array(vec![(*i).into(), (*j).into(), (*k).into(), rational(c)]))
            .collect(),
    )
}

pub fn matrix_value(m: &Matrix<Q>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
            .collect(),
    )
}

/// Builder for canonical documents; keys are kept sorted.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Canonical(BTreeMap<String, Value>);

impl Canonical {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn algebra(mut self, a: &Algebra<Q>) -> Self {
        self.0.insert("dim".into(), a.dim().into());
        let ops: Map<String, Value> = a.ops().iter().map(|(k, t)| (k.clone(), entries_value(t))).collect();
        self.0.insert("ops".into(), Value::Object(ops));
        self
    }

    pub fn basis(mut self, names: &[&str]) -> Self {
        self.0.insert("basis".into(), names.iter().map(|s| Value::from(*s)).collect());
        self
    }

    pub fn representation(mut self, rep: &Representation<Q>) -> Self {
        let maps: Map<String, Value> = FAMILIES
            .iter()
            .zip(rep.families())
            .map(|(name, fam)| (name.to_string(), Value::Array(fam.iter().map(matrix_value).collect())))
            .collect();
        self.0.insert("dim".into(), rep.dim_a().into());
        self.0.insert("dimV".into(), rep.dim_v().into());
        self.0.insert("maps".into(), Value::Object(maps));
        self
    }

    pub fn poisson_representation(mut self, rep: &PoissonRepresentation<Q>) -> Self {
        let fam = |f: &[Matrix<Q>]| Value::Array(f.iter().map(matrix_value).collect());
        let mut maps = Map::new();
        maps.insert("mu".into(), fam(rep.mu()));
        maps.insert("rho".into(), fam(rep.rho()));
        self.0.insert("dim".into(), rep.mu().len().into());
        self.0.insert("dimV".into(), rep.dim_v().into());
        self.0.insert("maps".into(), Value::Object(maps));
        self
    }

    pub fn tensor_element(mut self, r: &TensorElement<Q>) -> Self {
        let m = r.matrix();
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    entries.push(Value::Array(vec![i.into(), j.into(), rational(m.get(i, j))]));
                }
            }
        }
        self.0.insert("dim".into(), m.rows().into());
        self.0.insert("r".into(), Value::Array(entries));
        self
    }

    /// A form or operator; `dim` records the row count.
    pub fn matrix(mut self, key: &str, m: &Matrix<Q>) -> Self {
        self.0.insert("dim".into(), m.rows().into());
        self.0.insert(key.into(), matrix_value(m));
        self
    }

    pub fn coproducts(mut self, dp: &Coproduct<Q>, db: &Coproduct<Q>) -> Self {
        self.0.insert("dim".into(), dp.dim().into());
        self.0.insert("delta_perm".into(), entries_value(dp.tensor()));
        self.0.insert("delta_br".into(), entries_value(db.tensor()));
        self
    }

    pub fn bialgebra(self, bd: &BialgebraData<Q>) -> Self {
        self.algebra(bd.alg()).coproducts(bd.delta_perm(), bd.delta_br())
    }

    pub fn deformation(mut self, d: &DeformedDialgebra<Q>) -> Self {
        self = self.algebra(d.base());
        self.0.insert("order".into(), d.order().into());
        self.0.insert("right".into(), d.right_layers().iter().map(entries_value).collect());
        self.0.insert("left".into(), d.left_layers().iter().map(entries_value).collect());
        self
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.0.clone().into_iter().collect())
    }

    /// Canonical text: arrays of scalars inline, everything else one item per line.
    pub fn render(&self) -> String {
        render(&self.to_value())
    }
}

/// Canonical rendering of any JSON value; object keys come out sorted.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String((*k).clone()));
                write_value(out, &m[*k], indent + 1);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) if a.iter().all(is_scalar) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            let _ = write!(out, "[{}]", items.join(", "));
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, item) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Re-renders a document in canonical form.
pub fn canonicalize(text: &str) -> Res<String> {
    let doc = Document::parse("<input>", text)?;
    let n = doc.dim()?;
    let mut c = Canonical::new();
    if doc.has("order") {
        c = c.deformation(&doc.deformation()?);
    } else if doc.has("ops") {
        c = c.algebra(&doc.algebra()?);
    }
    if doc.has("delta_perm") || doc.has("delta_br") {
        let (dp, db) = doc.coproducts()?;
        c = c.coproducts(&dp, &db);
    }
    if doc.has("r") {
        c = c.tensor_element(&doc.tensor_element(n)?);
    }
    for key in ["form", "operator"] {
        if let Some(rows) = doc.root.get(key) {
            let cols = rows
                .as_array()
                .and_then(|r| r.first())
                .and_then(Value::as_array)
                .map_or(n, Vec::len);
            c = c.matrix(key, &doc.matrix_rect(key, n, cols)?);
        }
    }
    if doc.has("maps") {
        let poisson = doc.get("maps")?.as_object().is_some_and(|m| m.contains_key("mu") || m.contains_key("rho"));
        c = if poisson {
            c.poisson_representation(&doc.poisson_representation(n)?)
        } else {
            c.representation(&doc.representation(n)?)
        };
    }
    if let Some(b) = doc.basis()? {
        c = c.basis(&b.iter().map(String::as_str).collect::<Vec<_>>());
    }
    c.0.insert("dim".into(), n.into());
    Ok(c.render())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dualpp::catalog;

    #[test]
    fn rationals_follow_the_grammar() {
        assert_eq!(parse_rational("-6/4").unwrap(), Q::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("7").unwrap(), Q::from_integer(7.into()));
        for bad in ["1/0", "1/02", "", "-", "+1", "1.5", "1/", "/2", "1/-2", "a"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn errors_point_at_json_paths() {
        let cases = [
            (r#"{"dim": 2, "ops": {"perm": [[1, 1, 0, "1/0"]]}}"#, "$.ops.perm[0][3]"),
            (r#"{"dim": 2, "ops": {"perm": [[1, 2, 0, "1"]]}}"#, "$.ops.perm[0][1]"),
            (r#"{"dim": 2, "ops": {"perm": [[1, 1, 0, "1"], [1, 1, 0, "2"]]}}"#, "$.ops.perm[1]"),
            (r#"{"dim": 2, "ops": {"perm": [[1, 1, 0, 1]]}}"#, "$.ops.perm[0][3]"),
            (r#"{"dim": 2, "ops": {"perm": [[1, 1, 0]]}}"#, "$.ops.perm[0]"),
            (r#"{"dim": 2, "opz": {}}"#, "$.opz"),
            (r#"[1]"#, "$"),
        ];
        for (text, path) in cases {
            let err = Document::parse("t.json", text).and_then(|d| d.algebra()).unwrap_err();
            assert_eq!(err.path, path, "{text}: {err}");
        }
    }

    #[test]
    fn representation_errors_point_at_matrices() {
        let doc = Document::parse(
            "rep.json",
            r#"{"dimV": 1, "maps": {"l_perm": [[["0"]], [["0", "1"]]]}}"#,
        )
        .unwrap();
        assert_eq!(doc.representation(2).unwrap_err().path, "$.maps.l_perm[1][0]");
        assert_eq!(doc.representation(3).unwrap_err().path, "$.maps.l_perm");
        let bad = Document::parse("rep.json", r#"{"dimV": 1, "maps": {"lperm": []}}"#).unwrap();
        assert_eq!(bad.representation(1).unwrap_err().path, "$.maps.lperm");
    }

    #[test]
    fn algebra_round_trip() {
        for (_, a) in catalog::dpp_fixtures::<Q>() {
            let text = Canonical::new().algebra(&a).render();
            let doc = Document::parse("a.json", &text).unwrap();
            assert_eq!(doc.algebra().unwrap(), a);
            assert_eq!(canonicalize(&text).unwrap(), text);
        }
    }

    #[test]
    fn composite_documents_round_trip() {
        let bd = catalog::canonical_plane_bialgebra::<Q>();
        let text = Canonical::new().bialgebra(&bd).tensor_element(&catalog::canonical_r(2)).render();
        let doc = Document::parse("b.json", &text).unwrap();
        assert_eq!(doc.bialgebra().unwrap(), bd);
        assert_eq!(doc.tensor_element(4).unwrap(), catalog::canonical_r(2));
        assert_eq!(canonicalize(&text).unwrap(), text);

        let d = catalog::plane_deformation::<Q>();
        let text = Canonical::new().deformation(&d).basis(&["e1", "e2"]).render();
        let doc = Document::parse("d.json", &text).unwrap();
        assert_eq!(doc.deformation().unwrap(), d);
        assert_eq!(doc.basis().unwrap().unwrap(), ["e1", "e2"]);
        assert_eq!(canonicalize(&text).unwrap(), text);
    }

    #[test]
    fn canonical_form_sorts_and_reduces() {
        let messy = r#"{"ops": {"perm": [[1, 1, 0, "2/4"], [0, 1, 1, "-0"]], "bracket": []}, "dim": 2}"#;
        let expected = "{\n  \"dim\": 2,\n  \"ops\": {\n    \"bracket\": [],\n    \"perm\": [\n      [1, 1, 0, \"1/2\"]\n    ]\n  }\n}\n";
        assert_eq!(canonicalize(messy).unwrap(), expected);
    }
}
