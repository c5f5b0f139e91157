//! Multilinear identities as signed sums of parenthesized monomials.
//!
//! Identities are written in a prefix syntax such as
//! `perm(x, perm(y, z)) - perm(perm(x, y), z)`. Variables are `x`, `y`, `z`
//! and `w`; every other identifier names a product. A term may carry an
//! integer coefficient, as in `2*bracket(x, y)`.

use crate::error::{Error, Result};
use crate::kernel::{Field, Tensor3};
use crate::report::ReportBuilder;

const VARS: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Mono {
    Var(usize),
    Op(usize, Box<Mono>, Box<Mono>),
}

/// A parsed identity `Σ c·monomial = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    label: String,
    arity: usize,
    ops: Vec<String>,
    terms: Vec<(i64, Mono)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ops: Vec<String>,
    max_var: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error<crate::kernel::Q> {
        Error::Invalid(format!(
            "identity syntax error at byte {}: {what} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn mono(&mut self) -> Result<Mono> {
        let name = self.ident()?;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let a = self.mono()?;
            self.expect(b',')?;
            let b = self.mono()?;
            self.expect(b')')?;
            let slot = match self.ops.iter().position(|o| *o == name) {
                Some(s) => s,
                None => {
                    self.ops.push(name);
                    self.ops.len() - 1
                }
            };
            return Ok(Mono::Op(slot, Box::new(a), Box::new(b)));
        }
        let mut chars = name.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if VARS.contains(&c) => {
                let v = VARS.iter().position(|&x| x == c).unwrap();
                self.max_var = self.max_var.max(v + 1);
                Ok(Mono::Var(v))
            }
            _ => Err(self.err(&format!("`{name}` is neither a variable nor a product call"))),
        }
    }

    fn term(&mut self, sign: i64) -> Result<(i64, Mono)> {
        self.skip_ws();
        let mut coeff = 1;
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos > start {
            coeff = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("bad coefficient"))?;
            self.expect(b'*')?;
        }
        Ok((sign * coeff, self.mono()?))
    }
}

impl Identity {
    pub fn parse(label: &str, expr: &str) -> Result<Self> {
        let mut p = Parser {
            src: expr.as_bytes(),
            pos: 0,
            ops: Vec::new(),
            max_var: 0,
        };
        let mut terms = Vec::new();
        let mut sign = 1;
        if p.peek() == Some(b'-') {
            p.pos += 1;
            sign = -1;
        }
        loop {
            terms.push(p.term(sign)?);
            match p.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(p.err("expected `+` or `-`")),
            }
            p.pos += 1;
        }
        Ok(Identity {
            label: label.to_string(),
            arity: p.max_var,
            ops: p.ops,
            terms,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Product names used, innermost calls first.
    pub fn ops(&self) -> &[String] {
        &self.ops
    }

    /// Evaluates the identity on the given arguments with `products[s]`
    /// standing for `self.ops()[s]`.
    pub fn evaluate<S: Field>(&self, products: &[&Tensor3<S>], args: &[Vec<S>]) -> Vec<S> {
        let n = products
            .first()
            .map(|t| t.extents()[2])
            .unwrap_or_else(|| args.first().map_or(0, Vec::len));
        let mut acc = vec![S::zero(); n];
        for (c, m) in &self.terms {
            let v = eval_mono(m, products, args);
            crate::kernel::axpy(&mut acc, &S::from_i64(*c), &v);
        }
        acc
    }
}

fn eval_mono<S: Field>(m: &Mono, products: &[&Tensor3<S>], args: &[Vec<S>]) -> Vec<S> {
    match m {
        Mono::Var(v) => args[*v].clone(),
        Mono::Op(s, a, b) => {
            let u = eval_mono(a, products, args);
            if u.iter().all(|x| x.is_zero()) {
                return vec![S::zero(); products[*s].extents()[2]];
            }
            let v = eval_mono(b, products, args);
            products[*s].apply(&u, &v)
        }
    }
}

/// Resolves the products an identity needs from a lookup.
fn resolve<'a, S: Field>(
    id: &Identity,
    lookup: &impl Fn(&str) -> Option<&'a Tensor3<S>>,
) -> Result<Vec<&'a Tensor3<S>>, S> {
    id.ops()
        .iter()
        .map(|o| lookup(o).ok_or_else(|| Error::MissingOperation(o.clone())))
        .collect()
}

/// Structure constants grouped by input pair: `cells[i·n2 + j] = [(k, c_{ij}^k)]`.
struct PairTable<S> {
    n2: usize,
    cells: Vec<Vec<(usize, S)>>,
}

impl<S: Field> PairTable<S> {
    fn new(t: &Tensor3<S>) -> Self {
        let [n1, n2, _] = t.extents();
        let mut cells = vec![Vec::new(); n1 * n2];
        for (i, j, k, c) in t.entries() {
            cells[i * n2 + j].push((*k, c.clone()));
        }
        PairTable { n2, cells }
    }
}

/// Sparse coordinates, at most one entry per index, no explicit zeros.
type Sparse<S> = Vec<(usize, S)>;

fn add_into<S: Field>(acc: &mut Sparse<S>, k: usize, c: S) {
    match acc.iter().position(|(i, _)| *i == k) {
        None => acc.push((k, c)),
        Some(p) => {
            let sum = acc[p].1.add_ref(&c);
            if sum.is_zero() {
                acc.swap_remove(p);
            } else {
                acc[p].1 = sum;
            }
        }
    }
}

/// An argument of a product: a basis vector, or an evaluated subterm.
enum Operand<S> {
    Basis(usize),
    Vector(Sparse<S>),
}

fn operand<S: Field>(m: &Mono, tables: &[&PairTable<S>], args: &[usize]) -> Operand<S> {
    match m {
        Mono::Var(v) => Operand::Basis(args[*v]),
        Mono::Op(..) => Operand::Vector(eval_basis(m, tables, args)),
    }
}

/// Evaluates a monomial on basis vectors given by index, in sparse form.
fn eval_basis<S: Field>(m: &Mono, tables: &[&PairTable<S>], args: &[usize]) -> Sparse<S> {
    let Mono::Op(s, a, b) = m else {
        let Mono::Var(v) = m else { unreachable!() };
        return vec![(args[*v], S::one())];
    };
    let table = tables[*s];
    let u = operand(a, tables, args);
    if matches!(&u, Operand::Vector(x) if x.is_empty()) {
        return Vec::new();
    }
    let v = operand(b, tables, args);
    let mut out = Vec::new();
    match (&u, &v) {
        (Operand::Basis(i), Operand::Basis(j)) => {
            return table.cells[i * table.n2 + j].clone();
        }
        (Operand::Basis(i), Operand::Vector(y)) => {
            for (j, yj) in y {
                for (k, c) in &table.cells[i * table.n2 + j] {
                    add_into(&mut out, *k, yj.mul_ref(c));
                }
            }
        }
        (Operand::Vector(x), Operand::Basis(j)) => {
            for (i, xi) in x {
                for (k, c) in &table.cells[i * table.n2 + j] {
                    add_into(&mut out, *k, xi.mul_ref(c));
                }
            }
        }
        (Operand::Vector(x), Operand::Vector(y)) => {
            for (i, xi) in x {
                for (j, yj) in y {
                    let cell = &table.cells[i * table.n2 + j];
                    if cell.is_empty() {
                        continue;
                    }
                    let xy = xi.mul_ref(yj);
                    for (k, c) in cell {
                        add_into(&mut out, *k, xy.mul_ref(c));
                    }
                }
            }
        }
    }
    out
}

/// Evaluates each identity on every tuple of basis vectors of an
/// `n`-dimensional space and collects the nonzero residuals.
pub fn check_identities<'a, S: Field>(
    n: usize,
    identities: &[Identity],
    lookup: impl Fn(&str) -> Option<&'a Tensor3<S>>,
) -> Result<crate::report::VerificationReport<S>, S> {
    let resolved: Vec<Vec<&Tensor3<S>>> = identities
        .iter()
        .map(|id| resolve(id, &lookup))
        .collect::<Result<_, S>>()?;
    let mut tables: Vec<(*const Tensor3<S>, PairTable<S>)> = Vec::new();
    for t in resolved.iter().flatten() {
        if !tables.iter().any(|(p, _)| std::ptr::eq(*p, *t)) {
            tables.push((*t as *const _, PairTable::new(t)));
        }
    }
    let mut report = ReportBuilder::new(identities.iter().map(|i| i.label().to_string()));
    for (id, products) in identities.iter().zip(&resolved) {
        let local: Vec<&PairTable<S>> = products
            .iter()
            .map(|t| &tables.iter().find(|(p, _)| std::ptr::eq(*p, *t)).expect("table built").1)
            .collect();
        let out_dim = products.first().map_or(n, |t| t.extents()[2]);
        for idx in tuples(n, id.arity()) {
            let mut acc = Vec::new();
            for (c, m) in &id.terms {
                let coeff = S::from_i64(*c);
                for (k, v) in eval_basis(m, &local, &idx) {
                    add_into(&mut acc, k, coeff.mul_ref(&v));
                }
            }
            if acc.is_empty() {
                continue;
            }
            let mut residual = vec![S::zero(); out_dim];
            for (k, v) in acc {
                residual[k] = v;
            }
            report.check(id.label(), &idx, residual);
        }
    }
    Ok(report.finish())
}

/// All index tuples of the given length over `0..n`, lexicographically.
pub fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}
