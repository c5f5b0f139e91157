//! Sparse 3-tensors in canonical form.

use std::collections::BTreeMap;

use super::{Field, Q};
use crate::error::{Error, Result};

/// Sparse tensor with entries sorted lexicographically on `(i, j, k)`
/// and no stored zeros, so equality is coefficient equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<S = Q> {
    extents: [usize; 3],
    entries: Vec<(usize, usize, usize, S)>,
}

impl<S: Field> Tensor3<S> {
    pub fn zeros(extents: [usize; 3]) -> Self {
        Tensor3 {
            extents,
            entries: Vec::new(),
        }
    }

    /// Cubic zero tensor.
    pub fn zero_cube(n: usize) -> Self {
        Self::zeros([n, n, n])
    }

    /// Builds a tensor, summing repeated index triples and dropping zeros.
    pub fn from_entries(
        extents: [usize; 3],
        entries: impl IntoIterator<Item = (usize, usize, usize, S)>,
    ) -> Result<Self, S> {
        let mut acc: BTreeMap<(usize, usize, usize), S> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= extents[0] || j >= extents[1] || k >= extents[2] {
                return Err(Error::Dimension(format!(
                    "index ({i}, {j}, {k}) outside extents {extents:?}"
                )));
            }
            let slot = acc.entry((i, j, k)).or_insert_with(S::zero);
            *slot = slot.add_ref(&c);
        }
        Ok(Tensor3 {
            extents,
            entries: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((i, j, k), c)| (i, j, k, c))
                .collect(),
        })
    }

    /// Integer entries on a cube, mainly for fixtures.
    pub fn from_ints(n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(
            [n, n, n],
            entries.iter().map(|&(i, j, k, c)| (i, j, k, S::from_i64(c))),
        )
        .expect("fixture index out of range")
    }

    pub fn from_fn(extents: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        let mut entries = Vec::new();
        for i in 0..extents[0] {
            for j in 0..extents[1] {
                for k in 0..extents[2] {
                    let c = f(i, j, k);
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Tensor3 { extents, entries }
    }

    /// Reads a bilinear map given as the images `table[i][j]` of basis pairs.
    pub fn from_table(n1: usize, n2: usize, n3: usize, mut f: impl FnMut(usize, usize) -> Vec<S>) -> Self {
        let mut entries = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                for (k, c) in f(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Tensor3 {
            extents: [n1, n2, n3],
            entries,
        }
    }

    pub fn extents(&self) -> [usize; 3] {
        self.extents
    }

    pub fn entries(&self) -> &[(usize, usize, usize, S)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        match self
            .entries
            .binary_search_by(|(a, b, c, _)| (*a, *b, *c).cmp(&(i, j, k)))
        {
            Ok(p) => self.entries[p].3.clone(),
            Err(_) => S::zero(),
        }
    }

    /// Dense copy indexed `[i][j][k]` flattened as `(i·n2 + j)·n3 + k`.
    pub fn to_dense(&self) -> Vec<S> {
        let [_, n2, n3] = self.extents;
        let mut out = vec![S::zero(); self.extents.iter().product()];
        for (i, j, k, c) in &self.entries {
            out[(i * n2 + j) * n3 + k] = c.clone();
        }
        out
    }

    /// Bilinear evaluation on coordinate vectors: Σ u_i v_j c_{ij}^k e_k.
    pub fn apply(&self, u: &[S], v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.extents[2]];
        for (i, j, k, c) in &self.entries {
            if u[*i].is_zero() || v[*j].is_zero() {
                continue;
            }
            out[*k].add_mul(&u[*i].mul_ref(&v[*j]), c);
        }
        out
    }

    /// Slice with the first index fixed: the vector `c_{i j}^·` as a matrix
    /// of shape n3×n2 mapping `v` to `Σ_j v_j c_{ij}^k`.
    pub fn left_matrix(&self, u: &[S]) -> super::Matrix<S> {
        let mut m = super::Matrix::<S>::zeros(self.extents[2], self.extents[1]);
        for (i, j, k, c) in &self.entries {
            if u[*i].is_zero() {
                continue;
            }
            m.entry_mut(*k, *j).add_mul(&u[*i], c);
        }
        m
    }

    /// Matrix of shape n3×n1 mapping `u` to `Σ_i u_i c_{ij}^k` for fixed `v`.
    pub fn right_matrix(&self, v: &[S]) -> super::Matrix<S> {
        let mut m = super::Matrix::<S>::zeros(self.extents[2], self.extents[0]);
        for (i, j, k, c) in &self.entries {
            if v[*j].is_zero() {
                continue;
            }
            m.entry_mut(*k, *i).add_mul(&v[*j], c);
        }
        m
    }

    /// Entrywise map that keeps the canonical form.
    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Tensor3 {
            extents: self.extents,
            entries: self
                .entries
                .iter()
                .map(|(i, j, k, c)| (*i, *j, *k, f(c)))
                .filter(|e| !e.3.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| c.mul_ref(x))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// Linear combination `a·self + b·other` of tensors with equal extents.
    pub fn combine(&self, a: &S, other: &Self, b: &S) -> Self {
        assert_eq!(self.extents, other.extents, "tensor extents differ");
        let entries = self
            .entries
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, a.mul_ref(c)))
            .chain(other.entries.iter().map(|(i, j, k, c)| (*i, *j, *k, b.mul_ref(c))));
        Self::from_entries(self.extents, entries).expect("extents already checked")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(&S::one(), other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(&S::one(), other, &-S::one())
    }

    /// Reorders axes: entry `(i0, i1, i2)` moves to position `(i_{p0}, i_{p1}, i_{p2})`.
    pub fn permute_axes(&self, p: [usize; 3]) -> Self {
        let extents = [self.extents[p[0]], self.extents[p[1]], self.extents[p[2]]];
        let entries = self.entries.iter().map(|(i, j, k, c)| {
            let idx = [*i, *j, *k];
            (idx[p[0]], idx[p[1]], idx[p[2]], c.clone())
        });
        Self::from_entries(extents, entries).expect("permuted indices stay in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    #[test]
    fn canonical_form_sums_and_drops_zeros() {
        let t = Tensor3::<Q>::from_entries(
            [2, 2, 2],
            vec![
                (1, 0, 0, int(1)),
                (0, 1, 1, int(2)),
                (1, 0, 0, int(-1)),
                (0, 0, 1, int(3)),
            ],
        )
        .unwrap();
        assert_eq!(t.entries(), &[(0, 0, 1, int(3)), (0, 1, 1, int(2))]);
        assert_eq!(t.get(1, 0, 0), int(0));
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(Tensor3::<Q>::from_entries([1, 1, 1], vec![(0, 1, 0, int(1))]).is_err());
    }

    #[test]
    fn apply_and_matrices_agree() {
        let t = Tensor3::<Q>::from_ints(2, &[(1, 1, 0, 1), (0, 1, 1, 2)]);
        let u = vec![int(1), int(3)];
        let v = vec![int(2), int(5)];
        let direct = t.apply(&u, &v);
        assert_eq!(t.left_matrix(&u).apply(&v), direct);
        assert_eq!(t.right_matrix(&v).apply(&u), direct);
    }

    #[test]
    fn permute_axes_round_trip() {
        let t = Tensor3::<Q>::from_entries([1, 2, 3], vec![(0, 1, 2, int(4))]).unwrap();
        let p = t.permute_axes([1, 2, 0]);
        assert_eq!(p.extents(), [2, 3, 1]);
        assert_eq!(p.get(1, 2, 0), int(4));
        assert_eq!(p.permute_axes([2, 0, 1]), t);
    }
}
