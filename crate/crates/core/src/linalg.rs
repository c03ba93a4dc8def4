//! Exact linear algebra over GF(2^k): dense matrices, canonical reduced
//! row-echelon forms, nullspaces, and the subspace lattice.
//!
//! Subspaces are always stored by their RREF basis, so equal subspaces have
//! bit-identical representations; that canonicalization is the tie-breaking
//! rule for every enumeration downstream.

use crate::field::Field;
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over GF(2^{})", self.rows, self.cols, self.field.k())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.format_el(self[(i, j)]))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<u32>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a ^ b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut m = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    m[(i, j)] ^= f.mul(a, other[(l, j)]);
                }
            }
        }
        m
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        let mut out = vec![0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0;
            for j in 0..self.cols {
                acc ^= f.mul(self[(i, j)], v[j]);
            }
            out[i] = acc;
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    /// Canonical reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m[(i, c)] != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let t = m[(r, j)];
                m[(r, j)] = m[(p, j)];
                m[(p, j)] = t;
            }
            let inv = f.inv(m[(r, c)]).expect("pivot nonzero");
            for j in 0..m.cols {
                m[(r, j)] = f.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != 0 {
                    let factor = m[(i, c)];
                    for j in 0..m.cols {
                        let s = f.mul(factor, m[(r, j)]);
                        m[(i, j)] ^= s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, rank, pivots) = aug.rref();
        // invertible iff the left block reduces to the identity
        if rank < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)];
            }
        }
        Some(inv)
    }
}

/// Basis of the right nullspace {v : m v = 0}, canonicalized.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (r, rank, pivots) = m.rref();
    let f = m.field;
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u32; n];
        v[fc] = 1;
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            v[pc] = r[(i, fc)]; // char 2: -x = x
        }
        basis.push(v);
    }
    Subspace::from_vectors(f, n, basis)
}

/// One solution of `a x = b`, if any.
pub fn solve(a: &Matrix, b: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(a.rows(), b.len());
    let mut col = Matrix::zeros(a.field, b.len(), 1);
    for (i, &x) in b.iter().enumerate() {
        col[(i, 0)] = x;
    }
    let aug = a.hstack(&col);
    let (r, rank, pivots) = aug.rref();
    if pivots.contains(&a.cols()) {
        return None; // pivot in the constant column: inconsistent
    }
    let mut x = vec![0u32; a.cols()];
    for (i, &pc) in pivots.iter().enumerate().take(rank) {
        x[pc] = r[(i, a.cols())];
    }
    Some(x)
}

/// A linear subspace in canonical RREF form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    pub field: Field,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<u32>>) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors);
        let (r, rank, pivots) = m.rref();
        let mut basis = Matrix::zeros(field, rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis[(i, j)] = r[(i, j)];
            }
        }
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace.
    pub fn reduce_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if v[pc] != 0 {
                let c = v[pc];
                for j in 0..self.ambient {
                    v[j] ^= f.mul(c, self.basis[(i, j)]);
                }
            }
        }
        v
    }

    pub fn contains_vec(&self, v: &[u32]) -> bool {
        self.reduce_vec(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok((0..other.dim()).all(|i| self.contains_vec(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::from_vectors(self.field, self.ambient, vs))
    }

    /// Intersection via the kernel of the stacked coordinate map.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // Solve a^T x + b^T y = 0; intersection vectors are a^T x.
        let a_t = self.basis.transpose();
        let b_t = other.basis.transpose();
        let stacked = a_t.hstack(&b_t);
        let ker = nullspace(&stacked);
        let mut vecs = Vec::new();
        for kv in ker.basis_vectors() {
            let x = &kv[..self.dim()];
            let v = self.basis.transpose().mul_vec(x);
            vecs.push(v);
        }
        Ok(Subspace::from_vectors(self.field, self.ambient, vecs))
    }

    /// dim(self) - dim(other), requiring other ⊆ self.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize, Error> {
        if !self.contains(other)? {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - other.dim())
    }

    /// Direct-sum test.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient
            && self.intersect(other).map(|i| i.dim() == 0).unwrap_or(false)
    }
}

/// Enumerates every `rank`-dimensional subspace of `ambient`-space exactly
/// once, as canonical RREF bases, in a deterministic order.
pub fn subspaces_of_rank(field: Field, ambient: usize, rank: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if rank > ambient {
        return out;
    }
    if rank == 0 {
        out.push(Subspace::zero(field, ambient));
        return out;
    }
    // Choose pivot columns, then run an odometer over the free entries.
    let mut pivots: Vec<usize> = (0..rank).collect();
    loop {
        // Free positions: (row i, col j) with j > pivots[i], j not a pivot.
        let mut free = Vec::new();
        for i in 0..rank {
            for j in (pivots[i] + 1)..ambient {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let q = field.order() as u64;
        let total: u64 = (q as u128).pow(free.len() as u32).min(u64::MAX as u128) as u64;
        for idx in 0..total {
            let mut m = Matrix::zeros(field, rank, ambient);
            for (i, &p) in pivots.iter().enumerate() {
                m[(i, p)] = 1;
            }
            let mut rem = idx;
            for &(i, j) in &free {
                m[(i, j)] = (rem % q) as u32;
                rem /= q;
            }
            out.push(Subspace {
                field,
                ambient,
                basis: m,
                pivots: pivots.clone(),
            });
        }
        // Next pivot combination in lexicographic order.
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < ambient - (rank - i) {
                pivots[i] += 1;
                for l in (i + 1)..rank {
                    pivots[l] = pivots[l - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::gf2()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(gf2(), 2);
        let (r, rank, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
        assert_eq!(piv, vec![0, 1]);
        let z = Matrix::zeros(gf2(), 3, 3);
        let (r, rank, _) = z.rref();
        assert!(r.is_zero());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_detects_dependent_row() {
        let m = Matrix::from_rows(
            gf2(),
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_idempotent_gf4() {
        let f = Field::gf4();
        let mut rng = crate::ElStream::new(11);
        for _ in 0..50 {
            let m = Matrix::from_rows(
                f,
                (0..3)
                    .map(|_| (0..4).map(|_| rng.next_el(f)).collect())
                    .collect(),
            );
            let (r, rank, _) = m.rref();
            let (rr, rank2, _) = r.rref();
            assert_eq!(r, rr);
            assert_eq!(rank, rank2);
        }
    }

    #[test]
    fn nullspace_cases() {
        let id = Matrix::identity(gf2(), 3);
        assert_eq!(nullspace(&id).dim(), 0);
        let z = Matrix::zeros(gf2(), 4, 4);
        assert_eq!(nullspace(&z).dim(), 4);
        let m = Matrix::from_rows(gf2(), vec![vec![1, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.dim(), 1);
        assert!(ns.contains_vec(&[1, 1]));
        // basis vectors annihilate the matrix
        for v in ns.basis_vectors() {
            assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_rows(gf2(), vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let x = solve(&m, &[1, 1]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 1]);
        let m2 = Matrix::from_rows(gf2(), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(solve(&m2, &[1, 0]), None);
    }

    #[test]
    fn subspace_lattice() {
        let f = gf2();
        let l1 = Subspace::from_vectors(f, 2, vec![vec![1, 0]]);
        let l2 = Subspace::from_vectors(f, 2, vec![vec![0, 1]]);
        assert_eq!(l1.sum(&l2).unwrap(), Subspace::full(f, 2));
        let s = Subspace::from_vectors(f, 3, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(s.intersect(&s).unwrap(), s);
        let full = Subspace::full(f, 4);
        let two = Subspace::from_vectors(f, 4, vec![vec![1, 0, 0, 0], vec![0, 1, 1, 0]]);
        assert_eq!(full.quotient_dim(&two).unwrap(), 2);
        assert_eq!(two.quotient_dim(&full), Err(Error::NotASubspace));
    }

    #[test]
    fn subspace_equality_is_bitwise() {
        let f = gf2();
        let a = Subspace::from_vectors(f, 3, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(f, 3, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(a, b);
    }

    #[test]
    fn subspace_enumeration_counts() {
        // Gaussian binomials: [4 2]_2 = 35, [3 1]_2 = 7, [4 2]_4 = 357.
        assert_eq!(subspaces_of_rank(gf2(), 4, 2).len(), 35);
        assert_eq!(subspaces_of_rank(gf2(), 3, 1).len(), 7);
        assert_eq!(subspaces_of_rank(Field::gf4(), 4, 2).len(), 357);
        // Each exactly once.
        let all = subspaces_of_rank(gf2(), 4, 2);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn matrix_inverse() {
        let f = Field::gf4();
        let m = Matrix::from_rows(f, vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let sing = Matrix::from_rows(f, vec![vec![1, 1], vec![1, 1]]);
        assert!(sing.inverse().is_none());
    }
}
