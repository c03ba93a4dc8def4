//! Lie superalgebras in characteristic 2: brackets, squarings, verification,
//! structural invariants, quotients, restricted Lie algebras, queerification
//! and isomorphism search.
//!
//! Basis convention: indices `0..m` are even, `m..m+n` are odd.  The bracket
//! table is symmetric (char 2) with zero diagonal; the odd-odd entries are
//! the polar form of the squaring, so `s` on an arbitrary odd vector is
//! evaluated as `s(Σ λ_i e_i) = Σ λ_i² s(e_i) + Σ_{i<j} λ_i λ_j [e_i, e_j]`.

use crate::field::Field;
use crate::linalg::{solve, Matrix, Subspace};
use crate::{Error, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> SuperDim {
        SuperDim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::fmt::Display for SuperDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

pub(crate) fn vzero(n: usize) -> Vec<u32> {
    vec![0; n]
}

pub(crate) fn vadd(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x ^ y).collect()
}

pub(crate) fn vaddassign(a: &mut [u32], b: &[u32]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

pub(crate) fn vscale(f: Field, c: u32, v: &[u32]) -> Vec<u32> {
    v.iter().map(|&x| f.mul(c, x)).collect()
}

pub(crate) fn vis_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

fn fmt_vec(g: &LieSuperalgebra, v: &[u32]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                g.basis_names[i].clone()
            } else {
                format!("{}*{}", g.field.format_el(c), g.basis_names[i])
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// A finite-dimensional Lie superalgebra over GF(2^k), given by structure
/// constants and squaring data on the odd basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    pub field: Field,
    pub dim: SuperDim,
    /// bracket[i][j] = coordinates of [e_i, e_j]; symmetric, zero diagonal.
    bracket: Vec<Vec<Vec<u32>>>,
    /// squaring[i] = coordinates of s(e_{m+i}) for the i-th odd basis vector.
    squaring: Vec<Vec<u32>>,
    pub name: Option<String>,
    pub basis_names: Vec<String>,
}

impl LieSuperalgebra {
    /// Zero algebra structure; fill in entries with `set_bracket`/`set_squaring`.
    pub fn abelian(field: Field, dim: SuperDim) -> LieSuperalgebra {
        let t = dim.total();
        LieSuperalgebra {
            field,
            dim,
            bracket: vec![vec![vzero(t); t]; t],
            squaring: vec![vzero(t); dim.odd],
            name: None,
            basis_names: (1..=t).map(|i| format!("e{}", i)).collect(),
        }
    }

    pub fn with_name(mut self, name: &str) -> LieSuperalgebra {
        self.name = Some(name.to_string());
        self
    }

    pub fn total(&self) -> usize {
        self.dim.total()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.dim.parity(i)
    }

    pub fn odd_indices(&self) -> std::ops::Range<usize> {
        self.dim.even..self.total()
    }

    /// Sets [e_i, e_j] (and its mirror) to `v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<u32>) {
        assert_ne!(i, j, "diagonal brackets vanish in characteristic 2");
        assert_eq!(v.len(), self.total());
        self.bracket[i][j] = v.clone();
        self.bracket[j][i] = v;
    }

    /// Sets s(e_i) for an odd basis index i.
    pub fn set_squaring(&mut self, i: usize, v: Vec<u32>) {
        assert!(i >= self.dim.even, "squaring is defined on odd basis vectors");
        assert_eq!(v.len(), self.total());
        self.squaring[i - self.dim.even] = v;
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i][j]
    }

    pub fn sq_basis(&self, i: usize) -> &[u32] {
        &self.squaring[i - self.dim.even]
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|r| r.iter().all(|v| vis_zero(v)))
            && self.squaring.iter().all(|v| vis_zero(v))
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_eval(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>, Error> {
        let t = self.total();
        if x.len() != t || y.len() != t {
            return Err(Error::DimensionMismatch);
        }
        let f = self.field;
        let mut out = vzero(t);
        for i in 0..t {
            if x[i] == 0 {
                continue;
            }
            for j in 0..t {
                if y[j] == 0 {
                    continue;
                }
                let c = f.mul(x[i], y[j]);
                if c != 0 {
                    vaddassign(&mut out, &vscale(f, c, &self.bracket[i][j]));
                }
            }
        }
        Ok(out)
    }

    /// Evaluates the squaring on an odd vector via polarization.
    pub fn squaring_eval(&self, x: &[u32]) -> Result<Vec<u32>, Error> {
        let t = self.total();
        if x.len() != t {
            return Err(Error::DimensionMismatch);
        }
        if x[..self.dim.even].iter().any(|&c| c != 0) {
            return Err(Error::NotOdd);
        }
        let f = self.field;
        let mut out = vzero(t);
        for i in self.odd_indices() {
            if x[i] == 0 {
                continue;
            }
            vaddassign(&mut out, &vscale(f, f.square(x[i]), self.sq_basis(i)));
            for j in (i + 1)..t {
                if x[j] == 0 {
                    continue;
                }
                let c = f.mul(x[i], x[j]);
                vaddassign(&mut out, &vscale(f, c, &self.bracket[i][j]));
            }
        }
        Ok(out)
    }

    fn basis_vec(&self, i: usize) -> Vec<u32> {
        let mut v = vzero(self.total());
        v[i] = 1;
        v
    }

    /// Checks the structure-constant invariants, the cyclic Jacobi identity
    /// on basis triples, and the squaring Jacobi `[s(x),y] = [x,[x,y]]` on
    /// odd basis vectors and pairwise sums.  (Both sides are quadratic in x,
    /// so basis plus pairwise-sum checks cover arbitrary odd x.)
    pub fn verify(&self) -> Report {
        let mut rep = Report::default();
        let t = self.total();
        let m = self.dim.even;
        // (a) structural invariants
        for i in 0..t {
            if !vis_zero(&self.bracket[i][i]) {
                rep.fail(format!("[e{0},e{0}] must vanish", i + 1));
            }
            for j in 0..t {
                if self.bracket[i][j] != self.bracket[j][i] {
                    rep.fail(format!("bracket table not symmetric at ({},{})", i + 1, j + 1));
                }
                let pij = if (i >= m) == (j >= m) { Parity::Even } else { Parity::Odd };
                for k in 0..t {
                    if self.bracket[i][j][k] != 0 && self.parity(k) != pij {
                        rep.fail(format!(
                            "parity violation: [e{},e{}] has a component on e{}",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                    }
                }
            }
        }
        for i in self.odd_indices() {
            for k in m..t {
                if self.sq_basis(i)[k] != 0 {
                    rep.fail(format!("s(e{}) has an odd component on e{}", i + 1, k + 1));
                }
            }
        }
        if !rep.passed() {
            return rep;
        }
        // (b) cyclic Jacobi on basis triples
        for i in 0..t {
            for j in (i + 1)..t {
                for k in (j + 1)..t {
                    let mut acc = vzero(t);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = &self.bracket[a][b];
                        let term = self
                            .bracket_eval(inner, &self.basis_vec(c))
                            .expect("dims agree");
                        vaddassign(&mut acc, &term);
                    }
                    if !vis_zero(&acc) {
                        rep.fail(format!(
                            "cyclic Jacobi fails at (e{},e{},e{}): residue {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            fmt_vec(self, &acc)
                        ));
                    }
                }
            }
        }
        // (c) squaring Jacobi on odd basis and pairwise sums
        let mut odd_probes: Vec<Vec<u32>> = self.odd_indices().map(|i| self.basis_vec(i)).collect();
        for i in self.odd_indices() {
            for j in (i + 1)..t {
                let mut v = self.basis_vec(i);
                v[j] = 1;
                odd_probes.push(v);
            }
        }
        for x in &odd_probes {
            let sx = self.squaring_eval(x).expect("odd probe");
            for y in 0..t {
                let yv = self.basis_vec(y);
                let lhs = self.bracket_eval(&sx, &yv).unwrap();
                let xy = self.bracket_eval(x, &yv).unwrap();
                let rhs = self.bracket_eval(x, &xy).unwrap();
                if lhs != rhs {
                    rep.fail(format!(
                        "squaring Jacobi fails at x={}, y=e{}: [s(x),y]={} but [x,[x,y]]={}",
                        fmt_vec(self, x),
                        y + 1,
                        fmt_vec(self, &lhs),
                        fmt_vec(self, &rhs)
                    ));
                }
            }
        }
        rep
    }

    /// Splits a subspace into its even and odd parts; errors if the subspace
    /// is not spanned by parity-homogeneous vectors.
    pub fn parity_split(&self, s: &Subspace) -> Result<(Subspace, Subspace), Error> {
        let t = self.total();
        let m = self.dim.even;
        let even_coords = Subspace::from_vectors(
            self.field,
            t,
            (0..m).map(|i| self.basis_vec(i)).collect(),
        );
        let odd_coords = Subspace::from_vectors(
            self.field,
            t,
            (m..t).map(|i| self.basis_vec(i)).collect(),
        );
        let se = s.intersect(&even_coords)?;
        let so = s.intersect(&odd_coords)?;
        if se.dim() + so.dim() != s.dim() {
            return Err(Error::NotHomogeneous);
        }
        Ok((se, so))
    }

    pub fn sdim_of(&self, s: &Subspace) -> Result<SuperDim, Error> {
        let (e, o) = self.parity_split(s)?;
        Ok(SuperDim::new(e.dim(), o.dim()))
    }

    /// Smallest subspace containing all brackets of basis pairs and all
    /// squares s(e_i).  In characteristic 2 the span of squares is part of
    /// the derived algebra; Appendix-style invariant tables depend on it.
    pub fn derived_subalgebra(&self) -> Subspace {
        let t = self.total();
        let mut gens = Vec::new();
        for i in 0..t {
            for j in (i + 1)..t {
                gens.push(self.bracket[i][j].clone());
            }
        }
        for i in self.odd_indices() {
            gens.push(self.sq_basis(i).to_vec());
        }
        Subspace::from_vectors(self.field, t, gens)
    }

    /// Kernel of the joint adjoint map {x : [x, e_i] = 0 for all i}.
    pub fn adjoint_kernel(&self) -> Subspace {
        let t = self.total();
        // Rows: for each (basis j, coordinate k): sum_i x_i c[i][j][k] = 0.
        let mut rows = Vec::new();
        for j in 0..t {
            for k in 0..t {
                let row: Vec<u32> = (0..t).map(|i| self.bracket[i][j][k]).collect();
                rows.push(row);
            }
        }
        crate::linalg::nullspace(&Matrix::from_rows(self.field, rows))
    }

    /// The center: even ad-central vectors together with the odd ad-central
    /// vectors of vanishing square (so every central line is a central
    /// ideal).  On the odd part of the adjoint kernel the squaring is
    /// additive — its polar form vanishes there — and Frobenius-semilinear,
    /// so its kernel is a subspace.
    pub fn center(&self) -> Subspace {
        let t = self.total();
        let k = self.adjoint_kernel();
        let (ke, ko) = match self.parity_split(&k) {
            Ok(p) => p,
            Err(_) => return k, // adjoint kernels are always homogeneous
        };
        let ov = ko.basis_vectors();
        if ov.is_empty() {
            return ke;
        }
        // kernel of λ ↦ Σ λ_i² s(k_i): substitute μ = λ² (Frobenius is
        // bijective) and solve the linear system in μ
        let mut cols = Matrix::zeros(self.field, t, ov.len());
        for (c, v) in ov.iter().enumerate() {
            let s = self.squaring_eval(v).expect("odd part");
            for (r, &x) in s.iter().enumerate() {
                cols[(r, c)] = x;
            }
        }
        let mu_kernel = crate::linalg::nullspace(&cols);
        let root_exp = 1u64 << (self.field.k() - 1); // inverse Frobenius
        let mut vecs = ke.basis_vectors();
        for mu in mu_kernel.basis_vectors() {
            let mut v = vzero(t);
            for (c, &m) in mu.iter().enumerate() {
                let lam = self.field.pow(m, root_exp);
                vaddassign(&mut v, &vscale(self.field, lam, &ov[c]));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.field, t, vecs)
    }

    /// True iff `h` is closed under bracketing with all of the algebra and
    /// under squaring of its odd part.  Requires `h` homogeneous.
    pub fn is_ideal(&self, h: &Subspace) -> Result<bool, Error> {
        let (he, ho) = self.parity_split(h)?;
        let t = self.total();
        for v in h.basis_vectors() {
            for i in 0..t {
                let b = self.bracket_eval(&v, &self.basis_vec(i))?;
                if !h.contains_vec(&b) {
                    return Ok(false);
                }
            }
        }
        // Squaring closure on the odd part: s is quadratic, so check the
        // basis of the odd part together with pairwise sums.
        let ov = ho.basis_vectors();
        for (a, v) in ov.iter().enumerate() {
            let s = self.squaring_eval(v)?;
            if !h.contains_vec(&s) {
                return Ok(false);
            }
            for w in ov.iter().skip(a + 1) {
                let s = self.squaring_eval(&vadd(v, w))?;
                if !h.contains_vec(&s) {
                    return Ok(false);
                }
            }
        }
        let _ = he;
        Ok(true)
    }

    /// Quotient by an ideal, on the canonical complement basis given by the
    /// non-pivot coordinates of the ideal's RREF basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieSuperalgebra, QuotientMap), Error> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let t = self.total();
        let m = self.dim.even;
        let piv = ideal.pivots().to_vec();
        let keep: Vec<usize> = (0..t).filter(|c| !piv.contains(c)).collect();
        let qm = keep.iter().filter(|&&c| c < m).count();
        let qn = keep.len() - qm;
        let qdim = SuperDim::new(qm, qn);
        let project = |v: &[u32]| -> Vec<u32> {
            let r = ideal.reduce_vec(v);
            keep.iter().map(|&c| r[c]).collect()
        };
        let mut q = LieSuperalgebra::abelian(self.field, qdim);
        q.basis_names = keep.iter().map(|&c| self.basis_names[c].clone()).collect();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                q.set_bracket(a, b, project(&self.bracket[i][j]));
            }
            if i >= m {
                q.set_squaring(a, project(self.sq_basis(i)));
            }
        }
        let mut proj = Matrix::zeros(self.field, keep.len(), t);
        for i in 0..t {
            let p = project(&self.basis_vec(i));
            for (a, &c) in p.iter().enumerate() {
                proj[(a, i)] = c;
            }
        }
        let mut lift = Matrix::zeros(self.field, t, keep.len());
        for (a, &c) in keep.iter().enumerate() {
            lift[(c, a)] = 1;
        }
        Ok((
            q,
            QuotientMap {
                proj,
                lift,
                kept_columns: keep,
            },
        ))
    }
}

/// Projection and canonical section attached to a quotient.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    /// quotient coordinates of a vector of the big algebra
    pub proj: Matrix,
    /// canonical lift (the kept coordinate axes)
    pub lift: Matrix,
    pub kept_columns: Vec<usize>,
}

/// An even linear map between superspaces of the same superdimension,
/// stored as a block-diagonal matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenLinearMap {
    pub dim: SuperDim,
    pub matrix: Matrix,
}

impl EvenLinearMap {
    pub fn identity(field: Field, dim: SuperDim) -> EvenLinearMap {
        EvenLinearMap {
            dim,
            matrix: Matrix::identity(field, dim.total()),
        }
    }

    pub fn from_blocks(dim: SuperDim, a: &Matrix, d: &Matrix) -> EvenLinearMap {
        let (m, n) = (dim.even, dim.odd);
        assert_eq!((a.rows(), a.cols()), (m, m));
        assert_eq!((d.rows(), d.cols()), (n, n));
        let mut mat = Matrix::zeros(a.field, m + n, m + n);
        for i in 0..m {
            for j in 0..m {
                mat[(i, j)] = a[(i, j)];
            }
        }
        for i in 0..n {
            for j in 0..n {
                mat[(m + i, m + j)] = d[(i, j)];
            }
        }
        EvenLinearMap { dim, matrix: mat }
    }

    pub fn is_block_diagonal(&self) -> bool {
        let m = self.dim.even;
        let t = self.dim.total();
        for i in 0..t {
            for j in 0..t {
                if (i < m) != (j < m) && self.matrix[(i, j)] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(v)
    }
}

/// Checks that `phi` (a column-image matrix) intertwines brackets, squarings
/// and optionally bilinear forms between `g1` and `g2`.
fn is_morphism_matrix(
    g1: &LieSuperalgebra,
    g2: &LieSuperalgebra,
    phi: &Matrix,
    gram1: Option<&Matrix>,
    gram2: Option<&Matrix>,
) -> bool {
    let t = g1.total();
    let img: Vec<Vec<u32>> = (0..t).map(|i| phi.col(i)).collect();
    for i in 0..t {
        for j in (i + 1)..t {
            let lhs = phi.mul_vec(g1.bracket_basis(i, j));
            let rhs = g2.bracket_eval(&img[i], &img[j]).unwrap();
            if lhs != rhs {
                return false;
            }
        }
    }
    for i in g1.odd_indices() {
        let lhs = phi.mul_vec(g1.sq_basis(i));
        let rhs = g2.squaring_eval(&img[i]).unwrap();
        if lhs != rhs {
            return false;
        }
    }
    if let (Some(w1), Some(w2)) = (gram1, gram2) {
        let f = g1.field;
        for i in 0..t {
            for j in 0..t {
                // w1(e_i,e_j) = w2(phi e_i, phi e_j)
                let mut acc = 0u32;
                for (a, &ca) in img[i].iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (b, &cb) in img[j].iter().enumerate() {
                        acc ^= f.mul(f.mul(ca, cb), w2[(a, b)]);
                    }
                }
                if acc != w1[(i, j)] {
                    return false;
                }
            }
        }
    }
    true
}

fn search_bound(field: Field, total: usize) -> Result<(), Error> {
    let limit = match field.order() {
        2 => 8,
        4 => 4,
        _ => 2,
    };
    if total > limit {
        return Err(Error::DimensionTooLarge(format!(
            "isomorphism search over GF({}) is limited to total dimension {}",
            field.order(),
            limit
        )));
    }
    Ok(())
}

/// Exhaustive isomorphism search over invertible even (block-diagonal) maps.
///
/// The search prunes first by the derived-subalgebra and center
/// superdimensions, then backtracks over basis images.  Basis vectors are
/// assigned in a constraint-greedy order (chosen so bracket and squaring
/// constraints become checkable as early as possible) and candidate images
/// are enumerated in numeric lexicographic order, so the witness returned is
/// the lexicographically least successful candidate with respect to that
/// documented order.
///
/// When Gram matrices are supplied the witness must also pull the second
/// form back to the first.
pub fn find_isomorphism(
    g1: &LieSuperalgebra,
    g2: &LieSuperalgebra,
    gram1: Option<&Matrix>,
    gram2: Option<&Matrix>,
) -> Result<Option<EvenLinearMap>, Error> {
    if g1.field != g2.field {
        return Err(Error::FieldMismatch);
    }
    if g1.dim != g2.dim {
        return Ok(None);
    }
    if gram1.is_some() != gram2.is_some() {
        return Ok(None);
    }
    search_bound(g1.field, g1.total())?;
    let d1 = g1.derived_subalgebra();
    let d2 = g2.derived_subalgebra();
    if g1.sdim_of(&d1)? != g2.sdim_of(&d2)? {
        return Ok(None);
    }
    let z1 = g1.center();
    let z2 = g2.center();
    if z1.dim() != z2.dim() || g1.sdim_of(&z1).ok() != g2.sdim_of(&z2).ok() {
        return Ok(None);
    }
    let t = g1.total();
    let order = assignment_order(g1, gram1.is_some());
    let mut search = IsoSearch {
        g1,
        g2,
        gram1,
        gram2,
        order: &order,
        schedule: constraint_schedule(g1, &order, gram1.is_some()),
        img: vec![vzero(t); t],
        echelon: Vec::new(),
    };
    if let Some(phi) = search.run(0) {
        debug_assert!(is_morphism_matrix(g1, g2, &phi, gram1, gram2));
        return Ok(Some(EvenLinearMap {
            dim: g1.dim,
            matrix: phi,
        }));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy)]
enum Constraint {
    /// Φ[e_i, e_j] = [Φe_i, Φe_j]
    Bracket(usize, usize),
    /// Φ s(e_i) = s(Φ e_i)
    Squaring(usize),
    /// ω1(e_i, e_j) = ω2(Φe_i, Φe_j)
    Form(usize, usize),
}

/// Greedy assignment order: repeatedly pick the basis index enabling the
/// most bracket/squaring constraints (ties to the smallest index).
fn assignment_order(g: &LieSuperalgebra, with_form: bool) -> Vec<usize> {
    let t = g.total();
    let mut order: Vec<usize> = Vec::new();
    let mut assigned = vec![false; t];
    let supp_ok = |w: &[u32], assigned: &[bool], extra: usize| {
        w.iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || assigned[k] || k == extra)
    };
    for _ in 0..t {
        let mut best: Option<(usize, usize)> = None; // (score, index)
        for u in 0..t {
            if assigned[u] {
                continue;
            }
            let mut score = 0;
            for i in 0..t {
                let i_ok = assigned[i] || i == u;
                if !i_ok {
                    continue;
                }
                for j in (i + 1)..t {
                    let j_ok = assigned[j] || j == u;
                    if !j_ok || (i != u && j != u) {
                        continue;
                    }
                    if supp_ok(g.bracket_basis(i, j), &assigned, u)
                        && !vis_zero(g.bracket_basis(i, j))
                    {
                        score += 2;
                    } else if with_form {
                        score += 1; // form constraints bind on every pair
                    }
                }
            }
            if g.parity(u) == Parity::Odd && supp_ok(g.sq_basis(u), &assigned, u) {
                score += 2;
            }
            match best {
                Some((s, i)) if (score, std::cmp::Reverse(u)) <= (s, std::cmp::Reverse(i)) => {}
                _ => best = Some((score, u)),
            }
        }
        let (_, u) = best.unwrap();
        assigned[u] = true;
        order.push(u);
    }
    order
}

/// For each depth, the constraints that first become checkable there (both
/// arguments assigned and the bracket/squaring support assigned).
fn constraint_schedule(
    g: &LieSuperalgebra,
    order: &[usize],
    with_form: bool,
) -> Vec<Vec<Constraint>> {
    let t = g.total();
    let mut depth_of = vec![0usize; t];
    for (d, &i) in order.iter().enumerate() {
        depth_of[i] = d;
    }
    let supp_depth = |w: &[u32]| -> usize {
        w.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| depth_of[k])
            .max()
            .unwrap_or(0)
    };
    let mut schedule: Vec<Vec<Constraint>> = vec![Vec::new(); t];
    for i in 0..t {
        for j in (i + 1)..t {
            let b = g.bracket_basis(i, j);
            let mut d = depth_of[i].max(depth_of[j]);
            if !vis_zero(b) {
                d = d.max(supp_depth(b));
            }
            schedule[d].push(Constraint::Bracket(i, j));
            if with_form {
                let df = depth_of[i].max(depth_of[j]);
                schedule[df].push(Constraint::Form(i, j));
            }
        }
        if with_form {
            schedule[depth_of[i]].push(Constraint::Form(i, i));
        }
        if g.parity(i) == Parity::Odd {
            let s = g.sq_basis(i);
            let mut d = depth_of[i];
            if !vis_zero(s) {
                d = d.max(supp_depth(s));
            }
            schedule[d].push(Constraint::Squaring(i));
        }
    }
    schedule
}

struct IsoSearch<'a> {
    g1: &'a LieSuperalgebra,
    g2: &'a LieSuperalgebra,
    gram1: Option<&'a Matrix>,
    gram2: Option<&'a Matrix>,
    order: &'a [usize],
    schedule: Vec<Vec<Constraint>>,
    img: Vec<Vec<u32>>,
    echelon: Vec<Vec<u32>>,
}

impl<'a> IsoSearch<'a> {
    fn apply(&self, w: &[u32]) -> Vec<u32> {
        let f = self.g1.field;
        let mut out = vzero(self.g1.total());
        for (k, &c) in w.iter().enumerate() {
            if c != 0 {
                vaddassign(&mut out, &vscale(f, c, &self.img[k]));
            }
        }
        out
    }

    fn check(&self, c: &Constraint) -> bool {
        match *c {
            Constraint::Bracket(i, j) => {
                let lhs = self.apply(self.g1.bracket_basis(i, j));
                let rhs = self
                    .g2
                    .bracket_eval(&self.img[i], &self.img[j])
                    .expect("dims agree");
                lhs == rhs
            }
            Constraint::Squaring(i) => {
                let lhs = self.apply(self.g1.sq_basis(i));
                let rhs = self.g2.squaring_eval(&self.img[i]).expect("odd image");
                lhs == rhs
            }
            Constraint::Form(i, j) => {
                let (w1, w2) = (self.gram1.unwrap(), self.gram2.unwrap());
                let f = self.g1.field;
                let mut acc = 0u32;
                for (a, &ca) in self.img[i].iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (b, &cb) in self.img[j].iter().enumerate() {
                        if cb != 0 {
                            acc ^= f.mul(f.mul(ca, cb), w2[(a, b)]);
                        }
                    }
                }
                acc == w1[(i, j)]
            }
        }
    }

    /// Reduces v against the echelon basis; Some(reduced) if independent.
    fn reduce(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.g1.field;
        let mut v = v.to_vec();
        for row in &self.echelon {
            let pivot = row.iter().position(|&c| c != 0).unwrap();
            if v[pivot] != 0 {
                let c = f.mul(v[pivot], f.inv(row[pivot]).unwrap());
                for (x, &r) in v.iter_mut().zip(row.iter()) {
                    *x ^= f.mul(c, r);
                }
            }
        }
        if vis_zero(&v) {
            None
        } else {
            Some(v)
        }
    }

    fn run(&mut self, depth: usize) -> Option<Matrix> {
        let t = self.g1.total();
        if depth == t {
            let mut phi = Matrix::zeros(self.g1.field, t, t);
            for j in 0..t {
                for (i, &c) in self.img[j].iter().enumerate() {
                    phi[(i, j)] = c;
                }
            }
            return Some(phi);
        }
        let u = self.order[depth];
        let m = self.g1.dim.even;
        let (lo, hi) = if u < m { (0, m) } else { (m, t) };
        let q = self.g1.field.order() as u64;
        let n_codes = q.pow((hi - lo) as u32);
        for code in 0..n_codes {
            let mut v = vzero(t);
            let mut rem = code;
            for c in (lo..hi).rev() {
                v[c] = (rem % q) as u32;
                rem /= q;
            }
            let Some(reduced) = self.reduce(&v) else {
                continue;
            };
            self.img[u] = v;
            let ok = self.schedule[depth].iter().all(|c| self.check(c));
            if ok {
                self.echelon.push(reduced);
                if let Some(phi) = self.run(depth + 1) {
                    return Some(phi);
                }
                self.echelon.pop();
            }
        }
        self.img[u] = vzero(t);
        None
    }
}

/// All automorphisms of `g` (brute force over invertible block-diagonal
/// maps); feasible only in the small dimensions of the classification work.
pub fn automorphisms(g: &LieSuperalgebra) -> Result<Vec<EvenLinearMap>, Error> {
    search_bound(g.field, g.total())?;
    let f = g.field;
    let (m, n) = (g.dim.even, g.dim.odd);
    let q = f.order() as u64;
    let mut out = Vec::new();
    let even_count = q.pow((m * m) as u32);
    let odd_count = q.pow((n * n) as u32);
    for ae in 0..even_count {
        let mut a = Matrix::zeros(f, m, m);
        let mut rem = ae;
        for i in 0..m {
            for j in 0..m {
                a[(i, j)] = (rem % q) as u32;
                rem /= q;
            }
        }
        if m > 0 && a.rank() != m {
            continue;
        }
        for de in 0..odd_count {
            let mut dmat = Matrix::zeros(f, n, n);
            let mut rem = de;
            for i in 0..n {
                for j in 0..n {
                    dmat[(i, j)] = (rem % q) as u32;
                    rem /= q;
                }
            }
            if n > 0 && dmat.rank() != n {
                continue;
            }
            let map = EvenLinearMap::from_blocks(g.dim, &a, &dmat);
            if is_morphism_matrix(g, g, &map.matrix, None, None) {
                out.push(map);
            }
        }
    }
    Ok(out)
}

/// The general linear Lie superalgebra gl(V) for V of superdimension `dim`,
/// together with the matrix of each basis endomorphism (in basis order).
pub fn gl_superalgebra(field: Field, dim: SuperDim) -> (LieSuperalgebra, Vec<Matrix>) {
    let t = dim.total();
    let mut even_pairs = Vec::new();
    let mut odd_pairs = Vec::new();
    for a in 0..t {
        for b in 0..t {
            if dim.parity(a) == dim.parity(b) {
                even_pairs.push((a, b));
            } else {
                odd_pairs.push((a, b));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = even_pairs.iter().chain(odd_pairs.iter()).cloned().collect();
    let gdim = SuperDim::new(even_pairs.len(), odd_pairs.len());
    let index_of = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
    let mut g = LieSuperalgebra::abelian(field, gdim);
    g.basis_names = pairs.iter().map(|&(a, b)| format!("E{}{}", a + 1, b + 1)).collect();
    // [E_ab, E_cd] = delta_bc E_ad + delta_da E_cb
    let gt = pairs.len();
    for i in 0..gt {
        let (a, b) = pairs[i];
        for j in (i + 1)..gt {
            let (c, d) = pairs[j];
            let mut v = vzero(gt);
            if b == c {
                v[index_of(a, d)] ^= 1;
            }
            if d == a {
                v[index_of(c, b)] ^= 1;
            }
            g.set_bracket(i, j, v);
        }
        // squaring of odd endomorphisms: E_ab^2 = delta_ba E_aa... in general
        // E_ab E_ab = delta_ba E_ab; for odd pairs a != b so the square is 0.
        // (set explicitly for clarity)
        if gdim.parity(i) == Parity::Odd {
            g.set_squaring(i, vzero(gt));
        }
    }
    let mats = pairs
        .iter()
        .map(|&(a, b)| {
            let mut m = Matrix::zeros(field, t, t);
            m[(a, b)] = 1;
            m
        })
        .collect();
    (g, mats)
}

/// A restricted Lie algebra: an ordinary (purely even) Lie algebra carrying
/// a 2-structure x -> x^[2] given on the basis and extended by
/// `(x+y)^[2] = x^[2] + y^[2] + [x,y]` and semilinearity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedLieAlgebra {
    pub field: Field,
    pub dim: usize,
    bracket: Vec<Vec<Vec<u32>>>,
    p2: Vec<Vec<u32>>,
    pub name: Option<String>,
}

impl RestrictedLieAlgebra {
    pub fn abelian(field: Field, dim: usize) -> RestrictedLieAlgebra {
        RestrictedLieAlgebra {
            field,
            dim,
            bracket: vec![vec![vzero(dim); dim]; dim],
            p2: vec![vzero(dim); dim],
            name: None,
        }
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<u32>) {
        assert_ne!(i, j);
        self.bracket[i][j] = v.clone();
        self.bracket[j][i] = v;
    }

    pub fn set_p2(&mut self, i: usize, v: Vec<u32>) {
        self.p2[i] = v;
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.bracket[i][j]
    }

    pub fn p2_basis(&self, i: usize) -> &[u32] {
        &self.p2[i]
    }

    pub fn bracket_eval(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vzero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = f.mul(x[i], y[j]);
                if c != 0 {
                    vaddassign(&mut out, &vscale(f, c, &self.bracket[i][j]));
                }
            }
        }
        out
    }

    /// x^[2] on an arbitrary vector, via the sum rule and semilinearity.
    pub fn p2_eval(&self, x: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vzero(self.dim);
        for i in 0..self.dim {
            if x[i] == 0 {
                continue;
            }
            vaddassign(&mut out, &vscale(f, f.square(x[i]), &self.p2[i]));
            for j in (i + 1)..self.dim {
                let c = f.mul(x[i], x[j]);
                if c != 0 {
                    vaddassign(&mut out, &vscale(f, c, &self.bracket[i][j]));
                }
            }
        }
        out
    }

    fn ad(&self, x: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let mut e = vzero(self.dim);
            e[j] = 1;
            let col = self.bracket_eval(x, &e);
            for i in 0..self.dim {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    /// Checks the Lie axioms of the bracket and the restrictedness axioms:
    /// `ad_{x^[2]} = (ad_x)^2` on basis vectors and pairwise sums (the sum
    /// rule and semilinearity hold by construction of `p2_eval`, and are
    /// rechecked on basis pairs for defense in depth).
    pub fn verify(&self) -> Report {
        let mut rep = Report::default();
        let d = self.dim;
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let mut e = [vzero(d), vzero(d), vzero(d)];
                    e[0][i] = 1;
                    e[1][j] = 1;
                    e[2][k] = 1;
                    let mut acc = vzero(d);
                    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                        let t = self.bracket_eval(&self.bracket_eval(&e[a], &e[b]), &e[c]);
                        vaddassign(&mut acc, &t);
                    }
                    if !vis_zero(&acc) {
                        rep.fail(format!("Jacobi fails at (e{},e{},e{})", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        let mut probes: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let mut v = vzero(d);
                v[i] = 1;
                v
            })
            .collect();
        for i in 0..d {
            for j in (i + 1)..d {
                let mut v = vzero(d);
                v[i] = 1;
                v[j] = 1;
                probes.push(v);
            }
        }
        for x in &probes {
            let lhs = self.ad(&self.p2_eval(x));
            let adx = self.ad(x);
            let rhs = adx.mul(&adx);
            if lhs != rhs {
                rep.fail(format!("ad_(x^[2]) != (ad_x)^2 at x={:?}", x));
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                let mut x = vzero(d);
                x[i] = 1;
                let mut y = vzero(d);
                y[j] = 1;
                let sum = self.p2_eval(&vadd(&x, &y));
                let mut expect = vadd(&self.p2_eval(&x), &self.p2_eval(&y));
                vaddassign(&mut expect, &self.bracket_eval(&x, &y));
                if sum != expect {
                    rep.fail(format!("sum rule fails at (e{},e{})", i + 1, j + 1));
                }
            }
        }
        rep
    }

    /// Queerification: the (n|n)-dimensional Lie superalgebra with
    /// `[x, Π(y)] = Π([x,y])` and `s(Π(x)) = x^[2]`.
    pub fn queerify(&self) -> Result<LieSuperalgebra, Error> {
        self.verify().into_result(|s| Error::NotRestricted(s))?;
        let d = self.dim;
        let mut g = LieSuperalgebra::abelian(self.field, SuperDim::new(d, d));
        g.basis_names = (1..=d)
            .map(|i| format!("e{}", i))
            .chain((1..=d).map(|i| format!("Pi(e{})", i)))
            .collect();
        let widen_even = |v: &[u32]| {
            let mut w = vzero(2 * d);
            w[..d].copy_from_slice(v);
            w
        };
        let widen_odd = |v: &[u32]| {
            let mut w = vzero(2 * d);
            w[d..].copy_from_slice(v);
            w
        };
        for i in 0..d {
            for j in 0..d {
                if i < j {
                    // even-even
                    g.set_bracket(i, j, widen_even(&self.bracket[i][j]));
                    // odd-odd: [Π(e_i), Π(e_j)] = polar form of s = [e_i,e_j]
                    g.set_bracket(d + i, d + j, widen_even(&self.bracket[i][j]));
                }
                if i != j {
                    g.set_bracket(i, d + j, widen_odd(&self.bracket[i][j]));
                } else {
                    g.set_bracket(i, d + i, vzero(2 * d));
                }
            }
            g.set_squaring(d + i, widen_even(&self.p2[i]));
        }
        let check = g.verify();
        debug_assert!(check.passed(), "queerification must be a Lie superalgebra");
        Ok(g)
    }
}

/// Inverse of a linear endomorphism given column-wise, or None.
pub fn invert_endo(m: &Matrix) -> Option<Matrix> {
    m.inverse()
}

/// Solves `phi(x) = v` for an invertible endomorphism.
pub fn apply_inverse(m: &Matrix, v: &[u32]) -> Option<Vec<u32>> {
    solve(m, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn l1_11(field: Field) -> LieSuperalgebra {
        // <e1 | e2> with [e1,e2] = e2
        let mut g = LieSuperalgebra::abelian(field, SuperDim::new(1, 1));
        g.set_bracket(0, 1, vec![0, 1]);
        g.with_name("L^1_{1|1}")
    }

    pub(crate) fn l2_11(field: Field) -> LieSuperalgebra {
        // <e1 | e2> with s(e2) = e1
        let mut g = LieSuperalgebra::abelian(field, SuperDim::new(1, 1));
        g.set_squaring(1, vec![1, 0]);
        g.with_name("L^2_{1|1}")
    }

    #[test]
    fn bracket_and_squaring_eval() {
        let g = l1_11(Field::gf2());
        assert_eq!(g.bracket_eval(&[1, 0], &[0, 1]).unwrap(), vec![0, 1]);
        assert_eq!(g.bracket_eval(&[1, 0], &[0, 0]).unwrap(), vec![0, 0]);
        let g2 = l2_11(Field::gf2());
        assert_eq!(g2.squaring_eval(&[0, 1]).unwrap(), vec![1, 0]);
        // [e2,e2] = s(2e2) - 2s(e2) = 0
        assert_eq!(g2.bracket_eval(&[0, 1], &[0, 1]).unwrap(), vec![0, 0]);
        assert_eq!(g2.squaring_eval(&[1, 1]), Err(Error::NotOdd));
    }

    #[test]
    fn semilinearity_over_gf4() {
        let f = Field::gf4();
        let g = l2_11(f);
        let a = 0b10;
        let sa = g.squaring_eval(&[0, a]).unwrap();
        // s(a e2) = a^2 e1 = (a+1) e1
        assert_eq!(sa, vec![f.square(a), 0]);
    }

    #[test]
    fn verify_accepts_and_rejects() {
        assert!(l1_11(Field::gf2()).verify().passed());
        assert!(l2_11(Field::gf2()).verify().passed());
        // (1|1) with [e1,e2]=e2 AND s(e2)=e1 fails the squaring Jacobi:
        // [s(e2),e2] = [e1,e2] = e2 but [e2,[e2,e2]] = 0.
        let mut bad = l1_11(Field::gf2());
        bad.set_squaring(1, vec![1, 0]);
        let rep = bad.verify();
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|s| s.contains("squaring Jacobi")));
    }

    #[test]
    fn polarization_identity_exhaustive_gf2() {
        // s(x+y) + s(x) + s(y) = [x,y] for all odd x, y
        for g in [l1_11(Field::gf2()), l2_11(Field::gf2())] {
            let t = g.total();
            for xb in 0..2u32 {
                for yb in 0..2u32 {
                    let x = vec![0, xb];
                    let y = vec![0, yb];
                    let mut lhs = g.squaring_eval(&vadd(&x, &y)).unwrap();
                    vaddassign(&mut lhs, &g.squaring_eval(&x).unwrap());
                    vaddassign(&mut lhs, &g.squaring_eval(&y).unwrap());
                    assert_eq!(lhs, g.bracket_eval(&x, &y).unwrap());
                }
            }
            let _ = t;
        }
    }

    #[test]
    fn derived_and_center() {
        let g = l1_11(Field::gf2());
        let d = g.derived_subalgebra();
        assert_eq!(g.sdim_of(&d).unwrap(), SuperDim::new(0, 1));
        assert_eq!(g.center().dim(), 0);
        let g2 = l2_11(Field::gf2());
        let d2 = g2.derived_subalgebra();
        assert_eq!(g2.sdim_of(&d2).unwrap(), SuperDim::new(1, 0));
        // ad kernel of L^2 is everything; the center drops e2 since
        // s(e2) = e1 != 0
        assert_eq!(g2.adjoint_kernel().dim(), 2);
        assert_eq!(g2.sdim_of(&g2.center()).unwrap(), SuperDim::new(1, 0));
    }

    #[test]
    fn ideals_and_quotient() {
        let g = l1_11(Field::gf2());
        let span_e2 = Subspace::from_vectors(g.field, 2, vec![vec![0, 1]]);
        let span_e1 = Subspace::from_vectors(g.field, 2, vec![vec![1, 0]]);
        assert!(g.is_ideal(&span_e2).unwrap());
        assert!(!g.is_ideal(&span_e1).unwrap());
        let inhom = Subspace::from_vectors(g.field, 2, vec![vec![1, 1]]);
        assert_eq!(g.is_ideal(&inhom), Err(Error::NotHomogeneous));
        let (q, _) = g.quotient(&span_e2).unwrap();
        assert_eq!(q.dim, SuperDim::new(1, 0));
        assert!(q.is_abelian());
        // g / g = 0
        let (q0, _) = g.quotient(&Subspace::full(g.field, 2)).unwrap();
        assert_eq!(q0.total(), 0);
    }

    #[test]
    fn iso_search_small() {
        let f = Field::gf2();
        let g1 = l1_11(f);
        let g2 = l2_11(f);
        // self-isomorphism is the identity (lexicographically least)
        let id = find_isomorphism(&g1, &g1, None, None).unwrap().unwrap();
        assert!(is_morphism_matrix(&g1, &g1, &id.matrix, None, None));
        // different invariants: no isomorphism
        assert!(find_isomorphism(&g1, &g2, None, None).unwrap().is_none());
    }

    #[test]
    fn automorphism_group_of_l1() {
        // Aut(L^1_{1|1}) over GF(2) is trivial; over GF(4) it is diag(1, d).
        let auts2 = automorphisms(&l1_11(Field::gf2())).unwrap();
        assert_eq!(auts2.len(), 1);
        let auts4 = automorphisms(&l1_11(Field::gf4())).unwrap();
        assert_eq!(auts4.len(), 3);
    }

    #[test]
    fn restricted_and_queerify() {
        let f = Field::gf2();
        // 1-dim <e> with e^[2] = e
        let mut r = RestrictedLieAlgebra::abelian(f, 1);
        r.set_p2(0, vec![1]);
        assert!(r.verify().passed());
        let q = r.queerify().unwrap();
        assert!(q.verify().passed());
        // q is (1|1) with s(Pi(e)) = e, i.e. isomorphic to L^2_{1|1}
        let w = find_isomorphism(&q, &l2_11(f), None, None).unwrap();
        assert!(w.is_some());
        // abelian zero 2-structure queerifies to the abelian (1|1)
        let r0 = RestrictedLieAlgebra::abelian(f, 1);
        let q0 = r0.queerify().unwrap();
        assert!(q0.is_abelian());
        // 2-dim nonabelian [e1,e2]=e2, e1^[2]=e1: queerification passes
        let mut r2 = RestrictedLieAlgebra::abelian(f, 2);
        r2.set_bracket(0, 1, vec![0, 1]);
        r2.set_p2(0, vec![1, 0]);
        assert!(r2.verify().passed());
        let q2 = r2.queerify().unwrap();
        assert_eq!(q2.dim, SuperDim::new(2, 2));
        assert!(q2.verify().passed());
        // even part of the queerification is the input bracket
        assert_eq!(q2.bracket_basis(0, 1)[..2], *r2.bracket_basis(0, 1));
    }

    #[test]
    fn gl_is_a_lie_superalgebra() {
        let (gl, mats) = gl_superalgebra(Field::gf2(), SuperDim::new(1, 1));
        assert_eq!(gl.dim, SuperDim::new(2, 2));
        assert!(gl.verify().passed());
        assert_eq!(mats.len(), 4);
    }
}
