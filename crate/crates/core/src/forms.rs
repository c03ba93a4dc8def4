//! Bilinear forms on superspaces in characteristic 2.
//!
//! The characteristic-2 substitute for antisymmetry is ō-antisymmetry: an
//! even form is symmetric on matching parities with ω(x,x) = 0 on even
//! vectors (nothing is imposed on the odd diagonal); an odd form is
//! symmetric.  Closedness couples the cyclic condition with the squaring:
//! `ω(s(x), y) = ω(x, [x,y])`.

use crate::field::Field;
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::superalg::{vzero, LieSuperalgebra, Parity, SuperDim};
use crate::{Error, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub field: Field,
    pub dim: SuperDim,
    pub gram: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormClass {
    OrthoOrthogonal,
    Periplectic,
    Inhomogeneous,
}

impl BilinearForm {
    pub fn new(dim: SuperDim, gram: Matrix) -> BilinearForm {
        assert_eq!(gram.rows(), dim.total());
        assert_eq!(gram.cols(), dim.total());
        BilinearForm {
            field: gram.field,
            dim,
            gram,
        }
    }

    pub fn zero(field: Field, dim: SuperDim) -> BilinearForm {
        BilinearForm::new(dim, Matrix::zeros(field, dim.total(), dim.total()))
    }

    pub fn eval(&self, x: &[u32], y: &[u32]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b != 0 {
                    acc ^= f.mul(f.mul(a, b), self.gram[(i, j)]);
                }
            }
        }
        acc
    }

    /// Parity of the form from the support of its Gram matrix.
    pub fn parity(&self) -> FormClass {
        let t = self.dim.total();
        let mut even = false;
        let mut odd = false;
        for i in 0..t {
            for j in 0..t {
                if self.gram[(i, j)] != 0 {
                    if self.dim.parity(i) == self.dim.parity(j) {
                        even = true;
                    } else {
                        odd = true;
                    }
                }
            }
        }
        match (even, odd) {
            (true, true) => FormClass::Inhomogeneous,
            (false, true) => FormClass::Periplectic,
            _ => FormClass::OrthoOrthogonal,
        }
    }

    /// ō-antisymmetry: symmetric Gram, and zero diagonal on even vectors
    /// for the even component.
    pub fn is_obar_antisymmetric(&self) -> bool {
        let t = self.dim.total();
        for i in 0..t {
            for j in 0..t {
                if self.gram[(i, j)] != self.gram[(j, i)] {
                    return false;
                }
            }
        }
        for i in 0..self.dim.even {
            if self.gram[(i, i)] != 0 {
                return false;
            }
        }
        true
    }

    pub fn kernel(&self) -> Subspace {
        nullspace(&self.gram)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.kernel().dim() == 0
    }

    /// {x : ω(x, v) = 0 for all v in s}.
    pub fn orthogonal(&self, s: &Subspace) -> Subspace {
        let t = self.dim.total();
        if s.dim() == 0 {
            return Subspace::full(self.field, t);
        }
        let mut rows = Vec::new();
        for v in s.basis_vectors() {
            // row_i = sum_j gram[i][j] v_j, constraint sum_i x_i row_i = 0
            let f = self.field;
            let mut row = vzero(t);
            for i in 0..t {
                let mut acc = 0;
                for (j, &c) in v.iter().enumerate() {
                    acc ^= f.mul(self.gram[(i, j)], c);
                }
                row[i] = acc;
            }
            rows.push(row);
        }
        nullspace(&Matrix::from_rows(self.field, rows))
    }
}

/// Summary returned by `classify_form`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSummary {
    pub class: FormClass,
    pub obar_antisymmetric: bool,
    pub nondegenerate: bool,
}

pub fn classify_form(w: &BilinearForm) -> FormSummary {
    FormSummary {
        class: w.parity(),
        obar_antisymmetric: w.is_obar_antisymmetric(),
        nondegenerate: w.is_nondegenerate(),
    }
}

/// Closedness: the cyclic condition on basis triples and the squaring
/// condition on odd basis vectors and pairwise sums.
pub fn is_closed(g: &LieSuperalgebra, w: &BilinearForm) -> Report {
    let mut rep = Report::default();
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    for i in 0..t {
        for j in (i + 1)..t {
            for k in (j + 1)..t {
                let mut acc = 0;
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    acc ^= w.eval(g.bracket_basis(x, y), &basis(z));
                }
                if acc != 0 {
                    rep.fail(format!(
                        "cyclic closedness fails at (e{},e{},e{})",
                        i + 1,
                        j + 1,
                        k + 1
                    ));
                }
            }
        }
    }
    let mut probes: Vec<Vec<u32>> = g.odd_indices().map(&basis).collect();
    for i in g.odd_indices() {
        for j in (i + 1)..t {
            let mut v = basis(i);
            v[j] = 1;
            probes.push(v);
        }
    }
    for x in &probes {
        let sx = g.squaring_eval(x).unwrap();
        for y in 0..t {
            let yv = basis(y);
            let lhs = w.eval(&sx, &yv);
            let rhs = w.eval(x, &g.bracket_eval(x, &yv).unwrap());
            if lhs != rhs {
                rep.fail(format!(
                    "squaring closedness fails at x={:?}, y=e{}",
                    x,
                    y + 1
                ));
            }
        }
    }
    rep
}

/// Coordinates of the space of ō-antisymmetric forms: same-parity pairs
/// (i < j), the odd diagonal (i, i), then mixed pairs (i even, j odd).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormLayout {
    pub dim: SuperDim,
    pub coords: Vec<(usize, usize)>,
}

impl FormLayout {
    pub fn new(dim: SuperDim) -> FormLayout {
        let t = dim.total();
        let mut coords = Vec::new();
        for i in 0..t {
            for j in (i + 1)..t {
                if dim.parity(i) == dim.parity(j) {
                    coords.push((i, j));
                }
            }
        }
        for i in dim.even..t {
            coords.push((i, i));
        }
        for i in 0..dim.even {
            for j in dim.even..t {
                coords.push((i, j));
            }
        }
        FormLayout { dim, coords }
    }

    pub fn n_coords(&self) -> usize {
        self.coords.len()
    }

    /// Only the coordinates of the requested parity component.
    pub fn parity_of(&self, c: usize) -> Parity {
        let (i, j) = self.coords[c];
        if self.dim.parity(i) == self.dim.parity(j) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn to_form(&self, field: Field, v: &[u32]) -> BilinearForm {
        let t = self.dim.total();
        let mut gram = Matrix::zeros(field, t, t);
        for (c, &(i, j)) in self.coords.iter().enumerate() {
            gram[(i, j)] = v[c];
            gram[(j, i)] = v[c];
        }
        BilinearForm::new(self.dim, gram)
    }

    pub fn from_form(&self, w: &BilinearForm) -> Vec<u32> {
        self.coords.iter().map(|&(i, j)| w.gram[(i, j)]).collect()
    }
}

/// Solution space of the closedness conditions over ō-antisymmetric forms,
/// optionally restricted to one parity.
pub fn closed_form_space(g: &LieSuperalgebra, parity: Option<Parity>) -> (FormLayout, Subspace) {
    let layout = FormLayout::new(g.dim);
    let n = layout.n_coords();
    let f = g.field;
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    // helper: row contribution of ω(u, v) in form coordinates
    let pairing_row = |row: &mut Vec<u32>, u: &[u32], v: &[u32]| {
        for (c, &(i, j)) in layout.coords.iter().enumerate() {
            let mut coeff = f.mul(u[i], v[j]) ^ f.mul(u[j], v[i]);
            if i == j {
                coeff = f.mul(u[i], v[i]);
            }
            row[c] ^= coeff;
        }
    };
    let mut rows = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            for k in (j + 1)..t {
                let mut row = vzero(n);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    pairing_row(&mut row, g.bracket_basis(x, y), &basis(z));
                }
                rows.push(row);
            }
        }
    }
    let mut probes: Vec<Vec<u32>> = g.odd_indices().map(&basis).collect();
    for i in g.odd_indices() {
        for j in (i + 1)..t {
            let mut v = basis(i);
            v[j] = 1;
            probes.push(v);
        }
    }
    for x in &probes {
        let sx = g.squaring_eval(x).unwrap();
        for y in 0..t {
            let yv = basis(y);
            let mut row = vzero(n);
            pairing_row(&mut row, &sx, &yv);
            pairing_row(&mut row, x, &g.bracket_eval(x, &yv).unwrap());
            rows.push(row);
        }
    }
    if let Some(p) = parity {
        for c in 0..n {
            if layout.parity_of(c) != p {
                let mut row = vzero(n);
                row[c] = 1;
                rows.push(row);
            }
        }
    }
    let space = if rows.is_empty() {
        Subspace::full(f, n)
    } else {
        nullspace(&Matrix::from_rows(f, rows))
    };
    (layout, space)
}

/// A strong polarization: g = ideal ⊕ complement with both summands
/// Lagrangian and the ideal homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongPolarization {
    pub ideal: Subspace,
    pub complement: Subspace,
}

/// Enumerates all strong polarizations of (g, ω).  The form must be
/// homogeneous, ō-antisymmetric, closed and non-degenerate.
pub fn find_strong_polarizations(
    g: &LieSuperalgebra,
    w: &BilinearForm,
) -> Result<Vec<StrongPolarization>, Error> {
    let summary = classify_form(w);
    if summary.class == FormClass::Inhomogeneous {
        return Err(Error::QuasiFrobeniusViolation("form is inhomogeneous".into()));
    }
    if !summary.obar_antisymmetric {
        return Err(Error::QuasiFrobeniusViolation(
            "form is not ō-antisymmetric".into(),
        ));
    }
    if !summary.nondegenerate {
        return Err(Error::QuasiFrobeniusViolation("form is degenerate".into()));
    }
    if !is_closed(g, w).passed() {
        return Err(Error::QuasiFrobeniusViolation("form is not closed".into()));
    }
    let t = g.total();
    let limit = match g.field.order() {
        2 => 8,
        4 => 4,
        _ => 2,
    };
    if t > limit {
        return Err(Error::DimensionTooLarge(format!(
            "polarization search over GF({}) is limited to total dimension {}",
            g.field.order(),
            limit
        )));
    }
    if t % 2 != 0 {
        return Ok(Vec::new());
    }
    let half = t / 2;
    let lagrangian_subspaces = homogeneous_subspaces_of_dim(g, half);
    let mut ideals = Vec::new();
    for s in &lagrangian_subspaces {
        if w.orthogonal(s) == *s && g.is_ideal(s).unwrap_or(false) {
            ideals.push(s.clone());
        }
    }
    let mut out = Vec::new();
    for ideal in ideals {
        for s in &lagrangian_subspaces {
            if w.orthogonal(s) == *s && s.is_complement_of(&ideal) {
                out.push(StrongPolarization {
                    ideal: ideal.clone(),
                    complement: s.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// All homogeneous subspaces of a given total dimension, each given as the
/// direct sum of an even and an odd coordinate-block subspace.
pub fn homogeneous_subspaces_of_dim(g: &LieSuperalgebra, d: usize) -> Vec<Subspace> {
    let (m, n) = (g.dim.even, g.dim.odd);
    let t = g.total();
    let mut out = Vec::new();
    for de in 0..=d.min(m) {
        let dodd = d - de;
        if dodd > n {
            continue;
        }
        for se in crate::linalg::subspaces_of_rank(g.field, m, de) {
            for so in crate::linalg::subspaces_of_rank(g.field, n, dodd) {
                let mut vecs = Vec::new();
                for v in se.basis_vectors() {
                    let mut w = vzero(t);
                    w[..m].copy_from_slice(&v);
                    vecs.push(w);
                }
                for v in so.basis_vectors() {
                    let mut w = vzero(t);
                    w[m..].copy_from_slice(&v);
                    vecs.push(w);
                }
                out.push(Subspace::from_vectors(g.field, t, vecs));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::vadd;

    fn gf2() -> Field {
        Field::gf2()
    }

    /// (C^1_1 + A): sdim (2|2), [e1,e2]=e2, [e1,e3]=e3, [e3,e4]=e2, s = 0.
    pub(crate) fn c11_plus_a() -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian(gf2(), SuperDim::new(2, 2));
        g.set_bracket(0, 1, vec![0, 1, 0, 0]);
        g.set_bracket(0, 2, vec![0, 0, 1, 0]);
        g.set_bracket(2, 3, vec![0, 1, 0, 0]);
        g
    }

    pub(crate) fn c11_form() -> BilinearForm {
        // ω = e1* ∧ e2* + e3* ∧ e4* (symmetric completion in char 2)
        let mut gram = Matrix::zeros(gf2(), 4, 4);
        gram[(0, 1)] = 1;
        gram[(1, 0)] = 1;
        gram[(2, 3)] = 1;
        gram[(3, 2)] = 1;
        BilinearForm::new(SuperDim::new(2, 2), gram)
    }

    #[test]
    fn c11_is_a_lie_superalgebra_with_closed_form() {
        let g = c11_plus_a();
        assert!(g.verify().passed());
        // s(e3+e4) = [e3,e4] = e2 via polarization
        assert_eq!(
            g.squaring_eval(&[0, 0, 1, 1]).unwrap(),
            vec![0, 1, 0, 0]
        );
        let w = c11_form();
        let summary = classify_form(&w);
        assert_eq!(summary.class, FormClass::OrthoOrthogonal);
        assert!(summary.obar_antisymmetric);
        assert!(summary.nondegenerate);
        assert!(is_closed(&g, &w).passed());
    }

    #[test]
    fn zero_form_is_vacuously_symmetric() {
        let w = BilinearForm::zero(gf2(), SuperDim::new(1, 1));
        let s = classify_form(&w);
        assert!(s.obar_antisymmetric);
        assert!(!s.nondegenerate);
        assert_eq!(s.class, FormClass::OrthoOrthogonal);
    }

    #[test]
    fn orthogonal_dimension_formula() {
        let g = c11_plus_a();
        let w = c11_form();
        let _ = &g;
        for d in 0..=4 {
            for s in homogeneous_subspaces_of_dim(&g, d) {
                let perp = w.orthogonal(&s);
                assert_eq!(s.dim() + perp.dim(), 4);
            }
        }
        // full space orthogonal is zero for nondegenerate ω
        assert_eq!(w.orthogonal(&Subspace::full(gf2(), 4)).dim(), 0);
    }

    #[test]
    fn polarizations_of_c11() {
        let g = c11_plus_a();
        let w = c11_form();
        let pols = find_strong_polarizations(&g, &w).unwrap();
        assert!(!pols.is_empty());
        // the catalog's stored ideal span{e2, e4} occurs
        let a = Subspace::from_vectors(gf2(), 4, vec![vec![0, 1, 0, 0], vec![0, 0, 0, 1]]);
        assert!(pols.iter().any(|p| p.ideal == a));
        // every Lagrangian ideal found is abelian
        for p in &pols {
            for u in p.ideal.basis_vectors() {
                for v in p.ideal.basis_vectors() {
                    assert!(crate::superalg::vis_zero(
                        &g.bracket_eval(&u, &v).unwrap()
                    ));
                }
                if u[..2] == [0, 0] {
                    let s = g.squaring_eval(&u).unwrap();
                    assert!(p.ideal.contains_vec(&s));
                }
            }
            // and the odd sums square into the ideal
            let vs = p.ideal.basis_vectors();
            for (i, u) in vs.iter().enumerate() {
                for v in vs.iter().skip(i + 1) {
                    let sum = vadd(u, v);
                    if sum[..2] == [0, 0] {
                        let s = g.squaring_eval(&sum).unwrap();
                        assert!(p.ideal.contains_vec(&s));
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_on_abelian_are_everything() {
        let g = LieSuperalgebra::abelian(gf2(), SuperDim::new(1, 1));
        let (layout, space) = closed_form_space(&g, None);
        assert_eq!(space.dim(), layout.n_coords());
    }
}
