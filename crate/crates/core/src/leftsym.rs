//! Left-symmetric and left-alternative superalgebras in characteristic 2.
//!
//! A left-symmetric superalgebra satisfies
//! `(i)  x▷(y▷z) + (x▷y)▷z = y▷(x▷z) + (y▷x)▷z` for all x, y, z and
//! `(ii) x▷(x▷y) = (x▷x)▷y` for odd x.  Left-alternative means (ii) holds
//! for all x; in characteristic 2 left-alternative implies left-symmetric.
//! A product is compatible with a Lie superalgebra when
//! `[x,y] = x▷y + y▷x` and `s(x) = x▷x`.

use crate::cohomology::Representation;
use crate::field::Field;
use crate::linalg::{solve, Matrix};
use crate::superalg::{
    automorphisms, vadd, vaddassign, vis_zero, vscale, vzero, LieSuperalgebra, Parity, SuperDim,
};
use crate::{Error, Report};

/// A bilinear product given by structure constants, parity-additive but
/// with no symmetry constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub field: Field,
    pub dim: SuperDim,
    a: Vec<Vec<Vec<u32>>>,
    pub name: Option<String>,
}

impl Product {
    pub fn zero(field: Field, dim: SuperDim) -> Product {
        let t = dim.total();
        Product {
            field,
            dim,
            a: vec![vec![vzero(t); t]; t],
            name: None,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<u32>) {
        assert_eq!(v.len(), self.dim.total());
        self.a[i][j] = v;
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        &self.a[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|r| r.iter().all(|v| vis_zero(v)))
    }

    pub fn eval(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let t = self.dim.total();
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
                    vaddassign(&mut out, &vscale(f, c, &self.a[i][j]));
                }
            }
        }
        out
    }

    /// Left multiplication matrix ℓ_x.
    pub fn left_mul(&self, x: &[u32]) -> Matrix {
        let t = self.dim.total();
        let mut m = Matrix::zeros(self.field, t, t);
        for j in 0..t {
            let mut e = vzero(t);
            e[j] = 1;
            let col = self.eval(x, &e);
            for i in 0..t {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    /// Flattened structure constants, the tie-breaking key for orbit
    /// representatives.
    pub fn flatten(&self) -> Vec<u32> {
        let t = self.dim.total();
        let mut v = Vec::with_capacity(t * t * t);
        for i in 0..t {
            for j in 0..t {
                v.extend_from_slice(&self.a[i][j]);
            }
        }
        v
    }

    /// Pullback along an invertible even map: p'(x,y) = φ⁻¹(p(φx, φy)).
    pub fn transport(&self, phi: &Matrix) -> Product {
        let t = self.dim.total();
        let inv = phi.inverse().expect("transport needs an invertible map");
        let mut out = Product::zero(self.field, self.dim);
        for i in 0..t {
            for j in 0..t {
                let v = self.eval(&phi.col(i), &phi.col(j));
                out.a[i][j] = inv.mul_vec(&v);
            }
        }
        out
    }

    pub fn parity_ok(&self) -> bool {
        let t = self.dim.total();
        for i in 0..t {
            for j in 0..t {
                let pij = if self.dim.parity(i) == self.dim.parity(j) {
                    Parity::Even
                } else {
                    Parity::Odd
                };
                for k in 0..t {
                    if self.a[i][j][k] != 0 && self.dim.parity(k) != pij {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The associator (x▷y)▷z + x▷(y▷z).
pub fn associator(p: &Product, x: &[u32], y: &[u32], z: &[u32]) -> Vec<u32> {
    let mut out = p.eval(&p.eval(x, y), z);
    vaddassign(&mut out, &p.eval(x, &p.eval(y, z)));
    out
}

fn basis_vec(t: usize, i: usize) -> Vec<u32> {
    let mut v = vzero(t);
    v[i] = 1;
    v
}

fn odd_probes(dim: SuperDim) -> Vec<Vec<u32>> {
    let t = dim.total();
    let mut probes: Vec<Vec<u32>> = (dim.even..t).map(|i| basis_vec(t, i)).collect();
    for i in dim.even..t {
        for j in (i + 1)..t {
            let mut v = basis_vec(t, i);
            v[j] = 1;
            probes.push(v);
        }
    }
    probes
}

fn all_probes(dim: SuperDim) -> Vec<Vec<u32>> {
    let t = dim.total();
    let mut probes: Vec<Vec<u32>> = (0..t).map(|i| basis_vec(t, i)).collect();
    for i in 0..t {
        for j in (i + 1)..t {
            let mut v = basis_vec(t, i);
            v[j] = 1;
            probes.push(v);
        }
    }
    probes
}

/// Axiom (i) on basis triples and axiom (ii) on odd basis vectors and
/// pairwise sums (both sides of (ii) are quadratic in x, so that suffices).
///
/// The axioms themselves do not involve the grading, so products that are
/// not parity-additive (they arise from inhomogeneous invertible
/// derivations) are accepted; use `Product::parity_ok` separately.
pub fn is_left_symmetric(p: &Product) -> Report {
    let mut rep = Report::default();
    let t = p.dim.total();
    for i in 0..t {
        for j in (i + 1)..t {
            for k in 0..t {
                let x = basis_vec(t, i);
                let y = basis_vec(t, j);
                let z = basis_vec(t, k);
                let lhs = associator(p, &x, &y, &z);
                let rhs = associator(p, &y, &x, &z);
                if lhs != rhs {
                    rep.fail(format!(
                        "axiom (i) fails at (e{},e{},e{})",
                        i + 1,
                        j + 1,
                        k + 1
                    ));
                }
            }
        }
    }
    for x in odd_probes(p.dim) {
        for k in 0..t {
            let y = basis_vec(t, k);
            if !vis_zero(&associator(p, &x, &x, &y)) {
                rep.fail(format!("axiom (ii) fails at x={:?}, y=e{}", x, k + 1));
            }
        }
    }
    rep
}

/// The diagonal axiom for all x (basis and pairwise sums of any parity).
pub fn is_left_alternative(p: &Product) -> Report {
    let mut rep = Report::default();
    let t = p.dim.total();
    for x in all_probes(p.dim) {
        for k in 0..t {
            let y = basis_vec(t, k);
            if !vis_zero(&associator(p, &x, &x, &y)) {
                rep.fail(format!(
                    "left-alternativity fails: Asso(x,x,e{}) != 0 at x={:?}",
                    k + 1,
                    x
                ));
            }
        }
    }
    rep
}

/// The candidate Lie structure `[x,y] = x▷y + y▷x`, `s(x) = x▷x` (without
/// the left-symmetry requirement); see `lie_of_product`.
pub fn lie_table_of_product(p: &Product) -> LieSuperalgebra {
    let t = p.dim.total();
    let mut g = LieSuperalgebra::abelian(p.field, p.dim);
    for i in 0..t {
        for j in (i + 1)..t {
            g.set_bracket(i, j, vadd(&p.a[i][j], &p.a[j][i]));
        }
        if p.dim.parity(i) == Parity::Odd {
            g.set_squaring(i, p.a[i][i].clone());
        }
    }
    g
}

/// The Lie superalgebra of a left-symmetric product.
pub fn lie_of_product(p: &Product) -> Result<LieSuperalgebra, Error> {
    is_left_symmetric(p).into_result(Error::NotLeftSymmetric)?;
    let g = lie_table_of_product(p);
    debug_assert!(g.verify().passed());
    Ok(g)
}

/// True iff the product's induced bracket and squaring tables equal g's.
pub fn is_compatible(p: &Product, g: &LieSuperalgebra) -> bool {
    if p.field != g.field || p.dim != g.dim {
        return false;
    }
    let cand = lie_table_of_product(p);
    let t = g.total();
    for i in 0..t {
        for j in (i + 1)..t {
            if cand.bracket_basis(i, j) != g.bracket_basis(i, j) {
                return false;
            }
        }
        if g.parity(i) == Parity::Odd && cand.sq_basis(i) != g.sq_basis(i) {
            return false;
        }
    }
    true
}

/// Derivation check: Leibniz on basis pairs and `D(s(x)) = [D(x), x]` on
/// odd basis vectors and pairwise sums.  Derivations form a superspace, so
/// inhomogeneous maps are allowed.
pub fn is_derivation(g: &LieSuperalgebra, d: &Matrix) -> Report {
    let mut rep = Report::default();
    let t = g.total();
    for i in 0..t {
        for j in (i + 1)..t {
            let lhs = d.mul_vec(g.bracket_basis(i, j));
            let mut rhs = g
                .bracket_eval(&d.mul_vec(&basis_vec(t, i)), &basis_vec(t, j))
                .unwrap();
            vaddassign(
                &mut rhs,
                &g.bracket_eval(&basis_vec(t, i), &d.mul_vec(&basis_vec(t, j)))
                    .unwrap(),
            );
            if lhs != rhs {
                rep.fail(format!("Leibniz fails at (e{},e{})", i + 1, j + 1));
            }
        }
    }
    for x in odd_probes(g.dim) {
        let lhs = d.mul_vec(&g.squaring_eval(&x).unwrap());
        let rhs = g.bracket_eval(&d.mul_vec(&x), &x).unwrap();
        if lhs != rhs {
            rep.fail(format!("D(s(x)) != [D(x),x] at x={:?}", x));
        }
    }
    rep
}

/// Product from an invertible derivation: `x▷y = D⁻¹([x, D(y)])`.
pub fn product_from_derivation(g: &LieSuperalgebra, d: &Matrix) -> Result<Product, Error> {
    is_derivation(g, d).into_result(Error::NotADerivation)?;
    let dinv = d.inverse().ok_or(Error::NotInvertible)?;
    let t = g.total();
    let mut p = Product::zero(g.field, g.dim);
    for i in 0..t {
        for j in 0..t {
            let v = g
                .bracket_eval(&basis_vec(t, i), &d.mul_vec(&basis_vec(t, j)))
                .unwrap();
            p.a[i][j] = dinv.mul_vec(&v);
        }
    }
    debug_assert!(is_left_symmetric(&p).passed());
    debug_assert!(is_compatible(&p, g));
    Ok(p)
}

/// Rota-Baxter identities for an even operator R on the adjoint module.
pub fn rota_baxter_check(g: &LieSuperalgebra, r: &Matrix) -> Report {
    let mut rep = Report::default();
    let t = g.total();
    let m = g.dim.even;
    for i in 0..t {
        for j in 0..t {
            if ((i < m) != (j < m)) && r[(i, j)] != 0 {
                rep.fail("Rota-Baxter operator must be even".into());
                return rep;
            }
        }
    }
    for i in 0..t {
        for j in (i + 1)..t {
            let rx = r.mul_vec(&basis_vec(t, i));
            let ry = r.mul_vec(&basis_vec(t, j));
            let lhs = g.bracket_eval(&rx, &ry).unwrap();
            let mut inner = g.bracket_eval(&rx, &basis_vec(t, j)).unwrap();
            vaddassign(&mut inner, &g.bracket_eval(&basis_vec(t, i), &ry).unwrap());
            let rhs = r.mul_vec(&inner);
            if lhs != rhs {
                rep.fail(format!("Rota-Baxter bracket identity fails at (e{},e{})", i + 1, j + 1));
            }
        }
    }
    for x in odd_probes(g.dim) {
        let rx = r.mul_vec(&x);
        let lhs = g.squaring_eval(&rx).unwrap();
        let rhs = r.mul_vec(&g.bracket_eval(&rx, &x).unwrap());
        if lhs != rhs {
            rep.fail(format!("Rota-Baxter squaring identity fails at x={:?}", x));
        }
    }
    rep
}

/// O-operator identities for an even map R: M -> g with respect to a module.
pub fn o_operator_check(
    g: &LieSuperalgebra,
    rep_m: &Representation,
    r: &Matrix,
) -> Report {
    let mut report = Report::default();
    let mt = rep_m.mdim.total();
    let mm = rep_m.mdim.even;
    let gm = g.dim.even;
    // evenness of R: M -> g
    for i in 0..g.total() {
        for u in 0..mt {
            if ((i < gm) != (u < mm)) && r[(i, u)] != 0 {
                report.fail("O-operator must be even".into());
                return report;
            }
        }
    }
    let mbasis = |u: usize| {
        let mut v = vzero(mt);
        v[u] = 1;
        v
    };
    for u in 0..mt {
        for v in (u + 1)..mt {
            let ru = r.mul_vec(&mbasis(u));
            let rv = r.mul_vec(&mbasis(v));
            let lhs = g.bracket_eval(&ru, &rv).unwrap();
            let mut inner = rep_m.act(&ru, &mbasis(v));
            vaddassign(&mut inner, &rep_m.act(&rv, &mbasis(u)));
            let rhs = r.mul_vec(&inner);
            if lhs != rhs {
                report.fail(format!("O-operator bracket identity fails at (m{},m{})", u + 1, v + 1));
            }
        }
    }
    let mut probes: Vec<Vec<u32>> = (mm..mt).map(&mbasis).collect();
    for u in mm..mt {
        for v in (u + 1)..mt {
            let mut w = mbasis(u);
            w[v] = 1;
            probes.push(w);
        }
    }
    for x in &probes {
        let rx = r.mul_vec(x);
        let lhs = g.squaring_eval(&rx).unwrap();
        let rhs = r.mul_vec(&rep_m.act(&rx, x));
        if lhs != rhs {
            report.fail(format!("O-operator squaring identity fails at m={:?}", x));
        }
    }
    report
}

/// The induced product `x▷y = [R(x), y]` of a Rota-Baxter operator.
pub fn product_from_rb(g: &LieSuperalgebra, r: &Matrix) -> Result<Product, Error> {
    rota_baxter_check(g, r).into_result(Error::NotRotaBaxter)?;
    let t = g.total();
    let mut p = Product::zero(g.field, g.dim);
    for i in 0..t {
        for j in 0..t {
            p.a[i][j] = g
                .bracket_eval(&r.mul_vec(&basis_vec(t, i)), &basis_vec(t, j))
                .unwrap();
        }
    }
    debug_assert!(is_left_symmetric(&p).passed());
    Ok(p)
}

/// Queerification of a purely even left-alternative product onto the
/// doubled (d|d) space: `x▷Π(y) = Π(x)▷y = Π(x▷y)` and `Π(x)▷Π(y) = x▷y`.
pub fn queerify_product(p: &Product) -> Result<Product, Error> {
    assert_eq!(p.dim.odd, 0, "queerification starts from a purely even product");
    is_left_alternative(p).into_result(Error::NotLeftAlternative)?;
    let d = p.dim.even;
    let mut q = Product::zero(p.field, SuperDim::new(d, d));
    let widen = |v: &[u32], odd: bool| {
        let mut w = vzero(2 * d);
        if odd {
            w[d..].copy_from_slice(v);
        } else {
            w[..d].copy_from_slice(v);
        }
        w
    };
    for i in 0..d {
        for j in 0..d {
            let v = &p.a[i][j];
            q.a[i][j] = widen(v, false);
            q.a[i][d + j] = widen(v, true);
            q.a[d + i][j] = widen(v, true);
            q.a[d + i][d + j] = widen(v, false);
        }
    }
    debug_assert!(is_left_symmetric(&q).passed());
    Ok(q)
}

/// Data of the affine embedding Ψ(x) = (ℓ_x, x) into gl(g) ⋉ g, plus the
/// faithful (n+1)-dimensional representation π(x)(m, λ) = (x▷m + λx, 0).
pub struct AffineEmbedding {
    pub faithful: Representation,
}

pub fn affine_embedding(g: &LieSuperalgebra, p: &Product) -> Result<AffineEmbedding, Error> {
    if !is_compatible(p, g) {
        return Err(Error::NotCompatible(
            "product does not induce the algebra's bracket and squaring".into(),
        ));
    }
    is_left_symmetric(p).into_result(Error::NotLeftSymmetric)?;
    let t = g.total();
    // Morphism property of Ψ into gl(g) ⋉ g:
    //   ℓ_[x,y] = ℓ_x ℓ_y + ℓ_y ℓ_x   and   [x,y] = x▷y + y▷x (compatibility),
    //   ℓ_{s(x)} = ℓ_x²               and   s(x) = x▷x.
    for i in 0..t {
        for j in (i + 1)..t {
            let li = p.left_mul(&basis_vec(t, i));
            let lj = p.left_mul(&basis_vec(t, j));
            let lhs = p.left_mul(g.bracket_basis(i, j));
            if lhs != li.mul(&lj).add(&lj.mul(&li)) {
                return Err(Error::NotCompatible(format!(
                    "Ψ fails the bracket morphism property at (e{},e{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for x in odd_probes(g.dim) {
        let lx = p.left_mul(&x);
        let ls = p.left_mul(&g.squaring_eval(&x).unwrap());
        if ls != lx.mul(&lx) {
            return Err(Error::NotCompatible(format!(
                "Ψ fails the squaring morphism property at x={:?}",
                x
            )));
        }
    }
    // Faithful representation on g ⊕ K (extra even coordinate last in the
    // even block): module dimension (m+1 | n).
    let mdim = SuperDim::new(g.dim.even + 1, g.dim.odd);
    let mt = mdim.total();
    let gm = g.dim.even;
    // module coordinate of g-coordinate a:
    let slot = |a: usize| if a < gm { a } else { a + 1 };
    let extra = gm;
    let mut rho = Vec::new();
    for i in 0..t {
        let mut m = Matrix::zeros(g.field, mt, mt);
        // on g-part: left multiplication
        for j in 0..t {
            let col = p.basis_product(i, j);
            for (a, &c) in col.iter().enumerate() {
                m[(slot(a), slot(j))] = c;
            }
        }
        // on the extra coordinate: λ ↦ λ e_i
        m[(slot(i), extra)] = 1;
        rho.push(m);
    }
    let faithful = Representation::new(g.field, g.dim, mdim, rho);
    faithful
        .verify(g)
        .into_result(Error::InvalidRepresentation)?;
    // kernel of x ↦ π(x): stack all matrix entries as rows of a linear map
    let mut rows = Vec::new();
    for r in 0..mt {
        for c in 0..mt {
            let row: Vec<u32> = (0..t).map(|i| faithful.matrix(i)[(r, c)]).collect();
            rows.push(row);
        }
    }
    let ker = crate::linalg::nullspace(&Matrix::from_rows(g.field, rows));
    if ker.dim() != 0 {
        return Err(Error::InvalidRepresentation(
            "affine representation has a nontrivial kernel".into(),
        ));
    }
    Ok(AffineEmbedding { faithful })
}

/// The left-regular module of a product, for the invertible 1-cocycle
/// criterion.
pub fn left_regular_rep(p: &Product) -> Representation {
    let t = p.dim.total();
    let rho = (0..t)
        .map(|i| p.left_mul(&basis_vec(t, i)))
        .collect();
    Representation::new(p.field, p.dim, p.dim, rho)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpTo {
    Raw,
    AutOrbits,
}

/// Enumerates the left-symmetric products compatible with `g`.
///
/// Compatibility pins `a[i][j] + a[j][i] = [e_i,e_j]` and `a[i][i] = s(e_i)`
/// on odd diagonals, so the free coordinates are one representative per
/// off-diagonal pair and the even diagonals; the remaining lattice is
/// enumerated exhaustively and filtered by left-symmetry.
pub fn enumerate_compatible_products(g: &LieSuperalgebra, up_to: UpTo) -> Result<Vec<Product>, Error> {
    let t = g.total();
    let q = g.field.order() as u64;
    let limit = if q == 2 { 3 } else { 2 };
    if t > limit {
        return Err(Error::DimensionTooLarge(format!(
            "product enumeration over GF({}) is limited to total dimension {}",
            q, limit
        )));
    }
    // free coordinate slots: (i, j, k) positions
    let mut slots = Vec::new();
    for i in 0..t {
        for j in i..t {
            let pij = if g.parity(i) == g.parity(j) {
                Parity::Even
            } else {
                Parity::Odd
            };
            if i == j && g.parity(i) == Parity::Odd {
                continue; // pinned to s(e_i)
            }
            for k in 0..t {
                if g.parity(k) == pij {
                    slots.push((i, j, k));
                }
            }
        }
    }
    let mut out = Vec::new();
    let total: u64 = q.pow(slots.len() as u32);
    for code in 0..total {
        let mut p = Product::zero(g.field, g.dim);
        let mut rem = code;
        for &(i, j, k) in &slots {
            p.a[i][j][k] = (rem % q) as u32;
            rem /= q;
        }
        // complete the pinned coordinates
        for i in 0..t {
            for j in 0..t {
                if j < i {
                    p.a[i][j] = vadd(&p.a[j][i], g.bracket_basis(i, j));
                }
            }
            if g.parity(i) == Parity::Odd {
                p.a[i][i] = g.sq_basis(i).to_vec();
            }
        }
        if is_left_symmetric(&p).passed() {
            debug_assert!(is_compatible(&p, g));
            out.push(p);
        }
    }
    if up_to == UpTo::Raw {
        return Ok(out);
    }
    let auts = automorphisms(g)?;
    let mut reps: Vec<Product> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    for p in out {
        let key = p.flatten();
        if seen.contains(&key) {
            continue;
        }
        // orbit of p under Aut(g)
        let mut orbit: Vec<Vec<u32>> = Vec::new();
        let mut orbit_products = Vec::new();
        for phi in &auts {
            let tp = p.transport(&phi.matrix);
            let k = tp.flatten();
            if !orbit.contains(&k) {
                orbit.push(k.clone());
                orbit_products.push(tp);
            }
        }
        let min_idx = {
            let mut best = 0;
            for (i, k) in orbit.iter().enumerate() {
                if k < &orbit[best] {
                    best = i;
                }
            }
            best
        };
        for k in &orbit {
            seen.insert(k.clone());
        }
        reps.push(orbit_products.swap_remove(min_idx));
    }
    reps.sort_by_key(|p| p.flatten());
    Ok(reps)
}

/// Restricted Lie algebra of a left-alternative (purely even) product:
/// bracket `x▷y + y▷x` and 2-structure `x▷x`.
pub fn restricted_of_product(p: &Product) -> Result<crate::superalg::RestrictedLieAlgebra, Error> {
    assert_eq!(p.dim.odd, 0);
    is_left_alternative(p).into_result(Error::NotLeftAlternative)?;
    let d = p.dim.even;
    let mut r = crate::superalg::RestrictedLieAlgebra::abelian(p.field, d);
    for i in 0..d {
        for j in (i + 1)..d {
            r.set_bracket(i, j, vadd(&p.a[i][j][..d].to_vec(), &p.a[j][i][..d].to_vec()));
        }
        r.set_p2(i, p.a[i][i][..d].to_vec());
    }
    r.verify().into_result(Error::NotRestricted)?;
    Ok(r)
}

/// Solves `phi(x) = v` against a not-necessarily-invertible endomorphism.
pub fn preimage(m: &Matrix, v: &[u32]) -> Option<Vec<u32>> {
    solve(m, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::gf2()
    }

    fn l2_11() -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian(gf2(), SuperDim::new(1, 1));
        g.set_squaring(1, vec![1, 0]);
        g
    }

    fn l3_11() -> LieSuperalgebra {
        LieSuperalgebra::abelian(gf2(), SuperDim::new(1, 1))
    }

    #[test]
    fn zero_product_is_left_symmetric() {
        let p = Product::zero(gf2(), SuperDim::new(2, 0));
        assert!(is_left_symmetric(&p).passed());
        assert!(is_left_alternative(&p).passed());
        let g = lie_of_product(&p).unwrap();
        assert!(g.is_abelian());
    }

    #[test]
    fn idempotent_product_on_l3() {
        // e1 e1 = e1 on the abelian (1|1): associative, compatible.
        let mut p = Product::zero(gf2(), SuperDim::new(1, 1));
        p.set(0, 0, vec![1, 0]);
        assert!(is_left_symmetric(&p).passed());
        assert!(is_left_alternative(&p).passed());
        assert!(is_compatible(&p, &l3_11()));
    }

    #[test]
    fn product_of_l2_gives_l2() {
        // e2 e2 = e1 yields s(e2) = e1
        let mut p = Product::zero(gf2(), SuperDim::new(1, 1));
        p.set(1, 1, vec![1, 0]);
        let g = lie_of_product(&p).unwrap();
        assert_eq!(g.sq_basis(1), &[1, 0]);
        assert!(is_compatible(&p, &l2_11()));
    }

    #[test]
    fn non_left_symmetric_witness() {
        // e2 e1 = e2 on the nonabelian L^1_{2|0}-compatible slot fails (i)
        let mut p = Product::zero(gf2(), SuperDim::new(1, 1));
        p.set(1, 0, vec![0, 1]);
        let rep = is_left_symmetric(&p);
        assert!(!rep.passed());
        assert!(rep.failures[0].contains("axiom (i)"));
    }

    #[test]
    fn derivation_route() {
        // identity on the nonabelian L^1_{2|0} is not a derivation
        let mut g = LieSuperalgebra::abelian(gf2(), SuperDim::new(2, 0));
        g.set_bracket(0, 1, vec![0, 1]);
        let id = Matrix::identity(gf2(), 2);
        assert!(!is_derivation(&g, &id).passed());
        assert!(matches!(
            product_from_derivation(&g, &id),
            Err(Error::NotADerivation(_))
        ));
        // invertible derivation of an abelian algebra gives the zero product
        let ab = LieSuperalgebra::abelian(gf2(), SuperDim::new(2, 0));
        let p = product_from_derivation(&ab, &id).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rota_baxter_route() {
        let mut g = LieSuperalgebra::abelian(gf2(), SuperDim::new(2, 0));
        g.set_bracket(0, 1, vec![0, 1]);
        // R = 0 is Rota-Baxter with zero induced product
        let z = Matrix::zeros(gf2(), 2, 2);
        assert!(rota_baxter_check(&g, &z).passed());
        assert!(product_from_rb(&g, &z).unwrap().is_zero());
        // R = id on a nonabelian algebra is not
        let id = Matrix::identity(gf2(), 2);
        assert!(!rota_baxter_check(&g, &id).passed());
        // the O-operator identities specialize to Rota-Baxter on the adjoint
        let adj = Representation::adjoint(&g);
        assert!(o_operator_check(&g, &adj, &z).passed());
        assert!(!o_operator_check(&g, &adj, &id).passed());
    }

    #[test]
    fn inverse_of_an_invertible_derivation_is_rota_baxter() {
        // ba(1)-type algebra over GF(4): [e1,e2]=e3 admits the invertible
        // derivation diag(1, a, 1+a)
        let f = Field::gf4();
        let mut g = LieSuperalgebra::abelian(f, SuperDim::new(1, 2));
        g.set_bracket(0, 1, vec![0, 0, 1]);
        assert!(g.verify().passed());
        let mut d = Matrix::zeros(f, 3, 3);
        d[(0, 0)] = 1;
        d[(1, 1)] = 2;
        d[(2, 2)] = 3;
        assert!(is_derivation(&g, &d).passed());
        let r = d.inverse().unwrap();
        assert!(rota_baxter_check(&g, &r).passed());
        // the induced product x▷y = [R(x),y] is left-symmetric (its Lie
        // structure is the descendant bracket, not g's)
        let p = product_from_rb(&g, &r).unwrap();
        assert!(is_left_symmetric(&p).passed());
        assert!(lie_of_product(&p).unwrap().verify().passed());
        // the derivation route is the one compatible with g itself
        let p2 = product_from_derivation(&g, &d).unwrap();
        assert!(is_compatible(&p2, &g));
    }

    #[test]
    fn queerification_of_products() {
        // 1-dim idempotent e·e = e
        let mut p = Product::zero(gf2(), SuperDim::new(1, 0));
        p.set(0, 0, vec![1]);
        let q = queerify_product(&p).unwrap();
        assert!(is_left_symmetric(&q).passed());
        // Π(e)▷Π(e) = e
        assert_eq!(q.basis_product(1, 1), &[1, 0]);
        // diagram: Lie of queerified product == queerification of restricted
        let lhs = lie_of_product(&q).unwrap();
        let r = restricted_of_product(&p).unwrap();
        let rhs = r.queerify().unwrap();
        for i in 0..2 {
            for j in (i + 1)..2 {
                assert_eq!(lhs.bracket_basis(i, j), rhs.bracket_basis(i, j));
            }
        }
        assert_eq!(lhs.sq_basis(1), rhs.sq_basis(1));
    }

    #[test]
    fn affine_embedding_of_l2_product() {
        let g = l2_11();
        let mut p = Product::zero(gf2(), SuperDim::new(1, 1));
        p.set(1, 1, vec![1, 0]);
        let emb = affine_embedding(&g, &p).unwrap();
        // π(e2)² = π(e1)
        let pi1 = emb.faithful.matrix(0).clone();
        let pi2 = emb.faithful.matrix(1).clone();
        assert_eq!(pi2.mul(&pi2), pi1);
    }

    #[test]
    fn identity_is_a_one_cocycle_of_the_left_regular_module() {
        let g = l2_11();
        let mut p = Product::zero(gf2(), SuperDim::new(1, 1));
        p.set(1, 1, vec![1, 0]);
        let rep = left_regular_rep(&p);
        assert!(rep.verify(&g).passed());
        let phi = crate::cohomology::Cochain1 {
            map: Matrix::identity(gf2(), 2),
        };
        let d = crate::cohomology::d1(&g, &rep, &phi);
        assert!(d.is_zero());
    }

    #[test]
    fn enumerate_l2_products() {
        // L^2_{1|1} over GF(2): exactly 2 nonzero orbits, both left-alternative
        let g = l2_11();
        let orbits = enumerate_compatible_products(&g, UpTo::AutOrbits).unwrap();
        let nonzero: Vec<&Product> = orbits.iter().filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 2);
        for p in &nonzero {
            assert!(is_left_alternative(p).passed());
        }
    }

    #[test]
    fn enumerate_l3_products() {
        // L^3_{1|1} over GF(2): orbits {e1e1=e1} and {e1e1=e1, e1e2=e2, e2e1=e2}
        let g = l3_11();
        let orbits = enumerate_compatible_products(&g, UpTo::AutOrbits).unwrap();
        let nonzero: Vec<&Product> = orbits.iter().filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 2);
        let mut seen = Vec::new();
        for p in nonzero {
            seen.push((
                p.basis_product(0, 0).to_vec(),
                p.basis_product(0, 1).to_vec(),
                p.basis_product(1, 0).to_vec(),
            ));
        }
        seen.sort();
        assert_eq!(
            seen,
            vec![
                (vec![1, 0], vec![0, 0], vec![0, 0]),
                (vec![1, 0], vec![0, 1], vec![0, 1]),
            ]
        );
    }
}
