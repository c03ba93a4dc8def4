//! Connections on Lie superalgebras: torsion (T, U) and curvature (R, S)
//! pairs, dual connections, covariant derivatives, the identity suite of
//! structural theorems, and post-Lie superalgebras.
//!
//! A connection is an even linear map `x ↦ ∇_x`; equivalently the product
//! `x ✻ y = ∇_x(y)`.  It is left-symmetric compatible with the bracket and
//! squaring exactly when it is flat and torsion-free.

use crate::field::Field;
use crate::leftsym::Product;
use crate::linalg::Matrix;
use crate::superalg::{vadd, vaddassign, vis_zero, vzero, LieSuperalgebra, Parity, SuperDim};
use crate::{ElStream, Error, Report};

/// An even connection, stored as the matrix of ∇_{e_i} per basis index and
/// extended linearly in the subscript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    pub field: Field,
    pub dim: SuperDim,
    nabla: Vec<Matrix>,
}

impl Connection {
    pub fn zero(field: Field, dim: SuperDim) -> Connection {
        let t = dim.total();
        Connection {
            field,
            dim,
            nabla: vec![Matrix::zeros(field, t, t); t],
        }
    }

    pub fn from_matrices(field: Field, dim: SuperDim, nabla: Vec<Matrix>) -> Connection {
        assert_eq!(nabla.len(), dim.total());
        Connection { field, dim, nabla }
    }

    pub fn from_product(p: &Product) -> Connection {
        let t = p.dim.total();
        let nabla = (0..t)
            .map(|i| {
                let mut e = vzero(t);
                e[i] = 1;
                p.left_mul(&e)
            })
            .collect();
        Connection {
            field: p.field,
            dim: p.dim,
            nabla,
        }
    }

    pub fn to_product(&self) -> Product {
        let t = self.dim.total();
        let mut p = Product::zero(self.field, self.dim);
        for i in 0..t {
            for j in 0..t {
                p.set(i, j, self.nabla[i].col(j));
            }
        }
        p
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.nabla[i]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: &[u32]) {
        for (k, &c) in v.iter().enumerate() {
            self.nabla[i][(k, j)] = c;
        }
    }

    /// ∇_x as a matrix, for an arbitrary subscript vector.
    pub fn nabla_of(&self, x: &[u32]) -> Matrix {
        let t = self.dim.total();
        let mut m = Matrix::zeros(self.field, t, t);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.nabla[i].scale(c));
            }
        }
        m
    }

    /// ∇_x(y).
    pub fn apply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.nabla_of(x).mul_vec(y)
    }

    /// ∇ must respect parity: ∇_x shifts parity by |x|.
    pub fn parity_ok(&self) -> bool {
        let m = self.dim.even;
        let t = self.dim.total();
        for i in 0..t {
            let shift = self.dim.parity(i) == Parity::Odd;
            for r in 0..t {
                for c in 0..t {
                    let same = (r < m) == (c < m);
                    if self.nabla[i][(r, c)] != 0 && same == shift {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dual connection `∇̄_x(y) = ∇_y(x) + [x,y]`.
    pub fn dual(&self, g: &LieSuperalgebra) -> Connection {
        let t = self.dim.total();
        let mut out = Connection::zero(self.field, self.dim);
        for i in 0..t {
            for j in 0..t {
                let mut e_i = vzero(t);
                e_i[i] = 1;
                let mut v = self.nabla[j].col(i);
                vaddassign(&mut v, g.bracket_basis(i, j));
                let _ = &e_i;
                out.set_entry(i, j, &v);
            }
        }
        out
    }

    // --- torsion and curvature, evaluated definitionally -----------------

    /// T(x,y) = ∇_x(y) + ∇_y(x) + [x,y].
    pub fn t_eval(&self, g: &LieSuperalgebra, x: &[u32], y: &[u32]) -> Vec<u32> {
        let mut v = self.apply(x, y);
        vaddassign(&mut v, &self.apply(y, x));
        vaddassign(&mut v, &g.bracket_eval(x, y).unwrap());
        v
    }

    /// U(x) = ∇_x(x) + s(x), for odd x.
    pub fn u_eval(&self, g: &LieSuperalgebra, x: &[u32]) -> Vec<u32> {
        let mut v = self.apply(x, x);
        vaddassign(&mut v, &g.squaring_eval(x).unwrap());
        v
    }

    /// R(x,y) = ∇_{[x,y]} + [∇_x, ∇_y].
    pub fn r_eval(&self, g: &LieSuperalgebra, x: &[u32], y: &[u32]) -> Matrix {
        let nx = self.nabla_of(x);
        let ny = self.nabla_of(y);
        self.nabla_of(&g.bracket_eval(x, y).unwrap())
            .add(&nx.mul(&ny))
            .add(&ny.mul(&nx))
    }

    /// S(x) = ∇_{s(x)} + ∇_x², for odd x.
    pub fn s_eval(&self, g: &LieSuperalgebra, x: &[u32]) -> Matrix {
        let nx = self.nabla_of(x);
        self.nabla_of(&g.squaring_eval(x).unwrap()).add(&nx.mul(&nx))
    }

    // --- covariant derivatives --------------------------------------------

    /// (∇_z T)(x,y) = ∇_z(T(x,y)) + T(∇_z x, y) + T(x, ∇_z y).
    pub fn cov_t(&self, g: &LieSuperalgebra, z: &[u32], x: &[u32], y: &[u32]) -> Vec<u32> {
        let mut v = self.apply(z, &self.t_eval(g, x, y));
        vaddassign(&mut v, &self.t_eval(g, &self.apply(z, x), y));
        vaddassign(&mut v, &self.t_eval(g, x, &self.apply(z, y)));
        v
    }

    /// (∇_z U)(x) = ∇_z(U(x)) + T(∇_z x, x), for odd x.
    pub fn cov_u(&self, g: &LieSuperalgebra, z: &[u32], x: &[u32]) -> Vec<u32> {
        let mut v = self.apply(z, &self.u_eval(g, x));
        vaddassign(&mut v, &self.t_eval(g, &self.apply(z, x), x));
        v
    }

    /// (∇_z R)(x,y)w = ∇_z(R(x,y)w) + R(∇_z x,y)w + R(x,∇_z y)w + R(x,y)(∇_z w).
    pub fn cov_r(
        &self,
        g: &LieSuperalgebra,
        z: &[u32],
        x: &[u32],
        y: &[u32],
        w: &[u32],
    ) -> Vec<u32> {
        let mut v = self.apply(z, &self.r_eval(g, x, y).mul_vec(w));
        vaddassign(&mut v, &self.r_eval(g, &self.apply(z, x), y).mul_vec(w));
        vaddassign(&mut v, &self.r_eval(g, x, &self.apply(z, y)).mul_vec(w));
        vaddassign(&mut v, &self.r_eval(g, x, y).mul_vec(&self.apply(z, w)));
        v
    }

    /// (∇_z S)(x)w = ∇_z(S(x)w) + R(∇_z x, x)w + S(x)(∇_z w), for odd x.
    pub fn cov_s(&self, g: &LieSuperalgebra, z: &[u32], x: &[u32], w: &[u32]) -> Vec<u32> {
        let mut v = self.apply(z, &self.s_eval(g, x).mul_vec(w));
        vaddassign(&mut v, &self.r_eval(g, &self.apply(z, x), x).mul_vec(w));
        vaddassign(&mut v, &self.s_eval(g, x).mul_vec(&self.apply(z, w)));
        v
    }

    pub fn is_torsion_free(&self, g: &LieSuperalgebra) -> bool {
        let (t_table, u_table) = torsion(g, self);
        t_table.iter().all(|(_, _, v)| vis_zero(v)) && u_table.iter().all(|(_, v)| vis_zero(v))
    }

    pub fn is_flat(&self, g: &LieSuperalgebra) -> bool {
        let (r_table, s_table) = curvature(g, self);
        r_table.iter().all(|(_, _, m)| m.is_zero()) && s_table.iter().all(|(_, m)| m.is_zero())
    }

    pub fn is_parallel(&self, g: &LieSuperalgebra) -> bool {
        let t = self.dim.total();
        let basis = |i: usize| {
            let mut v = vzero(t);
            v[i] = 1;
            v
        };
        for z in 0..t {
            let zv = basis(z);
            for i in 0..t {
                for j in 0..t {
                    if !vis_zero(&self.cov_t(g, &zv, &basis(i), &basis(j))) {
                        return false;
                    }
                }
            }
            for x in odd_probes(g) {
                if !vis_zero(&self.cov_u(g, &zv, &x)) {
                    return false;
                }
            }
        }
        true
    }
}

fn odd_probes(g: &LieSuperalgebra) -> Vec<Vec<u32>> {
    let t = g.total();
    let mut probes: Vec<Vec<u32>> = g
        .odd_indices()
        .map(|i| {
            let mut v = vzero(t);
            v[i] = 1;
            v
        })
        .collect();
    for i in g.odd_indices() {
        for j in (i + 1)..t {
            let mut v = vzero(t);
            v[i] = 1;
            v[j] = 1;
            probes.push(v);
        }
    }
    probes
}

/// Torsion tables on the basis: T on pairs i<j and U on odd probes
/// (basis vectors and pairwise sums, for downstream polarization checks).
pub fn torsion(
    g: &LieSuperalgebra,
    n: &Connection,
) -> (Vec<(usize, usize, Vec<u32>)>, Vec<(Vec<u32>, Vec<u32>)>) {
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    let mut t_table = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            t_table.push((i, j, n.t_eval(g, &basis(i), &basis(j))));
        }
    }
    let u_table = odd_probes(g)
        .into_iter()
        .map(|x| {
            let u = n.u_eval(g, &x);
            (x, u)
        })
        .collect();
    (t_table, u_table)
}

/// Curvature tables on the basis: R on pairs i<j and S on odd probes.
pub fn curvature(
    g: &LieSuperalgebra,
    n: &Connection,
) -> (Vec<(usize, usize, Matrix)>, Vec<(Vec<u32>, Matrix)>) {
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    let mut r_table = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            r_table.push((i, j, n.r_eval(g, &basis(i), &basis(j))));
        }
    }
    let s_table = odd_probes(g)
        .into_iter()
        .map(|x| {
            let s = n.s_eval(g, &x);
            (x, s)
        })
        .collect();
    (r_table, s_table)
}

/// Evaluates the structural identity suite: these are theorems, so a failed
/// entry indicates an implementation bug, never bad input.
///
/// Identities covered (odd slots also probed at pairwise sums):
///   (∇_z T)(x,y) = R̄(x,y)z + R(y,z)x + R(z,x)y
///   (∇_z U)(x)   = S̄(x)z + R(z,x)x
///   Σ↻ T(x,T(y,z)) = Σ↻ R(x,y)z + Σ↻ R̄(x,y)z
///   T(x,T(x,y)) + T(U(x),y) = S(x)y + R(y,x)x + S̄(x)y + R̄(y,x)x
///   Σ↻ (∇_z T)(x,y) = Σ↻ R(z,x)y + Σ↻ T(z,T(x,y))           [Bianchi 1]
///   (∇_y U)(x) + (∇_x T)(y,x) = R(y,x)x + S(x)y + T(y,U(x)) + T(x,T(y,x))
///   Σ↻ (∇_z R)(x,y) = Σ↻ R(z,T(x,y))                         [Bianchi 2]
///   (∇_y S)(x) + (∇_x R)(x,y) = R(x,T(x,y)) + R(y,U(x))
///   Asso(x,y,z) + Asso(y,x,z) = R(x,y)z + ∇_{T(x,y)}z
///   Asso(x,x,z) = S(x)z + ∇_{U(x)}z
pub fn identity_suite(g: &LieSuperalgebra, n: &Connection) -> Report {
    let mut rep = Report::default();
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    let nd = n.dual(g);
    let p = n.to_product();
    // triples of basis vectors
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                let (x, y, z) = (basis(i), basis(j), basis(k));
                // propA first identity
                let lhs = n.cov_t(g, &z, &x, &y);
                let mut rhs = nd.r_eval(g, &x, &y).mul_vec(&z);
                vaddassign(&mut rhs, &n.r_eval(g, &y, &z).mul_vec(&x));
                vaddassign(&mut rhs, &n.r_eval(g, &z, &x).mul_vec(&y));
                if lhs != rhs {
                    rep.fail(format!("propA(1) fails at ({},{},{})", i, j, k));
                }
                // propB first identity (cyclic)
                let mut lhs = vzero(t);
                let mut rhs = vzero(t);
                for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                    vaddassign(&mut lhs, &n.t_eval(g, a, &n.t_eval(g, b, c)));
                    vaddassign(&mut rhs, &n.r_eval(g, a, b).mul_vec(c));
                    vaddassign(&mut rhs, &nd.r_eval(g, a, b).mul_vec(c));
                }
                if lhs != rhs {
                    rep.fail(format!("propB(1) fails at ({},{},{})", i, j, k));
                }
                // first Bianchi identity (cyclic part)
                let mut lhs = vzero(t);
                let mut rhs = vzero(t);
                for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                    vaddassign(&mut lhs, &n.cov_t(g, c, a, b));
                    vaddassign(&mut rhs, &n.r_eval(g, c, a).mul_vec(b));
                    vaddassign(&mut rhs, &n.t_eval(g, c, &n.t_eval(g, a, b)));
                }
                if lhs != rhs {
                    rep.fail(format!("bianchi1(1) fails at ({},{},{})", i, j, k));
                }
                // second Bianchi identity (cyclic part), applied to each w
                for w in 0..t {
                    let wv = basis(w);
                    let mut lhs = vzero(t);
                    let mut rhs = vzero(t);
                    for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                        vaddassign(&mut lhs, &n.cov_r(g, c, a, b, &wv));
                        vaddassign(
                            &mut rhs,
                            &n.r_eval(g, c, &n.t_eval(g, a, b)).mul_vec(&wv),
                        );
                    }
                    if lhs != rhs {
                        rep.fail(format!("bianchi2(1) fails at ({},{},{},{})", i, j, k, w));
                    }
                }
                // associator link, bilinear part
                let mut lhs = crate::leftsym::associator(&p, &x, &y, &z);
                vaddassign(&mut lhs, &crate::leftsym::associator(&p, &y, &x, &z));
                let mut rhs = n.r_eval(g, &x, &y).mul_vec(&z);
                vaddassign(&mut rhs, &n.apply(&n.t_eval(g, &x, &y), &z));
                if lhs != rhs {
                    rep.fail(format!("associator link (bilinear) fails at ({},{},{})", i, j, k));
                }
            }
        }
    }
    // odd-slot identities
    for x in odd_probes(g) {
        for yi in 0..t {
            let y = basis(yi);
            // propA second identity
            let lhs = n.cov_u(g, &y, &x);
            let mut rhs = nd.s_eval(g, &x).mul_vec(&y);
            vaddassign(&mut rhs, &n.r_eval(g, &y, &x).mul_vec(&x));
            if lhs != rhs {
                rep.fail(format!("propA(2) fails at x={:?}, z={}", x, yi));
            }
            // propB second identity
            let mut lhs = n.t_eval(g, &x, &n.t_eval(g, &x, &y));
            vaddassign(&mut lhs, &n.t_eval(g, &n.u_eval(g, &x), &y));
            let mut rhs = n.s_eval(g, &x).mul_vec(&y);
            vaddassign(&mut rhs, &n.r_eval(g, &y, &x).mul_vec(&x));
            vaddassign(&mut rhs, &nd.s_eval(g, &x).mul_vec(&y));
            vaddassign(&mut rhs, &nd.r_eval(g, &y, &x).mul_vec(&x));
            if lhs != rhs {
                rep.fail(format!("propB(2) fails at x={:?}, y={}", x, yi));
            }
            // first Bianchi, squaring part
            let mut lhs = n.cov_u(g, &y, &x);
            vaddassign(&mut lhs, &n.cov_t(g, &x, &y, &x));
            let mut rhs = n.r_eval(g, &y, &x).mul_vec(&x);
            vaddassign(&mut rhs, &n.s_eval(g, &x).mul_vec(&y));
            vaddassign(&mut rhs, &n.t_eval(g, &y, &n.u_eval(g, &x)));
            vaddassign(&mut rhs, &n.t_eval(g, &x, &n.t_eval(g, &y, &x)));
            if lhs != rhs {
                rep.fail(format!("bianchi1(2) fails at x={:?}, y={}", x, yi));
            }
            // second Bianchi, squaring part (endomorphism identity on w)
            for w in 0..t {
                let wv = basis(w);
                let mut lhs = n.cov_s(g, &y, &x, &wv);
                vaddassign(&mut lhs, &n.cov_r(g, &x, &x, &y, &wv));
                let mut rhs = n.r_eval(g, &x, &n.t_eval(g, &x, &y)).mul_vec(&wv);
                vaddassign(&mut rhs, &n.r_eval(g, &y, &n.u_eval(g, &x)).mul_vec(&wv));
                if lhs != rhs {
                    rep.fail(format!("bianchi2(2) fails at x={:?}, y={}, w={}", x, yi, w));
                }
            }
            // associator link, squaring part
            let lhs = crate::leftsym::associator(&p, &x, &x, &y);
            let mut rhs = n.s_eval(g, &x).mul_vec(&y);
            vaddassign(&mut rhs, &n.apply(&n.u_eval(g, &x), &y));
            if lhs != rhs {
                rep.fail(format!("asso-xxz fails at x={:?}, z={}", x, yi));
            }
        }
    }
    rep
}

/// Deterministic pseudo-random parity-respecting connection.
pub fn random_connection(g: &LieSuperalgebra, stream: &mut ElStream) -> Connection {
    let t = g.total();
    let m = g.dim.even;
    let mut n = Connection::zero(g.field, g.dim);
    for i in 0..t {
        let shift = g.parity(i) == Parity::Odd;
        for r in 0..t {
            for c in 0..t {
                let same = (r < m) == (c < m);
                if same != shift {
                    n.nabla[i][(r, c)] = stream.next_el(g.field);
                }
            }
        }
    }
    n
}

/// A post-Lie superalgebra: a base Lie superalgebra with an extra product
/// whose left multiplications are derivations of the base and which
/// satisfies the mixed axioms (i)-(iv).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostLie {
    pub base: LieSuperalgebra,
    pub product: Product,
}

impl PostLie {
    pub fn new(base: LieSuperalgebra, product: Product) -> PostLie {
        assert_eq!(base.dim, product.dim);
        PostLie { base, product }
    }
}

/// Axioms (odd slot probed on basis and pairwise sums):
///   (i)   {x,y} ✻ z = (y✻x)✻z + y✻(x✻z) + (x✻y)✻z + x✻(y✻z)
///   (ii)  s(x) ✻ y = x✻(x✻y) + (x✻x)✻y
///   (iii) x ✻ {y,z} = {x✻y, z} + {y, x✻z}
///   (iv)  x ✻ s(y) = {x✻y, y}
pub fn verify_post_lie(pl: &PostLie) -> Report {
    let mut rep = pl.base.verify();
    if !rep.passed() {
        return rep;
    }
    let g = &pl.base;
    let p = &pl.product;
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    if !p.parity_ok() {
        rep.fail("post-Lie product is not parity-additive".into());
        return rep;
    }
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                let (x, y, z) = (basis(i), basis(j), basis(k));
                // (i)
                let lhs = p.eval(&g.bracket_eval(&x, &y).unwrap(), &z);
                let mut rhs = p.eval(&p.eval(&y, &x), &z);
                vaddassign(&mut rhs, &p.eval(&y, &p.eval(&x, &z)));
                vaddassign(&mut rhs, &p.eval(&p.eval(&x, &y), &z));
                vaddassign(&mut rhs, &p.eval(&x, &p.eval(&y, &z)));
                if lhs != rhs {
                    rep.fail(format!("post-Lie axiom (i) fails at ({},{},{})", i, j, k));
                }
                // (iii)
                let lhs = p.eval(&x, &g.bracket_eval(&y, &z).unwrap());
                let mut rhs = g.bracket_eval(&p.eval(&x, &y), &z).unwrap();
                vaddassign(&mut rhs, &g.bracket_eval(&y, &p.eval(&x, &z)).unwrap());
                if lhs != rhs {
                    rep.fail(format!("post-Lie axiom (iii) fails at ({},{},{})", i, j, k));
                }
            }
        }
    }
    for x in odd_probes(g) {
        let sx = g.squaring_eval(&x).unwrap();
        for k in 0..t {
            let y = basis(k);
            // (ii)
            let lhs = p.eval(&sx, &y);
            let mut rhs = p.eval(&x, &p.eval(&x, &y));
            vaddassign(&mut rhs, &p.eval(&p.eval(&x, &x), &y));
            if lhs != rhs {
                rep.fail(format!("post-Lie axiom (ii) fails at x={:?}, y={}", x, k));
            }
        }
    }
    for yv in odd_probes(g) {
        let sy = g.squaring_eval(&yv).unwrap();
        for k in 0..t {
            let x = basis(k);
            // (iv)
            let lhs = p.eval(&x, &sy);
            let rhs = g.bracket_eval(&p.eval(&x, &yv), &yv).unwrap();
            if lhs != rhs {
                rep.fail(format!("post-Lie axiom (iv) fails at x={}, y={:?}", k, yv));
            }
        }
    }
    rep
}

/// Associated Lie superalgebra: `[x,y] = x✻y + y✻x + {x,y}` and
/// `s̃(x) = x✻x + s(x)`.
pub fn associated_lie(pl: &PostLie) -> Result<LieSuperalgebra, Error> {
    verify_post_lie(pl).into_result(Error::NotPostLie)?;
    let g = &pl.base;
    let p = &pl.product;
    let t = g.total();
    let mut out = LieSuperalgebra::abelian(g.field, g.dim);
    for i in 0..t {
        for j in (i + 1)..t {
            let mut v = vadd(p.basis_product(i, j), p.basis_product(j, i));
            vaddassign(&mut v, g.bracket_basis(i, j));
            out.set_bracket(i, j, v);
        }
        if g.parity(i) == Parity::Odd {
            out.set_squaring(i, vadd(p.basis_product(i, i), g.sq_basis(i)));
        }
    }
    out.verify().into_result(Error::NotPostLie)?;
    Ok(out)
}

/// Converse: a flat parallel connection on `g` induces the post-Lie data
/// `{x,y} := T(x,y)`, `s := U(x)`, `✻ := ∇`; the associated Lie algebra of
/// the result is `g` again.
pub fn post_lie_from_flat_parallel(
    g: &LieSuperalgebra,
    n: &Connection,
) -> Result<PostLie, Error> {
    if !n.is_flat(g) || !n.is_parallel(g) {
        return Err(Error::NotFlatParallel(
            "connection must be flat and parallel".into(),
        ));
    }
    let t = g.total();
    let mut base = LieSuperalgebra::abelian(g.field, g.dim);
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    for i in 0..t {
        for j in (i + 1)..t {
            base.set_bracket(i, j, n.t_eval(g, &basis(i), &basis(j)));
        }
        if g.parity(i) == Parity::Odd {
            base.set_squaring(i, n.u_eval(g, &basis(i)));
        }
    }
    let pl = PostLie::new(base, n.to_product());
    verify_post_lie(&pl).into_result(Error::NotPostLie)?;
    // round trip: the associated Lie superalgebra is g itself
    let assoc = associated_lie(&pl)?;
    for i in 0..t {
        for j in (i + 1)..t {
            debug_assert_eq!(assoc.bracket_basis(i, j), g.bracket_basis(i, j));
        }
    }
    Ok(pl)
}

/// The semidirect morphism check of the post-Lie appendix: x ↦ (ℓ_x, x)
/// into Der(n) ⋉ n is a morphism from the associated Lie superalgebra.
pub fn semidirect_morphism_check(pl: &PostLie) -> Report {
    let mut rep = Report::default();
    let g = match associated_lie(pl) {
        Ok(g) => g,
        Err(e) => {
            rep.fail(format!("{}", e));
            return rep;
        }
    };
    let n = &pl.base;
    let p = &pl.product;
    let t = g.total();
    let basis = |i: usize| {
        let mut v = vzero(t);
        v[i] = 1;
        v
    };
    // each ℓ_x is a derivation of the base
    for i in 0..t {
        let l = p.left_mul(&basis(i));
        // Leibniz with respect to the base bracket; for odd x the squaring
        // clause is axiom (iv), checked in verify_post_lie.
        for a in 0..t {
            for b in (a + 1)..t {
                let lhs = l.mul_vec(n.bracket_basis(a, b));
                let mut rhs = n.bracket_eval(&l.mul_vec(&basis(a)), &basis(b)).unwrap();
                vaddassign(&mut rhs, &n.bracket_eval(&basis(a), &l.mul_vec(&basis(b))).unwrap());
                if lhs != rhs {
                    rep.fail(format!("ℓ_e{} is not a derivation of the base", i + 1));
                }
            }
        }
    }
    // bracket morphism: (ℓ_[x,y], [x,y]) = [(ℓ_x,x),(ℓ_y,y)]
    //                  = ([ℓ_x,ℓ_y], ℓ_x(y)+ℓ_y(x)+{x,y})
    for i in 0..t {
        for j in (i + 1)..t {
            let li = p.left_mul(&basis(i));
            let lj = p.left_mul(&basis(j));
            let lb = p.left_mul(g.bracket_basis(i, j));
            if lb != li.mul(&lj).add(&lj.mul(&li)) {
                rep.fail(format!("endomorphism part fails at (e{},e{})", i + 1, j + 1));
            }
            let mut v = p.eval(&basis(i), &basis(j));
            vaddassign(&mut v, &p.eval(&basis(j), &basis(i)));
            vaddassign(&mut v, n.bracket_basis(i, j));
            if v != g.bracket_basis(i, j).to_vec() {
                rep.fail(format!("vector part fails at (e{},e{})", i + 1, j + 1));
            }
        }
    }
    // squaring morphism: (ℓ_s̃(x), s̃(x)) = 𝔰(ℓ_x, x) = (ℓ_x², s(x)+ℓ_x(x))
    for x in odd_probes(&g) {
        let lx = p.left_mul(&x);
        let stx = g.squaring_eval(&x).unwrap();
        if p.left_mul(&stx) != lx.mul(&lx) {
            rep.fail(format!("squaring endomorphism part fails at x={:?}", x));
        }
        let mut v = n.squaring_eval(&x).unwrap();
        vaddassign(&mut v, &p.eval(&x, &x));
        if v != stx {
            rep.fail(format!("squaring vector part fails at x={:?}", x));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leftsym::{enumerate_compatible_products, UpTo};

    fn gf2() -> Field {
        Field::gf2()
    }

    fn l1_11() -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian(gf2(), SuperDim::new(1, 1));
        g.set_bracket(0, 1, vec![0, 1]);
        g
    }

    /// The ε-family of flat torsion-free connections on L^1_{1|1}:
    /// ∇_e(e) = (1+ε)e, ∇_e(f) = εf, ∇_f(e) = (1+ε)f, ∇_f(f) = 0.
    pub(crate) fn nabla_eps(field: Field, eps: u32) -> Connection {
        let one = 1u32;
        let mut n = Connection::zero(field, SuperDim::new(1, 1));
        n.set_entry(0, 0, &[one ^ eps, 0]);
        n.set_entry(0, 1, &[0, eps]);
        n.set_entry(1, 0, &[0, one ^ eps]);
        n
    }

    #[test]
    fn zero_connection_torsion_is_the_bracket() {
        let g = l1_11();
        let n = Connection::zero(gf2(), g.dim);
        let (t_table, u_table) = torsion(&g, &n);
        for (i, j, v) in t_table {
            assert_eq!(v, g.bracket_basis(i, j).to_vec());
        }
        for (x, u) in u_table {
            assert_eq!(u, g.squaring_eval(&x).unwrap());
        }
        assert!(n.is_flat(&g));
        assert!(!n.is_torsion_free(&g));
        // ∇ = 0 is parallel: every covariant derivative of T and U vanishes
        assert!(n.is_parallel(&g));
        // dual of the zero connection is the adjoint representation
        let nd = n.dual(&g);
        for i in 0..2 {
            for j in 0..2 {
                let mut e_j = vzero(2);
                e_j[j] = 1;
                let mut e_i = vzero(2);
                e_i[i] = 1;
                assert_eq!(nd.matrix(i).mul_vec(&e_j), g.bracket_eval(&e_i, &e_j).unwrap());
            }
        }
    }

    #[test]
    fn nabla_eps_is_flat_torsion_free() {
        for f in [Field::gf2(), Field::gf4()] {
            for eps in f.elements() {
                let mut g = LieSuperalgebra::abelian(f, SuperDim::new(1, 1));
                g.set_bracket(0, 1, vec![0, 1]);
                let n = nabla_eps(f, eps);
                assert!(n.parity_ok());
                assert!(n.is_torsion_free(&g));
                assert!(n.is_flat(&g));
                assert!(identity_suite(&g, &n).passed());
                // double dual returns the connection bit-exactly
                assert_eq!(n.dual(&g).dual(&g), n);
            }
        }
    }

    #[test]
    fn compatible_product_connection_is_flat_torsion_free_parallel() {
        let g = l1_11();
        for p in enumerate_compatible_products(&g, UpTo::Raw).unwrap() {
            let n = Connection::from_product(&p);
            assert!(n.is_flat(&g));
            assert!(n.is_torsion_free(&g));
            assert!(n.is_parallel(&g));
        }
    }

    #[test]
    fn identity_suite_on_random_connections() {
        let g = l1_11();
        let mut rng = ElStream::new(0x51);
        for _ in 0..25 {
            let n = random_connection(&g, &mut rng);
            let rep = identity_suite(&g, &n);
            assert!(rep.passed(), "{}", rep);
        }
    }

    #[test]
    fn flat_and_dual_curvature_vs_parallel() {
        // Flat ∇: (R̄,S̄) = 0 iff ∇ parallel; spot-check on flat examples.
        let g = l1_11();
        for f in [Field::gf2()] {
            for eps in f.elements() {
                let n = nabla_eps(f, eps);
                let nd = n.dual(&g);
                let dual_flat = nd.is_flat(&g);
                assert_eq!(dual_flat, n.is_parallel(&g));
            }
        }
    }

    #[test]
    fn post_lie_round_trip() {
        let g = l1_11();
        // flat torsion-free (hence trivially parallel) connection from ε = 1
        let n = nabla_eps(gf2(), 1);
        assert!(n.is_parallel(&g));
        let pl = post_lie_from_flat_parallel(&g, &n).unwrap();
        // torsion-free: the base bracket vanishes
        assert!(pl.base.is_abelian());
        let assoc = associated_lie(&pl).unwrap();
        for i in 0..2 {
            for j in (i + 1)..2 {
                assert_eq!(assoc.bracket_basis(i, j), g.bracket_basis(i, j));
            }
        }
        assert!(semidirect_morphism_check(&pl).passed());
        // ∇ = 0 gives the post-Lie structure with ✻ = 0 over g itself
        let z = Connection::zero(gf2(), g.dim);
        let pl0 = post_lie_from_flat_parallel(&g, &z).unwrap();
        assert!(pl0.product.is_zero());
        let assoc0 = associated_lie(&pl0).unwrap();
        assert_eq!(assoc0.bracket_basis(0, 1), g.bracket_basis(0, 1));
        assert!(semidirect_morphism_check(&pl0).passed());
    }

    #[test]
    fn abelian_base_post_lie_is_left_symmetric() {
        // On an abelian base, the post-Lie axioms reduce to left-symmetry.
        let dim = SuperDim::new(1, 1);
        let base = LieSuperalgebra::abelian(gf2(), dim);
        for code in 0..16u32 {
            let mut p = Product::zero(gf2(), dim);
            // fill the four parity-allowed slots from the code bits
            p.set(0, 0, vec![code & 1, 0]);
            p.set(0, 1, vec![0, (code >> 1) & 1]);
            p.set(1, 0, vec![0, (code >> 2) & 1]);
            p.set(1, 1, vec![(code >> 3) & 1, 0]);
            let pl = PostLie::new(base.clone(), p.clone());
            assert_eq!(
                verify_post_lie(&pl).passed(),
                crate::leftsym::is_left_symmetric(&p).passed(),
                "code {}",
                code
            );
        }
    }
}
