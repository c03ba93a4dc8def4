//! Lagrangian (T* and ΠT*) extensions of Lie superalgebras equipped with a
//! flat torsion-free connection.
//!
//! Given `(h, ∇)` and an even 2-cocycle valued in `h*` (respectively
//! `Π(h*)`) satisfying the two Lagrangian conditions
//!   cyclic α(x,y)(z) = 0   and   γ(x)(y) + α(x,y)(x) = 0,
//! the space `h ⊕ h*` carries a quasi-Frobenius Lie superalgebra structure
//! with the exchange form, strongly polarized by the dual copy.  Conversely
//! every strongly polarized quasi-Frobenius Lie superalgebra arises this
//! way; extensions over a fixed `(h, ∇)` are classified by the Lagrangian
//! cohomology XH²_L modulo differentials of symmetric 1-cochains.

use crate::cohomology::{Cochain1, Cochain2, Cochain2Layout, Representation};
use crate::connections::Connection;
use crate::forms::{BilinearForm, FormClass, StrongPolarization};
use crate::linalg::{solve, Matrix, Subspace};
use crate::superalg::{vaddassign, vzero, LieSuperalgebra, Parity, SuperDim};
use crate::{Error, Report};

/// A Lie superalgebra with a verified flat torsion-free connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLieSuperalgebra {
    pub h: LieSuperalgebra,
    pub nabla: Connection,
}

impl FlatLieSuperalgebra {
    pub fn new(h: LieSuperalgebra, nabla: Connection) -> Result<FlatLieSuperalgebra, Error> {
        if !nabla.parity_ok() {
            return Err(Error::NotFlat("connection does not respect parity".into()));
        }
        if !nabla.is_torsion_free(&h) {
            return Err(Error::NotFlat("connection has torsion".into()));
        }
        if !nabla.is_flat(&h) {
            return Err(Error::NotFlat("connection has curvature".into()));
        }
        Ok(FlatLieSuperalgebra { h, nabla })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtKind {
    /// T*-extension on h ⊕ h*, ortho-orthogonal form.
    Even,
    /// ΠT*-extension on h ⊕ Π(h*), periplectic form.
    Odd,
}

/// Bookkeeping for the dual module h* or Π(h*): module coordinates are
/// parity-blocked, so for the Π-twist the coordinate order permutes the
/// h-basis.  `perm[v]` is the h-index whose dual functional sits at module
/// coordinate v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualModule {
    pub kind: ExtKind,
    pub hdim: SuperDim,
    pub mdim: SuperDim,
    perm: Vec<usize>,
    inv_perm: Vec<usize>,
}

impl DualModule {
    pub fn new(hdim: SuperDim, kind: ExtKind) -> DualModule {
        let t = hdim.total();
        let (mdim, perm): (SuperDim, Vec<usize>) = match kind {
            ExtKind::Even => (hdim, (0..t).collect()),
            ExtKind::Odd => {
                // Π(e_u*) is even for odd u; odd duals first
                let mut perm: Vec<usize> = (hdim.even..t).collect();
                perm.extend(0..hdim.even);
                (SuperDim::new(hdim.odd, hdim.even), perm)
            }
        };
        let mut inv_perm = vec![0; t];
        for (v, &u) in perm.iter().enumerate() {
            inv_perm[u] = v;
        }
        DualModule {
            kind,
            hdim,
            mdim,
            perm,
            inv_perm,
        }
    }

    /// Module coordinate of the dual functional of h-basis vector u.
    pub fn coord_of_dual(&self, u: usize) -> usize {
        self.inv_perm[u]
    }

    /// h-index whose dual sits at module coordinate v.
    pub fn h_index(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// Repackages a functional given by values on the h-basis into module
    /// coordinates.
    pub fn functional_to_module(&self, values_on_h: &[u32]) -> Vec<u32> {
        (0..values_on_h.len())
            .map(|v| values_on_h[self.perm[v]])
            .collect()
    }

    /// Value of a module vector, viewed as a functional, on h-basis index u.
    pub fn value_at(&self, module_vec: &[u32], u: usize) -> u32 {
        module_vec[self.inv_perm[u]]
    }
}

/// The dual action ξ ↦ ξ∘∇_x on h* (or its Π-twist) for an arbitrary
/// connection; a representation exactly when ∇ is flat.
pub fn dual_action(
    h: &LieSuperalgebra,
    nabla: &Connection,
    kind: ExtKind,
) -> (DualModule, Representation) {
    let dm = DualModule::new(h.dim, kind);
    let t = h.total();
    let mut rho = Vec::with_capacity(t);
    for i in 0..t {
        let n = nabla.matrix(i);
        let mut m = Matrix::zeros(h.field, t, t);
        // (ρ(e_i) ξ)(e_b) = ξ(∇_{e_i} e_b): in module coordinates,
        // m[v][w] = n[h(w)][h(v)] (a permuted transpose).
        for v in 0..t {
            for w in 0..t {
                m[(v, w)] = n[(dm.perm[w], dm.perm[v])];
            }
        }
        rho.push(m);
    }
    let rep = Representation::new(h.field, h.dim, dm.mdim, rho);
    (dm, rep)
}

/// The dual representation ρ(x)(ξ) = ξ∘∇_x on h* (or its Π-twist χ).
pub fn dual_rep(fh: &FlatLieSuperalgebra, kind: ExtKind) -> (DualModule, Representation) {
    let (dm, rep) = dual_action(&fh.h, &fh.nabla, kind);
    debug_assert!(rep.verify(&fh.h).passed());
    (dm, rep)
}

/// The two Lagrangian conditions as linear rows over cochain coordinates.
fn lagrangian_rows(h: &LieSuperalgebra, dm: &DualModule, layout: &Cochain2Layout) -> Vec<Vec<u32>> {
    let t = h.total();
    let n = layout.n_coords();
    let mut rows = Vec::new();
    // cyclic α(x,y)(z) = 0 on basis triples
    for i in 0..t {
        for j in (i + 1)..t {
            for k in (j + 1)..t {
                let mut row = vzero(n);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let p = layout.pair_pos(x, y);
                    row[layout.alpha_coord(p, dm.coord_of_dual(z))] ^= 1;
                }
                rows.push(row);
            }
        }
    }
    // γ(x)(y) + α(x,y)(x) = 0 on odd basis/pairwise sums x, basis y
    let mut probes: Vec<Vec<usize>> = h.odd_indices().map(|i| vec![i]).collect();
    for i in h.odd_indices() {
        for j in (i + 1)..t {
            probes.push(vec![i, j]);
        }
    }
    for probe in &probes {
        for y in 0..t {
            let mut row = vzero(n);
            // γ(x)(y)
            for &i in probe {
                row[layout.gamma_coord(i - h.dim.even, dm.coord_of_dual(y))] ^= 1;
            }
            if probe.len() == 2 {
                let p = layout.pair_pos(probe[0], probe[1]);
                row[layout.alpha_coord(p, dm.coord_of_dual(y))] ^= 1;
            }
            // α(x,y)(x)
            for &a in probe {
                if a == y {
                    continue;
                }
                let p = layout.pair_pos(a, y);
                for &b in probe {
                    row[layout.alpha_coord(p, dm.coord_of_dual(b))] ^= 1;
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Generators of the symmetric 1-cochain space XC¹_L.
fn symmetric_cochain_generators(h: &LieSuperalgebra, dm: &DualModule) -> Vec<Cochain1> {
    let t = h.total();
    let f = h.field;
    let mut gens = Vec::new();
    for j in 0..t {
        for y in j..t {
            let mut phi = Cochain1::zero(f, h.dim, dm.mdim);
            phi.map[(dm.coord_of_dual(y), j)] = 1;
            phi.map[(dm.coord_of_dual(j), y)] = 1;
            gens.push(phi);
        }
    }
    gens
}

/// The Lagrangian cocycle space XZ²_L, its coboundaries 𝔡¹(XC¹_L), and
/// RREF-canonical representatives of XH²_L.
#[derive(Debug, Clone)]
pub struct LagrangianCohomology {
    pub layout: Cochain2Layout,
    pub module: DualModule,
    pub rep: Representation,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub dim: usize,
    pub representatives: Vec<Cochain2>,
}

pub fn lagrangian_cocycle_space(
    fh: &FlatLieSuperalgebra,
    kind: ExtKind,
) -> LagrangianCohomology {
    let lc = lagrangian_cohomology_for(&fh.h, &fh.nabla, kind);
    // over a flat torsion-free connection the coboundaries land inside the
    // Lagrangian cocycles
    debug_assert!(lc.cocycles.contains(&lc.coboundaries).unwrap_or(false));
    lc
}

/// The Lagrangian cohomology data for an arbitrary connection.  Without
/// flatness and torsion-freeness the differentials of symmetric 1-cochains
/// need not be Lagrangian cocycles, so the coboundary space is intersected
/// with the cocycle space.
pub fn lagrangian_cohomology_for(
    h: &LieSuperalgebra,
    nabla: &Connection,
    kind: ExtKind,
) -> LagrangianCohomology {
    let (dm, rep) = dual_action(h, nabla, kind);
    let layout = Cochain2Layout::new(h.field, h.dim, dm.mdim);
    let extra = lagrangian_rows(h, &dm, &layout);
    let z = crate::cohomology::cocycle_space_2(h, &rep, &layout, None, &extra);
    let mut gens = Vec::new();
    for phi in symmetric_cochain_generators(h, &dm) {
        gens.push(layout.flatten(&crate::cohomology::d1(h, &rep, &phi)));
    }
    let b_raw = Subspace::from_vectors(h.field, layout.n_coords(), gens);
    let b = z.intersect(&b_raw).expect("same ambient");
    let dim = z.dim() - b.dim();
    let representatives = crate::cohomology::quotient_representatives(&z, &b)
        .into_iter()
        .map(|v| layout.unflatten(&v))
        .collect();
    LagrangianCohomology {
        layout,
        module: dm,
        rep,
        cocycles: z,
        coboundaries: b,
        dim,
        representatives,
    }
}

/// The data of a Lagrangian extension: a flat base, a kind, and a cochain
/// valued in the dual module (in module coordinates).
#[derive(Debug, Clone)]
pub struct ExtensionTuple {
    pub base: FlatLieSuperalgebra,
    pub kind: ExtKind,
    pub cocycle: Cochain2,
}

/// A built extension with its canonical form and polarization.
#[derive(Debug, Clone)]
pub struct Extension {
    pub algebra: LieSuperalgebra,
    pub form: BilinearForm,
    pub polarization: StrongPolarization,
    /// position of h-basis vector i in the extension
    pub h_slot: Vec<usize>,
    /// position of module coordinate v in the extension
    pub dual_slot: Vec<usize>,
}

/// Verifies the tuple (cocycle conditions, Lagrangian conditions, evenness)
/// and builds the extension, its exchange form and canonical polarization.
pub fn build_extension(t: &ExtensionTuple) -> Result<Extension, Error> {
    let fh = &t.base;
    let h = &fh.h;
    let (dm, rep) = dual_rep(fh, t.kind);
    let layout = Cochain2Layout::new(h.field, h.dim, dm.mdim);
    if t.cocycle.layout != layout {
        return Err(Error::DimensionMismatch);
    }
    if t.cocycle.parity() == Some(Parity::Odd) && !t.cocycle.is_zero() {
        return Err(Error::NotLagrangianCocycle(
            "extension cocycles must be even".into(),
        ));
    }
    if t.cocycle.parity().is_none() {
        return Err(Error::NotLagrangianCocycle(
            "extension cocycles must be parity-homogeneous (even)".into(),
        ));
    }
    if !crate::cohomology::d2(h, &rep, &t.cocycle).is_zero() {
        return Err(Error::NotLagrangianCocycle(
            "pair is not a 2-cocycle".into(),
        ));
    }
    // the two closedness conditions, reported with a witness
    let flat = layout.flatten(&t.cocycle);
    for (r, row) in lagrangian_rows(h, &dm, &layout).iter().enumerate() {
        let mut acc = 0u32;
        for (c, &coef) in row.iter().enumerate() {
            acc ^= h.field.mul(coef, flat[c]);
        }
        if acc != 0 {
            return Err(Error::NotLagrangianCocycle(format!(
                "Lagrangian condition row {} fails",
                r
            )));
        }
    }
    let (hm, hn) = (h.dim.even, h.dim.odd);
    let (mm, mn) = (dm.mdim.even, dm.mdim.odd);
    let dim = SuperDim::new(hm + mm, hn + mn);
    let total = dim.total();
    let h_slot: Vec<usize> = (0..h.total())
        .map(|i| if i < hm { i } else { mm + i })
        .collect();
    let dual_slot: Vec<usize> = (0..dm.mdim.total())
        .map(|v| if v < mm { hm + v } else { hm + hn + v })
        .collect();
    let embed_h = |v: &[u32]| {
        let mut w = vzero(total);
        for (i, &c) in v.iter().enumerate() {
            w[h_slot[i]] = c;
        }
        w
    };
    let embed_d = |v: &[u32]| {
        let mut w = vzero(total);
        for (u, &c) in v.iter().enumerate() {
            w[dual_slot[u]] = c;
        }
        w
    };
    let mut g = LieSuperalgebra::abelian(h.field, dim);
    for i in 0..h.total() {
        for j in (i + 1)..h.total() {
            let mut v = embed_h(h.bracket_basis(i, j));
            let p = layout.pair_pos(i, j);
            vaddassign(&mut v, &embed_d(&t.cocycle.alpha[p]));
            g.set_bracket(h_slot[i], h_slot[j], v);
        }
        for u in 0..dm.mdim.total() {
            let mut e = vzero(dm.mdim.total());
            e[u] = 1;
            g.set_bracket(h_slot[i], dual_slot[u], embed_d(&rep.act_basis(i, &e)));
        }
        if h.parity(i) == Parity::Odd {
            let mut v = embed_h(h.sq_basis(i));
            vaddassign(&mut v, &embed_d(&t.cocycle.gamma[i - hm]));
            g.set_squaring(h_slot[i], v);
        }
    }
    let mut names = vec![String::new(); total];
    for i in 0..h.total() {
        names[h_slot[i]] = h.basis_names[i].clone();
    }
    for v in 0..dm.mdim.total() {
        let star = format!("{}*", h.basis_names[dm.h_index(v)]);
        names[dual_slot[v]] = match t.kind {
            ExtKind::Even => star,
            ExtKind::Odd => format!("Pi({})", star),
        };
    }
    g.basis_names = names;
    g.verify().into_result(Error::Verification)?;
    // the exchange form ω(x+ξ, y+ζ) = ξ(y) + ζ(x)
    let mut gram = Matrix::zeros(h.field, total, total);
    for v in 0..dm.mdim.total() {
        let i = dm.h_index(v);
        gram[(h_slot[i], dual_slot[v])] = 1;
        gram[(dual_slot[v], h_slot[i])] = 1;
    }
    let form = BilinearForm::new(dim, gram);
    debug_assert!(crate::forms::is_closed(&g, &form).passed());
    debug_assert!(form.is_nondegenerate());
    debug_assert_eq!(
        form.parity(),
        match t.kind {
            ExtKind::Even => FormClass::OrthoOrthogonal,
            ExtKind::Odd => FormClass::Periplectic,
        }
    );
    let ideal = Subspace::from_vectors(
        h.field,
        total,
        dual_slot
            .iter()
            .map(|&s| {
                let mut v = vzero(total);
                v[s] = 1;
                v
            })
            .collect(),
    );
    let complement = Subspace::from_vectors(
        h.field,
        total,
        h_slot
            .iter()
            .map(|&s| {
                let mut v = vzero(total);
                v[s] = 1;
                v
            })
            .collect(),
    );
    debug_assert!(g.is_ideal(&ideal).unwrap());
    debug_assert_eq!(form.orthogonal(&ideal), ideal);
    debug_assert_eq!(form.orthogonal(&complement), complement);
    Ok(Extension {
        algebra: g,
        form,
        polarization: StrongPolarization { ideal, complement },
        h_slot,
        dual_slot,
    })
}

/// Result of extracting an extension tuple from a strong polarization.
pub struct Extraction {
    pub tuple: ExtensionTuple,
    pub quotient_map: crate::superalg::QuotientMap,
    /// the isomorphism Φ = p_h ⊕ i_ω from the input onto the rebuilt
    /// extension, verified
    pub iso_to_rebuilt: Matrix,
    pub rebuilt: Extension,
}

/// Converse construction: from a strongly polarized quasi-Frobenius Lie
/// superalgebra, recover the base `(h = g/a, ∇)`, the extension cocycle via
/// `i_ω`, and the verified isomorphism onto the rebuilt extension.
pub fn extract_tuple(
    g: &LieSuperalgebra,
    w: &BilinearForm,
    pol: &StrongPolarization,
) -> Result<Extraction, Error> {
    let total = g.total();
    let a = &pol.ideal;
    let n = &pol.complement;
    if !g.is_ideal(a)? {
        return Err(Error::NotAnIdeal);
    }
    if w.orthogonal(a) != *a || w.orthogonal(n) != *n || !n.is_complement_of(a) {
        return Err(Error::QuasiFrobeniusViolation(
            "not a strong polarization".into(),
        ));
    }
    let kind = match w.parity() {
        FormClass::OrthoOrthogonal => ExtKind::Even,
        FormClass::Periplectic => ExtKind::Odd,
        FormClass::Inhomogeneous => {
            return Err(Error::QuasiFrobeniusViolation("form is inhomogeneous".into()))
        }
    };
    let (h, qmap) = g.quotient(a)?;
    let ht = h.total();
    // lift into N: columns of N basis, solve proj ∘ lift = id
    let nb = n.basis_vectors();
    let mut proj_n = Matrix::zeros(g.field, ht, nb.len());
    for (c, v) in nb.iter().enumerate() {
        let p = qmap.proj.mul_vec(v);
        for (r, &x) in p.iter().enumerate() {
            proj_n[(r, c)] = x;
        }
    }
    let lift = |u: &[u32]| -> Vec<u32> {
        let coeffs = solve(&proj_n, u).expect("N is a complement of the ideal");
        let mut out = vzero(total);
        for (c, &co) in coeffs.iter().enumerate() {
            vaddassign(&mut out, &crate::superalg::vscale(g.field, co, &nb[c]));
        }
        out
    };
    // decomposition x = p_a(x) + p_n(x)
    let ab = a.basis_vectors();
    let mut comb = Matrix::zeros(g.field, total, total);
    for (c, v) in ab.iter().chain(nb.iter()).enumerate() {
        for (r, &x) in v.iter().enumerate() {
            comb[(r, c)] = x;
        }
    }
    let comb_inv = comb.inverse().ok_or(Error::QuasiFrobeniusViolation(
        "ideal and complement do not span".into(),
    ))?;
    let p_a = |x: &[u32]| -> Vec<u32> {
        let y = comb_inv.mul_vec(x);
        let mut out = vzero(total);
        for (c, v) in ab.iter().enumerate() {
            vaddassign(&mut out, &crate::superalg::vscale(g.field, y[c], v));
        }
        out
    };
    // pairing matrix P[a][u] = ω(lift(e_u), a_basis), used to decode ∇
    let hbasis = |u: usize| {
        let mut v = vzero(ht);
        v[u] = 1;
        v
    };
    let lifts: Vec<Vec<u32>> = (0..ht).map(|u| lift(&hbasis(u))).collect();
    let mut pairing = Matrix::zeros(g.field, ab.len(), ht);
    for (r, av) in ab.iter().enumerate() {
        for u in 0..ht {
            pairing[(r, u)] = w.eval(&lifts[u], av);
        }
    }
    // ∇_u(e_v) solves ω_h(∇_u e_v, a) = ω(lift(v), [lift(u), a]) for all a
    let mut nabla_mats = Vec::with_capacity(ht);
    for u in 0..ht {
        let mut m = Matrix::zeros(g.field, ht, ht);
        for v in 0..ht {
            let rhs: Vec<u32> = ab
                .iter()
                .map(|av| {
                    let br = g.bracket_eval(&lifts[u], av).unwrap();
                    w.eval(&lifts[v], &br)
                })
                .collect();
            let col = solve(&pairing, &rhs).ok_or(Error::QuasiFrobeniusViolation(
                "pairing between h and the ideal is degenerate".into(),
            ))?;
            for (r, &x) in col.iter().enumerate() {
                m[(r, v)] = x;
            }
        }
        nabla_mats.push(m);
    }
    let nabla = Connection::from_matrices(g.field, h.dim, nabla_mats);
    let base = FlatLieSuperalgebra::new(h.clone(), nabla)?;
    // extension cocycle through i_ω
    let dm = DualModule::new(h.dim, kind);
    let i_w = |av: &[u32]| -> Vec<u32> {
        let values: Vec<u32> = (0..ht).map(|u| w.eval(av, &lifts[u])).collect();
        dm.functional_to_module(&values)
    };
    let layout = Cochain2Layout::new(g.field, h.dim, dm.mdim);
    let mut cocycle = layout.zero_cochain();
    for (p, &(i, j)) in layout.pairs().to_vec().iter().enumerate() {
        let br = g.bracket_eval(&lifts[i], &lifts[j]).unwrap();
        cocycle.alpha[p] = i_w(&p_a(&br));
    }
    for i in h.dim.even..ht {
        let s = g.squaring_eval(&lifts[i]).unwrap();
        cocycle.gamma[i - h.dim.even] = i_w(&p_a(&s));
    }
    let tuple = ExtensionTuple {
        base,
        kind,
        cocycle,
    };
    let rebuilt = build_extension(&tuple)?;
    // Φ = p_h ⊕ i_ω, in the rebuilt basis
    let mut phi = Matrix::zeros(g.field, total, total);
    for x in 0..total {
        let mut e = vzero(total);
        e[x] = 1;
        let xa = p_a(&e);
        let xn = crate::superalg::vadd(&e, &xa);
        let ph = qmap.proj.mul_vec(&xn);
        let iw = i_w(&xa);
        let mut img = vzero(total);
        for (u, &c) in ph.iter().enumerate() {
            img[rebuilt.h_slot[u]] ^= c;
        }
        for (v, &c) in iw.iter().enumerate() {
            img[rebuilt.dual_slot[v]] ^= c;
        }
        for (r, &c) in img.iter().enumerate() {
            phi[(r, x)] = c;
        }
    }
    verify_extension_iso(g, w, &phi, &rebuilt)?;
    Ok(Extraction {
        tuple,
        quotient_map: qmap,
        iso_to_rebuilt: phi,
        rebuilt,
    })
}

/// Checks that `phi` is an isomorphism of quasi-Frobenius Lie superalgebras
/// onto the built extension.
fn verify_extension_iso(
    g: &LieSuperalgebra,
    w: &BilinearForm,
    phi: &Matrix,
    ext: &Extension,
) -> Result<(), Error> {
    let total = g.total();
    if phi.rank() != total {
        return Err(Error::Verification("Φ is not invertible".into()));
    }
    let mut rep = Report::default();
    for i in 0..total {
        for j in (i + 1)..total {
            let lhs = phi.mul_vec(g.bracket_basis(i, j));
            let rhs = ext
                .algebra
                .bracket_eval(&phi.col(i), &phi.col(j))
                .unwrap();
            if lhs != rhs {
                rep.fail(format!("Φ bracket fails at (e{},e{})", i + 1, j + 1));
            }
        }
        if g.parity(i) == Parity::Odd {
            let lhs = phi.mul_vec(g.sq_basis(i));
            let rhs = ext.algebra.squaring_eval(&phi.col(i)).unwrap();
            if lhs != rhs {
                rep.fail(format!("Φ squaring fails at e{}", i + 1));
            }
        }
        for j in 0..total {
            let mut e_i = vzero(total);
            e_i[i] = 1;
            let mut e_j = vzero(total);
            e_j[j] = 1;
            if w.eval(&e_i, &e_j) != ext.form.eval(&phi.col(i), &phi.col(j)) {
                rep.fail(format!("Φ does not preserve the form at ({},{})", i, j));
            }
        }
    }
    rep.into_result(Error::Verification)
}

/// Decides whether two cochains over the same flat base and kind differ by
/// a Lagrangian coboundary `𝔡¹σ` with σ symmetric; returns the witness.
/// When both cochains are genuine extension cocycles (even), the explicit
/// isomorphism `(u, ξ) ↦ (u, ξ + σ(u))` between the built extensions is
/// verified as well.
pub fn extensions_equivalent(
    fh: &FlatLieSuperalgebra,
    kind: ExtKind,
    c1: &Cochain2,
    c2: &Cochain2,
) -> Result<(bool, Option<Cochain1>), Error> {
    let (dm, rep) = dual_rep(fh, kind);
    let layout = Cochain2Layout::new(fh.h.field, fh.h.dim, dm.mdim);
    if c1.layout != layout || c2.layout != layout {
        return Err(Error::BaseMismatch);
    }
    let gens = symmetric_cochain_generators(&fh.h, &dm);
    let cols: Vec<Vec<u32>> = gens
        .iter()
        .map(|phi| layout.flatten(&crate::cohomology::d1(&fh.h, &rep, phi)))
        .collect();
    let n = layout.n_coords();
    let mut m = Matrix::zeros(fh.h.field, n, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            m[(r, c)] = x;
        }
    }
    let diff = crate::superalg::vadd(&layout.flatten(c1), &layout.flatten(c2));
    let Some(coeffs) = solve(&m, &diff) else {
        return Ok((false, None));
    };
    let mut sigma = Cochain1::zero(fh.h.field, fh.h.dim, dm.mdim);
    for (c, &co) in coeffs.iter().enumerate() {
        if co != 0 {
            sigma.map = sigma.map.add(&gens[c].map.scale(co));
        }
    }
    // verification of the explicit isomorphism when both sides build
    let t1 = ExtensionTuple {
        base: fh.clone(),
        kind,
        cocycle: c1.clone(),
    };
    let t2 = ExtensionTuple {
        base: fh.clone(),
        kind,
        cocycle: c2.clone(),
    };
    if let (Ok(e1), Ok(e2)) = (build_extension(&t1), build_extension(&t2)) {
        let total = e1.algebra.total();
        let mut phi = Matrix::identity(fh.h.field, total);
        for u in 0..fh.h.total() {
            let col = sigma.map.col(u);
            for (v, &c) in col.iter().enumerate() {
                phi[(e1.dual_slot[v], e1.h_slot[u])] = c;
            }
        }
        verify_extension_iso(&e1.algebra, &e1.form, &phi, &e2)?;
    }
    Ok((true, Some(sigma)))
}

// Re-exported so the doc comment's names resolve in one place.
pub use crate::cohomology::cohomology as module_cohomology;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn gf2() -> Field {
        Field::gf2()
    }

    fn l1_11(f: Field) -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian(f, SuperDim::new(1, 1));
        g.set_bracket(0, 1, vec![0, 1]);
        g
    }

    fn l1_02(f: Field) -> LieSuperalgebra {
        LieSuperalgebra::abelian(f, SuperDim::new(0, 2))
    }

    fn nabla_eps(f: Field, eps: u32) -> Connection {
        let mut n = Connection::zero(f, SuperDim::new(1, 1));
        n.set_entry(0, 0, &[1 ^ eps, 0]);
        n.set_entry(0, 1, &[0, eps]);
        n.set_entry(1, 0, &[0, 1 ^ eps]);
        n
    }

    #[test]
    fn dual_rep_of_nabla_eps_matches_the_module_table() {
        // e·e* = (1+ε)e*, e·f* = εf*, f·f* = (1+ε)e*, f·e* = 0
        for f in [Field::gf2(), Field::gf4()] {
            for eps in f.elements() {
                let g = l1_11(f);
                let fh = FlatLieSuperalgebra::new(g, nabla_eps(f, eps)).unwrap();
                let (_, rep) = dual_rep(&fh, ExtKind::Even);
                assert!(rep.verify(&fh.h).passed());
                let one = 1 ^ eps;
                assert_eq!(rep.act_basis(0, &[1, 0]), vec![one, 0]); // e·e*
                assert_eq!(rep.act_basis(0, &[0, 1]), vec![0, eps]); // e·f*
                assert_eq!(rep.act_basis(1, &[0, 1]), vec![one, 0]); // f·f*
                assert_eq!(rep.act_basis(1, &[1, 0]), vec![0, 0]); // f·e*
            }
        }
    }

    #[test]
    fn xh2_of_nabla_eps_matches_claim_4() {
        // XH²(h, h*) is nontrivial iff ε = 1, and then has dimension 2.
        for f in [Field::gf2(), Field::gf4()] {
            for eps in f.elements() {
                let g = l1_11(f);
                let fh = FlatLieSuperalgebra::new(g, nabla_eps(f, eps)).unwrap();
                let (_, rep) = dual_rep(&fh, ExtKind::Even);
                let h2 = crate::cohomology::cohomology(&fh.h, &rep, 2, None);
                if eps == 1 {
                    assert_eq!(h2.dim, 2, "eps=1 over GF({})", f.order());
                } else {
                    assert_eq!(h2.dim, 0, "eps={:x} over GF({})", eps, f.order());
                }
            }
        }
    }

    #[test]
    fn lagrangian_cohomology_of_nabla_eps() {
        // XH²_L is one-dimensional at ε = 1, zero otherwise; at ε = 1 it is
        // spanned by (α₂, γ₃¹): α(e,f) = f*, γ(f) = e*.
        for f in [Field::gf2(), Field::gf4()] {
            for eps in f.elements() {
                let g = l1_11(f);
                let fh = FlatLieSuperalgebra::new(g, nabla_eps(f, eps)).unwrap();
                let lc = lagrangian_cocycle_space(&fh, ExtKind::Even);
                if eps == 1 {
                    assert_eq!(lc.dim, 1);
                    let mut expected = lc.layout.zero_cochain();
                    expected.alpha[0] = vec![0, 1]; // α(e,f) = f*
                    expected.gamma[0] = vec![1, 0]; // γ(f) = e*
                    let flat = lc.layout.flatten(&expected);
                    assert!(lc.cocycles.contains_vec(&flat));
                    assert!(!lc.coboundaries.contains_vec(&flat));
                } else {
                    assert_eq!(lc.dim, 0, "eps={:x} GF({})", eps, f.order());
                }
            }
        }
    }

    #[test]
    fn l1_02_even_lagrangian_cohomology_has_the_listed_basis() {
        // dim XH²_L = 2 with classes (e1*⊗e1*∧e2*, γ(e1)=e2*) and
        // (e2*⊗e1*∧e2*, γ(e2)=e1*).
        let g = l1_02(gf2());
        let fh = FlatLieSuperalgebra::new(g, Connection::zero(gf2(), SuperDim::new(0, 2))).unwrap();
        let lc = lagrangian_cocycle_space(&fh, ExtKind::Even);
        assert_eq!(lc.dim, 2);
        // (α(e1,e2)=e1*, γ(e1)=e2*) and (α(e1,e2)=e2*, γ(e2)=e1*)
        for (a, gidx, gval) in [
            (vec![1, 0], 0usize, vec![0, 1]),
            (vec![0, 1], 1usize, vec![1, 0]),
        ] {
            let mut c = lc.layout.zero_cochain();
            c.alpha[0] = a;
            c.gamma[gidx] = gval;
            let flat = lc.layout.flatten(&c);
            assert!(lc.cocycles.contains_vec(&flat), "{:?}", c);
            assert!(!lc.coboundaries.contains_vec(&flat));
        }
    }

    #[test]
    fn build_l_ell_from_l1_02() {
        // odd cocycle (β(e1,e2) = Π(e1*), θ(e1) = Π(e2*)) over L^1_{0|2}
        // builds L^l_{2|2}: [e1,e2] = Π(e1*), s(e1) = Π(e2*).
        let g = l1_02(gf2());
        let fh = FlatLieSuperalgebra::new(g, Connection::zero(gf2(), SuperDim::new(0, 2))).unwrap();
        let dm = DualModule::new(fh.h.dim, ExtKind::Odd);
        let layout = Cochain2Layout::new(gf2(), fh.h.dim, dm.mdim);
        let mut c = layout.zero_cochain();
        // module coordinate of Π(e1*): e1 is odd index 0 => coord 0
        c.alpha[0] = vec![1, 0];
        c.gamma[0] = vec![0, 1];
        let t = ExtensionTuple {
            base: fh,
            kind: ExtKind::Odd,
            cocycle: c,
        };
        let ext = build_extension(&t).unwrap();
        assert_eq!(ext.algebra.dim, SuperDim::new(2, 2));
        assert!(ext.algebra.verify().passed());
        assert_eq!(ext.form.parity(), FormClass::Periplectic);
        // odd part holds e1, e2; their bracket is Π(e1*) (even slot 0)
        let (h2, h3) = (ext.h_slot[0], ext.h_slot[1]);
        let b = ext.algebra.bracket_basis(h2, h3);
        assert_eq!(b[ext.dual_slot[0]], 1);
        let s = ext.algebra.sq_basis(h2);
        assert_eq!(s[ext.dual_slot[1]], 1);
    }

    #[test]
    fn zero_cocycle_over_l1_02_gives_abelian_04() {
        let g = l1_02(gf2());
        let fh = FlatLieSuperalgebra::new(g, Connection::zero(gf2(), SuperDim::new(0, 2))).unwrap();
        let dm = DualModule::new(fh.h.dim, ExtKind::Even);
        let layout = Cochain2Layout::new(gf2(), fh.h.dim, dm.mdim);
        let t = ExtensionTuple {
            base: fh,
            kind: ExtKind::Even,
            cocycle: layout.zero_cochain(),
        };
        let ext = build_extension(&t).unwrap();
        assert_eq!(ext.algebra.dim, SuperDim::new(0, 4));
        assert!(ext.algebra.is_abelian());
    }

    #[test]
    fn extraction_round_trip_on_built_extensions() {
        // building from (L^1_{1|1}, ∇¹, (α₂,γ₃¹)) and extracting recovers a
        // cohomologous tuple and an isomorphic algebra.
        let f = gf2();
        let g = l1_11(f);
        let fh = FlatLieSuperalgebra::new(g, nabla_eps(f, 1)).unwrap();
        let lc = lagrangian_cocycle_space(&fh, ExtKind::Even);
        assert_eq!(lc.dim, 1);
        let class = lc.representatives[0].clone();
        let t = ExtensionTuple {
            base: fh.clone(),
            kind: ExtKind::Even,
            cocycle: class.clone(),
        };
        let ext = build_extension(&t).unwrap();
        let extraction = extract_tuple(&ext.algebra, &ext.form, &ext.polarization).unwrap();
        // same base connection
        assert_eq!(extraction.tuple.base.nabla, fh.nabla);
        // recovered cocycle is cohomologous to the input
        let (equiv, sigma) =
            extensions_equivalent(&fh, ExtKind::Even, &extraction.tuple.cocycle, &class).unwrap();
        assert!(equiv);
        assert!(sigma.is_some());
    }

    #[test]
    fn inequivalent_classes_are_detected() {
        let f = gf2();
        let g = l1_11(f);
        let fh = FlatLieSuperalgebra::new(g, nabla_eps(f, 1)).unwrap();
        let lc = lagrangian_cocycle_space(&fh, ExtKind::Even);
        let class = lc.representatives[0].clone();
        let zero = lc.layout.zero_cochain();
        let (equiv, _) = extensions_equivalent(&fh, ExtKind::Even, &class, &zero).unwrap();
        assert!(!equiv);
        let (selfeq, sigma) = extensions_equivalent(&fh, ExtKind::Even, &class, &class).unwrap();
        assert!(selfeq);
        assert!(sigma.unwrap().map.is_zero());
    }
}
