//! Acceptance suite: one test per shipped criterion, each printing a
//! pass/fail line.  Every tolerance is exact — the computations are over
//! finite fields.
//!
//! Three criteria assert claims of the bundled reference tables that the
//! recomputation demonstrably refutes (see the deviation rows the harness
//! prints, and the library tests freezing the computed values); those tests
//! fail honestly rather than encode the defective cells as expected.

use lie2::catalog::reproduce::{reproduce, Row, Status};
use lie2::catalog::{self};
use lie2::cohomology::{d1, d2, Cochain1, Representation};
use lie2::connections::{
    associated_lie, identity_suite, post_lie_from_flat_parallel, random_connection,
    semidirect_morphism_check, verify_post_lie, Connection,
};
use lie2::field::Field;
use lie2::leftsym::{
    is_left_alternative, lie_of_product, queerify_product, restricted_of_product, Product,
};
use lie2::superalg::{Parity, SuperDim};
use lie2::{ElStream, LieSuperalgebra};

fn banner(criterion: &str, pass: bool) {
    println!(
        "[{}] criterion {}",
        if pass { "PASS" } else { "FAIL" },
        criterion
    );
}

fn print_rows(rows: &[Row]) {
    for r in rows {
        if r.status != Status::Match {
            println!("    [{}] {} | {}", r.status, r.row, r.detail);
        }
    }
}

fn assert_all_match(criterion: &str, rows: &[Row], allow_unverified: bool) {
    print_rows(rows);
    let bad: Vec<&Row> = rows
        .iter()
        .filter(|r| match r.status {
            Status::Match => false,
            Status::Unverified => !allow_unverified,
            _ => true,
        })
        .collect();
    let pass = bad.is_empty();
    banner(criterion, pass);
    assert!(
        pass,
        "criterion {}: {} row(s) diverge (see the decisions record shipped with the build for the analysis): {}",
        criterion,
        bad.len(),
        bad.iter()
            .map(|r| r.row.as_str())
            .collect::<Vec<_>>()
            .join("; ")
    );
}

#[test]
fn criterion_01_dimension_2_classification() {
    let t0 = std::time::Instant::now();
    let expected = [
        (SuperDim::new(1, 1), 3usize),
        (SuperDim::new(2, 0), 2),
        (SuperDim::new(0, 2), 1),
    ];
    for (dim, want) in expected {
        let classes = catalog::classify_dim2_named(Field::gf2(), dim);
        assert_eq!(classes.len(), want, "class count at sdim {}", dim);
        assert!(
            classes.iter().all(|(n, _)| n != "<unmatched>"),
            "every class matches a named algebra"
        );
    }
    assert!(t0.elapsed().as_secs() < 1, "budget: under one second");
    banner("1 (dimension-2 classification)", true);
}

#[test]
fn criterion_02_left_symmetric_tables() {
    let t0 = std::time::Instant::now();
    let rows = reproduce("sec2.6").unwrap();
    print_rows(&rows);
    // Every table row at every admissible parameter must be realized as a
    // computed orbit with the exact left-alternative flag; orbits beyond
    // the table (small-field effects) are reported, not asserted away.
    let pass = rows.iter().all(|r| r.status != Status::Mismatch);
    banner("2 (left-symmetric product tables)", pass);
    assert!(pass);
    assert!(t0.elapsed().as_secs() < 30);
}

#[test]
fn criterion_03_lagrangian_cohomology_tables() {
    let t0 = std::time::Instant::now();
    let mut rows = Vec::new();
    for id in ["appendixB-0|2", "appendixB-1|1", "appendixB-2|0"] {
        rows.extend(reproduce(id).unwrap());
    }
    assert!(t0.elapsed().as_secs() < 60);
    assert_all_match("3 (Lagrangian cohomology tables)", &rows, false);
}

#[test]
fn criterion_04_claims_over_the_eps_connection() {
    let t0 = std::time::Instant::now();
    let rows: Vec<Row> = reproduce("sec3.5")
        .unwrap()
        .into_iter()
        .filter(|r| r.row.contains("eps-connection claims"))
        .collect();
    assert_eq!(rows.len(), 6); // both fields, every eps
    assert_all_match("4 (cocycle conditions and cohomology of the eps-connection)", &rows, false);
    assert!(t0.elapsed().as_secs() < 5);
}

#[test]
fn criterion_05_ba1_lagrangian_cohomology() {
    let t0 = std::time::Instant::now();
    let rows: Vec<Row> = reproduce("sec3.5")
        .unwrap()
        .into_iter()
        .filter(|r| r.row.starts_with("ba(1)"))
        .collect();
    assert_eq!(rows.len(), 2);
    assert_all_match("5 (ba(1) Lagrangian cohomology)", &rows, false);
    assert!(t0.elapsed().as_secs() < 5);
}

#[test]
fn criterion_06_closed_form_spaces() {
    let t0 = std::time::Instant::now();
    let rows: Vec<Row> = reproduce("sec3.5")
        .unwrap()
        .into_iter()
        .filter(|r| r.row.contains("closed forms"))
        .collect();
    assert_eq!(rows.len(), 4);
    assert_all_match("6 (closed-form spaces)", &rows, false);
    assert!(t0.elapsed().as_secs() < 5);
}

#[test]
fn criterion_07_extraction_round_trip() {
    let t0 = std::time::Instant::now();
    let rows: Vec<Row> = reproduce("sec3.5")
        .unwrap()
        .into_iter()
        .filter(|r| r.row.contains("extraction round trip"))
        .collect();
    assert_eq!(rows.len(), 1);
    // The stated connection cell nabla_e1(f) = f has torsion and cannot be
    // part of any extraction tuple; the harness asserts the torsion-free
    // computation and reports that cell separately.  The round trip itself
    // must match.
    assert_all_match("7 (worked extraction round trip)", &rows, false);
    assert!(t0.elapsed().as_secs() < 5);
}

#[test]
fn criterion_08_extension_lists() {
    let t0 = std::time::Instant::now();
    let rows = reproduce("sec4.2").unwrap();
    // The stored composite-squaring claims are recomputed and conflicts
    // reported by design; every other cell must match.
    let (sumsq, rest): (Vec<Row>, Vec<Row>) = rows
        .into_iter()
        .partition(|r| r.row.contains("stored composite squaring"));
    print_rows(&sumsq);
    assert!(t0.elapsed().as_secs() < 120);
    assert_all_match("8 (extension lists)", &rest, false);
}

#[test]
fn criterion_09_invariant_tables() {
    let t0 = std::time::Instant::now();
    let mut rows = Vec::new();
    for id in ["appendixC-2|2", "appendixC-4|0"] {
        rows.extend(reproduce(id).unwrap());
    }
    // the XH3..XH5 columns are shipped reference data, explicitly out of
    // recomputation scope
    assert!(t0.elapsed().as_secs() < 120);
    assert_all_match("9 (invariant tables)", &rows, true);
}

#[test]
fn criterion_10_isomorphism_claims() {
    let t0 = std::time::Instant::now();
    let rows = reproduce("sec4.3").unwrap();
    print_rows(&rows);
    // Deviations are the criterion's own reporting channel: claims needing
    // the splitting field and the two stated loci that do not reproduce are
    // reported, never suppressed.
    let pass = rows.iter().all(|r| r.status != Status::Mismatch);
    banner("10 (isomorphism and symplectomorphism claims)", pass);
    assert!(pass);
    assert!(t0.elapsed().as_secs() < 180);
}

#[test]
fn criterion_11_hamiltonian_example() {
    let t0 = std::time::Instant::now();
    let rows = reproduce("hamiltonian").unwrap();
    assert!(t0.elapsed().as_secs() < 10);
    assert_all_match("11 (Hamiltonian derivation example)", &rows, false);
}

#[test]
fn criterion_12_ten_dimensional_counterexample() {
    let t0 = std::time::Instant::now();
    let rows = reproduce("pasha").unwrap();
    assert_all_match("12 (left-symmetric, not left-alternative)", &rows, false);
    assert!(t0.elapsed().as_millis() < 1000);
}

// ---- criterion 13: the theorem-instance property suites -------------------

fn catalog_algebras_gf2() -> Vec<LieSuperalgebra> {
    let f = Field::gf2();
    let mut out = Vec::new();
    for name in catalog::entry_names() {
        let spec = catalog::entry(name).unwrap();
        for eps in spec.eps.bindings(f) {
            out.push(catalog::load(name, eps, f).unwrap().algebra().clone());
        }
    }
    out
}

#[test]
fn criterion_13a_identity_suite_on_seeded_connections() {
    let t0 = std::time::Instant::now();
    let algebras = catalog_algebras_gf2();
    let mut stream = ElStream::new(2026);
    for g in &algebras {
        for _ in 0..100 {
            let n = random_connection(g, &mut stream);
            let rep = identity_suite(g, &n);
            assert!(rep.passed(), "{} fails: {}", g.name.as_deref().unwrap_or("?"), rep);
        }
    }
    // a GF(4) sample as well
    let f4 = Field::gf4();
    for name in ["L^1_{1|1}", "L^2_{1|1}", "(C^1_1+A)"] {
        let g = catalog::load(name, None, f4).unwrap().algebra().clone();
        for _ in 0..100 {
            let n = random_connection(&g, &mut stream);
            assert!(identity_suite(&g, &n).passed());
        }
    }
    println!(
        "identity suite: {} algebras x 100 connections in {:.2?}",
        algebras.len() + 3,
        t0.elapsed()
    );
    banner("13a (connection identity suite)", true);
    assert!(t0.elapsed().as_secs() < 120);
}

#[test]
fn criterion_13b_queerification_diagram() {
    // all left-alternative products on purely even spaces of dimension <= 2
    // over GF(2): the Lie superalgebra of the queerified product equals the
    // queerification of the associated restricted Lie algebra
    let f = Field::gf2();
    let mut checked = 0;
    for d in 1..=2usize {
        let dim = SuperDim::new(d, 0);
        let coords = d * d * d;
        for code in 0u32..(1 << coords) {
            let mut p = Product::zero(f, dim);
            let mut bit = 0;
            for i in 0..d {
                for j in 0..d {
                    let mut v = vec![0u32; d];
                    for (k, val) in v.iter_mut().enumerate() {
                        let _ = k;
                        *val = (code >> bit) & 1;
                        bit += 1;
                    }
                    p.set(i, j, v);
                }
            }
            if !is_left_alternative(&p).passed() {
                continue;
            }
            let q = queerify_product(&p).unwrap();
            let lhs = lie_of_product(&q).unwrap();
            let r = restricted_of_product(&p).unwrap();
            let rhs = r.queerify().unwrap();
            for i in 0..2 * d {
                for j in (i + 1)..2 * d {
                    assert_eq!(lhs.bracket_basis(i, j), rhs.bracket_basis(i, j));
                }
                if i >= d {
                    assert_eq!(lhs.sq_basis(i), rhs.sq_basis(i));
                }
            }
            checked += 1;
        }
    }
    println!("queerification diagram: {} left-alternative products", checked);
    assert!(checked > 10);
    banner("13b (queerification diagram)", true);
}

#[test]
fn criterion_13c_post_lie_round_trips() {
    // exhaustive flat parallel connections on the dimension-2 algebras over
    // GF(2); round trip through the post-Lie structure restores the data
    let f = Field::gf2();
    let mut checked = 0;
    for name in ["L^1_{0|2}", "L^1_{1|1}", "L^2_{1|1}", "L^3_{1|1}", "L^1_{2|0}", "L^2_{2|0}"] {
        let g = catalog::load(name, None, f).unwrap().algebra().clone();
        let t = g.total();
        let m = g.dim.even;
        // parity-respecting coordinate slots of a connection
        let mut slots = Vec::new();
        for i in 0..t {
            for r in 0..t {
                for c in 0..t {
                    let shift = g.parity(i) == Parity::Odd;
                    let same = (r < m) == (c < m);
                    if same != shift {
                        slots.push((i, r, c));
                    }
                }
            }
        }
        for code in 0u64..(1 << slots.len()) {
            let mut n = Connection::zero(f, g.dim);
            let mut mats: Vec<lie2::linalg::Matrix> = Vec::new();
            let _ = &mats;
            for (b, &(i, r, c)) in slots.iter().enumerate() {
                if code >> b & 1 == 1 {
                    let mut col = n.matrix(i).col(c);
                    col[r] ^= 1;
                    n.set_entry(i, c, &col);
                }
            }
            if !n.is_flat(&g) || !n.is_parallel(&g) {
                continue;
            }
            let pl = post_lie_from_flat_parallel(&g, &n).unwrap();
            assert!(verify_post_lie(&pl).passed());
            let assoc = associated_lie(&pl).unwrap();
            for i in 0..t {
                for j in (i + 1)..t {
                    assert_eq!(assoc.bracket_basis(i, j), g.bracket_basis(i, j));
                }
                if g.parity(i) == Parity::Odd {
                    assert_eq!(assoc.sq_basis(i), g.sq_basis(i));
                }
            }
            // the connection extracted back from the post-Lie data is ✻
            assert_eq!(Connection::from_product(&pl.product), n);
            assert!(semidirect_morphism_check(&pl).passed());
            checked += 1;
        }
    }
    println!("post-Lie round trips: {} flat parallel connections", checked);
    assert!(checked > 5);
    banner("13c (post-Lie round trips)", true);
}

#[test]
fn criterion_13d_d2_after_d1_vanishes() {
    // across trivial, adjoint and extension-dual representations of the
    // catalog algebras, the composite differential kills every 1-cochain
    let f = Field::gf2();
    let mut checked = 0;
    for name in catalog::entry_names() {
        let spec = catalog::entry(name).unwrap();
        let Some(eps) = spec.eps.bindings(f).into_iter().next() else {
            continue;
        };
        let g = catalog::load(name, eps, f).unwrap().algebra().clone();
        for rep in [Representation::trivial(&g), Representation::adjoint(&g)] {
            let mt = rep.mdim.total();
            for jcol in 0..g.total() {
                for mrow in 0..mt {
                    let mut phi = Cochain1::zero(f, g.dim, rep.mdim);
                    phi.map[(mrow, jcol)] = 1;
                    let c = d1(&g, &rep, &phi);
                    assert!(d2(&g, &rep, &c).is_zero(), "{}", name);
                    checked += 1;
                }
            }
        }
    }
    // dual representations over the flat torsion-free eps-family
    for eps in Field::gf4().elements() {
        let g = catalog::load("L^1_{1|1}", None, Field::gf4()).unwrap().algebra().clone();
        let fh = lie2::lagrange::FlatLieSuperalgebra::new(
            g.clone(),
            catalog::l1_11_nabla_eps(Field::gf4(), eps),
        )
        .unwrap();
        for kind in [lie2::lagrange::ExtKind::Even, lie2::lagrange::ExtKind::Odd] {
            let (_, rep) = lie2::lagrange::dual_rep(&fh, kind);
            for jcol in 0..2 {
                for mrow in 0..2 {
                    let mut phi = Cochain1::zero(Field::gf4(), g.dim, rep.mdim);
                    phi.map[(mrow, jcol)] = 1;
                    let c = d1(&g, &rep, &phi);
                    assert!(d2(&g, &rep, &c).is_zero());
                    checked += 1;
                }
            }
        }
    }
    println!("d2 ∘ d1 = 0 on {} elementary cochains", checked);
    banner("13d (composite differential vanishes)", true);
}
