//! Cross-module property checks: isomorphism-search symmetry and invariance
//! of the structural invariants, Lagrangian-ideal abelianness, and the
//! build/extract identity on Lagrangian cohomology classes over the
//! 2-dimensional bases.

use lie2::catalog;
use lie2::connections::Connection;
use lie2::field::Field;
use lie2::forms::find_strong_polarizations;
use lie2::lagrange::{
    build_extension, extensions_equivalent, extract_tuple, lagrangian_cocycle_space, ExtKind,
    ExtensionTuple, FlatLieSuperalgebra,
};
use lie2::leftsym::{enumerate_compatible_products, UpTo};
use lie2::linalg::Subspace;
use lie2::superalg::{find_isomorphism, Parity};

fn vis_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

#[test]
fn isomorphism_search_is_symmetric_and_invariant() {
    let f = Field::gf2();
    let pairs = [
        ("L^u_{2|2}", "L^v_{2|2}"),
        ("L^l_{2|2}", "L^r_{2|2}"),
        ("L^q_{4|0}", "L^u_{4|0}"),
        ("L^a_{2|2}", "L^h_{2|2}"), // non-isomorphic pair
    ];
    for (a, b) in pairs {
        let ga = catalog::load(a, None, f).unwrap().algebra().clone();
        let gb = catalog::load(b, None, f).unwrap().algebra().clone();
        let ab = find_isomorphism(&ga, &gb, None, None).unwrap();
        let ba = find_isomorphism(&gb, &ga, None, None).unwrap();
        assert_eq!(ab.is_some(), ba.is_some(), "{} vs {}", a, b);
        if let Some(w) = ab {
            // the witness transports the derived subalgebra and the center
            for (sa, sb) in [
                (ga.derived_subalgebra(), gb.derived_subalgebra()),
                (ga.center(), gb.center()),
            ] {
                let image: Vec<Vec<u32>> =
                    sa.basis_vectors().iter().map(|v| w.apply(v)).collect();
                let image = Subspace::from_vectors(f, ga.total(), image);
                assert_eq!(image, sb, "invariant transport {} -> {}", a, b);
            }
        }
    }
}

#[test]
fn lagrangian_ideals_are_abelian() {
    // on every polarized catalog extension, each Lagrangian ideal found by
    // the search is abelian (brackets and squarings vanish into zero)
    let f = Field::gf2();
    for name in ["L^a_{2|2}", "L^k_{2|2}", "L^e_{2|2}", "L^u_{4|0}", "L^l_{2|2}"] {
        let loaded = catalog::load(name, None, f).unwrap();
        let g = loaded.algebra().clone();
        let w = loaded.parsed.form.clone().unwrap();
        let pols = find_strong_polarizations(&g, &w).unwrap();
        assert!(!pols.is_empty(), "{} is polarized", name);
        for p in &pols {
            let vs = p.ideal.basis_vectors();
            for x in &vs {
                for y in &vs {
                    assert!(vis_zero(&g.bracket_eval(x, y).unwrap()));
                }
            }
            for (i, x) in vs.iter().enumerate() {
                if x[..g.dim.even].iter().all(|&c| c == 0) {
                    assert!(vis_zero(&g.squaring_eval(x).unwrap()));
                    for y in vs.iter().skip(i + 1) {
                        if y[..g.dim.even].iter().all(|&c| c == 0) {
                            let sum: Vec<u32> =
                                x.iter().zip(y).map(|(&a, &b)| a ^ b).collect();
                            assert!(vis_zero(&g.squaring_eval(&sum).unwrap()));
                        }
                    }
                }
            }
        }
        // the canonical polarization is among those found
        assert!(pols.iter().any(|p| p.ideal
            == Subspace::from_vectors(f, g.total(), loaded.parsed.ideal.clone())));
    }
}

#[test]
fn build_then_extract_is_identity_on_classes() {
    // over every 2-dimensional base and flat torsion-free product, building
    // the extension of an even Lagrangian class and extracting it back
    // yields a cohomologous tuple with the same connection
    let f = Field::gf2();
    let mut classes_checked = 0;
    for name in ["L^1_{0|2}", "L^1_{1|1}", "L^2_{1|1}", "L^3_{1|1}", "L^1_{2|0}", "L^2_{2|0}"] {
        let g = catalog::load(name, None, f).unwrap().algebra().clone();
        let products = enumerate_compatible_products(&g, UpTo::AutOrbits).unwrap();
        for p in &products {
            let nabla = Connection::from_product(p);
            let Ok(base) = FlatLieSuperalgebra::new(g.clone(), nabla) else {
                continue;
            };
            for kind in [ExtKind::Even, ExtKind::Odd] {
                let lc = lagrangian_cocycle_space(&base, kind);
                // even-parity classes (and the zero class) build extensions
                let mut candidates = vec![lc.layout.zero_cochain()];
                for c in &lc.representatives {
                    if c.parity() == Some(Parity::Even) {
                        candidates.push(c.clone());
                    }
                }
                for cocycle in candidates {
                    let tuple = ExtensionTuple {
                        base: base.clone(),
                        kind,
                        cocycle: cocycle.clone(),
                    };
                    let ext = build_extension(&tuple).unwrap();
                    assert!(ext.algebra.verify().passed());
                    let back =
                        extract_tuple(&ext.algebra, &ext.form, &ext.polarization).unwrap();
                    assert_eq!(back.tuple.base.nabla, base.nabla);
                    let (equiv, _) =
                        extensions_equivalent(&base, kind, &back.tuple.cocycle, &cocycle)
                            .unwrap();
                    assert!(equiv, "{} class round trip", name);
                    classes_checked += 1;
                }
            }
        }
    }
    println!("{} extension classes round-tripped", classes_checked);
    assert!(classes_checked > 20);
}

#[test]
fn quotient_of_extension_recovers_base() {
    // h* sits inside each built extension as a Lagrangian ideal and the
    // quotient is the base again
    let f = Field::gf2();
    let g = catalog::load("L^1_{1|1}", None, f).unwrap().algebra().clone();
    let base = FlatLieSuperalgebra::new(g.clone(), catalog::l1_11_nabla_eps(f, 1)).unwrap();
    let lc = lagrangian_cocycle_space(&base, ExtKind::Even);
    let tuple = ExtensionTuple {
        base: base.clone(),
        kind: ExtKind::Even,
        cocycle: lc.representatives[0].clone(),
    };
    let ext = build_extension(&tuple).unwrap();
    assert!(ext.algebra.is_ideal(&ext.polarization.ideal).unwrap());
    let (q, _) = ext.algebra.quotient(&ext.polarization.ideal).unwrap();
    assert!(find_isomorphism(&q, &g, None, None).unwrap().is_some());
}
