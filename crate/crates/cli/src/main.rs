//! Command-line surface: verification, invariants, cohomology, Lagrangian
//! extensions and extractions, classification, product search,
//! queerification, table reproduction and catalog emission.
//!
//! Exit codes: 0 on success/match, 1 on verification-mismatch reports, 2 on
//! usage or parse errors.

use clap::{Args, Parser, Subcommand};
use lie2::catalog::{self, reproduce::Status};
use lie2::cohomology::{cohomology, Representation};
use lie2::connections::Connection;
use lie2::field::Field;
use lie2::forms::StrongPolarization;
use lie2::lagrange::{
    build_extension, extract_tuple, lagrangian_cohomology_for, DualModule, ExtKind,
    ExtensionTuple, FlatLieSuperalgebra,
};
use lie2::format::{emit_algebra, emit_cochain, emit_connection, emit_form, emit_product, parse_file, ParsedFile};
use lie2::linalg::Subspace;
use lie2::superalg::{Parity, SuperDim};
use lie2::{Error, LieSuperalgebra};

#[derive(Parser)]
#[command(
    name = "lie2",
    about = "Exact computations with Lie superalgebras in characteristic 2",
    after_help = "FILE FORMAT\n\
    \n\
    field 2^1 0x3          # GF(2^k) with an irreducible modulus\n\
    sdim 1 1               # even and odd dimensions\n\
    basis e1 | e2          # even names | odd names\n\
    bracket e1 e2 = e2     # structure constants; omitted entries are zero\n\
    squaring e2 = 0        # squaring on odd basis vectors\n\
    \n\
    Optional blocks: 'prod ei ej = v' (left-symmetric product),\n\
    'nabla ei ej = v' (connection), 'form even|odd' + 'w ei ej = c'\n\
    (bilinear form), 'alpha ei ej = v' / 'gamma ei = v' (cochains over the\n\
    dual basis e1*, ... or Pi(e1*), ...), 'p2 ei = v' (2-structure),\n\
    'ideal v' / 'complement v' (subspace generators).  Coefficients are in\n\
    hexadecimal; linear combinations look like 'e1 + 2*e2'."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// algebra file ('-' for stdin)
    #[arg(long, conflicts_with = "catalog")]
    file: Option<String>,
    /// bundled catalog entry name, e.g. "L^2_{1|1}"
    #[arg(long)]
    catalog: Option<String>,
    /// parameter binding for parameterized entries, e.g. eps=0x2
    #[arg(long)]
    param: Option<String>,
    /// field selection 2^k for catalog entries
    #[arg(long, default_value = "2^1")]
    field: String,
    /// modulus override, e.g. 0x7
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Lie superalgebra axioms (and any attached product)
    Verify(InputArgs),
    /// Derived subalgebra, center, XH1 and XH2 with trivial coefficients
    Invariants(InputArgs),
    /// Cocycle spaces and cohomology dimensions
    Cohomology {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        degree: u8,
        /// trivial or adjoint coefficients
        #[arg(long, default_value = "trivial")]
        coefficients: String,
        /// restrict to one cochain parity: even, odd or all
        #[arg(long, default_value = "all")]
        parity: String,
    },
    /// Lagrangian cohomology XH2_L of an algebra with a connection
    LagrangianCohomology {
        #[command(flatten)]
        input: InputArgs,
        /// even (T*, values in h*) or odd (ΠT*, values in Π(h*))
        #[arg(long, default_value = "even")]
        kind: String,
    },
    /// Build the T*/ΠT*-extension from an algebra + nabla + cochain file
    Extend(InputArgs),
    /// Extract the extension tuple from an algebra + form + ideal file
    Extract(InputArgs),
    /// Classify all Lie superalgebras of a small superdimension
    Classify {
        /// superdimension, e.g. 1|1
        #[arg(long)]
        sdim: String,
        #[arg(long, default_value = "2^1")]
        field: String,
    },
    /// Enumerate compatible left-symmetric products up to automorphisms
    SearchLss {
        #[command(flatten)]
        input: InputArgs,
        /// emit the raw list instead of orbit representatives
        #[arg(long)]
        raw: bool,
    },
    /// Queerify a restricted Lie algebra (p2 lines) or a left-alternative
    /// product (prod lines) onto the doubled (n|n) space
    Queerify(InputArgs),
    /// Recompute a bundled reference table and diff it cell by cell
    Reproduce {
        /// table id (classif2, sec2.6, sec3.5, sec4.2, sec4.3,
        /// appendixB-0|2, appendixB-1|1, appendixB-2|0, appendixC-2|2,
        /// appendixC-4|0, hamiltonian, pasha, all)
        table: String,
        /// one JSON record per row with stable key order
        #[arg(long)]
        machine: bool,
    },
    /// Print a catalog entry in the text format
    Emit(InputArgs),
    /// List the bundled catalog entries
    List,
}

fn parse_field(spec: &str, modulus: Option<&str>) -> Result<Field, Error> {
    let k: u32 = spec
        .strip_prefix("2^")
        .and_then(|s| s.parse().ok())
        .ok_or(Error::DegreeOutOfRange(0))?;
    match modulus {
        Some(m) => {
            let m = m.strip_prefix("0x").unwrap_or(m);
            let m = u32::from_str_radix(m, 16).map_err(|_| Error::ReducibleModulus(0))?;
            Field::new(k, m)
        }
        None => Field::with_default_modulus(k),
    }
}

fn load_input(input: &InputArgs) -> Result<ParsedFile, Error> {
    if let Some(name) = &input.catalog {
        let field = parse_field(&input.field, input.modulus.as_deref())?;
        let eps = match &input.param {
            Some(p) => {
                let (key, val) = p.split_once('=').ok_or_else(|| Error::ConstraintViolation(
                    "expected --param eps=<hex>".into(),
                ))?;
                if key != "eps" {
                    return Err(Error::ConstraintViolation(format!(
                        "unknown parameter '{}'",
                        key
                    )));
                }
                Some(field.parse_el(val).ok_or_else(|| {
                    Error::ConstraintViolation("parameter outside the field".into())
                })?)
            }
            None => None,
        };
        let loaded = catalog::load(name, eps, field)?;
        return Ok(loaded.parsed);
    }
    let text = match input.file.as_deref() {
        Some("-") => {
            use std::io::Read;
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {}", path, e),
        })?,
        None => {
            return Err(Error::Parse {
                line: 0,
                msg: "one of --file or --catalog is required".into(),
            })
        }
    };
    parse_file(&text)
}

fn sdim_str(d: SuperDim) -> String {
    format!("({}|{})", d.even, d.odd)
}

/// The attached connection: a `nabla` block, a `prod` block, or — matching
/// the format's omitted-entries-are-zero convention — the zero connection.
fn connection_of(parsed: &ParsedFile) -> Connection {
    if let Some(n) = &parsed.connection {
        return n.clone();
    }
    if let Some(p) = &parsed.product {
        return Connection::from_product(p);
    }
    Connection::zero(parsed.algebra.field, parsed.algebra.dim)
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Verify(input) => {
            let parsed = load_input(&input)?;
            let rep = parsed.algebra.verify();
            if rep.passed() {
                println!("Lie axioms: pass");
            } else {
                println!("Lie axioms: {}", rep);
                return Ok(1);
            }
            if let Some(p) = &parsed.product {
                let ls = lie2::leftsym::is_left_symmetric(p);
                let compat = lie2::leftsym::is_compatible(p, &parsed.algebra);
                println!(
                    "product: left-symmetric: {}, compatible: {}",
                    if ls.passed() { "pass" } else { "fail" },
                    compat
                );
                if !ls.passed() || !compat {
                    return Ok(1);
                }
            }
            if let Some(n) = &parsed.connection {
                println!(
                    "connection: torsion-free: {}, flat: {}",
                    n.is_torsion_free(&parsed.algebra),
                    n.is_flat(&parsed.algebra)
                );
            }
            if let Some(w) = &parsed.form {
                let s = lie2::forms::classify_form(w);
                println!(
                    "form: {:?}, ō-antisymmetric: {}, non-degenerate: {}, closed: {}",
                    s.class,
                    s.obar_antisymmetric,
                    s.nondegenerate,
                    lie2::forms::is_closed(&parsed.algebra, w).passed()
                );
            }
            Ok(0)
        }
        Command::Invariants(input) => {
            let parsed = load_input(&input)?;
            let g = &parsed.algebra;
            let derived = g.derived_subalgebra();
            let center = g.center();
            let triv = Representation::trivial(g);
            println!("sdim        {}", sdim_str(g.dim));
            println!("derived     {}", sdim_str(g.sdim_of(&derived)?));
            println!("center      {}", sdim_str(g.sdim_of(&center)?));
            println!("XH1(g;K)    {}", cohomology(g, &triv, 1, None).dim);
            println!("XH2(g;K)    {}", cohomology(g, &triv, 2, None).dim);
            Ok(0)
        }
        Command::Cohomology {
            input,
            degree,
            coefficients,
            parity,
        } => {
            let parsed = load_input(&input)?;
            let g = &parsed.algebra;
            let rep = match coefficients.as_str() {
                "trivial" => Representation::trivial(g),
                "adjoint" => Representation::adjoint(g),
                other => {
                    return Err(Error::ConstraintViolation(format!(
                        "unknown coefficients '{}'",
                        other
                    )))
                }
            };
            let parity = match parity.as_str() {
                "all" => None,
                "even" => Some(Parity::Even),
                "odd" => Some(Parity::Odd),
                other => {
                    return Err(Error::ConstraintViolation(format!(
                        "unknown parity '{}'",
                        other
                    )))
                }
            };
            let h = cohomology(g, &rep, degree, parity);
            println!("XZ^{} dim {}", degree, h.cocycles.dim());
            println!("coboundaries dim {}", h.coboundaries.dim());
            println!("XH^{} dim {}", degree, h.dim);
            if degree == 2 {
                let layout =
                    lie2::cohomology::Cochain2Layout::new(g.field, g.dim, rep.mdim);
                for (i, r) in h.representatives.iter().enumerate() {
                    println!("# representative {}", i + 1);
                    let c = layout.unflatten(r);
                    for (p, &(a, b)) in layout.pairs().iter().enumerate() {
                        if !c.alpha[p].iter().all(|&x| x == 0) {
                            println!(
                                "alpha {} {} = {}",
                                g.basis_names[a],
                                g.basis_names[b],
                                c.alpha[p]
                                    .iter()
                                    .map(|&x| g.field.format_el(x))
                                    .collect::<Vec<_>>()
                                    .join(",")
                            );
                        }
                    }
                    for (o, gv) in c.gamma.iter().enumerate() {
                        if !gv.iter().all(|&x| x == 0) {
                            println!(
                                "gamma {} = {}",
                                g.basis_names[g.dim.even + o],
                                gv.iter()
                                    .map(|&x| g.field.format_el(x))
                                    .collect::<Vec<_>>()
                                    .join(",")
                            );
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::LagrangianCohomology { input, kind } => {
            let parsed = load_input(&input)?;
            let g = parsed.algebra.clone();
            let nabla = connection_of(&parsed);
            let kind = match kind.as_str() {
                "even" => ExtKind::Even,
                "odd" => ExtKind::Odd,
                other => {
                    return Err(Error::ConstraintViolation(format!(
                        "unknown kind '{}'",
                        other
                    )))
                }
            };
            let lc = lagrangian_cohomology_for(&g, &nabla, kind);
            println!("XZ2_L dim {}", lc.cocycles.dim());
            println!("coboundaries dim {}", lc.coboundaries.dim());
            println!("XH2_L dim {}", lc.dim);
            for (i, c) in lc.representatives.iter().enumerate() {
                println!("# representative {}", i + 1);
                print!("{}", emit_cochain(&g, kind, c, &lc.module));
            }
            Ok(0)
        }
        Command::Extend(input) => {
            let parsed = load_input(&input)?;
            let g = parsed.algebra.clone();
            let nabla = connection_of(&parsed);
            let kind = parsed.cocycle_kind.unwrap_or(ExtKind::Even);
            let base = FlatLieSuperalgebra::new(g.clone(), nabla)?;
            let dm = DualModule::new(g.dim, kind);
            let layout = lie2::cohomology::Cochain2Layout::new(g.field, g.dim, dm.mdim);
            let mut cocycle = layout.zero_cochain();
            for (i, j, values) in &parsed.alpha_lines {
                let p = layout.pair_pos(*i, *j);
                cocycle.alpha[p] = dm.functional_to_module(values);
            }
            for (i, values) in &parsed.gamma_lines {
                cocycle.gamma[i - g.dim.even] = dm.functional_to_module(values);
            }
            let t = ExtensionTuple {
                base,
                kind,
                cocycle,
            };
            let ext = build_extension(&t)?;
            print!("{}", emit_algebra(&ext.algebra));
            print!("{}", emit_form(&ext.algebra, &ext.form));
            for v in ext.polarization.ideal.basis_vectors() {
                println!("ideal {}", combo(&ext.algebra, &v));
            }
            for v in ext.polarization.complement.basis_vectors() {
                println!("complement {}", combo(&ext.algebra, &v));
            }
            Ok(0)
        }
        Command::Extract(input) => {
            let parsed = load_input(&input)?;
            let g = parsed.algebra.clone();
            let w = parsed
                .form
                .clone()
                .ok_or(Error::QuasiFrobeniusViolation("input needs a form block".into()))?;
            if parsed.ideal.is_empty() {
                return Err(Error::NotAnIdeal);
            }
            let ideal = Subspace::from_vectors(g.field, g.total(), parsed.ideal.clone());
            let complement = if parsed.complement.is_empty() {
                find_complement(&g, &w, &ideal)?
            } else {
                Subspace::from_vectors(g.field, g.total(), parsed.complement.clone())
            };
            let pol = StrongPolarization { ideal, complement };
            let extraction = extract_tuple(&g, &w, &pol)?;
            let base = &extraction.tuple.base;
            print!("{}", emit_algebra(&base.h));
            print!("{}", emit_connection(&base.h, &base.nabla));
            let dm = DualModule::new(base.h.dim, extraction.tuple.kind);
            print!(
                "{}",
                emit_cochain(&base.h, extraction.tuple.kind, &extraction.tuple.cocycle, &dm)
            );
            Ok(0)
        }
        Command::Classify { sdim, field } => {
            let f = parse_field(&field, None)?;
            let (m, n) = sdim
                .split_once('|')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or(Error::ConstraintViolation("expected --sdim m|n".into()))?;
            let classes = catalog::classify_dim2_named(f, SuperDim::new(m, n));
            println!("{} isomorphism classes over GF({})", classes.len(), f.order());
            for (name, count) in classes {
                println!("{}  ({} structure tuples)", name, count);
            }
            Ok(0)
        }
        Command::SearchLss { input, raw } => {
            let parsed = load_input(&input)?;
            let g = &parsed.algebra;
            let mode = if raw {
                lie2::leftsym::UpTo::Raw
            } else {
                lie2::leftsym::UpTo::AutOrbits
            };
            let products = lie2::leftsym::enumerate_compatible_products(g, mode)?;
            println!(
                "# {} compatible left-symmetric product(s){}",
                products.len(),
                if raw { "" } else { " up to automorphisms" }
            );
            for (i, p) in products.iter().enumerate() {
                let alt = lie2::leftsym::is_left_alternative(p).passed();
                println!("# product {} (left-alternative: {})", i + 1, alt);
                print!("{}", emit_product(g, p));
            }
            Ok(0)
        }
        Command::Queerify(input) => {
            let parsed = load_input(&input)?;
            let g = &parsed.algebra;
            if let Some(p) = &parsed.product {
                let q = lie2::leftsym::queerify_product(p)?;
                let lie = lie2::leftsym::lie_of_product(&q)?;
                print!("{}", emit_algebra(&lie));
                print!("{}", emit_product(&lie, &q));
                return Ok(0);
            }
            if g.dim.odd != 0 {
                return Err(Error::NotRestricted(
                    "queerification starts from a purely even algebra".into(),
                ));
            }
            let mut r = lie2::superalg::RestrictedLieAlgebra::abelian(g.field, g.dim.even);
            for i in 0..g.total() {
                for j in (i + 1)..g.total() {
                    r.set_bracket(i, j, g.bracket_basis(i, j).to_vec());
                }
            }
            for (i, v) in &parsed.p2_lines {
                r.set_p2(*i, v.clone());
            }
            let q = r.queerify()?;
            print!("{}", emit_algebra(&q));
            Ok(0)
        }
        Command::Reproduce { table, machine } => {
            let rows = catalog::reproduce::reproduce(&table)?;
            let mut mismatches = 0;
            for r in &rows {
                if machine {
                    println!(
                        "{{\"table\":\"{}\",\"row\":\"{}\",\"status\":\"{}\",\"detail\":\"{}\"}}",
                        escape(&r.table),
                        escape(&r.row),
                        r.status,
                        escape(&r.detail)
                    );
                } else {
                    println!("[{}] {} | {}", r.status, r.row, r.detail);
                }
                if r.status == Status::Mismatch {
                    mismatches += 1;
                }
            }
            if !machine {
                let dev = rows.iter().filter(|r| r.status == Status::Deviation).count();
                println!(
                    "# {} rows: {} mismatches, {} documented deviations",
                    rows.len(),
                    mismatches,
                    dev
                );
            }
            Ok(if mismatches > 0 { 1 } else { 0 })
        }
        Command::Emit(input) => {
            let name = input
                .catalog
                .clone()
                .ok_or(Error::UnknownEntry("--catalog required".into()))?;
            let field = parse_field(&input.field, input.modulus.as_deref())?;
            let eps = match &input.param {
                Some(p) => {
                    let (_, val) = p.split_once('=').ok_or(Error::ConstraintViolation(
                        "expected --param eps=<hex>".into(),
                    ))?;
                    Some(field.parse_el(val).ok_or(Error::ConstraintViolation(
                        "parameter outside the field".into(),
                    ))?)
                }
                None => None,
            };
            let spec = catalog::entry(&name)?;
            print!("{}", catalog::render(spec, field, eps)?);
            Ok(0)
        }
        Command::List => {
            for name in catalog::entry_names() {
                println!("{}", name);
            }
            Ok(0)
        }
    }
}

fn combo(g: &LieSuperalgebra, v: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c == 1 {
            terms.push(g.basis_names[i].clone());
        } else {
            terms.push(format!("{}*{}", g.field.format_el(c), g.basis_names[i]));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// First homogeneous Lagrangian complement of the ideal, in enumeration
/// order.
fn find_complement(
    g: &LieSuperalgebra,
    w: &lie2::forms::BilinearForm,
    ideal: &Subspace,
) -> Result<Subspace, Error> {
    let half = g.total() / 2;
    for s in lie2::forms::homogeneous_subspaces_of_dim(g, half) {
        if w.orthogonal(&s) == s && s.is_complement_of(ideal) {
            return Ok(s);
        }
    }
    Err(Error::QuasiFrobeniusViolation(
        "no homogeneous Lagrangian complement found".into(),
    ))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn main() {
    // die quietly on a closed pipe (e.g. `lie2 list | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            let code = match e {
                Error::Parse { .. } | Error::DegreeOutOfRange(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}
