//! Line-based text format for algebras and the attached blocks.
//!
//! ```text
//! # comment
//! field 2^1 0x3
//! sdim 1 1
//! basis e1 | e2
//! bracket e1 e2 = e2
//! squaring e2 = 0
//! ```
//!
//! Optional blocks after the algebra: `prod ei ej = v` (left-symmetric
//! product), `nabla ei ej = v` (connection, the value of ∇_{e_i} e_j),
//! `form even|odd` followed by `w ei ej = c`, cochain lines
//! `alpha ei ej = v*` / `gamma ei = v*` over the dual basis (`e1*` or
//! `Pi(e1*)` names), `p2 ei = v` (2-structure of a restricted Lie algebra),
//! and `ideal v` / `complement v` subspace generators.
//!
//! Right-hand sides are linear combinations `c*ei + ej` with coefficients
//! in the hexadecimal element encoding; omitted brackets and squarings
//! default to zero and the bracket table is completed by symmetry.

use crate::connections::Connection;
use crate::field::Field;
use crate::forms::BilinearForm;
use crate::lagrange::ExtKind;
use crate::leftsym::Product;
use crate::linalg::Matrix;
use crate::superalg::{vis_zero, vzero, LieSuperalgebra, Parity, SuperDim};
use crate::Error;

#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub field: Field,
    pub algebra: LieSuperalgebra,
    pub product: Option<Product>,
    pub connection: Option<Connection>,
    pub form: Option<BilinearForm>,
    /// raw cochain data: functional values over the h-basis
    pub alpha_lines: Vec<(usize, usize, Vec<u32>)>,
    pub gamma_lines: Vec<(usize, Vec<u32>)>,
    pub cocycle_kind: Option<ExtKind>,
    pub ideal: Vec<Vec<u32>>,
    pub complement: Vec<Vec<u32>>,
    pub p2_lines: Vec<(usize, Vec<u32>)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a linear combination against a name -> index map.
fn parse_combo(
    field: Field,
    names: &[(String, usize)],
    dim: usize,
    rhs: &str,
    lineno: usize,
) -> Result<Vec<u32>, Error> {
    let mut v = vzero(dim);
    let rhs = rhs.trim();
    if rhs == "0" {
        return Ok(v);
    }
    for term in rhs.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(err(lineno, "empty term in linear combination"));
        }
        let lookup = |name: &str| names.iter().find(|(n, _)| n == name).map(|&(_, i)| i);
        // term = (hex '*')* name; coefficients chain multiplicatively
        let mut coeff = 1u32;
        let mut rest = term;
        let idx = loop {
            if let Some(i) = lookup(rest) {
                break i;
            }
            match rest.split_once('*') {
                Some((pre, post)) if !post.is_empty() => match field.parse_el(pre) {
                    Some(c) => {
                        coeff = field.mul(coeff, c);
                        rest = post;
                    }
                    None => {
                        return Err(err(lineno, format!("cannot parse term '{}'", term)));
                    }
                },
                _ => {
                    return Err(err(lineno, format!("undeclared basis symbol '{}'", term)));
                }
            }
        };
        v[idx] ^= coeff;
    }
    Ok(v)
}

pub fn parse_file(text: &str) -> Result<ParsedFile, Error> {
    let mut field: Option<Field> = None;
    let mut sdim: Option<SuperDim> = None;
    let mut names: Vec<(String, usize)> = Vec::new();
    let mut dual_names: Vec<(String, usize)> = Vec::new();
    let mut pi_dual_names: Vec<(String, usize)> = Vec::new();
    let mut algebra: Option<LieSuperalgebra> = None;
    let mut product: Option<Product> = None;
    let mut connection: Option<Connection> = None;
    let mut form: Option<(Parity, Matrix)> = None;
    let mut alpha_lines = Vec::new();
    let mut gamma_lines = Vec::new();
    let mut cocycle_kind: Option<ExtKind> = None;
    let mut ideal = Vec::new();
    let mut complement = Vec::new();
    let mut p2_lines = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        match keyword {
            "field" => {
                // field 2^k 0xM
                if rest.len() != 2 || !rest[0].starts_with("2^") {
                    return Err(err(lineno, "expected 'field 2^k 0x<modulus>'"));
                }
                let k: u32 = rest[0][2..]
                    .parse()
                    .map_err(|_| err(lineno, "bad extension degree"))?;
                let m = rest[1].strip_prefix("0x").unwrap_or(rest[1]);
                let modulus =
                    u32::from_str_radix(m, 16).map_err(|_| err(lineno, "bad modulus"))?;
                field = Some(Field::new(k, modulus).map_err(|e| err(lineno, e.to_string()))?);
            }
            "sdim" => {
                if rest.len() != 2 {
                    return Err(err(lineno, "expected 'sdim m n'"));
                }
                let m: usize = rest[0].parse().map_err(|_| err(lineno, "bad even dim"))?;
                let n: usize = rest[1].parse().map_err(|_| err(lineno, "bad odd dim"))?;
                sdim = Some(SuperDim::new(m, n));
            }
            "basis" => {
                let f = field.ok_or(err(lineno, "field must come before basis"))?;
                let d = sdim.ok_or(err(lineno, "sdim must come before basis"))?;
                let joined = rest.join(" ");
                let (ev, od) = match joined.split_once('|') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (joined.trim(), ""),
                };
                let mut list: Vec<String> =
                    ev.split_whitespace().map(|s| s.to_string()).collect();
                let evn = list.len();
                list.extend(od.split_whitespace().map(|s| s.to_string()));
                if evn != d.even || list.len() != d.total() {
                    return Err(err(lineno, "basis does not match sdim"));
                }
                names = list
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (n.clone(), i))
                    .collect();
                dual_names = list
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (format!("{}*", n), i))
                    .collect();
                pi_dual_names = list
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (format!("Pi({}*)", n), i))
                    .collect();
                let mut g = LieSuperalgebra::abelian(f, d);
                g.basis_names = list;
                algebra = Some(g);
            }
            "bracket" | "squaring" | "prod" | "nabla" | "p2" => {
                let g = algebra
                    .as_mut()
                    .ok_or(err(lineno, "basis must come before structure lines"))?;
                let eq = rest
                    .iter()
                    .position(|&w| w == "=")
                    .ok_or(err(lineno, "missing '='"))?;
                let args = &rest[..eq];
                let rhs = rest[eq + 1..].join(" ");
                let f = g.field;
                let t = g.total();
                let idx = |name: &str| -> Result<usize, Error> {
                    names
                        .iter()
                        .find(|(n, _)| n == name)
                        .map(|&(_, i)| i)
                        .ok_or(err(lineno, format!("undeclared basis symbol '{}'", name)))
                };
                let v = parse_combo(f, &names, t, &rhs, lineno)?;
                match keyword {
                    "bracket" => {
                        if args.len() != 2 {
                            return Err(err(lineno, "expected 'bracket ei ej = v'"));
                        }
                        let (i, j) = (idx(args[0])?, idx(args[1])?);
                        if i == j {
                            return Err(err(lineno, "diagonal brackets vanish"));
                        }
                        g.set_bracket(i, j, v);
                    }
                    "squaring" => {
                        if args.len() != 1 {
                            return Err(err(lineno, "expected 'squaring ei = v'"));
                        }
                        let i = idx(args[0])?;
                        if g.parity(i) != Parity::Odd {
                            return Err(err(lineno, "squaring is defined on odd basis vectors"));
                        }
                        g.set_squaring(i, v);
                    }
                    "prod" => {
                        if args.len() != 2 {
                            return Err(err(lineno, "expected 'prod ei ej = v'"));
                        }
                        let (i, j) = (idx(args[0])?, idx(args[1])?);
                        product
                            .get_or_insert_with(|| Product::zero(f, g.dim))
                            .set(i, j, v);
                    }
                    "nabla" => {
                        if args.len() != 2 {
                            return Err(err(lineno, "expected 'nabla ei ej = v'"));
                        }
                        let (i, j) = (idx(args[0])?, idx(args[1])?);
                        connection
                            .get_or_insert_with(|| Connection::zero(f, g.dim))
                            .set_entry(i, j, &v);
                    }
                    "p2" => {
                        if args.len() != 1 {
                            return Err(err(lineno, "expected 'p2 ei = v'"));
                        }
                        let i = idx(args[0])?;
                        p2_lines.push((i, v));
                    }
                    _ => unreachable!(),
                }
            }
            "form" => {
                let g = algebra
                    .as_ref()
                    .ok_or(err(lineno, "basis must come before the form"))?;
                let p = match rest.first() {
                    Some(&"even") => Parity::Even,
                    Some(&"odd") => Parity::Odd,
                    _ => return Err(err(lineno, "expected 'form even' or 'form odd'")),
                };
                form = Some((p, Matrix::zeros(g.field, g.total(), g.total())));
            }
            "w" => {
                let g = algebra.as_ref().ok_or(err(lineno, "form before w lines"))?;
                let Some((_, gram)) = form.as_mut() else {
                    return Err(err(lineno, "w line outside a form block"));
                };
                let eq = rest
                    .iter()
                    .position(|&x| x == "=")
                    .ok_or(err(lineno, "missing '='"))?;
                if eq != 2 || rest.len() != 4 {
                    return Err(err(lineno, "expected 'w ei ej = c'"));
                }
                let idx = |name: &str| -> Result<usize, Error> {
                    names
                        .iter()
                        .find(|(n, _)| n == name)
                        .map(|&(_, i)| i)
                        .ok_or(err(lineno, format!("undeclared basis symbol '{}'", name)))
                };
                let (i, j) = (idx(rest[0])?, idx(rest[1])?);
                let c = g
                    .field
                    .parse_el(rest[3])
                    .ok_or(err(lineno, "bad coefficient"))?;
                gram[(i, j)] = c;
                gram[(j, i)] = c; // ō-antisymmetric completion
            }
            "alpha" | "gamma" => {
                let g = algebra
                    .as_ref()
                    .ok_or(err(lineno, "basis must come before cochain lines"))?;
                let eq = rest
                    .iter()
                    .position(|&x| x == "=")
                    .ok_or(err(lineno, "missing '='"))?;
                let args = &rest[..eq];
                let rhs = rest[eq + 1..].join(" ");
                let idx = |name: &str| -> Result<usize, Error> {
                    names
                        .iter()
                        .find(|(n, _)| n == name)
                        .map(|&(_, i)| i)
                        .ok_or(err(lineno, format!("undeclared basis symbol '{}'", name)))
                };
                // decide even/odd dual from the symbols used
                let (v, kind) = if rhs.trim() == "0" {
                    (vzero(g.total()), None)
                } else if rhs.contains("Pi(") {
                    (
                        parse_combo(g.field, &pi_dual_names, g.total(), &rhs, lineno)?,
                        Some(ExtKind::Odd),
                    )
                } else {
                    (
                        parse_combo(g.field, &dual_names, g.total(), &rhs, lineno)?,
                        Some(ExtKind::Even),
                    )
                };
                if let Some(k) = kind {
                    match cocycle_kind {
                        None => cocycle_kind = Some(k),
                        Some(prev) if prev != k => {
                            return Err(err(lineno, "mixed dual kinds in cochain lines"))
                        }
                        _ => {}
                    }
                }
                if keyword == "alpha" {
                    if args.len() != 2 {
                        return Err(err(lineno, "expected 'alpha ei ej = v'"));
                    }
                    alpha_lines.push((idx(args[0])?, idx(args[1])?, v));
                } else {
                    if args.len() != 1 {
                        return Err(err(lineno, "expected 'gamma ei = v'"));
                    }
                    gamma_lines.push((idx(args[0])?, v));
                }
            }
            "ideal" | "complement" => {
                let g = algebra
                    .as_ref()
                    .ok_or(err(lineno, "basis must come before subspace lines"))?;
                let rhs = rest.join(" ");
                let v = parse_combo(g.field, &names, g.total(), &rhs, lineno)?;
                if keyword == "ideal" {
                    ideal.push(v);
                } else {
                    complement.push(v);
                }
            }
            "name" => {
                if let Some(g) = algebra.as_mut() {
                    g.name = Some(rest.join(" "));
                }
            }
            other => return Err(err(lineno, format!("unknown keyword '{}'", other))),
        }
    }
    let algebra = algebra.ok_or(err(0, "file contains no algebra"))?;
    let form = form.map(|(p, gram)| {
        let _ = p;
        BilinearForm::new(algebra.dim, gram)
    });
    Ok(ParsedFile {
        field: algebra.field,
        algebra,
        product,
        connection,
        form,
        alpha_lines,
        gamma_lines,
        cocycle_kind,
        ideal,
        complement,
        p2_lines,
    })
}

/// Parses a linear combination against an algebra's own basis names.
pub fn parse_vector(g: &LieSuperalgebra, s: &str) -> Result<Vec<u32>, Error> {
    let names: Vec<(String, usize)> = g
        .basis_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    parse_combo(g.field, &names, g.total(), s, 0)
}

fn fmt_combo(field: Field, names: &[String], v: &[u32]) -> String {
    if vis_zero(v) {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c == 1 {
            terms.push(names[i].clone());
        } else {
            terms.push(format!("{}*{}", field.format_el(c), names[i]));
        }
    }
    terms.join(" + ")
}

/// Canonical emission: field header, sdim, basis, nonzero brackets in
/// lexicographic order, all odd squarings.
pub fn emit_algebra(g: &LieSuperalgebra) -> String {
    let mut out = String::new();
    if let Some(n) = &g.name {
        out.push_str(&format!("name {}\n", n));
    }
    out.push_str(&g.field.header());
    out.push('\n');
    out.push_str(&format!("sdim {} {}\n", g.dim.even, g.dim.odd));
    let ev = g.basis_names[..g.dim.even].join(" ");
    let od = g.basis_names[g.dim.even..].join(" ");
    out.push_str(&format!("basis {} | {}\n", ev, od));
    for i in 0..g.total() {
        for j in (i + 1)..g.total() {
            if !vis_zero(g.bracket_basis(i, j)) {
                out.push_str(&format!(
                    "bracket {} {} = {}\n",
                    g.basis_names[i],
                    g.basis_names[j],
                    fmt_combo(g.field, &g.basis_names, g.bracket_basis(i, j))
                ));
            }
        }
    }
    for i in g.odd_indices() {
        out.push_str(&format!(
            "squaring {} = {}\n",
            g.basis_names[i],
            fmt_combo(g.field, &g.basis_names, g.sq_basis(i))
        ));
    }
    out
}

pub fn emit_product(g: &LieSuperalgebra, p: &Product) -> String {
    let mut out = String::new();
    for i in 0..g.total() {
        for j in 0..g.total() {
            if !vis_zero(p.basis_product(i, j)) {
                out.push_str(&format!(
                    "prod {} {} = {}\n",
                    g.basis_names[i],
                    g.basis_names[j],
                    fmt_combo(g.field, &g.basis_names, p.basis_product(i, j))
                ));
            }
        }
    }
    out
}

pub fn emit_connection(g: &LieSuperalgebra, n: &Connection) -> String {
    let mut out = String::new();
    for i in 0..g.total() {
        for j in 0..g.total() {
            let col = n.matrix(i).col(j);
            if !vis_zero(&col) {
                out.push_str(&format!(
                    "nabla {} {} = {}\n",
                    g.basis_names[i],
                    g.basis_names[j],
                    fmt_combo(g.field, &g.basis_names, &col)
                ));
            }
        }
    }
    out
}

pub fn emit_form(g: &LieSuperalgebra, w: &BilinearForm) -> String {
    let mut out = String::new();
    let parity = match w.parity() {
        crate::forms::FormClass::Periplectic => "odd",
        _ => "even",
    };
    out.push_str(&format!("form {}\n", parity));
    for i in 0..g.total() {
        for j in i..g.total() {
            if w.gram[(i, j)] != 0 {
                out.push_str(&format!(
                    "w {} {} = {}\n",
                    g.basis_names[i],
                    g.basis_names[j],
                    g.field.format_el(w.gram[(i, j)])
                ));
            }
        }
    }
    out
}

/// Emits cochain lines over the dual basis names.
pub fn emit_cochain(
    g: &LieSuperalgebra,
    kind: ExtKind,
    c: &crate::cohomology::Cochain2,
    dm: &crate::lagrange::DualModule,
) -> String {
    let dual_name = |v: usize| {
        let star = format!("{}*", g.basis_names[dm.h_index(v)]);
        match kind {
            ExtKind::Even => star,
            ExtKind::Odd => format!("Pi({})", star),
        }
    };
    let dnames: Vec<String> = (0..g.total()).map(dual_name).collect();
    let mut out = String::new();
    for (p, &(i, j)) in c.layout.pairs().iter().enumerate() {
        if !vis_zero(&c.alpha[p]) {
            out.push_str(&format!(
                "alpha {} {} = {}\n",
                g.basis_names[i],
                g.basis_names[j],
                fmt_combo(g.field, &dnames, &c.alpha[p])
            ));
        }
    }
    for (o, gv) in c.gamma.iter().enumerate() {
        if !vis_zero(gv) {
            out.push_str(&format!(
                "gamma {} = {}\n",
                g.basis_names[g.dim.even + o],
                fmt_combo(g.field, &dnames, gv)
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const L1_11: &str = "\
field 2^1 0x3
sdim 1 1
basis e1 | e2
bracket e1 e2 = e2
squaring e2 = 0
";

    #[test]
    fn parse_the_five_line_example() {
        let p = parse_file(L1_11).unwrap();
        assert_eq!(p.algebra.dim, SuperDim::new(1, 1));
        assert_eq!(p.algebra.bracket_basis(0, 1), &[0, 1]);
        assert!(p.algebra.verify().passed());
    }

    #[test]
    fn emit_parse_round_trip() {
        let p = parse_file(L1_11).unwrap();
        let emitted = emit_algebra(&p.algebra);
        assert_eq!(emitted, L1_11);
        let p2 = parse_file(&emitted).unwrap();
        assert_eq!(p2.algebra, p.algebra);
    }

    #[test]
    fn squaring_violation_is_caught_after_parse() {
        let text = "\
field 2^1 0x3
sdim 1 1
basis e1 | e2
bracket e1 e2 = e2
squaring e2 = e1
";
        let p = parse_file(text).unwrap();
        let rep = p.algebra.verify();
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.contains("squaring Jacobi")));
    }

    #[test]
    fn undeclared_symbol_is_a_parse_error() {
        let text = "\
field 2^1 0x3
sdim 1 1
basis e1 | e2
bracket e1 e3 = e2
";
        match parse_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn parses_gf4_coefficients_and_blocks() {
        let text = "\
field 2^2 0x7
sdim 1 1
basis e1 | e2
bracket e1 e2 = 2*e2
nabla e1 e1 = 3*e1
form even
w e1 e1* = 1 # ignored comment
";
        // 'e1*' is not declared here, so the w line must fail
        assert!(parse_file(text).is_err());
        let ok = "\
field 2^2 0x7
sdim 1 1
basis e1 | e2
bracket e1 e2 = 2*e2
nabla e1 e1 = 3*e1
prod e2 e2 = e1
alpha e1 e2 = e2* + 2*e1*
gamma e2 = e1*
";
        let p = parse_file(ok).unwrap();
        assert_eq!(p.algebra.bracket_basis(0, 1), &[0, 2]);
        assert_eq!(p.connection.unwrap().matrix(0).col(0), vec![3, 0]);
        assert_eq!(p.product.unwrap().basis_product(1, 1), &[1, 0]);
        assert_eq!(p.alpha_lines[0].2, vec![2, 1]);
        assert_eq!(p.cocycle_kind, Some(ExtKind::Even));
    }

    #[test]
    fn pi_dual_cochains() {
        let text = "\
field 2^1 0x3
sdim 0 2
basis | e1 e2
alpha e1 e2 = Pi(e1*)
gamma e1 = Pi(e2*)
";
        let p = parse_file(text).unwrap();
        assert_eq!(p.cocycle_kind, Some(ExtKind::Odd));
        assert_eq!(p.alpha_lines[0].2, vec![1, 0]);
        assert_eq!(p.gamma_lines[0].1, vec![0, 1]);
    }
}
