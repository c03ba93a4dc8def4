//! Static catalog payloads: the 2-dimensional algebras, the worked example
//! algebras, and the full lists of 4-dimensional Lagrangian extensions with
//! their canonical forms and polarizations.
//!
//! Extension entries share a family header carrying sdim, basis, exchange
//! form, and the canonical Lagrangian ideal/complement, and declare only
//! their structure lines.  `$e`, `$f`, `$g`, `$h` stand for ε, 1+ε, ε(1+ε)
//! and (1+ε)⁻¹.

use super::{EntrySpec, Eps};
use crate::lagrange::ExtKind;

// ---- family headers ------------------------------------------------------

const HDR_11: &str = "sdim 1 1\nbasis e1 | e2\n";
const HDR_20: &str = "sdim 2 0\nbasis e1 e2 |\n";
const HDR_02: &str = "sdim 0 2\nbasis | e1 e2\n";

/// T*-extensions of a (1|1) base: basis (e1, e1* | e2, e2*).
const HDR_T_11: &str = "sdim 2 2\nbasis e1 e1* | e2 e2*\n\
form even\nw e1 e1* = 1\nw e2 e2* = 1\n\
ideal e1*\nideal e2*\ncomplement e1\ncomplement e2\n";

/// ΠT*-extensions of a (1|1) base: basis (e1, Π(e2*) | e2, Π(e1*)).
const HDR_P_11: &str = "sdim 2 2\nbasis e1 Pi(e2*) | e2 Pi(e1*)\n\
form odd\nw e1 Pi(e1*) = 1\nw e2 Pi(e2*) = 1\n\
ideal Pi(e1*)\nideal Pi(e2*)\ncomplement e1\ncomplement e2\n";

/// ΠT*-extensions of L^1_{0|2}: basis (Π(e1*), Π(e2*) | e1, e2).
const HDR_P_02: &str = "sdim 2 2\nbasis Pi(e1*) Pi(e2*) | e1 e2\n\
form odd\nw e1 Pi(e1*) = 1\nw e2 Pi(e2*) = 1\n\
ideal Pi(e1*)\nideal Pi(e2*)\ncomplement e1\ncomplement e2\n";

/// ΠT*-extensions of a (2|0) base: basis (e1, e2 | Π(e1*), Π(e2*)).
const HDR_P_20: &str = "sdim 2 2\nbasis e1 e2 | Pi(e1*) Pi(e2*)\n\
form odd\nw e1 Pi(e1*) = 1\nw e2 Pi(e2*) = 1\n\
ideal Pi(e1*)\nideal Pi(e2*)\ncomplement e1\ncomplement e2\n";

/// T*-extensions of a (2|0) base: basis (e1, e1*, e2, e2* | ).
const HDR_T_20: &str = "sdim 4 0\nbasis e1 e1* e2 e2* |\n\
form even\nw e1 e1* = 1\nw e2 e2* = 1\n\
ideal e1*\nideal e2*\ncomplement e1\ncomplement e2\n";

/// T*-extensions of L^1_{0|2}: basis ( | e1, e2, e1*, e2*).
const HDR_T_02: &str = "sdim 0 4\nbasis | e1 e2 e1* e2*\n\
form even\nw e1 e1* = 1\nw e2 e2* = 1\n\
ideal e1*\nideal e2*\ncomplement e1\ncomplement e2\n";

const NO_SUMSQ: &[(&str, &str)] = &[];

macro_rules! entry {
    ($name:expr, $table:expr, $eps:expr, $base:expr, $header:expr, $lines:expr) => {
        EntrySpec {
            name: $name,
            table: $table,
            eps: $eps,
            base: $base,
            header: $header,
            lines: $lines,
            sumsq: NO_SUMSQ,
        }
    };
    ($name:expr, $table:expr, $eps:expr, $base:expr, $header:expr, $lines:expr, $sumsq:expr) => {
        EntrySpec {
            name: $name,
            table: $table,
            eps: $eps,
            base: $base,
            header: $header,
            lines: $lines,
            sumsq: $sumsq,
        }
    };
}

pub static ENTRIES: &[EntrySpec] = &[
    // ---- dimension-2 algebras --------------------------------------------
    entry!("L^1_{0|2}", "classif2", Eps::NoParam, None, HDR_02, ""),
    entry!(
        "L^1_{1|1}",
        "classif2",
        Eps::NoParam,
        None,
        HDR_11,
        "bracket e1 e2 = e2\n"
    ),
    entry!(
        "L^2_{1|1}",
        "classif2",
        Eps::NoParam,
        None,
        HDR_11,
        "squaring e2 = e1\n"
    ),
    entry!("L^3_{1|1}", "classif2", Eps::NoParam, None, HDR_11, ""),
    entry!(
        "L^1_{2|0}",
        "classif2",
        Eps::NoParam,
        None,
        HDR_20,
        "bracket e1 e2 = e2\n"
    ),
    entry!("L^2_{2|0}", "classif2", Eps::NoParam, None, HDR_20, ""),
    // ---- worked example algebras -----------------------------------------
    entry!(
        "ba(1)",
        "sec3.5",
        Eps::NoParam,
        None,
        "sdim 1 2\nbasis e1 | e2 e3\n",
        "bracket e1 e2 = e3\n"
    ),
    entry!(
        "D^1",
        "sec3.5",
        Eps::NoParam,
        None,
        "sdim 3 1\nbasis e1 e2 e3 | e4\n",
        "bracket e2 e3 = e1\nbracket e2 e4 = e4\n"
    ),
    entry!(
        "(2A_{1,1}+2A)^2",
        "sec3.5",
        Eps::NoParam,
        None,
        "sdim 2 2\nbasis e1 e2 | e3 e4\n",
        "bracket e3 e4 = e1\nsquaring e3 = e1\nsquaring e4 = e2\n",
        &[("e3 + e4", "e2")]
    ),
    entry!(
        "(C^1_1+A)",
        "sec3.5",
        Eps::NoParam,
        None,
        "sdim 2 2\nbasis e1 e2 | e3 e4\n\
         form even\nw e1 e2 = 1\nw e3 e4 = 1\n\
         ideal e2\nideal e4\ncomplement e1\ncomplement e3 + e4\n",
        "bracket e1 e2 = e2\nbracket e1 e3 = e3\nbracket e3 e4 = e2\n",
        &[("e3 + e4", "e2")]
    ),
    // ---- ΠT*-extensions of L^1_{0|2} --------------------------------------
    entry!(
        "L^l_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{0|2}", ExtKind::Odd)),
        HDR_P_02,
        "bracket e1 e2 = Pi(e1*)\nsquaring e1 = Pi(e2*)\n"
    ),
    entry!(
        "L^m_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{0|2}", ExtKind::Odd)),
        HDR_P_02,
        "bracket e1 e2 = Pi(e2*)\nsquaring e2 = Pi(e1*)\n"
    ),
    entry!(
        "L^{l+m}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{0|2}", ExtKind::Odd)),
        HDR_P_02,
        "bracket e1 e2 = Pi(e1*) + Pi(e2*)\nsquaring e1 = Pi(e2*)\nsquaring e2 = Pi(e1*)\n",
        // The printed table also lists s(e1+e2) = Π(e1*)+Π(e2*); polarization
        // of the stored basis data gives 0, so the loader reports the clash.
        &[("e1 + e2", "Pi(e1*) + Pi(e2*)")]
    ),
    // ---- T*-extensions of L^1_{1|1} ---------------------------------------
    entry!(
        "L^a_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "~L^a_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2 + e2*\nbracket e1 e2* = e2*\nsquaring e2 = e1*\n"
    ),
    entry!(
        "L^b_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2 + e2*\nsquaring e2 = e1*\n"
    ),
    entry!(
        "L^c_{2|2}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2\nbracket e1 e1* = $e*e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^d_{2|2}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2\nbracket e1 e1* = $e*e1*\nbracket e1 e2* = $f*e2*\nbracket e2 e2* = $e*e1*\n",
        &[("e2 + $l*e2*", "$l*$e*e1*")]
    ),
    // ---- ΠT*-extensions of L^1_{1|1} --------------------------------------
    entry!(
        "L^n_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = e2\nbracket e1 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^o_{2|2}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $e*Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^p_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = e2 + Pi(e1*)\nbracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^q_{2|2}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $e*Pi(e1*)\nbracket e1 Pi(e2*) = $f*Pi(e2*)\nbracket e2 Pi(e2*) = $e*Pi(e1*)\n"
    ),
    // ---- T*-extensions of L^2_{1|1} ---------------------------------------
    entry!(
        "L^e_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e2 e1* = e2*\nsquaring e2 = e1\n"
    ),
    entry!(
        "L^f_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e1* = e2*\nbracket e2 e2* = e1*\nsquaring e2 = e1\n",
        &[("e2 + $l*e2*", "e1 + $l*e1*")]
    ),
    entry!(
        "L^g_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "squaring e2 = e1\n"
    ),
    // ---- ΠT*-extensions of L^2_{1|1} --------------------------------------
    entry!(
        "L^r_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e2 Pi(e1*) = Pi(e2*)\nsquaring e2 = e1\n",
        &[("e2 + $l*Pi(e1*)", "e1 + $l*Pi(e2*)")]
    ),
    entry!(
        "L^s_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = Pi(e1*)\nbracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\n\
         bracket e2 Pi(e1*) = Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*)\nsquaring e2 = e1 + Pi(e2*)\n",
        &[("e2 + $l*Pi(e1*)", "e1 + Pi(e2*) + $l*Pi(e2*)")]
    ),
    // ---- T*-extensions of L^3_{1|1} ---------------------------------------
    entry!(
        "L^h_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e1* = e1*\n"
    ),
    entry!(
        "L^i_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e2* = e1*\n",
        &[("e2 + $l*e2*", "$l*e1*")]
    ),
    entry!(
        "L^j_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Even)),
        HDR_T_11,
        ""
    ),
    entry!(
        "L^k_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Even)),
        HDR_T_11,
        "bracket e1 e2 = e2*\nsquaring e2 = e1*\n"
    ),
    // ---- ΠT*-extensions of L^3_{1|1} --------------------------------------
    entry!(
        "L^t_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 Pi(e1*) = Pi(e1*)\n"
    ),
    entry!(
        "L^u_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*)\n"
    ),
    entry!(
        "L^v_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = Pi(e1*)\nbracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*)\n"
    ),
    entry!(
        "L^w_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^3_{1|1}", ExtKind::Odd)),
        HDR_P_11,
        "bracket e1 e2 = Pi(e1*)\n"
    ),
    // ---- ΠT*-extensions of L^1_{2|0} --------------------------------------
    entry!(
        "L^x_{2|2}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $e*Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^y_{2|2}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = $e*Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^z_{2|2}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e2*) = $e*Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^{aa}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^{bb}_{2|2}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $f*Pi(e1*)\nbracket e1 Pi(e2*) = $e*Pi(e2*)\n\
         bracket e2 Pi(e1*) = Pi(e2*)\nbracket e2 Pi(e2*) = $f*Pi(e1*)\n"
    ),
    entry!(
        "L^{cc}_{2|2}",
        "sec4.2",
        Eps::Ne1,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $f*Pi(e1*)\nbracket e1 Pi(e2*) = $e*Pi(e2*)\nbracket e2 Pi(e2*) = $f*Pi(e1*)\n"
    ),
    entry!(
        "L^{dd}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = Pi(e1*) + Pi(e2*)\nbracket e2 Pi(e1*) = Pi(e1*)\nbracket e2 Pi(e2*) = Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^{ee}_{2|2}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = Pi(e1*) + Pi(e2*)\nbracket e2 Pi(e1*) = Pi(e1*) + $e*Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^{ff}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = Pi(e1*) + Pi(e2*)\nbracket e1 Pi(e2*) = Pi(e1*)\n\
         bracket e2 Pi(e1*) = Pi(e1*)\nbracket e2 Pi(e2*) = Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^{hh}_{2|2}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\nbracket e1 Pi(e1*) = $f*Pi(e1*) + Pi(e2*)\nbracket e2 Pi(e1*) = Pi(e1*) + $h*Pi(e2*)\n\
         bracket e2 Pi(e2*) = $f*Pi(e1*) + Pi(e2*)\nbracket e1 Pi(e2*) = $g*Pi(e1*) + $e*Pi(e2*)\n"
    ),
    entry!(
        "L^{ii}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 e2 = e2\n"
    ),
    // ---- ΠT*-extensions of L^2_{2|0} --------------------------------------
    entry!(
        "L^{ll}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 Pi(e1*) = Pi(e1*)\n"
    ),
    entry!(
        "L^{nn}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 Pi(e2*) = Pi(e1*)\n"
    ),
    entry!(
        "L^{pp}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 Pi(e1*) = Pi(e1*)\nbracket e2 Pi(e2*) = Pi(e2*)\n"
    ),
    entry!(
        "L^{rr}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*)\n"
    ),
    entry!(
        "L^{tt}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        "bracket e1 Pi(e1*) = Pi(e1*)\nbracket e1 Pi(e2*) = Pi(e2*)\nbracket e2 Pi(e1*) = Pi(e2*)\nbracket e2 Pi(e2*) = Pi(e1*) + Pi(e2*)\n"
    ),
    entry!(
        "L^{xx}_{2|2}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Odd)),
        HDR_P_20,
        ""
    ),
    // ---- T*-extensions of L^1_{0|2} ----------------------------------------
    entry!(
        "L^a_{0|4}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{0|2}", ExtKind::Even)),
        HDR_T_02,
        ""
    ),
    // ---- T*-extensions of L^1_{2|0} ----------------------------------------
    entry!(
        "L^a_{4|0}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e2*\nbracket e1 e1* = $e*e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^b_{4|0}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = $e*e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^c_{4|0}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e2*\nbracket e1 e1* = e1*\nbracket e1 e2* = $e*e1* + e2*\n"
    ),
    entry!(
        "L^d_{4|0}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = e1*\nbracket e1 e2* = $e*e1* + e2*\n"
    ),
    entry!(
        "L^e_{4|0}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e2*\nbracket e1 e2* = $e*e1* + e2*\n"
    ),
    entry!(
        "L^f_{4|0}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e2* = $e*e1* + e2*\n"
    ),
    entry!(
        "L^g_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e1*\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^h_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e2*\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^{g+h}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e1* + e2*\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^i_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\n"
    ),
    entry!(
        "L^j_{4|0}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = $f*e1*\nbracket e1 e2* = $e*e2*\nbracket e2 e1* = e2*\nbracket e2 e2* = $f*e1*\n"
    ),
    entry!(
        "L^k_{4|0}",
        "sec4.2",
        Eps::Any,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = $f*e1*\nbracket e1 e2* = $e*e2*\nbracket e2 e2* = $f*e1*\n"
    ),
    entry!(
        "L^l_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = e1* + e2*\nbracket e2 e1* = e1*\nbracket e2 e2* = e1* + e2*\n"
    ),
    entry!(
        "L^m_{4|0}",
        "sec4.2",
        Eps::Ne0,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = e1* + e2*\nbracket e2 e1* = e1* + $e*e2*\nbracket e2 e2* = e1* + e2*\n"
    ),
    entry!(
        "L^n_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = e1* + e2*\nbracket e1 e2* = e1*\nbracket e2 e1* = e1*\nbracket e2 e2* = e1* + e2*\n"
    ),
    entry!(
        "L^p_{4|0}",
        "sec4.2",
        Eps::Ne01,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2\nbracket e1 e1* = $f*e1* + e2*\nbracket e2 e1* = e1* + $h*e2*\nbracket e2 e2* = $f*e1* + e2*\nbracket e1 e2* = $g*e1* + $e*e2*\n"
    ),
    entry!(
        "L^q_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e1*\n"
    ),
    entry!(
        "L^r_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e2*\n"
    ),
    entry!(
        "L^{q+r}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^1_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2 + e1* + e2*\n"
    ),
    // ---- T*-extensions of L^2_{2|0} ----------------------------------------
    entry!(
        "L^s_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e1*\n"
    ),
    entry!(
        "L^t_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2*\n"
    ),
    entry!(
        "L^{s+t}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e1* + e2*\n"
    ),
    entry!(
        "L^u_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e1* = e1*\n"
    ),
    entry!(
        "L^v_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2*\nbracket e1 e1* = e1*\n"
    ),
    entry!(
        "L^w_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2* = e1*\n"
    ),
    entry!(
        "L^x_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2*\nbracket e1 e2* = e1*\n"
    ),
    entry!(
        "L^y_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e1* = e1*\nbracket e2 e2* = e2*\n"
    ),
    entry!(
        "L^z_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e2*\nbracket e1 e1* = e1*\nbracket e2 e2* = e2*\n"
    ),
    entry!(
        "L^{aa}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e2* = e1*\n"
    ),
    entry!(
        "L^{bb}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e1*\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e2* = e1*\n"
    ),
    entry!(
        "L^{cc}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e1* = e2*\nbracket e2 e2* = e1* + e2*\n"
    ),
    entry!(
        "L^{dd}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        "bracket e1 e2 = e1*\nbracket e1 e1* = e1*\nbracket e1 e2* = e2*\nbracket e2 e1* = e2*\nbracket e2 e2* = e1* + e2*\n"
    ),
    entry!(
        "L^{gg}_{4|0}",
        "sec4.2",
        Eps::NoParam,
        Some(("L^2_{2|0}", ExtKind::Even)),
        HDR_T_20,
        ""
    ),
];
