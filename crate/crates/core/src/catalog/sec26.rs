//! Classification tables of the nonzero left-symmetric products compatible
//! with each 2-dimensional Lie superalgebra, with left-alternativity flags.
//! Rows with ε-conditions instantiate one product per admissible value.

use super::Eps;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alt {
    Yes,
    No,
    /// left-alternative exactly when ε = 1
    IffEps1,
    /// left-alternative exactly when ε = 0
    IffEps0,
}

impl Alt {
    pub fn expected(&self, eps: Option<u32>) -> bool {
        match self {
            Alt::Yes => true,
            Alt::No => false,
            Alt::IffEps1 => eps == Some(1),
            Alt::IffEps0 => eps == Some(0),
        }
    }
}

pub struct ProductRow {
    pub base: &'static str,
    /// `prod` lines, with the same $-tokens as the catalog payloads
    pub lines: &'static str,
    pub eps: Eps,
    pub alt: Alt,
}

const PR: fn(&'static str, &'static str, Eps, Alt) -> ProductRow =
    |base, lines, eps, alt| ProductRow {
        base,
        lines,
        eps,
        alt,
    };

pub fn rows() -> Vec<ProductRow> {
    vec![
        // ---- L^1_{1|1} ----
        PR("L^1_{1|1}", "prod e1 e2 = e2\n", Eps::NoParam, Alt::No),
        PR(
            "L^1_{1|1}",
            "prod e1 e1 = $e*e1\nprod e1 e2 = e2\n",
            Eps::Ne01,
            Alt::No,
        ),
        PR(
            "L^1_{1|1}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        PR(
            "L^1_{1|1}",
            "prod e1 e1 = $e*e1\nprod e1 e2 = $f*e2\nprod e2 e1 = $e*e2\n",
            Eps::Ne0,
            Alt::IffEps1,
        ),
        // ---- L^2_{1|1} ----
        PR("L^2_{1|1}", "prod e2 e2 = e1\n", Eps::NoParam, Alt::Yes),
        PR(
            "L^2_{1|1}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\nprod e2 e1 = e2\nprod e2 e2 = e1\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        // ---- L^3_{1|1} ----
        PR("L^3_{1|1}", "prod e1 e1 = e1\n", Eps::NoParam, Alt::Yes),
        PR(
            "L^3_{1|1}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\nprod e2 e1 = e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        // ---- L^1_{2|0} ----
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = $e*e1\nprod e1 e2 = e2\n",
            Eps::Ne01,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = e1 + $e*e2\nprod e1 e2 = e2\n",
            Eps::Ne0,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = $e*e2\nprod e1 e2 = e2\n",
            Eps::Any,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = $f*e1\nprod e1 e2 = $e*e2\nprod e2 e1 = $f*e2\nprod e2 e2 = e1\n",
            Eps::Any,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = $f*e1\nprod e1 e2 = $e*e2\nprod e2 e1 = $f*e2\n",
            Eps::Any,
            Alt::IffEps0,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = e1\nprod e1 e2 = e1\nprod e2 e1 = e1 + e2\nprod e2 e2 = e2\n",
            Eps::NoParam,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = e1\nprod e1 e2 = e1\nprod e2 e1 = e1 + e2\nprod e2 e2 = $e*e1 + e2\n",
            Eps::Ne0,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = e1 + e2\nprod e1 e2 = e1\nprod e2 e1 = e1 + e2\nprod e2 e2 = e2\n",
            Eps::NoParam,
            Alt::No,
        ),
        PR(
            "L^1_{2|0}",
            "prod e1 e1 = $f*e1 + $g*e2\nprod e1 e2 = e1 + $e*e2\nprod e2 e1 = e1 + $f*e2\nprod e2 e2 = $h*e1 + e2\n",
            Eps::Ne01,
            Alt::No,
        ),
        // ---- L^2_{2|0} ----
        PR("L^2_{2|0}", "prod e1 e1 = e1\n", Eps::NoParam, Alt::Yes),
        PR("L^2_{2|0}", "prod e1 e1 = e2\n", Eps::NoParam, Alt::Yes),
        PR(
            "L^2_{2|0}",
            "prod e1 e1 = e1\nprod e2 e2 = e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        PR(
            "L^2_{2|0}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\nprod e2 e1 = e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
        PR(
            "L^2_{2|0}",
            "prod e1 e1 = e1\nprod e1 e2 = e2\nprod e2 e1 = e2\nprod e2 e2 = e1 + e2\n",
            Eps::NoParam,
            Alt::Yes,
        ),
    ]
}
