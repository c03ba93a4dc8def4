//! Claimed isomorphisms and symplectomorphisms between the 4-dimensional
//! extensions, with their parameter correspondences.  Claims marked `iff`
//! are tested in both directions: a witness must exist exactly on the
//! stated parameter locus.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    Iso,
    /// form-preserving isomorphism with respect to the canonical forms
    Symplecto,
}

/// Which ε bindings of the left entry are claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extra {
    /// all admissible ε of the left entry
    Any,
    /// exactly ε = 0
    Eq0,
    /// exactly ε = 1
    Eq1,
    /// all admissible ε, witness expected exactly when ε ≠ 1
    IffNe1,
}

impl Extra {
    pub fn selects(&self, eps: u32) -> bool {
        match self {
            Extra::Any | Extra::IffNe1 => true,
            Extra::Eq0 => eps == 0,
            Extra::Eq1 => eps == 1,
        }
    }

    pub fn expects_witness(&self, eps: u32) -> bool {
        match self {
            Extra::IffNe1 => eps != 1,
            _ => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BothRel {
    /// witness iff ε = ν
    Equal,
    /// witness iff εν = 1
    ProductOne,
}

/// Parameter shape of a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    /// no parameters on either side
    None,
    /// left entry has the parameter, right entry none
    Lhs(Extra),
    /// left entry parameterized as in `Extra`, right entry pinned at a value
    LhsRhsPinned(Extra, u32),
    /// both sides pinned at fixed values
    PinnedBoth(u32, u32),
    /// both sides range over their admissible values; witness expected
    /// exactly when the relation holds
    BothIff(BothRel),
}

pub struct Claim {
    pub kind: ClaimKind,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub rel: Rel,
}

const C: fn(ClaimKind, &'static str, &'static str, Rel) -> Claim = |kind, lhs, rhs, rel| Claim {
    kind,
    lhs,
    rhs,
    rel,
};

pub fn claims() -> Vec<Claim> {
    use BothRel::*;
    use ClaimKind::*;
    use Extra::*;
    vec![
        // ---- superdimension (2|2), isomorphisms ----
        C(Iso, "L^{tt}_{2|2}", "L^{pp}_{2|2}", Rel::None),
        C(Iso, "L^f_{2|2}", "L^s_{2|2}", Rel::None),
        C(Iso, "L^q_{2|2}", "L^{cc}_{2|2}", Rel::BothIff(ProductOne)),
        C(Iso, "L^{bb}_{2|2}", "L^{dd}_{2|2}", Rel::Lhs(IffNe1)),
        C(Iso, "L^{dd}_{2|2}", "L^{ff}_{2|2}", Rel::None),
        C(Iso, "L^u_{2|2}", "L^v_{2|2}", Rel::None),
        C(Iso, "L^{ee}_{2|2}", "L^v_{2|2}", Rel::Lhs(Eq1)),
        C(Iso, "L^{hh}_{2|2}", "L^u_{2|2}", Rel::Lhs(Any)),
        C(Iso, "L^l_{2|2}", "L^r_{2|2}", Rel::None),
        C(Iso, "L^d_{2|2}", "L^i_{2|2}", Rel::Lhs(Eq1)),
        C(Iso, "L^x_{2|2}", "L^o_{2|2}", Rel::BothIff(Equal)),
        C(Iso, "L^y_{2|2}", "L^p_{2|2}", Rel::Lhs(Any)),
        // ---- superdimension (2|2), symplectomorphisms ----
        C(Symplecto, "L^q_{2|2}", "L^{rr}_{2|2}", Rel::Lhs(Eq1)),
        C(Symplecto, "L^{ll}_{2|2}", "L^t_{2|2}", Rel::None),
        C(Symplecto, "L^{nn}_{2|2}", "L^w_{2|2}", Rel::None),
        C(Symplecto, "L^{cc}_{2|2}", "L^u_{2|2}", Rel::Lhs(Eq0)),
        // the canonical forms here have different parities (ortho-orthogonal
        // vs periplectic), so only a plain isomorphism can exist; the
        // harness reports the deviation
        C(Symplecto, "L^{ii}_{2|2}", "L^h_{2|2}", Rel::None),
        C(Symplecto, "L^l_{2|2}", "L^m_{2|2}", Rel::None),
        C(Symplecto, "L^m_{2|2}", "L^{l+m}_{2|2}", Rel::None),
        // ---- superdimension (4|0), isomorphisms ----
        C(Iso, "L^d_{4|0}", "L^g_{4|0}", Rel::Lhs(Any)),
        C(Iso, "L^g_{4|0}", "L^h_{4|0}", Rel::None),
        C(Iso, "L^h_{4|0}", "L^{g+h}_{4|0}", Rel::None),
        C(Iso, "L^j_{4|0}", "L^n_{4|0}", Rel::Lhs(IffNe1)),
        C(Iso, "L^s_{4|0}", "L^{s+t}_{4|0}", Rel::None),
        C(Iso, "L^j_{4|0}", "L^k_{4|0}", Rel::PinnedBoth(1, 0)),
        C(Iso, "L^k_{4|0}", "L^{bb}_{4|0}", Rel::Lhs(Eq0)),
        C(Iso, "L^p_{4|0}", "L^{bb}_{4|0}", Rel::Lhs(Any)),
        C(Iso, "L^q_{4|0}", "L^u_{4|0}", Rel::None),
        C(Iso, "L^y_{4|0}", "L^z_{4|0}", Rel::None),
        C(Iso, "L^y_{4|0}", "L^{dd}_{4|0}", Rel::None),
        // ---- superdimension (4|0), symplectomorphisms ----
        C(Symplecto, "L^d_{4|0}", "L^g_{4|0}", Rel::Lhs(Any)),
        C(Symplecto, "L^h_{4|0}", "L^{g+h}_{4|0}", Rel::None),
        C(Symplecto, "L^m_{4|0}", "L^l_{4|0}", Rel::Lhs(IffNe1)),
        C(Symplecto, "L^f_{4|0}", "L^k_{4|0}", Rel::LhsRhsPinned(Any, 1)),
        C(Symplecto, "L^j_{4|0}", "L^m_{4|0}", Rel::PinnedBoth(1, 1)),
        C(Symplecto, "L^q_{4|0}", "L^r_{4|0}", Rel::None),
        C(Symplecto, "L^r_{4|0}", "L^{q+r}_{4|0}", Rel::None),
        C(Symplecto, "L^s_{4|0}", "L^t_{4|0}", Rel::None),
        C(Symplecto, "L^t_{4|0}", "L^w_{4|0}", Rel::None),
        C(Symplecto, "L^y_{4|0}", "L^{cc}_{4|0}", Rel::None),
        C(Symplecto, "L^z_{4|0}", "L^{dd}_{4|0}", Rel::None),
    ]
}
