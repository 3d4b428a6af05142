//! Lower and upper bounds for the rank of the finite part of K-theory, and
//! the derived lower bounds for the structure group `S(M)` and the group
//! `P(M)` of a closed manifold with fundamental group `G`.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::torsion::{compute_ffin_pol, is_polynomially_full, PolyFullVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankBounds {
    pub group: String,
    /// `F^pol`
    pub lower: usize,
    /// `F`
    pub upper: usize,
    /// `F`, when the group is certified polynomially full.
    pub exact: Option<usize>,
    pub poly_full: PolyFullVerdict,
    pub structure: Option<String>,
    /// `certified` or `empirical-at-radius-R`.
    pub confidence: String,
}

pub fn rank_bounds(group: &Group, radius: u32) -> Result<RankBounds> {
    let pol = compute_ffin_pol(group, radius)?;
    let poly_full = is_polynomially_full(group, radius)?;
    let upper = pol.partition.f_value;
    let exact = poly_full.is_certified().then_some(upper);
    Ok(RankBounds {
        group: group.spec().to_string(),
        lower: pol.f_pol_value,
        upper,
        exact,
        structure: exact.map(|f| format!("K^fin_0(C*_r G) = K^fin_0(C* G) = Z^{f}")),
        poly_full,
        confidence: if pol.certified {
            "certified".into()
        } else {
            format!("empirical-at-radius-{radius}")
        },
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ManifoldFlags {
    pub oriented: bool,
    pub spin_psc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundNote {
    pub bound: &'static str,
    pub applies: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub group: String,
    pub f_value: usize,
    pub f_pol_value: usize,
    pub poly_full: PolyFullVerdict,
    pub manifold_dim: Option<u32>,
    pub flags: ManifoldFlags,
    /// Lower bound for `rank S(M)`.
    pub s_bound: Option<usize>,
    /// Lower bound for `rank P(M)`.
    pub p_bound: Option<usize>,
    pub applicability: Vec<BoundNote>,
    pub confidence: String,
    pub assumptions: Vec<String>,
}

/// `(s_bound, p_bound)` for `F^pol = f_pol` in dimension `dim`.
pub fn bound_arithmetic(f_pol: usize, dim: u32) -> (Option<usize>, Option<usize>) {
    let four_k_minus_one = dim % 4 == 3 && dim >= 7;
    let s = four_k_minus_one.then(|| f_pol.saturating_sub(1));
    let p = if four_k_minus_one {
        Some(f_pol)
    } else if dim % 2 == 1 && dim >= 5 {
        Some(f_pol.saturating_sub(1))
    } else {
        None
    };
    (s, p)
}

fn notes(dim: u32, flags: ManifoldFlags) -> Vec<BoundNote> {
    let four_k_minus_one = dim % 4 == 3 && dim >= 7;
    let odd = dim % 2 == 1 && dim >= 5;
    let s_note = if four_k_minus_one {
        "dimension 4k-1 with k > 1: rank S(M) >= F^pol - 1".to_string()
    } else {
        format!("not applicable: dimension {dim} is not of the form 4k-1 with k > 1")
    };
    let p_note = if four_k_minus_one {
        "dimension 4k-1 with k > 1: rank P(M) >= F^pol".to_string()
    } else if odd {
        "dimension 2k-1 with k > 2: rank P(M) >= F^pol - 1".to_string()
    } else if dim.is_multiple_of(2) {
        format!("not applicable: dimension {dim} is even")
    } else {
        format!("not applicable: dimension {dim} is below 5")
    };
    let mut out = vec![
        BoundNote {
            bound: "s_bound",
            applies: four_k_minus_one,
            note: s_note,
        },
        BoundNote {
            bound: "p_bound",
            applies: four_k_minus_one || odd,
            note: p_note,
        },
    ];
    if !flags.oriented {
        out.push(BoundNote {
            bound: "s_bound",
            applies: four_k_minus_one,
            note: "orientation not asserted; the structure-group bound presumes an oriented manifold".into(),
        });
    }
    if !flags.spin_psc {
        out.push(BoundNote {
            bound: "p_bound",
            applies: four_k_minus_one || odd,
            note: "spin with positive scalar curvature not asserted; P(M) is only meaningful for such manifolds".into(),
        });
    }
    out
}

pub fn manifold_bounds(group: &Group, dim: u32, flags: ManifoldFlags, radius: u32) -> Result<BoundsReport> {
    if dim == 0 {
        return Err(GroupError::InvalidParameter("manifold dimension must be >= 1".into()));
    }
    let ranks = rank_bounds(group, radius)?;
    let (s_bound, p_bound) = bound_arithmetic(ranks.lower, dim);
    Ok(BoundsReport {
        group: ranks.group,
        f_value: ranks.upper,
        f_pol_value: ranks.lower,
        poly_full: ranks.poly_full,
        manifold_dim: Some(dim),
        flags,
        s_bound,
        p_bound,
        applicability: notes(dim, flags),
        confidence: ranks.confidence,
        assumptions: vec![
            "the group spec stands in for the fundamental group of a closed connected manifold".into(),
        ],
    })
}
