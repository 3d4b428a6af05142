//! Closed forms against independent computation.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::formulas::{formula_for, FormulaResult};
use crate::group::Group;
use crate::torsion::{compute_ffin, compute_ffin_in_ball};

/// Ball radius for the search in infinite groups.
pub const DEFAULT_SEARCH_RADIUS: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub group: String,
    pub formula: Option<FormulaResult>,
    pub brute_force_value: Option<usize>,
    /// `enumeration` or `ball_search`.
    pub brute_force_method: Option<&'static str>,
    pub brute_force_exact: bool,
    /// Second computation used when no closed form applies.
    pub reference_value: Option<usize>,
    pub reference_method: Option<&'static str>,
    pub agree: bool,
    pub notes: Vec<String>,
}

/// Finite groups: whole-group enumeration of conjugacy classes. Infinite
/// groups: torsion search in the ball of `radius`.
pub fn cross_validate(group: &Group, radius: u32) -> Result<CrossValidation> {
    let mut notes = Vec::new();
    let formula = match formula_for(group.spec()) {
        Some(r) => Some(r?),
        None => {
            notes.push("no closed form for this group".to_string());
            None
        }
    };
    let brute = if group.is_finite() {
        if group.uses_brute_force_classes() {
            let p = compute_ffin(group)?;
            Some((p.f_value, "enumeration", p.exact))
        } else {
            notes.push(format!(
                "group exceeds the enumeration cap of {}; formula only",
                group.options().enumeration_cap
            ));
            None
        }
    } else {
        match compute_ffin_in_ball(group, radius) {
            Ok(p) => Some((p.f_value, "ball_search", p.exact)),
            Err(GroupError::CapExceeded { what, cap }) => {
                notes.push(format!("{what} exceeds cap {cap}; formula only"));
                None
            }
            Err(e) => return Err(e),
        }
    };
    // without a closed form, compare against the other exact path
    let reference = match (&formula, &brute) {
        (None, Some((_, "enumeration", _))) => {
            let n = group.order_of_group()?.expect("finite") as u32;
            let p = compute_ffin_in_ball(group, n)?;
            p.exact.then_some((p.f_value, "exhaustive_ball_search"))
        }
        (None, Some(_)) => Some((compute_ffin(group)?.f_value, "class_representatives")),
        _ => None,
    };
    let agree = match (&formula, &brute, reference) {
        (Some(f), Some((b, _, _)), _) => f.value == *b as u64,
        (None, Some((b, _, _)), Some((r, _))) => *b == r,
        _ => false,
    };
    Ok(CrossValidation {
        group: group.spec().to_string(),
        formula,
        brute_force_value: brute.map(|b| b.0),
        brute_force_method: brute.map(|b| b.1),
        brute_force_exact: brute.is_some_and(|b| b.2),
        reference_value: reference.map(|r| r.0),
        reference_method: reference.map(|r| r.1),
        agree,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        for (spec, v) in [("Z/12", 6), ("D10", 6), ("S6", 11), ("Dinf", 3), ("Z/6 x Z", 4)] {
            let g = Group::parse(spec).unwrap();
            let cv = cross_validate(&g, DEFAULT_SEARCH_RADIUS).unwrap();
            assert!(cv.agree, "{spec}: {cv:?}");
            assert_eq!(cv.brute_force_value, Some(v));
        }
        let cv = cross_validate(&Group::parse("S3 x Z/2").unwrap(), 4).unwrap();
        assert!(cv.formula.is_none());
        assert_eq!(cv.brute_force_value, Some(6));
        assert_eq!(cv.reference_value, Some(6));
        assert!(cv.agree);
    }
}
