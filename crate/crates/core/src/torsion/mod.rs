//! Torsion classes under power-conjugacy and the invariants `F` and `F^pol`.
//!
//! Two torsion elements are equivalent when they have the same order `d`
//! and some power `g^a`, `1 <= a <= d`, is conjugate to `h`. Since the
//! relation is conjugation-invariant it is computed on conjugacy-class
//! representatives, merged with a union-find.

mod union_find;

use std::collections::HashMap;

use itertools::Itertools;
use num_integer::Integer;
use serde::Serialize;

pub use union_find::UnionFind;

use crate::error::{GroupError, Result};
use crate::growth::{classify_gpol_with, GpolVerdict};
use crate::group::{Element, Group, OrderResult};

/// One power-conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionClass {
    pub representative: Element,
    pub order: u64,
    /// Conjugacy-class representatives merged into this class (for the
    /// ball search: the torsion elements found).
    pub members: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionPartition {
    pub group: String,
    /// Sorted by `(order, representative)`.
    pub classes: Vec<TorsionClass>,
    pub f_value: usize,
    pub exact: bool,
    /// Search radius when the result comes from a word-length ball.
    pub radius: Option<u32>,
    pub warnings: Vec<String>,
}

impl TorsionPartition {
    pub fn representatives(&self) -> Vec<Element> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }
}

fn torsion_order(group: &Group, g: &Element) -> Result<u64> {
    match group.order(g) {
        OrderResult::Finite(d) => Ok(d),
        OrderResult::ExceedsCap(_) => Err(GroupError::NotTorsion(g.to_string())),
    }
}

/// `g ~ h`: equal orders `d` and `g^a ∈ C(h)` for some `a` in `1..=d`.
pub fn is_power_conjugate(group: &Group, g: &Element, h: &Element) -> Result<bool> {
    group.check(g)?;
    group.check(h)?;
    let d = torsion_order(group, g)?;
    let e = torsion_order(group, h)?;
    if d != e {
        return Ok(false);
    }
    let target = group.class_rep(h)?;
    for a in 1..=d {
        if group.class_rep(&group.pow(g, a))? == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Conjugacy-class representatives of all torsion elements, with orders.
fn torsion_class_reps(group: &Group, warnings: &mut Vec<String>) -> Result<Vec<(Element, u64)>> {
    let candidates: Vec<Element> = if group.uses_brute_force_classes() {
        group.finite_classes()?.reps().to_vec()
    } else {
        let lists = (0..group.atoms().len())
            .map(|i| group.atom_torsion_class_reps(i))
            .collect::<Result<Vec<_>>>()?;
        let count = lists
            .iter()
            .try_fold(1usize, |acc, l| acc.checked_mul(l.len()));
        let cap = group.options().enumeration_cap;
        if count.is_none_or(|c| c > cap) {
            return Err(GroupError::CapExceeded {
                what: "torsion class count",
                cap,
            });
        }
        lists
            .into_iter()
            .multi_cartesian_product()
            .map(Element::new)
            .collect()
    };
    let mut out = Vec::with_capacity(candidates.len());
    for g in candidates {
        match group.order(&g) {
            OrderResult::Finite(d) => out.push((g, d)),
            OrderResult::ExceedsCap(cap) => {
                if !group.is_finite() {
                    continue;
                }
                warnings.push(format!("order of {g} exceeds cap {cap}; treated as infinite"));
            }
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(out)
}

fn into_classes(items: &[(Element, u64)], uf: &mut UnionFind) -> Vec<TorsionClass> {
    let mut classes: Vec<TorsionClass> = uf
        .groups()
        .into_iter()
        .map(|idx| TorsionClass {
            representative: items[idx[0]].0.clone(),
            order: items[idx[0]].1,
            members: idx.iter().map(|&i| items[i].0.clone()).collect(),
        })
        .collect();
    classes.sort_by(|a, b| (a.order, &a.representative).cmp(&(b.order, &b.representative)));
    classes
}

/// `F_G` from conjugacy-class representatives. Exact for every supported
/// group.
pub fn compute_ffin(group: &Group) -> Result<TorsionPartition> {
    let mut warnings = Vec::new();
    let reps = torsion_class_reps(group, &mut warnings)?;
    let index: HashMap<&Element, usize> = reps.iter().enumerate().map(|(i, r)| (&r.0, i)).collect();
    let mut uf = UnionFind::new(reps.len());
    for (i, (g, d)) in reps.iter().enumerate() {
        for a in 2..*d {
            if a.gcd(d) != 1 {
                continue;
            }
            let r = group.class_rep(&group.pow(g, a))?;
            let j = *index.get(&r).ok_or_else(|| {
                GroupError::Unsupported(format!("power {g}^{a} has no listed class"))
            })?;
            uf.union(i, j);
        }
    }
    let classes = into_classes(&reps, &mut uf);
    Ok(TorsionPartition {
        group: group.spec().to_string(),
        f_value: classes.len(),
        classes,
        exact: true,
        radius: None,
        warnings,
    })
}

/// Searches the word-length ball of `radius` for torsion elements and merges
/// them by conjugation with generators and by coprime powers, staying inside
/// the ball. Only conjugations visible in the ball are used, so classes may
/// split; the result is marked inexact.
pub fn compute_ffin_in_ball(group: &Group, radius: u32) -> Result<TorsionPartition> {
    let ball = group.enumerate_ball(radius)?;
    let mut items: Vec<(Element, u64)> = ball
        .iter()
        .filter_map(|(g, _)| group.order(g).finite().map(|d| (g.clone(), d)))
        .collect();
    items.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    let index: HashMap<&Element, usize> =
        items.iter().enumerate().map(|(i, r)| (&r.0, i)).collect();
    let mut uf = UnionFind::new(items.len());
    for (i, (g, d)) in items.iter().enumerate() {
        let powers = (2..*d).filter(|a| a.gcd(d) == 1).map(|a| group.pow(g, a));
        let conjugates = group.generators().iter().map(|s| group.conjugate(s, g));
        for h in powers.chain(conjugates) {
            if let Some(&j) = index.get(&h) {
                uf.union(i, j);
            }
        }
    }
    let classes = into_classes(&items, &mut uf);
    let mut warnings = vec![format!(
        "torsion elements searched within word length {radius}; classes are merged only through conjugations inside the ball"
    )];
    if group.is_finite() && ball.len() == group.order_of_group()?.unwrap_or(0) {
        warnings.clear();
    }
    Ok(TorsionPartition {
        group: group.spec().to_string(),
        f_value: classes.len(),
        exact: warnings.is_empty(),
        classes,
        radius: Some(radius),
        warnings,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolPartition {
    pub partition: TorsionPartition,
    /// Verdict for each class representative, aligned with `partition.classes`.
    pub verdicts: Vec<GpolVerdict>,
    pub f_pol_value: usize,
    pub certified: bool,
    pub radius: u32,
}

/// `F^pol_G`: classes whose representative has polynomially growing
/// conjugacy class.
pub fn compute_ffin_pol(group: &Group, radius: u32) -> Result<PolPartition> {
    compute_ffin_pol_with(group, radius, true)
}

pub fn compute_ffin_pol_with(group: &Group, radius: u32, certify: bool) -> Result<PolPartition> {
    let partition = compute_ffin(group)?;
    let verdicts = partition
        .classes
        .iter()
        .map(|c| classify_gpol_with(group, &c.representative, radius, certify))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolPartition {
        f_pol_value: verdicts.iter().filter(|v| v.is_polynomial()).count(),
        certified: verdicts.iter().all(GpolVerdict::is_certified),
        partition,
        verdicts,
        radius,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PolyFullVerdict {
    CertifiedTrue { reason: String },
    EmpiricallyConsistent { radius: u32 },
    EmpiricallyRefuted { radius: u32 },
}

impl PolyFullVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, PolyFullVerdict::CertifiedTrue { .. })
    }
}

/// Whether every torsion element has polynomially growing class.
pub fn is_polynomially_full(group: &Group, radius: u32) -> Result<PolyFullVerdict> {
    is_polynomially_full_with(group, radius, true)
}

pub fn is_polynomially_full_with(group: &Group, radius: u32, certify: bool) -> Result<PolyFullVerdict> {
    let spec = group.spec();
    let reason = if spec.is_finite() {
        Some("finite group")
    } else if spec.is_torsion_free() {
        Some("torsion-free group")
    } else if certify && spec.is_virtually_nilpotent() {
        Some("virtually nilpotent group")
    } else {
        None
    };
    if let Some(reason) = reason {
        return Ok(PolyFullVerdict::CertifiedTrue {
            reason: reason.into(),
        });
    }
    let pol = compute_ffin_pol_with(group, radius, false)?;
    Ok(if pol.verdicts.iter().all(GpolVerdict::is_polynomial) {
        PolyFullVerdict::EmpiricallyConsistent { radius }
    } else {
        PolyFullVerdict::EmpiricallyRefuted { radius }
    })
}
