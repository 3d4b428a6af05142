//! Projections `p_g = (1 + g + .. + g^{d-1})/d`, the class traces
//! `τ_h(x) = Σ_{g ∈ C(h)} x(g)` and the matrix `M[i][j] = τ_{s_i}(p_{s_j})`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::GroupAlgebraElement;
use crate::error::{GroupError, Result};
use crate::group::{Element, Group, OrderResult};
use crate::linalg::{is_upper_triangular, rational_rank};
use crate::scalar::{ratio_string, Coefficient};

fn torsion_order(group: &Group, g: &Element) -> Result<u64> {
    match group.order(g) {
        OrderResult::Finite(d) => Ok(d),
        OrderResult::ExceedsCap(_) => Err(GroupError::NotTorsion(g.to_string())),
    }
}

/// `p_g` over any coefficient ring containing `1/d`.
pub fn projection_in<S: Coefficient>(group: &Group, g: &Element) -> Result<GroupAlgebraElement<S>> {
    group.check(g)?;
    let d = torsion_order(group, g)?;
    let coeff = S::one() / S::from_u64(d).expect("order fits the coefficient type");
    let mut power = group.identity();
    let mut terms = Vec::with_capacity(d as usize);
    for _ in 0..d {
        terms.push((power.clone(), coeff.clone()));
        power = group.mul(&power, g);
    }
    Ok(GroupAlgebraElement::from_terms(terms))
}

pub fn projection_pg(group: &Group, g: &Element) -> Result<GroupAlgebraElement<BigRational>> {
    projection_in(group, g)
}

/// `x^2 = x` and `x* = x`, compared exactly.
pub fn is_projection<S: Coefficient>(group: &Group, x: &GroupAlgebraElement<S>) -> bool {
    x.mul(group, x) == *x && x.star(group) == *x
}

/// Sum of the coefficients of `x` over `C(h)`.
pub fn trace_tau<S: Coefficient>(group: &Group, h: &Element, x: &GroupAlgebraElement<S>) -> Result<S> {
    let target = group.class_rep(h)?;
    let mut acc = S::zero();
    for (g, a) in x.terms() {
        if group.class_rep(g)? == target {
            acc = acc + a.clone();
        }
    }
    Ok(acc)
}

/// `|{a ∈ [0, d) : s^a ∈ C(s)}| / d`, counted directly from powers.
pub fn diagonal_by_counting(group: &Group, s: &Element) -> Result<BigRational> {
    let d = torsion_order(group, s)?;
    let target = group.class_rep(s)?;
    let mut hits = 0u64;
    for a in 0..d {
        if group.class_rep(&group.pow(s, a))? == target {
            hits += 1;
        }
    }
    Ok(BigRational::new(BigInt::from(hits), BigInt::from(d)))
}

fn ser_ratio<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&ratio_string(x))
}

fn ser_ratio_list<S: Serializer>(xs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&ratio_string(x))?;
    }
    seq.end()
}

fn ser_ratio_matrix<S: Serializer>(
    m: &[Vec<BigRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ratio_string).collect()).collect();
    rows.serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRep {
    pub element: Element,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceMatrixReport {
    pub group: String,
    /// Sorted by order, then element.
    pub reps: Vec<TraceRep>,
    #[serde(serialize_with = "ser_ratio_matrix")]
    pub matrix: Vec<Vec<BigRational>>,
    pub upper_triangular: bool,
    #[serde(serialize_with = "ser_ratio_list")]
    pub diagonal: Vec<BigRational>,
    /// Every diagonal entry is at least `1/d_i`.
    pub diagonal_bounded: bool,
    pub rank: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub determinant_of_diagonal: BigRational,
}

impl TraceMatrixReport {
    pub fn full_rank(&self) -> bool {
        self.rank == self.reps.len()
    }
}

/// `M[i][j] = τ_{s_i}(p_{s_j})` for the given torsion elements.
pub fn trace_matrix(group: &Group, reps: &[Element]) -> Result<TraceMatrixReport> {
    let mut sorted = Vec::with_capacity(reps.len());
    for g in reps {
        group.check(g)?;
        sorted.push(TraceRep {
            element: g.clone(),
            order: torsion_order(group, g)?,
        });
    }
    sorted.sort_by(|a, b| (a.order, &a.element).cmp(&(b.order, &b.element)));
    if let Some(w) = sorted.windows(2).find(|w| w[0].element == w[1].element) {
        return Err(GroupError::DuplicateRepresentative(w[0].element.to_string()));
    }
    let projections = sorted
        .iter()
        .map(|r| projection_pg(group, &r.element))
        .collect::<Result<Vec<_>>>()?;
    let matrix = sorted
        .iter()
        .map(|ri| {
            projections
                .iter()
                .map(|p| trace_tau(group, &ri.element, p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let diagonal: Vec<BigRational> = (0..sorted.len()).map(|i| matrix[i][i].clone()).collect();
    let diagonal_bounded = diagonal
        .iter()
        .zip(&sorted)
        .all(|(x, r)| *x >= BigRational::new(BigInt::one(), BigInt::from(r.order)));
    let determinant_of_diagonal = diagonal.iter().fold(BigRational::one(), |a, x| a * x);
    Ok(TraceMatrixReport {
        group: group.spec().to_string(),
        upper_triangular: is_upper_triangular(&matrix),
        rank: rational_rank(&matrix),
        reps: sorted,
        matrix,
        diagonal,
        diagonal_bounded,
        determinant_of_diagonal,
    })
}
