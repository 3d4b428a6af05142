//! Finitely supported elements of the group algebra over a coefficient ring.

use std::collections::BTreeMap;

use crate::group::{Element, Group};
use crate::scalar::Coefficient;

/// `Σ a_g g` with only nonzero coefficients stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAlgebraElement<S> {
    terms: BTreeMap<Element, S>,
}

impl<S: Coefficient> Default for GroupAlgebraElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Coefficient> GroupAlgebraElement<S> {
    pub fn zero() -> Self {
        GroupAlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(g: Element) -> Self {
        Self::from_terms([(g, S::one())])
    }

    /// Sums repeated elements and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Element, S)>) -> Self {
        let mut out = Self::zero();
        for (g, a) in terms {
            out.add_term(g, a);
        }
        out
    }

    fn add_term(&mut self, g: Element, a: S) {
        if a.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            Some(b) => {
                let c = b + a;
                if !c.is_zero() {
                    self.terms.insert(g, c);
                }
            }
            None => {
                self.terms.insert(g, a);
            }
        }
    }

    pub fn coefficient(&self, g: &Element) -> S {
        self.terms.get(g).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &S)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, a) in &other.terms {
            out.add_term(g.clone(), a.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(S::zero() - S::one())))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, a)| (g.clone(), a.clone() * s.clone())))
    }

    /// Convolution product.
    pub fn mul(&self, group: &Group, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(group.mul(g, h), a.clone() * b.clone());
            }
        }
        out
    }

    /// `(x*)(g) = x(g^-1)`; coefficients are real, so no conjugation.
    pub fn star(&self, group: &Group) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, a)| (group.inv(g), a.clone())))
    }

    pub fn coefficient_sum(&self) -> S {
        self.terms.values().fold(S::zero(), |acc, a| acc + a.clone())
    }
}
