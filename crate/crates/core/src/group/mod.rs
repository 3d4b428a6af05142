//! Groups given as direct products of family atoms.
//!
//! [`GroupSpec`] is the parsed, canonical description; [`Group`] wraps it
//! with its default generating set and memoized caches (enumeration,
//! word-length spheres, conjugacy classes). Caches sit behind locks, so a
//! `Group` can be shared between threads.

mod atom_ops;
mod conjugacy;
mod element;
mod metric;
mod parse;
mod perm;
mod spec;
mod table;

use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use serde::Serialize;

pub use conjugacy::{ConjugacyClass, FiniteClasses};
pub use element::{Component, Element};
pub use parse::{parse_group_spec, parse_group_spec_in};
pub use perm::Perm;
pub use spec::{Atom, GroupSpec, PermAtom, TableAtom};
pub use table::{CayleyTable, TableFile, TABLE_FORMAT, TABLE_VERSION};

use crate::error::{GroupError, Result};
use metric::{AtomBall, ProductBall};

/// Resource guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupOptions {
    /// Iteration limit when an order cannot be computed analytically.
    pub order_cap: u64,
    /// Largest group `enumerate_all` will list.
    pub enumeration_cap: usize,
    /// Largest word-length ball `enumerate_ball` will build.
    pub ball_cap: usize,
}

impl Default for GroupOptions {
    fn default() -> Self {
        GroupOptions {
            order_cap: 4096,
            enumeration_cap: 10080,
            ball_cap: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum OrderResult {
    Finite(u64),
    ExceedsCap(u64),
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite(d) => Some(d),
            OrderResult::ExceedsCap(_) => None,
        }
    }
}

/// Groups whose axioms and generating sets are verified on construction.
const GENERATION_CHECK_LIMIT: usize = 512;

pub struct Group {
    spec: GroupSpec,
    options: GroupOptions,
    atom_generators: Vec<Vec<Component>>,
    generators: Vec<Element>,
    atom_elements: Vec<OnceLock<Vec<Component>>>,
    atom_members: Vec<OnceLock<HashSet<Component>>>,
    atom_balls: Vec<Mutex<AtomBall>>,
    product_ball: Mutex<ProductBall>,
    atom_classes: Vec<OnceLock<FiniteClasses<Component>>>,
    finite_classes: OnceLock<FiniteClasses<Element>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("spec", &self.spec.to_string())
            .field("options", &self.options)
            .finish()
    }
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        Self::with_options(spec, GroupOptions::default())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_group_spec(text)?)
    }

    pub fn with_options(spec: GroupSpec, options: GroupOptions) -> Result<Self> {
        let atoms = spec.atoms();
        let atom_generators: Vec<Vec<Component>> =
            atoms.iter().map(atom_ops::default_generators).collect();
        let identity: Vec<Component> = atoms.iter().map(atom_ops::identity).collect();
        let mut generators = Vec::new();
        for (i, gens) in atom_generators.iter().enumerate() {
            for g in gens {
                let mut comps = identity.clone();
                comps[i] = g.clone();
                generators.push(Element(comps));
            }
        }
        let n = atoms.len();
        let group = Group {
            atom_balls: atoms
                .iter()
                .zip(&atom_generators)
                .map(|(a, g)| Mutex::new(AtomBall::new(atom_ops::identity(a), g.clone())))
                .collect(),
            product_ball: Mutex::new(ProductBall::new()),
            spec,
            options,
            atom_generators,
            generators,
            atom_elements: (0..n).map(|_| OnceLock::new()).collect(),
            atom_members: (0..n).map(|_| OnceLock::new()).collect(),
            atom_classes: (0..n).map(|_| OnceLock::new()).collect(),
            finite_classes: OnceLock::new(),
        };
        group.verify_generation()?;
        Ok(group)
    }

    /// For small finite groups, checks that the default generators reach
    /// every element.
    fn verify_generation(&self) -> Result<()> {
        match self.order_of_group() {
            Ok(Some(size)) if size <= GENERATION_CHECK_LIMIT => {
                let reached = self.enumerate_ball(size as u32)?.len();
                if reached != size {
                    return Err(GroupError::InvalidParameter(format!(
                        "default generators reach {reached} of {size} elements"
                    )));
                }
                Ok(())
            }
            Ok(_) => Ok(()),
            Err(GroupError::CapExceeded { .. }) => Ok(()),
            Err(e) => Err(e),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn options(&self) -> &GroupOptions {
        &self.options
    }

    pub fn atoms(&self) -> &[Atom] {
        self.spec.atoms()
    }

    pub fn is_finite(&self) -> bool {
        self.spec.is_finite()
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn atom_generators(&self, atom: usize) -> &[Component] {
        &self.atom_generators[atom]
    }

    pub fn identity(&self) -> Element {
        Element(self.atoms().iter().map(atom_ops::identity).collect())
    }

    pub fn is_identity(&self, g: &Element) -> bool {
        *g == self.identity()
    }

    /// Group law without membership checks.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        Element(
            self.atoms()
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(atom, (x, y))| atom_ops::mul(atom, x, y))
                .collect(),
        )
    }

    /// Inverse without membership checks.
    pub fn inv(&self, a: &Element) -> Element {
        Element(
            self.atoms()
                .iter()
                .zip(&a.0)
                .map(|(atom, x)| atom_ops::inv(atom, x))
                .collect(),
        )
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    /// `f g f^-1`
    pub fn conjugate(&self, f: &Element, g: &Element) -> Element {
        self.mul(&self.mul(f, g), &self.inv(f))
    }

    pub fn pow(&self, g: &Element, mut exp: u64) -> Element {
        let mut base = g.clone();
        let mut acc = self.identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Checks that `a` is a normal-form element of this group.
    pub fn check(&self, a: &Element) -> Result<()> {
        let atoms = self.atoms();
        if a.0.len() != atoms.len() {
            return Err(GroupError::ElementMismatch(format!(
                "{a} has {} components, group has {} atoms",
                a.0.len(),
                atoms.len()
            )));
        }
        for (i, (atom, c)) in atoms.iter().zip(&a.0).enumerate() {
            let ok = match (atom, c) {
                (Atom::Cyclic(n), Component::Mod(v)) => v < n,
                (Atom::FreeAbelian(m), Component::Vector(v)) => v.len() == *m,
                (Atom::Dihedral(n), Component::Dihedral { rotation, .. }) => rotation < n,
                (Atom::InfiniteDihedral, Component::InfDihedral { .. }) => true,
                (Atom::Symmetric(n), Component::Perm(p)) => p.degree() == *n,
                (Atom::Permutation(p), Component::Perm(q)) => {
                    q.degree() == p.degree && self.atom_members(i)?.contains(c)
                }
                (Atom::Heisenberg, Component::Heisenberg(_)) => true,
                (Atom::Table(t), Component::Table(x)) => (*x as usize) < t.table.size(),
                _ => false,
            };
            if !ok {
                return Err(GroupError::ElementMismatch(format!(
                    "component {c} does not belong to {atom}"
                )));
            }
        }
        Ok(())
    }

    /// Parses an element in the per-family notation, components separated by `;`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != self.atoms().len() {
            return Err(GroupError::ElementMismatch(format!(
                "{text:?} has {} components, group {} has {} atoms",
                parts.len(),
                self.spec,
                self.atoms().len()
            )));
        }
        let g = Element(
            self.atoms()
                .iter()
                .zip(parts)
                .map(|(atom, part)| element::parse_component(atom, part))
                .collect::<Result<_>>()?,
        );
        self.check(&g)?;
        Ok(g)
    }

    pub fn order(&self, g: &Element) -> OrderResult {
        self.order_with_cap(g, self.options.order_cap)
    }

    pub fn order_with_cap(&self, g: &Element, cap: u64) -> OrderResult {
        let orders = self
            .atoms()
            .iter()
            .zip(&g.0)
            .map(|(atom, c)| atom_ops::order(atom, c, cap));
        atom_ops::order_result(orders, cap)
    }

    /// Number of elements, `None` for infinite groups.
    pub fn order_of_group(&self) -> Result<Option<usize>> {
        let mut total: usize = 1;
        for (i, atom) in self.atoms().iter().enumerate() {
            let size = match atom {
                Atom::Cyclic(n) => usize::try_from(*n).ok(),
                Atom::Dihedral(n) => usize::try_from(*n).ok().and_then(|n| n.checked_mul(2)),
                Atom::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
                Atom::Permutation(_) => Some(self.atom_elements(i)?.len()),
                Atom::Table(t) => Some(t.table.size()),
                _ => return Ok(None),
            };
            total = size.and_then(|s| total.checked_mul(s)).ok_or(GroupError::CapExceeded {
                what: "group order",
                cap: self.options.enumeration_cap,
            })?;
        }
        Ok(Some(total))
    }

    /// Sorted elements of a finite atom.
    pub(crate) fn atom_elements(&self, i: usize) -> Result<&[Component]> {
        if let Some(v) = self.atom_elements[i].get() {
            return Ok(v);
        }
        let cap = self.options.enumeration_cap;
        let atom = &self.atoms()[i];
        let elements: Vec<Component> = match atom {
            Atom::Cyclic(n) => {
                if *n as usize > cap {
                    return Err(GroupError::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                (0..*n).map(Component::Mod).collect()
            }
            Atom::Dihedral(n) => {
                if 2 * *n as usize > cap {
                    return Err(GroupError::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                [false, true]
                    .into_iter()
                    .flat_map(|reflection| {
                        (0..*n).map(move |rotation| Component::Dihedral {
                            reflection,
                            rotation,
                        })
                    })
                    .collect()
            }
            Atom::Symmetric(n) => {
                let size = (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k));
                if size.is_none_or(|s| s > cap) {
                    return Err(GroupError::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                (0..*n as u32)
                    .permutations(*n)
                    .map(|images| Component::Perm(Perm::from_images(images).expect("bijection")))
                    .collect()
            }
            Atom::Permutation(p) => {
                let mut seen: HashSet<Component> = HashSet::new();
                let start = Component::Perm(Perm::identity(p.degree));
                seen.insert(start.clone());
                let mut frontier = vec![start];
                while let Some(x) = frontier.pop() {
                    for s in &self.atom_generators[i] {
                        let y = atom_ops::mul(atom, &x, s);
                        if seen.insert(y.clone()) {
                            if seen.len() > cap {
                                return Err(GroupError::CapExceeded {
                                    what: "group order",
                                    cap,
                                });
                            }
                            frontier.push(y);
                        }
                    }
                }
                let mut v: Vec<Component> = seen.into_iter().collect();
                v.sort();
                v
            }
            Atom::Table(t) => {
                if t.table.size() > cap {
                    return Err(GroupError::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                (0..t.table.size() as u32).map(Component::Table).collect()
            }
            other => {
                return Err(GroupError::InfiniteGroup(other.to_string()));
            }
        };
        let _ = self.atom_elements[i].set(elements);
        Ok(self.atom_elements[i].get().expect("just set"))
    }

    fn atom_members(&self, i: usize) -> Result<&HashSet<Component>> {
        if let Some(s) = self.atom_members[i].get() {
            return Ok(s);
        }
        let set = self.atom_elements(i)?.iter().cloned().collect();
        let _ = self.atom_members[i].set(set);
        Ok(self.atom_members[i].get().expect("just set"))
    }

    /// All elements in canonical (sorted) order.
    pub fn enumerate_all(&self) -> Result<Vec<Element>> {
        if !self.is_finite() {
            return Err(GroupError::InfiniteGroup(self.spec.to_string()));
        }
        let cap = self.options.enumeration_cap;
        let size = self.order_of_group()?.expect("finite");
        if size > cap {
            return Err(GroupError::CapExceeded {
                what: "group order",
                cap,
            });
        }
        let lists = (0..self.atoms().len())
            .map(|i| self.atom_elements(i))
            .collect::<Result<Vec<_>>>()?;
        // lexicographic product of sorted lists is sorted
        Ok(lists
            .into_iter()
            .map(|l| l.iter().cloned())
            .multi_cartesian_product()
            .map(Element)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &Group, s: &str) -> Element {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = Group::parse("Z/6").unwrap();
        assert_eq!(g.multiply(&el(&g, "4"), &el(&g, "5")).unwrap(), el(&g, "3"));
        assert_eq!(g.inverse(&el(&g, "2")).unwrap(), el(&g, "4"));
        assert_eq!(g.order(&el(&g, "4")), OrderResult::Finite(3));
    }

    #[test]
    fn dihedral_arithmetic() {
        let g = Group::parse("D4").unwrap();
        let xy = el(&g, "xy");
        assert_eq!(g.multiply(&xy, &xy).unwrap(), g.identity());
        for a in 0..4 {
            let r = el(&g, &format!("x y^{a}"));
            assert_eq!(g.inverse(&r).unwrap(), r);
            assert_eq!(g.order(&r), OrderResult::Finite(2));
        }
        assert_eq!(g.order(&el(&g, "y^2")), OrderResult::Finite(2));
    }

    #[test]
    fn symmetric_arithmetic() {
        let g = Group::parse("S3").unwrap();
        let p = g.multiply(&el(&g, "(1 2)"), &el(&g, "(2 3)")).unwrap();
        assert_eq!(p, el(&g, "(1 2 3)"));
        assert_eq!(g.order(&p), OrderResult::Finite(3));
    }

    #[test]
    fn infinite_orders() {
        let z2 = Group::parse("Z^2").unwrap();
        assert_eq!(z2.identity(), el(&z2, "0,0"));
        assert_eq!(
            z2.order_with_cap(&el(&z2, "1,0"), 64),
            OrderResult::ExceedsCap(64)
        );
        let d = Group::parse("Dinf").unwrap();
        assert_eq!(d.order(&el(&d, "x")), OrderResult::Finite(2));
        assert_eq!(d.order(&el(&d, "xy^5")), OrderResult::Finite(2));
        assert!(matches!(d.order(&el(&d, "y")), OrderResult::ExceedsCap(_)));
        let p = Group::parse("Z/4 x Z").unwrap();
        assert!(matches!(p.order(&el(&p, "1; 0")), OrderResult::Finite(4)));
        assert!(matches!(p.order(&el(&p, "1; 2")), OrderResult::ExceedsCap(_)));
    }

    #[test]
    fn enumeration_sizes() {
        for (spec, n) in [("Z/6", 6), ("D4", 8), ("S4", 24), ("Z/2 x S3", 12), ("Z/1", 1)] {
            let g = Group::parse(spec).unwrap();
            let all = g.enumerate_all().unwrap();
            assert_eq!(all.len(), n, "{spec}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        let perm = Group::parse("perm:(1 2 3 4);(1 2)").unwrap();
        assert_eq!(perm.enumerate_all().unwrap().len(), 24);
        assert!(matches!(
            Group::parse("Z").unwrap().enumerate_all(),
            Err(GroupError::InfiniteGroup(_))
        ));
        let capped = Group::with_options(
            parse_group_spec("S8").unwrap(),
            GroupOptions::default(),
        )
        .unwrap();
        assert!(matches!(
            capped.enumerate_all(),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn membership_checks() {
        let g = Group::parse("Z/6").unwrap();
        let h = Group::parse("D4").unwrap();
        assert!(g.multiply(&el(&g, "1"), &el(&h, "x")).is_err());
        let a4 = Group::parse("perm:(1 2 3);(2 3 4)").unwrap();
        assert_eq!(a4.enumerate_all().unwrap().len(), 12);
        assert!(a4.parse_element("(1 2)").is_err());
        assert!(a4.parse_element("(1 2)(3 4)").is_ok());
        assert!(g.parse_element("1; 2").is_err());
    }
}
