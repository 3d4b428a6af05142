//! Conjugacy classes.
//!
//! Finite groups within the enumeration cap are partitioned by orbit closure
//! under conjugation by the generators. Otherwise classes are described
//! componentwise: the class of a product element is the product of the
//! component classes, with analytic descriptions for the dihedral, abelian
//! and Heisenberg atoms and orbit closure inside each finite atom.

use std::collections::HashMap;
use std::hash::Hash;

use itertools::Itertools;
use num_integer::Integer;
use serde::Serialize;

use super::atom_ops;
use super::element::{Component, Element};
use super::spec::Atom;
use super::Group;
use crate::error::{GroupError, Result};

/// Partition of a finite set into conjugacy classes. Representatives are the
/// class minima, and classes are listed in order of their representatives.
#[derive(Debug, Clone)]
pub struct FiniteClasses<T> {
    reps: Vec<T>,
    members: Vec<Vec<T>>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Ord + Hash> FiniteClasses<T> {
    /// `conj(s, g)` must return `s g s^-1`; `generators` must be inverse-closed.
    pub fn build(elements: &[T], generators: &[T], conj: impl Fn(&T, &T) -> T) -> Self {
        let mut sorted = elements.to_vec();
        sorted.sort();
        let mut index: HashMap<T, usize> = HashMap::with_capacity(sorted.len());
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for g in &sorted {
            if index.contains_key(g) {
                continue;
            }
            let id = reps.len();
            index.insert(g.clone(), id);
            let mut class = vec![g.clone()];
            let mut k = 0;
            while k < class.len() {
                for s in generators {
                    let h = conj(s, &class[k]);
                    if !index.contains_key(&h) {
                        index.insert(h.clone(), id);
                        class.push(h);
                    }
                }
                k += 1;
            }
            class.sort();
            reps.push(g.clone());
            members.push(class);
        }
        FiniteClasses {
            reps,
            members,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[T] {
        &self.reps
    }

    pub fn members(&self, class: usize) -> &[T] {
        &self.members[class]
    }

    pub fn class_of(&self, g: &T) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn rep_of(&self, g: &T) -> Option<&T> {
        self.class_of(g).map(|i| &self.reps[i])
    }
}

/// `C(h)`, either fully listed or clipped to a word-length ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    pub representative: Element,
    /// Sorted. The whole class when `complete`, else the members of length
    /// at most `radius`.
    pub members: Vec<Element>,
    pub complete: bool,
    /// Membership decided by an exact description rather than a bounded search.
    pub certified: bool,
    pub radius: Option<u32>,
}

/// Canonical `c` for the Heisenberg class `{(a, b, c + m g)}`: the residue of
/// least absolute value, positive on ties.
fn heisenberg_center(c: i64, g: i64) -> i64 {
    let r = c.rem_euclid(g);
    if r <= g - r {
        r
    } else {
        r - g
    }
}

fn analytic_component_rep(atom: &Atom, c: &Component) -> Option<Component> {
    use Component::*;
    Some(match (atom, c) {
        (Atom::Cyclic(_), Mod(_)) | (Atom::FreeAbelian(_), Vector(_)) => c.clone(),
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection: false,
                rotation,
            },
        ) => Dihedral {
            reflection: false,
            rotation: (*rotation).min(n - rotation),
        },
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection: true,
                rotation,
            },
        ) => Dihedral {
            reflection: true,
            rotation: if n % 2 == 1 { 0 } else { rotation % 2 },
        },
        (
            Atom::InfiniteDihedral,
            InfDihedral {
                reflection,
                rotation,
            },
        ) => InfDihedral {
            reflection: *reflection,
            rotation: if *reflection {
                rotation.rem_euclid(2)
            } else {
                rotation.abs()
            },
        },
        (Atom::Heisenberg, Heisenberg([a, b, c])) => {
            let g = a.gcd(b);
            if g == 0 {
                Heisenberg([0, 0, *c])
            } else {
                Heisenberg([*a, *b, heisenberg_center(*c, g)])
            }
        }
        _ => return None,
    })
}

/// Members of a finite component class with an analytic description.
fn analytic_component_members(atom: &Atom, c: &Component) -> Option<Vec<Component>> {
    use Component::*;
    let mut out = match (atom, c) {
        (Atom::Cyclic(_), Mod(_)) | (Atom::FreeAbelian(_), Vector(_)) => vec![c.clone()],
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection: false,
                rotation,
            },
        ) => vec![
            c.clone(),
            Dihedral {
                reflection: false,
                rotation: (n - rotation) % n,
            },
        ],
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection: true,
                rotation,
            },
        ) => {
            let step = if n % 2 == 1 { 1 } else { 2 };
            (0..*n)
                .filter(|k| k % step == rotation % step)
                .map(|k| Dihedral {
                    reflection: true,
                    rotation: k,
                })
                .collect()
        }
        (
            Atom::InfiniteDihedral,
            InfDihedral {
                reflection: false,
                rotation,
            },
        ) => vec![
            c.clone(),
            InfDihedral {
                reflection: false,
                rotation: -rotation,
            },
        ],
        (Atom::Heisenberg, Heisenberg([0, 0, _])) => vec![c.clone()],
        _ => return None,
    };
    out.sort();
    out.dedup();
    Some(out)
}

fn component_class_is_finite(atom: &Atom, c: &Component) -> bool {
    match (atom, c) {
        (Atom::InfiniteDihedral, Component::InfDihedral { reflection, .. }) => !reflection,
        (Atom::Heisenberg, Component::Heisenberg([a, b, _])) => *a == 0 && *b == 0,
        _ => true,
    }
}

impl Group {
    /// Conjugacy classes of the whole (finite) group by brute force.
    pub fn finite_classes(&self) -> Result<&FiniteClasses<Element>> {
        if let Some(c) = self.finite_classes.get() {
            return Ok(c);
        }
        let elements = self.enumerate_all()?;
        let classes = FiniteClasses::build(&elements, &self.generators, |s, g| {
            self.conjugate(s, g)
        });
        let _ = self.finite_classes.set(classes);
        Ok(self.finite_classes.get().expect("just set"))
    }

    /// Conjugacy classes inside one finite atom.
    pub(crate) fn atom_classes(&self, i: usize) -> Result<&FiniteClasses<Component>> {
        if let Some(c) = self.atom_classes[i].get() {
            return Ok(c);
        }
        let atom = &self.atoms()[i];
        let elements = self.atom_elements(i)?;
        let classes = FiniteClasses::build(elements, &self.atom_generators[i], |s, g| {
            atom_ops::mul(atom, &atom_ops::mul(atom, s, g), &atom_ops::inv(atom, s))
        });
        let _ = self.atom_classes[i].set(classes);
        Ok(self.atom_classes[i].get().expect("just set"))
    }

    /// Whether classes come from enumerating the whole group.
    pub fn uses_brute_force_classes(&self) -> bool {
        self.is_finite()
            && matches!(self.order_of_group(), Ok(Some(n)) if n <= self.options.enumeration_cap)
    }

    fn component_rep(&self, i: usize, c: &Component) -> Result<Component> {
        match analytic_component_rep(&self.atoms()[i], c) {
            Some(rep) => Ok(rep),
            None => self
                .atom_classes(i)?
                .rep_of(c)
                .cloned()
                .ok_or_else(|| GroupError::ElementMismatch(c.to_string())),
        }
    }

    fn component_members(&self, i: usize, c: &Component) -> Result<Vec<Component>> {
        let atom = &self.atoms()[i];
        if !component_class_is_finite(atom, c) {
            return Err(GroupError::InfiniteGroup(format!("class of {c} in {atom}")));
        }
        match analytic_component_members(atom, c) {
            Some(m) => Ok(m),
            None => {
                let classes = self.atom_classes(i)?;
                let id = classes
                    .class_of(c)
                    .ok_or_else(|| GroupError::ElementMismatch(c.to_string()))?;
                Ok(classes.members(id).to_vec())
            }
        }
    }

    /// Class representatives of the torsion elements of atom `i`.
    pub(crate) fn atom_torsion_class_reps(&self, i: usize) -> Result<Vec<Component>> {
        use Component::*;
        let atom = &self.atoms()[i];
        Ok(match atom {
            Atom::Cyclic(n) => (0..*n).map(Mod).collect(),
            Atom::FreeAbelian(_) | Atom::Heisenberg => vec![atom_ops::identity(atom)],
            Atom::Dihedral(n) => {
                let rotations = (0..=n / 2).map(|k| Dihedral {
                    reflection: false,
                    rotation: k,
                });
                let reflections = (0..if n % 2 == 0 { 2 } else { 1 }).map(|k| Dihedral {
                    reflection: true,
                    rotation: k,
                });
                rotations.chain(reflections).collect()
            }
            Atom::InfiniteDihedral => [(false, 0), (true, 0), (true, 1)]
                .into_iter()
                .map(|(reflection, rotation)| InfDihedral {
                    reflection,
                    rotation,
                })
                .collect(),
            _ => {
                let cap = self.options.order_cap;
                self.atom_classes(i)?
                    .reps()
                    .iter()
                    .filter(|c| atom_ops::order(atom, c, cap).is_some())
                    .cloned()
                    .collect()
            }
        })
    }

    /// Canonical representative of `C(g)` from the componentwise description,
    /// never from whole-group enumeration.
    pub fn analytic_class_rep(&self, g: &Element) -> Result<Element> {
        self.check(g)?;
        Ok(Element(
            g.0.iter()
                .enumerate()
                .map(|(i, c)| self.component_rep(i, c))
                .collect::<Result<_>>()?,
        ))
    }

    /// Canonical representative (minimum) of `C(g)`.
    pub fn class_rep(&self, g: &Element) -> Result<Element> {
        if self.uses_brute_force_classes() {
            self.check(g)?;
            let classes = self.finite_classes()?;
            return classes
                .rep_of(g)
                .cloned()
                .ok_or_else(|| GroupError::ElementMismatch(g.to_string()));
        }
        self.analytic_class_rep(g)
    }

    pub fn is_conjugate(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.class_rep(a)? == self.class_rep(b)?)
    }

    pub fn class_is_finite(&self, g: &Element) -> bool {
        self.atoms()
            .iter()
            .zip(&g.0)
            .all(|(atom, c)| component_class_is_finite(atom, c))
    }

    /// `|C(g)|`, or `None` when the class is infinite.
    pub fn class_size(&self, g: &Element) -> Result<Option<usize>> {
        if !self.class_is_finite(g) {
            return Ok(None);
        }
        if self.uses_brute_force_classes() {
            let classes = self.finite_classes()?;
            let id = classes
                .class_of(g)
                .ok_or_else(|| GroupError::ElementMismatch(g.to_string()))?;
            return Ok(Some(classes.members(id).len()));
        }
        let mut size = 1usize;
        for (i, c) in g.0.iter().enumerate() {
            size = size.saturating_mul(self.component_members(i, c)?.len());
        }
        Ok(Some(size))
    }

    /// `C(h)`: all members when finite, otherwise the members of word length
    /// at most `radius`.
    pub fn conjugacy_class(&self, h: &Element, radius: u32) -> Result<ConjugacyClass> {
        let representative = self.class_rep(h)?;
        if self.uses_brute_force_classes() {
            let classes = self.finite_classes()?;
            let id = classes.class_of(h).expect("checked by class_rep");
            return Ok(ConjugacyClass {
                representative,
                members: classes.members(id).to_vec(),
                complete: true,
                certified: true,
                radius: None,
            });
        }
        if self.class_is_finite(h) {
            let lists = h
                .0
                .iter()
                .enumerate()
                .map(|(i, c)| self.component_members(i, c))
                .collect::<Result<Vec<_>>>()?;
            let members: Vec<Element> = lists
                .into_iter()
                .multi_cartesian_product()
                .map(Element)
                .collect();
            return Ok(ConjugacyClass {
                representative,
                members,
                complete: true,
                certified: true,
                radius: None,
            });
        }
        let mut members = Vec::new();
        for (g, _) in self.enumerate_ball(radius)?.iter() {
            if self.analytic_class_rep(g)? == representative {
                members.push(g.clone());
            }
        }
        members.sort();
        Ok(ConjugacyClass {
            representative,
            members,
            complete: false,
            certified: true,
            radius: Some(radius),
        })
    }

    /// Searches the ball of `radius` for `f` with `f a f^-1 = b`.
    pub fn find_conjugator(&self, a: &Element, b: &Element, radius: u32) -> Result<Option<Element>> {
        Ok(self
            .enumerate_ball(radius)?
            .iter()
            .find(|(f, _)| self.conjugate(f, a) == *b)
            .map(|(f, _)| f.clone()))
    }
}
