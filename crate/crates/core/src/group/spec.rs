use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::perm::Perm;
use super::table::CayleyTable;

/// A permutation group given by generators on `{1, .., degree}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermAtom {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

/// A group given by a validated multiplication table. `origin` is the path
/// the table was loaded from and only matters for rendering.
#[derive(Debug, Clone)]
pub struct TableAtom {
    pub table: Arc<CayleyTable>,
    pub origin: String,
}

impl PartialEq for TableAtom {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}
impl Eq for TableAtom {}

impl Hash for TableAtom {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state)
    }
}

impl PartialOrd for TableAtom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for TableAtom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.table.cmp(&other.table)
    }
}

/// One factor of a direct product. Variant order is the canonical atom order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Cyclic(u64),
    FreeAbelian(usize),
    Dihedral(u64),
    InfiniteDihedral,
    Symmetric(usize),
    Heisenberg,
    Permutation(PermAtom),
    Table(TableAtom),
}

impl Atom {
    pub fn is_finite(&self) -> bool {
        !matches!(
            self,
            Atom::FreeAbelian(_) | Atom::InfiniteDihedral | Atom::Heisenberg
        )
    }

    /// Trivial atoms contribute nothing to a product.
    pub fn is_trivial(&self) -> bool {
        match self {
            Atom::Cyclic(1) | Atom::Symmetric(1) => true,
            Atom::Permutation(p) => p.generators.iter().all(Perm::is_identity),
            Atom::Table(t) => t.table.size() == 1,
            _ => false,
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        matches!(self, Atom::FreeAbelian(_) | Atom::Heisenberg) || self.is_trivial()
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, Atom::Cyclic(_) | Atom::FreeAbelian(_))
            || matches!(self, Atom::Dihedral(2) | Atom::Symmetric(1) | Atom::Symmetric(2))
    }

    /// Every built-in family is virtually nilpotent: finite atoms trivially,
    /// `Z^m` and the Heisenberg group are nilpotent, and `Dinf` contains an
    /// infinite cyclic subgroup of index 2.
    pub fn is_virtually_nilpotent(&self) -> bool {
        true
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "Z/{n}"),
            Atom::FreeAbelian(1) => f.write_str("Z"),
            Atom::FreeAbelian(m) => write!(f, "Z^{m}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::InfiniteDihedral => f.write_str("Dinf"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Heisenberg => f.write_str("Heis"),
            Atom::Permutation(p) => {
                f.write_str("perm:")?;
                for (k, g) in p.generators.iter().enumerate() {
                    if k > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            Atom::Table(t) => write!(f, "table:{}", t.origin),
        }
    }
}

/// A direct product of family atoms in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    atoms: Vec<Atom>,
}

impl GroupSpec {
    /// Canonicalizes: sorts atoms, merges free abelian factors and drops
    /// trivial atoms unless nothing else is left.
    pub fn new(atoms: Vec<Atom>) -> Self {
        let mut atoms = atoms;
        atoms.sort();
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for atom in atoms {
            if let (Some(Atom::FreeAbelian(m)), Atom::FreeAbelian(k)) = (merged.last_mut(), &atom)
            {
                *m += k;
                continue;
            }
            merged.push(atom);
        }
        if merged.iter().any(|a| !a.is_trivial()) {
            merged.retain(|a| !a.is_trivial());
        } else {
            merged.truncate(1);
        }
        if merged.is_empty() {
            merged.push(Atom::Cyclic(1));
        }
        GroupSpec { atoms: merged }
    }

    pub fn trivial() -> Self {
        GroupSpec::new(vec![Atom::Cyclic(1)])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_finite(&self) -> bool {
        self.atoms.iter().all(Atom::is_finite)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.atoms.iter().all(Atom::is_torsion_free)
    }

    pub fn is_abelian(&self) -> bool {
        self.atoms.iter().all(Atom::is_abelian)
    }

    pub fn is_virtually_nilpotent(&self) -> bool {
        self.atoms.iter().all(Atom::is_virtually_nilpotent)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, atom) in self.atoms.iter().enumerate() {
            if k > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = crate::error::GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_group_spec(s)
    }
}

impl serde::Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
