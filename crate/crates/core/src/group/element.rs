use std::cmp::Ordering;
use std::fmt;

use super::perm::Perm;
use super::spec::Atom;
use crate::error::{GroupError, Result};

/// One coordinate of a product element, in the normal form of its atom.
///
/// Dihedral components denote `x^r y^k` with `r` the reflection bit.
/// Heisenberg components `[a, b, c]` follow the upper unitriangular law
/// `[a,b,c][a',b',c'] = [a+a', b+b', c+c'+a*b']`, so `c` is central.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Component {
    Mod(u64),
    Vector(Vec<i64>),
    Dihedral { reflection: bool, rotation: u64 },
    InfDihedral { reflection: bool, rotation: i64 },
    Perm(Perm),
    Heisenberg([i64; 3]),
    Table(u32),
}

/// Integers ordered by absolute value, positive before negative.
fn zigzag(z: i64) -> (u64, bool) {
    (z.unsigned_abs(), z < 0)
}

fn zigzag_cmp(a: &[i64], b: &[i64]) -> Ordering {
    a.iter()
        .map(|&z| zigzag(z))
        .cmp(b.iter().map(|&z| zigzag(z)))
}

impl Component {
    fn rank(&self) -> u8 {
        match self {
            Component::Mod(_) => 0,
            Component::Vector(_) => 1,
            Component::Dihedral { .. } => 2,
            Component::InfDihedral { .. } => 3,
            Component::Perm(_) => 4,
            Component::Heisenberg(_) => 5,
            Component::Table(_) => 6,
        }
    }
}

impl Ord for Component {
    fn cmp(&self, other: &Self) -> Ordering {
        use Component::*;
        match (self, other) {
            (Mod(a), Mod(b)) => a.cmp(b),
            (Vector(a), Vector(b)) => zigzag_cmp(a, b),
            (
                Dihedral {
                    reflection: r1,
                    rotation: k1,
                },
                Dihedral {
                    reflection: r2,
                    rotation: k2,
                },
            ) => (r1, k1).cmp(&(r2, k2)),
            (
                InfDihedral {
                    reflection: r1,
                    rotation: k1,
                },
                InfDihedral {
                    reflection: r2,
                    rotation: k2,
                },
            ) => (r1, zigzag(*k1)).cmp(&(r2, zigzag(*k2))),
            (Perm(a), Perm(b)) => a.cmp(b),
            (Heisenberg(a), Heisenberg(b)) => zigzag_cmp(a, b),
            (Table(a), Table(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Component {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_rotation(f: &mut fmt::Formatter<'_>, reflection: bool, rotation: i128) -> fmt::Result {
    match (reflection, rotation) {
        (false, 0) => f.write_str("e"),
        (true, 0) => f.write_str("x"),
        (r, 1) => write!(f, "{}y", if r { "x" } else { "" }),
        (r, k) => write!(f, "{}y^{k}", if r { "x" } else { "" }),
    }
}

fn write_ints(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Mod(v) => write!(f, "{v}"),
            Component::Vector(v) => write_ints(f, v),
            Component::Dihedral {
                reflection,
                rotation,
            } => write_rotation(f, *reflection, *rotation as i128),
            Component::InfDihedral {
                reflection,
                rotation,
            } => write_rotation(f, *reflection, *rotation as i128),
            Component::Perm(p) => write!(f, "{p}"),
            Component::Heisenberg(v) => write_ints(f, v),
            Component::Table(i) => write!(f, "{i}"),
        }
    }
}

/// A group element: one component per atom of the canonical spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub(crate) Vec<Component>);

impl Element {
    pub fn new(components: Vec<Component>) -> Self {
        Element(components)
    }

    pub fn components(&self) -> &[Component] {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_int(text: &str) -> Result<i64> {
    text.trim()
        .parse()
        .map_err(|_| GroupError::ElementMismatch(format!("expected an integer, got {text:?}")))
}

fn parse_ints(text: &str, len: usize) -> Result<Vec<i64>> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    let values = text.split(',').map(parse_int).collect::<Result<Vec<_>>>()?;
    if values.len() != len {
        return Err(GroupError::ElementMismatch(format!(
            "expected {len} coordinates, got {}",
            values.len()
        )));
    }
    Ok(values)
}

/// Parses `e`, `x`, `y`, `y^k`, `xy`, `x y^k`, `xy^-k`.
fn parse_dihedral(text: &str) -> Result<(bool, i64)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || GroupError::ElementMismatch(format!("bad dihedral element {text:?}"));
    if compact == "e" || compact == "1" {
        return Ok((false, 0));
    }
    let (reflection, rest) = match compact.strip_prefix('x') {
        Some(rest) => (true, rest),
        None => (false, compact.as_str()),
    };
    if rest.is_empty() {
        return if reflection { Ok((true, 0)) } else { Err(bad()) };
    }
    let rest = rest.strip_prefix('y').ok_or_else(bad)?;
    let k = match rest.strip_prefix('^') {
        Some(exp) => exp.parse::<i64>().map_err(|_| bad())?,
        None if rest.is_empty() => 1,
        None => return Err(bad()),
    };
    Ok((reflection, k))
}

fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let bad = |m: &str| GroupError::ElementMismatch(format!("bad permutation {text:?}: {m}"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_end = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| bad("expected '('"))?;
        let inner = &inner[..inner_end - 1];
        let points = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u32>().map_err(|_| bad("bad point")))
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = rest[inner_end + 1..].trim_start();
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| bad(&e.to_string()))
}

/// Parses one component in the notation of `atom` (before range checks).
pub(crate) fn parse_component(atom: &Atom, text: &str) -> Result<Component> {
    let text = text.trim();
    Ok(match atom {
        Atom::Cyclic(n) => Component::Mod(parse_int(text)?.rem_euclid(*n as i64) as u64),
        Atom::FreeAbelian(m) => Component::Vector(parse_ints(text, *m)?),
        Atom::Dihedral(n) => {
            let (reflection, k) = parse_dihedral(text)?;
            Component::Dihedral {
                reflection,
                rotation: k.rem_euclid(*n as i64) as u64,
            }
        }
        Atom::InfiniteDihedral => {
            let (reflection, rotation) = parse_dihedral(text)?;
            Component::InfDihedral {
                reflection,
                rotation,
            }
        }
        Atom::Symmetric(n) => Component::Perm(parse_cycles(text, *n)?),
        Atom::Permutation(p) => Component::Perm(parse_cycles(text, p.degree)?),
        Atom::Heisenberg => {
            let v = parse_ints(text, 3)?;
            Component::Heisenberg([v[0], v[1], v[2]])
        }
        Atom::Table(_) => {
            let i = text.trim_start_matches('#');
            Component::Table(i.parse().map_err(|_| {
                GroupError::ElementMismatch(format!("expected a table index, got {text:?}"))
            })?)
        }
    })
}
