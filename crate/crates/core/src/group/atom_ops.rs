//! Per-atom group laws, inverses, orders and default generators.

use num_integer::Integer;

use super::element::Component;
use super::perm::Perm;
use super::spec::Atom;
use super::OrderResult;

pub(crate) fn identity(atom: &Atom) -> Component {
    match atom {
        Atom::Cyclic(_) => Component::Mod(0),
        Atom::FreeAbelian(m) => Component::Vector(vec![0; *m]),
        Atom::Dihedral(_) => Component::Dihedral {
            reflection: false,
            rotation: 0,
        },
        Atom::InfiniteDihedral => Component::InfDihedral {
            reflection: false,
            rotation: 0,
        },
        Atom::Symmetric(n) => Component::Perm(Perm::identity(*n)),
        Atom::Permutation(p) => Component::Perm(Perm::identity(p.degree)),
        Atom::Heisenberg => Component::Heisenberg([0; 3]),
        Atom::Table(t) => Component::Table(t.table.identity()),
    }
}

/// Product of two components of the same atom. Mismatched components are a
/// caller bug; membership is checked by [`super::Group::check`].
pub(crate) fn mul(atom: &Atom, a: &Component, b: &Component) -> Component {
    use Component::*;
    match (atom, a, b) {
        (Atom::Cyclic(n), Mod(x), Mod(y)) => Mod((x + y) % n),
        (Atom::FreeAbelian(_), Vector(x), Vector(y)) => {
            Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
        }
        // x^r y^a * x^s y^b = x^(r+s) y^((-1)^s a + b)
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection: r,
                rotation: a,
            },
            Dihedral {
                reflection: s,
                rotation: b,
            },
        ) => {
            let a = if *s { (n - a) % n } else { *a };
            Dihedral {
                reflection: r ^ s,
                rotation: (a + b) % n,
            }
        }
        (
            Atom::InfiniteDihedral,
            InfDihedral {
                reflection: r,
                rotation: a,
            },
            InfDihedral {
                reflection: s,
                rotation: b,
            },
        ) => {
            let a = if *s { -a } else { *a };
            InfDihedral {
                reflection: r ^ s,
                rotation: a + b,
            }
        }
        (Atom::Symmetric(_) | Atom::Permutation(_), Perm(x), Perm(y)) => Perm(x.compose(y)),
        (Atom::Heisenberg, Heisenberg(x), Heisenberg(y)) => {
            Heisenberg([x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]])
        }
        (Atom::Table(t), Table(x), Table(y)) => Table(t.table.mul(*x, *y)),
        _ => panic!("component mismatch for atom {atom}: {a} * {b}"),
    }
}

pub(crate) fn inv(atom: &Atom, a: &Component) -> Component {
    use Component::*;
    match (atom, a) {
        (Atom::Cyclic(n), Mod(x)) => Mod((n - x) % n),
        (Atom::FreeAbelian(_), Vector(x)) => Vector(x.iter().map(|v| -v).collect()),
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection,
                rotation,
            },
        ) => {
            if *reflection {
                a.clone()
            } else {
                Dihedral {
                    reflection: false,
                    rotation: (n - rotation) % n,
                }
            }
        }
        (
            Atom::InfiniteDihedral,
            InfDihedral {
                reflection,
                rotation,
            },
        ) => {
            if *reflection {
                a.clone()
            } else {
                InfDihedral {
                    reflection: false,
                    rotation: -rotation,
                }
            }
        }
        (Atom::Symmetric(_) | Atom::Permutation(_), Perm(p)) => Perm(p.inverse()),
        (Atom::Heisenberg, Heisenberg([x, y, z])) => Heisenberg([-x, -y, -z + x * y]),
        (Atom::Table(t), Table(i)) => Table(t.table.inverse(*i)),
        _ => panic!("component mismatch for atom {atom}: {a}"),
    }
}

/// Order of a component; `None` means infinite (or beyond `cap` for tables).
pub(crate) fn order(atom: &Atom, a: &Component, cap: u64) -> Option<u64> {
    use Component::*;
    match (atom, a) {
        (Atom::Cyclic(n), Mod(x)) => Some(n / n.gcd(x)),
        (Atom::FreeAbelian(_), Vector(v)) => v.iter().all(|&c| c == 0).then_some(1),
        (
            Atom::Dihedral(n),
            Dihedral {
                reflection,
                rotation,
            },
        ) => Some(if *reflection { 2 } else { n / n.gcd(rotation) }),
        (
            Atom::InfiniteDihedral,
            InfDihedral {
                reflection,
                rotation,
            },
        ) => match (reflection, rotation) {
            (true, _) => Some(2),
            (false, 0) => Some(1),
            _ => None,
        },
        (Atom::Symmetric(_) | Atom::Permutation(_), Perm(p)) => Some(p.order()),
        (Atom::Heisenberg, Heisenberg(v)) => (*v == [0, 0, 0]).then_some(1),
        (Atom::Table(t), Table(i)) => {
            let e = t.table.identity();
            let mut cur = *i;
            for d in 1..=cap {
                if cur == e {
                    return Some(d);
                }
                cur = t.table.mul(cur, *i);
            }
            None
        }
        _ => panic!("component mismatch for atom {atom}: {a}"),
    }
}

pub(crate) fn order_result(orders: impl IntoIterator<Item = Option<u64>>, cap: u64) -> OrderResult {
    let mut acc = 1u64;
    for o in orders {
        match o {
            Some(d) => acc = acc.lcm(&d),
            None => return OrderResult::ExceedsCap(cap),
        }
    }
    OrderResult::Finite(acc)
}

/// Default generating set of an atom, inverse-closed, without the identity
/// and without duplicates.
pub(crate) fn default_generators(atom: &Atom) -> Vec<Component> {
    let mut gens: Vec<Component> = match atom {
        Atom::Cyclic(n) => vec![Component::Mod(1 % n), Component::Mod((n - 1) % n)],
        Atom::FreeAbelian(m) => (0..*m)
            .flat_map(|i| {
                [1i64, -1].into_iter().map(move |s| {
                    let mut v = vec![0; *m];
                    v[i] = s;
                    Component::Vector(v)
                })
            })
            .collect(),
        Atom::Dihedral(n) => vec![
            Component::Dihedral {
                reflection: true,
                rotation: 0,
            },
            Component::Dihedral {
                reflection: false,
                rotation: 1 % n,
            },
            Component::Dihedral {
                reflection: false,
                rotation: (n - 1) % n,
            },
        ],
        Atom::InfiniteDihedral => vec![
            Component::InfDihedral {
                reflection: true,
                rotation: 0,
            },
            Component::InfDihedral {
                reflection: false,
                rotation: 1,
            },
            Component::InfDihedral {
                reflection: false,
                rotation: -1,
            },
        ],
        // all transpositions
        Atom::Symmetric(n) => {
            let mut out = Vec::new();
            for i in 1..=*n as u32 {
                for j in i + 1..=*n as u32 {
                    out.push(Component::Perm(
                        Perm::from_cycles(*n, &[vec![i, j]]).expect("valid transposition"),
                    ));
                }
            }
            out
        }
        Atom::Permutation(p) => p
            .generators
            .iter()
            .flat_map(|g| [Component::Perm(g.clone()), Component::Perm(g.inverse())])
            .collect(),
        Atom::Heisenberg => [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]]
            .into_iter()
            .map(Component::Heisenberg)
            .collect(),
        Atom::Table(t) => t
            .table
            .greedy_generators()
            .into_iter()
            .flat_map(|g| [Component::Table(g), Component::Table(t.table.inverse(g))])
            .collect(),
    };
    let e = identity(atom);
    gens.retain(|g| *g != e);
    let mut seen = std::collections::HashSet::new();
    gens.retain(|g| seen.insert(g.clone()));
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let atom = Atom::Dihedral(4);
        let x = Component::Dihedral {
            reflection: true,
            rotation: 0,
        };
        let y = Component::Dihedral {
            reflection: false,
            rotation: 1,
        };
        let e = identity(&atom);
        let xy = mul(&atom, &x, &y);
        assert_eq!(mul(&atom, &x, &x), e);
        assert_eq!(mul(&atom, &xy, &xy), e);
        let mut y4 = e.clone();
        for _ in 0..4 {
            y4 = mul(&atom, &y4, &y);
        }
        assert_eq!(y4, e);
        assert_eq!(inv(&atom, &xy), xy);
    }

    #[test]
    fn heisenberg_commutator_is_central() {
        let atom = Atom::Heisenberg;
        let a = Component::Heisenberg([1, 0, 0]);
        let b = Component::Heisenberg([0, 1, 0]);
        let ab = mul(&atom, &a, &b);
        let comm = mul(&atom, &mul(&atom, &ab, &inv(&atom, &a)), &inv(&atom, &b));
        assert_eq!(comm, Component::Heisenberg([0, 0, 1]));
    }

    #[test]
    fn small_generating_sets_are_deduplicated() {
        assert_eq!(default_generators(&Atom::Cyclic(1)), vec![]);
        assert_eq!(default_generators(&Atom::Cyclic(2)).len(), 1);
        assert_eq!(default_generators(&Atom::Dihedral(2)).len(), 2);
        assert_eq!(default_generators(&Atom::Symmetric(4)).len(), 6);
    }
}
