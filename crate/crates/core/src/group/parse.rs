//! Parser for the group-spec grammar.
//!
//! ```text
//! spec  := atom ( 'x' atom )*
//! atom  := 'Z' | 'Z^' m | 'Z/' n | 'D' n | 'Dinf' | 'S' n | 'Heis'
//!        | 'perm:' gen ( ';' gen )*       gen := ( '(' point* ')' )+
//!        | 'table:' path
//! ```
//!
//! Whitespace between tokens is ignored; a table path runs to the next
//! whitespace.

use std::path::Path;
use std::sync::Arc;

use super::perm::Perm;
use super::spec::{Atom, GroupSpec, PermAtom, TableAtom};
use super::table::CayleyTable;
use crate::error::{GroupError, Result};

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    parse_group_spec_in(text, None)
}

/// Parses a spec, resolving relative table paths against `base_dir`.
pub fn parse_group_spec_in(text: &str, base_dir: Option<&Path>) -> Result<GroupSpec> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        base_dir,
    };
    let mut atoms = vec![parser.atom()?];
    loop {
        parser.skip_ws();
        if parser.at_end() {
            break;
        }
        if parser.peek() != Some(b'x') {
            return Err(GroupError::syntax(parser.pos, "expected 'x' between atoms"));
        }
        parser.pos += 1;
        atoms.push(parser.atom()?);
    }
    Ok(GroupSpec::new(atoms))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    base_dir: Option<&'a Path>,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(GroupError::syntax(start, "expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse()
            .map_err(|_| GroupError::syntax(start, format!("number {digits} out of range")))
    }

    fn positive(&mut self, what: &str, min: u64) -> Result<u64> {
        let start = self.pos;
        let n = self.number()?;
        if n < min {
            return Err(GroupError::InvalidParameter(format!(
                "{what} parameter must be at least {min}, got {n} (position {start})"
            )));
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let start = self.pos;
        if self.eat("perm:") {
            return self.perm_atom();
        }
        if self.eat("table:") {
            return self.table_atom();
        }
        if self.eat("Heis") {
            return Ok(Atom::Heisenberg);
        }
        if self.eat("Dinf") {
            return Ok(Atom::InfiniteDihedral);
        }
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                if self.eat("/") {
                    Ok(Atom::Cyclic(self.positive("Z/n", 1)?))
                } else if self.eat("^") {
                    let m = self.positive("Z^m", 1)?;
                    Ok(Atom::FreeAbelian(m as usize))
                } else {
                    Ok(Atom::FreeAbelian(1))
                }
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(Atom::Dihedral(self.positive("Dn", 2)?))
            }
            Some(b'S') => {
                self.pos += 1;
                let n = self.positive("Sn", 1)?;
                Ok(Atom::Symmetric(n as usize))
            }
            Some(_) => Err(GroupError::syntax(start, "unknown atom")),
            None => Err(GroupError::syntax(start, "expected an atom")),
        }
    }

    fn perm_atom(&mut self) -> Result<Atom> {
        let mut gens: Vec<Vec<Vec<u32>>> = Vec::new();
        loop {
            gens.push(self.cycles()?);
            self.skip_ws();
            if !self.eat(";") {
                break;
            }
        }
        let degree = gens
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(1)
            .max(1) as usize;
        let mut generators = gens
            .iter()
            .map(|cycles| Perm::from_cycles(degree, cycles))
            .collect::<Result<Vec<_>>>()?;
        generators.sort();
        generators.dedup();
        Ok(Atom::Permutation(PermAtom { degree, generators }))
    }

    fn cycles(&mut self) -> Result<Vec<Vec<u32>>> {
        let mut cycles = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b'(') {
            return Err(GroupError::syntax(self.pos, "expected '(' to start a cycle"));
        }
        while {
            self.skip_ws();
            self.peek() == Some(b'(')
        } {
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let at = self.pos;
                        let p = self.number()?;
                        if p == 0 || p > u32::MAX as u64 {
                            return Err(GroupError::syntax(at, "points are numbered from 1"));
                        }
                        cycle.push(p as u32);
                    }
                    _ => return Err(GroupError::syntax(self.pos, "expected a point or ')'")),
                }
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        Ok(cycles)
    }

    fn table_atom(&mut self) -> Result<Atom> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(GroupError::syntax(start, "expected a table path"));
        }
        let origin = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let path = Path::new(&origin);
        let resolved = match self.base_dir {
            Some(base) if path.is_relative() => base.join(path),
            _ => path.to_path_buf(),
        };
        let table = CayleyTable::load(&resolved)?;
        Ok(Atom::Table(TableAtom {
            table: Arc::new(table),
            origin,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_atoms() {
        assert_eq!(parse_group_spec("Z/6").unwrap().atoms(), &[Atom::Cyclic(6)]);
        assert_eq!(parse_group_spec("S4").unwrap().atoms(), &[Atom::Symmetric(4)]);
        assert_eq!(
            parse_group_spec("Dinf").unwrap().atoms(),
            &[Atom::InfiniteDihedral]
        );
        assert_eq!(parse_group_spec("Z").unwrap().atoms(), &[Atom::FreeAbelian(1)]);
        assert_eq!(parse_group_spec(" Heis ").unwrap().atoms(), &[Atom::Heisenberg]);
    }

    #[test]
    fn products() {
        let g = parse_group_spec("Z/2 x Z^2 x D4").unwrap();
        assert_eq!(
            g.atoms(),
            &[Atom::Cyclic(2), Atom::FreeAbelian(2), Atom::Dihedral(4)]
        );
        assert_eq!(parse_group_spec("D4 x Z/2 x Z^2").unwrap(), g);
        assert_eq!(parse_group_spec("Z/2xZxZxD4").unwrap(), g);
    }

    #[test]
    fn permutation_atoms() {
        let g = parse_group_spec("perm:(1 2 3);(1 2)").unwrap();
        match &g.atoms()[0] {
            Atom::Permutation(p) => {
                assert_eq!(p.degree, 3);
                assert_eq!(p.generators.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let again = parse_group_spec(&g.to_string()).unwrap();
        assert_eq!(again, g);
        assert!(parse_group_spec("perm:(1 2)(2 3)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_group_spec("Z/6 x Q8") {
            Err(GroupError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_spec("Z/6 Z/2") {
            Err(GroupError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group_spec("Z/0"),
            Err(GroupError::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_group_spec("D1"),
            Err(GroupError::InvalidParameter(_))
        ));
        assert!(matches!(parse_group_spec(""), Err(GroupError::Syntax { .. })));
        assert!(matches!(
            parse_group_spec("Z/6 x"),
            Err(GroupError::Syntax { .. })
        ));
    }

    #[test]
    fn table_paths() {
        let dir = std::env::temp_dir().join(format!("kfin-parse-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let table = CayleyTable::new(0, vec![vec![0, 1], vec![1, 0]]).unwrap();
        std::fs::write(
            dir.join("z2.json"),
            serde_json::to_string(&table.to_file_data()).unwrap(),
        )
        .unwrap();
        let g = parse_group_spec_in("table:z2.json x Z/3", Some(&dir)).unwrap();
        assert_eq!(g.to_string(), "Z/3 x table:z2.json");
        let bad = dir.join("bad.json");
        std::fs::write(
            &bad,
            r#"{"format":"kfin-table","version":1,"size":2,"identity":0,"table":[[0,1],[1,1]]}"#,
        )
        .unwrap();
        assert!(matches!(
            parse_group_spec(&format!("table:{}", bad.display())),
            Err(GroupError::InvalidTable(_))
        ));
        std::fs::remove_dir_all(&dir).ok();
    }
}
