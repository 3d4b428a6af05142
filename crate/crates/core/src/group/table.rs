//! Groups given by an explicit multiplication table.
//!
//! On disk a table is a JSON document:
//!
//! ```json
//! { "format": "kfin-table", "version": 1, "size": 2, "identity": 0,
//!   "table": [[0, 1], [1, 0]] }
//! ```
//!
//! `table[i][j]` is the index of the product `i * j`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

pub const TABLE_FORMAT: &str = "kfin-table";
pub const TABLE_VERSION: u32 = 1;

/// Full axiom checks (associativity on all triples) run up to this order.
pub const FULL_CHECK_LIMIT: usize = 512;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub format: String,
    pub version: u32,
    pub size: usize,
    pub identity: usize,
    pub table: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    size: usize,
    identity: u32,
    products: Vec<u32>,
    inverses: Vec<u32>,
}

impl CayleyTable {
    /// Validates the group axioms and builds the table.
    pub fn new(identity: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if identity >= n {
            return Err(GroupError::InvalidTable(format!(
                "identity index {identity} out of range"
            )));
        }
        let mut products = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v as usize >= n {
                    return Err(GroupError::InvalidTable(format!(
                        "entry {v} in row {i} is not closed"
                    )));
                }
            }
            products.extend_from_slice(row);
        }
        let e = identity as u32;
        let at = |a: u32, b: u32| products[a as usize * n + b as usize];
        for a in 0..n as u32 {
            if at(e, a) != a || at(a, e) != a {
                return Err(GroupError::InvalidTable(format!(
                    "index {identity} is not a two-sided identity for {a}"
                )));
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n as u32 {
            let inv = (0..n as u32).find(|&b| at(a, b) == e && at(b, a) == e);
            match inv {
                Some(b) => inverses.push(b),
                None => {
                    return Err(GroupError::InvalidTable(format!("element {a} has no inverse")))
                }
            }
        }
        if n <= FULL_CHECK_LIMIT {
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    let ab = at(a, b);
                    for c in 0..n as u32 {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(CayleyTable {
            size: n,
            identity: e,
            products,
            inverses,
        })
    }

    pub fn from_file_data(file: TableFile) -> Result<Self> {
        if file.format != TABLE_FORMAT {
            return Err(GroupError::InvalidTable(format!(
                "unknown format tag {:?}",
                file.format
            )));
        }
        if file.version != TABLE_VERSION {
            return Err(GroupError::InvalidTable(format!(
                "unsupported table version {}",
                file.version
            )));
        }
        if file.size != file.table.len() {
            return Err(GroupError::InvalidTable(format!(
                "size {} does not match {} rows",
                file.size,
                file.table.len()
            )));
        }
        CayleyTable::new(file.identity, file.table)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text)
            .map_err(|e| GroupError::InvalidTable(format!("malformed table document: {e}")))?;
        Self::from_file_data(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_file_data(&self) -> TableFile {
        TableFile {
            format: TABLE_FORMAT.to_string(),
            version: TABLE_VERSION,
            size: self.size,
            identity: self.identity as usize,
            table: self
                .products
                .chunks(self.size)
                .map(<[u32]>::to_vec)
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.products[a as usize * self.size + b as usize]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// Greedy generating set: scan indices in order and keep every element
    /// not already in the subgroup generated so far.
    pub fn greedy_generators(&self) -> Vec<u32> {
        let n = self.size;
        let mut in_subgroup = vec![false; n];
        in_subgroup[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut gens = Vec::new();
        for g in 0..n as u32 {
            if in_subgroup[g as usize] {
                continue;
            }
            gens.push(g);
            // re-close under right multiplication by all generators
            let mut frontier = members.clone();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    for y in [self.mul(x, s), self.mul(x, self.inverse(s))] {
                        if !in_subgroup[y as usize] {
                            in_subgroup[y as usize] = true;
                            members.push(y);
                            frontier.push(y);
                        }
                    }
                }
            }
        }
        gens
    }
}
