use std::fmt;

use num_integer::Integer;

use crate::error::{GroupError, Result};

/// A permutation of `{0, .., n-1}` stored as its image array.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`. Text form uses
/// 1-based cycle notation, e.g. `(1 2 3)(4 5)`; the identity prints as `()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| GroupError::InvalidParameter(format!("image {i} out of range")))?;
            if *slot {
                return Err(GroupError::InvalidParameter(format!(
                    "image {i} repeated; not a bijection"
                )));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of the given degree from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p as usize > degree {
                    return Err(GroupError::InvalidParameter(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                let idx = (p - 1) as usize;
                if used[idx] {
                    return Err(GroupError::InvalidParameter(format!(
                        "point {p} appears twice; cycles must be disjoint"
                    )));
                }
                used[idx] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[idx] = next - 1;
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn compose(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm(rhs.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Nontrivial cycles, each starting at its smallest point (0-based).
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur as usize != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.0[cur as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths (including fixed points) in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_right_to_left() {
        // (1 2) * (2 3) = (1 2 3) when the right factor acts first
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
        assert_eq!(b.compose(&a).to_string(), "(1 3 2)");
    }

    #[test]
    fn order_and_cycle_type() {
        let p = Perm::from_cycles(5, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(Perm::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn rejects_overlapping_cycles() {
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }
}
