//! Closed forms for `F_G`: the divisor-totient sum for finite abelian groups,
//! divisor counts for cyclic and dihedral groups, partition numbers for
//! symmetric groups.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Atom, GroupSpec};

/// Largest `n` accepted by [`partition_count`] and [`ffin_symmetric`].
pub const MAX_PARTITION_N: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub family: String,
    pub value: u64,
    pub formula_name: &'static str,
}

fn positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        Err(GroupError::InvalidParameter(format!("{what} needs a positive argument")))
    } else {
        Ok(())
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    positive(n, "factorize")?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    positive(a.min(b), "lcm")?;
    Ok(a.lcm(&b))
}

/// Sorted positive divisors.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n)? {
        let current = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..current {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(factorize(n)?.iter().map(|&(_, e)| e as u64 + 1).product())
}

/// `Σ_{d_i | n_i} φ(d_1)⋯φ(d_k) / φ(lcm(d_1, …, d_k))`, summed exactly.
/// The free rank does not enter.
pub fn ffin_abelian(torsion: &[u64], free_rank: usize) -> Result<FormulaResult> {
    let lattices = torsion
        .iter()
        .map(|&n| divisors(n))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = BigRational::zero();
    for ds in lattices.iter().multi_cartesian_product() {
        let num: BigInt = ds.iter().map(|&&d| BigInt::from(euler_phi(d).expect("d >= 1"))).product();
        let l = ds.iter().fold(1u64, |acc, &&d| acc.lcm(&d));
        sum += BigRational::new(num, BigInt::from(euler_phi(l)?));
    }
    if torsion.is_empty() {
        sum = BigRational::from_integer(BigInt::from(1));
    }
    if !sum.is_integer() {
        return Err(GroupError::Unsupported(format!(
            "divisor-totient sum {sum} is not an integer"
        )));
    }
    let mut family: Vec<String> = torsion.iter().map(|n| format!("Z/{n}")).collect();
    if free_rank > 0 {
        family.push(format!("Z^{free_rank}"));
    }
    Ok(FormulaResult {
        family: family.join(" x "),
        value: sum.to_integer().to_u64().expect("small"),
        formula_name: "abelian_divisor_totient_sum",
    })
}

pub fn ffin_cyclic(n: u64) -> Result<FormulaResult> {
    Ok(FormulaResult {
        family: format!("Z/{n}"),
        value: divisor_count(n)?,
        formula_name: "divisor_count",
    })
}

pub fn ffin_dihedral(n: u64) -> Result<FormulaResult> {
    if n < 2 {
        return Err(GroupError::InvalidParameter(format!("D{n}: n must be >= 2")));
    }
    let extra = if n.is_multiple_of(2) { 2 } else { 1 };
    Ok(FormulaResult {
        family: format!("D{n}"),
        value: divisor_count(n)? + extra,
        formula_name: "dihedral_divisor_count",
    })
}

pub fn ffin_infinite_dihedral() -> FormulaResult {
    FormulaResult {
        family: "Dinf".into(),
        value: 3,
        formula_name: "infinite_dihedral",
    }
}

/// `p(n)` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(1);
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[i - g1].clone();
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[i] = acc;
    }
    p[n].to_biguint().expect("partition numbers are non-negative")
}

pub fn ffin_symmetric(n: usize) -> Result<FormulaResult> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(GroupError::InvalidParameter(format!(
            "S{n}: n must be in 1..={MAX_PARTITION_N}"
        )));
    }
    Ok(FormulaResult {
        family: format!("S{n}"),
        value: partition_count(n).to_u64().expect("p(200) fits in u64"),
        formula_name: "partition_count",
    })
}

/// The closed form that applies to `spec`, if any.
pub fn formula_for(spec: &GroupSpec) -> Option<Result<FormulaResult>> {
    let atoms = spec.atoms();
    if atoms
        .iter()
        .all(|a| matches!(a, Atom::Cyclic(_) | Atom::FreeAbelian(_)))
    {
        let torsion: Vec<u64> = atoms
            .iter()
            .filter_map(|a| match a {
                Atom::Cyclic(n) if *n > 1 => Some(*n),
                _ => None,
            })
            .collect();
        let free: usize = atoms
            .iter()
            .map(|a| match a {
                Atom::FreeAbelian(m) => *m,
                _ => 0,
            })
            .sum();
        if torsion.len() == 1 && free == 0 {
            return Some(ffin_cyclic(torsion[0]));
        }
        return Some(ffin_abelian(&torsion, free));
    }
    match atoms {
        [Atom::Dihedral(n)] => Some(ffin_dihedral(*n)),
        [Atom::InfiniteDihedral] => Some(Ok(ffin_infinite_dihedral())),
        [Atom::Symmetric(n)] => Some(ffin_symmetric(*n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(lcm(4, 6).unwrap(), 12);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert!(euler_phi(0).is_err());
        assert!(divisors(0).is_err());
        assert!(lcm(0, 3).is_err());
        assert_eq!(factorize(1_000_000_007).unwrap(), vec![(1_000_000_007, 1)]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(ffin_abelian(&[6], 0).unwrap().value, 4);
        assert_eq!(ffin_abelian(&[2, 2], 0).unwrap().value, 4);
        assert_eq!(ffin_abelian(&[6], 3).unwrap().value, 4);
        assert_eq!(ffin_abelian(&[], 2).unwrap().value, 1);
        assert_eq!(ffin_dihedral(3).unwrap().value, 3);
        assert_eq!(ffin_dihedral(4).unwrap().value, 5);
        assert!(ffin_dihedral(1).is_err());
        assert_eq!(ffin_infinite_dihedral().value, 3);
        let p: Vec<u64> = (1..=6).map(|n| ffin_symmetric(n).unwrap().value).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(100).to_string(), "190569292");
        assert!(ffin_symmetric(201).is_err());
    }

    #[test]
    fn dispatch() {
        let f = |s: &str| formula_for(&s.parse().unwrap()).map(|r| r.unwrap().value);
        assert_eq!(f("Z/12"), Some(6));
        assert_eq!(f("Z/2 x Z/2 x Z"), Some(4));
        assert_eq!(f("D10"), Some(6));
        assert_eq!(f("S6"), Some(11));
        assert_eq!(f("Dinf"), Some(3));
        assert_eq!(f("Z^2"), Some(1));
        assert_eq!(f("S3 x Z/2"), None);
    }
}
