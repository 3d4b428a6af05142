//! Reference computations written independently of the library: groups as
//! explicit permutation sets, conjugacy by trying every conjugator, and
//! direct summation.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

pub type P = Vec<u16>;

/// `(a b)(i) = a(b(i))`
pub fn compose(a: &P, b: &P) -> P {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn inverse(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u16;
    }
    out
}

pub fn closure(gens: &[P]) -> Vec<P> {
    let n = gens[0].len();
    let id: P = (0..n as u16).collect();
    let mut seen: HashSet<P> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let mut all: Vec<P> = seen.into_iter().collect();
    all.sort();
    all
}

fn order(p: &P) -> u64 {
    let id: P = (0..p.len() as u16).collect();
    let mut cur = p.clone();
    let mut d = 1;
    while cur != id {
        cur = compose(&cur, p);
        d += 1;
    }
    d
}

fn power(p: &P, k: u64) -> P {
    let mut out: P = (0..p.len() as u16).collect();
    for _ in 0..k {
        out = compose(&out, p);
    }
    out
}

/// Number of power-conjugacy classes, straight from the definition.
pub fn ffin_of(elements: &[P]) -> usize {
    let mut class_of: HashMap<P, usize> = HashMap::new();
    let mut reps: Vec<P> = Vec::new();
    for g in elements {
        if class_of.contains_key(g) {
            continue;
        }
        let id = reps.len();
        for f in elements {
            class_of.insert(compose(&compose(f, g), &inverse(f)), id);
        }
        reps.push(g.clone());
    }
    // label[i] = smallest class reachable through powers
    let mut label: Vec<usize> = (0..reps.len()).collect();
    loop {
        let mut changed = false;
        for (i, g) in reps.iter().enumerate() {
            let d = order(g);
            for a in 1..=d {
                let ga = power(g, a);
                let j = class_of[&ga];
                if order(&ga) == d {
                    let m = label[i].min(label[j]);
                    if label[i] != m || label[j] != m {
                        label[i] = m;
                        label[j] = m;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    label.iter().collect::<HashSet<_>>().len()
}

pub fn dihedral(n: u16) -> Vec<P> {
    let rot: P = (0..n).map(|i| (i + 1) % n).collect();
    let refl: P = (0..n).map(|i| (n - i) % n).collect();
    closure(&[rot, refl])
}

pub fn symmetric(n: u16) -> Vec<P> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut swap: P = (0..n).collect();
    swap.swap(0, 1);
    let cycle: P = (0..n).map(|i| (i + 1) % n).collect();
    closure(&[swap, cycle])
}

/// For an abelian group, classes are the cyclic subgroups.
pub fn ffin_abelian(ns: &[u64]) -> usize {
    let mut tuples: Vec<Vec<u64>> = vec![vec![]];
    for &n in ns {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let mut subgroups: HashSet<Vec<Vec<u64>>> = HashSet::new();
    for g in tuples {
        let mut sub: Vec<Vec<u64>> = Vec::new();
        let mut cur: Vec<u64> = vec![0; ns.len()];
        loop {
            sub.push(cur.clone());
            cur = cur.iter().zip(&g).zip(ns).map(|((c, x), n)| (c + x) % n).collect();
            if cur.iter().all(|&c| c == 0) {
                break;
            }
        }
        sub.sort();
        subgroups.insert(sub);
    }
    subgroups.len()
}

pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

/// Partitions of `n` with parts at most `max`, by recursion.
pub fn partitions(n: u64, max: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|k| partitions(n - k, k)).sum()
}

/// Word-length spheres of a Cayley graph by breadth-first search.
pub fn bfs_lengths<T: Clone + Eq + std::hash::Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    radius: u32,
) -> HashMap<T, u32> {
    let mut dist = HashMap::from([(identity.clone(), 0)]);
    let mut frontier = vec![identity];
    for l in 1..=radius {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = mul(g, s);
                if !dist.contains_key(&h) {
                    dist.insert(h.clone(), l);
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Infinite dihedral group as affine maps `t -> s t + c` of the integers.
pub type Affine = (i64, i64);

pub fn affine_mul(a: &Affine, b: &Affine) -> Affine {
    (a.0 * b.0, a.0 * b.1 + a.1)
}

/// `[a,b,c][a',b',c'] = [a+a', b+b', c+c'+a b']`
pub fn heis_mul(x: &[i64; 3], y: &[i64; 3]) -> [i64; 3] {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]]
}

pub fn majorant_direct(c: f64, d: u32, b: u32, n: u64) -> f64 {
    (1..=n)
        .map(|l| {
            let l = l as f64;
            c.sqrt() * l.powf(d as f64 / 2.0) / (l - 0.5).powi(b as i32)
        })
        .sum()
}
