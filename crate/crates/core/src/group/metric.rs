//! Word metric: memoized breadth-first spheres per atom, combined additively
//! for products (the length of a product element is the sum of the lengths
//! of its components under the product generating set).

use std::collections::HashMap;
use std::sync::Arc;

use super::atom_ops;
use super::element::{Component, Element};
use super::spec::Atom;
use super::Group;
use crate::error::{GroupError, Result};

/// Spheres of one atom's Cayley graph, grown on demand.
#[derive(Debug)]
pub(crate) struct AtomBall {
    generators: Vec<Component>,
    spheres: Vec<Vec<Component>>,
    lengths: HashMap<Component, u32>,
    exhausted: bool,
}

impl AtomBall {
    pub(crate) fn new(identity: Component, generators: Vec<Component>) -> Self {
        let mut lengths = HashMap::new();
        lengths.insert(identity.clone(), 0);
        let exhausted = generators.is_empty();
        AtomBall {
            generators,
            spheres: vec![vec![identity]],
            lengths,
            exhausted,
        }
    }

    fn radius(&self) -> u32 {
        self.spheres.len() as u32 - 1
    }

    /// Extends the spheres up to `radius` (or until the group is exhausted).
    fn grow(&mut self, atom: &Atom, radius: u32, cap: usize) -> Result<()> {
        while !self.exhausted && self.radius() < radius {
            let next_len = self.radius() + 1;
            let mut next = Vec::new();
            for g in self.spheres.last().expect("nonempty") {
                for s in &self.generators {
                    let h = atom_ops::mul(atom, g, s);
                    if !self.lengths.contains_key(&h) {
                        self.lengths.insert(h.clone(), next_len);
                        next.push(h);
                    }
                }
            }
            if self.lengths.len() > cap {
                return Err(GroupError::CapExceeded {
                    what: "word-length ball",
                    cap,
                });
            }
            if next.is_empty() {
                self.exhausted = true;
            } else {
                next.sort();
                self.spheres.push(next);
            }
        }
        Ok(())
    }

    fn sphere(&self, l: u32) -> &[Component] {
        self.spheres.get(l as usize).map_or(&[], |s| s.as_slice())
    }
}

/// The most recently built product ball.
#[derive(Debug, Default)]
pub(crate) struct ProductBall {
    last: Option<(u32, Arc<Vec<(Element, u32)>>)>,
}

impl ProductBall {
    pub(crate) fn new() -> Self {
        ProductBall::default()
    }
}

impl Group {
    /// Sphere of radius `l` in atom `i`.
    fn atom_sphere(&self, i: usize, l: u32) -> Result<Vec<Component>> {
        let mut ball = self.atom_balls[i].lock().expect("ball lock");
        ball.grow(&self.atoms()[i], l, self.options.ball_cap)?;
        Ok(ball.sphere(l).to_vec())
    }

    fn atom_sphere_sizes(&self, i: usize, radius: u32) -> Result<Vec<usize>> {
        let mut ball = self.atom_balls[i].lock().expect("ball lock");
        ball.grow(&self.atoms()[i], radius, self.options.ball_cap)?;
        Ok((0..=radius).map(|l| ball.sphere(l).len()).collect())
    }

    /// Word length of one component within its atom.
    pub fn component_length(&self, i: usize, c: &Component, radius_cap: u32) -> Result<u32> {
        let atom = &self.atoms()[i];
        let mut ball = self.atom_balls[i].lock().expect("ball lock");
        loop {
            if let Some(&l) = ball.lengths.get(c) {
                return Ok(l);
            }
            if ball.exhausted || ball.radius() >= radius_cap {
                return Err(GroupError::AboveCap { cap: radius_cap });
            }
            let next = ball.radius() + 1;
            ball.grow(atom, next, self.options.ball_cap)?;
        }
    }

    /// Length of the shortest word in the default generators equal to `g`.
    pub fn word_length(&self, g: &Element, radius_cap: u32) -> Result<u32> {
        self.check(g)?;
        let mut total = 0u32;
        for (i, c) in g.0.iter().enumerate() {
            let budget = radius_cap - total;
            total += self
                .component_length(i, c, budget)
                .map_err(|e| match e {
                    GroupError::AboveCap { .. } => GroupError::AboveCap { cap: radius_cap },
                    other => other,
                })?;
        }
        Ok(total)
    }

    /// Number of elements at each length `0..=radius`.
    pub fn sphere_sizes(&self, radius: u32) -> Result<Vec<usize>> {
        let mut acc = vec![0usize; radius as usize + 1];
        acc[0] = 1;
        for i in 0..self.atoms().len() {
            let sizes = self.atom_sphere_sizes(i, radius)?;
            let mut next = vec![0usize; radius as usize + 1];
            for (a, &x) in acc.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (b, &y) in sizes.iter().enumerate().take(radius as usize + 1 - a) {
                    next[a + b] = next[a + b].saturating_add(x.saturating_mul(y));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// All elements of length at most `radius`, with lengths, sorted by
    /// `(length, element)`.
    pub fn enumerate_ball(&self, radius: u32) -> Result<Arc<Vec<(Element, u32)>>> {
        {
            let cache = self.product_ball.lock().expect("ball lock");
            if let Some((r, ball)) = &cache.last {
                if *r == radius {
                    return Ok(Arc::clone(ball));
                }
            }
        }
        let cap = self.options.ball_cap;
        let total: usize = self
            .sphere_sizes(radius)?
            .iter()
            .fold(0usize, |a, &b| a.saturating_add(b));
        if total > cap {
            return Err(GroupError::CapExceeded {
                what: "word-length ball",
                cap,
            });
        }
        // partial products: (components so far, length so far)
        let mut partial: Vec<(Vec<Component>, u32)> = vec![(Vec::new(), 0)];
        for i in 0..self.atoms().len() {
            let spheres = (0..=radius)
                .map(|l| self.atom_sphere(i, l))
                .collect::<Result<Vec<_>>>()?;
            let mut next = Vec::new();
            for (prefix, len) in &partial {
                for (l, sphere) in spheres.iter().enumerate().take((radius - len) as usize + 1) {
                    for c in sphere {
                        let mut comps = prefix.clone();
                        comps.push(c.clone());
                        next.push((comps, len + l as u32));
                    }
                }
            }
            partial = next;
        }
        let mut ball: Vec<(Element, u32)> = partial
            .into_iter()
            .map(|(comps, l)| (Element(comps), l))
            .collect();
        ball.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        let ball = Arc::new(ball);
        self.product_ball.lock().expect("ball lock").last = Some((radius, Arc::clone(&ball)));
        Ok(ball)
    }
}
