use std::collections::HashMap;
use std::fmt;

use super::{factorial, hook_dimension, mn_character, Partition};
use crate::linalg::{rat, Rational};
use crate::semigroup::FiniteSemigroup;

/// A permutation of `{0, .., k-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    /// Panics unless `image` is a permutation.
    pub fn new(image: Vec<usize>) -> Self {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            assert!(x < image.len() && !seen[x], "not a permutation: {image:?}");
            seen[x] = true;
        }
        Self {
            image: image.into_iter().map(|x| x as u8).collect(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self {
            image: (0..k as u8).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u8; self.degree()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u8;
        }
        Permutation { image }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of degree `k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..k).collect();
        let mut out = vec![Permutation::new(current.clone())];
        while let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) {
            let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Permutation::new(current.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// The symmetric group `S_k` with its elements in lexicographic order, so
/// the identity comes first.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    k: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl SymmetricGroup {
    pub fn new(k: usize) -> Self {
        let elements = Permutation::all(k);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self { k, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p]
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].after(&self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// Transposition `(1 2)` and the long cycle `(1 2 … k)`.
    pub fn generators(&self) -> Vec<usize> {
        let k = self.k;
        if k < 2 {
            return Vec::new();
        }
        let mut swap: Vec<usize> = (0..k).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
        let mut gens = vec![self.index[&Permutation::new(swap)]];
        if k > 2 {
            gens.push(self.index[&Permutation::new(cycle)]);
        }
        gens
    }

    pub fn semigroup(&self) -> FiniteSemigroup {
        let n = self.order();
        let table = (0..n)
            .map(|a| (0..n).map(|b| self.product(a, b)).collect())
            .collect();
        FiniteSemigroup::new(self.elements.iter().map(ToString::to_string).collect(), table)
            .expect("a group table is associative")
    }
}

/// `z_λ = (f^λ / k!) Σ_σ χ_λ(σ⁻¹) σ` as coefficients over the elements of
/// `S_k` in [`SymmetricGroup`] order.
pub fn central_idempotent(group: &SymmetricGroup, lambda: &Partition) -> Vec<Rational> {
    assert_eq!(lambda.weight(), group.degree());
    let scale = rat(hook_dimension(lambda) as i64) / rat(factorial(group.degree()) as i64);
    group
        .elements()
        .iter()
        .map(|s| {
            let chi = mn_character(lambda, &s.inverse().cycle_type()).expect("weights agree");
            &scale * rat(chi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        let p = Permutation::new(vec![1, 2, 0]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(p.after(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.cycle_type(), Partition::new(vec![3]).unwrap());
        assert_eq!(Permutation::new(vec![1, 0, 2]).sign(), -1);
        assert_eq!(Permutation::identity(0).to_string(), "()");
    }

    #[test]
    fn group_generators_generate() {
        for k in 1..=4 {
            let g = SymmetricGroup::new(k);
            let mut reached = vec![0usize];
            let mut i = 0;
            while i < reached.len() {
                for &s in &g.generators() {
                    let x = g.product(reached[i], s);
                    if !reached.contains(&x) {
                        reached.push(x);
                    }
                }
                i += 1;
            }
            assert_eq!(reached.len(), g.order());
        }
    }

    #[test]
    fn sign_projector() {
        let g = SymmetricGroup::new(2);
        let z = central_idempotent(&g, &Partition::new(vec![1, 1]).unwrap());
        assert_eq!(z, vec![crate::linalg::ratio(1, 2), crate::linalg::ratio(-1, 2)]);
    }
}
