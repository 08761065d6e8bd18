//! Finite semigroups given by a full multiplication table.
//!
//! Elements are the indices `0..size`. All products are read from the table:
//! `product(a, b)` is the element `a·b`.

mod closure;
mod green;
mod sandwich;

pub use closure::{closure, Closure};
pub use green::{ElementPartition, GreenData};
pub use sandwich::{is_left_invertible_sandwich, SandwichEntry, SandwichMatrix};

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Exhaustive associativity checks are used up to this size.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 300;
/// Random triples sampled above the exhaustive limit.
pub const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("semigroup must have at least one element")]
    Empty,
    #[error("table has {rows} rows but {labels} labels")]
    Shape { rows: usize, labels: usize },
    #[error("table row {row} has {len} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry ({a}, {b}) = {value} is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("not associative: ({a}·{b})·{c} != {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator index {0} is out of range")]
    BadGenerator(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("closure exceeded the limit of {0} elements")]
    BoundExceeded(usize),
    #[error("J-class {0} is not regular")]
    NotRegular(usize),
    #[error("H-class of {0} is not a group")]
    NotAGroup(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<u32>,
    labels: Vec<String>,
    generators: Option<Vec<usize>>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table, verifying shape and
    /// associativity.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let size = labels.len();
        if size == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != size {
            return Err(SemigroupError::Shape {
                rows: table.len(),
                labels: size,
            });
        }
        let mut flat = Vec::with_capacity(size * size);
        for (a, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(SemigroupError::RaggedRow {
                    row: a,
                    len: row.len(),
                    expected: size,
                });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(SemigroupError::OutOfRange { a, b, value: v });
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(labels, flat, None)
    }

    pub(crate) fn from_flat(
        labels: Vec<String>,
        table: Vec<u32>,
        generators: Option<Vec<usize>>,
    ) -> Result<Self, SemigroupError> {
        let size = labels.len();
        debug_assert_eq!(table.len(), size * size);
        if let Some(gens) = &generators {
            if let Some(&g) = gens.iter().find(|&&g| g >= size) {
                return Err(SemigroupError::BadGenerator(g));
            }
        }
        let s = Self {
            size,
            table,
            labels,
            generators,
        };
        s.verify_associativity()?;
        Ok(s)
    }

    pub fn with_generators(mut self, generators: Vec<usize>) -> Result<Self, SemigroupError> {
        if let Some(&g) = generators.iter().find(|&&g| g >= self.size) {
            return Err(SemigroupError::BadGenerator(g));
        }
        self.generators = Some(generators);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn product3(&self, a: usize, b: usize, c: usize) -> usize {
        self.product(self.product(a, b), c)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.product(a, b)).collect())
            .collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn verify_associativity(&self) -> Result<(), SemigroupError> {
        let n = self.size;
        let check = |a: usize, b: usize, c: usize| {
            if self.product(self.product(a, b), c) != self.product(a, self.product(b, c)) {
                Err(SemigroupError::NotAssociative { a, b, c })
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
            return Ok(());
        }
        if let Some(gens) = &self.generators {
            for &g in gens {
                for b in 0..n {
                    for c in 0..n {
                        check(g, b, c)?;
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_7ab1e);
        for _ in 0..SAMPLED_TRIPLES {
            check(
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            )?;
        }
        Ok(())
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.product(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// The identity element, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|a| self.product(e, a) == a && self.product(a, e) == a))
    }

    pub fn is_regular_element(&self, a: usize) -> bool {
        self.elements().any(|b| self.product3(a, b, a) == a)
    }

    /// The unique idempotent power of `x`.
    pub fn omega_power(&self, x: usize) -> usize {
        // Some power of x is idempotent in a finite semigroup, so this stops.
        let mut p = x;
        while !self.is_idempotent(p) {
            p = self.product(p, x);
        }
        p
    }

    /// Elements of the cyclic subsemigroup generated by `x`.
    pub fn cyclic_subsemigroup(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut p = x;
        while seen.insert(p) {
            out.push(p);
            p = self.product(p, x);
        }
        out
    }

    /// `{h ∈ E(S) : f2·h·f1 = h and f1·h·f2 = f1·f2}`.
    pub fn sandwich_set(&self, f1: usize, f2: usize) -> Result<Vec<usize>, SemigroupError> {
        for f in [f1, f2] {
            if !self.is_idempotent(f) {
                return Err(SemigroupError::NotIdempotent(f));
            }
        }
        let f1f2 = self.product(f1, f2);
        Ok(self
            .elements()
            .filter(|&h| {
                self.is_idempotent(h)
                    && self.product3(f2, h, f1) == h
                    && self.product3(f1, h, f2) == f1f2
            })
            .collect())
    }

    /// The maximal subgroup `G_e`, i.e. the H-class of the idempotent `e`.
    pub fn maximal_subgroup(&self, e: usize) -> Result<MaximalSubgroup, SemigroupError> {
        if !self.is_idempotent(e) {
            return Err(SemigroupError::NotIdempotent(e));
        }
        let green = GreenData::compute(self);
        MaximalSubgroup::from_h_class(self, &green, e)
    }
}

/// The group H-class of an idempotent together with its induced table.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    /// The idempotent `e` (the group identity).
    pub identity: usize,
    /// Ambient indices of the group elements, in increasing order.
    pub elements: Vec<usize>,
    /// The group with local indices `0..elements.len()`.
    pub group: FiniteSemigroup,
}

impl MaximalSubgroup {
    pub fn from_h_class(
        s: &FiniteSemigroup,
        green: &GreenData,
        e: usize,
    ) -> Result<Self, SemigroupError> {
        if !s.is_idempotent(e) {
            return Err(SemigroupError::NotIdempotent(e));
        }
        let elements = green.h.class_members(green.h.class_of(e)).to_vec();
        let local = |a: usize| elements.binary_search(&a).ok();
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elements {
            for &b in &elements {
                let Some(p) = local(s.product(a, b)) else {
                    return Err(SemigroupError::NotAGroup(e));
                };
                table.push(p as u32);
            }
        }
        let labels = elements.iter().map(|&a| s.label(a).to_string()).collect();
        let group = FiniteSemigroup::from_flat(labels, table, None)?;
        let unit = local(e).expect("e lies in its own H-class");
        let is_group = group.elements().all(|a| {
            group.product(unit, a) == a
                && group.product(a, unit) == a
                && group
                    .elements()
                    .any(|b| group.product(a, b) == unit && group.product(b, a) == unit)
        });
        if !is_group {
            return Err(SemigroupError::NotAGroup(e));
        }
        Ok(Self {
            identity: e,
            elements,
            group,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn local_index(&self, a: usize) -> Option<usize> {
        self.elements.binary_search(&a).ok()
    }

    pub fn local_identity(&self) -> usize {
        self.local_index(self.identity).unwrap()
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let g = &self.group;
        let unit = self.local_identity();
        let mut gens: Vec<usize> = Vec::new();
        let mut reached = vec![false; g.size()];
        reached[unit] = true;
        for a in g.elements() {
            if reached[a] {
                continue;
            }
            gens.push(a);
            // A finite monoid generated by group elements is the subgroup.
            reached.iter_mut().for_each(|r| *r = false);
            reached[unit] = true;
            let mut queue = vec![unit];
            while let Some(x) = queue.pop() {
                for &y in &gens {
                    let p = g.product(x, y);
                    if !reached[p] {
                        reached[p] = true;
                        queue.push(p);
                    }
                }
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteSemigroup {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteSemigroup::new(labels, table).unwrap()
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            FiniteSemigroup::new(vec![], vec![]),
            Err(SemigroupError::Empty)
        );
        let e = FiniteSemigroup::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1]]);
        assert!(matches!(e, Err(SemigroupError::RaggedRow { .. })));
        let e = FiniteSemigroup::new(vec!["a".into()], vec![vec![3]]);
        assert!(matches!(e, Err(SemigroupError::OutOfRange { .. })));
        // x·y = y for x ≠ y is not associative on three points with this twist.
        let table = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        let e = FiniteSemigroup::new(vec!["a".into(), "b".into(), "c".into()], table);
        assert!(matches!(e, Err(SemigroupError::NotAssociative { .. })));
    }

    #[test]
    fn omega_power_in_groups_is_the_unit() {
        let z6 = cyclic(6);
        for x in z6.elements() {
            assert_eq!(z6.omega_power(x), 0);
        }
    }

    #[test]
    fn sandwich_set_of_an_idempotent_with_itself() {
        let z3 = cyclic(3);
        assert_eq!(z3.sandwich_set(0, 0).unwrap(), vec![0]);
        assert_eq!(z3.sandwich_set(1, 0), Err(SemigroupError::NotIdempotent(1)));
    }

    #[test]
    fn semilattice_sandwich_set_is_the_meet() {
        // Chain 0 < 1 < 2 with product = min.
        let labels = vec!["0".into(), "1".into(), "2".into()];
        let table = (0..3).map(|a| (0..3).map(|b: usize| a.min(b)).collect()).collect();
        let s = FiniteSemigroup::new(labels, table).unwrap();
        assert_eq!(s.sandwich_set(1, 2).unwrap(), vec![1]);
        assert_eq!(s.sandwich_set(2, 0).unwrap(), vec![0]);
        let g = s.maximal_subgroup(1).unwrap();
        assert_eq!(g.elements, vec![1]);
    }

    #[test]
    fn group_generators_generate() {
        let z6 = cyclic(6);
        let g = z6.maximal_subgroup(0).unwrap();
        assert_eq!(g.order(), 6);
        let gens = g.generators();
        assert_eq!(gens, vec![1]);
    }
}
