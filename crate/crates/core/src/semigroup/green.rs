use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use super::FiniteSemigroup;

/// A partition of the element indices into classes.
///
/// Classes are numbered in order of their smallest element and each class
/// lists its members in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementPartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl ElementPartition {
    /// Groups elements by a key; equal keys share a class.
    pub fn from_keys<K: Eq + Hash>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_of = Vec::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (a, k) in keys.into_iter().enumerate() {
            let next = classes.len();
            let id = *ids.entry(k).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(a);
            class_of.push(id);
        }
        Self { class_of, classes }
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn members_with(&self, a: usize) -> &[usize] {
        &self.classes[self.class_of[a]]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Meet of two partitions of the same set.
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self::from_keys((0..self.len()).map(|a| (self.class_of[a], other.class_of[a])))
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&a| coarser.related(a, c[0])))
    }

    /// Relational composition `self ∘ other` as a partition, if it is one.
    ///
    /// `a (P∘Q) b` iff there is `c` with `a P c` and `c Q b`.
    pub fn compose(&self, other: &Self) -> Option<Self> {
        let n = self.len();
        let mut rel = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for &c in self.members_with(a) {
                for &b in other.members_with(c) {
                    rel[a].insert(b);
                }
            }
        }
        // An equivalence relation is determined by its rows.
        for a in 0..n {
            for b in rel[a].ones() {
                if rel[a] != rel[b] {
                    return None;
                }
            }
        }
        Some(Self::from_keys(rel))
    }
}

/// Green's relations of a finite semigroup.
#[derive(Clone, Debug)]
pub struct GreenData {
    pub r: ElementPartition,
    pub l: ElementPartition,
    pub j: ElementPartition,
    pub h: ElementPartition,
    /// `j_order[x][y]` holds when the ideal of J-class `x` is contained in
    /// that of J-class `y`.
    pub j_order: Vec<Vec<bool>>,
    /// Whether each J-class contains a regular element.
    pub regular: Vec<bool>,
    /// Size of the principal two-sided ideal of each J-class.
    pub ideal_sizes: Vec<usize>,
}

impl GreenData {
    /// Computes R, L, J, H by comparing principal ideals `aS¹`, `S¹a` and
    /// `S¹aS¹`.
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.size();
        let mut right = Vec::with_capacity(n);
        let mut left = Vec::with_capacity(n);
        for a in 0..n {
            let mut ra = FixedBitSet::with_capacity(n);
            let mut la = FixedBitSet::with_capacity(n);
            ra.insert(a);
            la.insert(a);
            for x in 0..n {
                ra.insert(s.product(a, x));
                la.insert(s.product(x, a));
            }
            right.push(ra);
            left.push(la);
        }
        // S¹aS¹ is the union of xS¹ over x in S¹a.
        let two_sided: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut ja = FixedBitSet::with_capacity(n);
                for x in left[a].ones() {
                    ja.union_with(&right[x]);
                }
                ja
            })
            .collect();

        let r = ElementPartition::from_keys(right.iter());
        let l = ElementPartition::from_keys(left.iter());
        let j = ElementPartition::from_keys(two_sided.iter());
        let h = r.meet(&l);

        let nj = j.num_classes();
        let reps: Vec<usize> = j.classes().iter().map(|c| c[0]).collect();
        let j_order = (0..nj)
            .map(|x| {
                (0..nj)
                    .map(|y| two_sided[reps[y]].contains(reps[x]))
                    .collect()
            })
            .collect();
        let ideal_sizes = reps.iter().map(|&a| two_sided[a].count_ones(..)).collect();
        let regular = j
            .classes()
            .iter()
            .map(|c| c.iter().any(|&a| s.is_regular_element(a)))
            .collect();

        Self {
            r,
            l,
            j,
            h,
            j_order,
            regular,
            ideal_sizes,
        }
    }

    /// J-class ids listed bottom-up: a linear extension of the J-order,
    /// ties broken by smallest element.
    pub fn j_classes_bottom_up(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.j.num_classes()).collect();
        ids.sort_by_key(|&c| (self.ideal_sizes[c], self.j.class_members(c)[0]));
        ids
    }

    /// H-classes (by id) contained in the given L-class.
    pub fn h_classes_in(&self, members: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = members.iter().map(|&a| self.h.class_of(a)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_meet_and_refinement() {
        let p = ElementPartition::from_keys([0, 0, 1, 1]);
        let q = ElementPartition::from_keys([0, 1, 1, 1]);
        let m = p.meet(&q);
        assert_eq!(m.num_classes(), 3);
        assert!(m.refines(&p) && m.refines(&q));
        assert!(!p.refines(&q));
    }

    #[test]
    fn composition_of_commuting_partitions() {
        let p = ElementPartition::from_keys([0, 0, 1, 1]);
        let q = ElementPartition::from_keys([0, 1, 0, 1]);
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq.num_classes(), 1);
    }

    #[test]
    fn group_has_one_class_everywhere() {
        let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let labels = (0..4).map(|i| i.to_string()).collect();
        let s = FiniteSemigroup::new(labels, table).unwrap();
        let g = GreenData::compute(&s);
        for p in [&g.r, &g.l, &g.j, &g.h] {
            assert_eq!(p.num_classes(), 1);
        }
        assert_eq!(g.regular, vec![true]);
    }
}
