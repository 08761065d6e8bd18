use num_traits::{One, Zero};

use crate::linalg::{rat, Matrix, Rational, RowEchelon};
use crate::semigroup::MaximalSubgroup;
use crate::young::{factorial, hook_dimension, Partition, SymmetricGroup};

/// A representation of a finite group, one matrix per group element in the
/// group's own index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupModule {
    dim: usize,
    actions: Vec<Matrix>,
}

impl GroupModule {
    pub fn new(dim: usize, actions: Vec<Matrix>) -> Self {
        assert!(actions.iter().all(|m| m.rows() == dim && m.cols() == dim));
        Self { dim, actions }
    }

    pub fn trivial(order: usize) -> Self {
        Self::new(1, vec![Matrix::identity(1); order])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.actions[g]
    }

    pub fn character(&self, g: usize) -> Rational {
        self.actions[g].trace()
    }

    /// The module `g ↦ ρ(map[g])` along a group homomorphism given by `map`.
    pub fn pull_back(&self, map: &[usize]) -> GroupModule {
        GroupModule {
            dim: self.dim,
            actions: map.iter().map(|&g| self.actions[g].clone()).collect(),
        }
    }
}

/// An isomorphism between a maximal subgroup and `S_k`.
#[derive(Clone, Debug)]
pub struct SymmetricIdentification {
    group: SymmetricGroup,
    /// Local subgroup index to `S_k` index.
    to_sym: Vec<usize>,
}

impl SymmetricIdentification {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn symmetric_group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn to_symmetric(&self, local: usize) -> usize {
        self.to_sym[local]
    }

    pub fn map(&self) -> &[usize] {
        &self.to_sym
    }

    pub fn cycle_type(&self, local: usize) -> Partition {
        self.group.element(self.to_sym[local]).cycle_type()
    }
}

/// Finds an isomorphism `G_e ≅ S_k`. A trivial group is read as `S_0` when
/// `zero_class` is set (the J-class is a zero element) and as `S_1`
/// otherwise.
pub fn identify_symmetric(sub: &MaximalSubgroup, zero_class: bool) -> Option<SymmetricIdentification> {
    let order = sub.order();
    let k = match order {
        1 if zero_class => 0,
        1 => 1,
        _ => (2..=8).find(|&k| factorial(k) as usize == order)?,
    };
    let sym = SymmetricGroup::new(k);
    if order == 1 {
        return Some(SymmetricIdentification {
            group: sym,
            to_sym: vec![0],
        });
    }
    let g = &sub.group;
    let unit = sub.local_identity();
    let gens = sym.generators();
    let candidates: Vec<usize> = g.elements().filter(|&x| x != unit).collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().map(|&c| candidates[c]).collect();
        if let Some(from_sym) = extend_homomorphism(&sym, &gens, g, unit, &images) {
            let mut to_sym = vec![usize::MAX; order];
            for (s, &x) in from_sym.iter().enumerate() {
                to_sym[x] = s;
            }
            if to_sym.iter().all(|&s| s != usize::MAX) {
                return Some(SymmetricIdentification { group: sym, to_sym });
            }
        }
        // Odometer over candidate tuples.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < candidates.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Extends `gens[j] ↦ images[j]` along the Cayley graph of `S_k`; `None` if
/// the assignment is inconsistent.
fn extend_homomorphism(
    sym: &SymmetricGroup,
    gens: &[usize],
    g: &crate::semigroup::FiniteSemigroup,
    unit: usize,
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; sym.order()];
    map[0] = unit;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = sym.product(x, s);
            let image = g.product(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    Some(map)
}

/// Permutations fixing every block of `blocks` setwise.
fn block_stabilizer(sym: &SymmetricGroup, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut block_of = vec![0usize; sym.degree()];
    for (b, members) in blocks.iter().enumerate() {
        for &x in members {
            block_of[x] = b;
        }
    }
    (0..sym.order())
        .filter(|&i| {
            let p = sym.element(i);
            (0..sym.degree()).all(|x| block_of[p.apply(x)] == block_of[x])
        })
        .collect()
}

/// Convolution product in the group algebra of `S_k`.
fn convolve(sym: &SymmetricGroup, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); sym.order()];
    for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out[sym.product(a, b)] += xa * yb;
        }
    }
    out
}

/// The Specht module `S^λ` as the left ideal of `ℚS_k` generated by the
/// normalized Young symmetrizer of the row-reading standard tableau.
pub fn specht_module(lambda: &Partition) -> GroupModule {
    let k = lambda.weight();
    let sym = SymmetricGroup::new(k);
    let mut rows = Vec::new();
    let mut next = 0;
    for &p in lambda.parts() {
        rows.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    let columns: Vec<Vec<usize>> = (0..lambda.parts().first().copied().unwrap_or(0))
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let mut row_sum = vec![Rational::zero(); sym.order()];
    for i in block_stabilizer(&sym, &rows) {
        row_sum[i] = Rational::one();
    }
    let mut col_sum = vec![Rational::zero(); sym.order()];
    for i in block_stabilizer(&sym, &columns) {
        col_sum[i] = rat(sym.element(i).sign());
    }
    let scale = rat(hook_dimension(lambda) as i64) / rat(factorial(k) as i64);
    let idempotent: Vec<Rational> = convolve(&sym, &row_sum, &col_sum)
        .into_iter()
        .map(|c| c * &scale)
        .collect();
    debug_assert_eq!(convolve(&sym, &idempotent, &idempotent), idempotent);

    let left_mul = |t: usize, v: &[Rational]| {
        let mut out = vec![Rational::zero(); sym.order()];
        for (s, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out[sym.product(t, s)] = c.clone();
        }
        out
    };
    let mut ideal = RowEchelon::new(sym.order());
    for t in 0..sym.order() {
        ideal.insert(left_mul(t, &idempotent));
    }
    let dim = ideal.rank();
    assert_eq!(dim as u64, hook_dimension(lambda), "Specht dimension for {lambda}");
    let actions = (0..sym.order())
        .map(|t| {
            let mut m = Matrix::zeros(dim, dim);
            for (j, b) in ideal.basis().iter().enumerate() {
                let coords = ideal
                    .coordinates(&left_mul(t, b))
                    .expect("a left ideal is closed under left multiplication");
                m.set_column(j, &coords);
            }
            m
        })
        .collect();
    GroupModule::new(dim, actions)
}

/// Regular representation of `S_k`, used as a sanity module.
pub fn regular_module(sym: &SymmetricGroup) -> GroupModule {
    let n = sym.order();
    let actions = (0..n)
        .map(|t| {
            let mut m = Matrix::zeros(n, n);
            for s in 0..n {
                m[(sym.product(t, s), s)] = Rational::one();
            }
            m
        })
        .collect();
    GroupModule::new(n, actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::{mn_character, partitions_of, Permutation};

    #[test]
    fn specht_characters_match_murnaghan_nakayama() {
        for k in 0..=4 {
            let sym = SymmetricGroup::new(k);
            for lambda in partitions_of(k) {
                let v = specht_module(&lambda);
                for t in 0..sym.order() {
                    let p: &Permutation = sym.element(t);
                    assert_eq!(
                        v.character(t),
                        rat(mn_character(&lambda, &p.cycle_type()).unwrap()),
                        "{lambda} at {p}"
                    );
                    for u in 0..sym.order() {
                        assert_eq!(v.action(t).mul(v.action(u)), *v.action(sym.product(t, u)));
                    }
                }
            }
        }
    }

    #[test]
    fn hook_shape_values() {
        let v = specht_module(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(v.dim(), 2);
        let sym = SymmetricGroup::new(3);
        let by_type = |parts: Vec<usize>| {
            let t = (0..6)
                .find(|&i| sym.element(i).cycle_type().parts() == parts.as_slice())
                .unwrap();
            v.character(t)
        };
        assert_eq!(by_type(vec![1, 1, 1]), rat(2));
        assert_eq!(by_type(vec![2, 1]), rat(0));
        assert_eq!(by_type(vec![3]), rat(-1));
    }

    #[test]
    fn symmetric_groups_are_recognized() {
        for k in 2..=4 {
            let s = SymmetricGroup::new(k).semigroup();
            let sub = s.maximal_subgroup(0).unwrap();
            let id = identify_symmetric(&sub, false).unwrap();
            assert_eq!(id.degree(), k);
            for a in 0..sub.order() {
                for b in 0..sub.order() {
                    let ab = sub.group.product(a, b);
                    assert_eq!(
                        id.symmetric_group().product(id.to_symmetric(a), id.to_symmetric(b)),
                        id.to_symmetric(ab)
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_group_of_order_six_is_rejected() {
        let labels = (0..6).map(|i| format!("g{i}")).collect();
        let table = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        let z6 = crate::semigroup::FiniteSemigroup::new(labels, table).unwrap();
        let sub = z6.maximal_subgroup(0).unwrap();
        assert!(identify_symmetric(&sub, false).is_none());
        let trivial = crate::semigroup::FiniteSemigroup::new(vec!["1".into()], vec![vec![0]]).unwrap();
        let sub = trivial.maximal_subgroup(0).unwrap();
        assert_eq!(identify_symmetric(&sub, true).unwrap().degree(), 0);
        assert_eq!(identify_symmetric(&sub, false).unwrap().degree(), 1);
    }
}
