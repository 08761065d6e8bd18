use fixedbitset::FixedBitSet;

use super::AlgebraError;
use crate::ehresmann::Ehresmann;
use crate::par::first_index;

/// The order `a ≤_l b` (`a = b·a*`) on an Ehresmann semigroup with its
/// Möbius function.
#[derive(Clone, Debug)]
pub struct PosetData {
    /// `down[y]` holds every `x ≤ y`.
    down: Vec<FixedBitSet>,
    /// `mobius[y]` lists `(x, μ(x, y))` for `x ≤ y` with `μ(x, y) != 0`.
    mobius: Vec<Vec<(usize, i64)>>,
}

impl PosetData {
    /// Builds the poset from a relation, verifying the order axioms, and
    /// computes the Möbius function along a linear extension.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool + Sync) -> Result<Self, AlgebraError> {
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (y, set) in down.iter_mut().enumerate() {
            for x in 0..n {
                if leq(x, y) {
                    set.insert(x);
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| !down[x].contains(x)) {
            return Err(AlgebraError::NotPartialOrder(x, x));
        }
        for y in 0..n {
            for x in down[y].ones() {
                if x != y && down[x].contains(y) {
                    return Err(AlgebraError::NotPartialOrder(x, y));
                }
                if !down[x].is_subset(&down[y]) {
                    let z = down[x].difference(&down[y]).next().unwrap();
                    return Err(AlgebraError::NotPartialOrder(z, y));
                }
            }
        }
        // Sorting by down-set size is a linear extension.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&y| (down[y].count_ones(..), y));
        let mut mobius: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        let mut value = vec![0i64; n];
        for &y in &order {
            // μ(x, y) = -Σ_{x ≤ z < y} μ(x, z), so Σ_{z ∈ [x, y]} μ(x, z) = δ_xy.
            // Work per y over all x at once: μ(·, y) = δ - Σ_{z < y} μ(·, z).
            for x in down[y].ones() {
                value[x] = 0;
            }
            value[y] = 1;
            for z in down[y].ones() {
                if z == y {
                    continue;
                }
                for &(x, m) in &mobius[z] {
                    value[x] -= m;
                }
            }
            mobius[y] = down[y]
                .ones()
                .filter(|&x| value[x] != 0)
                .map(|x| (x, value[x]))
                .collect();
        }
        Ok(Self { down, mobius })
    }

    pub fn size(&self) -> usize {
        self.down.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn down_set(&self, y: usize) -> Vec<usize> {
        self.down[y].ones().collect()
    }

    pub fn mobius(&self, x: usize, y: usize) -> i64 {
        self.mobius[y]
            .iter()
            .find(|&&(z, _)| z == x)
            .map_or(0, |&(_, m)| m)
    }

    /// Nonzero `(x, μ(x, y))` for `x ≤ y`.
    pub fn mobius_column(&self, y: usize) -> &[(usize, i64)] {
        &self.mobius[y]
    }

    /// Checks `Σ_{x ≤ z ≤ y} μ(z, y) = δ_xy` for all `x ≤ y`; returns the
    /// first failing pair.
    pub fn check_mobius_inversion(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n).find_map(|y| {
            self.down[y].ones().find_map(|x| {
                let s: i64 = self.mobius[y]
                    .iter()
                    .filter(|&&(z, _)| self.leq(x, z))
                    .map(|&(_, m)| m)
                    .sum();
                (s != i64::from(x == y)).then_some((x, y))
            })
        })
    }
}

pub fn leq_l_poset(b: &Ehresmann) -> Result<PosetData, AlgebraError> {
    PosetData::from_relation(b.size(), |x, y| b.leq_l(x, y))
}

/// For every `s`, `e ↦ se` should be an order isomorphism from the
/// projections below `s*` onto `{x : x ≤_l s}`, with inverse `x ↦ x*`.
/// Returns the first `s` where this fails.
pub fn check_poset_isomorphism(b: &Ehresmann, poset: &PosetData) -> Option<usize> {
    first_index(b.size(), |s| {
        let below: Vec<usize> = b
            .projections()
            .iter()
            .copied()
            .filter(|&e| b.proj_leq(e, b.star(s)))
            .collect();
        let image: Vec<usize> = below.iter().map(|&e| b.product(s, e)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let onto = sorted == poset.down_set(s);
        let inverse = below.iter().zip(&image).all(|(&e, &x)| b.star(x) == e);
        let monotone = below.iter().zip(&image).all(|(&e, &x)| {
            below
                .iter()
                .zip(&image)
                .all(|(&f, &y)| b.proj_leq(e, f) == poset.leq(x, y))
        });
        !(onto && inverse && monotone)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::pt_n;

    #[test]
    fn chains_and_boolean_lattices() {
        let pt1 = Ehresmann::new(pt_n(1).unwrap()).unwrap();
        let p = leq_l_poset(&pt1).unwrap();
        // Elements: [1→1] then [1→⊥].
        assert!(p.leq(1, 0));
        assert_eq!(p.mobius(1, 0), -1);
        assert_eq!(p.mobius(0, 0), 1);
        let pt2 = Ehresmann::new(pt_n(2).unwrap()).unwrap();
        let p = leq_l_poset(&pt2).unwrap();
        let id = pt2.base().find_label("[1→1,2→2]").unwrap();
        let empty = pt2.base().find_label("[1→⊥,2→⊥]").unwrap();
        assert_eq!(p.mobius(empty, id), 1);
        assert_eq!(p.check_mobius_inversion(), None);
        assert_eq!(check_poset_isomorphism(&pt2, &p), None);
    }

    #[test]
    fn non_orders_are_rejected() {
        assert_eq!(
            PosetData::from_relation(2, |_, _| true).unwrap_err(),
            AlgebraError::NotPartialOrder(1, 0)
        );
        assert!(PosetData::from_relation(2, |x, y| x != y).is_err());
    }
}
