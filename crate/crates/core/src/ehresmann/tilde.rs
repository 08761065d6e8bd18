use std::fmt;

use fixedbitset::FixedBitSet;

use super::EhresmannError;
use crate::semigroup::{ElementPartition, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Right identities, giving `L̃` and `star`.
    Left,
    /// Left identities, giving `R̃` and `plus`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L̃",
            Side::Right => "R̃",
        })
    }
}

/// The relations `L̃`, `R̃`, `H̃` determined by a set of idempotents `E`.
///
/// Each element carries the set of projections fixing it on the right and
/// on the left; both preorders are inclusions of those sets.
#[derive(Clone, Debug)]
pub struct TildeData {
    pub projections: Vec<usize>,
    right_ids: Vec<FixedBitSet>,
    left_ids: Vec<FixedBitSet>,
    pub l_tilde: ElementPartition,
    pub r_tilde: ElementPartition,
    pub h_tilde: ElementPartition,
}

impl TildeData {
    /// `a ≼_L̃ b`: every projection fixing `b` on the right fixes `a`.
    pub fn leq_l_tilde(&self, a: usize, b: usize) -> bool {
        self.right_ids[b].is_subset(&self.right_ids[a])
    }

    /// `a ≼_R̃ b`: every projection fixing `b` on the left fixes `a`.
    pub fn leq_r_tilde(&self, a: usize, b: usize) -> bool {
        self.left_ids[b].is_subset(&self.left_ids[a])
    }

    /// Projections lying in the class of `a` on the given side.
    pub fn projections_in_class(&self, side: Side, a: usize) -> Vec<usize> {
        let p = match side {
            Side::Left => &self.l_tilde,
            Side::Right => &self.r_tilde,
        };
        self.projections
            .iter()
            .copied()
            .filter(|&e| p.related(e, a))
            .collect()
    }
}

pub fn tilde_data(s: &FiniteSemigroup, projections: &[usize]) -> Result<TildeData, EhresmannError> {
    let mut projections = projections.to_vec();
    projections.sort_unstable();
    projections.dedup();
    for &e in &projections {
        if e >= s.size() {
            return Err(EhresmannError::OutOfRange(e));
        }
        if !s.is_idempotent(e) {
            return Err(EhresmannError::NotIdempotent(e));
        }
    }
    let k = projections.len();
    let mut right_ids = Vec::with_capacity(s.size());
    let mut left_ids = Vec::with_capacity(s.size());
    for a in s.elements() {
        let mut r = FixedBitSet::with_capacity(k);
        let mut l = FixedBitSet::with_capacity(k);
        for (i, &e) in projections.iter().enumerate() {
            r.set(i, s.product(a, e) == a);
            l.set(i, s.product(e, a) == a);
        }
        right_ids.push(r);
        left_ids.push(l);
    }
    let l_tilde = ElementPartition::from_keys(right_ids.iter());
    let r_tilde = ElementPartition::from_keys(left_ids.iter());
    let h_tilde = l_tilde.meet(&r_tilde);
    Ok(TildeData {
        projections,
        right_ids,
        left_ids,
        l_tilde,
        r_tilde,
        h_tilde,
    })
}

/// `star` and `plus` as the unique projection in the `L̃`- and `R̃`-class of
/// each element.
pub fn infer_unary(
    s: &FiniteSemigroup,
    projections: &[usize],
) -> Result<(Vec<usize>, Vec<usize>), EhresmannError> {
    let t = tilde_data(s, projections)?;
    let pick = |side: Side| -> Result<Vec<usize>, EhresmannError> {
        let part = match side {
            Side::Left => &t.l_tilde,
            Side::Right => &t.r_tilde,
        };
        let mut per_class = vec![Vec::new(); part.num_classes()];
        for &e in &t.projections {
            per_class[part.class_of(e)].push(e);
        }
        s.elements()
            .map(|a| match per_class[part.class_of(a)].as_slice() {
                [e] => Ok(*e),
                found => Err(EhresmannError::NoUniqueProjection {
                    side,
                    element: a,
                    found: found.to_vec(),
                }),
            })
            .collect()
    };
    Ok((pick(Side::Left)?, pick(Side::Right)?))
}
