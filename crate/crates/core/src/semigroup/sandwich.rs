use crate::linalg::{rat, Matrix};

use super::{FiniteSemigroup, GreenData, MaximalSubgroup, SemigroupError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SandwichEntry {
    /// Local index into the maximal subgroup.
    Group(usize),
    Zero,
}

/// Structure matrix of a regular J-class relative to an idempotent `e`.
///
/// Rows are H-class representatives `λ_j` of `R(e)`, columns are
/// representatives `ρ_i` of `L(e)`, and entry `(j, i)` is `λ_j·ρ_i` when that
/// product lies in `G_e`.
#[derive(Clone, Debug)]
pub struct SandwichMatrix {
    pub idempotent: usize,
    pub group: MaximalSubgroup,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<SandwichEntry>>,
    /// Idempotents placed on the leading diagonal, in order. The first is
    /// always `e` itself.
    pub matched: Vec<usize>,
}

impl SandwichMatrix {
    /// Builds the matrix for the J-class of `e`.
    ///
    /// When `projections` is given, every projection `f` in the J-class gets
    /// the row `λ ∈ R(e) ∩ L(f)` and column `ρ ∈ L(e) ∩ R(f)` at the same
    /// position, projections taken in increasing index order with `e` first.
    /// All other representatives follow, ordered by smallest element.
    pub fn compute(
        s: &FiniteSemigroup,
        green: &GreenData,
        e: usize,
        projections: Option<&[usize]>,
    ) -> Result<Self, SemigroupError> {
        if !s.is_idempotent(e) {
            return Err(SemigroupError::NotIdempotent(e));
        }
        let j = green.j.class_of(e);
        if !green.regular[j] {
            return Err(SemigroupError::NotRegular(j));
        }
        let group = MaximalSubgroup::from_h_class(s, green, e)?;

        let mut matched = vec![e];
        if let Some(ps) = projections {
            let mut extra: Vec<usize> = ps
                .iter()
                .copied()
                .filter(|&f| f != e && green.j.class_of(f) == j)
                .collect();
            extra.sort_unstable();
            extra.dedup();
            matched.extend(extra);
        }
        let h_rep = |h: usize| green.h.class_members(h)[0];
        // Locate the H-class of R(e) ∩ L(f) and of L(e) ∩ R(f).
        let h_in = |members: &[usize], pred: &dyn Fn(usize) -> bool| {
            members.iter().copied().find(|&x| pred(x)).map(|x| green.h.class_of(x))
        };
        let r_members = green.r.members_with(e);
        let l_members = green.l.members_with(e);

        let mut row_h = Vec::new();
        let mut col_h = Vec::new();
        let mut kept = Vec::new();
        for &f in &matched {
            let rh = h_in(r_members, &|x| green.l.related(x, f));
            let ch = h_in(l_members, &|x| green.r.related(x, f));
            // In a regular D-class both intersections are nonempty.
            let (Some(rh), Some(ch)) = (rh, ch) else {
                continue;
            };
            // Non-commuting idempotents may share an R- or L-class.
            if row_h.contains(&rh) || col_h.contains(&ch) {
                continue;
            }
            row_h.push(rh);
            col_h.push(ch);
            kept.push(f);
        }
        for h in green.h_classes_in(r_members) {
            if !row_h.contains(&h) {
                row_h.push(h);
            }
        }
        for h in green.h_classes_in(l_members) {
            if !col_h.contains(&h) {
                col_h.push(h);
            }
        }
        let rows: Vec<usize> = row_h.iter().map(|&h| h_rep(h)).collect();
        let cols: Vec<usize> = col_h.iter().map(|&h| h_rep(h)).collect();
        let entries = rows
            .iter()
            .map(|&lam| {
                cols.iter()
                    .map(|&rho| match group.local_index(s.product(lam, rho)) {
                        Some(g) => SandwichEntry::Group(g),
                        None => SandwichEntry::Zero,
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            idempotent: e,
            group,
            rows,
            cols,
            entries,
            matched: kept,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// Whether the leading `matched × matched` block is diagonal with nonzero
    /// diagonal.
    pub fn has_diagonal_leading_block(&self) -> bool {
        let k = self.matched.len();
        (0..k).all(|j| {
            (0..k).all(|i| (self.entries[j][i] == SandwichEntry::Zero) != (i == j))
        })
    }

    /// Entries as ambient element labels, with `"0"` for the zero marker.
    pub fn labelled(&self, s: &FiniteSemigroup) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|en| match en {
                        SandwichEntry::Group(g) => s.label(self.group.elements[*g]).to_string(),
                        SandwichEntry::Zero => "0".to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Right-regular matrix of `g`: the basis vector of `h` goes to that of `hg`.
fn right_regular(group: &FiniteSemigroup, g: usize) -> Matrix {
    let n = group.size();
    let mut m = Matrix::zeros(n, n);
    for h in 0..n {
        m[(group.product(h, g), h)] = rat(1);
    }
    m
}

/// Tests left invertibility over the group algebra by replacing each entry
/// with its right-regular matrix and checking for full column rank.
pub fn is_left_invertible_sandwich(p: &SandwichMatrix) -> bool {
    let g = &p.group.group;
    let n = g.size();
    let blocks: Vec<Vec<Matrix>> = p
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|en| match en {
                    SandwichEntry::Group(x) => right_regular(g, *x),
                    SandwichEntry::Zero => Matrix::zeros(n, n),
                })
                .collect()
        })
        .collect();
    if blocks.is_empty() || blocks[0].is_empty() {
        return false;
    }
    Matrix::from_blocks(&blocks).rank() == p.num_cols() * n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteSemigroup {
        let t = vec![vec![0, 1], vec![1, 0]];
        FiniteSemigroup::new(vec!["1".into(), "g".into()], t).unwrap()
    }

    #[test]
    fn group_class_gives_one_by_one_unit() {
        let s = z2();
        let green = GreenData::compute(&s);
        let p = SandwichMatrix::compute(&s, &green, 0, None).unwrap();
        assert_eq!(p.entries, vec![vec![SandwichEntry::Group(0)]]);
        assert!(p.has_diagonal_leading_block());
        assert!(is_left_invertible_sandwich(&p));
    }

    #[test]
    fn zero_semigroup_class_is_not_invertible() {
        // {0, x} with x² = 0: the class {x} is not regular.
        let t = vec![vec![0, 0], vec![0, 0]];
        let s = FiniteSemigroup::new(vec!["0".into(), "x".into()], t).unwrap();
        let green = GreenData::compute(&s);
        assert!(matches!(
            SandwichMatrix::compute(&s, &green, 1, None),
            Err(SemigroupError::NotIdempotent(1))
        ));
        let p = SandwichMatrix::compute(&s, &green, 0, None).unwrap();
        assert!(is_left_invertible_sandwich(&p));
    }

    #[test]
    fn manual_zero_matrix_is_not_left_invertible() {
        let s = z2();
        let green = GreenData::compute(&s);
        let mut p = SandwichMatrix::compute(&s, &green, 0, None).unwrap();
        p.entries = vec![vec![SandwichEntry::Zero]];
        assert!(!is_left_invertible_sandwich(&p));
    }

    #[test]
    fn group_valued_entries_linearize() {
        let s = z2();
        let green = GreenData::compute(&s);
        let mut p = SandwichMatrix::compute(&s, &green, 0, None).unwrap();
        // [[1],[g]] is left invertible; [[1, g],[g, 1]] is not (1 + g kills both).
        p.entries = vec![vec![SandwichEntry::Group(0)], vec![SandwichEntry::Group(1)]];
        assert!(is_left_invertible_sandwich(&p));
        p.cols = vec![0, 1];
        p.entries = vec![
            vec![SandwichEntry::Group(0), SandwichEntry::Group(1)],
            vec![SandwichEntry::Group(1), SandwichEntry::Group(0)],
        ];
        assert!(!is_left_invertible_sandwich(&p));
    }
}
