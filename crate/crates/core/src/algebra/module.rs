use num_traits::Zero;

use crate::linalg::{Matrix, Rational, RowEchelon};
use crate::par::first_pair;
use crate::semigroup::FiniteSemigroup;

/// A left module over a finite semigroup: one matrix per element, acting on
/// column vectors. Zero rows and columns encode an undefined partial action.
#[derive(Clone, Debug)]
pub struct SemigroupModule {
    labels: Vec<String>,
    actions: Vec<Matrix>,
}

impl SemigroupModule {
    /// Panics if some matrix is not `dim × dim`.
    pub fn new(labels: Vec<String>, actions: Vec<Matrix>) -> Self {
        let d = labels.len();
        assert!(
            actions.iter().all(|m| m.rows() == d && m.cols() == d),
            "action matrices must be {d}×{d}"
        );
        Self { labels, actions }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn action(&self, s: usize) -> &Matrix {
        &self.actions[s]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// First pair `(s, t)` with `ρ(s)ρ(t) != ρ(st)`.
    pub fn check_homomorphism(&self, s: &FiniteSemigroup) -> Option<(usize, usize)> {
        let n = self.actions.len();
        first_pair(n, n, |a, b| {
            self.actions[a].mul(&self.actions[b]) != self.actions[s.product(a, b)]
        })
    }

    pub fn character(&self, s: usize) -> Rational {
        self.actions[s].trace()
    }
}

/// Dimension of the space of module maps `M → N`: matrices `X` with
/// `X·ρ_M(s) = ρ_N(s)·X` for every `s`.
pub fn hom_space_dim(m: &SemigroupModule, n: &SemigroupModule) -> usize {
    assert_eq!(m.actions.len(), n.actions.len(), "modules over different semigroups");
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return 0;
    }
    let var = |i: usize, j: usize| i * dm + j;
    let mut ech = RowEchelon::new(unknowns);
    for (am, an) in m.actions.iter().zip(&n.actions) {
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..dm {
                    if !am[(k, j)].is_zero() {
                        row[var(i, k)] += &am[(k, j)];
                    }
                }
                for k in 0..dn {
                    if !an[(i, k)].is_zero() {
                        row[var(k, j)] -= &an[(i, k)];
                    }
                }
                ech.insert(row);
                if ech.rank() == unknowns {
                    return 0;
                }
            }
        }
    }
    unknowns - ech.rank()
}

/// The regular-like module given directly by matrices; used in tests.
#[cfg(test)]
pub(crate) fn module_from_i64(actions: &[&[&[i64]]]) -> SemigroupModule {
    let d = actions[0].len();
    SemigroupModule::new(
        (0..d).map(|i| format!("v{i}")).collect(),
        actions.iter().map(|m| Matrix::from_i64_rows(m)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_sign_of_s2() {
        let triv = module_from_i64(&[&[&[1]], &[&[1]]]);
        let sign = module_from_i64(&[&[&[1]], &[&[-1]]]);
        assert_eq!(hom_space_dim(&triv, &triv), 1);
        assert_eq!(hom_space_dim(&triv, &sign), 0);
        let regular = module_from_i64(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 0]]]);
        assert_eq!(hom_space_dim(&regular, &regular), 2);
        assert_eq!(hom_space_dim(&regular, &sign), 1);
        let s2 = FiniteSemigroup::new(vec!["1".into(), "g".into()], vec![vec![0, 1], vec![1, 0]])
            .unwrap();
        assert_eq!(regular.check_homomorphism(&s2), None);
    }
}
