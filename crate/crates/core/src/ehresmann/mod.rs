//! Bi-unary semigroups: a finite semigroup with a distinguished set of
//! projections and the two unary operations `a ↦ a*` (least right identity)
//! and `a ↦ a⁺` (least left identity).

mod category;
mod checks;
mod tilde;

pub use category::{build_category, is_ei_category, CategoryError, FiniteCategory};
pub use checks::{
    check_ehresmann, check_ei, check_ei_profinite, check_embeddability_quasiidentity,
    check_restriction, check_right_restriction_ei, check_right_zero_sandwich_sets,
    check_unique_idempotent_in_l_class, check_weakly_ample, representative_projections,
    EhresmannFailure, EhresmannReport, EiReport, QuasiidentityReport, RestrictionReport,
    RightRestrictionEiReport,
};
pub use tilde::{infer_unary, tilde_data, Side, TildeData};

use std::ops::Deref;

use thiserror::Error;

use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EhresmannError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("unary map has {len} entries for a semigroup of size {size}")]
    LengthMismatch { len: usize, size: usize },
    #[error("index {0} is out of range")]
    OutOfRange(usize),
    #[error("projection {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("the {side} class of element {element} holds projections {found:?}, expected exactly one")]
    NoUniqueProjection {
        side: Side,
        element: usize,
        found: Vec<usize>,
    },
    #[error("not Ehresmann: {0}")]
    NotEhresmann(EhresmannFailure),
    #[error("not right restriction: e·a != a·(e·a)* for (e, a) = ({0}, {1})")]
    NotRightRestriction(usize, usize),
    #[error("not left restriction: a·e != (a·e)⁺·a for (e, a) = ({0}, {1})")]
    NotLeftRestriction(usize, usize),
    #[error("{check}: equivalent conditions disagree: {verdicts:?}")]
    ConditionsDisagree {
        check: &'static str,
        verdicts: Vec<bool>,
    },
    #[error("regular J-class {0} contains no projection")]
    MissingProjection(usize),
    #[error("subset is not closed: it produces element {0}")]
    NotClosed(usize),
}

/// A semigroup with unary maps `star`, `plus` and projection set `E`.
///
/// Construction only checks shapes and that projections are idempotent; the
/// Ehresmann axioms are checked by [`check_ehresmann`] and enforced by the
/// [`Ehresmann`] wrapper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiUnaryStructure {
    base: FiniteSemigroup,
    star: Vec<usize>,
    plus: Vec<usize>,
    projections: Vec<usize>,
    in_e: Vec<bool>,
}

impl BiUnaryStructure {
    pub fn new(
        base: FiniteSemigroup,
        star: Vec<usize>,
        plus: Vec<usize>,
        mut projections: Vec<usize>,
    ) -> Result<Self, EhresmannError> {
        let n = base.size();
        for map in [&star, &plus] {
            if map.len() != n {
                return Err(EhresmannError::LengthMismatch {
                    len: map.len(),
                    size: n,
                });
            }
            if let Some(&x) = map.iter().find(|&&x| x >= n) {
                return Err(EhresmannError::OutOfRange(x));
            }
        }
        projections.sort_unstable();
        projections.dedup();
        let mut in_e = vec![false; n];
        for &e in &projections {
            if e >= n {
                return Err(EhresmannError::OutOfRange(e));
            }
            if !base.is_idempotent(e) {
                return Err(EhresmannError::NotIdempotent(e));
            }
            in_e[e] = true;
        }
        Ok(Self {
            base,
            star,
            plus,
            projections,
            in_e,
        })
    }

    /// Derives `star` and `plus` from the projection set.
    pub fn from_projections(
        base: FiniteSemigroup,
        projections: Vec<usize>,
    ) -> Result<Self, EhresmannError> {
        let (star, plus) = infer_unary(&base, &projections)?;
        Self::new(base, star, plus, projections)
    }

    /// Projections are the image of `star`.
    pub fn from_unary(
        base: FiniteSemigroup,
        star: Vec<usize>,
        plus: Vec<usize>,
    ) -> Result<Self, EhresmannError> {
        let projections = star.clone();
        Self::new(base, star, plus, projections)
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    #[inline]
    pub fn plus(&self, a: usize) -> usize {
        self.plus[a]
    }

    pub fn star_map(&self) -> &[usize] {
        &self.star
    }

    pub fn plus_map(&self) -> &[usize] {
        &self.plus
    }

    /// Projections in increasing index order.
    pub fn projections(&self) -> &[usize] {
        &self.projections
    }

    #[inline]
    pub fn is_projection(&self, a: usize) -> bool {
        self.in_e[a]
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.base.product(a, b)
    }

    pub fn label(&self, a: usize) -> &str {
        self.base.label(a)
    }

    /// The bi-unary substructure on `elements`, which must be closed under
    /// the product and both unary maps. Elements keep their relative order.
    pub fn substructure(&self, elements: &[usize]) -> Result<Self, EhresmannError> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let mut local = vec![usize::MAX; self.size()];
        for (i, &x) in elements.iter().enumerate() {
            if x >= self.size() {
                return Err(EhresmannError::OutOfRange(x));
            }
            local[x] = i;
        }
        let find = |x: usize| match local[x] {
            usize::MAX => Err(EhresmannError::NotClosed(x)),
            i => Ok(i),
        };
        let mut table = Vec::with_capacity(elements.len());
        for &a in &elements {
            let row = elements
                .iter()
                .map(|&b| find(self.product(a, b)))
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row);
        }
        let star = elements.iter().map(|&a| find(self.star(a))).collect::<Result<Vec<_>, _>>()?;
        let plus = elements.iter().map(|&a| find(self.plus(a))).collect::<Result<Vec<_>, _>>()?;
        let projections = elements
            .iter()
            .enumerate()
            .filter(|&(_, &a)| self.is_projection(a))
            .map(|(i, _)| i)
            .collect();
        let labels = elements.iter().map(|&a| self.label(a).to_string()).collect();
        let base = FiniteSemigroup::new(labels, table)?;
        Self::new(base, star, plus, projections)
    }

    /// Semilattice order on projections: `e ≤ f` iff `ef = fe = e`.
    pub fn proj_leq(&self, e: usize, f: usize) -> bool {
        self.product(e, f) == e && self.product(f, e) == e
    }

    /// `a ≤_l b` iff `a = b·a*`.
    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        self.product(b, self.star(a)) == a
    }
}

/// A bi-unary semigroup that has passed [`check_ehresmann`].
#[derive(Clone, Debug)]
pub struct Ehresmann(BiUnaryStructure);

impl Ehresmann {
    pub fn new(b: BiUnaryStructure) -> Result<Self, EhresmannError> {
        match check_ehresmann(&b).failure {
            None => Ok(Self(b)),
            Some(f) => Err(EhresmannError::NotEhresmann(f)),
        }
    }

    pub fn structure(&self) -> &BiUnaryStructure {
        &self.0
    }

    pub fn into_inner(self) -> BiUnaryStructure {
        self.0
    }
}

impl Deref for Ehresmann {
    type Target = BiUnaryStructure;

    fn deref(&self) -> &BiUnaryStructure {
        &self.0
    }
}
