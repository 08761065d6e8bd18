//! Finite-dimensional algebras over the rationals given by structure
//! constants, with the semigroup and category algebras as main sources.

mod iso;
mod module;
mod poset;

pub use iso::{phi_map, psi_map, verify_isomorphism, IsoReport};
pub use module::{hom_space_dim, SemigroupModule};
pub use poset::{check_poset_isomorphism, leq_l_poset, PosetData};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::ehresmann::FiniteCategory;
use crate::linalg::{Matrix, Rational, RowEchelon};
use crate::par::first_pair;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    BadUnit,
    #[error("the algebra has no unit")]
    NonUnital,
    #[error("the element is not idempotent")]
    NotIdempotent,
    #[error("vector has length {0}, expected {1}")]
    Dimension(usize, usize),
    #[error("≤_l fails to be a partial order at ({0}, {1})")]
    NotPartialOrder(usize, usize),
}

/// A sparse vector: `(basis index, nonzero coefficient)` in increasing index
/// order.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// An associative algebra with basis `b_0 .. b_{n-1}` and products
/// `b_i·b_j` stored as sparse vectors.
#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra {
    labels: Vec<String>,
    products: Vec<SparseVec>,
    unit: Option<Vec<Rational>>,
}

impl FiniteDimAlgebra {
    /// Builds an algebra from dense structure constants, checking
    /// associativity on all basis triples and the unit, if given.
    pub fn new(
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> Vec<Rational>,
        unit: Option<Vec<Rational>>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = product(i, j);
                if p.len() != n {
                    return Err(AlgebraError::Dimension(p.len(), n));
                }
                products.push(to_sparse(&p));
            }
        }
        let a = Self::from_sparse(labels, products, None);
        a.verify_associativity()?;
        let Some(u) = unit else {
            return Ok(a);
        };
        if u.len() != n {
            return Err(AlgebraError::Dimension(u.len(), n));
        }
        let ok = (0..n).all(|i| {
            let b = basis_vector(n, i);
            a.mul(&u, &b) == b && a.mul(&b, &u) == b
        });
        if !ok {
            return Err(AlgebraError::BadUnit);
        }
        Ok(Self { unit: Some(u), ..a })
    }

    /// Trusted constructor for algebras of verified semigroups and
    /// categories.
    fn from_sparse(labels: Vec<String>, products: Vec<SparseVec>, unit: Option<Vec<Rational>>) -> Self {
        Self {
            labels,
            products,
            unit,
        }
    }

    fn verify_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = to_dense(self.basis_product(i, j), n);
                for k in 0..n {
                    let jk = to_dense(self.basis_product(j, k), n);
                    if self.mul(&ij, &basis_vector(n, k)) != self.mul(&basis_vector(n, i), &jk) {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        let ys = to_sparse(y);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &ys {
                let ab = a * b;
                for (k, c) in self.basis_product(i, *j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Product of sparse vectors.
    pub fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.basis_product(*i, *j) {
                    out[*k] += &ab * c;
                }
            }
        }
        to_sparse(&out)
    }

    /// Matrix of `y ↦ x·y`, columns indexed by the basis.
    pub fn left_multiplication(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            m.set_column(j, &self.mul(x, &basis_vector(n, j)));
        }
        m
    }

    /// `tr(y ↦ b_i·y)` for every basis element.
    fn basis_traces(&self) -> Vec<Rational> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter_map(|j| {
                        self.basis_product(i, j)
                            .iter()
                            .find(|(k, _)| *k == j)
                            .map(|(_, c)| c.clone())
                    })
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// `G_ij = tr(L_{b_i b_j})` of the regular representation.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let t = self.basis_traces();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for (k, c) in self.basis_product(i, j) {
                    acc += c * &t[*k];
                }
                g[(i, j)] = acc;
            }
        }
        g
    }

    /// Dimension of the radical of the trace form, which over a field of
    /// characteristic zero is the Jacobson radical.
    pub fn trace_form_radical_dim(&self) -> Result<usize, AlgebraError> {
        if self.unit.is_none() {
            return Err(AlgebraError::NonUnital);
        }
        Ok(self.trace_form().nullity())
    }

    pub fn is_semisimple(&self) -> Result<bool, AlgebraError> {
        Ok(self.trace_form_radical_dim()? == 0)
    }

    pub fn is_idempotent(&self, p: &[Rational]) -> bool {
        self.mul(p, p) == p
    }

    /// `pAp` with unit `p`. The basis is the reduced echelon basis of the
    /// span of `{p·b_i·p}`, returned alongside the algebra as vectors of `A`.
    pub fn corner(&self, p: &[Rational]) -> Result<(FiniteDimAlgebra, Vec<Vec<Rational>>), AlgebraError> {
        let n = self.dim();
        if p.len() != n {
            return Err(AlgebraError::Dimension(p.len(), n));
        }
        if !self.is_idempotent(p) {
            return Err(AlgebraError::NotIdempotent);
        }
        let mut ech = RowEchelon::new(n);
        for i in 0..n {
            let v = self.mul(&self.mul(p, &basis_vector(n, i)), p);
            ech.insert(v);
        }
        let basis: Vec<Vec<Rational>> = ech.basis().to_vec();
        let m = basis.len();
        let coords = |v: &[Rational]| ech.coordinates(v).expect("pAp is closed");
        let mut products = Vec::with_capacity(m * m);
        for x in &basis {
            for y in &basis {
                products.push(to_sparse(&coords(&self.mul(x, y))));
            }
        }
        let labels = (0..m).map(|i| format!("c{i}")).collect();
        let unit = coords(p);
        Ok((Self::from_sparse(labels, products, Some(unit)), basis))
    }

    /// Whether the two-sided ideal `A·p·A` is all of `A`.
    pub fn ideal_is_whole(&self, p: &[Rational]) -> bool {
        let n = self.dim();
        let ap: Vec<Vec<Rational>> = (0..n)
            .map(|i| self.mul(&basis_vector(n, i), p))
            .collect();
        let mut ech = RowEchelon::new(n);
        'outer: for x in &ap {
            for j in 0..n {
                ech.insert(self.mul(x, &basis_vector(n, j)));
                if ech.rank() == n {
                    break 'outer;
                }
            }
        }
        ech.rank() == n
    }
}

/// `𝕜S`, with the identity as unit when `S` is a monoid.
pub fn semigroup_algebra(s: &FiniteSemigroup) -> FiniteDimAlgebra {
    let n = s.size();
    let mut products = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            products.push(vec![(s.product(a, b), Rational::one())]);
        }
    }
    let unit = s.identity().map(|e| basis_vector(n, e));
    FiniteDimAlgebra::from_sparse(s.labels().to_vec(), products, unit)
}

/// `𝕜C`, with `b·a = b∘a` when composable and `0` otherwise; the unit is the
/// sum of the identities.
pub fn category_algebra(c: &FiniteCategory) -> FiniteDimAlgebra {
    let n = c.num_morphisms();
    let mut products = Vec::with_capacity(n * n);
    for b in 0..n {
        for a in 0..n {
            products.push(match c.compose(b, a) {
                Some(x) => vec![(x, Rational::one())],
                None => Vec::new(),
            });
        }
    }
    let mut unit = vec![Rational::zero(); n];
    for o in 0..c.num_objects() {
        unit[c.identity(o)] = Rational::one();
    }
    let labels = (0..n).map(|a| format!("C({})", c.morphism_label(a))).collect();
    FiniteDimAlgebra::from_sparse(labels, products, Some(unit))
}

/// A linear map stored by sparse columns: `columns[j]` is the image of the
/// `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn identity(n: usize) -> Self {
        Self {
            source_dim: n,
            target_dim: n,
            columns: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Self {
            source_dim: m.cols(),
            target_dim: m.rows(),
            columns: (0..m.cols()).map(|j| to_sparse(&m.column(j))).collect(),
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.target_dim, self.source_dim);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col {
                m[(*i, j)] = x.clone();
            }
        }
        m
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.target_dim];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.columns[j] {
                out[*i] += x * c;
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(other.target_dim, self.source_dim);
        LinearMap {
            source_dim: other.source_dim,
            target_dim: self.target_dim,
            columns: other
                .columns
                .iter()
                .map(|col| to_sparse(&self.apply(&to_dense(col, other.target_dim))))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.source_dim)
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub holds: bool,
    /// First basis pair `(i, j)` with `f(b_i b_j) != f(b_i) f(b_j)`.
    pub witness: Option<(usize, usize)>,
}

/// Exhaustive check of `f(b_i b_j) = f(b_i) f(b_j)` over basis pairs.
pub fn is_algebra_homomorphism(
    f: &LinearMap,
    source: &FiniteDimAlgebra,
    target: &FiniteDimAlgebra,
) -> HomomorphismReport {
    assert_eq!(f.source_dim, source.dim());
    assert_eq!(f.target_dim, target.dim());
    let n = source.dim();
    let image = |v: &SparseVec| to_sparse(&f.apply(&to_dense(v, n)));
    let witness = first_pair(n, n, |i, j| {
        image(source.basis_product(i, j)) != target.mul_sparse(&f.columns[i], &f.columns[j])
    });
    HomomorphismReport {
        holds: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn dual_numbers() -> FiniteDimAlgebra {
        FiniteDimAlgebra::new(
            vec!["1".into(), "x".into()],
            |i, j| match (i, j) {
                (0, k) | (k, 0) => basis_vector(2, k),
                _ => vec![rat(0), rat(0)],
            },
            Some(vec![rat(1), rat(0)]),
        )
        .unwrap()
    }

    fn z2() -> FiniteSemigroup {
        FiniteSemigroup::new(vec!["1".into(), "g".into()], vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn radicals() {
        let a = semigroup_algebra(&z2());
        assert_eq!(a.trace_form(), Matrix::from_i64_rows(&[&[2, 0], &[0, 2]]));
        assert_eq!(a.trace_form_radical_dim().unwrap(), 0);
        let d = dual_numbers();
        assert_eq!(d.trace_form(), Matrix::from_i64_rows(&[&[2, 0], &[0, 0]]));
        assert_eq!(d.trace_form_radical_dim().unwrap(), 1);
        assert!(!d.is_semisimple().unwrap());
    }

    #[test]
    fn bad_structure_constants_are_rejected() {
        // b_0 b_0 = b_1, everything else zero, except b_1 b_0 = b_1.
        let err = FiniteDimAlgebra::new(
            vec!["a".into(), "b".into()],
            |i, j| match (i, j) {
                (0, 0) | (1, 0) => basis_vector(2, 1),
                _ => vec![rat(0), rat(0)],
            },
            None,
        )
        .unwrap_err();
        assert_eq!(err, AlgebraError::NotAssociative(0, 0, 0));
        let zero_unit = FiniteDimAlgebra::new(
            vec!["1".into()],
            |_, _| vec![rat(1)],
            Some(vec![rat(0)]),
        );
        assert_eq!(zero_unit.unwrap_err(), AlgebraError::BadUnit);
    }

    #[test]
    fn corners_and_ideals() {
        let a = semigroup_algebra(&z2());
        let one = a.unit().unwrap().to_vec();
        let (c, _) = a.corner(&one).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(a.ideal_is_whole(&one));
        let half = crate::linalg::ratio(1, 2);
        let e = vec![half.clone(), half];
        let (c, basis) = a.corner(&e).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(basis[0], vec![rat(1), rat(1)]);
        assert!(!a.ideal_is_whole(&e));
        assert_eq!(a.corner(&[rat(0), rat(1)]).unwrap_err(), AlgebraError::NotIdempotent);
    }

    #[test]
    fn homomorphism_checks() {
        let a = semigroup_algebra(&z2());
        let id = LinearMap::identity(2);
        assert!(is_algebra_homomorphism(&id, &a, &a).holds);
        // Sending both basis elements to 1 is the trivial character.
        let triv = LinearMap::from_matrix(&Matrix::from_i64_rows(&[&[1, 1], &[0, 0]]));
        assert!(is_algebra_homomorphism(&triv, &a, &a).holds);
        let bad = LinearMap::from_matrix(&Matrix::from_i64_rows(&[&[1, 0], &[0, 2]]));
        assert_eq!(is_algebra_homomorphism(&bad, &a, &a).witness, Some((1, 1)));
    }
}
