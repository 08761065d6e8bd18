use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    class_bimodule, identify_symmetric, specht_module, tensor_over_group, ClassBimodule, ClassKind,
    GroupModule, RepError, SymmetricIdentification, TensorProduct,
};
use crate::algebra::SemigroupModule;
use crate::ehresmann::{check_right_restriction_ei, representative_projections, Ehresmann};
use crate::linalg::{as_integer, format_rational, rat, Matrix, Rational};
use crate::semigroup::GreenData;
use crate::young::{binomial, compositions_of_length, hook_dimension, kostka, mn_character, partitions_of, Partition};

/// One simple (equivalently, one indecomposable projective) module: a
/// regular J-class, given by its block position and its representative
/// projection, together with an irreducible of the maximal subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepLabel {
    pub block: usize,
    pub projection: usize,
    pub lambda: Partition,
}

impl RepLabel {
    pub fn simple_name(&self) -> String {
        format!("S({},{})", self.block, self.lambda)
    }

    pub fn projective_name(&self) -> String {
        format!("P({},{})", self.block, self.lambda)
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.block, self.lambda)
    }
}

/// Labels ordered by block, then by partition in decreasing
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepIndex {
    pub entries: Vec<RepLabel>,
}

impl RepIndex {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug)]
struct Block {
    projection: usize,
    ident: SymmetricIdentification,
    l: ClassBimodule,
    lt: ClassBimodule,
    h_classes_in_l: usize,
}

/// Shared data for the representation theory of one semigroup.
#[derive(Clone, Debug)]
pub struct RepContext<'a> {
    b: &'a Ehresmann,
    green: GreenData,
    blocks: Vec<Block>,
    index: RepIndex,
}

/// The projective-to-simple epimorphism induced by `m ↦ m` on `L(e)` and
/// `m ↦ 0` off it.
#[derive(Clone, Debug)]
pub struct EpiReport {
    /// `dim S × dim P`.
    pub matrix: Matrix,
    pub intertwines: bool,
    pub surjective: bool,
    pub kernel_dim: usize,
    /// The kernel is spanned by the images of carrier points outside `L(e)`.
    pub kernel_from_outside: bool,
}

impl EpiReport {
    pub fn holds(&self) -> bool {
        self.intertwines && self.surjective && self.kernel_from_outside
    }
}

fn is_zero_element(b: &Ehresmann, z: usize) -> bool {
    (0..b.size()).all(|s| b.product(s, z) == z && b.product(z, s) == z)
}

/// Reorders the representatives so that whenever some `m` has `m*` in the
/// class of `p` and `m⁺` in the class of `q ≠ p`, `q` comes first. The EI
/// condition makes this relation acyclic, so Cartan matrices come out upper
/// unitriangular; ties keep the bottom-up J order.
fn category_order(b: &Ehresmann, green: &GreenData, reps: Vec<usize>) -> Vec<usize> {
    let n = reps.len();
    let slot: HashMap<usize, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, &e)| (green.j.class_of(e), i))
        .collect();
    let mut before = vec![vec![false; n]; n];
    for m in 0..b.size() {
        let from = slot.get(&green.j.class_of(b.star(m)));
        let to = slot.get(&green.j.class_of(b.plus(m)));
        if let (Some(&p), Some(&q)) = (from, to) {
            if p != q {
                before[q][p] = true;
            }
        }
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&p| !placed[p] && (0..n).all(|q| placed[q] || !before[q][p]))
            .expect("the category order of an EI input is acyclic");
        placed[next] = true;
        order.push(reps[next]);
    }
    order
}

impl<'a> RepContext<'a> {
    /// Requires a right restriction EI input whose maximal subgroups at the
    /// representative projections are symmetric or trivial.
    pub fn new(b: &'a Ehresmann) -> Result<Self, RepError> {
        let green = GreenData::compute(b.base());
        if !check_right_restriction_ei(b, &green)
            .map_err(|_| RepError::NotRightRestrictionEi)?
            .verdict
        {
            return Err(RepError::NotRightRestrictionEi);
        }
        let mut blocks = Vec::new();
        let mut entries = Vec::new();
        for (position, e) in category_order(b, &green, representative_projections(b, &green)?)
            .into_iter()
            .enumerate() {
            let l = class_bimodule(b, &green, e, ClassKind::L)?;
            let lt = class_bimodule(b, &green, e, ClassKind::LTilde)?;
            let ident = identify_symmetric(l.group(), is_zero_element(b, e)).ok_or(
                RepError::UnsupportedSubgroup {
                    projection: e,
                    order: l.group().order(),
                },
            )?;
            for lambda in partitions_of(ident.degree()) {
                entries.push(RepLabel {
                    block: position,
                    projection: e,
                    lambda,
                });
            }
            let h_classes_in_l = green.h_classes_in(l.carrier()).len();
            blocks.push(Block {
                projection: e,
                ident,
                l,
                lt,
                h_classes_in_l,
            });
        }
        Ok(Self {
            b,
            green,
            blocks,
            index: RepIndex { entries },
        })
    }

    pub fn ehresmann(&self) -> &Ehresmann {
        self.b
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn index(&self) -> &RepIndex {
        &self.index
    }

    fn block(&self, i: usize) -> &Block {
        &self.blocks[self.index.entries[i].block]
    }

    pub fn identification(&self, i: usize) -> &SymmetricIdentification {
        &self.block(i).ident
    }

    pub fn class(&self, i: usize, kind: ClassKind) -> &ClassBimodule {
        let block = self.block(i);
        match kind {
            ClassKind::L => &block.l,
            ClassKind::LTilde => &block.lt,
        }
    }

    /// The Specht module of entry `i`, moved to `G_e`.
    pub fn group_module(&self, i: usize) -> GroupModule {
        specht_module(&self.index.entries[i].lambda).pull_back(self.identification(i).map())
    }

    /// `kL(e) ⊗ S^λ`; its dimension is checked against the free right
    /// action count `#H-classes · f^λ`.
    pub fn simple(&self, i: usize) -> Result<TensorProduct, RepError> {
        let block = self.block(i);
        let t = tensor_over_group(&block.l, &self.group_module(i), self.b.size())?;
        let expected = block.h_classes_in_l as u64 * hook_dimension(&self.index.entries[i].lambda);
        if t.dim() as u64 != expected {
            return Err(RepError::DimensionMismatch {
                what: self.index.entries[i].simple_name(),
                expected,
                found: t.dim() as u64,
            });
        }
        Ok(t)
    }

    /// `kL̃(e) ⊗ S^λ`.
    pub fn projective(&self, i: usize) -> Result<TensorProduct, RepError> {
        tensor_over_group(&self.block(i).lt, &self.group_module(i), self.b.size())
    }

    pub fn simple_modules(&self) -> Result<Vec<SemigroupModule>, RepError> {
        (0..self.index.len())
            .into_par_iter()
            .map(|i| self.simple(i).map(TensorProduct::into_module))
            .collect()
    }

    pub fn projective_modules(&self) -> Result<Vec<SemigroupModule>, RepError> {
        (0..self.index.len())
            .into_par_iter()
            .map(|i| self.projective(i).map(TensorProduct::into_module))
            .collect()
    }

    /// The multiplicity of the (self-dual) irreducible in `kL̃(e)` as a right
    /// `G_e`-module, which is the dimension of the projective.
    pub fn dim_projective_via_multiplicity(&self, i: usize) -> Result<u64, RepError> {
        let block = self.block(i);
        multiplicity_of_dual(&block.lt, &block.ident, &self.index.entries[i].lambda)
    }

    pub fn projective_to_simple_epi(&self, i: usize) -> Result<EpiReport, RepError> {
        let block = self.block(i);
        let p = self.projective(i)?;
        let s = self.simple(i)?;
        let mut matrix = Matrix::zeros(s.dim(), p.dim());
        for (col, (pos, a)) in p.basis_origin().into_iter().enumerate() {
            let x = block.lt.carrier()[pos];
            if let Some(j) = block.l.position(x) {
                matrix.set_column(col, &s.coordinates(j, a));
            }
        }
        let intertwines = (0..self.b.size()).into_par_iter().all(|t| {
            matrix.mul(p.module().action(t)) == s.module().action(t).mul(&matrix)
        });
        let rank = matrix.rank();
        let kernel_dim = p.dim() - rank;
        let outside = block
            .lt
            .carrier()
            .iter()
            .enumerate()
            .filter(|(_, x)| block.l.position(**x).is_none())
            .flat_map(|(pos, _)| (0..self.group_module(i).dim()).map(move |a| (pos, a)))
            .map(|(pos, a)| p.coordinates(pos, a));
        let outside_rank = crate::linalg::span_rank(p.dim(), outside);
        Ok(EpiReport {
            matrix,
            intertwines,
            surjective: rank == s.dim(),
            kernel_dim,
            kernel_from_outside: outside_rank == kernel_dim,
        })
    }

    pub fn projection(&self, i: usize) -> usize {
        self.block(i).projection
    }
}

fn nonnegative_integer(what: impl Fn() -> String, q: &Rational) -> Result<u64, RepError> {
    match as_integer(q) {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(RepError::NonIntegral {
            what: what(),
            value: format_rational(q),
        }),
    }
}

/// `⟨fixed-point character of the right G_e-action, χ_λ⟩`.
pub fn multiplicity_of_dual(
    mb: &ClassBimodule,
    ident: &SymmetricIdentification,
    lambda: &Partition,
) -> Result<u64, RepError> {
    let order = mb.group().order();
    let mut total = rat(0);
    for g in 0..order {
        let chi = mn_character(lambda, &ident.cycle_type(g)).map_err(|_| RepError::DimensionMismatch {
            what: format!("weight of {lambda}"),
            expected: ident.degree() as u64,
            found: lambda.weight() as u64,
        })?;
        total += rat(mb.fixed_points(g) as i64 * chi);
    }
    let value = total / rat(order as i64);
    nonnegative_integer(|| format!("multiplicity of {lambda}"), &value)
}

/// `Σ_l Σ_{μ ⊨ k, ℓ(μ) = l} C(n, l)·K_{λμ}` for `λ ⊢ k`; the `l = 0` term
/// contributes only when `k = 0`.
pub fn dim_projective_ptn_formula(n: usize, lambda: &Partition) -> u64 {
    let k = lambda.weight();
    (0..=k.min(n))
        .map(|l| {
            let inner: u64 = compositions_of_length(k, l)
                .iter()
                .map(|mu| kostka(lambda, mu).expect("weights agree"))
                .sum();
            binomial(n, l) * inner
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::pt_n;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pt2_dimensions() {
        let b = Ehresmann::new(pt_n(2).unwrap()).unwrap();
        let ctx = RepContext::new(&b).unwrap();
        let lambdas: Vec<_> = ctx.index().entries.iter().map(|e| e.lambda.clone()).collect();
        assert_eq!(lambdas, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        let simple: Vec<_> = ctx.simple_modules().unwrap().iter().map(|m| m.dim()).collect();
        let proj: Vec<_> = ctx.projective_modules().unwrap().iter().map(|m| m.dim()).collect();
        assert_eq!(simple, vec![1, 2, 1, 1]);
        assert_eq!(proj, vec![1, 2, 3, 1]);
        for i in 0..4 {
            assert_eq!(ctx.dim_projective_via_multiplicity(i).unwrap(), proj[i] as u64);
            let lambda = &ctx.index().entries[i].lambda;
            assert_eq!(dim_projective_ptn_formula(2, lambda), proj[i] as u64);
            assert!(ctx.projective_to_simple_epi(i).unwrap().holds());
        }
        let epi = ctx.projective_to_simple_epi(2).unwrap();
        assert_eq!(epi.kernel_dim, 2);
    }

    #[test]
    fn formula_values() {
        assert_eq!(dim_projective_ptn_formula(2, &p(&[2])), 3);
        assert_eq!(dim_projective_ptn_formula(2, &p(&[1, 1])), 1);
        for n in 1..5 {
            assert_eq!(dim_projective_ptn_formula(n, &p(&[1])), n as u64);
        }
        assert_eq!(dim_projective_ptn_formula(3, &p(&[])), 1);
    }
}
