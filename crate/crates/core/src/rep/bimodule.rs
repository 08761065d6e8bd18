use std::fmt;

use num_traits::{One, Zero};

use super::{GroupModule, RepError};
use crate::algebra::SemigroupModule;
use crate::ehresmann::{tilde_data, BiUnaryStructure, Ehresmann};
use crate::linalg::{Matrix, Rational, RowEchelon};
use crate::par::{first_index, first_pair};
use crate::semigroup::{FiniteSemigroup, GreenData, MaximalSubgroup};

/// Which class of the projection carries the bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// The Green L-class.
    L,
    /// The class `{a : a L̃ e}` of elements with the same right identities
    /// in `E` as `e`.
    LTilde,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::L => "L",
            ClassKind::LTilde => "L~",
        })
    }
}

/// A class of a projection `e` with the partial left action of `S` (products
/// leaving the class are undefined) and the right action of `G_e`.
#[derive(Clone, Debug)]
pub struct ClassBimodule {
    kind: ClassKind,
    projection: usize,
    carrier: Vec<usize>,
    labels: Vec<String>,
    group: MaximalSubgroup,
    /// `left[s][i]`: position of `s·x_i` in the carrier, if defined.
    left: Vec<Vec<Option<u32>>>,
    /// `right[i][g]`: position of `x_i·g` for local group index `g`.
    right: Vec<Vec<u32>>,
}

impl ClassBimodule {
    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn projection(&self) -> usize {
        self.projection
    }

    /// Ambient element indices, increasing.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.carrier.binary_search(&x).ok()
    }

    pub fn group(&self) -> &MaximalSubgroup {
        &self.group
    }

    pub fn left(&self, s: usize, i: usize) -> Option<usize> {
        self.left[s][i].map(|j| j as usize)
    }

    pub fn right(&self, i: usize, g: usize) -> usize {
        self.right[i][g] as usize
    }

    /// Number of carrier points fixed by the local group element `g`.
    pub fn fixed_points(&self, g: usize) -> usize {
        (0..self.len()).filter(|&i| self.right(i, g) == i).count()
    }

    /// Whether only the identity of `G_e` fixes a point.
    pub fn acts_freely(&self) -> bool {
        let unit = self.group.local_identity();
        (0..self.group.order()).all(|g| g == unit || self.fixed_points(g) == 0)
    }

    /// First `(s, t, i)` with `(st)·x_i != s·(t·x_i)`, undefined values
    /// included.
    pub fn check_left_action(&self, s: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
        let n = s.size();
        let c = self.len();
        first_pair(n, n, |a, b| {
            (0..c).any(|i| self.left(s.product(a, b), i) != self.left(b, i).and_then(|j| self.left(a, j)))
        })
        .map(|(a, b)| {
            let i = (0..c)
                .find(|&i| self.left(s.product(a, b), i) != self.left(b, i).and_then(|j| self.left(a, j)))
                .unwrap();
            (a, b, self.carrier[i])
        })
    }
}

/// Builds the bimodule on the L- or L̃-class of the projection `e`.
///
/// The L̃-class is taken relative to the projection set of `b`, so the
/// right action of `G_e` may fail to preserve it when `E` is not a
/// right-congruence choice.
pub fn class_bimodule(
    b: &BiUnaryStructure,
    green: &GreenData,
    e: usize,
    kind: ClassKind,
) -> Result<ClassBimodule, RepError> {
    if !b.is_projection(e) {
        return Err(RepError::NotAProjection(e));
    }
    let s = b.base();
    let carrier: Vec<usize> = match kind {
        ClassKind::L => green.l.members_with(e).to_vec(),
        ClassKind::LTilde => tilde_data(s, b.projections())?
            .l_tilde
            .members_with(e)
            .to_vec(),
    };
    let group = MaximalSubgroup::from_h_class(s, green, e)?;
    let position = |x: usize| carrier.binary_search(&x).ok();

    let mut right = Vec::with_capacity(carrier.len());
    for &x in &carrier {
        let mut row = Vec::with_capacity(group.order());
        for &g in &group.elements {
            let image = s.product(x, g);
            let Some(p) = position(image) else {
                return Err(RepError::RightActionNotClosed {
                    element: x,
                    group_element: g,
                    image,
                });
            };
            row.push(p as u32);
        }
        right.push(row);
    }
    let left: Vec<Vec<Option<u32>>> = s
        .elements()
        .map(|a| {
            carrier
                .iter()
                .map(|&x| position(s.product(a, x)).map(|p| p as u32))
                .collect()
        })
        .collect();
    let module = ClassBimodule {
        kind,
        projection: e,
        labels: carrier.iter().map(|&x| s.label(x).to_string()).collect(),
        carrier,
        group,
        left,
        right,
    };
    let (c, k) = (module.len(), module.group.order());
    let clash = |a: usize, i: usize, g: usize| {
        module.left(a, module.right(i, g)) != module.left(a, i).map(|j| module.right(j, g))
    };
    if let Some(a) = first_index(s.size(), |a| (0..c).any(|i| (0..k).any(|g| clash(a, i, g)))) {
        let (i, g) = (0..c)
            .flat_map(|i| (0..k).map(move |g| (i, g)))
            .find(|&(i, g)| clash(a, i, g))
            .unwrap();
        return Err(RepError::NotCommuting(a, module.carrier[i], module.group.elements[g]));
    }
    Ok(module)
}

/// Checks `s·m ∈ L̃(m) ⇔ m⁺ ≤ s*` over all `s` and all `m` with `m* = e`.
/// Returns the first `(s, m)` where the two sides differ.
pub fn left_action_support_check(b: &Ehresmann, e: usize) -> Option<(usize, usize)> {
    let class: Vec<usize> = (0..b.size()).filter(|&m| b.star(m) == e).collect();
    first_pair(b.size(), class.len(), |s, i| {
        let m = class[i];
        let defined = b.star(b.product(s, m)) == e;
        defined != b.proj_leq(b.plus(m), b.star(s))
    })
    .map(|(s, i)| (s, class[i]))
}

/// `kX ⊗_{kG} V` with its quotient bookkeeping.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    module: SemigroupModule,
    width: usize,
    group_dim: usize,
    /// Position in the quotient basis of each free column.
    free_position: Vec<Option<usize>>,
    /// Quotient coordinates of each pivot column's unit vector.
    pivot_images: Vec<Option<Vec<(usize, Rational)>>>,
}

impl TensorProduct {
    pub fn module(&self) -> &SemigroupModule {
        &self.module
    }

    pub fn into_module(self) -> SemigroupModule {
        self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Quotient coordinates of `x_i ⊗ v_a`.
    pub fn coordinates(&self, i: usize, a: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (p, c) in self.image(i * self.group_dim + a) {
            out[p] = c;
        }
        out
    }

    fn image(&self, column: usize) -> Vec<(usize, Rational)> {
        debug_assert!(column < self.width);
        match self.free_position[column] {
            Some(p) => vec![(p, Rational::one())],
            None => self.pivot_images[column].clone().unwrap_or_default(),
        }
    }

    /// Carrier position and group-module index behind each quotient basis
    /// vector.
    pub fn basis_origin(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.dim()];
        for (col, p) in self.free_position.iter().enumerate() {
            if let Some(p) = p {
                out[*p] = (col / self.group_dim, col % self.group_dim);
            }
        }
        out
    }
}

/// The quotient of `kX ⊗ V` by `x·g ⊗ v − x ⊗ g·v`, with the induced left
/// action. Relations use a generating set of `G_e` only, which spans the
/// same subspace.
pub fn tensor_over_group(
    mb: &ClassBimodule,
    v: &GroupModule,
    semigroup_size: usize,
) -> Result<TensorProduct, RepError> {
    if v.order() != mb.group.order() {
        return Err(RepError::GroupModuleMismatch {
            expected: mb.group.order(),
            found: v.order(),
        });
    }
    let (c, d) = (mb.len(), v.dim());
    let width = c * d;
    let idx = |i: usize, a: usize| i * d + a;
    let mut relations = RowEchelon::new(width);
    for g in mb.group.generators() {
        let rho = v.action(g);
        for i in 0..c {
            let ig = mb.right(i, g);
            for a in 0..d {
                let mut row = vec![Rational::zero(); width];
                row[idx(ig, a)] += Rational::one();
                for b in 0..d {
                    if !rho[(b, a)].is_zero() {
                        row[idx(i, b)] -= &rho[(b, a)];
                    }
                }
                relations.insert(row);
            }
        }
    }
    let free = relations.free_columns();
    let mut free_position = vec![None; width];
    for (p, &col) in free.iter().enumerate() {
        free_position[col] = Some(p);
    }
    let mut pivot_images = vec![None; width];
    for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
        // e_p ≡ e_p − row, which vanishes on every pivot column.
        let image = free
            .iter()
            .enumerate()
            .filter(|&(_, &col)| !row[col].is_zero())
            .map(|(q, &col)| (q, -row[col].clone()))
            .collect();
        pivot_images[p] = Some(image);
    }
    let dim = free.len();
    let labels = free
        .iter()
        .map(|&col| {
            let (i, a) = (col / d, col % d);
            if d == 1 {
                mb.labels[i].clone()
            } else {
                format!("{}⊗{}", mb.labels[i], a + 1)
            }
        })
        .collect();
    let mut tensor = TensorProduct {
        module: SemigroupModule::new(Vec::new(), Vec::new()),
        width,
        group_dim: d,
        free_position,
        pivot_images,
    };
    let actions = (0..semigroup_size)
        .map(|s| {
            let mut m = Matrix::zeros(dim, dim);
            for (q, &col) in free.iter().enumerate() {
                let (i, a) = (col / d, col % d);
                if let Some(j) = mb.left(s, i) {
                    for (p, coef) in tensor.image(idx(j, a)) {
                        m[(p, q)] = coef;
                    }
                }
            }
            m
        })
        .collect();
    tensor.module = SemigroupModule::new(labels, actions);
    Ok(tensor)
}
