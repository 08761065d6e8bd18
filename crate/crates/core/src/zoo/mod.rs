//! Concrete bi-unary semigroups: the partial, total, injective and relational
//! transformation monoids, the partition monoid, and a few small examples.

mod diagram;
mod examples;
mod partial;
mod relation;

pub use diagram::{join_equivalences, Diagram};
pub use examples::{
    cayley_embedding_check, cayley_map, ei_neither_restriction, non_ei_relations,
    non_embeddable_relations, ut3_images, ut3_isomorphism_check, CayleyReport, Ut3Report,
};
pub use partial::PartialMap;
pub use relation::Relation;

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

use crate::ehresmann::{BiUnaryStructure, EhresmannError};
use crate::semigroup::{FiniteSemigroup, SemigroupError};

/// Default largest degree per family.
pub const PT_MAX: usize = 4;
pub const T_MAX: usize = 5;
pub const IS_MAX: usize = 5;
pub const B_MAX: usize = 3;
pub const PR_MAX: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZooError {
    #[error("{family}_{n} exceeds the size bound (largest allowed degree is {max})")]
    Bound {
        family: &'static str,
        n: usize,
        max: usize,
    },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("unknown zoo member '{0}'")]
    Unknown(String),
    #[error("element set is not closed: {0} is missing")]
    NotClosed(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ehresmann(#[from] EhresmannError),
}

fn check_degree(family: &'static str, n: usize, max: usize) -> Result<(), ZooError> {
    if n == 0 {
        return Err(ZooError::ZeroDegree);
    }
    if n > max {
        return Err(ZooError::Bound { family, n, max });
    }
    Ok(())
}

/// Multiplication table of a finite set of concrete elements closed under
/// `mul`, in the given order.
pub(crate) fn tabulate<T, M, L>(
    elements: &[T],
    mul: M,
    label: L,
) -> Result<(FiniteSemigroup, HashMap<T, usize>), ZooError>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    let index: HashMap<T, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    let mut table = Vec::with_capacity(elements.len() * elements.len());
    for a in elements {
        for b in elements {
            let p = mul(a, b);
            match index.get(&p) {
                Some(&i) => table.push(i as u32),
                None => return Err(ZooError::NotClosed(label(&p))),
            }
        }
    }
    let labels = elements.iter().map(label).collect();
    Ok((FiniteSemigroup::from_flat(labels, table, None)?, index))
}

fn partial_structure(elements: Vec<PartialMap>) -> Result<BiUnaryStructure, ZooError> {
    let n = elements[0].degree();
    let (s, index) = tabulate(&elements, |f, g| f.after(g), |f| f.to_string())?;
    let idx = |dom: &[usize]| index[&PartialMap::partial_identity(n, dom)];
    let star = elements.iter().map(|f| idx(&f.domain())).collect();
    let plus = elements.iter().map(|f| idx(&f.image())).collect();
    let projections = elements
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_injective() && f.domain() == f.image() && f.after(f) == **f)
        .map(|(i, _)| i)
        .collect();
    Ok(BiUnaryStructure::new(s, star, plus, projections)?)
}

/// All partial functions on `n` points with `f* = 1_dom(f)`, `f⁺ = 1_im(f)`.
pub fn pt_n(n: usize) -> Result<BiUnaryStructure, ZooError> {
    pt_n_bounded(n, PT_MAX)
}

pub fn pt_n_bounded(n: usize, max: usize) -> Result<BiUnaryStructure, ZooError> {
    check_degree("PT", n, max)?;
    partial_structure(PartialMap::all(n))
}

/// The subalgebra of `PT_n` generated by `generators` under product, `*` and
/// `⁺`. Every such subalgebra is again a right restriction Ehresmann
/// semigroup, which makes this a cheap source of random test inputs.
pub fn pt_subalgebra(generators: &[PartialMap]) -> Result<BiUnaryStructure, ZooError> {
    let n = generators.first().ok_or(SemigroupError::Empty)?.degree();
    let mut found: std::collections::BTreeSet<PartialMap> = generators.iter().cloned().collect();
    let mut frontier: Vec<PartialMap> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<PartialMap> = found.iter().cloned().collect();
        let mut next = Vec::new();
        let mut push = |f: PartialMap| {
            if found.insert(f.clone()) {
                next.push(f);
            }
        };
        for f in &frontier {
            push(PartialMap::partial_identity(n, &f.domain()));
            push(PartialMap::partial_identity(n, &f.image()));
            for g in &snapshot {
                push(f.after(g));
                push(g.after(f));
            }
        }
        frontier = next;
    }
    partial_structure(found.into_iter().collect())
}

/// Partial injections, with the same unary maps as in `PT_n`.
pub fn is_n(n: usize) -> Result<BiUnaryStructure, ZooError> {
    is_n_bounded(n, IS_MAX)
}

pub fn is_n_bounded(n: usize, max: usize) -> Result<BiUnaryStructure, ZooError> {
    check_degree("IS", n, max)?;
    partial_structure(
        PartialMap::all(n)
            .into_iter()
            .filter(PartialMap::is_injective)
            .collect(),
    )
}

/// All total functions, with the identity as the only projection.
pub fn t_n(n: usize) -> Result<BiUnaryStructure, ZooError> {
    t_n_bounded(n, T_MAX)
}

pub fn t_n_bounded(n: usize, max: usize) -> Result<BiUnaryStructure, ZooError> {
    check_degree("T", n, max)?;
    let elements: Vec<PartialMap> = PartialMap::all(n)
        .into_iter()
        .filter(PartialMap::is_total)
        .collect();
    let (s, index) = tabulate(&elements, |f, g| f.after(g), |f| f.to_string())?;
    let id = index[&PartialMap::partial_identity(n, &(0..n).collect::<Vec<_>>())];
    let size = s.size();
    Ok(BiUnaryStructure::new(s, vec![id; size], vec![id; size], vec![id])?)
}

fn relation_structure(elements: Vec<Relation>) -> Result<BiUnaryStructure, ZooError> {
    let n = elements[0].degree();
    let (s, index) = tabulate(&elements, |a, b| a.after(b), |r| r.to_string())?;
    let idx = |set: &[usize]| index[&Relation::partial_identity(n, set)];
    let star = elements.iter().map(|r| idx(&r.domain())).collect();
    let plus = elements.iter().map(|r| idx(&r.image())).collect();
    let projections = elements
        .iter()
        .enumerate()
        .filter(|(_, r)| **r == Relation::partial_identity(n, &r.domain()))
        .map(|(i, _)| i)
        .collect();
    Ok(BiUnaryStructure::new(s, star, plus, projections)?)
}

/// All binary relations, with `α* = 1_dom(α)` and `α⁺ = 1_im(α)`.
pub fn b_n(n: usize) -> Result<BiUnaryStructure, ZooError> {
    b_n_bounded(n, B_MAX)
}

pub fn b_n_bounded(n: usize, max: usize) -> Result<BiUnaryStructure, ZooError> {
    // The bit encoding holds at most 16 pairs.
    check_degree("B", n, max.min(4))?;
    relation_structure(Relation::all(n))
}

/// The partition monoid, `α·β` being `α` stacked on top of `β`, with
/// `α⁺ = e_ker(α)` and `α* = e_coker(α)`.
pub fn partition_monoid(n: usize) -> Result<BiUnaryStructure, ZooError> {
    partition_monoid_bounded(n, PR_MAX)
}

pub fn partition_monoid_bounded(n: usize, max: usize) -> Result<BiUnaryStructure, ZooError> {
    check_degree("PR", n, max)?;
    let elements = Diagram::all(n);
    let (s, index) = tabulate(&elements, Diagram::compose, Diagram::to_string)?;
    let idx = |sigma: &[u8]| index[&Diagram::projection(n, sigma)];
    let star = elements.iter().map(|d| idx(&d.cokernel())).collect();
    let plus = elements.iter().map(|d| idx(&d.kernel())).collect();
    let projections = Diagram::equivalences(n).iter().map(|s| idx(s)).collect();
    Ok(BiUnaryStructure::new(s, star, plus, projections)?)
}

/// Names accepted by [`by_name`], with a description.
pub fn catalogue() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for n in 1..=PT_MAX {
        out.push((format!("pt{n}"), format!("partial functions on {n} points")));
    }
    for n in 1..=T_MAX {
        out.push((format!("t{n}"), format!("total functions on {n} points")));
    }
    for n in 1..=IS_MAX {
        out.push((format!("is{n}"), format!("partial injections on {n} points")));
    }
    for n in 1..=B_MAX {
        out.push((format!("b{n}"), format!("binary relations on {n} points")));
    }
    for n in 1..=PR_MAX {
        out.push((format!("pr{n}"), format!("set partitions of 2×{n} points")));
    }
    out.push(("ei-neither-restriction".into(), "six pairs in T2^op×T2, EI but neither restriction".into()));
    out.push(("non-embeddable".into(), "five relations failing the embedding quasiidentity".into()));
    out.push(("non-ei-relations".into(), "twelve-element submonoid of B2, not EI".into()));
    out
}

/// Builds a zoo member from its catalogue name.
pub fn by_name(name: &str) -> Result<BiUnaryStructure, ZooError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "ei-neither-restriction" => return Ok(ei_neither_restriction()),
        "non-embeddable" => return Ok(non_embeddable_relations()),
        "non-ei-relations" => return Ok(non_ei_relations()),
        _ => {}
    }
    let split = lower
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| ZooError::Unknown(name.to_string()))?;
    let (family, digits) = lower.split_at(split);
    let n: usize = digits
        .parse()
        .map_err(|_| ZooError::Unknown(name.to_string()))?;
    match family {
        "pt" => pt_n(n),
        "t" => t_n(n),
        "is" => is_n(n),
        "b" => b_n(n),
        "pr" => partition_monoid(n),
        _ => Err(ZooError::Unknown(name.to_string())),
    }
}
