use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteSemigroup, SemigroupError};

/// Result of closing a generating set: the semigroup and the concrete element
/// behind each index.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<T>,
}

/// Breadth-first product closure of `generators` under `compose`.
///
/// Indices `0..g` are the (distinct) generators in input order; the remaining
/// elements follow in discovery order, where each discovered element is
/// multiplied on the right by every generator. Fails once more than `limit`
/// elements have been found.
pub fn closure<T, C, L>(
    generators: &[T],
    compose: C,
    label: L,
    limit: usize,
) -> Result<Closure<T>, SemigroupError>
where
    T: Clone + Eq + Hash,
    C: Fn(&T, &T) -> T,
    L: Fn(&T) -> String,
{
    let mut elements: Vec<T> = Vec::new();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut gen_ids = Vec::new();
    for g in generators {
        let id = *index.entry(g.clone()).or_insert_with(|| {
            elements.push(g.clone());
            elements.len() - 1
        });
        if !gen_ids.contains(&id) {
            gen_ids.push(id);
        }
    }
    if elements.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if elements.len() > limit {
        return Err(SemigroupError::BoundExceeded(limit));
    }

    let mut i = 0;
    while i < elements.len() {
        for &g in &gen_ids {
            let p = compose(&elements[i], &elements[g]);
            if !index.contains_key(&p) {
                if elements.len() == limit {
                    return Err(SemigroupError::BoundExceeded(limit));
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }

    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            let p = compose(a, b);
            // Closed under right multiplication by generators implies closed.
            table.push(index[&p] as u32);
        }
    }
    let labels = elements.iter().map(label).collect();
    let semigroup = FiniteSemigroup::from_flat(labels, table, Some(gen_ids))?;
    Ok(Closure {
        semigroup,
        elements,
    })
}
