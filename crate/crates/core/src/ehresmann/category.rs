use thiserror::Error;

use super::Ehresmann;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("morphism arrays disagree in length")]
    Shape,
    #[error("identity of object {0} is not an endomorphism of it")]
    BadIdentity(usize),
    #[error("composite {b}∘{a} is defined exactly when cod({a}) = dom({b}), violated")]
    Domain { a: usize, b: usize },
    #[error("identity law fails at morphism {0}")]
    IdentityLaw(usize),
    #[error("composition is not associative at ({c}∘{b})∘{a}")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite category with morphisms `0..n`, composed right to left:
/// `compose(b, a)` is `b∘a`, defined when `cod(a) = dom(b)`.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    object_labels: Vec<String>,
    morphism_labels: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    identities: Vec<usize>,
    table: Vec<Option<u32>>,
}

impl FiniteCategory {
    pub fn new(
        object_labels: Vec<String>,
        morphism_labels: Vec<String>,
        dom: Vec<usize>,
        cod: Vec<usize>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self, CategoryError> {
        let n = morphism_labels.len();
        if dom.len() != n || cod.len() != n || identities.len() != object_labels.len() {
            return Err(CategoryError::Shape);
        }
        for (o, &i) in identities.iter().enumerate() {
            if i >= n || dom[i] != o || cod[i] != o {
                return Err(CategoryError::BadIdentity(o));
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for b in 0..n {
            for a in 0..n {
                let c = compose(b, a);
                let ok = match c {
                    Some(c) => cod[a] == dom[b] && c < n && dom[c] == dom[a] && cod[c] == cod[b],
                    None => cod[a] != dom[b],
                };
                if !ok {
                    return Err(CategoryError::Domain { a, b });
                }
                table.push(c.map(|c| c as u32));
            }
        }
        let cat = Self {
            object_labels,
            morphism_labels,
            dom,
            cod,
            identities,
            table,
        };
        cat.verify_laws()?;
        Ok(cat)
    }

    fn verify_laws(&self) -> Result<(), CategoryError> {
        let n = self.num_morphisms();
        for a in 0..n {
            if self.compose(self.identities[self.cod[a]], a) != Some(a)
                || self.compose(a, self.identities[self.dom[a]]) != Some(a)
            {
                return Err(CategoryError::IdentityLaw(a));
            }
        }
        let outgoing = self.outgoing();
        for a in 0..n {
            for &b in &outgoing[self.cod[a]] {
                let ba = self.compose(b, a).unwrap();
                for &c in &outgoing[self.cod[b]] {
                    let cb = self.compose(c, b).unwrap();
                    if self.compose(c, ba) != self.compose(cb, a) {
                        return Err(CategoryError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Morphisms grouped by domain.
    fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_objects()];
        for a in 0..self.num_morphisms() {
            out[self.dom[a]].push(a);
        }
        out
    }

    pub fn num_objects(&self) -> usize {
        self.object_labels.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphism_labels.len()
    }

    pub fn dom(&self, a: usize) -> usize {
        self.dom[a]
    }

    pub fn cod(&self, a: usize) -> usize {
        self.cod[a]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    /// `b∘a`, if defined.
    #[inline]
    pub fn compose(&self, b: usize, a: usize) -> Option<usize> {
        self.table[b * self.num_morphisms() + a].map(|c| c as usize)
    }

    pub fn object_label(&self, o: usize) -> &str {
        &self.object_labels[o]
    }

    pub fn morphism_label(&self, a: usize) -> &str {
        &self.morphism_labels[a]
    }

    pub fn hom(&self, from: usize, to: usize) -> Vec<usize> {
        (0..self.num_morphisms())
            .filter(|&a| self.dom[a] == from && self.cod[a] == to)
            .collect()
    }

    pub fn endomorphisms(&self, object: usize) -> Vec<usize> {
        self.hom(object, object)
    }
}

/// The category with objects the projections and one morphism `a: a* → a⁺`
/// per element, where `b∘a = ba` whenever `a⁺ = b*`.
pub fn build_category(b: &Ehresmann) -> FiniteCategory {
    let proj = b.projections();
    let mut object_of = vec![usize::MAX; b.size()];
    for (i, &e) in proj.iter().enumerate() {
        object_of[e] = i;
    }
    let dom = (0..b.size()).map(|a| object_of[b.star(a)]).collect();
    let cod = (0..b.size()).map(|a| object_of[b.plus(a)]).collect();
    FiniteCategory::new(
        proj.iter().map(|&e| b.label(e).to_string()).collect(),
        b.base().labels().to_vec(),
        dom,
        cod,
        proj.to_vec(),
        |y, x| (b.plus(x) == b.star(y)).then(|| b.product(y, x)),
    )
    .expect("an Ehresmann semigroup yields a category")
}

/// Every endomorphism monoid is a group.
pub fn is_ei_category(c: &FiniteCategory) -> bool {
    (0..c.num_objects()).all(|o| {
        let id = c.identity(o);
        let ends = c.endomorphisms(o);
        ends.iter().all(|&f| {
            ends.iter()
                .any(|&g| c.compose(g, f) == Some(id) && c.compose(f, g) == Some(id))
        })
    })
}
