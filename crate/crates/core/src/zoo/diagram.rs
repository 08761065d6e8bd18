use std::fmt;

use petgraph::unionfind::UnionFind;

/// A set partition of `{1..n} ∪ {1'..n'}`.
///
/// Points `0..n` are the top row and `n..2n` the primed bottom row. Blocks
/// are numbered in order of first appearance, which makes the representation
/// canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    block: Vec<u8>,
}

fn canonical(labels: impl IntoIterator<Item = usize>) -> Vec<u8> {
    let mut seen: Vec<usize> = Vec::new();
    labels
        .into_iter()
        .map(|l| match seen.iter().position(|&s| s == l) {
            Some(i) => i as u8,
            None => {
                seen.push(l);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

impl Diagram {
    /// From any block labelling of the `2n` points.
    pub fn from_labels(n: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), 2 * n);
        Self {
            n,
            block: canonical(labels.iter().copied()),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Stack `self` on top of `other`, join through the middle row, and drop
    /// the middle.
    pub fn compose(&self, other: &Diagram) -> Diagram {
        let n = self.n;
        // Nodes: 0..n top, n..2n middle, 2n..3n bottom.
        let mut uf = UnionFind::<usize>::new(3 * n);
        let mut join_blocks = |block: &[u8], offset: usize| {
            let mut first: Vec<Option<usize>> = vec![None; 2 * n];
            for (p, &b) in block.iter().enumerate() {
                let node = offset + p;
                match first[b as usize] {
                    Some(r) => {
                        uf.union(r, node);
                    }
                    None => first[b as usize] = Some(node),
                }
            }
        };
        join_blocks(&self.block, 0);
        join_blocks(&other.block, n);
        let labels = (0..n).chain(2 * n..3 * n).map(|p| uf.find_mut(p));
        Diagram {
            n,
            block: canonical(labels.collect::<Vec<_>>()),
        }
    }

    /// Equivalence relation on the top row as a block labelling.
    pub fn kernel(&self) -> Vec<u8> {
        canonical(self.block[..self.n].iter().map(|&b| b as usize))
    }

    /// Equivalence relation on the bottom row as a block labelling.
    pub fn cokernel(&self) -> Vec<u8> {
        canonical(self.block[self.n..].iter().map(|&b| b as usize))
    }

    /// Kernel classes that reach the bottom row.
    pub fn domain_classes(&self) -> usize {
        self.through_blocks()
    }

    /// Cokernel classes that reach the top row.
    pub fn codomain_classes(&self) -> usize {
        let bottom: Vec<u8> = self.block[self.n..].to_vec();
        let top = &self.block[..self.n];
        let mut seen = Vec::new();
        for b in bottom {
            if top.contains(&b) && !seen.contains(&b) {
                seen.push(b);
            }
        }
        seen.len()
    }

    fn through_blocks(&self) -> usize {
        let top = &self.block[..self.n];
        let bottom = &self.block[self.n..];
        let mut seen = Vec::new();
        for &b in top {
            if bottom.contains(&b) && !seen.contains(&b) {
                seen.push(b);
            }
        }
        seen.len()
    }

    /// `e_σ`: each class `B` of `σ` becomes the block `B ∪ B'`.
    pub fn projection(n: usize, sigma: &[u8]) -> Diagram {
        let labels: Vec<usize> = sigma.iter().chain(sigma).map(|&b| b as usize).collect();
        Diagram::from_labels(n, &labels)
    }

    pub fn identity(n: usize) -> Diagram {
        let sigma: Vec<u8> = (0..n as u8).collect();
        Diagram::projection(n, &sigma)
    }

    /// Whether every block meets each row at most once.
    pub fn is_partial_bijection(&self) -> bool {
        let k = self.kernel();
        let c = self.cokernel();
        let distinct = |v: &[u8]| (0..v.len()).all(|i| !v[..i].contains(&v[i]));
        distinct(&k) && distinct(&c)
    }

    /// All set partitions of the `2n` points as restricted growth strings in
    /// lexicographic order.
    pub fn all(n: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(2 * n);
        fn grow(n: usize, current: &mut Vec<u8>, max: u8, out: &mut Vec<Diagram>) {
            if current.len() == 2 * n {
                out.push(Diagram {
                    n,
                    block: current.clone(),
                });
                return;
            }
            let limit = if current.is_empty() { 0 } else { max + 1 };
            for b in 0..=limit {
                current.push(b);
                grow(n, current, max.max(b), out);
                current.pop();
            }
        }
        grow(n, &mut current, 0, &mut out);
        out
    }

    /// All equivalence relations on `n` points as restricted growth strings.
    pub fn equivalences(n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        fn grow(n: usize, current: &mut Vec<u8>, max: u8, out: &mut Vec<Vec<u8>>) {
            if current.len() == n {
                out.push(current.clone());
                return;
            }
            let limit = if current.is_empty() { 0 } else { max + 1 };
            for b in 0..=limit {
                current.push(b);
                grow(n, current, max.max(b), out);
                current.pop();
            }
        }
        grow(n, &mut Vec::new(), 0, &mut out);
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.block.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut parts = Vec::new();
        for b in 0..blocks {
            let pts: Vec<String> = (0..2 * self.n)
                .filter(|&p| self.block[p] as usize == b)
                .map(|p| {
                    if p < self.n {
                        format!("{}", p + 1)
                    } else {
                        format!("{}'", p - self.n + 1)
                    }
                })
                .collect();
            parts.push(format!("{{{}}}", pts.join(",")));
        }
        f.write_str(&parts.join("|"))
    }
}

/// Join of two equivalence relations given as block labellings.
pub fn join_equivalences(a: &[u8], b: &[u8]) -> Vec<u8> {
    let n = a.len();
    let mut uf = UnionFind::<usize>::new(n);
    for rel in [a, b] {
        for i in 0..n {
            for j in 0..i {
                if rel[i] == rel[j] {
                    uf.union(i, j);
                }
            }
        }
    }
    canonical((0..n).map(|i| uf.find_mut(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        assert_eq!(Diagram::all(1).len(), 2);
        assert_eq!(Diagram::all(2).len(), 15);
        assert_eq!(Diagram::all(3).len(), 203);
        assert_eq!(Diagram::equivalences(3).len(), 5);
    }

    #[test]
    fn identity_is_neutral() {
        let id = Diagram::identity(2);
        for a in Diagram::all(2) {
            assert_eq!(id.compose(&a), a);
            assert_eq!(a.compose(&id), a);
        }
    }

    #[test]
    fn composition_is_associative_for_two_points() {
        let all = Diagram::all(2);
        for a in &all {
            for b in &all {
                let ab = a.compose(b);
                for c in &all {
                    assert_eq!(ab.compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn projections_multiply_by_join() {
        let eqs = Diagram::equivalences(2);
        for s in &eqs {
            for t in &eqs {
                let p = Diagram::projection(2, s).compose(&Diagram::projection(2, t));
                assert_eq!(p, Diagram::projection(2, &join_equivalences(s, t)));
            }
        }
    }

    #[test]
    fn through_classes_agree() {
        for a in Diagram::all(3) {
            assert_eq!(a.domain_classes(), a.codomain_classes());
        }
    }

    #[test]
    fn display() {
        assert_eq!(Diagram::identity(2).to_string(), "{1,1'}|{2,2'}");
    }
}
