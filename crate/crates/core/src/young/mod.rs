//! Partitions, compositions and the characters of symmetric groups.

mod characters;
mod symmetric;

pub use characters::{character_table, mn_character};
pub use symmetric::{central_idempotent, Permutation, SymmetricGroup};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YoungError {
    #[error("parts {0:?} are not positive and weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("parts {0:?} are not all positive")]
    NotAComposition(Vec<usize>),
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("character inner product gives {character} for {lambda} in the Young module of {mu}, Kostka number is {kostka}")]
    KostkaMismatch {
        lambda: Partition,
        mu: Composition,
        character: String,
        kostka: u64,
    },
}

/// A weakly decreasing sequence of positive integers; may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|c| self.parts.iter().filter(|&&p| p > c).count())
                .collect(),
        }
    }

    /// `∏ m_i! · i^{m_i}`, the order of the centralizer of a permutation
    /// with this cycle type.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            z *= factorial(m) * (p as u64).pow(m as u32);
            i += m;
        }
        z
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = YoungError;

    fn try_from(parts: Vec<usize>) -> Result<Self, YoungError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("∅");
    }
    let s: Vec<String> = parts.iter().map(usize::to_string).collect();
    write!(f, "({})", s.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        if parts.contains(&0) {
            return Err(YoungError::NotAComposition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = YoungError;

    fn try_from(parts: Vec<usize>) -> Result<Self, YoungError> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.parts
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Partitions of `k` in decreasing lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            current.push(p);
            go(rest - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `k` in decreasing lexicographic order.
pub fn compositions_of(k: usize) -> Vec<Composition> {
    fn go(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=rest).rev() {
            current.push(p);
            go(rest - p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut out);
    out
}

pub fn compositions_of_length(k: usize, l: usize) -> Vec<Composition> {
    compositions_of(k)
        .into_iter()
        .filter(|c| c.len() == l)
        .collect()
}

/// `f^λ` by the hook length formula.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj.parts[j] - i - 1) as u128;
        }
    }
    let k = lambda.weight();
    let fact: u128 = (1..=k as u128).product();
    (fact / hooks) as u64
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Composition) -> Result<u64, YoungError> {
    if lambda.weight() != mu.weight() {
        return Err(YoungError::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(kostka_by_strips(&lambda.parts, &mu.parts))
}

/// The cells holding `i` form a horizontal strip of size `μ_i`, so tableaux
/// are chains `∅ = ν⁰ ⊂ ν¹ ⊂ … = λ` grown one strip at a time.
fn kostka_by_strips(lambda: &[usize], mu: &[usize]) -> u64 {
    fn go(shape: &[usize], lambda: &[usize], mu: &[usize]) -> u64 {
        let Some((&size, rest)) = mu.split_first() else {
            return u64::from(shape == lambda);
        };
        let mut next = shape.to_vec();
        let mut total = 0;
        add_strip(shape, &mut next, lambda, 0, size, rest, &mut total);
        total
    }
    fn add_strip(
        old: &[usize],
        next: &mut Vec<usize>,
        lambda: &[usize],
        row: usize,
        left: usize,
        rest: &[usize],
        total: &mut u64,
    ) {
        if left == 0 {
            *total += go(next, lambda, rest);
            return;
        }
        if row == lambda.len() {
            return;
        }
        let cap = if row == 0 { lambda[0] } else { old[row - 1] };
        let max_add = cap.min(lambda[row]).saturating_sub(old[row]).min(left);
        for add in 0..=max_add {
            next[row] = old[row] + add;
            add_strip(old, next, lambda, row + 1, left - add, rest, total);
        }
        next[row] = old[row];
    }
    go(&vec![0; lambda.len()], lambda, mu)
}

/// Multiplicity of each Specht module in the permutation module on cosets
/// of the Young subgroup `S_μ`, as a character inner product. Each value is
/// cross-checked against [`kostka`]; only nonzero entries are returned, in
/// the order of [`partitions_of`].
pub fn young_module_multiplicities(mu: &Composition) -> Result<Vec<(Partition, u64)>, YoungError> {
    let k = mu.weight();
    let classes = partitions_of(k);
    let induced: Vec<u64> = classes
        .iter()
        .map(|rho| fixed_ordered_set_partitions(rho.parts(), mu.parts()))
        .collect();
    let mut out = Vec::new();
    for lambda in partitions_of(k) {
        let mut ip = Rational::from_integer(0.into());
        for (rho, &ind) in classes.iter().zip(&induced) {
            let chi = mn_character(&lambda, rho)?;
            ip += rat(ind as i64 * chi) / rat(rho.centralizer_order() as i64);
        }
        let kappa = kostka(&lambda, mu)?;
        if ip != rat(kappa as i64) {
            return Err(YoungError::KostkaMismatch {
                lambda,
                mu: mu.clone(),
                character: crate::linalg::format_rational(&ip),
                kostka: kappa,
            });
        }
        if kappa > 0 {
            out.push((lambda, kappa));
        }
    }
    Ok(out)
}

/// Ordered set partitions with block sizes `mu` fixed by a permutation of
/// cycle type `cycles`: every cycle must sit inside one block.
fn fixed_ordered_set_partitions(cycles: &[usize], mu: &[usize]) -> u64 {
    fn go(cycles: &[usize], room: &mut Vec<usize>) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for b in 0..room.len() {
            if room[b] >= c {
                room[b] -= c;
                total += go(rest, room);
                room[b] += c;
            }
        }
        total
    }
    go(cycles, &mut mu.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: all fillings of the diagram with the given content,
    /// filtered by the semistandard conditions.
    fn kostka_oracle(lambda: &Partition, mu: &Composition) -> u64 {
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
            .collect();
        let mut values: Vec<usize> = mu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(v, &m)| std::iter::repeat_n(v, m))
            .collect();
        let mut count = 0;
        // Distinct permutations of the multiset via next_permutation.
        values.sort_unstable();
        loop {
            let at = |i: usize, j: usize| cells.iter().position(|&x| x == (i, j)).map(|n| values[n]);
            let ok = cells.iter().all(|&(i, j)| {
                let v = at(i, j).unwrap();
                at(i, j + 1).is_none_or(|w| v <= w) && at(i + 1, j).is_none_or(|w| v < w)
            });
            count += u64::from(ok);
            let Some(i) = (1..values.len()).rev().find(|&i| values[i - 1] < values[i]) else {
                break;
            };
            let j = (i..values.len()).rev().find(|&j| values[j] > values[i - 1]).unwrap();
            values.swap(i - 1, j);
            values[i..].reverse();
        }
        count
    }

    #[test]
    fn enumerations() {
        let parts: Vec<String> = partitions_of(3).iter().map(ToString::to_string).collect();
        assert_eq!(parts, ["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(compositions_of_length(2, 2), vec![c(&[1, 1])]);
        assert_eq!(compositions_of(4).len(), 8);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_dimension(&p(&[4])), 1);
        assert_eq!(hook_dimension(&p(&[2, 1])), 2);
        assert_eq!(hook_dimension(&p(&[2, 2])), 2);
        assert_eq!(hook_dimension(&Partition::empty()), 1);
        for k in 0..=6 {
            let sum: u64 = partitions_of(k).iter().map(|l| hook_dimension(l).pow(2)).sum();
            assert_eq!(sum, factorial(k));
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &c(&[2, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &c(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &c(&[2])).unwrap(), 0);
        assert_eq!(
            kostka(&p(&[2]), &c(&[1])).unwrap_err(),
            YoungError::WeightMismatch(2, 1)
        );
    }

    #[test]
    fn kostka_matches_brute_force() {
        for k in 0..=5 {
            for lambda in partitions_of(k) {
                for mu in compositions_of(k) {
                    assert_eq!(
                        kostka(&lambda, &mu).unwrap(),
                        kostka_oracle(&lambda, &mu),
                        "{lambda} {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn kostka_ignores_the_order_of_the_content() {
        for k in 0..=5 {
            for lambda in partitions_of(k) {
                for mu in compositions_of(k) {
                    assert_eq!(
                        kostka(&lambda, &mu).unwrap(),
                        kostka(&lambda, &mu.sorted().into()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn young_modules() {
        assert_eq!(
            young_module_multiplicities(&c(&[3])).unwrap(),
            vec![(p(&[3]), 1)]
        );
        assert_eq!(
            young_module_multiplicities(&c(&[1, 1, 1])).unwrap(),
            vec![(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)]
        );
        assert_eq!(
            young_module_multiplicities(&c(&[2, 1])).unwrap(),
            vec![(p(&[3]), 1), (p(&[2, 1]), 1)]
        );
        for mu in compositions_of(5) {
            young_module_multiplicities(&mu).unwrap();
        }
    }

    #[test]
    fn validation_and_serde() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3]), p(&[3, 1]));
        let json = serde_json::to_string(&p(&[2, 1])).unwrap();
        assert_eq!(json, "[2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(p(&[2, 1, 1]).centralizer_order(), 4);
    }
}
