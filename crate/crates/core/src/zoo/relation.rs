use std::fmt;

/// A binary relation on `{0, .., n-1}` (n ≤ 4), stored as a bit matrix with
/// the pair `(x, y)` at bit `x·n + y`. A pair `(x, y)` is read as `x ↦ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: u8,
    bits: u16,
}

impl Relation {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Self {
        assert!(n <= 4);
        let mut bits = 0u16;
        for &(x, y) in pairs {
            bits |= 1 << (x * n + y);
        }
        Self { n: n as u8, bits }
    }

    pub fn from_bits(n: usize, bits: u16) -> Self {
        Self { n: n as u8, bits }
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits >> (x * self.degree() + y) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains(x, y))
            .collect()
    }

    /// `self ∘ other`: `x ↦ z` when `other` relates `x ↦ y` and `self`
    /// relates `y ↦ z`.
    pub fn after(&self, other: &Relation) -> Relation {
        let n = self.degree();
        let mut out = Relation::from_bits(n, 0);
        for (x, y) in other.pairs() {
            for z in 0..n {
                if self.contains(y, z) {
                    out.bits |= 1 << (x * n + z);
                }
            }
        }
        out
    }

    pub fn domain(&self) -> Vec<usize> {
        let n = self.degree();
        (0..n).filter(|&x| (0..n).any(|y| self.contains(x, y))).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let n = self.degree();
        (0..n).filter(|&y| (0..n).any(|x| self.contains(x, y))).collect()
    }

    pub fn partial_identity(n: usize, set: &[usize]) -> Self {
        Self::new(n, &set.iter().map(|&x| (x, x)).collect::<Vec<_>>())
    }

    /// All relations of degree `n`, ordered by bit pattern.
    pub fn all(n: usize) -> Vec<Relation> {
        (0..1u32 << (n * n))
            .map(|b| Relation::from_bits(n, b as u16))
            .collect()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(x, y)| format!("({},{})", x + 1, y + 1))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
