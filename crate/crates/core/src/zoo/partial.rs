use std::fmt;

/// Marker for an undefined value; sorts after every point.
const UNDEF: u8 = u8::MAX;

/// A partial function on `{0, .., n-1}`, printed 1-based.
///
/// The derived order is lexicographic on the value tuple with "undefined"
/// largest, so the partial identity on `{1..k}` is the first idempotent of
/// rank `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    values: Vec<u8>,
}

impl PartialMap {
    pub fn new(values: &[Option<usize>]) -> Self {
        Self {
            values: values
                .iter()
                .map(|v| v.map_or(UNDEF, |x| x as u8))
                .collect(),
        }
    }

    pub fn partial_identity(n: usize, domain: &[usize]) -> Self {
        let mut values = vec![UNDEF; n];
        for &x in domain {
            values[x] = x as u8;
        }
        Self { values }
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        match self.values[x] {
            UNDEF => None,
            v => Some(v as usize),
        }
    }

    /// `self ∘ g`: apply `g`, then `self`.
    pub fn after(&self, g: &PartialMap) -> PartialMap {
        PartialMap {
            values: g
                .values
                .iter()
                .map(|&v| if v == UNDEF { UNDEF } else { self.values[v as usize] })
                .collect(),
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.values[x] != UNDEF).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self
            .values
            .iter()
            .filter(|&&v| v != UNDEF)
            .map(|&v| v as usize)
            .collect();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(|&v| v != UNDEF)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain().len()
    }

    /// All partial maps of degree `n` in increasing order.
    pub fn all(n: usize) -> Vec<PartialMap> {
        let radix = n + 1;
        let count = radix.pow(n as u32);
        (0..count)
            .map(|mut code| {
                let mut values = vec![UNDEF; n];
                for slot in values.iter_mut().rev() {
                    let d = code % radix;
                    code /= radix;
                    *slot = if d == n { UNDEF } else { d as u8 };
                }
                PartialMap { values }
            })
            .collect()
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (x, &v) in self.values.iter().enumerate() {
            if x > 0 {
                f.write_str(",")?;
            }
            match v {
                UNDEF => write!(f, "{}→⊥", x + 1)?,
                v => write!(f, "{}→{}", x + 1, v + 1)?,
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = PartialMap::all(2);
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].to_string(), "[1→1,2→1]");
        assert_eq!(all[8].to_string(), "[1→⊥,2→⊥]");
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let f = PartialMap::new(&[Some(1), None]);
        let g = PartialMap::new(&[Some(0), Some(0)]);
        // f∘g sends both points to 2.
        assert_eq!(f.after(&g), PartialMap::new(&[Some(1), Some(1)]));
        // g∘f: 1 ↦ 2 ↦ 1, 2 undefined.
        assert_eq!(g.after(&f), PartialMap::new(&[Some(0), None]));
        // x = [1→2, 2→⊥] squares to the empty map.
        assert_eq!(f.after(&f), PartialMap::partial_identity(2, &[]));
    }

    #[test]
    fn domain_image_rank() {
        let f = PartialMap::new(&[Some(2), None, Some(2)]);
        assert_eq!(f.domain(), vec![0, 2]);
        assert_eq!(f.image(), vec![2]);
        assert_eq!(f.rank(), 1);
        assert!(!f.is_injective());
        assert!(!f.is_total());
    }
}
