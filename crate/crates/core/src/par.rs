//! Parallel searches that always report the lexicographically first hit, so
//! results do not depend on the number of worker threads.

use rayon::prelude::*;

/// Smallest `a < n` satisfying `pred`.
pub fn first_index<P>(n: usize, pred: P) -> Option<usize>
where
    P: Fn(usize) -> bool + Sync,
{
    (0..n).into_par_iter().find_first(|&a| pred(a))
}

/// Lexicographically smallest `(a, b)` in `0..n × 0..m` satisfying `pred`.
pub fn first_pair<P>(n: usize, m: usize, pred: P) -> Option<(usize, usize)>
where
    P: Fn(usize, usize) -> bool + Sync,
{
    (0..n)
        .into_par_iter()
        .find_map_first(|a| (0..m).find(|&b| pred(a, b)).map(|b| (a, b)))
}

/// Lexicographically smallest triple in `0..n`³ satisfying `pred`.
pub fn first_triple<P>(n: usize, pred: P) -> Option<(usize, usize, usize)>
where
    P: Fn(usize, usize, usize) -> bool + Sync,
{
    (0..n).into_par_iter().find_map_first(|a| {
        (0..n).find_map(|b| (0..n).find(|&c| pred(a, b, c)).map(|c| (a, b, c)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_the_first_hit() {
        assert_eq!(first_index(100, |a| a % 7 == 3), Some(3));
        assert_eq!(first_pair(10, 10, |a, b| a + b == 9 && a > 2), Some((3, 6)));
        assert_eq!(first_triple(5, |a, b, c| a * b * c == 8), Some((1, 2, 4)));
        assert_eq!(first_pair(3, 3, |_, _| false), None);
    }
}
