use std::cell::RefCell;
use std::collections::HashMap;

use super::{partitions_of, Partition, YoungError};

/// (shape, cycle type) pairs already evaluated.
type MemoKey = (Vec<usize>, Vec<usize>);

thread_local! {
    static MEMO: RefCell<HashMap<MemoKey, i64>> = RefCell::new(HashMap::new());
}

/// `χ_λ(ρ)` for a permutation of cycle type `ρ`, by the Murnaghan–Nakayama
/// rule. Results are memoized per thread.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64, YoungError> {
    if lambda.weight() != rho.weight() {
        return Err(YoungError::WeightMismatch(lambda.weight(), rho.weight()));
    }
    Ok(character(lambda.parts(), rho.parts()))
}

fn character(lambda: &[usize], rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    // Beta numbers: removing a rim hook of length r moves one bead from b to
    // b - r, with sign given by the beads jumped over.
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut moved = beta.clone();
        moved[i] = b - r;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let m = moved.len();
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c + j + 1 - m)
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * character(&shape, rest);
    }
    MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// Rows indexed by `λ`, columns by cycle types, both in the order of
/// [`partitions_of`].
pub fn character_table(k: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions_of(k);
    let table = parts
        .iter()
        .map(|l| parts.iter().map(|r| character(l.parts(), r.parts())).collect())
        .collect();
    (parts, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::{factorial, hook_dimension};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn identity_column_is_the_dimension() {
        for k in 0..=7 {
            let id = p(&vec![1; k]);
            for l in partitions_of(k) {
                assert_eq!(mn_character(&l, &id).unwrap(), hook_dimension(&l) as i64);
            }
        }
    }

    #[test]
    fn orthogonality() {
        for k in 0..=5 {
            let (parts, table) = character_table(k);
            let z: Vec<i64> = parts.iter().map(|r| r.centralizer_order() as i64).collect();
            let n = factorial(k) as i64;
            for a in 0..parts.len() {
                for b in 0..parts.len() {
                    // Σ_ρ χ_a(ρ) χ_b(ρ) |class ρ| = k! δ_ab.
                    let s: i64 = (0..parts.len())
                        .map(|r| table[a][r] * table[b][r] * (n / z[r]))
                        .sum();
                    assert_eq!(s, if a == b { n } else { 0 }, "k={k}");
                }
            }
            // Σ_λ χ_λ(id)² · |class(id)| = k!.
            let id_col = parts.len() - 1;
            let s: i64 = (0..parts.len()).map(|a| table[a][id_col].pow(2)).sum();
            assert_eq!(s, n);
        }
    }
}
