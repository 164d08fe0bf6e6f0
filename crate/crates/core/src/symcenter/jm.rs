use std::collections::HashMap;

use super::{Perm, PermElement, SymError};
use crate::combinat::Partition;

/// `JM_i · x` for the one-based index `i`, as a sum of relabellings.
pub fn jm_left_mul(i: usize, x: &PermElement) -> PermElement {
    let n = x.n();
    let mut acc = PermElement::zero(n);
    for j in 0..i.saturating_sub(1) {
        acc = acc.add(&x.left_mul_perm(&Perm::transposition(n, j, i - 1)));
    }
    acc
}

/// `JM_i = sum_{j<i} (j i)`, one-based `i`.
pub fn jm_element(i: usize, n: usize) -> Result<PermElement, SymError> {
    if i == 0 || i > n {
        return Err(SymError::IndexOutOfRange { index: i, n });
    }
    Ok(jm_left_mul(i, &PermElement::identity(n)))
}

/// `e_0(JM), ..., e_n(JM)` by the recursion `e_k ← e_k + JM_i e_{k-1}`.
pub fn all_symmetric_jm(n: usize) -> Vec<PermElement> {
    let mut e = vec![PermElement::identity(n)];
    e.extend((1..=n).map(|_| PermElement::zero(n)));
    for i in 2..=n {
        for k in (1..i).rev() {
            let t = jm_left_mul(i, &e[k - 1]);
            e[k] = e[k].add(&t);
        }
    }
    e
}

/// `e_k(JM_1, ..., JM_n)`.
pub fn symmetric_jm(k: usize, n: usize) -> Result<PermElement, SymError> {
    if k > n {
        return Err(SymError::IndexOutOfRange { index: k, n });
    }
    Ok(all_symmetric_jm(n).swap_remove(k))
}

/// Monomial symmetric function `m_ν(JM_1, ..., JM_n)`.
///
/// Sums `∏ JM_i^{a_i}` over the distinct rearrangements `a` of `ν` padded
/// with zeros, recursively in `i` with the unused part of `ν` as state.
pub fn monomial_jm(nu: &Partition, n: usize) -> PermElement {
    if nu.len() > n {
        return PermElement::zero(n);
    }
    let values: Vec<u32> = {
        let mut v = nu.parts().to_vec();
        v.dedup();
        v
    };
    let counts: Vec<u32> = values
        .iter()
        .map(|x| nu.parts().iter().filter(|&p| p == x).count() as u32)
        .collect();
    let mut memo: HashMap<(usize, Vec<u32>), PermElement> = HashMap::new();
    rec(n, &counts, &values, n, &mut memo)
}

fn rec(
    i: usize,
    remaining: &[u32],
    values: &[u32],
    n: usize,
    memo: &mut HashMap<(usize, Vec<u32>), PermElement>,
) -> PermElement {
    if i == 0 {
        return if remaining.iter().all(|&c| c == 0) {
            PermElement::identity(n)
        } else {
            PermElement::zero(n)
        };
    }
    let key = (i, remaining.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let left: u32 = remaining.iter().sum();
    let mut acc = if (left as usize) < i {
        rec(i - 1, remaining, values, n, memo)
    } else {
        PermElement::zero(n)
    };
    for (idx, &v) in values.iter().enumerate() {
        if remaining[idx] == 0 {
            continue;
        }
        let mut rest = remaining.to_vec();
        rest[idx] -= 1;
        let mut t = rec(i - 1, &rest, values, n, memo);
        for _ in 0..v {
            t = jm_left_mul(i, &t);
        }
        acc = acc.add(&t);
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn jm_examples() {
        assert!(jm_element(1, 4).unwrap().is_zero());
        assert_eq!(
            jm_element(2, 3).unwrap(),
            PermElement::basis(&Perm::transposition(3, 0, 1))
        );
        let j3 = PermElement::basis(&Perm::transposition(3, 0, 2))
            .add(&PermElement::basis(&Perm::transposition(3, 1, 2)));
        assert_eq!(jm_element(3, 3).unwrap(), j3);
        assert!(jm_element(4, 3).is_err());
        assert!(jm_element(0, 3).is_err());
    }

    #[test]
    fn symmetric_jm_examples() {
        let mut transpositions = PermElement::zero(3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            transpositions = transpositions.add(&PermElement::basis(&Perm::transposition(3, a, b)));
        }
        assert_eq!(symmetric_jm(1, 3).unwrap(), transpositions);
        assert!(symmetric_jm(2, 2).unwrap().is_zero());
        // trivial character sends every permutation to 1
        let e2 = symmetric_jm(2, 3).unwrap();
        let total = e2.coeffs().iter().fold(int(0), |a, c| a + c);
        assert_eq!(total, int(2));
    }

    #[test]
    fn jm_elements_commute_and_symmetric_functions_are_central() {
        for n in 1..=5 {
            let jms: Vec<PermElement> = (1..=n).map(|i| jm_element(i, n).unwrap()).collect();
            for a in &jms {
                for b in &jms {
                    assert_eq!(a.mul(b), b.mul(a));
                }
            }
            for e in all_symmetric_jm(n) {
                assert!(e.is_central());
            }
            if n >= 3 {
                assert!(!jms[1].is_central());
            }
        }
    }

    #[test]
    fn monomial_matches_direct_expansion() {
        let n = 4;
        let jms: Vec<PermElement> = (1..=n).map(|i| jm_element(i, n).unwrap()).collect();
        // m_{(2,1)} = sum_{i != j} JM_i^2 JM_j
        let mut direct = PermElement::zero(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    direct = direct.add(&jms[i].mul(&jms[i]).mul(&jms[j]));
                }
            }
        }
        assert_eq!(monomial_jm(&Partition::new(vec![2, 1]).unwrap(), n), direct);
        // m_{(1^k)} = e_k
        for k in 0..=n {
            assert_eq!(
                monomial_jm(&Partition::column(k as u32), n),
                symmetric_jm(k, n).unwrap()
            );
        }
    }
}
