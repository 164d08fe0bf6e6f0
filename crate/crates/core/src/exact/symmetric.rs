use super::{ExactError, Ring};

/// All elementary symmetric functions `e_0..e_m` of `values`.
pub fn elem_sym_all<T: Ring>(values: &[T]) -> Vec<T> {
    let mut e = vec![T::one()];
    for v in values {
        e.push(T::zero());
        for j in (1..e.len()).rev() {
            let t = e[j - 1].times(v);
            e[j] = e[j].plus(&t);
        }
    }
    e
}

/// `e_k(values)`, with `e_0 = 1`.
pub fn elem_sym_eval<T: Ring>(k: usize, values: &[T]) -> Result<T, ExactError> {
    if k > values.len() {
        return Err(ExactError::Degree {
            k,
            len: values.len(),
        });
    }
    // only the first k+1 entries are needed
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::one();
    for (n, v) in values.iter().enumerate() {
        for j in (1..=k.min(n + 1)).rev() {
            let t = e[j - 1].times(v);
            e[j] = e[j].plus(&t);
        }
    }
    Ok(e.swap_remove(k))
}

/// `p_k(values) = sum v^k`.
pub fn power_sum<T: Ring>(k: u32, values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.plus(&v.pow(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(elem_sym_eval(0, &ints(&[5, 7])).unwrap(), int(1));
        assert_eq!(elem_sym_eval(2, &ints(&[0, 1, -1])).unwrap(), int(-1));
        assert_eq!(elem_sym_eval(3, &ints(&[1, 1, 1])).unwrap(), int(1));
        assert_eq!(
            elem_sym_eval(3, &ints(&[1, 2])),
            Err(ExactError::Degree { k: 3, len: 2 })
        );
        assert_eq!(elem_sym_all(&ints(&[1, 2, 3])), ints(&[1, 6, 11, 6]));
    }

    proptest! {
        #[test]
        fn newton_identities(vals in proptest::collection::vec(-9i64..=9, 0..=8)) {
            let v = ints(&vals);
            let e = elem_sym_all(&v);
            for k in 1..=v.len() {
                // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
                let mut rhs = int(0);
                for i in 1..=k {
                    let t = e[k - i].times(&power_sum(i as u32, &v));
                    rhs = if i % 2 == 1 { rhs.plus(&t) } else { rhs.minus(&t) };
                }
                prop_assert_eq!(int(k as i64).times(&e[k]), rhs);
                prop_assert_eq!(elem_sym_eval(k, &v).unwrap(), e[k].clone());
            }
        }
    }
}
