//! Seminormal matrix models on bases of standard multitableaux.
//!
//! All three families of modules used here (Specht modules of `S_n`,
//! irreducibles of the wreath product and the universal Specht modules of
//! the degenerate cyclotomic Hecke algebra) share one shape: an adjacent
//! transposition `s_i` sends a basis vector `p_B` to `α p_B + γ p_{B'}`,
//! where `B'` is `B` with `i, i+1` exchanged. Only `α` and the split of
//! `γ γ' = 1 - α²` between the two directions differ.

use std::collections::HashMap;

use crate::combinat::{standard_multitableaux, Multipartition, StandardMultitableau};
use crate::exact::{ExactError, ExactMatrix, Field};

/// Matrices of `s_1..s_{n-1}` on a tableau basis.
#[derive(Clone, Debug)]
pub struct SeminormalModule<T> {
    pub shape: Multipartition,
    pub basis: Vec<StandardMultitableau>,
    pub s: Vec<ExactMatrix<T>>,
    index: HashMap<StandardMultitableau, usize>,
}

/// Which direction of a two-dimensional block carries coefficient 1.
///
/// The forward direction is the one in which entry `i + 1` moves to a
/// later component, or within a component to a cell of larger content.
pub fn is_forward(b: &StandardMultitableau, i: usize) -> bool {
    let (ci, cj) = (b.component(i), b.component(i + 1));
    ci < cj || (ci == cj && b.content(i + 1) > b.content(i))
}

impl<T: Field> SeminormalModule<T> {
    /// Builds the module from the diagonal coefficient `alpha(B, i)`.
    ///
    /// When `B'` is standard the move `B -> B'` carries coefficient 1 in the
    /// forward direction and `1 - α²` otherwise, so that `s_i² = 1` holds
    /// whenever `α(B') = -α(B)`.
    pub fn build(
        shape: &Multipartition,
        alpha: impl Fn(&StandardMultitableau, usize) -> T,
    ) -> Self {
        let basis = standard_multitableaux(shape);
        let index: HashMap<StandardMultitableau, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, b)| (b.clone(), k))
            .collect();
        let dim = basis.len();
        let n = shape.size() as usize;
        let s = (0..n.saturating_sub(1))
            .map(|i| {
                let mut m = ExactMatrix::zeros(dim, dim);
                for (col, b) in basis.iter().enumerate() {
                    let a = alpha(b, i);
                    if let Some(other) = b.swapped(i) {
                        let row = index[&other];
                        let g = if is_forward(b, i) {
                            T::one()
                        } else {
                            T::one().minus(&a.times(&a))
                        };
                        m.set(row, col, g);
                    }
                    m.set(col, col, a);
                }
                m
            })
            .collect();
        SeminormalModule {
            shape: shape.clone(),
            basis,
            s,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.shape.size() as usize
    }

    pub fn index_of(&self, b: &StandardMultitableau) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Diagonal operator with entry `f(B)` on `p_B`.
    pub fn diagonal(&self, f: impl Fn(&StandardMultitableau) -> T) -> ExactMatrix<T> {
        ExactMatrix::diagonal(self.basis.iter().map(f).collect())
    }

    /// Checks `s_i² = 1`, the braid relations and distant commutation;
    /// returns the first failing relation.
    pub fn check_coxeter(&self) -> Result<(), String> {
        let id = ExactMatrix::identity(self.dim());
        let err = |e: ExactError| e.to_string();
        for (i, si) in self.s.iter().enumerate() {
            if si.mul(si).map_err(err)? != id {
                return Err(format!("s{}^2 != 1 on {}", i + 1, self.shape));
            }
            if let Some(sj) = self.s.get(i + 1) {
                let l = si.mul(sj).map_err(err)?.mul(si).map_err(err)?;
                let r = sj.mul(si).map_err(err)?.mul(sj).map_err(err)?;
                if l != r {
                    return Err(format!(
                        "braid relation fails for s{} s{} on {}",
                        i + 1,
                        i + 2,
                        self.shape
                    ));
                }
            }
            for (j, sj) in self.s.iter().enumerate().skip(i + 2) {
                if !si.commutator(sj).map_err(err)?.is_zero() {
                    return Err(format!(
                        "s{} and s{} do not commute on {}",
                        i + 1,
                        j + 1,
                        self.shape
                    ));
                }
            }
        }
        Ok(())
    }

    /// Matrix of `s_{w[0]} s_{w[1]} ...` (zero-based indices).
    pub fn word(&self, w: &[usize]) -> ExactMatrix<T> {
        let mut m = ExactMatrix::identity(self.dim());
        for &i in w {
            m = m.mul(&self.s[i]).expect("square");
        }
        m
    }
}

/// Word `w` in adjacent transpositions with `p = s_{w[0]} ∘ s_{w[1]} ∘ ...`,
/// where `images[k]` is the zero-based image of `k` under `p`.
pub fn reduced_word(images: &[usize]) -> Vec<usize> {
    // bubble sort: record swaps that sort images back to the identity
    let mut p = images.to_vec();
    let mut w = Vec::new();
    let n = p.len();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if p[i] > p[i + 1] {
                // p ∘ s_i
                p.swap(i, i + 1);
                w.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    // p ∘ s_{w1} ∘ ... ∘ s_{wk} = id, so p = s_{wk} ∘ ... ∘ s_{w1}
    w.reverse();
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        b.iter().map(|&x| a[x]).collect()
    }

    #[test]
    fn reduced_word_multiplies_back() {
        let perms: Vec<Vec<usize>> =
            vec![vec![0, 1, 2], vec![2, 0, 1], vec![3, 1, 0, 2], vec![1, 0]];
        for p in perms {
            let w = reduced_word(&p);
            let n = p.len();
            let mut acc: Vec<usize> = (0..n).collect();
            for &i in &w {
                let mut s: Vec<usize> = (0..n).collect();
                s.swap(i, i + 1);
                acc = compose(&acc, &s);
            }
            assert_eq!(acc, p);
        }
    }
}
