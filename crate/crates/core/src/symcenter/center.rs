use rayon::prelude::*;

use super::{all_perms, all_symmetric_jm, factorial, Perm, PermElement, SymError};
use crate::combinat::{partitions, Partition};
use crate::exact::{int, ExactMatrix, Rational, Ring};

/// A central element together with its filtration degree.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredCenterElement {
    pub element: PermElement,
    /// Even; every permutation in the support has `2(n - #cycles) <= degree`.
    pub degree: u32,
}

/// `2(n - ℓ(μ))`.
pub fn class_degree(n: usize, mu: &Partition) -> u32 {
    2 * (n - mu.len()) as u32
}

/// Class sums of `S_n` in the order of [`partitions`], with degrees.
pub fn center_basis(n: usize) -> Vec<FilteredCenterElement> {
    let classes = partitions(n as u32);
    let mut sums: Vec<PermElement> = classes.iter().map(|_| PermElement::zero(n)).collect();
    for p in all_perms(n) {
        let idx = classes
            .iter()
            .position(|c| *c == p.cycle_type())
            .expect("cycle type");
        sums[idx] = sums[idx].add(&PermElement::basis(&p));
    }
    sums.into_iter()
        .zip(&classes)
        .map(|(element, mu)| FilteredCenterElement {
            element,
            degree: class_degree(n, mu),
        })
        .collect()
}

/// The center of `Q S_n` in the class-sum basis with its structure constants.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub sizes: Vec<u64>,
    class_of_rank: Vec<u16>,
    /// `consts[ρ][μ][ν] = #{g ∈ C_μ : g⁻¹ · rep_ρ ∈ C_ν}`, the coefficient of
    /// `C_ρ` in `C_μ C_ν`.
    consts: Vec<Vec<Vec<u64>>>,
}

impl ClassAlgebra {
    pub fn new(n: usize) -> Self {
        let classes = partitions(n as u32);
        let perms = all_perms(n);
        let class_of_rank: Vec<u16> = perms
            .par_iter()
            .map(|p| {
                classes
                    .iter()
                    .position(|c| *c == p.cycle_type())
                    .expect("cycle type") as u16
            })
            .collect();
        let mut sizes = vec![0u64; classes.len()];
        for &c in &class_of_rank {
            sizes[c as usize] += 1;
        }
        let k = classes.len();
        let consts = classes
            .par_iter()
            .map(|rho| {
                let rep = Perm::of_cycle_type(n, rho);
                let mut t = vec![vec![0u64; k]; k];
                for (r, g) in perms.iter().enumerate() {
                    let mu = class_of_rank[r] as usize;
                    let nu = class_of_rank[g.inverse().compose(&rep).rank()] as usize;
                    t[mu][nu] += 1;
                }
                t
            })
            .collect();
        ClassAlgebra {
            n,
            classes,
            sizes,
            class_of_rank,
            consts,
        }
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, idx: usize) -> u32 {
        class_degree(self.n, &self.classes[idx])
    }

    pub fn class_index(&self, p: &Perm) -> usize {
        self.class_of_rank[p.rank()] as usize
    }

    /// Coordinates of a central element in the class-sum basis.
    pub fn coords(&self, z: &PermElement) -> Result<Vec<Rational>, SymError> {
        let mut out: Vec<Option<Rational>> = vec![None; self.dim()];
        for (r, c) in z.coeffs().iter().enumerate() {
            let k = self.class_of_rank[r] as usize;
            match &out[k] {
                None => out[k] = Some(c.clone()),
                Some(v) if v == c => {}
                Some(_) => return Err(SymError::NotCentral),
            }
        }
        Ok(out
            .into_iter()
            .map(|v| v.unwrap_or_else(|| int(0)))
            .collect())
    }

    pub fn class_sum(&self, idx: usize) -> PermElement {
        let mut z = PermElement::zero(self.n);
        for r in 0..factorial(self.n) {
            if self.class_of_rank[r] as usize == idx {
                z = z.add(&PermElement::basis(&Perm::unrank(self.n, r)));
            }
        }
        z
    }

    pub fn structure_constant(&self, rho: usize, mu: usize, nu: usize) -> u64 {
        self.consts[rho][mu][nu]
    }

    /// Product in class-sum coordinates.
    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        (0..self.dim())
            .map(|rho| {
                let mut acc = int(0);
                for (mu, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (nu, y) in b.iter().enumerate() {
                        let c = self.consts[rho][mu][nu];
                        if c != 0 && !y.is_zero() {
                            acc = acc.plus(&x.times(y).times(&int(c as i64)));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    pub fn unit(&self) -> Vec<Rational> {
        (0..self.dim())
            .map(|i| {
                if self.classes[i].len() == self.n {
                    int(1)
                } else {
                    int(0)
                }
            })
            .collect()
    }

    /// Largest class degree in the support.
    pub fn filtration_degree(&self, a: &[Rational]) -> u32 {
        a.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| self.degree(i))
            .max()
            .unwrap_or(0)
    }

    /// `F_{2a} F_{2b} ⊆ F_{2(a+b)}` on the class-sum basis.
    pub fn filtration_is_multiplicative(&self) -> bool {
        (0..self.dim()).all(|rho| {
            (0..self.dim()).all(|mu| {
                (0..self.dim()).all(|nu| {
                    self.consts[rho][mu][nu] == 0
                        || self.degree(rho) <= self.degree(mu) + self.degree(nu)
                })
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// `dim F_{2m} / F_{2m-2}` for `m = 0..n-1`.
///
/// Counts conjugacy classes directly: permutations are joined under
/// conjugation by adjacent transpositions and the orbits are bucketed by
/// `n - #cycles`.
pub fn rees_graded_dims(n: usize) -> Vec<usize> {
    if n == 0 {
        return vec![1];
    }
    let total = factorial(n);
    let mut uf = UnionFind::new(total);
    let gens: Vec<Perm> = (0..n - 1)
        .map(|i| Perm::transposition(n, i, i + 1))
        .collect();
    let mut degree = vec![0usize; total];
    for r in 0..total {
        let p = Perm::unrank(n, r);
        degree[r] = n - p.num_cycles();
        for s in &gens {
            let q = s.compose(&p).compose(s);
            uf.union(r, q.rank());
        }
    }
    let mut dims = vec![0usize; n];
    for r in 0..total {
        if uf.find(r) == r {
            dims[degree[r]] += 1;
        }
    }
    dims
}

/// Checks `F_{2m} = span{e_λ(JM) : |λ| <= m}` for every `m` by exact rank.
pub fn filtration_generation_check(n: usize) -> Result<bool, SymError> {
    if n > 7 {
        return Err(SymError::TooLarge { n, max: 7 });
    }
    let alg = ClassAlgebra::new(n);
    let e: Vec<Vec<Rational>> = all_symmetric_jm(n)
        .iter()
        .map(|z| alg.coords(z))
        .collect::<Result<_, _>>()?;
    for m in 0..n {
        let mut span: Vec<Vec<Rational>> = Vec::new();
        for size in 0..=m as u32 {
            for lam in partitions(size) {
                if lam.part(0) as usize > n {
                    continue;
                }
                let v = lam
                    .parts()
                    .iter()
                    .fold(alg.unit(), |acc, &k| alg.mul(&acc, &e[k as usize]));
                span.push(v);
            }
        }
        if span.iter().any(|v| alg.filtration_degree(v) > 2 * m as u32) {
            return Ok(false);
        }
        let expected = (0..alg.dim())
            .filter(|&i| alg.degree(i) <= 2 * m as u32)
            .count();
        let rank = ExactMatrix::from_rows(span)
            .map_err(|e| SymError::Relation(e.to_string()))?
            .rank();
        if rank != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_examples() {
        let degs = |n: usize| center_basis(n).iter().map(|c| c.degree).collect::<Vec<_>>();
        assert_eq!(degs(1), vec![0]);
        let mut d3 = degs(3);
        d3.sort();
        assert_eq!(d3, vec![0, 2, 4]);
        let mut d4 = degs(4);
        d4.sort();
        assert_eq!(d4, vec![0, 2, 4, 4, 6]);
        for n in 1..=5 {
            let basis = center_basis(n);
            assert!(basis.iter().all(|c| c.element.is_central()));
            let rows: Vec<Vec<Rational>> =
                basis.iter().map(|c| c.element.coeffs().to_vec()).collect();
            assert_eq!(
                ExactMatrix::from_rows(rows).unwrap().rank(),
                partitions(n as u32).len()
            );
        }
    }

    #[test]
    fn class_products_match_convolution() {
        for n in 1..=4 {
            let alg = ClassAlgebra::new(n);
            for mu in 0..alg.dim() {
                for nu in 0..alg.dim() {
                    let prod = alg.class_sum(mu).mul(&alg.class_sum(nu));
                    let mut a = vec![int(0); alg.dim()];
                    a[mu] = int(1);
                    let mut b = vec![int(0); alg.dim()];
                    b[nu] = int(1);
                    assert_eq!(alg.coords(&prod).unwrap(), alg.mul(&a, &b));
                }
            }
        }
    }

    #[test]
    fn rees_dims_examples_and_oracle() {
        assert_eq!(rees_graded_dims(1), vec![1]);
        assert_eq!(rees_graded_dims(3), vec![1, 1, 1]);
        assert_eq!(rees_graded_dims(4), vec![1, 1, 2, 1]);
        for n in 1..=7 {
            let mut oracle = vec![0usize; n];
            for lam in partitions(n as u32) {
                oracle[n - lam.len()] += 1;
            }
            assert_eq!(rees_graded_dims(n), oracle);
        }
    }

    #[test]
    fn generation_and_multiplicativity() {
        for n in 1..=5 {
            assert!(filtration_generation_check(n).unwrap());
            assert!(ClassAlgebra::new(n).filtration_is_multiplicative());
        }
        assert!(filtration_generation_check(8).is_err());
    }

    #[test]
    fn non_central_coordinates_rejected() {
        let alg = ClassAlgebra::new(3);
        let t = PermElement::basis(&Perm::transposition(3, 0, 1));
        assert_eq!(alg.coords(&t), Err(SymError::NotCentral));
    }
}
