//! Torus-fixed points of the Calogero–Moser space: Wilson's matrices.
//!
//! For a partition `λ` with Frobenius hooks of sizes `n_i`, the pair
//! `(X, Y)` is assembled from shift matrices `D_{n_i}` on the diagonal of
//! `X` and blocks `Y(n_i, w_i)` on the diagonal of `Y`, where `w_i` is the
//! number of cells in the hook's row. The off-diagonal blocks of `Y` solve
//! `Y_ij D_{n_j} - D_{n_i} Y_ij = n_i E_{w_i w_j}`.

use serde::Serialize;

use crate::combinat::{contents, frobenius_hooks, FrobeniusHook, Partition};
use crate::exact::{charpoly, int, ExactError, ExactMatrix, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalogeroError {
    #[error("block parameter k = {k} out of range 1..={m}")]
    BlockIndex { m: usize, k: usize },
    #[error("Sylvester system for hooks {i} and {j} has no solution")]
    Infeasible { i: usize, j: usize },
    #[error("empty partition")]
    Empty,
    #[error(transparent)]
    Matrix(#[from] ExactError),
}

/// `D_m = Σ E_{i,i+1}`.
pub fn shift_matrix(m: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(m, m, |i, j| if j == i + 1 { int(1) } else { int(0) })
}

/// `Y(m, k)`: subdiagonal `1, 2, .., k-1, -(m-k), .., -2, -1`, zero elsewhere.
///
/// Satisfies `[Y(m,k), D_m] = m E_kk - Id`.
pub fn wilson_block(m: usize, k: usize) -> Result<ExactMatrix<Rational>, CalogeroError> {
    if k == 0 || k > m {
        return Err(CalogeroError::BlockIndex { m, k });
    }
    Ok(ExactMatrix::from_fn(m, m, |i, j| {
        if i == j + 1 {
            // entry below position j (zero-based)
            if j + 1 < k {
                int(j as i64 + 1)
            } else {
                int(j as i64 + 1 - m as i64)
            }
        } else {
            int(0)
        }
    }))
}

/// How an off-diagonal block was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffDiagonalBlock {
    pub row_hook: usize,
    pub col_hook: usize,
    /// `p - q` of the supporting diagonal, zero-based positions; `None`
    /// if no single diagonal carries a unique solution.
    pub diagonal: Option<i64>,
    /// The diagonal `w_i - w_j` was not the one that carries the solution.
    pub relaxed: bool,
}

/// A fixed point `(X^λ, Y^λ)` with its block layout.
#[derive(Clone, Debug)]
pub struct CMPair {
    pub lambda: Partition,
    pub x: ExactMatrix<Rational>,
    pub y: ExactMatrix<Rational>,
    pub hooks: Vec<FrobeniusHook>,
    pub offsets: Vec<usize>,
    pub blocks: Vec<OffDiagonalBlock>,
}

/// Solves `Z D_{nj} - D_{ni} Z = c E_{ki,kj}` (one-based `ki, kj`) with
/// support on diagonal `d`, or on all entries when `d` is `None`.
/// Returns the solution and whether it is unique.
fn solve_block(
    ni: usize,
    nj: usize,
    ki: usize,
    kj: usize,
    c: &Rational,
    d: Option<i64>,
) -> Result<Option<(ExactMatrix<Rational>, bool)>, ExactError> {
    let unknowns: Vec<(usize, usize)> = (0..ni)
        .flat_map(|p| (0..nj).map(move |q| (p, q)))
        .filter(|&(p, q)| d.is_none_or(|d| p as i64 - q as i64 == d))
        .collect();
    if unknowns.is_empty() {
        return Ok(None);
    }
    let pos = |p: usize, q: usize| unknowns.iter().position(|&u| u == (p, q));
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for p in 0..ni {
        for q in 0..nj {
            // (Z D)_{pq} = Z_{p,q-1};  (D Z)_{pq} = Z_{p+1,q}
            let mut row = vec![int(0); unknowns.len()];
            if q > 0 {
                if let Some(u) = pos(p, q - 1) {
                    row[u] = row[u].plus(&int(1));
                }
            }
            if p + 1 < ni {
                if let Some(u) = pos(p + 1, q) {
                    row[u] = row[u].minus(&int(1));
                }
            }
            rows.push(row);
            rhs.push(if p + 1 == ki && q + 1 == kj {
                c.clone()
            } else {
                int(0)
            });
        }
    }
    let a = ExactMatrix::from_rows(rows)?;
    let Some(sol) = a.solve(&rhs)? else {
        return Ok(None);
    };
    let unique = a.rank() == unknowns.len();
    let mut z = ExactMatrix::zeros(ni, nj);
    for (v, &(p, q)) in sol.into_iter().zip(&unknowns) {
        z.set(p, q, v);
    }
    Ok(Some((z, unique)))
}

/// Builds `(X^λ, Y^λ)`.
///
/// Off-diagonal blocks are searched on diagonals `w_i - w_j`, then
/// `w_i - w_j ± 1, ± 2, ...`, taking the first with a unique solution; if
/// none exists the minimal-norm choice is replaced by the full-support
/// solution with free entries set to zero. Every relaxation is recorded.
pub fn cm_fixed_point(lambda: &Partition) -> Result<CMPair, CalogeroError> {
    if lambda.is_empty() {
        return Err(CalogeroError::Empty);
    }
    let hooks = frobenius_hooks(lambda);
    let n = lambda.size() as usize;
    let mut offsets = Vec::with_capacity(hooks.len());
    let mut acc = 0;
    for h in &hooks {
        offsets.push(acc);
        acc += h.size as usize;
    }
    let mut x = ExactMatrix::zeros(n, n);
    let mut y = ExactMatrix::zeros(n, n);
    for (h, &o) in hooks.iter().zip(&offsets) {
        let m = h.size as usize;
        x.set_block(o, o, &shift_matrix(m));
        y.set_block(o, o, &wilson_block(m, h.width() as usize)?);
    }
    let mut blocks = Vec::new();
    for (i, hi) in hooks.iter().enumerate() {
        for (j, hj) in hooks.iter().enumerate() {
            if i == j {
                continue;
            }
            let (ni, nj) = (hi.size as usize, hj.size as usize);
            let (ki, kj) = (hi.width() as usize, hj.width() as usize);
            let c = int(ni as i64);
            let base = ki as i64 - kj as i64;
            let lo = -(nj as i64 - 1);
            let hi_d = ni as i64 - 1;
            let mut candidates = vec![base];
            for step in 1..=(ni + nj) as i64 {
                candidates.push(base + step);
                candidates.push(base - step);
            }
            let mut found = None;
            for d in candidates.into_iter().filter(|d| (lo..=hi_d).contains(d)) {
                if let Some((z, true)) = solve_block(ni, nj, ki, kj, &c, Some(d))? {
                    found = Some((z, Some(d)));
                    break;
                }
            }
            let (z, diagonal) = match found {
                Some(f) => f,
                None => match solve_block(ni, nj, ki, kj, &c, None)? {
                    Some((z, _)) => (z, None),
                    None => return Err(CalogeroError::Infeasible { i, j }),
                },
            };
            y.set_block(offsets[i], offsets[j], &z);
            blocks.push(OffDiagonalBlock {
                row_hook: i,
                col_hook: j,
                diagonal,
                relaxed: diagonal != Some(base),
            });
        }
    }
    Ok(CMPair {
        lambda: lambda.clone(),
        x,
        y,
        hooks,
        offsets,
        blocks,
    })
}

impl CMPair {
    /// `rank([X, Y] - Id)`.
    pub fn cm_rank(&self) -> Result<usize, CalogeroError> {
        let n = self.x.rows();
        Ok(self
            .x
            .commutator(&self.y)?
            .sub(&ExactMatrix::identity(n))?
            .rank())
    }

    /// Characteristic polynomial of `Y X`, low degree first.
    pub fn yx_charpoly(&self) -> Result<Vec<Rational>, CalogeroError> {
        Ok(charpoly(&self.y.mul(&self.x)?)?)
    }

    pub fn relaxed_blocks(&self) -> impl Iterator<Item = &OffDiagonalBlock> {
        self.blocks.iter().filter(|b| b.relaxed)
    }

    /// Plain-text dump of both matrices.
    pub fn dump(&self) -> String {
        format!("lambda = {}\nX =\n{}Y =\n{}", self.lambda, self.x, self.y)
    }
}

/// `∏ (t - c)` over a multiset of integers, low degree first.
pub fn poly_from_roots(roots: &[i64]) -> Vec<Rational> {
    let mut p = vec![int(1)];
    for &c in roots {
        let mut next = vec![int(0); p.len() + 1];
        for (k, a) in p.iter().enumerate() {
            next[k + 1] = next[k + 1].plus(a);
            next[k] = next[k].minus(&a.times(&int(c)));
        }
        p = next;
    }
    p
}

/// `charpoly(Y^λ X^λ) = ∏_{cells} (t - content)`.
pub fn cm_spectrum_check(lambda: &Partition) -> Result<bool, CalogeroError> {
    let pair = cm_fixed_point(lambda)?;
    Ok(pair.yx_charpoly()? == poly_from_roots(&contents(lambda)))
}

/// `charpoly(Y^λ X^λ) = ∏_i charpoly(Y(n_i, w_i) D_{n_i})`.
pub fn block_independence_check(pair: &CMPair) -> Result<bool, CalogeroError> {
    let mut prod = vec![int(1)];
    for h in &pair.hooks {
        let m = h.size as usize;
        let blk = wilson_block(m, h.width() as usize)?.mul(&shift_matrix(m))?;
        let cp = charpoly(&blk)?;
        let mut next = vec![int(0); prod.len() + cp.len() - 1];
        for (a, x) in prod.iter().enumerate() {
            for (b, y) in cp.iter().enumerate() {
                next[a + b] = next[a + b].plus(&x.times(y));
            }
        }
        prod = next;
    }
    Ok(pair.yx_charpoly()? == prod)
}

/// `[Y(m,k), D_m] = m E_kk - Id`.
pub fn wilson_commutator_check(m: usize, k: usize) -> Result<bool, CalogeroError> {
    let lhs = wilson_block(m, k)?.commutator(&shift_matrix(m))?;
    let mut rhs = ExactMatrix::scalar(m, int(-1));
    rhs.set(k - 1, k - 1, int(m as i64 - 1));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shift_and_block_examples() {
        assert!(shift_matrix(1).is_zero());
        assert_eq!(
            shift_matrix(3).to_rows(),
            vec![
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)],
                vec![int(0), int(0), int(0)],
            ]
        );
        assert!(wilson_block(1, 1).unwrap().is_zero());
        let y = wilson_block(3, 2).unwrap();
        assert_eq!(
            (y.get(1, 0).clone(), y.get(2, 1).clone()),
            (int(1), int(-1))
        );
        let c = y.commutator(&shift_matrix(3)).unwrap();
        assert_eq!(c.diagonal_entries(), vec![int(-1), int(2), int(-1)]);
        assert!(c.is_diagonal());
        assert!(wilson_block(3, 0).is_err());
        assert!(wilson_block(3, 4).is_err());
        assert_eq!(
            charpoly(&y.mul(&shift_matrix(3)).unwrap()).unwrap(),
            poly_from_roots(&[0, 1, -1])
        );
    }

    #[test]
    fn commutator_and_trace_identities() {
        for m in 1..=8 {
            for k in 1..=m {
                assert!(wilson_commutator_check(m, k).unwrap());
                let yd = wilson_block(m, k).unwrap().mul(&shift_matrix(m)).unwrap();
                let direct: Rational = (1..m).fold(int(0), |acc, i| {
                    acc + wilson_block(m, k).unwrap().get(i, i - 1)
                });
                assert_eq!(yd.trace().unwrap(), direct);
            }
        }
    }

    #[test]
    fn small_fixed_points() {
        let one = cm_fixed_point(&p(&[1])).unwrap();
        assert!(one.x.is_zero() && one.y.is_zero());
        assert_eq!(one.cm_rank().unwrap(), 1);
        let hook = cm_fixed_point(&p(&[2, 1])).unwrap();
        assert_eq!(hook.x, shift_matrix(3));
        assert_eq!(hook.y, wilson_block(3, 2).unwrap());
        assert_eq!(hook.cm_rank().unwrap(), 1);
        let sq = cm_fixed_point(&p(&[2, 2])).unwrap();
        assert_eq!(sq.blocks.len(), 2);
        assert_eq!(sq.cm_rank().unwrap(), 1);
        assert!(cm_spectrum_check(&p(&[2, 2])).unwrap());
    }

    #[test]
    fn spectrum_rank_and_block_independence() {
        for n in 1..=7 {
            for lam in partitions(n) {
                let pair = cm_fixed_point(&lam).unwrap();
                assert_eq!(pair.cm_rank().unwrap(), 1, "{lam}");
                assert!(cm_spectrum_check(&lam).unwrap(), "{lam}");
                assert!(block_independence_check(&pair).unwrap(), "{lam}");
                assert!(pair.blocks.iter().all(|b| b.diagonal.is_some()), "{lam}");
            }
        }
    }
}
