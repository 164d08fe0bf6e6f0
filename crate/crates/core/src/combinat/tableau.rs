use std::collections::HashMap;
use std::fmt;

use super::{Multipartition, Partition};

/// A cell of a multipartition: `(component, row, col)`, all zero-based.
pub type Cell = (usize, usize, usize);

/// Standard filling of a multipartition by `1..=n`.
///
/// Entry `i + 1` sits at `cells[i]`; entries increase along rows and
/// columns of every component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardMultitableau {
    cells: Vec<Cell>,
}

impl StandardMultitableau {
    pub fn from_cells(cells: Vec<Cell>) -> Self {
        StandardMultitableau { cells }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cell holding entry `i + 1`.
    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i]
    }

    /// Content of the cell holding entry `i + 1`.
    pub fn content(&self, i: usize) -> i64 {
        let (_, r, c) = self.cells[i];
        c as i64 - r as i64
    }

    /// Component index (zero-based) of entry `i + 1`.
    pub fn component(&self, i: usize) -> usize {
        self.cells[i].0
    }

    /// Tableau with entries `i + 1` and `i + 2` exchanged, if still standard.
    pub fn swapped(&self, i: usize) -> Option<Self> {
        let (a, b) = (self.cells[i], self.cells[i + 1]);
        // standard after swapping unless the two cells are adjacent in a row or column
        if a.0 == b.0 && ((a.1 == b.1 && a.2 + 1 == b.2) || (a.2 == b.2 && a.1 + 1 == b.1)) {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(i, i + 1);
        Some(StandardMultitableau { cells })
    }

    pub fn is_standard(&self, shape: &Multipartition) -> bool {
        let mut pos: HashMap<Cell, usize> = HashMap::new();
        for (k, &c) in self.cells.iter().enumerate() {
            if !shape.component(c.0).contains((c.1, c.2)) || pos.insert(c, k).is_some() {
                return false;
            }
        }
        if pos.len() != shape.size() as usize {
            return false;
        }
        pos.iter().all(|(&(l, r, c), &k)| {
            let left = c == 0 || pos.get(&(l, r, c - 1)).is_some_and(|&k2| k2 < k);
            let up = r == 0 || pos.get(&(l, r - 1, c)).is_some_and(|&k2| k2 < k);
            left && up
        })
    }
}

impl fmt::Display for StandardMultitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.cells.iter().map(|c| c.0 + 1).max().unwrap_or(1);
        let mut comps: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r];
        for (k, &(l, i, j)) in self.cells.iter().enumerate() {
            let rows = &mut comps[l];
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, 0);
            }
            rows[i][j] = k + 1;
        }
        let s: Vec<String> = comps
            .iter()
            .map(|rows| {
                if rows.is_empty() {
                    "∅".to_string()
                } else {
                    rows.iter()
                        .map(|row| {
                            row.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("/")
                }
            })
            .collect();
        write!(f, "{}", s.join(" | "))
    }
}

/// All standard multitableaux of the given shape, each once.
pub fn standard_multitableaux(shape: &Multipartition) -> Vec<StandardMultitableau> {
    fn rec(
        shape: &Multipartition,
        filled: &mut Vec<Vec<u32>>,
        cur: &mut Vec<Cell>,
        n: usize,
        out: &mut Vec<StandardMultitableau>,
    ) {
        if cur.len() == n {
            out.push(StandardMultitableau { cells: cur.clone() });
            return;
        }
        for l in 0..shape.r() {
            let target = shape.component(l);
            for row in 0..target.len() {
                let have = filled[l][row];
                let above = if row == 0 {
                    u32::MAX
                } else {
                    filled[l][row - 1]
                };
                if have < target.part(row) && have < above {
                    filled[l][row] += 1;
                    cur.push((l, row, have as usize));
                    rec(shape, filled, cur, n, out);
                    cur.pop();
                    filled[l][row] -= 1;
                }
            }
        }
    }
    let mut filled: Vec<Vec<u32>> = shape
        .components()
        .iter()
        .map(|p| vec![0; p.len()])
        .collect();
    let mut out = Vec::new();
    rec(
        shape,
        &mut filled,
        &mut Vec::new(),
        shape.size() as usize,
        &mut out,
    );
    out
}

/// Number of standard tableaux of a partition by the hook length formula.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let num: u128 = (1..=lambda.size() as u128).product();
    let hooks: u128 = lambda
        .cells()
        .map(|(i, j)| ((lambda.part(i) as usize - j) + (conj.part(j) as usize - i) - 1) as u128)
        .product();
    num / hooks
}

/// A Frobenius hook: the cells right of and below the diagonal cell
/// `(root, root)`, root included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FrobeniusHook {
    /// Zero-based diagonal index of the root.
    pub root: usize,
    /// Number of cells.
    pub size: u32,
    /// Cells in the root's column (root included).
    pub height: u32,
}

impl FrobeniusHook {
    /// Cells in the root's row (root included).
    pub fn width(&self) -> u32 {
        self.size - self.height + 1
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let d = self.root;
        let mut v: Vec<(usize, usize)> = (0..self.width() as usize).map(|j| (d, d + j)).collect();
        v.extend((1..self.height as usize).map(|i| (d + i, d)));
        v
    }
}

/// Frobenius hooks of `lambda`, ordered by root.
pub fn frobenius_hooks(lambda: &Partition) -> Vec<FrobeniusHook> {
    let conj = lambda.conjugate();
    (0..lambda.len())
        .take_while(|&d| lambda.part(d) as usize > d)
        .map(|d| {
            let arm = lambda.part(d) - d as u32 - 1;
            let leg = conj.part(d) - d as u32 - 1;
            FrobeniusHook {
                root: d,
                size: arm + leg + 1,
                height: leg + 1,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_multipartitions, partitions};
    use std::collections::HashSet;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tableau_counts() {
        let shape = Multipartition::single(p(&[2, 1]));
        assert_eq!(standard_multitableaux(&shape).len(), 2);
        let shape: Multipartition = "1|1".parse().unwrap();
        assert_eq!(standard_multitableaux(&shape).len(), 2);
        for n in 1..=6 {
            let row = Multipartition::single(Partition::row(n));
            assert_eq!(standard_multitableaux(&row).len(), 1);
        }
    }

    #[test]
    fn tableaux_are_standard_distinct_and_hook_counted() {
        for n in 0..=7 {
            for lam in partitions(n) {
                let shape = Multipartition::single(lam.clone());
                let ts = standard_multitableaux(&shape);
                assert_eq!(ts.len() as u128, hook_length_count(&lam), "{lam}");
                assert!(ts.iter().all(|t| t.is_standard(&shape)));
                let set: HashSet<_> = ts.iter().collect();
                assert_eq!(set.len(), ts.len());
            }
        }
    }

    #[test]
    fn multitableau_counts() {
        // dim of the irreducible = binomial * product of component dimensions
        for r in 1..=3 {
            for n in 0..=5u32 {
                let total: u128 = enumerate_multipartitions(r, n)
                    .iter()
                    .map(|m| {
                        let d = standard_multitableaux(m).len() as u128;
                        d * d
                    })
                    .sum();
                let fact: u128 = (1..=n as u128).product();
                assert_eq!(total, fact * (r as u128).pow(n), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn swap_preserves_standardness() {
        let shape: Multipartition = "2,1|1".parse().unwrap();
        for t in standard_multitableaux(&shape) {
            for i in 0..t.n() - 1 {
                if let Some(s) = t.swapped(i) {
                    assert!(s.is_standard(&shape));
                } else {
                    let mut cells = t.cells().to_vec();
                    cells.swap(i, i + 1);
                    assert!(!StandardMultitableau::from_cells(cells).is_standard(&shape));
                }
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(
            frobenius_hooks(&p(&[1])),
            vec![FrobeniusHook {
                root: 0,
                size: 1,
                height: 1
            }]
        );
        assert_eq!(
            frobenius_hooks(&p(&[2, 1])),
            vec![FrobeniusHook {
                root: 0,
                size: 3,
                height: 2
            }]
        );
        assert_eq!(
            frobenius_hooks(&p(&[2, 2])),
            vec![
                FrobeniusHook {
                    root: 0,
                    size: 3,
                    height: 2
                },
                FrobeniusHook {
                    root: 1,
                    size: 1,
                    height: 1
                }
            ]
        );
    }

    #[test]
    fn hooks_partition_the_diagram() {
        for n in 1..=10 {
            for lam in partitions(n) {
                let hooks = frobenius_hooks(&lam);
                let diag = (0..lam.len()).filter(|&i| lam.part(i) as usize > i).count();
                assert_eq!(hooks.len(), diag);
                let mut cells: Vec<(usize, usize)> = hooks.iter().flat_map(|h| h.cells()).collect();
                cells.sort();
                let mut all: Vec<(usize, usize)> = lam.cells().collect();
                all.sort();
                assert_eq!(cells, all, "{lam}");
                assert!(hooks.iter().all(|h| h.height <= h.size));
            }
        }
    }
}
