use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::CombinatError;

/// Integer partition stored as weakly decreasing positive parts.
///
/// Cells are addressed `(row, col)` with zero-based indices; the content of
/// a cell is `col - row`, which agrees with the one-based `j - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CombinatError> {
        if parts.contains(&0) {
            return Err(CombinatError::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^m)` for `m` rows of length one.
    pub fn column(m: u32) -> Self {
        Partition(vec![1; m as usize])
    }

    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(0);
        Partition(
            (0..w)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        (cell.1 as u32) < self.part(cell.0)
    }

    /// Multiplicities `[m_1, m_2, ...]`, where `m_k` counts parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Inverse of [`Partition::multiplicities`].
    pub fn from_multiplicities(m: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (k, &c) in m.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(k as u32 + 1, c as usize));
        }
        Partition(parts)
    }
}

/// Contents `col - row` of all cells, row by row.
pub fn contents(lambda: &Partition) -> Vec<i64> {
    lambda.cells().map(|(i, j)| j as i64 - i as i64).collect()
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of each `k <= n`, by Euler's recurrence.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for i in k..=n {
            p[i] += p[i - k];
        }
    }
    p
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "0" || s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| CombinatError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn contents_examples() {
        assert!(contents(&Partition::empty()).is_empty());
        let mut c = contents(&p(&[2, 1]));
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
        assert_eq!(contents(&p(&[3])), vec![0, 1, 2]);
    }

    #[test]
    fn content_sum_identity() {
        for n in 0..=8 {
            for lam in partitions(n) {
                let lhs: i64 = contents(&lam).iter().sum();
                let rhs: i64 = lam
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| {
                        let l = l as i64;
                        l * (l - 1) / 2 - i as i64 * l
                    })
                    .sum();
                assert_eq!(lhs, rhs, "{lam}");
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts = partition_counts(12);
        for n in 0..=12u32 {
            let ps = partitions(n);
            assert_eq!(ps.len() as u64, counts[n as usize]);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn conjugate_and_multiplicities() {
        let lam = p(&[4, 2, 2, 1]);
        assert_eq!(lam.conjugate(), p(&[4, 3, 1, 1]));
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(lam.multiplicities(), vec![1, 2, 0, 1]);
        assert_eq!(Partition::from_multiplicities(&lam.multiplicities()), lam);
    }
}
