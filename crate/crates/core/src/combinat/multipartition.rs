use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{partition_counts, partitions, CombinatError, Partition};

/// Ordered tuple of `r` partitions, components indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, CombinatError> {
        if components.is_empty() {
            return Err(CombinatError::InvalidPartition(
                "multipartition needs r >= 1 components".into(),
            ));
        }
        Ok(Multipartition(components))
    }

    /// Single-component multipartition.
    pub fn single(lambda: Partition) -> Self {
        Multipartition(vec![lambda])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, l: usize) -> &Partition {
        &self.0[l]
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// Total number of parts over all components.
    pub fn len(&self) -> usize {
        self.0.iter().map(Partition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// `(component, row, col)` for every cell.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(l, p)| p.cells().map(move |(i, j)| (l, i, j)))
    }

    /// `(component, content)` for every cell.
    pub fn colored_contents(&self) -> Vec<(usize, i64)> {
        self.cells()
            .map(|(l, i, j)| (l, j as i64 - i as i64))
            .collect()
    }
}

fn compositions(n: u32, r: usize) -> Vec<Vec<u32>> {
    // decreasing lexicographic order, (n, 0, ..., 0) first
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every `r`-multipartition of `n`, once each.
///
/// Order: the size vector `(|λ^0|, ..., |λ^{r-1}|)` in decreasing
/// lexicographic order, then each component in the decreasing
/// lexicographic order of [`partitions`], earlier components varying
/// slowest. For `r = 1` this is the order of [`partitions`].
pub fn enumerate_multipartitions(r: usize, n: u32) -> Vec<Multipartition> {
    assert!(r >= 1, "r must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    for comp in compositions(n, r) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &k in &comp {
            let mut next = Vec::with_capacity(acc.len() * by_size[k as usize].len());
            for prefix in &acc {
                for p in &by_size[k as usize] {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(Multipartition));
    }
    out
}

/// `|P(r, n)|` as a sum over compositions of products of partition numbers.
pub fn multipartition_count(r: usize, n: u32) -> u64 {
    let p = partition_counts(n as usize);
    compositions(n, r)
        .iter()
        .map(|c| c.iter().map(|&k| p[k as usize]).product::<u64>())
        .sum()
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let comps = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>, _>>()?;
        Multipartition::new(comps)
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Coefficients of prod_k (1 - x^k)^{-r} up to x^n, by repeated
    /// multiplication with the geometric series.
    fn generating_function(r: usize, n: usize) -> Vec<u64> {
        let mut f = vec![0u64; n + 1];
        f[0] = 1;
        for _ in 0..r {
            for k in 1..=n {
                for i in k..=n {
                    f[i] += f[i - k];
                }
            }
        }
        f
    }

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_multipartitions(1, 3).len(), 3);
        let two = enumerate_multipartitions(2, 1);
        let names: Vec<String> = two.iter().map(ToString::to_string).collect();
        assert_eq!(names, vec!["1|∅", "∅|1"]);
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(3, 0).len(), 1);
    }

    #[test]
    fn counts_match_generating_function() {
        for r in 1..=4 {
            let gf = generating_function(r, 10);
            for n in 0..=10u32 {
                let all = enumerate_multipartitions(r, n);
                assert_eq!(all.len() as u64, gf[n as usize], "r={r} n={n}");
                assert_eq!(multipartition_count(r, n), gf[n as usize]);
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len());
                assert!(all.iter().all(|m| m.size() == n && m.r() == r));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let m: Multipartition = "2,1|∅|1".parse().unwrap();
        assert_eq!(m.r(), 3);
        assert_eq!(m.size(), 4);
        assert_eq!(m.to_string(), "2,1|∅|1");
        for mp in enumerate_multipartitions(3, 4) {
            assert_eq!(mp.to_string().parse::<Multipartition>().unwrap(), mp);
        }
    }
}
