//! Bijections between length-bounded partition data and (multi)partitions
//! of `n`, used to index the canonical spanning family of the invariant
//! ring quotient.

use std::collections::BTreeSet;

use super::{enumerate_multipartitions, partitions, CombinatError, Multipartition, Partition};

/// Raises every part by one and pads with `ones` parts equal to 1.
fn shift_up(lambda: &Partition, ones: u32) -> Partition {
    let mut parts: Vec<u32> = lambda.parts().iter().map(|&p| p + 1).collect();
    parts.extend(std::iter::repeat_n(1, ones as usize));
    Partition::from_unsorted(parts)
}

/// Drops parts equal to 1 and lowers the rest by one; returns the number of
/// parts equal to 1 alongside.
fn shift_down(mu: &Partition) -> (Partition, u32) {
    let ones = mu.parts().iter().filter(|&&p| p == 1).count() as u32;
    let rest = mu
        .parts()
        .iter()
        .filter(|&&p| p > 1)
        .map(|&p| p - 1)
        .collect();
    (Partition::from_unsorted(rest), ones)
}

/// `1^{α_1} 2^{α_2} ...  ↦  1^{n-ℓ-|λ|} 2^{α_1} 3^{α_2} ...`, a partition of `n`.
pub fn hat_bijection_r1(lambda: &Partition, n: u32) -> Result<Partition, CombinatError> {
    let used = lambda.len() as u32 + lambda.size();
    if used > n {
        return Err(CombinatError::Precondition(format!(
            "ℓ(λ) + |λ| = {used} exceeds n = {n} for λ = {lambda}"
        )));
    }
    Ok(shift_up(lambda, n - used))
}

/// Inverse of [`hat_bijection_r1`].
pub fn hat_inverse_r1(mu: &Partition) -> Partition {
    shift_down(mu).0
}

/// Sends `(λ, p)` with `ℓ(λ) + |λ| + |p| <= n` to an `r`-multipartition of `n`.
///
/// Component 0 receives `1^{n-ℓ-|λ|-|p|}` followed by the raised parts of
/// `λ^0`; component `i >= 1` receives `1^{p_i}` followed by the raised
/// parts of `λ^i`.
pub fn hat_bijection_general(
    lambda: &Multipartition,
    p: &[u32],
    n: u32,
) -> Result<Multipartition, CombinatError> {
    let r = lambda.r();
    if p.len() + 1 != r {
        return Err(CombinatError::Precondition(format!(
            "expected {} multiplicities, got {}",
            r - 1,
            p.len()
        )));
    }
    let used = lambda.len() as u32 + lambda.size() + p.iter().sum::<u32>();
    if used > n {
        return Err(CombinatError::Precondition(format!(
            "ℓ + |λ| + |p| = {used} exceeds n = {n} for λ = {lambda}"
        )));
    }
    let comps = (0..r)
        .map(|i| {
            let ones = if i == 0 { n - used } else { p[i - 1] };
            shift_up(lambda.component(i), ones)
        })
        .collect();
    Multipartition::new(comps)
}

/// Inverse of [`hat_bijection_general`]: `(λ, p)` from a multipartition.
pub fn hat_inverse_general(mu: &Multipartition) -> (Multipartition, Vec<u32>) {
    let mut comps = Vec::with_capacity(mu.r());
    let mut p = Vec::with_capacity(mu.r().saturating_sub(1));
    for (i, c) in mu.components().iter().enumerate() {
        let (lam, ones) = shift_down(c);
        comps.push(lam);
        if i > 0 {
            p.push(ones);
        }
    }
    (Multipartition::new(comps).expect("nonempty"), p)
}

/// Every `(λ, p)` with `λ` an `r`-multipartition and `ℓ(λ) + |λ| + |p| <= n`.
pub fn admissible_pairs(r: usize, n: u32) -> Vec<(Multipartition, Vec<u32>)> {
    // budget b = ℓ + |λ| per component; a partition of size s and length l uses s + l
    let mut by_cost: Vec<Vec<Partition>> = vec![Vec::new(); n as usize + 1];
    for s in 0..=n {
        for lam in partitions(s) {
            let c = (lam.len() as u32 + s) as usize;
            if c <= n as usize {
                by_cost[c].push(lam);
            }
        }
    }
    let mut out = Vec::new();
    fn rec(
        r: usize,
        budget: u32,
        by_cost: &[Vec<Partition>],
        comps: &mut Vec<Partition>,
        p: &mut Vec<u32>,
        out: &mut Vec<(Multipartition, Vec<u32>)>,
    ) {
        let i = comps.len();
        if i == r {
            out.push((
                Multipartition::new(comps.clone()).expect("nonempty"),
                p.clone(),
            ));
            return;
        }
        let pmax = if i == 0 { 0 } else { budget };
        for pi in 0..=pmax {
            for cost in 0..=(budget - pi) as usize {
                for lam in &by_cost[cost] {
                    comps.push(lam.clone());
                    if i > 0 {
                        p.push(pi);
                    }
                    rec(r, budget - pi - cost as u32, by_cost, comps, p, out);
                    if i > 0 {
                        p.pop();
                    }
                    comps.pop();
                }
            }
        }
    }
    rec(r, n, &by_cost, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Exhaustive round trip of both bijections for `(n, r)`: every admissible
/// pair maps into `P(r, n)`, distinct pairs have distinct images, every
/// multipartition is hit, and the inverses undo the forward maps.
pub fn hat_round_trip(n: u32, r: usize) -> Result<(), CombinatError> {
    let fail = |msg: String| Err(CombinatError::Precondition(msg));
    let target: BTreeSet<Multipartition> = enumerate_multipartitions(r, n).into_iter().collect();
    let mut seen = BTreeSet::new();
    for (lam, p) in admissible_pairs(r, n) {
        let mu = hat_bijection_general(&lam, &p, n)?;
        if hat_inverse_general(&mu) != (lam.clone(), p.clone()) {
            return fail(format!("({lam}, {p:?}) does not return from {mu}"));
        }
        if !target.contains(&mu) || !seen.insert(mu.clone()) {
            return fail(format!("{mu} is hit twice or lies outside P({r},{n})"));
        }
    }
    if seen != target {
        return fail(format!(
            "image has {} of {} multipartitions",
            seen.len(),
            target.len()
        ));
    }
    if r == 1 {
        let mut preimages = BTreeSet::new();
        for mu in partitions(n) {
            let lam = hat_inverse_r1(&mu);
            if hat_bijection_r1(&lam, n)? != mu {
                return fail(format!("{mu} does not return through {lam}"));
            }
            preimages.insert(lam);
        }
        if preimages.len() != partitions(n).len() {
            return fail("inverse is not injective".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_multipartitions, partition_counts};
    use std::collections::HashSet;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn r1_examples() {
        assert_eq!(
            hat_bijection_r1(&Partition::empty(), 3).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(hat_bijection_r1(&p(&[1]), 3).unwrap(), p(&[2, 1]));
        assert_eq!(hat_bijection_r1(&p(&[2]), 3).unwrap(), p(&[3]));
        assert!(hat_bijection_r1(&p(&[2, 1]), 4).is_err());
    }

    #[test]
    fn general_examples() {
        let empty: Multipartition = "∅|∅|∅".parse().unwrap();
        assert_eq!(
            hat_bijection_general(&empty, &[0, 0], 4)
                .unwrap()
                .to_string(),
            "1,1,1,1|∅|∅"
        );
        let lam: Multipartition = "1|∅".parse().unwrap();
        assert_eq!(
            hat_bijection_general(&lam, &[0], 3).unwrap().to_string(),
            "2,1|∅"
        );
        assert!(hat_bijection_general(&lam, &[2], 3).is_err());
        assert!(hat_bijection_general(&lam, &[], 3).is_err());
    }

    #[test]
    fn r1_is_a_bijection() {
        let counts = partition_counts(8);
        for n in 0..=8u32 {
            let domain: Vec<Partition> = (0..=n)
                .flat_map(partitions)
                .filter(|l| l.len() as u32 + l.size() <= n)
                .collect();
            let image: HashSet<Partition> = domain
                .iter()
                .map(|l| hat_bijection_r1(l, n).unwrap())
                .collect();
            assert_eq!(image.len(), domain.len());
            assert_eq!(image.len() as u64, counts[n as usize]);
            assert!(image.iter().all(|m| m.size() == n));
            for l in &domain {
                assert_eq!(&hat_inverse_r1(&hat_bijection_r1(l, n).unwrap()), l);
            }
        }
    }

    #[test]
    fn general_round_trips() {
        for r in 1..=3 {
            for n in 0..=6u32 {
                let pairs = admissible_pairs(r, n);
                let all = enumerate_multipartitions(r, n);
                assert_eq!(pairs.len(), all.len(), "r={r} n={n}");
                let image: HashSet<Multipartition> = pairs
                    .iter()
                    .map(|(l, q)| hat_bijection_general(l, q, n).unwrap())
                    .collect();
                assert_eq!(image.len(), all.len());
                for (l, q) in &pairs {
                    let mu = hat_bijection_general(l, q, n).unwrap();
                    assert_eq!(mu.size(), n);
                    assert_eq!(&hat_inverse_general(&mu), &(l.clone(), q.clone()));
                }
                for mu in &all {
                    let (l, q) = hat_inverse_general(mu);
                    assert_eq!(&hat_bijection_general(&l, &q, n).unwrap(), mu);
                }
            }
        }
    }
}
