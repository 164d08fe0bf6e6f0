use gieseker::appendixfix::{
    fixed_point_quotient, monomial_product, orbit_product, reduction_consistency, spanning_bound,
    InvariantElement, OrbitMonomial,
};
use proptest::prelude::*;

#[test]
fn quotient_dimensions_match_multipartition_counts() {
    let cases = [
        (0, 1),
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (1, 2),
        (2, 2),
        (3, 2),
        (1, 3),
        (2, 3),
    ];
    for (n, r) in cases {
        let q = fixed_point_quotient(n, r, spanning_bound(n, r) + 2).unwrap();
        assert!(
            q.holds(),
            "n={n} r={r}: dim {} vs {}",
            q.dimension(),
            q.expected()
        );
        assert!(reduction_consistency(&q).unwrap(), "n={n} r={r}");
    }
}

#[test]
fn wider_window_changes_nothing() {
    let q = fixed_point_quotient(2, 2, spanning_bound(2, 2) + 6).unwrap();
    assert!(q.holds());
    assert_eq!(q.dimension(), 5);
}

fn triple(r: u32) -> impl Strategy<Value = (u32, u32, u32)> {
    (0u32..3, 0u32..3, 0..r).prop_filter("nonzero", |t| *t != (0, 0, 0))
}

fn monomial(r: u32) -> impl Strategy<Value = OrbitMonomial> {
    prop::collection::vec(triple(r), 0..3).prop_map(move |v| OrbitMonomial::new(r, v).unwrap())
}

fn setup() -> impl Strategy<Value = (usize, OrbitMonomial, OrbitMonomial, OrbitMonomial)> {
    (1usize..4, 1u32..4).prop_flat_map(|(n, r)| (Just(n), monomial(r), monomial(r), monomial(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_commutative((n, a, b, c) in setup()) {
        let x = InvariantElement::monomial(a, n);
        let y = InvariantElement::monomial(b, n);
        let z = InvariantElement::monomial(c, n);
        let left = orbit_product(&orbit_product(&x, &y).unwrap(), &z).unwrap();
        let right = orbit_product(&x, &orbit_product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(orbit_product(&x, &y).unwrap(), orbit_product(&y, &x).unwrap());
    }

    #[test]
    fn concatenation_has_positive_coefficient((n, a, b, _c) in setup()) {
        let mut bag = a.triples().to_vec();
        bag.extend_from_slice(b.triples());
        let joined = OrbitMonomial::new(a.r(), bag).unwrap();
        let prod = monomial_product(&a, &b, n);
        if joined.len() <= n {
            prop_assert!(prod.get(&joined).copied().unwrap_or(0) > 0);
        }
        let ((s, t), (u, v)) = (a.bidegree(), b.bidegree());
        prop_assert!(prod.keys().all(|m| m.len() <= n && m.bidegree() == (s + u, t + v)));
    }
}
