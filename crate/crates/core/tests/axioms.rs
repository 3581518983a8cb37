use dumas::sample::{random_pairs, SampleSpec};
use dumas::text::{parse_elem, parse_ring};
use dumas::{Elem, Valuation, WeightVector};

#[test]
fn weighted_valuations_satisfy_the_axioms() {
    let r = parse_ring("Z[Y,Z]").unwrap();
    let pairs = random_pairs(&r, 5, 1000, &SampleSpec::default());
    for w in [vec![1, 1], vec![2, 1], vec![1, 3], vec![0, 2]] {
        for v in [
            Valuation::DegNu(WeightVector::new(w.clone())),
            Valuation::CodegNu(WeightVector::new(w.clone())),
        ] {
            let report = v.check_axioms(&r, &pairs);
            assert!(report.passed(), "{v:?}: {:?}", report.first_violation);
        }
    }
}

#[test]
fn prime_orders_satisfy_the_axioms() {
    for (ring, p) in [
        ("Z", "7"),
        ("Z[sqrt(10)]", "(11+3g)"),
        ("Z[cbrt(12)]", "(7-3g)"),
    ] {
        let r = parse_ring(ring).unwrap();
        let p = parse_elem(p, &r).unwrap();
        let spec = SampleSpec {
            boost: Some(p.clone()),
            ..SampleSpec::default()
        };
        let pairs = random_pairs(&r, 6, 1000, &spec);
        let v = Valuation::ord_p(&r, p).unwrap();
        assert!(v.prime_certificate().is_some());
        let report = v.check_axioms(&r, &pairs);
        assert!(report.passed(), "{ring}: {:?}", report.first_violation);
    }
}

#[test]
fn composite_modulus_is_caught() {
    let pairs = vec![(Elem::int(2), Elem::int(2))];
    let v = Valuation::ord_p(&dumas::Ring::Integers, Elem::int(4)).unwrap();
    assert!(!v.check_axioms(&dumas::Ring::Integers, &pairs).passed());
}
