use std::collections::BTreeMap;

use mpcone::config::RunConfig;
use mpcone::polyjson::{Basis, PolyJson, Provenance};
use mpcone_core::rational::ratio;
use mpcone_core::{Partition, Rational, SymPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(p, q)| ratio(p, q))
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..6, n).prop_map(|v| Partition::from_unsorted(&v))
}

fn provenance(n: usize) -> Provenance {
    Provenance { family: "Q".into(), m: vec![2, 1], nu: Some("7/2".into()), n, d: "2".into() }
}

proptest! {
    #[test]
    fn polyjson_round_trip(entries in prop::collection::vec((partition(3), rational()), 0..12)) {
        let coeffs: BTreeMap<Partition, Rational> = entries.into_iter().collect();
        let f = SymPoly::from_coeffs(3, coeffs).unwrap();
        let j = PolyJson::from_sympoly(&f, provenance(3));
        let text = j.to_json();
        let back = PolyJson::from_json(&text).unwrap();
        prop_assert_eq!(back.to_sympoly().unwrap(), f);
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(back.terms.iter().all(|t| t.coeff != "0"));
    }

    #[test]
    fn basis_label_survives(entries in prop::collection::vec((partition(2), rational()), 1..6)) {
        let coeffs: BTreeMap<Partition, Rational> = entries.into_iter().collect();
        let j = PolyJson::from_coeffs(Basis::Phi, &coeffs, provenance(2));
        let back = PolyJson::from_json(&j.to_json()).unwrap();
        prop_assert_eq!(back.basis, Basis::Phi);
        let kept: BTreeMap<Partition, Rational> = coeffs.into_iter().filter(|(_, c)| *c != ratio(0, 1)).collect();
        prop_assert_eq!(back.coeffs().unwrap(), kept);
    }

    #[test]
    fn run_config_round_trip(
        rank in 1usize..5,
        mult in rational().prop_filter("positive", |d| *d > ratio(0, 1)),
        nu in rational(),
        m in partition(2),
        seed in any::<u64>(),
        tol in 1e-12f64..1.0,
    ) {
        let cfg = RunConfig { rank, mult, nu, partition: m, seed, tolerance: tol, ..RunConfig::default() };
        let text = cfg.to_json();
        let back = RunConfig::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.tolerance, tol);
        prop_assert_eq!(back.partition, cfg.partition);
    }
}
