//! Property tests for the structural invariants: table validation
//! rejects mutations, ring axioms hold on random triples, composition is
//! independent of matrix lift choice, and the Ω chains behave.

use centaut::abelian::{decompose, omega};
use centaut::group::{group_from_json, group_to_json, make_group, Subgroup};
use centaut::homring::build_hom_ring;
use centaut::ring::{circle, FiniteRing};
use proptest::prelude::*;

const SPECS: &[&str] = &[
    "cyclic:4",
    "cyclic:9",
    "abelian:3,3",
    "abelian:9,3",
    "abelian:2,2",
    "abelian:8,2",
    "dihedral:8",
    "quaternion:8",
    "heisenberg:3",
    "modular:3",
];

fn spec_strategy() -> impl Strategy<Value = &'static str> {
    prop::sample::select(SPECS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn swapping_two_table_entries_is_rejected(
        spec in spec_strategy(),
        a in 0usize..64,
        b in 0usize..64,
    ) {
        let g = make_group(spec).unwrap();
        let n = g.order();
        let mut v: serde_json::Value = serde_json::from_str(&group_to_json(&g)).unwrap();
        let (r1, c1) = ((a / n) % n, a % n);
        let (r2, c2) = ((b / n) % n, b % n);
        let x = v["table"][r1][c1].as_u64().unwrap();
        let y = v["table"][r2][c2].as_u64().unwrap();
        prop_assume!(x != y);
        v["table"][r1][c1] = y.into();
        v["table"][r2][c2] = x.into();
        prop_assert!(group_from_json(&v.to_string()).is_err());
    }

    #[test]
    fn ring_axioms_on_random_triples(
        spec in spec_strategy(),
        i in any::<usize>(),
        j in any::<usize>(),
        k in any::<usize>(),
    ) {
        let g = make_group(spec).unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let n = elems.len();
        let (x, y, z) = (&elems[i % n], &elems[j % n], &elems[k % n]);
        prop_assert_eq!(r.mul(&r.mul(x, y), z), r.mul(x, &r.mul(y, z)));
        prop_assert_eq!(r.add(&r.add(x, y), z), r.add(x, &r.add(y, z)));
        prop_assert_eq!(r.add(x, y), r.add(y, x));
        prop_assert_eq!(r.mul(&r.add(x, y), z), r.add(&r.mul(x, z), &r.mul(y, z)));
        prop_assert_eq!(r.mul(z, &r.add(x, y)), r.add(&r.mul(z, x), &r.mul(z, y)));
        // Circle composition is associative with identity 0.
        prop_assert_eq!(
            circle(&r, &circle(&r, x, y), z),
            circle(&r, x, &circle(&r, y, z))
        );
        prop_assert_eq!(circle(&r, x, &r.zero()), x.clone());
    }

    #[test]
    fn composition_is_lift_independent(
        spec in spec_strategy(),
        i in any::<usize>(),
        j in any::<usize>(),
        salts in prop::collection::vec(0u64..7, 12),
    ) {
        let g = make_group(spec).unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let n = elems.len();
        let (x, y) = (&elems[i % n], &elems[j % n]);
        let reference = r.compose_mats(x.matrix(), y.matrix());
        let d = r.source_dim();
        let lift = |mat: &[u64], off: usize| -> Vec<u64> {
            mat.iter()
                .enumerate()
                .map(|(t, &v)| v + r.target_orders()[t / d] * salts[(t + off) % salts.len()])
                .collect()
        };
        prop_assert_eq!(r.compose_mats(&lift(x.matrix(), 0), y.matrix()), reference.clone());
        prop_assert_eq!(r.compose_mats(x.matrix(), &lift(y.matrix(), 5)), reference.clone());
        prop_assert_eq!(
            r.compose_mats(&lift(x.matrix(), 3), &lift(y.matrix(), 1)),
            reference
        );
    }

    #[test]
    fn omega_chain_is_monotone_and_stabilizes(
        spec in prop::sample::select(vec!["cyclic:9", "abelian:9,3", "abelian:8,2", "abelian:3,3", "cyclic:27"]),
        n in 1u32..5,
    ) {
        let g = make_group(spec).unwrap();
        let d = decompose(&g, &Subgroup::whole(&g)).unwrap();
        let p = d.prime().unwrap() as u64;
        let on = omega(&g, &d, n).unwrap();
        let on1 = omega(&g, &d, n + 1).unwrap();
        prop_assert!(on.is_subset_of(&on1));
        let expected: u64 = d.exps().iter().map(|&a| p.pow(a.min(n))).product();
        prop_assert_eq!(on.len() as u64, expected);
        if p.pow(n) >= d.exponent() {
            prop_assert_eq!(on.len(), g.order());
        }
    }

    #[test]
    fn hom_application_respects_products(
        spec in spec_strategy(),
        i in any::<usize>(),
        a in any::<usize>(),
        b in any::<usize>(),
    ) {
        let g = make_group(spec).unwrap();
        let r = build_hom_ring(&g).unwrap();
        let elems = r.elements();
        let h = &elems[i % elems.len()];
        let (x, y) = ((a % g.order()) as u16, (b % g.order()) as u16);
        prop_assert_eq!(
            r.apply(h, g.mul(x, y)),
            g.mul(r.apply(h, x), r.apply(h, y))
        );
    }
}
