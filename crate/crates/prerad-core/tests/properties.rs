//! Randomized laws over small cyclic-ring modules: hom-set closure under
//! composition, the third isomorphism theorem, additivity of preradicals
//! over direct sums, and the trace criterion for class generation.

use prerad_core::bitset::ElemSet;
use prerad_core::hom::{find_isomorphism, hom_set};
use prerad_core::module::{closure, direct_sum, quotient, sub_as_module, FiniteModule, Submodule};
use prerad_core::prerad::{xi_contains, Preradical};
use prerad_core::ring::{make_ring, FiniteRing};
use proptest::prelude::*;
use std::sync::Arc;

fn divisors_gt1(n: usize) -> Vec<u32> {
    (2..=n as u32).filter(|d| n as u32 % d == 0).collect()
}

fn arb_ring() -> impl Strategy<Value = Arc<FiniteRing>> {
    prop::sample::select(vec![2usize, 4, 6, 8, 9, 12])
        .prop_map(|n| make_ring(&format!("zn:{n}")).unwrap())
}

/// A ring together with a diagonal module of order at most 64.
fn arb_module() -> impl Strategy<Value = (Arc<FiniteRing>, Arc<FiniteModule>)> {
    arb_ring().prop_flat_map(|r| {
        let ds = divisors_gt1(r.n);
        prop::collection::vec(prop::sample::select(ds), 1..=3)
            .prop_filter("order cap", |orders| {
                orders.iter().map(|&d| d as usize).product::<usize>() <= 64
            })
            .prop_map(move |orders| {
                let m = FiniteModule::diagonal_module(&r, orders).unwrap();
                (r.clone(), m)
            })
    })
}

fn arb_pair() -> impl Strategy<Value = (Arc<FiniteModule>, Arc<FiniteModule>)> {
    arb_ring().prop_flat_map(|r| {
        let mk = move |r: Arc<FiniteRing>| {
            let ds = divisors_gt1(r.n);
            prop::collection::vec(prop::sample::select(ds), 1..=2).prop_map(move |orders| {
                FiniteModule::diagonal_module(&r, orders).unwrap()
            })
        };
        (mk(r.clone()), mk(r))
    })
}

/// Random submodule: the closure of up to three random elements.
fn arb_sub(size: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..size as u32, 0..=3)
}

fn sub_in(m: &Arc<FiniteModule>, gens: &[u32]) -> Submodule {
    closure(m, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_sets_are_closed_under_composition(
        (a, b) in arb_pair(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let ab = hom_set(&a, &b);
        let ba = hom_set(&b, &a);
        prop_assume!(!ab.is_empty() && !ba.is_empty());
        let f = &ab[i.index(ab.len())];
        let g = &ba[j.index(ba.len())];
        let h = f.then(g).unwrap();
        let aa = hom_set(&a, &a);
        prop_assert!(
            aa.iter().any(|k| k.gen_images == h.gen_images),
            "composite not found among {} endomorphisms",
            aa.len()
        );
    }

    #[test]
    fn third_isomorphism_theorem(
        (_r, m) in arb_module(),
        g1 in arb_sub(64),
        g2 in arb_sub(64),
    ) {
        let gens1: Vec<u32> = g1.iter().map(|&x| x % m.size as u32).collect();
        let gens2: Vec<u32> = g2.iter().map(|&x| x % m.size as u32).collect();
        let n = sub_in(&m, &gens1);
        let mut both = gens1.clone();
        both.extend_from_slice(&gens2);
        let k = sub_in(&m, &both); // n <= k by construction

        let (mk, _) = quotient(&m, &k).unwrap();
        let (mn, proj_n) = quotient(&m, &n).unwrap();
        let kn_set: ElemSet = proj_n.push_set(&k.elems);
        let kn = prerad_core::module::submodule_from_set(&mn, kn_set).unwrap();
        let (mnkn, _) = quotient(&mn, &kn).unwrap();
        prop_assert!(
            find_isomorphism(&mk, &mnkn).is_some(),
            "(M/N)/(K/N) should be isomorphic to M/K"
        );
    }

    #[test]
    fn preradicals_are_additive_over_direct_sums((a, b) in arb_pair()) {
        prop_assume!(a.size * b.size <= 128);
        let (s, ia, ib) = direct_sum(&a, &b).unwrap();
        let r = a.ring.clone();
        let sigs = vec![
            Preradical::Rad,
            Preradical::Soc,
            Preradical::ideal_trad(r.clone(), r.ideal_closure(&[2 % r.n])).unwrap(),
            Preradical::trace(a.clone()),
            Preradical::reject(b.clone()),
        ];
        for sig in sigs {
            let vs = sig.eval(&s).unwrap();
            // the submodule sum of the two embedded values, not their union
            let gens: Vec<u32> = ia
                .push_set(&sig.eval(&a).unwrap().elems)
                .union(&ib.push_set(&sig.eval(&b).unwrap().elems))
                .iter()
                .map(|x| x as u32)
                .collect();
            let expected = closure(&s, &gens);
            prop_assert_eq!(
                vs.elems.clone(), expected.elems,
                "additivity for {:?}", sig
            );
        }
    }

    #[test]
    fn trace_criterion_matches_summed_images((m, k) in arb_pair()) {
        // independent re-computation: union the images of every morphism
        // M -> K and close; full iff a finite sum of copies of M surjects
        let mut gens: Vec<u32> = Vec::new();
        for f in hom_set(&m, &k) {
            for x in f.image_set().iter() {
                gens.push(x as u32);
            }
        }
        let generated = closure(&k, &gens);
        prop_assert_eq!(generated.is_full(&k), xi_contains(&m, &k).unwrap());
    }

    #[test]
    fn quotients_of_submodules_stay_inside_the_ring((_r, m) in arb_module(), g in arb_sub(64)) {
        let gens: Vec<u32> = g.iter().map(|&x| x % m.size as u32).collect();
        let s = sub_in(&m, &gens);
        let (sm, emb) = sub_as_module(&m, &s).unwrap();
        prop_assert_eq!(sm.size, s.len());
        prop_assert!(emb.is_injective());
        prop_assert_eq!(emb.image_set(), s.elems.clone());
    }
}
