//! Randomized invariants across sampled carriers: the subset-algebra
//! law table, agreement of the periodicity-based deciders with plain
//! sweeps, the hull axioms, the raw-multiplier sandwich, quotient
//! soundness and separation certificates.

use konvex_core::convexity::{
    decide_convex, decide_konvex, is_f_convex, is_n_convex, is_n_konvex, n_convex_witness,
    n_konvex_witness,
};
use konvex_core::hull::{check_cancellation, hull_fixedpoint, hull_formula, quotient, sandwich};
use konvex_core::sample::{random_subset, rng_from_seed, sample_carrier};
use konvex_core::separation::{are_f_disjoint, stone_separate, verify_certificate};
use konvex_core::setalg::check_laws;
use konvex_core::{Elem, Multipliers, Subset};
use proptest::prelude::*;

fn small_multiplier() -> impl Strategy<Value = u64> {
    1u64..=6
}

fn multiplier_set(seed: u64) -> Multipliers {
    match seed % 4 {
        0 => Multipliers::All,
        1 => Multipliers::generated(&[2]).unwrap(),
        2 => Multipliers::generated(&[2, 3]).unwrap(),
        _ => Multipliers::generated(&[3, 5]).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn law_table_has_no_violations(seed in any::<u64>(), k in small_multiplier(), n in small_multiplier()) {
        let s = sample_carrier(seed, 8);
        let mut rng = rng_from_seed(seed ^ 0x9e37_79b9);
        let a = random_subset(&s, &mut rng);
        let b = random_subset(&s, &mut rng);
        let report = check_laws(&s, k, n, &a, &b).unwrap();
        prop_assert!(report.all_hold(), "{}: {:?}", s.name(), report.violations().collect::<Vec<_>>());
    }

    #[test]
    fn deciders_agree_with_sweeps(seed in any::<u64>()) {
        let s = sample_carrier(seed, 7);
        let mut rng = rng_from_seed(seed.rotate_left(17));
        let a = random_subset(&s, &mut rng);
        let f = multiplier_set(seed);

        let dc = decide_convex(&s, &f, &a).unwrap();
        let dk = decide_konvex(&s, &f, &a).unwrap();
        let ns = f.members_up_to((dc.tail + dc.cycle).max(dk.tail + dk.cycle).max(12) as u64);
        let sweep_c = ns.iter().copied().find(|&n| !is_n_convex(&s, n, &a).unwrap());
        let sweep_k = ns.iter().copied().find(|&n| !is_n_konvex(&s, n, &a).unwrap());
        prop_assert_eq!(dc.holds(), sweep_c.is_none(), "convex on {}", s.name());
        prop_assert_eq!(dk.holds(), sweep_k.is_none(), "konvex on {}", s.name());
        if let (Some(w), Multipliers::All) = (dc.witness_n, &f) {
            prop_assert_eq!(sweep_c.unwrap(), w);
        }
        if let (Some(w), Multipliers::All) = (dk.witness_n, &f) {
            prop_assert_eq!(sweep_k.unwrap(), w);
        }
    }

    #[test]
    fn hull_axioms(seed in any::<u64>()) {
        let s = sample_carrier(seed, 7);
        let mut rng = rng_from_seed(seed.rotate_right(9));
        let a = random_subset(&s, &mut rng);
        let extra = random_subset(&s, &mut rng);
        let f = multiplier_set(seed >> 2);

        let h = hull_formula(&s, &f, &a).unwrap().set;
        let fp = hull_fixedpoint(&s, &f, &a).unwrap();
        prop_assert_eq!(&h, &fp.set, "routes disagree on {}", s.name());
        prop_assert!(fp.rounds <= 2, "{} rounds on {}", fp.rounds, s.name());
        prop_assert!(a.is_subset_of(&h).unwrap());
        prop_assert!(is_f_convex(&s, &f, &h).unwrap(), "hull not convex on {}", s.name());
        prop_assert_eq!(&hull_formula(&s, &f, &h).unwrap().set, &h);

        let wider = a.union(&extra).unwrap();
        let hw = hull_formula(&s, &f, &wider).unwrap().set;
        prop_assert!(h.is_subset_of(&hw).unwrap(), "not monotone on {}", s.name());
    }

    #[test]
    fn hull_is_least_convex_superset(seed in any::<u64>()) {
        let s = sample_carrier(seed, 6);
        let mut rng = rng_from_seed(seed.wrapping_mul(0xa24b_aed4_963e_e407));
        let a = random_subset(&s, &mut rng);
        let f = multiplier_set(seed >> 3);
        let h = hull_formula(&s, &f, &a).unwrap().set;
        for x in h.difference(&a).unwrap().elems() {
            let smaller = h.difference(&s.singleton(x).unwrap()).unwrap();
            prop_assert!(
                !is_f_convex(&s, &f, &smaller).unwrap(),
                "dropping {} from the hull keeps it convex on {}",
                s.label(x),
                s.name()
            );
        }
    }

    #[test]
    fn hull_grows_with_the_multiplier_set(seed in any::<u64>()) {
        let s = sample_carrier(seed, 7);
        let mut rng = rng_from_seed(!seed);
        let a = random_subset(&s, &mut rng);
        let two = hull_formula(&s, &Multipliers::generated(&[2]).unwrap(), &a).unwrap().set;
        let two_three = hull_formula(&s, &Multipliers::generated(&[2, 3]).unwrap(), &a).unwrap().set;
        let all = hull_formula(&s, &Multipliers::All, &a).unwrap().set;
        prop_assert!(two.is_subset_of(&two_three).unwrap());
        prop_assert!(two_three.is_subset_of(&all).unwrap());
    }

    #[test]
    fn raw_multiplier_sandwich(seed in any::<u64>(), n1 in 2u64..=6, n2 in 2u64..=6) {
        let s = sample_carrier(seed, 6);
        let mut rng = rng_from_seed(seed ^ 0x5555_5555);
        let a = random_subset(&s, &mut rng);
        let sw = sandwich(&s, &[n1, n2], &a).unwrap();
        prop_assert!(sw.inclusions_hold(&a).unwrap(), "{}", s.name());
    }

    #[test]
    fn quotient_is_sound(seed in any::<u64>()) {
        let s = sample_carrier(seed, 6);
        let f = multiplier_set(seed >> 4);
        let q = quotient(&s, &f).unwrap();
        let order = s.order().unwrap();
        let covered: usize = q.classes.iter().map(Subset::len).sum();
        prop_assert_eq!(covered, order);
        let idx = |e: Elem| match e {
            Elem::Idx(i) => i as usize,
            _ => unreachable!(),
        };
        for x in 0..order as u32 {
            for y in 0..order as u32 {
                let below = q.projection[idx(s.add(Elem::Idx(x), Elem::Idx(y)).unwrap())];
                let above = idx(q
                    .quotient
                    .add(Elem::Idx(q.projection[x as usize]), Elem::Idx(q.projection[y as usize]))
                    .unwrap());
                prop_assert_eq!(below as usize, above, "projection breaks + on {}", s.name());
            }
        }
        prop_assert!(check_cancellation(&s, &f, &q).unwrap().is_empty(), "{}", s.name());
    }

    #[test]
    fn separation_certificates_verify(seed in any::<u64>()) {
        let s = sample_carrier(seed, 6);
        let mut rng = rng_from_seed(seed.wrapping_add(101));
        let a0 = random_subset(&s, &mut rng);
        let b0 = random_subset(&s, &mut rng).difference(&a0).unwrap();
        if are_f_disjoint(&s, &Multipliers::All, &a0, &b0).unwrap().disjoint() {
            let cert = stone_separate(&s, &a0, &b0).unwrap();
            prop_assert!(cert.convex_a && cert.convex_b, "{}", s.name());
            let bad = verify_certificate(&s, &cert, &a0, &b0).unwrap();
            prop_assert!(bad.is_empty(), "{}: {:?}", s.name(), bad);
            if cert.carrier_konvex {
                prop_assert_eq!(cert.konvex_a, Some(true));
                prop_assert_eq!(cert.konvex_b, Some(true));
            }
        }
    }

    #[test]
    fn convexity_witnesses_are_genuine(seed in any::<u64>(), n in small_multiplier()) {
        let s = sample_carrier(seed, 7);
        let mut rng = rng_from_seed(seed ^ 0xdead_beef);
        let a = random_subset(&s, &mut rng);
        if let Some(w) = n_convex_witness(&s, n, &a).unwrap() {
            prop_assert!(!a.contains(w));
        }
        if let Some(w) = n_konvex_witness(&s, n, &a).unwrap() {
            // the witness is an n-fold sum that is not an n-th multiple
            let power = konvex_core::setalg::sumset_power(&s, n, &a).unwrap();
            let scaled = konvex_core::setalg::scale(&s, n, &a).unwrap();
            prop_assert!(power.contains(w) && !scaled.contains(w));
        }
    }
}
