//! Staircase-based counts against direct enumeration of lattice points.

mod common;

use common::*;
use ghk_core::families::{a_singularity, quadrant, veronese};
use ghk_core::invariants::{ghk_function, h0_powers, keylem_split, within_convergence_bound};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn big(v: &[usize]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn minimal(cone: &BruteCone, pts: &[P]) -> Vec<P> {
    let mut out: Vec<P> = pts
        .iter()
        .copied()
        .filter(|&g| !pts.iter().any(|&h| h != g && cone.contains((g.0 - h.0, g.1 - h.1))))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn sorted(gens: &[ghk_core::geometry::LatticePoint]) -> Vec<P> {
    let mut v: Vec<P> = gens.iter().map(from_pt).collect();
    v.sort_unstable();
    v
}

#[test]
fn veronese_3_1_enumerated() {
    let cone = BruteCone::new((1, 0), (1, 3));
    let gens = [(1, 0), (1, 1)];
    assert_eq!(gap_points(&cone, &gens, thresholds(&cone, &gens)), vec![]);
    let f: Vec<usize> = (0..3).map(|n| gap_count(&cone, &scale(&gens, 1 << n))).collect();
    assert_eq!(f, vec![0, 1, 5]);
    let inst = veronese(3, 1).unwrap();
    assert_eq!(ghk_function(&inst.ideal, 2, 2).unwrap(), big(&f));
    // The lone gap point of I^[2].
    assert_eq!(gap_points(&cone, &scale(&gens, 2), thresholds(&cone, &scale(&gens, 2))), vec![(2, 1)]);
}

#[test]
fn quadrant_box_counts() {
    let cone = BruteCone::new((1, 0), (0, 1));
    let gens = [(2, 0), (0, 3)];
    let inst = quadrant(gens.iter().copied().map(pt).collect()).unwrap();
    let f: Vec<usize> = (0..4).map(|n| gap_count(&cone, &scale(&gens, 1 << n))).collect();
    assert_eq!(f, vec![6, 24, 96, 384]);
    assert_eq!(ghk_function(&inst.ideal, 2, 3).unwrap(), big(&f));
    let h0: Vec<usize> = (1..=5).map(|n| gap_count(&cone, &multiset_sums(&gens, n))).collect();
    assert_eq!(h0_powers(&inst.ideal, 5), big(&h0));
    assert_eq!(h0, vec![6, 18, 36, 60, 90]);
}

#[test]
fn a_3_1_keylem_at_q3() {
    let inst = a_singularity(3, 1).unwrap();
    let cone = BruteCone::new((0, 1), (3, -1));
    let gens = [(3, -1), (1, 0)];
    let frob = scale(&gens, 3);
    let ord = multiset_sums(&gens, 3);
    let total = gap_count(&cone, &frob);
    let sym_vs_ord = gap_count(&cone, &ord);
    let ord_vs_frob = colength(&cone, &ord, &frob);
    assert_eq!((total, sym_vs_ord, ord_vs_frob), (6, 3, 3));
    let split = keylem_split(&inst.ideal, 3).unwrap();
    assert_eq!(
        (split.total_gap, split.sym_vs_ord, split.ord_vs_frob),
        (total.into(), sym_vs_ord.into(), ord_vs_frob.into())
    );
    assert_eq!(ghk_function(&inst.ideal, 3, 1).unwrap()[1], BigInt::from(total));
}

#[test]
fn veronese_3_1_h0_powers_enumerated() {
    let cone = BruteCone::new((1, 0), (1, 3));
    let gens = [(1, 0), (1, 1)];
    let h0: Vec<usize> = (1..=8).map(|n| gap_count(&cone, &multiset_sums(&gens, n))).collect();
    assert_eq!(&h0[..4], &[0, 0, 1, 2]);
    assert_eq!(h0_powers(&veronese(3, 1).unwrap().ideal, 8), big(&h0));
    // n = 3: the gap is the single point u = (2, 0).
    assert_eq!(gap_points(&cone, &multiset_sums(&gens, 3), thresholds(&cone, &multiset_sums(&gens, 3))), vec![(2, 0)]);
}

#[test]
fn random_counts_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..60 {
        let (cone, gens) = random_instance(&mut rng, 4, 6, 4);
        let ideal = ideal_of(&cone, &gens);

        assert_eq!(ideal.gap_length(), BigInt::from(gap_count(&cone, &gens)), "{cone:?} {gens:?}");

        let f = ghk_function(&ideal, 2, 2).unwrap();
        for (n, fi) in f.iter().enumerate() {
            assert_eq!(fi, &BigInt::from(gap_count(&cone, &scale(&gens, 1 << n))), "{cone:?} {gens:?} n={n}");
        }

        let h0 = h0_powers(&ideal, 3);
        for (i, hi) in h0.iter().enumerate() {
            let sums = multiset_sums(&gens, i as u32 + 1);
            assert_eq!(hi, &BigInt::from(gap_count(&cone, &sums)), "{cone:?} {gens:?} n={}", i + 1);
        }
    }
}

#[test]
fn ordinary_powers_match_multiset_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..60 {
        let (cone, gens) = random_instance(&mut rng, 5, 8, 5);
        let ideal = ideal_of(&cone, &gens);
        for n in 1..=4u32 {
            let expect = minimal(&cone, &multiset_sums(&gens, n));
            let got = sorted(ideal.ordinary_power(n as u64).unwrap().generators());
            assert_eq!(got, expect, "{cone:?} {gens:?} n={n}");
        }
    }
}

#[test]
fn saturation_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..60 {
        let (cone, gens) = random_instance(&mut rng, 4, 6, 4);
        let ideal = ideal_of(&cone, &gens);
        let mut all = gens.clone();
        all.extend(gap_points(&cone, &gens, thresholds(&cone, &gens)));
        assert_eq!(sorted(ideal.saturation().generators()), minimal(&cone, &all), "{cone:?} {gens:?}");
        assert_eq!(ideal.is_saturated(), gap_count(&cone, &gens) == 0);
    }
}

#[test]
fn random_keylem_components_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut checked = 0;
    while checked < 30 {
        let (cone, gens) = random_instance(&mut rng, 4, 6, 4);
        let ideal = ideal_of(&cone, &gens).saturation();
        let gens: Vec<P> = ideal.generators().iter().map(from_pt).collect();
        for q in [2u32, 3] {
            let frob = scale(&gens, q as i64);
            let ord = multiset_sums(&gens, q);
            let split = keylem_split(&ideal, q as u64).unwrap();
            assert_eq!(split.total_gap, BigInt::from(gap_count(&cone, &frob)));
            assert_eq!(split.sym_vs_ord, BigInt::from(gap_count(&cone, &ord)));
            assert_eq!(split.ord_vs_frob, BigInt::from(colength(&cone, &ord, &frob)));
        }
        checked += 1;
    }
}

#[test]
fn enumerated_frobenius_counts_within_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..20 {
        let (cone, gens) = random_instance(&mut rng, 3, 4, 3);
        let ideal = ideal_of(&cone, &gens);
        for q in [4i64, 8, 16] {
            let f = BigInt::from(gap_count(&cone, &scale(&gens, q)));
            assert!(within_convergence_bound(&ideal, &f, &BigInt::from(q)), "{cone:?} {gens:?} q={q}");
        }
    }
}
