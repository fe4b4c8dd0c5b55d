use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subproj_core::{Complex, Ring};
use subproj_harness::random::{random_chain_map, random_complex, random_exact_complex, random_null_homotopic};
use subproj_harness::TrialConfig;

fn rebuild(c: &Complex) -> Complex {
    let (lo, hi) = c.window();
    let modules = (lo..=hi).map(|k| c.module(k).as_ref().clone()).collect();
    let diffs = (lo + 1..=hi).map(|k| c.differential(k).matrix().clone()).collect();
    Complex::new(c.ring(), lo, modules, diffs).expect("generated complex revalidates")
}

#[test]
fn thousand_random_complexes_over_z4_validate() {
    let cfg = TrialConfig::new(Ring::IntegersMod(4), 1, 0).with_window(4);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let c = random_complex(&cfg, &mut rng).unwrap();
        assert!(c.hi() - c.lo() < 4);
        rebuild(&c);
    }
}

#[test]
fn exact_generator_is_exact() {
    for ring in [Ring::Integers, Ring::IntegersMod(4), Ring::IntegersMod(6)] {
        let cfg = TrialConfig::new(ring, 1, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let c = random_exact_complex(&cfg, &mut rng).unwrap();
            assert!(c.is_exact().unwrap(), "{ring}");
        }
    }
}

#[test]
fn zero_generators_give_zero_complexes() {
    let cfg = TrialConfig::new(Ring::Integers, 1, 0).with_generators(0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        assert!(random_complex(&cfg, &mut rng).unwrap().is_zero());
    }
}

#[test]
fn generated_maps_are_chain_maps_and_witnesses_check() {
    let cfg = TrialConfig::new(Ring::Integers, 1, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let x = Arc::new(random_complex(&cfg, &mut rng).unwrap());
        let y = Arc::new(random_complex(&cfg, &mut rng).unwrap());
        assert!(random_chain_map(&cfg, &mut rng, &x, &y).unwrap().verify());
        let (f, s) = random_null_homotopic(&cfg, &mut rng, &x, &y).unwrap();
        assert!(f.verify());
        s.check(&f).unwrap();
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let base = TrialConfig::new(Ring::Integers, 1, 0);
    assert!(base.clone().with_window(0).validate().is_err());
    assert!(base.clone().with_window(6).validate().is_err());
    assert!(base.clone().with_generators(4).validate().is_err());
    assert!(base.clone().with_entry_bound(0).validate().is_err());
    assert!(base.validate().is_ok());
}
