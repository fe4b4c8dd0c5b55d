use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use subproj_core::homotopy::{hom_k, is_contractible, is_null_homotopic, mapping_cone};
use subproj_core::linalg::{howell_form, smith_normal_form};
use subproj_core::modules::{cokernel, hom_module, kernel};
use subproj_core::subprojectivity::{is_subprojective_complex, Route};
use subproj_core::{ChainMap, Complex, Matrix, ModuleMorphism, PresentedModule, Ring};

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-bound..=bound, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(BigInt::from).collect()))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c, 12))
}

/// `Z --a--> Z` in degrees 1, 0.
fn multiplication(ring: Ring, a: i64) -> Arc<Complex> {
    let r = PresentedModule::free(ring, 1);
    Arc::new(Complex::new(ring, 0, vec![r.clone(), r], vec![Matrix::scalar(1, a)]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_diagonalizes(a in any_matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn howell_form_is_invariant_under_row_operations(a in matrix(3, 3, 20), i in 0usize..3, j in 0usize..3, c in 0i64..6) {
        let ring = Ring::modulo(6).unwrap();
        let mut b = a.clone();
        if i != j {
            b.add_row_multiple(i, j, &BigInt::from(c));
        }
        b.swap_rows(0, 2);
        let b = b.vstack(&Matrix::zeros(1, 3)).reduce(ring);
        prop_assert_eq!(howell_form(&a.reduce(ring), 6).form, howell_form(&b, 6).form);
    }

    #[test]
    fn kernel_and_cokernel_are_exact(a in matrix(2, 3, 6)) {
        let ring = Ring::Integers;
        let f = ModuleMorphism::new(
            Arc::new(PresentedModule::free(ring, 3)),
            Arc::new(PresentedModule::free(ring, 2)),
            a,
        ).unwrap();
        let (_, mu) = kernel(&f);
        prop_assert!(f.compose(&mu).unwrap().is_zero());
        prop_assert!(mu.is_mono());
        let (_, eps) = cokernel(&f);
        prop_assert!(eps.compose(&f).unwrap().is_zero());
        prop_assert!(eps.is_epi());
    }

    #[test]
    fn hom_between_cyclic_groups_has_gcd_order(a in 1i64..12, b in 1i64..12) {
        let ring = Ring::Integers;
        let m = Arc::new(PresentedModule::cyclic(ring, a));
        let n = Arc::new(PresentedModule::cyclic(ring, b));
        prop_assert_eq!(hom_module(&m, &n).module.order(), Some(BigInt::from(a.gcd(&b))));
    }

    #[test]
    fn homk_from_a_sphere_is_homology(a in -6i64..=6, n in -1i64..=2) {
        let ring = Ring::Integers;
        let x = multiplication(ring, a);
        let s = Arc::new(Complex::sphere(&PresentedModule::free(ring, 1), n));
        let h = hom_k(&s, &x, 0).unwrap();
        prop_assert!(h.module.is_isomorphic(&x.homology(n).unwrap().module));
    }

    #[test]
    fn shifting_moves_homology(a in -6i64..=6, k in -2i64..=2) {
        let x = multiplication(Ring::Integers, a);
        let y = x.shift(k);
        for n in -1..=2 {
            let lhs = y.homology(n + k).unwrap().module;
            let rhs = x.homology(n).unwrap().module;
            prop_assert!(lhs.is_isomorphic(&rhs));
        }
    }

    #[test]
    fn multiplication_is_null_homotopic_on_discs(c in -5i64..=5, m in 2u64..=9) {
        let ring = Ring::modulo(m).unwrap();
        let d = Arc::new(Complex::disc(&PresentedModule::free(ring, 1), 0));
        let f = ChainMap::identity(&d).scale(&BigInt::from(c));
        let s = is_null_homotopic(&f).unwrap();
        prop_assert!(s.is_some());
        s.unwrap().check(&f).unwrap();
    }
}

#[test]
fn discs_are_contractible_and_spheres_are_not() {
    for ring in [Ring::Integers, Ring::modulo(4).unwrap()] {
        let t = PresentedModule::cyclic(ring, 2);
        assert!(is_contractible(&Arc::new(Complex::disc(&t, 3))).unwrap().is_some());
        assert!(is_contractible(&Arc::new(Complex::sphere(&t, 0))).unwrap().is_none());
    }
}

#[test]
fn cone_of_the_identity_is_contractible() {
    for a in [0, 2, 3] {
        let x = multiplication(Ring::Integers, a);
        let c = mapping_cone(&ChainMap::identity(&x)).unwrap();
        assert!(c.projection.compose(&c.inclusion).unwrap().is_zero());
        assert!(c.projection.is_epi());
        assert!(is_contractible(&c.cone).unwrap().is_some(), "a = {a}");
    }
}

#[test]
fn yes_yes_no_on_the_short_exact_sequence() {
    let r = PresentedModule::free(Ring::Integers, 1);
    let m = Arc::new(Complex::sphere(&r, 0));
    for route in Route::ALL {
        for (n, want) in [
            (Complex::disc(&r, 0), true),
            (Complex::sphere(&r, 1), true),
            (Complex::sphere(&r, 0), false),
        ] {
            let n = Arc::new(n);
            let cert = is_subprojective_complex(&m, &n, route).unwrap();
            assert_eq!(cert.verdict, want, "{route}");
            assert!(cert.check(&m, &n).unwrap());
        }
    }
}

#[test]
fn torsion_disc_is_outside_its_own_domain() {
    let t = PresentedModule::cyclic(Ring::Integers, 2);
    let d = Arc::new(Complex::disc(&t, 0));
    let cert = is_subprojective_complex(&d, &d, Route::Definition).unwrap();
    assert!(!cert.verdict);
    assert!(hom_k(&d, &d, 0).unwrap().module.is_zero());
    assert!(is_subprojective_complex(&d, &d, Route::HomKVanishing).is_err());
}
