mod common;

use common::*;
use proptest::prelude::*;
use rexspec::exactpoly::rational::{int, rat};
use rexspec::extension::{admissible_lists, Extension, ExtensionSpec};
use rexspec::super2d::{
    commutator_check, degeneracy_closed, integral_action_sq, k_eigenvalue, make_system, states, unirreps, zero_modes,
    Direction, Family, System2D,
};

fn single_extension_system() -> impl Strategy<Value = System2D> {
    let lists: Vec<Vec<u32>> = admissible_lists(5).into_iter().filter(|m| !m.is_empty()).collect();
    let alphas = vec![rat(7, 2), rat(11, 2), rat(25, 2)];
    (prop::sample::select(lists), 0usize..4, prop::sample::select(alphas)).prop_filter_map(
        "radial list inadmissible for this alpha",
        |(m, f, a)| {
            let radial = || Extension::new(ExtensionSpec::radial(m.clone(), a.clone())).ok();
            let sys = match f {
                0 => make_system(Family::A, lin(&m), lin(&[])),
                1 => make_system(Family::B, radial()?, lin(&[])),
                2 => make_system(Family::C, lin(&m), rad(&[], a.clone())),
                _ => make_system(Family::D, radial()?, rad(&[], a.clone())),
            };
            Some(sys.unwrap())
        },
    )
}

fn double_extension_system() -> impl Strategy<Value = System2D> {
    let seeds = vec![0u32, 2, 4];
    (prop::sample::select(seeds.clone()), prop::sample::select(seeds), 0usize..3).prop_map(|(m1, n1, f)| {
        let a = rat(15, 2);
        match f {
            0 => make_system(Family::E, lin(&[m1]), lin(&[n1])).unwrap(),
            1 => make_system(Family::F, rad(&[m1], a.clone()), rad(&[n1], a)).unwrap(),
            _ => make_system(Family::G, lin(&[m1]), rad(&[n1], a)).unwrap(),
        }
    })
}

fn any_system() -> impl Strategy<Value = System2D> {
    prop_oneof![single_extension_system(), double_extension_system()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_size_matches_closed_form(sys in any_system(), dn in 0i64..25) {
        let n = sys.min_level() + dn;
        prop_assert_eq!(states(&sys, n).len() as u64, degeneracy_closed(&sys, n).unwrap());
    }

    #[test]
    fn unirreps_cover_the_level(sys in any_system(), dn in 0i64..20) {
        let n = sys.min_level() + dn;
        let r = unirreps(&sys, n).unwrap();
        prop_assert_eq!(r.degeneracy, degeneracy_closed(&sys, n).unwrap());
        let (plus, minus) = zero_modes(&sys, n).unwrap();
        prop_assert_eq!(plus.len(), minus.len());
        prop_assert_eq!(r.unirrep_count, minus.len());
    }

    #[test]
    fn k_rises_by_one_under_i_plus(sys in any_system(), dn in 0i64..20) {
        let n = sys.min_level() + dn;
        for st in states(&sys, n) {
            let up = integral_action_sq(&sys, &st, Direction::Plus).unwrap();
            prop_assert!(up.amplitude_sq >= int(0));
            if let Some(t) = up.target {
                prop_assert_eq!(k_eigenvalue(&sys, &t).unwrap() - k_eigenvalue(&sys, &st).unwrap(), int(1));
                let back = integral_action_sq(&sys, &t, Direction::Minus).unwrap();
                prop_assert_eq!(back.target, Some(st));
                prop_assert_eq!(back.amplitude_sq, up.amplitude_sq);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn commutator_identity(sys in single_extension_system()) {
        let r = commutator_check(&sys, 12).unwrap();
        prop_assert!(r.product_identity);
    }
}
