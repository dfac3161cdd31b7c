mod common;

use closure_lab_core::poly::Ideal;
use closure_lab_core::quotient::{FreeModuleElement, PresentedModule, Submodule};
use common::*;
use proptest::prelude::*;

#[test]
fn lifting_examples() {
    let r = ring(&["x", "y"], &["x^2*y"]);
    let i = id(&r, &["x+y"]);
    let expected = Ideal::new(r.ambient(), ps(&r, &["x+y", "x^2*y"])).unwrap();
    assert!(i.lifted().equals(&expected).unwrap());
    assert!(r.ideal(vec![]).unwrap().lifted().equals(r.defining()).unwrap());
    assert!(id(&r, &["1"]).is_unit());
}

#[test]
fn square_zero_product_contains_xn_y() {
    let r = ring(&["x", "y"], &["y^2"]);
    for n in 1..=5 {
        let prod = id(&r, &["x"]).product(&id(&r, &[&format!("x^{n}"), "y"])).unwrap();
        let expected = Ideal::new(r.ambient(), ps(&r, &[&format!("x^{}", n + 1), "x*y", "y^2"])).unwrap();
        assert!(prod.lifted().equals(&expected).unwrap());
        assert!(prod.contains(&p(&r, &format!("x^{n}*y"))).unwrap());
    }
}

#[test]
fn nodal_colon_recovers_x_squared() {
    let r = ring(&["x", "y"], &["x^2*y"]);
    let b = id(&r, &["x^2"]);
    let i = id(&r, &["x+y"]);
    assert!(i.product(&b).unwrap().colon(&b).unwrap().contains(&p(&r, "x^2")).unwrap());
    assert!(i.colon(&id(&r, &["x^2+x*y"])).unwrap().is_unit());
}

#[test]
fn module_membership_examples() {
    let r = ring(&["x", "y", "z"], &["z^2-x^2-y^2"]);
    let e = |c: &[&str]| FreeModuleElement::new(&r, ps(&r, c)).unwrap();
    let full = Submodule::new(&r, 2, vec![e(&["1", "0"]), e(&["0", "1"])]).unwrap();
    assert!(full.contains(&e(&["x*y-3", "z^5"])).unwrap());
    let cyclic = Submodule::new(&r, 1, vec![e(&["x"])]).unwrap();
    assert!(!cyclic.contains(&e(&["y"])).unwrap());
    assert!(cyclic.colon_ideal(&e(&["1"])).unwrap().equals(&id(&r, &["x"])).unwrap());
    assert!(cyclic.colon_ideal(&e(&["x*y"])).unwrap().is_unit());
    assert!(cyclic.colon_ideal(&e(&["0"])).unwrap().is_unit());

    let p_mat = PresentedModule::new(&r, vec![ps(&r, &["z-x", "-y"]), ps(&r, &["-y", "z+x"])]).unwrap();
    let n = Submodule::ideal_multiple(&id(&r, &["x", "y"]), 2).sum(&p_mat.relations()).unwrap();
    assert!(n.contains(&e(&["z", "0"])).unwrap());
    assert!(n.colon_ideal(&e(&["1", "0"])).unwrap().contains(&p(&r, "z")).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_preserves_membership(f in arb_poly(&ring(&["x", "y"], &["x^2*y"]), 2, 4, 5)) {
        let r = ring(&["x", "y"], &["x^2*y"]);
        for gens in [&["x+y"][..], &["x^2", "y^3"], &["x*y"]] {
            let i = id(&r, gens);
            prop_assert_eq!(i.contains(&f).unwrap(), i.contains(&r.reduce(&f)).unwrap());
        }
    }

    #[test]
    fn colon_times_element_lands_in_submodule(
        a in arb_poly(&ring(&["x", "y"], &["y^2"]), 2, 2, 3),
        b in arb_poly(&ring(&["x", "y"], &["y^2"]), 2, 2, 3),
        c in arb_poly(&ring(&["x", "y"], &["y^2"]), 2, 2, 3),
    ) {
        let r = ring(&["x", "y"], &["y^2"]);
        let x = p(&r, "x");
        let n = Submodule::new(&r, 2, vec![
            FreeModuleElement::new(&r, vec![a.clone(), b.clone()]).unwrap(),
            FreeModuleElement::new(&r, vec![x.clone(), c.clone()]).unwrap(),
        ]).unwrap();
        let m = FreeModuleElement::new(&r, vec![b, c]).unwrap();
        let colon = n.colon_ideal(&m).unwrap();
        for g in colon.generators() {
            prop_assert!(n.contains(&m.scale(&g)).unwrap());
        }
    }

    #[test]
    fn rank_one_submodules_match_ideals(
        gens in prop::collection::vec(arb_monomial(&ring(&["x", "y"], &["x^3"]), 2, 3), 1..4),
        m in arb_monomial(&ring(&["x", "y"], &["x^3"]), 2, 3),
    ) {
        let r = ring(&["x", "y"], &["x^3"]);
        let ideal = r.ideal(gens.clone()).unwrap();
        let elems = gens.iter().map(|g| FreeModuleElement::new(&r, vec![g.clone()]).unwrap()).collect();
        let sub = Submodule::new(&r, 1, elems).unwrap();
        let v = FreeModuleElement::new(&r, vec![m.clone()]).unwrap();
        prop_assert_eq!(sub.contains(&v).unwrap(), ideal.contains(&m).unwrap());
        if !r.is_zero_element(&m) {
            prop_assert!(sub.colon_ideal(&v).unwrap().equals(&ideal.colon_element(&m).unwrap()).unwrap());
        }
    }

    #[test]
    fn submodule_membership_ignores_generator_order(seed in 0u64..1000) {
        let r = ring(&["x", "y"], &["y^2"]);
        let e = |c: &[&str]| FreeModuleElement::new(&r, ps(&r, c)).unwrap();
        let mut gens = vec![e(&["x", "y"]), e(&["y", "0"]), e(&["x^2", "x*y+y"])];
        let v = e(&["x^2*y+x*y", "x*y"]);
        let before = Submodule::new(&r, 2, gens.clone()).unwrap().contains(&v).unwrap();
        gens.rotate_left((seed % 3) as usize);
        if seed % 2 == 0 {
            gens.reverse();
        }
        prop_assert_eq!(Submodule::new(&r, 2, gens).unwrap().contains(&v).unwrap(), before);
    }
}
