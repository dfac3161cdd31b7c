mod common;

use closure_lab_core::closure::sampling::{monomial_ideals, nested_pairs, SampleShape};
use closure_lab_core::closure::*;
use closure_lab_core::quotient::PresentedModule;
use closure_lab_core::rationality::{SemigroupIdeal, SemigroupRing, ToricVeronese};
use common::*;
use proptest::prelude::*;

fn plane_maximal() -> ClosureSpec {
    let r = ring(&["x", "y"], &[]);
    ClosureSpec::ModuleIdeal(id(&r, &["x", "y"]))
}

#[test]
fn maximal_ideal_closure_on_the_plane_satisfies_axioms() {
    let spec = plane_maximal();
    let r = spec.ring().unwrap().clone();
    let samples = monomial_ideals(&r, 5, 50, SampleShape::default()).unwrap();
    assert!(check_extension(&spec, &samples).unwrap().passed());
    assert!(check_idempotence(&spec, &samples).unwrap().passed());
    let pairs = nested_pairs(&r, 6, 50, SampleShape::default()).unwrap();
    assert!(check_order_preservation(&spec, &pairs).unwrap().passed());
}

#[test]
fn ideal_and_presented_paths_agree_on_samples() {
    let cases: [(&[&str], &[&str]); 3] =
        [(&["y^2"], &["x", "y"]), (&["x^2*y"], &["x^2", "y"]), (&["x^3+y^2"], &["x", "y"])];
    let mut count = 0;
    for (seed, (rels, b)) in cases.iter().enumerate() {
        let r = ring(&["x", "y"], rels);
        let spec = ClosureSpec::ModuleIdeal(id(&r, b));
        let presented = spec.presented();
        for i in monomial_ideals(&r, seed as u64, 8, SampleShape::default()).unwrap() {
            let a = closure_of_ideal(&i, &spec).unwrap();
            let c = closure_of_ideal(&i, &presented).unwrap();
            assert!(a.equals(&c).unwrap(), "{i}: {a} vs {c}");
            count += 1;
        }
    }
    assert!(count >= 20);
}

#[test]
fn closure_ignores_generating_sets() {
    let r = ring(&["x", "y"], &["x^2*y"]);
    let b1 = ClosureSpec::ModuleIdeal(id(&r, &["x^2", "y"]));
    let b2 = ClosureSpec::ModuleIdeal(id(&r, &["x^2+y", "y", "x^2*y+y^3"]));
    let i1 = id(&r, &["x+y"]);
    let i2 = id(&r, &["x+y", "x^2+x*y", "y^3"]);
    let base = closure_of_ideal(&i1, &b1).unwrap();
    for (i, b) in [(&i1, &b2), (&i2, &b1), (&i2, &b2)] {
        assert!(closure_of_ideal(i, b).unwrap().equals(&base).unwrap());
    }
    let m1 = PresentedModule::new(&r, vec![ps(&r, &["y"])]).unwrap();
    let m1_redundant = PresentedModule::new(&r, vec![ps(&r, &["y", "x*y", "0"])]).unwrap();
    assert!(closure_of_ideal(&i1, &ClosureSpec::ModulePresented(m1))
        .unwrap()
        .equals(&closure_of_ideal(&i1, &ClosureSpec::ModulePresented(m1_redundant)).unwrap())
        .unwrap());
}

#[test]
fn residuality_examples() {
    let r = ring(&["x", "y"], &[]);
    let spec = ClosureSpec::ModulePresented(PresentedModule::new(&r, vec![ps(&r, &["y"])]).unwrap());
    let i = id(&r, &["x+y", "x^2*y"]);
    assert!(check_residuality(&spec, &i, &id(&r, &["x^2*y"])).unwrap().passed());
    assert!(check_residuality(&spec, &i, &r.zero_ideal()).unwrap().passed());
    assert!(check_residuality(&ClosureSpec::Trivial, &i, &id(&r, &["x^2*y"])).unwrap().passed());
}

#[test]
fn colon_capturing_examples() {
    let plane = ring(&["x", "y"], &[]);
    assert!(check_colon_capturing(&ClosureSpec::Trivial, &plane, &ps(&plane, &["x", "y"]), 1).unwrap().passed());

    let bad = ring(&["x", "y"], &["x^2", "x*y"]);
    let report = check_colon_capturing(&ClosureSpec::Trivial, &bad, &ps(&bad, &["y"]), 0).unwrap();
    assert_eq!((report.verdict, report.witness.as_deref()), (Verdict::Fail, Some("x")));

    // (0) : x = (y) in k[x,y]/(y^2), and the closure of (0) for B = (x, y) is (y) as well
    let r = ring(&["x", "y"], &["y^2"]);
    let spec = ClosureSpec::ModuleIdeal(id(&r, &["x", "y"]));
    assert!(check_colon_capturing(&spec, &r, &ps(&r, &["x"]), 0).unwrap().passed());
}

/// Strong colon-capturing on the degree 3 Veronese, checked against the semigroup model.
#[test]
fn veronese_three_strong_colon_capturing() {
    let t = ToricVeronese::new(k(), 3).unwrap();
    let s = SemigroupRing::new(3).unwrap();
    let sop = t.parameters();
    let closure = |ideal: &SemigroupIdeal, i: u32| {
        let m = s.module_ideal(i).unwrap();
        ideal.product(&m).colon(&m)
    };
    for i in [1, 2] {
        let spec = t.spec(i).unwrap();
        for (tt, a) in [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)] {
            let lhs = s.ideal([(3 * tt, 0), (0, 3)]).unwrap().colon(&s.ideal([(3 * a, 0)]).unwrap());
            let expected = closure(&s.ideal([(3 * (tt - a), 0), (0, 3)]).unwrap(), i).contains_ideal(&lhs);
            let report = check_strong_cca(&spec, &t.ring, &sop, 2, tt, a).unwrap();
            assert_eq!(report.passed(), expected, "M_{i}, t = {tt}, a = {a}");
            if a == 0 {
                assert!(report.passed());
            }
        }
        let cl = closure(&s.ideal([(3, 0)]).unwrap(), i);
        let expected = cl.contains_ideal(&cl.colon(&s.ideal([(0, 3)]).unwrap()));
        assert_eq!(check_strong_ccb(&spec, &t.ring, &sop, 1).unwrap().passed(), expected, "M_{i}");
    }
}

#[test]
fn unit_closure_makes_ccb_vacuous() {
    // x acts as 1 on B = R/(x - 1), so (x)B = B
    let r = ring(&["x", "y"], &[]);
    let spec = ClosureSpec::ModulePresented(PresentedModule::new(&r, vec![ps(&r, &["x-1"])]).unwrap());
    assert!(closure_of_ideal(&id(&r, &["x"]), &spec).unwrap().is_unit());
    assert!(check_strong_ccb(&spec, &r, &ps(&r, &["x", "y"]), 1).unwrap().passed());
}

#[test]
fn residue_field_closure_is_the_maximal_ideal() {
    let r = ring(&["x", "y"], &["y^2"]);
    let spec = ClosureSpec::ModulePresented(PresentedModule::new(&r, vec![ps(&r, &["x", "y"])]).unwrap());
    assert!(closure_of_ideal(&id(&r, &["x"]), &spec).unwrap().equals(&r.maximal_ideal()).unwrap());
    let report = check_strong_ccb(&spec, &r, &ps(&r, &["x"]), 0).unwrap();
    assert_eq!((report.verdict, report.witness.as_deref()), (Verdict::Fail, Some("1")));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn extension_and_idempotence(seed in 0u64..10_000, which in 0usize..3) {
        let (rels, b): (&[&str], &[&str]) = [(&["y^2"][..], &["x", "y"][..]), (&["x^2*y"], &["x^2", "y"]), (&["x^3+y^2"], &["x", "y"])][which];
        let r = ring(&["x", "y"], rels);
        let spec = ClosureSpec::ModuleIdeal(id(&r, b));
        let i = monomial_ideals(&r, seed, 1, SampleShape::default()).unwrap().remove(0);
        let cl = closure_of_ideal(&i, &spec).unwrap();
        prop_assert!(cl.contains_ideal(&i).unwrap());
        prop_assert!(closure_of_ideal(&cl, &spec).unwrap().equals(&cl).unwrap());
    }

    #[test]
    fn ccb_implies_colon_capturing(seed in 0u64..10_000) {
        let r = ring(&["x", "y"], &["x^2*y"]);
        let specs = [
            ClosureSpec::Trivial,
            ClosureSpec::ModuleIdeal(id(&r, &["x^2", "y"])),
            ClosureSpec::ModulePresented(PresentedModule::new(&r, vec![ps(&r, &["y"])]).unwrap()),
        ];
        let spec = &specs[(seed % 3) as usize];
        let c = (seed / 3 % 5) as i64 + 1;
        let sop = vec![p(&r, &format!("x+{c}*y"))];
        let chain = check_colon_chain(spec, &r, &sop, 0).unwrap();
        prop_assert!(chain.passed());
        if check_strong_ccb(spec, &r, &sop, 0).unwrap().passed() {
            prop_assert!(check_colon_capturing(spec, &r, &sop, 0).unwrap().passed());
        }
    }
}
