mod common;

use closure_lab_core::closure::{closure_of_ideal, ClosureSpec};
use closure_lab_core::poly::{parse_polynomial, PolyRing};
use closure_lab_core::rationality::*;
use common::*;

type Exp = (u32, u32);

fn divides(a: Exp, b: Exp) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Exponents of all semigroup monomials of degree `k d` for `k <= max_k`.
fn semigroup_monomials(d: u32, max_k: u32) -> Vec<Exp> {
    (0..=max_k).flat_map(|k| (0..=k * d).map(move |b| (k * d - b, b))).collect()
}

fn in_span(gens: &[Exp], e: Exp) -> bool {
    gens.iter().any(|&g| divides(g, e))
}

/// `I_i` and the generators of `(x^d, y^d) I_i`, written out directly.
fn brute_products(d: u32, i: u32) -> (Vec<Exp>, Vec<Exp>) {
    let ii: Vec<Exp> = (0..=i).map(|j| (d - j, j)).collect();
    let prod = [(d, 0), (0, d)].iter().flat_map(|a| ii.iter().map(move |b| (a.0 + b.0, a.1 + b.1))).collect();
    (ii, prod)
}

/// Membership of `w` in `(I I_i : I_i)` by multiplying out.
fn brute_in_closure(d: u32, i: u32, w: Exp) -> bool {
    let (ii, prod) = brute_products(d, i);
    ii.iter().all(|g| in_span(&prod, (w.0 + g.0, w.1 + g.1)))
}

#[test]
fn veronese_closed_exactly_below_top_module() {
    for d in 1..=8 {
        for i in 0..d {
            // M_0 = R is free, which also covers d = 1
            assert_eq!(veronese_rationality(d, i).unwrap().closed, i + 2 <= d || i == 0, "d = {d}, i = {i}");
        }
    }
}

#[test]
fn semigroup_closure_matches_brute_force() {
    for d in 1..=6 {
        for i in 0..d {
            let cl = veronese::veronese_closure(d, i).unwrap();
            for w in semigroup_monomials(d, 4) {
                assert_eq!(cl.contains(w), brute_in_closure(d, i, w), "d = {d}, i = {i}, w = {w:?}");
            }
        }
    }
}

/// Contrapositive of the cancellation lemma: outside `I`, multiplying by `I_i` stays outside `I I_i`.
#[test]
fn cancellation_lemma_exhaustive() {
    for d in 2..=5 {
        let ideal = [(d, 0), (0, d)];
        for i in 0..=d - 2 {
            let (ii, prod) = brute_products(d, i);
            for w in semigroup_monomials(d, 3) {
                if in_span(&ideal, w) {
                    continue;
                }
                let escapes = ii.iter().any(|g| !in_span(&prod, (w.0 + g.0, w.1 + g.1)));
                assert!(escapes, "d = {d}, i = {i}, w = {w:?}");
            }
        }
    }
}

#[test]
fn semigroup_and_toric_paths_agree() {
    for d in [2, 3] {
        let toric = ToricVeronese::new(k(), d).unwrap();
        for i in 0..d {
            let semigroup = toric.lift_ideal(&veronese::veronese_closure(d, i).unwrap()).unwrap();
            let grobner = toric.closure(i).unwrap();
            assert!(semigroup.equals(&grobner).unwrap(), "d = {d}, i = {i}: {semigroup} vs {grobner}");
        }
    }
}

#[test]
fn veronese_three_power_family() {
    let toric = ToricVeronese::new(k(), 3).unwrap();
    let s = SemigroupRing::new(3).unwrap();
    for (i, expected) in [(1, true), (2, false)] {
        let fam = check_power_family_closed(&toric.ring, &toric.spec(i).unwrap(), &toric.parameters(), 3).unwrap();
        let m = s.module_ideal(i).unwrap();
        for (t, closed) in fam {
            let it = s.ideal([(3 * t, 0), (0, 3 * t)]).unwrap();
            assert_eq!(closed, it.product(&m).colon(&m).equals(&it), "M_{i}, t = {t}");
            assert_eq!(closed, expected, "M_{i}, t = {t}");
        }
    }
}

#[test]
fn display_identity_for_small_degrees() {
    for d in [3, 4] {
        assert!(veronese_product_display(d).unwrap());
        let toric = ToricVeronese::new(k(), d).unwrap();
        let top = toric.module_ideal(d - 1).unwrap();
        let params = toric.ring.ideal(toric.parameters()).unwrap();
        assert!(params.product(&top).unwrap().equals(&toric.ring.maximal_ideal().product(&top).unwrap()).unwrap());
    }
}

#[test]
fn veronese_witnesses_reverify() {
    for d in 2..=6 {
        let v = veronese_rationality(d, d - 1).unwrap();
        let w = v.witness.as_deref().expect("non-closed verdict carries a witness");
        let plane = PolyRing::with_vars(k(), &["x", "y"]);
        let m = parse_polynomial(&plane, w).unwrap().leading_monomial().unwrap().clone();
        let e = (m.exponents()[0], m.exponents()[1]);
        assert!(brute_in_closure(d, d - 1, e));
        assert!(!in_span(&[(d, 0), (0, d)], e));
        assert!(v.witness_membership_certificate.is_some());
    }
}

#[test]
fn hypersurface_witnesses_reverify() {
    let cases: Vec<(&[&str], &[&str], &str)> =
        vec![(&["y^2"], &["x^3", "y"], "x"), (&["x^3+y^2"], &["x", "y"], "x"), (&["x^7+y^2"], &["x^3", "y"], "x")];
    for (rels, b, sop) in cases {
        let r = ring(&["x", "y"], rels);
        let bi = id(&r, b);
        let v = is_cl_rational(&r, &ClosureSpec::ModuleIdeal(bi.clone()), &ps(&r, &[sop])).unwrap();
        assert!(!v.closed);
        let w = p(&r, v.witness.as_deref().unwrap());
        let ideal = id(&r, &[sop]);
        assert!(!ideal.contains(&w).unwrap());
        let ib = ideal.product(&bi).unwrap();
        for g in bi.generators() {
            assert!(ib.contains(&(&w * &g)).unwrap());
        }
    }
}

#[test]
fn trivial_closure_is_rational_on_valid_parameters() {
    let cases: Vec<(&[&str], &[&str], Vec<&[&str]>)> = vec![
        (&["x", "y"], &["x^2*y"], vec![&["x+y"], &["x-y"], &["x^2+y"]]),
        (&["x", "y"], &["y^2"], vec![&["x"], &["x+y"], &["x^3"]]),
        (&["x", "y"], &[], vec![&["x", "y"], &["x^2", "y^3"], &["x+y", "x-y"]]),
        (&["x", "y", "z"], &["z^2-x^2-y^2"], vec![&["x", "y"], &["x+2*z", "y"]]),
    ];
    for (vars, rels, sops) in cases {
        let r = ring(vars, rels);
        for sop in sops {
            let sop = ps(&r, sop);
            assert!(is_system_of_parameters(&sop, &r).unwrap());
            assert!(is_cl_rational(&r, &ClosureSpec::Trivial, &sop).unwrap().closed);
            let fam = check_power_family_closed(&r, &ClosureSpec::Trivial, &sop, 4).unwrap();
            assert!(fam.iter().all(|(_, c)| *c));
        }
    }
}

/// In `k[x,y]/(y^2)` every ideal in the sample is monomial, so the closure for `B = (x, y)`
/// and the colons can be computed term by term on exponent pairs.
#[test]
fn test_ideal_sample_matches_monomial_oracle() {
    let r = ring(&["x", "y"], &["y^2"]);
    let spec = ClosureSpec::ModuleIdeal(id(&r, &["x", "y"]));
    let sample_src: [&[&str]; 3] = [&["x"], &["x^2"], &["x", "y"]];
    let sample: Vec<_> = sample_src.iter().map(|g| id(&r, g)).collect();
    let got = finitistic_test_ideal_sample(&r, &spec, &sample).unwrap();
    assert!(got.over_approximation);

    const BOUND: u32 = 6;
    let alive = |e: Exp| e.1 < 2;
    let monomials: Vec<Exp> = (0..=BOUND).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
    let member = |gens: &[Exp], e: Exp| !alive(e) || in_span(gens, e);
    let mut oracle: Vec<Exp> = monomials.clone();
    for src in sample_src {
        let gens: Vec<Exp> = src
            .iter()
            .map(|s| {
                let m = p(&r, s);
                let e = m.leading_monomial().unwrap().exponents().to_vec();
                (e[0], e[1])
            })
            .collect();
        let ib: Vec<Exp> = gens.iter().flat_map(|g| [(g.0 + 1, g.1), (g.0, g.1 + 1)]).collect();
        let cl: Vec<Exp> =
            monomials.iter().copied().filter(|&w| member(&ib, (w.0 + 1, w.1)) && member(&ib, (w.0, w.1 + 1))).collect();
        oracle.retain(|&w| cl.iter().all(|c| member(&gens, (w.0 + c.0, w.1 + c.1))));
    }
    for &(a, b) in &monomials {
        if a + b > BOUND - 2 {
            continue;
        }
        let m = p(&r, &format!("x^{a}*y^{b}"));
        assert_eq!(got.ideal.contains(&m).unwrap(), oracle.contains(&(a, b)), "x^{a}*y^{b}");
    }
}

#[test]
fn closure_contains_input_for_reproduction_rings() {
    let r = ring(&["x", "y"], &["x^5+y^2"]);
    for i in 1..=2 {
        let spec = ClosureSpec::ModuleIdeal(id(&r, &[&format!("x^{i}"), "y"]));
        let cl = closure_of_ideal(&id(&r, &["x"]), &spec).unwrap();
        assert!(cl.contains(&p(&r, "y")).unwrap());
        assert!(cl.contains(&p(&r, "x")).unwrap());
    }
}
