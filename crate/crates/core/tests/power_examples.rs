use sobriety::construct::homeomorphic;
use sobriety::enumerate::posets_up_to;
use sobriety::power::{
    filter_of_family, hoare, hoare_map_between, hofmann_mislove, irreducibility_transfer, phi, smyth, smyth_map,
    smyth_union, xi_embed, FamilyOp, FamilyResult, HoareFamily,
};
use sobriety::power::family_calculus;
use sobriety::{Bits, Caps, Error, FiniteSpace, SpaceMap};

fn caps() -> Caps {
    Caps::default()
}

fn ab() -> FiniteSpace {
    FiniteSpace::antichain(&["a", "b"])
}

#[test]
fn smyth_of_sierpinski() {
    let x = FiniteSpace::sierpinski();
    let s = smyth(&x, &caps()).unwrap();
    let sets: Vec<Vec<String>> = s.carrier().iter().map(|k| x.label_list(*k)).collect();
    assert_eq!(sets, vec![vec!["b"], vec!["a", "b"]]);
    let whole = s.index_of(x.full()).unwrap();
    let top = s.index_of(x.up_of_point(1)).unwrap();
    assert!(s.as_space().leq(whole, top));
    assert!(homeomorphic(s.as_space(), &x).is_some());
}

#[test]
fn smyth_of_antichain_and_point() {
    let x = ab();
    let s = smyth(&x, &caps()).unwrap();
    assert_eq!(s.len(), 3);
    let v = FiniteSpace::from_covers(vec!["m".into(), "l".into(), "r".into()], &[(0, 1), (0, 2)]).unwrap();
    assert!(homeomorphic(s.as_space(), &v).is_some());
    let p = FiniteSpace::one_point();
    assert_eq!(smyth(&p, &caps()).unwrap().len(), 1);
}

#[test]
fn xi_is_an_embedding() {
    for x in posets_up_to(4) {
        let (_, xi) = xi_embed(&x, &caps()).unwrap();
        assert!(xi.is_injective() && xi.is_order_embedding());
    }
}

#[test]
fn smyth_functor_examples() {
    let s = FiniteSpace::sierpinski();
    let id = smyth_map(&SpaceMap::identity(&s), &caps()).unwrap();
    assert!(id.assignment().iter().enumerate().all(|(i, j)| i == *j));
    let x = ab();
    let f = SpaceMap::from_labels(&x, &s, &[("a", "a"), ("b", "b")]).unwrap();
    let sx = smyth(&x, &caps()).unwrap();
    let sy = smyth(&s, &caps()).unwrap();
    let pf = sobriety::power::smyth_map_between(&sx, &sy, &f).unwrap();
    let both = sx.index_of(x.full()).unwrap();
    assert_eq!(sy.carrier()[pf.apply(both)], s.full());
}

#[test]
fn union_map_on_one_point() {
    let u = smyth_union(&FiniteSpace::one_point(), &caps()).unwrap();
    assert_eq!(u.double.len(), 1);
    assert_eq!(u.single.len(), 1);
    assert_eq!(u.map.assignment(), [0]);
}

#[test]
fn hoare_examples() {
    let s = FiniteSpace::sierpinski();
    let h = hoare(&s, &HoareFamily::IrrClosed, &caps()).unwrap();
    assert!(homeomorphic(h.as_space(), &s).is_some());
    let x = ab();
    let h = hoare(&x, &HoareFamily::AllClosed, &caps()).unwrap();
    assert_eq!(h.len(), 3);
    let sets: Vec<Vec<String>> = h.carrier().iter().map(|a| x.label_list(*a)).collect();
    assert_eq!(sets, vec![vec!["a"], vec!["b"], vec!["a", "b"]]);
    let both = h.index_of(x.full()).unwrap();
    assert!((0..3).all(|i| h.as_space().leq(i, both)));
    let p = FiniteSpace::one_point();
    assert_eq!(hoare(&p, &HoareFamily::AllClosed, &caps()).unwrap().len(), 1);
    assert!(matches!(hoare(&x, &HoareFamily::Custom(vec![Bits::EMPTY]), &caps()), Err(Error::EmptyMember)));
}

#[test]
fn hoare_functor_preserves_identity() {
    let d = FiniteSpace::diamond();
    let h = hoare(&d, &HoareFamily::AllClosed, &caps()).unwrap();
    let m = hoare_map_between(&h, &h, &SpaceMap::identity(&d)).unwrap();
    assert!(m.assignment().iter().enumerate().all(|(i, j)| i == *j));
}

#[test]
fn filters_from_families() {
    let x = ab();
    let fam: Vec<_> = (0..2).map(|i| x.up_point(i)).collect();
    assert!(matches!(filter_of_family(&x, &fam, &caps()), Err(Error::NotAFilter { .. })));
    let k = x.compact(x.full()).unwrap();
    assert_eq!(filter_of_family(&x, &[k], &caps()).unwrap(), phi(&x, &k, &caps()).unwrap());
}

#[test]
fn family_calculus_examples() {
    let c = FiniteSpace::chain(&["a", "b", "c"]);
    let fam = vec![c.up_point(0), c.up_point(1)];
    match family_calculus(&c, &fam, FamilyOp::Intersection, &caps()).unwrap() {
        FamilyResult::Set(s) => assert_eq!(s.bits(), c.up_of_point(1)),
        other => panic!("{other:?}"),
    }
    let x = ab();
    let fam = vec![x.up_point(0), x.up_point(1)];
    assert!(matches!(family_calculus(&x, &fam, FamilyOp::SupInK, &caps()), Err(Error::EmptyIntersection)));
    let d = FiniteSpace::diamond();
    for k in d.compact_sets(None).unwrap() {
        let k = d.compact(k).unwrap();
        let r = family_calculus(&d, &[k], FamilyOp::FourWayEquivalence, &caps()).unwrap();
        assert_eq!(r, FamilyResult::Conditions([true; 4]));
    }
}

#[test]
fn irreducibility_transfers_to_smyth() {
    for x in posets_up_to(4) {
        let s = smyth(&x, &caps()).unwrap();
        for a in sobriety::space::all_subsets(&x).filter(|a| !a.is_empty()) {
            let t = irreducibility_transfer(&s, a).unwrap();
            assert!(t[0] == t[1] && t[1] == t[2], "{t:?}");
        }
    }
}

#[test]
fn hofmann_mislove_small() {
    for x in posets_up_to(4) {
        assert!(hofmann_mislove(&x, &caps()).unwrap().bijective());
    }
}
