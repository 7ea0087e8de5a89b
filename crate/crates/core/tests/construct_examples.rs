use sobriety::construct::{
    continuous_maps, equalizer, function_space, homeomorphic, product, product_preservation, reflect, reflection_functor,
    retract_verify, universal_property_verify, ReflectionKind,
};
use sobriety::system::SubsetSystemId;
use sobriety::{Bits, Caps, FiniteSpace, SpaceMap};

fn caps() -> Caps {
    Caps::default()
}

fn sys(s: &str) -> SubsetSystemId {
    s.parse().unwrap()
}

fn ab() -> FiniteSpace {
    FiniteSpace::antichain(&["a", "b"])
}

fn chain2() -> FiniteSpace {
    FiniteSpace::chain(&["0", "1"])
}

fn chain3() -> FiniteSpace {
    FiniteSpace::chain(&["a", "b", "c"])
}

#[test]
fn sierpinski_squared() {
    let s = FiniteSpace::sierpinski();
    let p = product(&[s.clone(), s.clone()], &caps()).unwrap();
    assert_eq!(p.space.len(), 4);
    assert!(homeomorphic(&p.space, &FiniteSpace::diamond()).is_some());
    let i = |l: &str| p.space.index_of(l).unwrap();
    assert!(p.space.leq(i("(a,a)"), i("(a,b)")) && p.space.leq(i("(b,a)"), i("(b,b)")));
    assert!(!p.space.leq(i("(a,b)"), i("(b,a)")));
}

#[test]
fn product_with_a_point() {
    let d = FiniteSpace::diamond();
    let p = product(&[d.clone(), FiniteSpace::one_point()], &caps()).unwrap();
    assert!(homeomorphic(&p.space, &d).is_some());
}

#[test]
fn rectangle_irreducibility() {
    let p = product(&[ab(), chain2()], &caps()).unwrap();
    let a = p.rectangle(&[ab().full(), Bits::single(0)]);
    assert_eq!(p.space.label_list(a), ["(a,0)", "(b,0)"]);
    assert!(!p.space.irreducible_bits(a));
    assert!(!ab().irreducible_bits(p.projections[0].image(a)));
}

#[test]
fn counting_continuous_maps() {
    let s = FiniteSpace::sierpinski();
    assert_eq!(continuous_maps(&s, &s, &caps()).unwrap().len(), 3);
    let d = FiniteSpace::diamond();
    assert_eq!(continuous_maps(&FiniteSpace::one_point(), &d, &caps()).unwrap().len(), 4);
    assert_eq!(continuous_maps(&ab(), &s, &caps()).unwrap().len(), 4);
}

#[test]
fn function_space_of_sierpinski_is_a_chain() {
    let s = FiniteSpace::sierpinski();
    let f = function_space(&s, &s, &caps()).unwrap();
    assert!(homeomorphic(&f.space, &chain3()).is_some());
}

#[test]
fn equalizer_examples() {
    let s = FiniteSpace::sierpinski();
    let id = SpaceMap::identity(&s);
    assert_eq!(equalizer(&id, &id, &caps()).unwrap().agreement, s.full());
    let cb = SpaceMap::constant(&s, &s, 1);
    let e = equalizer(&id, &cb, &caps()).unwrap();
    assert_eq!(s.label_list(e.agreement), ["b"]);
    let t = ab();
    let f = SpaceMap::constant(&s, &t, 0);
    let g = SpaceMap::constant(&s, &t, 1);
    assert!(equalizer(&f, &g, &caps()).unwrap().is_empty());
}

#[test]
fn retract_examples() {
    let x = chain3();
    let y = FiniteSpace::sierpinski();
    let s = SpaceMap::from_labels(&y, &x, &[("a", "a"), ("b", "c")]).unwrap();
    let r = SpaceMap::from_labels(&x, &y, &[("a", "a"), ("b", "a"), ("c", "b")]).unwrap();
    assert!(retract_verify(&r, &s, &caps()).unwrap());
    let bad = SpaceMap::constant(&x, &y, 0);
    assert!(!retract_verify(&bad, &s, &caps()).unwrap());
    let id = SpaceMap::identity(&x);
    assert!(retract_verify(&id, &id, &caps()).unwrap());
}

#[test]
fn universal_property_examples() {
    let cases = [(FiniteSpace::sierpinski(), 2), (ab(), 3), (FiniteSpace::one_point(), 4)];
    for (x, bound) in cases {
        for kind in [ReflectionKind::Sobrification, ReflectionKind::HSobrification, ReflectionKind::SuperHSobrification] {
            let r = reflect(&x, sys("D"), kind, &caps()).unwrap();
            assert!(homeomorphic(r.reflected(), &x).is_some());
            let u = universal_property_verify(&r, bound, &caps()).unwrap();
            assert!(u.unique && u.failures.is_empty() && u.maps > 0);
        }
    }
}

#[test]
fn reflection_functor_examples() {
    let s = FiniteSpace::sierpinski();
    let (_, _, fh) = reflection_functor(&SpaceMap::identity(&s), sys("D"), ReflectionKind::HSobrification, &caps()).unwrap();
    assert!(fh.assignment().iter().enumerate().all(|(i, j)| i == *j));
    let x = chain3();
    let f = SpaceMap::from_labels(&x, &s, &[("a", "a"), ("b", "a"), ("c", "b")]).unwrap();
    let (rx, ry, fh) = reflection_functor(&f, sys("D"), ReflectionKind::HSobrification, &caps()).unwrap();
    let down_b = rx.hoare.index_of(x.down_of_point(1)).unwrap();
    assert_eq!(ry.hoare.carrier()[fh.apply(down_b)], s.down_of_point(0));
}

#[test]
fn product_preservation_examples() {
    let s = FiniteSpace::sierpinski();
    let r = product_preservation(&s, &s, sys("R"), ReflectionKind::HSobrification, &caps()).unwrap();
    assert_eq!(r.reflected_points, 4);
    let r = product_preservation(&ab(), &chain2(), sys("D"), ReflectionKind::SuperHSobrification, &caps()).unwrap();
    assert_eq!(r.reflected_points, 4);
    let p = FiniteSpace::one_point();
    let r = product_preservation(&p, &p, sys("D"), ReflectionKind::HSobrification, &caps()).unwrap();
    assert_eq!(r.reflected_points, 1);
}

#[test]
fn homeomorphism_search() {
    let s = FiniteSpace::sierpinski();
    let iso = homeomorphic(&s, &chain2()).unwrap();
    assert_eq!(iso.describe(), vec![("a".to_string(), "0".to_string()), ("b".to_string(), "1".to_string())]);
    assert!(homeomorphic(&chain2(), &ab()).is_none());
    let c4 = FiniteSpace::chain(&["1", "2", "3", "4"]);
    assert!(homeomorphic(&FiniteSpace::diamond(), &c4).is_none());
}
