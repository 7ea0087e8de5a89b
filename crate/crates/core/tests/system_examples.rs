use sobriety::system::{
    h_family_member, h_member, m_family, property_m_instance, property_q_instance, rudin_minimal, scott_h_continuous,
    scott_h_open, search_property, witness_for, PropertyKind,
};
use sobriety::{Caps, CompactSat, FiniteSpace, SpaceMap};

fn chain3() -> FiniteSpace {
    FiniteSpace::chain(&["a", "b", "c"])
}

fn ab() -> FiniteSpace {
    FiniteSpace::antichain(&["a", "b"])
}

fn sys(s: &str) -> sobriety::system::SubsetSystemId {
    s.parse().unwrap()
}

fn ups(x: &FiniteSpace, l: &[&str]) -> Vec<CompactSat> {
    l.iter().map(|p| x.up_point(x.index_of(p).unwrap())).collect()
}

#[test]
fn membership() {
    let c = chain3();
    assert!(h_member(sys("D"), &c, &c.set_of_labels(&["a", "c"]).unwrap()).unwrap());
    let x = ab();
    assert!(!h_member(sys("R"), &x, &x.set_of_labels(&["a", "b"]).unwrap()).unwrap());
    let s = FiniteSpace::sierpinski();
    let a = s.set_of_labels(&["a", "b"]).unwrap();
    assert!(h_member(sys("D^R"), &s, &a).unwrap());
    let w = witness_for(sys("D^R"), &s, &a).unwrap().unwrap();
    assert_eq!(w.family, ups(&s, &["b"]));
    assert_eq!(s.label_list(w.minimal_set.bits()), ["a", "b"]);
    assert!(w.recheck(sys("D^R"), &s, &Caps::default()).unwrap());
}

#[test]
fn singletons_belong_to_every_system() {
    let d = FiniteSpace::diamond();
    for h in sobriety::system::SubsetSystemId::all_base() {
        for i in 0..d.len() {
            assert!(h_member(h, &d, &d.set(sobriety::Bits::single(i)).unwrap()).unwrap());
        }
    }
}

#[test]
fn family_membership() {
    let c = chain3();
    assert!(h_family_member(sys("C"), &c, &ups(&c, &["a", "b"])).unwrap());
    let x = ab();
    assert!(!h_family_member(sys("D"), &x, &ups(&x, &["a", "b"])).unwrap());
    let s = FiniteSpace::sierpinski();
    assert!(h_family_member(sys("S"), &s, &ups(&s, &["b"])).unwrap());
}

#[test]
fn minimal_closed_sets_meeting_a_family() {
    let caps = Caps::default();
    let c = chain3();
    let m = m_family(&c, &ups(&c, &["b"]), &caps).unwrap();
    assert_eq!(m.iter().map(|a| c.label_list(a.bits())).collect::<Vec<_>>(), vec![vec!["a", "b"]]);
    let x = ab();
    let m = m_family(&x, &ups(&x, &["a", "b"]), &caps).unwrap();
    assert_eq!(m.iter().map(|a| x.label_list(a.bits())).collect::<Vec<_>>(), vec![vec!["a", "b"]]);
}

#[test]
fn rudin_descent_examples() {
    let c = chain3();
    let all = c.closed(c.full()).unwrap();
    let r = rudin_minimal(&c, &ups(&c, &["b"]), &all).unwrap();
    assert_eq!(c.label_list(r.bits()), ["a", "b"]);
    let s = FiniteSpace::sierpinski();
    let r = rudin_minimal(&s, &ups(&s, &["b"]), &s.closed(s.full()).unwrap()).unwrap();
    assert_eq!(s.label_list(r.bits()), ["a", "b"]);
    let d = FiniteSpace::diamond();
    for i in 0..d.len() {
        let r = rudin_minimal(&d, &[d.up_point(i)], &d.down_point(i)).unwrap();
        assert_eq!(r, d.down_point(i));
    }
}

#[test]
fn property_m_examples() {
    let c = chain3();
    let b = c.index_of("b").unwrap();
    assert!(property_m_instance(sys("S"), &c, &ups(&c, &["b"]), &c.down_point(b)).unwrap());
    let caps = Caps::default();
    for h in ["R", "D"] {
        let r = search_property(sys(h), PropertyKind::M, 11, 200, 6, &caps).unwrap();
        assert!(r.counterexample.is_none());
    }
}

#[test]
fn property_q_examples() {
    let caps = Caps::default();
    let c = chain3();
    let ab_closed = c.closed_of_labels(&["a", "b"]).unwrap();
    assert!(property_q_instance(sys("S"), &c, &ups(&c, &["b"]), &ab_closed, &caps).unwrap());
    let x = ab();
    let all = x.closed(x.full()).unwrap();
    assert!(!property_q_instance(sys("S"), &x, &ups(&x, &["a", "b"]), &all, &caps).unwrap());
    let r = search_property(sys("R"), PropertyKind::Q, 12, 200, 6, &caps).unwrap();
    assert!(r.counterexample.is_none());
}

#[test]
fn scott_open_examples() {
    let caps = Caps::default();
    let s = FiniteSpace::sierpinski();
    assert!(scott_h_open(sys("D"), &s, &s.set_of_labels(&["b"]).unwrap(), &caps).unwrap());
    assert!(!scott_h_open(sys("D"), &s, &s.set_of_labels(&["a"]).unwrap(), &caps).unwrap());
    assert!(scott_h_continuous(sys("D"), &SpaceMap::identity(&chain3()), &caps).unwrap());
}
