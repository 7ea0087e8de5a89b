use sobriety::space::all_subsets;
use sobriety::{Bits, Error, FamilyKind, FiniteSpace, OrderOp};

fn chain3() -> FiniteSpace {
    FiniteSpace::chain(&["a", "b", "c"])
}

fn ab() -> FiniteSpace {
    FiniteSpace::antichain(&["a", "b"])
}

fn labels(x: &FiniteSpace, b: Bits) -> Vec<String> {
    x.label_list(b)
}

#[test]
fn parse_covers_and_opens() {
    let x = FiniteSpace::parse(r#"{"points":["a","b"],"covers":[["a","b"]]}"#).unwrap();
    assert!(x.leq(0, 1) && !x.leq(1, 0));
    let y = FiniteSpace::parse(r#"{"points":["a","b"],"opens":[[],["b"],["a","b"]]}"#).unwrap();
    assert!(x.same_structure(&y));
    assert!(y.same_structure(&FiniteSpace::sierpinski()));
}

#[test]
fn indiscrete_is_not_t0() {
    let r = FiniteSpace::parse(r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#);
    assert!(matches!(r, Err(Error::NotT0(..))));
}

#[test]
fn malformed_descriptions() {
    assert!(matches!(FiniteSpace::parse("{"), Err(Error::Parse(_))));
    assert!(matches!(
        FiniteSpace::parse(r#"{"points":["a","a"],"covers":[]}"#),
        Err(Error::DuplicateLabel(_))
    ));
    assert!(matches!(
        FiniteSpace::parse(r#"{"points":["a"],"covers":[["a","z"]]}"#),
        Err(Error::UnknownLabel(_))
    ));
    // {a} and {b} open but not their union
    assert!(matches!(
        FiniteSpace::parse(r#"{"points":["a","b"],"opens":[[],["a"],["b"]]}"#),
        Err(Error::NotATopology(_))
    ));
}

#[test]
fn round_trip() {
    for x in sobriety::enumerate::posets_up_to(4) {
        let y = FiniteSpace::parse(&x.to_json()).unwrap();
        assert_eq!(x.to_description(), y.to_description());
        assert!(x.same_structure(&y));
    }
}

#[test]
fn closure_examples() {
    let s = FiniteSpace::sierpinski();
    let c = |x: &FiniteSpace, l: &[&str]| labels(x, x.closure(&x.set_of_labels(l).unwrap()).unwrap().bits());
    assert_eq!(c(&s, &["b"]), ["a", "b"]);
    assert_eq!(c(&s, &["a"]), ["a"]);
    let x = chain3();
    assert_eq!(c(&x, &["b"]), ["a", "b"]);
}

#[test]
fn saturation_examples() {
    let s = FiniteSpace::sierpinski();
    let sat = |x: &FiniteSpace, l: &[&str]| labels(x, x.saturation(&x.set_of_labels(l).unwrap()).unwrap().bits());
    assert_eq!(sat(&s, &["a"]), ["a", "b"]);
    assert_eq!(sat(&s, &["b"]), ["b"]);
    let d = FiniteSpace::diamond();
    assert_eq!(sat(&d, &["a"]), ["a", "top"]);
}

#[test]
fn order_calculus_examples() {
    let x = ab();
    let u = x.order_calculus(&x.set_of_labels(&["a", "b"]).unwrap(), OrderOp::UpperBounds).unwrap();
    assert!(u.is_empty());
    let d = FiniteSpace::diamond();
    let cut = d.order_calculus(&d.set_of_labels(&["a", "b"]).unwrap(), OrderOp::Cut).unwrap();
    assert_eq!(cut.bits(), d.full());
    let c = chain3();
    let m = c.order_calculus(&c.set_of_labels(&["a", "b"]).unwrap(), OrderOp::Maximals).unwrap();
    assert_eq!(labels(&c, m.bits()), ["b"]);
}

#[test]
fn directedness_examples() {
    let x = ab();
    assert!(!x.is_directed(&x.set_of_labels(&["a", "b"]).unwrap()).unwrap());
    let c = chain3();
    assert!(c.is_directed(&c.set_of_labels(&["a", "c"]).unwrap()).unwrap());
    let d = FiniteSpace::diamond();
    let core = d.chain_core(&d.set_of_labels(&["bot", "a", "top"]).unwrap()).unwrap();
    assert_eq!(labels(&d, core.bits()), ["top"]);
    assert!(matches!(x.chain_core(&x.set_of_labels(&["a", "b"]).unwrap()), Err(Error::NotDirected)));
}

#[test]
fn irreducibility_examples() {
    let s = FiniteSpace::sierpinski();
    let ps = s.set_of_labels(&["a", "b"]).unwrap();
    assert!(s.is_irreducible(&ps).unwrap());
    assert!(s.is_irreducible_by_definition(&ps, 12).unwrap());
    let x = ab();
    let pa = x.set_of_labels(&["a", "b"]).unwrap();
    assert!(!x.is_irreducible(&pa).unwrap());
    assert!(!x.is_irreducible_by_definition(&pa, 12).unwrap());
    for x in sobriety::enumerate::posets_up_to(4) {
        for i in 0..x.len() {
            assert!(x.is_irreducible(&x.set(Bits::single(i)).unwrap()).unwrap());
        }
    }
}

#[test]
fn irreducibility_paths_agree() {
    for x in sobriety::enumerate::posets_up_to(4) {
        for a in all_subsets(&x).filter(|a| !a.is_empty()) {
            let p = x.set(a).unwrap();
            assert_eq!(x.is_irreducible(&p).unwrap(), x.is_irreducible_by_definition(&p, 12).unwrap());
        }
    }
}

#[test]
fn family_enumeration_examples() {
    let s = FiniteSpace::sierpinski();
    let fam = |x: &FiniteSpace, k| -> Vec<Vec<String>> {
        x.enumerate_families(k, 12).unwrap().iter().map(|p| labels(x, p.bits())).collect()
    };
    assert_eq!(fam(&s, FamilyKind::IrrClosed), vec![vec!["a"], vec!["a", "b"]]);
    assert_eq!(fam(&s, FamilyKind::CompactSaturated), vec![vec!["b"], vec!["a", "b"]]);
    assert_eq!(fam(&ab(), FamilyKind::IrrClosed), vec![vec!["a"], vec!["b"]]);
}

#[test]
fn minimal_points_examples() {
    let d = FiniteSpace::diamond();
    let k = d.compact_of_labels(&["a", "b", "top"]).unwrap();
    assert_eq!(labels(&d, d.minimal_points(&k).unwrap().bits()), ["a", "b"]);
    let c = chain3();
    let k = c.compact_of_labels(&["b", "c"]).unwrap();
    assert_eq!(labels(&c, c.minimal_points(&k).unwrap().bits()), ["b"]);
    for i in 0..d.len() {
        assert_eq!(d.minimal_points(&d.up_point(i)).unwrap().bits(), Bits::single(i));
    }
}

#[test]
fn down_meet_examples() {
    let d = FiniteSpace::diamond();
    let a = d.index_of("a").unwrap();
    let b = d.index_of("b").unwrap();
    assert!(d.down_meet_closed(&d.up_point(a), &d.down_point(b)).unwrap().is_empty());
    let c = chain3();
    let b = c.index_of("b").unwrap();
    let r = c.down_meet_closed(&c.up_point(b), &c.down_point(b)).unwrap();
    assert_eq!(labels(&c, r.bits()), ["a", "b"]);
    let all = c.compact(c.full()).unwrap();
    assert_eq!(c.down_meet_closed(&all, &c.closed(c.full()).unwrap()).unwrap().bits(), c.full());
}

#[test]
fn typed_subsets_reject_wrong_shapes() {
    let s = FiniteSpace::sierpinski();
    assert!(matches!(s.closed_of_labels(&["b"]), Err(Error::NotClosed)));
    assert!(matches!(s.compact_of_labels(&["a"]), Err(Error::NotCompactSaturated)));
    let other = FiniteSpace::sierpinski();
    let p = other.set_of_labels(&["a"]).unwrap();
    assert!(matches!(s.closure(&p), Err(Error::SpaceMismatch)));
}

#[test]
fn dot_output() {
    let d = FiniteSpace::diamond().to_dot("d", &[("top".into(), vec!["x".into()])]);
    assert!(d.starts_with("digraph \"d\""));
    assert_eq!(d.matches("->").count(), 4);
    assert!(d.contains("top = {x}\\l"));
}
