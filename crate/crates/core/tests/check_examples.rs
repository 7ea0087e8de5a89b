use sobriety::check::{check, crosscheck_h_sober, crosscheck_super, h_consonance, Checker, EvidenceKind, Fact, Property};
use sobriety::enumerate::posets_up_to;
use sobriety::system::SubsetSystemId;
use sobriety::{Caps, Error, FiniteSpace};

fn caps() -> Caps {
    Caps::default()
}

fn sys(s: &str) -> SubsetSystemId {
    s.parse().unwrap()
}

fn ab() -> FiniteSpace {
    FiniteSpace::antichain(&["a", "b"])
}

#[test]
fn sierpinski_is_sober_with_generic_points() {
    let x = FiniteSpace::sierpinski();
    let v = check(&x, Property::Sober, None, &caps()).unwrap();
    assert!(v.holds && v.characterizations_agreed);
    assert_eq!(v.evidence.kind, EvidenceKind::Certificate);
    let generic: Vec<(Vec<String>, String)> = v
        .evidence
        .facts
        .iter()
        .filter_map(|f| match f {
            Fact::GenericPoint { set, point, .. } => Some((set.clone(), point.clone())),
            _ => None,
        })
        .collect();
    assert!(generic.contains(&(vec!["a".into()], "a".into())));
    assert!(generic.contains(&(vec!["a".into(), "b".into()], "b".into())));
    assert!(v.recheck(&x, &caps()).unwrap());
}

#[test]
fn antichain_is_a_d_space() {
    let v = check(&ab(), Property::DSpace, None, &caps()).unwrap();
    assert!(v.holds && v.characterizations_agreed);
}

#[test]
fn finite_spaces_are_well_filtered() {
    for x in posets_up_to(5) {
        let c = Checker::new(&x, &caps());
        for p in [Property::WellFiltered, Property::OmegaWellFiltered, Property::Sober, Property::DSpace] {
            let v = c.check(p, None).unwrap();
            assert!(v.holds && v.characterizations_agreed && v.characterizations.len() >= 2);
        }
    }
}

#[test]
fn crosschecks_on_sierpinski() {
    let x = FiniteSpace::sierpinski();
    for h in ["D", "R"] {
        let r = crosscheck_h_sober(&x, sys(h), &caps()).unwrap();
        assert!(r.agreed && r.conditions.len() >= 5);
        assert!(r.conditions.iter().all(|c| c.value));
    }
    let r = crosscheck_super(&x, sys("D"), &caps()).unwrap();
    assert!(r.agreed && r.conditions.iter().all(|c| c.value));
    let r = crosscheck_super(&ab(), sys("R"), &caps()).unwrap();
    assert!(r.agreed && r.conditions.iter().all(|c| c.value));
    let r = crosscheck_super(&FiniteSpace::diamond(), sys("C"), &caps()).unwrap();
    assert!(r.agreed && r.conditions.iter().all(|c| c.value));
}

#[test]
fn crosschecks_agree_on_small_posets() {
    for x in posets_up_to(4) {
        let c = Checker::new(&x, &caps());
        for h in SubsetSystemId::all_base() {
            assert!(c.crosscheck_h_sober(h).unwrap().agreed);
            assert!(c.crosscheck_super(h).unwrap().agreed);
        }
        assert!(c.heckmann_keimel().unwrap().iter().all(|(_, v)| *v));
    }
}

#[test]
fn consonance_examples() {
    assert!(h_consonance(&FiniteSpace::sierpinski(), sys("S"), &caps()).unwrap().holds);
    assert!(h_consonance(&FiniteSpace::one_point(), sys("R"), &caps()).unwrap().holds);
    for x in posets_up_to(5) {
        assert!(h_consonance(&x, sys("S"), &caps()).unwrap().holds);
    }
}

#[test]
fn h_sober_examples() {
    let v = check(&ab(), Property::HSober, Some(sys("R")), &caps()).unwrap();
    assert!(v.holds && v.characterizations_agreed);
    let v = check(&FiniteSpace::diamond(), Property::HSober, Some(sys("D")), &caps()).unwrap();
    assert!(v.holds && v.characterizations_agreed);
    let v = check(&FiniteSpace::chain(&["a", "b", "c"]), Property::HSober, Some(sys("C")), &caps()).unwrap();
    assert!(v.holds && v.characterizations_agreed);
}

#[test]
fn system_is_required() {
    let r = check(&ab(), Property::HSober, None, &caps());
    assert!(matches!(r, Err(Error::MissingSystem(_))));
    assert!(matches!("nonsense".parse::<Property>(), Err(Error::UnknownProperty(_))));
}
