use divclass::generic::group_order;
use divclass::group::{
    conjugacy_profile, generate, quotient_profile, ClassicalSetting, Family, FiniteGroup,
    GroupSpec, GroupTable, Sign, DEFAULT_ORDER_CAP,
};
use divclass::Error;

fn spec(f: Family, sign: Option<Sign>, n: usize, q: u64) -> GroupSpec {
    GroupSpec::with_sign(f, sign, n, q).unwrap()
}

fn table(s: &GroupSpec) -> GroupTable {
    generate(s, DEFAULT_ORDER_CAP).unwrap()
}

#[test]
fn orders_match_formulas() {
    use Family::*;
    let cases = [
        (spec(SL, None, 2, 3), 24),
        (spec(GL, None, 2, 3), 48),
        (spec(SL, None, 2, 5), 120),
        (spec(SL, None, 3, 3), 5616),
        (spec(GL, None, 3, 3), 11232),
        (spec(Sp, None, 4, 3), 51840),
        (spec(SU, None, 3, 3), 6048),
        (spec(GU, None, 2, 3), 96),
        (spec(SU, None, 2, 5), 120),
        (spec(GO, None, 3, 3), 48),
        (spec(SO, None, 3, 3), 24),
        (spec(Omega, None, 3, 3), 12),
        (spec(Omega, None, 3, 5), 60),
        (spec(GO, Some(Sign::Plus), 4, 3), 1152),
        (spec(GO, Some(Sign::Minus), 4, 3), 1440),
        (spec(Omega, Some(Sign::Minus), 4, 3), 360),
        (spec(Omega, None, 5, 3), 25920),
    ];
    for (s, expected) in cases {
        assert_eq!(group_order(&s).unwrap(), expected, "{s}");
        let t = table(&s);
        assert_eq!(t.order() as u128, expected, "{s}");
        t.verify(7).unwrap();
    }
}

#[test]
fn members_satisfy_the_defining_conditions() {
    for s in [
        spec(Family::Sp, None, 4, 3),
        spec(Family::SU, None, 3, 3),
        spec(Family::Omega, None, 5, 3),
    ] {
        let t = table(&s);
        let setting = ClassicalSetting::new(&s).unwrap();
        for i in (0..t.order()).step_by(97) {
            assert!(setting.contains(t.matrix(i)), "{s}");
        }
    }
}

#[test]
fn spinor_norm_splits_so() {
    // SO(3,3) ≅ S4 maps onto F*/F*² with kernel Ω ≅ A4
    let so = table(&spec(Family::SO, None, 3, 3));
    let omega = ClassicalSetting::new(&spec(Family::Omega, None, 3, 3)).unwrap();
    let inside = (0..so.order())
        .filter(|&i| omega.contains(so.matrix(i)))
        .count();
    assert_eq!(inside, 12);
}

#[test]
fn cap_is_reported() {
    let s = spec(Family::SL, None, 3, 5);
    match generate(&s, 1000) {
        Err(Error::CapExceeded { needed, cap, .. }) => {
            assert_eq!(needed, 372_000);
            assert_eq!(cap, 1000);
        }
        other => panic!("expected a cap error, got {other:?}"),
    }
}

#[test]
fn sl23_profile() {
    let t = table(&spec(Family::SL, None, 2, 3));
    let p = conjugacy_profile(&t);
    assert_eq!(p.center, 2);
    assert_eq!(p.class_sizes(), vec![4, 6]);
    p.check_invariants().unwrap();
    let q = quotient_profile(&t);
    assert_eq!(q.order, 12);
    assert_eq!(q.class_sizes(), vec![3, 4]);
}

#[test]
fn psl25_profile() {
    let t = table(&spec(Family::SL, None, 2, 5));
    let q = quotient_profile(&t);
    assert_eq!(q.order, 60);
    assert_eq!(q.center, 1);
    assert_eq!(q.class_sizes(), vec![12, 15, 20]);
    assert_eq!(q.class_count(), 4);
    assert_eq!(q.divgraph().shape().to_string(), "3K1");
}

#[test]
fn psl33_sizes_match_atlas() {
    // L3(3) centralizers 48, 54, 9, 8, 6, 8, 8, 13; no class has centralizer 4
    let t = table(&spec(Family::SL, None, 3, 3));
    let p = conjugacy_profile(&t);
    assert_eq!(p.center, 1);
    assert_eq!(p.cent_orders(), vec![6, 8, 9, 13, 48, 54]);
    assert_eq!(p.class_sizes(), vec![104, 117, 432, 624, 702, 936]);
    assert_eq!(p.class_count(), 11);
    let g = p.divgraph();
    assert!(g.is_isolated(432));
}

#[test]
fn cache_round_trip() {
    let t = table(&spec(Family::SU, None, 3, 3));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("su33.bin");
    t.write_cache(&path).unwrap();
    let back = GroupTable::read_cache(&path).unwrap();
    assert_eq!(back.keys(), t.keys());
    assert_eq!(back.spec(), t.spec());
    assert_eq!(back.generators(), t.generators());
    std::fs::write(&path, b"junk").unwrap();
    assert!(GroupTable::read_cache(&path).is_err());
}
