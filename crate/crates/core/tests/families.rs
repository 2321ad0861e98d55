use maxmatch_core::families::{self, extremal_family};
use maxmatch_core::tree::is_spider;
use maxmatch_core::{canonical_code, psi, BigUint, FamilyError, FamilySpec};

fn ceil_half(n: usize) -> BigUint {
    BigUint::from(n.div_ceil(2))
}

#[test]
fn star_of_triples_closed_form() {
    for n in 1..=50u32 {
        let inst = families::star_of_triples(n as usize).unwrap();
        let three = BigUint::from(3u32);
        let expected = three.pow(n) + BigUint::from(n) * three.pow(n - 1);
        assert_eq!(inst.tree.order(), 4 * n as usize + 1);
        assert_eq!(inst.expected_psi.as_ref(), Some(&expected));
        assert_eq!(psi(&inst.tree), expected, "n = {n}");
    }
}

#[test]
fn small_subdivisions_hit_the_bound() {
    for m in 3..=1000 {
        for t in 0..=2 {
            let inst = families::subdivided_star(m, t).unwrap();
            let n = 2 * m - t + 1;
            assert_eq!(inst.tree.order(), n);
            assert_eq!(psi(&inst.tree), ceil_half(n), "m = {m}, t = {t}");
        }
    }
}

#[test]
fn heavier_subdivisions_exceed_the_bound() {
    for m in 4..=12 {
        for t in 3..m {
            let inst = families::subdivided_star(m, t).unwrap();
            assert!(inst.expected_psi.is_none());
            assert!(
                psi(&inst.tree) > ceil_half(inst.tree.order()),
                "m = {m}, t = {t}"
            );
        }
    }
}

#[test]
fn extremal_family_hits_the_bound() {
    for n in 2..=200 {
        let members = extremal_family(n).unwrap();
        assert!(!members.is_empty());
        let expected_len = if n % 2 == 1 && n >= 5 { 2 } else { 1 };
        assert_eq!(members.len(), expected_len, "n = {n}");
        for inst in members {
            assert_eq!(inst.tree.order(), n);
            assert_eq!(psi(&inst.tree), ceil_half(n), "n = {n}");
            assert!(is_spider(&inst.tree).is_some());
        }
    }
}

#[test]
fn paths_are_spiders() {
    for n in 1..=30 {
        let p = families::path(n).unwrap().tree;
        let legs = is_spider(&p).unwrap().legs;
        assert_eq!(legs.iter().sum::<usize>() + 1, n);
        let code = canonical_code(&p);
        if n >= 2 {
            assert_eq!(canonical_code(&families::spider(&legs).unwrap().tree), code);
        }
    }
}

#[test]
fn spec_strings() {
    let spec: FamilySpec = "subdivided_star:5,2".parse().unwrap();
    let inst = spec.build().unwrap();
    assert_eq!(inst.tree.order(), 9);
    assert_eq!(inst.expected_psi, Some(BigUint::from(5u32)));
    assert_eq!(inst.spec(), "subdivided_star:5,2");

    assert_eq!(
        "path:1"
            .parse::<FamilySpec>()
            .unwrap()
            .build()
            .unwrap()
            .tree
            .order(),
        1
    );
    assert!(matches!(
        "spider:".parse::<FamilySpec>(),
        Err(FamilyError::BadSpec(_))
    ));
    assert!(matches!(
        "hypercube:3".parse::<FamilySpec>(),
        Err(FamilyError::UnknownFamily(_))
    ));
    assert!("star:x".parse::<FamilySpec>().is_err());
    assert!("spider:1,0".parse::<FamilySpec>().unwrap().build().is_err());
}
