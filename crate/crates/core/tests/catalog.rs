use num_rational::Ratio;
use so7_core::atlas::{
    alpha, build_a64, build_gl32, case2_quotients, case3_quotients, enumerate_invariant_codes, named_group,
    search_case1_psl27, BaseGroup, NamedGroupId,
};
use so7_core::clifford::{
    adjoin_neg_identity, char_norm, clifford_count, functional_orbits, functionals, gamma, inertia_group, is_simple,
    is_transitive_on_axes, natural_character,
};
use so7_core::groupkit::{centralizer, closure, conjugacy_classes, diagonal_group};
use so7_core::SignedPerm;

fn group(base: BaseGroup) -> so7_core::atlas::NamedGroup {
    named_group(NamedGroupId::base(base)).unwrap()
}

#[test]
fn case_two_counts_agree_under_both_recipes() {
    let expected = [
        (BaseGroup::Case2Z7, 7, 1),
        (BaseGroup::Case2F21, 5, 3),
        (BaseGroup::Case2Psl32Split, 6, 5),
        (BaseGroup::Case2Psl32Nonsplit, 6, 5),
    ];
    for (base, nfc, fc) in expected {
        let g = group(base);
        let c = clifford_count(&g.group, g.code.as_ref().unwrap()).unwrap();
        assert_eq!(
            (c.nfc, c.fc_paper, c.fc_orbit, c.direct),
            (nfc, fc, fc, nfc + fc),
            "{}",
            base.name()
        );
    }
}

#[test]
fn every_functional_satisfies_orbit_stabilizer() {
    for base in [BaseGroup::Case3D14, BaseGroup::Case3F42, BaseGroup::Case3Psl32] {
        let g = group(base);
        let a = g.code.unwrap();
        for orbit in functional_orbits(&g.group, &a).unwrap() {
            for eta in &orbit {
                let inertia = inertia_group(&g.group, eta).unwrap();
                assert_eq!(orbit.len() * inertia.order(), g.group.order());
            }
        }
    }
}

#[test]
fn gamma_examples() {
    let split = group(BaseGroup::Case2Psl32Split);
    let a8 = split.code.clone().unwrap();
    for eta in functionals(&a8).unwrap() {
        assert_eq!(g_index(&split.group, &inertia_group(&split.group, &eta).unwrap()), 7);
        assert_eq!(gamma(&split.group, &eta).unwrap(), 5);
    }
    let f21 = group(BaseGroup::Case2F21);
    assert_eq!(gamma(&f21.group, &functionals(&a8).unwrap()[0]).unwrap(), 3);

    // a functional whose dual has weight 2 or 5 lies in the orbit of size 21
    let s7 = group(BaseGroup::Case3S7);
    let a64 = build_a64();
    let eta = functionals(&a64)
        .unwrap()
        .into_iter()
        .find(|f| matches!(f.dual().weight(), 2 | 5))
        .unwrap();
    assert_eq!(g_index(&s7.group, &inertia_group(&s7.group, &eta).unwrap()), 21);
}

fn g_index(g: &so7_core::Group, h: &so7_core::Group) -> usize {
    g.order() / h.order()
}

#[test]
fn full_group_orbits_on_a64_functionals() {
    let s7 = group(BaseGroup::Case3S7);
    let mut sizes: Vec<usize> = functional_orbits(&s7.group, &build_a64())
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    sizes.sort();
    assert_eq!(sizes, [7, 21, 35]);

    // weight classes {1,6}, {2,5}, {3,4}: the dual is only defined up to the all-ones word
    let mut by_weight = [0usize; 3];
    for f in functionals(&build_a64()).unwrap() {
        let w = f.dual().weight() as usize;
        by_weight[w.min(7 - w) - 1] += 1;
    }
    assert_eq!(by_weight, [7, 21, 35]);
}

#[test]
fn natural_character_values() {
    let g = group(BaseGroup::Case2Z7);
    let classes = conjugacy_classes(&g.group);
    let chi = natural_character(&classes);
    for (class, &value) in classes.classes().iter().zip(chi.values()) {
        let x = class[0];
        if x.is_identity() {
            assert_eq!(value, 7);
        } else if x.order() == 7 {
            assert_eq!(value, 0);
        } else {
            assert!(x.is_diagonal() && x.signs().weight() == 4);
            assert_eq!(value, -1);
        }
    }
}

#[test]
fn character_norms() {
    assert_eq!(char_norm(&group(BaseGroup::Case2Z7).group), Ratio::from_integer(1));
    assert_eq!(
        char_norm(&diagonal_group(&build_a64()).unwrap()),
        Ratio::from_integer(7)
    );
    assert_eq!(char_norm(&build_gl32().unwrap()), Ratio::from_integer(2));
    let neg = adjoin_neg_identity(&group(BaseGroup::Case3F21).group).unwrap();
    assert_eq!(char_norm(&neg), Ratio::from_integer(1));
}

#[test]
fn neg_identity_doubles_classes() {
    let g = group(BaseGroup::Case2Z7).group;
    let h = adjoin_neg_identity(&g).unwrap();
    assert_eq!(h.order(), 112);
    assert_eq!(conjugacy_classes(&h).count(), 16);
    let neg = SignedPerm::neg_identity();
    assert!(h.elements().iter().all(|x| x.commutes_with(neg)));
    assert!(h.elements().iter().any(|x| x.det() == -1));
    assert!(h.elements().iter().any(|x| x.det() == 1));
}

#[test]
fn case_one_group_is_simple_and_irreducible() {
    let g = search_case1_psl27().unwrap();
    assert_eq!(g.order(), 168);
    assert!(is_simple(&g).unwrap());
    assert_eq!(char_norm(&g), Ratio::from_integer(1));
    assert!(is_transitive_on_axes(&g));
    assert_eq!(conjugacy_classes(&g).count(), 6);
    assert!(!is_simple(&group(BaseGroup::Case2Z7).group).unwrap());
}

#[test]
fn transitivity() {
    assert!(!is_transitive_on_axes(&diagonal_group(&build_a64()).unwrap()));
    assert!(is_transitive_on_axes(&closure(&[alpha()]).unwrap()));
}

#[test]
fn sylow_normalizer_groups_have_self_centralizing_seven() {
    for base in [
        BaseGroup::Case3Z7,
        BaseGroup::Case3D14,
        BaseGroup::Case3F21,
        BaseGroup::Case3F42,
    ] {
        let g = group(base);
        assert_eq!(centralizer(&g.group, g.seven).unwrap().order(), 7, "{}", base.name());
    }
}

#[test]
fn invariant_codes_and_quotient_lists() {
    let codes = enumerate_invariant_codes();
    assert_eq!(codes.iter().map(|c| c.code.order()).collect::<Vec<_>>(), [8, 8, 64]);
    assert!(codes.iter().all(|c| c.fixed_point_free));
    assert!(codes[..2].iter().any(|c| c.code.weight_distribution()[4] == 7));

    let mut merged = case3_quotients().unwrap().merged_orders();
    merged.sort();
    assert_eq!(merged, [7, 14, 21, 42, 168, 2520, 5040]);
    let mut gl = case2_quotients().unwrap().merged_orders();
    gl.sort();
    assert_eq!(gl, [7, 21, 168]);
}
