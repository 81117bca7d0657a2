use proptest::prelude::*;

use super::catalog::*;
use super::*;

fn v(x: &[i64]) -> IntVector {
    IntVector::from_i64s(x)
}

fn cone(n: usize, gens: &[&[i64]]) -> Cone {
    let g: Vec<IntVector> = gens.iter().map(|x| v(x)).collect();
    Cone::from_generators(n, &g).unwrap()
}

fn class(fan: &Fan) -> (usize, Vec<BigInt>) {
    let c = fan.class_group().unwrap();
    (c.rank, c.torsion)
}

#[test]
fn validate_examples() {
    let a2 = Fan::validate(2, vec![cone(2, &[&[1, 0], &[0, 1]])]).unwrap();
    assert_eq!(a2.cones().len(), 4);
    assert_eq!(a2.edge_count(), 2);
    assert_eq!(a2, affine_space(2));

    let err = Fan::validate(
        2,
        vec![cone(2, &[&[1, 0], &[0, 1]]), cone(2, &[&[1, 0], &[1, 2]])],
    )
    .unwrap_err();
    assert!(matches!(err, Error::NotAFan { .. }), "{err}");

    let torus = Fan::validate(2, vec![]).unwrap();
    assert_eq!(torus.cones(), &[Cone::zero(2)]);
    assert!(torus.is_torus());
}

#[test]
fn validate_rejects_bad_cones() {
    let half_plane = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
    assert!(matches!(
        Fan::validate(2, vec![half_plane]),
        Err(Error::NotStronglyConvex(_))
    ));
    assert!(matches!(
        Fan::validate(3, vec![cone(2, &[&[1, 0]])]),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn maximal_cones_of_standard_fans() {
    assert_eq!(projective_space(2).maximal_cones().len(), 3);
    assert_eq!(affine_space_minus(2, &[0, 1]).maximal_cones().len(), 2);
    assert_eq!(Fan::torus(3).maximal_cones(), vec![&Cone::zero(3)]);
}

#[test]
fn support_cone_examples() {
    let s = affine_space_minus(2, &[0, 1]).support_cone();
    assert_eq!(s.cone, cone(2, &[&[1, 0], &[0, 1]]));
    assert!(s.all_cones_are_faces);

    let p1 = projective_space(1).support_cone();
    assert_eq!(p1.cone, Cone::full(1));
    assert!(!p1.all_cones_are_faces);

    let t = Fan::torus(2).support_cone();
    assert!(t.cone.is_zero() && t.all_cones_are_faces);
}

#[test]
fn euler_characteristic_examples() {
    for n in 0..4 {
        assert_eq!(affine_space(n).euler_characteristic(), 1);
    }
    assert_eq!(projective_space(1).euler_characteristic(), 2);
    assert_eq!(projective_space(2).euler_characteristic(), 3);
    assert_eq!(affine_space_minus(2, &[0, 1]).euler_characteristic(), 0);
    assert_eq!(blowup_plane().euler_characteristic(), 2);
    assert_eq!(hirzebruch(1).euler_characteristic(), 4);
}

#[test]
fn class_group_examples() {
    assert_eq!(class(&blowup_plane()), (1, vec![]));
    assert_eq!(class(&affine_space_minus(2, &[0, 1])), (0, vec![]));
    assert_eq!(class(&affine_space(2)), (0, vec![]));
    assert_eq!(class(&projective_space(2)), (1, vec![]));
    assert_eq!(class(&hirzebruch(1)), (2, vec![]));
    // cone((0,1),(2,-1)): cokernel of the 2x2 pairing matrix is Z/2.
    assert_eq!(
        class(&cyclic_quotient_surface(2)),
        (0, vec![BigInt::from(2)])
    );
    assert!(matches!(
        affine_times_torus(1, 1).class_group(),
        Err(Error::RaysDoNotSpan { rank: 2, span: 1 })
    ));
}

#[test]
fn split_torus_factor_examples() {
    let line = Fan::validate(3, vec![cone(3, &[&[1, 0, 0]])]).unwrap();
    let split = line.split_torus_factor();
    assert_eq!(split.k, 2);
    assert_eq!(split.reduced, affine_space(1));

    let torus = Fan::torus(2).split_torus_factor();
    assert_eq!(torus.k, 2);
    assert_eq!(torus.reduced.ambient_rank(), 0);

    let a2 = affine_space(2).split_torus_factor();
    assert_eq!(a2.k, 0);
    assert_eq!(a2.reduced, affine_space(2));
}

#[test]
fn split_of_skew_ray_is_primitive() {
    let f = Fan::validate(2, vec![cone(2, &[&[2, 3]])]).unwrap();
    let split = f.split_torus_factor();
    assert_eq!(split.k, 1);
    assert_eq!(split.reduced, affine_space(1));
    assert_eq!(split.sublattice_basis.len(), 1);
}

#[test]
fn completeness() {
    assert!(projective_space(1).is_complete());
    assert!(projective_space(2).is_complete());
    assert!(hirzebruch(1).is_complete());
    assert!(!affine_space(2).is_complete());
    assert!(!blowup_plane().is_complete());
    assert!(!Fan::torus(1).is_complete());
    assert!(Fan::torus(0).is_complete());
}

#[test]
fn smoothness() {
    assert!(affine_space(3).is_smooth());
    assert!(hirzebruch(2).is_smooth());
    assert!(!cyclic_quotient_surface(3).is_smooth());
}

#[test]
fn quasi_affine_verdicts() {
    let yes = affine_space_minus(2, &[0, 1]).quasi_affine_verdict();
    match yes {
        QuasiAffineVerdict::Yes { ambient } => {
            assert_eq!(ambient.hilbert_basis, vec![v(&[0, 1]), v(&[1, 0])])
        }
        other => panic!("{other:?}"),
    }
    for fan in [
        projective_space(1),
        blowup_plane(),
        projective_space(2),
        hirzebruch(1),
    ] {
        match fan.quasi_affine_verdict() {
            QuasiAffineVerdict::No { step, .. } => assert_eq!(step, VerdictStep::ClassGroup),
            other => panic!("{other:?}"),
        }
    }
    match cyclic_quotient_surface(2).quasi_affine_verdict() {
        QuasiAffineVerdict::No { step, .. } => assert_eq!(step, VerdictStep::Smoothness),
        other => panic!("{other:?}"),
    }
}

#[test]
fn torus_factor_is_kept_in_the_ambient_semigroup() {
    match affine_times_torus(1, 1).quasi_affine_verdict() {
        QuasiAffineVerdict::Yes { ambient } => {
            assert_eq!(ambient.hilbert_basis, vec![v(&[1, 0])]);
            assert_eq!(ambient.lineality_units, vec![v(&[0, 1])]);
        }
        other => panic!("{other:?}"),
    }
    assert!(Fan::torus(2).quasi_affine_verdict().is_yes());
}

#[test]
fn opposite_rays_fail_at_the_class_group() {
    let f = Fan::validate(2, vec![cone(2, &[&[1, 0]]), cone(2, &[&[-1, 0]])]).unwrap();
    assert_eq!(f.split_torus_factor().k, 1);
    match f.quasi_affine_verdict() {
        QuasiAffineVerdict::No { step, .. } => assert_eq!(step, VerdictStep::ClassGroup),
        other => panic!("{other:?}"),
    }
}

#[test]
fn fixed_point_witnesses() {
    match affine_space(2).fixed_point_witness(2).unwrap() {
        FixedPointWitness::FixedPoints(c) => assert_eq!(c, vec![cone(2, &[&[1, 0], &[0, 1]])]),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        affine_space_minus(2, &[0, 1])
            .fixed_point_witness(5)
            .unwrap(),
        FixedPointWitness::Inapplicable {
            euler_characteristic: 0,
            prime: 5
        }
    ));
    match projective_space(1).fixed_point_witness(3).unwrap() {
        FixedPointWitness::FixedPoints(c) => assert_eq!(c.len(), 2),
        other => panic!("{other:?}"),
    }
    assert_eq!(
        affine_space(1).fixed_point_witness(4),
        Err(Error::NotPrime(4))
    );
}

#[test]
fn dimension_check() {
    assert_eq!(
        affine_space(3).remark_dimension_check(5).unwrap(),
        DimensionCheck {
            holds: true,
            note: None
        }
    );
    assert!(Fan::torus(2).remark_dimension_check(2).unwrap().holds);
    let p1 = projective_space(1).remark_dimension_check(2).unwrap();
    assert!(p1.holds && p1.note.is_some());
}

#[test]
fn report_of_blowup() {
    let r = blowup_plane().report();
    assert!(r.smooth && !r.complete);
    assert_eq!(r.edge_count, 3);
    assert_eq!(
        (r.class_rank, r.euler_characteristic, r.torus_factor_k),
        (1, 2, 0)
    );
    assert!(!r.quasi_affine.is_yes());
}

#[test]
fn primes() {
    let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
    assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
}

/// A random fan: a random smooth-or-not simplicial cone and all of its
/// faces, plus optionally its negative (which meets it only at 0).
fn random_fan() -> impl Strategy<Value = Fan> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=n),
            any::<bool>(),
            any::<u8>(),
        )
            .prop_filter_map("needs a strongly convex cone", move |(gs, mirror, mask)| {
                let g: Vec<IntVector> = gs.iter().map(|x| v(x)).collect();
                let c = Cone::from_generators(n, &g).ok()?;
                if !c.is_strongly_convex() || c.is_zero() {
                    return None;
                }
                let mut cones: Vec<Cone> = c
                    .faces()
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> (i % 8) & 1 == 1)
                    .map(|(_, f)| f)
                    .collect();
                cones.push(c.clone());
                if mirror {
                    let neg: Vec<IntVector> = c.rays().iter().map(|r| -r).collect();
                    cones.push(Cone::from_generators(n, &neg).ok()?);
                }
                Fan::validate(n, cones).ok()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validate_is_idempotent(f in random_fan()) {
        let again = Fan::validate(f.ambient_rank(), f.cones().to_vec()).unwrap();
        prop_assert_eq!(&again, &f);
        let from_maximal = Fan::validate(
            f.ambient_rank(),
            f.maximal_cones().into_iter().cloned().collect(),
        )
        .unwrap();
        prop_assert_eq!(from_maximal, f);
    }

    #[test]
    fn class_rank_is_d_minus_n(f in random_fan()) {
        match f.class_group() {
            Ok(c) => prop_assert_eq!(c.rank, f.edge_count() - f.ambient_rank()),
            Err(Error::RaysDoNotSpan { .. }) => {
                let split = f.split_torus_factor();
                prop_assert!(split.k > 0);
                let c = split.reduced.class_group().unwrap();
                prop_assert_eq!(c.rank, f.edge_count() - split.reduced.ambient_rank());
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn euler_characteristic_is_multiplicative(f in random_fan()) {
        let split = f.split_torus_factor();
        let torus_chi = if split.k == 0 { 1 } else { 0 };
        prop_assert_eq!(
            f.euler_characteristic(),
            split.reduced.euler_characteristic() * torus_chi
        );
        prop_assert_eq!(split.reduced.edge_count(), f.edge_count());
    }

    #[test]
    fn yes_verdict_is_certified(f in random_fan()) {
        if f.quasi_affine_verdict().is_yes() {
            prop_assert!(f.is_smooth());
            let support = f.split_torus_factor().reduced.support_cone();
            prop_assert!(support.cone.is_simplex());
            prop_assert!(support.all_cones_are_faces);
        }
    }

    #[test]
    fn witnesses_are_nonempty(f in random_fan(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        if let FixedPointWitness::FixedPoints(cones) = f.fixed_point_witness(p).unwrap() {
            prop_assert!(!cones.is_empty());
            prop_assert_eq!(cones.len(), f.euler_characteristic());
        }
    }
}
