use proptest::prelude::*;

use super::*;
use crate::fan::catalog;
use crate::semigroup::{character_value, rational};

fn v(x: &[i64]) -> IntVector {
    IntVector::from_i64s(x)
}

fn chi(x: &[i64]) -> AlgebraElement {
    AlgebraElement::monomial(v(x))
}

fn ray(x: &[i64]) -> Ray {
    Ray::new(v(x)).unwrap()
}

/// `C[σ∨ ∩ M]` for `σ` spanned by `gens`.
fn semigroup(n: usize, gens: &[&[i64]]) -> AffineSemigroup {
    let g: Vec<IntVector> = gens.iter().map(|x| v(x)).collect();
    hilbert_basis(&Cone::from_generators(n, &g).unwrap().dual())
}

fn line() -> AffineSemigroup {
    semigroup(1, &[&[1]])
}

fn plane() -> AffineSemigroup {
    semigroup(2, &[&[1, 0], &[0, 1]])
}

fn lnd(s: AffineSemigroup, rho: &[i64], e: &[i64]) -> HomogeneousLND {
    HomogeneousLND::new(s, ray(rho), v(e)).unwrap()
}

#[test]
fn root_membership_examples() {
    assert!(root_membership(&line(), &ray(&[1]), &v(&[-1])).unwrap());
    assert!(!root_membership(&line(), &ray(&[1]), &v(&[-2])).unwrap());
    assert!(root_membership(&plane(), &ray(&[1, 0]), &v(&[-1, 3])).unwrap());
    assert!(!root_membership(&plane(), &ray(&[1, 0]), &v(&[-1, -1])).unwrap());
    assert!(!root_membership(&plane(), &ray(&[1, 0]), &v(&[0, 1])).unwrap());
}

#[test]
fn root_membership_requires_an_extremal_ray() {
    assert!(matches!(
        root_membership(&plane(), &ray(&[1, 1]), &v(&[-1, 0])),
        Err(Error::NotExtremalRay(_))
    ));
    let torus = hilbert_basis(&Cone::full(2));
    assert_eq!(
        enumerate_roots(&torus, &ray(&[1, 0]), 2),
        Err(Error::NoExtremalRays)
    );
}

#[test]
fn enumerate_roots_examples() {
    assert_eq!(
        enumerate_roots(&line(), &ray(&[1]), 5).unwrap(),
        vec![v(&[-1])]
    );
    assert_eq!(
        enumerate_roots(&plane(), &ray(&[1, 0]), 2).unwrap(),
        vec![v(&[-1, 0]), v(&[-1, 1]), v(&[-1, 2])]
    );
}

#[test]
fn roots_of_a_singular_cone() {
    // σ = cone((1,0),(1,2)), σ∨ = cone((0,1),(2,-1)). For ρ = (1,2) the
    // wall is spanned by (2,-1) and the roots pair to -1 with ρ.
    let s = semigroup(2, &[&[1, 0], &[1, 2]]);
    let roots = enumerate_roots(&s, &ray(&[1, 2]), 4).unwrap();
    assert!(!roots.is_empty());
    for e in &roots {
        assert_eq!(e.dot(&v(&[1, 2])), BigInt::from(-1));
        assert!(roots.contains(&(e + &v(&[2, -1]))) || (e + &v(&[2, -1])).max_abs() > 4.into());
    }
}

#[test]
fn apply_examples() {
    let d = lnd(line(), &[1], &[-1]);
    assert_eq!(
        apply(&d, &chi(&[3])).unwrap(),
        chi(&[2]).scale(&rational(3))
    );
    let d2 = lnd(plane(), &[1, 0], &[-1, 1]);
    assert_eq!(
        apply(&d2, &chi(&[2, 0])).unwrap(),
        chi(&[1, 1]).scale(&rational(2))
    );
    assert!(apply(&d2, &chi(&[0, 5])).unwrap().is_zero());
    assert!(matches!(apply(&d, &chi(&[-1])), Err(Error::Integrity(_))));
}

#[test]
fn new_rejects_non_roots() {
    assert!(matches!(
        HomogeneousLND::new(line(), ray(&[1]), v(&[-2])),
        Err(Error::NotARoot(_))
    ));
    assert_eq!(*lnd(line(), &[1], &[-1]).rho_pairing(), BigInt::from(-1));
}

#[test]
fn nilpotency_examples() {
    let d = lnd(line(), &[1], &[-1]);
    assert_eq!(
        nilpotency_order(&d, &v(&[3]), DEFAULT_NILPOTENCY_CAP).unwrap(),
        4
    );
    let d2 = lnd(plane(), &[1, 0], &[-1, 1]);
    assert_eq!(nilpotency_order(&d2, &v(&[0, 4]), 10).unwrap(), 1);
    assert_eq!(nilpotency_order(&d2, &v(&[2, 0]), 10).unwrap(), 3);
    assert_eq!(
        nilpotency_order(&d, &v(&[20]), 5),
        Err(Error::NilpotencyCapExceeded { cap: 5 })
    );
}

#[test]
fn exponentiate_examples() {
    let d = lnd(line(), &[1], &[-1]);
    assert_eq!(
        exponentiate(&d, &rational(1), &chi(&[1])).unwrap(),
        &chi(&[1]) + &chi(&[0])
    );
    let a = &chi(&[3]) + &chi(&[1]).scale(&rational(7));
    assert_eq!(exponentiate(&d, &rational(0), &a).unwrap(), a);
    let d2 = lnd(plane(), &[1, 0], &[-1, 1]);
    assert_eq!(
        exponentiate(&d2, &rational(2), &chi(&[1, 0])).unwrap(),
        &chi(&[1, 0]) + &chi(&[0, 1]).scale(&rational(2))
    );
}

#[test]
fn translation_of_a_cube() {
    // (x + s)^3 with s = 1/2.
    let d = lnd(line(), &[1], &[-1]);
    let half = BigRational::new(1.into(), 2.into());
    let out = exponentiate(&d, &half, &chi(&[3])).unwrap();
    let expected = AlgebraElement::from_terms([
        (v(&[3]), rational(1)),
        (v(&[2]), BigRational::new(3.into(), 2.into())),
        (v(&[1]), BigRational::new(3.into(), 4.into())),
        (v(&[0]), BigRational::new(1.into(), 8.into())),
    ]);
    assert_eq!(out, expected);
}

#[test]
fn package_for_the_plane() {
    let p = build_ga_actions(&catalog::affine_space(2)).unwrap();
    assert_eq!(p.chosen_ray, ray(&[1, 0]));
    assert_eq!(p.root, v(&[-1, 0]));
    assert_eq!(p.boundary_rays, vec![ray(&[0, 1])]);
    assert_eq!(p.wall_generators, vec![v(&[0, 1])]);
    assert_eq!(p.wall_offsets, vec![v(&[0, 2]), v(&[0, 1])]);
    assert_eq!(p.characters, vec![v(&[-1, 2]), v(&[-1, 1])]);
    assert_eq!(p.character_determinant, BigInt::from(1));
}

#[test]
fn package_for_the_punctured_plane_fixes_the_boundary() {
    let p = build_ga_actions(&catalog::affine_space_minus(2, &[0, 1])).unwrap();
    assert_eq!(p.chosen_ray, ray(&[1, 0]));
    let e2 = ray(&[0, 1]);
    for d in &p.derivations {
        for m in &p.ambient.hilbert_basis {
            let image = apply(d, &AlgebraElement::monomial(m.clone())).unwrap();
            assert!(boundary_projection(&e2, &p.ambient, &image)
                .unwrap()
                .is_zero());
        }
    }
}

#[test]
fn package_in_rank_three() {
    let fan = catalog::affine_space_minus(3, &[0, 1]);
    let p = build_ga_actions(&fan).unwrap();
    assert_eq!(p.derivations.len(), 3);
    assert!(!p.character_determinant.is_zero());
    assert_eq!(p.boundary_rays.len(), 2);
}

#[test]
fn package_errors() {
    assert_eq!(
        build_ga_actions(&Fan::torus(2)),
        Err(Error::TorusHasNoGaActions)
    );
    assert!(matches!(
        build_ga_actions(&catalog::projective_space(1)),
        Err(Error::NotQuasiAffine(_))
    ));
    assert!(matches!(
        build_ga_actions(&catalog::blowup_plane()),
        Err(Error::NotQuasiAffine(_))
    ));
    assert!(matches!(
        build_ga_actions(&catalog::affine_times_torus(1, 1)),
        Err(Error::RaysDoNotSpan { rank: 2, span: 1 })
    ));
}

#[test]
fn package_after_splitting_the_torus() {
    let split = catalog::affine_times_torus(2, 1).split_torus_factor();
    let p = build_ga_actions(&split.reduced).unwrap();
    assert_eq!(p.characters.len(), 2);
}

/// Random instance: a simplicial `σ` with small entries, a ray of it, a root.
fn random_lnd() -> impl Strategy<Value = HomogeneousLND> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::vec(-3i64..=3, n), n),
                any::<prop::sample::Index>(),
                any::<prop::sample::Index>(),
            )
        })
        .prop_filter_map("full-dimensional pointed cone", |(gs, ri, ei)| {
            let n = gs.len();
            let g: Vec<IntVector> = gs.iter().map(|x| v(x)).collect();
            let sigma = Cone::from_generators(n, &g).ok()?;
            if !sigma.is_full_dimensional() || !sigma.is_strongly_convex() {
                return None;
            }
            let s = hilbert_basis(&sigma.dual());
            let rho = sigma.ray_list()[ri.index(sigma.rays().len())].clone();
            let roots = enumerate_roots(&s, &rho, 3).ok()?;
            if roots.is_empty() {
                return None;
            }
            let e = roots[ei.index(roots.len())].clone();
            HomogeneousLND::new(s, rho, e).ok()
        })
}

fn element_from(
    d: &HomogeneousLND,
    picks: &[(prop::sample::Index, prop::sample::Index, i64)],
) -> AlgebraElement {
    let gens = &d.ambient().hilbert_basis;
    let mut a = AlgebraElement::zero();
    for (i, j, c) in picks {
        let m = &gens[i.index(gens.len())] + &gens[j.index(gens.len())];
        a = &a + &AlgebraElement::term(m, rational(*c));
    }
    a
}

fn picks() -> impl Strategy<Value = Vec<(prop::sample::Index, prop::sample::Index, i64)>> {
    prop::collection::vec(
        (
            any::<prop::sample::Index>(),
            any::<prop::sample::Index>(),
            -3i64..=3,
        ),
        0..4,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn leibniz_rule(d in random_lnd(), x in picks(), y in picks()) {
        let a = element_from(&d, &x);
        let b = element_from(&d, &y);
        let lhs = apply(&d, &a.multiply(&b)).unwrap();
        let rhs = &apply(&d, &a).unwrap().multiply(&b) + &a.multiply(&apply(&d, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_shift_is_constant(d in random_lnd()) {
        prop_assert!(d.rho_pairing().is_negative());
        for m in &d.ambient().hilbert_basis {
            let image = apply(&d, &AlgebraElement::monomial(m.clone())).unwrap();
            for exp in image.exponents() {
                prop_assert_eq!(exp, &(d.degree() + m));
            }
        }
    }

    #[test]
    fn generators_are_locally_nilpotent(d in random_lnd()) {
        let step = d.rho_pairing().abs();
        for m in &d.ambient().hilbert_basis {
            let bound = m.dot(d.rho().generator()) / &step + 2;
            let k = nilpotency_order(&d, m, DEFAULT_NILPOTENCY_CAP).unwrap();
            prop_assert!(BigInt::from(k) <= bound);
        }
    }

    #[test]
    fn torus_conjugation_scales_by_the_degree(
        d in random_lnd(),
        t in prop::collection::vec((1i64..=4, 1i64..=3), 3),
    ) {
        let n = d.degree().rank();
        let t: Vec<BigRational> = t[..n].iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect();
        let t_inv: Vec<BigRational> = t.iter().map(|x| x.recip()).collect();
        let weight = character_value(&t, d.degree());
        for m in &d.ambient().hilbert_basis {
            let chi_m = AlgebraElement::monomial(m.clone());
            let conj = apply(&d, &chi_m.torus_action(&t_inv)).unwrap().torus_action(&t);
            prop_assert_eq!(conj, apply(&d, &chi_m).unwrap().scale(&weight));
        }
    }

    #[test]
    fn exponential_is_an_automorphism(
        d in random_lnd(),
        x in picks(),
        y in picks(),
        s in -3i64..=3,
        u in -3i64..=3,
    ) {
        let a = element_from(&d, &x);
        let b = element_from(&d, &y);
        let (s, u) = (rational(s), rational(u));
        let e = |w: &BigRational, z: &AlgebraElement| exponentiate(&d, w, z).unwrap();
        prop_assert_eq!(e(&s, &a.multiply(&b)), e(&s, &a).multiply(&e(&s, &b)));
        prop_assert_eq!(e(&s, &e(&u, &a)), e(&(&s + &u), &a));
    }
}
