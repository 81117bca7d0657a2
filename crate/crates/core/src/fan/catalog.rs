//! Standard fans, built from ray lists and index sets.

use super::Fan;
use crate::lattice::IntVector;

fn build(rank: usize, rays: &[IntVector], cones: &[Vec<usize>]) -> Fan {
    Fan::from_ray_indices(rank, rays, cones).expect("catalog fans are valid")
}

fn units(n: usize) -> Vec<IntVector> {
    (0..n).map(|i| IntVector::unit(n, i)).collect()
}

/// `C^n`: the positive orthant and its faces.
pub fn affine_space(n: usize) -> Fan {
    if n == 0 {
        return Fan::torus(0);
    }
    build(n, &units(n), &[(0..n).collect()])
}

/// `C^n` minus the coordinate subspace `x_i = 0 for i in removed`.
pub fn affine_space_minus(n: usize, removed: &[usize]) -> Fan {
    let cones: Vec<Vec<usize>> = removed
        .iter()
        .map(|&r| (0..n).filter(|&i| i != r).collect())
        .collect();
    build(n, &units(n), &cones)
}

/// `C^a × (C*)^b`, the orthant on the first `a` coordinates of `Z^{a+b}`.
pub fn affine_times_torus(a: usize, b: usize) -> Fan {
    let n = a + b;
    if a == 0 {
        return Fan::torus(n);
    }
    let rays: Vec<IntVector> = (0..a).map(|i| IntVector::unit(n, i)).collect();
    build(n, &rays, &[(0..a).collect()])
}

/// `P^n` with rays `e_1, ..., e_n, -(e_1 + ... + e_n)`.
pub fn projective_space(n: usize) -> Fan {
    let mut rays = units(n);
    rays.push(IntVector::new(vec![(-1).into(); n]));
    let cones: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    build(n, &rays, &cones)
}

/// Blow-up of `C^2` at the origin.
pub fn blowup_plane() -> Fan {
    let rays = [
        IntVector::from_i64s(&[1, 0]),
        IntVector::from_i64s(&[1, 1]),
        IntVector::from_i64s(&[0, 1]),
    ];
    build(2, &rays, &[vec![0, 1], vec![1, 2]])
}

/// Hirzebruch surface `F_a` with rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Fan {
    let rays = [
        IntVector::from_i64s(&[1, 0]),
        IntVector::from_i64s(&[0, 1]),
        IntVector::from_i64s(&[-1, a]),
        IntVector::from_i64s(&[0, -1]),
    ];
    build(2, &rays, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]])
}

/// The affine surface of `cone((0,1), (k,-1))`, a cyclic quotient
/// singularity of order `k` (`k = 2` is the `A_1` singularity).
pub fn cyclic_quotient_surface(k: i64) -> Fan {
    let rays = [
        IntVector::from_i64s(&[0, 1]),
        IntVector::from_i64s(&[k, -1]),
    ];
    build(2, &rays, &[vec![0, 1]])
}
