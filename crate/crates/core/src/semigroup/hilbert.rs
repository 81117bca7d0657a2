//! Hilbert bases of `C ∩ Z^n` for rational polyhedral cones `C`.
//!
//! The pointed part is handled by triangulating into simplicial cones,
//! collecting the lattice points of each fundamental parallelepiped, and
//! sieving the union down to its irreducible elements. A lineality space is
//! split off first and contributes a basis of the unit group.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cone::{placing_triangulation, Cone};
use crate::lattice::{
    combine, coordinates_in_basis, saturated_span, smith_normal_form, IntMatrix, IntVector,
};

pub(crate) struct HilbertBasis {
    pub generators: Vec<IntVector>,
    pub units: Vec<IntVector>,
}

pub(crate) fn compute(cone: &Cone) -> HilbertBasis {
    let n = cone.ambient_rank();
    let units = cone.lineality().to_vec();
    if cone.rays().is_empty() {
        return HilbertBasis {
            generators: Vec::new(),
            units,
        };
    }

    // Work inside the saturated lattice W spanned by the cone.
    let mut span_gens = cone.rays().to_vec();
    span_gens.extend(units.iter().cloned());
    let span = saturated_span(n, &span_gens).expect("cone generators have the ambient rank");
    let w = span.len();
    let to_span = |v: &IntVector| {
        coordinates_in_basis(n, &span, v).expect("generator lies in the saturated span")
    };
    let unit_coords: Vec<IntVector> = units.iter().map(to_span).collect();

    // Unimodular change of basis of Z^w whose first rows span the units.
    let (right, right_inv) = if unit_coords.is_empty() {
        (IntMatrix::identity(w), IntMatrix::identity(w))
    } else {
        let snf = smith_normal_form(&IntMatrix::from_rows(w, &unit_coords));
        (snf.right.clone(), snf.right_inverse().clone())
    };
    let u = unit_coords.len();
    let k = w - u;
    let to_quotient = |y: &IntVector| -> IntVector {
        let row = &IntMatrix::from_rows(w, std::slice::from_ref(y)) * &right;
        IntVector::new(row.entries()[u..].to_vec())
    };
    let complement: Vec<IntVector> = (u..w).map(|i| right_inv.row(i)).collect();

    let mut quotient_rays: Vec<IntVector> = cone
        .rays()
        .iter()
        .map(|r| to_quotient(&to_span(r)).primitive())
        .collect();
    quotient_rays.sort();
    quotient_rays.dedup();

    let pointed = pointed_hilbert_basis(k, &quotient_rays);
    let mut generators: Vec<IntVector> = pointed
        .iter()
        .map(|q| {
            let in_span = combine(w, q.entries(), &complement);
            combine(n, in_span.entries(), &span)
        })
        .collect();
    generators.sort();
    HilbertBasis { generators, units }
}

/// Hilbert basis of a pointed, full-dimensional cone in `Z^k` given by its
/// extremal rays.
pub(crate) fn pointed_hilbert_basis(k: usize, rays: &[IntVector]) -> Vec<IntVector> {
    if rays.is_empty() {
        return Vec::new();
    }
    let cone = Cone::from_generators(k, rays).expect("rays have rank k");
    let rays = cone.rays();
    let grading = cone
        .facet_normals()
        .iter()
        .fold(IntVector::zero(k), |acc, n| &acc + n);

    let mut candidates: BTreeSet<IntVector> = rays.iter().cloned().collect();
    for simplex in placing_triangulation(k, rays) {
        let vertices: Vec<IntVector> = simplex.iter().map(|&i| rays[i].clone()).collect();
        candidates.extend(parallelepiped_points(k, &vertices));
    }

    let mut by_degree: Vec<(BigInt, IntVector)> = candidates
        .into_iter()
        .map(|c| (grading.dot(&c), c))
        .collect();
    by_degree.sort();

    let mut basis: Vec<IntVector> = Vec::new();
    for (i, (deg, x)) in by_degree.iter().enumerate() {
        let reducible = by_degree[..i]
            .iter()
            .any(|(d, y)| d < deg && cone.contains(&(x - y)));
        if !reducible {
            basis.push(x.clone());
        }
    }
    basis.sort();
    basis
}

/// Nonzero lattice points of `{sum λ_i v_i : 0 <= λ_i < 1}` for linearly
/// independent `vertices` spanning `Q^k`.
pub(crate) fn parallelepiped_points(k: usize, vertices: &[IntVector]) -> Vec<IntVector> {
    let v = IntMatrix::from_rows(k, vertices);
    let inv = v
        .rational_inverse()
        .expect("simplex vertices are independent");
    let snf = smith_normal_form(&v);
    let reps = snf.right_inverse();
    let moduli: Vec<BigInt> = snf.diagonal.clone();

    let mut out = Vec::new();
    let mut digits = vec![BigInt::zero(); k];
    loop {
        let x = combine(k, &digits, &reps.row_vectors());
        // λ = x V^{-1}, reduced mod 1.
        let lambda: Vec<BigRational> = (0..k)
            .map(|j| {
                (0..k).fold(BigRational::zero(), |acc, i| {
                    acc + BigRational::from_integer(x.entries()[i].clone()) * &inv[i][j]
                })
            })
            .map(|l| &l - l.floor())
            .collect();
        let point: Vec<BigInt> = (0..k)
            .map(|c| {
                let s = (0..k).fold(BigRational::zero(), |acc, i| {
                    acc + &lambda[i] * BigRational::from_integer(vertices[i].entries()[c].clone())
                });
                debug_assert!(s.is_integer());
                s.to_integer()
            })
            .collect();
        let p = IntVector::new(point);
        if !p.is_zero() {
            out.push(p);
        }
        // Odometer over 0 <= digits[i] < moduli[i].
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            digits[i] += 1;
            if digits[i] < moduli[i] {
                break;
            }
            digits[i] = BigInt::zero();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    #[test]
    fn parallelepiped_of_a1_cone() {
        let pts = parallelepiped_points(2, &[v(&[0, 1]), v(&[2, -1])]);
        assert_eq!(pts, vec![v(&[1, 0])]);
        let unimodular = parallelepiped_points(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert!(unimodular.is_empty());
    }

    #[test]
    fn parallelepiped_size_is_determinant() {
        let verts = [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 3])];
        // |det| = 3, so two nonzero points plus the origin.
        assert_eq!(parallelepiped_points(3, &verts).len(), 2);
    }

    #[test]
    fn cone_over_long_edge() {
        // cone((1,0),(1,5)): basis is (1,0),(1,1),...,(1,5).
        let hb = pointed_hilbert_basis(2, &[v(&[1, 0]), v(&[1, 5])]);
        assert_eq!(hb, (0..=5).map(|j| v(&[1, j])).collect::<Vec<_>>());
    }
}
