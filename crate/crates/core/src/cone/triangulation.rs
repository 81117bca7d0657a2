use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::lattice::{integer_kernel, rank_of, IntVector};

/// Placing triangulation of the pointed cone spanned by `rays`, inserting
/// rays in the given order. Returns simplices as sorted index lists into
/// `rays`; each simplex has `rank(rays)` linearly independent members.
pub(crate) fn placing_triangulation(ambient_rank: usize, rays: &[IntVector]) -> Vec<Vec<usize>> {
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut placed: Vec<IntVector> = Vec::new();
    let mut dim = 0;

    for (idx, v) in rays.iter().enumerate() {
        if simplices.is_empty() {
            simplices.push(vec![idx]);
            placed.push(v.clone());
            dim = 1;
            continue;
        }
        placed.push(v.clone());
        let new_dim = rank_of(ambient_rank, &placed);
        if new_dim > dim {
            // Outside the current span: cone over every simplex.
            for s in &mut simplices {
                s.push(idx);
            }
            dim = new_dim;
            continue;
        }

        // Boundary facets are the codimension-one faces used by one simplex.
        let mut facet_use: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (si, s) in simplices.iter().enumerate() {
            for (pos, &opposite) in s.iter().enumerate() {
                let mut face = s.clone();
                face.remove(pos);
                facet_use.entry(face).or_default().push((si, opposite));
            }
        }
        let mut added = Vec::new();
        for (face, users) in facet_use {
            if users.len() != 1 {
                continue;
            }
            let opposite = &rays[users[0].1];
            let face_rays: Vec<IntVector> = face.iter().map(|&i| rays[i].clone()).collect();
            let normal = integer_kernel(ambient_rank, &face_rays)
                .into_iter()
                .find(|l| !l.dot(opposite).is_zero())
                .expect("opposite vertex is off the facet hyperplane");
            let side_opposite = normal.dot(opposite);
            let side_new = normal.dot(v);
            if side_new.is_zero() || side_new.is_positive() == side_opposite.is_positive() {
                continue;
            }
            let mut s = face;
            s.push(idx);
            s.sort_unstable();
            added.push(s);
        }
        simplices.extend(added);
    }
    simplices
}
