//! Double description: from inequalities `<c, x> >= 0` to lineality space
//! plus extremal rays, by incremental halfspace insertion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::lattice::{clear_denominators, integer_kernel, rank_of, IntMatrix, IntVector};

/// Vertex description of `{x : <c, x> >= 0 for all constraints c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct VDescription {
    /// Lattice basis of the lineality space, in Hermite normal form.
    pub lineality: Vec<IntVector>,
    /// Primitive extremal rays of the pointed part, orthogonal to the
    /// lineality space, sorted lexicographically.
    pub rays: Vec<IntVector>,
}

struct Candidate {
    ray: IntVector,
    /// Indices of processed constraints vanishing on the ray.
    zeros: Vec<bool>,
}

pub(crate) fn vertex_description(rank: usize, constraints: &[IntVector]) -> VDescription {
    let mut cons: Vec<IntVector> = constraints
        .iter()
        .filter(|c| !c.is_zero())
        .map(IntVector::primitive)
        .collect();
    cons.sort();
    cons.dedup();

    let lineality = integer_kernel(rank, &cons);
    let dim = rank - lineality.len();
    if dim == 0 {
        return VDescription {
            lineality,
            rays: Vec::new(),
        };
    }

    // Lexicographically first independent constraints seed a simplicial cone.
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut chosen: Vec<IntVector> = Vec::new();
    for (i, c) in cons.iter().enumerate() {
        chosen.push(c.clone());
        if rank_of(rank, &chosen) > basis_idx.len() {
            basis_idx.push(i);
            if basis_idx.len() == dim {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    debug_assert_eq!(basis_idx.len(), dim);

    // Square system [B; L] x = [e_j; 0].
    let mut sys_rows = chosen.clone();
    sys_rows.extend(lineality.iter().cloned());
    let sys = IntMatrix::from_rows(rank, &sys_rows);
    let inv = sys
        .rational_inverse()
        .expect("seed constraints and lineality basis are independent");

    let ncons = cons.len();
    let mut rays: Vec<Candidate> = (0..dim)
        .map(|j| {
            let col: Vec<BigRational> = (0..rank).map(|i| inv[i][j].clone()).collect();
            let mut zeros = vec![false; ncons];
            for (k, &b) in basis_idx.iter().enumerate() {
                zeros[b] = k != j;
            }
            Candidate {
                ray: clear_denominators(&col),
                zeros,
            }
        })
        .collect();
    let mut processed: Vec<bool> = vec![false; ncons];
    for &b in &basis_idx {
        processed[b] = true;
    }

    for k in 0..ncons {
        if processed[k] {
            continue;
        }
        let c = &cons[k];
        let vals: Vec<BigInt> = rays.iter().map(|r| c.dot(&r.ray)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut next: Vec<Candidate> = Vec::new();
        for (p, &q) in pos.iter().flat_map(|p| neg.iter().map(move |q| (p, q))) {
            let common: Vec<bool> = rays[*p]
                .zeros
                .iter()
                .zip(&rays[q].zeros)
                .map(|(a, b)| *a && *b)
                .collect();
            let count = common.iter().filter(|x| **x).count();
            if dim >= 2 && count + 2 < dim {
                continue;
            }
            let blocked = rays.iter().enumerate().any(|(w, cand)| {
                w != *p
                    && w != q
                    && common
                        .iter()
                        .zip(&cand.zeros)
                        .all(|(need, has)| !*need || *has)
            });
            if blocked {
                continue;
            }
            let vp = &vals[*p];
            let vq = -&vals[q];
            let combo = &rays[q].ray.scale(vp) + &rays[*p].ray.scale(&vq);
            if combo.is_zero() {
                continue;
            }
            let mut zeros = common;
            zeros[k] = true;
            next.push(Candidate {
                ray: combo.primitive(),
                zeros,
            });
        }
        for (i, mut cand) in std::mem::take(&mut rays).into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            cand.zeros[k] = vals[i].is_zero();
            next.push(cand);
        }
        rays = next;
        processed[k] = true;
    }

    let mut out: Vec<IntVector> = rays.into_iter().map(|c| c.ray).collect();
    out.sort();
    out.dedup();
    VDescription {
        lineality,
        rays: out,
    }
}
