//! Homogeneous locally nilpotent derivations `∂_{ρ,e}(χ^m) = ⟨m, ρ⟩ χ^{e+m}`
//! of a toric coordinate ring, their root sets, and the construction of `n`
//! homogeneous `G_a`-actions with independent characters on a quasi-affine
//! toric variety.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::{orthogonal_face, Cone, Ray};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{rank_of, IntMatrix, IntVector};
use crate::semigroup::{
    boundary_projection, fan_coordinate_semigroup, hilbert_basis, AffineSemigroup, AlgebraElement,
};

/// Default bound on the number of derivation steps before giving up.
pub const DEFAULT_NILPOTENCY_CAP: usize = 10_000;

/// Box radii tried, in order, when searching for a root.
pub const ROOT_SEARCH_RADII: [i64; 5] = [3, 6, 12, 24, 48];

/// `∂_{ρ,e}` on `C[σ∨ ∩ M]` for a root `e ∈ S_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousLND {
    rho: Ray,
    degree: IntVector,
    ambient: AffineSemigroup,
    rho_pairing: BigInt,
}

impl HomogeneousLND {
    /// Checks that `e` is a root of `ρ` before building the derivation.
    pub fn new(ambient: AffineSemigroup, rho: Ray, e: IntVector) -> Result<Self> {
        if !root_membership(&ambient, &rho, &e)? {
            return Err(Error::NotARoot(e.to_string()));
        }
        let rho_pairing = e.dot(rho.generator());
        Ok(HomogeneousLND {
            rho,
            degree: e,
            ambient,
            rho_pairing,
        })
    }

    pub fn rho(&self) -> &Ray {
        &self.rho
    }

    /// The degree `e`.
    pub fn degree(&self) -> &IntVector {
        &self.degree
    }

    pub fn ambient(&self) -> &AffineSemigroup {
        &self.ambient
    }

    /// `⟨e, ρ⟩`, negative for every root encountered so far.
    pub fn rho_pairing(&self) -> &BigInt {
        &self.rho_pairing
    }
}

/// `e ∈ S_ρ`: `e ∉ σ∨_M` while `e + m ∈ σ∨_M` for every generator `m` of the
/// semigroup off the wall `ρ^⊥`. Checking generators suffices, since any
/// element off the wall is a sum involving at least one such generator.
pub fn root_membership(s: &AffineSemigroup, rho: &Ray, e: &IntVector) -> Result<bool> {
    let off_wall = generators_off_wall(s, rho)?;
    e.check_rank(s.ambient_rank())?;
    Ok(is_root(s, &off_wall, e))
}

fn generators_off_wall(s: &AffineSemigroup, rho: &Ray) -> Result<Vec<IntVector>> {
    let n = s.ambient_rank();
    rho.generator().check_rank(n)?;
    let sigma = s.primal_cone();
    if sigma.rays().is_empty() {
        return Err(Error::NoExtremalRays);
    }
    if !sigma.rays().contains(rho.generator()) {
        return Err(Error::NotExtremalRay(rho.to_string()));
    }
    Ok(s.hilbert_basis
        .iter()
        .filter(|m| m.dot(rho.generator()).is_positive())
        .cloned()
        .collect())
}

fn is_root(s: &AffineSemigroup, off_wall: &[IntVector], e: &IntVector) -> bool {
    !s.contains(e) && off_wall.iter().all(|m| s.contains(&(e + m)))
}

/// Roots of `ρ` in the box `[-radius, radius]^n`, sorted lexicographically.
///
/// `S_ρ` is infinite and always nonempty; an empty result only means the box
/// is too small.
pub fn enumerate_roots(s: &AffineSemigroup, rho: &Ray, radius: i64) -> Result<Vec<IntVector>> {
    let off_wall = generators_off_wall(s, rho)?;
    let n = s.ambient_rank();
    let mut roots = Vec::new();
    let mut point = vec![-radius; n];
    loop {
        let e = IntVector::from_i64s(&point);
        if is_root(s, &off_wall, &e) {
            roots.push(e);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(roots);
            }
            i -= 1;
            if point[i] < radius {
                point[i] += 1;
                break;
            }
            point[i] = -radius;
        }
    }
}

/// Lexicographically first root within the smallest radius of
/// [`ROOT_SEARCH_RADII`] that contains one.
pub fn first_root(s: &AffineSemigroup, rho: &Ray) -> Result<IntVector> {
    for &r in &ROOT_SEARCH_RADII {
        if let Some(e) = enumerate_roots(s, rho, r)?.into_iter().next() {
            return Ok(e);
        }
    }
    Err(Error::NoRootFound {
        radius: *ROOT_SEARCH_RADII.last().expect("radii are nonempty"),
    })
}

/// `∂(Σ c_m χ^m) = Σ c_m ⟨m, ρ⟩ χ^{e+m}`.
pub fn apply(d: &HomogeneousLND, a: &AlgebraElement) -> Result<AlgebraElement> {
    if let Some(m) = a.exponents().find(|m| !d.ambient.contains(m)) {
        return Err(Error::Integrity(format!("input term χ^{m} is not regular")));
    }
    let out = apply_unchecked(d, a);
    if let Some(m) = out.exponents().find(|m| !d.ambient.contains(m)) {
        return Err(Error::Integrity(format!(
            "∂ produced the non-regular term χ^{m}"
        )));
    }
    Ok(out)
}

fn apply_unchecked(d: &HomogeneousLND, a: &AlgebraElement) -> AlgebraElement {
    AlgebraElement::from_terms(a.terms().map(|(m, c)| {
        let p = BigRational::from_integer(m.dot(d.rho.generator()));
        (&d.degree + m, c * p)
    }))
}

/// Smallest `k` with `∂^k(χ^m) = 0`.
pub fn nilpotency_order(d: &HomogeneousLND, m: &IntVector, cap: usize) -> Result<usize> {
    let mut a = AlgebraElement::monomial(m.clone());
    for k in 1..=cap {
        a = apply(d, &a)?;
        if a.is_zero() {
            return Ok(k);
        }
    }
    Err(Error::NilpotencyCapExceeded { cap })
}

/// `exp(s∂)(a) = Σ_k s^k/k! ∂^k(a)`, the action of `s ∈ G_a`.
pub fn exponentiate(
    d: &HomogeneousLND,
    s: &BigRational,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut total = a.clone();
    let mut power = a.clone();
    let mut weight = BigRational::one();
    for k in 1..=DEFAULT_NILPOTENCY_CAP {
        power = apply(d, &power)?;
        if power.is_zero() {
            return Ok(total);
        }
        weight = weight * s / BigRational::from_integer(BigInt::from(k));
        total = &total + &power.scale(&weight);
    }
    Err(Error::NilpotencyCapExceeded {
        cap: DEFAULT_NILPOTENCY_CAP,
    })
}

/// `n` homogeneous `G_a`-actions on a quasi-affine toric variety that fix
/// the complement of the variety in its affine hull, with independent
/// characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaActionPackage {
    pub chosen_ray: Ray,
    /// The root `e` of `chosen_ray` every derivation degree is built from.
    pub root: IntVector,
    /// Extremal rays of the support cone other than `chosen_ray`.
    pub boundary_rays: Vec<Ray>,
    /// Hilbert basis of `ρ^⊥ ∩ σ∨`.
    pub wall_generators: Vec<IntVector>,
    /// `b`, the sum of the wall generators.
    pub wall_sum: IntVector,
    /// `m'_1, ..., m'_n`.
    pub wall_offsets: Vec<IntVector>,
    pub derivations: Vec<HomogeneousLND>,
    /// `e + m'_i`, the degree of the `i`-th derivation.
    pub characters: Vec<IntVector>,
    pub character_determinant: BigInt,
    pub ambient: AffineSemigroup,
}

/// Builds `n` homogeneous `G_a`-actions for a quasi-affine toric variety
/// whose rays span `N_Q`.
///
/// The support cone `σ` must have every fan cone as a face. The chosen ray
/// is the lexicographically greatest extremal ray of `σ`; the remaining
/// extremal rays are the boundary rays. With `e` the first root found and
/// `b` the sum of the wall generators `h`, the offsets are `b + h_j` for the
/// first `n - 1` independent `h_j`, then `b` itself.
pub fn build_ga_actions(fan: &Fan) -> Result<GaActionPackage> {
    if fan.is_torus() {
        return Err(Error::TorusHasNoGaActions);
    }
    let n = fan.ambient_rank();
    let gens = fan.ray_generators();
    let span = rank_of(n, &gens);
    if span != n {
        return Err(Error::RaysDoNotSpan { rank: n, span });
    }
    let support = fan.support_cone();
    if !support.all_cones_are_faces {
        return Err(Error::NotQuasiAffine(format!(
            "some cone is not a face of the support cone {}",
            support.cone
        )));
    }
    let sigma: Cone = support.cone;
    let ambient = fan_coordinate_semigroup(fan);

    let mut extremal = sigma.ray_list();
    let chosen_ray = extremal.pop().expect("a spanning fan has rays");
    let boundary_rays = extremal;

    let root = first_root(&ambient, &chosen_ray)?;

    let wall = orthogonal_face(&chosen_ray, &ambient.dual_cone)?;
    let wall_generators = hilbert_basis(&wall).hilbert_basis;
    let wall_sum = wall_generators
        .iter()
        .fold(IntVector::zero(n), |acc, h| &acc + h);
    for r in &boundary_rays {
        if !wall_sum.dot(r.generator()).is_positive() {
            return Err(Error::Internal(format!(
                "wall sum {wall_sum} does not pair positively with boundary ray {r}"
            )));
        }
    }

    let mut independent: Vec<IntVector> = Vec::new();
    for h in &wall_generators {
        if independent.len() + 1 == n {
            break;
        }
        let mut trial = independent.clone();
        trial.push(h.clone());
        if rank_of(n, &trial) == trial.len() {
            independent = trial;
        }
    }
    if independent.len() + 1 != n {
        return Err(Error::Internal(format!(
            "wall generators span rank {} < {}",
            independent.len(),
            n - 1
        )));
    }
    let mut wall_offsets: Vec<IntVector> = independent.iter().map(|h| &wall_sum + h).collect();
    wall_offsets.push(wall_sum.clone());

    let characters: Vec<IntVector> = wall_offsets.iter().map(|m| &root + m).collect();
    let derivations = characters
        .iter()
        .map(|c| HomogeneousLND::new(ambient.clone(), chosen_ray.clone(), c.clone()))
        .collect::<Result<Vec<_>>>()?;

    let character_determinant = IntMatrix::from_rows(n, &characters).determinant();
    if character_determinant.is_zero() {
        return Err(Error::Internal(format!(
            "characters {characters:?} are linearly dependent"
        )));
    }

    for d in &derivations {
        for m in ambient.algebra_generators() {
            let image = apply(d, &AlgebraElement::monomial(m.clone()))?;
            for r in &boundary_rays {
                if !boundary_projection(r, &ambient, &image)?.is_zero() {
                    return Err(Error::Internal(format!(
                        "∂ of degree {} does not vanish on the boundary divisor of {r} at χ^{m}",
                        d.degree
                    )));
                }
            }
        }
    }

    Ok(GaActionPackage {
        chosen_ray,
        root,
        boundary_rays,
        wall_generators,
        wall_sum,
        wall_offsets,
        derivations,
        characters,
        character_determinant,
        ambient,
    })
}

#[cfg(test)]
mod tests;
