//! Rational polyhedral cones in `N_Q` or `M_Q`.
//!
//! A [`Cone`] is stored in canonical form: a Hermite-normal-form basis of its
//! lineality space plus its primitive extremal rays, lexicographically
//! sorted. For cones with lineality the rays are those of the pointed
//! quotient, lifted to the orthogonal complement of the lineality space.
//! Equality of cones is therefore plain data equality.
//!
//! The inequality description (facet normals and equations in the dual
//! lattice) is computed on first use and cached.

mod dd;
mod triangulation;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rank_of, smith_normal_form, IntMatrix, IntVector};

pub(crate) use dd::vertex_description;
pub(crate) use triangulation::placing_triangulation;

/// A primitive nonzero lattice vector spanning a ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray(IntVector);

impl Ray {
    /// Normalizes `v` to its primitive generator.
    pub fn new(v: IntVector) -> Result<Ray> {
        if v.is_zero() {
            return Err(Error::ZeroRay);
        }
        Ok(Ray(v.primitive()))
    }

    pub fn generator(&self) -> &IntVector {
        &self.0
    }

    pub fn into_generator(self) -> IntVector {
        self.0
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Inequality description `{x : <eq, x> = 0, <normal, x> >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct HDescription {
    equations: Vec<IntVector>,
    facet_normals: Vec<IntVector>,
}

#[derive(Clone, Debug)]
pub struct Cone {
    ambient_rank: usize,
    lineality: Vec<IntVector>,
    rays: Vec<IntVector>,
    inequalities: OnceLock<Arc<HDescription>>,
}

impl Cone {
    fn from_parts(ambient_rank: usize, lineality: Vec<IntVector>, rays: Vec<IntVector>) -> Cone {
        Cone {
            ambient_rank,
            lineality,
            rays,
            inequalities: OnceLock::new(),
        }
    }

    /// `{0}` in a lattice of the given rank.
    pub fn zero(ambient_rank: usize) -> Cone {
        Cone::from_parts(ambient_rank, Vec::new(), Vec::new())
    }

    /// The whole space `Q^n`.
    pub fn full(ambient_rank: usize) -> Cone {
        let lineality = (0..ambient_rank)
            .map(|i| IntVector::unit(ambient_rank, i))
            .collect();
        Cone::from_parts(ambient_rank, lineality, Vec::new())
    }

    /// The cone generated by `generators`, in canonical form. Zero vectors
    /// are dropped; an empty list gives the zero cone.
    pub fn from_generators(ambient_rank: usize, generators: &[IntVector]) -> Result<Cone> {
        for g in generators {
            g.check_rank(ambient_rank)?;
        }
        let h = vertex_description(ambient_rank, generators);
        let mut constraints = h.rays.clone();
        for l in &h.lineality {
            constraints.push(l.clone());
            constraints.push(-l);
        }
        let v = vertex_description(ambient_rank, &constraints);
        let cone = Cone::from_parts(ambient_rank, v.lineality, v.rays);
        let _ = cone.inequalities.set(Arc::new(HDescription {
            equations: h.lineality,
            facet_normals: h.rays,
        }));
        Ok(cone)
    }

    /// `{x : <c, x> >= 0 for all c}` in canonical form.
    pub fn from_inequalities(ambient_rank: usize, inequalities: &[IntVector]) -> Result<Cone> {
        for c in inequalities {
            c.check_rank(ambient_rank)?;
        }
        let v = vertex_description(ambient_rank, inequalities);
        Ok(Cone::from_parts(ambient_rank, v.lineality, v.rays))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Extremal rays (of the pointed quotient when the cone has lineality).
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray_list(&self) -> Vec<Ray> {
        self.rays.iter().cloned().map(Ray).collect()
    }

    /// Lattice basis of the lineality space.
    pub fn lineality(&self) -> &[IntVector] {
        &self.lineality
    }

    /// All generators: rays plus both signs of the lineality basis.
    pub fn generators(&self) -> Vec<IntVector> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(-l);
        }
        g
    }

    fn h_description(&self) -> &HDescription {
        self.inequalities.get_or_init(|| {
            let h = vertex_description(self.ambient_rank, &self.generators());
            Arc::new(HDescription {
                equations: h.lineality,
                facet_normals: h.rays,
            })
        })
    }

    /// Primitive inward normals of the facets, in the dual lattice.
    pub fn facet_normals(&self) -> &[IntVector] {
        &self.h_description().facet_normals
    }

    /// Basis of the linear forms vanishing on the cone.
    pub fn equations(&self) -> &[IntVector] {
        &self.h_description().equations
    }

    /// All inequalities: facet normals plus both signs of the equations.
    pub fn inequalities(&self) -> Vec<IntVector> {
        let h = self.h_description();
        let mut out = h.facet_normals.clone();
        for e in &h.equations {
            out.push(e.clone());
            out.push(-e);
        }
        out
    }

    pub fn dimension(&self) -> usize {
        self.ambient_rank - self.equations().len()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations().is_empty()
    }

    /// Membership decided by the inequality description.
    pub fn contains(&self, v: &IntVector) -> bool {
        if v.rank() != self.ambient_rank {
            return false;
        }
        let h = self.h_description();
        h.equations.iter().all(|e| e.dot(v).is_zero())
            && h.facet_normals.iter().all(|n| !n.dot(v).is_negative())
    }

    /// `{u : <u, v> >= 0 for all v in self}`; both descriptions are filled in.
    pub fn dual(&self) -> Cone {
        let h = self.h_description();
        let dual = Cone::from_parts(
            self.ambient_rank,
            h.equations.clone(),
            h.facet_normals.clone(),
        );
        let _ = dual.inequalities.set(Arc::new(HDescription {
            equations: self.lineality.clone(),
            facet_normals: self.rays.clone(),
        }));
        dual
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// True iff the rays extend to a basis of the ambient lattice.
    pub fn is_smooth(&self) -> Result<bool> {
        if !self.is_strongly_convex() {
            return Err(Error::NotStronglyConvex(self.to_string()));
        }
        if self.rays.is_empty() {
            return Ok(true);
        }
        if self.rays.len() > self.ambient_rank {
            return Ok(false);
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(self.ambient_rank, &self.rays));
        Ok(snf.diagonal.iter().all(One::is_one))
    }

    /// True iff the cone is strongly convex with linearly independent rays.
    pub fn is_simplex(&self) -> bool {
        self.is_strongly_convex() && rank_of(self.ambient_rank, &self.rays) == self.rays.len()
    }

    /// Multiplicity of a simplicial cone: index of the lattice spanned by
    /// its rays inside the saturated span.
    pub fn multiplicity(&self) -> Option<BigInt> {
        if !self.is_simplex() {
            return None;
        }
        if self.rays.is_empty() {
            return Some(BigInt::one());
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(self.ambient_rank, &self.rays));
        Some(snf.diagonal.iter().product())
    }

    fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// The face `self ∩ u^⊥` for `u` in the dual cone.
    fn face_cut_by(&self, u: &IntVector) -> Cone {
        let rays = self
            .rays
            .iter()
            .filter(|r| u.dot(r).is_zero())
            .cloned()
            .collect();
        Cone::from_parts(self.ambient_rank, self.lineality.clone(), rays)
    }

    /// True iff `self` is a face of `other`, i.e. `self = other ∩ u^⊥` for
    /// some `u` in the dual of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        if self.ambient_rank != other.ambient_rank || !other.contains_cone(self) {
            return false;
        }
        // The smallest face containing `self` is cut out by the sum of all
        // facet normals vanishing on it.
        let gens = self.generators();
        let mut u = IntVector::zero(self.ambient_rank);
        for n in other.facet_normals() {
            if gens.iter().all(|g| n.dot(g).is_zero()) {
                u = &u + n;
            }
        }
        other.face_cut_by(&u) == *self
    }

    /// All faces, including `{lineality}` and the cone itself, sorted by
    /// number of rays and then lexicographically.
    pub fn faces(&self) -> Vec<Cone> {
        let n_rays = self.rays.len();
        let zero_sets: Vec<Vec<bool>> = self
            .facet_normals()
            .iter()
            .map(|n| self.rays.iter().map(|r| n.dot(r).is_zero()).collect())
            .collect();
        let mut seen: std::collections::BTreeSet<Vec<bool>> = std::collections::BTreeSet::new();
        let mut stack = vec![vec![true; n_rays]];
        while let Some(set) = stack.pop() {
            if !seen.insert(set.clone()) {
                continue;
            }
            for z in &zero_sets {
                let sub: Vec<bool> = set.iter().zip(z).map(|(a, b)| *a && *b).collect();
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        let mut faces: Vec<Cone> = seen
            .into_iter()
            .map(|set| {
                let rays = self
                    .rays
                    .iter()
                    .zip(&set)
                    .filter(|(_, keep)| **keep)
                    .map(|(r, _)| r.clone())
                    .collect();
                Cone::from_parts(self.ambient_rank, self.lineality.clone(), rays)
            })
            .collect();
        faces.sort();
        faces
    }

    /// `self ∩ other`.
    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut ineq = self.inequalities();
        ineq.extend(other.inequalities());
        Cone::from_inequalities(self.ambient_rank, &ineq)
    }

    /// The cone of rays plus lineality, re-expressed through a map on
    /// generators. Used to change lattice coordinates.
    pub fn map_generators<F>(&self, target_rank: usize, f: F) -> Result<Cone>
    where
        F: Fn(&IntVector) -> IntVector,
    {
        let gens: Vec<IntVector> = self.generators().iter().map(f).collect();
        Cone::from_generators(target_rank, &gens)
    }
}

/// `ρ^⊥ ∩ dual_cone`, a face of `dual_cone` when `ρ` lies in its dual.
pub fn orthogonal_face(rho: &Ray, dual_cone: &Cone) -> Result<Cone> {
    rho.generator().check_rank(dual_cone.ambient_rank())?;
    let mut ineq = dual_cone.inequalities();
    ineq.push(rho.generator().clone());
    ineq.push(-rho.generator());
    Cone::from_inequalities(dual_cone.ambient_rank(), &ineq)
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank
            && self.lineality == other.lineality
            && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient_rank.hash(state);
        self.lineality.hash(state);
        self.rays.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ambient rank, lineality, number of rays, then rays.
impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_rank
            .cmp(&other.ambient_rank)
            .then_with(|| self.lineality.cmp(&other.lineality))
            .then_with(|| self.rays.len().cmp(&other.rays.len()))
            .then_with(|| self.rays.cmp(&other.rays))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone(")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        if !self.lineality.is_empty() {
            write!(f, "; lineality ")?;
            for (i, l) in self.lineality.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "±{l}")?;
            }
        }
        write!(f, ")")
    }
}
