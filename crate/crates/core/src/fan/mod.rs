//! Fans as combinatorial toric varieties, and the fan-level invariants:
//! smoothness, completeness, Euler characteristic, class group, torus-factor
//! splitting, the quasi-affineness verdict and torus-fixed-point witnesses.

pub mod catalog;

use std::fmt;

use num_bigint::BigInt;

use crate::cone::{Cone, Ray};
use crate::error::{Error, Result};
use crate::lattice::{
    coordinates_in_basis, rank_of, saturated_span, smith_normal_form, IntMatrix, IntVector,
};
use crate::semigroup::{fan_coordinate_semigroup, AffineSemigroup};

/// A face-closed collection of strongly convex cones meeting along faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_rank: usize,
    /// All cones, sorted by number of rays and then lexicographically.
    cones: Vec<Cone>,
    rays: Vec<Ray>,
}

/// The cone spanned by all rays of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCone {
    pub cone: Cone,
    /// Every cone of the fan is a face of `cone`.
    pub all_cones_are_faces: bool,
}

/// Cokernel of `M → Z^d`, `u ↦ (⟨u, ρ_i⟩)_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl ClassGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// `Y ≅ Y' × (C*)^k` at the level of fans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSplit {
    /// The fan re-expressed in `N' = span(rays) ∩ N`.
    pub reduced: Fan,
    /// `k = rank N / N'`.
    pub k: usize,
    /// Basis of `N'` used for the coordinates of `reduced`.
    pub sublattice_basis: Vec<IntVector>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictStep {
    Smoothness,
    ClassGroup,
    FaceCondition,
}

impl VerdictStep {
    /// Position in the pipeline; step 1 (torus splitting) cannot fail.
    pub fn number(self) -> u8 {
        match self {
            VerdictStep::Smoothness => 2,
            VerdictStep::ClassGroup => 3,
            VerdictStep::FaceCondition => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VerdictStep::Smoothness => "smoothness",
            VerdictStep::ClassGroup => "class-group",
            VerdictStep::FaceCondition => "face-condition",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiAffineVerdict {
    /// The variety is an open subset of `Spec C[σ∨ ∩ M]`; `ambient` is that
    /// semigroup (including the units of any split torus factor).
    Yes {
        ambient: AffineSemigroup,
    },
    No {
        step: VerdictStep,
        reason: String,
    },
}

impl QuasiAffineVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, QuasiAffineVerdict::Yes { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointWitness {
    /// Full-dimensional cones, i.e. torus-fixed points.
    FixedPoints(Vec<Cone>),
    /// `p` divides the Euler characteristic, so the criterion says nothing.
    Inapplicable {
        euler_characteristic: usize,
        prime: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    pub holds: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    pub ambient_rank: usize,
    pub smooth: bool,
    pub complete: bool,
    pub edge_count: usize,
    pub class_rank: usize,
    pub class_torsion: Vec<BigInt>,
    pub euler_characteristic: usize,
    pub torus_factor_k: usize,
    pub quasi_affine: QuasiAffineVerdict,
}

impl Fan {
    /// Closes `cones` under faces and checks the fan axioms.
    pub fn validate(ambient_rank: usize, cones: Vec<Cone>) -> Result<Fan> {
        let mut input: Vec<Cone> = Vec::new();
        for c in cones {
            if c.ambient_rank() != ambient_rank {
                return Err(Error::DimensionMismatch {
                    expected: ambient_rank,
                    found: c.ambient_rank(),
                });
            }
            if !c.is_strongly_convex() {
                return Err(Error::NotStronglyConvex(c.to_string()));
            }
            input.push(c);
        }
        input.sort();
        input.dedup();

        for (i, a) in input.iter().enumerate() {
            for b in &input[i + 1..] {
                let meet = a.intersection(b)?;
                if !meet.is_face_of(a) || !meet.is_face_of(b) {
                    return Err(Error::NotAFan {
                        first: a.to_string(),
                        second: b.to_string(),
                    });
                }
            }
        }

        let mut cones = vec![Cone::zero(ambient_rank)];
        for c in &input {
            cones.extend(c.faces());
        }
        cones.sort();
        cones.dedup();
        let rays = cones
            .iter()
            .filter(|c| c.rays().len() == 1)
            .map(|c| Ray::new(c.rays()[0].clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Fan {
            ambient_rank,
            cones,
            rays,
        })
    }

    /// Builds the fan whose cones are spanned by the given subsets of `rays`.
    pub fn from_ray_indices(
        ambient_rank: usize,
        rays: &[IntVector],
        cones: &[Vec<usize>],
    ) -> Result<Fan> {
        let mut built = Vec::with_capacity(cones.len());
        for idx in cones {
            let gens: Vec<IntVector> = idx.iter().map(|&i| rays[i].clone()).collect();
            built.push(Cone::from_generators(ambient_rank, &gens)?);
        }
        Fan::validate(ambient_rank, built)
    }

    /// The fan `{0}` of the torus `(C*)^n`.
    pub fn torus(ambient_rank: usize) -> Fan {
        Fan::validate(ambient_rank, Vec::new()).expect("the zero fan is valid")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// The edges of the fan, sorted lexicographically.
    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray_generators(&self) -> Vec<IntVector> {
        self.rays.iter().map(|r| r.generator().clone()).collect()
    }

    /// The number `d` of edges.
    pub fn edge_count(&self) -> usize {
        self.rays.len()
    }

    pub fn is_torus(&self) -> bool {
        self.rays.is_empty()
    }

    /// Cones that are not proper faces of other cones.
    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self.cones.iter().any(|d| {
                    d.rays().len() > c.rays().len() && c.rays().iter().all(|r| d.rays().contains(r))
                })
            })
            .collect()
    }

    /// Indices into [`Fan::rays`] of each ray of `cone`.
    pub fn ray_indices(&self, cone: &Cone) -> Vec<usize> {
        cone.rays()
            .iter()
            .map(|r| {
                self.rays
                    .iter()
                    .position(|x| x.generator() == r)
                    .expect("cone rays are fan rays")
            })
            .collect()
    }

    pub fn support_cone(&self) -> SupportCone {
        let cone = Cone::from_generators(self.ambient_rank, &self.ray_generators())
            .expect("fan rays have the ambient rank");
        let all_cones_are_faces = self.cones.iter().all(|c| c.is_face_of(&cone));
        SupportCone {
            cone,
            all_cones_are_faces,
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.cones
            .iter()
            .all(|c| c.is_smooth().expect("fan cones are strongly convex"))
    }

    /// Whether the union of the cones is all of `N_Q`: the fan is pure of
    /// full dimension and every codimension-one cone lies in exactly two
    /// maximal cones.
    pub fn is_complete(&self) -> bool {
        let n = self.ambient_rank;
        if n == 0 {
            return true;
        }
        let maximal = self.maximal_cones();
        if maximal.iter().any(|c| c.dimension() != n) {
            return false;
        }
        self.cones
            .iter()
            .filter(|c| c.dimension() + 1 == n)
            .all(|wall| maximal.iter().filter(|m| wall.is_face_of(m)).count() == 2)
    }

    /// Number of full-dimensional cones, i.e. torus-fixed points.
    pub fn euler_characteristic(&self) -> usize {
        self.full_dimensional_cones().len()
    }

    pub fn full_dimensional_cones(&self) -> Vec<Cone> {
        self.cones
            .iter()
            .filter(|c| c.dimension() == self.ambient_rank)
            .cloned()
            .collect()
    }

    /// Class group of the variety; requires the rays to span `N_Q`.
    pub fn class_group(&self) -> Result<ClassGroup> {
        let gens = self.ray_generators();
        let span = rank_of(self.ambient_rank, &gens);
        if span != self.ambient_rank {
            return Err(Error::RaysDoNotSpan {
                rank: self.ambient_rank,
                span,
            });
        }
        let d = gens.len();
        if d == 0 {
            return Ok(ClassGroup {
                rank: 0,
                torsion: Vec::new(),
            });
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(self.ambient_rank, &gens));
        Ok(ClassGroup {
            rank: d - snf.rank,
            torsion: snf.torsion(),
        })
    }

    /// Re-expresses the fan in the saturated span `N'` of its rays.
    pub fn split_torus_factor(&self) -> TorusSplit {
        let n = self.ambient_rank;
        let basis =
            saturated_span(n, &self.ray_generators()).expect("fan rays have the ambient rank");
        let r = basis.len();
        let cones: Vec<Cone> = self
            .cones
            .iter()
            .map(|c| {
                c.map_generators(r, |v| {
                    coordinates_in_basis(n, &basis, v).expect("rays lie in their saturated span")
                })
                .expect("coordinates have the reduced rank")
            })
            .collect();
        let reduced = Fan::validate(r, cones).expect("a unimodular image of a fan is a fan");
        TorusSplit {
            reduced,
            k: n - r,
            sublattice_basis: basis,
        }
    }

    /// Decides quasi-affineness of a smooth toric variety along the chain:
    /// split torus factors, require smoothness, require a trivial class
    /// group (so `d = n` and the support cone is a simplex), and require
    /// every cone to be a face of the support cone.
    pub fn quasi_affine_verdict(&self) -> QuasiAffineVerdict {
        let split = self.split_torus_factor();
        if let Some(bad) = self
            .cones
            .iter()
            .find(|c| !c.is_smooth().expect("fan cones are strongly convex"))
        {
            return QuasiAffineVerdict::No {
                step: VerdictStep::Smoothness,
                reason: format!("cone {bad} is not smooth"),
            };
        }
        let class = split
            .reduced
            .class_group()
            .expect("reduced fan rays span by construction");
        if !class.is_trivial() {
            let torsion: Vec<String> = class.torsion.iter().map(ToString::to_string).collect();
            return QuasiAffineVerdict::No {
                step: VerdictStep::ClassGroup,
                reason: format!(
                    "class group has rank {} and torsion [{}]",
                    class.rank,
                    torsion.join(",")
                ),
            };
        }
        let support = split.reduced.support_cone();
        if !support.all_cones_are_faces {
            return QuasiAffineVerdict::No {
                step: VerdictStep::FaceCondition,
                reason: format!("some cone is not a face of {}", support.cone),
            };
        }
        QuasiAffineVerdict::Yes {
            ambient: fan_coordinate_semigroup(self),
        }
    }

    /// Torus-fixed points witnessing `X^G ≠ ∅` for `G ⊂ T` a `p`-group, when
    /// `p` does not divide the Euler characteristic.
    pub fn fixed_point_witness(&self, p: u64) -> Result<FixedPointWitness> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let chi = self.euler_characteristic();
        if (chi as u64).is_multiple_of(p) {
            return Ok(FixedPointWitness::Inapplicable {
                euler_characteristic: chi,
                prime: p,
            });
        }
        Ok(FixedPointWitness::FixedPoints(
            self.full_dimensional_cones(),
        ))
    }

    /// The torus of a rank-`n` fan contains a faithful `(Z/pZ)^n`, so the
    /// dimension bound `dim X >= n` always holds; the note flags fans where
    /// the Euler-characteristic criterion does not apply.
    pub fn remark_dimension_check(&self, p: u64) -> Result<DimensionCheck> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let chi = self.euler_characteristic();
        let note = (chi as u64).is_multiple_of(p).then(|| {
            format!("χ = {chi} is divisible by p = {p}: the fixed-point criterion does not apply")
        });
        Ok(DimensionCheck { holds: true, note })
    }

    pub fn report(&self) -> FanReport {
        let split = self.split_torus_factor();
        let class = split
            .reduced
            .class_group()
            .expect("reduced fan rays span by construction");
        FanReport {
            ambient_rank: self.ambient_rank,
            smooth: self.is_smooth(),
            complete: self.is_complete(),
            edge_count: self.edge_count(),
            class_rank: class.rank,
            class_torsion: class.torsion,
            euler_characteristic: self.euler_characteristic(),
            torus_factor_k: split.k,
            quasi_affine: self.quasi_affine_verdict(),
        }
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fan in Z^{} with maximal cones [", self.ambient_rank)?;
        for (i, c) in self.maximal_cones().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests;
