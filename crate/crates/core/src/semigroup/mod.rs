//! The affine semigroup `σ∨ ∩ M` and its monomial algebra `C[σ∨ ∩ M]`.

mod algebra;
mod hilbert;

use num_traits::{Signed, Zero};

#[cfg(test)]
pub(crate) use algebra::rational;
pub use algebra::{character_value, AlgebraElement};

use crate::cone::{Cone, Ray};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::IntVector;

/// `σ∨ ∩ M` together with a finite generating set.
///
/// `hilbert_basis` is the minimal generating set of the pointed part; the
/// units `±lineality_units` generate the group of invertible elements, which
/// is nontrivial exactly when `σ∨` is not pointed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSemigroup {
    pub dual_cone: Cone,
    pub hilbert_basis: Vec<IntVector>,
    pub lineality_units: Vec<IntVector>,
}

impl AffineSemigroup {
    pub fn ambient_rank(&self) -> usize {
        self.dual_cone.ambient_rank()
    }

    /// Membership `m ∈ σ∨ ∩ M`, decided by the facet inequalities.
    pub fn contains(&self, m: &IntVector) -> bool {
        self.dual_cone.contains(m)
    }

    /// The cone `σ` whose dual this semigroup lives in.
    pub fn primal_cone(&self) -> Cone {
        self.dual_cone.dual()
    }

    /// All algebra generators: the Hilbert basis followed by `±` units.
    pub fn algebra_generators(&self) -> Vec<IntVector> {
        let mut g = self.hilbert_basis.clone();
        for u in &self.lineality_units {
            g.push(u.clone());
            g.push(-u);
        }
        g
    }
}

/// Gordon's lemma made effective: a finite generating set of `dual_cone ∩ M`.
pub fn hilbert_basis(dual_cone: &Cone) -> AffineSemigroup {
    let hb = hilbert::compute(dual_cone);
    AffineSemigroup {
        dual_cone: dual_cone.clone(),
        hilbert_basis: hb.generators,
        lineality_units: hb.units,
    }
}

/// Membership in the semigroup; same as [`AffineSemigroup::contains`].
pub fn contains(s: &AffineSemigroup, m: &IntVector) -> bool {
    s.contains(m)
}

/// The surjection `C[σ∨_M] → C[σ∨_M ∩ ρ_i^⊥]`: keeps the terms on the wall
/// `⟨m, ρ_i⟩ = 0` and kills the rest.
pub fn boundary_projection(
    rho_i: &Ray,
    s: &AffineSemigroup,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    rho_i.generator().check_rank(s.ambient_rank())?;
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        let p = m.dot(rho_i.generator());
        if p.is_negative() || !s.contains(m) {
            return Err(Error::Integrity(format!(
                "term χ^{m} is not regular (pairing with {rho_i} is {p})"
            )));
        }
        if p.is_zero() {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Generators of `O(X)` for the toric variety of `fan`: the Hilbert basis of
/// `∩_σ σ∨ ∩ M`, which is the dual of the cone spanned by all rays.
pub fn fan_coordinate_semigroup(fan: &Fan) -> AffineSemigroup {
    hilbert_basis(&fan.support_cone().cone.dual())
}
