use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::document::{to_i64s, FanDocument};
use crate::cone::Ray;
use crate::derivations::{
    apply, enumerate_roots, nilpotency_order, GaActionPackage, DEFAULT_NILPOTENCY_CAP,
};
use crate::error::{Error, Result};
use crate::fan::{Fan, FanReport, QuasiAffineVerdict, TorusSplit};
use crate::lattice::{rank_of, IntVector};
use crate::semigroup::{boundary_projection, AffineSemigroup, AlgebraElement};

/// Machine-readable output of every command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<FanReportDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_basis: Option<SemigroupDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootListing>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ga_actions: Option<GaActionsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanReportDoc {
    pub smooth: bool,
    pub complete: bool,
    pub edge_count: usize,
    pub class_rank: usize,
    pub class_torsion: Vec<i64>,
    pub euler_characteristic: usize,
    pub torus_factor_k: usize,
    pub quasi_affine: VerdictDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDoc {
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_step: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_check: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<SemigroupDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupDoc {
    pub generators: Vec<Vec<i64>>,
    pub units: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootListing {
    /// Index of the ray in the input document.
    pub ray_index: usize,
    pub ray: Vec<i64>,
    pub radius: i64,
    pub roots: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaActionsDoc {
    /// Rank of the torus factor split off before the construction.
    pub torus_factor_k: usize,
    /// Basis of the sublattice spanned by the rays; all vectors below are
    /// coordinates with respect to it (and its dual).
    pub sublattice_basis: Vec<Vec<i64>>,
    pub chosen_ray: Vec<i64>,
    pub root: Vec<i64>,
    pub root_pairing: i64,
    pub boundary_rays: Vec<Vec<i64>>,
    pub wall_generators: Vec<Vec<i64>>,
    pub wall_sum: Vec<i64>,
    pub characters: Vec<Vec<i64>>,
    pub character_determinant: i64,
    pub character_rank: usize,
    pub boundary_annihilation: bool,
    pub ambient_generators: Vec<Vec<i64>>,
    pub derivations: Vec<DerivationDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationDoc {
    pub degree: Vec<i64>,
    /// `k` with `∂^k χ^m = 0`, for each ambient generator `m` in order.
    pub nilpotency_orders: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub torus_factor_k: usize,
    pub sublattice_basis: Vec<Vec<i64>>,
    pub reduced: FanDocument,
}

impl ReportDocument {
    pub(crate) fn new(command: &str, doc: &FanDocument) -> Self {
        ReportDocument {
            command: command.to_string(),
            name: doc.name.clone(),
            rank: doc.rank,
            report: None,
            hilbert_basis: None,
            roots: None,
            ga_actions: None,
            decomposition: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One `dotted.key: value` line per scalar or vector field, in the same
    /// order as the JSON output.
    pub fn to_human(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut out = String::new();
        flatten("", &value, &mut out);
        out
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

fn vectors(vs: &[IntVector]) -> Result<Vec<Vec<i64>>> {
    vs.iter().map(to_i64s).collect()
}

fn rays(rs: &[Ray]) -> Result<Vec<Vec<i64>>> {
    rs.iter().map(|r| to_i64s(r.generator())).collect()
}

fn small(x: &BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Internal(format!("{x} does not fit in 64 bits")))
}

pub(crate) fn semigroup_doc(s: &AffineSemigroup) -> Result<SemigroupDoc> {
    Ok(SemigroupDoc {
        generators: vectors(&s.hilbert_basis)?,
        units: vectors(&s.lineality_units)?,
    })
}

pub(crate) fn fan_report_doc(r: &FanReport) -> Result<FanReportDoc> {
    let quasi_affine = match &r.quasi_affine {
        QuasiAffineVerdict::Yes { ambient } => VerdictDoc {
            verdict: true,
            failed_step: None,
            failed_check: None,
            reason: None,
            ambient: Some(semigroup_doc(ambient)?),
        },
        QuasiAffineVerdict::No { step, reason } => VerdictDoc {
            verdict: false,
            failed_step: Some(step.number()),
            failed_check: Some(step.name().to_string()),
            reason: Some(reason.clone()),
            ambient: None,
        },
    };
    Ok(FanReportDoc {
        smooth: r.smooth,
        complete: r.complete,
        edge_count: r.edge_count,
        class_rank: r.class_rank,
        class_torsion: r.class_torsion.iter().map(small).collect::<Result<_>>()?,
        euler_characteristic: r.euler_characteristic,
        torus_factor_k: r.torus_factor_k,
        quasi_affine,
    })
}

/// Roots of every extremal ray of the support cone, or of the ray with
/// document index `only`.
pub(crate) fn root_listings(
    doc: &FanDocument,
    s: &AffineSemigroup,
    only: Option<usize>,
    radius: i64,
) -> Result<Vec<RootListing>> {
    let indices: Vec<usize> = match only {
        Some(i) if i >= doc.rays.len() => {
            return Err(Error::InvalidDocument(format!(
                "ray index {i} out of range (the document has {} rays)",
                doc.rays.len()
            )))
        }
        Some(i) => vec![i],
        None => {
            let sigma = s.primal_cone();
            if sigma.rays().is_empty() {
                return Err(Error::NoExtremalRays);
            }
            let primitive: Vec<IntVector> =
                doc.ray_vectors().iter().map(IntVector::primitive).collect();
            let mut idx: Vec<usize> = sigma
                .rays()
                .iter()
                .filter_map(|r| primitive.iter().position(|p| p == r))
                .collect();
            idx.sort_unstable();
            idx
        }
    };
    indices
        .into_iter()
        .map(|i| {
            let rho = Ray::new(IntVector::from_i64s(&doc.rays[i]))?;
            let roots = enumerate_roots(s, &rho, radius)?;
            let warning = roots
                .is_empty()
                .then(|| format!("no roots in the box of radius {radius}; increase --radius"));
            Ok(RootListing {
                ray_index: i,
                ray: to_i64s(rho.generator())?,
                radius,
                roots: vectors(&roots)?,
                warning,
            })
        })
        .collect()
}

pub(crate) fn ga_actions_doc(split: &TorusSplit, p: &GaActionPackage) -> Result<GaActionsDoc> {
    let n = split.reduced.ambient_rank();
    let generators = p.ambient.algebra_generators();
    let mut annihilates = true;
    let mut derivations = Vec::with_capacity(p.derivations.len());
    for d in &p.derivations {
        let mut orders = Vec::with_capacity(generators.len());
        for m in &generators {
            orders.push(nilpotency_order(d, m, DEFAULT_NILPOTENCY_CAP)?);
            let image = apply(d, &AlgebraElement::monomial(m.clone()))?;
            for r in &p.boundary_rays {
                annihilates &= boundary_projection(r, &p.ambient, &image)?.is_zero();
            }
        }
        derivations.push(DerivationDoc {
            degree: to_i64s(d.degree())?,
            nilpotency_orders: orders,
        });
    }
    Ok(GaActionsDoc {
        torus_factor_k: split.k,
        sublattice_basis: vectors(&split.sublattice_basis)?,
        chosen_ray: to_i64s(p.chosen_ray.generator())?,
        root: to_i64s(&p.root)?,
        root_pairing: small(&p.root.dot(p.chosen_ray.generator()))?,
        boundary_rays: rays(&p.boundary_rays)?,
        wall_generators: vectors(&p.wall_generators)?,
        wall_sum: to_i64s(&p.wall_sum)?,
        characters: vectors(&p.characters)?,
        character_determinant: small(&p.character_determinant)?,
        character_rank: rank_of(n, &p.characters),
        boundary_annihilation: annihilates,
        ambient_generators: vectors(&generators)?,
        derivations,
    })
}

pub(crate) fn decomposition_doc(
    split: &TorusSplit,
    name: Option<String>,
) -> Result<DecompositionDoc> {
    Ok(DecompositionDoc {
        torus_factor_k: split.k,
        sublattice_basis: vectors(&split.sublattice_basis)?,
        reduced: FanDocument::from_fan(&split.reduced, name)?,
    })
}

pub(crate) fn analyze(fan: &Fan) -> Result<FanReportDoc> {
    fan_report_doc(&fan.report())
}
