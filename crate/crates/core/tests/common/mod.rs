#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use torikit::cli::{parse_fan, FanDocument};
use torikit::fan::Fan;
use torikit::lattice::{coordinates_in_basis, pairing, IntVector};

pub const COMMANDS: [&str; 5] = [
    "analyze",
    "hilbert-basis",
    "decompose",
    "roots",
    "ga-actions",
];

pub fn data_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

/// Names (file stems) of the fan corpus, sorted.
pub fn fan_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(data_dir("fans"))
        .expect("fan corpus exists")
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "json")
                .then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

pub fn fan_path(name: &str) -> PathBuf {
    data_dir("fans").join(format!("{name}.json"))
}

pub fn load_document(name: &str) -> FanDocument {
    parse_fan(&std::fs::read_to_string(fan_path(name)).unwrap()).unwrap()
}

pub fn load_fan(name: &str) -> Fan {
    load_document(name).to_fan().unwrap()
}

pub fn golden_path(name: &str, command: &str) -> PathBuf {
    data_dir("golden").join(format!("{name}.{command}.json"))
}

pub fn v(x: &[i64]) -> IntVector {
    IntVector::from_i64s(x)
}

/// `m ∈ σ∨`, decided from raw generators of `σ`.
pub fn member(gens: &[IntVector], m: &IntVector) -> bool {
    gens.iter()
        .all(|g| pairing(m, g).unwrap() >= BigInt::from(0))
}

/// Decides whether `x` is a non-negative combination of `basis` plus an
/// integer combination of `units`, by descending the grading `Σ gens`,
/// which is positive on `σ∨` away from its lineality space.
pub struct GenerationOracle<'a> {
    pub gens: &'a [IntVector],
    pub basis: &'a [IntVector],
    pub units: &'a [IntVector],
    grading: IntVector,
    memo: HashMap<IntVector, bool>,
}

impl<'a> GenerationOracle<'a> {
    pub fn new(
        rank: usize,
        gens: &'a [IntVector],
        basis: &'a [IntVector],
        units: &'a [IntVector],
    ) -> Self {
        let grading = gens.iter().fold(IntVector::zero(rank), |acc, g| &acc + g);
        GenerationOracle {
            gens,
            basis,
            units,
            grading,
            memo: HashMap::new(),
        }
    }

    pub fn generated(&mut self, x: &IntVector) -> bool {
        if let Some(&r) = self.memo.get(x) {
            return r;
        }
        let r = if pairing(&self.grading, x).unwrap() == BigInt::from(0) {
            x.is_zero() || coordinates_in_basis(x.rank(), self.units, x).is_some()
        } else {
            let basis = self.basis;
            basis.iter().any(|h| {
                let rest = x - h;
                member(self.gens, &rest) && self.generated(&rest)
            })
        };
        self.memo.insert(x.clone(), r);
        r
    }
}

/// Points of `[lo, hi]^rank`.
pub fn box_points(rank: usize, lo: i64, hi: i64) -> Vec<IntVector> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.iter().map(|p| v(p)).collect()
}

/// Flattens JSON the same way the human output is documented to:
/// `dotted.key: value`, arrays of objects indexed by position.
pub fn flatten_json(prefix: &str, value: &serde_json::Value, out: &mut Vec<(String, String)>) {
    use serde_json::Value;
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => map.iter().for_each(|(k, x)| flatten_json(&key(k), x, out)),
        Value::Array(items) if items.iter().any(Value::is_object) => items
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten_json(&key(&i.to_string()), x, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}
