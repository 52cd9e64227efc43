//! Chromatic bound reports for pseudomanifolds and sphere joins.

use serde::{Deserialize, Serialize};

use super::exact::{chromatic_number_exact, Chromatic, SolverOptions};
use crate::arithmetic::{sphere_from_spec, zykov_join, Parity, SphereSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::pseudomanifold_dimension;

/// `K = S^k + K′` with `S^k` given by construction.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sphere: SphereSpec,
    pub remainder: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionInfo {
    pub sphere: SphereSpec,
    pub sphere_dimension: i32,
    /// `d − k − 1`.
    pub remainder_dimension: i32,
    /// Dimension at which the remainder certifies, if it does.
    pub remainder_certified: Option<i32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub kind: BoundKind,
    pub value: usize,
    /// `None` when only an interval is known and it straddles the bound.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChromaticValue {
    Exact(usize),
    Interval { lower: usize, upper: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub dimension: i32,
    pub chromatic: ChromaticValue,
    pub applicable_bounds: Vec<BoundCheck>,
    pub decomposition: Option<DecompositionInfo>,
}

impl BoundsReport {
    pub fn bound(&self, name: &str) -> Option<&BoundCheck> {
        self.applicable_bounds.iter().find(|b| b.name == name)
    }

    /// Some bound is known to fail.
    pub fn any_violated(&self) -> bool {
        self.applicable_bounds.iter().any(|b| b.holds == Some(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// The sphere dimension `k` for which the even-cycle ceiling applies at
/// dimension `d`: `d/2 − 1` for even `d`, `(d+1)/2 − 1` for odd `d`.
pub fn close_sphere_dimension(d: i32) -> Option<i32> {
    let k = if d % 2 == 0 { d / 2 - 1 } else { (d + 1) / 2 - 1 };
    (k >= 0).then_some(k)
}

pub fn check_bounds(k: &Graph, decomposition: Option<&Decomposition>, opts: &SolverOptions) -> Result<BoundsReport> {
    let d = pseudomanifold_dimension(k).ok_or_else(|| Error::NotCertified(String::new()))?;
    let info = decomposition.map(|dec| describe(k, d, dec)).transpose()?;
    let chromatic = chromatic_number_exact(k, opts);

    let du = d.max(0) as usize;
    let mut bounds = vec![
        check("general-lower", BoundKind::Lower, du + 1, &chromatic),
        check("general-upper", BoundKind::Upper, 2 * du + 2, &chromatic),
    ];
    if let Some(info) = &info {
        bounds.push(check("join-sphere", BoundKind::Upper, 2 * du + 1, &chromatic));
        let even = info.sphere.parity() == Some(Parity::Even);
        if even && close_sphere_dimension(d) == Some(info.sphere_dimension) {
            bounds.push(check(
                "even-cycle-close-k",
                BoundKind::Upper,
                (3 * (du + 1)).div_ceil(2),
                &chromatic,
            ));
        }
    }
    Ok(BoundsReport {
        dimension: d,
        chromatic: match chromatic {
            Chromatic::Exact { value, .. } => ChromaticValue::Exact(value),
            Chromatic::Bounded { lower, upper, .. } => ChromaticValue::Interval { lower, upper },
        },
        applicable_bounds: bounds,
        decomposition: info,
    })
}

fn describe(k: &Graph, d: i32, dec: &Decomposition) -> Result<DecompositionInfo> {
    let joined = zykov_join(&sphere_from_spec(&dec.sphere), &dec.remainder);
    if joined != *k && !joined.is_isomorphic(k) {
        return Err(Error::DecompositionMismatch(format!(
            "{} + remainder ({} vertices) is not isomorphic to the input",
            dec.sphere,
            dec.remainder.len()
        )));
    }
    let sphere_dimension = dec.sphere.dimension();
    Ok(DecompositionInfo {
        sphere: dec.sphere.clone(),
        sphere_dimension,
        remainder_dimension: d - sphere_dimension - 1,
        remainder_certified: pseudomanifold_dimension(&dec.remainder),
    })
}

fn check(name: &str, kind: BoundKind, value: usize, x: &Chromatic) -> BoundCheck {
    let (lo, hi) = (x.lower(), x.upper());
    let holds = match kind {
        BoundKind::Upper if hi <= value => Some(true),
        BoundKind::Upper if lo > value => Some(false),
        BoundKind::Lower if lo >= value => Some(true),
        BoundKind::Lower if hi < value => Some(false),
        _ => None,
    };
    BoundCheck {
        name: name.to_string(),
        kind,
        value,
        holds,
    }
}
