//! Vertex labelings, neighbor-sum weights and distance antimagic checks.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Result;
use crate::graph::Graph;

/// Assignment of a label to every vertex; valid when it is a bijection onto
/// `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    pub labels: Vec<u32>,
}

/// Why a label sequence is not a bijection onto `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum LabelingDefect {
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("label {value} at vertex {vertex} is outside 1..={order}")]
    OutOfRange {
        vertex: usize,
        value: u32,
        order: usize,
    },
    #[error("label {value} is used by vertices {first} and {second}")]
    Duplicate {
        value: u32,
        first: usize,
        second: usize,
    },
}

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Self {
        Labeling { labels }
    }

    /// `f(v_i) = i` in construction order.
    pub fn identity(order: usize) -> Self {
        Labeling {
            labels: (1..=order as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// First defect found scanning vertices in id order.
    pub fn check(&self, order: usize) -> std::result::Result<(), LabelingDefect> {
        if self.labels.len() != order {
            return Err(LabelingDefect::WrongLength {
                expected: order,
                got: self.labels.len(),
            });
        }
        let mut owner = vec![usize::MAX; order + 1];
        for (vertex, &value) in self.labels.iter().enumerate() {
            if value == 0 || value as usize > order {
                return Err(LabelingDefect::OutOfRange {
                    vertex,
                    value,
                    order,
                });
            }
            let slot = &mut owner[value as usize];
            if *slot != usize::MAX {
                return Err(LabelingDefect::Duplicate {
                    value,
                    first: *slot,
                    second: vertex,
                });
            }
            *slot = vertex;
        }
        Ok(())
    }
}

pub fn identity_labeling(g: &Graph) -> Labeling {
    Labeling::identity(g.order())
}

/// Parameters of an `(a, d)`-distance antimagic weight progression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progression {
    pub a: i64,
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub weights: Vec<i64>,
    pub distinct: bool,
    /// All vertex pairs `(u, v)`, `u < v`, of equal weight, sorted.
    pub collisions: Vec<[usize; 2]>,
    pub arithmetic: Option<Progression>,
}

impl WeightProfile {
    fn from_weights(weights: Vec<i64>) -> Self {
        let mut by_weight: Vec<(i64, usize)> =
            weights.iter().enumerate().map(|(v, &w)| (w, v)).collect();
        by_weight.sort_unstable();

        let mut collisions = Vec::new();
        for group in by_weight.chunk_by(|a, b| a.0 == b.0) {
            for (i, &(_, u)) in group.iter().enumerate() {
                for &(_, v) in &group[i + 1..] {
                    collisions.push([u, v]);
                }
            }
        }
        collisions.sort_unstable();

        let sorted: Vec<i64> = by_weight.iter().map(|&(w, _)| w).collect();
        let arithmetic = progression(&sorted);
        WeightProfile {
            distinct: collisions.is_empty(),
            weights,
            collisions,
            arithmetic,
        }
    }

    /// Weights in ascending order.
    pub fn sorted_weights(&self) -> Vec<i64> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }
}

fn progression(sorted: &[i64]) -> Option<Progression> {
    match sorted {
        [] => None,
        [a] => Some(Progression { a: *a, d: 0 }),
        [a, b, ..] => {
            let d = b - a;
            (d > 0 && sorted.windows(2).all(|w| w[1] - w[0] == d))
                .then_some(Progression { a: *a, d })
        }
    }
}

/// Neighbor-label sums without any validation of `f`.
pub(crate) fn raw_weights(g: &Graph, labels: &[u32]) -> Vec<i64> {
    (0..g.order())
        .map(|v| g.nbrs(v).iter().map(|&u| i64::from(labels[u])).sum())
        .collect()
}

/// `w(v) = Σ_{u ∈ N(v)} f(u)` for every vertex, plus distinctness,
/// collisions and progression detection. Fails when `f` is not a bijection.
pub fn weight_profile(g: &Graph, f: &Labeling) -> Result<WeightProfile> {
    f.check(g.order())?;
    Ok(WeightProfile::from_weights(raw_weights(g, &f.labels)))
}

/// Result of [`verify_daml`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub is_daml: bool,
    pub defect: Option<LabelingDefect>,
    /// Present whenever the label count matches the order, even for
    /// labelings that are not bijections.
    pub profile: Option<WeightProfile>,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.defect, &self.profile) {
            (Some(defect), _) => write!(f, "not a labeling: {defect}"),
            (None, Some(p)) if p.distinct => write!(f, "distance antimagic"),
            (None, Some(p)) => write!(f, "{} weight collision(s)", p.collisions.len()),
            (None, None) => write!(f, "no profile"),
        }
    }
}

/// True iff `f` is a bijection onto `1..=order` with pairwise distinct
/// weights. Invalid labelings are diagnosed rather than rejected.
pub fn verify_daml(g: &Graph, f: &Labeling) -> Verification {
    let defect = f.check(g.order()).err();
    let profile =
        (f.len() == g.order()).then(|| WeightProfile::from_weights(raw_weights(g, &f.labels)));
    let is_daml = defect.is_none() && profile.as_ref().is_some_and(|p| p.distinct);
    Verification {
        is_daml,
        defect,
        profile,
    }
}
