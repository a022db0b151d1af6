//! Exhaustive backtracking search for distance antimagic labelings.
//!
//! Vertices are labeled in descending-degree order (ties by id), trying
//! labels in increasing order. A vertex's weight is final once all of its
//! neighbors carry labels; a final weight equal to another final weight (or,
//! in target mode, absent from the remaining target multiset) prunes the
//! branch. The first solution reached is therefore the lexicographically
//! least label sequence read in assignment order.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, TwinPair};
use crate::labeling::Labeling;

/// Largest order [`decide_small`] accepts.
pub const SMALL_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Search-tree node limit, counted per label assignment attempt.
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    /// Count every solution instead of stopping at the first.
    pub find_all: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_time: Some(Duration::from_secs(60)),
            find_all: false,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: u64::MAX,
            max_time: None,
            find_all: false,
        }
    }

    pub fn with_nodes(max_nodes: u64) -> Result<Self> {
        if max_nodes < 1 {
            return Err(Error::Usage("max_nodes must be at least 1".into()));
        }
        Ok(SearchBudget {
            max_nodes,
            ..Self::default()
        })
    }

    pub fn counting(mut self) -> Self {
        self.find_all = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    DamlFound,
    TwinObstruction,
    ExhaustedNoLabeling,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Present iff `kind` is `DamlFound`.
    pub labeling: Option<Labeling>,
    /// Present iff `kind` is `TwinObstruction`.
    pub twin: Option<TwinPair>,
    pub nodes_explored: u64,
    /// Solution count in counting mode, when the whole space was covered.
    pub all_solutions_count: Option<u64>,
}

impl Certificate {
    fn twin(pair: TwinPair) -> Self {
        Certificate {
            kind: CertificateKind::TwinObstruction,
            labeling: None,
            twin: Some(pair),
            nodes_explored: 0,
            all_solutions_count: None,
        }
    }

    fn exhausted(nodes_explored: u64, counting: bool) -> Self {
        Certificate {
            kind: CertificateKind::ExhaustedNoLabeling,
            labeling: None,
            twin: None,
            nodes_explored,
            all_solutions_count: counting.then_some(0),
        }
    }
}

/// Searches for a labeling with pairwise distinct weights. With a target,
/// only labelings whose weight multiset equals the target are accepted; an
/// `ExhaustedNoLabeling` verdict then refutes the target, not DAML existence.
pub fn search_daml(g: &Graph, budget: &SearchBudget, target: Option<&[i64]>) -> Certificate {
    if let Some(pair) = g.find_twin_pair() {
        return Certificate::twin(pair);
    }
    search_exhaustive(g, budget, target)
}

/// Like [`search_daml`] but without the twin shortcut: a negative answer is
/// always `ExhaustedNoLabeling` backed by a full traversal. Used to confirm
/// twin certificates independently.
pub fn search_exhaustive(g: &Graph, budget: &SearchBudget, target: Option<&[i64]>) -> Certificate {
    let n = g.order();
    let max_weight = (n * (n + 1) / 2) as i64;

    let target_counts = match target {
        None => None,
        Some(t) => {
            if t.len() != n || t.iter().any(|&w| w < 0 || w > max_weight) {
                return Certificate::exhausted(0, budget.find_all);
            }
            let mut counts = vec![0u32; max_weight as usize + 1];
            for &w in t {
                counts[w as usize] += 1;
            }
            Some(counts)
        }
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut state = State {
        g,
        order,
        labels: vec![0; n],
        used: vec![false; n + 1],
        pending: (0..n).map(|v| g.degree(v)).collect(),
        partial: vec![0; n],
        seen: vec![false; max_weight as usize + 1],
        target: target_counts,
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: budget.max_time.map(|d| Instant::now() + d),
        find_all: budget.find_all,
        first: None,
        count: 0,
        out_of_budget: false,
    };

    // isolated vertices have final weight 0 from the start
    for v in 0..n {
        if g.degree(v) == 0 && !state.finalize(v) {
            return Certificate::exhausted(0, budget.find_all);
        }
    }

    state.descend(0);

    let nodes_explored = state.nodes;
    match (state.first, state.out_of_budget) {
        (Some(labels), out) => Certificate {
            kind: CertificateKind::DamlFound,
            labeling: Some(Labeling::new(labels)),
            twin: None,
            nodes_explored,
            all_solutions_count: (state.find_all && !out).then_some(state.count),
        },
        (None, true) => Certificate {
            kind: CertificateKind::BudgetExceeded,
            labeling: None,
            twin: None,
            nodes_explored,
            all_solutions_count: None,
        },
        (None, false) => Certificate::exhausted(nodes_explored, state.find_all),
    }
}

/// Definitive verdict for graphs of order at most [`SMALL_ORDER`]: the
/// search runs without node or time caps, so `BudgetExceeded` cannot occur.
pub fn decide_small(g: &Graph) -> Result<Certificate> {
    decide_small_with_target(g, None)
}

pub fn decide_small_with_target(g: &Graph, target: Option<&[i64]>) -> Result<Certificate> {
    if g.order() > SMALL_ORDER {
        return Err(Error::Usage(format!(
            "decide_small handles order <= {SMALL_ORDER}, got {}",
            g.order()
        )));
    }
    Ok(search_daml(g, &SearchBudget::unlimited(), target))
}

/// [`decide_small`] without the twin shortcut.
pub fn decide_small_exhaustive(g: &Graph) -> Result<Certificate> {
    if g.order() > SMALL_ORDER {
        return Err(Error::Usage(format!(
            "decide_small handles order <= {SMALL_ORDER}, got {}",
            g.order()
        )));
    }
    Ok(search_exhaustive(g, &SearchBudget::unlimited(), None))
}

struct State<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    labels: Vec<u32>,
    used: Vec<bool>,
    // unlabeled neighbors per vertex, and the label sum of labeled ones
    pending: Vec<usize>,
    partial: Vec<i64>,
    seen: Vec<bool>,
    target: Option<Vec<u32>>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    find_all: bool,
    first: Option<Vec<u32>>,
    count: u64,
    out_of_budget: bool,
}

impl State<'_> {
    /// Returns true when the search should stop.
    fn descend(&mut self, depth: usize) -> bool {
        let n = self.order.len();
        if depth == n {
            self.count += 1;
            if self.first.is_none() {
                self.first = Some(self.labels.clone());
            }
            return !self.find_all;
        }
        let x = self.order[depth];
        for label in 1..=n as u32 {
            if self.used[label as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes
                || (self.nodes.is_multiple_of(4096) && self.past_deadline())
            {
                self.out_of_budget = true;
                return true;
            }
            if !self.assign(x, label) {
                continue;
            }
            let stop = self.descend(depth + 1);
            self.unassign(x, label);
            if stop {
                return true;
            }
        }
        false
    }

    fn past_deadline(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    /// Registers the final weight of `v`; false if it is already taken or
    /// not available in the target.
    fn finalize(&mut self, v: usize) -> bool {
        let w = self.partial[v] as usize;
        if self.seen[w] {
            return false;
        }
        if let Some(t) = &mut self.target {
            if t[w] == 0 {
                return false;
            }
            t[w] -= 1;
        }
        self.seen[w] = true;
        true
    }

    fn release(&mut self, v: usize) {
        let w = self.partial[v] as usize;
        self.seen[w] = false;
        if let Some(t) = &mut self.target {
            t[w] += 1;
        }
    }

    fn assign(&mut self, x: usize, label: u32) -> bool {
        let g = self.g;
        let nbrs = g.nbrs(x);
        for (i, &y) in nbrs.iter().enumerate() {
            self.partial[y] += i64::from(label);
            self.pending[y] -= 1;
            if self.pending[y] == 0 && !self.finalize(y) {
                self.pending[y] += 1;
                self.partial[y] -= i64::from(label);
                self.retract(&nbrs[..i], label);
                return false;
            }
        }
        self.labels[x] = label;
        self.used[label as usize] = true;
        true
    }

    fn unassign(&mut self, x: usize, label: u32) {
        self.labels[x] = 0;
        self.used[label as usize] = false;
        let g = self.g;
        self.retract(g.nbrs(x), label);
    }

    fn retract(&mut self, nbrs: &[usize], label: u32) {
        for &y in nbrs.iter().rev() {
            if self.pending[y] == 0 {
                self.release(y);
            }
            self.pending[y] += 1;
            self.partial[y] -= i64::from(label);
        }
    }
}
