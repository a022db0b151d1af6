//! Immutable simple graphs with named vertices.
//!
//! Vertices are dense ids `0..order`; names carry provenance only (ring
//! residues, copy and part prefixes, product pairs). Every "first" or
//! "lowest" choice made by this module follows vertex-id order.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    // sorted, loop-free, symmetric
    adj: Vec<Vec<usize>>,
    size: usize,
}

/// Two distinct vertices with identical open neighborhoods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
}

/// Wire form of a graph: `{"order", "names", "edges"}` with `i < j` in every
/// edge and edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub names: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from names and an undirected edge list.
    ///
    /// Edges may be given in either orientation and any order, but loops,
    /// repeated edges, out-of-range endpoints and duplicate names are
    /// rejected.
    pub fn from_edges<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let order = names.len();
        let mut seen = HashSet::with_capacity(order);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Usage(format!("duplicate vertex name {name:?}")));
            }
        }
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Usage(format!(
                    "edge ({u},{v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::Usage(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut size = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(Error::Usage(format!("repeated edge at vertex {u}")));
            }
            size += list.len();
        }
        Ok(Graph {
            names,
            adj,
            size: size / 2,
        })
    }

    /// Trusted constructor for combinators that already produce sorted,
    /// symmetric, loop-free adjacency and unique names.
    pub(crate) fn from_parts(names: Vec<String>, adj: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(names.len(), adj.len());
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        let size = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { names, adj, size }
    }

    pub fn empty() -> Self {
        Graph::from_parts(Vec::new(), Vec::new())
    }

    /// Complete graph on vertices named `0..k`.
    pub fn complete(k: usize) -> Self {
        let adj = (0..k)
            .map(|u| (0..k).filter(|&v| v != u).collect())
            .collect();
        Graph::from_parts((0..k).map(|i| i.to_string()).collect(), adj)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Open neighborhood of `v`, sorted by vertex id.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adj.get(v).map(Vec::as_slice).ok_or_else(|| {
            Error::Usage(format!(
                "vertex {v} out of range for graph of order {}",
                self.order()
            ))
        })
    }

    /// Unchecked variant of [`Graph::neighbors`]; panics when `v` is out of range.
    pub(crate) fn nbrs(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degrees in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Groups vertices into classes of identical open neighborhoods; only
    /// classes with two or more members are returned. Members are sorted
    /// and classes are ordered by their smallest member.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut buckets: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
        for (v, list) in self.adj.iter().enumerate() {
            let mut h = DefaultHasher::new();
            list.hash(&mut h);
            let classes = buckets.entry(h.finish()).or_default();
            // fingerprint collision: confirm exactly
            match classes.iter_mut().find(|c| self.adj[c[0]] == *list) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut out: Vec<Vec<usize>> = buckets
            .into_values()
            .flatten()
            .filter(|c| c.len() >= 2)
            .collect();
        out.sort_unstable_by_key(|c| c[0]);
        out
    }

    /// The lexicographically lowest pair `(u, v)`, `u < v`, with
    /// `N(u) = N(v)`. Any such pair rules out a distance antimagic labeling.
    pub fn find_twin_pair(&self) -> Option<TwinPair> {
        self.twin_classes()
            .first()
            .map(|c| TwinPair { u: c[0], v: c[1] })
    }

    /// Reorders vertices: new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut inverse = vec![usize::MAX; n];
        if order.len() != n {
            return Err(Error::Usage(format!(
                "permutation has {} entries, graph has {n} vertices",
                order.len()
            )));
        }
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(Error::Usage(format!("not a permutation of 0..{n}")));
            }
            inverse[old] = new;
        }
        let names = order.iter().map(|&old| self.names[old].clone()).collect();
        let adj = order
            .iter()
            .map(|&old| {
                let mut l: Vec<usize> = self.adj[old].iter().map(|&w| inverse[w]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        Ok(Graph::from_parts(names, adj))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            order: self.order(),
            names: self.names.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        if json.order != json.names.len() {
            return Err(Error::Usage(format!(
                "order {} does not match {} names",
                json.order,
                json.names.len()
            )));
        }
        Graph::from_edges(
            json.names.iter().cloned(),
            json.edges.iter().map(|e| (e[0], e[1])),
        )
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: GraphJson = serde_json::from_str(s)?;
        Graph::from_json(&json)
    }

    /// Graphviz DOT, undirected, labeled by vertex name.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, name) in self.names.iter().enumerate() {
            let escaped = name.replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
