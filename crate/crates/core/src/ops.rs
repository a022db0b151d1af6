//! Graph combinators: complement, disjoint copies, join and Cartesian product.
//!
//! The compound `mG + nH` is `join(&[copies(m, G), copies(n, H)])`: the
//! copies on one side stay mutually non-adjacent, only cross-side edges are
//! added. Passing every copy as its own part gives the all-pairs join.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A multiplicity applied to a base graph, as in `mΓ(Z_9)`.
#[derive(Debug, Clone)]
pub struct CopySpec {
    count: usize,
    base: Graph,
}

impl CopySpec {
    pub fn new(count: usize, base: Graph) -> Result<Self> {
        if count < 1 {
            return Err(Error::Usage("copy count must be at least 1".into()));
        }
        Ok(CopySpec { count, base })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn build(&self) -> Graph {
        disjoint_blocks(std::iter::repeat_n(&self.base, self.count), "c")
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let adj = (0..n)
        .map(|u| {
            let mut nb = g.nbrs(u).iter().peekable();
            (0..n)
                .filter(|&v| {
                    if nb.peek() == Some(&&v) {
                        nb.next();
                        false
                    } else {
                        v != u
                    }
                })
                .collect()
        })
        .collect();
    Graph::from_parts(g.names().to_vec(), adj)
}

/// Disjoint union of `k` copies; copy `i` vertices are named `c{i}:{name}`.
pub fn copies(k: usize, g: &Graph) -> Result<Graph> {
    Ok(CopySpec::new(k, g.clone())?.build())
}

/// Join of two or more graphs: their disjoint union plus every edge between
/// different parts. Part `i` vertices are named `p{i}:{name}`.
pub fn join(parts: &[Graph]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::Usage(format!(
            "join needs at least 2 parts, got {}",
            parts.len()
        )));
    }
    let total: usize = parts.iter().map(Graph::order).sum();
    let union = disjoint_blocks(parts.iter(), "p");
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0;
    for part in parts {
        let end = offset + part.order();
        for v in offset..end {
            let mut list: Vec<usize> = (0..offset).collect();
            list.extend_from_slice(union.nbrs(v));
            list.extend(end..total);
            adj.push(list);
        }
        offset = end;
    }
    Ok(Graph::from_parts(union.names().to_vec(), adj))
}

/// Cartesian product `G × H`. Vertex `(u, v)` has index
/// `u·|V(H)| + v` and is named `({u},{v})`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    if ng == 0 || nh == 0 {
        return Err(Error::Usage(
            "Cartesian product of an empty graph is not supported".into(),
        ));
    }
    let mut names = Vec::with_capacity(ng * nh);
    let mut adj = Vec::with_capacity(ng * nh);
    for u in 0..ng {
        for v in 0..nh {
            names.push(format!("({},{})", g.name(u), h.name(v)));
            // u' < u block, same u block, u' > u block: already sorted
            let (lo, hi): (Vec<usize>, Vec<usize>) = g.nbrs(u).iter().partition(|&&w| w < u);
            let mut list: Vec<usize> = lo.iter().map(|&w| w * nh + v).collect();
            list.extend(h.nbrs(v).iter().map(|&w| u * nh + w));
            list.extend(hi.iter().map(|&w| w * nh + v));
            adj.push(list);
        }
    }
    Ok(Graph::from_parts(names, adj))
}

fn disjoint_blocks<'a>(blocks: impl Iterator<Item = &'a Graph>, prefix: &str) -> Graph {
    let mut names = Vec::new();
    let mut adj = Vec::new();
    let mut offset = 0;
    for (i, g) in blocks.enumerate() {
        names.extend(g.names().iter().map(|name| format!("{prefix}{i}:{name}")));
        adj.extend((0..g.order()).map(|v| g.nbrs(v).iter().map(|&w| w + offset).collect()));
        offset += g.order();
    }
    Graph::from_parts(names, adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{zero_divisor_graph, Modulus};

    fn zdg(n: u64) -> Graph {
        zero_divisor_graph(Modulus::new(n).unwrap()).unwrap()
    }

    #[test]
    fn complement_cases() {
        let c = complement(&zdg(6));
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(c.degree(1), 0);
        let c = complement(&zdg(9));
        assert_eq!(c.order(), 2);
        assert_eq!(c.size(), 0);
        assert_eq!(complement(&Graph::empty()).order(), 0);
        let g = zdg(15);
        assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn copies_cases() {
        let k2 = Graph::complete(2);
        let g = copies(2, &k2).unwrap();
        assert_eq!((g.order(), g.size()), (4, 2));
        let g = copies(3, &zdg(9)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 3));
        assert_eq!(g.degree_sequence(), vec![1; 6]);
        assert_eq!(g.names()[2], "c1:3");
        let g = copies(1, &zdg(6)).unwrap();
        assert_eq!(g.names(), &["c0:2", "c0:3", "c0:4"]);
        assert_eq!(g.size(), 2);
        assert!(copies(0, &k2).is_err());
    }

    #[test]
    fn join_cases() {
        let k3 = join(&[zdg(9), zdg(4)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert_eq!(k3.names(), &["p0:3", "p0:6", "p1:2"]);
        let g = join(&[copies(2, &zdg(9)).unwrap(), zdg(4)]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(4), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        // pair vertices from different copies stay non-adjacent
        assert!(!g.has_edge(0, 2));
        let g = join(&[zdg(6), zdg(4)]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.find_twin_pair().is_some());
        assert!(join(&[zdg(6)]).is_err());
    }

    #[test]
    fn join_with_empty_part() {
        let g = join(&[zdg(7), zdg(9)]).unwrap();
        assert_eq!(g.names(), &["p1:3", "p1:6"]);
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn product_cases() {
        let k2 = Graph::complete(2);
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert_eq!(c4.degree_sequence(), vec![2; 4]);
        let prism = cartesian_product(&Graph::complete(3), &k2).unwrap();
        assert_eq!((prism.order(), prism.size()), (6, 9));
        let g = cartesian_product(&zdg(6), &zdg(9)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));
        assert_eq!(g.names()[1], "(2,6)");
        // index(u, v) = u·|V(h)| + v
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(2, 4));
        assert!(!g.has_edge(0, 4));
        assert!(cartesian_product(&zdg(7), &k2).is_err());
    }
}
