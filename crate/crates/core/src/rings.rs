//! Zero-divisor graphs of the residue rings Z_n.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Modulus `n >= 2` of the ring Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Usage(format!("modulus must be at least 2, got {n}")));
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Size caps for [`zero_divisor_graph_with`].
#[derive(Debug, Clone, Copy)]
pub struct ZdgLimits {
    pub max_vertices: u64,
    pub max_edges: u64,
}

impl Default for ZdgLimits {
    fn default() -> Self {
        ZdgLimits {
            max_vertices: 1_000_000,
            max_edges: 20_000_000,
        }
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d <= n / d {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Γ(Z_n) with the default size caps.
pub fn zero_divisor_graph(m: Modulus) -> Result<Graph> {
    zero_divisor_graph_with(m, &ZdgLimits::default())
}

/// Γ(Z_n): vertices are the nonzero zero divisors `x` (those with
/// `gcd(x, n) > 1`) in increasing residue order, named by residue; distinct
/// `u, v` are adjacent iff `u·v ≡ 0 (mod n)`. Elements squaring to zero get
/// no loop.
pub fn zero_divisor_graph_with(m: Modulus, limits: &ZdgLimits) -> Result<Graph> {
    let n = m.get();
    let factors = prime_factors(n);

    // n - φ(n) - 1, from the factorization
    let phi = factors.iter().fold(n, |acc, &p| acc / p * (p - 1));
    let order = n - phi - 1;
    if order > limits.max_vertices {
        return Err(Error::Resource(format!(
            "Γ(Z_{n}) has {order} vertices, cap is {}",
            limits.max_vertices
        )));
    }

    // union of the proper multiples of each prime factor
    let mut vertices: Vec<u64> = Vec::with_capacity(order as usize);
    for &p in &factors {
        vertices.extend((1..n / p).map(|k| k * p));
    }
    vertices.sort_unstable();
    vertices.dedup();
    debug_assert_eq!(vertices.len() as u64, order);
    debug_assert!(vertices.iter().all(|&x| gcd(x, n) > 1));

    // x is annihilated exactly by the multiples of n / gcd(x, n)
    let steps: Vec<u64> = vertices.iter().map(|&x| n / gcd(x, n)).collect();
    let edge_ends: u64 = vertices
        .iter()
        .zip(&steps)
        .map(|(&x, &s)| (n / s - 1) - u64::from(x % s == 0))
        .sum();
    if edge_ends / 2 > limits.max_edges {
        return Err(Error::Resource(format!(
            "Γ(Z_{n}) has {} edges, cap is {}",
            edge_ends / 2,
            limits.max_edges
        )));
    }

    let index = |r: u64| {
        vertices
            .binary_search(&r)
            .expect("annihilator of a zero divisor is a zero divisor")
    };
    let adj = vertices
        .iter()
        .zip(&steps)
        .map(|(&x, &s)| {
            (1..n / s)
                .map(|k| k * s)
                .filter(|&y| y != x)
                .map(index)
                .collect()
        })
        .collect();
    let names = vertices.iter().map(u64::to_string).collect();
    Ok(Graph::from_parts(names, adj))
}

/// Shape recognized by degree and adjacency tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructuralClass {
    /// No edges (any order, including zero).
    Empty {
        order: usize,
    },
    Complete(usize),
    /// `K_{1,leaves}` with `leaves >= 2`.
    Star {
        center: usize,
        leaves: usize,
    },
    /// `K_{a,b}` with `2 <= a <= b`.
    CompleteBipartite(usize, usize),
    /// Path on `k >= 4` vertices.
    Path(usize),
    Other,
}

/// Classifies `g` in priority order Empty, Complete, Star,
/// CompleteBipartite, Path; anything else is `Other`.
pub fn structural_class(g: &Graph) -> StructuralClass {
    let n = g.order();
    let e = g.size();
    if e == 0 {
        return StructuralClass::Empty { order: n };
    }
    if e == n * (n - 1) / 2 {
        return StructuralClass::Complete(n);
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if n >= 3 && e == n - 1 {
        if let Some(center) = degrees.iter().position(|&d| d == n - 1) {
            return StructuralClass::Star {
                center,
                leaves: n - 1,
            };
        }
    }
    if let Some((a, b)) = bipartition(g) {
        let (a, b) = (a.min(b), a.max(b));
        if a >= 2 && a * b == e {
            return StructuralClass::CompleteBipartite(a, b);
        }
    }
    if n >= 4
        && e == n - 1
        && degrees.iter().filter(|&&d| d == 1).count() == 2
        && degrees.iter().all(|&d| d == 1 || d == 2)
        && is_connected(g)
    {
        return StructuralClass::Path(n);
    }
    StructuralClass::Other
}

/// Part sizes of a proper 2-colouring of a connected graph.
fn bipartition(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let mut colour = vec![u8::MAX; n];
    let mut stack = vec![0];
    colour[0] = 0;
    let mut counts = [1usize, 0];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.nbrs(u) {
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[u];
                counts[colour[w] as usize] += 1;
                reached += 1;
                stack.push(w);
            } else if colour[w] == colour[u] {
                return None;
            }
        }
    }
    (reached == n).then_some((counts[0], counts[1]))
}

fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.nbrs(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zdg(n: u64) -> Graph {
        zero_divisor_graph(Modulus::new(n).unwrap()).unwrap()
    }

    fn named_edges(g: &Graph) -> Vec<(String, String)> {
        g.edges()
            .map(|(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect()
    }

    /// All pairs `u < v` of nonzero residues with `u·v ≡ 0`, both zero divisors.
    fn brute_force(n: u64) -> (Vec<u64>, Vec<(u64, u64)>) {
        let zd: Vec<u64> = (1..n).filter(|&x| (1..n).any(|y| x * y % n == 0)).collect();
        let mut edges = Vec::new();
        for (i, &u) in zd.iter().enumerate() {
            for &v in &zd[i + 1..] {
                if u * v % n == 0 {
                    edges.push((u, v));
                }
            }
        }
        (zd, edges)
    }

    #[test]
    fn small_moduli_match_brute_force() {
        for n in 2..=120 {
            let g = zdg(n);
            let (zd, edges) = brute_force(n);
            let names: Vec<String> = zd.iter().map(u64::to_string).collect();
            assert_eq!(g.names(), names.as_slice(), "n={n}");
            let got: Vec<(u64, u64)> = g.edges().map(|(u, v)| (zd[u], zd[v])).collect();
            assert_eq!(got, edges, "n={n}");
        }
    }

    #[test]
    fn figure_graphs() {
        let g = zdg(10);
        assert_eq!(g.names(), &["2", "4", "5", "6", "8"]);
        let mut e = named_edges(&g);
        e.sort();
        assert_eq!(
            e,
            vec![
                ("2".into(), "5".into()),
                ("4".into(), "5".into()),
                ("5".into(), "6".into()),
                ("5".into(), "8".into())
            ]
        );
        assert_eq!(g.degree_sequence(), vec![4, 1, 1, 1, 1]);
        let g = zdg(15);
        assert_eq!(g.names(), &["3", "5", "6", "9", "10", "12"]);
        assert_eq!(g.size(), 8);
        assert_eq!(g.degree_sequence(), vec![4, 4, 2, 2, 2, 2]);
    }

    #[test]
    fn named_small_cases() {
        assert_eq!(zdg(7).order(), 0);
        let g = zdg(6);
        assert_eq!(g.names(), &["2", "3", "4"]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let g = zdg(9);
        assert_eq!(g.names(), &["3", "6"]);
        assert_eq!(g.size(), 1);
        let g = zdg(4);
        assert_eq!(g.names(), &["2"]);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(Modulus::new(1), Err(Error::Usage(_))));
        assert!(matches!(Modulus::new(0), Err(Error::Usage(_))));
        let tight = ZdgLimits {
            max_vertices: 10,
            max_edges: 1000,
        };
        let m = Modulus::new(30).unwrap();
        assert!(matches!(
            zero_divisor_graph_with(m, &tight),
            Err(Error::Resource(_))
        ));
        let few_edges = ZdgLimits {
            max_vertices: 1000,
            max_edges: 3,
        };
        assert!(matches!(
            zero_divisor_graph_with(Modulus::new(15).unwrap(), &few_edges),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn classes() {
        assert_eq!(structural_class(&zdg(25)), StructuralClass::Complete(4));
        assert_eq!(structural_class(&zdg(9)), StructuralClass::Complete(2));
        let g = zdg(10);
        assert_eq!(
            structural_class(&g),
            StructuralClass::Star {
                center: g.index_of("5").unwrap(),
                leaves: 4
            }
        );
        assert_eq!(
            structural_class(&zdg(21)),
            StructuralClass::CompleteBipartite(2, 6)
        );
        assert_eq!(
            structural_class(&zdg(7)),
            StructuralClass::Empty { order: 0 }
        );
        assert_eq!(
            structural_class(&zdg(4)),
            StructuralClass::Empty { order: 1 }
        );
        let p5 =
            Graph::from_edges(["a", "b", "c", "d", "e"], [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(structural_class(&p5), StructuralClass::Path(5));
        let c4 = Graph::from_edges(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            structural_class(&c4),
            StructuralClass::CompleteBipartite(2, 2)
        );
        assert_eq!(structural_class(&zdg(12)), StructuralClass::Other);
    }

    #[test]
    fn prime_families() {
        for p in (3..60).filter(|&p| is_prime(p)) {
            assert_eq!(zdg(p).order(), 0);
            assert_eq!(
                structural_class(&zdg(p * p)),
                StructuralClass::Complete(p as usize - 1)
            );
            let star = zdg(2 * p);
            assert_eq!(
                structural_class(&star),
                StructuralClass::Star {
                    center: star.index_of(&p.to_string()).unwrap(),
                    leaves: p as usize - 1
                }
            );
            if p >= 5 {
                assert_eq!(
                    structural_class(&zdg(3 * p)),
                    StructuralClass::CompleteBipartite(2, p as usize - 1)
                );
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(97), vec![97]);
    }
}
