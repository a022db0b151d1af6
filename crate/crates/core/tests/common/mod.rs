#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use zdg_daml::expr::FamilyExpr;
use zdg_daml::Graph;

pub fn random_graph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges((0..order).map(|i| i.to_string()), edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    p.shuffle(rng);
    p
}

/// Weights straight from the definition, via `has_edge` rather than
/// adjacency lists.
pub fn naive_weights(g: &Graph, labels: &[u32]) -> Vec<i64> {
    (0..g.order())
        .map(|v| {
            (0..g.order())
                .filter(|&u| g.has_edge(u, v))
                .map(|u| labels[u] as i64)
                .sum()
        })
        .collect()
}

fn all_distinct(w: &[i64]) -> bool {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.windows(2).all(|p| p[0] != p[1])
}

/// Counts distance antimagic labelings by trying every permutation.
pub fn naive_daml_count(g: &Graph) -> u64 {
    let n = g.order();
    let mut labels: Vec<u32> = (1..=n as u32).collect();
    let mut count = 0;
    heap_permute(&mut labels, n, &mut |l| {
        if all_distinct(&naive_weights(g, l)) {
            count += 1;
        }
    });
    count
}

fn heap_permute(a: &mut [u32], k: usize, visit: &mut impl FnMut(&[u32])) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(a, k - 1, visit);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(a, k - 1, visit);
}

pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> FamilyExpr {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return FamilyExpr::Zn(rng.gen_range(2..=1_000_000));
    }
    let sub = |rng: &mut R| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..4) {
        0 => FamilyExpr::Copies(rng.gen_range(1..=20), sub(rng)),
        1 => {
            let k = rng.gen_range(2..=4);
            FamilyExpr::Join((0..k).map(|_| random_expr(rng, depth - 1)).collect())
        }
        2 => FamilyExpr::Product(sub(rng), sub(rng)),
        _ => FamilyExpr::Complement(sub(rng)),
    }
}

/// φ(n) by a divisor sieve, independent of the library's factorization.
pub fn totients(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            for k in (p..=limit).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    phi
}
