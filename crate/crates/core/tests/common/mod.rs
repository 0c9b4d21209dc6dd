#![allow(dead_code)]

use eigloc::{Graph, StochasticMatrix};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Distribution, Exp1};

pub const EXAMPLE1: [[f64; 4]; 4] = [
    [0.25, 0.25, 0.3, 0.2],
    [0.0, 0.5, 0.33, 0.17],
    [0.6, 0.4, 0.0, 0.0],
    [0.1, 0.2, 0.3, 0.4],
];

pub fn example1() -> StochasticMatrix {
    StochasticMatrix::from_rows(&EXAMPLE1).unwrap()
}

/// The 7-vertex graph with N_1 = {2,3,6,7}, N_2 = {1,3,4,5,6}, N_3 = {1,2,4,7},
/// N_4 = {2,3,5,6}, N_5 = {2,4,6,7}, N_6 = {1,2,4,5}, N_7 = {1,3,5}.
pub const EXAMPLE2_EDGES: [(usize, usize); 14] = [
    (1, 2),
    (1, 3),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 4),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 6),
    (5, 7),
];

pub fn example2() -> Graph {
    Graph::new(7, EXAMPLE2_EDGES).unwrap()
}

/// Row-stochastic matrix with every row drawn uniformly from the open simplex.
pub fn random_stochastic<R: Rng>(n: usize, rng: &mut R) -> StochasticMatrix {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let raw: Vec<f64> = (0..n)
                .map(|_| {
                    let x: f64 = Exp1.sample(rng);
                    x.max(1e-300)
                })
                .collect();
            let total: f64 = raw.iter().sum();
            raw.into_iter().map(|x| x / total).collect()
        })
        .collect();
    StochasticMatrix::from_rows(&rows).unwrap()
}

/// Random spanning tree over a shuffled vertex order plus each remaining pair
/// independently with probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut present = vec![vec![false; n + 1]; n + 1];
    let mut edges = Vec::new();
    for idx in 1..n {
        let u = order[idx];
        let v = order[rng.gen_range(0..idx)];
        present[u][v] = true;
        present[v][u] = true;
        edges.push((u, v));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
