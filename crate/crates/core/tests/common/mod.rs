//! Independent reference computations shared by the integration tests.
//! None of these touch the library's solvers; they only read graphs.

#![allow(dead_code)]

use egonet_core::spectral::SymMatrix;
use egonet_core::Graph;

/// Polynomial as ascending coefficients: `c[0] + c[1] x + ...`.
pub type Poly = Vec<f64>;

fn poly_mul(a: &[f64], b: &[f64]) -> Poly {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn poly_derivative(p: &[f64]) -> Poly {
    p.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(perm: &[usize]) -> f64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// det(xI - A) by Leibniz expansion over all permutations.
pub fn char_poly(a: &SymMatrix) -> Poly {
    let n = a.order();
    let mut total = vec![0.0; n + 1];
    for perm in permutations(n) {
        let mut term: Poly = vec![parity(&perm)];
        for (i, &j) in perm.iter().enumerate() {
            let entry: Poly = if i == j {
                vec![-a.get(i, i), 1.0]
            } else {
                vec![-a.get(i, j)]
            };
            term = poly_mul(&term, &entry);
        }
        for (k, c) in term.iter().enumerate() {
            total[k] += c;
        }
    }
    total
}

/// Roots of a monic-ish polynomial known to have only real roots, with
/// multiplicity, ascending. Critical points come from the derivative
/// (real-rooted by Rolle); each monotone stretch holds at most one simple
/// root, and a critical point where the polynomial vanishes is a multiple root.
pub fn real_roots(p: &[f64]) -> Vec<f64> {
    let mut p = p.to_vec();
    while p.len() > 1 && *p.last().unwrap() == 0.0 {
        p.pop();
    }
    let degree = p.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    if degree == 1 {
        return vec![-p[0] / p[1]];
    }
    let lead = p[degree];
    let bound = 1.0 + p[..degree].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let scale = p.iter().map(|c| c.abs()).fold(1.0, f64::max);
    let vanishes = |x: f64| poly_eval(&p, x).abs() <= 1e-9 * scale;

    let crit = real_roots(&poly_derivative(&p));
    let mut unique: Vec<(f64, usize)> = Vec::new();
    for c in crit {
        match unique.last_mut() {
            Some((v, k)) if (c - *v).abs() < 1e-7 => *k += 1,
            _ => unique.push((c, 1)),
        }
    }

    let mut roots = Vec::new();
    let mut knots = vec![-bound];
    knots.extend(unique.iter().map(|&(c, _)| c));
    knots.push(bound);
    for w in knots.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if vanishes(lo) || vanishes(hi) {
            continue;
        }
        let (flo, fhi) = (poly_eval(&p, lo), poly_eval(&p, hi));
        if flo.signum() != fhi.signum() {
            roots.push(bisect(&p, lo, hi));
        }
    }
    for &(c, k) in &unique {
        if vanishes(c) {
            roots.extend(std::iter::repeat_n(c, k + 1));
        }
    }
    roots.sort_by(f64::total_cmp);
    assert_eq!(
        roots.len(),
        degree,
        "polynomial {p:?} is not real-rooted within tolerance"
    );
    roots
}

fn bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let flo = poly_eval(p, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if poly_eval(p, mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = edge_slots(n)
        .into_iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices (2^(n(n-1)/2) of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots = n * n.saturating_sub(1) / 2;
    (0..1u64 << slots).map(move |mask| graph_from_mask(n, mask))
}

/// One representative per isomorphism class, keyed by the smallest edge
/// mask over all vertex relabelings.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let slots = edge_slots(n);
    let index = |a: usize, b: usize| slots.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    let mut canon = std::collections::BTreeSet::new();
    for mask in 0..1u64 << slots.len() {
        let best = perms
            .iter()
            .map(|perm| {
                slots
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << index(perm[a], perm[b]))
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon.into_iter().map(|m| graph_from_mask(n, m)).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || g.connected_components().len() == 1
}

/// Betweenness by enumerating every simple path between every unordered
/// pair and keeping the shortest ones.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut score = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let mut paths = Vec::new();
            let mut stack = vec![s];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            simple_paths(g, t, &mut stack, &mut on_path, &mut paths);
            let Some(shortest) = paths.iter().map(Vec::len).min() else {
                continue;
            };
            let geodesics: Vec<_> = paths.iter().filter(|p| p.len() == shortest).collect();
            let share = 1.0 / geodesics.len() as f64;
            for path in geodesics {
                for &v in &path[1..path.len() - 1] {
                    score[v] += share;
                }
            }
        }
    }
    score
}

fn simple_paths(g: &Graph, t: usize, stack: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let v = *stack.last().unwrap();
    if v == t {
        out.push(stack.clone());
        return;
    }
    for &w in g.neighbors(v) {
        if !on_path[w] {
            on_path[w] = true;
            stack.push(w);
            simple_paths(g, t, stack, on_path, out);
            stack.pop();
            on_path[w] = false;
        }
    }
}

/// Slacks (bound minus value, or value minus lower bound) of the three
/// classical Laplacian-energy inequalities. All must be non-negative.
pub fn laplacian_bound_slacks(g: &Graph, e_l: f64) -> [f64; 4] {
    let n = g.order() as f64;
    let m = g.size() as f64;
    let avg = 2.0 * m / n;
    let big_m = m + 0.5 * g.degrees().iter().map(|&d| (d as f64 - avg).powi(2)).sum::<f64>();
    [
        (2.0 * big_m * n).sqrt() - e_l,
        avg + ((n - 1.0) * (2.0 * big_m - avg * avg)).sqrt() - e_l,
        e_l - 2.0 * big_m.sqrt(),
        2.0 * big_m - e_l,
    ]
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, edge_slots(n)).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// The 3-cube: vertices are 3-bit words, edges flip one bit.
pub fn cube() -> Graph {
    let edges = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ 1 << b)))
        .filter(|(a, b)| a < b);
    Graph::new(8, edges).unwrap()
}
