//! Posets up to isomorphism, and seeded random posets.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::space::FiniteSpace;

pub const EDGE_PROBABILITIES: [f64; 3] = [0.15, 0.3, 0.5];

fn point_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Relation matrix packed row-major into a `u64`; `n <= 8`.
fn code_of(n: usize, rel: &[u8], perm: &[usize]) -> u64 {
    let mut c = 0u64;
    for i in 0..n {
        for j in 0..n {
            c = c << 1 | ((rel[perm[i]] >> perm[j]) & 1) as u64;
        }
    }
    c
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All posets on `n` points up to isomorphism, `1 <= n <= 6`.
///
/// Every poset has a linear extension, so it suffices to scan relations
/// contained in the natural order and keep one per canonical code.
pub fn posets_of_size(n: usize) -> Vec<FiniteSpace> {
    assert!((1..=6).contains(&n), "poset enumeration supports 1..=6 points");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<(u32, u64)> = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        // rel[i] bit j set iff i <= j.
        let mut rel = vec![0u8; n];
        for (i, r) in rel.iter_mut().enumerate() {
            *r = 1 << i;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| rel[i] >> j & 1 == 0 || rel[j] & !rel[i] == 0));
        if !transitive {
            continue;
        }
        let canon = perms.iter().map(|p| code_of(n, &rel, p)).max().unwrap();
        seen.insert((mask.count_ones(), canon));
    }
    seen.into_iter()
        .map(|(_, code)| {
            let bit = |i: usize, j: usize| code >> (n * n - 1 - (i * n + j)) & 1 == 1;
            FiniteSpace::from_order(point_labels(n), bit).expect("canonical codes decode to posets")
        })
        .collect()
}

/// All posets with `1..=max` points up to isomorphism, smallest first.
pub fn posets_up_to(max: usize) -> Vec<FiniteSpace> {
    (1..=max).flat_map(posets_of_size).collect()
}

/// Random poset: points in a shuffled order, each forward edge kept with
/// probability `p`, then transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, max_points: usize) -> FiniteSpace {
    let n = rng.gen_range(1..=max_points.max(1));
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    random_poset_with(rng, n, p)
}

pub fn random_poset_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> FiniteSpace {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(p) {
                edges.push((order[a], order[b]));
            }
        }
    }
    FiniteSpace::from_covers(point_labels(n), &edges).expect("forward edges never form cycles")
}
