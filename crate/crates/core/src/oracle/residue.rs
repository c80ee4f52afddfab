//! Residue-class tables over a fixed modulus.
//!
//! Entry `r` of a table holds the least known element of the monoid congruent
//! to `r`, or `None` while the class is unreached. Two builders share this
//! representation: a Dijkstra sweep over the residue graph (all generators at
//! once) and the round-robin update, which folds in one generator at a time.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Exact path weight. Implemented for `u128` (used only when every value that
/// can appear is known to fit) and for `BigUint`.
pub(crate) trait Weight: Clone + Ord {
    fn zero() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
}

impl Weight for u128 {
    fn zero() -> Self {
        0
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(*rhs)
            .expect("residue weight exceeded the u128 bound")
    }
}

impl Weight for BigUint {
    fn zero() -> Self {
        <BigUint as Zero>::zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
}

/// A generator reduced for a modulus: its residue and its full weight.
#[derive(Clone, Debug)]
pub(crate) struct Edge<W> {
    pub residue: usize,
    pub weight: W,
}

/// Single-source shortest paths from residue 0. Each generator contributes an
/// edge `r -> (r + g) mod m` of weight `g` at every node.
pub(crate) fn dijkstra<W: Weight>(modulus: usize, edges: &[Edge<W>]) -> Vec<Option<W>> {
    let mut dist: Vec<Option<W>> = vec![None; modulus];
    let mut done = vec![false; modulus];
    let mut heap = BinaryHeap::new();
    dist[0] = Some(W::zero());
    heap.push(Reverse((W::zero(), 0usize)));

    while let Some(Reverse((d, node))) = heap.pop() {
        if done[node] {
            continue;
        }
        done[node] = true;
        for edge in edges {
            let next = (node + edge.residue) % modulus;
            if done[next] {
                continue;
            }
            let cand = d.plus(&edge.weight);
            let better = match &dist[next] {
                Some(cur) => cand < *cur,
                None => true,
            };
            if better {
                dist[next] = Some(cand.clone());
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}

/// Fold one generator into a table (round-robin update).
///
/// The residue classes split into `gcd(residue, m)` cycles under `r -> r + g`.
/// Each cycle is walked once starting from its smallest entry, carrying the
/// running minimum forward.
pub(crate) fn round_robin_add<W: Weight>(table: &mut [Option<W>], edge: &Edge<W>) {
    let modulus = table.len();
    let step = edge.residue % modulus;
    if step == 0 {
        return;
    }
    let cycles = step.gcd(&modulus);
    let cycle_len = modulus / cycles;

    for start in 0..cycles {
        let mut best: Option<(usize, W)> = None;
        let mut r = start;
        for _ in 0..cycle_len {
            if let Some(v) = &table[r] {
                if best.as_ref().is_none_or(|(_, b)| v < b) {
                    best = Some((r, v.clone()));
                }
            }
            r = (r + step) % modulus;
        }
        let Some((mut r, mut carry)) = best else {
            continue;
        };
        for _ in 1..cycle_len {
            r = (r + step) % modulus;
            carry = carry.plus(&edge.weight);
            match &table[r] {
                Some(v) if *v <= carry => carry = v.clone(),
                _ => table[r] = Some(carry.clone()),
            }
        }
    }
}

/// Whether every weight these algorithms can produce over `modulus` with
/// generators up to `largest` fits in a `u128`.
///
/// Shortest paths use at most `modulus - 1` edges, and round-robin carries
/// exceed a table entry by at most one generator, so `modulus * largest`
/// bounds every intermediate value.
pub(crate) fn fits_u128(modulus: usize, largest: &BigUint) -> bool {
    (largest * BigUint::from(modulus)).bits() < 127
}

pub(crate) fn edges_u128(gens: &[BigUint], modulus: usize) -> Vec<Edge<u128>> {
    gens.iter()
        .map(|g| Edge {
            residue: residue_of(g, modulus),
            weight: g.to_u128().expect("caller checked the u128 bound"),
        })
        .collect()
}

pub(crate) fn edges_big(gens: &[BigUint], modulus: usize) -> Vec<Edge<BigUint>> {
    gens.iter()
        .map(|g| Edge {
            residue: residue_of(g, modulus),
            weight: g.clone(),
        })
        .collect()
}

pub(crate) fn residue_of(value: &BigUint, modulus: usize) -> usize {
    (value % BigUint::from(modulus))
        .to_usize()
        .expect("residue is below a usize modulus")
}
