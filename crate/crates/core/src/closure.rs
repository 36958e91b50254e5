//! Breadth-first closure of a finite group from a generating set.
//!
//! Each layer of the search is expanded in parallel; deduplication into the
//! seen-set is single-threaded so the result never depends on scheduling.
//! The returned element list is sorted by key.

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Enumerations refuse to grow past this many elements unless told otherwise.
pub const DEFAULT_CAP: usize = 200_000;

pub trait GroupElement: Clone + Send + Sync {
    type Key: Copy + Eq + Hash + Ord + Send + Sync;

    fn key(&self) -> Self::Key;

    /// `self ∘ rhs`.
    fn compose(&self, rhs: &Self) -> Self;
}

pub fn closure<G: GroupElement>(identity: G, generators: &[G], cap: usize) -> Result<Vec<G>> {
    let mut seen: HashSet<G::Key> = HashSet::new();
    seen.insert(identity.key());
    let mut elements = vec![identity.clone()];
    let mut frontier = vec![identity];

    while !frontier.is_empty() {
        let candidates: Vec<(G::Key, G)> = frontier
            .par_iter()
            .flat_map_iter(|g| generators.iter().map(move |s| g.compose(s)))
            .map(|h| (h.key(), h))
            .filter(|(k, _)| !seen.contains(k))
            .collect();

        let mut next = Vec::new();
        for (k, h) in candidates {
            if seen.insert(k) {
                if seen.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
                elements.push(h.clone());
                next.push(h);
            }
        }
        frontier = next;
    }

    elements.par_sort_unstable_by_key(|g| g.key());
    Ok(elements)
}

/// Orbit of `start` under the group generated by `generators`, in discovery order.
pub fn orbit<T, G, F>(start: T, generators: &[G], act: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&G, &T) -> T,
{
    let mut seen = HashSet::from([start.clone()]);
    let mut out = vec![start.clone()];
    let mut i = 0;
    while i < out.len() {
        let x = out[i].clone();
        for g in generators {
            let y = act(g, &x);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}
