//! Exhaustive reference solver, kept deliberately naive: vertices in index
//! order, colors `1..=k`, every prefix checked against the raw distance
//! matrix. No capacities, no bitsets, no shared code with the real solver.

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

use super::{Color, PackingError};

pub const BRUTE_FORCE_LIMIT: usize = 10;

pub fn brute_force_chi(g: &Graph) -> Result<Color, PackingError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(PackingError::SizeLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let d = all_pairs_distances(g);
    let mut colors = vec![0; n];
    for k in 0..=n as Color {
        if extend(&d, k, &mut colors, 0) {
            return Ok(k);
        }
    }
    unreachable!("n distinct colors always work")
}

fn extend(d: &DistanceMatrix, k: Color, colors: &mut [Color], next: usize) -> bool {
    if next == colors.len() {
        return true;
    }
    for c in 1..=k {
        let clash = (0..next).any(|u| colors[u] == c && d.get(u, next) <= c);
        if !clash {
            colors[next] = c;
            if extend(d, k, colors, next + 1) {
                return true;
            }
        }
    }
    false
}
