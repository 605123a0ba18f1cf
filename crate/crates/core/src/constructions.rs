//! Instance generators and the degree threshold that forces antipaths.
//!
//! Randomness is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `SeedableRng::seed_from_u64`. All draws are made from raw `next_u64`
//! outputs so that the mapping from seed to graph is pinned here and does
//! not depend on `rand`'s distribution code:
//!
//! * a Bernoulli(p) draw is `(x >> 11) as f64 * 2^-53 < p`;
//! * a fair orientation bit is `x >> 63`;
//! * a uniform index below `len` uses rejection on the top bits
//!   ([`uniform_below`]).

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("blob size must be at least 1")]
    EmptyBlob,
    #[error("threshold is defined for k >= 4, got {0}")]
    LengthTooSmall(usize),
    #[error("probability {0} outside [0, 1]")]
    BadProbability(String),
    #[error("target pseudo-semidegree must be at least 1")]
    ZeroTarget,
    #[error("need n >= 2d + 1 (n = {n}, d = {d})")]
    NotEnoughVertices { n: usize, d: usize },
    #[error("no graph with pd >= {d} after {attempts} attempts")]
    AttemptsExhausted { d: usize, attempts: usize },
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for trial `trial` of a run seeded with `seed`: the first output of
/// ChaCha8 seeded with `seed` on stream `trial`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(trial);
    rng.next_u64()
}

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `0..len` by rejection sampling on the top bits.
pub fn uniform_below(rng: &mut ChaCha8Rng, len: usize) -> usize {
    assert!(len > 0, "empty range");
    if len == 1 {
        return 0;
    }
    let len = len as u64;
    let bits = 64 - (len - 1).leading_zeros();
    loop {
        let x = rng.next_u64() >> (64 - bits);
        if x < len {
            return x as usize;
        }
    }
}

/// Blow-up of the directed `ell`-cycle: blob `j` holds vertices
/// `j*b .. (j+1)*b` and every vertex of blob `j` points to every vertex of
/// blob `j+1 mod ell`.
pub fn cycle_blowup(ell: usize, b: usize) -> Result<OrientedGraph, ConstructionError> {
    if ell < 3 {
        return Err(ConstructionError::CycleTooShort(ell));
    }
    if b == 0 {
        return Err(ConstructionError::EmptyBlob);
    }
    let mut g = OrientedGraph::new(ell * b);
    for j in 0..ell {
        let next = (j + 1) % ell;
        for s in 0..b {
            for t in 0..b {
                g.add_arc(j * b + s, next * b + t)
                    .expect("consecutive blobs of a cycle of length >= 3 are disjoint");
            }
        }
    }
    Ok(g)
}

/// `(k - 1 + sqrt(k - 3)) / 2`: every oriented graph whose minimum
/// pseudo-semidegree exceeds this contains each antipath of length `k`.
pub fn threshold(k: usize) -> Result<f64, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::LengthTooSmall(k));
    }
    Ok((k as f64 - 1.0 + ((k - 3) as f64).sqrt()) / 2.0)
}

/// Smallest integer strictly above [`threshold`], computed in exact integer
/// arithmetic.
///
/// `d > (k - 1 + sqrt(k - 3)) / 2` iff `x = 2d - k + 1 > sqrt(k - 3)`, and the
/// least integer above `sqrt(k - 3)` is `isqrt(k - 3) + 1` whether or not
/// `k - 3` is a square.
pub fn integer_threshold(k: usize) -> Result<usize, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::LengthTooSmall(k));
    }
    let x = (k - 3).isqrt() + 1;
    Ok((x + k - 1).div_ceil(2))
}

/// Each unordered pair independently gets no arc with probability `1 - p`,
/// otherwise an arc in a uniformly random direction. Pairs are visited in
/// lexicographic order; a present pair consumes one extra draw for its
/// orientation.
pub fn random_oriented_graph(
    n: usize,
    p: f64,
    seed: u64,
) -> Result<OrientedGraph, ConstructionError> {
    let mut rng = rng_from_seed(seed);
    random_oriented_graph_with(n, p, &mut rng)
}

fn random_oriented_graph_with(
    n: usize,
    p: f64,
    rng: &mut ChaCha8Rng,
) -> Result<OrientedGraph, ConstructionError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ConstructionError::BadProbability(p.to_string()));
    }
    let mut g = OrientedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if unit_f64(rng) < p {
                let (u, v) = if rng.next_u64() >> 63 == 0 {
                    (i, j)
                } else {
                    (j, i)
                };
                g.add_arc(u, v).expect("pair visited once");
            }
        }
    }
    Ok(g)
}

/// A random graph with minimum pseudo-semidegree at least `d`.
///
/// Attempt `a` (0-based) samples [`random_oriented_graph`] at density
/// `min(1, 2d/(n-1) + (a mod 10)/10)` and then repairs: while some vertex has
/// an out-degree in `1..d`, it gains out-arcs to uniformly chosen
/// non-neighbours, preferring those that already have an in-arc
/// (symmetrically for in-degrees). A deficient side adjacent to every other
/// vertex is cleared. All attempts share one ChaCha8 stream.
pub fn random_with_min_pd(
    n: usize,
    d: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<OrientedGraph, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::ZeroTarget);
    }
    if n < 2 * d + 1 {
        return Err(ConstructionError::NotEnoughVertices { n, d });
    }
    let mut rng = rng_from_seed(seed);
    let base = (2 * d) as f64 / (n - 1) as f64;
    for attempt in 0..max_attempts {
        let p = (base + (attempt % 10) as f64 / 10.0).min(1.0);
        let mut g = random_oriented_graph_with(n, p, &mut rng)?;
        if repair_pd(&mut g, d, &mut rng) {
            debug_assert!(g.degree_profile().pd() >= d);
            return Ok(g);
        }
    }
    Err(ConstructionError::AttemptsExhausted {
        d,
        attempts: max_attempts,
    })
}

/// Adds arcs until every non-zero degree reaches `d`. A deficient side with
/// no non-neighbour left is cleared instead. Returns false if the graph ends
/// up arcless or the repair does not settle within `n^2` rounds.
fn repair_pd(g: &mut OrientedGraph, d: usize, rng: &mut ChaCha8Rng) -> bool {
    let n = g.vertex_count();
    for _ in 0..n * n {
        let mut changed = false;
        for v in 0..n {
            for outgoing in [true, false] {
                let deg = |g: &OrientedGraph| {
                    if outgoing {
                        g.out_degree(v)
                    } else {
                        g.in_degree(v)
                    }
                };
                while (1..d).contains(&deg(g)) {
                    changed = true;
                    let free: Vec<VertexId> =
                        (0..n).filter(|&u| u != v && !g.adjacent(u, v)).collect();
                    if free.is_empty() {
                        let side = if outgoing {
                            g.out_neighbors(v).to_vec()
                        } else {
                            g.in_neighbors(v).to_vec()
                        };
                        for u in side {
                            let (a, b) = if outgoing { (v, u) } else { (u, v) };
                            g.remove_arc(a, b).expect("arc listed as a neighbour");
                        }
                        break;
                    }
                    // Targets whose receiving side is already non-zero cannot
                    // become deficient.
                    let safe: Vec<VertexId> = free
                        .iter()
                        .copied()
                        .filter(|&u| {
                            if outgoing {
                                g.in_degree(u) > 0
                            } else {
                                g.out_degree(u) > 0
                            }
                        })
                        .collect();
                    let pool = if safe.is_empty() { &free } else { &safe };
                    let u = pool[uniform_below(rng, pool.len())];
                    let (a, b) = if outgoing { (v, u) } else { (u, v) };
                    g.add_arc(a, b).expect("u and v were non-adjacent");
                }
            }
        }
        if !changed {
            return g.arc_count() > 0;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle for the threshold: smallest integer whose float value is
    /// strictly above the float formula. Exact for perfect squares since
    /// IEEE sqrt is correctly rounded.
    fn float_integer_threshold(k: usize) -> usize {
        let t = threshold(k).unwrap();
        (0..).find(|&d| d as f64 > t).unwrap()
    }

    #[test]
    fn blowup_shape() {
        let g = cycle_blowup(3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (6, 12));
        let p = g.degree_profile();
        assert_eq!((p.min_semidegree, p.pd()), (2, 2));

        let c4 = cycle_blowup(4, 1).unwrap();
        assert_eq!(
            c4.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 0)]
        );

        assert_eq!(cycle_blowup(2, 3), Err(ConstructionError::CycleTooShort(2)));
        assert_eq!(cycle_blowup(3, 0), Err(ConstructionError::EmptyBlob));
    }

    #[test]
    fn threshold_values() {
        assert_eq!(threshold(4).unwrap(), 2.0);
        assert_eq!(threshold(7).unwrap(), 4.0);
        assert_eq!(threshold(12).unwrap(), 7.0);
        assert!(threshold(3).is_err());
    }

    #[test]
    fn integer_threshold_values() {
        assert_eq!(integer_threshold(4), Ok(3));
        assert_eq!(integer_threshold(5), Ok(3));
        assert_eq!(integer_threshold(7), Ok(5));
        assert_eq!(integer_threshold(12), Ok(8));
        assert_eq!(integer_threshold(103), Ok(57));
        assert!(integer_threshold(3).is_err());
    }

    #[test]
    fn integer_threshold_matches_float_oracle() {
        for k in 4..5000 {
            assert_eq!(
                integer_threshold(k).unwrap(),
                float_integer_threshold(k),
                "k = {k}"
            );
        }
    }

    #[test]
    fn threshold_identities() {
        for k in 4..500 {
            let t = threshold(k).unwrap();
            assert!(t < (k - 1) as f64);
            let excess = t - k as f64 / 2.0;
            assert!((excess - (((k - 3) as f64).sqrt() - 1.0) / 2.0).abs() < 1e-9);
        }
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_oriented_graph(7, 0.0, 1).unwrap().arc_count(), 0);
        let t = random_oriented_graph(3, 1.0, 9).unwrap();
        assert_eq!(t.arc_count(), 3);
        let a = random_oriented_graph(12, 0.4, 42).unwrap();
        let b = random_oriented_graph(12, 0.4, 42).unwrap();
        assert_eq!(a, b);
        assert!(random_oriented_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn min_pd_generator() {
        for seed in 0..20 {
            let g = random_with_min_pd(9, 3, seed, 50).unwrap();
            assert!(g.degree_profile().pd() >= 3);
        }
        assert_eq!(
            random_with_min_pd(4, 2, 0, 10),
            Err(ConstructionError::NotEnoughVertices { n: 4, d: 2 })
        );
        assert_eq!(
            random_with_min_pd(5, 0, 0, 10),
            Err(ConstructionError::ZeroTarget)
        );
    }

    #[test]
    fn min_pd_generator_varies_with_seed() {
        let counts: std::collections::BTreeSet<usize> = (0..100)
            .map(|seed| {
                let g = random_with_min_pd(10, 3, seed, 50).unwrap();
                assert!(g.degree_profile().pd() >= 3);
                g.arc_count()
            })
            .collect();
        assert!(counts.len() >= 2);
    }

    #[test]
    fn uniform_below_stays_in_range() {
        let mut rng = rng_from_seed(5);
        let mut hits = [0usize; 7];
        for _ in 0..7000 {
            hits[uniform_below(&mut rng, 7)] += 1;
        }
        assert!(hits.iter().all(|&h| h > 800));
    }

    #[test]
    fn trial_seeds_differ() {
        assert_ne!(trial_seed(1, 0), trial_seed(1, 1));
        assert_eq!(trial_seed(1, 3), trial_seed(1, 3));
    }
}
