use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Family, FamilyInstance};
use crate::error::{Error, Result};
use crate::metrics::TreeMetrics;
use crate::tree::Tree;

const MAX_ATTEMPTS: usize = 10_000;

/// Decodes a Prüfer sequence into the edges of a labelled tree on `seq.len() + 2` vertices.
fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Uniform random labelled tree on `n` vertices conditioned on having exactly two branches.
/// Deterministic in `(n, seed)`.
pub fn gen_random_two_branch(n: usize, seed: u64) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::BadParams(format!("random two-branch tree needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let tree = Tree::from_edges(&prufer_edges(&seq))?;
        if TreeMetrics::new(&tree)?.two_branch() {
            let names = (0..n).map(|v| format!("u_{v}")).collect();
            return FamilyInstance::new(tree, Family::RandomTwoBranch { n, seed }, names);
        }
    }
    Err(Error::ExhaustedAttempts(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_decoding() {
        let edges = prufer_edges(&[3, 3, 3]);
        let tree = Tree::from_edges(&edges).unwrap();
        assert_eq!(tree.degree(3), 4);
    }

    #[test]
    fn small_orders() {
        for seed in 0..20 {
            let t3 = gen_random_two_branch(3, seed).unwrap();
            assert_eq!(t3.tree().canonical_form(), Tree::from_edges(&[(0, 1), (1, 2)]).unwrap().canonical_form());
            let t4 = gen_random_two_branch(4, seed).unwrap();
            assert!((0..4).all(|v| t4.tree().degree(v) <= 2));
        }
    }

    #[test]
    fn deterministic_and_two_branch() {
        let a = gen_random_two_branch(7, 42).unwrap();
        let b = gen_random_two_branch(7, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.metrics().unwrap().two_branch());
        assert_eq!(a.closed_form_rn(), None);
        assert!(gen_random_two_branch(2, 0).is_err());
    }
}
