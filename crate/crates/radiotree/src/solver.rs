//! Exact radio number by branch-and-bound over vertex orderings.
//!
//! Every radio labelling induces an ordering of the vertices by label, and for
//! a fixed ordering the greedy completion (each vertex takes the smallest label
//! compatible with all earlier vertices) is pointwise minimal among labellings
//! inducing it. Minimising the greedy span over all orderings therefore gives
//! the radio number exactly; the search below enumerates orderings depth-first
//! and only discards a branch when an admissible lower bound on every
//! completion already reaches the incumbent.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::labelling::{verify_labelling, RadioLabelling};
use crate::metrics::TreeMetrics;
use crate::tree::Tree;

/// Lower bound used to discard partial orderings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Prune {
    /// Each remaining vertex adds at least 1 to the span.
    Trivial,
    /// Also uses the levels of the remaining vertices: consecutive labels `a, b`
    /// differ by at least `d + ε − L(a) − L(b)`.
    #[default]
    Levels,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub timeout: Option<Duration>,
    pub threads: usize,
    pub prune: Prune,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 12,
            timeout: Some(Duration::from_secs(300)),
            threads: 1,
            prune: Prune::Levels,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
    /// False when the search stopped on the timeout; `rn` is then only an upper bound.
    pub completed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub rn: u64,
    pub witness: RadioLabelling,
    pub stats: SolveStats,
}

/// One representative start vertex per automorphism orbit, ascending.
pub fn orbit_representatives(tree: &Tree) -> Vec<usize> {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for v in 0..tree.order() {
        seen.entry(tree.rooted_canonical_form(v)).or_insert(v);
    }
    let mut reps: Vec<usize> = seen.into_values().collect();
    reps.sort_unstable();
    reps
}

struct Problem {
    p: usize,
    d: u64,
    step: i64,
    dist: Vec<u64>,
    level: Vec<i64>,
    prune: Prune,
    deadline: Option<Instant>,
}

/// Best complete labelling found by one search: (span, labels).
type Found = Option<(u64, Vec<u64>)>;

struct Shared {
    best: AtomicU64,
    timed_out: AtomicBool,
}

struct Search<'a> {
    problem: &'a Problem,
    shared: &'a Shared,
    order: Vec<usize>,
    labels: Vec<u64>,
    placed: Vec<bool>,
    /// Stack of lower-label arrays; the top holds each unplaced vertex's greedy label.
    lower: Vec<Vec<u64>>,
    remaining_level: i64,
    nodes: u64,
    best_local: Found,
}

impl<'a> Search<'a> {
    fn new(problem: &'a Problem, shared: &'a Shared) -> Self {
        Search {
            problem,
            shared,
            order: Vec::with_capacity(problem.p),
            labels: vec![0; problem.p],
            placed: vec![false; problem.p],
            lower: vec![vec![0; problem.p]],
            remaining_level: problem.level.iter().sum(),
            nodes: 0,
            best_local: None,
        }
    }

    fn place(&mut self, v: usize) {
        let pr = self.problem;
        let label = self.lower.last().map_or(0, |l| l[v]);
        self.nodes += 1;
        self.order.push(v);
        self.placed[v] = true;
        self.labels[v] = label;
        self.remaining_level -= pr.level[v];
        let mut next = self.lower.last().cloned().unwrap_or_else(|| vec![0; pr.p]);
        for u in 0..pr.p {
            if !self.placed[u] {
                let need = label + pr.d + 1 - pr.dist[v * pr.p + u];
                if need > next[u] {
                    next[u] = need;
                }
            }
        }
        self.lower.push(next);
    }

    fn unplace(&mut self) {
        let v = self.order.pop().expect("unplace on empty order");
        self.placed[v] = false;
        self.remaining_level += self.problem.level[v];
        self.lower.pop();
    }

    /// Lower bound on the span of any completion of the current prefix.
    fn bound(&self) -> u64 {
        let pr = self.problem;
        let last = *self.order.last().expect("bound on empty order");
        let current = self.labels[last];
        let k = (pr.p - self.order.len()) as u64;
        if k == 0 {
            return current;
        }
        let lower = self.lower.last().expect("lower stack");
        let mut min_lower = u64::MAX;
        let mut max_lower = 0;
        let mut min_level = i64::MAX;
        for u in (0..pr.p).filter(|&u| !self.placed[u]) {
            min_lower = min_lower.min(lower[u]);
            max_lower = max_lower.max(lower[u]);
            min_level = min_level.min(pr.level[u]);
        }
        let trivial = current + k;
        match pr.prune {
            Prune::Trivial => trivial,
            Prune::Levels => {
                let levels = k as i64 * pr.step - pr.level[last] - 2 * self.remaining_level + min_level;
                let by_levels = current as i64 + levels;
                trivial
                    .max(min_lower + k - 1)
                    .max(max_lower)
                    .max(by_levels.max(0) as u64)
            }
        }
    }

    fn out_of_time(&self) -> bool {
        if self.shared.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(deadline) = self.problem.deadline {
            if self.nodes % 1024 == 1 && Instant::now() >= deadline {
                self.shared.timed_out.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    fn record(&mut self) {
        let span = self.labels[*self.order.last().expect("complete order")];
        if span < self.shared.best.load(Ordering::SeqCst) {
            self.shared.best.fetch_min(span, Ordering::SeqCst);
            self.best_local = Some((span, self.labels.clone()));
        }
    }

    fn dfs(&mut self) {
        if self.order.len() == self.problem.p {
            self.record();
            return;
        }
        if self.out_of_time() {
            return;
        }
        let lower = self.lower.last().expect("lower stack");
        let mut children: Vec<(u64, usize)> = (0..self.problem.p)
            .filter(|&u| !self.placed[u])
            .map(|u| (lower[u], u))
            .collect();
        children.sort_unstable();
        for (_, u) in children {
            self.place(u);
            if self.bound() < self.shared.best.load(Ordering::SeqCst) {
                self.dfs();
            }
            self.unplace();
        }
    }
}

/// Exact radio number of `tree` within `limits`.
///
/// The first vertex is restricted to one representative per automorphism orbit.
/// With `threads > 1` the start vertices are shared among worker threads; the
/// radio number does not depend on the thread count, the witness may.
pub fn exact_rn(tree: &Tree, limits: &Limits) -> Result<SolveResult> {
    let p = tree.order();
    if p > limits.max_order {
        return Err(Error::OrderTooLarge {
            p,
            max: limits.max_order,
        });
    }
    let start = Instant::now();
    if p == 1 {
        return Ok(SolveResult {
            rn: 0,
            witness: RadioLabelling::new(vec![0]),
            stats: SolveStats {
                nodes: 1,
                elapsed: start.elapsed(),
                completed: true,
            },
        });
    }
    let metrics = TreeMetrics::new(tree)?;
    let mut dist = vec![0u64; p * p];
    for u in 0..p {
        for v in 0..p {
            dist[u * p + v] = metrics.distance(u, v)? as u64;
        }
    }
    let problem = Problem {
        p,
        d: metrics.diameter() as u64,
        step: (metrics.diameter() + metrics.epsilon()) as i64,
        dist,
        level: metrics.levels().iter().map(|&l| l as i64).collect(),
        prune: limits.prune,
        deadline: limits.timeout.map(|t| start + t),
    };

    // Seed the incumbent with the greedy completion of the identity order.
    let seed: Vec<usize> = (0..p).collect();
    let seed_labels = greedy_labels(&problem, &seed);
    let seed_span = seed_labels.iter().copied().max().unwrap_or(0);
    let shared = Shared {
        best: AtomicU64::new(seed_span + 1),
        timed_out: AtomicBool::new(false),
    };

    let reps = orbit_representatives(tree);
    let threads = limits.threads.max(1).min(reps.len());
    let results: Mutex<Vec<(usize, u64, Found)>> = Mutex::new(Vec::new());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= reps.len() {
                    break;
                }
                let mut search = Search::new(&problem, &shared);
                search.place(reps[i]);
                if search.bound() < shared.best.load(Ordering::SeqCst) {
                    search.dfs();
                }
                let entry = (i, search.nodes, search.best_local.take());
                results.lock().expect("results lock").push(entry);
            });
        }
    });

    let mut results = results.into_inner().expect("results lock");
    results.sort_by_key(|r| r.0);
    let nodes = results.iter().map(|r| r.1).sum();
    let mut best: Found = None;
    for (_, _, found) in results {
        if let Some((span, labels)) = found {
            if best.as_ref().is_none_or(|b| span < b.0) {
                best = Some((span, labels));
            }
        }
    }
    let (rn, labels) = best.unwrap_or((seed_span, seed_labels));
    let witness = RadioLabelling::new(labels);
    if verify_labelling(tree, &witness)?.is_some() || witness.span() != rn {
        return Err(Error::Internal("solver witness failed verification".into()));
    }
    Ok(SolveResult {
        rn,
        witness,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
            completed: !shared.timed_out.load(Ordering::SeqCst),
        },
    })
}

fn greedy_labels(problem: &Problem, order: &[usize]) -> Vec<u64> {
    let p = problem.p;
    let mut labels = vec![0u64; p];
    for i in 1..order.len() {
        let v = order[i];
        labels[v] = order[..i]
            .iter()
            .map(|&u| labels[u] + problem.d + 1 - problem.dist[u * p + v])
            .max()
            .unwrap_or(0);
    }
    labels
}

/// Whether the exact radio number of `tree` equals `formula_value`.
pub fn exact_matches_formula(tree: &Tree, formula_value: i64, limits: &Limits) -> Result<bool> {
    Ok(exact_rn(tree, limits)?.rn as i64 == formula_value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(&edges).unwrap()
    }

    /// Minimum greedy span over all orderings, with no pruning at all.
    fn brute_force(tree: &Tree) -> u64 {
        let m = TreeMetrics::new(tree).unwrap();
        let p = tree.order();
        let d = m.diameter() as u64;
        let mut perm: Vec<usize> = (0..p).collect();
        let mut best = u64::MAX;
        loop {
            let mut labels = vec![0u64; p];
            for i in 1..p {
                labels[perm[i]] = (0..i)
                    .map(|j| labels[perm[j]] + d + 1 - m.distance(perm[j], perm[i]).unwrap() as u64)
                    .max()
                    .unwrap();
            }
            best = best.min(labels[perm[p - 1]]);
            // Next permutation in lexicographic order.
            let Some(i) = (0..p - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..p).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best
    }

    #[test]
    fn small_paths() {
        let limits = Limits::default();
        assert_eq!(exact_rn(&path(3), &limits).unwrap().rn, 3);
        assert_eq!(exact_rn(&path(4), &limits).unwrap().rn, 5);
        assert_eq!(exact_rn(&path(5), &limits).unwrap().rn, 10);
        assert_eq!(exact_rn(&path(2), &limits).unwrap().rn, 1);
        assert_eq!(exact_rn(&Tree::singleton(), &limits).unwrap().rn, 0);
    }

    #[test]
    fn matches_unpruned_enumeration() {
        let trees = [
            path(6),
            Tree::from_edges(&[(0, 1), (0, 2), (0, 3)]).unwrap(),
            Tree::from_edges(&[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap(),
            Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6)]).unwrap(),
        ];
        for tree in &trees {
            let expected = brute_force(tree);
            for prune in [Prune::Trivial, Prune::Levels] {
                let limits = Limits {
                    prune,
                    ..Limits::default()
                };
                assert_eq!(exact_rn(tree, &limits).unwrap().rn, expected, "{tree:?}");
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_rn() {
        let tree = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6), (0, 7)]).unwrap();
        let one = exact_rn(&tree, &Limits::default()).unwrap();
        let four = exact_rn(
            &tree,
            &Limits {
                threads: 4,
                ..Limits::default()
            },
        )
        .unwrap();
        assert_eq!(one.rn, four.rn);
        assert!(one.stats.completed && four.stats.completed);
    }

    #[test]
    fn deterministic_single_thread() {
        let tree = path(7);
        let a = exact_rn(&tree, &Limits::default()).unwrap();
        let b = exact_rn(&tree, &Limits::default()).unwrap();
        assert_eq!((a.rn, &a.witness, a.stats.nodes), (b.rn, &b.witness, b.stats.nodes));
    }

    #[test]
    fn limits_are_enforced() {
        let limits = Limits {
            max_order: 4,
            ..Limits::default()
        };
        assert_eq!(
            exact_rn(&path(5), &limits).unwrap_err(),
            Error::OrderTooLarge { p: 5, max: 4 }
        );
        let quick = Limits {
            max_order: 20,
            timeout: Some(Duration::ZERO),
            ..Limits::default()
        };
        let res = exact_rn(&path(14), &quick).unwrap();
        assert!(!res.stats.completed);
        assert_eq!(verify_labelling(&path(14), &res.witness).unwrap(), None);
    }

    #[test]
    fn orbit_representatives_of_a_path() {
        assert_eq!(orbit_representatives(&path(5)), vec![0, 1, 2]);
        assert_eq!(orbit_representatives(&path(4)), vec![0, 1]);
    }

    #[test]
    fn formula_adapter() {
        assert!(exact_matches_formula(&path(5), 10, &Limits::default()).unwrap());
        assert!(!exact_matches_formula(&path(6), 15, &Limits::default()).unwrap());
    }
}
