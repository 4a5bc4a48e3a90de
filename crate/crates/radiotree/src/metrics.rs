//! Per-tree structural metrics: weight centers, levels, branches, remote vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Largest order for which the full distance table is stored.
pub const DISTANCE_TABLE_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Distances {
    Table(Vec<u16>),
    OnDemand,
}

/// Derived record of a tree: everything the bound formulas consume.
///
/// Levels are hop counts to the nearest weight center. Each vertex also keeps
/// its parent on the way to that center, which yields the ancestry quantity
/// [`TreeMetrics::phi`] and the two-center indicator [`TreeMetrics::delta`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMetrics {
    tree: Tree,
    diameter: usize,
    weight_centers: Vec<usize>,
    vertex_weight: Vec<usize>,
    level: Vec<usize>,
    total_level: usize,
    toward_center: Vec<usize>,
    root: Vec<usize>,
    branch: Vec<Option<usize>>,
    branch_sizes: Vec<usize>,
    remote: Vec<bool>,
    remote_count: usize,
    xi: usize,
    distances: Distances,
}

impl TreeMetrics {
    pub fn new(tree: &Tree) -> Result<TreeMetrics> {
        let p = tree.order();
        let from_zero = tree.distances_from(0);
        let far = argmax(&from_zero);
        let from_far = tree.distances_from(far);
        let diameter = from_far.iter().copied().max().unwrap_or(0);

        let vertex_weight = vertex_weights(tree);
        let best = vertex_weight.iter().copied().min().unwrap_or(0);
        let weight_centers: Vec<usize> = (0..p).filter(|&v| vertex_weight[v] == best).collect();
        if weight_centers.len() > 2 {
            return Err(Error::Internal(format!(
                "{} weight centers",
                weight_centers.len()
            )));
        }
        if weight_centers.len() == 2
            && !tree.neighbors(weight_centers[0]).contains(&weight_centers[1])
        {
            return Err(Error::Internal("weight centers are not adjacent".into()));
        }

        let mut level = vec![usize::MAX; p];
        let mut toward_center = vec![usize::MAX; p];
        let mut root = vec![usize::MAX; p];
        let mut queue = VecDeque::new();
        for &c in &weight_centers {
            level[c] = 0;
            toward_center[c] = c;
            root[c] = c;
            queue.push_back(c);
        }
        while let Some(x) = queue.pop_front() {
            for &y in tree.neighbors(x) {
                if level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    toward_center[y] = x;
                    root[y] = root[x];
                    queue.push_back(y);
                }
            }
        }
        let total_level = level.iter().sum();

        let (branch, branch_sizes) = branches(tree, &weight_centers);

        let threshold = if weight_centers.len() == 1 {
            diameter.div_ceil(2)
        } else {
            diameter / 2
        };
        let remote: Vec<bool> = level.iter().map(|&l| l >= threshold).collect();
        let remote_count = remote.iter().filter(|&&r| r).count();
        let xi = if weight_centers.len() == 1 {
            remote_count / 2
        } else {
            remote_count.saturating_sub(2)
        };

        let distances = if p <= DISTANCE_TABLE_LIMIT {
            let mut table = vec![0u16; p * p];
            for u in 0..p {
                for (v, d) in tree.distances_from(u).into_iter().enumerate() {
                    table[u * p + v] = d as u16;
                }
            }
            Distances::Table(table)
        } else {
            Distances::OnDemand
        };

        Ok(TreeMetrics {
            tree: tree.clone(),
            diameter,
            weight_centers,
            vertex_weight,
            level,
            total_level,
            toward_center,
            root,
            branch,
            branch_sizes,
            remote,
            remote_count,
            xi,
            distances,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// The one or two weight centers, ascending.
    pub fn weight_centers(&self) -> &[usize] {
        &self.weight_centers
    }

    pub fn is_weight_center(&self, v: usize) -> bool {
        self.weight_centers.contains(&v)
    }

    /// `2 − |W|`.
    pub fn epsilon(&self) -> usize {
        2 - self.weight_centers.len()
    }

    /// Sum of distances from `v` to all vertices.
    pub fn vertex_weight(&self, v: usize) -> usize {
        self.vertex_weight[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn total_level(&self) -> usize {
        self.total_level
    }

    /// Branch index of `v`, or `None` for a weight center.
    pub fn branch(&self, v: usize) -> Option<usize> {
        self.branch[v]
    }

    /// Sizes of the components of the tree minus its weight centers.
    pub fn branch_sizes(&self) -> &[usize] {
        &self.branch_sizes
    }

    pub fn branch_count(&self) -> usize {
        self.branch_sizes.len()
    }

    pub fn two_branch(&self) -> bool {
        self.branch_sizes.len() == 2
    }

    pub fn is_remote(&self, v: usize) -> bool {
        self.remote[v]
    }

    /// Remote vertices, ascending.
    pub fn remote_set(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.remote[v]).collect()
    }

    pub fn remote_count(&self) -> usize {
        self.remote_count
    }

    pub fn xi(&self) -> usize {
        self.xi
    }

    /// Weight center nearest to `v`.
    pub fn nearest_center(&self, v: usize) -> usize {
        self.root[v]
    }

    /// Neighbour of `v` one step closer to its nearest weight center (`v` itself for centers).
    pub fn toward_center(&self, v: usize) -> usize {
        self.toward_center[v]
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        self.tree.check_vertex(v)
    }

    /// Distance without bounds checks, for vertices known to be valid.
    pub(crate) fn dist(&self, u: usize, v: usize) -> usize {
        match &self.distances {
            Distances::Table(table) => table[u * self.order() + v] as usize,
            Distances::OnDemand => self.dist_by_climbing(u, v),
        }
    }

    fn dist_by_climbing(&self, mut u: usize, mut v: usize) -> usize {
        if self.root[u] != self.root[v] {
            return self.level[u] + self.level[v] + 1;
        }
        let mut hops = 0;
        while self.level[u] > self.level[v] {
            u = self.toward_center[u];
            hops += 1;
        }
        while self.level[v] > self.level[u] {
            v = self.toward_center[v];
            hops += 1;
        }
        while u != v {
            u = self.toward_center[u];
            v = self.toward_center[v];
            hops += 2;
        }
        hops
    }

    /// Hop distance between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.dist(u, v))
    }

    /// Largest level over the common part of the two center-to-vertex paths.
    ///
    /// Each vertex's path starts at its own nearest weight center, so vertices
    /// hanging off different centers share nothing and get 0.
    pub fn phi(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.phi_unchecked(u, v))
    }

    pub(crate) fn phi_unchecked(&self, mut u: usize, mut v: usize) -> usize {
        if self.root[u] != self.root[v] {
            return 0;
        }
        while self.level[u] > self.level[v] {
            u = self.toward_center[u];
        }
        while self.level[v] > self.level[u] {
            v = self.toward_center[v];
        }
        while u != v {
            u = self.toward_center[u];
            v = self.toward_center[v];
        }
        self.level[u]
    }

    /// 1 when there are two weight centers and the `u`–`v` path contains both.
    pub fn delta(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.delta_unchecked(u, v))
    }

    pub(crate) fn delta_unchecked(&self, u: usize, v: usize) -> usize {
        usize::from(self.weight_centers.len() == 2 && self.root[u] != self.root[v])
    }

    /// `L(u) + L(v) − 2φ(u,v) + δ(u,v)`, which equals the distance whenever the diameter is at least 2.
    pub fn distance_by_levels(&self, u: usize, v: usize) -> Result<usize> {
        let phi = self.phi(u, v)?;
        Ok(self.level[u] + self.level[v] + self.delta_unchecked(u, v) - 2 * phi)
    }

    pub(crate) fn require_diameter(&self) -> Result<()> {
        if self.diameter < 2 {
            Err(Error::DiameterTooSmall(self.diameter))
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_two_branch(&self) -> Result<()> {
        if self.two_branch() {
            Ok(())
        } else {
            Err(Error::NotTwoBranch(self.branch_count()))
        }
    }
}

fn argmax(values: &[usize]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    best
}

/// All vertex weights in linear time by rerooting from vertex 0.
fn vertex_weights(tree: &Tree) -> Vec<usize> {
    let p = tree.order();
    let mut parent = vec![usize::MAX; p];
    let mut order = Vec::with_capacity(p);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in tree.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut size = vec![1usize; p];
    for &x in order.iter().rev().filter(|&&x| x != 0) {
        size[parent[x]] += size[x];
    }
    let mut weight = vec![0usize; p];
    weight[0] = tree.distances_from(0).iter().sum();
    for &x in order.iter().filter(|&&x| x != 0) {
        weight[x] = weight[parent[x]] + p - 2 * size[x];
    }
    weight
}

fn branches(tree: &Tree, centers: &[usize]) -> (Vec<Option<usize>>, Vec<usize>) {
    let p = tree.order();
    let mut branch = vec![None; p];
    let mut sizes = Vec::new();
    for start in 0..p {
        if centers.contains(&start) || branch[start].is_some() {
            continue;
        }
        let id = sizes.len();
        let mut count = 0;
        branch[start] = Some(id);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            count += 1;
            for &y in tree.neighbors(x) {
                if !centers.contains(&y) && branch[y].is_none() {
                    branch[y] = Some(id);
                    stack.push(y);
                }
            }
        }
        sizes.push(count);
    }
    (branch, sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> TreeMetrics {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        TreeMetrics::new(&Tree::from_edges(&edges).unwrap()).unwrap()
    }

    #[test]
    fn five_path() {
        let m = path(5);
        assert_eq!(m.weight_centers(), &[2]);
        assert_eq!(m.epsilon(), 1);
        assert_eq!(m.levels(), &[2, 1, 0, 1, 2]);
        assert_eq!(m.total_level(), 6);
        assert_eq!(m.diameter(), 4);
        assert_eq!(m.remote_set(), vec![0, 4]);
        assert_eq!(m.xi(), 1);
        assert!(m.two_branch());
    }

    #[test]
    fn four_path() {
        let m = path(4);
        assert_eq!(m.weight_centers(), &[1, 2]);
        assert_eq!(m.epsilon(), 0);
        assert_eq!(m.total_level(), 2);
        assert_eq!(m.diameter(), 3);
        assert_eq!(m.remote_set(), vec![0, 3]);
        assert_eq!(m.xi(), 0);
    }

    #[test]
    fn star_has_three_branches() {
        let m = TreeMetrics::new(&Tree::from_edges(&[(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap();
        assert_eq!(m.weight_centers(), &[0]);
        assert_eq!(m.branch_count(), 3);
        assert!(!m.two_branch());
    }

    #[test]
    fn tiny_trees_have_metrics() {
        let one = TreeMetrics::new(&Tree::singleton()).unwrap();
        assert_eq!(one.diameter(), 0);
        assert_eq!(one.weight_centers(), &[0]);
        assert!(!one.two_branch());
        let two = path(2);
        assert_eq!(two.weight_centers(), &[0, 1]);
        assert_eq!(two.diameter(), 1);
        assert_eq!(two.branch_count(), 0);
        assert_eq!(two.distance_by_levels(0, 1), Ok(1));
    }

    #[test]
    fn phi_and_delta() {
        let p5 = path(5);
        assert_eq!(p5.phi(0, 1).unwrap(), 1);
        assert_eq!(p5.phi(0, 4).unwrap(), 0);
        assert_eq!(p5.delta(0, 4).unwrap(), 0);
        let p4 = path(4);
        assert_eq!(p4.phi(0, 3).unwrap(), 0);
        assert_eq!(p4.delta(0, 3).unwrap(), 1);
        assert_eq!(p4.delta(0, 1).unwrap(), 0);
        assert!(matches!(p4.phi(0, 7), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn level_identity_on_paths() {
        let p5 = path(5);
        assert_eq!(p5.distance_by_levels(0, 1).unwrap(), 1);
        assert_eq!(p5.distance_by_levels(2, 2).unwrap(), 0);
        let p4 = path(4);
        assert_eq!(p4.distance_by_levels(0, 3).unwrap(), 3);
        for m in [path(6), path(7)] {
            for u in 0..m.order() {
                for v in 0..m.order() {
                    assert_eq!(m.distance_by_levels(u, v).unwrap(), m.distance(u, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn vertex_weights_match_direct_sums() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let m = TreeMetrics::new(&t).unwrap();
        for v in 0..t.order() {
            assert_eq!(m.vertex_weight(v), t.distances_from(v).iter().sum::<usize>());
        }
    }

    #[test]
    fn climbing_distance_matches_table() {
        let t = Tree::from_edges(&[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let m = TreeMetrics::new(&t).unwrap();
        for u in 0..t.order() {
            for v in 0..t.order() {
                assert_eq!(m.dist_by_climbing(u, v), m.dist(u, v));
            }
        }
    }
}
