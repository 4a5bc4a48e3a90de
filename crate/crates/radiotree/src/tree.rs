//! Unrooted trees on vertices `0..p`, their text format and DOT export.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An immutable unrooted tree with sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list over the ids `0..=max_id`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Tree> {
        if edges.is_empty() {
            return Err(Error::NotATree("empty edge list".into()));
        }
        let p = 1 + edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        let mut adj = vec![Vec::new(); p];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::BadEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if adj[u].contains(&v) {
                return Err(Error::BadEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        if let Some(unused) = adj.iter().position(Vec::is_empty) {
            return Err(Error::SparseIds(unused));
        }
        if edges.len() != p - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                edges.len(),
                p
            )));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = Tree { adj };
        let reached = tree.bfs(0).iter().filter(|d| d.is_some()).count();
        if reached != p {
            return Err(Error::NotATree(format!(
                "disconnected: {} of {} vertices reachable from 0",
                reached, p
            )));
        }
        Ok(tree)
    }

    /// The one-vertex tree.
    pub fn singleton() -> Tree {
        Tree {
            adj: vec![Vec::new()],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::BadVertex {
                vertex: v,
                p: self.order(),
            })
        }
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Hop distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        self.bfs(source).into_iter().map(|d| d.unwrap_or(0)).collect()
    }

    /// Breadth-first hop distance between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Parses the text format: one `u v` edge per line, `#` starts a comment.
    pub fn parse(text: &str) -> Result<Tree> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected `u v`, found {:?}", line),
                });
            }
            let u = parse_id(fields[0], idx + 1)?;
            let v = parse_id(fields[1], idx + 1)?;
            edges.push((u, v));
        }
        Tree::from_edges(&edges)
    }

    /// Renders the text format, one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Renders a Graphviz description; labels, when given, annotate the vertices.
    pub fn to_dot(&self, labels: Option<&[u64]>) -> String {
        let mut out = String::from("graph tree {\n");
        for v in 0..self.order() {
            match labels.and_then(|l| l.get(v)) {
                Some(label) => {
                    let _ = writeln!(out, "  {v} [label=\"{v}\", xlabel=\"{label}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Canonical string of the tree rooted at `root` (AHU encoding).
    ///
    /// Two rooted trees are isomorphic exactly when their encodings are equal.
    pub fn rooted_canonical_form(&self, root: usize) -> String {
        let p = self.order();
        let mut parent = vec![usize::MAX; p];
        let mut order = Vec::with_capacity(p);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut code = vec![String::new(); p];
        for &x in order.iter().rev() {
            let mut children: Vec<&str> = self.adj[x]
                .iter()
                .filter(|&&y| y != root && parent[y] == x)
                .map(|&y| code[y].as_str())
                .collect();
            children.sort_unstable();
            code[x] = format!("({})", children.concat());
        }
        std::mem::take(&mut code[root])
    }

    /// Canonical string of the unrooted tree; equal strings mean isomorphic trees.
    pub fn canonical_form(&self) -> String {
        let centers = self.centers();
        centers
            .iter()
            .map(|&c| self.rooted_canonical_form(c))
            .min()
            .unwrap_or_default()
    }

    /// Graph centers (minimum eccentricity), one or two vertices.
    pub fn centers(&self) -> Vec<usize> {
        let p = self.order();
        if p <= 2 {
            return (0..p).collect();
        }
        let mut degree: Vec<usize> = (0..p).map(|v| self.degree(v)).collect();
        let mut layer: Vec<usize> = (0..p).filter(|&v| degree[v] == 1).collect();
        let mut remaining = p;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &y in &self.adj[leaf] {
                    degree[y] -= 1;
                    if degree[y] == 1 {
                        next.push(y);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

pub(crate) fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("expected an unsigned integer, found {:?}", token),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_small_path_and_star() {
        let path = Tree::from_edges(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.order(), 3);
        assert_eq!(path.neighbors(1), &[0, 2]);
        let star = Tree::from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(star.degree(1), 3);
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert!(matches!(
            Tree::from_edges(&[(0, 1), (0, 1)]),
            Err(Error::BadEdge { .. })
        ));
        assert!(matches!(
            Tree::from_edges(&[(2, 2)]),
            Err(Error::BadEdge { .. })
        ));
        assert_eq!(Tree::from_edges(&[(0, 2)]), Err(Error::SparseIds(1)));
        assert!(matches!(
            Tree::from_edges(&[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::from_edges(&[(0, 1), (2, 3), (3, 4), (4, 2)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(Tree::from_edges(&[]), Err(Error::NotATree(_))));
    }

    #[test]
    fn neighbour_lists_are_sorted() {
        let t = Tree::from_edges(&[(3, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(t.neighbors(0), &[1, 2, 3]);
        assert_eq!(t.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn distances() {
        let p5 = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.distance(0, 4).unwrap(), 4);
        assert_eq!(p5.distance(3, 3).unwrap(), 0);
        assert!(matches!(p5.distance(0, 9), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn text_round_trip_with_comments() {
        let text = "# a path\n0 1\n\n1 2 # tail\n";
        let t = Tree::parse(text).unwrap();
        assert_eq!(t.to_text(), "0 1\n1 2\n");
        assert_eq!(Tree::parse(&t.to_text()).unwrap(), t);
        assert!(matches!(Tree::parse("0 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Tree::parse("0 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_forms_detect_isomorphism() {
        let a = Tree::from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap();
        let b = Tree::from_edges(&[(3, 0), (0, 1), (0, 2)]).unwrap();
        let path = Tree::from_edges(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), path.canonical_form());
        assert_eq!(path.rooted_canonical_form(0), path.rooted_canonical_form(3));
        assert_ne!(path.rooted_canonical_form(0), path.rooted_canonical_form(1));
    }

    #[test]
    fn centers_of_paths() {
        let p5 = Tree::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.centers(), vec![2]);
        let p4 = Tree::from_edges(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.centers(), vec![1, 2]);
    }

    #[test]
    fn dot_export_mentions_labels() {
        let t = Tree::from_edges(&[(0, 1)]).unwrap();
        let dot = t.to_dot(Some(&[0, 1]));
        assert!(dot.contains("0 -- 1"));
        assert!(dot.contains("xlabel=\"1\""));
    }
}
