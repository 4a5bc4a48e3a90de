//! Radio labellings: construction from orders, verification, greedy completion
//! and the jump profile of a labelling.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::metrics::TreeMetrics;
use crate::order::{ASequence, LinearOrder};
use crate::tree::{parse_id, strip_comment, Tree};

/// Vertex labels indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadioLabelling {
    labels: Vec<u64>,
}

impl RadioLabelling {
    pub fn new(labels: Vec<u64>) -> RadioLabelling {
        RadioLabelling { labels }
    }

    /// Builds a labelling from `(vertex, label)` pairs covering `0..p`.
    pub fn from_pairs(p: usize, pairs: &[(usize, u64)]) -> Result<RadioLabelling> {
        let mut labels = vec![None; p];
        for &(v, label) in pairs {
            if v >= p {
                return Err(Error::BadVertex { vertex: v, p });
            }
            labels[v] = Some(label);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or(Error::MissingLabel(v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RadioLabelling { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Largest label minus smallest label.
    pub fn span(&self) -> u64 {
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let min = self.labels.iter().copied().min().unwrap_or(0);
        max - min
    }

    /// Parses the label file format: `v label` per line, `#` starts a comment.
    /// Every vertex of a `p`-vertex tree must be labelled.
    pub fn parse(text: &str, p: usize) -> Result<RadioLabelling> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected `v label`, found {:?}", line),
                });
            }
            let v = parse_id(fields[0], idx + 1)?;
            let label = parse_id(fields[1], idx + 1)? as u64;
            pairs.push((v, label));
        }
        RadioLabelling::from_pairs(p, &pairs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "{v} {label}");
        }
        out
    }
}

/// Labels from the recurrence `f(u_0) = 0`,
/// `f(u_{i+1}) = f(u_i) − (L(u_i) + L(u_{i+1})) + a_i + d + ε`.
///
/// No validity check is made; compose with [`verify_labelling`] when needed.
pub fn label_from_order(
    metrics: &TreeMetrics,
    order: &LinearOrder,
    aseq: &ASequence,
) -> Result<RadioLabelling> {
    order.check_for(metrics)?;
    metrics.require_two_branch()?;
    metrics.require_diameter()?;
    let seq = order.as_slice();
    let p = seq.len();
    if aseq.len() != p - 1 {
        return Err(Error::LengthMismatch {
            expected: p - 1,
            found: aseq.len(),
        });
    }
    let step = (metrics.diameter() + metrics.epsilon()) as i64;
    let mut labels = vec![0u64; p];
    let mut current = 0i64;
    for i in 0..p - 1 {
        current += aseq.as_slice()[i] as i64 + step
            - (metrics.level(seq[i]) + metrics.level(seq[i + 1])) as i64;
        if current < 0 {
            return Err(Error::NegativeLabel {
                position: i + 1,
                value: current,
            });
        }
        labels[seq[i + 1]] = current as u64;
    }
    Ok(RadioLabelling { labels })
}

/// Checks the radio condition on all pairs; returns the first violating pair.
pub fn verify_labelling(tree: &Tree, labelling: &RadioLabelling) -> Result<Option<(usize, usize)>> {
    let p = tree.order();
    if labelling.len() < p {
        return Err(Error::MissingLabel(labelling.len()));
    }
    if labelling.len() > p {
        return Err(Error::BadVertex {
            vertex: labelling.len() - 1,
            p,
        });
    }
    let dist = (0..p).map(|u| tree.distances_from(u)).collect::<Vec<_>>();
    let d = dist.iter().flatten().copied().max().unwrap_or(0) as u64;
    for u in 0..p {
        for v in u + 1..p {
            let gap = labelling.labels[u].abs_diff(labelling.labels[v]);
            if gap + (dist[u][v] as u64) < d + 1 {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Pointwise-minimal labelling inducing `order`: each vertex gets the smallest
/// label compatible with every vertex placed before it.
pub fn greedy_label_from_order(metrics: &TreeMetrics, order: &LinearOrder) -> Result<RadioLabelling> {
    order.check_for(metrics)?;
    let seq = order.as_slice();
    let d = metrics.diameter() as u64;
    let mut labels = vec![0u64; seq.len()];
    for i in 1..seq.len() {
        let v = seq[i];
        labels[v] = seq[..i]
            .iter()
            .map(|&u| labels[u] + d + 1 - metrics.dist(u, v) as u64)
            .max()
            .unwrap_or(0);
    }
    Ok(RadioLabelling { labels })
}

/// Vertices sorted by ascending label.
pub fn order_of(labelling: &RadioLabelling) -> Result<LinearOrder> {
    let mut seq: Vec<usize> = (0..labelling.len()).collect();
    seq.sort_by_key(|&v| labelling.labels[v]);
    for pair in seq.windows(2) {
        if labelling.labels[pair[0]] == labelling.labels[pair[1]] {
            return Err(Error::DuplicateLabel {
                label: labelling.labels[pair[0]],
                u: pair[0].min(pair[1]),
                v: pair[0].max(pair[1]),
            });
        }
    }
    LinearOrder::new(seq)
}

/// Jump profile of a labelling along its label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpProfile {
    pub order: LinearOrder,
    /// `gap + d(u_i,u_{i+1}) − (d+1)` for each consecutive pair.
    pub steps: Vec<i64>,
    /// Sum of the steps.
    pub total: i64,
    /// Sum over consecutive pairs of `step + 2φ − δ`.
    pub sigma: i64,
    /// `(p−1)(d+1) − 2L(T) + L(u_0) + L(u_{p−1}) + σ`.
    pub decomposed_span: i64,
    pub span: u64,
}

impl JumpProfile {
    /// Whether the level decomposition reproduces the span.
    pub fn decomposition_holds(&self) -> bool {
        self.decomposed_span == self.span as i64
    }
}

pub fn jf_profile(metrics: &TreeMetrics, labelling: &RadioLabelling) -> Result<JumpProfile> {
    if labelling.len() < metrics.order() {
        return Err(Error::MissingLabel(labelling.len()));
    }
    let order = order_of(labelling)?;
    order.check_for(metrics)?;
    let seq = order.as_slice();
    let d = metrics.diameter() as i64;
    let mut steps = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut sigma = 0i64;
    for pair in seq.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        let gap = labelling.label(v) as i64 - labelling.label(u) as i64;
        let step = gap + metrics.dist(u, v) as i64 - (d + 1);
        steps.push(step);
        sigma += step + 2 * metrics.phi_unchecked(u, v) as i64 - metrics.delta_unchecked(u, v) as i64;
    }
    let total = steps.iter().sum();
    let p = seq.len() as i64;
    let decomposed_span = (p - 1) * (d + 1) - 2 * metrics.total_level() as i64
        + metrics.level(order.first()) as i64
        + metrics.level(order.last()) as i64
        + sigma;
    Ok(JumpProfile {
        span: labelling.span(),
        order,
        steps,
        total,
        sigma,
        decomposed_span,
    })
}
