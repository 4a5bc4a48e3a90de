//! Lower bounds on the radio number and the tightness certification pipeline.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labelling::{label_from_order, verify_labelling, RadioLabelling};
use crate::metrics::TreeMetrics;
use crate::order::{a_sequence, check_condition_a, check_condition_b, endpoint_level_sum, LinearOrder};

/// `(p−1)(d+ε) − 2L(T) + ε`, valid for every tree of diameter at least 2.
pub fn lower_bound_basic(metrics: &TreeMetrics) -> Result<i64> {
    metrics.require_diameter()?;
    let p = metrics.order() as i64;
    let d = metrics.diameter() as i64;
    let eps = metrics.epsilon() as i64;
    Ok((p - 1) * (d + eps) - 2 * metrics.total_level() as i64 + eps)
}

/// The basic bound plus `ξ`, for two-branch trees.
pub fn lower_bound_improved(metrics: &TreeMetrics) -> Result<i64> {
    metrics.require_two_branch()?;
    Ok(lower_bound_basic(metrics)? + metrics.xi() as i64)
}

/// Whether `|S| > |W|`, in which case the basic bound cannot be attained.
pub fn strict_gap_predicate(metrics: &TreeMetrics) -> Result<bool> {
    metrics.require_two_branch()?;
    Ok(metrics.remote_count() > metrics.weight_centers().len())
}

/// Pipeline stage at which certification stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    ConditionA,
    ASequence,
    CombinedSum,
    ConditionB,
    Labelling,
    Verification,
    Span,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::ConditionA => "condition-a",
            Stage::ASequence => "a-sequence",
            Stage::CombinedSum => "combined-sum",
            Stage::ConditionB => "condition-b",
            Stage::Labelling => "labelling",
            Stage::Verification => "verification",
            Stage::Span => "span",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificationFailure {
    pub stage: Stage,
    pub detail: String,
}

impl fmt::Display for CertificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.detail)
    }
}

/// Result of running an order through the certification pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    /// A verified labelling whose span equals the improved bound.
    Certified(RadioLabelling),
    Failed(CertificationFailure),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }

    pub fn labelling(&self) -> Option<&RadioLabelling> {
        match self {
            Certification::Certified(f) => Some(f),
            Certification::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&CertificationFailure> {
        match self {
            Certification::Certified(_) => None,
            Certification::Failed(e) => Some(e),
        }
    }
}

fn failed(stage: Stage, detail: impl Into<String>) -> Result<Certification> {
    Ok(Certification::Failed(CertificationFailure {
        stage,
        detail: detail.into(),
    }))
}

/// Checks that `order` attains the improved bound and returns the resulting
/// labelling as an optimality certificate.
///
/// Stages run in order: condition (a), the a-sequence, the combined identity
/// `L(u_0) + L(u_{p−1}) + Σa_t = ε + ξ`, the pairwise distance condition, the
/// labelling recurrence, an independent radio-condition check, and finally the
/// span comparison.
pub fn certify_tightness(metrics: &TreeMetrics, order: &LinearOrder) -> Result<Certification> {
    order.check_for(metrics)?;
    metrics.require_two_branch()?;
    metrics.require_diameter()?;

    let cond_a = check_condition_a(metrics, order)?;
    if !cond_a.holds {
        return failed(Stage::ConditionA, cond_a.detail);
    }
    let aseq = match a_sequence(metrics, order) {
        Ok(a) => a,
        Err(e @ Error::InfeasibleASequence { .. }) => return failed(Stage::ASequence, e.to_string()),
        Err(e) => return Err(e),
    };
    let ends = endpoint_level_sum(metrics, order);
    let target = metrics.epsilon() + metrics.xi();
    if ends + aseq.sum() != target {
        return failed(
            Stage::CombinedSum,
            format!(
                "endpoint sum {} + a-sum {} != {}",
                ends,
                aseq.sum(),
                target
            ),
        );
    }
    if let Some((i, j)) = check_condition_b(metrics, order, &aseq)? {
        return failed(Stage::ConditionB, format!("violated at positions ({i},{j})"));
    }
    let labelling = match label_from_order(metrics, order, &aseq) {
        Ok(f) => f,
        Err(e @ Error::NegativeLabel { .. }) => return failed(Stage::Labelling, e.to_string()),
        Err(e) => return Err(e),
    };
    if let Some((u, v)) = verify_labelling(metrics.tree(), &labelling)? {
        return failed(Stage::Verification, format!("radio condition fails on ({u},{v})"));
    }
    let improved = lower_bound_improved(metrics)?;
    if labelling.span() as i64 != improved {
        return failed(
            Stage::Span,
            format!("span {} != improved bound {}", labelling.span(), improved),
        );
    }
    Ok(Certification::Certified(labelling))
}

/// Which case of a comparison bound produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonLine {
    /// Even diameter, both sides reach half the diameter with different counts.
    EvenUnequal,
    /// Even diameter, both sides reach half the diameter with equal counts.
    EvenEqual,
    /// Even diameter, one side stops short of half the diameter.
    EvenOneSided,
    /// Odd diameter, height exactly one past half the diameter.
    OddShallow,
    /// Odd diameter, taller than that.
    OddDeep,
}

/// A comparison lower bound evaluated at a degree-2 weight center `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComparisonBound {
    pub x: usize,
    pub value: i64,
    pub line: ComparisonLine,
}

/// Vertex counts by distance from `x` on each side of `x`, plus the eccentricity of `x`.
struct Sides {
    counts: [Vec<i64>; 2],
    height: usize,
}

fn sides(metrics: &TreeMetrics, x: usize) -> Result<Sides> {
    metrics.check_vertex(x)?;
    let tree = metrics.tree();
    if !metrics.is_weight_center(x) {
        return Err(Error::NotOmegaTree(format!("{x} is not a weight center")));
    }
    if tree.degree(x) != 2 {
        return Err(Error::NotOmegaTree(format!(
            "weight center {x} has degree {}",
            tree.degree(x)
        )));
    }
    let dist = tree.distances_from(x);
    let height = dist.iter().copied().max().unwrap_or(0);
    let mut counts = [vec![0i64; height + 1], vec![0i64; height + 1]];
    for (side, &start) in tree.neighbors(x).iter().enumerate() {
        let mut stack = vec![(start, x)];
        while let Some((v, parent)) = stack.pop() {
            counts[side][dist[v]] += 1;
            stack.extend(tree.neighbors(v).iter().filter(|&&y| y != parent).map(|&y| (y, v)));
        }
    }
    Ok(Sides { counts, height })
}

/// Comparison bound for even diameter `2D` at a degree-2 weight center `x`.
pub fn liu_bound_even(metrics: &TreeMetrics, x: usize) -> Result<ComparisonBound> {
    let d = metrics.diameter();
    if d % 2 != 0 || d < 2 {
        return Err(Error::NotOmegaTree(format!("diameter {d} is not even")));
    }
    let half = d / 2;
    let s = sides(metrics, x)?;
    let p = metrics.order() as i64;
    let base = (p - 1) * (d as i64 + 1) - 2 * metrics.vertex_weight(x) as i64;
    let at = |side: usize, i: usize| s.counts[side].get(i).copied().unwrap_or(0);
    let (l, r) = (at(0, half), at(1, half));
    if l > 0 && r > 0 {
        return Ok(if l != r {
            ComparisonBound {
                x,
                value: base + l.max(r),
                line: ComparisonLine::EvenUnequal,
            }
        } else {
            ComparisonBound {
                x,
                value: base + 1 + r,
                line: ComparisonLine::EvenEqual,
            }
        });
    }
    let full = if l == 0 { 1 } else { 0 };
    if at(full, half) == 0 {
        return Err(Error::NotOmegaTree(format!(
            "neither side of {x} reaches depth {half}"
        )));
    }
    let weighted: i64 = (0..=s.height.saturating_sub(half))
        .map(|i| (2 * i as i64 + 1) * at(full, half + i))
        .sum();
    let extra = (weighted - 1).div_euclid(2);
    Ok(ComparisonBound {
        x,
        value: base + extra.max(1),
        line: ComparisonLine::EvenOneSided,
    })
}

/// Comparison bound for odd diameter `2D+1`, `D ≥ 2`, at a degree-2 weight center `x`.
pub fn liu_bound_odd(metrics: &TreeMetrics, x: usize) -> Result<ComparisonBound> {
    let d = metrics.diameter();
    if d % 2 != 1 {
        return Err(Error::NotOmegaTree(format!("diameter {d} is not odd")));
    }
    let half = d / 2;
    if half < 2 {
        return Err(Error::DHalfTooSmall(half));
    }
    let s = sides(metrics, x)?;
    let at = |side: usize, i: usize| s.counts[side].get(i).copied().unwrap_or(0);
    let deep = match (at(0, half + 1) > 0, at(1, half + 1) > 0) {
        (true, false) => 0,
        (false, true) => 1,
        _ => {
            return Err(Error::NotOmegaTree(format!(
                "expected exactly one side of {x} past depth {half}"
            )))
        }
    };
    let p = metrics.order() as i64;
    let base = (p - 1) * (d as i64 + 1) - 2 * metrics.vertex_weight(x) as i64;
    if s.height == half + 1 {
        return Ok(ComparisonBound {
            x,
            value: base + (2 * at(deep, half + 1) - 5).max(1),
            line: ComparisonLine::OddShallow,
        });
    }
    let weighted: i64 = (1..=s.height - half)
        .map(|i| (i as i64 + 1) * at(deep, half + i))
        .sum();
    Ok(ComparisonBound {
        x,
        value: base + weighted - 2,
        line: ComparisonLine::OddDeep,
    })
}

/// Smallest-id weight center of degree 2, if any.
pub fn default_comparison_center(metrics: &TreeMetrics) -> Option<usize> {
    metrics
        .weight_centers()
        .iter()
        .copied()
        .find(|&w| metrics.tree().degree(w) == 2)
}

/// The comparison bound matching the diameter's parity.
pub fn comparison_bound(metrics: &TreeMetrics, x: usize) -> Result<ComparisonBound> {
    if metrics.diameter() % 2 == 0 {
        liu_bound_even(metrics, x)
    } else {
        liu_bound_odd(metrics, x)
    }
}

/// All bound values for one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub p: usize,
    pub d: usize,
    pub epsilon: usize,
    pub total_level: usize,
    pub remote_count: usize,
    pub xi: usize,
    pub basic: i64,
    /// Present for two-branch trees only.
    pub improved: Option<i64>,
    pub strict_gap: Option<bool>,
    pub comparison: Option<ComparisonBound>,
}

impl BoundReport {
    pub fn new(metrics: &TreeMetrics) -> Result<BoundReport> {
        let basic = lower_bound_basic(metrics)?;
        let (improved, strict_gap) = if metrics.two_branch() {
            (
                Some(lower_bound_improved(metrics)?),
                Some(strict_gap_predicate(metrics)?),
            )
        } else {
            (None, None)
        };
        Ok(BoundReport {
            p: metrics.order(),
            d: metrics.diameter(),
            epsilon: metrics.epsilon(),
            total_level: metrics.total_level(),
            remote_count: metrics.remote_count(),
            xi: metrics.xi(),
            basic,
            improved,
            strict_gap,
            comparison: None,
        })
    }

    pub fn with_comparison(mut self, comparison: ComparisonBound) -> BoundReport {
        self.comparison = Some(comparison);
        self
    }
}
